#include "arrlab/graphs.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace arrlab::graphs {

Graph::Graph(std::size_t vcount, std::vector<std::pair<std::size_t, std::size_t>> edges,
             std::vector<std::string> labels)
    : vcount_(vcount), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != vcount_)
        throw ValueError("label count must match vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw ValueError("loops are not allowed");
        if (u >= vcount_ || v >= vcount_) throw ValueError("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(vcount_, std::vector<bool>(vcount_, false));
    for (const auto& [u, v] : edges_) adj_[u][v] = adj_[v][u] = true;
}

bool Graph::adjacent(std::size_t u, std::size_t v) const { return adj_[u][v]; }

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < vcount_; ++u)
        if (adj_[v][u]) out.push_back(u);
    return out;
}

std::size_t Graph::valency(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t u = 0; u < vcount_; ++u)
        if (adj_[v][u]) ++d;
    return d;
}

Graph dual_graph(const projgeom::Arrangement& a) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (projgeom::line_meet(a.line(i), a.line(j))) edges.emplace_back(i, j);
    return Graph(a.size(), std::move(edges), a.labels());
}

ValencyStats valency_stats(const Graph& g) {
    if (g.vcount() == 0) throw ValueError("valency_stats requires >= 1 vertex");
    std::size_t lo = g.valency(0), hi = lo;
    for (std::size_t v = 1; v < g.vcount(); ++v) {
        std::size_t d = g.valency(v);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return {lo, hi, lo == hi};
}

namespace {

// Unit-capacity max flow on the node-split digraph, from out(s) to in(t).
// Nodes: in(v) = 2v, out(v) = 2v+1.
std::size_t st_vertex_flow(const Graph& g, std::size_t s, std::size_t t) {
    const std::size_t N = 2 * g.vcount();
    struct Arc {
        std::size_t to;
        int cap;
        std::size_t rev;
    };
    std::vector<std::vector<Arc>> arcs(N);
    auto add_arc = [&](std::size_t a, std::size_t b, int cap) {
        arcs[a].push_back({b, cap, arcs[b].size()});
        arcs[b].push_back({a, 0, arcs[a].size() - 1});
    };
    const int INF = 1 << 28;
    for (std::size_t v = 0; v < g.vcount(); ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (const auto& [u, v] : g.edges()) {
        add_arc(2 * u + 1, 2 * v, INF);
        add_arc(2 * v + 1, 2 * u, INF);
    }
    const std::size_t source = 2 * s + 1, sink = 2 * t;
    std::size_t flow = 0;
    for (;;) {
        // BFS augmenting path
        std::vector<std::pair<std::size_t, std::size_t>> parent(N, {N, N});  // node, arc idx
        std::deque<std::size_t> queue{source};
        std::vector<bool> seen(N, false);
        seen[source] = true;
        while (!queue.empty() && !seen[sink]) {
            std::size_t a = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < arcs[a].size(); ++i) {
                const Arc& e = arcs[a][i];
                if (e.cap <= 0 || seen[e.to]) continue;
                seen[e.to] = true;
                parent[e.to] = {a, i};
                queue.push_back(e.to);
            }
        }
        if (!seen[sink]) break;
        for (std::size_t n = sink; n != source;) {
            auto [pn, pi] = parent[n];
            arcs[pn][pi].cap -= 1;
            arcs[n][arcs[pn][pi].rev].cap += 1;
            n = pn;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

std::size_t vertex_connectivity(const Graph& g) {
    const std::size_t n = g.vcount();
    if (n < 2) throw ValueError("vertex_connectivity requires >= 2 vertices");
    std::size_t best = n - 1;
    bool complete = true;
    for (std::size_t s = 0; s < n && best > 0; ++s)
        for (std::size_t t = s + 1; t < n && best > 0; ++t) {
            if (g.adjacent(s, t)) continue;
            complete = false;
            best = std::min(best, st_vertex_flow(g, s, t));
        }
    return complete ? n - 1 : best;
}

namespace {

std::vector<std::size_t> bfs_dist(const Graph& g, std::size_t src) {
    const std::size_t INF = static_cast<std::size_t>(-1);
    std::vector<std::size_t> dist(g.vcount(), INF);
    std::deque<std::size_t> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        std::size_t v = q.front();
        q.pop_front();
        for (std::size_t u = 0; u < g.vcount(); ++u)
            if (g.adjacent(v, u) && dist[u] == INF) {
                dist[u] = dist[v] + 1;
                q.push_back(u);
            }
    }
    return dist;
}

}  // namespace

std::optional<std::size_t> diameter(const Graph& g) {
    if (g.vcount() == 0) throw ValueError("diameter requires >= 1 vertex");
    const std::size_t INF = static_cast<std::size_t>(-1);
    std::size_t d = 0;
    for (std::size_t v = 0; v < g.vcount(); ++v) {
        auto dist = bfs_dist(g, v);
        for (std::size_t u = 0; u < g.vcount(); ++u) {
            if (dist[u] == INF) return std::nullopt;
            d = std::max(d, dist[u]);
        }
    }
    return d;
}

GraphProperties graph_properties(const Graph& g) {
    // 2-coloring BFS per component
    bool bipartite = true;
    std::vector<int> color(g.vcount(), -1);
    for (std::size_t start = 0; start < g.vcount() && bipartite; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::deque<std::size_t> q{start};
        while (!q.empty() && bipartite) {
            std::size_t v = q.front();
            q.pop_front();
            for (std::size_t u = 0; u < g.vcount(); ++u) {
                if (!g.adjacent(v, u)) continue;
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    q.push_back(u);
                } else if (color[u] == color[v]) {
                    bipartite = false;
                    break;
                }
            }
        }
    }
    bool triangle_free = true;
    for (const auto& [u, v] : g.edges()) {
        for (std::size_t w = 0; w < g.vcount() && triangle_free; ++w)
            if (g.adjacent(u, w) && g.adjacent(v, w)) triangle_free = false;
        if (!triangle_free) break;
    }
    return {bipartite, triangle_free, g.edges().size()};
}

namespace {

bool triangle_backtrack(const Graph& g, std::vector<bool>& covered, std::size_t covered_count,
                        std::vector<std::array<std::size_t, 3>>& out) {
    if (covered_count == g.vcount()) return true;
    std::size_t u = 0;
    while (covered[u]) ++u;
    for (std::size_t v = u + 1; v < g.vcount(); ++v) {
        if (covered[v] || !g.adjacent(u, v)) continue;
        for (std::size_t w = v + 1; w < g.vcount(); ++w) {
            if (covered[w] || !g.adjacent(u, w) || !g.adjacent(v, w)) continue;
            covered[u] = covered[v] = covered[w] = true;
            out.push_back({u, v, w});
            if (triangle_backtrack(g, covered, covered_count + 3, out)) return true;
            out.pop_back();
            covered[u] = covered[v] = covered[w] = false;
        }
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::array<std::size_t, 3>>> triangle_partition(const Graph& g) {
    if (g.vcount() % 3 != 0) return std::nullopt;
    std::vector<bool> covered(g.vcount(), false);
    std::vector<std::array<std::size_t, 3>> out;
    if (triangle_backtrack(g, covered, 0, out)) return out;
    return std::nullopt;
}

namespace {

// 1-WL color refinement run jointly on both graphs, so the color ids are
// directly comparable between them
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colors_pair(
    const Graph& g1, const Graph& g2) {
    std::vector<std::size_t> c1(g1.vcount()), c2(g2.vcount());
    for (std::size_t v = 0; v < g1.vcount(); ++v) c1[v] = g1.valency(v);
    for (std::size_t v = 0; v < g2.vcount(); ++v) c2[v] = g2.valency(v);
    // the partition stabilizes within vcount rounds; ids of the final round
    // come from one shared map, so they are comparable across the graphs
    for (std::size_t round = 0; round <= g1.vcount(); ++round) {
        std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> next_ids;
        auto next_of = [&](const Graph& g, const std::vector<std::size_t>& color) {
            std::vector<std::size_t> next(g.vcount());
            for (std::size_t v = 0; v < g.vcount(); ++v) {
                std::vector<std::size_t> sig;
                for (std::size_t u = 0; u < g.vcount(); ++u)
                    if (g.adjacent(v, u)) sig.push_back(color[u]);
                std::sort(sig.begin(), sig.end());
                auto key = std::make_pair(color[v], std::move(sig));
                auto [it, inserted] = next_ids.emplace(std::move(key), next_ids.size());
                (void)inserted;
                next[v] = it->second;
            }
            return next;
        };
        auto n1 = next_of(g1, c1);
        auto n2 = next_of(g2, c2);
        c1 = std::move(n1);
        c2 = std::move(n2);
    }
    return {c1, c2};
}

struct IsoState {
    const Graph& g1;
    const Graph& g2;
    std::vector<std::size_t> map12;   // g1 -> g2 or npos
    std::vector<bool> used2;
    const std::vector<std::size_t>& c1;
    const std::vector<std::size_t>& c2;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool extend(std::size_t mapped) {
        const std::size_t n = g1.vcount();
        if (mapped == n) return true;
        // choose the unmapped vertex with the most mapped neighbors
        std::size_t best = npos, best_score = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (map12[v] != npos) continue;
            std::size_t score = 0;
            for (std::size_t u = 0; u < n; ++u)
                if (g1.adjacent(v, u) && map12[u] != npos) ++score;
            if (best == npos || score > best_score) {
                best = v;
                best_score = score;
            }
        }
        for (std::size_t w = 0; w < n; ++w) {
            if (used2[w] || c2[w] != c1[best]) continue;
            bool ok = true;
            for (std::size_t u = 0; u < n && ok; ++u) {
                if (map12[u] == npos) continue;
                if (g1.adjacent(best, u) != g2.adjacent(w, map12[u])) ok = false;
            }
            if (!ok) continue;
            map12[best] = w;
            used2[w] = true;
            if (extend(mapped + 1)) return true;
            map12[best] = npos;
            used2[w] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<std::size_t>> are_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.vcount() != g2.vcount() || g1.edges().size() != g2.edges().size())
        return std::nullopt;
    if (g1.vcount() == 0) return std::vector<std::size_t>{};
    auto [c1, c2] = refine_colors_pair(g1, g2);
    auto histogram = [](const std::vector<std::size_t>& c) {
        std::map<std::size_t, std::size_t> h;
        for (auto x : c) ++h[x];
        return h;
    };
    if (histogram(c1) != histogram(c2)) return std::nullopt;
    IsoState st{g1, g2, std::vector<std::size_t>(g1.vcount(), IsoState::npos),
                std::vector<bool>(g2.vcount(), false), c1, c2};
    if (st.extend(0)) return st.map12;
    return std::nullopt;
}

std::string export_dot(const Graph& g) {
    std::string s = "graph {\n";
    for (std::size_t v = 0; v < g.vcount(); ++v) {
        s += "  \"" + std::to_string(v) + "\"";
        if (!g.labels().empty()) s += " [label=\"" + g.labels()[v] + "\"]";
        s += ";\n";
    }
    for (const auto& [u, v] : g.edges())
        s += "  \"" + std::to_string(u) + "\" -- \"" + std::to_string(v) + "\";\n";
    s += "}\n";
    return s;
}

}  // namespace arrlab::graphs

#include "arrlab/nerve.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "arrlab/exactfield.hpp"

namespace arrlab::nerve {

using exactfield::FieldRef;
using exactfield::Matrix;
using exactfield::Scalar;

SimplicialComplex SimplicialComplex::from_facets(
    std::vector<std::vector<std::size_t>> facets) {
    if (facets.empty()) throw ValueError("a complex needs at least one facet");
    for (auto& f : facets) {
        if (f.empty()) throw ValueError("empty facet");
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.front() < 1) throw ValueError("vertices are 1-based");
    }
    // prune non-maximal faces
    std::vector<std::vector<std::size_t>> maximal;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool contained = false;
        for (std::size_t j = 0; j < facets.size() && !contained; ++j) {
            if (i == j) continue;
            if (std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(),
                              facets[i].end())) {
                // ties (equal sets) keep the first occurrence
                if (facets[j].size() != facets[i].size() || j < i) contained = true;
            }
        }
        if (!contained) maximal.push_back(facets[i]);
    }
    std::sort(maximal.begin(), maximal.end());
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
    SimplicialComplex c;
    std::size_t n = 0;
    for (const auto& f : maximal) n = std::max(n, f.back());
    std::vector<bool> seen(n + 1, false);
    for (const auto& f : maximal)
        for (std::size_t v : f) seen[v] = true;
    for (std::size_t v = 1; v <= n; ++v)
        if (!seen[v])
            throw ValueError("vertex " + std::to_string(v) + " lies in no facet");
    c.n_ = n;
    c.facets_ = std::move(maximal);
    return c;
}

SimplicialComplex complex_from_facets(std::vector<std::vector<std::size_t>> facets) {
    return SimplicialComplex::from_facets(std::move(facets));
}

std::size_t SimplicialComplex::dim() const {
    std::size_t d = 0;
    for (const auto& f : facets_) d = std::max(d, f.size());
    return d - 1;
}

namespace {

using Mask = std::uint64_t;

Mask to_mask(const std::vector<std::size_t>& set) {
    Mask m = 0;
    for (std::size_t v : set) {
        if (v < 1 || v > 64) throw ValueError("ground element out of the supported range 1..64");
        m |= Mask(1) << (v - 1);
    }
    return m;
}

}  // namespace

SimplicialComplex nerve_of_family(const SetFamily& fam) {
    const std::size_t N = fam.sets.size();
    if (N == 0) throw ValueError("nerve of an empty family");
    if (N > 24) throw ValueError("nerve supports at most 24 sets");
    std::vector<Mask> masks;
    masks.reserve(N);
    for (const auto& s : fam.sets) {
        if (s.empty()) throw ValueError("nerve requires nonempty sets");
        masks.push_back(to_mask(s));
    }
    // intersection of every subfamily, bottom-up over subset masks
    const std::size_t total = std::size_t(1) << N;
    std::vector<Mask> inter(total, ~Mask(0));
    for (std::size_t S = 1; S < total; ++S) {
        std::size_t low = static_cast<std::size_t>(__builtin_ctzll(S));
        inter[S] = (S == (std::size_t(1) << low))
                       ? masks[low]
                       : (inter[S & (S - 1)] & masks[low]);
    }
    std::vector<std::vector<std::size_t>> facets;
    for (std::size_t S = 1; S < total; ++S) {
        if (inter[S] == 0) continue;
        bool maximal = true;
        for (std::size_t j = 0; j < N && maximal; ++j)
            if (!(S & (std::size_t(1) << j)) && inter[S | (std::size_t(1) << j)] != 0)
                maximal = false;
        if (!maximal) continue;
        std::vector<std::size_t> face;
        for (std::size_t j = 0; j < N; ++j)
            if (S & (std::size_t(1) << j)) face.push_back(j + 1);
        facets.push_back(std::move(face));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex lyubeznik_of_stanley_reisner(const SimplicialComplex& delta) {
    return nerve_of_family(SetFamily{delta.n(), delta.facets()});
}

AleResult ale_construction(const SimplicialComplex& delta) {
    const std::size_t N = delta.facets().size();
    const std::size_t n = delta.n();
    std::vector<std::set<std::size_t>> A(n + 1);
    for (std::size_t j = 0; j < N; ++j)
        for (std::size_t v : delta.facets()[j]) A[v].insert(j + 1);
    // mark the A_i contained in some other A_{i'} (checked on the originals)
    std::vector<bool> update(n + 1, false);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t i2 = 1; i2 <= n && !update[i]; ++i2) {
            if (i2 == i) continue;
            if (std::includes(A[i2].begin(), A[i2].end(), A[i].begin(), A[i].end()))
                update[i] = true;
        }
    for (std::size_t i = 1; i <= n; ++i)
        if (update[i]) A[i].insert(N + i);
    // relabel the used ground elements onto 1..s
    std::set<std::size_t> used;
    for (std::size_t i = 1; i <= n; ++i) used.insert(A[i].begin(), A[i].end());
    std::map<std::size_t, std::size_t> relabel;
    for (std::size_t g : used) relabel.emplace(g, relabel.size() + 1);
    SetFamily family{used.size(), {}};
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<std::size_t> s;
        for (std::size_t g : A[i]) s.push_back(relabel.at(g));
        family.sets.push_back(std::move(s));
    }
    SimplicialComplex gamma = SimplicialComplex::from_facets(family.sets);
    return AleResult{gamma, std::move(family), used.size(), gamma.dim()};
}

namespace {

// all faces of the given cardinality, as sorted vertex tuples
std::vector<std::vector<std::size_t>> faces_of_size(const SimplicialComplex& c,
                                                    std::size_t k) {
    std::set<std::vector<std::size_t>> out;
    if (k == 0) return {};
    for (const auto& f : c.facets()) {
        if (f.size() < k) continue;
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            std::vector<std::size_t> pick;
            pick.reserve(k);
            for (std::size_t i : idx) pick.push_back(f[i]);
            out.insert(std::move(pick));
            // next k-combination of indices into f
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == f.size() - k + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::vector<std::vector<std::size_t>>(out.begin(), out.end());
}

}  // namespace

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& delta,
                                                std::size_t maxdim) {
    FieldRef f = exactfield::field_rational();
    // faces by cardinality 1..maxdim+2
    std::vector<std::vector<std::vector<std::size_t>>> faces(maxdim + 3);
    for (std::size_t k = 1; k <= maxdim + 2; ++k) faces[k] = faces_of_size(delta, k);

    // rank of boundary d_k : C_k -> C_{k-1} (cardinality k+1 -> k); the
    // augmentation d_0 : C_0 -> K has rank 1 whenever there are vertices
    std::vector<std::size_t> bound_rank(maxdim + 2, 0);
    bound_rank[0] = faces[1].empty() ? 0 : 1;
    for (std::size_t k = 1; k <= maxdim + 1; ++k) {
        const auto& rows_faces = faces[k];      // dimension k-1
        const auto& cols_faces = faces[k + 1];  // dimension k
        if (rows_faces.empty() || cols_faces.empty()) continue;
        std::map<std::vector<std::size_t>, std::size_t> row_index;
        for (std::size_t r = 0; r < rows_faces.size(); ++r) row_index[rows_faces[r]] = r;
        Matrix m(f, rows_faces.size(), cols_faces.size());
        for (std::size_t c = 0; c < cols_faces.size(); ++c) {
            const auto& face = cols_faces[c];
            for (std::size_t drop = 0; drop < face.size(); ++drop) {
                std::vector<std::size_t> sub;
                for (std::size_t i = 0; i < face.size(); ++i)
                    if (i != drop) sub.push_back(face[i]);
                m.at(row_index.at(sub), c) = Scalar::from_int(f, drop % 2 ? -1 : 1);
            }
        }
        bound_rank[k] = m.rank();
    }

    std::vector<std::size_t> betti(maxdim + 1, 0);
    for (std::size_t k = 0; k <= maxdim; ++k) {
        std::size_t ck = faces[k + 1].size();
        betti[k] = ck - bound_rank[k] - bound_rank[k + 1];
    }
    return betti;
}

graphs::Graph one_skeleton(const SimplicialComplex& delta) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : faces_of_size(delta, 2)) edges.emplace_back(e[0] - 1, e[1] - 1);
    std::vector<std::string> labels;
    for (std::size_t v = 1; v <= delta.n(); ++v) labels.push_back(std::to_string(v));
    return graphs::Graph(delta.n(), std::move(edges), std::move(labels));
}

}  // namespace arrlab::nerve

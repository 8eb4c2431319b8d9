#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrlab/families.hpp"
#include "arrlab/nerve.hpp"

namespace arrlab::verify {

/// One check of a verification suite.
struct Row {
    std::string suite;
    std::string name;      // short check id
    std::string claim;     // what is being verified
    std::string expected;  // printable expected value
    std::string computed;  // printable computed value
    bool pass;
};

struct SuiteInfo {
    std::string name;
    int criterion;  // 1..11, the acceptance numbering used by the CLI/tests
    std::string description;
    /// true for the Schur stretch suite: a documented NOT-REPRODUCED outcome
    /// is acceptable there, everywhere else every row must pass
    bool may_degrade;
};

const std::vector<SuiteInfo>& suites();

struct Options {
    std::uint64_t max_q = 64;  // enumeration budget for the Schur scan
};

/// Run one suite by name; throws ValueError for unknown names.
std::vector<Row> run_suite(const std::string& name, const Options& opt = {});

/// All suites in criterion order.
std::vector<Row> run_all(const Options& opt = {});

/// Render rows as an aligned text table.
std::string format_table(const std::vector<Row>& rows);

}  // namespace arrlab::verify

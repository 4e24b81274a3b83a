#pragma once

// Named oracle suites: exact identities checked against brute force or
// against independent formulas.

#include <string>
#include <vector>

namespace gltrace {

struct VerifyRow {
    std::string identity;
    std::string instance;
    std::string left;
    std::string right;
    bool pass = false;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyRow> rows;

    /// Records a row that passes when both sides print identically.
    void check(std::string identity, std::string instance, std::string left, std::string right);
    void record(std::string identity, std::string instance, std::string left, std::string right, bool pass);

    bool passed() const;
    std::size_t failures() const;
};

/// Suite names in a fixed order.
const std::vector<std::string>& verify_suite_names();

/// One-line description of a suite.
const std::string& verify_suite_description(const std::string& name);

/// Runs a suite by name; unknown names are rejected. Exceptions thrown while
/// checking are recorded as a failing row.
VerifyReport run_verify_suite(const std::string& name);

}  // namespace gltrace

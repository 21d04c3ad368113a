#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oppk/arith.hpp"

namespace oppk::audit {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::uint64_t cases_checked = 0;
    std::string counterexample;  // empty when pass
};

/// The worked examples: the classics that anchor every module. Exact values,
/// no tolerances.
std::vector<CheckResult> run_examples_suite(const FactorBudget& budget = {});

/// Structural identities and class-inclusion properties verified
/// exhaustively up to limit (coset covering, count consistency, lcm
/// identity, criterion equivalence, implication chain, coprimality,
/// squarefree dichotomy, composition, divisor differences, the
/// divisor/order biconditional, and the Wieferich prime-power equivalence).
std::vector<CheckResult> run_theorems_suite(std::uint64_t limit,
                                            const FactorBudget& budget = {});

inline constexpr std::uint64_t kMinAuditLimit = 9;
inline constexpr std::uint64_t kMaxAuditLimit = 2'000'000;

}  // namespace oppk::audit

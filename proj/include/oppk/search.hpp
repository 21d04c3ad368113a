#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oppk/arith.hpp"

namespace oppk {

struct SearchHit {
    Natural n;
    Natural h;
    Natural r;
    Factorization factorization;
};

struct SearchResult {
    Natural base;
    Natural limit;
    /// Ascending; complete below limit.
    std::vector<SearchHit> hits;
    /// Candidates whose factorization exceeded the effort budget; reported,
    /// never silently dropped.
    std::vector<Natural> unresolved;
};

/// All overpseudoprimes to base a below limit. Pipeline: Fermat filter first
/// (a^(n-1) = 1 is cheap and prunes almost everything), then the
/// order-invariance test on the survivors. Range may be sharded across
/// threads; merged output is deterministic.
SearchResult enumerate_over_psp(const Natural& a, const Natural& limit,
                                unsigned threads = 1, const FactorBudget& budget = {});

struct OrderTableEntry {
    std::uint64_t modulus;      // 2k+1
    std::optional<Natural> h;   // empty when gcd(base, modulus) > 1
};

/// h_a at successive odd moduli 1, 3, 5, ... (count entries). Modulus 1 has
/// order 1 by convention; moduli sharing a factor with the base yield an
/// empty entry.
std::vector<OrderTableEntry> order_table(const Natural& a, std::uint64_t count);

struct ComposeEntry {
    Natural n;
    Natural h;
    Factorization factorization;
    bool exceeds_native_width = false;  // n >= 2^64
};

/// Collects primes p <= prime_pool_bound with h_a(p) = h_target and emits
/// every product of >= 2 distinct pool members, each verified
/// overpseudoprime. With include_wieferich_powers, pool members may be
/// raised up to the power their Wieferich order permits.
std::vector<ComposeEntry> compose_over_psp(const Natural& a, const Natural& prime_pool_bound,
                                           const Natural& h_target,
                                           bool include_wieferich_powers = false);

/// OEIS b-file lines: "index value", 1-based, newline-terminated, no
/// trailing whitespace.
std::string to_bfile(const std::vector<Natural>& values, std::uint64_t start_index = 1);

/// b-file for an order table. Undefined entries consume their index but the
/// line is replaced by a comment: "# n=<modulus> skipped (gcd>1)".
std::string to_bfile(const std::vector<OrderTableEntry>& entries,
                     std::uint64_t start_index = 1);

}  // namespace oppk

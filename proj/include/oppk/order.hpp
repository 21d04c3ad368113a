#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "oppk/arith.hpp"

namespace oppk {

/// Orbit decomposition of {1, ..., modulus-1} under x -> base*x (mod modulus).
/// Each coset starts at its smallest element and follows orbit order; cosets
/// are sorted by their smallest element. Cosets are disjoint and cover
/// {1, ..., modulus-1} exactly.
struct CosetPartition {
    Natural base;
    Natural modulus;
    std::vector<std::vector<std::uint32_t>> cosets;
};

/// Multiplicative order h, coset count r, and the order of the base modulo
/// every prime-power divisor p^j of the modulus (1 <= j <= l). Satisfies
/// h = lcm of the maximal prime-power orders, and r*h + 1 = modulus exactly
/// when the modulus is prime or overpseudoprime to the base.
struct OrderProfile {
    Natural base;
    Natural modulus;
    Natural h;
    Natural r;
    std::vector<std::pair<Natural, Natural>> prime_power_orders;

    /// Order of the base modulo the given prime power (must be present).
    const Natural& order_of(const Natural& prime_power) const;
};

inline constexpr std::uint64_t kDefaultPartitionBound = std::uint64_t{1} << 24;

/// Least h >= 1 with a^h = 1 (mod n), n >= 2, gcd(a, n) = 1. Computed from
/// the group exponent lambda(n): factor it and strip prime factors
/// (largest first) while the congruence still holds.
Natural mult_order(const Natural& a, const Natural& n, const FactorBudget& budget = {});

/// Full orbit enumeration; Theta(n) output, so n is capped by
/// enumeration_bound (capacity_error beyond it; use coset_count instead).
CosetPartition coset_partition(const Natural& a, const Natural& n,
                               std::uint64_t enumeration_bound = kDefaultPartitionBound);

/// Coset count by the counting formula r = sum over divisors d > 1 of n of
/// phi(d) / h_a(d); no enumeration, scales far beyond the partition bound.
Natural coset_count(const Natural& a, const Natural& n, const Factorization& f,
                    const FactorBudget& budget = {});

/// h, r and the per-prime-power order table in one pass over the
/// factorization of n (n >= 3, gcd(a, n) = 1).
OrderProfile order_profile(const Natural& a, const Natural& n,
                           const FactorBudget& budget = {});

}  // namespace oppk

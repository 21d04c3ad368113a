#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oppk/arith.hpp"

namespace oppk {

/// Generalized repunit (base^exponent - 1) / (base - 1) for prime exponent;
/// base 2 gives the Mersenne numbers.
struct Repunit {
    Natural base;
    Natural exponent;
    Natural value;
    bool coprime_to_base_minus_1 = true;
};

Repunit make_repunit(const Natural& a, const Natural& p);

/// Whether d divides the base-a repunit with prime exponent p, decided purely
/// by the order criterion h_a(d) = p. Requires d > 1 and gcd(d, a*(a-1)) = 1.
bool divisor_iff_order(const Natural& d, const Natural& a, const Natural& p,
                       const FactorBudget& budget = {});

struct OrderScanOptions {
    /// q = +-1 (mod 8) pre-filter. Sound only for base 2 with odd exponent
    /// (2 is then a quadratic residue mod any divisor q); ignored otherwise.
    bool use_mod8_filter = true;
};

/// All primes q <= bound with h_a(q) = p, found by scanning the arithmetic
/// progression q = 1 (mod p) only (the order forces p | q-1).
std::vector<Natural> find_divisors_by_order(const Natural& a, const Natural& p,
                                            const Natural& bound,
                                            const OrderScanOptions& opts = {});

enum class StepwiseStatus { complete, inconclusive };

/// Outcome of the iterative order-driven search: repeatedly find the least
/// remaining prime divisor under the shrinking square-root limit; a cofactor
/// whose full sqrt-scan comes up empty is thereby proven prime.
struct StepwiseResult {
    Natural base;
    Natural exponent;
    Natural value;
    /// Complete factorization of value when status == complete.
    std::vector<PrimePower> factors;
    StepwiseStatus status = StepwiseStatus::complete;
    /// Unfactored cofactor when inconclusive (scan ceiling was below the
    /// square-root limit and no divisor turned up within it).
    std::optional<Natural> residual;
    /// The factor certified prime by scan exhaustion, if any.
    std::optional<Natural> certified_prime;
    /// Caller-supplied scan ceiling (recorded so certificates are auditable).
    Natural scan_bound;
    /// Last square-root limit the scan exhausted.
    Natural certification_limit;

    Factorization factorization() const;
};

StepwiseResult stepwise_factor(const Natural& a, const Natural& p, const Natural& bound,
                               const OrderScanOptions& opts = {});

/// h_a(n) divides d2 - d1 for every pair of divisors d1 < d2 of n (including
/// 1 and n). Requires n prime or overpseudoprime to the base; other inputs
/// are rejected since the congruence is not guaranteed for them.
bool divisor_difference_check(const Natural& n, const Natural& a, const Factorization& f);

struct ProgressionEntry {
    std::uint64_t x;     // p = 1 + r*x
    Natural p;
    Natural h;           // multiplicative order of 2 mod p
    bool order_matches;  // h == r
};

/// All primes in the progression 1 + r*x, x <= x_max (r prime), annotated
/// with their base-2 order and whether it equals r. A single qualifying
/// prime alongside a prime 2^r - 1, or two or more alongside a composite
/// one, is the desk-scale evidence pattern for the progression criterion.
std::vector<ProgressionEntry> progression_order_scan(const Natural& r, std::uint64_t x_max);

}  // namespace oppk

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "oppk/errors.hpp"

namespace oppk {

/// Exact non-negative integer. Arbitrary precision; operations on values that
/// fit a machine word take an internal fast path with identical results.
using Natural = mpz_class;

struct PrimePower {
    Natural prime;
    unsigned exponent = 1;

    friend bool operator==(const PrimePower& a, const PrimePower& b) {
        return a.exponent == b.exponent && a.prime == b.prime;
    }
};

/// Complete prime factorization: primes strictly increasing, exponents >= 1,
/// product of prime^exponent equal to n, every prime certified by a
/// deterministic primality check.
struct Factorization {
    Natural n;
    std::vector<PrimePower> factors;

    bool squarefree() const;
    Natural reconstruct() const;
    /// All divisors of n, ascending (includes 1 and n).
    std::vector<Natural> divisors() const;
    std::size_t divisor_count() const;

    friend bool operator==(const Factorization& a, const Factorization& b) {
        return a.n == b.n && a.factors == b.factors;
    }
};

/// Effort limits for factorize(). rho_iterations is the total number of
/// Pollard rho steps allowed per call; trial_bound is the trial-division
/// ceiling applied before rho.
struct FactorBudget {
    std::uint64_t rho_iterations = 5'000'000;
    std::uint64_t trial_bound = 1'000'000;
};

/// Largest n for which the built-in Miller-Rabin witness set is a proof of
/// primality (first 13 primes as witnesses).
Natural deterministic_primality_bound();

/// x*y mod m, exact for any operand width. m = 0 rejected.
Natural mul_mod(const Natural& x, const Natural& y, const Natural& m);

/// base^exp mod m by square-and-multiply; pow_mod(x, 0, m) = 1 mod m.
/// m = 0 rejected.
Natural pow_mod(const Natural& base, const Natural& exp, const Natural& m);

/// Deterministic primality test. Below deterministic_primality_bound() this
/// is a fixed Miller-Rabin witness set; above it a (slow) full trial-division
/// confirmation backs any probable-prime answer, so the result is always
/// exact, never probabilistic.
bool is_prime(const Natural& n);

/// Complete factorization of n >= 2: trial division up to budget.trial_bound,
/// perfect-power reduction, then Pollard rho (Brent variant, deterministic
/// polynomial/restart schedule). Throws budget_error when the budget is
/// exhausted or a remaining cofactor cannot be certified prime; never returns
/// an incomplete or wrong factorization.
Factorization factorize(const Natural& n, const FactorBudget& budget = {});

/// factorize() with the budget failure mapped to std::nullopt.
std::optional<Factorization> try_factorize(const Natural& n,
                                           const FactorBudget& budget = {});

/// Euler phi from a factorization: product of p^(l-1) * (p-1).
Natural euler_phi(const Factorization& f);

/// Carmichael function (group exponent of the units mod n).
Natural carmichael_lambda(const Factorization& f);

}  // namespace oppk

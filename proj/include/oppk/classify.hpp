#pragma once

#include <optional>
#include <vector>

#include "oppk/arith.hpp"
#include "oppk/order.hpp"

namespace oppk {

struct OrderWitness {
    Natural prime_power;
    Natural order;

    friend bool operator==(const OrderWitness& a, const OrderWitness& b) {
        return a.prime_power == b.prime_power && a.order == b.order;
    }
};

/// Supporting evidence attached to a report: the full prime-power order
/// table, plus (when a class fails) the specific violator.
struct Witnesses {
    std::vector<OrderWitness> prime_power_orders;
    /// Two prime powers with different orders; set when order invariance fails.
    std::vector<OrderWitness> unequal_orders;
    /// Smallest divisor d > 1 with base^(d-1) != 1 (mod d); set when the
    /// super-pseudoprime test fails.
    std::optional<Natural> super_violating_divisor;

    friend bool operator==(const Witnesses&, const Witnesses&);
};

/// Every taxonomy verdict for one (n, base) pair. The pseudoprime classes are
/// defined for odd composites only, so for prime n the four flags are left
/// unset (not-applicable) rather than false.
struct ClassificationReport {
    Natural n;
    Natural base;
    bool is_prime = false;
    std::optional<bool> fermat_psp;
    std::optional<bool> strong_psp;
    std::optional<bool> super_psp;
    std::optional<bool> over_psp;
    bool squarefree = true;
    Natural h;
    Natural r;
    Factorization factorization;
    Witnesses witnesses;

    friend bool operator==(const ClassificationReport&, const ClassificationReport&);
};

/// a^(n-1) = 1 (mod n) for odd composite n coprime to a.
bool is_fermat_psp(const Natural& n, const Natural& a);

/// Miller-Rabin predicate: with n-1 = 2^s * m (m odd), a^m = 1 or
/// a^(2^k * m) = -1 (mod n) for some 0 <= k <= s-1.
bool is_strong_psp(const Natural& n, const Natural& a);

/// Every divisor d > 1 of n satisfies a^(d-1) = 1 (mod d); checked as
/// h_a(d) | d-1 over the divisors of the supplied factorization.
bool is_super_psp(const Natural& n, const Natural& a, const Factorization& f);

/// Defining count identity: n = r_a(n) * h_a(n) + 1, with r from the
/// counting formula.
bool is_over_psp_def(const Natural& n, const Natural& a, const FactorBudget& budget = {});

/// Order-invariance characterization: h_a(p^j) equal for every prime power
/// p^j dividing n (equivalent to the defining identity; the two are
/// cross-asserted by classify()).
bool is_over_psp_char(const Natural& n, const Natural& a, const Factorization& f,
                      const FactorBudget& budget = {});

/// Full report for odd n >= 3, a >= 2, gcd(a, n) = 1. The overpseudoprime
/// verdict is computed by BOTH routes; disagreement aborts via
/// std::logic_error since it can only mean an arithmetic bug.
ClassificationReport classify(const Natural& n, const Natural& a,
                              const FactorBudget& budget = {});

}  // namespace oppk

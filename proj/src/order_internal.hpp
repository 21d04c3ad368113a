#pragma once

// Shared machinery between the order, classifier and search modules: the
// per-prime-power order tables everything else is assembled from.

#include <utility>
#include <vector>

#include "oppk/arith.hpp"

namespace oppk::detail {

/// per_prime[i] holds [(p_i^1, ord), ..., (p_i^{l_i}, ord)] in the order the
/// primes appear in the factorization (ascending).
struct PowerOrders {
    std::vector<std::vector<std::pair<Natural, Natural>>> per_prime;
};

/// Orders of a modulo every prime power dividing f.n. Computed by stripping
/// the group exponent at the first power and lifting upward (the order mod
/// p^j is the order mod p^(j-1) times 1 or p).
PowerOrders prime_power_orders(const Natural& a, const Factorization& f,
                               const FactorBudget& budget);

/// lcm of the maximal prime-power orders = order of a modulo f.n.
Natural order_from_powers(const PowerOrders& po);

/// Counting formula: sum over divisors d > 1 of phi(d) / ord_a(d), with
/// ord_a(d) the lcm of the member prime-power orders.
Natural coset_count_from_powers(const Factorization& f, const PowerOrders& po);

/// True when every prime-power order is the same. On mismatch fills the two
/// offending (prime_power, order) pairs.
bool orders_all_equal(const PowerOrders& po,
                      std::pair<Natural, Natural>* first = nullptr,
                      std::pair<Natural, Natural>* second = nullptr);

}  // namespace oppk::detail

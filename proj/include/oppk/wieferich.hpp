#pragma once

#include <cstdint>
#include <vector>

#include "oppk/arith.hpp"

namespace oppk {

/// p^(order_w + 1) exactly divides base^(p-1) - 1. order_w >= 1 means p is a
/// Wieferich prime to the base; order_w = 0 is the ordinary case.
struct WieferichRecord {
    Natural p;
    Natural base;
    unsigned order_w = 0;

    friend bool operator==(const WieferichRecord& a, const WieferichRecord& b) {
        return a.order_w == b.order_w && a.p == b.p && a.base == b.base;
    }
};

/// Cap on the lifting loop; exceeding it raises budget_error rather than
/// truncating.
inline constexpr unsigned kDefaultWieferichOrderCap = 8;

/// Exact order w: a^(p-1) is computed mod p^2, p^3, ... until the congruence
/// first fails. p must be prime and must not divide a.
WieferichRecord wieferich_order(const Natural& p, const Natural& a,
                                unsigned order_cap = kDefaultWieferichOrderCap);

/// Whether p^(w+1) is overpseudoprime to the base (odd prime p, w >= 1).
/// Decided by wieferich_order(p, a).order_w >= w and cross-asserted against
/// the count-identity route on p^(w+1).
bool over_psp_power(const Natural& p, const Natural& a, unsigned w,
                    const FactorBudget& budget = {});

/// All base-a Wieferich primes p <= p_max (order_w >= 1), ascending. May
/// partition the range across threads; output is identical to the
/// sequential run.
std::vector<WieferichRecord> scan_wieferich(const Natural& a, std::uint64_t p_max,
                                            unsigned threads = 1);

}  // namespace oppk

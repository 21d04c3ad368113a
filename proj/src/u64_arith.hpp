#pragma once

// Internal machine-word arithmetic used as the fast path behind the public
// mpz-based operations. Not installed; semantics match the public contracts
// exactly on inputs that fit.

#include <cstdint>
#include <utility>
#include <vector>

#include "oppk/errors.hpp"

namespace oppk::detail {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod_u64(u64 x, u64 y, u64 m) {
    return static_cast<u64>(u128(x) * y % m);
}

inline u64 pow_mod_u64(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1) result = mul_mod_u64(result, base, m);
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

inline u64 gcd_u64(u64 a, u64 b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

/// Odd primes up to 10^6 plus 2, ascending. Built once, immutable afterwards.
const std::vector<u32>& small_primes();

/// Deterministic for all n < 2^64 (fixed 7-witness strong-probable-prime set).
bool is_prime_u64(u64 n);

u64 isqrt_u64(u64 n);

/// Trial division to min(trial_bound, sqrt n), then Brent-cycle Pollard rho
/// with a deterministic restart schedule. rho_budget is decremented in place;
/// throws budget_error when it runs out. Output sorted by prime.
std::vector<std::pair<u64, unsigned>> factorize_u64(u64 n, u64& rho_budget,
                                                    u64 trial_bound);

}  // namespace oppk::detail

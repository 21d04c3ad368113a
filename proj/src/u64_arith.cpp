#include "u64_arith.hpp"

#include <algorithm>
#include <cmath>

namespace oppk::detail {

namespace {

std::vector<u32> build_small_primes(u32 bound) {
    std::vector<bool> composite(bound + 1, false);
    std::vector<u32> primes;
    for (u32 i = 2; i <= bound; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            for (u64 j = u64(i) * i; j <= bound; j += i) composite[j] = true;
        }
    }
    return primes;
}

}  // namespace

const std::vector<u32>& small_primes() {
    static const std::vector<u32> primes = build_small_primes(1'000'000);
    return primes;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;

    const u64 n_minus_1 = n - 1;
    const int s = __builtin_ctzll(n_minus_1);
    const u64 m = n_minus_1 >> s;

    // Deterministic witness set for the full 64-bit range.
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull,
                  1795265022ull}) {
        a %= n;
        if (a == 0) continue;
        u64 x = pow_mod_u64(a, m, n);
        if (x == 1 || x == n_minus_1) continue;
        bool witness = true;
        for (int k = 1; k < s; ++k) {
            x = mul_mod_u64(x, x, n);
            if (x == n_minus_1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 x = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (x > 0 && x > n / x) --x;
    while (x + 1 <= n / (x + 1)) ++x;
    return x;
}

namespace {

void charge(u64& budget) {
    if (budget == 0) {
        throw budget_error(
            "factorize: effort budget exhausted (Pollard rho iteration limit hit "
            "before the factorization completed)");
    }
    --budget;
}

// Brent-cycle rho with batched gcds, f(x) = x^2 + c. The restart schedule
// c = 1, 2, 3, ... is fixed so results are replayable.
u64 pollard_rho_u64(u64 n, u64& budget) {
    for (u64 c = 1;; ++c) {
        u64 y = 2, g = 1, q = 1, r = 1;
        u64 x = 0, ys = 0;
        constexpr u64 kBatch = 128;
        auto step = [&](u64 v) {
            u64 next = mul_mod_u64(v, v, n) + c;
            if (next >= n) next -= n;
            return next;
        };
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) {
                charge(budget);
                y = step(y);
            }
            for (u64 k = 0; k < r && g == 1; k += kBatch) {
                ys = y;
                const u64 span = std::min(kBatch, r - k);
                for (u64 i = 0; i < span; ++i) {
                    charge(budget);
                    y = step(y);
                    const u64 diff = x > y ? x - y : y - x;
                    q = mul_mod_u64(q, diff, n);  // diff 0 collapses q, g becomes n
                }
                g = gcd_u64(q == 0 ? n : q, n);
            }
            r *= 2;
        }
        if (g == n) {
            // The batch overshot; replay it one multiplication at a time.
            g = 1;
            while (g == 1) {
                charge(budget);
                ys = step(ys);
                const u64 diff = x > ys ? x - ys : ys - x;
                g = gcd_u64(diff == 0 ? n : diff, n);
            }
        }
        if (g != n) return g;
    }
}

void factor_recursive(u64 n, std::vector<u64>& primes_out, u64& budget) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        primes_out.push_back(n);
        return;
    }
    if (n % 2 == 0) {  // rho cycles degenerate on even n
        primes_out.push_back(2);
        factor_recursive(n / 2, primes_out, budget);
        return;
    }
    const u64 d = pollard_rho_u64(n, budget);
    factor_recursive(d, primes_out, budget);
    factor_recursive(n / d, primes_out, budget);
}

}  // namespace

std::vector<std::pair<u64, unsigned>> factorize_u64(u64 n, u64& rho_budget,
                                                    u64 trial_bound) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u32 p : small_primes()) {
        if (p > trial_bound) break;
        if (u64(p) * p > n) break;
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        if (is_prime_u64(n)) {
            out.emplace_back(n, 1);
        } else {
            std::vector<u64> rest;
            factor_recursive(n, rest, rho_budget);
            std::sort(rest.begin(), rest.end());
            for (std::size_t i = 0; i < rest.size();) {
                std::size_t j = i;
                while (j < rest.size() && rest[j] == rest[i]) ++j;
                out.emplace_back(rest[i], static_cast<unsigned>(j - i));
                i = j;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oppk::detail

#include "oppk/arith.hpp"

#include <algorithm>
#include <string>

#include "u64_arith.hpp"

namespace oppk {

namespace {

using detail::u64;

bool fits_u64(const Natural& n) { return n.fits_ulong_p(); }

u64 to_u64(const Natural& n) { return n.get_ui(); }

// First 13 primes as Miller-Rabin witnesses: a primality proof for
// n < 3317044064679887385961981.
const Natural& mr_proof_bound() {
    static const Natural bound("3317044064679887385961981");
    return bound;
}

constexpr int kMrWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Miller-Rabin screen with the fixed witness list. false is always exact;
// true is a proof only below mr_proof_bound().
bool miller_rabin_screen(const Natural& n) {
    const Natural n_minus_1 = n - 1;
    const auto s = mpz_scan1(n_minus_1.get_mpz_t(), 0);
    Natural m = n_minus_1 >> s;
    Natural x;
    for (int a : kMrWitnesses) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), a)) return n == a;
        mpz_powm_ui(x.get_mpz_t(), Natural(a).get_mpz_t(), 0, n.get_mpz_t());
        mpz_set_ui(x.get_mpz_t(), a);
        mpz_powm(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n_minus_1) continue;
        bool witness = true;
        for (mp_bitcnt_t k = 1; k < s; ++k) {
            x = x * x % n;
            if (x == n_minus_1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

void require_natural(const Natural& v, const char* what) {
    if (sgn(v) < 0) throw input_error(std::string(what) + " must be non-negative");
}

}  // namespace

Natural deterministic_primality_bound() { return mr_proof_bound(); }

bool Factorization::squarefree() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const PrimePower& pp) { return pp.exponent == 1; });
}

Natural Factorization::reconstruct() const {
    Natural product = 1;
    Natural power;
    for (const auto& pp : factors) {
        mpz_pow_ui(power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        product *= power;
    }
    return product;
}

std::size_t Factorization::divisor_count() const {
    std::size_t count = 1;
    for (const auto& pp : factors) count *= pp.exponent + 1;
    return count;
}

std::vector<Natural> Factorization::divisors() const {
    std::vector<Natural> out;
    out.reserve(divisor_count());
    out.push_back(1);
    for (const auto& pp : factors) {
        const std::size_t previous = out.size();
        Natural power = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            power *= pp.prime;
            for (std::size_t i = 0; i < previous; ++i) out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Natural mul_mod(const Natural& x, const Natural& y, const Natural& m) {
    require_natural(x, "x");
    require_natural(y, "y");
    if (sgn(m) <= 0) throw input_error("mul_mod: modulus must be >= 1");
    if (fits_u64(x) && fits_u64(y) && fits_u64(m)) {
        const u64 mm = to_u64(m);
        return Natural(detail::mul_mod_u64(to_u64(x) % mm, to_u64(y) % mm, mm));
    }
    return x * y % m;
}

Natural pow_mod(const Natural& base, const Natural& exp, const Natural& m) {
    require_natural(base, "base");
    require_natural(exp, "exponent");
    if (sgn(m) <= 0) throw input_error("pow_mod: modulus must be >= 1");
    if (fits_u64(base) && fits_u64(exp) && fits_u64(m)) {
        return Natural(detail::pow_mod_u64(to_u64(base), to_u64(exp), to_u64(m)));
    }
    Natural result;
    mpz_powm(result.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return result;
}

bool is_prime(const Natural& n) {
    if (sgn(n) < 0) return false;
    if (fits_u64(n)) return detail::is_prime_u64(to_u64(n));

    for (detail::u32 p : detail::small_primes()) {
        if (p > 1000) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (!miller_rabin_screen(n)) return false;
    if (n < mr_proof_bound()) return true;

    // Past the witness-set proof range: confirm by full trial division.
    Natural root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    for (Natural d = 1009; d <= root; d += 2) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
    }
    return true;
}

namespace {

// Deterministic Brent rho on mpz, mirroring the u64 version.
Natural pollard_rho_mpz(const Natural& n, u64& budget) {
    for (unsigned long c = 1;; ++c) {
        Natural y = 2, g = 1, q = 1, r = 1;
        Natural x, ys, diff;
        constexpr u64 kBatch = 128;
        auto charge = [&budget]() {
            if (budget == 0) {
                throw budget_error(
                    "factorize: effort budget exhausted (Pollard rho iteration limit "
                    "hit before the factorization completed)");
            }
            --budget;
        };
        auto step = [&](Natural& v) {
            v = v * v % n;
            v += c;
            if (v >= n) v -= n;
        };
        while (g == 1) {
            x = y;
            {
                Natural steps = r;
                while (steps > 0) {
                    charge();
                    step(y);
                    --steps;
                }
            }
            for (Natural k = 0; k < r && g == 1; k += kBatch) {
                ys = y;
                Natural span = r - k;
                if (span > kBatch) span = kBatch;
                while (span > 0) {
                    charge();
                    step(y);
                    diff = x > y ? x - y : y - x;
                    q = q * diff % n;
                    --span;
                }
                g = (sgn(q) == 0) ? n : gcd(q, n);
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                charge();
                step(ys);
                diff = x > ys ? x - ys : ys - x;
                g = (sgn(diff) == 0) ? n : gcd(diff, n);
            }
        }
        if (g != n) return g;
    }
}

void factor_recursive_mpz(const Natural& n, std::vector<Natural>& primes_out,
                          u64& budget) {
    if (n == 1) return;
    if (n < mr_proof_bound()) {
        if (is_prime(n)) {
            primes_out.push_back(n);
            return;
        }
    } else if (miller_rabin_screen(n)) {
        // Cannot be certified prime within the deterministic witness range and
        // rho would spin on it fruitlessly; report the distinct failure.
        throw budget_error(
            "factorize: cofactor " + n.get_str() +
            " passes the probable-prime screen but exceeds the deterministic "
            "certification bound; factorization left incomplete");
    }
    if (mpz_divisible_ui_p(n.get_mpz_t(), 2)) {
        primes_out.push_back(2);
        factor_recursive_mpz(n / 2, primes_out, budget);
        return;
    }
    const Natural d = pollard_rho_mpz(n, budget);
    factor_recursive_mpz(d, primes_out, budget);
    factor_recursive_mpz(n / d, primes_out, budget);
}

}  // namespace

Factorization factorize(const Natural& n, const FactorBudget& budget) {
    if (n < 2) throw input_error("factorize: n must be >= 2");

    Factorization result;
    result.n = n;

    if (fits_u64(n)) {
        u64 rho_budget = budget.rho_iterations;
        for (const auto& [p, e] :
             detail::factorize_u64(to_u64(n), rho_budget, budget.trial_bound)) {
            result.factors.push_back({Natural(p), e});
        }
        return result;
    }

    Natural remaining = n;
    std::vector<std::pair<Natural, unsigned>> found;
    for (detail::u32 p : detail::small_primes()) {
        if (p > budget.trial_bound) break;
        if (mpz_divisible_ui_p(remaining.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(remaining.get_mpz_t(), p)) {
                mpz_divexact_ui(remaining.get_mpz_t(), remaining.get_mpz_t(), p);
                ++e;
            }
            found.emplace_back(Natural(p), e);
        }
        if (fits_u64(remaining)) break;
    }

    unsigned power_multiplier = 1;
    if (remaining > 1 && mpz_perfect_power_p(remaining.get_mpz_t())) {
        // Reduce x^k to x before handing the rest to rho.
        for (unsigned long k = 2; k <= mpz_sizeinbase(remaining.get_mpz_t(), 2); ++k) {
            Natural root, rem;
            mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), remaining.get_mpz_t(), k);
            if (sgn(rem) == 0) {
                remaining = root;
                power_multiplier *= k;
                if (mpz_perfect_power_p(remaining.get_mpz_t())) k = 1;  // restart
                else break;
            }
        }
    }

    if (remaining > 1) {
        std::vector<Natural> rest;
        u64 rho_budget = budget.rho_iterations;
        if (fits_u64(remaining)) {
            for (const auto& [p, e] : detail::factorize_u64(
                     to_u64(remaining), rho_budget, budget.trial_bound)) {
                for (unsigned i = 0; i < e; ++i) rest.push_back(Natural(p));
            }
        } else {
            factor_recursive_mpz(remaining, rest, rho_budget);
        }
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            found.emplace_back(rest[i], static_cast<unsigned>(j - i) * power_multiplier);
            i = j;
        }
    }

    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [p, e] : found) result.factors.push_back({p, e});
    return result;
}

std::optional<Factorization> try_factorize(const Natural& n, const FactorBudget& budget) {
    try {
        return factorize(n, budget);
    } catch (const budget_error&) {
        return std::nullopt;
    }
}

Natural euler_phi(const Factorization& f) {
    Natural phi = 1;
    Natural power;
    for (const auto& pp : f.factors) {
        mpz_pow_ui(power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent - 1);
        phi *= power * (pp.prime - 1);
    }
    return phi;
}

Natural carmichael_lambda(const Factorization& f) {
    Natural lambda = 1;
    Natural component, power;
    for (const auto& pp : f.factors) {
        if (pp.prime == 2) {
            if (pp.exponent == 1) component = 1;
            else if (pp.exponent == 2) component = 2;
            else {
                mpz_ui_pow_ui(component.get_mpz_t(), 2, pp.exponent - 2);
            }
        } else {
            mpz_pow_ui(power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent - 1);
            component = power * (pp.prime - 1);
        }
        mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), component.get_mpz_t());
    }
    return lambda;
}

}  // namespace oppk

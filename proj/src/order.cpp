#include "oppk/order.hpp"

#include <algorithm>

#include "order_internal.hpp"
#include "u64_arith.hpp"

namespace oppk {

namespace detail {

namespace {

// Order of a modulo m given a multiple "exponent" of it (a^exponent = 1 must
// hold): factor the multiple and strip primes, largest first.
Natural strip_order(const Natural& a, const Natural& m, const Natural& exponent,
                    const FactorBudget& budget) {
    Natural h = exponent;
    const Factorization ef = factorize(exponent, budget);
    for (auto it = ef.factors.rbegin(); it != ef.factors.rend(); ++it) {
        const Natural& q = it->prime;
        while (mpz_divisible_p(h.get_mpz_t(), q.get_mpz_t()) &&
               pow_mod(a, h / q, m) == 1) {
            h /= q;
        }
    }
    return h;
}

}  // namespace

PowerOrders prime_power_orders(const Natural& a, const Factorization& f,
                               const FactorBudget& budget) {
    PowerOrders po;
    po.per_prime.reserve(f.factors.size());
    for (const auto& pp : f.factors) {
        std::vector<std::pair<Natural, Natural>> column;
        const Natural& p = pp.prime;
        Natural pk = p;
        Natural h;
        if (p == 2) {
            h = 1;  // the unit group mod 2 is trivial
        } else {
            h = strip_order(a, p, p - 1, budget);
        }
        column.emplace_back(pk, h);
        for (unsigned j = 2; j <= pp.exponent; ++j) {
            pk *= p;
            if (pow_mod(a, h, pk) != 1) h *= p;
            column.emplace_back(pk, h);
        }
        po.per_prime.push_back(std::move(column));
    }
    return po;
}

Natural order_from_powers(const PowerOrders& po) {
    Natural h = 1;
    for (const auto& column : po.per_prime) {
        mpz_lcm(h.get_mpz_t(), h.get_mpz_t(), column.back().second.get_mpz_t());
    }
    return h;
}

Natural coset_count_from_powers(const Factorization& f, const PowerOrders& po) {
    const std::size_t k = f.factors.size();
    std::vector<unsigned> exps(k, 0);
    // phi(p^j) per prime power, indexed like po.
    std::vector<std::vector<Natural>> phis(k);
    for (std::size_t i = 0; i < k; ++i) {
        const Natural& p = f.factors[i].prime;
        Natural phi = p - 1;
        Natural pk = p;
        for (unsigned j = 1; j <= f.factors[i].exponent; ++j) {
            phis[i].push_back(phi);
            phi *= p;
            pk *= p;
        }
    }

    Natural r = 0;
    Natural phi_d, h_d, term;
    while (true) {
        // advance odometer
        std::size_t i = 0;
        while (i < k && exps[i] == f.factors[i].exponent) {
            exps[i] = 0;
            ++i;
        }
        if (i == k) break;
        ++exps[i];

        phi_d = 1;
        h_d = 1;
        for (std::size_t j = 0; j < k; ++j) {
            if (exps[j] == 0) continue;
            phi_d *= phis[j][exps[j] - 1];
            mpz_lcm(h_d.get_mpz_t(), h_d.get_mpz_t(),
                    po.per_prime[j][exps[j] - 1].second.get_mpz_t());
        }
        if (!mpz_divisible_p(phi_d.get_mpz_t(), h_d.get_mpz_t())) {
            throw std::logic_error("coset count: phi(d) not divisible by ord(d)");
        }
        term = phi_d / h_d;
        r += term;
    }
    return r;
}

bool orders_all_equal(const PowerOrders& po, std::pair<Natural, Natural>* first,
                      std::pair<Natural, Natural>* second) {
    const std::pair<Natural, Natural>* reference = nullptr;
    for (const auto& column : po.per_prime) {
        for (const auto& entry : column) {
            if (reference == nullptr) {
                reference = &entry;
            } else if (entry.second != reference->second) {
                if (first != nullptr) *first = *reference;
                if (second != nullptr) *second = entry;
                return false;
            }
        }
    }
    return true;
}

}  // namespace detail

namespace {

void require_coprime(const Natural& a, const Natural& n, const char* op) {
    Natural g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    if (g != 1) {
        throw input_error(std::string(op) + ": base and modulus are not coprime (gcd = " +
                          g.get_str() + ")");
    }
}

}  // namespace

const Natural& OrderProfile::order_of(const Natural& prime_power) const {
    for (const auto& [pk, ord] : prime_power_orders) {
        if (pk == prime_power) return ord;
    }
    throw input_error("order_of: " + prime_power.get_str() +
                      " is not a prime-power divisor of " + modulus.get_str());
}

Natural mult_order(const Natural& a, const Natural& n, const FactorBudget& budget) {
    if (n < 2) throw input_error("mult_order: modulus must be >= 2");
    if (sgn(a) < 0) throw input_error("mult_order: base must be non-negative");
    require_coprime(a, n, "mult_order");

    const Factorization nf = factorize(n, budget);
    const Natural lambda = carmichael_lambda(nf);
    return detail::strip_order(a, n, lambda, budget);
}

CosetPartition coset_partition(const Natural& a, const Natural& n,
                               std::uint64_t enumeration_bound) {
    if (n < 3) throw input_error("coset_partition: modulus must be >= 3");
    if (sgn(a) < 0) throw input_error("coset_partition: base must be non-negative");
    require_coprime(a, n, "coset_partition");
    constexpr std::uint64_t kHardCap = std::uint64_t{1} << 31;
    const std::uint64_t cap = std::min(enumeration_bound, kHardCap);
    if (n > Natural(cap)) {
        throw capacity_error(
            "coset_partition: modulus " + n.get_str() + " exceeds the enumeration bound " +
            std::to_string(cap) + "; the partition output is Theta(n) -- use coset_count");
    }

    const std::uint64_t m = n.get_ui();
    const std::uint64_t base = mpz_fdiv_ui(a.get_mpz_t(), m);

    CosetPartition partition;
    partition.base = a;
    partition.modulus = n;
    std::vector<bool> visited(m, false);
    for (std::uint64_t lead = 1; lead < m; ++lead) {
        if (visited[lead]) continue;
        std::vector<std::uint32_t> coset;
        std::uint64_t x = lead;
        do {
            visited[x] = true;
            coset.push_back(static_cast<std::uint32_t>(x));
            x = x * base % m;
        } while (x != lead);
        partition.cosets.push_back(std::move(coset));
    }
    return partition;
}

Natural coset_count(const Natural& a, const Natural& n, const Factorization& f,
                    const FactorBudget& budget) {
    if (n < 2) throw input_error("coset_count: modulus must be >= 2");
    require_coprime(a, n, "coset_count");
    if (f.n != n) throw input_error("coset_count: factorization does not match n");
    const auto po = detail::prime_power_orders(a, f, budget);
    return detail::coset_count_from_powers(f, po);
}

OrderProfile order_profile(const Natural& a, const Natural& n, const FactorBudget& budget) {
    if (n < 3) throw input_error("order_profile: modulus must be >= 3");
    if (sgn(a) < 0) throw input_error("order_profile: base must be non-negative");
    require_coprime(a, n, "order_profile");

    const Factorization f = factorize(n, budget);
    const auto po = detail::prime_power_orders(a, f, budget);

    OrderProfile profile;
    profile.base = a;
    profile.modulus = n;
    profile.h = detail::order_from_powers(po);
    profile.r = detail::coset_count_from_powers(f, po);
    for (const auto& column : po.per_prime) {
        for (const auto& entry : column) profile.prime_power_orders.push_back(entry);
    }
    return profile;
}

}  // namespace oppk

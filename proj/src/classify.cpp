#include "oppk/classify.hpp"

#include <stdexcept>

#include "order_internal.hpp"

namespace oppk {

namespace {

void require_base(const Natural& a) {
    if (a < 2) throw input_error("base must be >= 2");
}

void require_coprime(const Natural& n, const Natural& a) {
    Natural g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    if (g != 1) {
        throw input_error("base and n are not coprime (gcd = " + g.get_str() + ")");
    }
}

// The pseudoprime classes are defined on odd composites only.
void require_odd_composite(const Natural& n, const Natural& a) {
    require_base(a);
    if (n < 3 || mpz_even_p(n.get_mpz_t())) {
        throw input_error("n must be an odd number >= 3, got " + n.get_str());
    }
    require_coprime(n, a);
    if (is_prime(n)) {
        throw input_error("n = " + n.get_str() +
                          " is prime; pseudoprime classes apply to composites");
    }
}

bool strong_psp_unchecked(const Natural& n, const Natural& a) {
    const Natural n_minus_1 = n - 1;
    const auto s = mpz_scan1(n_minus_1.get_mpz_t(), 0);
    const Natural m = n_minus_1 >> s;
    Natural x = pow_mod(a, m, n);
    if (x == 1 || x == n_minus_1) return true;
    for (mp_bitcnt_t k = 1; k < s; ++k) {
        x = mul_mod(x, x, n);
        if (x == n_minus_1) return true;
    }
    return false;
}

// Minimal divisor d > 1 of f with ord_a(d) not dividing d - 1, if any.
std::optional<Natural> super_psp_violator(const Factorization& f,
                                          const detail::PowerOrders& po) {
    const std::size_t k = f.factors.size();
    std::vector<unsigned> exps(k, 0);
    std::optional<Natural> violator;
    Natural d, h_d;
    while (true) {
        std::size_t i = 0;
        while (i < k && exps[i] == f.factors[i].exponent) {
            exps[i] = 0;
            ++i;
        }
        if (i == k) break;
        ++exps[i];

        d = 1;
        h_d = 1;
        for (std::size_t j = 0; j < k; ++j) {
            if (exps[j] == 0) continue;
            d *= po.per_prime[j][exps[j] - 1].first;
            mpz_lcm(h_d.get_mpz_t(), h_d.get_mpz_t(),
                    po.per_prime[j][exps[j] - 1].second.get_mpz_t());
        }
        Natural d_minus_1 = d - 1;
        if (!mpz_divisible_p(d_minus_1.get_mpz_t(), h_d.get_mpz_t())) {
            if (!violator || d < *violator) violator = d;
        }
    }
    return violator;
}

}  // namespace

bool operator==(const Witnesses& a, const Witnesses& b) {
    return a.prime_power_orders == b.prime_power_orders &&
           a.unequal_orders == b.unequal_orders &&
           a.super_violating_divisor == b.super_violating_divisor;
}

bool operator==(const ClassificationReport& a, const ClassificationReport& b) {
    return a.n == b.n && a.base == b.base && a.is_prime == b.is_prime &&
           a.fermat_psp == b.fermat_psp && a.strong_psp == b.strong_psp &&
           a.super_psp == b.super_psp && a.over_psp == b.over_psp &&
           a.squarefree == b.squarefree && a.h == b.h && a.r == b.r &&
           a.factorization == b.factorization && a.witnesses == b.witnesses;
}

bool is_fermat_psp(const Natural& n, const Natural& a) {
    require_odd_composite(n, a);
    return pow_mod(a, n - 1, n) == 1;
}

bool is_strong_psp(const Natural& n, const Natural& a) {
    require_odd_composite(n, a);
    return strong_psp_unchecked(n, a);
}

bool is_super_psp(const Natural& n, const Natural& a, const Factorization& f) {
    require_odd_composite(n, a);
    if (f.n != n) throw input_error("is_super_psp: factorization does not match n");
    const auto po = detail::prime_power_orders(a, f, FactorBudget{});
    return !super_psp_violator(f, po).has_value();
}

bool is_over_psp_def(const Natural& n, const Natural& a, const FactorBudget& budget) {
    require_odd_composite(n, a);
    const OrderProfile profile = order_profile(a, n, budget);
    return n == profile.r * profile.h + 1;
}

bool is_over_psp_char(const Natural& n, const Natural& a, const Factorization& f,
                      const FactorBudget& budget) {
    require_odd_composite(n, a);
    if (f.n != n) throw input_error("is_over_psp_char: factorization does not match n");
    const auto po = detail::prime_power_orders(a, f, budget);
    return detail::orders_all_equal(po);
}

ClassificationReport classify(const Natural& n, const Natural& a,
                              const FactorBudget& budget) {
    require_base(a);
    if (n < 3 || mpz_even_p(n.get_mpz_t())) {
        throw input_error("classify: n must be odd and >= 3, got " + n.get_str());
    }
    require_coprime(n, a);

    ClassificationReport report;
    report.n = n;
    report.base = a;

    const Factorization f = factorize(n, budget);
    const auto po = detail::prime_power_orders(a, f, budget);
    report.factorization = f;
    report.squarefree = f.squarefree();
    report.h = detail::order_from_powers(po);
    report.r = detail::coset_count_from_powers(f, po);
    for (const auto& column : po.per_prime) {
        for (const auto& [pk, ord] : column) {
            report.witnesses.prime_power_orders.push_back({pk, ord});
        }
    }

    report.is_prime = f.factors.size() == 1 && f.factors[0].exponent == 1;
    if (report.is_prime) return report;  // taxonomy flags stay not-applicable

    report.fermat_psp = pow_mod(a, n - 1, n) == 1;
    report.strong_psp = is_strong_psp(n, a);

    const auto violator = super_psp_violator(f, po);
    report.super_psp = !violator.has_value();
    if (violator) report.witnesses.super_violating_divisor = *violator;

    std::pair<Natural, Natural> first_order, second_order;
    const bool over_char = detail::orders_all_equal(po, &first_order, &second_order);
    const bool over_def = (n == report.r * report.h + 1);
    if (over_char != over_def) {
        throw std::logic_error(
            "classify: the count identity and order invariance disagree for n = " +
            n.get_str() + ", base = " + a.get_str() + " (h = " + report.h.get_str() +
            ", r = " + report.r.get_str() + "); this is an arithmetic bug");
    }
    report.over_psp = over_def;
    if (!over_char) {
        report.witnesses.unequal_orders.push_back({first_order.first, first_order.second});
        report.witnesses.unequal_orders.push_back({second_order.first, second_order.second});
    }
    return report;
}

}  // namespace oppk

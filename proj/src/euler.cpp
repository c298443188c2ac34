#include "hlchi/euler.hpp"

#include <algorithm>
#include <chrono>

#include "hlchi/error.hpp"
#include "hlchi/hall_littlewood.hpp"
#include "hlchi/laurent.hpp"
#include "hlchi/parallel.hpp"

namespace hlchi {

namespace {

constexpr int kConstantTermMaxN = 3;
constexpr int kEvaluatorMaxN = 6;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void require_n(int n, int max_n, const std::string& method) {
    if (n < 1) throw Error("domain", "n must be at least 1");
    if (n > max_n)
        throw Error("guard", method + " evaluator refuses n = " + std::to_string(n) + " (limit " +
                                 std::to_string(max_n) + ")");
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::Localization: return "localization";
        case Method::ConstantTerm: return "constant-term";
        case Method::Theorem: return "theorem";
    }
    return "?";
}

std::string convention_name(Convention c) { return c == Convention::Row ? "row" : "col"; }

// ----------------------------------------------------------- fixed points

FixedPointData fixed_point_data(const Partition& mu, Convention convention) {
    FixedPointData d{mu, {}, {}};
    for (int r = 0; r < mu.length(); ++r)
        for (int c = 0; c < mu[r]; ++c) {
            auto [arm, leg] = arm_leg(mu, r, c);
            d.taut_char.add(c, r, 1);
            d.cotangent_char.add(arm + 1, -leg, 1);
            d.cotangent_char.add(-arm, leg + 1, 1);
        }
    if (convention == Convention::Col) {
        d.taut_char = d.taut_char.swapped();
        d.cotangent_char = d.cotangent_char.swapped();
    }
    return d;
}

// ------------------------------------------------------------ WedgeSeries

WedgeSeries WedgeSeries::constant(int order, const RF& c) {
    WedgeSeries w(order);
    w.add_term(0, c);
    return w;
}

WedgeSeries WedgeSeries::monomial(int order, int p, int q, const RF& c) {
    WedgeSeries w(order);
    w.add_term(q, c * RF::z_power(p));
    return w;
}

RF WedgeSeries::coeff(int b) const {
    auto it = c_.find(b);
    return it == c_.end() ? RF() : it->second;
}

void WedgeSeries::add_term(int b, const RF& c) {
    if (b > order_ || c.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

WedgeSeries& WedgeSeries::operator+=(const WedgeSeries& o) {
    for (const auto& [b, c] : o.c_) add_term(b, c);
    return *this;
}

WedgeSeries& WedgeSeries::operator*=(const RF& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& [b, v] : c_) v *= c;
    return *this;
}

WedgeSeries operator*(const WedgeSeries& x, const WedgeSeries& y) {
    WedgeSeries r(std::min(x.order_, y.order_));
    for (const auto& [b1, c1] : x.c_)
        for (const auto& [b2, c2] : y.c_)
            if (b1 + b2 <= r.order_) r.add_term(b1 + b2, c1 * c2);
    return r;
}

bool WedgeSeries::z1_holomorphic() const {
    return std::all_of(c_.begin(), c_.end(), [](const auto& kv) { return kv.second.denominator().coeff(0) != 0; });
}

LaurentBiSeries WedgeSeries::to_laurent() const {
    int a_lo = 0;
    int b_lo = 0;
    std::vector<std::pair<int, LaurentExpansion>> expansions;
    for (const auto& [b, c] : c_) {
        LaurentExpansion e = rf_laurent_expand(c, order_);
        a_lo = std::min(a_lo, e.valuation);
        b_lo = std::min(b_lo, b);
        expansions.emplace_back(b, std::move(e));
    }
    LaurentBiSeries out(a_lo, order_, b_lo, order_);
    for (const auto& [b, e] : expansions)
        for (std::size_t i = 0; i < e.coeffs.size(); ++i)
            out.add_term(e.valuation + static_cast<int>(i), b, e.coeffs[i]);
    return out;
}

BiSeries WedgeSeries::to_biseries() const {
    for (const auto& [b, c] : c_)
        if (c.denominator().coeff(0) == 0)
            throw Error("not-holomorphic", "z2^" + std::to_string(b) + " coefficient " + c.to_string("z1") +
                                               " is not holomorphic at z1 = 0");
    return to_laurent().finalize(order_);
}

// ------------------------------------------------------------------ omega

WedgeSeries omega(const VirtualCharacter& a, int order) {
    if (a.has_trivial()) throw Error("omega-undefined", "Omega is undefined at the trivial monomial");
    // Negative-multiplicity monomials with q < 0 shift z2-degrees down, so
    // the other factors are expanded further before the final truncation.
    int extended = order;
    for (const auto& [w, mult] : a.terms())
        if (mult < 0 && w.second < 0) extended += static_cast<int>(-mult) * -w.second;

    RF z1_part(1);
    WedgeSeries acc = WedgeSeries::constant(extended, RF(1));
    for (const auto& [w, mult] : a.terms()) {
        const auto [p, q] = w;
        if (q == 0) {
            const RF base = RF(1) - RF::z_power(p);
            for (long i = 0; i < std::abs(mult); ++i) {
                if (mult > 0)
                    z1_part /= base;
                else
                    z1_part *= base;
            }
            continue;
        }
        WedgeSeries factor(extended);
        if (mult < 0) {
            factor.add_term(0, RF(1));
            factor.add_term(q, -RF::z_power(p));
        } else if (q > 0) {
            for (int k = 0; q * k <= extended; ++k) factor.add_term(q * k, RF::z_power(p * k));
        } else {
            for (int k = 1; -q * k <= extended; ++k) factor.add_term(-q * k, -RF::z_power(-p * k));
        }
        for (long i = 0; i < std::abs(mult); ++i) acc = acc * factor;
    }
    WedgeSeries out(order);
    for (const auto& [b, c] : acc.terms()) out.add_term(b, c * z1_part);
    return out;
}

// --------------------------------------------------------------- evaluators

EulerResult euler_localization(const SymFunc& f, int n, int order, Convention convention) {
    require_n(n, kEvaluatorMaxN, "localization");
    const auto t0 = std::chrono::steady_clock::now();
    const SymFunc fp = to_p(f);
    const auto fixed_points = partitions_of(n, n);
    auto summands = parallel_map(fixed_points.size(), [&](std::size_t i) {
        const FixedPointData d = fixed_point_data(fixed_points[i], convention);
        std::map<int, WedgeSeries> power_sums;
        auto power_sum = [&](int k) -> const WedgeSeries& {
            auto it = power_sums.find(k);
            if (it != power_sums.end()) return it->second;
            WedgeSeries pk(order);
            for (const auto& [w, mult] : d.taut_char.terms())
                pk += WedgeSeries::monomial(order, k * w.first, k * w.second, RF(mult));
            return power_sums.emplace(k, std::move(pk)).first->second;
        };
        WedgeSeries fiber(order);
        for (const auto& [lambda, c] : fp.terms()) {
            WedgeSeries term = WedgeSeries::constant(order, c);
            for (int part : lambda.parts()) term = term * power_sum(part);
            fiber += term;
        }
        return fiber * omega(d.cotangent_char, order);
    });
    WedgeSeries total(order);
    for (const auto& s : summands) total += s;

    EulerResult r;
    r.method = Method::Localization;
    r.series = total.to_biseries();
    r.n = n;
    r.order = order;
    r.f = f.to_string();
    r.convention = convention;
    r.seconds = seconds_since(t0);
    return r;
}

EulerResult euler_constant_term(const SymFunc& f, int n, int order, bool allow_large_n) {
    require_n(n, allow_large_n ? 1 << 20 : kConstantTermMaxN, "constant-term");
    const auto t0 = std::chrono::steady_clock::now();
    const int D = order;
    auto zero_vec = [n] { return ExponentVector(static_cast<std::size_t>(n), 0); };

    // f(X), with any Hall-Littlewood parameter in the coefficients bound to z1.
    XLaurent<BiSeries> integrand = to_finite_vars(f, n, false).map_coefficients<BiSeries>(
        [D](const RF& c) { return BiSeries::from_z1(D, rf_expand(c, D)); });

    auto ratio = [&](int i, int j, int k) {
        ExponentVector e = zero_vec();
        e[static_cast<std::size_t>(i)] += k;
        e[static_cast<std::size_t>(j)] -= k;
        return e;
    };

    // Omega(-Delta) = prod_{i != j} (1 - x_i/x_j).
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            XLaurent<BiSeries> factor(n);
            factor.add_term(zero_vec(), BiSeries::one(D));
            factor.add_term(ratio(i, j, 1), BiSeries::monomial(D, 0, 0, -1));
            integrand = integrand * factor;
        }

    // Omega((z1 + z2 - z1 z2) Delta), one ordered pair at a time: the
    // coefficient of u^e in 1/((1 - z1 u)(1 - z2 u)) * (1 - z1 z2 u).
    std::map<int, BiSeries> pair_series;
    for (int a = 0; a <= D; ++a)
        for (int b = 0; b <= D; ++b) {
            pair_series.try_emplace(a + b, D).first->second.add_term(a, b, 1);
            if (a + 1 <= D && b + 1 <= D) pair_series.try_emplace(a + b + 1, D).first->second.add_term(a + 1, b + 1, -1);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            XLaurent<BiSeries> factor(n);
            for (const auto& [e, c] : pair_series) factor.add_term(ratio(i, j, e), c);
            integrand = integrand * factor;
        }

    // Omega(z1 z2 X).
    for (int i = 0; i < n; ++i) {
        XLaurent<BiSeries> factor(n);
        for (int k = 0; k <= D; ++k) {
            ExponentVector e = zero_vec();
            e[static_cast<std::size_t>(i)] = k;
            factor.add_term(std::move(e), BiSeries::monomial(D, k, k));
        }
        integrand = integrand * factor;
    }

    BiSeries ct = constant_term_nonneg(integrand, BiSeries(D));

    // (1/n!) Omega(1 - M)^n = (1/n!) ((1 - z1 z2) / ((1 - z1)(1 - z2)))^n.
    BiSeries pref(D);
    for (int a = 0; a <= D; ++a)
        for (int b = 0; b <= D; ++b) pref.add_term(a, b, 1);
    pref = pref - BiSeries::monomial(D, 1, 1) * pref;
    BiSeries total = ct;
    for (int i = 0; i < n; ++i) total = total * pref;
    mpz_class nfact;
    mpz_fac_ui(nfact.get_mpz_t(), static_cast<unsigned long>(n));
    total *= mpq_class(1, nfact);

    EulerResult r;
    r.method = Method::ConstantTerm;
    r.series = std::move(total);
    r.n = n;
    r.order = order;
    r.f = f.to_string();
    r.seconds = seconds_since(t0);
    return r;
}

EulerResult euler_theorem(const SymFunc& f, int n, int order) {
    require_n(n, kEvaluatorMaxN, "theorem");
    const auto t0 = std::chrono::steady_clock::now();
    const SymFunc fp = to_p(f);
    const std::set<int> degrees = fp.degrees();
    if (!fp.is_zero()) check_degree(order + fp.degree());

    struct Slice {
        RF sum;
        long negative_terms = 0;
    };
    auto slices = parallel_map(static_cast<std::size_t>(order) + 1, [&](std::size_t idx) {
        const int m = static_cast<int>(idx);
        Slice s;
        for (const auto& mu : partitions_of(m, n)) {
            const SymFunc product = multiply(fp, hl_P(mu));
            for (int d : degrees) {
                const SymFunc component = product.homogeneous_component(m + d);
                if (component.is_zero()) continue;
                for (const auto& nu : partitions_of(m + d, n)) {
                    const RF element = hl_inner(component, hl_Q(nu));
                    if (element.is_zero()) continue;
                    const long e = m + k_exponent(mu, nu);
                    if (e < 0) ++s.negative_terms;
                    s.sum += RF::z_power(static_cast<int>(e)) * element / b_norm_finite(nu, n);
                }
            }
        }
        return s;
    });

    EulerResult r;
    r.method = Method::Theorem;
    r.series = BiSeries(order);
    for (int m = 0; m <= order; ++m) {
        const Slice& s = slices[static_cast<std::size_t>(m)];
        r.negative_exponent_terms += s.negative_terms;
        if (s.sum.is_zero()) continue;
        const LaurentExpansion e = rf_laurent_expand(s.sum, order);
        if (e.valuation < 0)
            throw Error("negative-exponent", "z2^" + std::to_string(m) + " coefficient " + s.sum.to_string("z1") +
                                                 " has a pole at z1 = 0");
        for (int a = e.valuation; a <= order; ++a) r.series.add_term(a, m, e.coeff(a));
    }
    r.n = n;
    r.order = order;
    r.f = f.to_string();
    r.seconds = seconds_since(t0);
    return r;
}

EulerResult run_method(Method m, const SymFunc& f, int n, int order, Convention convention) {
    switch (m) {
        case Method::Localization: return euler_localization(f, n, order, convention);
        case Method::ConstantTerm: return euler_constant_term(f, n, order);
        case Method::Theorem: return euler_theorem(f, n, order);
    }
    throw Error("config", "unknown method");
}

// ----------------------------------------------------- partition function

std::vector<BiSeries> partition_function(int max_n, int order) {
    std::vector<BiSeries> s(static_cast<std::size_t>(max_n) + 1, BiSeries(order));
    s[0] = BiSeries::one(order);
    for (int i = 0; i <= order; ++i)
        for (int j = 0; j <= order; ++j) {
            // Division by (1 - z1^i z2^j q), ascending in q.
            const BiSeries w = BiSeries::monomial(order, i, j);
            for (int k = 1; k <= max_n; ++k)
                s[static_cast<std::size_t>(k)] += w * s[static_cast<std::size_t>(k - 1)];
        }
    return s;
}

// ------------------------------------------------------------ cross-check

bool is_schur_positive(const SymFunc& f) {
    const SymFunc s = convert(f, Basis::s);
    return std::all_of(s.terms().begin(), s.terms().end(), [](const auto& kv) {
        if (!kv.second.is_constant()) return false;
        const mpq_class v = kv.second.constant_value();
        return v.get_den() == 1 && v >= 0;
    });
}

CrossCheckReport cross_check(const SymFunc& f, int n, int order, const std::vector<Method>& methods,
                             Convention convention) {
    CrossCheckReport rep;
    for (Method m : methods) {
        if (m == Method::ConstantTerm && n > kConstantTermMaxN) {
            rep.skipped.push_back(m);
            continue;
        }
        rep.results.push_back(run_method(m, f, n, order, convention));
    }
    for (std::size_t i = 1; i < rep.results.size(); ++i) {
        const EulerResult& x = rep.results.front();
        const EulerResult& y = rep.results[i];
        for (int a = 0; a <= order; ++a)
            for (int b = 0; b <= order; ++b)
                if (x.series.coeff(a, b) != y.series.coeff(a, b)) {
                    rep.agreement = false;
                    rep.diffs.push_back({a, b, x.method, y.method, x.series.coeff(a, b), y.series.coeff(a, b)});
                }
    }
    if (is_schur_positive(f)) {
        rep.nonnegativity_checked = true;
        for (const auto& r : rep.results)
            for (const auto& [a, b, v] : r.series.terms())
                if (v < 0 || v.get_den() != 1) rep.nonnegativity_violations.emplace_back(r.method, a, b);
    }
    if (to_p(f).is_z_free()) {  // P and Q atoms carry z
        rep.symmetry_checked = true;
        for (const auto& r : rep.results) {
            const BiSeries sw = r.series.swapped();
            for (int a = 0; a <= order; ++a)
                for (int b = a + 1; b <= order; ++b)
                    if (r.series.coeff(a, b) != sw.coeff(a, b)) rep.symmetry_violations.emplace_back(r.method, a, b);
        }
    }
    return rep;
}

}  // namespace hlchi

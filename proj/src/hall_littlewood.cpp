#include "hlchi/hall_littlewood.hpp"

#include <algorithm>

#include "hlchi/error.hpp"

namespace hlchi {

// ------------------------------------------------------------ PlethysticArg

PlethysticArg PlethysticArg::monomial(long c, int x_exp, int z_exp) {
    PlethysticArg a;
    if (c != 0) a.terms_[{x_exp, z_exp}] = c;
    return a;
}

PlethysticArg PlethysticArg::over_one_minus_z() const {
    PlethysticArg a = *this;
    ++a.geometric_power_;
    return a;
}

namespace {

// Multiplies the numerator terms by (1 - z).
std::map<std::pair<int, int>, long> times_one_minus_z(const std::map<std::pair<int, int>, long>& t) {
    std::map<std::pair<int, int>, long> r;
    for (const auto& [k, c] : t) {
        r[k] += c;
        r[{k.first, k.second + 1}] -= c;
    }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

}  // namespace

PlethysticArg PlethysticArg::operator-() const {
    PlethysticArg a = *this;
    for (auto& [k, c] : a.terms_) c = -c;
    return a;
}

PlethysticArg operator+(const PlethysticArg& a, const PlethysticArg& b) {
    PlethysticArg x = a, y = b;
    while (x.geometric_power_ < y.geometric_power_) {
        x.terms_ = times_one_minus_z(x.terms_);
        ++x.geometric_power_;
    }
    while (y.geometric_power_ < x.geometric_power_) {
        y.terms_ = times_one_minus_z(y.terms_);
        ++y.geometric_power_;
    }
    for (const auto& [k, c] : y.terms_) x.terms_[k] += c;
    std::erase_if(x.terms_, [](const auto& kv) { return kv.second == 0; });
    return x;
}

std::map<int, RF> PlethysticArg::adams(int k) const {
    std::map<int, RF> out;
    RF scale(1);
    if (geometric_power_ > 0) {
        RF base = RF(1) / RF(IntPoly(1) - IntPoly::monomial(1, k));
        for (int i = 0; i < geometric_power_; ++i) scale *= base;
    }
    for (const auto& [e, c] : terms_) {
        RF v = RF(IntPoly::monomial(c, 0)) * RF::z_power(e.second * k);
        out[e.first * k] += v;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    if (geometric_power_ > 0)
        for (auto& [d, v] : out) v *= scale;
    return out;
}

bool PlethysticArg::x_free() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.first == 0; });
}

// ------------------------------------------------------------ vertex operators

namespace {

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

SymFunc truncated_product(const SymFunc& a, const SymFunc& b, int max_degree) {
    SymFunc r(Basis::p);
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms())
            if (la.size() + lb.size() <= max_degree) r.add_term(merge_parts(la, lb), ca * cb);
    return r;
}

std::map<int, RF> poly_mul(const std::map<int, RF>& a, const std::map<int, RF>& b) {
    std::map<int, RF> r;
    for (const auto& [da, ca] : a)
        for (const auto& [db, cb] : b) r[da + db] += ca * cb;
    std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

GradedSym graded_mul(const GradedSym& a, const GradedSym& b) {
    GradedSym r;
    for (const auto& [da, sa] : a)
        for (const auto& [db, sb] : b) {
            SymFunc prod = truncated_product(sa, sb, 1 << 20);
            if (prod.is_zero()) continue;
            auto [it, inserted] = r.try_emplace(da + db, prod);
            if (!inserted) it->second += prod;
        }
    std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

}  // namespace

GradedSym gamma_minus(const PlethysticArg& a, const SymFunc& f, XWindow window, int max_degree) {
    GradedSym out;
    const SymFunc g = to_p(f);
    if (g.is_zero()) return out;
    int fmin = max_degree + 1;
    for (const auto& [l, c] : g.terms()) fmin = std::min(fmin, l.size());
    std::map<int, std::map<int, RF>> adams;
    GradedSym exp_part;
    for (int s = 0; s + fmin <= max_degree; ++s) {
        for (const auto& lambda : partitions_of(s, s)) {
            std::map<int, RF> poly{{0, RF(1)}};
            for (int part : lambda.parts()) {
                auto it = adams.find(part);
                if (it == adams.end()) it = adams.emplace(part, a.adams(part)).first;
                poly = poly_mul(poly, it->second);
            }
            const RF inv_z = RF(mpq_class(1, zee(lambda)));
            for (const auto& [d, c] : poly) {
                if (d < window.lo || d > window.hi) continue;
                auto [it, inserted] = exp_part.try_emplace(d, Basis::p);
                it->second.add_term(lambda, c * inv_z);
            }
        }
    }
    for (const auto& [d, e] : exp_part) {
        SymFunc prod = truncated_product(e, g, max_degree);
        if (!prod.is_zero()) out.emplace(d, std::move(prod));
    }
    return out;
}

GradedSym gamma_plus(const PlethysticArg& a, const SymFunc& f) {
    GradedSym out;
    const SymFunc g = to_p(f);
    std::map<int, GradedSym> factors;
    auto factor = [&](int k) -> const GradedSym& {
        auto it = factors.find(k);
        if (it != factors.end()) return it->second;
        GradedSym fk;
        fk.emplace(0, SymFunc::element(Basis::p, Partition{k}));
        for (const auto& [d, c] : a.adams(k)) {
            auto [jt, inserted] = fk.try_emplace(d, Basis::p);
            jt->second += SymFunc::constant(c);
        }
        std::erase_if(fk, [](const auto& kv) { return kv.second.is_zero(); });
        return factors.emplace(k, std::move(fk)).first->second;
    };
    for (const auto& [lambda, c] : g.terms()) {
        GradedSym term{{0, SymFunc::constant(c)}};
        for (int part : lambda.parts()) term = graded_mul(term, factor(part));
        for (auto& [d, s] : term) {
            auto [it, inserted] = out.try_emplace(d, s);
            if (!inserted) it->second += s;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

const SymFunc& jing_q(int m) {
    static std::mutex mu;
    static std::map<int, SymFunc> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    SymFunc q(Basis::p);
    if (m >= 0) {
        check_degree(m);
        GradedSym g = gamma_minus(PlethysticArg::x_one_minus_z(), SymFunc::constant(RF(1)), {m, m}, m);
        if (auto it = g.find(m); it != g.end()) q = it->second;
    }
    std::lock_guard lock(mu);
    return cache.emplace(m, std::move(q)).first->second;
}

SymFunc jing_J(int k, const SymFunc& f) {
    SymFunc out(Basis::p);
    const SymFunc g = to_p(f);
    if (g.is_zero()) return out;
    check_degree(g.degree() + k);
    // Gamma_+^{-1}(1/x) = Gamma_+(-1/x) lands in x-degrees -deg f .. 0.
    const GradedSym shifted = gamma_plus(-PlethysticArg::x_inverse(), g);
    for (const auto& [d, gi] : shifted) {
        const int m = k - d;
        if (m < 0) continue;
        out += multiply(jing_q(m), gi);
    }
    return out;
}

// ------------------------------------------------------------- norms, table

RF b_norm(const Partition& lambda) {
    RF b(1);
    for (auto [i, mi] : multiplicities(lambda, lambda.length()))
        if (i >= 1) b *= RF::q_bracket(mi);
    return b;
}

RF b_norm_finite(const Partition& lambda, int n) {
    RF b(1);
    for (auto [i, mi] : multiplicities(lambda, n)) b *= RF::q_bracket(mi);
    return b;
}

HLTable& HLTable::global() {
    static HLTable table;
    return table;
}

const SymFunc& HLTable::Q(const Partition& lambda) {
    {
        std::shared_lock lock(mutex_);
        auto it = q_.find(lambda);
        if (it != q_.end()) return it->second;
    }
    check_degree(lambda.size());
    SymFunc q = lambda.empty() ? SymFunc::constant(RF(1)) : jing_J(lambda[0], Q(lambda.tail()));
    std::unique_lock lock(mutex_);
    return q_.emplace(lambda, std::move(q)).first->second;
}

const SymFunc& HLTable::P(const Partition& lambda) {
    {
        std::shared_lock lock(mutex_);
        auto it = p_.find(lambda);
        if (it != p_.end()) return it->second;
    }
    SymFunc p = Q(lambda) * (RF(1) / b_norm(lambda));
    std::unique_lock lock(mutex_);
    return p_.emplace(lambda, std::move(p)).first->second;
}

// ---------------------------------------------------------- matrix elements

std::map<Partition, RF> expand_in_P(const SymFunc& f) {
    std::map<Partition, RF> out;
    const SymFunc g = to_p(f);
    for (int d : g.degrees()) {
        const SymFunc gd = g.homogeneous_component(d);
        for (const auto& lambda : partitions_of(d, d)) {
            RF c = hl_inner(gd, hl_Q(lambda));
            if (!c.is_zero()) out.emplace(lambda, std::move(c));
        }
    }
    return out;
}

RF matrix_element(const SymFunc& f, const Partition& nu, const Partition& mu) {
    const SymFunc prod = multiply(f, hl_P(mu));
    return hl_inner(prod.homogeneous_component(nu.size()), hl_Q(nu));
}

RF psi(const Partition& mu, const Partition& lambda) {
    if (mu.size() < lambda.size()) return RF();
    const int k = mu.size() - lambda.size();
    const SymFunc hk = SymFunc::element(Basis::h, k == 0 ? Partition{} : Partition{k});
    RF v = matrix_element(hk, mu, lambda);
    // Unlike the Schur case the support is not limited to horizontal strips
    // (h_2 = P_2 + z P_11), only to containment.
    if (!v.is_zero() && !contains(mu, lambda))
        throw Error("internal", "nonzero psi for non-contained pair " + mu.to_string() + "/" + lambda.to_string());
    return v;
}

long k_exponent(const Partition& mu, const Partition& nu) {
    const Partition a = conjugate(mu);
    const Partition b = conjugate(nu);
    const int len = std::max(a.length(), b.length());
    long k = 0;
    for (int i = 0; i < len; ++i) {
        const long x = a[i], y = b[i];
        k += x * (x - 1) / 2 + y * (y - 1) / 2 - x * y;
    }
    return k;
}

long k_exponent_recursive(const Partition& mu, const Partition& nu) {
    if (mu.empty() && nu.empty()) return 0;
    if (mu[0] < nu[0]) return k_exponent_recursive(nu, mu);
    const Partition rest = mu.tail();
    return k_exponent_recursive(rest, nu) + rest.size() - nu.size();
}

LemmaCheck verify_lemma(const Partition& mu, const Partition& nu) {
    LemmaCheck out;
    out.mu = mu;
    out.nu = nu;
    out.k = k_exponent(mu, nu);
    const int bound = std::min(mu.size(), nu.size());
    for (const auto& lambda : partitions_up_to(bound, bound)) {
        RF a = psi(mu, lambda);
        if (a.is_zero()) continue;
        RF b = psi(nu, lambda);
        if (b.is_zero()) continue;
        out.lhs += RF::z_power(-lambda.size()) * b_norm(lambda) * a * b;
    }
    out.rhs = RF::z_power(static_cast<int>(out.k));
    out.pass = out.lhs == out.rhs;
    return out;
}

}  // namespace hlchi

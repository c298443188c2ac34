#include "hlchi/symfunc.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <vector>

#include "hlchi/error.hpp"
#include "hlchi/hall_littlewood.hpp"

namespace hlchi {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::p: return "p";
        case Basis::m: return "m";
        case Basis::h: return "h";
        case Basis::e: return "e";
        case Basis::s: return "s";
        case Basis::HallLittlewoodP: return "P";
        case Basis::HallLittlewoodQ: return "Q";
    }
    return "?";
}

std::optional<Basis> basis_from_name(char c) {
    switch (c) {
        case 'p': return Basis::p;
        case 'm': return Basis::m;
        case 'h': return Basis::h;
        case 'e': return Basis::e;
        case 's': return Basis::s;
        case 'P': return Basis::HallLittlewoodP;
        case 'Q': return Basis::HallLittlewoodQ;
        default: return std::nullopt;
    }
}

// ------------------------------------------------------------------ SymFunc

SymFunc SymFunc::element(Basis b, const Partition& lambda, const RF& c) {
    SymFunc f(b);
    f.add_term(lambda, c);
    return f;
}

SymFunc SymFunc::constant(const RF& c) { return element(Basis::p, Partition{}, c); }

RF SymFunc::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? RF() : it->second;
}

void SymFunc::add_term(const Partition& lambda, const RF& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int SymFunc::degree() const {
    int d = -1;
    for (const auto& [lambda, c] : terms_) d = std::max(d, lambda.size());
    return d;
}

std::set<int> SymFunc::degrees() const {
    std::set<int> ds;
    for (const auto& [lambda, c] : terms_) ds.insert(lambda.size());
    return ds;
}

SymFunc SymFunc::homogeneous_component(int d) const {
    SymFunc r(basis_);
    for (const auto& [lambda, c] : terms_)
        if (lambda.size() == d) r.terms_.emplace(lambda, c);
    return r;
}

bool SymFunc::is_z_free() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_constant(); });
}

SymFunc SymFunc::operator-() const {
    SymFunc r = *this;
    for (auto& [lambda, c] : r.terms_) c = -c;
    return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) basis_ = o.basis_;
    if (o.basis_ != basis_) {
        *this = to_p(*this);
        const SymFunc other = to_p(o);
        for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
        return *this;
    }
    for (const auto& [lambda, c] : o.terms_) add_term(lambda, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += -o; }

SymFunc& SymFunc::operator*=(const RF& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, v] : terms_) v *= c;
    return *this;
}

namespace {

bool looks_negative(const RF& c) {
    const IntPoly& n = c.numerator();
    return n.term_count() == 1 && n.coeffs()[static_cast<std::size_t>(n.degree())] < 0;
}

std::string coefficient_prefix(const RF& c, const std::string& var) {
    if (c == RF(1)) return "";
    const bool single = c.numerator().term_count() == 1;
    if (c.is_integer_polynomial() && !single) return "(" + c.to_string(var) + ")*";
    return c.to_string(var) + "*";
}

}  // namespace

std::string SymFunc::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Partition, RF>*> order;
    for (const auto& kv : terms_) order.push_back(&kv);
    std::sort(order.begin(), order.end(),
              [](const auto* a, const auto* b) { return graded_revlex_less(a->first, b->first); });
    std::string s;
    bool first = true;
    for (const auto* kv : order) {
        RF c = kv->second;
        const bool neg = looks_negative(c);
        if (neg) c = -c;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        if (kv->first.empty()) {
            s += c.is_integer_polynomial() && c.numerator().term_count() > 1 ? "(" + c.to_string(var) + ")"
                                                                              : c.to_string(var);
            continue;
        }
        std::string atom = basis_name(basis_) + kv->first.to_string();
        s += coefficient_prefix(c, var) + atom;
    }
    return s;
}

// ------------------------------------------------------------ degree bound

namespace {
std::atomic<int> g_degree_bound{12};
}

int degree_bound() { return g_degree_bound.load(); }
void set_degree_bound(int d) { g_degree_bound.store(d); }
void check_degree(int d) {
    if (d > degree_bound())
        throw Error("degree-bound", "symmetric function degree " + std::to_string(d) + " exceeds the bound " +
                                        std::to_string(degree_bound()));
}

// ---------------------------------------------------- classical base changes

namespace {

using QVec = std::map<Partition, mpq_class>;
using Matrix = std::vector<std::vector<mpq_class>>;

Partition merge(const Partition& a, const Partition& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(a.length() + b.length()));
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(), std::back_inserter(parts),
               std::greater<>());
    return Partition(std::move(parts));
}

void qadd(QVec& acc, const Partition& lambda, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = acc.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

QVec qmul(const QVec& a, const QVec& b) {
    QVec r;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) qadd(r, merge(la, lb), ca * cb);
    return r;
}

QVec elementary_in_p(int n, bool signed_) {
    QVec r;
    if (n < 0) return r;
    for (const auto& rho : partitions_of(n, n)) {
        mpq_class c(1, zee(rho));
        if (signed_ && (n - rho.length()) % 2 != 0) c = -c;
        r.emplace(rho, c);
    }
    return r;
}

QVec h_in_p(int n) { return elementary_in_p(n, false); }
QVec e_in_p(int n) { return elementary_in_p(n, true); }

QVec product_of(const Partition& lambda, QVec (*gen)(int)) {
    QVec r{{Partition{}, 1}};
    for (int part : lambda.parts()) r = qmul(r, gen(part));
    return r;
}

// Determinant of det(g(lambda_i - i + j)) by permutation expansion; the
// matrix side is min(l(lambda), lambda_1) after choosing h or e.
QVec jacobi_trudi(const Partition& lambda) {
    if (lambda.empty()) return {{Partition{}, 1}};
    const bool use_h = lambda.length() <= lambda[0];
    const Partition rows = use_h ? lambda : conjugate(lambda);
    QVec (*gen)(int) = use_h ? &h_in_p : &e_in_p;
    const int k = rows.length();
    std::vector<int> perm(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
    QVec det;
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
        QVec term{{Partition{}, inversions % 2 ? -1 : 1}};
        bool zero = false;
        for (int i = 0; i < k && !zero; ++i) {
            const int idx = rows[i] - i + perm[static_cast<std::size_t>(i)];
            if (idx < 0) {
                zero = true;
                break;
            }
            term = qmul(term, gen(idx));
        }
        if (zero) continue;
        for (const auto& [l, c] : term) qadd(det, l, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// p_k * m_mu in the monomial basis.
QVec mul_pk_m(int k, const QVec& mvec) {
    QVec r;
    for (const auto& [mu, c] : mvec) {
        std::vector<int> values{0};
        for (int v : mu.parts())
            if (values.back() != v) values.push_back(v);
        for (int v : values) {
            std::vector<int> parts = mu.parts();
            if (v == 0)
                parts.push_back(k);
            else
                *std::find(parts.begin(), parts.end(), v) = v + k;
            std::sort(parts.rbegin(), parts.rend());
            const long mult = std::count(parts.begin(), parts.end(), v + k);
            qadd(r, Partition(std::move(parts)), c * mult);
        }
    }
    return r;
}

Matrix invert(Matrix a) {
    const std::size_t n = a.size();
    Matrix inv(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw Error("internal", "singular transition matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const mpq_class p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const mpq_class f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                if (a[col][j] != 0) a[r][j] -= f * a[col][j];
                if (inv[col][j] != 0) inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

struct Table {
    std::vector<Partition> index;
    std::map<Partition, std::size_t> pos;
    Matrix to_p;    // row lambda: basis element in p
    Matrix from_p;  // row rho: p_rho in the basis
};

std::shared_ptr<const Table> build_table(Basis b, int d) {
    auto t = std::make_shared<Table>();
    t->index = partitions_of(d, d);
    for (std::size_t i = 0; i < t->index.size(); ++i) t->pos[t->index[i]] = i;
    const std::size_t n = t->index.size();
    auto to_row = [&](const QVec& v) {
        std::vector<mpq_class> row(n, 0);
        for (const auto& [l, c] : v) row[t->pos.at(l)] = c;
        return row;
    };
    if (b == Basis::m) {
        for (const auto& rho : t->index) {
            QVec m{{Partition{}, 1}};
            for (int part : rho.parts()) m = mul_pk_m(part, m);
            t->from_p.push_back(to_row(m));
        }
        t->to_p = invert(t->from_p);
        return t;
    }
    for (const auto& lambda : t->index) {
        switch (b) {
            case Basis::h: t->to_p.push_back(to_row(product_of(lambda, &h_in_p))); break;
            case Basis::e: t->to_p.push_back(to_row(product_of(lambda, &e_in_p))); break;
            case Basis::s: t->to_p.push_back(to_row(jacobi_trudi(lambda))); break;
            default: throw Error("config", "no classical table for basis " + basis_name(b));
        }
    }
    t->from_p = invert(t->to_p);
    return t;
}

const Table& table(Basis b, int d) {
    static std::mutex mu;
    static std::map<std::pair<Basis, int>, std::shared_ptr<const Table>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({b, d});
        if (it != cache.end()) return *it->second;
    }
    auto t = build_table(b, d);
    std::lock_guard lock(mu);
    auto [it, inserted] = cache.emplace(std::make_pair(b, d), std::move(t));
    return *it->second;
}

bool is_classical(Basis b) { return b == Basis::m || b == Basis::h || b == Basis::e || b == Basis::s; }

SymFunc into_p(const SymFunc& f) {
    if (f.basis() == Basis::p) return f;
    SymFunc out(Basis::p);
    for (const auto& [lambda, c] : f.terms()) {
        check_degree(lambda.size());
        if (is_classical(f.basis())) {
            const Table& t = table(f.basis(), lambda.size());
            const auto& row = t.to_p[t.pos.at(lambda)];
            for (std::size_t j = 0; j < row.size(); ++j)
                if (row[j] != 0) out.add_term(t.index[j], c * RF(row[j]));
        } else if (f.basis() == Basis::HallLittlewoodP) {
            out += hl_P(lambda) * c;
        } else {
            out += hl_Q(lambda) * c;
        }
    }
    return out;
}

SymFunc out_of_p(const SymFunc& g, Basis target) {
    if (target == Basis::p) return g;
    SymFunc out(target);
    if (is_classical(target)) {
        for (const auto& [rho, c] : g.terms()) {
            check_degree(rho.size());
            const Table& t = table(target, rho.size());
            const auto& row = t.from_p[t.pos.at(rho)];
            for (std::size_t j = 0; j < row.size(); ++j)
                if (row[j] != 0) out.add_term(t.index[j], c * RF(row[j]));
        }
        return out;
    }
    // Q_lambda is dual to P_lambda under the infinite-variable product.
    for (int d : g.degrees()) {
        check_degree(d);
        const SymFunc gd = g.homogeneous_component(d);
        for (const auto& lambda : partitions_of(d, d)) {
            const SymFunc& dual = target == Basis::HallLittlewoodP ? hl_Q(lambda) : hl_P(lambda);
            out.add_term(lambda, hl_inner(gd, dual));
        }
    }
    return out;
}

}  // namespace

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    return out_of_p(into_p(f), target);
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    const SymFunc a = to_p(f);
    const SymFunc b = to_p(g);
    SymFunc r(Basis::p);
    if (a.is_zero() || b.is_zero()) return r;
    check_degree(a.degree() + b.degree());
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms()) r.add_term(merge(la, lb), ca * cb);
    return r;
}

mpz_class zee(const Partition& rho) {
    mpz_class z = 1;
    for (auto [i, mi] : multiplicities(rho, rho.length())) {
        if (i == 0) continue;
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(mi));
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(mi));
        z *= f * pw;
    }
    return z;
}

const RF& hl_power_norm(const Partition& rho) {
    static std::mutex mu;
    static std::map<Partition, RF> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(rho);
    if (it != cache.end()) return it->second;
    IntPoly den(1);
    for (int part : rho.parts()) den = den * (IntPoly(1) - IntPoly::monomial(1, part));
    return cache.emplace(rho, RF(IntPoly(zee(rho)), den)).first->second;
}

RF hl_inner(const SymFunc& f, const SymFunc& g) {
    const SymFunc a = to_p(f);
    const SymFunc b = to_p(g);
    const SymFunc& small = a.terms().size() <= b.terms().size() ? a : b;
    const SymFunc& large = &small == &a ? b : a;
    RF acc;
    for (const auto& [rho, c] : small.terms()) {
        auto it = large.terms().find(rho);
        if (it == large.terms().end()) continue;
        acc += c * it->second * hl_power_norm(rho);
    }
    return acc;
}

XLaurent<RF> to_finite_vars(const SymFunc& f, int n, bool inverted) {
    if (n < 1) throw Error("domain", "need at least one variable");
    XLaurent<RF> out(n);
    const SymFunc g = to_p(f);
    std::map<int, XLaurent<RF>> power_sums;
    auto power_sum = [&](int k) -> const XLaurent<RF>& {
        auto it = power_sums.find(k);
        if (it != power_sums.end()) return it->second;
        XLaurent<RF> pk(n);
        for (int i = 0; i < n; ++i) {
            ExponentVector e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = inverted ? -k : k;
            pk.add_term(std::move(e), RF(1));
        }
        return power_sums.emplace(k, std::move(pk)).first->second;
    };
    for (const auto& [lambda, c] : g.terms()) {
        auto term = XLaurent<RF>::monomial(n, ExponentVector(static_cast<std::size_t>(n), 0), c);
        for (int part : lambda.parts()) term = term * power_sum(part);
        out += term;
    }
    return out;
}

RF hl_inner_finite(const SymFunc& f, const SymFunc& g, int n) {
    // (f, g)_{z,n} = (1/n!) CT f(X) g(Xbar) prod_{i != j} (1 - x_i/x_j)/(1 - z x_i/x_j).
    // Symmetrizing the positive-root half of the kernel turns this into
    //   (1-z)^n / [n]_z * CT f(X) g(Xbar) prod_{i<j} (1 - x_i/x_j)/(1 - z x_i/x_j),
    // where each geometric series in z x_i/x_j only moves exponents up the
    // height h(alpha) = sum_i (n-1-i) alpha_i, so finitely many terms reach
    // the constant term.
    XLaurent<RF> F = to_finite_vars(f, n, false) * to_finite_vars(g, n, true);
    auto unit = [n](int i, int j, int k) {
        ExponentVector e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] += k;
        e[static_cast<std::size_t>(j)] -= k;
        return e;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            XLaurent<RF> factor(n);
            factor.add_term(ExponentVector(static_cast<std::size_t>(n), 0), RF(1));
            factor.add_term(unit(i, j, 1), RF(-1));
            F = F * factor;
        }
    auto height = [n](const ExponentVector& e) {
        long h = 0;
        for (int i = 0; i < n; ++i) h += static_cast<long>(n - 1 - i) * e[static_cast<std::size_t>(i)];
        return h;
    };
    long needed = 0;
    for (const auto& [e, c] : F.terms()) needed = std::max(needed, -height(e));
    F.prune([&](const ExponentVector& e) { return height(e) <= 0; });
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            XLaurent<RF> geo(n);
            for (long k = 0; k * (j - i) <= needed; ++k)
                geo.add_term(unit(i, j, static_cast<int>(k)), RF::z_power(static_cast<int>(k)));
            F = F * geo;
            F.prune([&](const ExponentVector& e) { return height(e) <= 0; });
        }
    for (const auto& [e, c] : F.terms())
        if (height(e) > 0) throw Error("internal", "constant-term height bound violated");
    RF ct = constant_term(F, RF());
    RF prefactor = RF(IntPoly(1) - IntPoly::monomial(1, 1));
    RF pw(1);
    for (int i = 0; i < n; ++i) pw *= prefactor;
    return ct * pw / RF::q_bracket(n);
}

UniSeries principal_spec(const SymFunc& f, int order) {
    UniSeries out(order);
    const SymFunc g = to_p(f);
    for (const auto& [lambda, c] : g.terms()) {
        if (!c.is_constant())
            throw Error("domain", "principal specialization needs z-free coefficients");
        UniSeries term(order);
        term[0] = c.constant_value();
        for (int part : lambda.parts()) {
            UniSeries geo(order);
            for (int k = 0; k <= order; k += part) geo[k] = 1;
            term = term * geo;
        }
        out += term;
    }
    return out;
}

}  // namespace hlchi

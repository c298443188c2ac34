#include "hlchi/ratfunc.hpp"

#include <algorithm>
#include <utility>

#include "hlchi/error.hpp"

namespace hlchi {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(long c) {
    if (c != 0) c_.emplace_back(c);
}

IntPoly::IntPoly(const mpz_class& c) {
    if (c != 0) c_.push_back(c);
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const mpz_class& c, int degree) {
    IntPoly p;
    if (c == 0) return p;
    p.c_.assign(static_cast<std::size_t>(degree) + 1, 0);
    p.c_.back() = c;
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int IntPoly::valuation() const noexcept {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

int IntPoly::term_count() const noexcept {
    return static_cast<int>(std::count_if(c_.begin(), c_.end(), [](const mpz_class& v) { return v != 0; }));
}

mpz_class IntPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return c_[static_cast<std::size_t>(k)];
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (g == 1) return *this;
    IntPoly r = *this;
    for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return r;
}

IntPoly IntPoly::compose_power(int k) const {
    if (k == 1 || is_constant()) return *this;
    IntPoly r;
    r.c_.assign(static_cast<std::size_t>(degree() * k) + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * static_cast<std::size_t>(k)] = c_[i];
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    r.trim();
    return r;
}

IntPoly operator*(IntPoly a, const mpz_class& s) {
    if (s == 0) return {};
    for (auto& v : a.c_) v *= s;
    return a;
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw Error("domain", "polynomial division by zero");
    if (a.is_zero()) return {};
    if (b.is_constant()) {
        IntPoly q = a;
        for (auto& v : q.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), b.c_[0].get_mpz_t());
        return q;
    }
    std::vector<mpz_class> rem = a.c_;
    const int db = b.degree();
    const int dq = a.degree() - db;
    if (dq < 0) throw Error("internal", "inexact polynomial division");
    std::vector<mpz_class> q(static_cast<std::size_t>(dq) + 1, 0);
    for (int k = dq; k >= 0; --k) {
        mpz_class& top = rem[static_cast<std::size_t>(k + db)];
        if (top == 0) continue;
        mpz_class c;
        if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t()))
            throw Error("internal", "inexact polynomial division");
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
        for (int j = 0; j <= db; ++j)
            mpz_submul(rem[static_cast<std::size_t>(k + j)].get_mpz_t(), c.get_mpz_t(),
                       b.c_[static_cast<std::size_t>(j)].get_mpz_t());
        q[static_cast<std::size_t>(k)] = std::move(c);
    }
    for (const auto& v : rem)
        if (v != 0) throw Error("internal", "inexact polynomial division");
    return IntPoly(std::move(q));
}

namespace {

// Pseudo-remainder of a by b, up to a nonzero constant factor.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const int db = b.degree();
    const mpz_class& lb = b.leading();
    std::vector<mpz_class> r = a.coeffs();
    int dr = static_cast<int>(r.size()) - 1;
    while (dr >= db) {
        mpz_class lr = r[static_cast<std::size_t>(dr)];
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lr.get_mpz_t(), lb.get_mpz_t());
        mpz_class ma = lb / g;
        mpz_class mb = lr / g;
        for (auto& v : r) v *= ma;
        for (int j = 0; j <= db; ++j)
            mpz_submul(r[static_cast<std::size_t>(dr - db + j)].get_mpz_t(), mb.get_mpz_t(),
                       b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
        while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
        r.resize(static_cast<std::size_t>(dr + 1));
    }
    return IntPoly(std::move(r));
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero() || b.is_zero()) {
        IntPoly r = a.is_zero() ? b : a;
        return r.leading() < 0 ? -r : r;
    }
    mpz_class c;
    const mpz_class ca = a.content();
    const mpz_class cb = b.content();
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.is_constant() || b.is_constant()) return IntPoly(c);

    IntPoly x = a.primitive_part();
    IntPoly y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.is_constant()) {
            x = IntPoly(1);
            break;
        }
        IntPoly r = pseudo_remainder(x, y);
        x = std::move(y);
        y = r.primitive_part();
    }
    x = x.primitive_part();
    if (x.leading() < 0) x = -x;
    return x * c;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const mpz_class& v = c_[k];
        if (v == 0) continue;
        mpz_class mag = abs(v);
        if (v < 0)
            s += "-";
        else if (!first)
            s += "+";
        first = false;
        if (k == 0) {
            s += mag.get_str();
            continue;
        }
        if (mag != 1) s += mag.get_str() + "*";
        s += var;
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
}

// ---------------------------------------------------------------- UniSeries

UniSeries& UniSeries::operator+=(const UniSeries& o) {
    const int n = std::min(order(), o.order());
    coeffs.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) (*this)[k] += o[k];
    return *this;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
    const int n = std::min(a.order(), b.order());
    UniSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

UniSeries operator*(UniSeries a, const mpq_class& s) {
    for (auto& v : a.coeffs) v *= s;
    return a;
}

// ---------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const mpq_class& c) : num_(c.get_num()), den_(c.get_den()) {}

RationalFunction::RationalFunction(IntPoly num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("domain", "rational function with zero denominator");
    normalize();
}

RationalFunction RationalFunction::z_power(int k) {
    if (k >= 0) return RationalFunction(IntPoly::monomial(1, k));
    RationalFunction r;
    r.num_ = IntPoly(1);
    r.den_ = IntPoly::monomial(1, -k);
    return r;
}

RationalFunction RationalFunction::q_bracket(int k) {
    IntPoly p(1);
    for (int j = 1; j <= k; ++j) p = p * (IntPoly(1) - IntPoly::monomial(1, j));
    return RationalFunction(std::move(p));
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    if (den_.is_constant() && den_.coeffs()[0] == 1) return;
    IntPoly g = gcd(num_, den_);
    if (!(g.is_constant() && g.coeffs()[0] == 1)) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

mpq_class RationalFunction::constant_value() const {
    mpq_class q(num_.coeff(0), den_.coeff(0));
    q.canonicalize();
    return q;
}

bool RationalFunction::is_integer_polynomial() const {
    return den_.is_constant() && den_.coeffs()[0] == 1;
}

RationalFunction RationalFunction::adams(int k) const {
    if (k == 1) return *this;
    RationalFunction r;
    r.num_ = num_.compose_power(k);
    r.den_ = den_.compose_power(k);
    return r;  // substitution preserves coprimality and leading sign
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!is_integer_polynomial()) normalize();
        else if (num_.is_zero()) den_ = IntPoly(1);
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero() || o.is_zero()) return *this = RationalFunction();
    if (is_integer_polynomial() && o.is_integer_polynomial()) {
        num_ = num_ * o.num_;
        return *this;
    }
    // Cross-cancel so the product stays coprime.
    IntPoly g1 = gcd(num_, o.den_);
    IntPoly g2 = gcd(o.num_, den_);
    IntPoly n1 = divexact(num_, g1), d2 = divexact(o.den_, g1);
    IntPoly n2 = divexact(o.num_, g2), d1 = divexact(den_, g2);
    num_ = n1 * n2;
    den_ = d1 * d2;
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw Error("domain", "division by zero rational function");
    RationalFunction inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_.leading() < 0) {
        inv.num_ = -inv.num_;
        inv.den_ = -inv.den_;
    }
    return *this *= inv;
}

bool RationalFunction::equals_cross(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::string RationalFunction::to_string(const std::string& var) const {
    auto wrap = [&](const IntPoly& p) {
        std::string s = p.to_string(var);
        bool bare = p.term_count() == 1 && (p.is_constant() || abs(p.coeffs()[static_cast<std::size_t>(p.degree())]) == 1) &&
                    p.leading() > 0;
        return bare ? s : "(" + s + ")";
    };
    if (den_.is_constant() && den_.coeffs()[0] == 1) return num_.to_string(var);
    // Display with the lowest denominator coefficient positive: 1/(1-z), not -1/(-1+z).
    const bool flip = den_.coeff(den_.valuation()) < 0;
    const IntPoly num = flip ? num_ * mpz_class(-1) : num_;
    const IntPoly den = flip ? den_ * mpz_class(-1) : den_;
    std::string n = num.term_count() == 1 ? num.to_string(var) : "(" + num.to_string(var) + ")";
    return n + "/" + wrap(den);
}

// ---------------------------------------------------------------- expansion

UniSeries rf_expand(const RationalFunction& r, int order) {
    const IntPoly& den = r.denominator();
    const IntPoly& num = r.numerator();
    if (den.coeff(0) == 0)
        throw Error("not-expandable", "rational function " + r.to_string() + " is not expandable at the origin");
    UniSeries s(order);
    const mpq_class d0(den.coeff(0));
    for (int k = 0; k <= order; ++k) {
        mpq_class acc(num.coeff(k));
        for (int j = 1; j <= std::min(k, den.degree()); ++j) acc -= mpq_class(den.coeff(j)) * s[k - j];
        s[k] = acc / d0;
    }
    return s;
}

mpq_class LaurentExpansion::coeff(int k) const {
    const int idx = k - valuation;
    if (idx < 0 || idx >= static_cast<int>(coeffs.size())) return 0;
    return coeffs[static_cast<std::size_t>(idx)];
}

LaurentExpansion rf_laurent_expand(const RationalFunction& r, int hi) {
    LaurentExpansion out;
    if (r.is_zero()) return out;
    const int nv = r.numerator().valuation();
    const int dv = r.denominator().valuation();
    out.valuation = nv - dv;
    if (hi < out.valuation) return out;
    auto shift_down = [](const IntPoly& p, int v) {
        std::vector<mpz_class> c(p.coeffs().begin() + v, p.coeffs().end());
        return IntPoly(std::move(c));
    };
    RationalFunction reduced(shift_down(r.numerator(), nv), shift_down(r.denominator(), dv));
    UniSeries s = rf_expand(reduced, hi - out.valuation);
    out.coeffs = std::move(s.coeffs);
    return out;
}

}  // namespace hlchi

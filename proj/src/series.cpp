#include "hlchi/series.hpp"

#include <algorithm>
#include <sstream>

#include "hlchi/error.hpp"

namespace hlchi {

namespace {
const mpq_class kZero = 0;
}

BiSeries::BiSeries(int order) : order_(order), c_(static_cast<std::size_t>((order + 1) * (order + 1)), 0) {
    if (order < 0) throw Error("domain", "negative truncation order");
}

BiSeries BiSeries::one(int order) { return monomial(order, 0, 0, 1); }

BiSeries BiSeries::monomial(int order, int a, int b, const mpq_class& c) {
    BiSeries s(order);
    s.add_term(a, b, c);
    return s;
}

BiSeries BiSeries::from_z1(int order, const UniSeries& s) {
    BiSeries r(order);
    for (int a = 0; a <= std::min(order, s.order()); ++a) r.add_term(a, 0, s[a]);
    return r;
}

BiSeries BiSeries::from_z2(int order, const UniSeries& s) {
    BiSeries r(order);
    for (int b = 0; b <= std::min(order, s.order()); ++b) r.add_term(0, b, s[b]);
    return r;
}

bool BiSeries::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](const mpq_class& v) { return v == 0; });
}

const mpq_class& BiSeries::coeff(int a, int b) const {
    if (a < 0 || b < 0 || a > order_ || b > order_) return kZero;
    return c_[idx(a, b)];
}

void BiSeries::add_term(int a, int b, const mpq_class& c) {
    if (a < 0 || b < 0 || a > order_ || b > order_) return;
    c_[idx(a, b)] += c;
}

std::vector<std::tuple<int, int, mpq_class>> BiSeries::terms() const {
    std::vector<std::tuple<int, int, mpq_class>> out;
    for (int a = 0; a <= order_; ++a)
        for (int b = 0; b <= order_; ++b)
            if (c_[idx(a, b)] != 0) out.emplace_back(a, b, c_[idx(a, b)]);
    return out;
}

BiSeries BiSeries::swapped() const {
    BiSeries r(order_);
    for (int a = 0; a <= order_; ++a)
        for (int b = 0; b <= order_; ++b) r.c_[r.idx(b, a)] = c_[idx(a, b)];
    return r;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
    if (o.order_ != order_) throw Error("domain", "BiSeries order mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
    if (o.order_ != order_) throw Error("domain", "BiSeries order mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

BiSeries& BiSeries::operator*=(const mpq_class& s) {
    for (auto& v : c_) v *= s;
    return *this;
}

BiSeries operator*(const BiSeries& x, const BiSeries& y) {
    if (x.order_ != y.order_) throw Error("domain", "BiSeries order mismatch");
    const int d = x.order_;
    BiSeries r(d);
    for (int a = 0; a <= d; ++a)
        for (int b = 0; b <= d; ++b) {
            const mpq_class& u = x.c_[x.idx(a, b)];
            if (u == 0) continue;
            for (int c = 0; a + c <= d; ++c)
                for (int e = 0; b + e <= d; ++e) {
                    const mpq_class& v = y.c_[y.idx(c, e)];
                    if (v == 0) continue;
                    r.c_[r.idx(a + c, b + e)] += u * v;
                }
        }
    return r;
}

// ------------------------------------------------------------ LaurentBiSeries

LaurentBiSeries::LaurentBiSeries(int a_lo, int a_hi, int b_lo, int b_hi)
    : a_lo_(a_lo), a_hi_(a_hi), b_lo_(b_lo), b_hi_(b_hi) {}

mpq_class LaurentBiSeries::coeff(int a, int b) const {
    auto it = c_.find({a, b});
    return it == c_.end() ? mpq_class(0) : it->second;
}

void LaurentBiSeries::add_term(int a, int b, const mpq_class& c) {
    if (!in_window(a, b) || c == 0) return;
    auto [it, inserted] = c_.try_emplace({a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

LaurentBiSeries& LaurentBiSeries::operator+=(const LaurentBiSeries& o) {
    for (const auto& [k, v] : o.c_) add_term(k.first, k.second, v);
    return *this;
}

LaurentBiSeries operator*(const LaurentBiSeries& x, const LaurentBiSeries& y) {
    LaurentBiSeries r(std::max(x.a_lo_, y.a_lo_), std::min(x.a_hi_, y.a_hi_), std::max(x.b_lo_, y.b_lo_),
                      std::min(x.b_hi_, y.b_hi_));
    // The result window is the intersection; terms outside it are dropped,
    // which is sound only when both factors' windows cover every exponent
    // that can land inside it.
    for (const auto& [k1, v1] : x.c_)
        for (const auto& [k2, v2] : y.c_) r.add_term(k1.first + k2.first, k1.second + k2.second, v1 * v2);
    return r;
}

bool LaurentBiSeries::has_negative_terms() const {
    return std::any_of(c_.begin(), c_.end(), [](const auto& kv) { return kv.first.first < 0 || kv.first.second < 0; });
}

BiSeries LaurentBiSeries::finalize(int order) const {
    BiSeries out(order);
    for (const auto& [k, v] : c_) {
        if (k.first < 0 || k.second < 0) {
            std::ostringstream msg;
            msg << "negative exponent in final series: z1^" << k.first << " z2^" << k.second << " has coefficient "
                << v.get_str();
            throw Error("negative-exponent", msg.str());
        }
        out.add_term(k.first, k.second, v);
    }
    return out;
}

}  // namespace hlchi

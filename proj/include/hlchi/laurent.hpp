#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hlchi/error.hpp"

namespace hlchi {

using ExponentVector = std::vector<int>;

/// Laurent polynomial in x_1..x_n with coefficients in a ring C (a
/// RationalFunction or a BiSeries). The support is finite and iterated in
/// sorted exponent order.
template <class C>
class XLaurent {
public:
    explicit XLaurent(int nvars) : nvars_(nvars) {}

    static XLaurent monomial(int nvars, ExponentVector e, C c) {
        XLaurent r(nvars);
        r.add_term(std::move(e), std::move(c));
        return r;
    }

    int nvars() const noexcept { return nvars_; }
    const std::map<ExponentVector, C>& terms() const noexcept { return terms_; }
    std::size_t support_size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(ExponentVector e, const C& c) {
        if (static_cast<int>(e.size()) != nvars_) throw Error("domain", "exponent vector length mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    XLaurent& operator+=(const XLaurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    friend XLaurent operator+(XLaurent a, const XLaurent& b) { return a += b; }

    friend XLaurent operator*(const XLaurent& a, const XLaurent& b) {
        if (a.nvars_ != b.nvars_) throw Error("domain", "variable count mismatch");
        XLaurent r(a.nvars_);
        ExponentVector e(static_cast<std::size_t>(a.nvars_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    /// Drops every term whose exponent vector fails the predicate.
    void prune(const std::function<bool(const ExponentVector&)>& keep) {
        std::erase_if(terms_, [&](const auto& kv) { return !keep(kv.first); });
    }

    /// Applies f to every coefficient.
    template <class D, class F>
    XLaurent<D> map_coefficients(F&& f) const {
        XLaurent<D> r(nvars_);
        for (const auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

private:
    int nvars_;
    std::map<ExponentVector, C> terms_;
};

/// Sum of the coefficients of all x^alpha with alpha >= 0 componentwise: the
/// constant term against Omega(Xbar) = prod_i (1 - 1/x_i)^{-1} expanded in
/// powers of 1/x_i.
template <class C>
C constant_term_nonneg(const XLaurent<C>& f, C zero) {
    for (const auto& [e, c] : f.terms()) {
        bool nonneg = true;
        for (int v : e)
            if (v < 0) {
                nonneg = false;
                break;
            }
        if (nonneg) zero += c;
    }
    return zero;
}

/// Coefficient of x^0.
template <class C>
C constant_term(const XLaurent<C>& f, C zero) {
    auto it = f.terms().find(ExponentVector(static_cast<std::size_t>(f.nvars()), 0));
    return it == f.terms().end() ? zero : it->second;
}

}  // namespace hlchi

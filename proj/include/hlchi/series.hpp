#pragma once

#include <gmpxx.h>

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "hlchi/ratfunc.hpp"

namespace hlchi {

/// Truncated power series in z1, z2 with exact rational coefficients. The
/// window is the box 0 <= a, b <= order (a per-variable cap, not total degree).
class BiSeries {
public:
    explicit BiSeries(int order = 0);

    static BiSeries one(int order);
    static BiSeries monomial(int order, int a, int b, const mpq_class& c = 1);
    /// Embeds a univariate series in z1 (b = 0) or z2 (a = 0).
    static BiSeries from_z1(int order, const UniSeries& s);
    static BiSeries from_z2(int order, const UniSeries& s);

    int order() const noexcept { return order_; }
    bool is_zero() const noexcept;

    const mpq_class& coeff(int a, int b) const;
    /// Adds c to the (a, b) coefficient; silently ignored outside the window.
    void add_term(int a, int b, const mpq_class& c);

    /// Nonzero coefficients as (a, b, value), sorted by (a, b).
    std::vector<std::tuple<int, int, mpq_class>> terms() const;

    /// The z1 <-> z2 swap.
    BiSeries swapped() const;

    BiSeries& operator+=(const BiSeries& o);
    BiSeries& operator-=(const BiSeries& o);
    BiSeries& operator*=(const mpq_class& s);
    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(BiSeries a, const mpq_class& s) { return a *= s; }
    bool operator==(const BiSeries& o) const = default;

private:
    std::size_t idx(int a, int b) const noexcept {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(order_ + 1) + static_cast<std::size_t>(b);
    }
    int order_;
    std::vector<mpq_class> c_;
};

/// Bivariate Laurent series over an explicit exponent window
/// [a_lo, a_hi] x [b_lo, b_hi]; used for intermediate expansions that may
/// carry negative exponents before they cancel.
class LaurentBiSeries {
public:
    LaurentBiSeries(int a_lo, int a_hi, int b_lo, int b_hi);

    int a_lo() const noexcept { return a_lo_; }
    int a_hi() const noexcept { return a_hi_; }
    int b_lo() const noexcept { return b_lo_; }
    int b_hi() const noexcept { return b_hi_; }

    mpq_class coeff(int a, int b) const;
    void add_term(int a, int b, const mpq_class& c);
    const std::map<std::pair<int, int>, mpq_class>& terms() const noexcept { return c_; }

    LaurentBiSeries& operator+=(const LaurentBiSeries& o);
    friend LaurentBiSeries operator*(const LaurentBiSeries& x, const LaurentBiSeries& y);

    /// True if some nonzero term has a negative exponent.
    bool has_negative_terms() const;
    /// Restricts to the nonnegative box of the given order; throws
    /// Error("negative-exponent") if any negative-exponent term is nonzero.
    BiSeries finalize(int order) const;

private:
    bool in_window(int a, int b) const noexcept {
        return a >= a_lo_ && a <= a_hi_ && b >= b_lo_ && b <= b_hi_;
    }
    int a_lo_, a_hi_, b_lo_, b_hi_;
    std::map<std::pair<int, int>, mpq_class> c_;
};

}  // namespace hlchi

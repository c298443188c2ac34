#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hlchi {

/// Dense polynomial in one variable with integer coefficients, ascending
/// powers, no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long c);  // NOLINT(google-explicit-constructor)
    IntPoly(const mpz_class& c);  // NOLINT(google-explicit-constructor)
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly monomial(const mpz_class& c, int degree);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
    int valuation() const noexcept;
    /// Number of nonzero coefficients.
    int term_count() const noexcept;

    const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
    mpz_class coeff(int k) const;
    const mpz_class& leading() const { return c_.back(); }

    mpz_class content() const;
    IntPoly primitive_part() const;
    /// Substitutes z -> z^k.
    IntPoly compose_power(int k) const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const mpz_class& s);
    bool operator==(const IntPoly& o) const = default;

    /// Exact quotient a / b; b must divide a in Z[z].
    friend IntPoly divexact(const IntPoly& a, const IntPoly& b);
    /// Primitive gcd with positive leading coefficient, times gcd of contents.
    friend IntPoly gcd(const IntPoly& a, const IntPoly& b);

    std::string to_string(const std::string& var = "z") const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

/// Truncated univariate power series with rational coefficients.
struct UniSeries {
    std::vector<mpq_class> coeffs;  // size order + 1

    explicit UniSeries(int order = 0) : coeffs(static_cast<std::size_t>(order) + 1, 0) {}
    int order() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    const mpq_class& operator[](int k) const { return coeffs[static_cast<std::size_t>(k)]; }
    mpq_class& operator[](int k) { return coeffs[static_cast<std::size_t>(k)]; }

    UniSeries& operator+=(const UniSeries& o);
    friend UniSeries operator+(UniSeries a, const UniSeries& b) { return a += b; }
    friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
    friend UniSeries operator*(UniSeries a, const mpq_class& s);
    bool operator==(const UniSeries& o) const = default;
};

/// Exact ratio of integer polynomials in one parameter, kept in canonical
/// form: coprime in Z[z], denominator with positive leading coefficient.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(const mpq_class& c);  // NOLINT(google-explicit-constructor)
    RationalFunction(IntPoly num);  // NOLINT(google-explicit-constructor)
    RationalFunction(IntPoly num, IntPoly den);

    /// z^k for any integer k.
    static RationalFunction z_power(int k);
    /// The q-bracket [k]_z = prod_{j=1..k} (1 - z^j).
    static RationalFunction q_bracket(int k);

    const IntPoly& numerator() const noexcept { return num_; }
    const IntPoly& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    /// Only valid when is_constant().
    mpq_class constant_value() const;
    /// True when the rational function is a polynomial with integer coefficients.
    bool is_integer_polynomial() const;

    /// Substitutes z -> z^k (k >= 1).
    RationalFunction adams(int k) const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    /// Canonical-form equality.
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    /// Equality by cross-multiplication.
    bool equals_cross(const RationalFunction& o) const;

    /// "1/(1-z)", "(1-z)*..." style rendering.
    std::string to_string(const std::string& var = "z") const;

private:
    void normalize();
    IntPoly num_;
    IntPoly den_;
};

/// First D+1 Taylor coefficients at the origin. Throws Error("not-expandable")
/// if the denominator vanishes at zero.
UniSeries rf_expand(const RationalFunction& r, int order);

/// Laurent expansion at the origin: returns the valuation v (lowest possible
/// exponent, may be negative) and coefficients of z^v .. z^hi.
struct LaurentExpansion {
    int valuation = 0;
    std::vector<mpq_class> coeffs;
    mpq_class coeff(int k) const;
};
LaurentExpansion rf_laurent_expand(const RationalFunction& r, int hi);

}  // namespace hlchi

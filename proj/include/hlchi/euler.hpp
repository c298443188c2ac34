#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "hlchi/character.hpp"
#include "hlchi/partition.hpp"
#include "hlchi/series.hpp"
#include "hlchi/symfunc.hpp"

namespace hlchi {

/// Orientation of fixed-point data: Row puts diagram rows along z1,
/// Col along z2.
enum class Convention { Row, Col };

/// Orientation under which localization reproduces the partition-function
/// product for f = 1 (see tests/test_euler.cpp, calibration case).
inline constexpr Convention kCalibratedConvention = Convention::Row;

enum class Method { Localization, ConstantTerm, Theorem };

std::string method_name(Method m);
std::string convention_name(Convention c);

/// Torus characters of the tautological fiber and of the cotangent space at
/// the monomial ideal indexed by mu.
struct FixedPointData {
    Partition mu;
    VirtualCharacter taut_char;
    VirtualCharacter cotangent_char;
};

FixedPointData fixed_point_data(const Partition& mu, Convention convention = kCalibratedConvention);

/// Series in z2 (outermost) truncated at the given order whose coefficients
/// are exact rational functions of z1.
class WedgeSeries {
public:
    explicit WedgeSeries(int order) : order_(order) {}
    static WedgeSeries constant(int order, const RF& c);
    /// c * z1^p * z2^q.
    static WedgeSeries monomial(int order, int p, int q, const RF& c = RF(1));

    int order() const noexcept { return order_; }
    RF coeff(int b) const;
    const std::map<int, RF>& terms() const noexcept { return c_; }
    void add_term(int b, const RF& c);

    WedgeSeries& operator+=(const WedgeSeries& o);
    WedgeSeries& operator*=(const RF& c);
    friend WedgeSeries operator+(WedgeSeries a, const WedgeSeries& b) { return a += b; }
    friend WedgeSeries operator*(const WedgeSeries& a, const WedgeSeries& b);
    friend WedgeSeries operator*(WedgeSeries a, const RF& c) { return a *= c; }

    /// Every coefficient's denominator is nonzero at z1 = 0.
    bool z1_holomorphic() const;
    /// Expands every coefficient in z1 up to the order, from the lowest valuation.
    LaurentBiSeries to_laurent() const;
    /// Throws Error("not-holomorphic") if some coefficient has a pole at z1 = 0.
    BiSeries to_biseries() const;

private:
    int order_;
    std::map<int, RF> c_;
};

/// Omega(A) = prod over monomials m of (1 - m)^{-mult}, each factor expanded
/// with z2 outermost: m = z1^p z2^q is small iff q > 0 (expanded as
/// sum m^k), large iff q < 0 (expanded as -sum_{k>=1} m^{-k}); q = 0 factors
/// stay exact rational functions of z1.
WedgeSeries omega(const VirtualCharacter& a, int order);

struct EulerResult {
    Method method = Method::Theorem;
    BiSeries series;
    int n = 0;
    int order = 0;
    std::string f;
    Convention convention = kCalibratedConvention;
    double seconds = 0;
    /// Theorem evaluator: summands whose z1 exponent was negative.
    long negative_exponent_terms = 0;
};

/// Sum over fixed points mu |- n of f(U_mu) * Omega(T*_mu).
EulerResult euler_localization(const SymFunc& f, int n, int order, Convention convention = kCalibratedConvention);

/// Constant-term (quiver) formula; refuses n > 3 unless allow_large_n.
EulerResult euler_constant_term(const SymFunc& f, int n, int order, bool allow_large_n = false);

/// sum_{mu,nu} z2^|mu| z1^{|mu| + k_{mu nu}} b_{nu,n}(z1)^{-1} f_{nu mu}(z1).
EulerResult euler_theorem(const SymFunc& f, int n, int order);

EulerResult run_method(Method m, const SymFunc& f, int n, int order, Convention convention = kCalibratedConvention);

/// Coefficients of q^0 .. q^max_n in prod_{0<=i,j<=order} (1 - z1^i z2^j q)^{-1}.
std::vector<BiSeries> partition_function(int max_n, int order);

struct CoefficientDiff {
    int a = 0;
    int b = 0;
    Method lhs_method = Method::Theorem;
    Method rhs_method = Method::Theorem;
    mpq_class lhs;
    mpq_class rhs;
};

struct CrossCheckReport {
    std::vector<EulerResult> results;
    std::vector<Method> skipped;
    bool agreement = true;
    std::vector<CoefficientDiff> diffs;
    bool nonnegativity_checked = false;
    /// (method, a, b) of negative or non-integral coefficients.
    std::vector<std::tuple<Method, int, int>> nonnegativity_violations;
    bool symmetry_checked = false;
    std::vector<std::tuple<Method, int, int>> symmetry_violations;

    bool pass() const {
        return agreement && nonnegativity_violations.empty() && symmetry_violations.empty();
    }
};

/// True when f is a nonnegative integer combination of Schur functions.
bool is_schur_positive(const SymFunc& f);

/// Runs the requested evaluators and compares them coefficient by
/// coefficient. The constant-term method is skipped (and listed) when n
/// exceeds its guard.
CrossCheckReport cross_check(const SymFunc& f, int n, int order, const std::vector<Method>& methods,
                             Convention convention = kCalibratedConvention);

}  // namespace hlchi

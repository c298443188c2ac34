#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>

#include "hlchi/laurent.hpp"
#include "hlchi/partition.hpp"
#include "hlchi/ratfunc.hpp"

namespace hlchi {

using RF = RationalFunction;

/// Bases of the ring of symmetric functions. HallLittlewoodP/Q carry the
/// Hall-Littlewood parameter as the variable of the coefficient field.
enum class Basis { p, m, h, e, s, HallLittlewoodP, HallLittlewoodQ };

/// "p", "m", "h", "e", "s", "P", "Q".
std::string basis_name(Basis b);
std::optional<Basis> basis_from_name(char c);

/// Sparse expansion of a symmetric function in one basis.
class SymFunc {
public:
    SymFunc() = default;
    explicit SymFunc(Basis b) : basis_(b) {}

    static SymFunc element(Basis b, const Partition& lambda, const RF& c = RF(1));
    static SymFunc constant(const RF& c);

    Basis basis() const noexcept { return basis_; }
    const std::map<Partition, RF>& terms() const noexcept { return terms_; }
    RF coeff(const Partition& lambda) const;
    void add_term(const Partition& lambda, const RF& c);

    bool is_zero() const noexcept { return terms_.empty(); }
    /// Largest |lambda| in the support; -1 for zero.
    int degree() const;
    std::set<int> degrees() const;
    SymFunc homogeneous_component(int d) const;
    /// True when every coefficient is a rational constant.
    bool is_z_free() const;

    SymFunc operator-() const;
    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const RF& c);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const RF& c) { return a *= c; }
    bool operator==(const SymFunc& o) const = default;

    /// "m[2] + (1-z)*m[1,1]"; terms by size, larger partitions first.
    std::string to_string(const std::string& var = "z") const;

private:
    Basis basis_ = Basis::p;
    std::map<Partition, RF> terms_;
};

/// Upper bound on the degree of any symmetric function handled; exceeding
/// it raises Error("degree-bound"). Defaults to 12.
int degree_bound();
void set_degree_bound(int d);
void check_degree(int d);

/// Re-expands f in the target basis, pivoting through power sums.
SymFunc convert(const SymFunc& f, Basis target);
inline SymFunc to_p(const SymFunc& f) { return convert(f, Basis::p); }

/// Product in the ring; the result is in the p-basis.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// z_rho = prod_i i^{m_i} m_i!.
mpz_class zee(const Partition& rho);

/// (p_rho, p_rho)_z = z_rho / prod_i (1 - z^{rho_i}).
const RF& hl_power_norm(const Partition& rho);

/// Infinite-variable Hall-Littlewood scalar product.
RF hl_inner(const SymFunc& f, const SymFunc& g);

/// n-variable Hall-Littlewood scalar product, evaluated as a constant term.
RF hl_inner_finite(const SymFunc& f, const SymFunc& g, int n);

/// f(x_1..x_n), or f(1/x_1..1/x_n) when inverted.
XLaurent<RF> to_finite_vars(const SymFunc& f, int n, bool inverted);

/// f(1, t, t^2, ...) truncated at the given order. f must be z-free.
UniSeries principal_spec(const SymFunc& f, int order);

}  // namespace hlchi

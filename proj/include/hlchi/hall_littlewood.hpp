#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

#include "hlchi/symfunc.hpp"

namespace hlchi {

/// Plethystic argument: (sum_j c_j x^{a_j} z^{b_j}) / (1 - z)^g. The symbol
/// x is a formal grading variable; z is the Hall-Littlewood parameter.
/// Covers 1, x, 1/x, x(1-z) and (1-z)^{-1}.
class PlethysticArg {
public:
    PlethysticArg() = default;
    static PlethysticArg monomial(long c, int x_exp, int z_exp);
    static PlethysticArg one() { return monomial(1, 0, 0); }
    static PlethysticArg x() { return monomial(1, 1, 0); }
    static PlethysticArg x_inverse() { return monomial(1, -1, 0); }
    /// x(1 - z), the argument of Jing's operator.
    static PlethysticArg x_one_minus_z() { return monomial(1, 1, 0) - monomial(1, 1, 1); }

    /// A / (1 - z).
    PlethysticArg over_one_minus_z() const;

    /// Adams evaluation A_k (every symbol s -> s^k), as a Laurent polynomial
    /// in x with coefficients in Q(z).
    std::map<int, RF> adams(int k) const;
    bool x_free() const;

    PlethysticArg operator-() const;
    friend PlethysticArg operator+(const PlethysticArg& a, const PlethysticArg& b);
    friend PlethysticArg operator-(const PlethysticArg& a, const PlethysticArg& b) { return a + (-b); }

private:
    std::map<std::pair<int, int>, long> terms_;
    int geometric_power_ = 0;
};

/// Family of p-basis symmetric functions indexed by x-degree.
using GradedSym = std::map<int, SymFunc>;

struct XWindow {
    int lo = 0;
    int hi = 0;
};

/// Gamma_-(A) f = exp(sum_k A_k p_k / k) f, restricted to x-degrees in the
/// window and symmetric-function degree <= max_degree.
GradedSym gamma_minus(const PlethysticArg& a, const SymFunc& f, XWindow window, int max_degree);

/// Gamma_+(A) f: the ring homomorphism p_k -> p_k + A_k.
GradedSym gamma_plus(const PlethysticArg& a, const SymFunc& f);

/// q_m = [x^m] Gamma_-(x(1-z)) 1, in the p-basis.
const SymFunc& jing_q(int m);

/// Jing's operator J_k = [x^k] Gamma_-(x(1-z)) Gamma_+^{-1}(1/x). Result in
/// the p-basis.
SymFunc jing_J(int k, const SymFunc& f);

/// b_lambda(z) = prod_{i>=1} [m_i(lambda)]_z.
RF b_norm(const Partition& lambda);
/// b_{lambda,n}(z) = b_lambda(z) [n - l(lambda)]_z.
RF b_norm_finite(const Partition& lambda, int n);

/// Cache of Hall-Littlewood Q and P functions in the p-basis. Built on
/// demand under a single-writer lock; readers share.
class HLTable {
public:
    static HLTable& global();

    const SymFunc& Q(const Partition& lambda);
    const SymFunc& P(const Partition& lambda);

private:
    std::shared_mutex mutex_;
    std::map<Partition, SymFunc> q_;
    std::map<Partition, SymFunc> p_;
};

/// Q_lambda = J_{lambda_1} ... J_{lambda_l} 1, p-basis.
inline const SymFunc& hl_Q(const Partition& lambda) { return HLTable::global().Q(lambda); }
/// P_lambda = Q_lambda / b_lambda, p-basis.
inline const SymFunc& hl_P(const Partition& lambda) { return HLTable::global().P(lambda); }

/// Coefficients c_lambda with f = sum c_lambda P_lambda (c_lambda = <f, Q_lambda>).
std::map<Partition, RF> expand_in_P(const SymFunc& f);

/// Coefficient of P_nu in f * P_mu.
RF matrix_element(const SymFunc& f, const Partition& nu, const Partition& mu);

/// psi_{mu,lambda}: coefficient of P_mu in h_{|mu|-|lambda|} P_lambda; zero
/// when |mu| < |lambda|. Throws Error("internal") if a nonzero value appears
/// with lambda not contained in mu.
RF psi(const Partition& mu, const Partition& lambda);

/// k_{mu nu} = sum_i C(mu'_i, 2) + C(nu'_i, 2) - mu'_i nu'_i.
long k_exponent(const Partition& mu, const Partition& nu);

/// The same exponent built from k_{00} = 0, symmetry and
/// k_{[a,mu] nu} - k_{mu nu} = |mu| - |nu| for a >= mu_1, nu_1.
long k_exponent_recursive(const Partition& mu, const Partition& nu);

struct LemmaCheck {
    Partition mu;
    Partition nu;
    long k = 0;
    RF lhs;
    RF rhs;
    bool pass = false;
};

/// Evaluates sum_lambda z^{-|lambda|} b_lambda psi_{mu lambda} psi_{nu lambda}
/// and compares it with z^{k_{mu nu}}.
LemmaCheck verify_lemma(const Partition& mu, const Partition& nu);

}  // namespace hlchi

#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

#include "hlchi/partition.hpp"
#include "hlchi/symfunc.hpp"

namespace hlchi {

/// Syntax tree of a symmetric-function expression such as "s[2,1]+2*s[1,1,1]".
struct FExpr {
    enum class Kind { Int, Atom, Add, Sub, Mul, Scale };

    Kind kind = Kind::Int;
    mpz_class value;          // Int literal, or the factor of Scale
    Basis basis = Basis::s;   // Atom
    Partition lambda;         // Atom
    std::vector<FExpr> args;  // two operands (Add/Sub/Mul) or one (Scale)

    static FExpr integer(const mpz_class& v);
    static FExpr atom(Basis b, const Partition& lambda);
    static FExpr binary(Kind k, FExpr lhs, FExpr rhs);
    static FExpr scale(const mpz_class& c, FExpr e);

    bool operator==(const FExpr& o) const;
};

/// Parses the expression grammar
///   expr := term (('+'|'-') term)*,  term := factor ('*' factor)*,
///   factor := INT | atom | '(' expr ')',  atom := B '[' INT (',' INT)* ']' | B '[]'
/// with B one of s p h e m P Q. An integer literal multiplied on the left
/// becomes Scale. Throws Error("parse") with the 0-based position.
FExpr parse_fexpr(const std::string& text);

/// Inverse of parse_fexpr: parse_fexpr(render_fexpr(t)) == t.
std::string render_fexpr(const FExpr& e);

/// Evaluates the tree. P and Q atoms carry the Hall-Littlewood parameter.
SymFunc elaborate(const FExpr& e);

/// parse_fexpr followed by elaborate.
SymFunc parse_symfunc(const std::string& text);

}  // namespace hlchi

#include "hlchi/fexpr.hpp"

#include <cctype>

#include "hlchi/error.hpp"
#include "hlchi/hall_littlewood.hpp"

namespace hlchi {

FExpr FExpr::integer(const mpz_class& v) {
    FExpr e;
    e.kind = Kind::Int;
    e.value = v;
    return e;
}

FExpr FExpr::atom(Basis b, const Partition& lambda) {
    FExpr e;
    e.kind = Kind::Atom;
    e.basis = b;
    e.lambda = lambda;
    return e;
}

FExpr FExpr::binary(Kind k, FExpr lhs, FExpr rhs) {
    FExpr e;
    e.kind = k;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
}

FExpr FExpr::scale(const mpz_class& c, FExpr inner) {
    FExpr e;
    e.kind = Kind::Scale;
    e.value = c;
    e.args.push_back(std::move(inner));
    return e;
}

bool FExpr::operator==(const FExpr& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::Int: return value == o.value;
        case Kind::Atom: return basis == o.basis && lambda == o.lambda;
        case Kind::Scale: return value == o.value && args == o.args;
        default: return args == o.args;
    }
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    FExpr parse() {
        FExpr e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what, std::size_t at) const {
        throw Error("parse", what + " at position " + std::to_string(at));
    }
    [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' but input ended");
            fail(std::string("expected '") + c + "'");
        }
    }

    FExpr expr() {
        FExpr acc = term();
        for (;;) {
            if (accept('+'))
                acc = FExpr::binary(FExpr::Kind::Add, std::move(acc), term());
            else if (accept('-'))
                acc = FExpr::binary(FExpr::Kind::Sub, std::move(acc), term());
            else
                return acc;
        }
    }

    FExpr term() {
        skip();
        bool literal = pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
        FExpr acc = factor();
        while (accept('*')) {
            FExpr rhs = factor();
            if (literal)
                acc = FExpr::scale(acc.value, std::move(rhs));
            else
                acc = FExpr::binary(FExpr::Kind::Mul, std::move(acc), std::move(rhs));
            literal = false;
        }
        return acc;
    }

    mpz_class integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail(pos_ >= s_.size() ? "expected an integer but input ended" : "expected an integer");
        return mpz_class(s_.substr(start, pos_ - start));
    }

    FExpr factor() {
        skip();
        if (pos_ >= s_.size()) fail("expected a term but input ended");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return FExpr::integer(integer());
        if (c == '(') {
            ++pos_;
            FExpr e = expr();
            expect(')');
            return e;
        }
        if (auto b = basis_from_name(c)) {
            ++pos_;
            return FExpr::atom(*b, part_list());
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Partition part_list() {
        expect('[');
        const std::size_t start = pos_;
        std::vector<int> parts;
        if (!accept(']')) {
            do {
                const std::size_t at = pos_;
                const mpz_class v = integer();
                if (v == 0) fail("parts must be positive", at);
                if (!v.fits_sint_p() || v > 1000) fail("part too large", at);
                parts.push_back(static_cast<int>(v.get_si()));
            } while (accept(','));
            expect(']');
        }
        for (std::size_t i = 1; i < parts.size(); ++i)
            if (parts[i] > parts[i - 1]) fail("parts must be weakly decreasing", start);
        return Partition(std::move(parts));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

bool is_additive(const FExpr& e) { return e.kind == FExpr::Kind::Add || e.kind == FExpr::Kind::Sub; }
bool is_product(const FExpr& e) { return e.kind == FExpr::Kind::Mul || e.kind == FExpr::Kind::Scale; }

std::string parens(const std::string& s) { return "(" + s + ")"; }

std::string atom_text(const FExpr& e) {
    std::string s = basis_name(e.basis) + "[";
    for (std::size_t i = 0; i < e.lambda.parts().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e.lambda.parts()[i]);
    }
    return s + "]";
}

}  // namespace

FExpr parse_fexpr(const std::string& text) { return Parser(text).parse(); }

std::string render_fexpr(const FExpr& e) {
    switch (e.kind) {
        case FExpr::Kind::Int: return e.value.get_str();
        case FExpr::Kind::Atom: return atom_text(e);
        case FExpr::Kind::Add:
        case FExpr::Kind::Sub: {
            const std::string rhs = render_fexpr(e.args[1]);
            return render_fexpr(e.args[0]) + (e.kind == FExpr::Kind::Add ? " + " : " - ") +
                   (is_additive(e.args[1]) ? parens(rhs) : rhs);
        }
        case FExpr::Kind::Mul: {
            // A bare Int on the left would re-parse as Scale.
            const FExpr& l = e.args[0];
            const FExpr& r = e.args[1];
            std::string ls = render_fexpr(l);
            if (is_additive(l) || l.kind == FExpr::Kind::Int) ls = parens(ls);
            std::string rs = render_fexpr(r);
            if (is_additive(r) || is_product(r)) rs = parens(rs);
            return ls + "*" + rs;
        }
        case FExpr::Kind::Scale: {
            const FExpr& r = e.args[0];
            std::string rs = render_fexpr(r);
            if (is_additive(r) || is_product(r)) rs = parens(rs);
            return e.value.get_str() + "*" + rs;
        }
    }
    return {};
}

SymFunc elaborate(const FExpr& e) {
    switch (e.kind) {
        case FExpr::Kind::Int: return SymFunc::constant(RF(mpq_class(e.value)));
        case FExpr::Kind::Atom:
            check_degree(e.lambda.size());
            return SymFunc::element(e.basis, e.lambda);
        case FExpr::Kind::Add: return elaborate(e.args[0]) + elaborate(e.args[1]);
        case FExpr::Kind::Sub: return elaborate(e.args[0]) - elaborate(e.args[1]);
        case FExpr::Kind::Mul: return multiply(elaborate(e.args[0]), elaborate(e.args[1]));
        case FExpr::Kind::Scale: return elaborate(e.args[0]) * RF(mpq_class(e.value));
    }
    return {};
}

SymFunc parse_symfunc(const std::string& text) { return elaborate(parse_fexpr(text)); }

}  // namespace hlchi

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "hlchi/cli.hpp"
#include "hlchi/euler.hpp"
#include "hlchi/fexpr.hpp"
#include "hlchi/hall_littlewood.hpp"
#include "hlchi/parallel.hpp"
#include "oracles.hpp"

using namespace hlchi;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

SymFunc el(Basis b, Partition lambda) { return SymFunc::element(b, lambda); }

RF one_minus_zk(int k) { return RF(1) - RF::z_power(k); }

SymFunc p_vec(const oracle::PVec& v) {
    SymFunc f(Basis::p);
    for (const auto& [rho, c] : v) f.add_term(rho, c);
    return f;
}

// Series produced by criteria 1 and 2, reused by 3 and 4.
struct Produced {
    std::string label;
    BiSeries series;
    bool schur_positive;
};
std::vector<Produced> g_produced;

// q^n coefficients of prod_{i,j<=D} (1 - z1^i z2^j q)^{-1}, expanded factor by factor.
std::vector<BiSeries> product_oracle(int max_n, int D) {
    const auto N = static_cast<std::size_t>(D + 1);
    std::vector<std::vector<mpz_class>> c(static_cast<std::size_t>(max_n) + 1, std::vector<mpz_class>(N * N, 0));
    c[0][0] = 1;
    for (int i = 0; i <= D; ++i)
        for (int j = 0; j <= D; ++j)
            // multiply by the geometric series in z1^i z2^j q, ascending in q
            for (int q = 1; q <= max_n; ++q)
                for (int a = i; a <= D; ++a)
                    for (int b = j; b <= D; ++b)
                        c[static_cast<std::size_t>(q)][static_cast<std::size_t>(a) * N + static_cast<std::size_t>(b)] +=
                            c[static_cast<std::size_t>(q - 1)][static_cast<std::size_t>(a - i) * N +
                                                               static_cast<std::size_t>(b - j)];
    std::vector<BiSeries> out;
    for (int q = 0; q <= max_n; ++q) {
        BiSeries s(D);
        for (int a = 0; a <= D; ++a)
            for (int b = 0; b <= D; ++b)
                s.add_term(a, b, mpq_class(c[static_cast<std::size_t>(q)][static_cast<std::size_t>(a) * N + static_cast<std::size_t>(b)]));
        out.push_back(s);
    }
    return out;
}

Outcome criterion_1() {
    Outcome o;
    const int D = 6;
    const auto pf = product_oracle(4, D);
    for (int n = 1; n <= 4; ++n) {
        std::vector<Method> methods = {Method::Theorem, Method::Localization};
        if (n <= 3) methods.push_back(Method::ConstantTerm);
        for (Method m : methods) {
            const EulerResult r = run_method(m, SymFunc::constant(RF(1)), n, D);
            g_produced.push_back({method_name(m) + " f=1 n=" + std::to_string(n), r.series, true});
            if (r.series != pf[static_cast<std::size_t>(n)]) o.fail(method_name(m) + " differs at n=" + std::to_string(n));
        }
    }
    return o;
}

Outcome criterion_2() {
    Outcome o;
    const std::vector<std::string> basket = {"1", "p[1]", "s[2]", "s[1,1]", "s[2,1]", "h[2]"};
    const std::vector<Method> all = {Method::Theorem, Method::Localization, Method::ConstantTerm};
    for (const auto& text : basket) {
        const SymFunc f = parse_symfunc(text);
        for (int n = 1; n <= 3; ++n) {
            const CrossCheckReport rep = cross_check(f, n, 5, all);
            if (rep.results.size() != 3) o.fail("a method was skipped for " + text);
            if (!rep.agreement) o.fail("disagreement for f=" + text + " n=" + std::to_string(n));
            for (const auto& r : rep.results)
                g_produced.push_back({method_name(r.method) + " f=" + text + " n=" + std::to_string(n), r.series,
                                      is_schur_positive(f)});
        }
    }
    return o;
}

Outcome criterion_3() {
    Outcome o;
    int checked = 0;
    for (const auto& p : g_produced) {
        if (!p.schur_positive) continue;
        ++checked;
        for (const auto& [a, b, v] : p.series.terms())
            if (v < 0 || v.get_den() != 1) o.fail(p.label + " coefficient (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    if (checked == 0) o.fail("nothing checked");
    o.detail = o.pass ? std::to_string(checked) + " series" : o.detail;
    return o;
}

Outcome criterion_4() {
    Outcome o;
    for (const auto& p : g_produced)
        if (p.series.swapped() != p.series) o.fail(p.label + " is not symmetric");
    if (o.pass) o.detail = std::to_string(g_produced.size()) + " series";
    return o;
}

Outcome criterion_5() {
    Outcome o;
    int pairs = 0;
    for (const auto& mu : partitions_up_to(4, 4))
        for (const auto& nu : partitions_up_to(4, 4)) {
            ++pairs;
            if (!verify_lemma(mu, nu).pass) o.fail(mu.to_string() + " " + nu.to_string());
        }
    if (o.pass) o.detail = std::to_string(pairs) + " pairs";
    return o;
}

Outcome criterion_6() {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
        RF scale(1);
        for (int i = 0; i < n; ++i) scale *= one_minus_zk(1);
        for (const auto& mu : partitions_up_to(3, n))
            for (const auto& nu : partitions_up_to(3, n)) {
                const RF want = mu == nu ? scale / b_norm_finite(mu, n) : RF();
                if (hl_inner_finite(hl_P(mu), hl_P(nu), n) != want)
                    o.fail("finite n=" + std::to_string(n) + " " + mu.to_string() + " " + nu.to_string());
            }
    }
    for (const auto& mu : partitions_up_to(5, 5))
        for (const auto& nu : partitions_up_to(5, 5)) {
            const RF want = mu == nu ? RF(1) / b_norm(mu) : RF();
            if (hl_inner(hl_P(mu), hl_P(nu)) != want) o.fail("infinite " + mu.to_string() + " " + nu.to_string());
        }
    return o;
}

Outcome criterion_7() {
    Outcome o;
    for (int d = 0; d <= 5; ++d)
        for (const auto& [lambda, v] : oracle::gram_schmidt_P(d)) {
            if (hl_Q(lambda) != p_vec(v) * b_norm(lambda)) o.fail("Q" + lambda.to_string() + " vs Gram-Schmidt");
            const SymFunc s = to_p(el(Basis::s, lambda));
            for (const auto& [rho, c] : hl_Q(lambda).terms())
                if (oracle::at_zero(c) != oracle::at_zero(s.coeff(rho))) o.fail("Q" + lambda.to_string() + " at z=0");
            for (const auto& [rho, c] : s.terms())
                if (oracle::at_zero(hl_Q(lambda).coeff(rho)) != oracle::at_zero(c))
                    o.fail("Q" + lambda.to_string() + " at z=0");
        }
    return o;
}

Outcome criterion_8() {
    Outcome o;
    for (int d = 0; d <= 4; ++d) {
        std::map<std::pair<Partition, Partition>, RF> lhs;
        for (const auto& lambda : partitions_of(d, d))
            for (const auto& [rho, c1] : hl_P(lambda).terms())
                for (const auto& [sigma, c2] : hl_P(lambda).terms()) lhs[{rho, sigma}] += b_norm(lambda) * c1 * c2;
        for (const auto& rho : partitions_of(d, d))
            for (const auto& sigma : partitions_of(d, d)) {
                RF want;
                if (rho == sigma) {
                    want = RF(mpq_class(1, oracle::zee(rho)));
                    for (int k : rho.parts()) want *= one_minus_zk(k);
                }
                if (lhs[{rho, sigma}] != want) o.fail("degree " + std::to_string(d));
            }
    }
    return o;
}

Outcome criterion_9() {
    Outcome o;
    for (const auto& mu : partitions_up_to(5, 5))
        for (const auto& nu : partitions_up_to(5, 5)) {
            if (k_exponent(mu, nu) != k_exponent_recursive(mu, nu)) o.fail(mu.to_string() + " " + nu.to_string());
            if (k_exponent(mu, nu) != k_exponent(nu, mu)) o.fail("symmetry " + mu.to_string() + " " + nu.to_string());
            const int a = std::max({mu[0], nu[0], 1});
            if (k_exponent(mu.with_first(a), nu) - k_exponent(mu, nu) != mu.size() - nu.size())
                o.fail("step " + mu.to_string() + " " + nu.to_string());
        }
    if (k_exponent({}, {}) != 0) o.fail("k(0,0)");
    for (const auto& mu : partitions_up_to(6, 6))
        if (k_exponent(mu, mu) != -mu.size()) o.fail("diagonal " + mu.to_string());
    return o;
}

Outcome criterion_10() {
    Outcome o;
    const int order = 10;
    for (const auto& lambda : partitions_up_to(5, 5)) {
        if (lambda.empty()) continue;
        if (principal_spec(el(Basis::m, lambda), order).coeffs != oracle::multiset_sum(lambda, lambda.size(), order))
            o.fail("m" + lambda.to_string());
    }
    for (int r = 1; r <= 6; ++r)
        if (principal_spec(el(Basis::h, {r}), order).coeffs != rf_expand(RF(1) / RF::q_bracket(r), order).coeffs)
            o.fail("h" + std::to_string(r));
    return o;
}

Outcome criterion_11() {
    Outcome o;
    int count = 0;
    for (const auto& f : {el(Basis::s, {2}), el(Basis::s, {1, 1}), el(Basis::s, {2, 1})})
        for (const auto& mu : partitions_up_to(3, 3)) {
            const int d = mu.size() + f.degree();
            for (const auto& nu : partitions_of(d, d)) {
                const RF v = matrix_element(f, nu, mu);
                if (v.is_zero()) continue;
                ++count;
                bool ok = v.is_integer_polynomial();
                for (const auto& c : v.numerator().coeffs()) ok = ok && c >= 0;
                if (!ok) o.fail(f.to_string() + " " + nu.to_string() + " " + mu.to_string() + " = " + v.to_string());
            }
        }
    if (o.pass) o.detail = std::to_string(count) + " nonzero elements";
    return o;
}

std::string g_binary;  // optional path to the built executable

std::string shell_quote(const std::string& a) {
    std::string q = "'";
    for (char ch : a) q += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
    return q + "'";
}

std::string run_binary(const std::vector<std::string>& args) {
    std::string cmd = shell_quote(g_binary);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    cmd += " 2>&1";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "popen failed";
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return std::to_string(status) + "\n" + out;
}

Outcome criterion_12() {
    Outcome o;
    const std::vector<std::vector<std::string>> commands = {
        {"chi", "--f", "s[2,1]", "--n", "3", "--max-deg", "4", "--method", "all"},
        {"chi", "--f", "s[2]+2*s[1,1]", "--n", "2", "--max-deg", "4", "--method", "localization", "--format", "csv"},
        {"chi", "--f", "h[2]", "--n", "3", "--max-deg", "3", "--method", "theorem", "--format", "pretty"},
        {"chi", "--f", "P[1]", "--n", "2", "--max-deg", "3", "--method", "constant-term"},
        {"chi", "--f", "1", "--n", "4", "--max-deg", "3", "--method", "all", "--convention", "col"},
        {"chi", "--f", "s[1,2]", "--n", "1"},
        {"verify", "lemma", "--max-size", "3"},
        {"verify", "corollary", "--n", "3", "--max-deg", "4"},
        {"hl", "poly", "--lambda", "2,1", "--basis", "p"},
        {"hl", "inner", "--f", "P[2]", "--g", "P[2]", "--n", "2"},
        {"hl", "jing", "--k", "2", "--apply", "Q[1]"},
    };
    auto run = [](std::vector<std::string> args, int threads) {
        if (args[0] == "chi") args.insert(args.end(), {"--threads", std::to_string(threads)});
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return std::to_string(code) + "\n" + out.str() + "\n" + err.str();
    };
    for (const auto& c : commands) {
        const std::string ref = run(c, 1);
        for (int threads : {1, 2, 4})
            for (int rep = 0; rep < 2; ++rep)
                if (run(c, threads) != ref) o.fail(c[0] + " " + c[1] + " with " + std::to_string(threads) + " threads");
    }
    if (!g_binary.empty()) {
        for (const auto& c : commands) {
            std::vector<std::string> args = c;
            if (args[0] == "chi") args.insert(args.end(), {"--threads", "1"});
            const std::string ref = run_binary(args);
            if (c[0] == "chi") args.back() = "4";
            if (run_binary(args) != ref || run_binary(args) != ref) o.fail("process run of " + c[0] + " " + c[1]);
        }
        o.detail = "in-process and subprocess";
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_binary = argv[1];
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"chi_n(1) against the product formula, n<=4, D=6 (limit 120 s)", criterion_1},
        {"three-way agreement, basket x n<=3, D=5 (limit 600 s)", criterion_2},
        {"nonnegativity of Schur-positive runs", criterion_3},
        {"z1<->z2 symmetry of criteria 1-2 series", criterion_4},
        {"lemma for |mu|,|nu|<=4 (limit 60 s)", criterion_5},
        {"Hall-Littlewood orthogonality, finite and infinite", criterion_6},
        {"Jing Q equals b * Gram-Schmidt P, Schur at z=0", criterion_7},
        {"Cauchy kernel through degree 4", criterion_8},
        {"k-exponent formula vs recursion", criterion_9},
        {"principal specialization identities", criterion_10},
        {"Schur positivity of matrix elements", criterion_11},
        {"CLI determinism across runs and thread counts", criterion_12},
    };
    const std::vector<double> limits = {120, 600, 0, 0, 60, 0, 0, 0, 0, 0, 0, 0};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (limits[i] > 0 && secs > limits[i]) o.fail("took " + std::to_string(secs) + " s");
        if (!o.pass) ++failures;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ["
             << secs << " s]";
        if (!o.detail.empty()) line << "  " << o.detail;
        std::cout << line.str() << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}

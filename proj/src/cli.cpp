#include "hlchi/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <sstream>

#include "hlchi/error.hpp"
#include "hlchi/euler.hpp"
#include "hlchi/fexpr.hpp"
#include "hlchi/hall_littlewood.hpp"
#include "hlchi/parallel.hpp"

namespace hlchi {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int exit_code_for(const Error& e) {
    static const std::set<std::string> usage_codes = {"parse",  "guard",  "domain", "degree-bound",
                                                      "config", "usage", "invalid-partition"};
    return usage_codes.count(e.code()) ? kExitUsage : kExitFail;
}

Partition parse_part_list(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != '[' && c != ']' && !std::isspace(static_cast<unsigned char>(c))) s += c;
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 4)
            throw Error("parse", "bad part list '" + text + "'");
        parts.push_back(std::stoi(item));
    }
    try {
        return Partition(std::move(parts));
    } catch (const Error& e) {
        throw Error("parse", e.what());
    }
}

// ------------------------------------------------------------------- chi

struct ChiOptions {
    std::string f;
    int n = 1;
    int max_deg = 5;
    std::string method = "theorem";
    std::string format = "json";
    std::string convention = convention_name(kCalibratedConvention);
};

void write_table(const BiSeries& s, const ChiOptions& o, const std::string& f_text, std::optional<bool> agreement,
                 std::ostream& out) {
    const int D = o.max_deg;
    if (o.format == "json") {
        nlohmann::json j;
        j["method"] = o.method;
        j["n"] = o.n;
        j["f"] = f_text;
        j["max_deg"] = D;
        j["convention"] = o.convention;
        nlohmann::json rows = nlohmann::json::array();
        for (int a = 0; a <= D; ++a)
            for (int b = 0; b <= D; ++b) rows.push_back({a, b, s.coeff(a, b).get_str()});
        j["coefficients"] = std::move(rows);
        if (agreement) j["agreement"] = *agreement;
        out << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        out << "a,b,value\n";
        for (int a = 0; a <= D; ++a)
            for (int b = 0; b <= D; ++b) out << a << "," << b << "," << s.coeff(a, b).get_str() << "\n";
    } else {
        out << "chi_" << o.n << "(" << f_text << ")  method=" << o.method << "  convention=" << o.convention << "\n";
        std::size_t width = 1;
        for (int a = 0; a <= D; ++a)
            for (int b = 0; b <= D; ++b) width = std::max(width, s.coeff(a, b).get_str().size());
        width += 1;
        out << std::setw(8) << "a\\b";
        for (int b = 0; b <= D; ++b) out << std::setw(static_cast<int>(width)) << b;
        out << "\n";
        for (int a = 0; a <= D; ++a) {
            out << std::setw(8) << a;
            for (int b = 0; b <= D; ++b) out << std::setw(static_cast<int>(width)) << s.coeff(a, b).get_str();
            out << "\n";
        }
        if (agreement) out << "agreement: " << (*agreement ? "MATCH" : "MISMATCH") << "\n";
    }
}

void warn_non_integral(const BiSeries& s, std::ostream& err) {
    for (const auto& [a, b, v] : s.terms())
        if (v.get_den() != 1) err << "warning: non-integral coefficient " << v.get_str() << " at (" << a << "," << b << ")\n";
}

int cmd_chi(const ChiOptions& o, std::ostream& out, std::ostream& err) {
    const FExpr tree = parse_fexpr(o.f);
    const std::string f_text = render_fexpr(tree);
    const SymFunc f = elaborate(tree);
    const Convention conv = o.convention == "col" ? Convention::Col : Convention::Row;

    if (o.method != "all") {
        Method m = Method::Theorem;
        if (o.method == "localization") m = Method::Localization;
        if (o.method == "constant-term") m = Method::ConstantTerm;
        const EulerResult r = run_method(m, f, o.n, o.max_deg, conv);
        warn_non_integral(r.series, err);
        write_table(r.series, o, f_text, std::nullopt, out);
        return kExitOk;
    }

    const CrossCheckReport rep =
        cross_check(f, o.n, o.max_deg, {Method::Theorem, Method::Localization, Method::ConstantTerm}, conv);
    for (Method m : rep.skipped)
        err << "note: " << method_name(m) << " skipped for n = " << o.n << " (above its guard)\n";
    for (const auto& d : rep.diffs)
        err << "error: mismatch: (" << d.a << "," << d.b << ") " << method_name(d.lhs_method) << "=" << d.lhs.get_str()
            << " " << method_name(d.rhs_method) << "=" << d.rhs.get_str() << "\n";
    for (const auto& [m, a, b] : rep.nonnegativity_violations)
        err << "error: nonnegativity: " << method_name(m) << " coefficient (" << a << "," << b
            << ") is not a nonnegative integer\n";
    for (const auto& [m, a, b] : rep.symmetry_violations)
        err << "error: symmetry: " << method_name(m) << " coefficient (" << a << "," << b << ") differs from (" << b
            << "," << a << ")\n";
    const BiSeries& s = rep.results.front().series;
    warn_non_integral(s, err);
    write_table(s, o, f_text, rep.agreement, out);
    return rep.pass() ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------- verify

struct Tally {
    int passed = 0;
    int failed = 0;
    void record(bool ok, const std::string& line, std::ostream& out) {
        out << (ok ? "PASS " : "FAIL ") << line << "\n";
        (ok ? passed : failed)++;
    }
    int finish(const std::string& name, std::ostream& out) const {
        out << name << ": " << passed << "/" << (passed + failed) << " passed\n";
        return failed == 0 ? kExitOk : kExitFail;
    }
};

int verify_lemma_cmd(int max_size, std::ostream& out) {
    check_degree(max_size);
    Tally t;
    const auto parts = partitions_up_to(max_size, max_size);
    for (const auto& mu : parts)
        for (const auto& nu : parts) {
            const LemmaCheck c = verify_lemma(mu, nu);
            std::string line = "lemma mu=" + mu.to_string() + " nu=" + nu.to_string() + " k=" + std::to_string(c.k);
            if (!c.pass) line += " lhs=" + c.lhs.to_string() + " rhs=" + c.rhs.to_string();
            t.record(c.pass, line, out);
        }
    return t.finish("lemma", out);
}

int verify_orthogonality_cmd(int n, int max_size, std::ostream& out) {
    if (n < 1) throw Error("domain", "n must be at least 1");
    check_degree(max_size);
    Tally t;
    const auto finite = partitions_up_to(max_size, n);
    const RF scale = [n] {
        RF r(1);
        for (int i = 0; i < n; ++i) r *= RF(1) - RF::z_power(1);
        return r;
    }();
    for (const auto& mu : finite)
        for (const auto& nu : finite) {
            const RF got = hl_inner_finite(hl_P(mu), hl_P(nu), n);
            const RF want = mu == nu ? scale / b_norm_finite(mu, n) : RF();
            t.record(got == want,
                     "finite n=" + std::to_string(n) + " mu=" + mu.to_string() + " nu=" + nu.to_string() +
                         " value=" + got.to_string(),
                     out);
        }
    const auto all = partitions_up_to(max_size, max_size);
    for (const auto& mu : all)
        for (const auto& nu : all) {
            if (mu.size() != nu.size()) continue;
            const RF got = hl_inner(hl_P(mu), hl_P(nu));
            const RF want = mu == nu ? RF(1) / b_norm(mu) : RF();
            t.record(got == want, "infinite mu=" + mu.to_string() + " nu=" + nu.to_string() + " value=" + got.to_string(),
                     out);
        }
    return t.finish("orthogonality", out);
}

int verify_cauchy_cmd(int max_size, std::ostream& out) {
    check_degree(max_size);
    Tally t;
    for (int d = 0; d <= max_size; ++d) {
        // sum_lambda b_lambda P_lambda(X) P_lambda(Y) in the p(X) p(Y) basis.
        std::map<std::pair<Partition, Partition>, RF> lhs;
        for (const auto& lambda : partitions_of(d, d)) {
            const SymFunc& P = hl_P(lambda);
            const RF b = b_norm(lambda);
            for (const auto& [rho, c1] : P.terms())
                for (const auto& [sigma, c2] : P.terms()) lhs[{rho, sigma}] += b * c1 * c2;
        }
        bool ok = true;
        for (const auto& rho : partitions_of(d, d))
            for (const auto& sigma : partitions_of(d, d)) {
                const RF want = rho == sigma ? RF(1) / hl_power_norm(rho) : RF();
                const auto it = lhs.find({rho, sigma});
                const RF got = it == lhs.end() ? RF() : it->second;
                if (got != want) ok = false;
            }
        t.record(ok, "cauchy degree=" + std::to_string(d), out);
    }
    return t.finish("cauchy", out);
}

int verify_corollary_cmd(int n, int max_deg, Convention conv, std::ostream& out) {
    const BiSeries want = partition_function(n, max_deg).at(static_cast<std::size_t>(n));
    const SymFunc one = SymFunc::constant(RF(1));
    Tally t;
    std::vector<Method> methods = {Method::Theorem, Method::Localization};
    if (n <= 3) methods.push_back(Method::ConstantTerm);
    for (Method m : methods) {
        const EulerResult r = run_method(m, one, n, max_deg, conv);
        std::string line = "corollary " + method_name(m) + " n=" + std::to_string(n) + " max_deg=" + std::to_string(max_deg);
        for (int a = 0; a <= max_deg; ++a)
            for (int b = 0; b <= max_deg; ++b)
                if (r.series.coeff(a, b) != want.coeff(a, b))
                    line += " (" + std::to_string(a) + "," + std::to_string(b) + "):" + r.series.coeff(a, b).get_str() +
                            "!=" + want.coeff(a, b).get_str();
        t.record(r.series == want, line, out);
    }
    return t.finish("corollary", out);
}

int verify_kprop_cmd(int max_size, std::ostream& out) {
    Tally t;
    const auto parts = partitions_up_to(max_size, max_size);
    for (const auto& mu : parts)
        for (const auto& nu : parts) {
            const long k = k_exponent(mu, nu);
            const long kr = k_exponent_recursive(mu, nu);
            t.record(k == kr,
                     "kprop mu=" + mu.to_string() + " nu=" + nu.to_string() + " formula=" + std::to_string(k) +
                         " recursion=" + std::to_string(kr),
                     out);
            const int a = std::max({mu[0], nu[0], 1});
            const long step = k_exponent(mu.with_first(a), nu) - k;
            t.record(step == mu.size() - nu.size(),
                     "kprop-step a=" + std::to_string(a) + " mu=" + mu.to_string() + " nu=" + nu.to_string(), out);
        }
    for (const auto& mu : parts)
        t.record(k_exponent(mu, mu) == -mu.size(), "kprop-diagonal mu=" + mu.to_string(), out);
    return t.finish("kprop", out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Equivariant Euler characteristics of tautological classes on the Hilbert scheme of points in the plane.",
                 "hlchi"};
    app.footer(
        "Expressions: sums, differences and products of s[..], p[..], h[..], e[..], m[..], P[..], Q[..] and integers,\n"
        "e.g. \"s[2,1]+2*s[1,1,1]\". The Hall-Littlewood parameter prints as z in hl subcommands and is bound to z1\n"
        "in chi. Exit status: 0 success, 1 verification failure, 2 usage, parse or guard error.");
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "Worker threads for the evaluators (0 = all cores)")->check(CLI::NonNegativeNumber);

    ChiOptions chi;
    auto* chi_cmd = app.add_subcommand("chi", "Compute chi_n(f(U)) as a truncated series in z1, z2");
    chi_cmd->add_option("--f", chi.f, "Symmetric-function expression")->required();
    chi_cmd->add_option("--n", chi.n, "Number of points")->required()->check(CLI::PositiveNumber);
    chi_cmd->add_option("--max-deg", chi.max_deg, "Largest exponent of z1 and z2")->capture_default_str()->check(CLI::Range(0, 40));
    chi_cmd->add_option("--method", chi.method, "Evaluator")->capture_default_str()
        ->check(CLI::IsMember({"theorem", "localization", "constant-term", "all"}));
    chi_cmd->add_option("--format", chi.format, "Output format")->capture_default_str()->check(CLI::IsMember({"json", "csv", "pretty"}));
    chi_cmd->add_option("--convention", chi.convention, "Fixed-point orientation")->capture_default_str()
        ->check(CLI::IsMember({"row", "col"}));
    chi_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify", "Run an identity check and report each case");
    verify->require_subcommand(1);
    int lemma_size = 4;
    auto* v_lemma = verify->add_subcommand("lemma", "Pieri-coefficient sum equals z^k for all pairs");
    v_lemma->add_option("--max-size", lemma_size, "Largest partition size")->capture_default_str()->check(CLI::Range(0, 8));
    int orth_n = 3, orth_size = 3;
    auto* v_orth = verify->add_subcommand("orthogonality", "Hall-Littlewood orthogonality, finite and infinite");
    v_orth->add_option("--n", orth_n, "Number of variables")->capture_default_str()->check(CLI::Range(1, 6));
    v_orth->add_option("--max-size", orth_size, "Largest partition size")->capture_default_str()->check(CLI::Range(0, 8));
    int cauchy_size = 4;
    auto* v_cauchy = verify->add_subcommand("cauchy", "Hall-Littlewood Cauchy kernel");
    v_cauchy->add_option("--max-size", cauchy_size, "Largest degree")->capture_default_str()->check(CLI::Range(0, 10));
    int cor_n = 3, cor_deg = 5;
    std::string cor_conv = convention_name(kCalibratedConvention);
    auto* v_cor = verify->add_subcommand("corollary", "chi_n(1) against the partition-function product");
    v_cor->add_option("--n", cor_n, "Number of points")->capture_default_str()->check(CLI::Range(1, 6));
    v_cor->add_option("--max-deg", cor_deg, "Largest exponent")->capture_default_str()->check(CLI::Range(0, 12));
    v_cor->add_option("--convention", cor_conv, "Fixed-point orientation")->capture_default_str()->check(CLI::IsMember({"row", "col"}));
    int kprop_size = 5;
    auto* v_kprop = verify->add_subcommand("kprop", "k-exponent formula against its recursion");
    v_kprop->add_option("--max-size", kprop_size, "Largest partition size")->capture_default_str()->check(CLI::Range(0, 12));

    auto* hl = app.add_subcommand("hl", "Hall-Littlewood utilities");
    hl->require_subcommand(1);
    std::string poly_lambda, poly_basis = "m";
    auto* hl_poly = hl->add_subcommand("poly", "Expand P_lambda");
    hl_poly->add_option("--lambda", poly_lambda, "Partition, e.g. 2,1")->required();
    hl_poly->add_option("--basis", poly_basis, "Target basis")->capture_default_str()->check(CLI::IsMember({"m", "p"}));
    int jing_k = 1;
    std::string jing_apply = "1";
    auto* hl_jing = hl->add_subcommand("jing", "Apply the vertex operator J_k");
    hl_jing->add_option("--k", jing_k, "Index k")->required()->check(CLI::Range(-12, 12));
    hl_jing->add_option("--apply", jing_apply, "Expression to act on")->capture_default_str();
    std::string inner_f, inner_g;
    int inner_n = 0;
    auto* hl_inner_cmd = hl->add_subcommand("inner", "Hall-Littlewood scalar product");
    hl_inner_cmd->add_option("--f", inner_f, "First expression")->required();
    hl_inner_cmd->add_option("--g", inner_g, "Second expression")->required();
    auto* inner_n_opt =
        hl_inner_cmd->add_option("--n", inner_n, "Number of variables (infinite if omitted)")->check(CLI::Range(1, 6));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        set_thread_count(threads);
        if (chi_cmd->parsed()) return cmd_chi(chi, out, err);
        if (v_lemma->parsed()) return verify_lemma_cmd(lemma_size, out);
        if (v_orth->parsed()) return verify_orthogonality_cmd(orth_n, orth_size, out);
        if (v_cauchy->parsed()) return verify_cauchy_cmd(cauchy_size, out);
        if (v_cor->parsed())
            return verify_corollary_cmd(cor_n, cor_deg, cor_conv == "col" ? Convention::Col : Convention::Row, out);
        if (v_kprop->parsed()) return verify_kprop_cmd(kprop_size, out);
        if (hl_poly->parsed()) {
            const Partition lambda = parse_part_list(poly_lambda);
            check_degree(lambda.size());
            out << convert(hl_P(lambda), *basis_from_name(poly_basis[0])).to_string("z") << "\n";
            return kExitOk;
        }
        if (hl_jing->parsed()) {
            out << jing_J(jing_k, parse_symfunc(jing_apply)).to_string("z") << "\n";
            return kExitOk;
        }
        if (hl_inner_cmd->parsed()) {
            const SymFunc f = parse_symfunc(inner_f);
            const SymFunc g = parse_symfunc(inner_g);
            const RF v = inner_n_opt->count() ? hl_inner_finite(f, g, inner_n) : hl_inner(f, g);
            out << v.to_string("z") << "\n";
            return kExitOk;
        }
        err << "error: usage: no command given\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.code() << ": " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return kExitFail;
    }
}

}  // namespace hlchi

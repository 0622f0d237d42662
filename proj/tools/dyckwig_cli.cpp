// dyckwig: command-line front end for the Dyck-path and finite-oscillator Wigner library.
//
// Exit status: 0 ok, 1 failed verification, 2 invalid arguments, 3 route mismatch,
// 4 cost guard exceeded (rerun with --unsafe-no-guard).

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <dyckwig/dyckwig.hpp>
#include <dyckwig/verify.hpp>

namespace {

using namespace dyckwig;

enum class Format { Table, Json, Csv };

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitRouteMismatch = 3;
constexpr int kExitCostGuard = 4;

struct CommandConfig {
    int two_j = 1;
    std::optional<int> n;
    int r = 0;
    std::optional<int> h;
    int a = 0;
    int b = 0;
    int order = 5;
    std::string route;
    Format format = Format::Table;
    std::optional<unsigned> precision;
    std::string out;
    bool no_guard = false;
    bool verify = false;
    std::vector<std::string> suites;
    unsigned threads = 0;

    CostLimits limits() const { return no_guard ? CostLimits::unlimited() : CostLimits{}; }

    void guard_r(int value, const char* what) const {
        if (!no_guard && value > CostLimits{}.max_r)
            throw CostGuard(std::string(what) + " = " + std::to_string(value) + " exceeds the guard " +
                            std::to_string(CostLimits{}.max_r));
    }
    void guard_two_j() const {
        if (!no_guard && two_j > CostLimits{}.max_two_j)
            throw CostGuard("two_j = " + std::to_string(two_j) + " exceeds the guard " +
                            std::to_string(CostLimits{}.max_two_j));
    }
};

class BadArgs : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RouteMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

PreWignerRoute parse_route(const std::string& s) {
    if (s.empty() || s == "krawtchouk") return PreWignerRoute::Krawtchouk;
    if (s == "dyck") return PreWignerRoute::Dyck;
    if (s == "oracle") return PreWignerRoute::Oracle;
    throw BadArgs("unknown route '" + s + "' (expected krawtchouk, dyck or oracle)");
}

const char* route_name(PreWignerRoute r) {
    switch (r) {
    case PreWignerRoute::Krawtchouk: return "krawtchouk";
    case PreWignerRoute::Dyck: return "dyck";
    case PreWignerRoute::Oracle: return "oracle";
    }
    return "?";
}

void print_matrix_table(std::ostream& os, const Matrix<Rational>& m, std::optional<unsigned> precision) {
    std::size_t width = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) width = std::max(width, render(m(i, j), precision).size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? "  " : "") << std::setw(static_cast<int>(width)) << render(m(i, j), precision);
        os << '\n';
    }
}

PathConstraint constraint_of(const CommandConfig& c) {
    if (c.r < 0 || c.a < 0 || c.b < 0 || (c.h && *c.h < 0)) throw BadArgs("--r, --h, --a and --b must be nonnegative");
    return PathConstraint{c.r, c.h, c.a, c.b};
}

json constraint_json(const PathConstraint& pc) {
    return {{"r", pc.r}, {"h", pc.max_height()}, {"a", pc.a}, {"b", pc.b}};
}

void cmd_dyck_enum(const CommandConfig& c, std::ostream& os) {
    auto pc = constraint_of(c);
    c.guard_r(c.r, "r");
    auto paths = enumerate(pc);
    if (c.format == Format::Json) {
        json j = constraint_json(pc);
        j["words"] = to_json(paths);
        j["count"] = paths.size();
        os << j.dump(2) << '\n';
        return;
    }
    if (c.format == Format::Csv) {
        os << "word,height,weight\n";
        for (const auto& p : paths) os << word(p) << ',' << height(p) << ',' << to_text(weight(p)) << '\n';
    } else {
        for (const auto& p : paths) os << (p.empty() ? "(empty)" : word(p)) << '\n';
    }
    os << "count: " << paths.size() << '\n';
}

void cmd_dyck_poly(const CommandConfig& c, std::ostream& os) {
    auto pc = constraint_of(c);
    c.guard_r(c.r, "r");
    if (!c.route.empty() && c.route != "rec" && c.route != "enum")
        throw BadArgs("dyck-poly --route must be rec or enum");
    MultiPoly p = c.route == "enum" ? dyck_poly_enum(pc) : dyck_poly(pc);
    if (c.verify) {
        MultiPoly other = c.route == "enum" ? dyck_poly(pc) : dyck_poly_enum(pc);
        if (other != p) throw RouteMismatch("recurrence and enumeration disagree");
    }
    if (c.format == Format::Json) {
        json j = constraint_json(pc);
        j["poly"] = to_json(p);
        j["text"] = to_text(p);
        os << j.dump(2) << '\n';
    } else if (c.format == Format::Csv) {
        os << "coeff,monomial\n";
        for (const auto& [m, coeff] : p.terms()) os << coeff.get_str() << ',' << (m.is_one() ? "1" : to_text(m)) << '\n';
    } else {
        os << to_text(p) << '\n';
    }
}

void cmd_genseries(const CommandConfig& c, std::ostream& os) {
    if (c.order < 0) throw BadArgs("--order must be nonnegative");
    c.guard_r(c.order, "order");
    int n_vars = c.h.value_or(c.order);
    if (n_vars < 0) throw BadArgs("--h must be nonnegative");
    auto series = gen_series(c.order, n_vars);
    if (c.format == Format::Json) {
        json coeffs = json::array();
        for (const auto& p : series) coeffs.push_back(to_json(p));
        os << json{{"order", c.order}, {"n_vars", n_vars}, {"coefficients", coeffs}}.dump(2) << '\n';
        return;
    }
    if (c.format == Format::Csv) os << "power,poly\n";
    for (std::size_t k = 0; k < series.size(); ++k) {
        if (c.format == Format::Csv) os << k << ",\"" << to_text(series[k]) << "\"\n";
        else os << "t^" << k << ": " << to_text(series[k]) << '\n';
    }
}

void cmd_segment_poly(const CommandConfig& c, std::ostream& os) {
    if (c.r < 0) throw BadArgs("--r must be nonnegative");
    c.guard_r(c.r, "r");
    MultiPoly q = u_segment_poly(c.r);
    if (c.format == Format::Json) os << json{{"r", c.r}, {"poly", to_json(q)}, {"text", to_text(q, 't')}}.dump(2) << '\n';
    else os << to_text(q, 't') << '\n';
}

OscillatorModel model_of(const CommandConfig& c) {
    if (c.two_j < 1) throw BadArgs("--two-j must be a positive integer");
    c.guard_two_j();
    OscillatorModel m(c.two_j);
    if (c.n && (*c.n < 0 || *c.n > c.two_j))
        throw BadArgs("--n must lie in 0.." + std::to_string(c.two_j));
    return m;
}

void cmd_moments(const CommandConfig& c, std::ostream& os) {
    auto model = model_of(c);
    if (c.r < 0) throw BadArgs("--r must be nonnegative");
    auto limits = c.limits();
    json rows = json::array();
    bool all_agree = true;
    int n_lo = c.n.value_or(0), n_hi = c.n.value_or(model.N());
    if (c.format == Format::Csv) os << "n,r,value,routes_agree\n";
    for (int n = n_lo; n <= n_hi; ++n)
        for (int r = 0; r <= c.r; ++r) {
            Rational k = q_moment_krawtchouk(n, r, model, limits);
            Rational d = q_moment_dyck(n, r, model, limits);
            Rational m = q_moment_matrix(n, r, model, limits);
            bool agree = k == d && k == m;
            all_agree = all_agree && agree;
            Rational value = c.route == "dyck" ? d : c.route == "oracle" ? m : k;
            if (c.format == Format::Json)
                rows.push_back({{"n", n}, {"r", r}, {"value", to_string(value)}, {"routes_agree", agree}});
            else if (c.format == Format::Csv)
                os << n << ',' << r << ',' << render(value, c.precision) << ',' << (agree ? "true" : "false") << '\n';
            else
                os << "n=" << n << " r=" << r << " <n|q^" << 2 * r << "|n> = " << render(value, c.precision)
                   << (agree ? "" : "  [ROUTES DISAGREE]") << '\n';
        }
    if (c.format == Format::Json) os << json{{"two_j", c.two_j}, {"moments", rows}}.dump(2) << '\n';
    if (!all_agree) throw RouteMismatch("moment routes disagree");
}

int require_n(const CommandConfig& c) {
    if (!c.n) throw BadArgs("--n is required");
    return *c.n;
}

void cmd_prewigner(const CommandConfig& c, std::ostream& os) {
    auto model = model_of(c);
    int n = require_n(c);
    auto route = parse_route(c.route);
    auto z = pre_wigner(n, model, route, c.limits());
    if (c.format == Format::Json)
        os << json{{"two_j", c.two_j}, {"n", n}, {"route", route_name(route)}, {"Z", to_json(z.entries)}}.dump(2) << '\n';
    else if (c.format == Format::Csv)
        write_csv(os, z.entries, c.precision);
    else
        print_matrix_table(os, z.entries, c.precision);
}

json marginal_json(const std::vector<MarginalEntry>& entries, const OscillatorModel& model, const char* node_key) {
    json arr = json::array();
    for (const auto& e : entries)
        arr.push_back({{"index", e.index},
                       {node_key, to_string(model.node(e.index))},
                       {"sum", to_string(e.sum)},
                       {"reference", to_string(e.reference)},
                       {"equal", e.equal}});
    return arr;
}

void cmd_wigner(const CommandConfig& c, std::ostream& os) {
    auto model = model_of(c);
    int n = require_n(c);
    auto route = parse_route(c.route);
    auto vs = vandermonde_inverse(model.nodes());
    auto z = pre_wigner(n, model, route, c.limits());
    auto w = wigner_from_pre(z, vs);
    auto rep = check_marginals(w, model);
    if (discrete_moments(w, vs) != z.entries) throw RouteMismatch("V^T W V does not reproduce Z");

    if (c.format == Format::Json) {
        json j{{"two_j", c.two_j},
               {"n", n},
               {"route", route_name(route)},
               {"Z", to_json(z.entries)},
               {"W", to_json(w.entries)},
               {"sum", to_string(rep.total)},
               {"marginals",
                {{"position", marginal_json(rep.position, model, "q")},
                 {"momentum", marginal_json(rep.momentum, model, "p")},
                 {"position_exact", rep.position_exact()},
                 {"momentum_exact", rep.momentum_exact()}}}};
        os << j.dump(2) << '\n';
    } else if (c.format == Format::Csv) {
        os << "# W(n=" << n << ") two_j=" << c.two_j
           << ": row k = momentum node p_k from -j to +j, column l = position node q_l from -j to +j\n";
        write_csv(os, w.entries, c.precision);
    } else {
        os << "Z(" << n << "):\n";
        print_matrix_table(os, z.entries, c.precision);
        os << "W(" << n << "):  rows p = -j..+j, columns q = -j..+j\n";
        print_matrix_table(os, w.entries, c.precision);
        os << "sum: " << to_string(rep.total) << '\n';
        os << "position marginal exact: " << (rep.position_exact() ? "yes" : "no") << '\n';
        os << "momentum marginal exact: " << (rep.momentum_exact() ? "yes" : "no") << '\n';
    }
}

int cmd_verify(const CommandConfig& c, std::ostream& os) {
    if (c.two_j < 1 || c.r < 0) throw BadArgs("verify needs --two-j >= 1 and --r >= 0");
    c.guard_two_j();
    c.guard_r(c.r, "r");
    VerifyBounds bounds{c.two_j, c.r, c.limits()};
    auto suites = c.suites.empty() ? known_suites() : c.suites;
    std::vector<VerifyCase> cases;
    try {
        cases = build_cases(suites, bounds);
    } catch (const DomainError& e) {
        throw BadArgs(e.what());
    }
    auto results = run_cases(cases, c.threads);
    std::size_t passed = 0;
    for (const auto& res : results) passed += res.passed ? 1 : 0;
    if (c.format == Format::Json) {
        json list = json::array();
        for (const auto& res : results) {
            json e{{"suite", res.suite}, {"case", res.name}, {"passed", res.passed}};
            if (!res.passed) e["detail"] = res.detail;
            list.push_back(std::move(e));
        }
        os << json{{"cases", list}, {"passed", passed}, {"total", results.size()}}.dump(2) << '\n';
    } else {
        for (const auto& res : results) {
            os << (res.passed ? "PASS " : "FAIL ") << res.suite << ' ' << res.name;
            if (!res.passed) os << ": " << res.detail;
            os << '\n';
        }
        os << "passed " << passed << '/' << results.size() << '\n';
    }
    return passed == results.size() ? 0 : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Dyck-path combinatorics and su(2) finite-oscillator Wigner matrices"};
    app.require_subcommand(1);
    // --h is the height bound, so help answers to --help only.
    app.set_help_flag("--help", "Print this help message and exit");
    CommandConfig cfg;

    const std::map<std::string, Format> formats{{"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
    auto common = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "Print this help message and exit");
        sub->add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats));
        sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
        sub->add_option("--precision", cfg.precision, "Render rationals as decimals with this many digits");
        sub->add_flag("--unsafe-no-guard", cfg.no_guard, "Disable the cost guards");
    };
    auto path_opts = [&](CLI::App* sub) {
        sub->add_option("--r", cfg.r, "Path size")->required();
        sub->add_option("--h", cfg.h, "Maximum height (default: unrestricted)");
        sub->add_option("--a", cfg.a, "Minimum number of leading up steps");
        sub->add_option("--b", cfg.b, "Minimum number of trailing down steps");
    };
    auto model_opts = [&](CLI::App* sub, bool need_n) {
        sub->add_option("--two-j", cfg.two_j, "Representation label 2j = N")->required();
        auto* opt = sub->add_option("--n", cfg.n, "Stationary state index 0..N");
        if (need_n) opt->required();
        sub->add_option("--route", cfg.route, "krawtchouk | dyck | oracle");
    };

    auto* enum_cmd = app.add_subcommand("dyck-enum", "List Dyck words of D_{r|h}^{(a,b)}");
    path_opts(enum_cmd);
    common(enum_cmd);

    auto* poly_cmd = app.add_subcommand("dyck-poly", "Dyck polynomial P_{r|h}^{(a,b)}");
    path_opts(poly_cmd);
    poly_cmd->add_option("--route", cfg.route, "rec | enum");
    poly_cmd->add_flag("--verify", cfg.verify, "Compute both routes and fail on mismatch");
    common(poly_cmd);

    auto* gen_cmd = app.add_subcommand("genseries", "Continued-fraction series coefficients");
    gen_cmd->add_option("--order", cfg.order, "Highest power of t");
    gen_cmd->add_option("--h", cfg.h, "Number of variables u_1..u_h (default: order)");
    common(gen_cmd);

    auto* seg_cmd = app.add_subcommand("segment-poly", "u-segment polynomial Q_r in t_1, t_2, ...");
    seg_cmd->add_option("--r", cfg.r, "Path size")->required();
    common(seg_cmd);

    auto* mom_cmd = app.add_subcommand("moments", "<n|q^{2r}|n> for r = 0..R by three routes");
    model_opts(mom_cmd, false);
    mom_cmd->add_option("--r", cfg.r, "Largest r")->required();
    common(mom_cmd);

    auto* pre_cmd = app.add_subcommand("prewigner", "Pre-Wigner matrix Z(n)");
    model_opts(pre_cmd, true);
    common(pre_cmd);

    auto* wig_cmd = app.add_subcommand("wigner", "Wigner matrix W(n) with marginals");
    model_opts(wig_cmd, true);
    common(wig_cmd);

    auto* ver_cmd = app.add_subcommand("verify", "Run self-check suites");
    cfg.two_j = 4;
    cfg.r = 4;
    ver_cmd->add_option("--two-j", cfg.two_j, "Largest 2j (N) to check");
    ver_cmd->add_option("--r", cfg.r, "Largest r (or series order) to check");
    ver_cmd->add_option("--suites", cfg.suites, "Comma-separated suites")->delimiter(',');
    ver_cmd->add_option("--threads", cfg.threads, "Worker threads (default: hardware)");
    common(ver_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArgs;
    }

    std::ostringstream buffer;
    int status = 0;
    try {
        auto* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "dyck-enum") cmd_dyck_enum(cfg, buffer);
        else if (name == "dyck-poly") cmd_dyck_poly(cfg, buffer);
        else if (name == "genseries") cmd_genseries(cfg, buffer);
        else if (name == "segment-poly") cmd_segment_poly(cfg, buffer);
        else if (name == "moments") cmd_moments(cfg, buffer);
        else if (name == "prewigner") cmd_prewigner(cfg, buffer);
        else if (name == "wigner") cmd_wigner(cfg, buffer);
        else if (name == "verify") status = cmd_verify(cfg, buffer);
    } catch (const BadArgs& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArgs;
    } catch (const CostGuard& e) {
        std::cerr << "error: " << e.what() << " (use --unsafe-no-guard to override)\n";
        return kExitCostGuard;
    } catch (const RouteMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        std::cout << buffer.str();
        return kExitRouteMismatch;
    } catch (const dyckwig::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArgs;
    }

    if (cfg.out.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream file(cfg.out);
        if (!file) {
            std::cerr << "error: cannot open " << cfg.out << " for writing\n";
            return kExitBadArgs;
        }
        file << buffer.str();
    }
    return status;
}

#include "grseries/cli.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "grseries/io.hpp"
#include "grseries/tablegen.hpp"

namespace grseries {

namespace {

using nlohmann::ordered_json;

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string command;
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
};

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::domain_error("cannot open output file " + out_path);
    out << text;
}

std::string report_text(const Report& r) {
    std::string s;
    for (const auto& c : r.checks) {
        s += (c.pass ? "PASS " : "FAIL ") + c.name;
        if (!c.detail.empty()) s += ": " + c.detail;
        s += "\n";
    }
    s += (r.all_pass() ? "OK" : "FAILED") + std::string("\n");
    return s;
}

std::string report_json(const Report& r) {
    ordered_json j;
    j["command"] = r.command;
    j["checks"] = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["detail"] = c.detail;
        j["checks"].push_back(std::move(jc));
    }
    j["pass"] = r.all_pass();
    return j.dump(2) + "\n";
}

int emit(const Report& r, const std::string& format, const std::string& out_path) {
    write_output(format == "json" ? report_json(r) : report_text(r), out_path);
    return r.all_pass() ? 0 : 1;
}

int first_diff_degree(const USeries& a, const USeries& b) {
    for (int n = 0; n <= std::min(a.order, b.order); ++n)
        if (a.c[n] != b.c[n]) return n;
    return -1;
}

int run_build(bool ruan_tian, const std::string& input, std::int64_t torder, std::int64_t sorder,
              const std::string& format, const std::string& out_path) {
    const ProblemInput problem = load_problem(input);
    Series series = ruan_tian
                        ? build_RT(problem.model, problem.table,
                                   ruan_tian_defaults(static_cast<int>(torder)), torder, sorder)
                        : build_GT(problem.model, problem.table,
                                   taubes_defaults(static_cast<int>(torder)), torder, sorder);
    const InvariantExpansion expansion = extract_all(series);
    if (format == "json") {
        ordered_json j;
        j["command"] = ruan_tian ? "build rt" : "build gt";
        j["series"] = series_to_json(series);
        j["expansion"] = expansion_to_json(expansion);
        write_output(j.dump(2) + "\n", out_path);
    } else {
        write_output(canonical_text(series) + "--\n" + expansion_text(expansion), out_path);
    }
    return 0;
}

Report run_lattice_census(std::int64_t max_m) {
    Report r;
    r.command = "verify lattice-census";

    bool census_ok = true;
    std::string detail = "m in [1," + std::to_string(max_m) + "]";
    for (std::int64_t m = 1; m <= max_m && census_ok; ++m) {
        try {
            census(m);
        } catch (const std::logic_error& e) {
            census_ok = false;
            detail = "m=" + std::to_string(m) + ": " + e.what();
        }
    }
    r.add("census divisor-sum identities", census_ok, detail);

    const LatticeCensus c2 = census(2);
    r.add("census(2) = (0,1,0)",
          c2.count_none == 0 && c2.count_single == 1 && c2.count_all == 0);
    const LatticeCensus c4 = census(4);
    r.add("census(4) = (0,2,1)",
          c4.count_none == 0 && c4.count_single == 2 && c4.count_all == 1);

    HomologyClass cls{{1, 0}};
    const std::int64_t sign_m = std::min<std::int64_t>(max_m, 64);
    bool signs_ok = true;
    std::string sign_detail = "m <= " + std::to_string(sign_m) + ", all sign combinations";
    for (std::int64_t m = 1; m <= sign_m && signs_ok; ++m) {
        for (int d0 : {1, -1}) {
            for (int type = 0; type <= 3; ++type) {
                try {
                    signed_sum(m, TorusData::of_type(cls, d0, type));
                } catch (const std::logic_error& e) {
                    signs_ok = false;
                    sign_detail = "m=" + std::to_string(m) + ": " + e.what();
                }
            }
        }
    }
    r.add("signed sum brute force vs closed form", signs_ok, sign_detail);

    bool perm_ok = true;
    for (std::int64_t m = 1; m <= sign_m && perm_ok; ++m) {
        for (int d0 : {1, -1}) {
            // all placements of one and of two negative twisted signs
            const std::int64_t one0 = signed_sum(m, TorusData(cls, d0, {-1, 1, 1}));
            const std::int64_t one1 = signed_sum(m, TorusData(cls, d0, {1, -1, 1}));
            const std::int64_t one2 = signed_sum(m, TorusData(cls, d0, {1, 1, -1}));
            const std::int64_t two0 = signed_sum(m, TorusData(cls, d0, {-1, -1, 1}));
            const std::int64_t two1 = signed_sum(m, TorusData(cls, d0, {-1, 1, -1}));
            const std::int64_t two2 = signed_sum(m, TorusData(cls, d0, {1, -1, -1}));
            perm_ok = perm_ok && one0 == one1 && one1 == one2 && two0 == two1 && two1 == two2;
        }
    }
    r.add("signed sum invariant under permuting twisted signs", perm_ok);
    return r;
}

Report run_genfunc(std::int64_t order) {
    Report r;
    r.command = "verify genfunc";
    const int n = static_cast<int>(order);

    const USeries F = mobius_F(n);
    const ProdFCheck pf = check_prodF(F, n);
    r.add("prod_k F(t^k) = e^t for the Moebius F", pf.ok,
          pf.ok ? "order " + std::to_string(n)
                : "first failing degree " + std::to_string(pf.first_fail_degree));

    const USeries f = f_from_F(F, n);
    const int fd = first_diff_degree(f, geometric(n));
    r.add("f built from F equals 1/(1-t)", fd < 0,
          fd < 0 ? "order " + std::to_string(n) : "first failing degree " + std::to_string(fd));

    const auto fam = wall_crossing_family(geometric(n));
    const USeries f2 = subst_scale(geometric(n), 2);
    const USeries f4 = subst_scale(geometric(n), 4);
    const int d1 = first_diff_degree(mul(fam[1], f2), geometric(n));
    r.add("f1 f(t^2) = f(t)", d1 < 0,
          d1 < 0 ? "" : "first failing degree " + std::to_string(d1));
    const int d2 = first_diff_degree(mul(fam[2], mul(f2, f2)), mul(geometric(n), f4));
    r.add("f2 f(t^2)^2 = f(t) f(t^4)", d2 < 0,
          d2 < 0 ? "" : "first failing degree " + std::to_string(d2));
    const int d3 = first_diff_degree(mul(fam[3], mul(f2, mul(f2, f2))), mul(geometric(n), f4));
    r.add("f3 f(t^2)^3 = f(t) f(t^4)", d3 < 0,
          d3 < 0 ? "" : "first failing degree " + std::to_string(d3));
    return r;
}

Report run_phi(std::int64_t order) {
    Report r;
    r.command = "verify phi";
    const int n = static_cast<int>(order);

    const std::pair<int, int> expected[4] = {{0, 0}, {-2, 0}, {-4, 4}, {-6, 4}};
    HomologyClass cls{{1, 0}};
    bool s_ok = true;
    for (int type = 0; type <= 3; ++type)
        s_ok = s_ok && twist_sign_params(TorusData::of_type(cls, 1, type)) == expected[type];
    r.add("twist sign parameters (s1,s2) by type", s_ok);

    const USeries F = mobius_F(n);
    const USeries f = f_from_F(F, n);
    for (int d0 : {1, -1}) {
        for (int type = 0; type <= 3; ++type) {
            const TorusData torus = TorusData::of_type(cls, d0, type);
            const int fd = first_diff_degree(phi_lattice(torus, F, n), phi_closed(torus, f, n));
            r.add("phi lattice product = closed form, sign " + std::to_string(d0) + " type " +
                      std::to_string(type),
                  fd < 0, fd < 0 ? "" : "first failing degree " + std::to_string(fd));
        }
    }
    return r;
}

void theorem_checks(Report& r, const std::string& label, const ModelPtr& model,
                    const CurveTable& table, std::int64_t torder, std::int64_t sorder) {
    const TheoremReport rep = verify_main_theorem(model, table, torder, sorder);
    std::string detail;
    if (rep.series_equal) {
        detail = std::to_string(rep.gt.terms().size()) + " terms";
    } else {
        detail = "series differ at " + canonical_text(sub(rep.gt, rep.rt)).substr(0, 64);
    }
    r.add(label + ": GT = RT", rep.series_equal, detail);
    if (rep.gr0_checked) {
        r.add(label + ": degree-zero closed form",
              rep.gr0_mismatches.empty(),
              std::to_string(rep.gr0_classes_checked) + " classes");
    } else {
        r.add(label + ": degree-zero closed form skipped", true, rep.gr0_skip_reason);
    }
}

Report run_theorem(const std::string& input, std::int64_t trials, std::uint64_t seed,
                   bool seed_given, std::int64_t torder, std::int64_t sorder) {
    Report r;
    r.command = "verify theorem";
    if (!input.empty()) {
        const ProblemInput problem = load_problem(input);
        theorem_checks(r, "input table", problem.model, problem.table, torder, sorder);
        return r;
    }
    if (!seed_given)
        throw std::domain_error("verify theorem without --input needs --seed (and --trials)");
    for (std::int64_t i = 0; i < trials; ++i) {
        const GeneratedTable g = random_table(seed + static_cast<std::uint64_t>(i), torder, sorder);
        theorem_checks(r, "seed " + std::to_string(seed + static_cast<std::uint64_t>(i)) + " (" +
                              g.model_name + ")",
                       g.model, g.table, torder, sorder);
    }
    return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Exact generating-function engine for curve-count series"};
    app.require_subcommand(1);

    std::string input, out_path, format = "text";
    std::int64_t torder = 8, sorder = 8, max_m = 200, trials = 1;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", out_path);
    };

    CLI::App* build = app.add_subcommand("build", "Build a series from a curve table");
    CLI::App* build_gt = build->add_subcommand("gt", "Taubes series");
    CLI::App* build_rt = build->add_subcommand("rt", "Ruan-Tian series");
    for (CLI::App* cmd : {build_gt, build_rt}) {
        cmd->add_option("--input", input)->required();
        cmd->add_option("--order", torder);
        cmd->add_option("--s-order", sorder);
        add_common(cmd);
    }
    build->require_subcommand(1);

    CLI::App* verify = app.add_subcommand("verify", "Verify the combinatorial identities");
    CLI::App* v_census = verify->add_subcommand("lattice-census", "Sublattice census identities");
    v_census->add_option("--max-m", max_m);
    add_common(v_census);
    CLI::App* v_genfunc = verify->add_subcommand("genfunc", "Generating-function identities");
    v_genfunc->add_option("--order", torder);
    add_common(v_genfunc);
    CLI::App* v_phi = verify->add_subcommand("phi", "Torus cover generating functions");
    v_phi->add_option("--order", torder);
    add_common(v_phi);
    CLI::App* v_theorem = verify->add_subcommand("theorem", "Equality of the two series");
    v_theorem->add_option("--input", input);
    v_theorem->add_option("--trials", trials);
    CLI::Option* seed_opt = v_theorem->add_option("--seed", seed);
    v_theorem->add_option("--order", torder);
    v_theorem->add_option("--s-order", sorder);
    add_common(v_theorem);
    verify->require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("grseries");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (torder <= 0 || sorder < 0 || max_m <= 0 || trials <= 0)
            throw std::domain_error("bounds must be positive");
        if (build_gt->parsed() || build_rt->parsed())
            return run_build(build_rt->parsed(), input, torder, sorder, format, out_path);
        Report r;
        if (v_census->parsed()) {
            r = run_lattice_census(max_m);
        } else if (v_genfunc->parsed()) {
            r = run_genfunc(torder);
        } else if (v_phi->parsed()) {
            r = run_phi(torder);
        } else {
            r = run_theorem(input, trials, seed, seed_opt->count() > 0, torder, sorder);
        }
        return emit(r, format, out_path);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "identity failure: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace grseries

#include "equigrass/cli.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "equigrass/bitops.hpp"
#include "equigrass/derham.hpp"
#include "equigrass/expr.hpp"
#include "equigrass/invariants.hpp"
#include "equigrass/parallel.hpp"
#include "equigrass/schubert.hpp"
#include "equigrass/verify.hpp"

namespace equigrass {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string kind;
    std::string suite;
    std::string direction;
    std::string input;
    std::string format = "ascii";
    int k = -1;
    int n = -1;
    int p_max = -1;
    int deg_max = -1;
    int r_max = 10;
    int e_max = 4;
    int ambient = -1;
};

int pick(int v, int fallback) { return v < 0 ? fallback : v; }

int emit(const Report& r, const Options& o, std::ostream& out)
{
    if (o.format == "json")
        out << r.json().dump(2) << "\n";
    else
        out << r.text();
    return r.passed() ? kExitOk : kExitFailed;
}

int do_chart(const Options& o, std::ostream& out)
{
    int k = pick(o.k, 4);
    if (k < 1) throw CLI::ValidationError("--k", "must be at least 1");
    RankChart c;
    if (o.kind == "inv") {
        c = rank_chart_inv(k, pick(o.p_max, 14));
    } else if (o.ambient >= 0) {
        auto cells = enumerate_cells_in_ambient(k, o.ambient);
        c = cell_chart(k, cells);
    } else {
        c = e1_rank_chart(k, pick(o.p_max, 14));
    }
    out << render_chart(c, parse_chart_format(o.format));
    return kExitOk;
}

int do_verify(const Options& o, std::ostream& out)
{
    const std::string& s = o.suite;
    Report r;
    if (s == "presentation") {
        r = verify_presentation(pick(o.k, 2), pick(o.deg_max, 14));
    } else if (s == "gr4") {
        r = verify_gr4();
    } else if (s == "figures") {
        r = verify_figures();
    } else if (s == "kronholm") {
        r = verify_chart_sums(pick(o.k, 4), pick(o.p_max, 20));
    } else if (s == "duality") {
        r = verify_duality(pick(o.k, 4), pick(o.p_max, 20));
    } else if (s == "rays") {
        r = verify_rays(pick(o.k, 5), o.r_max);
    } else if (s == "products") {
        r = verify_products(pick(o.k, 5), o.e_max);
    } else if (s == "newton") {
        r = verify_newton(pick(o.n, 8), pick(o.k, 5));
    } else if (s == "indecomposables") {
        r = verify_indecomposables(pick(o.k, 5), pick(o.deg_max, 14));
    } else if (s == "stable") {
        r = verify_stable_presentation(pick(o.k, 4), pick(o.deg_max, 12));
    } else if (s == "appendix") {
        r = verify_exterior_ring(pick(o.n, 5), pick(o.deg_max, 14));
    } else {
        r = verify_all({pick(o.k, 6), pick(o.p_max, 20)});
    }
    return emit(r, o, out);
}

json element_json(const InvariantElement& x, const std::string& src)
{
    json j;
    j["k"] = x.k();
    j["expression"] = src;
    Bidegree d;
    if (x.homogeneous(&d) && !x.is_zero()) j["bidegree"] = {d.p, d.q};
    auto terms = json::array();
    for (const auto& [c, coef] : x.coeffs())
        terms.push_back({{"partition", c.parts}, {"orbit", orbit_string(c)}, {"coefficient", to_string(coef)}});
    j["terms"] = terms;
    j["modulo_rho_tau"] = to_string(x.mod_rho_tau());
    return j;
}

int do_eval(const Options& o, std::ostream& out)
{
    int k = pick(o.k, 2);
    auto x = evaluate(o.input, k);
    if (o.format == "json") {
        out << element_json(x, o.input).dump(2) << "\n";
        return kExitOk;
    }
    out << to_string(x) << "\n";
    for (const auto& [c, coef] : x.coeffs()) out << "  " << to_string(coef) << "  " << orbit_string(c) << "\n";
    out << "modulo (rho, tau): " << to_string(x.mod_rho_tau()) << "\n";
    return kExitOk;
}

int do_forget(const Options& o, std::ostream& out)
{
    int k = pick(o.k, 2);
    auto f = forgetful(evaluate(o.input, k));
    std::vector<int> w(k);
    for (int i = 0; i < k; ++i) w[i] = i + 1;
    if (o.format == "json")
        out << json{{"k", k}, {"expression", o.input}, {"image", f.to_string("w", w)}}.dump(2) << "\n";
    else
        out << f.to_string("w", w) << "\n";
    return kExitOk;
}

int do_bijection(const Options& o, std::ostream& out)
{
    Partition p;
    StarPattern t;
    if (o.direction == "partition-to-pattern") {
        p = parse_partition(o.input);
        t = partition_to_pattern(p);
    } else {
        t = parse_pattern(o.input);
        p = pattern_to_partition(t);
    }
    auto d = cell_bidegree(t);
    if (o.format == "json") {
        out << json{{"partition", p.parts}, {"stars", t.stars}, {"pattern", render_pattern(t)}, {"bidegree", {d.p, d.q}}}.dump(2)
            << "\n";
    } else {
        out << "partition " << to_string(p) << "\n"
            << "stars     " << to_string(t) << "\n"
            << "pattern   " << render_pattern(t) << "\n"
            << "bidegree  (" << d.p << "," << d.q << ")\n";
    }
    return kExitOk;
}

int do_info(std::ostream& out)
{
    out << "simd    " << simd::isa_name(simd::active_isa()) << "\n"
        << "threads " << thread_count() << "\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bigraded invariant rings, Schubert cell charts and their verification suites", "equigrass"};
    app.require_subcommand(1);
    Options o;

    auto* chart = app.add_subcommand("chart", "Print a bigraded rank chart");
    chart->add_option("kind", o.kind, "inv (basis classes) or cells (Schubert cells)")
        ->required()
        ->check(CLI::IsMember({"inv", "cells"}));
    chart->add_option("--k", o.k, "Number of indices / Grassmannian rank");
    chart->add_option("--pmax", o.p_max, "Largest topological degree");
    chart->add_option("--ambient", o.ambient, "Cells of a finite Grassmannian in this ambient dimension");
    chart->add_option("--format", o.format)->check(CLI::IsMember({"ascii", "csv", "json"}));

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", o.suite)
        ->required()
        ->check(CLI::IsMember({"presentation", "gr4", "figures", "kronholm", "duality", "rays", "products", "newton",
                               "indecomposables", "stable", "appendix", "all"}));
    verify->add_option("--k", o.k);
    verify->add_option("--n", o.n);
    verify->add_option("--pmax", o.p_max);
    verify->add_option("--degmax", o.deg_max);
    verify->add_option("--rmax", o.r_max);
    verify->add_option("--emax", o.e_max);
    verify->add_option("--format", o.format)->check(CLI::IsMember({"ascii", "text", "json"}));

    auto* eval = app.add_subcommand("eval", "Evaluate an expression in w_i, c_i, wc_{i,j}, w_i^(e), rho, tau");
    eval->add_option("expression", o.input)->required();
    eval->add_option("--k", o.k);
    eval->add_option("--format", o.format)->check(CLI::IsMember({"ascii", "text", "json"}));

    auto* forget = app.add_subcommand("forget", "Image under tau -> 1, rho -> 0, b -> a^2");
    forget->add_option("expression", o.input)->required();
    forget->add_option("--k", o.k);
    forget->add_option("--format", o.format)->check(CLI::IsMember({"ascii", "text", "json"}));

    auto* bij = app.add_subcommand("bijection", "Partitions and star patterns");
    bij->add_option("direction", o.direction)
        ->required()
        ->check(CLI::IsMember({"partition-to-pattern", "pattern-to-partition"}));
    bij->add_option("input", o.input)->required();
    bij->add_option("--format", o.format)->check(CLI::IsMember({"ascii", "text", "json"}));

    auto* info = app.add_subcommand("info", "Show the selected SIMD kernels and thread count");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (chart->parsed()) return do_chart(o, out);
        if (verify->parsed()) return do_verify(o, out);
        if (eval->parsed()) return do_eval(o, out);
        if (forget->parsed()) return do_forget(o, out);
        if (bij->parsed()) return do_bijection(o, out);
        if (info->parsed()) return do_info(out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace equigrass

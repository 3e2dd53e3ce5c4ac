#include "CLI11.hpp"

#include "sdual/branes.hpp"
#include "sdual/parser.hpp"
#include "sdual/siso.hpp"
#include "sdual/suites.hpp"

#include <fstream>
#include <iostream>

using namespace sdual;

namespace {

constexpr const char* kDefaultBackground = "R4A x C[z] x C[w1,w2]";

SignConvention convention() {
    try {
        return SignConvention::load(sign_convention_path());
    } catch (const error&) {
        return calibrate_signs(); // deterministic fallback when no frozen file
    }
}

// Duality context over the given background; the B-part must consist of
// three holomorphic coordinates, the first being the (possibly punctured)
// circle-fibered one.
DualityContext duality_context(const std::string& background) {
    DualityContext ctx;
    ctx.bg = BackgroundDescriptor::parse(background);
    std::vector<std::string> bc = ctx.bg.b_coords();
    if (bc.size() != 3)
        throw error("the duality map needs three holomorphic coordinates, e.g. " +
                    std::string(kDefaultBackground));
    ctx.reg = ctx.bg.build_registry({"eM", "eps"});
    const std::string zc = bc[0];
    const std::vector<std::string> wc = {bc[1], bc[2]};
    ctx.cy2 = CalabiYauOrdering(ctx.reg, {wc[0], wc[1]});
    ctx.cy3 = CalabiYauOrdering(ctx.reg, {zc, wc[0], wc[1]});
    ctx.z = *ctx.reg.find_even(zc);
    ctx.theta_z = *ctx.reg.find_odd("D" + zc);
    if (auto em = ctx.reg.find_odd("eM")) ctx.em = *em;
    if (auto ep = ctx.reg.find_odd("eps")) ctx.eps = *ep;
    return ctx;
}

CalabiYauOrdering full_b_ordering(const BackgroundDescriptor& bg, const Registry& reg) {
    return CalabiYauOrdering(reg, bg.b_coords());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic checks for the twisted S-duality map on protected sectors"};
    app.require_subcommand(1);

    std::string background = kDefaultBackground;
    std::string mode = "closed";
    std::string report_path;
    uint64_t seed = 2024;
    app.add_option("--background", background, "background declaration")->capture_default_str();
    app.add_option("--mode", mode, "duality mode")->check(CLI::IsMember({"composite", "closed"}));
    app.add_option("--report", report_path, "write the verification report to this path");
    app.add_option("--seed", seed, "seed for randomized property checks")->capture_default_str();

    std::string expr, expr2, suite;
    CLI::App* cmd_parse = app.add_subcommand("parse", "parse and reprint an expression");
    cmd_parse->add_option("expr", expr)->required();
    CLI::App* cmd_sdual = app.add_subcommand("sdual", "apply the duality map");
    cmd_sdual->add_option("expr", expr)->required();
    CLI::App* cmd_sn = app.add_subcommand("sn", "Schouten bracket of two expressions");
    cmd_sn->add_option("expr1", expr)->required();
    cmd_sn->add_option("expr2", expr2)->required();
    CLI::App* cmd_div = app.add_subcommand("div", "divergence of an expression");
    cmd_div->add_option("expr", expr)->required();
    CLI::App* cmd_dolbeault = app.add_subcommand("dolbeault", "antiholomorphic differential");
    cmd_dolbeault->add_option("expr", expr)->required();
    CLI::App* cmd_comap = app.add_subcommand("comap", "closed-open boundary operator image");
    cmd_comap->add_option("expr", expr)->required();
    CLI::App* cmd_qcoh = app.add_subcommand("qcoh", "supercharge cohomology dimensions");
    CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("suite", suite, "one of: calculus further_twist duality d3 appendix omega clifford all")
        ->required();

    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_parse->parsed()) {
            BackgroundDescriptor bg = BackgroundDescriptor::parse(background);
            Registry reg = bg.build_registry({"eM", "eps", "e1", "e2"});
            std::cout << parse_multivector(expr, reg).str() << "\n";
        } else if (cmd_sdual->parsed()) {
            DualityContext ctx = duality_context(background);
            Multivector m = parse_multivector(expr, ctx.reg);
            if (mode == "composite") {
                std::cout << sdual_composite(m, ctx).str() << "\n";
                std::cout << "oracle composite\n";
            } else {
                SDualMode sm = ctx.bg.b_factors.front().punctured ? SDualMode::c_times_c2
                                                                  : SDualMode::c3_z4;
                CaseTrace trace;
                std::cout << sdual_closed_form(m, ctx, sm, convention(), &trace).str() << "\n";
                for (const auto& [label, component] : trace.entries)
                    std::cout << "case " << label << ": " << component << "\n";
            }
        } else if (cmd_sn->parsed()) {
            BackgroundDescriptor bg = BackgroundDescriptor::parse(background);
            Registry reg = bg.build_registry();
            CalabiYauOrdering cy = full_b_ordering(bg, reg);
            std::cout << sn_bracket_lie(parse_multivector(expr, reg),
                                        parse_multivector(expr2, reg), cy)
                             .str()
                      << "\n";
        } else if (cmd_div->parsed()) {
            BackgroundDescriptor bg = BackgroundDescriptor::parse(background);
            Registry reg = bg.build_registry();
            CalabiYauOrdering cy = full_b_ordering(bg, reg);
            std::cout << divergence(parse_multivector(expr, reg), cy).str() << "\n";
        } else if (cmd_dolbeault->parsed()) {
            BackgroundDescriptor bg = BackgroundDescriptor::parse(background);
            Registry reg = bg.build_registry();
            std::cout << dolbeault(parse_multivector(expr, reg)).str() << "\n";
        } else if (cmd_comap->parsed()) {
            DualityContext ctx = duality_context(background);
            SuperOpContext op = brane_operator_context();
            std::cout << closed_open(parse_multivector(expr, ctx.reg), ctx, op).str() << "\n";
        } else if (cmd_qcoh->parsed()) {
            SpinorModule spin;
            SuperLieAlgebra alg = build_siso(spin, build_gamma_plus(spin));
            QCohomology coh = q_cohomology(alg, supercharge_q(alg));
            const size_t dim = SuperLieAlgebra::dim;
            Matrix d_odd(dim, SuperLieAlgebra::odd_count);
            for (size_t i = 0; i < dim; ++i)
                for (size_t j = 0; j < SuperLieAlgebra::odd_count; ++j)
                    d_odd.at(i, j) = coh.differential.at(i, SuperLieAlgebra::odd_begin + j);
            Matrix d_so(dim, SuperLieAlgebra::so_count);
            for (size_t i = 0; i < dim; ++i)
                for (size_t j = 0; j < SuperLieAlgebra::so_count; ++j)
                    d_so.at(i, j) = coh.differential.at(i, j);
            std::cout << "even " << coh.even_dim << "\n";
            std::cout << "odd " << coh.odd_dim << "\n";
            std::cout << "odd_rank_into_vector " << d_odd.rank() << "\n";
            std::cout << "odd_kernel " << SuperLieAlgebra::odd_count - d_odd.rank() << "\n";
            std::cout << "stabilizer " << SuperLieAlgebra::so_count - d_so.rank() << "\n";
        } else if (cmd_verify->parsed()) {
            Report rep = run_suite(suite, convention(), seed);
            std::string text = rep.str();
            std::cout << text;
            if (!report_path.empty()) {
                std::ofstream out(report_path, std::ios::binary);
                if (!out) throw error("cannot write report: " + report_path);
                out << text;
            }
            return rep.ok() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

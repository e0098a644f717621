#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "difflab/experiments.hpp"

namespace {

struct OutputOptions {
    std::string out;
    std::string format = "csv";
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--out", opts.out, "Write the report to PATH instead of stdout");
    cmd->add_option("--format", opts.format, "Report format")
        ->check(CLI::IsMember({"csv", "json"}));
}

int emit(const difflab::ExperimentReport& rep, const OutputOptions& opts) {
    std::string payload = opts.format == "json" ? rep.to_json().dump(2) + "\n"
                                                : rep.to_csv();
    if (opts.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(opts.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << opts.out << "\n";
            return 2;
        }
        f << payload;
    }
    std::cerr << rep.name << ": " << (rep.pass ? "PASS" : "FAIL") << " ("
              << rep.rows.size() << " rows)\n";
    return rep.pass ? 0 : 1;
}

difflab::Manifold parse_manifold(const std::string& s) {
    return s == "interval" ? difflab::Manifold::Interval : difflab::Manifold::Circle;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "difflab: seeded numeric experiments on interval/circle diffeomorphism "
        "groups of intermediate regularity.\n"
        "DIFFLAB_TOL overrides the default 1e-8 assertion tolerance."};
    app.require_subcommand(1);

    OutputOptions out;

    difflab::SeparatedFamilyParams sf;
    auto* c_sf = app.add_subcommand("separated-family",
                                    "Pairwise BV distances in the translate family F_h");
    c_sf->add_option("--r", sf.r, "Family radius r");
    c_sf->add_option("--trials", sf.num_h, "Number of sampled offsets");
    c_sf->add_option("--depth", sf.depth, "Staircase truncation depth");
    c_sf->add_option("--seed", sf.seed, "RNG seed");
    add_output_options(c_sf, out);

    difflab::TranslateDoublingParams td;
    auto* c_td = app.add_subcommand("translate-doubling",
                                    "Variation doubling V(g_h - g) = 2 V(g)");
    c_td->add_option("--trials", td.num_h, "Number of sampled offsets");
    c_td->add_option("--depth", td.depth, "Staircase truncation depth");
    c_td->add_option("--seed", td.seed, "RNG seed");
    add_output_options(c_td, out);

    difflab::BvDiscontinuityParams bd;
    std::string bd_manifold = "circle";
    auto* c_bd = app.add_subcommand(
        "bv-discontinuity", "Left multiplication is discontinuous in the BV metric");
    c_bd->add_option("--depth", bd.depth, "Staircase truncation depth");
    c_bd->add_option("--n-lo", bd.n_lo, "First dyadic index (h_n = 2^-n)");
    c_bd->add_option("--n-hi", bd.n_hi, "Last dyadic index");
    c_bd->add_option("--manifold", bd_manifold, "interval or circle")
        ->check(CLI::IsMember({"interval", "circle"}));
    c_bd->add_option("--seed", bd.seed, "RNG seed");
    add_output_options(c_bd, out);

    difflab::AcContinuityParams ac;
    auto* c_ac = app.add_subcommand(
        "ac-continuity", "Group operations are continuous in the k+AC metric");
    c_ac->add_option("--k", ac.k, "Regularity order");
    c_ac->add_option("--n-max", ac.n_max, "Largest dyadic index of the sequence");
    c_ac->add_option("--seed", ac.seed, "RNG seed");
    add_output_options(c_ac, out);

    difflab::ChangeOfVariablesParams cv;
    auto* c_cv = app.add_subcommand("change-of-variables",
                                    "Substitution identity and L1 continuity rows");
    c_cv->add_option("--trials", cv.trials, "Trials per manifold");
    c_cv->add_option("--seed", cv.seed, "RNG seed");
    add_output_options(c_cv, out);

    difflab::VariationInvarianceParams vi;
    auto* c_vi = app.add_subcommand("variation-invariance",
                                    "Randomized variation-calculus properties");
    c_vi->add_option("--trials", vi.trials, "Number of property cases");
    c_vi->add_option("--seed", vi.seed, "RNG seed");
    add_output_options(c_vi, out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_sf->parsed()) return emit(difflab::run_separated_family(sf), out);
        if (c_td->parsed()) return emit(difflab::run_translate_doubling(td), out);
        if (c_bd->parsed()) {
            bd.manifold = parse_manifold(bd_manifold);
            return emit(difflab::run_bv_discontinuity(bd), out);
        }
        if (c_ac->parsed()) return emit(difflab::run_ac_continuity(ac), out);
        if (c_cv->parsed()) return emit(difflab::run_change_of_variables(cv), out);
        if (c_vi->parsed()) return emit(difflab::run_variation_invariance(vi), out);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}

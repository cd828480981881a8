// Command-line front end: every library operation behind a subcommand with
// seeded, machine-readable (JSON or CSV) output.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hypervis/serialize.hpp"

namespace {

using namespace hypervis;

struct Options {
    std::string format = "json";
    std::string output_path;
    int threads = 0;
};

void emit(const Options& opt, const Json& j) {
    std::string text = opt.format == "csv" ? to_csv(j) : j.dump(2) + "\n";
    if (opt.output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.output_path);
        if (!out) throw UsageError("cannot open output file: " + opt.output_path);
        out << text;
    }
}

FamilyKind parse_kind(const std::string& name) {
    if (name == "c") return FamilyKind::C;
    if (name == "g") return FamilyKind::G;
    if (name == "b") return FamilyKind::B;
    throw UsageError("unknown family: " + name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypervis: visibility statistics of lattice points in [0,N]^d"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", opt.output_path, "Write the report to a file instead of stdout");
    app.add_option("--threads", opt.threads, "Worker cap (default: HYPERVIS_THREADS or all cores)");

    int d = 2, k = 2, order = 0;
    std::int64_t n = 1, p = 5, h = 1;
    double tol = 1e-6, halfwidth = 0.02;
    std::uint64_t samples = 100000, seed = 0;
    std::int64_t sieve_budget = kDefaultSieveBudget;
    std::uint64_t enum_budget = kDefaultEnumBudget;
    std::string family = "c", report = "visibility";

    auto* count = app.add_subcommand("count", "Exact #Omega and distance moments");
    count->add_option("--d", d)->required();
    count->add_option("--n", n)->required();

    auto* lambda = app.add_subcommand("lambda", "Self-visibility constant Lambda_{d,K}");
    lambda->add_option("--d", d)->required();
    lambda->add_option("--k", k)->required();
    lambda->add_option("--tol", tol);
    lambda->add_option("--sieve-budget", sieve_budget);

    auto* zeta_cmd = app.add_subcommand("zeta", "Riemann zeta at an integer argument");
    zeta_cmd->add_option("--d", d)->required();
    zeta_cmd->add_option("--tol", tol);

    auto* ft = app.add_subcommand("feller-tornier", "Feller-Tornier constant");
    ft->add_option("--tol", tol);
    ft->add_option("--sieve-budget", sieve_budget);

    auto* poly = app.add_subcommand("polytope", "Family C/G/B reports");
    poly->add_option("--family", family, "c, g, b, or cg for the C,G pair")
        ->check(CLI::IsMember({"c", "g", "b", "cg"}));
    poly->add_option("--d", d, "Dimension for families c and b");
    poly->add_option("--p", p, "Prime for family g (and cg)");
    poly->add_option("--report", report)
        ->check(CLI::IsMember({"visibility", "distance", "spectrum"}));

    auto* gaps = app.add_subcommand("inverse-gaps", "Distinct |n - n^-1| count mod p");
    gaps->add_option("--p", p)->required();

    auto* sqsum = app.add_subcommand("inverse-sqsum", "Sum of squared inverse increments mod p");
    sqsum->add_option("--p", p)->required();
    sqsum->add_option("--shift", h)->required();

    auto add_sample_opts = [&](CLI::App* cmd) {
        cmd->add_option("--d", d)->required();
        cmd->add_option("--n", n)->required();
        cmd->add_option("--samples", samples);
        cmd->add_option("--halfwidth", halfwidth);
        cmd->add_option("--seed", seed);
    };
    auto* spairs = app.add_subcommand("sample-pairs", "Monte Carlo visible-pair distances");
    add_sample_opts(spairs);
    auto* sangles = app.add_subcommand("sample-angles", "Monte Carlo visible-pair ray angles");
    add_sample_opts(sangles);
    auto* spoly = app.add_subcommand("sample-polytopes", "Monte Carlo self-visible K-tuples");
    add_sample_opts(spoly);
    spoly->add_option("--k", k)->required();

    auto* base = app.add_subcommand("baseline", "Continuous [0,1]^d distance baseline");
    base->add_option("--d", d)->required();
    base->add_option("--samples", samples);
    base->add_option("--seed", seed);

    auto* oracle = app.add_subcommand("oracle", "Brute-force tuple enumeration");
    oracle->add_option("--d", d)->required();
    oracle->add_option("--n", n)->required();
    oracle->add_option("--k", k)->required();
    oracle->add_option("--enum-budget", enum_budget);

    (void)order;
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);

        if (count->parsed()) {
            LatticeParams params{d, n};
            if (d >= 2) {
                emit(opt, to_json(visible_distance_moments(params)));
            } else {
                Json j;
                j["d"] = d;
                j["n"] = n;
                j["omega_count"] = bigint_str(count_visible_exact(params));
                emit(opt, j);
            }
        } else if (lambda->parsed()) {
            emit(opt, to_json(lambda_dk(d, k, tol, sieve_budget)));
        } else if (zeta_cmd->parsed()) {
            Json j;
            j["value"] = zeta(d, tol);
            j["d"] = d;
            j["tol"] = tol;
            emit(opt, j);
        } else if (ft->parsed()) {
            Json j;
            j["value"] = feller_tornier(tol, sieve_budget);
            j["tol"] = tol;
            emit(opt, j);
        } else if (poly->parsed()) {
            std::optional<PolytopeFamily> f, g;
            if (family == "cg") {
                f = build_family(FamilyKind::C, p - 1);
                g = build_family(FamilyKind::G, p);
            } else {
                FamilyKind kind = parse_kind(family);
                f = build_family(kind, kind == FamilyKind::G ? p : d);
            }
            Json j;
            if (report == "visibility") {
                j = to_json(visibility_report(*f, g), "visibility");
            } else if (report == "distance") {
                j = to_json(distance_report(*f, g), "distance");
            } else {
                j = to_json(spectrum_report(*f, g));
            }
            j["family"] = family;
            j["param"] = family == "g" || family == "cg" ? p : d;
            emit(opt, j);
        } else if (gaps->parsed()) {
            Json j;
            j["p"] = p;
            j["count"] = inverse_gap_count(p);
            emit(opt, j);
        } else if (sqsum->parsed()) {
            Json j;
            j["p"] = p;
            j["h"] = h;
            j["sum"] = bigint_str(inverse_increment_sqsum(p, h));
            emit(opt, j);
        } else if (spairs->parsed()) {
            emit(opt, to_json(pair_distance_experiment(d, n, samples, halfwidth, seed, opt.threads)));
        } else if (sangles->parsed()) {
            emit(opt, to_json(pair_angle_experiment(d, n, samples, halfwidth, seed, opt.threads)));
        } else if (spoly->parsed()) {
            emit(opt, to_json(polytope_experiment(d, n, k, samples, halfwidth, seed, opt.threads)));
        } else if (base->parsed()) {
            emit(opt, to_json(continuous_baseline(d, samples, seed, opt.threads)));
        } else if (oracle->parsed()) {
            auto res = brute_force_reference(LatticeParams{d, n}, k, enum_budget);
            Json j;
            j["d"] = d;
            j["n"] = n;
            j["k"] = k;
            j["tuple_count"] = bigint_str(res.tuple_count);
            j["total_tuples"] = bigint_str(res.total_tuples);
            if (k == 2) {
                j["sum_sq"] = bigint_str(res.sum_sq);
                j["sum_quartic"] = bigint_str(res.sum_quartic);
            }
            emit(opt, j);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

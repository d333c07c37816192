#include "support.hpp"
#include "verify.hpp"

#include <momenta/bell.hpp>
#include <momenta/combinatorics.hpp>
#include <momenta/distributions.hpp>
#include <momenta/moments.hpp>
#include <momenta/random_measures.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace {

using cli::CheckRow;
using cli::Config;
using cli::Json;
using momenta::Rat;

Json rat_strings(const std::vector<Rat>& values) {
    Json out = Json::array();
    for (const Rat& v : values) out.push_back(momenta::rat_to_string(v));
    return out;
}

/// Evaluate a polynomial command: with --eval the value at the given point,
/// otherwise the canonical text form of the polynomial itself.
Json poly_result(const momenta::SparsePoly& poly, const std::string& eval_csv,
                 bool eval_given) {
    Json out;
    if (eval_given) {
        const std::vector<Rat> point = cli::parse_rat_list(eval_csv);
        if (point.size() != poly.arity())
            throw std::invalid_argument(
                "--eval expects " + std::to_string(poly.arity()) + " value(s), got " +
                std::to_string(point.size()));
        out["value"] = momenta::rat_to_string(poly.evaluate(point));
    } else {
        out["poly"] = cli::poly_to_string(poly);
    }
    return out;
}

/// Conversions route through the raw-moment representation; "raw" is an
/// alias for "moments".
std::vector<Rat> convert_values(const std::vector<Rat>& values, const std::string& from,
                                const std::string& to, const std::string& mean_text,
                                bool mean_given) {
    std::vector<Rat> raw;
    if (from == "cumulants") {
        raw = momenta::cumulants_to_moments(values);
    } else if (from == "central") {
        if (!mean_given)
            throw std::invalid_argument("--mean is required when converting from central");
        raw = momenta::central_to_raw(values, momenta::parse_rat(mean_text));
    } else {
        raw = values;
    }
    if (to == "cumulants") return momenta::moments_to_cumulants(raw);
    if (to == "central") return momenta::raw_to_central(raw);
    return raw;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact moment and cumulant calculus over combinatorial structures"};
    app.require_subcommand(1);
    app.fallthrough();

    cli::ConfigFlags flags;
    auto* opt_D = app.add_option("--D", flags.D, "truncation degree for series work");
    auto* opt_N = app.add_option("--N", flags.N, "Monte Carlo sample count");
    auto* opt_seed = app.add_option("--seed", flags.seed, "base seed for random draws");
    auto* opt_tol =
        app.add_option("--tolerance", flags.tolerance, "z-score band for sampled checks");
    auto* opt_format = app.add_option("--format", flags.format, "output format: json or table");
    auto* opt_config = app.add_option("--config", flags.config_file, "JSON config file");

    // --- combinatorics ---------------------------------------------------
    CLI::App* comb = app.add_subcommand("combinatorics", "partitions and polynomial bases");
    comb->require_subcommand(1);
    comb->fallthrough();

    unsigned arg_n = 0;
    std::optional<unsigned> arg_r;
    std::string arg_eval, arg_s;

    CLI::App* c_partitions = comb->add_subcommand("partitions", "integer partitions of n");
    c_partitions->add_option("--n", arg_n, "partitioned integer")->required();
    c_partitions->add_option("--r", arg_r, "restrict to exactly r parts");
    c_partitions->fallthrough();

    CLI::App* c_setparts = comb->add_subcommand("set-partitions", "set partitions of {1..n}");
    c_setparts->add_option("--n", arg_n, "ground set size")->required();
    c_setparts->fallthrough();

    CLI::App* c_bell = comb->add_subcommand("bell", "complete or partial Bell polynomial");
    c_bell->add_option("--n", arg_n, "degree")->required();
    c_bell->add_option("--r", arg_r, "number of blocks (partial)");
    auto* bell_eval = c_bell->add_option("--eval", arg_eval, "evaluate at x1,x2,...");
    c_bell->fallthrough();

    CLI::App* c_zn = comb->add_subcommand("cycle-index", "cycle index of the symmetric group");
    c_zn->add_option("--n", arg_n, "degree")->required();
    auto* zn_eval = c_zn->add_option("--eval", arg_eval, "evaluate at x1,x2,...");
    c_zn->fallthrough();

    CLI::App* c_inventory =
        comb->add_subcommand("pattern-inventory", "orbit inventory of colorings under S_n");
    c_inventory->add_option("--n", arg_n, "number of slots")->required();
    c_inventory->add_option("--s", arg_s, "color weights s1,s2,...")->required();
    c_inventory->fallthrough();

    // --- moments ----------------------------------------------------------
    CLI::App* moments = app.add_subcommand("moments", "closed-form moments and conversions");
    moments->require_subcommand(1);
    moments->fallthrough();

    std::string arg_from, arg_to, arg_values, arg_mean;
    std::string arg_alpha, arg_sigma, arg_f;

    CLI::App* m_convert =
        moments->add_subcommand("convert", "convert between moment representations");
    m_convert->add_option("--from", arg_from, "input kind")
        ->required()
        ->check(CLI::IsMember({"moments", "raw", "cumulants", "central"}));
    m_convert->add_option("--to", arg_to, "output kind")
        ->required()
        ->check(CLI::IsMember({"moments", "raw", "cumulants", "central"}));
    m_convert->add_option("values", arg_values, "comma-separated values, or - for stdin JSON")
        ->required();
    auto* convert_mean = m_convert->add_option("--mean", arg_mean, "first raw moment");
    m_convert->fallthrough();

    CLI::App* m_dirichlet =
        moments->add_subcommand("dirichlet", "moments of a weighted sum on the simplex");
    m_dirichlet->add_option("--alpha", arg_alpha, "simplex parameters a1,a2,...")->required();
    m_dirichlet->add_option("--s", arg_s, "weights s1,s2,...")->required();
    m_dirichlet->add_option("--n", arg_n, "moment order")->required();
    m_dirichlet->fallthrough();

    CLI::App* m_gamma =
        moments->add_subcommand("gamma-measure", "moments of the Gamma random measure");
    m_gamma->add_option("--sigma", arg_sigma, "intensity weights")->required();
    m_gamma->add_option("--f", arg_f, "test function values")->required();
    m_gamma->add_option("--n", arg_n, "order")->required();
    m_gamma->fallthrough();

    CLI::App* m_poisson =
        moments->add_subcommand("poisson-measure", "moments of the Poisson random measure");
    m_poisson->add_option("--sigma", arg_sigma, "intensity weights")->required();
    m_poisson->add_option("--f", arg_f, "test function values")->required();
    m_poisson->add_option("--n", arg_n, "order")->required();
    m_poisson->fallthrough();

    CLI::App* m_df =
        moments->add_subcommand("df", "moments of the normalized (simplicial) measure");
    m_df->add_option("--sigma", arg_sigma, "base weights")->required();
    m_df->add_option("--f", arg_f, "test function values")->required();
    m_df->add_option("--n", arg_n, "order")->required();
    m_df->fallthrough();

    // --- verify -----------------------------------------------------------
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->require_subcommand(1);
    verify->fallthrough();

    unsigned arg_k = 2;

    CLI::App* v_identities =
        verify->add_subcommand("identities", "exact polynomial and transform identities");
    v_identities->fallthrough();
    CLI::App* v_montecarlo =
        verify->add_subcommand("montecarlo", "samplers against closed forms");
    v_montecarlo->fallthrough();
    CLI::App* v_fock = verify->add_subcommand("fock", "inner products and integrals");
    v_fock->fallthrough();
    CLI::App* v_liealg = verify->add_subcommand("liealg", "ladder operator algebra");
    v_liealg->add_option("--k", arg_k, "ground space size");
    v_liealg->fallthrough();
    CLI::App* v_all = verify->add_subcommand("all", "every suite");
    v_all->add_option("--k", arg_k, "ground space size for the operator suite");
    v_all->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        flags.D_set = opt_D->count() > 0;
        flags.N_set = opt_N->count() > 0;
        flags.seed_set = opt_seed->count() > 0;
        flags.tolerance_set = opt_tol->count() > 0;
        flags.format_set = opt_format->count() > 0;
        flags.config_file_set = opt_config->count() > 0;
        const Config cfg = cli::resolve_config(flags);

        Json out;
        bool pretty = false;
        int exit_code = 0;

        if (c_partitions->parsed()) {
            const auto parts = momenta::integer_partitions(arg_n, arg_r);
            Json list = Json::array();
            for (const momenta::IntPartition& p : parts) list.push_back(p.parts_ascending());
            out["n"] = arg_n;
            out["count"] = parts.size();
            out["partitions"] = std::move(list);
        } else if (c_setparts->parsed()) {
            const auto parts = momenta::set_partitions(arg_n);
            Json list = Json::array();
            for (const momenta::SetPartition& p : parts) list.push_back(p.blocks);
            out["n"] = arg_n;
            out["count"] = parts.size();
            out["partitions"] = std::move(list);
        } else if (c_bell->parsed()) {
            const momenta::SparsePoly poly =
                arg_r ? momenta::bell_partial(arg_n, *arg_r) : momenta::bell_complete(arg_n);
            out = poly_result(poly, arg_eval, bell_eval->count() > 0);
        } else if (c_zn->parsed()) {
            out = poly_result(momenta::cycle_index_sn(arg_n), arg_eval, zn_eval->count() > 0);
        } else if (c_inventory->parsed()) {
            const Rat value = momenta::pattern_inventory(arg_n, cli::parse_rat_list(arg_s));
            out["value"] = momenta::rat_to_string(value);
        } else if (m_convert->parsed()) {
            const std::vector<Rat> values = cli::parse_values_arg(arg_values);
            out["values"] = rat_strings(convert_values(values, arg_from, arg_to, arg_mean,
                                                       convert_mean->count() > 0));
        } else if (m_dirichlet->parsed()) {
            const momenta::DirichletParams params{cli::parse_rat_list(arg_alpha)};
            const momenta::WeightVector s = cli::parse_rat_list(arg_s);
            out["multiindex"] = momenta::rat_to_string(
                momenta::dirichlet_moment_multiindex(params, s, arg_n));
            out["cycleindex"] = momenta::rat_to_string(
                momenta::dirichlet_moment_cycleindex(params, s, arg_n));
        } else if (m_gamma->parsed()) {
            const momenta::FiniteMeasure sigma{cli::parse_rat_list(arg_sigma)};
            const momenta::TestFunction f = cli::parse_rat_list(arg_f);
            out["moment"] =
                momenta::rat_to_string(momenta::gamma_measure_moment(sigma, f, arg_n));
            if (arg_n >= 1)
                out["cumulant"] =
                    momenta::rat_to_string(momenta::gamma_measure_cumulant(sigma, f, arg_n));
        } else if (m_poisson->parsed()) {
            const momenta::FiniteMeasure sigma{cli::parse_rat_list(arg_sigma)};
            const momenta::TestFunction f = cli::parse_rat_list(arg_f);
            out["moment"] =
                momenta::rat_to_string(momenta::poisson_measure_moment(sigma, f, arg_n));
            if (arg_n >= 1) {
                const std::vector<Rat> powers = momenta::power_expectations(sigma, f, arg_n);
                out["cumulant"] = momenta::rat_to_string(powers[arg_n - 1]);
            }
        } else if (m_df->parsed()) {
            const momenta::FiniteMeasure sigma{cli::parse_rat_list(arg_sigma)};
            const momenta::TestFunction f = cli::parse_rat_list(arg_f);
            out["value"] = momenta::rat_to_string(momenta::df_moment(sigma, f, arg_n));
        } else {
            std::vector<CheckRow> rows;
            if (v_identities->parsed()) {
                rows = cli::run_identities(cfg);
            } else if (v_montecarlo->parsed()) {
                rows = cli::run_montecarlo(cfg);
            } else if (v_fock->parsed()) {
                rows = cli::run_fock(cfg);
            } else if (v_liealg->parsed()) {
                rows = cli::run_liealg(cfg, arg_k, cfg.D);
            } else if (v_all->parsed()) {
                rows = cli::run_identities(cfg);
                for (auto&& suite : {cli::run_montecarlo(cfg), cli::run_fock(cfg),
                                     cli::run_liealg(cfg, arg_k, cfg.D)})
                    rows.insert(rows.end(), suite.begin(), suite.end());
            }
            out = cli::report_from_rows(rows);
            pretty = true;
            if (out["failed"].get<std::size_t>() > 0) exit_code = 3;
        }

        cli::emit(out, cfg, pretty);
        return exit_code;
    } catch (const cli::UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

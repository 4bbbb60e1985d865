// Command-line front end: sequence generation, the operators on stored
// sequences, and the Monte-Carlo experiments with JSON/CSV reports.
//
// Exit codes: 0 success (including --help), 2 usage errors (bad flags or
// flag values), 3 data errors (unreadable, malformed, or incompatible
// sequence files).

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bivseq/bit_sequence.hpp"
#include "bivseq/cascade.hpp"
#include "bivseq/dyadic.hpp"
#include "bivseq/entanglement.hpp"
#include "bivseq/errors.hpp"
#include "bivseq/io.hpp"
#include "bivseq/latitude.hpp"
#include "bivseq/measurement.hpp"
#include "bivseq/operators.hpp"
#include "bivseq/rng.hpp"
#include "bivseq/sphere.hpp"

namespace {

using json = nlohmann::ordered_json;
constexpr std::uint64_t kDefaultSeed = 0x5EEDB175u;  // fixed, never time-derived
constexpr double kPi = std::numbers::pi_v<double>;

struct RunConfig {
    std::uint64_t trials = 100000;
    std::uint64_t seed = kDefaultSeed;
    unsigned window_bits = 64;
    unsigned parallel = 1;
    std::string format = "json";
    std::string out;  // empty = stdout
};

void add_run_options(CLI::App* cmd, RunConfig& cfg, bool with_trials = true) {
    if (with_trials)
        cmd->add_option("--trials", cfg.trials, "Monte-Carlo trials")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "run seed")->capture_default_str();
    cmd->add_option("--window-bits", cfg.window_bits,
                    "digits compared per window")
        ->check(CLI::Range(8u, 1024u))
        ->capture_default_str();
    if (with_trials)
        cmd->add_option("--parallel", cfg.parallel,
                        "worker threads; never changes the report")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    cmd->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", cfg.out, "write the report here instead of stdout");
}

std::string dtos(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

// Reports are built fully in memory and written in one piece: a failed run
// never leaves a partial file behind.
void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw bivseq::FileFormatError("cannot open for writing: " + out_path);
    f << text;
    if (!f) throw bivseq::FileFormatError("write failed: " + out_path);
}

json report_json(const bivseq::StatReport& r) {
    return json{{"estimate", r.estimate},
                {"std_error", r.std_error},
                {"samples", r.samples}};
}

json stat_report(const std::string& op, const bivseq::StatReport& r,
                 json params) {
    return json{{"op", op},          {"estimate", r.estimate},
                {"std_error", r.std_error}, {"samples", r.samples},
                {"seed", r.seed},    {"params", std::move(params)}};
}

int run_gen(std::uint64_t length, std::uint64_t seed, const std::string& out) {
    bivseq::SplitMix64 g(seed);
    bivseq::write_bsq1_file(bivseq::random_sequence(length, g), out);
    return 0;
}

int run_info(const std::string& in) {
    const bivseq::BitSequence s = bivseq::read_bsq1_file(in);
    const bivseq::SequenceStats st = bivseq::stats(s);
    const bivseq::RealInterval iv = bivseq::prefix_real(s);
    json j{{"length", s.size()},
           {"mean", st.mean},
           {"variance", st.variance},
           {"prefix_lo", iv.lo},
           {"prefix_hi", iv.hi}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

struct OpFlags {
    std::string i_power;
    std::optional<double> j_theta;
    bool negate = false;
    unsigned window_bits = 64;
    std::string in, out;
};

int run_op(const OpFlags& f) {
    const bivseq::BitSequence s = bivseq::read_bsq1_file(f.in);
    bivseq::BitSequence result = [&] {
        if (!f.i_power.empty())
            return bivseq::apply_i_power(bivseq::DyadicExponent::parse(f.i_power),
                                         s);
        if (f.j_theta)
            return bivseq::apply_j({*f.j_theta, f.window_bits}, s).output;
        return bivseq::negate(s);
    }();
    bivseq::write_bsq1_file(result, f.out);
    return 0;
}

int run_born(double theta, const RunConfig& cfg) {
    if (cfg.format == "csv")
        throw CLI::ValidationError("--format", "born emits JSON only");
    const bivseq::StatReport r = bivseq::born_estimate(
        theta, cfg.trials, cfg.seed, cfg.window_bits, cfg.parallel);
    emit(stat_report("born", r,
                     json{{"theta", theta}, {"window_bits", cfg.window_bits}})
                 .dump(2) +
             "\n",
         cfg.out);
    return 0;
}

int run_epr(const std::vector<double>& deltas, const RunConfig& cfg) {
    std::vector<bivseq::StatReport> rows;
    rows.reserve(deltas.size());
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        const bivseq::EprSpec spec{deltas[i], cfg.trials,
                                   bivseq::derive_seed(cfg.seed, i),
                                   cfg.window_bits};
        rows.push_back(bivseq::correlation_estimate(spec, cfg.parallel));
    }
    if (cfg.format == "csv") {
        std::string text = "delta_theta,estimate,std_error,samples\n";
        for (std::size_t i = 0; i < deltas.size(); ++i) {
            text += dtos(deltas[i]) + "," + dtos(rows[i].estimate) + "," +
                    dtos(rows[i].std_error) + "," +
                    std::to_string(rows[i].samples) + "\n";
        }
        emit(text, cfg.out);
        return 0;
    }
    json results = json::array();
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        json r = report_json(rows[i]);
        r["delta_theta"] = deltas[i];
        results.push_back(std::move(r));
    }
    json j{{"op", "epr"},
           {"seed", cfg.seed},
           {"params", json{{"window_bits", cfg.window_bits}}},
           {"results", std::move(results)}};
    emit(j.dump(2) + "\n", cfg.out);
    return 0;
}

int run_chsh(const bivseq::ChshSettings& settings, const RunConfig& cfg) {
    if (cfg.format == "csv")
        throw CLI::ValidationError("--format", "chsh emits JSON only");
    const bivseq::ChshReport r = bivseq::bell_chsh_scan(
        settings, cfg.trials, cfg.seed, cfg.window_bits, cfg.parallel);
    json j = stat_report("chsh", r.s,
                         json{{"a", settings.a},
                              {"b", settings.b},
                              {"a_prime", settings.a_prime},
                              {"b_prime", settings.b_prime},
                              {"window_bits", cfg.window_bits}});
    j["correlations"] = json{{"ab", report_json(r.c_ab)},
                             {"ab_prime", report_json(r.c_ab_prime)},
                             {"a_prime_b", report_json(r.c_a_prime_b)},
                             {"a_prime_b_prime",
                              report_json(r.c_a_prime_b_prime)}};
    emit(j.dump(2) + "\n", cfg.out);
    return 0;
}

int run_uncertainty(double colat, double lon, const RunConfig& cfg) {
    if (cfg.format == "csv")
        throw CLI::ValidationError("--format", "uncertainty emits JSON only");
    const bivseq::UncertaintyReport r = bivseq::uncertainty_mc(
        colat, lon, cfg.trials, cfg.seed, cfg.window_bits);
    const bivseq::TrigUncertainty trig = bivseq::uncertainty_trig(colat, lon);
    json j{{"op", "uncertainty"},
           {"seed", cfg.seed},
           {"params", json{{"colat", colat},
                           {"lon", lon},
                           {"trials", cfg.trials},
                           {"window_bits", cfg.window_bits}}},
           {"sigma_colat", report_json(r.sigma_colat)},
           {"sigma_lon", report_json(r.sigma_lon)},
           {"mu_colat_prime", report_json(r.mu_colat_prime)},
           {"product", r.sigma_colat.estimate * r.sigma_lon.estimate},
           {"abs_mu", std::fabs(r.mu_colat_prime.estimate)},
           {"trig_cos_colat_prime", trig.cos_colat_prime}};
    emit(j.dump(2) + "\n", cfg.out);
    return 0;
}

int run_cascade(const bivseq::CascadeSpec& spec, const RunConfig& cfg) {
    const auto rows = bivseq::cascade_table(spec);
    const auto limit = bivseq::omega_limit(spec);
    if (cfg.format == "csv") {
        std::string text = "n,k,tau,omega_partial\n";
        for (const auto& r : rows) {
            text += std::to_string(r.level) + "," + dtos(r.wavenumber) + "," +
                    dtos(r.turnover) + "," + dtos(r.partial_sum) + "\n";
        }
        emit(text, cfg.out);
        return 0;
    }
    json jrows = json::array();
    for (const auto& r : rows)
        jrows.push_back(json{{"n", r.level},
                             {"k", r.wavenumber},
                             {"tau", r.turnover},
                             {"omega_partial", r.partial_sum}});
    json j{{"op", "cascade"},
           {"params", json{{"spectral_slope", spec.spectral_slope},
                           {"k_base", spec.k_base},
                           {"levels", spec.levels}}},
           {"rows", std::move(jrows)}};
    j["limit"] = limit ? json(*limit) : json(nullptr);
    emit(j.dump(2) + "\n", cfg.out);
    return 0;
}

int run_noncomputability(unsigned max_n, const RunConfig& cfg) {
    std::vector<bivseq::StatReport> rows;
    for (unsigned n = 0; n <= max_n; ++n) {
        rows.push_back(bivseq::outcome_flip_estimate(
            n, cfg.trials, bivseq::derive_seed(cfg.seed, n), cfg.parallel));
    }
    if (cfg.format == "csv") {
        std::string text = "n,estimate,std_error,samples\n";
        for (unsigned n = 0; n <= max_n; ++n) {
            text += std::to_string(n) + "," + dtos(rows[n].estimate) + "," +
                    dtos(rows[n].std_error) + "," +
                    std::to_string(rows[n].samples) + "\n";
        }
        emit(text, cfg.out);
        return 0;
    }
    json results = json::array();
    for (unsigned n = 0; n <= max_n; ++n) {
        json r = report_json(rows[n]);
        r["n"] = n;
        results.push_back(std::move(r));
    }
    json j{{"op", "noncomputability"},
           {"seed", cfg.seed},
           {"params", json{{"max_n", max_n}, {"trials", cfg.trials}}},
           {"results", std::move(results)}};
    emit(j.dump(2) + "\n", cfg.out);
    return 0;
}

int run_grid_overlap(unsigned meridians, double theta0, double tolerance,
                     const RunConfig& cfg) {
    if (cfg.format == "csv")
        throw CLI::ValidationError("--format", "grid-overlap emits JSON only");
    const bivseq::GridSpec spec{meridians};
    json j{{"op", "grid-overlap"},
           {"params", json{{"meridians", meridians},
                           {"theta0", theta0},
                           {"tolerance", tolerance}}},
           {"overlap_count", bivseq::grid_overlap_count(spec, theta0, tolerance)},
           {"grid_points", bivseq::grid_point_count(spec)}};
    emit(j.dump(2) + "\n", cfg.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bivalent-sequence models of two-state systems"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "write a fresh random sequence file");
    std::uint64_t gen_length = 1u << 20;
    std::uint64_t gen_seed = kDefaultSeed;
    std::string gen_out;
    gen->add_option("--length", gen_length, "elements")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
    gen->add_option("--out", gen_out, "output file")->required();

    // info
    auto* info = app.add_subcommand("info", "summarize a sequence file");
    std::string info_in;
    info->add_option("--in", info_in, "input file")->required();

    // op
    auto* op = app.add_subcommand("op", "apply an operator to a sequence file");
    OpFlags opf;
    auto* op_i = op->add_option("--i-power", opf.i_power,
                                "dyadic exponent, e.g. 2, 1/2, 3/2^3");
    auto* op_j = op->add_option("--j-theta", opf.j_theta,
                                "latitude map at this latitude (radians); the "
                                "output is window_bits - 1 elements shorter");
    auto* op_n = op->add_flag("--negate", opf.negate, "flip every sign");
    op->add_option("--window-bits", opf.window_bits, "latitude window")
        ->check(CLI::Range(8u, 1024u))
        ->capture_default_str();
    op->add_option("--in", opf.in, "input file")->required();
    op->add_option("--out", opf.out, "output file")->required();
    op_i->excludes(op_j)->excludes(op_n);
    op_j->excludes(op_n);

    // experiment
    auto* ex = app.add_subcommand("experiment", "run a Monte-Carlo experiment");
    ex->require_subcommand(1);

    RunConfig born_cfg;
    double born_theta = 0.0;
    auto* born = ex->add_subcommand("born", "outcome frequency vs latitude");
    born->add_option("--theta", born_theta, "latitude (radians)")->required();
    add_run_options(born, born_cfg);

    RunConfig epr_cfg;
    std::vector<double> epr_deltas;
    auto* epr = ex->add_subcommand("epr", "pair correlation vs relative angle");
    epr->add_option("--delta-theta", epr_deltas,
                    "relative setting angle (repeatable)")
        ->required();
    add_run_options(epr, epr_cfg);

    RunConfig chsh_cfg;
    bivseq::ChshSettings chsh{0.0, kPi / 4, kPi / 2, 3 * kPi / 4};
    auto* chsh_cmd = ex->add_subcommand("chsh", "four-setting correlation sum");
    chsh_cmd->add_option("--a", chsh.a, "first setting, side one")
        ->capture_default_str();
    chsh_cmd->add_option("--b", chsh.b, "first setting, side two")
        ->capture_default_str();
    chsh_cmd->add_option("--a-prime", chsh.a_prime, "second setting, side one")
        ->capture_default_str();
    chsh_cmd->add_option("--b-prime", chsh.b_prime, "second setting, side two")
        ->capture_default_str();
    add_run_options(chsh_cmd, chsh_cfg);

    RunConfig unc_cfg;
    double unc_colat = 0.0, unc_lon = 0.0;
    auto* unc = ex->add_subcommand("uncertainty", "spread product vs mean");
    unc->add_option("--colat", unc_colat, "colatitude (radians)")->required();
    unc->add_option("--lon", unc_lon, "longitude (radians)")->required();
    add_run_options(unc, unc_cfg);

    RunConfig casc_cfg;
    bivseq::CascadeSpec casc;
    auto* cascade = ex->add_subcommand("cascade", "octave turnover-time sum");
    cascade->add_option("--slope", casc.spectral_slope, "spectral slope")
        ->capture_default_str();
    cascade->add_option("--k-base", casc.k_base, "base wavenumber")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cascade->add_option("--levels", casc.levels, "octaves to sum")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_run_options(cascade, casc_cfg, /*with_trials=*/false);

    RunConfig nc_cfg;
    unsigned nc_max_n = 10;
    auto* nc = ex->add_subcommand("noncomputability",
                                  "measurement flips under deeper roots");
    nc->add_option("--max-n", nc_max_n, "largest root order")
        ->capture_default_str();
    add_run_options(nc, nc_cfg);

    RunConfig grid_cfg;
    unsigned grid_n = 8;
    double grid_theta0 = 0.0, grid_tol = 1e-12;
    auto* grid = ex->add_subcommand("grid-overlap",
                                    "grid points surviving a frame rotation");
    grid->add_option("--meridians", grid_n, "grid meridians")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    grid->add_option("--theta0", grid_theta0,
                     "rotation away from identity (radians)")
        ->required();
    grid->add_option("--tolerance", grid_tol, "sine match tolerance")
        ->capture_default_str();
    add_run_options(grid, grid_cfg, /*with_trials=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) return run_gen(gen_length, gen_seed, gen_out);
        if (*info) return run_info(info_in);
        if (*op) {
            if (op_i->count() + op_j->count() + op_n->count() != 1) {
                std::cerr << "op: pass exactly one of --i-power, --j-theta, "
                             "--negate\n";
                return 2;
            }
            return run_op(opf);
        }
        if (*born) return run_born(born_theta, born_cfg);
        if (*epr) return run_epr(epr_deltas, epr_cfg);
        if (*chsh_cmd) return run_chsh(chsh, chsh_cfg);
        if (*unc) return run_uncertainty(unc_colat, unc_lon, unc_cfg);
        if (*cascade) return run_cascade(casc, casc_cfg);
        if (*nc) return run_noncomputability(nc_max_n, nc_cfg);
        if (*grid) return run_grid_overlap(grid_n, grid_theta0, grid_tol,
                                           grid_cfg);
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const bivseq::NonDyadicExponent& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bivseq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

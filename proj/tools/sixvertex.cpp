// Command-line front end: every module exposed as a reproducible subcommand
// with CSV/JSON artifacts and a manifest describing the run.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sixv/asymptotics.hpp"
#include "sixv/enumeration.hpp"
#include "sixv/equilibrium.hpp"
#include "sixv/io.hpp"
#include "sixv/parallel.hpp"
#include "sixv/phase.hpp"
#include "sixv/rhp.hpp"
#include "sixv/version.hpp"

namespace {

using nlohmann::json;
using sixv::Rational;
using sixv::RationalParameter;

struct CommonOpts {
    std::string x_str = "0";
    std::string out;
    std::string format = "csv";
    unsigned threads = 0;  // 0 = logical cores
    double tol = 1e-9;
    int digits = 15;
    unsigned prec = 256;
};

json defaults_json() {
    return json{{"format", "csv"},   {"threads", 0},       {"digits", 15},
                {"prec", 256},       {"tol", 1e-9},        {"radius_frac", 0.9},
                {"grid", 200},       {"samples", 256},     {"n", 8},
                {"n_min", 16},       {"n_max", 64},        {"y_max", 0.2},
                {"steps", 50},       {"x_min", -0.9},      {"x_max", 0.9},
                {"side", "both"},    {"schema_version", sixv::kSchemaVersion}};
}

unsigned effective_threads(unsigned t) { return t ? t : sixv::default_thread_count(); }

void add_common(CLI::App* cmd, CommonOpts& o, bool with_x = true) {
    if (with_x)
        cmd->add_option("--x", o.x_str, "model parameter x as a rational p/q, |x| < 1")
            ->capture_default_str();
    cmd->add_option("--out", o.out, "output artifact path (manifest written alongside)");
    cmd->add_option("--format", o.format, "artifact format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--threads", o.threads, "worker threads (0 = logical cores)")
        ->capture_default_str();
    cmd->add_option("--tol", o.tol, "tolerance override for numeric checks")
        ->capture_default_str();
    cmd->add_option("--digits", o.digits, "significant digits for decimal rendering")
        ->capture_default_str();
    cmd->add_option("--prec", o.prec, "working precision in bits for the float paths")
        ->capture_default_str();
}

// Writes the artifact plus a manifest placed next to it.
void write_artifact(const CommonOpts& o, const std::string& command, const json& args,
                    const std::string& payload, double seconds) {
    if (o.out.empty()) return;
    {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + o.out);
        f << payload;
    }
    json manifest{{"schema_version", sixv::kSchemaVersion},
                  {"command", command},
                  {"arguments", args},
                  {"version", sixv::kVersion},
                  {"duration_seconds", seconds},
                  {"timestamp", static_cast<long>(std::chrono::duration_cast<std::chrono::seconds>(
                                    std::chrono::system_clock::now().time_since_epoch())
                                    .count())}};
    std::ofstream m(o.out + ".manifest.json", std::ios::binary);
    m << manifest.dump(2) << '\n';
}

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// --- exact ------------------------------------------------------------------

int run_exact(const CommonOpts& o, std::size_t N) {
    Timer timer;
    auto x = RationalParameter::parse(o.x_str);
    auto chain = sixv::hankel_chain(N, x);
    auto z = sixv::partition_exact(chain);
    std::cout << "Z_" << N << "(" << x.str() << ") = " << z.Z.get_str() << "\n";
    std::cout << "h-chain:";
    for (std::size_t k = 0; k < chain.N; ++k) std::cout << " " << chain.h[k].get_str();
    std::cout << "\n";
    std::string payload;
    if (o.format == "json") {
        payload = sixv::chain_to_json(chain, z).dump(2) + "\n";
    } else {
        std::ostringstream os;
        sixv::CsvWriter csv(os);
        csv.row({"k", "h", "tau"});
        for (std::size_t k = 0; k < chain.N; ++k)
            csv.row({std::to_string(k), sixv::rational_to_decimal(chain.h[k], o.digits),
                     sixv::rational_to_decimal(chain.tau[k], o.digits)});
        payload = os.str();
    }
    write_artifact(o, "exact", json{{"x", x.str()}, {"N", N}}, payload, timer.seconds());
    return 0;
}

// --- oracle -----------------------------------------------------------------

int run_oracle(const CommonOpts& o, std::size_t N, const std::string& a_str,
               const std::string& b_str, const std::string& c_str, bool dump_configs) {
    Timer timer;
    Rational a, b, c;
    if (a.set_str(a_str, 10) || b.set_str(b_str, 10) || c.set_str(c_str, 10))
        throw CLI::ValidationError("--a/--b/--c must be rationals p/q");
    a.canonicalize();
    b.canonicalize();
    c.canonicalize();
    Rational z = sixv::partition_bruteforce(N, a, b, c);
    std::size_t count = sixv::count_configs(N);
    auto rep = sixv::conservation_report(N);
    std::cout << "Z_" << N << "(" << a.get_str() << "," << b.get_str() << "," << c.get_str()
              << ") = " << z.get_str() << "  configurations: " << count << "\n";
    std::cout << "n5 - n6 constant: " << (rep.n5_minus_n6_constant ? "yes" : "NO")
              << " (value " << rep.n5_minus_n6 << ")\n";
    json j{{"schema_version", sixv::kSchemaVersion},
           {"N", N},
           {"a", a.get_str()},
           {"b", b.get_str()},
           {"c", c.get_str()},
           {"Z", z.get_str()},
           {"count", count},
           {"n5_minus_n6", rep.n5_minus_n6},
           {"n5_minus_n6_constant", rep.n5_minus_n6_constant}};
    if (dump_configs) {
        json arr = json::array();
        for (const auto& cfg : sixv::enumerate_configs(N))
            arr.push_back(sixv::configuration_to_json(cfg));
        j["configurations"] = arr;
    }
    write_artifact(o, "oracle",
                   json{{"N", N}, {"a", a.get_str()}, {"b", b.get_str()}, {"c", c.get_str()}},
                   j.dump(2) + "\n", timer.seconds());
    return 0;
}

// --- toda -------------------------------------------------------------------

int run_toda(const CommonOpts& o, std::size_t n_max) {
    Timer timer;
    auto x = RationalParameter::parse(o.x_str);
    bool all_ok = true;
    std::ostringstream os;
    sixv::CsvWriter csv(os);
    csv.row({"N", "residual_zero"});
    for (std::size_t N = 1; N <= n_max; ++N) {
        auto r = sixv::toda_check(N, x);
        if (!r.ok) {
            all_ok = false;
            std::cout << "N=" << N << ": residual " << r.residual.get_str() << "\n";
        }
        csv.row({std::to_string(N), r.ok ? "1" : "0"});
    }
    if (all_ok)
        std::cout << "residual 0 for all N <= " << n_max << " at x = " << x.str() << "\n";
    write_artifact(o, "toda", json{{"x", x.str()}, {"n_max", n_max}}, os.str(),
                   timer.seconds());
    return all_ok ? 0 : 1;
}

// --- eqm --------------------------------------------------------------------

int run_eqm(const CommonOpts& o, std::size_t grid, std::size_t samples) {
    Timer timer;
    auto xq = RationalParameter::parse(o.x_str);
    double x = xq.to_double();
    auto ep = sixv::endpoints(x);
    double norm = sixv::density_normalization(x);
    auto var = sixv::variational_check(x, grid);
    std::cout << "endpoints: alpha = " << ep.alpha << ", beta = " << ep.beta << "\n";
    std::cout << "int rho = " << sixv::format_double(norm)
              << " (|deviation| = " << std::abs(norm - 1) << ")\n";
    std::cout << "variational: max equality residual " << var.max_equality_residual
              << ", max outside value " << var.max_outside_value << "\n";
    bool ok = std::abs(norm - 1) < o.tol * 10 && var.max_equality_residual < o.tol &&
              var.max_outside_value < 0;

    std::ostringstream os;
    sixv::CsvWriter csv(os);
    csv.row({"z", "rho", "re_g", "im_g"});
    std::vector<std::array<double, 4>> rows(samples);
    sixv::parallel_for(samples, effective_threads(o.threads), [&](std::size_t i) {
        double t = (static_cast<double>(i) + 0.5) / static_cast<double>(samples);
        double z = ep.alpha + t * (ep.beta - ep.alpha);
        double guard = 1e-6 * (ep.beta - ep.alpha);
        if (std::abs(z) < guard) z += 2 * guard;
        auto g = sixv::g_function(sixv::Cx<double>{z, 1e-14}, x);
        rows[i] = {z, sixv::density(z, x), g.re, g.im};
    });
    for (const auto& r : rows)
        csv.row({sixv::format_double(r[0]), sixv::format_double(r[1]), sixv::format_double(r[2]),
                 sixv::format_double(r[3])});
    std::string payload;
    if (o.format == "json") {
        json j{{"schema_version", sixv::kSchemaVersion},
               {"x", xq.str()},
               {"alpha", ep.alpha},
               {"beta", ep.beta},
               {"normalization", norm},
               {"max_equality_residual", var.max_equality_residual},
               {"max_outside_value", var.max_outside_value}};
        payload = j.dump(2) + "\n";
    } else {
        payload = os.str();
    }
    write_artifact(o, "eqm", json{{"x", xq.str()}, {"grid", grid}}, payload, timer.seconds());
    return ok ? 0 : 1;
}

// --- rhp --------------------------------------------------------------------

int run_rhp(const CommonOpts& o, std::vector<unsigned long> Ns, const std::string& side,
            double radius_frac) {
    Timer timer;
    auto xq = RationalParameter::parse(o.x_str);
    double x = xq.to_double();
    double radius = radius_frac * sixv::edge_map_radius_limit(x);
    std::sort(Ns.begin(), Ns.end());
    std::vector<sixv::EdgeSide> sides;
    if (side == "right" || side == "both") sides.push_back(sixv::EdgeSide::right);
    if (side == "left" || side == "both") sides.push_back(sixv::EdgeSide::left);

    json reports = json::array();
    bool ok = true;
    for (auto s : sides) {
        std::vector<sixv::ParametrixReport> reps(Ns.size());
        sixv::parallel_for(Ns.size(), effective_threads(o.threads), [&](std::size_t i) {
            reps[i] = sixv::parametrix_match(s, Ns[i], x, radius);
        });
        for (std::size_t i = 0; i < reps.size(); ++i) {
            double ratio = i ? reps[i].max_residual / reps[i - 1].max_residual : 0.0;
            json j{{"side", s == sixv::EdgeSide::right ? "right" : "left"},
                   {"N", Ns[i]},
                   {"x", x},
                   {"radius", radius},
                   {"max_residual", reps[i].max_residual},
                   {"scaling_ratio", ratio}};
            reports.push_back(j);
            std::cout << (s == sixv::EdgeSide::right ? "right" : "left") << " N=" << Ns[i]
                      << ": max residual " << reps[i].max_residual;
            if (i) std::cout << "  (ratio " << ratio << ")";
            std::cout << "\n";
        }
    }
    // model solution sanity on this x
    sixv::Mat2 M = sixv::model_M({2 * sixv::endpoints(x).beta, 0.4}, x);
    double det_dev = abs(M.det() - sixv::Cd(1.0));
    std::cout << "det M deviation: " << det_dev << "\n";
    if (det_dev > 1e-10) ok = false;
    json top{{"schema_version", sixv::kSchemaVersion}, {"reports", reports}};
    write_artifact(o, "rhp", json{{"x", xq.str()}, {"side", side}, {"radius_frac", radius_frac}},
                   top.dump(2) + "\n", timer.seconds());
    return ok ? 0 : 1;
}

// --- phase ------------------------------------------------------------------

int run_phase(const CommonOpts& o, const std::string& sweep, double y_max, std::size_t steps,
              double x_min, double x_max) {
    Timer timer;
    std::ostringstream os;
    sixv::CsvWriter csv(os);
    csv.row({"x", "y", "gamma", "t", "delta", "F", "F_reg", "F_sing", "phase"});
    auto emit = [&](double x, double y) {
        auto p = sixv::make_phase_point(x, y);
        auto g = sixv::coords_to_gamma_t(x, y);
        double F, Freg, Fsing;
        if (p.phase == sixv::Phase::disordered) {
            F = Freg = sixv::free_energy_D(x, y);
            Fsing = 0;
        } else if (p.phase == sixv::Phase::antiferroelectric) {
            Freg = sixv::free_energy_AF_reg(x, y);
            Fsing = sixv::free_energy_AF_sing(x, y).value;
            F = Freg + Fsing;
        } else {
            F = Freg = sixv::critical_free_energy(x);
            Fsing = 0;
        }
        csv.row({sixv::format_double(x), sixv::format_double(y), sixv::format_double(g.gamma),
                 sixv::format_double(g.t), sixv::format_double(p.delta), sixv::format_double(F),
                 sixv::format_double(Freg), sixv::format_double(Fsing),
                 sixv::phase_name(p.phase)});
    };
    auto xq = RationalParameter::parse(o.x_str);
    double x = xq.to_double();
    if (sweep == "critical") {
        for (std::size_t i = 0; i <= steps; ++i)
            emit(x_min + (x_max - x_min) * static_cast<double>(i) / static_cast<double>(steps),
                 0.0);
    } else {
        double sign = sweep == "D" ? 1.0 : -1.0;
        for (std::size_t i = 1; i <= steps; ++i)
            emit(x, sign * y_max * static_cast<double>(i) / static_cast<double>(steps));
    }
    std::cout << "phase sweep (" << sweep << "): " << steps << " rows\n";
    write_artifact(o, "phase",
                   json{{"x", xq.str()}, {"sweep", sweep}, {"y_max", y_max}, {"steps", steps}},
                   os.str(), timer.seconds());
    return 0;
}

// --- asym / fit / compare ---------------------------------------------------

std::vector<unsigned long> n_range(std::size_t n_min, std::size_t n_max) {
    if (n_max < n_min) throw CLI::ValidationError("--n-max must be >= --n-min");
    std::vector<unsigned long> Ns;
    for (std::size_t n = n_min; n <= n_max; ++n) Ns.push_back(n);
    return Ns;
}

int run_asym(const CommonOpts& o, std::size_t n_min, std::size_t n_max) {
    Timer timer;
    auto x = RationalParameter::parse(o.x_str);
    if (n_min < 16) n_min = 16;
    auto Ns = n_range(n_min, n_max);
    auto chain = sixv::hankel_chain(n_max + 1, x);
    auto rows = sixv::comparison_table(chain, Ns, o.prec);
    std::ostringstream os;
    sixv::CsvWriter csv(os);
    csv.row({"N", "x", "exact", "predicted", "ratio", "measured_eps", "predicted_eps"});
    for (const auto& r : rows)
        csv.row({std::to_string(r.N), sixv::format_double(r.x), r.exact, r.predicted,
                 sixv::format_double(r.ratio), sixv::format_double(r.measured_eps),
                 sixv::format_double(r.predicted_eps)});
    std::cout << "correction-term comparison: " << rows.size() << " rows, last ratio "
              << rows.back().ratio << "\n";
    write_artifact(o, "asym", json{{"x", x.str()}, {"n_min", n_min}, {"n_max", n_max}},
                   os.str(), timer.seconds());
    return 0;
}

int run_fit(const CommonOpts& o, std::size_t n_min, std::size_t n_max) {
    Timer timer;
    auto x = RationalParameter::parse(o.x_str);
    auto Ns = n_range(n_min, n_max);
    auto chain = sixv::hankel_chain(n_max, x);
    auto seq = sixv::ln_c0_sequence(chain, Ns, o.prec);
    auto fit = sixv::fit_C0(x.to_double(), Ns, seq);
    std::cout << "C0 = " << fit.c0 << "  (ln C0 = " << fit.ln_c0 << " +- " << fit.sigma_ln_c0
              << ")\n";
    std::cout << "residual rms " << fit.residual_rms << ", decay ratio "
              << fit.residual_decay_ratio << "\n";
    if (!fit.asymptotic_regime_reached)
        std::cout << "warning: asymptotic regime not reached (residuals not decaying)\n";
    json j{{"schema_version", sixv::kSchemaVersion},
           {"x", x.str()},
           {"C0", fit.c0},
           {"ln_C0", fit.ln_c0},
           {"sigma_ln_C0", fit.sigma_ln_c0},
           {"slope_d", fit.slope_d},
           {"residual_rms", fit.residual_rms},
           {"residual_decay_ratio", fit.residual_decay_ratio},
           {"asymptotic_regime_reached", fit.asymptotic_regime_reached}};
    write_artifact(o, "fit", json{{"x", x.str()}, {"n_min", n_min}, {"n_max", n_max}},
                   j.dump(2) + "\n", timer.seconds());
    return 0;
}

int run_compare(const CommonOpts& o, std::size_t n_min, std::size_t n_max) {
    Timer timer;
    auto x = RationalParameter::parse(o.x_str);
    if (n_min >= n_max) throw CLI::ValidationError("need a nonempty increasing N range");
    auto Ns = n_range(std::max<std::size_t>(n_min, 16), n_max);
    auto chain = sixv::hankel_chain(n_max + 1, x);
    auto rows = sixv::comparison_table(chain, Ns, o.prec);
    auto seq = sixv::ln_c0_sequence(chain, Ns, o.prec);
    auto fit = sixv::fit_C0(x.to_double(), Ns, seq);
    std::ostringstream os;
    sixv::CsvWriter csv(os);
    csv.row({"N", "x", "h_ratio_pred_over_exact", "measured_eps", "predicted_eps",
             "lnZ_residual_after_fit"});
    for (std::size_t i = 0; i < rows.size(); ++i) {
        double resid = seq[i] - fit.ln_c0 - fit.slope_d / static_cast<double>(Ns[i]);
        csv.row({std::to_string(rows[i].N), sixv::format_double(rows[i].x),
                 sixv::format_double(rows[i].ratio), sixv::format_double(rows[i].measured_eps),
                 sixv::format_double(rows[i].predicted_eps), sixv::format_double(resid)});
    }
    std::cout << "compare: " << rows.size() << " rows; C0 = " << fit.c0 << "\n";
    write_artifact(o, "compare", json{{"x", x.str()}, {"n_min", n_min}, {"n_max", n_max}},
                   os.str(), timer.seconds());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"six-vertex model with domain wall boundary conditions on the critical line "
                 "a=1-x, b=1+x, c=2: exact partition functions, brute-force oracle, "
                 "equilibrium measure, Riemann-Hilbert model objects, asymptotics and the "
                 "phase diagram"};
    app.require_subcommand(0, 1);
    bool dump_defaults = false;
    app.add_flag("--dump-defaults", dump_defaults, "print built-in defaults as JSON and exit");

    CommonOpts exact_o;
    std::size_t exact_n = 8;
    auto* c_exact = app.add_subcommand("exact", "exact Z_N and the h-chain via Hankel "
                                                "determinants over rationals");
    add_common(c_exact, exact_o);
    c_exact->add_option("--n", exact_n, "matrix size N")->capture_default_str();

    CommonOpts oracle_o;
    std::size_t oracle_n = 3;
    std::string oa = "1", ob = "1", oc = "2";
    bool dump_configs = false;
    auto* c_oracle =
        app.add_subcommand("oracle", "brute-force enumeration over DWBC configurations");
    add_common(c_oracle, oracle_o, false);
    c_oracle->add_option("--n", oracle_n, "lattice size N (<= 6)")->capture_default_str();
    c_oracle->add_option("--a", oa, "weight a (rational)")->capture_default_str();
    c_oracle->add_option("--b", ob, "weight b (rational)")->capture_default_str();
    c_oracle->add_option("--c", oc, "weight c (rational)")->capture_default_str();
    c_oracle->add_flag("--dump-configs", dump_configs, "include configurations in the artifact");

    CommonOpts toda_o;
    std::size_t toda_nmax = 20;
    auto* c_toda = app.add_subcommand("toda", "exact Toda-equation residuals");
    add_common(c_toda, toda_o);
    c_toda->add_option("--n-max", toda_nmax, "check all N up to this bound")
        ->capture_default_str();

    CommonOpts eqm_o;
    std::size_t eqm_grid = 200, eqm_samples = 256;
    auto* c_eqm = app.add_subcommand("eqm", "equilibrium measure: density, g-function, "
                                            "variational conditions");
    add_common(c_eqm, eqm_o);
    c_eqm->add_option("--grid", eqm_grid, "variational grid size")->capture_default_str();
    c_eqm->add_option("--samples", eqm_samples, "density/g sampling points for CSV")
        ->capture_default_str();

    CommonOpts rhp_o;
    std::vector<unsigned long> rhp_ns = {20, 40, 80};
    std::string rhp_side = "both";
    double rhp_rfrac = 0.9;
    auto* c_rhp = app.add_subcommand("rhp", "Airy parametrix / model-solution residuals");
    add_common(c_rhp, rhp_o);
    c_rhp->add_option("--n", rhp_ns, "N values for the matching circles")->capture_default_str();
    c_rhp->add_option("--side", rhp_side, "left, right or both")
        ->check(CLI::IsMember({"left", "right", "both"}))
        ->capture_default_str();
    c_rhp->add_option("--radius-frac", rhp_rfrac, "circle radius as a fraction of the "
                                                  "conformal-disc limit")
        ->capture_default_str();

    CommonOpts phase_o;
    std::string sweep = "D";
    double y_max = 0.2, px_min = -0.9, px_max = 0.9;
    std::size_t steps = 50;
    auto* c_phase = app.add_subcommand("phase", "phase-diagram sweeps (free energies, "
                                                "coordinates, theta functions)");
    add_common(c_phase, phase_o);
    c_phase->add_option("--sweep", sweep, "D, AF or critical")
        ->check(CLI::IsMember({"D", "AF", "critical"}))
        ->capture_default_str();
    c_phase->add_option("--y-max", y_max, "sweep extent in y")->capture_default_str();
    c_phase->add_option("--steps", steps, "number of sweep rows")->capture_default_str();
    c_phase->add_option("--x-min", px_min, "x range start (critical sweep)")
        ->capture_default_str();
    c_phase->add_option("--x-max", px_max, "x range end (critical sweep)")
        ->capture_default_str();

    CommonOpts asym_o;
    std::size_t a_min = 16, a_max = 64;
    auto* c_asym = app.add_subcommand("asym", "h_N correction-term table (exact vs predicted)");
    add_common(c_asym, asym_o);
    c_asym->add_option("--n-min", a_min, "first N")->capture_default_str();
    c_asym->add_option("--n-max", a_max, "last N")->capture_default_str();

    CommonOpts fit_o;
    std::size_t f_min = 40, f_max = 120;
    auto* c_fit = app.add_subcommand("fit", "estimate the universal constant C0");
    add_common(c_fit, fit_o);
    c_fit->add_option("--n-min", f_min, "first N")->capture_default_str();
    c_fit->add_option("--n-max", f_max, "last N")->capture_default_str();

    CommonOpts cmp_o;
    std::size_t c_min = 16, c_max = 64;
    auto* c_cmp = app.add_subcommand("compare", "combined correction-term and constant-fit report");
    add_common(c_cmp, cmp_o);
    c_cmp->add_option("--n-min", c_min, "first N")->capture_default_str();
    c_cmp->add_option("--n-max", c_max, "last N")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (dump_defaults) {
            std::cout << defaults_json().dump(2) << "\n";
            return 0;
        }
        if (c_exact->parsed()) return run_exact(exact_o, exact_n);
        if (c_oracle->parsed())
            return run_oracle(oracle_o, oracle_n, oa, ob, oc, dump_configs);
        if (c_toda->parsed()) return run_toda(toda_o, toda_nmax);
        if (c_eqm->parsed()) return run_eqm(eqm_o, eqm_grid, eqm_samples);
        if (c_rhp->parsed()) return run_rhp(rhp_o, rhp_ns, rhp_side, rhp_rfrac);
        if (c_phase->parsed()) return run_phase(phase_o, sweep, y_max, steps, px_min, px_max);
        if (c_asym->parsed()) return run_asym(asym_o, a_min, a_max);
        if (c_fit->parsed()) return run_fit(fit_o, f_min, f_max);
        if (c_cmp->parsed()) return run_compare(cmp_o, c_min, c_max);
        std::cout << app.help() << "\n";
        return 0;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

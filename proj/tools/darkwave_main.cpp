// darkwave: analytics and desk-scale simulation for resonator-coupled
// inhomogeneous spin ensembles (echo memories, time-delayed entanglement).

#include <omp.h>

#include <CLI11.hpp>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <json.hpp>

#include "darkwave/arp.hpp"
#include "darkwave/protocol.hpp"
#include "darkwave/report.hpp"
#include "darkwave/response.hpp"
#include "darkwave/scenario.hpp"
#include "darkwave/spectral.hpp"
#include "darkwave/svg.hpp"
#include "darkwave/units.hpp"

namespace fs = std::filesystem;
using namespace darkwave;

namespace {

Scenario load_scenario(const std::string& path) {
    if (path.empty()) return Scenario::parse_text("");
    return Scenario::parse_file(path);
}

EnsembleSpec spec_from(const Scenario& sc) {
    EnsembleSpec spec;
    spec.cavity.kappa = sc.rate("kappa", mhz(1.0));
    spec.cavity.delta = sc.rate("delta", 0.0);
    const double g0 = sc.rate("g0", hz(100.0));
    const double sg = sc.rate("sigma_g", 0.0);
    spec.coupling = sg > 0.0 ? CouplingDistribution::gaussian(g0, sg)
                             : CouplingDistribution::delta(g0);
    const std::string kind = sc.text("profile", "lorentzian");
    if (kind == "gaussian")
        spec.frequency = FrequencyDistribution::gaussian(sc.rate("sigma", mhz(1.0)));
    else if (kind == "comb")
        spec.frequency = FrequencyDistribution::comb(sc.rate("tooth", khz(10.0)),
                                                     sc.rate("spacing", khz(100.0)),
                                                     sc.rate("gamma", mhz(1.0)));
    else
        spec.frequency = FrequencyDistribution::lorentzian(sc.rate("gamma", mhz(1.0)));
    if (sc.has("c"))
        spec.n_spins = spins_for_cooperativity(spec, sc.number("c", 0.3));
    else
        spec.n_spins = sc.number("n_spins", 1e6);
    return spec;
}

int cmd_spectral(const Scenario& sc, const std::string& out_dir) {
    EnsembleSpec spec = spec_from(sc);
    const int n = sc.integer("grid_points", 2048);
    double half;
    if (spec.frequency.kind() == FrequencyDistribution::Kind::Gaussian)
        half = 8.0 * spec.frequency.sigma();
    else
        half = 50.0 * spec.frequency.gamma();
    const auto grid = uniform_grid(-half, half, n);
    const auto map = gamma_from_density(spec.frequency, grid);
    std::vector<double> w_hz(n);
    for (int i = 0; i < n; ++i) w_hz[i] = to_hz(map.omega[i]);
    std::vector<double> g_hz(n), h(n);
    for (int i = 0; i < n; ++i) {
        g_hz[i] = to_hz(map.gamma[i]);
        h[i] = map.hilbert[i];
    }
    write_csv(out_dir + "/spectral.csv", {"omega_hz", "n_omega", "hilbert", "gamma_hz"},
              {w_hz, map.n, h, g_hz});
    std::cout << "wrote " << out_dir << "/spectral.csv\n";
    return 0;
}

int cmd_response(const Scenario& sc, const std::string& out_dir) {
    EnsembleSpec spec = spec_from(sc);
    const double gma = spec.frequency.gamma();
    const int n = sc.integer("grid_points", 513);
    const auto grid = uniform_grid(-5.0 * gma, 5.0 * gma, n);
    std::vector<double> w_hz(n), rr(n), ri(n), tr(n), ti(n), rpr(n), rpi(n),
        err(n), eti(n), etr(n), eri(n), erpr(n), erpi(n);
    for (int i = 0; i < n; ++i) {
        const auto g = ground_coefficients(spec, grid[i]);
        const auto e = excited_coefficients(spec, grid[i]);
        w_hz[i] = to_hz(grid[i]);
        rr[i] = g.r.real();
        ri[i] = g.r.imag();
        tr[i] = g.t.real();
        ti[i] = g.t.imag();
        rpr[i] = g.r_prime.real();
        rpi[i] = g.r_prime.imag();
        err[i] = e.r.real();
        eri[i] = e.r.imag();
        etr[i] = e.t.real();
        eti[i] = e.t.imag();
        erpr[i] = e.r_prime.real();
        erpi[i] = e.r_prime.imag();
    }
    write_csv(out_dir + "/response.csv",
              {"omega_hz", "re_r", "im_r", "re_t", "im_t", "re_rp", "im_rp",
               "re_rt", "im_rt", "re_tt", "im_tt", "re_rtp", "im_rtp"},
              {w_hz, rr, ri, tr, ti, rpr, rpi, err, eri, etr, eti, erpr, erpi});
    std::cout << "wrote " << out_dir << "/response.csv\n";
    return 0;
}

int cmd_silencing(const Scenario& sc, const std::string& out_dir) {
    // F vs sigma_g for a set of chirp rates, with the cavity-filtered WURST
    const double kappa = sc.rate("kappa", mhz(1.0));
    const double gamma = sc.rate("gamma", mhz(1.0));
    const double g0 = sc.rate("g0", hz(100.0));
    const double a0in = sc.number("wurst_a0_in", 2.5e7);
    const double xi = sc.number("xi", 2.5);
    auto ks = sc.number_list("k_sweep_mhz2");
    if (ks.empty()) ks = {0.25, 0.5, 1.0, 2.0};
    auto sgs = sc.number_list("sigma_g_sweep_hz");
    if (sgs.empty()) {
        for (int i = 0; i <= 25; ++i) sgs.push_back(0.2 * i);
    }
    std::vector<std::vector<double>> cols;
    std::vector<std::string> header{"sigma_g_hz"};
    cols.push_back(sgs);
    std::vector<SvgSeries> series;
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};
    for (size_t ki = 0; ki < ks.size(); ++ki) {
        const double k = mhz2(ks[ki]);
        const double span = xi * gamma + mhz(2.0);
        DriveWaveform::WurstArp w;
        w.a0_in = a0in;
        w.t_start = 0.0;
        w.t_w = span / k;
        w.omega0 = -0.5 * span;
        w.k = k;
        const ArpPulse filtered =
            intracavity_envelope({kappa, 0.0}, pulse_from_wurst(w));
        std::vector<double> fmag;
        for (double sg_hz : sgs) {
            const auto coupling = sg_hz > 0.0
                                      ? CouplingDistribution::gaussian(g0, hz(sg_hz))
                                      : CouplingDistribution::delta(g0);
            fmag.push_back(std::abs(silencing_factor(filtered, coupling, 0.0, 1e-7)));
        }
        header.push_back("F_k" + std::to_string(ks[ki]) + "MHz2");
        cols.push_back(fmag);
        SvgSeries s;
        s.x = sgs;
        s.y = fmag;
        s.color = colors[ki % 5];
        s.label = "k = " + std::to_string(ks[ki]) + " MHz^2";
        series.push_back(s);
    }
    write_csv(out_dir + "/silencing.csv", header, cols);
    write_text_file(out_dir + "/silencing.svg",
                    svg_line_chart(series, "sigma_g / 2pi (Hz)", "|F|",
                                   "echo silencing vs coupling inhomogeneity"));
    std::cout << "wrote " << out_dir << "/silencing.{csv,svg}\n";
    return 0;
}

RoseScenario rose_from(const Scenario& sc) {
    RoseScenario r;
    r.apply_paper_defaults();
    r.cooperativity = sc.number("c", 0.3);
    r.kappa = sc.rate("kappa", r.kappa);
    r.gamma = sc.rate("gamma", r.gamma);
    r.delta = sc.rate("delta", 0.0);
    r.g0 = sc.rate("g0", r.g0);
    r.sigma_g = sc.rate("sigma_g", 0.0);
    r.chirp_rate = sc.chirp("chirp", mhz2(0.5));
    r.wurst_a0_in = sc.number("wurst_a0_in", 2.5e7);
    r.sigma_t = sc.time("sigma_t", 3e-6);
    r.signal_ratio = sc.number("signal_ratio", 1e-3);
    r.m_omega = sc.integer("m_omega", 600);
    r.m_g = sc.integer("m_g", r.sigma_g > 0.0 ? 8 : 1);
    r.xi = sc.number("xi", 2.5);
    r.sim.single_precision = sc.flag("single_precision", r.m_omega * r.m_g > 1500);
    r.sim.rel_tol_drive = sc.number("rel_tol_drive", 1e-7);
    r.sim.rel_tol_free = sc.number("rel_tol_free", 1e-6);
    r.sim.abs_floor = sc.number("abs_floor", r.sim.single_precision ? 1e-5 : 1e-9);
    r.with_noise = sc.flag("with_noise", true);
    return r;
}

int cmd_rose(const Scenario& sc, const std::string& out_dir) {
    // --sweep C reproduces the theory curves as CSV
    if (sc.has("c_sweep")) {
        auto cs = sc.number_list("c_sweep");
        std::vector<double> eta, etat, noise, fen;
        const std::complex<double> f{sc.number("f", 1.0), 0.0};
        for (double c : cs) {
            eta.push_back(rose_write_efficiency(c));
            etat.push_back(rose_total_efficiency(c, f));
            noise.push_back(rose_output_noise(c, f));
            fen.push_back(first_echo_noise(c));
        }
        write_csv(out_dir + "/rose_sweep.csv",
                  {"C", "write_efficiency", "total_efficiency", "output_noise",
                   "first_echo_noise"},
                  {cs, eta, etat, noise, fen});
        std::cout << "wrote " << out_dir << "/rose_sweep.csv\n";
        return 0;
    }
    RoseScenario r = rose_from(sc);
    if (!sc.flag("simulate", true)) {
        const auto f = rose_silencing_numeric(r);
        const auto th = rose_theory(r.cooperativity, f);
        ProtocolReport rep;
        rep.scenario_name = sc.name();
        rep.protocol = "rose";
        rep.scenario_hash = sc.hash();
        rep.rows.push_back(CompareRow::analytic_only("silencing_factor", std::abs(f)));
        rep.rows.push_back(
            CompareRow::analytic_only("write_efficiency", th.write_efficiency));
        rep.rows.push_back(
            CompareRow::analytic_only("total_efficiency", th.total_efficiency));
        rep.rows.push_back(CompareRow::analytic_only("output_noise", th.output_noise));
        write_text_file(out_dir + "/rose.json", rep.to_json());
        std::cout << rep.compare_table();
        return 0;
    }
    const auto res = run_rose(r);
    auto rep = report_from_rose(res, sc.name(), sc.hash(),
                                sc.number("tol_eta", 0.10),
                                sc.number("tol_noise", 0.15));
    write_text_file(out_dir + "/rose.json", rep.to_json());
    std::cout << rep.compare_table();
    return rep.all_pass() ? 0 : 2;
}

int cmd_rase(const Scenario& sc, const std::string& out_dir) {
    RaseScenario r;
    r.apply_paper_defaults();
    r.cooperativity = sc.number("c", 0.2);
    r.kappa = sc.rate("kappa", r.kappa);
    r.gamma = sc.rate("gamma", r.gamma);
    r.g0 = sc.rate("g0", r.g0);
    r.sigma_g = sc.rate("sigma_g", 0.0);
    r.chirp_rate = sc.chirp("chirp", mhz2(2.0));
    r.composite = sc.flag("composite", false);
    r.window = sc.time("window", 14e-6);
    r.m_omega = sc.integer("m_omega", 600);
    r.m_g = sc.integer("m_g", r.sigma_g > 0.0 ? 8 : 1);
    r.sim.single_precision = sc.flag("single_precision", r.m_omega * r.m_g > 1500);
    r.sim.abs_floor = sc.number("abs_floor", r.sim.single_precision ? 1e-5 : 1e-9);
    const auto res = run_rase(r);
    auto rep = report_from_rase(res, sc.name(), sc.hash(),
                                sc.number("tol_rmin", 0.10));
    write_text_file(out_dir + "/rase.json", rep.to_json());
    // correlation trace, Fig-style
    std::vector<double> td_us, re, im;
    for (size_t i = 0; i < res.trace.t_d.size(); ++i) {
        td_us.push_back(res.trace.t_d[i] * 1e6);
        re.push_back(res.trace.value[i].real());
        im.push_back(res.trace.value[i].imag());
    }
    write_csv(out_dir + "/rase_trace.csv", {"t_d_us", "re", "im"}, {td_us, re, im});
    SvgSeries sre{td_us, re, "#1f77b4", "Re"};
    SvgSeries sim_{td_us, im, "#d62728", "Im"};
    write_text_file(out_dir + "/rase_trace.svg",
                    svg_line_chart({sre, sim_}, "t_d (us)", "correlation",
                                   "ASE-RASE time correlation"));
    std::cout << rep.compare_table();
    return rep.all_pass() ? 0 : 2;
}

int cmd_afc(const Scenario& sc, const std::string& out_dir) {
    const double c = sc.number("c", 0.5);
    const double tooth = sc.rate("tooth", khz(10.0));
    const double spacing = sc.rate("spacing", khz(100.0));
    bool good = false;
    const double eta = afc_total_efficiency(c, tooth, spacing, &good);
    nlohmann::json j;
    j["schema"] = "darkwave-afc-v1";
    j["C"] = c;
    j["tooth_over_spacing"] = tooth / spacing;
    j["good_comb_regime"] = good;
    j["storage_time_s"] =
        FrequencyDistribution::comb(tooth, spacing, sc.rate("gamma", mhz(1.0)))
            .storage_time();
    j["total_efficiency"] = eta;
    write_text_file(out_dir + "/afc.json", j.dump(2));
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_validity(const Scenario& sc, const std::string& out_dir) {
    EnsembleSpec spec = spec_from(sc);
    const double k = sc.chirp("chirp", mhz2(0.5));
    const double span = 2.5 * spec.frequency.gamma() + mhz(2.0);
    DriveWaveform::WurstArp w;
    w.a0_in = sc.number("wurst_a0_in", 2.5e7);
    w.t_w = span / k;
    w.omega0 = -0.5 * span;
    w.k = k;
    const ArpPulse pulse =
        intracavity_envelope(spec.cavity, pulse_from_wurst(w));
    const auto rep = validity_report(spec, pulse, sc.number("epsilon", 0.01),
                                     sc.time("horizon", 100e-6));
    nlohmann::json j;
    j["schema"] = "darkwave-validity-v1";
    j["photon_bound_ground"] = rep.hp_photon_bound_ground;
    j["photon_bound_excited"] = rep.hp_photon_bound_excited;
    j["purcell_rate_hz"] = to_hz(rep.purcell_rate);
    j["ase_rate_hz"] = to_hz(rep.ase_rate);
    j["ase_depletion"] = rep.ase_depletion;
    j["landau_zener_error"] = rep.lz_error;
    j["bright_exponent_ok"] = rep.bright_exponent_ok;
    j["warnings"] = rep.warnings;
    write_text_file(out_dir + "/validity.json", j.dump(2));
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_ace(const Scenario& sc, const std::string& out_dir) {
    const double sigma = sc.time("sigma_t", 3e-6);
    const double k = sc.chirp("chirp", mhz2(0.5));
    const auto e = ace_echo(sigma, k, sc.number("alpha0", 1.0));
    const int n = 801;
    std::vector<double> t_us(n), re(n), im(n), mag(n);
    const double span = 4.0 * e.width();
    for (int i = 0; i < n; ++i) {
        const double t = -span + 2.0 * span * i / (n - 1);
        const auto a = e.amplitude(t);
        t_us[i] = t * 1e6;
        re[i] = a.real();
        im[i] = a.imag();
        mag[i] = std::abs(a);
    }
    write_csv(out_dir + "/ace.csv", {"t_us", "re", "im", "mag"},
              {t_us, re, im, mag});
    nlohmann::json j;
    j["width_s"] = e.width();
    j["chirp_rate_rad_s2"] = e.chirp_rate();
    j["energy"] = e.energy();
    write_text_file(out_dir + "/ace.json", j.dump(2));
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"darkwave: resonator-coupled inhomogeneous spin-ensemble "
                 "memory analytics and simulation"};
    std::string config, out_dir = ".";
    int threads = 0;
    app.add_option("--config", config, "scenario file (key = value with units)");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--threads", threads, "worker threads (or DARKWAVE_THREADS)");

    std::string sub;
    app.add_option("command", sub,
                   "spectral | response | silencing | rose | rase | afc | "
                   "validity | ace")
        ->required();

    CLI11_PARSE(app, argc, argv);

    if (threads <= 0)
        if (const char* env = std::getenv("DARKWAVE_THREADS")) threads = std::atoi(env);
    if (threads > 0) omp_set_num_threads(threads);

    try {
        fs::create_directories(out_dir);
        const Scenario sc = load_scenario(config);
        if (sub == "spectral") return cmd_spectral(sc, out_dir);
        if (sub == "response") return cmd_response(sc, out_dir);
        if (sub == "silencing") return cmd_silencing(sc, out_dir);
        if (sub == "rose") return cmd_rose(sc, out_dir);
        if (sub == "rase") return cmd_rase(sc, out_dir);
        if (sub == "afc") return cmd_afc(sc, out_dir);
        if (sub == "validity") return cmd_validity(sc, out_dir);
        if (sub == "ace") return cmd_ace(sc, out_dir);
        std::cerr << "unknown command: " << sub << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

// Command-line driver: scan / mode / picard / certify.
// Exit codes: 0 success, 1 certificate failure, 2 configuration error,
// 3 computation failure.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "sswm/connection.hpp"
#include "sswm/errors.hpp"
#include "sswm/odecore.hpp"
#include "sswm/picard.hpp"
#include "sswm/quad.hpp"
#include "sswm/report.hpp"
#include "sswm/stability.hpp"

namespace {

struct Opts {
    double lo = 0.05, hi = 0.95;
    int n = 181;
    double match_point = 0.5;
    double tol = 1e-7;
    int workers = 1;
    std::string out = "sswm";
    double lambda_re = 0.5, lambda_im = 0.0;
    std::string range;
    bool corrupt = false;
};

void add_common(CLI::App* cmd, Opts& o) {
    cmd->add_option("--match-point", o.match_point,
                    "Wronskian matching point rho_m in (0,1)")
        ->envname("SSWM_MATCH_POINT");
    cmd->add_option("--tol", o.tol, "primary tolerance of the subcommand")
        ->envname("SSWM_TOL");
    cmd->add_option("--workers", o.workers, "worker threads for scans")
        ->envname("SSWM_WORKERS");
    cmd->add_option("--out", o.out, "output file prefix")->envname("SSWM_OUT");
}

sswm::ShootingConfig shooting(const Opts& o, double eig_tol) {
    sswm::ShootingConfig cfg;
    cfg.match_point = o.match_point;
    cfg.eig_tol = eig_tol;
    cfg.validate();
    return cfg;
}

void write_file(const std::string& path, const sswm::Envelope& e) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    e.write(os);
}

void echo_shooting(sswm::Envelope& e, const sswm::ShootingConfig& cfg,
                   int workers) {
    e.set("config.match_point", cfg.match_point);
    e.set("config.eig_tol", cfg.eig_tol);
    e.set("config.delta0", cfg.delta0);
    e.set("config.delta1", cfg.delta1);
    e.set("config.reltol", cfg.reltol);
    e.set("config.abstol", cfg.abstol);
    e.set("config.series_order", cfg.series_order);
    e.set("config.workers", workers);
}

int cmd_scan(const Opts& o) {
    const sswm::ShootingConfig cfg = shooting(o, o.tol);
    const sswm::ScanReport r =
        sswm::scan_real(o.lo, o.hi, o.n, cfg, o.workers);
    sswm::Envelope e = sswm::envelope_scan(r);
    echo_shooting(e, cfg, o.workers);
    write_file(o.out + ".txt", e);
    std::ofstream csv(o.out + ".csv");
    sswm::write_scan_csv(csv, r);
    std::cout << "scan [" << o.lo << "," << o.hi << "] n=" << o.n << ": "
              << r.roots.size() << " roots, " << r.failures << " failures ("
              << o.out << ".txt, " << o.out << ".csv)\n";
    for (const sswm::RootInfo& ri : r.roots)
        std::cout << "  root lambda=" << ri.lam << " +/- " << ri.err
                  << " |miss|=" << ri.residual << "\n";
    return 0;
}

int cmd_mode(const Opts& o) {
    const std::complex<double> lam(o.lambda_re, o.lambda_im);
    if (lam.real() <= 0.0)
        throw sswm::domain_error("mode: requires Re lambda > 0");
    const sswm::ShootingConfig cfg = shooting(o, o.tol);
    std::vector<double> grid(o.n);
    for (int i = 0; i < o.n; ++i)
        grid[i] = o.lo + (o.hi - o.lo) * i / (o.n - 1);
    const auto prof0 = sswm::phi0_profile(lam, grid, cfg);
    const auto prof1 = sswm::phi1_profile(lam, grid, cfg);
    const sswm::ConnectionResult cr = sswm::miss(lam, cfg);

    std::ofstream f0(o.out + "_phi0.dat"), f1(o.out + "_phi1.dat");
    sswm::write_profile(f0, grid, prof0);
    sswm::write_profile(f1, grid, prof1);

    sswm::Envelope e;
    e.set("schema_version", sswm::schema_version);
    e.set("timestamp", sswm::run_timestamp());
    e.set("command", std::string("mode"));
    e.set("config.lambda_re", lam.real());
    e.set("config.lambda_im", lam.imag());
    e.set("config.lo", o.lo);
    e.set("config.hi", o.hi);
    e.set("config.n", o.n);
    echo_shooting(e, cfg, o.workers);
    e.set("mode.wronskian_re", cr.wronskian.real());
    e.set("mode.wronskian_im", cr.wronskian.imag());
    e.set("mode.normalization", cr.normalization);
    e.set("mode.miss_abs", std::abs(cr.miss));
    e.set("mode.classification", std::string(sswm::miss_class_name(cr.cls)));
    write_file(o.out + ".txt", e);
    std::cout << "mode lambda=(" << lam.real() << "," << lam.imag()
              << "): |miss|=" << std::abs(cr.miss) << " ["
              << sswm::miss_class_name(cr.cls) << "] (" << o.out << ".txt, "
              << o.out << "_phi0.dat, " << o.out << "_phi1.dat)\n";
    return 0;
}

int cmd_picard(const Opts& o) {
    const std::complex<double> lam(o.lambda_re, o.lambda_im);
    if (lam.real() <= 0.0)
        throw sswm::domain_error("picard: requires Re lambda > 0");
    sswm::Envelope e;
    e.set("schema_version", sswm::schema_version);
    e.set("timestamp", sswm::run_timestamp());
    e.set("command", std::string("picard"));
    e.set("config.lambda_re", lam.real());
    e.set("config.lambda_im", lam.imag());
    e.set("config.tol", o.tol);

    const sswm::ContractionEstimate c0 = sswm::contraction_radius_zero(lam);
    e.set("zero.rho0", c0.endpoint);
    e.set("zero.lipschitz", c0.lipschitz);
    const sswm::PicardRun r0 = sswm::picard_phi0(lam, c0.endpoint, o.tol);
    e.set("zero.iterations", r0.iterations);
    e.set("zero.residual", r0.residual);
    e.set("zero.converged", r0.converged);

    bool have_one = false;
    try {
        const sswm::ContractionEstimate c1 = sswm::contraction_radius_one(lam);
        e.set("one.rho1", c1.endpoint);
        e.set("one.lipschitz", c1.lipschitz);
        const sswm::PicardRun r1 = sswm::picard_phi1(lam, c1.endpoint, o.tol);
        e.set("one.iterations", r1.iterations);
        e.set("one.residual", r1.residual);
        e.set("one.converged", r1.converged);
        have_one = true;
    } catch (const sswm::contraction_error& err) {
        e.set("one.skipped", std::string(err.what()));
    }
    write_file(o.out + ".txt", e);
    std::cout << "picard lambda=(" << lam.real() << "," << lam.imag()
              << "): zero interval [0," << c0.endpoint << "] residual "
              << r0.residual
              << (have_one ? "" : " (rho=1 contraction bound unavailable)")
              << " (" << o.out << ".txt)\n";
    return 0;
}

int cmd_certify(const Opts& o) {
    sswm::CertifyConfig cc;
    cc.scan_n = o.n;
    cc.workers = o.workers;
    cc.shoot.match_point = o.match_point;
    cc.shoot.eig_tol = o.tol;
    cc.shoot.validate();
    cc.corrupt_coefficient = o.corrupt;
    if (!o.range.empty()) {
        const auto pos = o.range.find(':');
        if (pos == std::string::npos)
            throw sswm::domain_error("certify: --range expects lo:hi");
        cc.range_lo = std::stod(o.range.substr(0, pos));
        cc.range_hi = std::stod(o.range.substr(pos + 1));
        if (!(cc.range_lo > 0.0 && cc.range_hi > cc.range_lo))
            throw sswm::domain_error("certify: need 0 < lo < hi");
    }
    const sswm::CertificateReport rep = sswm::full_certificate(cc);
    write_file(o.out + ".txt", sswm::envelope_certificate(rep));
    for (const sswm::CheckResult& c : rep.checks)
        std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
                  << ": " << c.detail << "\n";
    std::cout << "certificate: " << (rep.pass ? "PASS" : "FAIL") << " ("
              << o.out << ".txt)\n";
    return rep.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "sswm: numerical mode-stability toolkit for the self-similar wave "
        "map 2*arctan(rho).\n"
        "CSV columns of scan output: lambda, miss (normalized Wronskian), "
        "classification\n"
        "(eigenvalue_candidate | no_eigenvalue | indeterminate).\n"
        "All flags can be overridden by environment variables with prefix "
        "SSWM_ (e.g. SSWM_WORKERS)."};
    app.require_subcommand(1);
    Opts o;

    CLI::App* scan = app.add_subcommand(
        "scan", "miss function on a real lambda grid with root refinement");
    scan->add_option("--lo", o.lo, "lower end of the lambda range")
        ->required()
        ->envname("SSWM_LO");
    scan->add_option("--hi", o.hi, "upper end of the lambda range")
        ->required()
        ->envname("SSWM_HI");
    scan->add_option("--n", o.n, "number of grid points")
        ->required()
        ->envname("SSWM_N");
    add_common(scan, o);

    CLI::App* mode = app.add_subcommand(
        "mode", "one-sided solution profiles and miss diagnostics");
    mode->add_option("--lambda", o.lambda_re, "Re lambda (must be > 0)")
        ->required()
        ->envname("SSWM_LAMBDA");
    mode->add_option("--lambda-im", o.lambda_im, "Im lambda")
        ->envname("SSWM_LAMBDA_IM");
    mode->add_option("--lo", o.lo, "first profile sample")->envname("SSWM_LO");
    mode->add_option("--hi", o.hi, "last profile sample")->envname("SSWM_HI");
    mode->add_option("--n", o.n, "profile samples")->envname("SSWM_N");
    add_common(mode, o);

    CLI::App* picard = app.add_subcommand(
        "picard", "contraction estimates and fixed-point iterations");
    picard->add_option("--lambda", o.lambda_re, "Re lambda (must be > 0)")
        ->required()
        ->envname("SSWM_LAMBDA");
    picard->add_option("--lambda-im", o.lambda_im, "Im lambda")
        ->envname("SSWM_LAMBDA_IM");
    add_common(picard, o);

    CLI::App* certify = app.add_subcommand(
        "certify", "full nonexistence certificate (exit 0 iff it passes)");
    certify->add_option("--range", o.range, "override scan range as lo:hi")
        ->envname("SSWM_RANGE");
    certify->add_option("--n", o.n, "scan grid points")->envname("SSWM_N");
    certify->add_flag("--corrupt-coefficient", o.corrupt,
                      "negative-control fixture: corrupt the potential in "
                      "the closed-form residual check");
    add_common(certify, o);

    // mode/picard/certify reuse o.n; give them their own defaults
    o.n = 181;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (scan->parsed()) return cmd_scan(o);
        if (mode->parsed()) {
            if (!mode->count("--n")) o.n = 201;
            if (!mode->count("--lo")) o.lo = 0.005;
            if (!mode->count("--hi")) o.hi = 0.995;
            return cmd_mode(o);
        }
        if (picard->parsed()) {
            if (!picard->count("--tol")) o.tol = 1e-10;
            return cmd_picard(o);
        }
        if (certify->parsed()) {
            if (!certify->count("--n")) o.n = 181;
            return cmd_certify(o);
        }
    } catch (const sswm::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "compute error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

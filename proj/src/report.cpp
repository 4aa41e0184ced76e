#include "sswm/report.hpp"

#include <charconv>
#include <cstdlib>
#include <ctime>
#include <istream>
#include <ostream>
#include <sstream>

namespace sswm {

std::string run_timestamp() {
    if (const char* env = std::getenv("SSWM_TIMESTAMP")) return env;
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

std::string format_double(double v) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, p);
}

void Envelope::set(const std::string& key, const std::string& value) {
    fields.emplace_back(key, value);
}
void Envelope::set(const std::string& key, double value) {
    fields.emplace_back(key, format_double(value));
}
void Envelope::set(const std::string& key, int value) {
    fields.emplace_back(key, std::to_string(value));
}
void Envelope::set(const std::string& key, long value) {
    fields.emplace_back(key, std::to_string(value));
}
void Envelope::set(const std::string& key, bool value) {
    fields.emplace_back(key, value ? "true" : "false");
}

const std::string* Envelope::find(const std::string& key) const {
    for (const auto& [k, v] : fields)
        if (k == key) return &v;
    return nullptr;
}

void Envelope::write(std::ostream& os) const {
    for (const auto& [k, v] : fields) os << k << " = " << v << "\n";
}

Envelope Envelope::read(std::istream& is) {
    Envelope e;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto pos = line.find(" = ");
        if (pos == std::string::npos) continue;
        e.fields.emplace_back(line.substr(0, pos), line.substr(pos + 3));
    }
    return e;
}

const char* miss_class_name(MissClass c) {
    switch (c) {
        case MissClass::eigenvalue_candidate: return "eigenvalue_candidate";
        case MissClass::no_eigenvalue: return "no_eigenvalue";
        default: return "indeterminate";
    }
}

namespace {
void set_header(Envelope& e, const char* command) {
    e.set("schema_version", schema_version);
    e.set("timestamp", run_timestamp());
    e.set("command", std::string(command));
}
} // namespace

Envelope envelope_scan(const ScanReport& r) {
    Envelope e;
    set_header(e, "scan");
    e.set("config.lo", r.lo);
    e.set("config.hi", r.hi);
    e.set("config.n", r.n);
    // wall-clock seconds are deliberately omitted: identical configs must
    // produce bit-identical files
    e.set("scan.failures", r.failures);
    e.set("scan.n_points", static_cast<int>(r.points.size()));
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        const ScanPoint& p = r.points[i];
        std::ostringstream v;
        v << format_double(p.lam) << "," << format_double(p.miss) << ","
          << miss_class_name(p.cls) << "," << (p.ok ? "ok" : p.error);
        e.set("point." + std::to_string(i), v.str());
    }
    e.set("scan.n_roots", static_cast<int>(r.roots.size()));
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
        const RootInfo& ri = r.roots[i];
        std::ostringstream v;
        v << format_double(ri.lam) << "," << format_double(ri.err) << ","
          << format_double(ri.residual);
        e.set("root." + std::to_string(i), v.str());
    }
    return e;
}

Envelope envelope_picard(const PicardRun& r) {
    Envelope e;
    set_header(e, "picard");
    e.set("config.lambda_re", r.lam.real());
    e.set("config.lambda_im", r.lam.imag());
    e.set("interval.a", r.a);
    e.set("interval.b", r.b);
    e.set("picard.iterations", r.iterations);
    e.set("picard.converged", r.converged);
    e.set("picard.residual", r.residual);
    for (std::size_t i = 0; i < r.diffs.size(); ++i)
        e.set("diff." + std::to_string(i), r.diffs[i]);
    return e;
}

Envelope envelope_certificate(const CertificateReport& r) {
    Envelope e;
    set_header(e, "certify");
    e.set("config.range_lo", r.config.range_lo);
    e.set("config.range_hi", r.config.range_hi);
    e.set("config.scan_n", r.config.scan_n);
    e.set("config.workers", r.config.workers);
    e.set("config.match_point", r.config.shoot.match_point);
    e.set("config.eig_tol", r.config.shoot.eig_tol);
    e.set("config.endpoint_margin", r.config.endpoint_margin);
    e.set("config.corrupt_coefficient", r.config.corrupt_coefficient);
    e.set("certificate.n_checks", static_cast<int>(r.checks.size()));
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
        const CheckResult& c = r.checks[i];
        std::ostringstream v;
        v << c.name << "," << (c.pass ? "pass" : "fail") << ","
          << format_double(c.value) << "," << c.detail;
        e.set("check." + std::to_string(i), v.str());
    }
    e.set("certificate.n_roots", static_cast<int>(r.roots.size()));
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
        std::ostringstream v;
        v << format_double(r.roots[i].lam) << ","
          << format_double(r.roots[i].err) << ","
          << format_double(r.roots[i].residual);
        e.set("root." + std::to_string(i), v.str());
    }
    e.set("certificate.pass", r.pass);
    return e;
}

void write_scan_csv(std::ostream& os, const ScanReport& r) {
    os << "lambda,miss,classification\n";
    for (const ScanPoint& p : r.points)
        os << format_double(p.lam) << "," << format_double(p.miss) << ","
           << miss_class_name(p.cls) << "\n";
}

void write_profile(std::ostream& os, const std::vector<double>& rho,
                   const std::vector<Solution>& sol) {
    os << "# rho re_u im_u re_up im_up\n";
    for (std::size_t i = 0; i < rho.size(); ++i)
        os << format_double(rho[i]) << " " << format_double(sol[i].u.real())
           << " " << format_double(sol[i].u.imag()) << " "
           << format_double(sol[i].up.real()) << " "
           << format_double(sol[i].up.imag()) << "\n";
}

} // namespace sswm

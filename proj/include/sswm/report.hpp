#ifndef SSWM_REPORT_HPP
#define SSWM_REPORT_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sswm/connection.hpp"
#include "sswm/picard.hpp"
#include "sswm/stability.hpp"

namespace sswm {

inline constexpr int schema_version = 1;

/// ISO-8601 UTC wall-clock time, overridable through the SSWM_TIMESTAMP
/// environment variable so identical configs can produce bit-identical files.
std::string run_timestamp();

/// Self-describing ordered key-value document: one `key = value` line per
/// field, `#`-prefixed comment lines ignored. Values are written with enough
/// digits to round-trip doubles exactly.
struct Envelope {
    std::vector<std::pair<std::string, std::string>> fields;

    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, double value);
    void set(const std::string& key, int value);
    void set(const std::string& key, long value);
    void set(const std::string& key, bool value);
    const std::string* find(const std::string& key) const;

    void write(std::ostream& os) const;
    static Envelope read(std::istream& is);
};

std::string format_double(double v);  // round-trip exact

Envelope envelope_scan(const ScanReport& r);
Envelope envelope_picard(const PicardRun& r);
Envelope envelope_certificate(const CertificateReport& r);

/// Flat CSV of scan points: lambda,miss,classification (documented in --help).
void write_scan_csv(std::ostream& os, const ScanReport& r);

/// Gnuplot-ready profile: rho, Re u, Im u, Re u', Im u' per line.
void write_profile(std::ostream& os, const std::vector<double>& rho,
                   const std::vector<Solution>& sol);

const char* miss_class_name(MissClass c);

} // namespace sswm

#endif

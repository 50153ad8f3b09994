#pragma once

#include "cubigen/engine.hpp"
#include "cubigen/fieldkit.hpp"
#include "cubigen/mordell.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubigen {

struct IngestionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Externally computed Mordell-Weil generators for E^{-27D}. Integers travel
/// as decimal strings; the model tag is mandatory because generator data
/// appears in both coordinate conventions.
struct GeneratorFile {
    BigInt D;
    CurveModel model = CurveModel::x3q;
    std::vector<std::pair<Rational, Rational>> points;
    std::string source;
};

/// Parses a generator file; validates that every point lies on E^{-27D} in
/// the declared model and names the offending point otherwise.
GeneratorFile parse_generator_file(std::istream& in);
GeneratorFile load_generator_file(const std::string& path);
std::string serialize_generator_file(const GeneratorFile& gf);

enum class FixtureStatus { known, bold_unknown };

struct FixtureFieldEntry {
    BigInt m;
    bool trivially_monogenic = false;
    FixtureStatus status = FixtureStatus::known;
};

struct FixtureRow {
    BigInt D;
    int rank_grh = 0;
    BigInt field_count;
    std::vector<FixtureFieldEntry> fields;
};

/// One JSON object per line, integers as decimal strings.
std::vector<FixtureRow> parse_fixture(std::istream& in);
std::vector<FixtureRow> load_fixture(const std::string& path);

struct FieldReportEntry {
    FieldDescriptor field;
    MonogenityCertificate certificate;
};

struct AnalysisReport {
    AnalysisContext ctx;
    int rho = 0;
    int rank_input = 0;
    int delta = 0;
    BoundsRecord bounds_c1;
    BoundsRecord bounds_c3;
    bool routes_agree = true;
    std::vector<FieldReportEntry> fields;
    std::optional<std::string> skipped_reason;
};

enum class ReportFormat { json, tsv };

std::string render_report(const AnalysisReport& report, ReportFormat format);

}  // namespace cubigen

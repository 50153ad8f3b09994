#include "cubigen/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace cubigen {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string model_name(CurveModel model) {
    return model == CurveModel::four_x3 ? "4X3" : "X3Q";
}

CurveModel model_from_name(const std::string& name) {
    if (name == "4X3") return CurveModel::four_x3;
    if (name == "X3Q") return CurveModel::x3q;
    throw IngestionError("unknown curve model '" + name + "'");
}

std::string type_name(DedekindType t) { return t == DedekindType::I ? "I" : "II"; }

}  // namespace

GeneratorFile parse_generator_file(std::istream& in) {
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IngestionError(std::string("generator file is not valid JSON: ") + e.what());
    }
    GeneratorFile gf;
    try {
        gf.D = parse_bigint(j.at("D").get<std::string>());
        gf.model = model_from_name(j.at("model").get<std::string>());
        gf.source = j.value("source", std::string{});
        for (const auto& pt : j.at("points")) {
            Rational x = parse_rational(pt.at(0).get<std::string>());
            Rational y = parse_rational(pt.at(1).get<std::string>());
            gf.points.emplace_back(std::move(x), std::move(y));
        }
    } catch (const nlohmann::json::exception& e) {
        throw IngestionError(std::string("generator file is malformed: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw IngestionError(std::string("generator file has a bad number: ") + e.what());
    }
    MordellCurve curve{Rational(-27) * gf.D, gf.model};
    for (const auto& [x, y] : gf.points) {
        MordellPoint P = MordellPoint::affine(x, y, gf.model);
        if (!on_curve(curve, P))
            throw IngestionError("point (" + rational_to_string(x) + ", " + rational_to_string(y) +
                                 ") is not on E^{-27D} in model " + model_name(gf.model));
    }
    return gf;
}

GeneratorFile load_generator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IngestionError("cannot open generator file '" + path + "'");
    return parse_generator_file(in);
}

std::string serialize_generator_file(const GeneratorFile& gf) {
    ordered_json j;
    j["D"] = bigint_to_string(gf.D);
    j["model"] = model_name(gf.model);
    j["points"] = ordered_json::array();
    for (const auto& [x, y] : gf.points)
        j["points"].push_back({rational_to_string(x), rational_to_string(y)});
    j["source"] = gf.source;
    return j.dump(2) + "\n";
}

std::vector<FixtureRow> parse_fixture(std::istream& in) {
    std::vector<FixtureRow> rows;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        ordered_json j;
        try {
            j = ordered_json::parse(line);
            FixtureRow row;
            row.D = parse_bigint(j.at("D").get<std::string>());
            row.rank_grh = std::stoi(j.at("rank_grh").get<std::string>());
            row.field_count = parse_bigint(j.at("field_count").get<std::string>());
            for (const auto& f : j.at("fields")) {
                FixtureFieldEntry entry;
                entry.m = parse_bigint(f.at("m").get<std::string>());
                entry.trivially_monogenic = f.value("trivially_monogenic", false);
                entry.status = f.value("status", std::string("known")) == "bold-unknown"
                                   ? FixtureStatus::bold_unknown
                                   : FixtureStatus::known;
                row.fields.push_back(std::move(entry));
            }
            rows.push_back(std::move(row));
        } catch (const std::exception& e) {
            throw IngestionError("fixture line " + std::to_string(lineno) + " is malformed: " +
                                 e.what());
        }
    }
    return rows;
}

std::vector<FixtureRow> load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IngestionError("cannot open fixture '" + path + "'");
    return parse_fixture(in);
}

namespace {

ordered_json bounds_json(const BoundsRecord& c1, const BoundsRecord& c3, int delta) {
    ordered_json b;
    b["delta"] = delta;
    b["N"] = bigint_to_string(c1.group_size);
    b["algebras_c1"] = bigint_to_string(c1.algebra_count);
    b["algebras_c3"] = bigint_to_string(c3.algebra_count);
    b["field_bound_rho"] = bigint_to_string(c1.field_bound_rho);
    b["field_bound_rank"] = bigint_to_string(c1.field_bound_rank);
    return b;
}

ordered_json field_json(const FieldReportEntry& entry) {
    ordered_json f;
    f["m"] = bigint_to_string(entry.field.m);
    f["h"] = bigint_to_string(entry.field.h);
    f["k"] = bigint_to_string(entry.field.k);
    f["disc"] = bigint_to_string(entry.field.disc);
    f["type"] = type_name(entry.field.type);
    f["trivially_monogenic"] = entry.field.trivially_monogenic;
    ordered_json mono;
    if (entry.certificate.monogenic) {
        mono["status"] = "monogenic";
        mono["witness"] = {bigint_to_string(entry.certificate.witness->first),
                           bigint_to_string(entry.certificate.witness->second)};
        mono["value"] = *entry.certificate.unit_value;
    } else {
        mono["status"] = "undetermined";
    }
    f["monogenity"] = mono;
    return f;
}

}  // namespace

std::string render_report(const AnalysisReport& report, ReportFormat format) {
    if (format == ReportFormat::json) {
        ordered_json j;
        j["D"] = bigint_to_string(report.ctx.D);
        j["n"] = bigint_to_string(report.ctx.n);
        j["type"] = type_name(report.ctx.branch);
        j["support"] = ordered_json::array();
        for (const BigInt& p : report.ctx.prime_support) j["support"].push_back(bigint_to_string(p));
        j["rho"] = report.rho;
        j["rank_input"] = report.rank_input;
        j["bounds"] = bounds_json(report.bounds_c1, report.bounds_c3, report.delta);
        j["routes_agree"] = report.routes_agree;
        j["fields"] = ordered_json::array();
        for (const auto& entry : report.fields) j["fields"].push_back(field_json(entry));
        if (report.skipped_reason) j["skipped_reason"] = *report.skipped_reason;
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "# D\t" << report.ctx.D << "\n";
    out << "# n\t" << report.ctx.n << "\n";
    out << "# type\t" << type_name(report.ctx.branch) << "\n";
    out << "# support";
    for (const BigInt& p : report.ctx.prime_support) out << "\t" << p;
    out << "\n";
    out << "# rho\t" << report.rho << "\n";
    out << "# rank_input\t" << report.rank_input << "\n";
    out << "# delta\t" << report.delta << "\n";
    out << "# N\t" << report.bounds_c1.group_size << "\n";
    out << "# algebras_c1\t" << report.bounds_c1.algebra_count << "\n";
    out << "# algebras_c3\t" << report.bounds_c3.algebra_count << "\n";
    out << "# field_bound_rho\t" << report.bounds_c1.field_bound_rho << "\n";
    out << "# field_bound_rank\t" << report.bounds_c1.field_bound_rank << "\n";
    out << "# routes_agree\t" << (report.routes_agree ? "true" : "false") << "\n";
    if (report.skipped_reason) out << "# skipped_reason\t" << *report.skipped_reason << "\n";
    out << "m\th\tk\tdisc\ttype\ttrivially_monogenic\tmonogenity\twitness\tvalue\n";
    for (const auto& entry : report.fields) {
        out << entry.field.m << "\t" << entry.field.h << "\t" << entry.field.k << "\t"
            << entry.field.disc << "\t" << type_name(entry.field.type) << "\t"
            << (entry.field.trivially_monogenic ? "true" : "false") << "\t";
        if (entry.certificate.monogenic) {
            out << "monogenic\t" << entry.certificate.witness->first << ","
                << entry.certificate.witness->second << "\t" << *entry.certificate.unit_value;
        } else {
            out << "undetermined\t-\t-";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace cubigen

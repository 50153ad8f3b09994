#include "cubigen/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitMismatch = 3;

using namespace cubigen;

int run_analyze(const std::string& n_arg, const std::string& d_arg,
                const std::string& generators_path, long search_bound, long index_bound,
                const std::string& format) {
    AnalyzeOptions options;
    try {
        if (n_arg.empty() == d_arg.empty()) {
            std::cerr << "analyze: exactly one of --n or --D is required\n";
            return kExitUsage;
        }
        if (!n_arg.empty()) {
            options.n = parse_bigint(n_arg);
            if (options.n < 1) throw std::invalid_argument("n must be positive");
        } else {
            options.n = AnalysisContext::for_discriminant(parse_bigint(d_arg)).n;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "analyze: " << e.what() << "\n";
        return kExitUsage;
    }
    options.search_bound = search_bound;
    options.index_bound = index_bound;
    try {
        if (!generators_path.empty()) options.generators = load_generator_file(generators_path);
        AnalysisReport report = run_analysis(options);
        std::cout << render_report(report,
                                   format == "tsv" ? ReportFormat::tsv : ReportFormat::json);
        if (!report.routes_agree) {
            std::cerr << "analyze: enumeration routes disagree\n";
            return kExitMismatch;
        }
        return kExitOk;
    } catch (const IngestionError& e) {
        std::cerr << "analyze: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "analyze: " << e.what() << "\n";
        return kExitData;
    }
}

int run_verify_tables(const std::string& fixture_path, const std::string& generators_dir,
                      long index_bound) {
    try {
        std::vector<FixtureRow> rows = load_fixture(fixture_path);
        std::optional<std::string> dir;
        if (!generators_dir.empty()) dir = generators_dir;
        VerifyTablesResult result = verify_tables(rows, dir, index_bound);
        size_t checked = 0, skipped = 0;
        for (const TableRowResult& row : result.rows) {
            std::cout << row.line << "\n";
            row.skipped ? ++skipped : ++checked;
        }
        std::cout << "rows=" << result.rows.size() << " full-pipeline=" << checked
                  << " skipped=" << skipped << " result=" << (result.all_ok ? "pass" : "FAIL")
                  << "\n";
        return result.all_ok ? kExitOk : kExitMismatch;
    } catch (const IngestionError& e) {
        std::cerr << "verify-tables: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "verify-tables: " << e.what() << "\n";
        return kExitData;
    }
}

int run_isogeny(const std::string& d_arg, const std::string& point_arg,
                const std::string& direction) {
    try {
        Rational D = parse_rational(d_arg);
        auto comma = point_arg.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("point must be given as x,y");
        MordellPoint P = MordellPoint::affine(parse_rational(point_arg.substr(0, comma)),
                                              parse_rational(point_arg.substr(comma + 1)));
        auto print_point = [](const MordellPoint& Q) {
            if (Q.infinity)
                std::cout << "infinity\n";
            else
                std::cout << rational_to_string(Q.x) << "," << rational_to_string(Q.y) << "\n";
        };
        if (direction == "phi") {
            print_point(phi(D, P));
        } else if (direction == "phihat") {
            print_point(phi_hat(D, P));
        } else if (direction == "preimage") {
            auto Q = preimage_by_phi(D, P);
            if (Q)
                print_point(*Q);
            else
                std::cout << "none\n";
        } else {
            std::cerr << "isogeny: unknown direction '" << direction << "'\n";
            return kExitUsage;
        }
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "isogeny: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "isogeny: " << e.what() << "\n";
        return kExitData;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-monogenity of pure cubic fields via Mordell curves"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "enumerate quasi-monogenic fields for one discriminant");
    std::string n_arg, d_arg, generators_path, format = "json";
    long search_bound = 0, index_bound = 10;
    analyze->add_option("--n", n_arg, "n with D = -3n^2");
    analyze->add_option("--D", d_arg, "discriminant (must be of the form -3n^2)");
    analyze->add_option("--generators", generators_path, "generator file for E^{-27D}");
    analyze->add_option("--search-bound", search_bound, "naive point search bound (0 = off)");
    analyze->add_option("--index-bound", index_bound, "index form equation search bound");
    analyze->add_option("--format", format, "json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    auto* verify = app.add_subcommand("verify-tables", "audit a table fixture");
    std::string fixture_path, generators_dir;
    long verify_index_bound = 10;
    verify->add_option("--fixture", fixture_path, "fixture file, one JSON row per line")
        ->required();
    verify->add_option("--generators-dir", generators_dir,
                       "directory of per-row generator files D<value>.json");
    verify->add_option("--index-bound", verify_index_bound, "index form equation search bound");

    auto* isogeny = app.add_subcommand("isogeny", "apply the 3-isogeny, its dual, or a preimage");
    std::string iso_d, iso_point, iso_direction;
    isogeny->add_option("--D", iso_d, "curve parameter D")->required();
    isogeny->add_option("--point", iso_point, "point as x,y with rational entries")->required();
    isogeny->add_option("--direction", iso_direction, "phi, phihat, or preimage")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (analyze->parsed())
        return run_analyze(n_arg, d_arg, generators_path, search_bound, index_bound, format);
    if (verify->parsed()) return run_verify_tables(fixture_path, generators_dir, verify_index_bound);
    if (isogeny->parsed()) return run_isogeny(iso_d, iso_point, iso_direction);
    return kExitUsage;
}

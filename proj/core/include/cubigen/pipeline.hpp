#pragma once

#include "cubigen/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cubigen {

struct AnalyzeOptions {
    BigInt n;
    std::optional<GeneratorFile> generators;
    BigInt search_bound = 0;  // 0 disables the naive search
    BigInt index_bound = 10;
};

/// Assembles the context, acquires generators (file > naive search on both
/// curves with dual-isogeny lifting > dual kernel only), runs both
/// enumeration routes and certifies monogenity per field.
AnalysisReport run_analysis(const AnalyzeOptions& options);

struct TableRowResult {
    BigInt D;
    bool ok = false;
    bool skipped = false;  // part (c) skipped: generators unavailable
    std::string line;      // formatted per-row report
};

struct VerifyTablesResult {
    std::vector<TableRowResult> rows;
    bool all_ok = true;
};

/// Per fixture row: recomputes n (or n') from D, audits the trivially
/// monogenic marker against the recomputed value, and, when a generator file
/// named D<value>.json exists in generators_dir, replays the full pipeline
/// and diffs the resulting field list against the fixture.
VerifyTablesResult verify_tables(const std::vector<FixtureRow>& rows,
                                 const std::optional<std::string>& generators_dir,
                                 const BigInt& index_bound = 10);

}  // namespace cubigen

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mta/analytics.hpp"
#include "mta/driver.hpp"
#include "mta/testkit.hpp"

namespace mta::io {

inline constexpr int kSchemaVersion = 1;

/// Rounds to 15 significant digits, the precision used in every JSON document.
double round15(double v);

/// Reads one column of a CSV file. `column` is a 0-based index or a header
/// name; a header row is detected when the selected field of the first
/// non-empty line is not numeric.
TimeSeries load_csv(const std::filesystem::path& path, const std::string& column = "0");

/// One value per line, shortest round-trip representation.
std::string series_to_csv(const TimeSeries& series);

/// Writes through a sibling temp file and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

nlohmann::json config_to_json(const RunResult& result);
nlohmann::json stats_to_json(const RunStats& stats);
nlohmann::json catalog_document(const RunResult& result, const RunStats& stats);

/// Catalog rebuilt from a document; throws ConfigInvalid when the document
/// violates a catalog invariant.
MotifCatalog catalog_from_document(const nlohmann::json& doc);

/// Occurrence table: motif_id,symbols,length,occurrence,start_diff,start_raw.
std::string occurrences_csv(const MotifCatalog& catalog);

/// Checks MotifCatalog invariants, throwing ConfigInvalid on the first violation.
void validate_catalog(const MotifCatalog& catalog);

nlohmann::json truth_document(const testkit::Benchmark& bench, std::uint64_t seed);

/// Sweep report columns: s,r,threshold_kind,a,C1..C8,MQ,ME,error.
std::string sweep_csv(const std::vector<SweepRow>& rows);
nlohmann::json sweep_json(const std::vector<SweepRow>& rows);

/// Columns t, occurrence_1..k, mean_of_others over raw values; one row per
/// raw point spanned by the motif (length + 1 rows).
std::string overlay_csv(const MemoryMotif& motif, const TimeSeries& series);

/// Removes the fields that depend on wall-clock time.
nlohmann::json strip_timing(nlohmann::json doc);

}  // namespace mta::io

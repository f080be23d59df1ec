#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fognet/errors.hpp"

namespace fognet {

enum class Source { kTdcsfog, kDefog };

const char* source_name(Source s);
Source source_from_name(const std::string& name);

// The three outcome classes, in fixed order everywhere: CSV columns, label
// channels, metric reports and stratification tie-breaks.
inline constexpr std::array<const char*, 3> kLabelColumns = {"StartHesitation", "Turn",
                                                             "Walking"};

// Lab recordings are 128 Hz in m/s^2, home recordings 100 Hz in g. Values are
// carried in their native units end to end; nothing in the pipeline converts.
inline int64_t sample_rate_hz(Source s) { return s == Source::kTdcsfog ? 128 : 100; }

struct SeriesRecord {
  std::string series_id;
  Source source = Source::kTdcsfog;
  std::string subject_id;
  std::vector<float> acc_v, acc_ml, acc_ap;           // native units
  std::array<std::vector<uint8_t>, 3> labels;         // StartHesitation, Turn, Walking
  std::vector<uint8_t> valid_flag, task_flag;         // defog extras; empty when absent

  int64_t length() const { return static_cast<int64_t>(acc_v.size()); }
  const std::vector<float>& channel(int i) const;
  std::array<int64_t, 3> event_counts() const;
  bool has_any_event() const;
};

// 1000-point window, 50 of which lie after the labeled timepoint; the anchor
// therefore sits at 0-based window position total - future - 1 = 949.
struct WindowSpec {
  int64_t total = 1000;
  int64_t future = 50;

  int64_t anchor() const { return total - future - 1; }
  void validate() const {
    if (total < 1 || future < 0 || future >= total) {
      throw NumericError("window spec: need 0 <= future < total, got future " +
                         std::to_string(future) + ", total " + std::to_string(total));
    }
  }
  bool operator==(const WindowSpec&) const = default;
};

// One addressable training sample: a series (by catalog position) and the
// labeled anchor timepoint.
struct SampleRef {
  int32_t series_index = 0;
  int32_t t = 0;
};

struct SeriesSummary {
  std::string series_id;
  Source source = Source::kTdcsfog;
  std::string subject_id;
  int64_t length = 0;
  std::array<int64_t, 3> event_counts{};
};

// Immutable once built; series are kept sorted by id so every enumeration
// order downstream is deterministic.
class Catalog {
 public:
  void add(SeriesRecord record);

  size_t size() const { return series_.size(); }
  bool empty() const { return series_.empty(); }
  const SeriesRecord& at(size_t i) const { return series_[i]; }
  const SeriesRecord& by_id(const std::string& id) const;
  std::optional<size_t> index_of(const std::string& id) const;
  std::vector<SeriesSummary> summaries() const;
  int64_t total_timepoints() const;

 private:
  std::vector<SeriesRecord> series_;
  std::unordered_map<std::string, size_t> index_;
};

// ---------------------------------------------------------------------------
// CSV ingestion
// ---------------------------------------------------------------------------

// Columns: Time, AccV, AccML, AccAP, StartHesitation, Turn, Walking; defog
// files may add Valid and Task, which are parsed into flags but never used as
// features. Row order is preserved, values are never rescaled. With
// require_labels = false (prediction input) absent label columns load as
// all-zero labels.
SeriesRecord load_series_csv(const std::filesystem::path& path, Source source,
                             bool require_labels = true);

void write_series_csv(const SeriesRecord& record, const std::filesystem::path& path);

// Any CSV with Id and Subject columns.
std::unordered_map<std::string, std::string> load_subject_metadata_csv(
    const std::filesystem::path& path);

struct SourceLocation {
  std::filesystem::path series_dir;
  std::filesystem::path metadata_csv;
};

Catalog load_catalog(const std::optional<SourceLocation>& tdcsfog,
                     const std::optional<SourceLocation>& defog, bool require_labels = true);

// All .csv series of one directory, sorted by id; no subject metadata needed.
std::vector<SeriesRecord> load_series_dir(const std::filesystem::path& dir, Source source,
                                          bool require_labels);

void write_catalog_csvs(const Catalog& catalog, const std::filesystem::path& out_dir);

// ---------------------------------------------------------------------------
// Training-set assembly
// ---------------------------------------------------------------------------

// Drops defog series whose three event counts are all zero; tdcsfog series
// are always retained. Idempotent.
Catalog filter_training_catalog(Catalog catalog);

bool series_retained(const SeriesRecord& record);

// Copies the window anchored at t into out (channel-major, 3 x spec.total)
// and the three labels at t into target. Window positions outside the series
// are zero-filled; t itself must be in range.
void extract_window(const SeriesRecord& series, int64_t t, const WindowSpec& spec, float* out,
                    float* target);

enum class RowExclusion {
  kNone,               // every timepoint of every retained series
  kEventlessDefogRows  // additionally skip defog rows whose labels are all zero
};

// One SampleRef per timepoint, series in id order, t ascending. When
// series_subset is given, only those catalog positions contribute.
std::vector<SampleRef> enumerate_samples(const Catalog& catalog,
                                         RowExclusion exclusion = RowExclusion::kNone);
std::vector<SampleRef> enumerate_samples(const Catalog& catalog,
                                         const std::vector<size_t>& series_subset,
                                         RowExclusion exclusion = RowExclusion::kNone);

// Uniform subset without replacement of at most `budget` refs, returned in a
// seeded shuffled order (the training consumption order). All refs when the
// budget exceeds them.
std::vector<SampleRef> draw_sample_budget(std::vector<SampleRef> refs, int64_t budget,
                                          uint64_t seed);

}  // namespace fognet

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "fognet/data.hpp"

namespace fognet {

enum class Stratum : int { kNone = 0, kStartHesitation = 1, kTurn = 2, kWalking = 3 };

const char* stratum_name(Stratum s);

// Dominant event class of a series; kNone when all counts are zero; ties
// break toward the earlier class in StartHesitation < Turn < Walking order.
Stratum compute_stratum(const std::array<int64_t, 3>& event_counts);

struct SeriesForSplit {
  std::string series_id;
  std::string subject_id;
  Stratum stratum = Stratum::kNone;
};

struct FoldAssignment {
  int64_t k = 5;
  std::map<std::string, int> by_series;  // ordered: deterministic exports

  int fold_of(const std::string& series_id) const;
};

// Greedy subject-grouped stratified splitter. Subjects are ordered by
// (rarity of their rarest stratum, series count descending, id), then each is
// placed into the fold that minimizes a stratum-imbalance score. All series of
// one subject land in one fold. The seed permutes the fold labels of the
// otherwise input-determined assignment.
FoldAssignment stratified_group_kfold(const std::vector<SeriesForSplit>& items, int64_t k,
                                      uint64_t seed);

std::vector<SeriesForSplit> series_for_split(const Catalog& catalog);

FoldAssignment folds_for_catalog(const Catalog& catalog, int64_t k, uint64_t seed);

// CSV export/import: header series_id,subject_id,fold.
void write_folds_csv(const FoldAssignment& folds, const std::vector<SeriesForSplit>& items,
                     const std::filesystem::path& path);
FoldAssignment read_folds_csv(const std::filesystem::path& path);

}  // namespace fognet

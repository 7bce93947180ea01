// Copyright 2026 The prgain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Privacy-gain driven multi-iterative k-anonymization.
//
// Starting from the raw data, every iteration raises one quasi-identifier by
// one level, regroups the tuples that are still unanonymized, and freezes
// every equivalence class that reached size k at the vector where it did so.
// Candidates are scored by their privacy gain
//
//   PrGain = (T - (T^u - T^a_q)) / T
//
// where T is the table size, T^u the unanonymized count before the step and
// T^a_q the tuples the candidate would anonymize. All candidates that tie for
// the best non-zero gain are carried forward as separate branches; when no
// candidate anonymizes anything, every successor is carried forward. The
// best terminal branch wins.

#ifndef PRGAIN_ANONYMIZER_H_
#define PRGAIN_ANONYMIZER_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "prgain/hierarchy.h"
#include "prgain/table.h"

namespace prgain {

struct EquivalenceClass {
  std::vector<std::string> key;  // generalized QI values, declaration order
  std::vector<TupleId> members;  // ascending

  friend bool operator==(const EquivalenceClass&,
                         const EquivalenceClass&) = default;
};

// Generalized values of every quasi-identifier at every level, interned per
// column so that grouping works on integer codes.
class QuasiIdentifierIndex {
 public:
  static absl::StatusOr<QuasiIdentifierIndex> Build(
      const Table& table, std::span<const QuasiIdentifier> qis);

  size_t num_rows() const { return num_rows_; }
  size_t num_qis() const { return max_levels_.size(); }
  const std::vector<int>& max_levels() const { return max_levels_; }
  const std::vector<std::string>& names() const { return names_; }

  const std::string& Value(size_t qi, int level, TupleId row) const {
    return dictionaries_[qi][level][codes_[qi][level][row]];
  }

  // Partitions `ids` (ascending) by generalized key at `vector`. Classes are
  // ordered by smallest member.
  std::vector<std::vector<TupleId>> Partition(
      std::span<const TupleId> ids, const GeneralizationVector& vector) const;

  std::vector<std::string> Key(TupleId row,
                               const GeneralizationVector& vector) const;

  std::vector<EquivalenceClass> Classes(
      std::span<const TupleId> ids, const GeneralizationVector& vector) const;

 private:
  size_t num_rows_ = 0;
  std::vector<int> max_levels_;
  std::vector<std::string> names_;
  // [qi][level][row] -> code into dictionaries_[qi][level]
  std::vector<std::vector<std::vector<uint32_t>>> codes_;
  std::vector<std::vector<std::vector<std::string>>> dictionaries_;
};

// One-shot grouping; builds an index internally.
absl::StatusOr<std::vector<EquivalenceClass>> EquivalenceClasses(
    const Table& table, std::span<const TupleId> ids,
    const GeneralizationVector& vector, std::span<const QuasiIdentifier> qis);

struct KAnonymousSplit {
  std::vector<EquivalenceClass> qualifying;
  std::vector<TupleId> rest_ids;  // ascending
};

KAnonymousSplit SplitKAnonymous(std::vector<EquivalenceClass> classes, int k);

// (total - (unanonymized_before - newly_anonymized)) / total.
absl::StatusOr<double> PrGain(size_t total, size_t unanonymized_before,
                              size_t newly_anonymized);

struct AnonymizationState {
  size_t total = 0;
  std::vector<TupleId> unanonymized_ids;  // ascending
  std::vector<TupleId> anonymized_ids;    // ascending
  GeneralizationVector current_vector;

  bool Consistent() const;
};

AnonymizationState InitialState(size_t total, size_t num_qis);

struct Candidate {
  GeneralizationVector vector;
  double prgain = 0;
  std::vector<TupleId> newly_anonymized;  // ascending
  std::vector<EquivalenceClass> qualifying;

  // No tuple becomes k-anonymous under this candidate.
  bool nil() const { return newly_anonymized.empty(); }
};

std::vector<Candidate> ScoreCandidates(const QuasiIdentifierIndex& index,
                                       const AnonymizationState& state, int k);

enum class ResidualPolicy { kDrop, kKeep, kSuppress };

absl::string_view ResidualPolicyName(ResidualPolicy policy);
absl::StatusOr<ResidualPolicy> ParseResidualPolicy(absl::string_view name);

struct SearchOptions {
  // Live-branch cap; 0 means unlimited.
  int max_branches = 64;
  ResidualPolicy residual_policy = ResidualPolicy::kDrop;
  // Keep a summary of every branch, not just the winner.
  bool record_all_branches = false;
};

struct IterationRecord {
  GeneralizationVector chosen_vector;
  double prgain = 0;
  std::vector<TupleId> newly_anonymized;
  std::vector<EquivalenceClass> emitted_classes;
};

struct AnonymizedGroup {
  GeneralizationVector vector;  // where the class became k-anonymous
  EquivalenceClass cls;
};

struct BranchSummary {
  enum class Fate { kWinner, kTerminal, kMerged, kPruned };
  Fate fate = Fate::kTerminal;
  std::vector<IterationRecord> trace;
  size_t anonymized_count = 0;
};

absl::string_view BranchFateName(BranchSummary::Fate fate);

struct SearchStats {
  size_t expansions = 0;
  size_t branch_count_peak = 0;
  size_t merged = 0;
  size_t pruned = 0;
  size_t terminal_branches = 0;
};

struct AnonymizationResult {
  int k = 0;
  size_t total = 0;
  std::vector<std::string> qi_names;
  std::vector<int> max_levels;
  ResidualPolicy residual_policy = ResidualPolicy::kDrop;

  std::vector<AnonymizedGroup> groups;
  std::vector<TupleId> residual_ids;  // ascending
  std::vector<IterationRecord> trace;
  GeneralizationVector final_vector;
  size_t anonymized_count = 0;
  double final_prgain = 0;

  SearchStats stats;
  std::vector<BranchSummary> branches;  // only with record_all_branches
};

absl::StatusOr<AnonymizationResult> Anonymize(
    const Table& table, std::span<const QuasiIdentifier> qis, int k,
    const SearchOptions& options = {});

// The released table: group rows carry their frozen generalized values,
// residual rows follow the result's policy, other cells are untouched. Rows
// keep their original relative order.
Table BuildAnonymizedTable(const Table& table,
                           std::span<const QuasiIdentifier> qis,
                           const AnonymizationResult& result);

struct KAnonymityReport {
  struct Offender {
    std::vector<std::string> key;
    size_t size = 0;
  };

  int k = 0;
  size_t num_classes = 0;
  std::vector<Offender> offending;

  bool passed() const { return offending.empty(); }
};

// Groups rows by exact QI string equality.
KAnonymityReport VerifyKAnonymity(const Table& table,
                                  std::span<const size_t> qi_columns, int k);

// Checks the released groups of a result; residual tuples are ignored.
KAnonymityReport VerifyKAnonymity(const AnonymizationResult& result, int k);

}  // namespace prgain

#endif  // PRGAIN_ANONYMIZER_H_

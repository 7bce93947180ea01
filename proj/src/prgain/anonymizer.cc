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

#include "prgain/anonymizer.h"

#include <algorithm>
#include <iterator>
#include <limits>
#include <numeric>
#include <set>
#include <utility>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace prgain {

// ---------------------------------------------------------------------------
// QuasiIdentifierIndex

absl::StatusOr<QuasiIdentifierIndex> QuasiIdentifierIndex::Build(
    const Table& table, std::span<const QuasiIdentifier> qis) {
  QuasiIdentifierIndex index;
  index.num_rows_ = table.num_rows();
  for (const QuasiIdentifier& qi : qis) {
    if (qi.hierarchy == nullptr || qi.column >= table.num_columns()) {
      return absl::InvalidArgumentError(
          absl::StrCat("quasi-identifier '", qi.name, "' is not usable"));
    }
    const GeneralizationHierarchy& h = *qi.hierarchy;
    const int levels = h.max_level() + 1;
    index.max_levels_.push_back(h.max_level());
    index.names_.push_back(qi.name);

    std::vector<std::vector<uint32_t>> codes(
        levels, std::vector<uint32_t>(table.num_rows()));
    std::vector<std::vector<std::string>> dicts(levels);
    std::vector<absl::flat_hash_map<std::string, uint32_t>> interned(levels);
    absl::flat_hash_map<std::string, std::vector<uint32_t>> by_raw;

    for (TupleId row = 0; row < table.num_rows(); ++row) {
      const std::string& raw = table.cell(row, qi.column);
      auto it = by_raw.find(raw);
      if (it == by_raw.end()) {
        std::vector<uint32_t> chain(levels);
        for (int level = 0; level < levels; ++level) {
          absl::StatusOr<std::string> image = h.Generalize(raw, level);
          if (!image.ok()) {
            return absl::InvalidArgumentError(
                absl::StrCat("column '", qi.name, "', row ", row + 1, ": ",
                             image.status().message()));
          }
          auto [slot, inserted] = interned[level].try_emplace(
              *image, static_cast<uint32_t>(dicts[level].size()));
          if (inserted) dicts[level].push_back(*std::move(image));
          chain[level] = slot->second;
        }
        it = by_raw.emplace(raw, std::move(chain)).first;
      }
      for (int level = 0; level < levels; ++level) {
        codes[level][row] = it->second[level];
      }
    }
    index.codes_.push_back(std::move(codes));
    index.dictionaries_.push_back(std::move(dicts));
  }
  return index;
}

std::vector<std::vector<TupleId>> QuasiIdentifierIndex::Partition(
    std::span<const TupleId> ids, const GeneralizationVector& vector) const {
  std::vector<std::vector<TupleId>> classes;
  const size_t q = num_qis();

  // Mixed-radix packing of the key when it fits in 64 bits.
  bool packable = true;
  std::vector<uint64_t> radix(q, 1);
  {
    unsigned __int128 span = 1;
    for (size_t i = 0; i < q; ++i) {
      radix[i] = static_cast<uint64_t>(span);
      span *= std::max<size_t>(1, dictionaries_[i][vector[i]].size());
      if (span > std::numeric_limits<uint64_t>::max()) {
        packable = false;
        break;
      }
    }
  }
  if (packable) {
    absl::flat_hash_map<uint64_t, uint32_t> slot;
    for (TupleId id : ids) {
      uint64_t key = 0;
      for (size_t i = 0; i < q; ++i) {
        key += radix[i] * codes_[i][vector[i]][id];
      }
      auto [it, inserted] =
          slot.try_emplace(key, static_cast<uint32_t>(classes.size()));
      if (inserted) classes.emplace_back();
      classes[it->second].push_back(id);
    }
    return classes;
  }
  absl::flat_hash_map<std::vector<uint32_t>, uint32_t> slot;
  std::vector<uint32_t> key(q);
  for (TupleId id : ids) {
    for (size_t i = 0; i < q; ++i) key[i] = codes_[i][vector[i]][id];
    auto [it, inserted] =
        slot.try_emplace(key, static_cast<uint32_t>(classes.size()));
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(id);
  }
  return classes;
}

std::vector<std::string> QuasiIdentifierIndex::Key(
    TupleId row, const GeneralizationVector& vector) const {
  std::vector<std::string> key;
  key.reserve(num_qis());
  for (size_t i = 0; i < num_qis(); ++i) {
    key.push_back(Value(i, vector[i], row));
  }
  return key;
}

std::vector<EquivalenceClass> QuasiIdentifierIndex::Classes(
    std::span<const TupleId> ids, const GeneralizationVector& vector) const {
  std::vector<EquivalenceClass> out;
  for (std::vector<TupleId>& members : Partition(ids, vector)) {
    EquivalenceClass cls;
    cls.key = Key(members.front(), vector);
    cls.members = std::move(members);
    out.push_back(std::move(cls));
  }
  return out;
}

namespace {

absl::Status CheckVector(const GeneralizationVector& vector,
                         std::span<const int> max_levels) {
  if (vector.size() != max_levels.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("generalization vector ", vector.ToString(), " has ",
                     vector.size(), " levels, expected ", max_levels.size()));
  }
  for (size_t i = 0; i < vector.size(); ++i) {
    if (vector[i] < 0 || vector[i] > max_levels[i]) {
      return absl::InvalidArgumentError(absl::StrCat(
          "generalization vector ", vector.ToString(), " out of range"));
    }
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<std::vector<EquivalenceClass>> EquivalenceClasses(
    const Table& table, std::span<const TupleId> ids,
    const GeneralizationVector& vector, std::span<const QuasiIdentifier> qis) {
  if (absl::Status s = CheckVector(vector, MaxLevels(qis)); !s.ok()) return s;
  std::vector<TupleId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty() && sorted.back() >= table.num_rows()) {
    return absl::InvalidArgumentError("tuple id outside the table");
  }
  absl::StatusOr<QuasiIdentifierIndex> index =
      QuasiIdentifierIndex::Build(table, qis);
  if (!index.ok()) return index.status();
  return index->Classes(sorted, vector);
}

KAnonymousSplit SplitKAnonymous(std::vector<EquivalenceClass> classes, int k) {
  KAnonymousSplit split;
  for (EquivalenceClass& cls : classes) {
    if (cls.members.size() >= static_cast<size_t>(k)) {
      split.qualifying.push_back(std::move(cls));
    } else {
      split.rest_ids.insert(split.rest_ids.end(), cls.members.begin(),
                            cls.members.end());
    }
  }
  std::sort(split.rest_ids.begin(), split.rest_ids.end());
  return split;
}

absl::StatusOr<double> PrGain(size_t total, size_t unanonymized_before,
                              size_t newly_anonymized) {
  if (total == 0 || unanonymized_before > total ||
      newly_anonymized > unanonymized_before) {
    return absl::InvalidArgumentError(absl::StrCat(
        "privacy gain needs 0 <= newly (", newly_anonymized,
        ") <= unanonymized (", unanonymized_before, ") <= total (", total,
        "), total >= 1"));
  }
  // Integer numerator, single rounding.
  return static_cast<double>(total - (unanonymized_before - newly_anonymized)) /
         static_cast<double>(total);
}

bool AnonymizationState::Consistent() const {
  if (unanonymized_ids.size() + anonymized_ids.size() != total) return false;
  std::vector<TupleId> all;
  std::merge(unanonymized_ids.begin(), unanonymized_ids.end(),
             anonymized_ids.begin(), anonymized_ids.end(),
             std::back_inserter(all));
  for (size_t i = 0; i < all.size(); ++i) {
    if (all[i] != i) return false;
  }
  return true;
}

AnonymizationState InitialState(size_t total, size_t num_qis) {
  AnonymizationState state;
  state.total = total;
  state.unanonymized_ids.resize(total);
  std::iota(state.unanonymized_ids.begin(), state.unanonymized_ids.end(), 0);
  state.current_vector = GeneralizationVector::Zero(num_qis);
  return state;
}

std::vector<Candidate> ScoreCandidates(const QuasiIdentifierIndex& index,
                                       const AnonymizationState& state, int k) {
  std::vector<Candidate> candidates;
  for (GeneralizationVector& next :
       Successors(state.current_vector, index.max_levels())) {
    KAnonymousSplit split =
        SplitKAnonymous(index.Classes(state.unanonymized_ids, next), k);
    Candidate c;
    for (const EquivalenceClass& cls : split.qualifying) {
      c.newly_anonymized.insert(c.newly_anonymized.end(), cls.members.begin(),
                                cls.members.end());
    }
    std::sort(c.newly_anonymized.begin(), c.newly_anonymized.end());
    c.prgain = *PrGain(state.total, state.unanonymized_ids.size(),
                       c.newly_anonymized.size());
    c.vector = std::move(next);
    c.qualifying = std::move(split.qualifying);
    candidates.push_back(std::move(c));
  }
  return candidates;
}

absl::string_view ResidualPolicyName(ResidualPolicy policy) {
  switch (policy) {
    case ResidualPolicy::kDrop:
      return "drop";
    case ResidualPolicy::kKeep:
      return "keep";
    case ResidualPolicy::kSuppress:
      return "suppress";
  }
  return "unknown";
}

absl::StatusOr<ResidualPolicy> ParseResidualPolicy(absl::string_view name) {
  if (name == "drop") return ResidualPolicy::kDrop;
  if (name == "keep") return ResidualPolicy::kKeep;
  if (name == "suppress") return ResidualPolicy::kSuppress;
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown residual policy '", name, "' (expected drop, keep, suppress)"));
}

absl::string_view BranchFateName(BranchSummary::Fate fate) {
  switch (fate) {
    case BranchSummary::Fate::kWinner:
      return "winner";
    case BranchSummary::Fate::kTerminal:
      return "terminal";
    case BranchSummary::Fate::kMerged:
      return "merged";
    case BranchSummary::Fate::kPruned:
      return "pruned";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Branch search

namespace {

// Exact integer form of precision loss. A QI cell at level l of a hierarchy
// with height m costs l * (L / m), where L is the lcm of all heights, so the
// loss fraction is units / (T * q * L).
class LossModel {
 public:
  explicit LossModel(std::span<const int> max_levels) {
    lcm_ = 1;
    for (int m : max_levels) lcm_ = std::lcm(lcm_, static_cast<int64_t>(m));
    for (int m : max_levels) weights_.push_back(lcm_ / m);
  }

  int64_t VectorUnits(const GeneralizationVector& v) const {
    int64_t units = 0;
    for (size_t i = 0; i < v.size(); ++i) units += v[i] * weights_[i];
    return units;
  }
  int64_t TopUnits() const {
    return lcm_ * static_cast<int64_t>(weights_.size());
  }

 private:
  int64_t lcm_ = 1;
  std::vector<int64_t> weights_;
};

struct Branch {
  AnonymizationState state;
  std::vector<AnonymizedGroup> groups;
  std::vector<IterationRecord> trace;
  int64_t grouped_units = 0;
};

// Precision-loss numerator with residual tuples at the top of every
// hierarchy.
int64_t DropUnits(const Branch& b, const LossModel& loss) {
  return b.grouped_units +
         static_cast<int64_t>(b.state.unanonymized_ids.size()) *
             loss.TopUnits();
}

int64_t PolicyUnits(const Branch& b, const LossModel& loss,
                    ResidualPolicy policy) {
  if (policy != ResidualPolicy::kKeep) return DropUnits(b, loss);
  return b.grouped_units +
         static_cast<int64_t>(b.state.unanonymized_ids.size()) *
             loss.VectorUnits(b.state.current_vector);
}

// -1 if a < b, 0 if equal, 1 if a > b.
int CompareHistory(const Branch& a, const Branch& b) {
  const size_t n = std::min(a.trace.size(), b.trace.size());
  for (size_t i = 0; i < n; ++i) {
    const auto& va = a.trace[i].chosen_vector;
    const auto& vb = b.trace[i].chosen_vector;
    if (va < vb) return -1;
    if (vb < va) return 1;
  }
  if (a.trace.size() != b.trace.size()) {
    return a.trace.size() < b.trace.size() ? -1 : 1;
  }
  return 0;
}

// Ordering for merging and pruning live branches: lower information loss,
// then shorter trace, then smaller vector history.
bool LiveBefore(const Branch& a, const Branch& b, const LossModel& loss) {
  const int64_t la = DropUnits(a, loss);
  const int64_t lb = DropUnits(b, loss);
  if (la != lb) return la < lb;
  if (a.trace.size() != b.trace.size()) return a.trace.size() < b.trace.size();
  return CompareHistory(a, b) < 0;
}

// Ordering for the final choice among terminal branches.
bool TerminalBefore(const Branch& a, const Branch& b, const LossModel& loss,
                    ResidualPolicy policy) {
  const size_t ca = a.state.anonymized_ids.size();
  const size_t cb = b.state.anonymized_ids.size();
  if (ca != cb) return ca > cb;
  const int64_t la = PolicyUnits(a, loss, policy);
  const int64_t lb = PolicyUnits(b, loss, policy);
  if (la != lb) return la < lb;
  if (a.state.current_vector != b.state.current_vector) {
    return a.state.current_vector < b.state.current_vector;
  }
  return CompareHistory(a, b) < 0;
}

Branch Extend(const Branch& parent, Candidate candidate,
              const LossModel& loss) {
  Branch child;
  child.state.total = parent.state.total;
  child.state.current_vector = candidate.vector;
  std::set_difference(parent.state.unanonymized_ids.begin(),
                      parent.state.unanonymized_ids.end(),
                      candidate.newly_anonymized.begin(),
                      candidate.newly_anonymized.end(),
                      std::back_inserter(child.state.unanonymized_ids));
  std::merge(parent.state.anonymized_ids.begin(),
             parent.state.anonymized_ids.end(),
             candidate.newly_anonymized.begin(),
             candidate.newly_anonymized.end(),
             std::back_inserter(child.state.anonymized_ids));
  child.groups = parent.groups;
  for (const EquivalenceClass& cls : candidate.qualifying) {
    child.groups.push_back({candidate.vector, cls});
  }
  child.grouped_units =
      parent.grouped_units +
      static_cast<int64_t>(candidate.newly_anonymized.size()) *
          loss.VectorUnits(candidate.vector);
  child.trace = parent.trace;
  child.trace.push_back({std::move(candidate.vector), candidate.prgain,
                         std::move(candidate.newly_anonymized),
                         std::move(candidate.qualifying)});
  return child;
}

BranchSummary Summarize(const Branch& b, BranchSummary::Fate fate) {
  return {fate, b.trace, b.state.anonymized_ids.size()};
}

struct MergeKey {
  GeneralizationVector vector;
  std::vector<TupleId> unanonymized;

  friend bool operator==(const MergeKey&, const MergeKey&) = default;
  template <typename H>
  friend H AbslHashValue(H h, const MergeKey& k) {
    return H::combine(std::move(h), k.vector, k.unanonymized);
  }
};

}  // namespace

absl::StatusOr<AnonymizationResult> Anonymize(
    const Table& table, std::span<const QuasiIdentifier> qis, int k,
    const SearchOptions& options) {
  if (qis.empty()) {
    return absl::InvalidArgumentError(
        "anonymization needs at least one quasi-identifier");
  }
  if (k < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("k must be at least 2, got ", k));
  }
  if (options.max_branches < 0) {
    return absl::InvalidArgumentError("max_branches must be >= 0");
  }
  const size_t total = table.num_rows();
  if (total < static_cast<size_t>(k)) {
    return absl::FailedPreconditionError(
        absl::StrCat("anonymization not possible: ", total,
                     " tuples is fewer than k = ", k));
  }
  for (const QuasiIdentifier& qi : qis) {
    if (qi.hierarchy == nullptr) {
      return absl::InvalidArgumentError(
          absl::StrCat("quasi-identifier '", qi.name, "' has no hierarchy"));
    }
    std::set<std::string> distinct;
    for (const Tuple& row : table.rows()) distinct.insert(row[qi.column]);
    std::vector<std::string> sample(distinct.begin(), distinct.end());
    ValidationReport report = ValidateHierarchy(*qi.hierarchy, sample);
    if (!report.ok()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "hierarchy for '", qi.name, "' is invalid: ", report.ToString()));
    }
  }

  absl::StatusOr<QuasiIdentifierIndex> index =
      QuasiIdentifierIndex::Build(table, qis);
  if (!index.ok()) return index.status();
  const LossModel loss(index->max_levels());
  const size_t cap = static_cast<size_t>(options.max_branches);

  AnonymizationResult result;
  result.k = k;
  result.total = total;
  result.qi_names = index->names();
  result.max_levels = index->max_levels();
  result.residual_policy = options.residual_policy;

  std::vector<Branch> frontier;
  frontier.push_back({InitialState(total, qis.size()), {}, {}, 0});
  std::vector<Branch> terminals;
  result.stats.branch_count_peak = 1;

  while (!frontier.empty()) {
    std::vector<Branch> next;
    for (Branch& branch : frontier) {
      if (branch.state.unanonymized_ids.empty()) {
        terminals.push_back(std::move(branch));
        continue;
      }
      std::vector<Candidate> candidates =
          ScoreCandidates(*index, branch.state, k);
      ++result.stats.expansions;
      if (candidates.empty()) {
        terminals.push_back(std::move(branch));
        continue;
      }
      size_t best = 0;
      for (const Candidate& c : candidates) {
        best = std::max(best, c.newly_anonymized.size());
      }
      // Ties on the best gain all survive; on a plateau every successor does.
      for (Candidate& c : candidates) {
        if (c.newly_anonymized.size() != best) continue;
        next.push_back(Extend(branch, std::move(c), loss));
      }
    }

    // Branches that agree on (vector, unanonymized set) have identical
    // futures; keep the cheaper one.
    std::vector<Branch> merged;
    absl::flat_hash_map<MergeKey, size_t> seen;
    for (Branch& b : next) {
      MergeKey key{b.state.current_vector, b.state.unanonymized_ids};
      auto [it, inserted] = seen.try_emplace(std::move(key), merged.size());
      if (inserted) {
        merged.push_back(std::move(b));
        continue;
      }
      ++result.stats.merged;
      Branch& kept = merged[it->second];
      if (LiveBefore(b, kept, loss)) std::swap(b, kept);
      if (options.record_all_branches) {
        result.branches.push_back(Summarize(b, BranchSummary::Fate::kMerged));
      }
    }
    std::sort(merged.begin(), merged.end(),
              [&](const Branch& a, const Branch& b) {
                return LiveBefore(a, b, loss);
              });
    if (cap > 0 && merged.size() > cap) {
      result.stats.pruned += merged.size() - cap;
      if (options.record_all_branches) {
        for (size_t i = cap; i < merged.size(); ++i) {
          result.branches.push_back(
              Summarize(merged[i], BranchSummary::Fate::kPruned));
        }
      }
      merged.resize(cap);
    }
    result.stats.branch_count_peak =
        std::max(result.stats.branch_count_peak, merged.size());
    frontier = std::move(merged);
  }

  result.stats.terminal_branches = terminals.size();
  auto winner = std::min_element(
      terminals.begin(), terminals.end(),
      [&](const Branch& a, const Branch& b) {
        return TerminalBefore(a, b, loss, options.residual_policy);
      });
  if (options.record_all_branches) {
    for (auto it = terminals.begin(); it != terminals.end(); ++it) {
      result.branches.push_back(
          Summarize(*it, it == winner ? BranchSummary::Fate::kWinner
                                      : BranchSummary::Fate::kTerminal));
    }
  }

  Branch& best = *winner;
  result.groups = std::move(best.groups);
  result.residual_ids = std::move(best.state.unanonymized_ids);
  result.trace = std::move(best.trace);
  result.final_vector = std::move(best.state.current_vector);
  result.anonymized_count = best.state.anonymized_ids.size();
  result.final_prgain = static_cast<double>(result.anonymized_count) /
                        static_cast<double>(total);
  return result;
}

// ---------------------------------------------------------------------------
// Output and verification

namespace {

std::string SuppressedValue(const QuasiIdentifier& qi, const std::string& raw) {
  if (qi.hierarchy->kind() == HierarchyKind::kMask) {
    return std::string(std::max<size_t>(1, raw.size()),
                       qi.hierarchy->mask_char());
  }
  return "*";
}

}  // namespace

Table BuildAnonymizedTable(const Table& table,
                           std::span<const QuasiIdentifier> qis,
                           const AnonymizationResult& result) {
  constexpr size_t kResidual = std::numeric_limits<size_t>::max();
  std::vector<size_t> group_of(table.num_rows(), kResidual);
  for (size_t g = 0; g < result.groups.size(); ++g) {
    for (TupleId id : result.groups[g].cls.members) group_of[id] = g;
  }

  std::vector<Tuple> rows;
  rows.reserve(table.num_rows());
  for (TupleId id = 0; id < table.num_rows(); ++id) {
    Tuple row = table.rows()[id];
    if (group_of[id] != kResidual) {
      const auto& key = result.groups[group_of[id]].cls.key;
      for (size_t i = 0; i < qis.size(); ++i) row[qis[i].column] = key[i];
      rows.push_back(std::move(row));
      continue;
    }
    switch (result.residual_policy) {
      case ResidualPolicy::kDrop:
        continue;
      case ResidualPolicy::kKeep:
        for (size_t i = 0; i < qis.size(); ++i) {
          const std::string& raw = row[qis[i].column];
          row[qis[i].column] =
              qis[i]
                  .hierarchy->Generalize(raw, result.final_vector[i])
                  .value_or(SuppressedValue(qis[i], raw));
        }
        break;
      case ResidualPolicy::kSuppress:
        for (const QuasiIdentifier& qi : qis) {
          row[qi.column] = SuppressedValue(qi, row[qi.column]);
        }
        break;
    }
    rows.push_back(std::move(row));
  }
  return *Table::Create(table.schema(), std::move(rows));
}

namespace {

KAnonymityReport CollectReport(
    std::vector<std::pair<std::vector<std::string>, size_t>> classes, int k) {
  KAnonymityReport report;
  report.k = k;
  report.num_classes = classes.size();
  for (auto& [key, size] : classes) {
    if (size < static_cast<size_t>(k)) {
      report.offending.push_back({std::move(key), size});
    }
  }
  return report;
}

}  // namespace

KAnonymityReport VerifyKAnonymity(const Table& table,
                                  std::span<const size_t> qi_columns, int k) {
  std::vector<std::pair<std::vector<std::string>, size_t>> classes;
  absl::flat_hash_map<std::vector<std::string>, size_t> slot;
  for (const Tuple& row : table.rows()) {
    std::vector<std::string> key;
    key.reserve(qi_columns.size());
    for (size_t c : qi_columns) key.push_back(row[c]);
    auto [it, inserted] = slot.try_emplace(key, classes.size());
    if (inserted) classes.push_back({std::move(key), 0});
    ++classes[it->second].second;
  }
  return CollectReport(std::move(classes), k);
}

KAnonymityReport VerifyKAnonymity(const AnonymizationResult& result, int k) {
  std::vector<std::pair<std::vector<std::string>, size_t>> classes;
  absl::flat_hash_map<std::vector<std::string>, size_t> slot;
  for (const AnonymizedGroup& g : result.groups) {
    auto [it, inserted] = slot.try_emplace(g.cls.key, classes.size());
    if (inserted) classes.push_back({g.cls.key, 0});
    classes[it->second].second += g.cls.members.size();
  }
  return CollectReport(std::move(classes), k);
}

}  // namespace prgain

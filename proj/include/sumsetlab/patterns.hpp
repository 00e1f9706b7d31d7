#ifndef SUMSETLAB_PATTERNS_HPP
#define SUMSETLAB_PATTERNS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sumsetlab/setspec.hpp"
#include "sumsetlab/truncation.hpp"

namespace sumsetlab {

// Which ordered pairs (b1, b2) of B contribute the value m·b1 + ℓ·b2 + t.
enum class Relation { kStrict, kWeak, kDistinct, kAll };

const char* relation_name(Relation r);
Relation relation_from_name(const std::string& name);

struct PatternSpec {
  long m = 1;
  long ell = 1;
  Relation relation = Relation::kStrict;
  std::int64_t shift = 0;
  bool dilate = false;  // additionally require ℓ·b + t ∈ A for every b ∈ B

  void validate() const;
  // largest pattern value generated by a witness with maximum element b_max
  std::int64_t max_value(std::int64_t b_max, std::int64_t b_second) const;
};

// t = (ℓ+m)·j + i with i ∈ {0, …, ℓ+m−1}
struct ShiftDecomposition {
  std::int64_t j = 0;
  std::int64_t i = 0;
};
ShiftDecomposition normalize_shift(std::int64_t t, long ell, long m);

// Sorted distinct pattern values of B under the given regime.
std::vector<std::int64_t> pattern_values(const std::vector<std::int64_t>& b,
                                         const PatternSpec& spec);

struct InclusionViolation {
  std::int64_t value = 0;
  std::int64_t b1 = 0;
  std::int64_t b2 = 0;  // b1 == b2 marks a diagonal value, b2 == 0 a dilate value
};

struct InclusionResult {
  bool ok = true;
  std::optional<InclusionViolation> violation;  // smallest violating value
};

// Throws RangeError when some pattern value would exceed a.n().
InclusionResult check_inclusion(const std::vector<std::int64_t>& b,
                                const PatternSpec& spec, const Truncation& a);

enum class CandidateOrder { kSmallestFirst, kLargestFirst };

struct SearchConfig {
  // Max element of B. Defaults to floor((N − t)/(m+ℓ)) so every pattern
  // value lands inside [1, N].
  std::optional<std::int64_t> candidate_bound;
  std::uint64_t node_budget = 100'000'000;
  // Wall-clock cap, polled every few thousand nodes. Exceeding it marks the
  // result non-optimal, like the node budget, but ties the outcome to the
  // machine; reproducible runs should cap nodes instead.
  std::optional<double> time_budget_seconds;
  CandidateOrder order = CandidateOrder::kSmallestFirst;  // greedy only
};

struct SearchResult {
  std::vector<std::int64_t> b;
  bool optimal = false;
  std::uint64_t nodes_expanded = 0;
  std::int64_t candidate_bound = 0;
  // Certificate value list; filled by the searches for modest witnesses and
  // by attach_certificate on demand.
  std::vector<std::int64_t> values;

  std::int64_t size() const { return static_cast<std::int64_t>(b.size()); }
};

void attach_certificate(SearchResult& r, const PatternSpec& spec);

// Inductive extension: keeps a live candidate set consistent with all chosen
// elements and repeatedly appends the next admissible candidate. Lower bound
// only; result.optimal is always false unless the witness is empty and the
// candidate set was empty.
SearchResult greedy_extend(const Truncation& a, const PatternSpec& spec,
                           const SearchConfig& config = {});

// Depth-first branch and bound over increasing candidates; optimal == true
// iff the whole tree closed within the node budget. Tie-break: the
// lexicographically smallest witness among maximum-size ones.
SearchResult max_b_search(const Truncation& a, const PatternSpec& spec,
                          const SearchConfig& config = {});

// Exhaustive subset oracle; refuses candidate_bound > 22.
SearchResult brute_force_max_b(const Truncation& a, const PatternSpec& spec,
                               std::int64_t candidate_bound);

struct ShiftTableRow {
  std::int64_t shift = 0;
  SearchResult result;
};

struct ShiftTable {
  std::vector<ShiftTableRow> rows;
  std::int64_t best_shift = 0;  // argmax size, ties to the smallest shift
};

ShiftTable best_shift(const Truncation& a, PatternSpec spec,
                      std::vector<std::int64_t> t_range,
                      const SearchConfig& config = {}, bool use_greedy = false);

// Checks that inclusion of the t-shifted pattern of B equals inclusion of the
// i-shifted pattern of B+j, where t = (ℓ+m)j + i. The two sides generate the
// same value set, so agreement is an algebraic identity; a mismatch is an
// internal-consistency failure.
bool shift_equivalence_check(const std::vector<std::int64_t>& b,
                             const PatternSpec& spec, const Truncation& a);

// Largest congruence-class subset of B mod d; ties go to the smallest
// residue. With d = ℓ+m every strict/weak/all pattern value of the result at
// t = 0 is divisible by ℓ+m.
std::vector<std::int64_t> mod_refine(const std::vector<std::int64_t>& b,
                                     std::int64_t d);

// Searches A ∩ (ℓ+m)N for an unshifted witness; certifies that the pattern
// of the result lies in A itself.
SearchResult unshifted_reduction(const SetSpec& a, const PatternSpec& spec,
                                 std::int64_t n, const SearchConfig& config = {});

// ---------------------------------------------------------------------------
// Witness certificates (structured text).
// ---------------------------------------------------------------------------

struct Certificate {
  SetSpec set;
  std::int64_t n = 0;
  PatternSpec pattern;
  SearchResult result;
};

void write_certificate(const Certificate& c, std::ostream& out);
Certificate read_certificate(std::istream& in);
// Rebuilds the truncation, recomputes the value list from B and re-verifies
// every membership. Returns an explanation on failure.
bool verify_certificate(const Certificate& c, std::string* why = nullptr);

}  // namespace sumsetlab

#endif

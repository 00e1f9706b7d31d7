#ifndef SUMSETLAB_FAMILIES_HPP
#define SUMSETLAB_FAMILIES_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sumsetlab/patterns.hpp"
#include "sumsetlab/rational.hpp"
#include "sumsetlab/setspec.hpp"

namespace sumsetlab {

// The eight extremal sets, named by the pattern regime they defeat and the
// density notion they are extremal for. "Shifted" sets contain no infinite
// witness for any shift; "unshifted" companions defeat t = 0 only.
enum class FamilyId {
  kWeakUpperShifted,       // lower intervals, base (ℓ+m)/ℓ
  kWeakUpperUnshifted,     // previous ∪ non-multiples of ℓ+m
  kWeakLowerShifted,       // parity split of lower/upper intervals, base (ℓ+m)/ℓ
  kWeakLowerUnshifted,     // split along classes mod 2(ℓ+m)
  kDistinctUpperShifted,   // lower intervals, base ℓ/m (needs ℓ > m)
  kDistinctUpperUnshifted,
  kDistinctLowerShifted,   // parity split, base ℓ/m (needs ℓ > m)
  kDistinctLowerUnshifted,
};

const char* family_name(FamilyId id);
FamilyId family_from_name(const std::string& name);
const std::vector<FamilyId>& all_family_ids();

// Exact set composition for the given parameters.
SetSpec build_counterexample(FamilyId id, long ell, long m);

// Base β of the interval scaffold behind the family.
Rational family_base(FamilyId id, long ell, long m);

// Density the construction is built to achieve (upper density for the
// *Upper* families along their own windows, lower density for the others).
Rational family_density_target(FamilyId id, long ell, long m);

struct BlockingViolation {
  std::int64_t t = 0;
  std::int64_t b1 = 0;
  std::int64_t b = 0;
  std::int64_t anchor_value = 0;   // the value whose membership triggers the check
  std::int64_t blocked_value = 0;  // the value the construction forces out of A
};

// Exhaustive check of the gap argument: whenever the anchor value of a pair
// lands in A, the companion value must fall in the next inter-scale gap.
struct BlockingReport {
  FamilyId id{};
  long ell = 0, m = 0;
  std::int64_t t_max = 0, b1_max = 0;
  std::int64_t scan_lo = 0, scan_hi = 0;
  long safe_index = 0;      // first scale where the gap margin dominates
  std::int64_t safe_lo = 0; // smallest admissible scan_lo
  std::int64_t anchor_hits = 0;
  std::uint64_t checks = 0;
  std::vector<BlockingViolation> violations;
  bool pass() const { return violations.empty(); }

  void write_text(std::ostream& out) const;
  void write_tsv(std::ostream& out) const;  // one row per violation
};

// Only the two shifted upper-density families carry a blocking argument.
// scan_lo below the computed safe bound is a precondition error naming it.
BlockingReport blocking_scan(FamilyId id, long ell, long m, std::int64_t t_max,
                             std::int64_t b1_max, std::int64_t scan_lo,
                             std::int64_t scan_hi, int threads = 1);

// Exact prefix density of N \ (A1 ∪ A2) for the parity-split scaffold with
// base (ℓ+m)/ℓ; the construction needs this gap set to have zero density.
Rational gap_density_check(long ell, long m, std::int64_t n);

struct OptimalityRow {
  std::int64_t n = 0;
  std::int64_t shift = 0;
  std::int64_t greedy_size = 0;
  std::int64_t max_size = 0;
  bool optimal = false;
  std::uint64_t nodes = 0;
};

struct OptimalityReport {
  std::vector<OptimalityRow> rows;
  void write_tsv(std::ostream& out) const;
  void write_text(std::ostream& out) const;
};

// Max-witness size (and the greedy lower bound) across a schedule of horizons
// and shifts. Finite-scale evidence only: a flat greedy curve is the expected
// signature on an extremal set, while the true maximum inside one interval of
// the scaffold still grows with the horizon.
OptimalityReport optimality_curve(const SetSpec& set, PatternSpec regime,
                                  const std::vector<std::int64_t>& schedule,
                                  const std::vector<std::int64_t>& shifts,
                                  const SearchConfig& config = {});

// Family wrapper; rejects regimes that do not match the family.
OptimalityReport optimality_report(FamilyId id, long ell, long m,
                                   Relation relation,
                                   const std::vector<std::int64_t>& schedule,
                                   const std::vector<std::int64_t>& shifts,
                                   const SearchConfig& config = {});

}  // namespace sumsetlab

#endif

#ifndef SUMSETLAB_DENSITY_HPP
#define SUMSETLAB_DENSITY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "sumsetlab/rational.hpp"
#include "sumsetlab/setspec.hpp"
#include "sumsetlab/truncation.hpp"

namespace sumsetlab {

enum class WindowKind { kPrefixes, kFamilyWindows, kExplicit };

// Increasing sequence of prefix endpoints along which densities are read.
struct WindowSequence {
  WindowKind kind = WindowKind::kExplicit;
  std::vector<std::int64_t> endpoints;  // strictly increasing, all >= 1

  static WindowSequence prefixes(std::int64_t n, std::int64_t stride = 1);
  // endpoints floor((β − 1/i)·β^{2i}) for i = 1..count (sub-unit and
  // duplicate values dropped)
  static WindowSequence family_windows(const IntervalFamily& f, long count);
  static WindowSequence explicit_endpoints(std::vector<std::int64_t> es);
};

// Exact density readings along a window sequence. upper/lower estimates are
// the max/min ratio over the final tail fraction of windows; the full curve
// is kept because no finite prefix determines the limsup/liminf.
struct DensityReport {
  WindowKind window_kind = WindowKind::kExplicit;
  std::vector<std::int64_t> endpoints;
  std::vector<std::int64_t> counts;
  std::vector<Rational> ratios;
  std::vector<Rational> suffix_max;  // max of ratios[i..]
  std::vector<Rational> suffix_min;  // min of ratios[i..]
  std::size_t tail_begin = 0;        // first index inside the tail
  Rational upper_estimate;
  Rational lower_estimate;
  std::optional<Rational> banach_estimate;
  std::optional<std::int64_t> banach_window;

  void write_tsv(std::ostream& out) const;
  void write_text(std::ostream& out) const;
};

DensityReport density_curve(const Truncation& trunc,
                            const WindowSequence& windows,
                            const Rational& tail_fraction = Rational(1, 2));

// max over M of |A ∩ [M+1, M+L]| / L, exact; window_start receives the
// smallest maximizing M when given.
Rational banach_density_estimate(const Truncation& trunc, std::int64_t window_len,
                                 std::int64_t* window_start = nullptr);

// β/(β+1): the density of either family kind along its own window sequence.
Rational analytic_family_density(const IntervalFamily& f);

// Closed-form density thresholds from the sumset existence results and the
// matching counterexample bounds, exact in (ℓ, m) with k = m/ℓ.
enum class ThresholdId {
  kStrictShiftedPositive,    // d*(A) > 0        : strict pairs, shift allowed
  kSumsetUnshiftedUpper,     // d̄(A) > 5/6       : B+B, no shift (ℓ=m=1)
  kSumsetUnshiftedLower,     // d̲(A) > 3/4       : B+B, no shift
  kSumsetShiftedUpper,       // d̄(A) > 2/3       : B+B+t, t ∈ {0,1}
  kSumsetShiftedLower,       // d̲(A) > 1/2       : B+B+t
  kWeakShiftedLower,         // d̲(A) > 1/2       : weak pairs, shift allowed
  kWeakShiftedUpper,         // d̄(A) > 1−1/(k+2)
  kWeakUnshiftedUpper,       // d̄(A) > 1−1/(ℓ(k+1)(k+2))
  kStrictUnshiftedBanach,    // d*(A) > 1−1/(ℓ+m): strict pairs, no shift
  kWeakShiftedDensitySum,    // d̲+d̄ > 1
  kWeakUnshiftedDensitySum,  // d̲+d̄ > 2−1/(ℓ+m)
  kWeakShiftedLowerSharp,    // 1/2, sharp for weak pairs with shift
  kWeakUnshiftedLower,       // d̲(A) > 1−1/(2(ℓ+m))
  kDistinctShiftedUpper,     // ℓ/(ℓ+m)          : b₁≠b₂ bound, needs ℓ>m
  kDistinctUnshiftedUpper,   // 1−m/(ℓ+m)²       : b₁≠b₂ bound, needs ℓ>m
  kDistinctShiftedLower,     // 1/2              : b₁≠b₂ bound, needs ℓ>m
  kDiagShiftedUpper,         // mB+mB: d̄ > 2/3
  kDiagUnshiftedUpper,       // mB+mB: d̄ > 1−1/(6m)
  kDiagShiftedLower,         // mB+mB: d̲ > 1/2
  kDiagUnshiftedLower,       // mB+mB: d̲ > 1−1/(4m)
};

Rational threshold(ThresholdId id, long ell, long m);
const char* threshold_name(ThresholdId id);
const std::vector<ThresholdId>& all_threshold_ids();

// Exact comparison of the b₁≠b₂ bound ℓ/(ℓ+m) against the b₁≤b₂ bound
// (k+1)/(k+2), and of their unshifted companions; the order flips exactly at
// k(k+1) = 1, which never holds for rational k.
struct GoldenComparison {
  long ell = 0, m = 0;
  Rational k;
  Rational distinct_bound;        // ℓ/(ℓ+m) = 1/(k+1)
  Rational weak_bound;            // (k+1)/(k+2)
  Rational distinct_unshifted;    // 1−m/(ℓ+m)²
  Rational weak_unshifted;        // 1−1/(ℓ(k+1)(k+2))
  int sign_kk1 = 0;               // sign of k(k+1) − 1
  int order = 0;                  // sign of distinct_bound − weak_bound
  bool consistent() const { return order == -sign_kk1 && order != 0; }
};

GoldenComparison golden_ratio_comparison(long ell, long m);

}  // namespace sumsetlab

#endif

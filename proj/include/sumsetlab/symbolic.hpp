#ifndef SUMSETLAB_SYMBOLIC_HPP
#define SUMSETLAB_SYMBOLIC_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sumsetlab/density.hpp"
#include "sumsetlab/rational.hpp"
#include "sumsetlab/setspec.hpp"

namespace sumsetlab {

// How a finite 0/1 word over coordinates [0, horizon] was produced. The full
// two-sided shift space is never materialized: every construction here only
// reads coordinates >= 0, and forward orbits only touch n >= 1.
enum class PointRule {
  kIndicator,      // word[n] = 1 iff n is in the set (word[0] = 0)
  kQuotientStride, // word[ℓi] = source[(ℓ+m)i] for i >= 1, 1 elsewhere
  kPaddedBlocks,   // word[ℓ(q+1)i + j] = source[(ℓ+m)i + j] for i >= 1 and
                   // j < ℓ+m, 1 elsewhere (q = ceil(m/ℓ))
};

struct SymbolicPoint {
  PointRule rule = PointRule::kIndicator;
  long ell = 0, m = 0;  // construction parameters (0 for indicators)
  std::int64_t horizon = 0;
  std::vector<std::uint8_t> word;  // coordinates 0..horizon

  std::uint8_t at(std::int64_t coord) const;
};

SymbolicPoint indicator_point(const SetSpec& a, std::int64_t horizon);

// The unshifted-case auxiliary point: hitting times of {x(0)=1} along the
// ℓ-th shift power recover the (ℓ+m)-quotient of the source set.
SymbolicPoint build_quotient_stride(const SymbolicPoint& indicator, long ell,
                                    long m, std::int64_t horizon);

// The shifted-case auxiliary point: blocks of length ℓ+m are embedded into
// blocks of length ℓ(q+1) and the leftover coordinates are padded with 1s.
SymbolicPoint build_padded_blocks(const SymbolicPoint& indicator, long ell,
                                  long m, std::int64_t horizon);

// Conjunction of fixed bits read off a pair of points; component 0 is the
// first (auxiliary) point, component 1 the second.
struct CylinderEvent {
  struct Atom {
    int component = 0;
    std::int64_t offset = 0;
    std::uint8_t bit = 1;
  };
  std::vector<Atom> atoms;

  // Σ × E — the second point hits {x(0)=1}
  static CylinderEvent second_hits();
  // S^{-j}E × Σ — the first point hits {x(j)=1}
  static CylinderEvent first_hits(std::int64_t j = 0);
};

struct EmpiricalMeasure {
  long p = 1, q = 1;        // transform powers (S^p × S^q)
  std::int64_t samples = 0; // orbit length N
  std::int64_t hits = 0;
  Rational frequency;       // hits / samples, exact
};

// Frequency of (S^p × S^q)^n (x, y) lying in the event for n = 1..n_samples.
EmpiricalMeasure orbit_frequency(const SymbolicPoint& x, const SymbolicPoint& y,
                                 long p, long q, const CylinderEvent& event,
                                 std::int64_t n_samples);

// Definitional self-test of both constructions: the displayed hitting-time
// identities must hold with zero mismatches over the covered range.
struct IdentityMismatch {
  std::int64_t j = -1;  // -1 marks the quotient-stride identity
  std::int64_t n = 0;
};

struct IdentityReport {
  long ell = 0, m = 0, q = 0;
  std::int64_t horizon = 0;
  std::int64_t checked = 0;
  std::vector<IdentityMismatch> mismatches;
  bool pass() const { return mismatches.empty(); }
};

IdentityReport verify_identity_sets(const SetSpec& a, long ell, long m,
                                    std::int64_t horizon);

// Finite-scale check of the correspondence inequalities. For each window
// endpoint N the empirical measures are taken over N' = floor(N·ℓ/(ℓ+m))
// orbit steps of (S×S) on (quotient-stride, indicator) and of (S^{q+1}×S) on
// (padded-blocks, indicator). The upper-density surrogate on the right-hand
// sides is the estimate along the given window sequence; the lower-density
// surrogate is the smallest sampled prefix ratio over the tail half of the
// windows, which is what the liminf step of the argument actually bounds.
// Margins are reported exactly; pass() allows an additive slack epsilon for
// the finite-scale error terms.
struct InequalityRow {
  std::int64_t window = 0;   // N
  std::int64_t samples = 0;  // N'
  Rational mu_second;        // μ(Σ×E)
  Rational mu_first_stride;  // μ(E×Σ) under S×S
  std::vector<Rational> mu_first_blocks;  // μ(S^{-j}E×Σ), j = 0..q
  Rational lhs_noshift;      // (ℓ+m)μ(Σ×E) + ℓμ(E×Σ)
  Rational lhs_shift;        // (ℓ+m)μ(Σ×E) + ℓ Σ_j μ(S^{-j}E×Σ)
  Rational rhs_noshift_upper;
  Rational rhs_noshift_lower;
  Rational rhs_shift_upper;
  Rational rhs_shift_lower;
};

struct InequalityReport {
  long ell = 0, m = 0, q = 0;
  Rational upper_estimate;
  Rational lower_estimate;
  Rational epsilon;
  std::vector<InequalityRow> rows;
  std::size_t certified_row = 0;  // the last window
  std::size_t best_row = 0;       // largest minimum margin

  Rational min_margin(const InequalityRow& r) const;
  bool pass() const;

  void write_tsv(std::ostream& out) const;
  void write_text(std::ostream& out) const;
};

InequalityReport inequality_report(const SetSpec& a, long ell, long m,
                                   const WindowSequence& windows,
                                   const Rational& epsilon);

}  // namespace sumsetlab

#endif

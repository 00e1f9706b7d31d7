#include "sumsetlab/density.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace sumsetlab {

WindowSequence WindowSequence::prefixes(std::int64_t n, std::int64_t stride) {
  if (n < 1) throw std::invalid_argument("prefixes: N must be >= 1");
  if (stride < 1) throw std::invalid_argument("prefixes: stride must be >= 1");
  WindowSequence w;
  w.kind = WindowKind::kPrefixes;
  for (std::int64_t e = stride; e <= n; e += stride) w.endpoints.push_back(e);
  if (w.endpoints.empty() || w.endpoints.back() != n)
    w.endpoints.push_back(n);
  return w;
}

WindowSequence WindowSequence::family_windows(const IntervalFamily& f,
                                              long count) {
  if (count < 1) throw std::invalid_argument("family_windows: count must be >= 1");
  WindowSequence w;
  w.kind = WindowKind::kFamilyWindows;
  for (long i = 1; i <= count; ++i) {
    Rational endpoint = (f.base - Rational(1, i)) * f.base.pow(2 * i);
    BigInt e = endpoint.floor();
    if (e < BigInt(1)) continue;
    if (!e.fits_int64())
      throw std::overflow_error("family_windows: endpoint exceeds int64");
    std::int64_t v = e.to_int64();
    if (w.endpoints.empty() || v > w.endpoints.back())
      w.endpoints.push_back(v);
  }
  if (w.endpoints.empty())
    throw std::invalid_argument("family_windows: no endpoints >= 1");
  return w;
}

WindowSequence WindowSequence::explicit_endpoints(std::vector<std::int64_t> es) {
  if (es.empty()) throw std::invalid_argument("explicit windows: empty list");
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (es[i] < 1 || (i > 0 && es[i] <= es[i - 1]))
      throw std::invalid_argument(
          "explicit windows: endpoints must be strictly increasing and >= 1");
  }
  WindowSequence w;
  w.kind = WindowKind::kExplicit;
  w.endpoints = std::move(es);
  return w;
}

DensityReport density_curve(const Truncation& trunc,
                            const WindowSequence& windows,
                            const Rational& tail_fraction) {
  if (windows.endpoints.empty())
    throw std::invalid_argument("density_curve: empty window list");
  if (windows.endpoints.back() > trunc.n())
    throw std::invalid_argument("density_curve: window endpoint beyond N");
  if (!(tail_fraction > Rational(0)) || tail_fraction > Rational(1))
    throw std::invalid_argument("density_curve: tail fraction must be in (0, 1]");

  DensityReport r;
  r.window_kind = windows.kind;
  r.endpoints = windows.endpoints;
  const std::size_t count = r.endpoints.size();
  r.counts.reserve(count);
  r.ratios.reserve(count);
  for (std::int64_t e : r.endpoints) {
    std::int64_t c = trunc.count_prefix(e);
    r.counts.push_back(c);
    r.ratios.push_back(Rational(c, e));
  }
  r.suffix_max.resize(count);
  r.suffix_min.resize(count);
  for (std::size_t i = count; i-- > 0;) {
    r.suffix_max[i] = r.ratios[i];
    r.suffix_min[i] = r.ratios[i];
    if (i + 1 < count) {
      if (r.suffix_max[i + 1] > r.suffix_max[i]) r.suffix_max[i] = r.suffix_max[i + 1];
      if (r.suffix_min[i + 1] < r.suffix_min[i]) r.suffix_min[i] = r.suffix_min[i + 1];
    }
  }
  // tail holds the last ceil(fraction * count) windows, at least one
  BigInt tail_len = (tail_fraction * Rational(static_cast<std::int64_t>(count))).ceil();
  std::size_t tl = static_cast<std::size_t>(tail_len.to_int64());
  tl = std::min(std::max<std::size_t>(tl, 1), count);
  r.tail_begin = count - tl;
  r.upper_estimate = r.suffix_max[r.tail_begin];
  r.lower_estimate = r.suffix_min[r.tail_begin];
  return r;
}

Rational banach_density_estimate(const Truncation& trunc, std::int64_t window_len,
                                 std::int64_t* window_start) {
  if (window_len < 1 || window_len > trunc.n())
    throw std::invalid_argument("banach estimate: window length out of range");
  std::int64_t best = -1, best_m = 0;
  for (std::int64_t m0 = 0; m0 + window_len <= trunc.n(); ++m0) {
    std::int64_t c = trunc.count_prefix(m0 + window_len) - trunc.count_prefix(m0);
    if (c > best) {
      best = c;
      best_m = m0;
    }
  }
  if (window_start) *window_start = best_m;
  return Rational(best, window_len);
}

Rational analytic_family_density(const IntervalFamily& f) {
  return f.base / (f.base + Rational(1));
}

namespace {

Rational k_ratio(long ell, long m) { return Rational(m, ell); }

void require_positive(long ell, long m) {
  if (ell < 1 || m < 1)
    throw std::domain_error("threshold: ell and m must be positive");
}

void require_ell_gt_m(long ell, long m) {
  if (ell <= m)
    throw std::domain_error("threshold: this bound needs ell > m");
}

}  // namespace

Rational threshold(ThresholdId id, long ell, long m) {
  require_positive(ell, m);
  const Rational one(1);
  const Rational k = k_ratio(ell, m);
  const Rational lm(ell + m);
  switch (id) {
    case ThresholdId::kStrictShiftedPositive:
      return Rational(0);
    case ThresholdId::kSumsetUnshiftedUpper:
      return Rational(5, 6);
    case ThresholdId::kSumsetUnshiftedLower:
      return Rational(3, 4);
    case ThresholdId::kSumsetShiftedUpper:
      return Rational(2, 3);
    case ThresholdId::kSumsetShiftedLower:
      return Rational(1, 2);
    case ThresholdId::kWeakShiftedLower:
    case ThresholdId::kWeakShiftedLowerSharp:
      return Rational(1, 2);
    case ThresholdId::kWeakShiftedUpper:
      return one - one / (k + Rational(2));
    case ThresholdId::kWeakUnshiftedUpper:
      return one - one / (Rational(ell) * (k + one) * (k + Rational(2)));
    case ThresholdId::kStrictUnshiftedBanach:
      return one - one / lm;
    case ThresholdId::kWeakShiftedDensitySum:
      return one;
    case ThresholdId::kWeakUnshiftedDensitySum:
      return Rational(2) - one / lm;
    case ThresholdId::kWeakUnshiftedLower:
      return one - one / (Rational(2) * lm);
    case ThresholdId::kDistinctShiftedUpper:
      require_ell_gt_m(ell, m);
      return Rational(ell) / lm;
    case ThresholdId::kDistinctUnshiftedUpper:
      require_ell_gt_m(ell, m);
      return one - Rational(m) / (lm * lm);
    case ThresholdId::kDistinctShiftedLower:
      require_ell_gt_m(ell, m);
      return Rational(1, 2);
    case ThresholdId::kDiagShiftedUpper:
      return Rational(2, 3);
    case ThresholdId::kDiagUnshiftedUpper:
      return one - Rational(1, 6 * m);
    case ThresholdId::kDiagShiftedLower:
      return Rational(1, 2);
    case ThresholdId::kDiagUnshiftedLower:
      return one - Rational(1, 4 * m);
  }
  throw std::logic_error("threshold: unknown id");
}

const char* threshold_name(ThresholdId id) {
  switch (id) {
    case ThresholdId::kStrictShiftedPositive: return "strict_shifted_positive";
    case ThresholdId::kSumsetUnshiftedUpper: return "sumset_unshifted_upper";
    case ThresholdId::kSumsetUnshiftedLower: return "sumset_unshifted_lower";
    case ThresholdId::kSumsetShiftedUpper: return "sumset_shifted_upper";
    case ThresholdId::kSumsetShiftedLower: return "sumset_shifted_lower";
    case ThresholdId::kWeakShiftedLower: return "weak_shifted_lower";
    case ThresholdId::kWeakShiftedUpper: return "weak_shifted_upper";
    case ThresholdId::kWeakUnshiftedUpper: return "weak_unshifted_upper";
    case ThresholdId::kStrictUnshiftedBanach: return "strict_unshifted_banach";
    case ThresholdId::kWeakShiftedDensitySum: return "weak_shifted_density_sum";
    case ThresholdId::kWeakUnshiftedDensitySum: return "weak_unshifted_density_sum";
    case ThresholdId::kWeakShiftedLowerSharp: return "weak_shifted_lower_sharp";
    case ThresholdId::kWeakUnshiftedLower: return "weak_unshifted_lower";
    case ThresholdId::kDistinctShiftedUpper: return "distinct_shifted_upper";
    case ThresholdId::kDistinctUnshiftedUpper: return "distinct_unshifted_upper";
    case ThresholdId::kDistinctShiftedLower: return "distinct_shifted_lower";
    case ThresholdId::kDiagShiftedUpper: return "diag_shifted_upper";
    case ThresholdId::kDiagUnshiftedUpper: return "diag_unshifted_upper";
    case ThresholdId::kDiagShiftedLower: return "diag_shifted_lower";
    case ThresholdId::kDiagUnshiftedLower: return "diag_unshifted_lower";
  }
  return "?";
}

const std::vector<ThresholdId>& all_threshold_ids() {
  static const std::vector<ThresholdId> ids = {
      ThresholdId::kStrictShiftedPositive,
      ThresholdId::kSumsetUnshiftedUpper,
      ThresholdId::kSumsetUnshiftedLower,
      ThresholdId::kSumsetShiftedUpper,
      ThresholdId::kSumsetShiftedLower,
      ThresholdId::kWeakShiftedLower,
      ThresholdId::kWeakShiftedUpper,
      ThresholdId::kWeakUnshiftedUpper,
      ThresholdId::kStrictUnshiftedBanach,
      ThresholdId::kWeakShiftedDensitySum,
      ThresholdId::kWeakUnshiftedDensitySum,
      ThresholdId::kWeakShiftedLowerSharp,
      ThresholdId::kWeakUnshiftedLower,
      ThresholdId::kDistinctShiftedUpper,
      ThresholdId::kDistinctUnshiftedUpper,
      ThresholdId::kDistinctShiftedLower,
      ThresholdId::kDiagShiftedUpper,
      ThresholdId::kDiagUnshiftedUpper,
      ThresholdId::kDiagShiftedLower,
      ThresholdId::kDiagUnshiftedLower,
  };
  return ids;
}

GoldenComparison golden_ratio_comparison(long ell, long m) {
  require_positive(ell, m);
  if (ell <= m)
    throw std::domain_error("golden_ratio_comparison: needs ell > m");
  GoldenComparison g;
  g.ell = ell;
  g.m = m;
  g.k = k_ratio(ell, m);
  g.distinct_bound = threshold(ThresholdId::kDistinctShiftedUpper, ell, m);
  g.weak_bound = threshold(ThresholdId::kWeakShiftedUpper, ell, m);
  g.distinct_unshifted = threshold(ThresholdId::kDistinctUnshiftedUpper, ell, m);
  g.weak_unshifted = threshold(ThresholdId::kWeakUnshiftedUpper, ell, m);
  g.sign_kk1 = (g.k * (g.k + Rational(1)) - Rational(1)).sign();
  g.order = (g.distinct_bound - g.weak_bound).sign();
  return g;
}

void DensityReport::write_tsv(std::ostream& out) const {
  out << "endpoint\tcount\tratio\tratio_exact\n";
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    out << endpoints[i] << '\t' << counts[i] << '\t'
        << ratios[i].to_decimal_string(12) << '\t' << ratios[i].to_string()
        << '\n';
  }
}

void DensityReport::write_text(std::ostream& out) const {
  const char* kind_name = window_kind == WindowKind::kPrefixes ? "prefixes"
                          : window_kind == WindowKind::kFamilyWindows
                              ? "family-windows"
                              : "explicit";
  out << "windows: " << kind_name << " (" << endpoints.size() << ")\n";
  out << "tail: last " << (endpoints.size() - tail_begin) << " windows\n";
  out << "upper_estimate: " << upper_estimate.to_string() << " ~ "
      << upper_estimate.to_decimal_string(12) << "\n";
  out << "lower_estimate: " << lower_estimate.to_string() << " ~ "
      << lower_estimate.to_decimal_string(12) << "\n";
  if (banach_estimate) {
    out << "banach_estimate(L=" << *banach_window
        << "): " << banach_estimate->to_string() << " ~ "
        << banach_estimate->to_decimal_string(12) << "\n";
  }
}

}  // namespace sumsetlab

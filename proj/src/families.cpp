#include "sumsetlab/families.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "sumsetlab/density.hpp"
#include "sumsetlab/truncation.hpp"

namespace sumsetlab {

const char* family_name(FamilyId id) {
  switch (id) {
    case FamilyId::kWeakUpperShifted: return "weak_upper_shifted";
    case FamilyId::kWeakUpperUnshifted: return "weak_upper_unshifted";
    case FamilyId::kWeakLowerShifted: return "weak_lower_shifted";
    case FamilyId::kWeakLowerUnshifted: return "weak_lower_unshifted";
    case FamilyId::kDistinctUpperShifted: return "distinct_upper_shifted";
    case FamilyId::kDistinctUpperUnshifted: return "distinct_upper_unshifted";
    case FamilyId::kDistinctLowerShifted: return "distinct_lower_shifted";
    case FamilyId::kDistinctLowerUnshifted: return "distinct_lower_unshifted";
  }
  return "?";
}

FamilyId family_from_name(const std::string& name) {
  for (FamilyId id : all_family_ids())
    if (name == family_name(id)) return id;
  throw std::invalid_argument("unknown family '" + name + "'");
}

const std::vector<FamilyId>& all_family_ids() {
  static const std::vector<FamilyId> ids = {
      FamilyId::kWeakUpperShifted,      FamilyId::kWeakUpperUnshifted,
      FamilyId::kWeakLowerShifted,      FamilyId::kWeakLowerUnshifted,
      FamilyId::kDistinctUpperShifted,  FamilyId::kDistinctUpperUnshifted,
      FamilyId::kDistinctLowerShifted,  FamilyId::kDistinctLowerUnshifted,
  };
  return ids;
}

namespace {

bool is_distinct_family(FamilyId id) {
  return id == FamilyId::kDistinctUpperShifted ||
         id == FamilyId::kDistinctUpperUnshifted ||
         id == FamilyId::kDistinctLowerShifted ||
         id == FamilyId::kDistinctLowerUnshifted;
}

bool is_lower_density_family(FamilyId id) {
  return id == FamilyId::kWeakLowerShifted ||
         id == FamilyId::kWeakLowerUnshifted ||
         id == FamilyId::kDistinctLowerShifted ||
         id == FamilyId::kDistinctLowerUnshifted;
}

void validate_params(FamilyId id, long ell, long m) {
  if (ell < 1 || m < 1)
    throw std::invalid_argument("family: ell and m must be >= 1");
  if (is_distinct_family(id) && ell <= m)
    throw std::invalid_argument("family: this construction needs ell > m");
}

// parity-split pair over the scaffold with the given base
SetSpec split_pair(const Rational& base, long ell, long m, bool coarse) {
  SetSpec a1 = SetSpec::family(IntervalFamily(base, FamilyKind::kLower));
  SetSpec a2 = SetSpec::family(IntervalFamily(base, FamilyKind::kUpper));
  std::vector<SetSpec> parts;
  if (!coarse) {
    // A1 on even positions, A2 on odd ones
    std::vector<SetSpec> left;
    left.push_back(std::move(a1));
    left.push_back(SetSpec::residue(2, {0}));
    std::vector<SetSpec> right;
    right.push_back(std::move(a2));
    right.push_back(SetSpec::residue(2, {1}));
    parts.push_back(SetSpec::intersection_of(std::move(left)));
    parts.push_back(SetSpec::intersection_of(std::move(right)));
  } else {
    // remove one class mod 2(ℓ+m) from each side
    std::int64_t d = 2 * (ell + m);
    parts.push_back(SetSpec::difference(std::move(a1), SetSpec::residue(d, {0})));
    parts.push_back(
        SetSpec::difference(std::move(a2), SetSpec::residue(d, {ell + m})));
  }
  return SetSpec::union_of(std::move(parts));
}

SetSpec with_offclass_filler(SetSpec core, long ell, long m) {
  std::vector<SetSpec> parts;
  parts.push_back(std::move(core));
  parts.push_back(SetSpec::complement(SetSpec::residue(ell + m, {0})));
  return SetSpec::union_of(std::move(parts));
}

}  // namespace

Rational family_base(FamilyId id, long ell, long m) {
  validate_params(id, ell, m);
  if (is_distinct_family(id)) return Rational(ell, m);
  return Rational(ell + m, ell);
}

SetSpec build_counterexample(FamilyId id, long ell, long m) {
  validate_params(id, ell, m);
  const Rational base = family_base(id, ell, m);
  switch (id) {
    case FamilyId::kWeakUpperShifted:
    case FamilyId::kDistinctUpperShifted:
      return SetSpec::family(IntervalFamily(base, FamilyKind::kLower));
    case FamilyId::kWeakUpperUnshifted:
    case FamilyId::kDistinctUpperUnshifted:
      return with_offclass_filler(
          SetSpec::family(IntervalFamily(base, FamilyKind::kLower)), ell, m);
    case FamilyId::kWeakLowerShifted:
    case FamilyId::kDistinctLowerShifted:
      return split_pair(base, ell, m, /*coarse=*/false);
    case FamilyId::kWeakLowerUnshifted:
    case FamilyId::kDistinctLowerUnshifted:
      return split_pair(base, ell, m, /*coarse=*/true);
  }
  throw std::logic_error("build_counterexample: unknown id");
}

Rational family_density_target(FamilyId id, long ell, long m) {
  validate_params(id, ell, m);
  const Rational one(1);
  switch (id) {
    case FamilyId::kWeakUpperShifted:
      return threshold(ThresholdId::kWeakShiftedUpper, ell, m);
    case FamilyId::kWeakUpperUnshifted:
      return threshold(ThresholdId::kWeakUnshiftedUpper, ell, m);
    case FamilyId::kDistinctUpperShifted:
      return threshold(ThresholdId::kDistinctShiftedUpper, ell, m);
    case FamilyId::kDistinctUpperUnshifted:
      return threshold(ThresholdId::kDistinctUnshiftedUpper, ell, m);
    case FamilyId::kWeakLowerShifted:
    case FamilyId::kDistinctLowerShifted:
      return Rational(1, 2);
    case FamilyId::kWeakLowerUnshifted:
    case FamilyId::kDistinctLowerUnshifted:
      return one - Rational(1, 2 * (ell + m));
  }
  throw std::logic_error("family_density_target: unknown id");
}

namespace {

// Gap-margin bookkeeping: in the scale [β^{2n}, β^{2n+2}) the interval of the
// set ends β^{2n+1}/(n+1)·β short of the next power, expressed here in the
// anchor scale as margin(n) = β^{2n}/(β·n). The scan is sound from the first
// scale n with margin(n) strictly above the drift bound, provided the margin
// stays above it for every later scale; the margin ratio β²·n/(n+1) is >= 1
// from n >= 1/(β²−1), so the search starts there.
long safe_scale_index(const Rational& base, const Rational& drift) {
  Rational bsq = base * base;
  BigInt mono = (Rational(1) / (bsq - Rational(1))).ceil();
  long n = std::max<long>(1, mono.fits_int64() ? static_cast<long>(mono.to_int64()) : 1);
  Rational margin = base.pow(2 * n) / (base * Rational(n));
  for (;; ++n) {
    if (margin > drift) return n;
    margin = margin * bsq * Rational(n, n + 1);
    if (n > 4096)
      throw std::overflow_error("blocking_scan: no safe scale below 2^4096");
  }
}

}  // namespace

BlockingReport blocking_scan(FamilyId id, long ell, long m, std::int64_t t_max,
                             std::int64_t b1_max, std::int64_t scan_lo,
                             std::int64_t scan_hi, int threads) {
  validate_params(id, ell, m);
  if (id != FamilyId::kWeakUpperShifted && id != FamilyId::kDistinctUpperShifted)
    throw std::invalid_argument(
        "blocking_scan: only the shifted upper-density families carry the gap "
        "argument");
  if (t_max < 0 || b1_max < 1 || scan_lo < 1 || scan_hi < scan_lo)
    throw std::invalid_argument("blocking_scan: bad scan parameters");

  const bool distinct = id == FamilyId::kDistinctUpperShifted;
  const Rational base = family_base(id, ell, m);

  // drift = how far the companion value can move past the interval end
  Rational drift = distinct
                       ? Rational(static_cast<std::int64_t>(ell) * ell -
                                      static_cast<std::int64_t>(m) * m,
                                  ell) *
                                 Rational(b1_max) +
                             Rational(t_max)
                       : Rational(m) * Rational(b1_max) + Rational(t_max);
  BlockingReport report;
  report.id = id;
  report.ell = ell;
  report.m = m;
  report.t_max = t_max;
  report.b1_max = b1_max;
  report.scan_lo = scan_lo;
  report.scan_hi = scan_hi;
  report.safe_index = safe_scale_index(base, drift);

  Rational anchor_floor = base.pow(2 * report.safe_index);
  BigInt lo_big = distinct ? ((anchor_floor - Rational(m)) / Rational(ell)).ceil()
                           : (anchor_floor / Rational(ell + m)).ceil();
  if (!lo_big.fits_int64())
    throw std::overflow_error("blocking_scan: safe bound exceeds int64");
  report.safe_lo = std::max<std::int64_t>(1, lo_big.to_int64());
  if (scan_lo < report.safe_lo)
    throw std::invalid_argument(
        "blocking_scan: scan_lo " + std::to_string(scan_lo) +
        " is below the safe bound " + std::to_string(report.safe_lo) +
        " (scale index " + std::to_string(report.safe_index) + ")");

  SetSpec set = build_counterexample(id, ell, m);
  std::int64_t horizon =
      distinct ? std::max(m * b1_max + ell * scan_hi, m * scan_hi + ell * b1_max) +
                     t_max
               : std::max((ell + m) * scan_hi, ell * scan_hi + m * b1_max) + t_max;
  Truncation a = truncate(set, horizon);

  struct Shard {
    std::int64_t hits = 0;
    std::uint64_t checks = 0;
    std::vector<BlockingViolation> violations;
  };
  int nthreads = std::max(1, threads);
  std::int64_t span = scan_hi - scan_lo + 1;
  nthreads = static_cast<int>(std::min<std::int64_t>(nthreads, span));
  std::vector<Shard> shards(static_cast<std::size_t>(nthreads));

  auto work = [&](int idx) {
    Shard& s = shards[static_cast<std::size_t>(idx)];
    std::int64_t begin = scan_lo + span * idx / nthreads;
    std::int64_t end = scan_lo + span * (idx + 1) / nthreads - 1;
    for (std::int64_t b = begin; b <= end; ++b) {
      for (std::int64_t t = 0; t <= t_max; ++t) {
        if (!distinct) {
          std::int64_t anchor = (ell + m) * b + t;
          ++s.checks;
          if (!a.member(anchor)) continue;
          ++s.hits;
          for (std::int64_t b1 = 1; b1 <= b1_max; ++b1) {
            std::int64_t v = m * b1 + ell * b + t;
            ++s.checks;
            if (a.member(v))
              s.violations.push_back(BlockingViolation{t, b1, b, anchor, v});
          }
        } else {
          for (std::int64_t b1 = 1; b1 <= b1_max; ++b1) {
            std::int64_t anchor = m * b1 + ell * b + t;
            std::int64_t companion = m * b + ell * b1 + t;
            ++s.checks;
            if (!a.member(anchor)) continue;
            ++s.hits;
            ++s.checks;
            if (a.member(companion))
              s.violations.push_back(
                  BlockingViolation{t, b1, b, anchor, companion});
          }
        }
      }
    }
  };

  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(work, i);
    for (auto& th : pool) th.join();
  }
  for (const Shard& s : shards) {
    report.anchor_hits += s.hits;
    report.checks += s.checks;
    report.violations.insert(report.violations.end(), s.violations.begin(),
                             s.violations.end());
  }
  return report;
}

Rational gap_density_check(long ell, long m, std::int64_t n) {
  if (ell < 1 || m < 1)
    throw std::invalid_argument("gap_density_check: ell, m must be >= 1");
  if (n < 1) throw std::invalid_argument("gap_density_check: N must be >= 1");
  const Rational base((ell + m), ell);
  std::vector<SetSpec> parts;
  parts.push_back(SetSpec::family(IntervalFamily(base, FamilyKind::kLower)));
  parts.push_back(SetSpec::family(IntervalFamily(base, FamilyKind::kUpper)));
  Truncation covered = truncate(SetSpec::union_of(std::move(parts)), n);
  return Rational(n - covered.count(), n);
}

OptimalityReport optimality_curve(const SetSpec& set, PatternSpec regime,
                                  const std::vector<std::int64_t>& schedule,
                                  const std::vector<std::int64_t>& shifts,
                                  const SearchConfig& config) {
  if (schedule.empty()) throw std::invalid_argument("optimality: empty schedule");
  if (shifts.empty()) throw std::invalid_argument("optimality: empty shift list");
  OptimalityReport report;
  for (std::int64_t n : schedule) {
    Truncation a = truncate(set, n);
    for (std::int64_t t : shifts) {
      PatternSpec spec = regime;
      spec.shift = t;
      SearchResult g = greedy_extend(a, spec, config);
      SearchResult mx = max_b_search(a, spec, config);
      report.rows.push_back(OptimalityRow{n, t, g.size(), mx.size(), mx.optimal,
                                          mx.nodes_expanded});
    }
  }
  return report;
}

OptimalityReport optimality_report(FamilyId id, long ell, long m,
                                   Relation relation,
                                   const std::vector<std::int64_t>& schedule,
                                   const std::vector<std::int64_t>& shifts,
                                   const SearchConfig& config) {
  validate_params(id, ell, m);
  const bool distinct = is_distinct_family(id);
  if (distinct && relation != Relation::kDistinct)
    throw std::invalid_argument(
        "optimality_report: this family pairs with the distinct regime");
  if (!distinct && relation != Relation::kWeak && relation != Relation::kAll)
    throw std::invalid_argument(
        "optimality_report: this family pairs with the weak or all regime");
  PatternSpec spec;
  spec.m = m;
  spec.ell = ell;
  spec.relation = relation;
  return optimality_curve(build_counterexample(id, ell, m), spec, schedule,
                          shifts, config);
}

void BlockingReport::write_text(std::ostream& out) const {
  out << "family: " << family_name(id) << " ell=" << ell << " m=" << m << "\n";
  out << "scan: b in [" << scan_lo << ", " << scan_hi << "], t <= " << t_max
      << ", b1 <= " << b1_max << "\n";
  out << "safe scale index: " << safe_index << " (b >= " << safe_lo << ")\n";
  out << "anchor hits: " << anchor_hits << ", membership checks: " << checks
      << "\n";
  out << "violations: " << violations.size() << "\n";
  for (const auto& v : violations) {
    out << "  t=" << v.t << " b1=" << v.b1 << " b=" << v.b
        << " anchor=" << v.anchor_value << " blocked=" << v.blocked_value
        << "\n";
  }
  out << "verdict: " << (pass() ? "PASS" : "FAIL") << "\n";
}

void BlockingReport::write_tsv(std::ostream& out) const {
  out << "t\tb1\tb\tanchor\tblocked\n";
  for (const auto& v : violations) {
    out << v.t << '\t' << v.b1 << '\t' << v.b << '\t' << v.anchor_value << '\t'
        << v.blocked_value << '\n';
  }
}

void OptimalityReport::write_tsv(std::ostream& out) const {
  out << "n\tshift\tgreedy_size\tmax_size\toptimal\tnodes\n";
  for (const auto& r : rows) {
    out << r.n << '\t' << r.shift << '\t' << r.greedy_size << '\t' << r.max_size
        << '\t' << (r.optimal ? 1 : 0) << '\t' << r.nodes << '\n';
  }
}

void OptimalityReport::write_text(std::ostream& out) const {
  std::int64_t greedy_span = 0, max_span = 0;
  for (const auto& r : rows) {
    greedy_span = std::max(greedy_span, r.greedy_size - rows.front().greedy_size);
    max_span = std::max(max_span, r.max_size - rows.front().max_size);
  }
  out << "rows: " << rows.size() << "\n";
  out << "greedy sizes:";
  for (const auto& r : rows) out << ' ' << r.greedy_size;
  out << "\nmax sizes:";
  for (const auto& r : rows) out << ' ' << r.max_size;
  out << "\n";
  out << "greedy growth over the schedule: " << greedy_span << "\n";
  out << "max growth over the schedule: " << max_span << "\n";
}

}  // namespace sumsetlab

#include "sumsetlab/symbolic.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "sumsetlab/truncation.hpp"

namespace sumsetlab {

std::uint8_t SymbolicPoint::at(std::int64_t coord) const {
  if (coord < 0 || coord > horizon)
    throw std::out_of_range("SymbolicPoint: coordinate beyond horizon");
  return word[static_cast<std::size_t>(coord)];
}

SymbolicPoint indicator_point(const SetSpec& a, std::int64_t horizon) {
  if (horizon < 1)
    throw std::invalid_argument("indicator_point: horizon must be >= 1");
  Truncation t = truncate(a, horizon);
  SymbolicPoint p;
  p.rule = PointRule::kIndicator;
  p.horizon = horizon;
  p.word.assign(static_cast<std::size_t>(horizon) + 1, 0);
  for (std::int64_t n = 1; n <= horizon; ++n)
    p.word[static_cast<std::size_t>(n)] = t.member(n) ? 1 : 0;
  return p;
}

SymbolicPoint build_quotient_stride(const SymbolicPoint& indicator, long ell,
                                    long m, std::int64_t horizon) {
  if (ell < 1 || m < 1)
    throw std::invalid_argument("quotient stride: ell, m must be >= 1");
  if (horizon < 1)
    throw std::invalid_argument("quotient stride: horizon must be >= 1");
  std::int64_t i_max = horizon / ell;
  std::int64_t max_read = static_cast<std::int64_t>(ell + m) * i_max;
  if (indicator.horizon < max_read)
    throw std::invalid_argument(
        "quotient stride: source horizon " + std::to_string(indicator.horizon) +
        " < required " + std::to_string(max_read));
  SymbolicPoint p;
  p.rule = PointRule::kQuotientStride;
  p.ell = ell;
  p.m = m;
  p.horizon = horizon;
  p.word.assign(static_cast<std::size_t>(horizon) + 1, 1);
  for (std::int64_t i = 1; i <= i_max; ++i)
    p.word[static_cast<std::size_t>(ell * i)] =
        indicator.word[static_cast<std::size_t>((ell + m) * i)];
  return p;
}

SymbolicPoint build_padded_blocks(const SymbolicPoint& indicator, long ell,
                                  long m, std::int64_t horizon) {
  if (ell < 1 || m < 1)
    throw std::invalid_argument("padded blocks: ell, m must be >= 1");
  if (horizon < 1)
    throw std::invalid_argument("padded blocks: horizon must be >= 1");
  const long q = (m + ell - 1) / ell;  // ceil(m/ℓ)
  const std::int64_t target_block = static_cast<std::int64_t>(ell) * (q + 1);
  const std::int64_t source_block = ell + m;  // ℓ(k+1), always an integer
  std::int64_t i_max = horizon / target_block;
  std::int64_t max_read = 0;
  if (i_max >= 1) {
    std::int64_t j_top =
        std::min<std::int64_t>(source_block - 1, horizon - target_block * i_max);
    if (j_top < 0)
      max_read = source_block * (i_max - 1) + source_block - 1;
    else
      max_read = source_block * i_max + j_top;
  }
  if (indicator.horizon < max_read)
    throw std::invalid_argument(
        "padded blocks: source horizon " + std::to_string(indicator.horizon) +
        " < required " + std::to_string(max_read));
  SymbolicPoint p;
  p.rule = PointRule::kPaddedBlocks;
  p.ell = ell;
  p.m = m;
  p.horizon = horizon;
  p.word.assign(static_cast<std::size_t>(horizon) + 1, 1);
  for (std::int64_t i = 1; i <= i_max; ++i) {
    for (std::int64_t j = 0; j < source_block; ++j) {
      std::int64_t coord = target_block * i + j;
      if (coord > horizon) break;
      p.word[static_cast<std::size_t>(coord)] =
          indicator.word[static_cast<std::size_t>(source_block * i + j)];
    }
  }
  return p;
}

CylinderEvent CylinderEvent::second_hits() {
  CylinderEvent e;
  e.atoms.push_back(Atom{1, 0, 1});
  return e;
}

CylinderEvent CylinderEvent::first_hits(std::int64_t j) {
  if (j < 0) throw std::invalid_argument("cylinder event: offset must be >= 0");
  CylinderEvent e;
  e.atoms.push_back(Atom{0, j, 1});
  return e;
}

EmpiricalMeasure orbit_frequency(const SymbolicPoint& x, const SymbolicPoint& y,
                                 long p, long q, const CylinderEvent& event,
                                 std::int64_t n_samples) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("orbit_frequency: powers must be >= 1");
  if (n_samples < 1)
    throw std::invalid_argument("orbit_frequency: need at least one sample");
  if (event.atoms.empty())
    throw std::invalid_argument("orbit_frequency: empty event");
  for (const auto& atom : event.atoms) {
    if (atom.component != 0 && atom.component != 1)
      throw std::invalid_argument("orbit_frequency: bad event component");
    const SymbolicPoint& pt = atom.component == 0 ? x : y;
    long power = atom.component == 0 ? p : q;
    if (power * n_samples + atom.offset > pt.horizon)
      throw std::invalid_argument("orbit_frequency: horizon overflow");
  }
  EmpiricalMeasure mu;
  mu.p = p;
  mu.q = q;
  mu.samples = n_samples;
  for (std::int64_t n = 1; n <= n_samples; ++n) {
    bool hit = true;
    for (const auto& atom : event.atoms) {
      const SymbolicPoint& pt = atom.component == 0 ? x : y;
      long power = atom.component == 0 ? p : q;
      if (pt.word[static_cast<std::size_t>(power * n + atom.offset)] != atom.bit) {
        hit = false;
        break;
      }
    }
    if (hit) ++mu.hits;
  }
  mu.frequency = Rational(mu.hits, mu.samples);
  return mu;
}

IdentityReport verify_identity_sets(const SetSpec& a, long ell, long m,
                                    std::int64_t horizon) {
  if (ell < 1 || m < 1)
    throw std::invalid_argument("verify_identity_sets: ell, m must be >= 1");
  if (horizon < ell + m)
    throw std::invalid_argument("verify_identity_sets: horizon too small");
  IdentityReport report;
  report.ell = ell;
  report.m = m;
  report.q = (m + ell - 1) / ell;
  report.horizon = horizon;

  SymbolicPoint ind = indicator_point(a, horizon);
  Truncation trunc = truncate(a, horizon);

  // quotient-stride identity: {n : word[ℓn] = 1} = {n : (ℓ+m)n ∈ A}
  std::int64_t n_max = horizon / (ell + m);
  SymbolicPoint stride = build_quotient_stride(ind, ell, m, ell * n_max);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    bool lhs = stride.word[static_cast<std::size_t>(ell * n)] == 1;
    bool rhs = trunc.member((ell + m) * n);
    ++report.checked;
    if (lhs != rhs) report.mismatches.push_back(IdentityMismatch{-1, n});
  }

  // padded-block identity per shift class j:
  //   {n : word[ℓ(q+1)n + j] = 1} = {n : (ℓ+m)n + j ∈ A}
  const long q = report.q;
  std::int64_t i_max = (horizon - (ell + m - 1)) / (ell + m);
  std::int64_t block_horizon = static_cast<std::int64_t>(ell) * (q + 1) * i_max +
                               (ell + m - 1);
  SymbolicPoint blocks = build_padded_blocks(ind, ell, m, block_horizon);
  for (long j = 0; j < ell + m; ++j) {
    for (std::int64_t n = 1; n <= i_max; ++n) {
      bool lhs =
          blocks.word[static_cast<std::size_t>(static_cast<std::int64_t>(ell) *
                                                   (q + 1) * n +
                                               j)] == 1;
      bool rhs = trunc.member((ell + m) * n + j);
      ++report.checked;
      if (lhs != rhs) report.mismatches.push_back(IdentityMismatch{j, n});
    }
  }
  return report;
}

Rational InequalityReport::min_margin(const InequalityRow& r) const {
  Rational m1 = r.lhs_noshift - r.rhs_noshift_upper;
  Rational m2 = r.lhs_noshift - r.rhs_noshift_lower;
  Rational m3 = r.lhs_shift - r.rhs_shift_upper;
  Rational m4 = r.lhs_shift - r.rhs_shift_lower;
  Rational out = m1;
  for (const Rational& x : {m2, m3, m4})
    if (x < out) out = x;
  return out;
}

bool InequalityReport::pass() const {
  if (rows.empty()) return false;
  return min_margin(rows[certified_row]) + epsilon >= Rational(0);
}

InequalityReport inequality_report(const SetSpec& a, long ell, long m,
                                   const WindowSequence& windows,
                                   const Rational& epsilon) {
  if (ell < 1 || m < 1)
    throw std::invalid_argument("inequality_report: ell, m must be >= 1");
  if (!(epsilon > Rational(0)))
    throw std::invalid_argument("inequality_report: epsilon must be positive");
  if (windows.endpoints.empty())
    throw std::invalid_argument("inequality_report: empty window sequence");

  InequalityReport report;
  report.ell = ell;
  report.m = m;
  report.q = (m + ell - 1) / ell;
  report.epsilon = epsilon;
  const long q = report.q;
  const Rational k(m, ell);
  const Rational one(1);

  const std::int64_t n_top = windows.endpoints.back();
  Truncation trunc = truncate(a, n_top);
  DensityReport density = density_curve(trunc, windows);
  report.upper_estimate = density.upper_estimate;
  const Rational upper = report.upper_estimate;

  // points at the largest horizons needed
  std::int64_t np_top = n_top * ell / (ell + m);
  if (np_top < 1)
    throw std::invalid_argument("inequality_report: windows too small");
  SymbolicPoint ind = indicator_point(a, n_top + 2 * (ell + m));
  SymbolicPoint stride = build_quotient_stride(ind, ell, m, np_top);
  SymbolicPoint blocks = build_padded_blocks(
      ind, ell, m, static_cast<std::int64_t>(q + 1) * np_top + q);

  for (std::int64_t n_i : windows.endpoints) {
    std::int64_t np = n_i * ell / (ell + m);
    if (np < 1) continue;
    InequalityRow row;
    row.window = n_i;
    row.samples = np;
    row.mu_second = Rational(trunc.count_prefix(np), np);
    EmpiricalMeasure first =
        orbit_frequency(stride, ind, 1, 1, CylinderEvent::first_hits(0), np);
    row.mu_first_stride = first.frequency;
    row.lhs_noshift = Rational(ell + m) * row.mu_second +
                      Rational(ell) * row.mu_first_stride;
    Rational block_sum(0);
    for (long j = 0; j <= q; ++j) {
      EmpiricalMeasure mu_j = orbit_frequency(blocks, ind, q + 1, 1,
                                              CylinderEvent::first_hits(j), np);
      row.mu_first_blocks.push_back(mu_j.frequency);
      block_sum += mu_j.frequency;
    }
    row.lhs_shift = Rational(ell + m) * row.mu_second + Rational(ell) * block_sum;
    report.rows.push_back(std::move(row));
  }
  if (report.rows.empty())
    throw std::invalid_argument("inequality_report: no usable windows");

  // The liminf surrogate must lower-bound the sampled prefix ratios or the
  // lower-density variants become unverifiable at finite scale (window
  // sequences tuned to the limsup sample density peaks). Take the smallest
  // orbit-sample reading over the tail half of the windows.
  std::size_t tail_begin = report.rows.size() - (report.rows.size() + 1) / 2;
  Rational lower = report.rows[tail_begin].mu_second;
  for (std::size_t i = tail_begin; i < report.rows.size(); ++i)
    if (report.rows[i].mu_second < lower) lower = report.rows[i].mu_second;
  report.lower_estimate = lower;

  const Rational surge = (k + one) * upper - k;  // (k+1)·d̄ − k
  const Rational shift_tail =
      Rational(ell) * (k + one) * upper + Rational(ell) * (Rational(q) - k);
  for (InequalityRow& row : report.rows) {
    row.rhs_noshift_upper = Rational(2 * ell + m) * surge;
    row.rhs_noshift_lower = Rational(ell + m) * lower + Rational(ell) * surge;
    row.rhs_shift_upper = Rational(ell + m) * surge + shift_tail;
    row.rhs_shift_lower = Rational(ell + m) * lower + shift_tail;
  }
  report.certified_row = report.rows.size() - 1;
  report.best_row = 0;
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    if (report.min_margin(report.rows[i]) >
        report.min_margin(report.rows[report.best_row]))
      report.best_row = i;
  }
  return report;
}

void InequalityReport::write_tsv(std::ostream& out) const {
  out << "window\tsamples\tmu_second\tmu_first_stride\tlhs_noshift\t"
         "rhs_noshift_upper\trhs_noshift_lower\tlhs_shift\trhs_shift_upper\t"
         "rhs_shift_lower\tmin_margin\n";
  for (const auto& r : rows) {
    out << r.window << '\t' << r.samples << '\t' << r.mu_second.to_string()
        << '\t' << r.mu_first_stride.to_string() << '\t'
        << r.lhs_noshift.to_string() << '\t' << r.rhs_noshift_upper.to_string()
        << '\t' << r.rhs_noshift_lower.to_string() << '\t'
        << r.lhs_shift.to_string() << '\t' << r.rhs_shift_upper.to_string()
        << '\t' << r.rhs_shift_lower.to_string() << '\t'
        << min_margin(r).to_decimal_string(12) << '\n';
  }
}

void InequalityReport::write_text(std::ostream& out) const {
  out << "ell=" << ell << " m=" << m << " q=" << q << "\n";
  out << "upper density estimate: " << upper_estimate.to_string() << "\n";
  out << "lower density estimate: " << lower_estimate.to_string() << "\n";
  out << "epsilon: " << epsilon.to_string() << "\n";
  if (!rows.empty()) {
    const auto& c = rows[certified_row];
    out << "certified window " << c.window
        << ": min margin = " << min_margin(c).to_decimal_string(12) << "\n";
    const auto& b = rows[best_row];
    out << "best window " << b.window
        << ": min margin = " << min_margin(b).to_decimal_string(12) << "\n";
  }
  out << "verdict: " << (pass() ? "PASS" : "FAIL") << "\n";
}

}  // namespace sumsetlab

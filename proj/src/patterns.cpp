#include "sumsetlab/patterns.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sumsetlab/errors.hpp"

namespace sumsetlab {

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::kStrict: return "strict";
    case Relation::kWeak: return "weak";
    case Relation::kDistinct: return "distinct";
    case Relation::kAll: return "all";
  }
  return "?";
}

Relation relation_from_name(const std::string& name) {
  if (name == "strict") return Relation::kStrict;
  if (name == "weak") return Relation::kWeak;
  if (name == "distinct") return Relation::kDistinct;
  if (name == "all") return Relation::kAll;
  throw std::invalid_argument("unknown relation '" + name + "'");
}

void PatternSpec::validate() const {
  if (m < 1 || ell < 1)
    throw std::invalid_argument("PatternSpec: m and ell must be >= 1");
  if (shift < 0) throw std::invalid_argument("PatternSpec: shift must be >= 0");
}

std::int64_t PatternSpec::max_value(std::int64_t b_max,
                                    std::int64_t b_second) const {
  if (b_max <= 0) return 0;
  std::int64_t v = 0;
  switch (relation) {
    case Relation::kStrict:
      if (b_second > 0) v = m * b_second + ell * b_max;
      break;
    case Relation::kDistinct:
      if (b_second > 0)
        v = std::max(m * b_second + ell * b_max, m * b_max + ell * b_second);
      break;
    case Relation::kWeak:
    case Relation::kAll:
      v = (m + ell) * b_max;
      break;
  }
  if (dilate) v = std::max(v, ell * b_max);
  return v == 0 ? 0 : v + shift;
}

ShiftDecomposition normalize_shift(std::int64_t t, long ell, long m) {
  if (t < 0) throw std::invalid_argument("normalize_shift: t must be >= 0");
  if (ell < 1 || m < 1)
    throw std::invalid_argument("normalize_shift: ell, m must be >= 1");
  std::int64_t d = ell + m;
  return ShiftDecomposition{t / d, t % d};
}

namespace {

void require_sorted_distinct(const std::vector<std::int64_t>& b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 1 || (i > 0 && b[i] <= b[i - 1]))
      throw std::invalid_argument("witness must be sorted, distinct and >= 1");
  }
}

// enumerate the ordered pairs of the regime, calling f(b1, b2)
template <typename F>
void for_each_pair(const std::vector<std::int64_t>& b, Relation rel, F&& f) {
  const std::size_t n = b.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      f(b[i], b[j]);
      if (rel == Relation::kDistinct || rel == Relation::kAll) f(b[j], b[i]);
    }
    if (rel == Relation::kWeak || rel == Relation::kAll) f(b[i], b[i]);
  }
}

}  // namespace

std::vector<std::int64_t> pattern_values(const std::vector<std::int64_t>& b,
                                         const PatternSpec& spec) {
  spec.validate();
  require_sorted_distinct(b);
  if (b.empty()) return {};
  std::int64_t maxv = spec.max_value(b.back(), b.size() > 1 ? b[b.size() - 2] : 0);
  if (maxv == 0 && !spec.dilate && b.size() == 1 &&
      (spec.relation == Relation::kStrict || spec.relation == Relation::kDistinct))
    return {};
  // dedupe through a bitmap over [1, maxv]
  std::vector<std::uint64_t> seen((static_cast<std::uint64_t>(maxv) + 64) / 64, 0);
  auto mark = [&](std::int64_t b1, std::int64_t b2) {
    std::uint64_t v = static_cast<std::uint64_t>(spec.m * b1 + spec.ell * b2 +
                                                 spec.shift) - 1;
    seen[v >> 6] |= std::uint64_t(1) << (v & 63);
  };
  for_each_pair(b, spec.relation, mark);
  if (spec.dilate) {
    for (std::int64_t x : b) {
      std::uint64_t v = static_cast<std::uint64_t>(spec.ell * x + spec.shift) - 1;
      seen[v >> 6] |= std::uint64_t(1) << (v & 63);
    }
  }
  std::vector<std::int64_t> out;
  for (std::size_t w = 0; w < seen.size(); ++w) {
    std::uint64_t word = seen[w];
    while (word) {
      unsigned bit = std::countr_zero(word);
      out.push_back(static_cast<std::int64_t>(w * 64 + bit + 1));
      word &= word - 1;
    }
  }
  return out;
}

InclusionResult check_inclusion(const std::vector<std::int64_t>& b,
                                const PatternSpec& spec, const Truncation& a) {
  spec.validate();
  require_sorted_distinct(b);
  InclusionResult res;
  if (b.empty()) return res;
  std::int64_t maxv = spec.max_value(b.back(), b.size() > 1 ? b[b.size() - 2] : 0);
  if (maxv > a.n())
    throw RangeError("pattern value " + std::to_string(maxv) +
                     " exceeds the materialized range N=" + std::to_string(a.n()));
  std::optional<InclusionViolation> worst;
  auto probe = [&](std::int64_t v, std::int64_t b1, std::int64_t b2) {
    if (!a.member(v) && (!worst || v < worst->value))
      worst = InclusionViolation{v, b1, b2};
  };
  for_each_pair(b, spec.relation, [&](std::int64_t b1, std::int64_t b2) {
    probe(spec.m * b1 + spec.ell * b2 + spec.shift, b1, b2);
  });
  if (spec.dilate)
    for (std::int64_t x : b) probe(spec.ell * x + spec.shift, x, 0);
  if (worst) {
    res.ok = false;
    res.violation = worst;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Candidate machinery shared by the searches.
//
// Candidates live in a bitmask indexed like Truncation bits (value v at bit
// v−1). Filtering after choosing c ANDs away every live v > c that would
// break a pair constraint with c; when the constraint reads consecutive host
// bits (coefficient 1 on the free variable) the mask is a word-level shifted
// copy of the host bit array.
// ---------------------------------------------------------------------------

namespace {

class CandidateSet {
public:
  CandidateSet(const Truncation& a, const PatternSpec& spec, std::int64_t bound)
      : a_(a), spec_(spec), bound_(bound),
        words_((static_cast<std::uint64_t>(std::max<std::int64_t>(bound, 0)) + 64) / 64, 0) {
    // unary constraints: diagonal for weak/all, dilate when requested
    bool need_diag =
        spec.relation == Relation::kWeak || spec.relation == Relation::kAll;
    for (std::int64_t v = 1; v <= bound_; ++v) {
      if (need_diag && !a_.member((spec_.m + spec_.ell) * v + spec_.shift))
        continue;
      if (spec_.dilate && !a_.member(spec_.ell * v + spec_.shift)) continue;
      set_bit(v);
    }
    need_reverse_ = spec.relation == Relation::kDistinct ||
                    spec.relation == Relation::kAll;
  }

  std::int64_t bound() const { return bound_; }

  // smallest live value > v, or -1
  std::int64_t next_live(std::int64_t v) const {
    if (v >= bound_) return -1;
    std::uint64_t bit = static_cast<std::uint64_t>(v);  // index of value v+1
    std::size_t w = bit >> 6;
    if (w >= words_.size()) return -1;
    std::uint64_t word = words_[w] & (~std::uint64_t(0) << (bit & 63));
    for (;;) {
      if (word) {
        std::int64_t value =
            static_cast<std::int64_t>((w << 6) + std::countr_zero(word) + 1);
        return value <= bound_ ? value : -1;
      }
      if (++w >= words_.size()) return -1;
      word = words_[w];
    }
  }

  // largest live value <= v, or -1
  std::int64_t prev_live(std::int64_t v) const {
    if (v < 1) return -1;
    v = std::min(v, bound_);
    std::uint64_t bit = static_cast<std::uint64_t>(v - 1);
    std::size_t w = bit >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t(0) >> (63 - (bit & 63)));
    for (;;) {
      if (word) {
        unsigned top = 63 - std::countl_zero(word);
        return static_cast<std::int64_t>((w << 6) + top + 1);
      }
      if (w == 0) return -1;
      word = words_[--w];
    }
  }

  std::int64_t live_count_above(std::int64_t v) const {
    std::uint64_t bit = static_cast<std::uint64_t>(v);  // count bits >= this index
    std::size_t w = bit >> 6;
    if (w >= words_.size()) return 0;
    std::int64_t c = std::popcount(words_[w] & (~std::uint64_t(0) << (bit & 63)));
    for (std::size_t i = w + 1; i < words_.size(); ++i)
      c += std::popcount(words_[i]);
    return c;
  }

  // Remove every live u > c incompatible with choosing c; undo entries go to
  // the internal log. Returns the undo mark to roll back to.
  std::size_t filter_for(std::int64_t c) {
    std::size_t mark = undo_.size();
    if (spec_.ell == 1) {
      and_shifted(spec_.m * c + spec_.shift, c);
    } else {
      clear_incompatible_forward(c);
    }
    if (need_reverse_) {
      if (spec_.m == 1) {
        and_shifted(spec_.ell * c + spec_.shift, c);
      } else {
        clear_incompatible_reverse(c);
      }
    }
    return mark;
  }

  void rollback(std::size_t mark) {
    while (undo_.size() > mark) {
      words_[undo_.back().first] = undo_.back().second;
      undo_.pop_back();
    }
  }

  bool pair_ok(std::int64_t c, std::int64_t u) const {
    if (!a_.member(spec_.m * c + spec_.ell * u + spec_.shift)) return false;
    if (need_reverse_ &&
        !a_.member(spec_.m * u + spec_.ell * c + spec_.shift))
      return false;
    return true;
  }

private:
  const Truncation& a_;
  const PatternSpec& spec_;
  std::int64_t bound_;
  std::vector<std::uint64_t> words_;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> undo_;
  bool need_reverse_ = false;

  void set_bit(std::int64_t v) {
    std::uint64_t i = static_cast<std::uint64_t>(v - 1);
    words_[i >> 6] |= std::uint64_t(1) << (i & 63);
  }

  void change_word(std::size_t w, std::uint64_t neww) {
    undo_.emplace_back(static_cast<std::uint32_t>(w), words_[w]);
    words_[w] = neww;
  }

  // alive bit i &= host bit (i + s), applied to bits >= c (values > c)
  void and_shifted(std::int64_t s, std::int64_t c) {
    const auto& host = a_.words();
    const std::size_t q = static_cast<std::uint64_t>(s) >> 6;
    const unsigned r = static_cast<unsigned>(s & 63);
    for (std::size_t w = static_cast<std::uint64_t>(c) >> 6; w < words_.size(); ++w) {
      std::uint64_t lo = w + q < host.size() ? host[w + q] : 0;
      std::uint64_t hi = w + q + 1 < host.size() ? host[w + q + 1] : 0;
      std::uint64_t mask = r ? (lo >> r) | (hi << (64 - r)) : lo;
      std::uint64_t neww = words_[w] & mask;
      if (neww != words_[w]) change_word(w, neww);
    }
  }

  void clear_incompatible_forward(std::int64_t c) {
    for (std::int64_t u = next_live(c); u >= 0; u = next_live(u)) {
      if (!a_.member(spec_.m * c + spec_.ell * u + spec_.shift)) clear_bit(u);
    }
  }

  void clear_incompatible_reverse(std::int64_t c) {
    for (std::int64_t u = next_live(c); u >= 0; u = next_live(u)) {
      if (!a_.member(spec_.m * u + spec_.ell * c + spec_.shift)) clear_bit(u);
    }
  }

  void clear_bit(std::int64_t v) {
    std::uint64_t i = static_cast<std::uint64_t>(v - 1);
    change_word(i >> 6, words_[i >> 6] & ~(std::uint64_t(1) << (i & 63)));
  }
};

std::int64_t default_bound(const Truncation& a, const PatternSpec& spec) {
  if (spec.shift >= a.n()) return 0;
  return (a.n() - spec.shift) / (spec.m + spec.ell);
}

std::int64_t resolve_bound(const Truncation& a, const PatternSpec& spec,
                           const SearchConfig& config) {
  std::int64_t bound = config.candidate_bound.value_or(default_bound(a, spec));
  if (bound < 0) throw std::invalid_argument("candidate_bound must be >= 0");
  if (bound > 0 && bound * (spec.m + spec.ell) + spec.shift > a.n())
    throw std::invalid_argument(
        "candidate_bound too large: pattern values would leave [1, N]");
  return bound;
}

// Iterative depth-first search; witness chains can run tens of thousands of
// elements deep, far past the recursion stack.
struct Dfs {
  Dfs(CandidateSet& c, const SearchConfig& config)
      : cands(c),
        node_budget(config.node_budget),
        time_budget_seconds(config.time_budget_seconds) {}

  CandidateSet& cands;
  std::uint64_t node_budget;
  std::optional<double> time_budget_seconds;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  std::vector<std::int64_t> path;
  std::vector<std::int64_t> best;
  std::chrono::steady_clock::time_point started =
      std::chrono::steady_clock::now();

  bool out_of_budget() {
    if (nodes > node_budget) return true;
    if (time_budget_seconds && (nodes & 0xfff) == 1) {
      std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - started;
      if (elapsed.count() >= *time_budget_seconds) return true;
    }
    return false;
  }

  void run() {
    struct Frame {
      std::int64_t v;          // candidate included at this level
      std::int64_t remaining;  // live candidates not yet tried here
      std::size_t mark;        // undo mark taken before including v
    };
    std::vector<Frame> stack;

    std::int64_t v = cands.next_live(0);
    if (v < 0) return;  // empty candidate set, best stays empty
    std::int64_t remaining = cands.live_count_above(0);

    for (;;) {
      bool descended = false;
      while (v >= 0) {
        std::int64_t depth = static_cast<std::int64_t>(path.size());
        if (depth + remaining <= static_cast<std::int64_t>(best.size())) break;
        ++nodes;
        if (out_of_budget()) {
          budget_hit = true;
          return;
        }
        std::size_t mark = cands.filter_for(v);
        path.push_back(v);
        std::int64_t child = cands.next_live(v);
        if (child < 0) {
          // leaf: no candidate extends this witness
          if (path.size() > best.size()) best = path;
          path.pop_back();
          cands.rollback(mark);
          --remaining;
          v = cands.next_live(v);
          continue;
        }
        stack.push_back(Frame{v, remaining, mark});
        remaining = cands.live_count_above(v);
        v = child;
        descended = true;
        break;
      }
      if (descended) continue;
      if (stack.empty()) return;
      Frame f = stack.back();
      stack.pop_back();
      path.pop_back();
      cands.rollback(f.mark);
      remaining = f.remaining - 1;
      v = cands.next_live(f.v);
    }
  }
};

}  // namespace

SearchResult greedy_extend(const Truncation& a, const PatternSpec& spec,
                           const SearchConfig& config) {
  spec.validate();
  std::int64_t bound = resolve_bound(a, spec, config);
  SearchResult res;
  res.candidate_bound = bound;
  if (bound == 0 || a.count() == 0) {
    res.optimal = false;
    return res;
  }
  CandidateSet cands(a, spec, bound);
  std::int64_t last = 0;
  for (;;) {
    std::int64_t c = config.order == CandidateOrder::kSmallestFirst
                         ? cands.next_live(last)
                         : [&] {
                             std::int64_t top = cands.prev_live(bound);
                             return top > last ? top : -1;
                           }();
    if (c < 0) break;
    res.b.push_back(c);
    ++res.nodes_expanded;
    cands.filter_for(c);
    last = c;
  }
  res.optimal = false;
  if (res.size() <= 20000) attach_certificate(res, spec);
  return res;
}

SearchResult max_b_search(const Truncation& a, const PatternSpec& spec,
                          const SearchConfig& config) {
  spec.validate();
  std::int64_t bound = resolve_bound(a, spec, config);
  SearchResult res;
  res.candidate_bound = bound;
  // an empty host admits no witness in any regime (a bare singleton with no
  // pattern values does not certify anything)
  if (bound == 0 || a.count() == 0) {
    res.optimal = true;
    return res;
  }
  CandidateSet cands(a, spec, bound);
  Dfs dfs(cands, config);
  dfs.run();
  res.b = std::move(dfs.best);
  res.nodes_expanded = dfs.nodes;
  res.optimal = !dfs.budget_hit;
  if (res.size() <= 20000) attach_certificate(res, spec);
  return res;
}

SearchResult brute_force_max_b(const Truncation& a, const PatternSpec& spec,
                               std::int64_t candidate_bound) {
  spec.validate();
  if (candidate_bound > 22)
    throw std::invalid_argument(
        "brute_force_max_b: refusing candidate_bound > 22");
  SearchConfig config;
  config.candidate_bound = std::max<std::int64_t>(candidate_bound, 0);
  std::int64_t bound = resolve_bound(a, spec, config);
  SearchResult res;
  res.candidate_bound = bound;
  if (bound == 0 || a.count() == 0) {
    res.optimal = true;
    return res;
  }
  CandidateSet cands(a, spec, bound);
  std::vector<std::int64_t> elig;
  for (std::int64_t v = cands.next_live(0); v >= 0; v = cands.next_live(v))
    elig.push_back(v);
  const unsigned n = static_cast<unsigned>(elig.size());
  std::vector<std::uint32_t> compat(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) {
      if (cands.pair_ok(elig[i], elig[j]))
        compat[i] |= 1u << j;
    }
  }
  std::uint32_t best_mask = 0;
  int best_size = 0;
  const std::uint32_t total = n >= 32 ? 0 : (1u << n);
  for (std::uint32_t mask = 1; mask != total; ++mask) {
    int sz = std::popcount(mask);
    if (sz < best_size) continue;
    bool ok = true;
    for (std::uint32_t rest = mask; rest;) {
      unsigned i = std::countr_zero(rest);
      rest &= rest - 1;
      // every later chosen element must be pairwise-compatible with i
      if (rest & ~compat[i]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (sz > best_size) {
      best_size = sz;
      best_mask = mask;
    } else if (sz == best_size && best_size > 0) {
      std::uint32_t diff = mask ^ best_mask;
      if (diff && (mask >> std::countr_zero(diff)) & 1) best_mask = mask;
    }
    res.nodes_expanded++;
  }
  for (std::uint32_t rest = best_mask; rest;) {
    unsigned i = std::countr_zero(rest);
    rest &= rest - 1;
    res.b.push_back(elig[i]);
  }
  res.optimal = true;
  attach_certificate(res, spec);
  return res;
}

void attach_certificate(SearchResult& r, const PatternSpec& spec) {
  r.values = pattern_values(r.b, spec);
}

ShiftTable best_shift(const Truncation& a, PatternSpec spec,
                      std::vector<std::int64_t> t_range,
                      const SearchConfig& config, bool use_greedy) {
  spec.validate();
  if (t_range.empty()) {
    for (std::int64_t t = 0; t < spec.m + spec.ell; ++t) t_range.push_back(t);
  }
  ShiftTable table;
  std::int64_t best_size = -1;
  for (std::int64_t t : t_range) {
    if (t < 0) throw std::invalid_argument("best_shift: shifts must be >= 0");
    PatternSpec s = spec;
    s.shift = t;
    SearchResult r = use_greedy ? greedy_extend(a, s, config)
                                : max_b_search(a, s, config);
    if (r.size() > best_size) {
      best_size = r.size();
      table.best_shift = t;
    }
    table.rows.push_back(ShiftTableRow{t, std::move(r)});
  }
  return table;
}

bool shift_equivalence_check(const std::vector<std::int64_t>& b,
                             const PatternSpec& spec, const Truncation& a) {
  spec.validate();
  ShiftDecomposition d = normalize_shift(spec.shift, spec.ell, spec.m);
  InclusionResult lhs = check_inclusion(b, spec, a);
  PatternSpec reduced = spec;
  reduced.shift = d.i;
  std::vector<std::int64_t> shifted = b;
  for (auto& x : shifted) x += d.j;
  InclusionResult rhs = check_inclusion(shifted, reduced, a);
  if (lhs.ok != rhs.ok) return false;
  if (!lhs.ok && lhs.violation->value != rhs.violation->value) return false;
  return true;
}

std::vector<std::int64_t> mod_refine(const std::vector<std::int64_t>& b,
                                     std::int64_t d) {
  if (d < 1) throw std::invalid_argument("mod_refine: d must be >= 1");
  require_sorted_distinct(b);
  std::map<std::int64_t, std::vector<std::int64_t>> classes;
  for (std::int64_t x : b) classes[x % d].push_back(x);
  // map order gives the smallest residue on ties
  std::vector<std::int64_t> best;
  for (auto& [r, xs] : classes) {
    if (xs.size() > best.size()) best = xs;
  }
  return best;
}

SearchResult unshifted_reduction(const SetSpec& a, const PatternSpec& spec,
                                 std::int64_t n, const SearchConfig& config) {
  spec.validate();
  if (spec.shift != 0)
    throw std::invalid_argument("unshifted_reduction: spec must have t = 0");
  std::vector<SetSpec> parts;
  parts.push_back(a);
  parts.push_back(SetSpec::residue(spec.m + spec.ell, {0}));
  SetSpec restricted = SetSpec::intersection_of(std::move(parts));
  Truncation trunc = truncate(restricted, n);
  return max_b_search(trunc, spec, config);
}

// ---------------------------------------------------------------------------
// Certificates.
// ---------------------------------------------------------------------------

namespace {

std::vector<std::int64_t> parse_int_line(const std::string& text) {
  std::vector<std::int64_t> out;
  std::istringstream ss(text);
  std::int64_t v;
  while (ss >> v) out.push_back(v);
  return out;
}

}  // namespace

void write_certificate(const Certificate& c, std::ostream& out) {
  out << "SUMSETLAB-CERT v1\n";
  out << "set = " << c.set.to_text() << "\n";
  out << "n = " << c.n << "\n";
  out << "m = " << c.pattern.m << "\n";
  out << "ell = " << c.pattern.ell << "\n";
  out << "relation = " << relation_name(c.pattern.relation) << "\n";
  out << "shift = " << c.pattern.shift << "\n";
  out << "dilate = " << (c.pattern.dilate ? 1 : 0) << "\n";
  out << "optimal = " << (c.result.optimal ? 1 : 0) << "\n";
  out << "nodes = " << c.result.nodes_expanded << "\n";
  out << "candidate_bound = " << c.result.candidate_bound << "\n";
  out << "size = " << c.result.size() << "\n";
  out << "b =";
  for (std::int64_t x : c.result.b) out << ' ' << x;
  out << "\n";
  out << "values =";
  for (std::int64_t v : c.result.values) out << ' ' << v;
  out << "\n";
}

Certificate read_certificate(std::istream& in) {
  std::string line;
  std::size_t offset = 0;
  // tolerate '#' comment lines (outputs embed the tool/manifest header)
  for (;;) {
    if (!std::getline(in, line)) throw FormatError("bad certificate header", offset);
    if (!line.empty() && line[0] != '#') break;
    offset += line.size() + 1;
  }
  if (line != "SUMSETLAB-CERT v1")
    throw FormatError("bad certificate header", offset);
  std::map<std::string, std::string> kv;
  offset += line.size() + 1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw FormatError("certificate line without '='", offset);
    std::string key = line.substr(0, eq);
    while (!key.empty() && key.back() == ' ') key.pop_back();
    std::string value = line.substr(eq + 1);
    if (!value.empty() && value.front() == ' ') value.erase(0, 1);
    kv[key] = value;
    offset += line.size() + 1;
  }
  auto need = [&](const std::string& k) {
    auto it = kv.find(k);
    if (it == kv.end())
      throw FormatError("certificate missing field '" + k + "'", offset);
    return it->second;
  };
  Certificate c;
  c.set = SetSpec::parse(need("set"));
  c.n = std::stoll(need("n"));
  c.pattern.m = std::stol(need("m"));
  c.pattern.ell = std::stol(need("ell"));
  c.pattern.relation = relation_from_name(need("relation"));
  c.pattern.shift = std::stoll(need("shift"));
  c.pattern.dilate = need("dilate") == "1";
  c.result.optimal = need("optimal") == "1";
  c.result.nodes_expanded = std::stoull(need("nodes"));
  c.result.candidate_bound = std::stoll(need("candidate_bound"));
  c.result.b = parse_int_line(need("b"));
  c.result.values = parse_int_line(need("values"));
  if (static_cast<std::int64_t>(c.result.b.size()) != std::stoll(need("size")))
    throw FormatError("certificate size field disagrees with witness", offset);
  return c;
}

bool verify_certificate(const Certificate& c, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  try {
    c.pattern.validate();
    std::vector<std::int64_t> regenerated = pattern_values(c.result.b, c.pattern);
    if (regenerated != c.result.values)
      return fail("value list does not match the witness");
    Truncation a = truncate(c.set, c.n);
    for (std::int64_t v : c.result.values) {
      if (v > a.n()) return fail("value " + std::to_string(v) + " beyond N");
      if (!a.member(v))
        return fail("value " + std::to_string(v) + " is not in the set");
    }
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  if (why) why->clear();
  return true;
}

}  // namespace sumsetlab

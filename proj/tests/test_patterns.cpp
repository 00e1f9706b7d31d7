#include <algorithm>
#include <stdexcept>
#include <random>
#include <sstream>

#include "doctest.h"
#include "sumsetlab/errors.hpp"
#include "sumsetlab/patterns.hpp"
#include "sumsetlab/truncation.hpp"

using namespace sumsetlab;

namespace {

PatternSpec make(long m, long ell, Relation rel, std::int64_t t = 0,
                 bool dilate = false) {
  PatternSpec p;
  p.m = m;
  p.ell = ell;
  p.relation = rel;
  p.shift = t;
  p.dilate = dilate;
  return p;
}

Truncation random_truncation(std::mt19937_64& rng, std::int64_t n, int denom) {
  std::vector<std::int64_t> xs;
  for (std::int64_t x = 1; x <= n; ++x)
    if (rng() % denom == 0) xs.push_back(x);
  return truncate(SetSpec::explicit_set(xs), n);
}

}  // namespace

TEST_CASE("pattern values per regime") {
  std::vector<std::int64_t> b{2, 3, 5};
  CHECK(pattern_values(b, make(1, 2, Relation::kStrict)) ==
        std::vector<std::int64_t>{8, 12, 13});
  CHECK(pattern_values(b, make(1, 2, Relation::kWeak)) ==
        std::vector<std::int64_t>{6, 8, 9, 12, 13, 15});
  CHECK(pattern_values(b, make(1, 2, Relation::kDistinct)) ==
        std::vector<std::int64_t>{7, 8, 9, 11, 12, 13});
  CHECK(pattern_values(b, make(1, 2, Relation::kAll)) ==
        std::vector<std::int64_t>{6, 7, 8, 9, 11, 12, 13, 15});
  // shift moves every value, dilate adds ℓb + t
  CHECK(pattern_values({4}, make(1, 2, Relation::kWeak, 1)) ==
        std::vector<std::int64_t>{13});
  CHECK(pattern_values({2, 3}, make(1, 1, Relation::kStrict, 0, true)) ==
        std::vector<std::int64_t>{2, 3, 5});
  CHECK(pattern_values({}, make(1, 1, Relation::kAll)).empty());
  CHECK(pattern_values({7}, make(2, 3, Relation::kStrict)).empty());
  CHECK_THROWS_AS(pattern_values({3, 2}, make(1, 1, Relation::kWeak)),
                  std::invalid_argument);
}

TEST_CASE("regime value sets nest") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<std::int64_t> b;
    for (std::int64_t x = 1; x <= 30; ++x)
      if (rng() % 4 == 0) b.push_back(x);
    if (b.empty()) continue;
    long m = 1 + static_cast<long>(rng() % 3);
    long ell = 1 + static_cast<long>(rng() % 3);
    std::int64_t t = static_cast<std::int64_t>(rng() % 3);
    auto strict = pattern_values(b, make(m, ell, Relation::kStrict, t));
    auto weak = pattern_values(b, make(m, ell, Relation::kWeak, t));
    auto distinct = pattern_values(b, make(m, ell, Relation::kDistinct, t));
    auto all = pattern_values(b, make(m, ell, Relation::kAll, t));
    CHECK(std::includes(distinct.begin(), distinct.end(), strict.begin(),
                        strict.end()));
    CHECK(std::includes(weak.begin(), weak.end(), strict.begin(), strict.end()));
    CHECK(std::includes(all.begin(), all.end(), weak.begin(), weak.end()));
    CHECK(std::includes(all.begin(), all.end(), distinct.begin(),
                        distinct.end()));
  }
}

TEST_CASE("check_inclusion reports the smallest violation") {
  Truncation mult3 = truncate(SetSpec::residue(3, {0}), 100);
  CHECK(check_inclusion({3, 6, 9}, make(1, 2, Relation::kWeak), mult3).ok);

  Truncation evens = truncate(SetSpec::residue(2, {0}), 10);
  auto r = check_inclusion({1, 2}, make(1, 1, Relation::kStrict), evens);
  CHECK(!r.ok);
  CHECK(r.violation->value == 3);
  CHECK(r.violation->b1 == 1);
  CHECK(r.violation->b2 == 2);

  Truncation just13 = truncate(SetSpec::explicit_set({13}), 20);
  CHECK(check_inclusion({4}, make(1, 2, Relation::kWeak, 1), just13).ok);

  // out-of-range values are a range error, not a membership failure
  CHECK_THROWS_AS(check_inclusion({4, 6}, make(1, 1, Relation::kWeak), evens),
                  RangeError);
}

TEST_CASE("greedy extension") {
  Truncation mult3 = truncate(SetSpec::residue(3, {0}), 100);
  SearchResult r = greedy_extend(mult3, make(1, 2, Relation::kWeak));
  CHECK(r.size() == 11);
  CHECK(check_inclusion(r.b, make(1, 2, Relation::kWeak), mult3).ok);

  Truncation empty = truncate(SetSpec::explicit_set({}), 50);
  CHECK(greedy_extend(empty, make(2, 1, Relation::kAll)).b.empty());

  Truncation full = truncate(SetSpec::residue(1, {0}), 100);
  SearchConfig c;
  c.candidate_bound = 10;
  SearchResult all = greedy_extend(full, make(2, 3, Relation::kStrict), c);
  CHECK(all.b == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
}

TEST_CASE("greedy largest-first stalls immediately on scaled sets") {
  Truncation mult3 = truncate(SetSpec::residue(3, {0}), 100);
  SearchConfig c;
  c.order = CandidateOrder::kLargestFirst;
  SearchResult r = greedy_extend(mult3, make(1, 2, Relation::kWeak), c);
  CHECK(r.size() >= 1);
  CHECK(r.b.front() == 33);  // picked the top candidate first
  CHECK(check_inclusion(r.b, make(1, 2, Relation::kWeak), mult3).ok);
}

TEST_CASE("dilate adds a unary constraint on the witness itself") {
  Truncation mult3 = truncate(SetSpec::residue(3, {0}), 100);
  PatternSpec spec = make(1, 2, Relation::kWeak, 0, /*dilate=*/true);
  SearchResult r = max_b_search(mult3, spec);
  REQUIRE(r.optimal);
  // 2b must be a multiple of 3, so the witness lives in 3N
  for (std::int64_t x : r.b) CHECK(x % 3 == 0);
  CHECK(r.size() == 11);
  CHECK(check_inclusion(r.b, spec, mult3).ok);
  // without dilate the off-class witness is as large, starting at 1
  SearchResult plain = max_b_search(mult3, make(1, 2, Relation::kWeak));
  CHECK(plain.size() == 11);
  CHECK(plain.b.front() == 1);
}

TEST_CASE("max_b_search closes the parity instance") {
  Truncation evens = truncate(SetSpec::residue(2, {0}), 100);
  SearchConfig c;
  c.candidate_bound = 25;
  SearchResult r = max_b_search(evens, make(1, 1, Relation::kStrict), c);
  CHECK(r.optimal);
  CHECK(r.size() == 13);
  CHECK(r.b == std::vector<std::int64_t>{1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21,
                                         23, 25});
}

TEST_CASE("max_b_search honors the node budget") {
  Truncation full = truncate(SetSpec::residue(1, {0}), 400);
  SearchConfig c;
  c.candidate_bound = 100;
  c.node_budget = 5;
  SearchResult r = max_b_search(full, make(1, 1, Relation::kWeak), c);
  CHECK(!r.optimal);
  CHECK(r.nodes_expanded >= 5);
}

TEST_CASE("an exhausted time budget marks the result non-optimal") {
  Truncation full = truncate(SetSpec::residue(1, {0}), 400);
  SearchConfig c;
  c.candidate_bound = 100;
  c.time_budget_seconds = 0.0;
  SearchResult r = max_b_search(full, make(1, 1, Relation::kWeak), c);
  CHECK(!r.optimal);
}

TEST_CASE("greedy results always re-check and never beat the maximum") {
  std::mt19937_64 rng(4040);
  for (int iter = 0; iter < 40; ++iter) {
    Truncation a = random_truncation(rng, 80, 2);
    PatternSpec spec = make(1 + static_cast<long>(rng() % 2),
                            1 + static_cast<long>(rng() % 2),
                            static_cast<Relation>(iter % 4),
                            static_cast<std::int64_t>(rng() % 2));
    SearchConfig c;
    c.candidate_bound = std::min<std::int64_t>(
        16, (80 - spec.shift) / (spec.m + spec.ell));
    SearchResult g = greedy_extend(a, spec, c);
    if (!g.b.empty()) CHECK(check_inclusion(g.b, spec, a).ok);
    SearchResult mx = max_b_search(a, spec, c);
    CHECK(mx.size() >= g.size());
  }
}

TEST_CASE("brute force oracle basics") {
  Truncation full = truncate(SetSpec::residue(1, {0}), 100);
  SearchResult r = brute_force_max_b(full, make(1, 1, Relation::kWeak), 5);
  CHECK(r.size() == 5);
  CHECK(r.optimal);

  Truncation single = truncate(SetSpec::explicit_set({2}), 20);
  SearchResult s = brute_force_max_b(single, make(1, 1, Relation::kWeak), 5);
  CHECK(s.b == std::vector<std::int64_t>{1});

  CHECK_THROWS_AS(brute_force_max_b(full, make(1, 1, Relation::kWeak), 23),
                  std::invalid_argument);
}

TEST_CASE("branch and bound equals brute force on random instances") {
  std::mt19937_64 rng(2024);
  const Relation regimes[] = {Relation::kStrict, Relation::kWeak,
                              Relation::kDistinct, Relation::kAll};
  for (int iter = 0; iter < 60; ++iter) {
    std::int64_t n = 30 + static_cast<std::int64_t>(rng() % 31);
    Truncation a = random_truncation(rng, n, 2);
    long m = 1 + static_cast<long>(rng() % 2);
    long ell = 1 + static_cast<long>(rng() % 2);
    std::int64_t t = static_cast<std::int64_t>(rng() % 3);
    PatternSpec spec = make(m, ell, regimes[iter % 4], t);
    std::int64_t bound =
        std::min<std::int64_t>(12, (n - t) / (m + ell));
    if (bound < 1) continue;
    SearchConfig c;
    c.candidate_bound = bound;
    SearchResult bb = max_b_search(a, spec, c);
    SearchResult bf = brute_force_max_b(a, spec, bound);
    REQUIRE(bb.optimal);
    CHECK(bb.size() == bf.size());
    CHECK(bb.b == bf.b);  // identical tie-break: lexicographically smallest
    if (!bb.b.empty()) CHECK(check_inclusion(bb.b, spec, a).ok);
  }
}

TEST_CASE("enlarging the host set never shrinks the maximum witness") {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 25; ++iter) {
    std::int64_t n = 60;
    std::vector<std::int64_t> xs, ys;
    for (std::int64_t x = 1; x <= n; ++x) {
      bool in_small = rng() % 3 == 0;
      if (in_small) xs.push_back(x);
      if (in_small || rng() % 3 == 0) ys.push_back(x);
    }
    Truncation small = truncate(SetSpec::explicit_set(xs), n);
    Truncation large = truncate(SetSpec::explicit_set(ys), n);
    PatternSpec spec = make(1, 1, Relation::kWeak);
    SearchConfig c;
    c.candidate_bound = 15;
    CHECK(max_b_search(large, spec, c).size() >=
          max_b_search(small, spec, c).size());
  }
}

TEST_CASE("searches are deterministic") {
  std::mt19937_64 rng(31);
  Truncation a = random_truncation(rng, 200, 2);
  PatternSpec spec = make(1, 2, Relation::kDistinct, 1);
  SearchResult r1 = max_b_search(a, spec);
  SearchResult r2 = max_b_search(a, spec);
  CHECK(r1.b == r2.b);
  CHECK(r1.nodes_expanded == r2.nodes_expanded);
}

TEST_CASE("normalize_shift is euclidean division") {
  ShiftDecomposition d = normalize_shift(7, 1, 2);
  CHECK(d.j == 2);
  CHECK(d.i == 1);
  d = normalize_shift(0, 3, 4);
  CHECK(d.j == 0);
  CHECK(d.i == 0);
  d = normalize_shift(5, 2, 3);
  CHECK(d.j == 1);
  CHECK(d.i == 0);
  CHECK_THROWS_AS(normalize_shift(-1, 1, 1), std::invalid_argument);
}

TEST_CASE("shift equivalence identity") {
  std::mt19937_64 rng(8);
  Truncation a = random_truncation(rng, 400, 2);
  CHECK(shift_equivalence_check({1, 2, 3}, make(1, 1, Relation::kWeak, 5), a));

  Truncation b = truncate(SetSpec::residue(7, {0, 1}), 200);
  CHECK(shift_equivalence_check({2, 5}, make(2, 3, Relation::kStrict, 11), b));
  CHECK(shift_equivalence_check({}, make(2, 3, Relation::kAll, 9), b));
}

TEST_CASE("mod_refine keeps the largest congruence class") {
  CHECK(mod_refine({1, 4, 7, 9, 10, 13}, 3) ==
        std::vector<std::int64_t>{1, 4, 7, 10, 13});
  CHECK(mod_refine({1, 2}, 5) == std::vector<std::int64_t>{1});
  CHECK(mod_refine({}, 4).empty());

  // refined witnesses generate only multiples of ℓ+m at t = 0
  auto vals = pattern_values({2, 5, 8}, make(1, 2, Relation::kStrict));
  CHECK(vals == std::vector<std::int64_t>{12, 18, 21});
  for (std::int64_t v : vals) CHECK(v % 3 == 0);

  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<std::int64_t> b;
    for (std::int64_t x = 1; x <= 40; ++x)
      if (rng() % 3 == 0) b.push_back(x);
    long m = 1 + static_cast<long>(rng() % 3);
    long ell = 1 + static_cast<long>(rng() % 3);
    auto refined = mod_refine(b, ell + m);
    if (refined.empty()) continue;
    for (Relation rel : {Relation::kStrict, Relation::kWeak, Relation::kAll}) {
      for (std::int64_t v : pattern_values(refined, make(m, ell, rel)))
        CHECK(v % (ell + m) == 0);
    }
  }
}

TEST_CASE("unshifted reduction through the zero class") {
  // a set avoiding 3N entirely leaves nothing to search
  SearchResult r0 = unshifted_reduction(
      SetSpec::complement(SetSpec::residue(3, {0})), make(2, 1, Relation::kStrict),
      500);
  CHECK(r0.size() == 0);
  CHECK(r0.optimal);

  // over all of N the reduction searches 3N itself; the best witness is a
  // whole congruence class, and every pattern value is a multiple of 3
  SearchResult r1 =
      unshifted_reduction(SetSpec::residue(1, {0}), make(2, 1, Relation::kStrict), 300);
  CHECK(r1.size() == 34);
  for (std::int64_t v : pattern_values(r1.b, make(2, 1, Relation::kStrict)))
    CHECK(v % 3 == 0);
  Truncation host = truncate(SetSpec::residue(1, {0}), 300);
  CHECK(check_inclusion(r1.b, make(2, 1, Relation::kStrict), host).ok);

  // multiples of 6 with m = ell = 1: the best class witness has 20 elements
  SearchResult r2 =
      unshifted_reduction(SetSpec::residue(6, {0}), make(1, 1, Relation::kStrict), 240);
  CHECK(r2.size() == 20);
  Truncation host6 = truncate(SetSpec::residue(6, {0}), 240);
  CHECK(check_inclusion(r2.b, make(1, 1, Relation::kStrict), host6).ok);

  CHECK_THROWS_AS(unshifted_reduction(SetSpec::residue(1, {0}),
                                      make(1, 1, Relation::kStrict, 2), 100),
                  std::invalid_argument);
}

TEST_CASE("best_shift picks the matching shift of a shifted set") {
  // 3N + 1 under (m, ell) = (1, 2): t = 1 recovers the t = 0 witness of 3N
  Truncation shifted = truncate(SetSpec::shift_by(SetSpec::residue(3, {0}), 1), 100);
  PatternSpec spec = make(1, 2, Relation::kWeak);
  ShiftTable table = best_shift(shifted, spec, {0, 1, 2});
  CHECK(table.best_shift == 1);

  Truncation plain = truncate(SetSpec::residue(3, {0}), 100);
  SearchResult direct = max_b_search(plain, make(1, 2, Relation::kWeak));
  std::int64_t best_size = 0;
  for (const auto& row : table.rows)
    if (row.shift == 1) best_size = row.result.size();
  CHECK(best_size == direct.size());

  Truncation empty = truncate(SetSpec::explicit_set({}), 100);
  ShiftTable et = best_shift(empty, spec, {});
  CHECK(et.rows.size() == 3);  // defaults to t in {0, ..., ell+m-1}
  for (const auto& row : et.rows) CHECK(row.result.size() == 0);
}

TEST_CASE("certificates round-trip and verify") {
  SetSpec set = SetSpec::residue(3, {0});
  Truncation a = truncate(set, 100);
  PatternSpec spec = make(1, 2, Relation::kWeak);
  Certificate cert;
  cert.set = set;
  cert.n = 100;
  cert.pattern = spec;
  cert.result = greedy_extend(a, spec);

  std::stringstream buf;
  write_certificate(cert, buf);
  Certificate back = read_certificate(buf);
  CHECK(back.result.b == cert.result.b);
  CHECK(back.result.values == cert.result.values);
  std::string why;
  CHECK(verify_certificate(back, &why));

  SUBCASE("tampered value list fails") {
    Certificate bad = back;
    bad.result.values[0] += 1;
    CHECK(!verify_certificate(bad, &why));
    CHECK(!why.empty());
  }
  SUBCASE("witness moved outside the set fails") {
    Certificate bad = back;
    bad.result.b.push_back(bad.result.b.back() + 1);
    bad.result.values = pattern_values(bad.result.b, bad.pattern);
    CHECK(!verify_certificate(bad, &why));
  }
  SUBCASE("malformed header is a format error") {
    std::stringstream in("SUMSETLAB-CERT v9\n");
    CHECK_THROWS_AS(read_certificate(in), FormatError);
  }
}

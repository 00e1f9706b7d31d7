#ifndef SUMSETLAB_TRUNCATION_HPP
#define SUMSETLAB_TRUNCATION_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sumsetlab/setspec.hpp"

namespace sumsetlab {

// Materialized membership of a set over [1, N]: dense bits plus per-word
// prefix counts. Immutable after construction, safe to share across threads.
class Truncation {
public:
  // Low-level constructor; words must hold exactly word_count(n) entries and
  // carry no set bits above position n.
  Truncation(std::int64_t n, std::vector<std::uint64_t> words);

  std::int64_t n() const { return n_; }
  std::int64_t count() const { return prefix_.back(); }

  bool member(std::int64_t x) const {
    if (x < 1 || x > n_) return false;
    std::uint64_t i = static_cast<std::uint64_t>(x - 1);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  // |set ∩ [1, e]|, 0 <= e <= N
  std::int64_t count_prefix(std::int64_t e) const;
  // |set ∩ [a, b]|; empty ranges give 0
  std::int64_t count_range(std::int64_t a, std::int64_t b) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const Truncation& a, const Truncation& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  static std::size_t word_count(std::int64_t n) {
    return static_cast<std::size_t>((n + 63) / 64);
  }

private:
  std::int64_t n_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::int64_t> prefix_;  // prefix_[w] = bits in words [0, w)
};

// Memory cap for materializations, in bytes; reads SUMSETLAB_MAX_MEM once
// (decimal bytes), defaulting to 2 GiB.
std::uint64_t memory_budget_bytes();

// Materializes spec over [1, N]. Family nodes are filled one interval at a
// time from their exact rational endpoints, not per-element.
Truncation truncate(const SetSpec& spec, std::int64_t n);

// External format: header line "SUMSETLAB-TRUNC v1 N=<decimal>\n" followed by
// ceil(N/8) payload bytes, bit x stored at byte (x-1)/8, bit (x-1)%8.
void save_truncation(const Truncation& t, std::ostream& out);
void save_truncation(const Truncation& t, const std::string& path);
Truncation load_truncation(std::istream& in);
Truncation load_truncation(const std::string& path);

}  // namespace sumsetlab

#endif

#include "sumsetlab/truncation.hpp"

#include <bit>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "sumsetlab/errors.hpp"

namespace sumsetlab {

Truncation::Truncation(std::int64_t n, std::vector<std::uint64_t> words)
    : n_(n), words_(std::move(words)) {
  if (n < 1) throw std::invalid_argument("Truncation: N must be >= 1");
  if (words_.size() != word_count(n))
    throw std::invalid_argument("Truncation: word vector has wrong size");
  unsigned rem = static_cast<unsigned>(n & 63);
  if (rem && (words_.back() & ~((std::uint64_t(1) << rem) - 1)))
    throw std::invalid_argument("Truncation: set bits beyond N");
  prefix_.resize(words_.size() + 1);
  prefix_[0] = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    prefix_[i + 1] = prefix_[i] + std::popcount(words_[i]);
}

std::int64_t Truncation::count_prefix(std::int64_t e) const {
  if (e <= 0) return 0;
  if (e > n_) throw std::out_of_range("Truncation: prefix endpoint beyond N");
  std::uint64_t full = static_cast<std::uint64_t>(e) >> 6;
  std::int64_t c = prefix_[full];
  unsigned rem = static_cast<unsigned>(e & 63);
  if (rem)
    c += std::popcount(words_[full] & ((std::uint64_t(1) << rem) - 1));
  return c;
}

std::int64_t Truncation::count_range(std::int64_t a, std::int64_t b) const {
  if (a < 1) a = 1;
  if (b > n_) b = n_;
  if (b < a) return 0;
  return count_prefix(b) - count_prefix(a - 1);
}

std::uint64_t memory_budget_bytes() {
  static const std::uint64_t budget = [] {
    if (const char* env = std::getenv("SUMSETLAB_MAX_MEM")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return std::uint64_t(2) << 30;
  }();
  return budget;
}

namespace {

using Words = std::vector<std::uint64_t>;

void check_budget(std::int64_t n) {
  std::uint64_t bytes = Truncation::word_count(n) * 8;
  if (bytes > memory_budget_bytes())
    throw ResourceError("truncation of " + std::to_string(n) +
                        " bits exceeds SUMSETLAB_MAX_MEM");
}

Words alloc_words(std::int64_t n) {
  check_budget(n);
  return Words(Truncation::word_count(n), 0);
}

void set_bit(Words& w, std::int64_t x) {
  std::uint64_t i = static_cast<std::uint64_t>(x - 1);
  w[i >> 6] |= std::uint64_t(1) << (i & 63);
}

// set bits for all x in [a, b] (1-based, inclusive)
void fill_range(Words& w, std::int64_t a, std::int64_t b) {
  if (b < a) return;
  std::uint64_t lo = static_cast<std::uint64_t>(a - 1);
  std::uint64_t hi = static_cast<std::uint64_t>(b - 1);
  std::size_t wl = lo >> 6, wh = hi >> 6;
  std::uint64_t ml = ~std::uint64_t(0) << (lo & 63);
  std::uint64_t mh = ~std::uint64_t(0) >>
                     (63 - (hi & 63));
  if (wl == wh) {
    w[wl] |= ml & mh;
    return;
  }
  w[wl] |= ml;
  for (std::size_t i = wl + 1; i < wh; ++i) w[i] = ~std::uint64_t(0);
  w[wh] |= mh;
}

void clear_tail(Words& w, std::int64_t n) {
  unsigned rem = static_cast<unsigned>(n & 63);
  if (rem && !w.empty()) w.back() &= (std::uint64_t(1) << rem) - 1;
}

Words eval(const SetSpec::NodePtr& node, std::int64_t n);

Words eval_family(const IntervalFamily& f, std::int64_t n) {
  Words w = alloc_words(n);
  const BigInt big_n(n);
  Rational b2n = f.base.pow(2 * f.index_start);
  const Rational bsq = f.base * f.base;
  for (long k = f.index_start;; ++k) {
    if (b2n.ceil() > big_n) break;  // interval k lives in [β^{2k}, β^{2k+2})
    Rational lo = f.kind == FamilyKind::kLower ? b2n
                                               : (f.base + Rational(1, k)) * b2n;
    Rational hi = f.kind == FamilyKind::kLower
                      ? (f.base - Rational(1, k)) * b2n
                      : b2n * bsq;
    BigInt first = lo.ceil();
    BigInt last = hi.ceil() - BigInt(1);
    if (last > big_n) last = big_n;
    if (first <= last) {
      std::int64_t a = first.to_int64();
      if (a < 1) a = 1;
      fill_range(w, a, last.to_int64());
    }
    b2n = b2n * bsq;
  }
  return w;
}

Words eval(const SetSpec::NodePtr& node, std::int64_t n) {
  if (!node) return alloc_words(n);
  switch (node->kind) {
    case SetSpec::Kind::kExplicit: {
      Words w = alloc_words(n);
      for (std::int64_t x : node->elements) {
        if (x > n) break;
        set_bit(w, x);
      }
      return w;
    }
    case SetSpec::Kind::kResidue: {
      Words w = alloc_words(n);
      std::int64_t d = node->modulus;
      for (std::int64_t r : node->residues) {
        std::int64_t x = r == 0 ? d : r;
        for (; x <= n; x += d) set_bit(w, x);
      }
      return w;
    }
    case SetSpec::Kind::kFamily:
      return eval_family(*node->family, n);
    case SetSpec::Kind::kUnion: {
      Words acc = eval(node->children[0], n);
      for (std::size_t i = 1; i < node->children.size(); ++i) {
        Words c = eval(node->children[i], n);
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] |= c[j];
      }
      return acc;
    }
    case SetSpec::Kind::kIntersection: {
      Words acc = eval(node->children[0], n);
      for (std::size_t i = 1; i < node->children.size(); ++i) {
        Words c = eval(node->children[i], n);
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] &= c[j];
      }
      return acc;
    }
    case SetSpec::Kind::kComplement: {
      Words w = eval(node->children[0], n);
      for (auto& word : w) word = ~word;
      clear_tail(w, n);
      return w;
    }
    case SetSpec::Kind::kShiftBy: {
      // result bit x = child bit (x - offset)
      std::int64_t off = node->offset;
      Words w = alloc_words(n);
      std::int64_t child_n = n - off;
      if (child_n < 1) return w;  // nothing shifts into [1, n]
      Words c = eval(node->children[0], child_n);
      for (std::int64_t x = std::max<std::int64_t>(1, off + 1); x <= n; ++x) {
        std::uint64_t s = static_cast<std::uint64_t>(x - off - 1);
        if ((c[s >> 6] >> (s & 63)) & 1u) set_bit(w, x);
      }
      return w;
    }
    case SetSpec::Kind::kQuotient: {
      std::int64_t d = node->divisor, j = node->residue;
      __int128 need = static_cast<__int128>(d) * n + j;
      if (need > INT64_MAX)
        throw std::overflow_error("truncate: quotient child range overflows");
      Words c = eval(node->children[0], static_cast<std::int64_t>(need));
      Words w = alloc_words(n);
      for (std::int64_t x = 1; x <= n; ++x) {
        std::uint64_t s = static_cast<std::uint64_t>(d * x + j - 1);
        if ((c[s >> 6] >> (s & 63)) & 1u) set_bit(w, x);
      }
      return w;
    }
  }
  return alloc_words(n);
}

}  // namespace

Truncation truncate(const SetSpec& spec, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("truncate: N must be >= 1");
  return Truncation(n, eval(spec.root(), n));
}

void save_truncation(const Truncation& t, std::ostream& out) {
  out << "SUMSETLAB-TRUNC v1 N=" << t.n() << "\n";
  std::int64_t bytes = (t.n() + 7) / 8;
  const auto& words = t.words();
  for (std::int64_t k = 0; k < bytes; ++k) {
    unsigned char b = static_cast<unsigned char>(
        (words[static_cast<std::size_t>(k >> 3)] >> ((k & 7) * 8)) & 0xff);
    out.put(static_cast<char>(b));
  }
  if (!out) throw std::runtime_error("save_truncation: write failed");
}

void save_truncation(const Truncation& t, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("save_truncation: cannot open " + path);
  save_truncation(t, f);
}

Truncation load_truncation(std::istream& in) {
  static const std::string magic = "SUMSETLAB-TRUNC v1 N=";
  for (std::size_t i = 0; i < magic.size(); ++i) {
    int c = in.get();
    if (c != magic[i])
      throw FormatError("truncation header mismatch", i);
  }
  std::string digits;
  std::size_t pos = magic.size();
  for (;;) {
    int c = in.get();
    if (c == '\n') break;
    if (c < '0' || c > '9' || digits.size() > 18)
      throw FormatError("bad N in truncation header", pos);
    digits.push_back(static_cast<char>(c));
    ++pos;
  }
  ++pos;  // newline
  if (digits.empty()) throw FormatError("missing N in truncation header", pos);
  std::int64_t n = std::stoll(digits);
  if (n < 1) throw FormatError("truncation N must be >= 1", pos);
  check_budget(n);
  std::int64_t bytes = (n + 7) / 8;
  std::vector<std::uint64_t> words(Truncation::word_count(n), 0);
  for (std::int64_t k = 0; k < bytes; ++k) {
    int c = in.get();
    if (c == std::char_traits<char>::eof())
      throw FormatError("truncation payload truncated", pos + k);
    words[static_cast<std::size_t>(k >> 3)] |=
        static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << ((k & 7) * 8);
  }
  if (in.get() != std::char_traits<char>::eof())
    throw FormatError("trailing bytes after truncation payload", pos + bytes);
  unsigned rem = static_cast<unsigned>(n & 63);
  if (rem && (words.back() & ~((std::uint64_t(1) << rem) - 1)))
    throw FormatError("padding bits beyond N are not zero", pos + bytes - 1);
  return Truncation(n, std::move(words));
}

Truncation load_truncation(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("load_truncation: cannot open " + path);
  return load_truncation(f);
}

}  // namespace sumsetlab

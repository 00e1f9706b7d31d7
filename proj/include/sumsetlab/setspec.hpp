#ifndef SUMSETLAB_SETSPEC_HPP
#define SUMSETLAB_SETSPEC_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumsetlab/rational.hpp"

namespace sumsetlab {

enum class FamilyKind { kLower, kUpper };

// One of the paper-style interval families over the naturals:
//   LOWER:  N ∩ ⋃_n [β^{2n}, (β − 1/n)·β^{2n})      for n ≥ index_start
//   UPPER:  N ∩ ⋃_n [(β + 1/n)·β^{2n}, β^{2(n+1)})  for n ≥ index_start
// β is an exact rational > 1; all endpoint comparisons are exact.
struct IntervalFamily {
  Rational base;
  FamilyKind kind = FamilyKind::kLower;
  long index_start = 1;

  IntervalFamily(Rational b, FamilyKind k, long start = 1);

  // Exact half-open real endpoints of interval n.
  Rational left(long n) const;
  Rational right(long n) const;
  // Integer content of interval n is [first, last]; empty when first > last.
  struct IntRange {
    std::int64_t first;
    std::int64_t last;
    bool empty() const { return first > last; }
  };
  IntRange integer_range(long n) const;
  // The real interval n is empty iff its endpoints cross (LOWER: β − 1/n ≤ 1).
  bool real_interval_empty(long n) const;

  bool contains(std::int64_t x) const;
};

// Algebraic description of a subset of the positive integers. Immutable
// after construction; nodes are shared, so copies are cheap.
class SetSpec {
public:
  enum class Kind {
    kExplicit,
    kResidue,
    kFamily,
    kUnion,
    kIntersection,
    kComplement,
    kShiftBy,
    kQuotient,
  };

  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Node {
    Kind kind;
    // kExplicit
    std::vector<std::int64_t> elements;  // sorted, distinct, all >= 1
    // kResidue
    std::int64_t modulus = 0;
    std::vector<bool> residue_mask;
    std::vector<std::int64_t> residues;  // sorted, for serialization
    // kFamily
    std::optional<IntervalFamily> family;
    // kShiftBy / kQuotient
    std::int64_t offset = 0;  // shift offset (any sign)
    std::int64_t divisor = 0; // quotient d >= 1
    std::int64_t residue = 0; // quotient j in [0, d)
    // children
    std::vector<NodePtr> children;
  };

  SetSpec() = default;  // empty set

  static SetSpec explicit_set(std::vector<std::int64_t> sorted_elements);
  static SetSpec residue(std::int64_t modulus,
                         std::vector<std::int64_t> residues);
  static SetSpec family(IntervalFamily f);
  static SetSpec union_of(std::vector<SetSpec> parts);
  static SetSpec intersection_of(std::vector<SetSpec> parts);
  static SetSpec complement(SetSpec inner);
  static SetSpec shift_by(SetSpec inner, std::int64_t offset);
  static SetSpec quotient(SetSpec inner, std::int64_t divisor,
                          std::int64_t residue);
  static SetSpec naturals() { return residue(1, {0}); }
  static SetSpec difference(SetSpec a, SetSpec b);

  // Exact membership of the positive integer x; x <= 0 is never a member.
  bool contains(std::int64_t x) const;

  const NodePtr& root() const { return root_; }
  bool is_empty_literal() const;

  // Canonical functional text form, e.g.
  //   union(family(lower, 3/2), residue(6; 0, 3))
  std::string to_text() const;
  static SetSpec parse(std::string_view text);

private:
  explicit SetSpec(NodePtr root) : root_(std::move(root)) {}
  NodePtr root_;  // null means the empty set
};

// {n : d·n + j ∈ spec}
SetSpec quotient_set(const SetSpec& spec, std::int64_t d, std::int64_t j);

}  // namespace sumsetlab

#endif

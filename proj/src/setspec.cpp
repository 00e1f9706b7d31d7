#include "sumsetlab/setspec.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sumsetlab {

IntervalFamily::IntervalFamily(Rational b, FamilyKind k, long start)
    : base(std::move(b)), kind(k), index_start(start) {
  if (!(base > Rational(1)))
    throw std::invalid_argument("IntervalFamily: base must be > 1");
  if (index_start < 1)
    throw std::invalid_argument("IntervalFamily: index_start must be >= 1");
}

Rational IntervalFamily::left(long n) const {
  Rational b2n = base.pow(2 * n);
  if (kind == FamilyKind::kLower) return b2n;
  return (base + Rational(1, n)) * b2n;
}

Rational IntervalFamily::right(long n) const {
  Rational b2n = base.pow(2 * n);
  if (kind == FamilyKind::kLower) return (base - Rational(1, n)) * b2n;
  return b2n * base * base;
}

bool IntervalFamily::real_interval_empty(long n) const {
  return left(n) >= right(n);
}

IntervalFamily::IntRange IntervalFamily::integer_range(long n) const {
  BigInt first = left(n).ceil();
  BigInt last = right(n).ceil() - BigInt(1);
  if (last < first) return {1, 0};
  if (!first.fits_int64() || !last.fits_int64())
    throw std::overflow_error("IntervalFamily: interval exceeds int64 range");
  return {first.to_int64(), last.to_int64()};
}

bool IntervalFamily::contains(std::int64_t x) const {
  if (x < 1) return false;
  const Rational bx(x);
  Rational b2n = base.pow(2 * index_start);
  for (long n = index_start;; ++n) {
    if (b2n > bx) return false;  // every later interval starts even higher
    // x ∈ [β^{2n}, β^{2n+2}) at this scale; test against the exact endpoints
    Rational lo = (kind == FamilyKind::kLower) ? b2n : (base + Rational(1, n)) * b2n;
    Rational hi = (kind == FamilyKind::kLower) ? (base - Rational(1, n)) * b2n
                                               : b2n * base * base;
    if (bx >= lo && bx < hi) return true;
    b2n = b2n * base * base;
  }
}

namespace {

using Node = SetSpec::Node;
using NodePtr = SetSpec::NodePtr;

NodePtr make_node(Node n) { return std::make_shared<const Node>(std::move(n)); }

bool node_contains(const NodePtr& node, std::int64_t x);

bool node_contains(const NodePtr& node, std::int64_t x) {
  if (!node) return false;
  if (x < 1) return false;
  switch (node->kind) {
    case SetSpec::Kind::kExplicit:
      return std::binary_search(node->elements.begin(), node->elements.end(), x);
    case SetSpec::Kind::kResidue:
      return node->residue_mask[static_cast<std::size_t>(x % node->modulus)];
    case SetSpec::Kind::kFamily:
      return node->family->contains(x);
    case SetSpec::Kind::kUnion:
      for (const auto& c : node->children)
        if (node_contains(c, x)) return true;
      return false;
    case SetSpec::Kind::kIntersection:
      for (const auto& c : node->children)
        if (!node_contains(c, x)) return false;
      return true;
    case SetSpec::Kind::kComplement:
      return !node_contains(node->children[0], x);
    case SetSpec::Kind::kShiftBy: {
      __int128 pre = static_cast<__int128>(x) - node->offset;
      if (pre < 1) return false;
      if (pre > static_cast<__int128>(INT64_MAX))
        throw std::overflow_error("SetSpec: shifted coordinate out of range");
      return node_contains(node->children[0], static_cast<std::int64_t>(pre));
    }
    case SetSpec::Kind::kQuotient: {
      __int128 v = static_cast<__int128>(node->divisor) * x + node->residue;
      if (v > static_cast<__int128>(INT64_MAX))
        throw std::overflow_error("SetSpec: quotient coordinate out of range");
      return node_contains(node->children[0], static_cast<std::int64_t>(v));
    }
  }
  return false;
}

}  // namespace

SetSpec SetSpec::explicit_set(std::vector<std::int64_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!elements.empty() && elements.front() < 1)
    throw std::invalid_argument("SetSpec: explicit elements must be >= 1");
  Node n;
  n.kind = Kind::kExplicit;
  n.elements = std::move(elements);
  return SetSpec(make_node(std::move(n)));
}

SetSpec SetSpec::residue(std::int64_t modulus, std::vector<std::int64_t> rs) {
  if (modulus < 1) throw std::invalid_argument("SetSpec: modulus must be >= 1");
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  Node n;
  n.kind = Kind::kResidue;
  n.modulus = modulus;
  n.residue_mask.assign(static_cast<std::size_t>(modulus), false);
  for (std::int64_t r : rs) {
    if (r < 0 || r >= modulus)
      throw std::invalid_argument("SetSpec: residue out of range");
    n.residue_mask[static_cast<std::size_t>(r)] = true;
  }
  n.residues = std::move(rs);
  return SetSpec(make_node(std::move(n)));
}

SetSpec SetSpec::family(IntervalFamily f) {
  Node n;
  n.kind = Kind::kFamily;
  n.family.emplace(std::move(f));
  return SetSpec(make_node(std::move(n)));
}

SetSpec SetSpec::union_of(std::vector<SetSpec> parts) {
  Node n;
  n.kind = Kind::kUnion;
  for (auto& p : parts)
    if (p.root_) n.children.push_back(std::move(p.root_));
  if (n.children.empty()) return SetSpec();
  if (n.children.size() == 1) return SetSpec(std::move(n.children[0]));
  return SetSpec(make_node(std::move(n)));
}

SetSpec SetSpec::intersection_of(std::vector<SetSpec> parts) {
  if (parts.empty())
    throw std::invalid_argument("SetSpec: empty intersection is ambiguous");
  Node n;
  n.kind = Kind::kIntersection;
  for (auto& p : parts) {
    if (!p.root_) return SetSpec();  // intersecting with the empty set
    n.children.push_back(std::move(p.root_));
  }
  if (n.children.size() == 1) return SetSpec(std::move(n.children[0]));
  return SetSpec(make_node(std::move(n)));
}

SetSpec SetSpec::complement(SetSpec inner) {
  Node n;
  n.kind = Kind::kComplement;
  if (!inner.root_) return naturals();
  n.children.push_back(std::move(inner.root_));
  return SetSpec(make_node(std::move(n)));
}

SetSpec SetSpec::shift_by(SetSpec inner, std::int64_t offset) {
  if (!inner.root_) return SetSpec();
  Node n;
  n.kind = Kind::kShiftBy;
  n.offset = offset;
  n.children.push_back(std::move(inner.root_));
  return SetSpec(make_node(std::move(n)));
}

SetSpec SetSpec::quotient(SetSpec inner, std::int64_t d, std::int64_t j) {
  if (d < 1) throw std::invalid_argument("SetSpec: quotient divisor must be >= 1");
  if (j < 0 || j >= d)
    throw std::invalid_argument("SetSpec: quotient residue out of range");
  if (!inner.root_) return SetSpec();
  Node n;
  n.kind = Kind::kQuotient;
  n.divisor = d;
  n.residue = j;
  n.children.push_back(std::move(inner.root_));
  return SetSpec(make_node(std::move(n)));
}

SetSpec SetSpec::difference(SetSpec a, SetSpec b) {
  std::vector<SetSpec> parts;
  parts.push_back(std::move(a));
  parts.push_back(complement(std::move(b)));
  return intersection_of(std::move(parts));
}

bool SetSpec::contains(std::int64_t x) const { return node_contains(root_, x); }

bool SetSpec::is_empty_literal() const {
  return !root_ ||
         (root_->kind == Kind::kExplicit && root_->elements.empty());
}

SetSpec quotient_set(const SetSpec& spec, std::int64_t d, std::int64_t j) {
  return SetSpec::quotient(spec, d, j);
}

// ---------------------------------------------------------------------------
// Text form.
//
// Grammar (whitespace-insensitive):
//   set      := "empty()" | "explicit" "{" ints? "}"
//             | "residue" "(" int ";" ints ")"
//             | "family" "(" ("lower"|"upper") "," rational ["," "start" "=" int] ")"
//             | "union" "(" set ("," set)* ")"
//             | "inter" "(" set ("," set)* ")"
//             | "compl" "(" set ")"
//             | "shift" "(" set "," int ")"
//             | "quot" "(" set "," int "," int ")"
//   rational := int ["/" int]
// ---------------------------------------------------------------------------

namespace {

void write_node(const NodePtr& node, std::string& out) {
  if (!node) {
    out += "explicit{}";
    return;
  }
  switch (node->kind) {
    case SetSpec::Kind::kExplicit: {
      out += "explicit{";
      for (std::size_t i = 0; i < node->elements.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(node->elements[i]);
      }
      out += "}";
      break;
    }
    case SetSpec::Kind::kResidue: {
      out += "residue(" + std::to_string(node->modulus) + "; ";
      for (std::size_t i = 0; i < node->residues.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(node->residues[i]);
      }
      out += ")";
      break;
    }
    case SetSpec::Kind::kFamily: {
      const IntervalFamily& f = *node->family;
      out += "family(";
      out += f.kind == FamilyKind::kLower ? "lower, " : "upper, ";
      out += f.base.to_string();
      if (f.index_start != 1) out += ", start=" + std::to_string(f.index_start);
      out += ")";
      break;
    }
    case SetSpec::Kind::kUnion:
    case SetSpec::Kind::kIntersection: {
      out += node->kind == SetSpec::Kind::kUnion ? "union(" : "inter(";
      for (std::size_t i = 0; i < node->children.size(); ++i) {
        if (i) out += ", ";
        write_node(node->children[i], out);
      }
      out += ")";
      break;
    }
    case SetSpec::Kind::kComplement:
      out += "compl(";
      write_node(node->children[0], out);
      out += ")";
      break;
    case SetSpec::Kind::kShiftBy:
      out += "shift(";
      write_node(node->children[0], out);
      out += ", " + std::to_string(node->offset) + ")";
      break;
    case SetSpec::Kind::kQuotient:
      out += "quot(";
      write_node(node->children[0], out);
      out += ", " + std::to_string(node->divisor) + ", " +
             std::to_string(node->residue) + ")";
      break;
  }
}

class SpecParser {
public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  SetSpec parse() {
    SetSpec s = parse_set();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters after set expression");
    return s;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("set spec parse error at position " +
                                std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  Rational rational() {
    std::int64_t num = integer();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::int64_t den = integer();
      return Rational(num, den);
    }
    return Rational(num);
  }

  std::vector<std::int64_t> int_list(char terminator) {
    std::vector<std::int64_t> out;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == terminator) return out;
    out.push_back(integer());
    while (eat(',')) out.push_back(integer());
    return out;
  }

  SetSpec parse_set() {
    std::string name = ident();
    if (name == "empty") {
      expect('(');
      expect(')');
      return SetSpec::explicit_set({});
    }
    if (name == "explicit") {
      expect('{');
      auto xs = int_list('}');
      expect('}');
      return SetSpec::explicit_set(std::move(xs));
    }
    if (name == "residue") {
      expect('(');
      std::int64_t d = integer();
      expect(';');
      auto rs = int_list(')');
      expect(')');
      return SetSpec::residue(d, std::move(rs));
    }
    if (name == "family") {
      expect('(');
      std::string kind = ident();
      FamilyKind k;
      if (kind == "lower")
        k = FamilyKind::kLower;
      else if (kind == "upper")
        k = FamilyKind::kUpper;
      else
        fail("family kind must be lower or upper");
      expect(',');
      Rational base = rational();
      long start = 1;
      if (eat(',')) {
        std::string key = ident();
        if (key != "start") fail("expected start=<n>");
        expect('=');
        start = static_cast<long>(integer());
      }
      expect(')');
      return SetSpec::family(IntervalFamily(std::move(base), k, start));
    }
    if (name == "union" || name == "inter") {
      expect('(');
      std::vector<SetSpec> parts;
      parts.push_back(parse_set());
      while (eat(',')) parts.push_back(parse_set());
      expect(')');
      return name == "union" ? SetSpec::union_of(std::move(parts))
                             : SetSpec::intersection_of(std::move(parts));
    }
    if (name == "compl") {
      expect('(');
      SetSpec inner = parse_set();
      expect(')');
      return SetSpec::complement(std::move(inner));
    }
    if (name == "shift") {
      expect('(');
      SetSpec inner = parse_set();
      expect(',');
      std::int64_t off = integer();
      expect(')');
      return SetSpec::shift_by(std::move(inner), off);
    }
    if (name == "quot") {
      expect('(');
      SetSpec inner = parse_set();
      expect(',');
      std::int64_t d = integer();
      expect(',');
      std::int64_t j = integer();
      expect(')');
      return SetSpec::quotient(std::move(inner), d, j);
    }
    fail("unknown set constructor '" + name + "'");
  }
};

}  // namespace

std::string SetSpec::to_text() const {
  std::string out;
  write_node(root_, out);
  return out;
}

SetSpec SetSpec::parse(std::string_view text) { return SpecParser(text).parse(); }

}  // namespace sumsetlab

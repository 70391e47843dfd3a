#include "idens/index_set.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace idens {

namespace {

constexpr std::uint64_t kModulusGuard = 1'000'000;
constexpr std::uint64_t kFlipGuard = 1'000'000;

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = std::gcd(a, b);
  std::uint64_t l = (a / g) * b;
  if (l > kModulusGuard)
    throw input_error("index-set modulus exceeds supported bound");
  return l;
}

}  // namespace

bool is_perfect_square(std::uint64_t n) {
  if (n == 0) return false;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  for (std::uint64_t k = (r > 2 ? r - 2 : 1); k <= r + 2; ++k)
    if (k * k == n) return true;
  return false;
}

struct IndexSet::Node {
  enum class Kind { finite, ap, squares, unite, intersect, complement };
  Kind kind;
  std::set<std::uint64_t> elems;  // finite
  std::uint64_t a = 0, b = 0;     // ap
  std::shared_ptr<const Node> left, right;
};

IndexSet IndexSet::finite(std::vector<std::uint64_t> elems) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::finite;
  for (auto e : elems) {
    if (e == 0) throw input_error("index sets live in N = {1,2,...}; 0 not allowed");
    node->elems.insert(e);
  }
  return IndexSet(std::move(node));
}

IndexSet IndexSet::ap(std::uint64_t first, std::uint64_t step) {
  if (first < 1 || step < 1) throw input_error("ap(first, step) requires first, step >= 1");
  if (step > kModulusGuard) throw input_error("index-set modulus exceeds supported bound");
  if (first / step > kFlipGuard) throw input_error("ap offset too large");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::ap;
  node->a = first;
  node->b = step;
  return IndexSet(std::move(node));
}

IndexSet IndexSet::squares() {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::squares;
  return IndexSet(std::move(node));
}

IndexSet IndexSet::naturals() { return ap(1, 1); }
IndexSet IndexSet::empty() { return finite({}); }

IndexSet IndexSet::operator|(const IndexSet& o) const {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::unite;
  node->left = root_;
  node->right = o.root_;
  return IndexSet(std::move(node));
}

IndexSet IndexSet::operator&(const IndexSet& o) const {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::intersect;
  node->left = root_;
  node->right = o.root_;
  return IndexSet(std::move(node));
}

IndexSet IndexSet::operator~() const {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::complement;
  node->left = root_;
  return IndexSet(std::move(node));
}

namespace {

bool tree_contains(const IndexSet::Node* node, std::uint64_t n);

}  // namespace

bool IndexSet::contains(std::uint64_t n) const {
  if (n == 0) return false;
  return tree_contains(root_.get(), n);
}

namespace {

bool tree_contains(const IndexSet::Node* node, std::uint64_t n) {
  using Kind = IndexSet::Node::Kind;
  switch (node->kind) {
    case Kind::finite:
      return node->elems.count(n) != 0;
    case Kind::ap:
      return n >= node->a && (n - node->a) % node->b == 0;
    case Kind::squares:
      return is_perfect_square(n);
    case Kind::unite:
      return tree_contains(node->left.get(), n) || tree_contains(node->right.get(), n);
    case Kind::intersect:
      return tree_contains(node->left.get(), n) && tree_contains(node->right.get(), n);
    case Kind::complement:
      return !tree_contains(node->left.get(), n);
  }
  return false;
}

using NF = IndexSet::NormalForm;

NF refine(const NF& nf, std::uint64_t modulus) {
  assert(modulus % nf.modulus == 0);
  if (modulus == nf.modulus) return nf;
  NF out;
  out.modulus = modulus;
  out.square_part.resize(modulus);
  out.periodic_part.resize(modulus);
  for (std::uint64_t r = 0; r < modulus; ++r) {
    out.square_part[r] = nf.square_part[r % nf.modulus];
    out.periodic_part[r] = nf.periodic_part[r % nf.modulus];
  }
  out.flips = nf.flips;
  return out;
}

bool periodic_eval(const NF& nf, std::uint64_t n) {
  std::uint64_t r = n % nf.modulus;
  return is_perfect_square(n) ? nf.square_part[r] != 0 : nf.periodic_part[r] != 0;
}

NF combine(const NF& x, const NF& y, bool is_union) {
  NF out;
  out.modulus = checked_lcm(x.modulus, y.modulus);
  NF xr = refine(x, out.modulus);
  NF yr = refine(y, out.modulus);
  out.square_part.resize(out.modulus);
  out.periodic_part.resize(out.modulus);
  for (std::uint64_t r = 0; r < out.modulus; ++r) {
    bool s = is_union ? (xr.square_part[r] || yr.square_part[r])
                      : (xr.square_part[r] && yr.square_part[r]);
    bool p = is_union ? (xr.periodic_part[r] || yr.periodic_part[r])
                      : (xr.periodic_part[r] && yr.periodic_part[r]);
    out.square_part[r] = s;
    out.periodic_part[r] = p;
  }
  // A flip can only arise where one of the operands was itself corrected.
  std::set<std::uint64_t> candidates = xr.flips;
  candidates.insert(yr.flips.begin(), yr.flips.end());
  for (std::uint64_t n : candidates) {
    bool actual = is_union ? (x.eval(n) || y.eval(n)) : (x.eval(n) && y.eval(n));
    if (actual != periodic_eval(out, n)) out.flips.insert(n);
  }
  if (out.flips.size() > kFlipGuard) throw input_error("index-set correction set too large");
  return out;
}

NF tree_nf(const IndexSet::Node* node) {
  using Kind = IndexSet::Node::Kind;
  NF nf;
  switch (node->kind) {
    case Kind::finite:
      nf.modulus = 1;
      nf.square_part = {0};
      nf.periodic_part = {0};
      nf.flips = node->elems;
      return nf;
    case Kind::ap: {
      nf.modulus = node->b;
      nf.square_part.assign(node->b, 0);
      nf.periodic_part.assign(node->b, 0);
      std::uint64_t r = node->a % node->b;
      nf.square_part[r] = 1;
      nf.periodic_part[r] = 1;
      // Class members below the first element are not in the progression.
      for (std::uint64_t n = node->a; n > node->b; ) {
        n -= node->b;
        nf.flips.insert(n);
      }
      return nf;
    }
    case Kind::squares:
      nf.modulus = 1;
      nf.square_part = {1};
      nf.periodic_part = {0};
      return nf;
    case Kind::unite:
      return combine(tree_nf(node->left.get()), tree_nf(node->right.get()), true);
    case Kind::intersect:
      return combine(tree_nf(node->left.get()), tree_nf(node->right.get()), false);
    case Kind::complement: {
      nf = tree_nf(node->left.get());
      for (auto& v : nf.square_part) v = !v;
      for (auto& v : nf.periodic_part) v = !v;
      return nf;
    }
  }
  return nf;
}

std::vector<char> squares_mod(std::uint64_t m) {
  std::vector<char> qr(m, 0);
  for (std::uint64_t x = 0; x < m; ++x) qr[(x * x) % m] = 1;
  return qr;
}

}  // namespace

bool IndexSet::NormalForm::eval(std::uint64_t n) const {
  bool base = is_perfect_square(n) ? square_part[n % modulus] != 0
                                   : periodic_part[n % modulus] != 0;
  return base != (flips.count(n) != 0);
}

IndexSet::NormalForm IndexSet::normal_form() const { return tree_nf(root_.get()); }

bool IndexSet::is_finite() const {
  NF nf = normal_form();
  for (auto v : nf.periodic_part)
    if (v) return false;
  std::vector<char> qr = squares_mod(nf.modulus);
  for (std::uint64_t r = 0; r < nf.modulus; ++r)
    if (nf.square_part[r] && qr[r]) return false;
  return true;
}

bool IndexSet::is_empty() const {
  if (!is_finite()) return false;
  return finite_elements().empty();
}

std::vector<std::uint64_t> IndexSet::finite_elements() const {
  NF nf = normal_form();
  for (auto v : nf.periodic_part)
    if (v) throw input_error("finite_elements() on an infinite index set");
  std::vector<char> qr = squares_mod(nf.modulus);
  for (std::uint64_t r = 0; r < nf.modulus; ++r)
    if (nf.square_part[r] && qr[r])
      throw input_error("finite_elements() on an infinite index set");
  // The periodic-square part is empty pointwise, so the set equals the flips.
  std::vector<std::uint64_t> out(nf.flips.begin(), nf.flips.end());
  return out;
}

Rational IndexSet::density() const {
  NF nf = normal_form();
  long kept = 0;
  for (auto v : nf.periodic_part) kept += v ? 1 : 0;
  return Rational(kept, static_cast<long>(nf.modulus));
}

std::string IndexSet::str() const {
  using Kind = Node::Kind;
  struct Render {
    static std::string go(const Node* n) {
      switch (n->kind) {
        case Kind::finite: {
          std::string s = "{";
          bool first = true;
          for (auto e : n->elems) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
          }
          return s + "}";
        }
        case Kind::ap:
          return "ap(" + std::to_string(n->a) + "," + std::to_string(n->b) + ")";
        case Kind::squares:
          return "squares";
        case Kind::unite:
          return "(" + go(n->left.get()) + " | " + go(n->right.get()) + ")";
        case Kind::intersect:
          return "(" + go(n->left.get()) + " & " + go(n->right.get()) + ")";
        case Kind::complement:
          return "!" + go(n->left.get());
      }
      return "";
    }
  };
  return Render::go(root_.get());
}

}  // namespace idens

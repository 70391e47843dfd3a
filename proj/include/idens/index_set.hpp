#ifndef IDENS_INDEX_SET_HPP
#define IDENS_INDEX_SET_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "idens/rational.hpp"

namespace idens {

// Symbolic subset of N = {1, 2, 3, ...} built from the primitives
//   finite lists, arithmetic progressions {a, a+b, a+2b, ...}, and
//   the perfect squares {n^2 : n >= 1},
// closed under union, intersection and complement (within N).
//
// Every expression reduces to the normal form
//   S = X (delta) F,   X = U_{r in A} (C_r ∩ Sq)  u  U_{r in B} (C_r \ Sq)
// where C_r is the residue class r mod M, Sq the squares, F an explicit
// finite flip set. Membership, finiteness, emptiness and exact asymptotic
// density are all decidable from this form: the periodic part contributes
// |B| / M, the square part is null, and C_r ∩ Sq is infinite exactly when
// r is a square modulo M (and empty otherwise).
class IndexSet {
 public:
  static IndexSet finite(std::vector<std::uint64_t> elems);
  static IndexSet ap(std::uint64_t first, std::uint64_t step);  // first, step >= 1
  static IndexSet squares();
  static IndexSet naturals();
  static IndexSet empty();

  IndexSet operator|(const IndexSet& o) const;
  IndexSet operator&(const IndexSet& o) const;
  IndexSet operator~() const;
  IndexSet operator-(const IndexSet& o) const { return *this & ~o; }

  // Decided by direct expression-tree evaluation (independent of the
  // normal form; the two routes are cross-checked in tests).
  bool contains(std::uint64_t n) const;

  bool is_finite() const;
  bool is_empty() const;

  // The elements, when is_finite(). Throws otherwise.
  std::vector<std::uint64_t> finite_elements() const;

  // Exact asymptotic density; exists for every expressible set.
  Rational density() const;

  std::string str() const;

  struct NormalForm {
    std::uint64_t modulus = 1;
    std::vector<char> square_part;    // A: residues kept on squares
    std::vector<char> periodic_part;  // B: residues kept off squares
    std::set<std::uint64_t> flips;    // F: explicit pointwise corrections
    bool eval(std::uint64_t n) const;
  };
  NormalForm normal_form() const;

  struct Node;

 private:
  explicit IndexSet(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

bool is_perfect_square(std::uint64_t n);

inline Rational asymptotic_density(const IndexSet& s) { return s.density(); }

}  // namespace idens

#endif

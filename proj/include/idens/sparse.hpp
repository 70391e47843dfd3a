#ifndef IDENS_SPARSE_HPP
#define IDENS_SPARSE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "idens/i_density.hpp"

namespace idens {

enum class Side { left, right };

// Decidable trichotomy for finite interval unions: a gap adjacent to p on
// the given side forces one-sided density 0 (hence sparse); an interval
// adjacent on that side forces ratio 1 on every small window (hence not
// sparse for any eps < 1).
bool sparse_check_interval_set(const IntervalSet& e, const Rational& p, Side side);

// Interval adjacency of a gap family at any rational point, decided by
// locating the point against the level structure. At 0 neither side is
// interval-adjacent, but the right side is not gap-adjacent either.
struct GapAdjacency {
  bool right_interval = false;
  bool left_interval = false;
  bool right_gap = false;  // some interval-free (p, p+delta)
  bool left_gap = false;
};
GapAdjacency gap_set_adjacency(const GapSet& g, const Rational& p);

// Randomized falsifier for membership of A in the I-sparse family at x.
// A witness is a measurable B with certified I-d(x,B) < 1 whose union with
// A has certified upper I-density 1 at x. The verdicts are deliberately
// asymmetric: "falsified" is a proof of non-membership, "unfalsified" is
// only a statement about the search budget, and the density-zero verdict
// is the one sufficient condition that certifies membership outright.
struct FalsifyResult {
  std::optional<IntervalSet> witness;
  int trials_used = 0;
  std::string verdict;  // "falsified" | "unfalsified" | "certified-sparse-density-zero"

  bool falsified() const { return witness.has_value(); }
};
// gate_density_zero short-circuits with the certified verdict; suites pass
// false to exercise the witness search on sets the gate would admit.
FalsifyResult i_sparse_falsify(const SetSource& a, const Rational& x, Ideal ideal,
                               int trials, std::uint64_t seed,
                               bool gate_density_zero = true);

// Largest representable set of points of A whose complement is one-sidedly
// null on both sides: the canonical interior. measure(A \ result) = 0.
IntervalSet sparse_interior(const IntervalSet& a);

}  // namespace idens

#endif

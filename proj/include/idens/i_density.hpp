#ifndef IDENS_I_DENSITY_HPP
#define IDENS_I_DENSITY_HPP

#include <string>
#include <vector>

#include "idens/bounds.hpp"
#include "idens/classical_density.hpp"
#include "idens/gap_set.hpp"
#include "idens/step_sequence.hpp"
#include "idens/window_family.hpp"

namespace idens {

// Measure-ratio sequence x_n = lambda(E ∩ J_n) / lambda(J_n) of a set
// along a window family, bridged into the ideal-sequences machinery.
//
// The prefix holds per-index enclosures (exact single points for interval
// sources; for gap sources they are the exact ratios of the truncation).
// `tail` encloses the ratio of the *full* source set on every
// non-exceptional index from `tail_valid_from` on. The two step-sequence
// approximations sandwich the true sequence outside a finite index block,
// which is invisible to any admissible ideal, so
//   [i_limsup(lower_approx), i_limsup(upper_approx)]
// encloses the I-limsup of the true ratio sequence (dually for I-liminf).
struct RatioSequence {
  std::vector<Bounds> prefix;
  Bounds tail;
  mpz_class tail_valid_from;
  StepSequence lower_approx;
  StepSequence upper_approx;
};

RatioSequence ratio_sequence(const IntervalSet& e, const WindowFamily& w, long depth);
RatioSequence ratio_sequence(const GapSet& g, long truncation, const WindowFamily& w,
                             long depth);
RatioSequence ratio_sequence(const SetSource& e, const WindowFamily& w, long depth);

Bounds i_limsup_enclosure(const RatioSequence& rs, Ideal ideal);
Bounds i_liminf_enclosure(const RatioSequence& rs, Ideal ideal);

// Which side of an enclosure is certified against the sup/inf over *all*
// valid window families (the computable families only ever bound the sup
// from below and the inf from above).
enum class CertSide { two_sided, lower_certified, upper_certified };

std::string to_string(CertSide side);

struct DirectedBounds {
  Bounds bounds;
  CertSide side;
};

struct FamilyEnclosure {
  std::string family;
  Bounds limsup;
  Bounds liminf;
};

// upper encloses I-d^-(p, E), lower encloses I-d_-(p, E). For interval
// sets the adjacency argument makes both exact (two_sided); for gap sets
// the reported sides are certified one-sidedly as tagged.
struct IDensityEnclosure {
  DirectedBounds upper;
  DirectedBounds lower;
  std::vector<FamilyEnclosure> per_family;
};

IDensityEnclosure i_density_enclosure(const SetSource& e, const Rational& p, Ideal ideal,
                                      const std::vector<WindowFamily>& families,
                                      long depth);

// Exact, ideal-independent classification for finite interval unions:
// every valid family's ratios converge on a filter set to the value
// dictated by adjacency. boundary_half is unreachable on canonical forms
// and kept for interface completeness.
enum class IDensityClass {
  full_density,
  dispersion,
  right_full_left_zero,
  right_zero_left_full,
  boundary_half,
};

IDensityClass classify_point_i_density(const IntervalSet& e, const Rational& p, Ideal ideal);

std::string to_string(IDensityClass c);

}  // namespace idens

#endif

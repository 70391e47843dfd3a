#ifndef IDENS_CERTIFICATE_HPP
#define IDENS_CERTIFICATE_HPP

#include <string>
#include <vector>

#include "idens/gap_set.hpp"
#include "idens/interval_set.hpp"
#include "idens/rational.hpp"

namespace idens {

// Machine-checkable proof that the gap family U_n (c^{-n^2-1}, c^{-n^2})
// is sparse at 0 on the right for a given epsilon: inside (0, h) every
// region where the accumulation ratio r(y) = lambda(E ∩ (0,y)) / y reaches
// epsilon is confined to a per-level zone of multiplicative span at most
// beta_star, with beta_star * h < 1. Any interval (alpha, beta) in (0, h)
// with alpha < h * beta has beta/alpha > 1/h > beta_star, so it cannot fit
// inside one zone and therefore contains a point y with r(y) < epsilon.
//
// Levels up to `depth` carry zones computed from exact truncated measures
// plus the containment tail bound; all deeper levels are covered by the
// tail constant k0 (T_n <= k0 * b_n for every n), whose validity reduces
// to the single inequality k0 * (1 - c^{-3}) >= 1 - 1/c.
//
// When even the symbolic peak bound 1 - 1/c + k0 * c^{-3} stays below
// epsilon there are no bad regions at all and the certificate degenerates
// to the all_good pattern with h = 1.
struct SparsenessCertificate {
  int version = 1;
  Rational c;
  Rational point;     // always 0
  std::string side;   // always "right"
  Rational epsilon;
  long depth = 0;        // N: deepest exactly evaluated level
  long first_level = 0;  // n1: first level of the banded pattern
  Rational h;
  Rational beta_star;
  Rational k0;
  bool all_good = false;

  struct Band {
    long level;
    Rational zone_lo;  // inside interval `level`, at or below the eps-crossing
    Rational zone_hi;  // in the gap above b_level, at or above the eps-crossing
  };
  std::vector<Band> bands;            // banded pattern: levels n1..depth
  Rational bottom_zone_hi;            // claimed top of the level-(depth+1) zone
  std::vector<Interval> good_regions; // verified-good intervals between zones
};

// Builds a certificate for the given epsilon > 0 at analysis depth N.
// Throws input_error when the depth cannot establish the banded pattern
// (the message names the required depth).
SparsenessCertificate sparse_certify_right(const GapSet& g, const Rational& eps,
                                           long depth);

// Re-derives every claimed inequality from scratch with exact arithmetic,
// using only truncations, interval intersection and measure. Shares no
// state with the certifier.
struct VerifyResult {
  bool accepted = false;
  std::string first_failure;
};
VerifyResult verify_certificate(const SparsenessCertificate& cert);

std::string serialize(const SparsenessCertificate& cert);
SparsenessCertificate parse_certificate(const std::string& text);

}  // namespace idens

#endif

#include "idens/i_density.hpp"

#include <cassert>

namespace idens {

namespace {

Rational clamp01(const Rational& v) {
  if (v < Rational(0)) return Rational(0);
  if (v > Rational(1)) return Rational(1);
  return v;
}

// Assembles the step-sequence bridge: exact prefix values as exceptions,
// the tail enclosure as the single base class, the family's exception set
// (if any) as the override carrying the fixed-window ratio enclosure.
RatioSequence assemble(std::vector<Bounds> prefix, Bounds tail, mpz_class valid_from,
                       const WindowFamily& w, std::optional<Bounds> exception_ratio) {
  std::map<std::uint64_t, Rational> ex_lo;
  std::map<std::uint64_t, Rational> ex_hi;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    ex_lo[i + 1] = prefix[i].lo;
    ex_hi[i + 1] = prefix[i].hi;
  }
  std::optional<StepSequence::Override> ov_lo;
  std::optional<StepSequence::Override> ov_hi;
  if (w.exception_set() && exception_ratio) {
    ov_lo = StepSequence::Override{*w.exception_set(), exception_ratio->lo};
    ov_hi = StepSequence::Override{*w.exception_set(), exception_ratio->hi};
  }
  StepSequence lower(1, {tail.lo}, std::move(ex_lo), std::move(ov_lo));
  StepSequence upper(1, {tail.hi}, std::move(ex_hi), std::move(ov_hi));
  return {std::move(prefix), std::move(tail), std::move(valid_from),
          std::move(lower), std::move(upper)};
}

// Distance from p to the nearest structural endpoint of e (excluding p
// itself); nullopt when there is none. Windows shorter than this radius
// see only the adjacency structure of p.
std::optional<Rational> stability_radius(const IntervalSet& e, const Rational& p) {
  std::optional<Rational> best;
  for (const auto& iv : e.intervals()) {
    for (const Rational& endpoint : {iv.lo, iv.hi}) {
      if (endpoint == p) continue;
      Rational d = abs(endpoint - p);
      if (!best || d < *best) best = d;
    }
  }
  return best;
}

// First index whose base window fits inside the stability radius (explicit
// prefix windows are arbitrary and always sit below it).
mpz_class stability_index(const WindowFamily& w, const std::optional<Rational>& radius) {
  mpz_class threshold = static_cast<long>(w.prefix_length()) + 1;
  if (!radius) return threshold;
  if (w.tail_rule_kind() == WindowFamily::Kind::right_geometric) {
    long n = 1;
    while (pow(w.geometric_ratio(), -(n * n)) > *radius) ++n;
    if (threshold < n) threshold = n;
    return threshold;
  }
  // Half-width 1/(2n+2) <= radius once n >= 1/(2 radius) - 1.
  mpz_class n = ceil_int(Rational(1) / (Rational(2) * *radius) - Rational(1));
  if (threshold < n) threshold = n;
  return threshold;
}

}  // namespace

RatioSequence ratio_sequence(const IntervalSet& e, const WindowFamily& w, long depth) {
  if (depth < 1) throw input_error("ratio sequence depth must be >= 1");
  std::vector<Bounds> prefix;
  prefix.reserve(static_cast<std::size_t>(depth));
  for (long n = 1; n <= depth; ++n) {
    Rational v = window_ratio(e, w.window(static_cast<std::uint64_t>(n)));
    prefix.push_back({v, v});
  }

  const Rational& p = w.center();
  bool right = right_interval_adjacent(e, p);
  bool left = left_interval_adjacent(e, p);
  Rational t;
  if (w.tail_rule_kind() == WindowFamily::Kind::right_geometric) {
    t = right ? Rational(1) : Rational(0);
  } else {
    // Symmetric windows see each adjacent side with weight 1/2.
    t = Rational(right ? 1 : 0, 2) + Rational(left ? 1 : 0, 2);
  }
  mpz_class valid_from = stability_index(w, stability_radius(e, p));
  if (valid_from <= depth) valid_from = depth + 1;

  std::optional<Bounds> ex_ratio;
  if (w.exception_set()) {
    Rational r = window_ratio(e, *w.exception_window());
    ex_ratio = Bounds{r, r};
  }
  return assemble(std::move(prefix), Bounds{t, t}, std::move(valid_from), w,
                  std::move(ex_ratio));
}

RatioSequence ratio_sequence(const GapSet& g, long truncation, const WindowFamily& w,
                             long depth) {
  if (depth < 1) throw input_error("ratio sequence depth must be >= 1");
  if (truncation < 1) throw input_error("gap source needs truncation depth >= 1");
  IntervalSet trunc = g.truncate(truncation);
  std::vector<Bounds> prefix;
  prefix.reserve(static_cast<std::size_t>(depth));
  for (long n = 1; n <= depth; ++n) {
    Rational v = window_ratio(trunc, w.window(static_cast<std::uint64_t>(n)));
    prefix.push_back({v, v});
  }

  // The tail encloses the ratio of the full set. Along the matching
  // right-geometric family about 0 the windows are [0, b_n], whose ratios
  // are the peak values: 1 - 1/c < r(b_n) < 1 - 1/c + c^{-(2n+1)}.
  Bounds tail(Rational(0), Rational(1));
  const Rational& c = g.ratio();
  if (w.kind() == WindowFamily::Kind::right_geometric && w.center().is_zero() &&
      w.geometric_ratio() == c) {
    Rational floor = Rational(1) - Rational(1) / c;
    tail = Bounds(floor, floor + pow(c, -(2 * depth + 3)));
  }

  std::optional<Bounds> ex_ratio;
  if (w.exception_set()) {
    const Interval& fix = *w.exception_window();
    Rational known = measure(intersect_window(trunc, fix));
    Rational len = fix.length();
    ex_ratio = Bounds{clamp01(known / len),
                      clamp01((known + g.tail_measure_bound(truncation)) / len)};
  }
  return assemble(std::move(prefix), std::move(tail), mpz_class(depth + 1), w,
                  std::move(ex_ratio));
}

RatioSequence ratio_sequence(const SetSource& e, const WindowFamily& w, long depth) {
  if (const auto* ivs = std::get_if<IntervalSet>(&e)) return ratio_sequence(*ivs, w, depth);
  return ratio_sequence(std::get<GapSet>(e), depth, w, depth);
}

Bounds i_limsup_enclosure(const RatioSequence& rs, Ideal ideal) {
  return {i_limsup(rs.lower_approx, ideal), i_limsup(rs.upper_approx, ideal)};
}

Bounds i_liminf_enclosure(const RatioSequence& rs, Ideal ideal) {
  return {i_liminf(rs.lower_approx, ideal), i_liminf(rs.upper_approx, ideal)};
}

std::string to_string(CertSide side) {
  switch (side) {
    case CertSide::two_sided: return "two-sided";
    case CertSide::lower_certified: return ">=-certified";
    case CertSide::upper_certified: return "<=-certified";
  }
  return "";
}

IDensityEnclosure i_density_enclosure(const SetSource& e, const Rational& p, Ideal ideal,
                                      const std::vector<WindowFamily>& families,
                                      long depth) {
  if (families.empty()) throw input_error("i-density enclosure needs at least one family");
  for (const auto& w : families) {
    if (w.center() != p)
      throw input_error("window family center " + w.center().str() +
                        " does not match the evaluation point " + p.str());
    if (!validate_window_family(w, ideal))
      throw input_error("window family is not valid for the ideal: " + w.describe());
  }

  IDensityEnclosure out;
  std::optional<Bounds> sup_enc;
  std::optional<Bounds> inf_enc;
  for (const auto& w : families) {
    RatioSequence rs = ratio_sequence(e, w, depth);
    Bounds up = i_limsup_enclosure(rs, ideal);
    Bounds down = i_liminf_enclosure(rs, ideal);
    out.per_family.push_back({w.describe(), up, down});
    if (!sup_enc) {
      sup_enc = up;
      inf_enc = down;
    } else {
      // Max of I-limsups for the sup side, min of I-liminfs for the inf side.
      sup_enc = Bounds{max(sup_enc->lo, up.lo), max(sup_enc->hi, up.hi)};
      inf_enc = Bounds{min(inf_enc->lo, down.lo), min(inf_enc->hi, down.hi)};
    }
  }

  if (const auto* ivs = std::get_if<IntervalSet>(&e)) {
    // Adjacency closes both quantities exactly: one-sided families drive
    // the sup to 1 whenever some side carries an interval, and to 0 when
    // both sides carry gaps; the inf is 1 only at interior points.
    bool right = right_interval_adjacent(*ivs, p);
    bool left = left_interval_adjacent(*ivs, p);
    Rational d_upper = (right || left) ? Rational(1) : Rational(0);
    Rational d_lower = (right && left) ? Rational(1) : Rational(0);
    assert(sup_enc->lo <= d_upper);
    assert(inf_enc->hi >= d_lower);
    out.upper = {Bounds{d_upper, d_upper}, CertSide::two_sided};
    out.lower = {Bounds{d_lower, d_lower}, CertSide::two_sided};
    return out;
  }

  // Gap sources: the target quantities are a sup/inf over all valid
  // families, so computed families certify only one side each.
  out.upper = {Bounds{sup_enc->lo, Rational(1)}, CertSide::lower_certified};
  out.lower = {Bounds{Rational(0), inf_enc->hi}, CertSide::upper_certified};
  return out;
}

IDensityClass classify_point_i_density(const IntervalSet& e, const Rational& p,
                                       Ideal ideal) {
  (void)ideal;  // classification is ideal-independent on this class
  bool right = right_interval_adjacent(e, p);
  bool left = left_interval_adjacent(e, p);
  if (right && left) return IDensityClass::full_density;
  if (right) return IDensityClass::right_full_left_zero;
  if (left) return IDensityClass::right_zero_left_full;
  return IDensityClass::dispersion;
}

std::string to_string(IDensityClass c) {
  switch (c) {
    case IDensityClass::full_density: return "i-density-1";
    case IDensityClass::dispersion: return "i-density-0";
    case IDensityClass::right_full_left_zero: return "right-1/left-0";
    case IDensityClass::right_zero_left_full: return "right-0/left-1";
    case IDensityClass::boundary_half: return "boundary-half";
  }
  return "";
}

}  // namespace idens

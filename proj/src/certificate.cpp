#include "idens/certificate.hpp"

#include <sstream>

namespace idens {

namespace {

// Margin keeping every endpoint comparison strict; folded into the
// threshold constant as (1 + mu)/(1 - mu) <= 1025/1023.
const long kMarginDen = 1024;

Rational margin_up() { return Rational(kMarginDen + 1, kMarginDen); }    // 1 + mu
Rational margin_down() { return Rational(kMarginDen - 1, kMarginDen); }  // 1 - mu

Rational tail_constant(const Rational& c) {
  // k0 = c^2 / (c^2 + c + 1), the least constant with
  // k0 * (1 - c^{-3}) >= 1 - 1/c; then T_n <= k0 * b_n for every level n.
  Rational c2 = c * c;
  return c2 / (c2 + c + Rational(1));
}

Rational symbolic_peak_bound(const Rational& c, const Rational& k0) {
  // r(b_n) = 1 - 1/c + T_{n+1}/b_n <= 1 - 1/c + k0 * c^{-(2n+1)}, n >= 1.
  return Rational(1) - Rational(1) / c + k0 * pow(c, -3);
}

// Threshold constant for the banded pattern: KM = (k0 + 1) * 1025/1023
// absorbs both the tail slack (T-hi <= (k0+1) b) and the strictness margin.
Rational threshold_constant(const Rational& k0) {
  return (k0 + Rational(1)) * Rational(kMarginDen + 1, kMarginDen - 1);
}

}  // namespace

SparsenessCertificate sparse_certify_right(const GapSet& g, const Rational& eps,
                                           long depth) {
  if (eps <= Rational(0)) throw input_error("sparseness certificate requires eps > 0");
  if (depth < 2) throw input_error("sparseness certificate requires depth >= 2");

  SparsenessCertificate cert;
  cert.c = g.ratio();
  cert.point = Rational(0);
  cert.side = "right";
  cert.epsilon = eps;
  cert.depth = depth;
  cert.k0 = tail_constant(cert.c);

  if (symbolic_peak_bound(cert.c, cert.k0) < eps) {
    // No level's ratio can reach eps anywhere: the whole half-line is good.
    cert.all_good = true;
    cert.first_level = 1;
    cert.h = Rational(1);
    cert.beta_star = cert.c;
    cert.bottom_zone_hi = Rational(0);
    cert.good_regions.push_back({g.tail_measure_bound(depth), cert.h});
    return cert;
  }

  // Banded pattern; eps < 1 here because the peak bound itself is < 1.
  Rational km = threshold_constant(cert.k0);
  long n1 = 2;
  while (!(km / eps < pow(cert.c, 2 * n1 - 2) && km * pow(cert.c, -2 * n1) < eps)) {
    ++n1;
  }
  if (depth < n1)
    throw input_error("depth " + std::to_string(depth) +
                      " cannot establish the banded sparseness pattern; rerun with "
                      "depth >= " + std::to_string(n1));
  cert.first_level = n1;

  Rational tail = g.tail_measure_bound(depth);
  auto t_hi = [&](long k) {  // upper bound on T_k = sum of levels >= k
    return g.truncated_measure(k, depth) + tail;
  };

  Rational one(1);
  for (long n = n1; n <= depth; ++n) {
    Rational a = g.lower_break(n);
    Rational zone_lo = (a - t_hi(n + 1)) / (one - eps) * margin_down();
    Rational zone_hi = t_hi(n) / eps * margin_up();
    if (!(Rational(0) < zone_lo && zone_lo < zone_hi))
      throw input_error("epsilon sits too close to the peak ratios at depth " +
                        std::to_string(depth) + "; increase depth or epsilon");
    cert.bands.push_back({n, zone_lo, zone_hi});
  }
  cert.bottom_zone_hi = tail / eps * margin_up();

  // Uniform span bound for all levels beyond depth, from the k0 algebra.
  Rational k0p1 = cert.k0 + one;
  Rational beta_tail =
      (one - eps) * k0p1 * cert.c / (eps * (one - k0p1 * pow(cert.c, -2 * n1)));
  cert.beta_star = beta_tail;
  for (const auto& band : cert.bands)
    cert.beta_star = max(cert.beta_star, band.zone_hi / band.zone_lo);

  cert.h = min(g.upper_break(n1), cert.bands.front().zone_hi);
  cert.h = min(cert.h, one / (Rational(2) * cert.beta_star));

  // Good regions tile the space between consecutive zones.
  for (std::size_t i = 0; i < cert.bands.size(); ++i) {
    Rational lo = i + 1 < cert.bands.size() ? cert.bands[i + 1].zone_hi
                                            : cert.bottom_zone_hi;
    if (!(lo < cert.bands[i].zone_lo))
      throw input_error("zones merged at level " + std::to_string(cert.bands[i].level) +
                        "; increase depth or epsilon");
    cert.good_regions.push_back({lo, cert.bands[i].zone_lo});
  }
  return cert;
}

namespace {

struct Checker {
  const SparsenessCertificate& cert;
  std::string failure;

  bool require(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
    return ok;
  }
};

}  // namespace

VerifyResult verify_certificate(const SparsenessCertificate& cert) {
  Checker ck{cert, {}};
  Rational one(1);

  // Structural facts.
  bool base = ck.require(cert.version == 1, "unsupported certificate version") &&
              ck.require(cert.side == "right", "side must be 'right'") &&
              ck.require(cert.point.is_zero(), "point must be 0") &&
              ck.require(cert.c > one, "gap parameter must satisfy c > 1") &&
              ck.require(cert.epsilon > Rational(0), "epsilon must be positive") &&
              ck.require(cert.h > Rational(0), "h must be positive") &&
              ck.require(cert.depth >= 2, "depth must be >= 2");
  if (!base) return {false, ck.failure};

  const Rational& c = cert.c;
  const Rational& eps = cert.epsilon;
  const Rational& k0 = cert.k0;

  // Tail constant: with b_{m+1} <= c^{-3} b_m (m >= 1) the level measures
  // are dominated by a geometric series, so T_n <= k0 b_n for all n iff
  // k0 (1 - c^{-3}) >= 1 - 1/c.
  if (!(ck.require(k0 > Rational(0), "tail constant must be positive") &&
        ck.require(k0 * (one - pow(c, -3)) >= one - one / c,
                   "tail constant too small to dominate the level sums") &&
        ck.require(k0 < c * c, "tail constant out of range")))
    return {false, ck.failure};

  if (cert.all_good) {
    // Every peak ratio obeys r(b_n) <= 1 - 1/c + k0 c^{-(2n+1)}; with the
    // n = 1 bound below eps, r < eps on all of (0, infinity).
    if (!ck.require(symbolic_peak_bound(c, k0) < eps,
                    "all-good pattern but the peak bound reaches epsilon"))
      return {false, ck.failure};
    if (!ck.require(cert.bands.empty(), "all-good pattern must not carry bands"))
      return {false, ck.failure};
    for (const auto& region : cert.good_regions)
      if (!ck.require(region.lo < region.hi && region.hi <= cert.h,
                      "malformed good region"))
        return {false, ck.failure};
    return {true, {}};
  }

  // Banded pattern.
  GapSet g(c);
  if (!(ck.require(eps < one, "banded pattern requires eps < 1") &&
        ck.require(cert.first_level >= 2, "banded pattern starts at level >= 2") &&
        ck.require(cert.depth >= cert.first_level, "depth below the first level") &&
        ck.require(cert.bands.size() ==
                       static_cast<std::size_t>(cert.depth - cert.first_level + 1),
                   "band list does not cover first-level..depth")))
    return {false, ck.failure};
  for (std::size_t i = 0; i < cert.bands.size(); ++i)
    if (!ck.require(cert.bands[i].level == cert.first_level + static_cast<long>(i),
                    "band levels must be consecutive"))
      return {false, ck.failure};

  // Threshold inequalities at the first level; both sides are monotone in
  // the level, so they persist for every deeper level.
  long n1 = cert.first_level;
  Rational km = threshold_constant(k0);
  if (!(ck.require(km / eps < pow(c, 2 * n1 - 2),
                   "first level too shallow: zones may merge across a gap") &&
        ck.require(km * pow(c, -2 * n1) < eps,
                   "first level too shallow: valleys may not drop below epsilon")))
    return {false, ck.failure};

  // Uniform tail span: for n > depth the bad region at level n lies within
  // [(a_n - (k0+1) b_{n+1})/(1-eps), (k0+1) b_n / eps], whose span is at
  // most (1-eps)(k0+1)c / (eps (1 - (k0+1) c^{-2 n1})).
  Rational k0p1 = k0 + one;
  Rational beta_tail =
      (one - eps) * k0p1 * c / (eps * (one - k0p1 * pow(c, -2 * n1)));
  if (!ck.require(cert.beta_star >= beta_tail,
                  "span bound below the uniform tail requirement"))
    return {false, ck.failure};

  if (!(ck.require(cert.beta_star * cert.h < one, "beta_star * h must be < 1") &&
        ck.require(cert.h <= g.upper_break(n1), "h above the first analyzed level") &&
        ck.require(cert.h <= cert.bands.front().zone_hi,
                   "h above the top zone: coverage gap at the top")))
    return {false, ck.failure};

  // Exact re-evaluation of every zone, from set-algebra primitives only.
  IntervalSet trunc = g.truncate(cert.depth);
  Rational tail = g.tail_measure_bound(cert.depth);
  auto known_measure = [&](const Rational& y) {
    return measure(intersect_window(trunc, {Rational(0), y}));
  };
  auto t_hi = [&](long k) {
    Rational from_level = k <= cert.depth ? g.upper_break(k) : tail;
    return known_measure(from_level) + tail;
  };
  auto ratio_hi = [&](const Rational& y) { return (known_measure(y) + tail) / y; };

  for (const auto& band : cert.bands) {
    long n = band.level;
    Rational a = g.lower_break(n);
    if (!(ck.require(band.zone_lo > Rational(0), "zone must stay above 0") &&
          ck.require(band.zone_lo < band.zone_hi, "inverted zone") &&
          ck.require(band.zone_lo <= (a - t_hi(n + 1)) / (one - eps),
                     "zone floor above the epsilon crossing") &&
          ck.require(band.zone_hi >= t_hi(n) / eps,
                     "zone ceiling below the epsilon crossing") &&
          ck.require(band.zone_hi / band.zone_lo <= cert.beta_star,
                     "zone span exceeds beta_star")))
      return {false, ck.failure};
  }

  if (!ck.require(cert.bottom_zone_hi >= tail / eps,
                  "bottom zone ceiling below the tail crossing"))
    return {false, ck.failure};

  // Good regions must tile the space between consecutive zones and be
  // verified good: r is piecewise monotone between breakpoints, so its
  // maximum over a region is attained at an endpoint or at a contained
  // breakpoint, and each candidate is re-checked exactly.
  if (!ck.require(cert.good_regions.size() == cert.bands.size(),
                  "one good region per band required"))
    return {false, ck.failure};
  for (std::size_t i = 0; i < cert.bands.size(); ++i) {
    const auto& region = cert.good_regions[i];
    Rational expected_lo = i + 1 < cert.bands.size() ? cert.bands[i + 1].zone_hi
                                                     : cert.bottom_zone_hi;
    if (!(ck.require(region.lo == expected_lo, "good region detached from the zone below") &&
          ck.require(region.hi == cert.bands[i].zone_lo,
                     "good region detached from the zone above") &&
          ck.require(region.lo < region.hi, "empty good region")))
      return {false, ck.failure};
    std::vector<Rational> candidates{region.lo, region.hi};
    for (long k = cert.first_level; k <= cert.depth + 1; ++k) {
      for (const Rational& breakpoint : {g.lower_break(k), g.upper_break(k)})
        if (region.lo < breakpoint && breakpoint < region.hi)
          candidates.push_back(breakpoint);
    }
    for (const auto& y : candidates)
      if (!ck.require(ratio_hi(y) < eps, "good region reaches epsilon at " + y.str()))
        return {false, ck.failure};
  }

  return {true, {}};
}

std::string serialize(const SparsenessCertificate& cert) {
  std::ostringstream out;
  out << "idens-sparse-certificate " << cert.version << "\n";
  out << "c = " << cert.c << "\n";
  out << "point = " << cert.point << "\n";
  out << "side = " << cert.side << "\n";
  out << "epsilon = " << cert.epsilon << "\n";
  out << "depth = " << cert.depth << "\n";
  out << "first-level = " << cert.first_level << "\n";
  out << "pattern = " << (cert.all_good ? "all-good" : "banded") << "\n";
  out << "k0 = " << cert.k0 << "\n";
  out << "beta-star = " << cert.beta_star << "\n";
  out << "h = " << cert.h << "\n";
  out << "bottom-zone-hi = " << cert.bottom_zone_hi << "\n";
  for (const auto& band : cert.bands)
    out << "band = " << band.level << " " << band.zone_lo << " " << band.zone_hi << "\n";
  for (const auto& region : cert.good_regions)
    out << "good-region = " << region.lo << " " << region.hi << "\n";
  out << "end\n";
  return out.str();
}

SparsenessCertificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what, const std::string& expected) -> parse_error {
    return parse_error(what, lineno, expected);
  };

  if (!std::getline(in, line)) throw fail("empty certificate", "header");
  ++lineno;
  std::istringstream header(line);
  std::string magic;
  int version = 0;
  header >> magic >> version;
  if (magic != "idens-sparse-certificate")
    throw fail("not a sparseness certificate", "idens-sparse-certificate header");

  SparsenessCertificate cert;
  cert.version = version;
  bool saw_end = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line == "end") {
      saw_end = true;
      break;
    }
    auto eq = line.find(" = ");
    if (eq == std::string::npos) throw fail("malformed line", "'key = value'");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 3);
    std::istringstream vs(value);
    if (key == "c") cert.c = Rational::from_string(value);
    else if (key == "point") cert.point = Rational::from_string(value);
    else if (key == "side") cert.side = value;
    else if (key == "epsilon") cert.epsilon = Rational::from_string(value);
    else if (key == "depth") vs >> cert.depth;
    else if (key == "first-level") vs >> cert.first_level;
    else if (key == "pattern") cert.all_good = (value == "all-good");
    else if (key == "k0") cert.k0 = Rational::from_string(value);
    else if (key == "beta-star") cert.beta_star = Rational::from_string(value);
    else if (key == "h") cert.h = Rational::from_string(value);
    else if (key == "bottom-zone-hi") cert.bottom_zone_hi = Rational::from_string(value);
    else if (key == "band") {
      SparsenessCertificate::Band band;
      std::string lo, hi;
      vs >> band.level >> lo >> hi;
      if (vs.fail()) throw fail("malformed band", "'band = level lo hi'");
      band.zone_lo = Rational::from_string(lo);
      band.zone_hi = Rational::from_string(hi);
      cert.bands.push_back(std::move(band));
    } else if (key == "good-region") {
      std::string lo, hi;
      vs >> lo >> hi;
      if (vs.fail()) throw fail("malformed good region", "'good-region = lo hi'");
      cert.good_regions.push_back({Rational::from_string(lo), Rational::from_string(hi)});
    } else {
      throw fail("unknown certificate field '" + key + "'", "a known field");
    }
  }
  if (!saw_end) throw fail("certificate truncated", "'end'");
  return cert;
}

}  // namespace idens

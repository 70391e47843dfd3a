#include "idens/suites.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "idens/i_density.hpp"
#include "idens/parser.hpp"
#include "idens/rng.hpp"
#include "idens/sparse.hpp"

namespace idens {

namespace {

class Tallies {
 public:
  explicit Tallies(const std::vector<std::string>& names) {
    for (const auto& n : names) checks_.push_back({n, 0, 0, {}});
  }

  void record(const std::string& name, bool ok, const std::string& note = "") {
    for (auto& c : checks_) {
      if (c.name != name) continue;
      if (ok) {
        ++c.pass;
      } else {
        ++c.fail;
        if (c.first_failure.empty()) c.first_failure = note.empty() ? "unnamed instance" : note;
      }
      return;
    }
    checks_.push_back({name, ok ? 1L : 0L, ok ? 0L : 1L, ok ? std::string{} : note});
  }

  void merge(const Tallies& other) {
    for (const auto& oc : other.checks_) {
      bool found = false;
      for (auto& c : checks_) {
        if (c.name != oc.name) continue;
        c.pass += oc.pass;
        c.fail += oc.fail;
        if (c.first_failure.empty()) c.first_failure = oc.first_failure;
        found = true;
        break;
      }
      if (!found) checks_.push_back(oc);
    }
  }

  std::vector<CheckTally> take() { return std::move(checks_); }

 private:
  std::vector<CheckTally> checks_;
};

Rational small_rational(Rng& rng) {
  return Rational(static_cast<long>(rng.below(41)) - 20,
                  static_cast<long>(rng.below(5)) + 1);
}

IntervalSet random_interval_set(Rng& rng) {
  std::vector<Interval> ivs;
  std::size_t k = rng.below(5);
  for (std::size_t i = 0; i < k; ++i) {
    Rational a = small_rational(rng);
    Rational b = small_rational(rng);
    if (b < a) std::swap(a, b);
    ivs.push_back({a, b});
  }
  return IntervalSet::normalize(std::move(ivs));
}

// Progression steps divide 10^4, so the prefix-count deviation at 10^4 is
// carried by the squares alone (at most 100 terms, i.e. exactly 1/100).
IndexSet random_index_expression(Rng& rng, int depth) {
  static const std::uint64_t steps[] = {2, 4, 5, 8, 10, 16, 20, 25};
  if (depth == 0) {
    if (rng.below(3) == 0) return IndexSet::squares();
    std::uint64_t step = steps[rng.below(8)];
    return IndexSet::ap(rng.below(step) + 1, step);
  }
  switch (rng.below(3)) {
    case 0: return random_index_expression(rng, depth - 1) | random_index_expression(rng, depth - 1);
    case 1: return random_index_expression(rng, depth - 1) & random_index_expression(rng, depth - 1);
    default: return ~random_index_expression(rng, depth - 1);
  }
}

struct GeneratedSeq {
  StepSequence seq;
  bool has_override = false;
  bool override_infinite = false;
  Rational override_value;
};

// Override sets come from a catalog with generator-side knowledge of their
// infinitude, feeding the classical-limsup oracle.
GeneratedSeq random_step_sequence(Rng& rng, bool allow_override) {
  std::uint64_t m = rng.below(6) + 1;
  std::vector<Rational> cv;
  for (std::uint64_t r = 0; r < m; ++r) cv.push_back(small_rational(rng));
  std::map<std::uint64_t, Rational> ex;
  std::uint64_t nex = rng.below(4);
  for (std::uint64_t i = 0; i < nex; ++i) ex[rng.below(40) + 1] = small_rational(rng);

  if (allow_override && rng.below(3) == 0) {
    bool infinite = true;
    IndexSet s = IndexSet::squares();
    switch (rng.below(4)) {
      case 0: break;
      case 1: s = IndexSet::squares() & IndexSet::ap(1, 4); break;  // odd squares
      case 2: s = IndexSet::squares() & IndexSet::ap(4, 4); break;  // even squares
      default: s = IndexSet::finite({2, 6, 11}); infinite = false; break;
    }
    Rational v = small_rational(rng);
    return {StepSequence(m, std::move(cv), std::move(ex), StepSequence::Override{s, v}),
            true, infinite, v};
  }
  return {StepSequence(m, std::move(cv), std::move(ex)), false, false, Rational(0)};
}

// Pairs that seq_add accepts: no overrides, or a shared override set.
std::pair<StepSequence, StepSequence> compatible_pair(Rng& rng) {
  GeneratedSeq x = random_step_sequence(rng, false);
  GeneratedSeq y = random_step_sequence(rng, false);
  if (rng.below(3) == 0) {
    IndexSet shared = IndexSet::squares();
    StepSequence xo(x.seq.modulus(), x.seq.class_values(), x.seq.exceptions(),
                    StepSequence::Override{shared, small_rational(rng)});
    StepSequence yo(y.seq.modulus(), y.seq.class_values(), y.seq.exceptions(),
                    StepSequence::Override{shared, small_rational(rng)});
    return {std::move(xo), std::move(yo)};
  }
  return {std::move(x.seq), std::move(y.seq)};
}

StepSequence nonneg_sequence(Rng& rng, bool constant_only) {
  if (constant_only)
    return StepSequence::constant(Rational(static_cast<long>(rng.below(9)),
                                           static_cast<long>(rng.below(4)) + 1));
  std::uint64_t m = rng.below(4) + 1;
  std::vector<Rational> cv;
  for (std::uint64_t r = 0; r < m; ++r)
    cv.push_back(Rational(static_cast<long>(rng.below(9)),
                          static_cast<long>(rng.below(4)) + 1));
  return StepSequence(m, std::move(cv));
}

using TrialFn = std::function<void(long, Rng&, Tallies&)>;

SuiteReport run_sharded(const std::string& name, std::uint64_t seed, long trials,
                        int workers, const std::vector<std::string>& check_names,
                        const TrialFn& trial) {
  if (trials < 1) throw input_error("suite requires trials >= 1");
  workers = std::clamp(workers, 1, 64);
  if (static_cast<long>(workers) > trials) workers = static_cast<int>(trials);

  std::vector<Tallies> partial(static_cast<std::size_t>(workers), Tallies(check_names));
  std::vector<std::thread> threads;
  long chunk = trials / workers;
  long extra = trials % workers;
  long start = 0;
  for (int w = 0; w < workers; ++w) {
    long count = chunk + (w < extra ? 1 : 0);
    long lo = start;
    start += count;
    threads.emplace_back([&, w, lo, count] {
      for (long t = lo; t < lo + count; ++t) {
        // Per-trial stream: tallies are identical for every worker count.
        Rng rng = Rng::for_shard(seed, static_cast<std::uint64_t>(t));
        trial(t, rng, partial[static_cast<std::size_t>(w)]);
      }
    });
  }
  for (auto& th : threads) th.join();
  Tallies merged(check_names);
  for (const auto& p : partial) merged.merge(p);

  SuiteReport report;
  report.name = name;
  report.seed = seed;
  report.trials = trials;
  report.workers = workers;
  report.checks = merged.take();
  return report;
}

// --- phi-null-difference -------------------------------------------------

void phi_trial(long, Rng& rng, Tallies& t) {
  IntervalSet e = random_interval_set(rng);
  bool ok = measure(symmetric_difference(e, density_point_set(e))).is_zero();
  t.record("phi-null-difference", ok, to_string(e));
}

// --- ilimit-arithmetic ----------------------------------------------------

void ilimit_arithmetic_trial(long, Rng& rng, Tallies& t) {
  auto [x, y] = compatible_pair(rng);
  StepSequence sum = seq_add(x, y);
  for (Ideal ideal : {Ideal::fin, Ideal::density_zero}) {
    t.record("subadditivity",
             i_limsup(sum, ideal) <= i_limsup(x, ideal) + i_limsup(y, ideal));
    t.record("duality", i_liminf(x, ideal) == -i_limsup(seq_negate(x), ideal));
    t.record("liminf-le-limsup", i_liminf(x, ideal) <= i_limsup(x, ideal));
  }
  StepSequence lift = nonneg_sequence(rng, x.override_set().has_value());
  StepSequence bigger = seq_add(x, lift);
  bool dominated = seq_dominates(x, bigger);
  bool ordered = true;
  for (Ideal ideal : {Ideal::fin, Ideal::density_zero}) {
    ordered = ordered && i_limsup(x, ideal) <= i_limsup(bigger, ideal) &&
              i_liminf(x, ideal) <= i_liminf(bigger, ideal);
  }
  t.record("monotonicity", dominated && ordered);
  t.record("ideal-monotonicity",
           i_limsup(x, Ideal::density_zero) <= i_limsup(x, Ideal::fin));
}

// --- ilimit-classical -----------------------------------------------------

void ilimit_classical_trial(long, Rng& rng, Tallies& t) {
  GeneratedSeq g = random_step_sequence(rng, true);
  // Classical limsup: the largest value taken infinitely often. Classes
  // always recur (an override of density zero cannot swallow a residue
  // class); the override value recurs iff its set is infinite; finite
  // exceptions never matter. Cross-validated on the 10^4 prefix.
  Rational best = g.seq.class_values()[0];
  for (const auto& v : g.seq.class_values()) best = max(best, v);
  if (g.has_override && g.override_infinite) best = max(best, g.override_value);

  bool prefix_consistent = true;
  bool attained = false;
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    if (g.seq.exceptions().count(n)) continue;
    if (g.has_override && !g.override_infinite && g.seq.override_set()->set.contains(n))
      continue;
    Rational v = g.seq.value_at(n);
    if (v > best) prefix_consistent = false;
    if (v == best) attained = true;
  }
  t.record("classical-oracle",
           prefix_consistent && i_limsup(g.seq, Ideal::fin) == best);
  t.record("oracle-attained-in-prefix", attained);
  for (Ideal ideal : {Ideal::fin, Ideal::density_zero})
    t.record("duality", i_liminf(g.seq, ideal) == -i_limsup(seq_negate(g.seq), ideal));
}

// --- density-axioms -------------------------------------------------------

void density_axioms_trial(long, Rng& rng, Tallies& t) {
  IndexSet s = random_index_expression(rng, 2);
  IndexSet u = random_index_expression(rng, 1);

  Rational d = s.density();
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= 10000; ++n)
    if (s.contains(n)) ++count;
  Rational prefix(static_cast<long>(count), 10000L);
  t.record("prefix-oracle", abs(d - prefix) <= Rational(1, 100), s.str());

  t.record("inclusion-exclusion",
           (s | u).density() + (s & u).density() == d + u.density());

  for (Ideal ideal : {Ideal::fin, Ideal::density_zero}) {
    if (ideal_member(ideal, s)) {
      t.record("subset-closure", ideal_member(ideal, s & u));
      if (ideal_member(ideal, u)) t.record("union-closure", ideal_member(ideal, s | u));
    }
    t.record("admissibility", ideal_member(ideal, IndexSet::finite({rng.below(100) + 1})));
    t.record("properness", !ideal_member(ideal, IndexSet::naturals()));
  }
}

// --- sparse-ring ------------------------------------------------------------

IntervalSet cleared_around(Rng& rng, const Rational& p) {
  IntervalSet raw = random_interval_set(rng);
  Rational guard(1, static_cast<long>(rng.below(4)) + 3);
  return set_difference(raw, IntervalSet::normalize({{p - guard, p + guard}}));
}

void sparse_ring_trial(long idx, Rng& rng, Tallies& t) {
  Rational p = small_rational(rng);

  // Certified density-zero sets survive a 200-trial witness hunt.
  IntervalSet away = cleared_around(rng, p);
  auto hunt = i_sparse_falsify(SetSource{away}, p, Ideal::density_zero, 200, rng.next(),
                               /*gate_density_zero=*/false);
  t.record("density-zero-unfalsified", !hunt.falsified(), to_string(away));

  // Subset closure of the trichotomy, plus falsifier agreement.
  IntervalSet y = random_interval_set(rng);
  IntervalSet x = set_intersection(y, random_interval_set(rng));
  for (Side side : {Side::left, Side::right}) {
    if (sparse_check_interval_set(y, p, side))
      t.record("subset-closure", sparse_check_interval_set(x, p, side));
  }

  // Union closure on two sparse instances.
  IntervalSet away2 = cleared_around(rng, p);
  t.record("union-closure",
           sparse_check_interval_set(set_union(away, away2), p, Side::right) &&
               sparse_check_interval_set(set_union(away, away2), p, Side::left));

  // Unions of certified-zero sets stay certified zero.
  t.record("zero-union-zero",
           classify_point_i_density(set_union(away, away2), p, Ideal::density_zero) ==
               IDensityClass::dispersion);

  // Equivalent sparseness conditions on the decidable class, with sampled
  // companion sets. The empty set is always among the samples, so a
  // non-sparse instance is always refuted by some sample.
  IntervalSet b = random_interval_set(rng);
  bool s1 = sparse_check_interval_set(b, p, Side::right);
  std::vector<IntervalSet> samples{
      IntervalSet{},
      IntervalSet::normalize({{p - Rational(1), p}}),
      IntervalSet::normalize({{p, p + Rational(1)}}),
      random_interval_set(rng),
      cleared_around(rng, p),
  };
  bool c2 = true;
  bool c4 = true;
  for (const auto& h : samples) {
    auto dh = one_sided_densities(h, p);
    if (dh.right_upper < Rational(1)) {
      auto du = one_sided_densities(set_union(b, h), p);
      c2 = c2 && du.right_upper < Rational(1);
    }
    if (dh.right_lower.is_zero()) {
      auto du = one_sided_densities(set_union(b, h), p);
      c4 = c4 && du.right_lower.is_zero();
    }
  }
  t.record("equivalence-upper", c2 == s1, to_string(b));
  t.record("equivalence-lower", c4 == s1, to_string(b));

  auto db = one_sided_densities(b, p);
  bool premise3 = db.right_upper < Rational(1) && db.right_lower.is_zero();
  if (!premise3) {
    t.record("conjunction-vacuous", true);
  } else {
    bool c3 = true;
    for (const auto& h : samples) {
      auto dh = one_sided_densities(h, p);
      if (!(dh.right_upper < Rational(1) && dh.right_lower.is_zero())) continue;
      auto du = one_sided_densities(set_union(b, h), p);
      c3 = c3 && du.right_upper < Rational(1) && du.right_lower.is_zero();
    }
    t.record("conjunction-equivalence", c3 == s1, to_string(b));
  }

  // One-sided sparseness caps the upper density and fills the complement.
  if (s1) {
    t.record("sparse-upper-density", db.right_upper < Rational(1));
    IntervalSet comp = complement_within(b, {p - Rational(30), p + Rational(30)});
    t.record("complement-fills", one_sided_densities(comp, p).right_upper == Rational(1));
  }

  // Deliberately non-sparse instances are falsified within a small budget.
  IntervalSet adjacent = set_union(
      random_interval_set(rng),
      IntervalSet::normalize({{p - Rational(1, 2), p + Rational(1, 2)}}));
  auto res = i_sparse_falsify(SetSource{adjacent}, p, Ideal::density_zero, 50, rng.next());
  t.record("witness-found", res.falsified(), to_string(adjacent));

  // One gap-family instance: the union with a far interval keeps the
  // certified positive lower bound, and the far set is certified zero.
  if (idx == 0) {
    GapSet g(Rational(2));
    std::vector<WindowFamily> fams{WindowFamily::right_geometric(Rational(0), Rational(2))};
    auto enc = i_density_enclosure(SetSource{g}, Rational(0), Ideal::density_zero, fams, 6);
    IntervalSet far = IntervalSet::normalize({{Rational(2), Rational(3)}});
    bool ok = enc.upper.bounds.lo >= Rational(1, 2) &&
              classify_point_i_density(far, Rational(0), Ideal::density_zero) ==
                  IDensityClass::dispersion;
    t.record("gap-instance", ok);
  }
}

// --- i-density --------------------------------------------------------------

void i_density_trial(long, Rng& rng, Tallies& t) {
  IntervalSet e = random_interval_set(rng);
  for (const auto& iv : e.intervals()) {
    t.record("endpoint-not-full",
             classify_point_i_density(e, iv.lo, Ideal::density_zero) !=
                     IDensityClass::full_density &&
                 classify_point_i_density(e, iv.hi, Ideal::density_zero) !=
                     IDensityClass::full_density);
    Rational mid = (iv.lo + iv.hi) / Rational(2);
    t.record("interior-full", classify_point_i_density(e, mid, Ideal::fin) ==
                                  IDensityClass::full_density);
  }

  Rational p = small_rational(rng);
  WindowFamily w = WindowFamily::symmetric_harmonic(p);
  RatioSequence re = ratio_sequence(e, w, 6);
  for (Ideal ideal : {Ideal::fin, Ideal::density_zero}) {
    Bounds up = i_limsup_enclosure(re, ideal);
    t.record("enclosure-range", Rational(0) <= up.lo && up.hi <= Rational(1));
  }

  IntervalSet f = random_interval_set(rng);
  RatioSequence rf = ratio_sequence(f, w, 6);
  RatioSequence ru = ratio_sequence(set_union(e, f), w, 6);
  bool sub = true;
  for (Ideal ideal : {Ideal::fin, Ideal::density_zero})
    sub = sub && i_limsup(ru.upper_approx, ideal) <=
                     i_limsup(re.upper_approx, ideal) + i_limsup(rf.upper_approx, ideal);
  t.record("union-subadditive", sub);

  WindowFamily excepted =
      w.with_exceptions(IndexSet::squares(), {p - Rational(1), p + Rational(1)});
  RatioSequence rex = ratio_sequence(e, excepted, 6);
  t.record("exception-irrelevance",
           i_limsup_enclosure(re, Ideal::density_zero) ==
                   i_limsup_enclosure(rex, Ideal::density_zero) &&
               i_liminf_enclosure(re, Ideal::density_zero) ==
                   i_liminf_enclosure(rex, Ideal::density_zero));
}

// --- certificates -----------------------------------------------------------

SuiteReport certificates_suite(std::uint64_t seed, int workers) {
  Tallies t({"grid-accepted", "round-trip", "mutations-rejected"});
  long cells = 0;
  for (Rational c : {Rational(3, 2), Rational(2), Rational(10)}) {
    for (Rational eps : {Rational(1, 2), Rational(1, 10), Rational(1, 100)}) {
      ++cells;
      SparsenessCertificate cert = sparse_certify_right(GapSet(c), eps, 8);
      t.record("grid-accepted", verify_certificate(cert).accepted,
               "c=" + c.str() + " eps=" + eps.str());
      SparsenessCertificate back = parse_certificate(serialize(cert));
      t.record("round-trip", serialize(back) == serialize(cert));
      for (const auto& [what, mutated] : certificate_mutations(cert)) {
        t.record("mutations-rejected", !verify_certificate(mutated).accepted,
                 "c=" + c.str() + " eps=" + eps.str() + " " + what);
      }
    }
  }
  SuiteReport report;
  report.name = "certificates";
  report.seed = seed;
  report.trials = cells;
  report.workers = workers;
  report.checks = t.take();
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "phi-null-difference", "ilimit-arithmetic", "ilimit-classical",
      "density-axioms",      "sparse-ring",       "i-density",
      "certificates",
  };
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, long trials,
                      int workers) {
  if (name == "phi-null-difference")
    return run_sharded(name, seed, trials, workers, {"phi-null-difference"}, phi_trial);
  if (name == "ilimit-arithmetic")
    return run_sharded(name, seed, trials, workers,
                       {"subadditivity", "monotonicity", "duality", "liminf-le-limsup",
                        "ideal-monotonicity"},
                       ilimit_arithmetic_trial);
  if (name == "ilimit-classical")
    return run_sharded(name, seed, trials, workers,
                       {"classical-oracle", "oracle-attained-in-prefix", "duality"},
                       ilimit_classical_trial);
  if (name == "density-axioms")
    return run_sharded(name, seed, trials, workers,
                       {"prefix-oracle", "inclusion-exclusion", "subset-closure",
                        "union-closure", "admissibility", "properness"},
                       density_axioms_trial);
  if (name == "sparse-ring")
    return run_sharded(name, seed, trials, workers,
                       {"density-zero-unfalsified", "subset-closure", "union-closure",
                        "zero-union-zero", "equivalence-upper", "equivalence-lower",
                        "conjunction-equivalence", "conjunction-vacuous",
                        "sparse-upper-density", "complement-fills", "witness-found",
                        "gap-instance"},
                       sparse_ring_trial);
  if (name == "i-density")
    return run_sharded(name, seed, trials, workers,
                       {"interior-full", "endpoint-not-full", "enclosure-range",
                        "union-subadditive", "exception-irrelevance"},
                       i_density_trial);
  if (name == "certificates") return certificates_suite(seed, workers);
  throw input_error("unknown suite '" + name + "'");
}

std::vector<std::pair<std::string, SparsenessCertificate>> certificate_mutations(
    const SparsenessCertificate& cert) {
  std::vector<std::pair<std::string, SparsenessCertificate>> out;
  auto push = [&](const std::string& what, auto&& edit) {
    SparsenessCertificate m = cert;
    edit(m);
    out.emplace_back(what, std::move(m));
  };

  push("version", [](auto& m) { m.version = 2; });
  push("side", [](auto& m) { m.side = "left"; });
  push("point", [](auto& m) { m.point = Rational(1); });
  push("c-to-one", [](auto& m) { m.c = Rational(1); });
  push("c-below-one", [](auto& m) { m.c = Rational(1, 2); });
  push("epsilon-zero", [](auto& m) { m.epsilon = Rational(0); });
  push("epsilon-negative", [](auto& m) { m.epsilon = Rational(-1, 10); });
  push("h-zero", [](auto& m) { m.h = Rational(0); });
  push("h-negative", [](auto& m) { m.h = Rational(-1); });
  push("k0-zero", [](auto& m) { m.k0 = Rational(0); });
  push("k0-negative", [](auto& m) { m.k0 = Rational(-1, 2); });
  push("k0-tiny", [](auto& m) { m.k0 = Rational(1, 1000); });
  push("k0-huge", [](auto& m) { m.k0 = m.c * m.c * Rational(2); });
  push("depth-one", [](auto& m) { m.depth = 1; });

  if (cert.all_good) {
    push("epsilon-tightened", [](auto& m) { m.epsilon = m.epsilon / Rational(1000); });
    push("pattern-flip", [](auto& m) { m.all_good = false; });
    push("region-above-h", [](auto& m) { m.good_regions[0].hi = m.h * Rational(2); });
    push("region-inverted", [](auto& m) { std::swap(m.good_regions[0].lo, m.good_regions[0].hi); });
    push("k0-halved", [](auto& m) { m.k0 = m.k0 / Rational(2); });
    push("depth-zero", [](auto& m) { m.depth = 0; });
  } else {
    push("h-beyond-span", [](auto& m) { m.h = Rational(2) / m.beta_star; });
    push("h-above-level", [](auto& m) { m.h = m.h * Rational(1000000); });
    push("beta-star-small", [](auto& m) { m.beta_star = Rational(1, 1000); });
    push("zone-floor-raised", [](auto& m) { m.bands[0].zone_lo = m.bands[0].zone_lo * Rational(2); });
    push("zone-ceiling-lowered", [](auto& m) { m.bands[0].zone_hi = m.bands[0].zone_hi / Rational(2); });
    push("region-detached", [](auto& m) { m.good_regions[0].lo = m.good_regions[0].lo / Rational(2); });
  }
  return out;
}

}  // namespace idens

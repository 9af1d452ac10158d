#include "suite.hpp"

#include <chrono>
#include <functional>
#include <set>

#include "qweyl/errors.hpp"
#include "qweyl/hopf.hpp"
#include "qweyl/properties.hpp"
#include "qweyl/reduction.hpp"

namespace qweyl::workbench {

namespace {

struct Outcome {
  Status status = Status::Pass;
  std::string detail;
  std::vector<std::string> failures;
};

Outcome skipped(std::string why) { return {Status::Skipped, std::move(why), {}}; }

Outcome from_report(const CheckReport& r) {
  return {r.passed() ? Status::Pass : Status::Fail, r.summary(), r.failures};
}

// Folds several reports into one outcome.
Outcome merge(const std::vector<CheckReport>& reports) {
  Outcome o;
  for (const auto& r : reports) {
    o.detail += (o.detail.empty() ? "" : "; ") + r.summary();
    if (!r.passed()) o.status = Status::Fail;
    o.failures.insert(o.failures.end(), r.failures.begin(), r.failures.end());
  }
  return o;
}

struct Check {
  std::string id;
  std::string anchor;
  std::function<Outcome()> run;
};

bool root_of_unity_ready(const WorkbenchConfig& cfg, std::string& why) {
  if (cfg.field().kind() != FieldKind::Cyclotomic) {
    why = "needs the cyclotomic field";
    return false;
  }
  if (cfg.normalization != Normalization::Rescaled || !cfg.single_parameter) {
    why = "needs the rescaled single-parameter algebra";
    return false;
  }
  return true;
}

std::string dims(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

LocalizedElement canonical_element(const AlgebraSpec& spec, const CanonicalMonomial& m) {
  return times_euler(LocalizedElement(PbwElement::monomial(spec, Monomial(m.a, m.b), Scalar::one(spec.field()))), m.c);
}

Outcome moment_ideal_checks(const WorkbenchConfig& cfg) {
  const AlgebraSpec& spec = *cfg.spec;
  const ReductionDatum datum(*cfg.torus, cfg.eta, cfg.l);
  const auto monos = invariant_monomials(*cfg.torus, spec, cfg.bounds.degree_bound);
  CheckReport idem{"reduction idempotent", 0, {}}, lin{"reduction linear", 0, {}}, assoc{"reduced product associative", 0, {}};
  std::vector<ReducedElement> reduced;
  for (const auto& m : monos) {
    ReducedElement r = moment_ideal_reduce(canonical_element(spec, m), datum);
    idem.expect(moment_ideal_reduce(r, datum) == r, "re-reducing " + to_string(r) + " changes it");
    reduced.push_back(std::move(r));
  }
  Rng rng(cfg.seed);
  if (!monos.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    for (unsigned t = 0; t < cfg.bounds.random_cases; ++t) {
      const std::size_t i = pick(rng), k = pick(rng);
      const Scalar a = random_scalar(spec.field(), rng), b = random_scalar(spec.field(), rng);
      const LocalizedElement sum =
          localized_add(localized_multiply(LocalizedElement(PbwElement::constant(spec, a)), canonical_element(spec, monos[i])),
                        localized_multiply(LocalizedElement(PbwElement::constant(spec, b)), canonical_element(spec, monos[k])));
      lin.expect(moment_ideal_reduce(sum, datum) == a * reduced[i] + b * reduced[k], "linearity on a random pair");
      const auto u = reduced_monomial(spec, monos[pick(rng)]);
      const auto v = reduced_monomial(spec, monos[pick(rng)]);
      const auto w = reduced_monomial(spec, monos[pick(rng)]);
      assoc.expect(reduced_product(reduced_product(u, v, datum), w, datum) ==
                       reduced_product(u, reduced_product(v, w, datum), datum),
                   "associativity on (" + to_string(u) + ", " + to_string(v) + ", " + to_string(w) + ")");
    }
  }
  Outcome o = merge({idem, lin, assoc});
  o.detail = std::to_string(monos.size()) + " invariant monomials; " + o.detail;
  return o;
}

Outcome center_check(const WorkbenchConfig& cfg) {
  const AlgebraSpec& spec = *cfg.spec;
  const unsigned bound = cfg.bounds.exponent_bound;
  const auto basis = centralizer_basis(spec, bound);
  CheckReport r{"centralizer equals the l-center span", 0, {}};
  for (const auto& u : basis) r.expect(is_central(u), to_string(u) + " is not central");
  // Predicted basis: monomials whose exponents are multiples of l.
  std::vector<Monomial> predicted;
  const unsigned l = static_cast<unsigned>(cfg.l);
  std::vector<unsigned> e(2 * cfg.n, 0);
  while (true) {
    predicted.emplace_back(std::vector<unsigned>(e.begin(), e.begin() + static_cast<long>(cfg.n)),
                           std::vector<unsigned>(e.begin() + static_cast<long>(cfg.n), e.end()));
    std::size_t pos = 0;
    while (pos < e.size() && e[pos] + l > bound) e[pos++] = 0;
    if (pos == e.size()) break;
    e[pos] += l;
  }
  std::map<Monomial, std::size_t> index;
  for (const auto& m : predicted) index.emplace(m, index.size());
  EchelonBasis span(0, spec.field());
  bool inside = true;
  for (const auto& u : basis) {
    SparseVector v;
    for (const auto& [m, c] : u.terms()) {
      auto it = index.find(m);
      if (it == index.end()) {
        inside = false;
        break;
      }
      v.emplace_back(it->second, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (inside) span.insert(std::move(v));
  }
  r.expect(inside, "a centralizer element involves a monomial outside the l-center");
  r.expect(basis.size() == predicted.size() && span.rank() == predicted.size(),
           "centralizer dimension " + std::to_string(basis.size()) + ", l-center monomials in range " +
               std::to_string(predicted.size()));
  Outcome o = from_report(r);
  o.detail = "dim " + std::to_string(basis.size()) + " (predicted " + std::to_string(predicted.size()) + "); " + o.detail;
  return o;
}

Outcome rep_check(const WorkbenchConfig& cfg, const std::vector<RankOneData>& slots) {
  const MatrixRep rep = build_irrep(slots, cfg.l);
  const std::size_t n2 = rep.dim * rep.dim;
  CheckReport r{"representation", 0, {}};
  const CheckReport rel = verify_relations(rep);
  r.checked += rel.checked;
  r.failures = rel.failures;
  const std::size_t comm = commutant_dimension(rep);
  const std::size_t gen = generated_algebra_dimension(rep);
  const bool azumaya = azumaya_membership(rep.character);
  const bool irreducible = gen == n2;
  r.expect(irreducible, "module is reducible: generated algebra has dimension " + std::to_string(gen) + " < " +
                            std::to_string(n2));
  r.expect(irreducible == azumaya, "irreducibility disagrees with membership in the Azumaya locus");
  if (azumaya) r.expect(comm == 1, "commutant dimension " + std::to_string(comm) + " on the Azumaya locus");
  if (azumaya && cfg.n == 1) {
    // alpha has characteristic polynomial t^l - (1 + a omega).
    const Field f = cfg.field();
    Vector expected(static_cast<std::size_t>(cfg.l) + 1, Scalar::zero(f));
    expected[0] = -(Scalar::one(f) + rep.character.a[0] * rep.character.omega[0]);
    expected.back() = Scalar::one(f);
    r.expect(charpoly(euler_matrix(rep, 0)) == expected, "characteristic polynomial of alpha");
  }
  Outcome o = from_report(r);
  std::string chi;
  for (std::size_t i = 0; i < rep.character.a.size(); ++i)
    chi += (i ? ", " : "") + std::string("a") + std::to_string(i + 1) + "=" + rep.character.a[i].to_string() + " w" +
           std::to_string(i + 1) + "=" + rep.character.omega[i].to_string();
  o.detail = "dim " + std::to_string(rep.dim) + ", " + chi + ", azumaya=" + (azumaya ? "yes" : "no") +
             ", commutant " + std::to_string(comm) + ", generated algebra " + std::to_string(gen) + "/" +
             std::to_string(n2) + "; " + o.detail;
  return o;
}

Outcome fiber_check(const WorkbenchConfig& cfg, const std::vector<RankOneData>& slots) {
  const MatrixRep rep = build_irrep(slots, cfg.l);
  if (!azumaya_membership(rep.character)) return skipped("character lies off the Azumaya locus");
  std::vector<Scalar> roots;
  try {
    for (const auto& s : slots) roots.push_back(alpha_root(s, cfg.l));
  } catch (const DomainError& e) {
    return skipped(std::string("alpha eigenvalues leave the field: ") + e.what());
  }
  const TorusData& torus = *cfg.torus;
  const std::size_t l = static_cast<std::size_t>(cfg.l);
  const std::size_t m_expected = ipow(l, cfg.n - cfg.d);
  CheckReport r{"fiber reduction", 0, {}};
  std::vector<std::size_t> weights, ideals, reduced;
  std::size_t total = 0;
  for (const auto& eta : compatible_etas(roots, torus, cfg.l)) {
    const auto ws = weight_space(rep, torus, eta);
    weights.push_back(ws.basis.size());
    total += ws.basis.size();
    r.expect(ws.basis.size() == m_expected, "dim V_eta = " + std::to_string(ws.basis.size()));
    if (ws.basis.empty()) continue;
    const auto k = restriction_kernel_check(rep, torus, eta);
    ideals.push_back(k.ideal_dimension);
    r.checked += k.report.checked;
    for (const auto& f : k.report.failures) r.failures.push_back(f);
    const auto red = reduced_endomorphism_algebra(rep, torus, eta);
    reduced.push_back(red.dimension);
    r.expect(red.iso_verified && red.dimension == m_expected * m_expected,
             "reduced algebra dimension " + std::to_string(red.dimension));
  }
  r.expect(total == rep.dim, "weight spaces sum to " + std::to_string(total));
  const auto own = weight_space(rep, torus, cfg.eta);
  Outcome o = from_report(r);
  o.detail = "dim V_eta " + dims(weights) + ", dim J " + dims(ideals) + ", reduced dims " + dims(reduced) +
             ", configured eta weight dim " + std::to_string(own.basis.size()) + "; " + o.detail;
  return o;
}

Outcome cover_check(const WorkbenchConfig& cfg) {
  const Field f = cfg.field();
  std::vector<Scalar> roots(cfg.n, Scalar::one(f));
  std::string source = "unit alpha values";
  if (!cfg.reps.empty()) {
    try {
      std::vector<Scalar> r;
      for (const auto& s : cfg.reps.front()) r.push_back(alpha_root(s, cfg.l));
      roots = r;
      source = "alpha values of reps[0]";
    } catch (const DomainError&) {
    }
  }
  std::vector<Scalar> values;
  for (const auto& r : roots) values.push_back(r.pow(cfg.l));
  const TorusData& torus = *cfg.torus;
  const std::size_t expected = ipow(static_cast<std::size_t>(cfg.l), cfg.n - cfg.d);
  CheckReport r{"cover degree", 0, {}};
  std::vector<std::size_t> counts;
  for (const auto& eta : compatible_etas(roots, torus, cfg.l)) {
    const auto pts = cover_fiber_points(values, torus, eta, cfg.l, cfg.bounds.enumeration_cap);
    counts.push_back(pts.size());
    r.expect(pts.size() == expected, "compatible eta has " + std::to_string(pts.size()) + " points");
  }
  std::vector<Scalar> bad = cfg.eta;
  bad[0] *= Scalar::from_integer(f, 2);
  const auto none = cover_fiber_points(values, torus, bad, cfg.l, cfg.bounds.enumeration_cap);
  r.expect(none.empty(), "incompatible eta has " + std::to_string(none.size()) + " points");
  Outcome o = from_report(r);
  o.detail = source + ", counts " + dims(counts) + " (expected " + std::to_string(expected) + " each); " + o.detail;
  return o;
}

std::vector<Check> build_checks(const WorkbenchConfig& cfg) {
  const AlgebraSpec& spec = *cfg.spec;
  const bool rescaled = cfg.normalization == Normalization::Rescaled;
  const bool cyclotomic = cfg.field().kind() == FieldKind::Cyclotomic;
  const Bounds& b = cfg.bounds;
  std::vector<Check> checks;
  checks.push_back({"qweyl.engine", "PBW rewriting engine", [&, rescaled, cyclotomic] {
                      return from_report(verify_engine_properties(spec, b.random_cases, b.degree_bound + 1, cfg.seed));
                    }});
  checks.push_back({"qweyl.power_identities", "power and Euler-operator identities", [&, rescaled, cyclotomic] {
                      if (!rescaled) return skipped("needs the rescaled presentation");
                      return from_report(verify_power_identities(spec, 2 * b.degree_bound));
                    }});
  checks.push_back({"hopf.double_presentation", "Heisenberg double presentation",
                    [&, rescaled, cyclotomic] { return from_report(verify_double_presentation(spec, b.degree_bound)); }});
  checks.push_back({"hopf.axioms", "braided Hopf axioms of the quantum plane",
                    [&, rescaled, cyclotomic] { return from_report(verify_hopf_axioms(spec, b.degree_bound)); }});
  checks.push_back({"hopf.pairing", "nondegenerate braided Hopf pairing", [&, rescaled, cyclotomic] {
                      // q-factorials vanish from degree l on at a root of unity.
                      const unsigned bound = cyclotomic ? std::min<unsigned>(b.degree_bound, cfg.l - 1) : b.degree_bound;
                      return from_report(verify_pairing_nondegenerate(spec, bound));
                    }});
  checks.push_back({"hopf.classical_limit", "symmetric braiding degeneration", [&, rescaled, cyclotomic] {
                      for (const auto& row : spec.matrix())
                        for (long v : row)
                          if (v != 0) return skipped("needs M = 0");
                      return from_report(verify_classical_limit(spec));
                    }});
  checks.push_back({"moment.identity", "quantum moment map identity", [&, rescaled, cyclotomic] {
                      if (!rescaled) return skipped("needs the rescaled presentation");
                      return from_report(verify_moment_identity(*cfg.torus, spec));
                    }});
  checks.push_back({"moment.ideal", "reduction by the moment ideal", [&, rescaled, cyclotomic] {
                      if (!rescaled) return skipped("needs the rescaled presentation");
                      if (cfg.d == 0) return skipped("needs d > 0");
                      return moment_ideal_checks(cfg);
                    }});
  std::string why;
  const bool rou = root_of_unity_ready(cfg, why);
  checks.push_back({"root.delta_power", "Delta^l identity", [&, rescaled, rou, why] {
                      if (!rou) return skipped(why);
                      return from_report(verify_delta_power(spec));
                    }});
  checks.push_back({"root.center", "center equals the l-center", [&, rescaled, rou, why] {
                      if (!rou) return skipped(why);
                      if (b.exponent_bound < static_cast<unsigned>(cfg.l))
                        return skipped("needs exponent_bound >= l");
                      return center_check(cfg);
                    }});
  checks.push_back({"root.freeness", "free over the l-center of rank l^{2n}", [&, rescaled, rou, why] {
                      if (!rou) return skipped(why);
                      return from_report(verify_freeness(spec, 1));
                    }});
  for (std::size_t k = 0; k < cfg.reps.size(); ++k)
    checks.push_back({"root.rep." + std::to_string(k), "irreducible fiber representations and the Azumaya locus",
                      [&, k] { return rep_check(cfg, cfg.reps[k]); }});
  for (std::size_t k = 0; k < cfg.reps.size(); ++k)
    checks.push_back({"reduction.fiber." + std::to_string(k), "fiberwise quantum Hamiltonian reduction", [&, k] {
                        if (cfg.d == 0) return skipped("needs d > 0");
                        return fiber_check(cfg, cfg.reps[k]);
                      }});
  checks.push_back({"reduction.cover", "degree of the l-twisted cover", [&, rescaled, rou, why] {
                      if (!rou) return skipped(why);
                      if (cfg.d == 0) return skipped("needs d > 0");
                      return cover_check(cfg);
                    }});
  return checks;
}

bool selected(const std::string& id, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  for (const auto& o : only)
    if (id == o || id.rfind(o + ".", 0) == 0) return true;
  return false;
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    default:
      return "skipped";
  }
}

std::vector<std::string> check_ids(const WorkbenchConfig& cfg) {
  std::vector<std::string> ids;
  for (const auto& c : build_checks(cfg)) ids.push_back(c.id);
  return ids;
}

std::vector<CheckResult> run_suite(const WorkbenchConfig& cfg, const SuiteOptions& options) {
  const auto checks = build_checks(cfg);
  for (const auto& o : options.only) {
    bool known = false;
    for (const auto& c : checks) known = known || selected(c.id, {o});
    if (!known) throw ParameterError("--only: unknown check id '" + o + "'");
  }
  std::vector<CheckResult> out;
  for (const auto& c : checks) {
    if (!selected(c.id, options.only)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {Status::Fail, std::string("error: ") + e.what(), {}};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.push_back({c.id, c.anchor, o.status, std::move(o.detail), std::move(o.failures), ms});
  }
  return out;
}

bool suite_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status == Status::Fail) return false;
  return true;
}

nlohmann::json make_report(const WorkbenchConfig& cfg, const std::vector<CheckResult>& results, bool verbose) {
  nlohmann::json checks = nlohmann::json::array();
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto& r : results) {
    nlohmann::json c = {{"check_id", r.check_id},
                        {"paper_anchor", r.anchor},
                        {"status", status_name(r.status)},
                        {"detail", r.detail},
                        {"elapsed", r.elapsed_ms}};
    if (verbose) c["failures"] = r.failures;
    checks.push_back(std::move(c));
    (r.status == Status::Pass ? pass : r.status == Status::Fail ? fail : skip)++;
  }
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"config", cfg.raw},
          {"checks", checks},
          {"summary", {{"total", results.size()}, {"passed", pass}, {"failed", fail}, {"skipped", skip}}}};
}

}  // namespace qweyl::workbench

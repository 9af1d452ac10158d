// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "qweyl/errors.hpp"
#include "qweyl/hopf.hpp"
#include "qweyl/linalg.hpp"
#include "qweyl/moment.hpp"
#include "qweyl/properties.hpp"
#include "qweyl/reduction.hpp"
#include "qweyl/root_of_unity.hpp"

using namespace qweyl;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Rng64 = std::mt19937_64;
const Field kQ = Field::rational_function();

long uniform(Rng64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Skew off the diagonal. The diagonal is free in [-2, 2]; the q-difference
// presentation needs it nonzero, otherwise d_i and x_i would commute.
IntMatrix random_braiding(std::size_t n, Rng64& rng, bool nonzero_diagonal = false) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    do m[i][i] = uniform(rng, -2, 2);
    while (nonzero_diagonal && m[i][i] == 0);
    for (std::size_t j = i + 1; j < n; ++j) {
      m[i][j] = uniform(rng, -2, 2);
      m[j][i] = -m[i][j];
    }
  }
  return m;
}

long det2(long a, long b, long c, long d) { return a * d - b * c; }

// Full column rank modulo p (d <= 2 only).
bool full_rank_mod(const IntMatrix& a, long p) {
  const std::size_t n = a.size(), d = a[0].size();
  if (d == 1) {
    for (const auto& row : a)
      if (row[0] % p != 0) return true;
    return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (det2(a[i][0], a[i][1], a[j][0], a[j][1]) % p != 0) return true;
  return false;
}

IntMatrix random_embedding(std::size_t n, std::size_t d, Rng64& rng, long p) {
  for (;;) {
    IntMatrix a(n, IntVector(d));
    for (auto& row : a)
      for (auto& v : row) v = uniform(rng, -2, 2);
    if (full_rank_mod(a, p)) return a;
  }
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : "; ") + p;
  return s;
}

void absorb(Outcome& o, const CheckReport& r, const std::string& label) {
  if (!r.passed()) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + label + ": " + r.summary();
  }
}

// ---------------------------------------------------------------------------

Outcome presentation_agreement() {
  Outcome o;
  Rng64 rng(101);
  std::size_t specs = 0, checked = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<AlgebraSpec> list{AlgebraSpec::single_parameter(n, Normalization::Unscaled, kQ)};
    for (int t = 0; t < 5; ++t) list.emplace_back(random_braiding(n, rng), Normalization::Unscaled, kQ);
    for (const auto& s : list) {
      auto r = verify_double_presentation(s, 3);
      absorb(o, r, s.describe());
      ++specs;
      checked += r.checked;
    }
  }
  o.detail = std::to_string(specs) + " specs, " + std::to_string(checked) + " products compared" +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome power_identities() {
  Outcome o;
  Rng64 rng(102);
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& s : {AlgebraSpec::single_parameter(n, Normalization::Rescaled, kQ),
                          AlgebraSpec(random_braiding(n, rng, true), Normalization::Rescaled, kQ)}) {
      auto r = verify_power_identities(s, 6);
      absorb(o, r, s.describe());
      checked += r.checked;
    }
  }
  o.detail = std::to_string(checked) + " identities" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome classical_degeneration() {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    AlgebraSpec s(IntMatrix(n, IntVector(n, 0)), Normalization::Unscaled, Field::rational());
    auto r = verify_classical_limit(s);
    absorb(o, r, s.describe());
    checked += r.checked;
  }
  o.detail = std::to_string(checked) + " relations for n=1..3" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome delta_power() {
  Outcome o;
  std::vector<std::string> done;
  for (auto [n, l] : std::vector<std::pair<std::size_t, int>>{{1, 3}, {1, 5}, {1, 7}, {2, 3}, {2, 5}}) {
    auto r = verify_delta_power(root_of_unity_spec(n, l));
    absorb(o, r, "n=" + std::to_string(n) + " l=" + std::to_string(l));
    done.push_back("(" + std::to_string(n) + "," + std::to_string(l) + ")");
  }
  if (o.pass) o.detail = "Delta^l = prod(1 + x^l d^l) at " + join(done);
  return o;
}

// Subspace equality of two sets of PBW elements via ranks.
bool same_span(const std::vector<PbwElement>& a, const std::vector<PbwElement>& b, Field f) {
  std::map<Monomial, std::size_t> index;
  for (const auto* set : {&a, &b})
    for (const auto& u : *set)
      for (const auto& [m, c] : u.terms()) index.emplace(m, index.size());
  auto dense = [&](const PbwElement& u) {
    Vector v(index.size(), Scalar::zero(f));
    for (const auto& [m, c] : u.terms()) v[index.at(m)] = c;
    return v;
  };
  EchelonBasis ea(index.size(), f), eb(index.size(), f), ab(index.size(), f);
  for (const auto& u : a) ea.insert(dense(u)), ab.insert(dense(u));
  for (const auto& u : b) eb.insert(dense(u)), ab.insert(dense(u));
  return ea.rank() == eb.rank() && ea.rank() == ab.rank();
}

Outcome center_truncation() {
  Outcome o;
  auto s1 = root_of_unity_spec(1, 3);
  auto got1 = centralizer_basis(s1, 4);
  std::vector<PbwElement> want1{PbwElement::one(s1), PbwElement::x(s1, 0, 3), PbwElement::d(s1, 0, 3),
                                PbwElement::x(s1, 0, 3) * PbwElement::d(s1, 0, 3)};
  bool ok1 = got1.size() == 4 && same_span(got1, want1, s1.field());

  auto s2 = root_of_unity_spec(2, 3);
  auto got2 = centralizer_basis(s2, 3);
  std::vector<PbwElement> want2;
  for (unsigned a0 : {0u, 3u})
    for (unsigned a1 : {0u, 3u})
      for (unsigned b0 : {0u, 3u})
        for (unsigned b1 : {0u, 3u})
          want2.push_back(PbwElement::monomial(s2, Monomial({a0, a1}, {b0, b1}), Scalar::one(s2.field())));
  bool ok2 = got2.size() == want2.size() && same_span(got2, want2, s2.field());
  o.pass = ok1 && ok2;
  o.detail = "n=1 B=4: dim " + std::to_string(got1.size()) + (ok1 ? " = span{1,x^3,d^3,x^3d^3}" : " MISMATCH") +
             "; n=2 B=3: dim " + std::to_string(got2.size()) + (ok2 ? " = 16 l-center monomials" : " MISMATCH");
  return o;
}

Outcome azumaya_dichotomy() {
  Rng64 rng(106);
  std::size_t generic_ok = 0, degenerate_ok = 0, total = 20;
  std::map<std::size_t, std::size_t> degenerate_commutants;
  std::string burnside;
  for (std::size_t t = 0; t < total; ++t) {
    int l = t % 2 ? 5 : 3;
    Field f = Field::cyclotomic(l);
    Scalar lambda = Scalar::from_integer(f, uniform(rng, 1, 3)) * Scalar::q_power(f, uniform(rng, 0, l - 1));
    std::vector<Scalar> b;
    for (int i = 0; i < l; ++i) {
      long v = uniform(rng, 1, 3) * (uniform(rng, 0, 1) ? 1 : -1);
      b.push_back(Scalar::from_integer(f, v));
    }
    auto rep = build_irrep_rank1(lambda, b, l);
    const auto& ch = rep.character;
    bool locus = !(Scalar::one(f) + ch.a[0] * ch.omega[0]).is_zero();
    if (locus && commutant_dimension(rep) == 1) ++generic_ok;

    b[static_cast<std::size_t>(uniform(rng, 0, l - 1))] = Scalar::zero(f);
    auto zeroed = build_irrep_rank1(lambda, b, l);
    std::size_t c = commutant_dimension(zeroed);
    ++degenerate_commutants[c];
    if (c > 1) ++degenerate_ok;
    if (burnside.empty())
      burnside = "generated algebra dim " + std::to_string(generated_algebra_dimension(zeroed)) + " < " +
                 std::to_string(zeroed.dim * zeroed.dim);
  }
  Outcome o;
  o.pass = generic_ok == total && degenerate_ok == total;
  std::ostringstream d;
  d << "all b!=0: " << generic_ok << "/" << total << " commutant=1 on the Azumaya locus; one b=0: " << degenerate_ok
    << "/" << total << " commutant>1 (observed commutant dims:";
  for (const auto& [dim, count] : degenerate_commutants) d << " " << dim << "x" << count;
  d << "; first zeroed rep " << burnside << ", so it is reducible but indecomposable)";
  o.detail = d.str();
  return o;
}

Outcome freeness() {
  Outcome o;
  auto r1 = verify_freeness(root_of_unity_spec(1, 3), 2);
  auto r2 = verify_freeness(root_of_unity_spec(2, 3), 1);
  absorb(o, r1, "n=1");
  absorb(o, r2, "n=2");
  if (o.pass) o.detail = "rank 9 (n=1) and 81 (n=2) per central monomial, " + std::to_string(r1.checked + r2.checked) + " blocks";
  return o;
}

Outcome fiber_reduction() {
  Outcome o;
  Rng64 rng(108);
  const int l = 3;
  Field f = Field::cyclotomic(l);
  auto integer = [&](long v) { return Scalar::from_integer(f, v); };
  // Weights whose product is a perfect cube, so alpha^l has a rational cube root.
  const std::vector<std::vector<long>> weight_sets{{1, 1, 1}, {2, 4, 1}, {-1, 3, 9}, {2, 2, 2}, {1, -8, 1}};
  auto random_slot = [&] {
    const auto& w = weight_sets[static_cast<std::size_t>(uniform(rng, 0, 4))];
    std::vector<Scalar> b;
    for (long v : w) b.push_back(integer(v));
    return RankOneData::diagonal(integer(uniform(rng, 1, 3)), b);
  };
  std::size_t instances = 0, etas_checked = 0;
  for (std::size_t n : {1u, 2u}) {
    TorusData torus(IntMatrix(n, IntVector{1}));
    const std::size_t N = n == 1 ? 3 : 9, m = n == 1 ? 1 : 3;
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<RankOneData> slots;
      std::vector<Scalar> roots;
      for (std::size_t i = 0; i < n; ++i) {
        slots.push_back(random_slot());
        roots.push_back(alpha_root(slots.back(), l));
      }
      auto rep = build_irrep(slots, l);
      std::size_t total = 0;
      for (const auto& eta : compatible_etas(roots, torus, l)) {
        auto k = restriction_kernel_check(rep, torus, eta);
        auto red = reduced_endomorphism_algebra(rep, torus, eta);
        total += k.weight_dimension;
        ++etas_checked;
        bool ok = k.weight_dimension == m && k.ideal_dimension == N * (N - m) && k.report.passed() &&
                  red.dimension == m * m && red.iso_verified;
        if (!ok) {
          o.pass = false;
          o.detail += "n=" + std::to_string(n) + " eta=" + eta[0].to_string() + ": dim V=" +
                      std::to_string(k.weight_dimension) + " dim J=" + std::to_string(k.ideal_dimension) +
                      " reduced=" + std::to_string(red.dimension) + " " + k.report.summary() + "; ";
        }
      }
      if (total != N) {
        o.pass = false;
        o.detail += "weight spaces sum to " + std::to_string(total) + "; ";
      }
      ++instances;
    }
  }
  if (o.pass)
    o.detail = std::to_string(instances) + " reps, " + std::to_string(etas_checked) +
               " compatible eta; dim V_eta, dim J, kernel equality, End(V_eta) iso all exact";
  return o;
}

Outcome cover_degree() {
  Outcome o;
  Rng64 rng(109);
  const int l = 3;
  Field f = Field::cyclotomic(l);
  std::size_t instances = 0;
  for (auto [n, d] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {3, 1}, {3, 2}}) {
    const std::size_t expected = n - d == 1 ? 3 : 9;
    for (int t = 0; t < 10; ++t) {
      TorusData torus(random_embedding(n, d, rng, l));
      std::vector<Scalar> roots, values;
      for (std::size_t i = 0; i < n; ++i) {
        Scalar r = Scalar::from_integer(f, uniform(rng, 1, 3) * (uniform(rng, 0, 1) ? 1 : -1));
        roots.push_back(r);
        values.push_back(r.pow(l));
      }
      auto etas = compatible_etas(roots, torus, l);
      const auto& eta = etas[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(etas.size()) - 1))];
      auto pts = cover_fiber_points(values, torus, eta, l);
      std::vector<Scalar> bad = eta;
      bad[0] *= Scalar::from_integer(f, 2);
      auto none = cover_fiber_points(values, torus, bad, l);
      ++instances;
      if (pts.size() != expected || !none.empty()) {
        o.pass = false;
        o.detail += "(n,d)=(" + std::to_string(n) + "," + std::to_string(d) + "): " + std::to_string(pts.size()) +
                    " points, " + std::to_string(none.size()) + " off-fiber; ";
      }
    }
  }
  if (o.pass) o.detail = std::to_string(instances) + " instances: l^{n-d} points when compatible, 0 otherwise";
  return o;
}

Outcome moment_identity() {
  Outcome o;
  Rng64 rng(110);
  std::size_t runs = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto spec = AlgebraSpec::single_parameter(n, Normalization::Rescaled, kQ);
    for (int t = 0; t < 5; ++t) {
      std::size_t d = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(std::min<std::size_t>(n, 2))));
      IntMatrix a = random_embedding(n, d, rng, 1000003);
      auto r = verify_moment_identity(TorusData(a), t % 2 ? AlgebraSpec(random_braiding(n, rng, true), Normalization::Rescaled, kQ) : spec);
      absorb(o, r, "n=" + std::to_string(n));
      ++runs;
    }
  }
  if (o.pass) o.detail = std::to_string(runs) + " (spec, A) pairs";
  return o;
}

Outcome reduction_sanity() {
  Outcome o;
  Rng64 rng(111);
  Scalar eta = Scalar::q_power(kQ, 3) + Scalar::from_integer(kQ, 2);
  Scalar one = Scalar::one(kQ), q = Scalar::q(kQ);

  auto s1 = AlgebraSpec::single_parameter(1, Normalization::Rescaled, kQ);
  ReductionDatum d1(TorusData(IntMatrix{{1}}), {eta});
  auto constant = [](const AlgebraSpec& s, const Scalar& c) {
    ReducedElement r(s);
    r.add_term(CanonicalMonomial{Exponents(s.rank(), 0), Exponents(s.rank(), 0), IntVector(s.rank(), 0)}, c);
    return r;
  };
  auto x = PbwElement::x(s1, 0), d = PbwElement::d(s1, 0);
  bool values = moment_ideal_reduce(LocalizedElement(x * d), d1) == constant(s1, eta - one) &&
                moment_ideal_reduce(LocalizedElement(x.pow(2) * d.pow(2)), d1) ==
                    constant(s1, q.inverse() * (eta - one) * (eta - q));

  auto s2 = AlgebraSpec::single_parameter(2, Normalization::Rescaled, kQ);
  ReductionDatum d2(TorusData(IntMatrix{{1}, {1}}), {eta});
  auto inv = invariant_monomials(d2.torus, s2, 2);
  auto pick = [&] {
    ReducedElement u(s2);
    for (int k = 0; k < 2; ++k)
      u.add_term(inv[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(inv.size()) - 1))],
                 Scalar::from_integer(kQ, uniform(rng, 1, 3)) * Scalar::q_power(kQ, uniform(rng, -1, 1)));
    return u;
  };
  std::size_t lin_ok = 0, assoc_ok = 0;
  const std::size_t lin_cases = 50, triples = 100;
  for (std::size_t t = 0; t < lin_cases; ++t) {
    auto u = pick(), v = pick();
    auto ru = moment_ideal_reduce(u, d2), rv = moment_ideal_reduce(v, d2);
    if (moment_ideal_reduce(ru, d2) == ru && moment_ideal_reduce(u + v, d2) == ru + rv &&
        moment_ideal_reduce(q * u, d2) == q * ru)
      ++lin_ok;
  }
  for (std::size_t t = 0; t < triples; ++t) {
    auto u = moment_ideal_reduce(pick(), d2), v = moment_ideal_reduce(pick(), d2), w = moment_ideal_reduce(pick(), d2);
    if (reduced_product(reduced_product(u, v, d2), w, d2) == reduced_product(u, reduced_product(v, w, d2), d2))
      ++assoc_ok;
  }
  o.pass = values && lin_ok == lin_cases && assoc_ok == triples;
  o.detail = std::string("x1d1 and x1^2d1^2 values ") + (values ? "exact" : "WRONG") + "; idempotent/linear " +
             std::to_string(lin_ok) + "/" + std::to_string(lin_cases) + "; associative " + std::to_string(assoc_ok) +
             "/" + std::to_string(triples);
  return o;
}

Outcome engine_soundness() {
  Outcome o;
  std::size_t checked = 0;
  Rng64 rng(112);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& s : {AlgebraSpec::single_parameter(n, Normalization::Rescaled, kQ),
                          AlgebraSpec(random_braiding(n, rng), Normalization::Unscaled, kQ)}) {
      auto r = verify_engine_properties(s, 200, 4, 1000 + n);
      absorb(o, r, s.describe());
      checked += r.checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " associativity, confluence and grading checks";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"presentation agreement", presentation_agreement},
      {"power and Euler identities", power_identities},
      {"classical degeneration", classical_degeneration},
      {"Delta^l identity", delta_power},
      {"center truncation", center_truncation},
      {"Azumaya-locus dichotomy", azumaya_dichotomy},
      {"freeness over the l-center", freeness},
      {"fiber reduction", fiber_reduction},
      {"cover degree", cover_degree},
      {"moment identity", moment_identity},
      {"reduction algebra sanity", reduction_sanity},
      {"engine soundness", engine_soundness},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("criterion %02zu %s %s: %s [%.0f ms]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), ms);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

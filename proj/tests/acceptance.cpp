// Acceptance suite: one self-contained check per criterion, every tolerance
// pinned in code (almost all are exact rational equality, tolerance zero).
// Prints one pass/fail line per criterion; exits nonzero if any ran red.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "predual/prng.hpp"
#include "predual/stability.hpp"

using namespace predual;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

struct Outcome {
  bool pass = true;
  std::string detail;
  long cases = 0;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

HyperplaneSpec sweep_spec(int n, const Rational& r) {
  SummableSeq alpha;
  for (int i = 1; i <= n; ++i) alpha.set(i, (i % 2 ? r : -r) / Rational(n));
  return HyperplaneSpec::renormed(alpha, n);
}

const int kSweepN[] = {1, 2, 3};
const char* kSweepR[] = {"1/4", "1/2", "3/4"};

// C1: closed-form |f|_n equals the vertex-enumeration oracle exactly for the
// (n, r_n) sweep and 200 random functionals with support within 1..6 each.
Outcome criterion1() {
  Outcome out;
  for (const int n : kSweepN) {
    for (const char* rs : kSweepR) {
      const auto spec = sweep_spec(n, q(rs));
      const auto slice = TruncatedSpace::primal_truncation(spec, 6);
      const auto vertices = ball_vertices(slice);
      SplitMix64 g(kDefaultSeed + 100 * n + std::strlen(rs));
      for (int i = 0; i < 200; ++i) {
        const SummableSeq f = random_functional(g, 6, 6);
        const Rational closed = dual_norm_n(spec, f);
        const Rational oracle = max_pairing_over(vertices, f);
        ++out.cases;
        if (closed != oracle) {
          std::ostringstream w;
          w << "n=" << n << " r=" << rs << " f=" << f.str() << ": closed " << closed.str()
            << " oracle " << oracle.str();
          out.fail(w.str());
        }
      }
    }
  }
  return out;
}

// C2: witness attainment with norm <= 1 and exact pairing, both branches and
// f(k) = 0 boundary cases included.
Outcome criterion2() {
  Outcome out;
  for (const int n : kSweepN) {
    for (const char* rs : kSweepR) {
      const auto spec = sweep_spec(n, q(rs));
      std::vector<SummableSeq> suite;
      SplitMix64 g(kDefaultSeed + 200 * n + std::strlen(rs));
      for (int i = 0; i < 200; ++i) suite.push_back(random_functional(g, 6, 6));
      // Boundary cases: head zeros, zero-interleaved tails, pure branches,
      // and an exact tie between the tail masses.
      suite.push_back(SummableSeq::basis(n + 1));                        // mirrored branch
      suite.push_back(-SummableSeq::basis(n + 1));                       // default branch
      suite.push_back(SummableSeq::basis(n + 1) - SummableSeq::basis(n + 2));  // exact tie
      {
        SummableSeq f;  // zero at the head, zeros interleaved in the tail
        f.set(n + 1, q("3/2"));
        f.set(n + 3, q("-1/2"));
        suite.push_back(f);
        SummableSeq h;  // head-only
        h.set(1, q("-2/3"));
        suite.push_back(h);
      }
      for (const auto& f : suite) {
        ++out.cases;
        const int N = std::max({6, f.max_support(), spec.n + 1});
        const ConvergentSeq x = witness(spec, f, N);
        if (f.is_zero()) continue;
        if (!member(spec, x)) {
          out.fail("witness left the hyperplane at f=" + f.str());
          continue;
        }
        const Rational nw = norm_n(spec, x);
        const Rational attained = direct_pair(f, x);
        const Rational dn = dual_norm_n(spec, f);
        if (nw > Rational(1))
          out.fail("witness norm " + nw.str() + " > 1 at f=" + f.str());
        if (attained != dn)
          out.fail("pairing " + attained.str() + " != |f|_n " + dn.str() + " at f=" + f.str());
        if (pair(shift_up(f), x) != dn)
          out.fail("standard-duality pairing mismatch at f=" + f.str());
      }
    }
  }
  return out;
}

// C3: primal and dual sandwich inequalities, exactly, on 500 random members
// and 500 random functionals per (n, r_n).
Outcome criterion3() {
  Outcome out;
  for (const int n : kSweepN) {
    for (const char* rs : kSweepR) {
      const auto spec = sweep_spec(n, q(rs));
      SplitMix64 g(kDefaultSeed + 300 * n + std::strlen(rs));
      const Rational one = 1;
      for (int i = 0; i < 500; ++i) {
        const ConvergentSeq x = random_member(g, spec, g.range(n, 8));
        const Rational nn = norm_n(spec, x);
        ++out.cases;
        if (!((one + spec.r_n) * sup_norm(x) <= nn && nn <= Rational(2) * sup_norm(x)))
          out.fail("primal sandwich failed at x=" + x.str());
        const SummableSeq f = random_functional(g, 8, 6);
        const Rational dn = dual_norm_n(spec, f);
        ++out.cases;
        if (!(Rational(1, 2) * l1_norm(f) <= dn && dn <= l1_norm(f) / (one + spec.r_n)))
          out.fail("dual sandwich failed at f=" + f.str());
      }
    }
  }
  return out;
}

// C4: the counterexample set and map. 500 random pairs: exact isometry and
// T(C) inside C; the fixed-point-free certificate for K up to 100; 200
// Krasnoselskii steps non-increasing and positive; the classical c example.
Outcome criterion4() {
  Outcome out;
  SplitMix64 g(kDefaultSeed + 400);
  for (int i = 0; i < 500; ++i) {
    const int n = kSweepN[g.range(0, 2)];
    const auto spec = sweep_spec(n, q(kSweepR[g.range(0, 2)]));
    const SimplexPoint p = random_simplex_point(g, 8, 5);
    const SimplexPoint s = random_simplex_point(g, 8, 5);
    ++out.cases;
    if (!shift_T(p).valid() || !shift_T(s).valid()) out.fail("shift left the simplex");
    const auto [before, after] = isometry_check(spec, p, s);
    if (before != after)
      out.fail("isometry failed: before " + before.str() + " after " + after.str());
  }
  {
    const auto spec = sweep_spec(1, q("1/2"));
    for (int K = 1; K <= 100; ++K) {
      ++out.cases;
      if (!fixed_point_free_certificate(spec, K).contradiction_reached)
        out.fail("fixed-point-free certificate failed at K=" + std::to_string(K));
    }
    const auto d = krasnoselskii_orbit(spec, SimplexPoint::at_estar(), 200);
    for (std::size_t k = 0; k < d.size(); ++k) {
      ++out.cases;
      if (!(d[k] > Rational(0))) out.fail("displacement hit zero at step " + std::to_string(k));
      if (k > 0 && d[k] > d[k - 1])
        out.fail("displacement increased at step " + std::to_string(k));
    }
  }
  {
    const auto rep = classic_c_example(200);
    ++out.cases;
    if (!rep.isometry_ok) out.fail("classical c example: isometry failed");
    if (!rep.fixed_point_free_ok) out.fail("classical c example: a sampled point was fixed");
    if (!rep.pairing_ok) out.fail("classical c example: weak* pairing identity failed");
    for (std::size_t k = 1; k < rep.displacements.size(); ++k)
      if (rep.displacements[k] > rep.displacements[k - 1])
        out.fail("classical orbit increased at step " + std::to_string(k));
  }
  return out;
}

// C5: gamma* closed form and the renorming pipeline bound: exact values at
// eps in {1/4, 1/8, 1/16}, monotone decrease while halving, and within 1/100
// of 4/3 by eps = 1/512.
Outcome criterion5() {
  Outcome out;
  out.cases = 3;
  if (gamma_star(0) != Rational(2)) out.fail("gamma_star(0) != 2");
  if (gamma_star(q("1/2")) != q("4/3")) out.fail("gamma_star(1/2) != 4/3");
  if (gamma_star(1) != Rational(1)) out.fail("gamma_star(1) != 1");

  const SummableSeq beta = SummableSeq::from_dense({q("1/2")});
  const Rational target = q("4/3");
  const char* frozen[] = {"8/3", "144/77", "544/345"};
  Rational eps = q("1/4");
  Rational prev;
  bool have_prev = false;
  for (int k = 0; k < 8; ++k) {
    const auto bundle = counterexample_pipeline(beta, eps);
    ++out.cases;
    if (k < 3 && bundle.distance_bound != q(frozen[k]))
      out.fail("bound at eps=" + eps.str() + " is " + bundle.distance_bound.str() +
               ", expected " + frozen[k]);
    if (k == 0 && (bundle.n != 1 || bundle.r_n != q("1/2")))
      out.fail("pipeline chose n=" + std::to_string(bundle.n) + ", r_n=" + bundle.r_n.str());
    if (have_prev && bundle.distance_bound >= prev)
      out.fail("bound did not decrease at eps=" + eps.str());
    if (!bundle.isometry_certified || !bundle.fixed_point_free_certified)
      out.fail("pipeline certificates failed at eps=" + eps.str());
    if (!(bundle.r_n > r_star(beta) - eps && bundle.r_n <= l1_norm(beta)))
      out.fail("r_n outside (r*-eps, |beta|_1] at eps=" + eps.str());
    prev = bundle.distance_bound;
    have_prev = true;
    eps = eps / Rational(2);
  }
  if (!(prev - target <= q("1/100")))
    out.fail("final bound " + prev.str() + " not within 1/100 of 4/3");
  return out;
}

// C6: Banach-Mazur upper bounds on the named cases.
Outcome criterion6() {
  Outcome out;
  {
    const auto res = bm_upper_c0(SummableSeq::zero(), 4, default_family(SummableSeq::zero()));
    ++out.cases;
    if (res.best != Rational(1)) out.fail("alpha=0 best " + res.best.str() + " != 1");
    if (!(res.best <= bm_upper_formula(SummableSeq::zero())))
      out.fail("alpha=0 exceeded the closed-form bound");
  }
  {
    const SummableSeq alpha = SummableSeq::basis(1);
    for (int N = 3; N <= 6; ++N) {
      const auto res = bm_upper_c0(alpha, N, default_family(alpha));
      ++out.cases;
      if (res.best != Rational(3))
        out.fail("c-like best at N=" + std::to_string(N) + " is " + res.best.str() + " != 3");
      bool insert2 = false;
      for (const auto& entry : res.report) {
        if (!entry.singular && entry.params.insert_scale &&
            *entry.params.insert_scale == Rational(2) && *entry.product == Rational(3))
          insert2 = true;
      }
      if (!insert2) out.fail("insert_scale=2 map missed product 3 at N=" + std::to_string(N));
      if (!(res.best <= bm_upper_formula(alpha)))
        out.fail("c-like case exceeded the closed-form bound");
    }
  }
  {
    const SummableSeq alpha =
        lump_tail(SummableSeq::from_dense({q("-1/2"), q("-1/4"), q("-1/8"), q("-1/16"), q("-1/32"), q("-1/32")}), 4);
    const auto res = bm_upper_c0(alpha, 6, default_family(alpha));
    ++out.cases;
    if (!(res.best <= Rational(3)))
      out.fail("lumped alpha best " + res.best.str() + " exceeds 3");
    if (!(res.best <= bm_upper_formula(alpha)))
      out.fail("lumped alpha exceeded the closed-form bound");
  }
  return out;
}

// C7: inscribed radius times the independently computed quotient inverse norm
// equals 1 on 100 random surjective maps with polyhedral norms.
Outcome criterion7() {
  Outcome out;
  SplitMix64 g(kDefaultSeed + 700);
  auto pick_norm = [&](int dim, int which) -> TruncatedSpace {
    switch (which % 4) {
      case 0: return TruncatedSpace::sup_space(dim);
      case 1: return TruncatedSpace::l1_space(dim);
      case 2: return TruncatedSpace::dual_n_space(dim, std::min(1, dim), q("1/2"));
      default:
        if (dim >= 2) return TruncatedSpace::renorm_space(dim - 1, 1, q("1/2"));
        return TruncatedSpace::sup_space(dim);
    }
  };
  int done = 0;
  while (done < 100) {
    const int dom_dim = g.range(2, 5);
    const int cod_dim = g.range(1, std::min(4, dom_dim));  // square onto maps included
    Mat m(cod_dim, Vec(dom_dim, 0));
    for (auto& row : m)
      for (auto& c : row) c = random_rational(g, 3, 2);
    if (rank(m) != cod_dim) continue;
    const TruncatedSpace dom = pick_norm(dom_dim, done);
    const TruncatedSpace cod = pick_norm(cod_dim, done / 4 + 1);
    const Rational radius = inscribed_radius({m}, dom, cod);
    const Rational qinv = quotient_inverse_norm({m}, dom, cod);
    ++out.cases;
    if (radius * qinv != Rational(1)) {
      std::ostringstream w;
      w << "case " << done << ": radius " << radius.str() << " times quotient norm "
        << qinv.str() << " != 1";
      out.fail(w.str());
    }
    ++done;
  }
  return out;
}

// C8: the kernel-distance bound along |xstar - xstar_n|_1 = 1/2^k, k = 1..10:
// at least 1, non-increasing, and bound - 1 <= 4 |xstar - xstar_n|_1.
Outcome criterion8() {
  Outcome out;
  const SummableSeq xstar = SummableSeq::basis(1);
  const ConvergentSeq z({0}, 1);  // xstar(z) = lim z = 1, sup norm 1
  for (int family = 0; family < 2; ++family) {
    Rational prev;
    bool have_prev = false;
    Rational step = q("1/2");
    for (int k = 1; k <= 10; ++k) {
      SummableSeq xn;
      if (family == 0) {
        xn = xstar;
        xn.set(2, step);  // perturbation mass step at a kernel coordinate
      } else {
        xn.set(1, Rational(1) - step / Rational(2));  // lambda_n != 1 branch
        xn.set(2, step / Rational(2));
      }
      const Rational gap = l1_norm(xstar - xn);
      const Rational bound = kernel_distance_bound(xstar, xn, z);
      ++out.cases;
      if (!(bound >= Rational(1))) out.fail("bound below 1 at k=" + std::to_string(k));
      if (have_prev && bound > prev)
        out.fail("bound increased at k=" + std::to_string(k) + " (family " +
                 std::to_string(family) + ")");
      if (!(bound - Rational(1) <= Rational(4) * gap))
        out.fail("bound - 1 exceeded 4|x*-x*_n|_1 at k=" + std::to_string(k) + " (family " +
                 std::to_string(family) + ")");
      prev = bound;
      have_prev = true;
      step = step / Rational(2);
    }
  }
  // The bound collapses to 1 exactly when lambda_n xstar_n = xstar.
  ++out.cases;
  if (kernel_distance_bound(xstar, xstar, z) != Rational(1))
    out.fail("bound at xstar_n = xstar is not 1");
  return out;
}

// C9: recorded constants and the corollary equivalence chain.
Outcome criterion9() {
  Outcome out;
  auto expect_value = [&](const char* key, const Rational& v) {
    ++out.cases;
    const auto f = fact_lookup(key);
    if (!f || !f->value || *f->value != v)
      out.fail(std::string("fact ") + key + " missing or wrong");
  };
  expect_value("eta_star_c0", Rational(3));
  expect_value("d_c_c0", Rational(3));
  expect_value("gamma_star_c0_upper", Rational(2));
  ++out.cases;
  if (!fact_lookup("r_star_zero_implies_c0")) out.fail("fact r_star_zero_implies_c0 missing");
  if (!fact_lookup("corollary_gamma_iff_dist")) out.fail("fact corollary_gamma_iff_dist missing");

  std::vector<SummableSeq> suite = {
      SummableSeq::zero(),
      SummableSeq::from_dense({q("1/2")}),
      SummableSeq::basis(1),
      lump_tail(SummableSeq::from_dense({q("-1/2"), q("-1/4"), q("-1/8"), q("-1/16"), q("-1/32"), q("-1/32")}), 4),
      SummableSeq::from_dense({q("1/4"), q("1/4")}),
  };
  SplitMix64 g(kDefaultSeed + 900);
  for (int i = 0; i < 100; ++i) {
    SummableSeq alpha;
    const int terms = g.range(1, 4);
    for (int t = 0; t < terms; ++t) alpha.set(g.range(1, 6), Rational(g.range(-4, 4), 16));
    if (l1_norm(alpha) <= Rational(1)) suite.push_back(alpha);
  }
  for (const auto& alpha : suite) {
    ++out.cases;
    if (!corollary_chain_consistent(alpha))
      out.fail("corollary chain broke at alpha=" + alpha.str());
  }
  return out;
}

const char* kDescriptions[] = {
    "dual-norm duality: closed form equals the vertex oracle exactly",
    "witness attainment: norm <= 1 and exact pairing on both branches",
    "sandwich inequalities, primal and dual, exact",
    "counterexample certification: isometry, T(C) in C, no fixed point, orbit",
    "stability constants: gamma* table and pipeline bound limits",
    "Banach-Mazur upper bounds on the named cases",
    "inscribed radius times quotient inverse norm equals 1",
    "kernel-distance bound: >= 1, monotone, linear in the gap",
    "recorded constants and the corollary equivalence chain",
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3,
                                               criterion4, criterion5, criterion6,
                                               criterion7, criterion8, criterion9};
  int failures = 0;
  for (int k = 1; k <= 9; ++k) {
    if (only != 0 && only != k) continue;
    const auto start = std::chrono::steady_clock::now();
    const Outcome out = criteria[k - 1]();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << k << ": "
              << kDescriptions[k - 1] << " (" << out.cases << " checks, " << secs << " s)";
    if (!out.pass) {
      std::cout << "\n       first failure: " << out.detail;
      ++failures;
    }
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}

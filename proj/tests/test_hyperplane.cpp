#include <doctest.h>

#include "predual/hyperplane.hpp"
#include "predual/oracle.hpp"
#include "predual/prng.hpp"

using namespace predual;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

HyperplaneSpec spec_n1_half() {
  return HyperplaneSpec::renormed(SummableSeq::from_dense({q("1/2")}), 1);
}

}  // namespace

TEST_CASE("membership and lift") {
  const auto spec = spec_n1_half();
  CHECK(member(spec, ConvergentSeq({0, 1}, 0)));
  CHECK(member(spec, ConvergentSeq({2}, 1)));
  const auto w0 = HyperplaneSpec::with_sup_norm(SummableSeq::zero());
  CHECK_FALSE(member(w0, ConvergentSeq({}, 1)));

  CHECK(lift(spec, {0, 1}) == ConvergentSeq({0, 1}, 0));
  CHECK(lift(spec, {2}) == ConvergentSeq({2}, 1));
  CHECK(lift(w0, {5}) == ConvergentSeq({5}, 0));
  CHECK_THROWS_WITH_AS(lift(spec, {}), "underdetermined: prefix shorter than alpha's support",
                       std::invalid_argument);
}

TEST_CASE("renormed norm: frozen values") {
  const auto spec = spec_n1_half();
  CHECK(norm_n(spec, ConvergentSeq({0, 1}, 0)) == q("3/2"));
  CHECK(norm_n(spec, ConvergentSeq({1}, q("1/2"))) == q("3/2"));
  CHECK(norm_n(spec, ConvergentSeq::zero()) == Rational(0));
  CHECK_THROWS_WITH_AS(norm_n(spec, ConvergentSeq({1}, 1)), "not in hyperplane",
                       std::invalid_argument);
}

TEST_CASE("dual norm closed form: frozen values") {
  const auto spec = spec_n1_half();
  CHECK(dual_norm_n(spec, SummableSeq::basis(2)) == q("2/3"));
  CHECK(dual_norm_n(spec, SummableSeq::basis(2) - SummableSeq::basis(3)) == Rational(1));
  CHECK(dual_norm_n(spec, SummableSeq::zero()) == Rational(0));
}

TEST_CASE("witness: attainment, both branches, boundary zeros") {
  const auto spec = spec_n1_half();
  {
    // Positive tail mass dominates: the mirrored branch.
    const auto x = witness(spec, SummableSeq::basis(2), 3);
    CHECK(x == ConvergentSeq({0, q("2/3"), q("-1/3")}, 0));
    CHECK(direct_pair(SummableSeq::basis(2), x) == q("2/3"));
    CHECK(pair(shift_up(SummableSeq::basis(2)), x) == q("2/3"));
    CHECK(norm_n(spec, x) <= Rational(1));
  }
  {
    // Head-only functional: ties resolve to the default branch.
    const auto x = witness(spec, SummableSeq::basis(1), 3);
    CHECK(x == ConvergentSeq({q("2/3"), q("1/3"), q("1/3")}, q("1/3")));
    CHECK(direct_pair(SummableSeq::basis(1), x) == q("2/3"));
    CHECK(member(spec, x));
  }
  CHECK(witness(spec, SummableSeq::zero(), 3) == ConvergentSeq::zero());
  CHECK_THROWS_WITH_AS(witness(spec, SummableSeq::basis(5), 4), "truncation below support",
                       std::invalid_argument);
  CHECK_THROWS_AS(witness(spec, SummableSeq::basis(1), 1), std::invalid_argument);
}

TEST_CASE("lump_tail") {
  const SummableSeq a = SummableSeq::from_dense({q("-1/2"), q("-1/4"), q("-1/8"), q("-1/16")});
  CHECK(lump_tail(a, 2) == SummableSeq::from_dense({q("-1/2"), q("-1/4"), q("3/16")}));
  const SummableSeq inside = SummableSeq::from_dense({q("1/3")});
  CHECK(lump_tail(inside, 2) == inside);
  CHECK(lump_tail(SummableSeq::zero(), 3) == SummableSeq::zero());
  CHECK(l1_norm(lump_tail(a, 1)) == l1_norm(a));
  // Lumping error is non-increasing in n and vanishes at the support bound.
  Rational prev = Rational(100);
  for (int n = 1; n <= 4; ++n) {
    const Rational err = l1_norm(a - lump_tail(a, n));
    CHECK(err <= prev);
    Rational tail = 0;
    for (const auto& [i, v] : a.support())
      if (i > n) tail += v.abs();
    CHECK(err <= Rational(2) * tail);
    prev = err;
  }
  CHECK(l1_norm(a - lump_tail(a, 4)) == Rational(0));
}

TEST_CASE("sandwich inequalities and duality properties") {
  SplitMix64 g(kDefaultSeed + 2);
  const int ns[] = {1, 2, 3};
  const Rational rs[] = {q("1/4"), q("1/2"), q("3/4")};
  for (const int n : ns) {
    for (const auto& r : rs) {
      // Alternating-sign defining functional spread over 1..n.
      SummableSeq alpha;
      for (int i = 1; i <= n; ++i) alpha.set(i, (i % 2 ? r : -r) / Rational(n));
      const auto spec = HyperplaneSpec::renormed(alpha, n);
      const Rational one = 1;
      for (int i = 0; i < 60; ++i) {
        const ConvergentSeq x = random_member(g, spec, g.range(n, 7));
        const Rational nn = norm_n(spec, x);
        CHECK((one + r) * sup_norm(x) <= nn);
        CHECK(nn <= Rational(2) * sup_norm(x));

        const SummableSeq f = random_functional(g, 7, 5);
        const Rational dn = dual_norm_n(spec, f);
        CHECK(Rational(1, 2) * l1_norm(f) <= dn);
        CHECK(dn <= l1_norm(f) / (one + r));

        // Pairing bound and witness attainment.
        CHECK(direct_pair(f, x) <= nn * dn);
        const int N = std::max(7, f.max_support());
        const auto w = witness(spec, f, N);
        CHECK(member(spec, w));
        CHECK(norm_n(spec, w) <= one);
        CHECK(direct_pair(f, w) == dn);
      }
    }
  }
}

TEST_CASE("dual norm equals the vertex oracle on a sampled slice") {
  SplitMix64 g(kDefaultSeed + 3);
  const auto spec = spec_n1_half();
  for (int i = 0; i < 25; ++i) {
    const SummableSeq f = random_functional(g, 4, 3);
    const Rational closed = dual_norm_n(spec, f);
    CHECK(closed == dual_norm_oracle(spec, f, 4));
    // The truncation level is immaterial once it clears the support.
    CHECK(closed == dual_norm_oracle(spec, f, 6));
  }
}

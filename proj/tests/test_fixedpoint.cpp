#include <doctest.h>

#include "predual/fixedpoint.hpp"
#include "predual/prng.hpp"

using namespace predual;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

HyperplaneSpec spec_n1_half() {
  return HyperplaneSpec::renormed(SummableSeq::from_dense({q("1/2")}), 1);
}

}  // namespace

TEST_CASE("embed") {
  const auto spec = spec_n1_half();
  CHECK(embed(spec, SimplexPoint::at_estar()) == spec.alpha);
  CHECK(embed(spec, SimplexPoint::at_basis(1)) == SummableSeq::basis(2));
  SimplexPoint p;
  p.t0 = q("1/2");
  p.weights[1] = q("1/2");
  CHECK(embed(spec, p) == SummableSeq::from_dense({q("1/4"), q("1/2")}));
  SimplexPoint bad;
  bad.t0 = q("1/2");
  CHECK_THROWS_AS(embed(spec, bad), std::invalid_argument);
}

TEST_CASE("shift map stays in the simplex") {
  SimplexPoint p = SimplexPoint::at_estar();
  SimplexPoint s = shift_T(p);
  CHECK(s == SimplexPoint::at_basis(1));
  CHECK(shift_T(s) == SimplexPoint::at_basis(2));
  SimplexPoint mixed;
  mixed.t0 = q("1/2");
  mixed.weights[1] = q("1/2");
  const SimplexPoint shifted = shift_T(mixed);
  CHECK(shifted.t0 == Rational(0));
  CHECK(shifted.weight(1) == q("1/2"));
  CHECK(shifted.weight(2) == q("1/2"));
  CHECK(shifted.valid());

  SplitMix64 g(kDefaultSeed + 20);
  for (int i = 0; i < 500; ++i) {
    const SimplexPoint r = random_simplex_point(g, 8, 5);
    CHECK(r.valid());
    CHECK(shift_T(r).valid());
  }
}

TEST_CASE("isometry: frozen values and random pairs") {
  const auto spec = spec_n1_half();
  {
    const auto [before, after] =
        isometry_check(spec, SimplexPoint::at_estar(), SimplexPoint::at_basis(1));
    CHECK(before == Rational(1));
    CHECK(after == Rational(1));
  }
  {
    const auto [before, after] =
        isometry_check(spec, SimplexPoint::at_estar(), SimplexPoint::at_estar());
    CHECK(before == Rational(0));
    CHECK(after == Rational(0));
  }
  {
    const auto [before, after] =
        isometry_check(spec, SimplexPoint::at_basis(1), SimplexPoint::at_basis(2));
    CHECK(before == Rational(1));
    CHECK(after == Rational(1));
  }
  SplitMix64 g(kDefaultSeed + 21);
  const Rational rs[] = {q("1/4"), q("1/2"), q("3/4")};
  for (int n = 1; n <= 3; ++n) {
    for (const auto& r : rs) {
      SummableSeq alpha;
      for (int i = 1; i <= n; ++i) alpha.set(i, (i % 2 ? r : -r) / Rational(n));
      const auto sp = HyperplaneSpec::renormed(alpha, n);
      for (int i = 0; i < 40; ++i) {
        const auto [before, after] =
            isometry_check(sp, random_simplex_point(g, 8, 5), random_simplex_point(g, 8, 5));
        CHECK(before == after);
      }
    }
  }
}

TEST_CASE("fixed point free certificate") {
  const auto spec = spec_n1_half();
  for (const int K : {1, 5, 100}) {
    const auto cert = fixed_point_free_certificate(spec, K);
    CHECK(cert.contradiction_reached);
    CHECK(cert.trace.size() == static_cast<std::size_t>(K) + 3);
  }
}

TEST_CASE("krasnoselskii orbit: non-increasing and positive") {
  const auto spec = spec_n1_half();
  const auto d = krasnoselskii_orbit(spec, SimplexPoint::at_estar(), 60);
  REQUIRE(d.size() == 60);
  CHECK(d[0] == Rational(1));  // |e* - e*_{n+1}|_n
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] > Rational(0));
    if (i) CHECK(d[i] <= d[i - 1]);
  }
}

TEST_CASE("classical example for the predual c") {
  const auto report = classic_c_example(30);
  CHECK(report.isometry_ok);
  CHECK(report.fixed_point_free_ok);
  CHECK(report.pairing_ok);
  CHECK(report.displacements.size() == 30);
  CHECK(report.displacements[0] == Rational(2));  // |e*_1 - e*_2|_1
  for (std::size_t i = 1; i < report.displacements.size(); ++i)
    CHECK(report.displacements[i] <= report.displacements[i - 1]);
}

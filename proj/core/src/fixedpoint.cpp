#include "predual/fixedpoint.hpp"

#include <sstream>

#include "predual/prng.hpp"

namespace predual {

bool SimplexPoint::valid() const {
  if (t0.sign() < 0) return false;
  Rational total = t0;
  for (const auto& [k, w] : weights) {
    if (k < 1 || w.sign() <= 0) return false;  // stored weights are nonzero
    total += w;
  }
  return total == Rational(1);
}

void SimplexPoint::require_valid() const {
  if (!valid()) throw std::invalid_argument("simplex constraint violated");
}

SummableSeq embed(const HyperplaneSpec& spec, const SimplexPoint& p) {
  if (spec.primal_norm != PrimalNorm::RenormN)
    throw std::invalid_argument("embed: spec is not renormed");
  p.require_valid();
  SummableSeq out = p.t0 * spec.alpha;
  for (const auto& [k, w] : p.weights) out.add(spec.n + k, w);
  return out;
}

SimplexPoint shift_T(const SimplexPoint& p) {
  SimplexPoint q;
  q.t0 = 0;
  if (!p.t0.is_zero()) q.weights[1] = p.t0;
  for (const auto& [k, w] : p.weights) q.weights[k + 1] = w;
  return q;
}

std::pair<Rational, Rational> isometry_check(const HyperplaneSpec& spec, const SimplexPoint& p,
                                             const SimplexPoint& q) {
  const Rational before = dual_norm_n(spec, embed(spec, p) - embed(spec, q));
  const Rational after = dual_norm_n(spec, embed(spec, shift_T(p)) - embed(spec, shift_T(q)));
  return {before, after};
}

FppCertificate fixed_point_free_certificate(const HyperplaneSpec& spec, int K) {
  if (K < 1) throw std::invalid_argument("fixed_point_free_certificate: K must be >= 1");
  FppCertificate cert;
  std::ostringstream head;
  head << "assume T(p) = p for p in C with weights supported on {t0, t1..t" << K << "}";
  cert.trace.push_back(head.str());
  // Comparing coefficients of e* (alpha is supported on 1..n, every shifted
  // basis vector lives past n, so the e* coefficient of T(p) is 0).
  cert.trace.push_back("coefficient of e*: t0 = 0");
  cert.trace.push_back("coefficient of e*_{n+1}: t1 = t0 = 0");
  for (int k = 1; k < K; ++k) {
    std::ostringstream line;
    line << "coefficient of e*_{n+" << k + 1 << "}: t" << k + 1 << " = t" << k << " = 0";
    cert.trace.push_back(line.str());
  }
  std::ostringstream tail;
  tail << "sum of weights = 0, but C requires sum = 1: contradiction (n=" << spec.n << ")";
  cert.trace.push_back(tail.str());
  cert.contradiction_reached = true;
  return cert;
}

SimplexPoint midpoint(const SimplexPoint& p, const SimplexPoint& q) {
  const Rational half(1, 2);
  SimplexPoint m;
  m.t0 = half * (p.t0 + q.t0);
  for (const auto& [k, w] : p.weights) m.weights[k] = half * w;
  for (const auto& [k, w] : q.weights) {
    const Rational v = m.weight(k) + half * w;
    if (v.is_zero())
      m.weights.erase(k);
    else
      m.weights[k] = v;
  }
  return m;
}

std::vector<Rational> krasnoselskii_orbit(const HyperplaneSpec& spec, const SimplexPoint& p0,
                                          int steps) {
  if (steps < 1) throw std::invalid_argument("krasnoselskii_orbit: steps must be >= 1");
  p0.require_valid();
  std::vector<Rational> displacements;
  displacements.reserve(steps);
  SimplexPoint p = p0;
  for (int k = 0; k < steps; ++k) {
    const SimplexPoint tp = shift_T(p);
    displacements.push_back(dual_norm_n(spec, embed(spec, p) - embed(spec, tp)));
    p = midpoint(p, tp);
  }
  return displacements;
}

namespace {

// The classical set for the predual c lives over the whole basis: a point
// with weights (t0, t1, ...) stands for t0 e*_1 + sum t_k e*_{1+k}.
SummableSeq embed_classic(const SimplexPoint& p) {
  SummableSeq out;
  if (!p.t0.is_zero()) out.set(1, p.t0);
  for (const auto& [k, w] : p.weights) out.add(1 + k, w);
  return out;
}

}  // namespace

ClassicCReport classic_c_example(int steps, int pairs, std::uint64_t seed) {
  if (steps < 1) throw std::invalid_argument("classic_c_example: steps must be >= 1");
  ClassicCReport report;
  SplitMix64 g(seed);

  report.isometry_ok = true;
  report.fixed_point_free_ok = true;
  for (int i = 0; i < pairs; ++i) {
    const SimplexPoint p = random_simplex_point(g, 8, 4);
    const SimplexPoint q = random_simplex_point(g, 8, 4);
    const Rational before = l1_norm(embed_classic(p) - embed_classic(q));
    const Rational after = l1_norm(embed_classic(shift_T(p)) - embed_classic(shift_T(q)));
    if (before != after) report.isometry_ok = false;
    // T(p) = p would force the vanishing chain t0 = t1 = ... = 0; no sampled
    // point may be fixed.
    if (embed_classic(shift_T(p)) == embed_classic(p)) report.fixed_point_free_ok = false;
  }
  report.pairs_checked = pairs;

  // Weak* convergence of the basis towards e*_1: on a representable x the
  // pairing with e*_m literally equals the pairing with e*_1 once m clears
  // the prefix.
  report.pairing_ok = true;
  for (int i = 0; i < 50 && report.pairing_ok; ++i) {
    std::vector<Rational> prefix;
    const int len = g.range(0, 5);
    for (int j = 0; j < len; ++j) prefix.push_back(random_rational(g, 6, 6));
    const ConvergentSeq x(prefix, random_rational(g, 6, 6));
    const Rational at_limit = pair(SummableSeq::basis(1), x);
    for (int m = x.prefix_len() + 2; m <= x.prefix_len() + 5; ++m) {
      if (pair(SummableSeq::basis(m), x) != at_limit) {
        report.pairing_ok = false;
        break;
      }
    }
  }

  SimplexPoint p = SimplexPoint::at_estar();
  for (int k = 0; k < steps; ++k) {
    const SimplexPoint tp = shift_T(p);
    report.displacements.push_back(l1_norm(embed_classic(p) - embed_classic(tp)));
    p = midpoint(p, tp);
  }
  return report;
}

}  // namespace predual

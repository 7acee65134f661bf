#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "predual/hyperplane.hpp"

namespace predual {

/// A point of the weak*-compact convex set
///   C = { t0 e* + sum_{k>=1} t_k e*_{n+k} : t_i >= 0, sum t_i = 1 },
/// stored as the barycentric weights: t0 on the defining functional e*, and
/// finitely many t_k on the shifted basis vectors.
struct SimplexPoint {
  Rational t0 = 0;
  std::map<int, Rational> weights;  // k >= 1 -> t_k, nonzero entries only

  static SimplexPoint at_estar() {
    SimplexPoint p;
    p.t0 = 1;
    return p;
  }
  static SimplexPoint at_basis(int k) {
    SimplexPoint p;
    p.weights[k] = 1;
    return p;
  }

  Rational weight(int k) const {
    auto it = weights.find(k);
    return it == weights.end() ? Rational(0) : it->second;
  }

  /// Simplex invariant: all weights nonnegative and summing to 1 exactly.
  bool valid() const;
  void require_valid() const;

  friend bool operator==(const SimplexPoint& a, const SimplexPoint& b) {
    return a.t0 == b.t0 && a.weights == b.weights;
  }
};

/// The explicit l1 element t0 e* + sum t_k e*_{n+k} (renormed spec required).
SummableSeq embed(const HyperplaneSpec& spec, const SimplexPoint& p);

/// The shift map T(t0 e* + sum t_k e*_{n+k}) = sum_{k>=0} t_k e*_{n+k+1}:
/// t0 feeds the first shifted basis vector, every t_k moves one step out.
SimplexPoint shift_T(const SimplexPoint& p);

/// Distances before and after applying T, both under |.|_n. T is an exact
/// isometry on C, so the two values agree.
std::pair<Rational, Rational> isometry_check(const HyperplaneSpec& spec, const SimplexPoint& p,
                                             const SimplexPoint& q);

struct FppCertificate {
  bool contradiction_reached = false;
  std::vector<std::string> trace;
};

/// Symbolic certificate that T has no fixed point: T(p) = p forces t0 = 0 and
/// t_{k+1} = t_k for all k, so every weight vanishes on a support bounded by
/// K, contradicting sum t_i = 1.
FppCertificate fixed_point_free_certificate(const HyperplaneSpec& spec, int K);

SimplexPoint midpoint(const SimplexPoint& p, const SimplexPoint& q);

/// Krasnoselskii iteration p_{k+1} = midpoint(p_k, T p_k) with exact
/// averaging; returns |embed(p_k) - embed(T p_k)|_n for k = 0..steps-1. The
/// sequence is non-increasing and strictly positive.
std::vector<Rational> krasnoselskii_orbit(const HyperplaneSpec& spec, const SimplexPoint& p0,
                                          int steps);

struct ClassicCReport {
  bool isometry_ok = false;
  bool fixed_point_free_ok = false;
  bool pairing_ok = false;
  int pairs_checked = 0;
  std::vector<Rational> displacements;
};

/// The classical failure of the fixed point property for the predual c: the
/// simplex over the whole l1 basis with the plain |.|_1 norm and the shift
/// map. Certifies exact isometry on random pairs, fixed-point-freeness, and
/// the weak* pairing identity pair(e*_m, x) = pair(e*_1, x) for m past the
/// prefix, and returns the orbit displacements from e*_1.
ClassicCReport classic_c_example(int steps, int pairs = 100, std::uint64_t seed = 0x5eed1234u);

}  // namespace predual

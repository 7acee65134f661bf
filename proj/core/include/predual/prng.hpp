#pragma once

#include <cstdint>
#include <vector>

#include "predual/fixedpoint.hpp"
#include "predual/hyperplane.hpp"

namespace predual {

/// SplitMix64: the documented generator behind every random suite. Fixed
/// seeds make suites reproducible across runs and platforms; no libc or
/// libstdc++ distribution machinery is involved.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant at suite sizes.
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed1234u;

inline Rational random_rational(SplitMix64& g, int max_abs_num, int max_den,
                                bool allow_zero = true) {
  for (;;) {
    const long num = g.range(-max_abs_num, max_abs_num);
    const long den = g.range(1, max_den);
    if (num == 0 && !allow_zero) continue;
    return Rational(num, den);
  }
}

/// Finitely supported functional with 1..max_terms nonzero entries at indices
/// within 1..max_index.
inline SummableSeq random_functional(SplitMix64& g, int max_index, int max_terms,
                                     int max_abs_num = 8, int max_den = 8) {
  SummableSeq f;
  const int terms = g.range(1, max_terms);
  for (int t = 0; t < terms; ++t)
    f.set(g.range(1, max_index), random_rational(g, max_abs_num, max_den, false));
  return f;
}

/// Simplex point with support in {t0} u {1..max_k}: integer weights divided
/// by their total, so the simplex constraint holds exactly.
inline SimplexPoint random_simplex_point(SplitMix64& g, int max_k, int max_terms) {
  std::vector<long> raw(static_cast<std::size_t>(max_k) + 1, 0);
  const int terms = g.range(1, max_terms);
  for (int t = 0; t < terms; ++t) raw[g.range(0, max_k)] += g.range(1, 9);
  long total = 0;
  for (const long w : raw) total += w;
  if (total == 0) {
    raw[0] = 1;
    total = 1;
  }
  SimplexPoint p;
  p.t0 = Rational(raw[0], total);
  for (int k = 1; k <= max_k; ++k) {
    if (raw[k] != 0) p.weights[k] = Rational(raw[k], total);
  }
  return p;
}

/// Random member of W_alpha: a random exact prefix completed by the
/// hyperplane constraint.
inline ConvergentSeq random_member(SplitMix64& g, const HyperplaneSpec& spec, int prefix_len,
                                   int max_abs_num = 6, int max_den = 6) {
  std::vector<Rational> prefix;
  prefix.reserve(prefix_len);
  for (int i = 0; i < prefix_len; ++i)
    prefix.push_back(random_rational(g, max_abs_num, max_den));
  return lift(spec, prefix);
}

}  // namespace predual

#pragma once

#include <vector>

#include "predual/sequences.hpp"

namespace predual {

enum class PrimalNorm { Sup, RenormN };
enum class DualNorm { L1, DualN };

/// A predual model: the hyperplane
///   W_alpha = { x in c : lim x = sum_i alpha(i) x(i) },  |alpha|_1 <= 1,
/// together with a choice of norm on it. The renormed variant requires alpha
/// supported on 1..n with r_n = |alpha|_1 in (0,1); r_n is always recomputed
/// from alpha, never trusted from input.
struct HyperplaneSpec {
  SummableSeq alpha;
  int n = 0;
  Rational r_n = 0;
  PrimalNorm primal_norm = PrimalNorm::Sup;
  DualNorm dual_norm = DualNorm::L1;

  /// W_alpha with the sup norm / l1 dual norm.
  static HyperplaneSpec with_sup_norm(SummableSeq alpha);

  /// W_alpha renormed: alpha supported on 1..n, r_n = |alpha|_1 in (0,1).
  static HyperplaneSpec renormed(SummableSeq alpha, int n);
};

/// Membership test: lim x = sum alpha(i) x(i), evaluated exactly.
bool member(const HyperplaneSpec& spec, const ConvergentSeq& x);

/// Canonical completion of a prefix to a member: the limit is forced by the
/// hyperplane constraint. The prefix must cover alpha's support.
ConvergentSeq lift(const HyperplaneSpec& spec, const std::vector<Rational>& prefix);

/**
 * The renormed norm on W_alpha:
 *
 *   ||x||_n = ( ||R_n x+||_inf v r_n ||R_n x-||_inf
 *             + ||R_n x-||_inf v r_n ||R_n x+||_inf ) v (1+r_n)||P_n x||_inf
 *
 * where P_n keeps coordinates 1..n, R_n = id - P_n, and v is max. Requires a
 * renormed spec and a member x.
 */
Rational norm_n(const HyperplaneSpec& spec, const ConvergentSeq& x);

/**
 * Closed form of the dual norm induced on l1 by ||.||_n, in the coordinate
 * pairing convention (f(j) pairs with x(j) directly):
 *
 *   |f|_n = max{ (r_n |R_n f+|_1 + |R_n f-|_1) / (1+r_n),
 *                (|R_n f+|_1 + r_n |R_n f-|_1) / (1+r_n) } + |P_n f|_1/(1+r_n).
 */
Rational dual_norm_n(const HyperplaneSpec& spec, const SummableSeq& f);

/**
 * Norming witness: a member x with norm_n(x) <= 1 attaining
 * direct_pair(f, x) = dual_norm_n(f) exactly. Coordinates:
 *   x(k) = sgn(f(k)) / (1+r_n)                        for k = 1..n,
 *   x(k) = -1/(1+r_n)        if f(k) < 0,             for k = n+1..N,
 *   x(k) = r_n/(1+r_n)       if f(k) >= 0,            for k = n+1..N,
 *   x(k) = (sum_{i<=n} sgn(f(i)) alpha(i)) / (1+r_n)  for k > N (the limit).
 * This is the branch for |R_n f-|_1 >= |R_n f+|_1; when the positive tail
 * mass strictly dominates the witness is the negation of the one built for
 * -f. sgn(0) = 0 in the head; the zero functional maps to the zero sequence.
 * Requires N > n and N >= max support of f.
 */
ConvergentSeq witness(const HyperplaneSpec& spec, const SummableSeq& f, int N);

/// Tail lumping: alpha_n = (alpha(1),...,alpha(n), sum_{i>n}|alpha(i)|, 0,...).
/// Preserves |.|_1 exactly; |alpha - alpha_n|_1 <= 2 sum_{i>n}|alpha(i)|.
SummableSeq lump_tail(const SummableSeq& alpha, int n);

}  // namespace predual

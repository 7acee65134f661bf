#pragma once

#include <optional>
#include <string>
#include <vector>

#include "predual/fixedpoint.hpp"
#include "predual/oracle.hpp"

namespace predual {

/// r*(W_alpha) = |alpha|_1: the basis functionals converge weak* to alpha in
/// the pairing against representable members, so the weak* limit points of
/// the extreme points of the l1 ball are +-alpha.
Rational r_star(const SummableSeq& alpha);

/// gamma*(X) = 2 / (1 + r*(X)) for r* in [0,1].
Rational gamma_star(const Rational& r);

/// The closed-form upper bound d(W_alpha, c0) <= 1 + 2|alpha|_1.
Rational bm_upper_formula(const SummableSeq& alpha);

enum class TranslateMode { None, Plain, Signed };

/// Candidate isomorphism W_alpha -> c0:
///  - Plain translate: y(i) = x(i) - lim x (invertible when sum alpha(i) != 1);
///  - Signed translate: y(i) = x(i) + sgn(alpha(i)) lim x on the support and
///    y(i) = x(i) - lim x off it (always invertible; realizes 1 + 2|alpha|_1);
///  - optional insertion: prepend insert_scale * lim x and drop the
///    coordinate drop_index (a nonzero alpha coordinate) to rebalance.
struct IsoFamilyParams {
  TranslateMode translate = TranslateMode::Plain;
  std::optional<Rational> insert_scale;
  std::optional<int> drop_index;

  std::string str() const;
  friend bool operator<(const IsoFamilyParams& a, const IsoFamilyParams& b);
};

struct BmCandidateReport {
  IsoFamilyParams params;
  bool singular = false;
  std::optional<Rational> norm_fwd;
  std::optional<Rational> norm_inv;
  std::optional<Rational> product;
};

struct BmResult {
  Rational best;
  IsoFamilyParams params;
  std::vector<BmCandidateReport> report;
};

std::vector<IsoFamilyParams> default_family(const SummableSeq& alpha);

/// Certified upper bound on d(W_alpha, c0) at truncation level N: builds each
/// candidate as an exact matrix between the W_alpha slice (sup norm) and
/// c0(N), verifies invertibility, evaluates both operator norms through the
/// vertex oracle, and returns the smallest product. Singular candidates are
/// skipped with a report entry; an empty family is an error.
BmResult bm_upper_c0(const SummableSeq& alpha, int N, const std::vector<IsoFamilyParams>& family,
                     int dim_limit = kDefaultDimensionLimit);

struct CounterexampleBundle {
  int n = 0;
  Rational r_n;
  HyperplaneSpec renorm;
  std::string set_C;
  std::string map_T;
  Rational distance_bound;
  bool isometry_certified = false;
  bool fixed_point_free_certified = false;
};

/// The renorming pipeline specialized to X = W_beta: picks the smallest n
/// with |R_n beta|_1 <= eps/2 and 0 < |P_n beta|_1 < 1, renorms W_{P_n beta},
/// wires in the set C and shift map T (certified isometric and fixed point
/// free), and reports the distance bound
///   2 (1 + eps) / ((1 - eps)(1 + r*(beta) - eps)).
CounterexampleBundle counterexample_pipeline(const SummableSeq& beta, const Rational& epsilon);

struct Fact {
  std::string key;
  std::string statement;
  std::optional<Rational> value;
  std::string source;
};

/// Machine-readable record of the cited constants: recorded facts, not
/// computations.
std::vector<Fact> facts_table();
std::optional<Fact> fact_lookup(const std::string& key);

/// The characterization chain for W_alpha: gamma* > 1 iff |alpha|_1 < 1 iff
/// 1 + 2|alpha|_1 < 3. Returns true when all three conditions agree.
bool corollary_chain_consistent(const SummableSeq& alpha);

}  // namespace predual

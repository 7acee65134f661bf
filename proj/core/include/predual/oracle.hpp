#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "predual/hyperplane.hpp"
#include "predual/linalg.hpp"
#include "predual/polytope.hpp"

namespace predual {

inline constexpr int kDefaultDimensionLimit = 10;

struct DimensionLimitError : std::runtime_error {
  explicit DimensionLimitError(const std::string& what) : std::runtime_error(what) {}
};

enum class BallNorm { Sup, L1, RenormN, DualN };

/// A polyhedral norm on a truncated coordinate space, with exact evaluation
/// and its decomposition into linear facet functionals (||v|| = max_g g.v).
struct NormSpec {
  BallNorm tag = BallNorm::Sup;
  int n = 0;        // head length for RenormN / DualN
  Rational r = 0;   // r_n for RenormN / DualN

  Rational eval(const Vec& v) const;
  std::vector<Vec> facet_normals(int dim) const;
};

/// Finite-dimensional model of a sequence-space ball. For primal spaces the
/// last coordinate is the limit: a vector (x(1..N), L) stands for the
/// eventually constant sequence equal to L past N. An optional hyperplane
/// constraint sum alpha(i) x(i) = L cuts the W_alpha slice.
struct TruncatedSpace {
  int dim = 0;
  NormSpec norm;
  std::optional<SummableSeq> constraint;

  static TruncatedSpace sup_space(int dim);
  static TruncatedSpace l1_space(int dim);
  static TruncatedSpace renorm_space(int prefix_len, int n, Rational r);
  static TruncatedSpace dual_n_space(int dim, int n, Rational r);
  /// The W_alpha slice at prefix length N, carrying the spec's primal norm.
  static TruncatedSpace primal_truncation(const HyperplaneSpec& spec, int N);

  Rational norm_value(const Vec& v) const { return norm.eval(v); }
};

struct LinearMapSpec {
  Mat matrix;  // rows = codomain dim, cols = domain dim

  int rows() const { return static_cast<int>(matrix.size()); }
  int cols() const { return matrix.empty() ? 0 : static_cast<int>(matrix[0].size()); }

  static LinearMapSpec identity(int n) { return {identity_matrix(n)}; }
};

/// All vertices of {norm <= 1} intersected with the constraint, enumerated
/// exactly and returned in lexicographic order. Every vertex has norm 1.
std::vector<Vec> ball_vertices(const TruncatedSpace& space,
                               int dim_limit = kDefaultDimensionLimit);

/// Brute-force dual norm: the maximum of the coordinate pairing with f over
/// the primal ball vertices. For a truncated point (x(1..N), L) the pairing
/// is sum_{j<=N} f(j)x(j) + (sum_{j>N} f(j)) L, which is exact for every
/// finitely supported f against the represented sequence.
Rational dual_norm_oracle(const TruncatedSpace& primal, const SummableSeq& f,
                          int dim_limit = kDefaultDimensionLimit);
Rational dual_norm_oracle(const HyperplaneSpec& spec, const SummableSeq& f, int N,
                          int dim_limit = kDefaultDimensionLimit);

/// The pairing maximum of dual_norm_oracle over an already enumerated vertex
/// set; callers sweeping many functionals against one ball reuse the vertices.
Rational max_pairing_over(const std::vector<Vec>& points, const SummableSeq& f);

/// Operator norm of a linear map between truncated spaces: the maximum of the
/// codomain norm over the domain ball vertices (exact; a convex function on a
/// polytope attains its maximum at a vertex).
Rational op_norm(const LinearMapSpec& map, const TruncatedSpace& dom, const TruncatedSpace& cod,
                 int dim_limit = kDefaultDimensionLimit);

/// Largest delta with delta B_cod inside map(B_dom), from the facet
/// description of the image polytope. Requires the map to be onto.
Rational inscribed_radius(const LinearMapSpec& map, const TruncatedSpace& dom,
                          const TruncatedSpace& cod, int dim_limit = kDefaultDimensionLimit);

/// Norm of the inverse of the induced quotient map dom/ker -> cod, computed
/// independently of inscribed_radius via the quotient-ball vertex description
/// in complement coordinates.
Rational quotient_inverse_norm(const LinearMapSpec& map, const TruncatedSpace& dom,
                               const TruncatedSpace& cod,
                               int dim_limit = kDefaultDimensionLimit);

/// Constructive upper bound (1+delta)(1+delta') on the Banach-Mazur distance
/// between ker xstar and ker xstar_n, from the projection difference
/// P(x) - P_n(x) = (lambda_n xstar_n - xstar)(x) z with xstar(z) = 1 and
/// lambda_n chosen so that xstar_n(lambda_n z) = 1. Returns the bound, not
/// the distance.
Rational kernel_distance_bound(const SummableSeq& xstar, const SummableSeq& xstar_n,
                               const ConvergentSeq& z);

}  // namespace predual

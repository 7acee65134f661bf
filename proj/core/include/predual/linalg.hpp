#pragma once

#include <optional>
#include <vector>

#include "predual/rational.hpp"

namespace predual {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row-major

Rational dot(const Vec& a, const Vec& b);
Vec mat_vec(const Mat& m, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& m);
Mat identity_matrix(int n);

int rank(Mat m);

/// One solution of m x = b, or nullopt when inconsistent. When the system is
/// underdetermined the free variables are set to zero (deterministic).
std::optional<Vec> solve(Mat m, Vec b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

/// Columns spanning the kernel of m, in reduced deterministic form.
std::vector<Vec> kernel_basis(const Mat& m);

}  // namespace predual

#pragma once

#include <vector>

#include "predual/linalg.hpp"

namespace predual {

/**
 * Vertex enumeration for {x in Q^dim : a.x <= 1 for every a in normals}.
 *
 * The normal set must be symmetric (a and -a both present) and span Q^dim,
 * which is exactly the shape of a polyhedral unit ball written as
 * max_a a.x <= 1. Enumeration runs the double-description update over the
 * homogenized cone: candidate active sets are generated incrementally, each
 * new ray is an exact solution of the 2x2 combination system on an adjacent
 * pair, and adjacency is decided combinatorially on exactly recomputed
 * active-constraint sets. Output is deduplicated and lexicographically
 * sorted, so results are reproducible bit for bit.
 */
std::vector<Vec> polytope_vertices(const std::vector<Vec>& normals, int dim);

/// Facet normals h (normalized to h.x <= 1) of conv(points) for a symmetric
/// spanning point set with 0 interior. By polarity this is the same
/// enumeration run on the polar ball.
std::vector<Vec> hull_facet_normals(const std::vector<Vec>& points, int dim);

}  // namespace predual

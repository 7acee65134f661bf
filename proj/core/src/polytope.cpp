#include "predual/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace predual {

namespace {

struct Ray {
  Vec coords;                  // dim entries plus the homogenizing t last
  std::vector<std::uint64_t> mask;  // active-constraint bits over processed halfspaces
};

// Scale to the primitive integer representative of the ray direction.
void canonicalize_ray(Vec& r) {
  mpz_class lcm_den = 1;
  for (const auto& c : r) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
    lcm_den = l;
  }
  if (lcm_den != 1) {
    const Rational scale{mpq_class(lcm_den)};
    for (auto& c : r) c *= scale;
  }
  mpz_class g = 0;
  for (const auto& c : r) {
    mpz_class gg;
    mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), c.numerator().get_mpz_t());
    g = gg;
  }
  if (g > 1) {
    const Rational scale{mpq_class(1, g)};
    for (auto& c : r) c *= scale;
  }
}

void mask_set(std::vector<std::uint64_t>& m, std::size_t i) { m[i >> 6] |= 1ull << (i & 63); }

int mask_popcount_and(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += __builtin_popcountll(a[i] & b[i]);
  return c;
}

// (a & b) subset of c?
bool mask_and_subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                     const std::vector<std::uint64_t>& c) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & b[i] & ~c[i]) != 0) return false;
  }
  return true;
}

bool lex_less(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

// Exact enclosing-box radius: pick a basis from the (symmetric) normal set;
// |b_k.x| <= 1 on the ball pins x inside the image of the cube under the
// basis inverse, whose coordinate bound is a row sum of absolute values.
Rational box_radius(const std::vector<Vec>& normals, int dim) {
  Mat basis;
  for (const auto& a : normals) {
    Mat probe = basis;
    probe.push_back(a);
    if (rank(probe) > static_cast<int>(basis.size())) basis.push_back(a);
    if (static_cast<int>(basis.size()) == dim) break;
  }
  if (static_cast<int>(basis.size()) < dim)
    throw std::invalid_argument("polytope_vertices: normals do not span (ball unbounded)");
  const auto inv = inverse(basis);
  Rational bound = 0;
  for (int i = 0; i < dim; ++i) {
    Rational row = 0;
    for (int j = 0; j < dim; ++j) row += (*inv)[j][i].abs();
    bound = max(bound, row);
  }
  return bound + 1;
}

Rational eval_halfspace(const Vec& a, const Ray& r) {
  Rational s = -r.coords.back();
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * r.coords[j];
  return s;
}

}  // namespace

std::vector<Vec> polytope_vertices(const std::vector<Vec>& normals_in, int dim) {
  if (dim < 1) throw std::invalid_argument("polytope_vertices: dim must be >= 1");
  std::vector<Vec> normals;
  normals.reserve(normals_in.size());
  for (const auto& a : normals_in) {
    if (static_cast<int>(a.size()) != dim)
      throw std::invalid_argument("polytope_vertices: normal of wrong dimension");
    bool zero = true;
    for (const auto& c : a) {
      if (!c.is_zero()) {
        zero = false;
        break;
      }
    }
    if (!zero) normals.push_back(a);
  }
  std::sort(normals.begin(), normals.end(), lex_less);
  normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
  {
    std::set<std::vector<std::string>> keys;
    for (const auto& a : normals) {
      std::vector<std::string> k;
      for (const auto& c : a) k.push_back(c.str());
      keys.insert(std::move(k));
    }
    for (const auto& a : normals) {
      std::vector<std::string> k;
      for (const auto& c : a) k.push_back((-c).str());
      if (!keys.count(k))
        throw std::invalid_argument("polytope_vertices: normal set not symmetric");
    }
  }

  const Rational c = box_radius(normals, dim);
  const Rational inv_c = Rational(1) / c;

  // Constraint list: the 2*dim box facets first, then the ball facets.
  std::vector<Vec> constraints;
  constraints.reserve(2 * dim + normals.size());
  for (int i = 0; i < dim; ++i) {
    Vec plus(dim, 0), minus(dim, 0);
    plus[i] = inv_c;
    minus[i] = -inv_c;
    constraints.push_back(std::move(plus));
    constraints.push_back(std::move(minus));
  }
  for (auto& a : normals) constraints.push_back(std::move(a));
  const std::size_t total = constraints.size();
  const std::size_t words = (total + 63) / 64;

  // Initial rays: the box vertices, each active on exactly dim box facets.
  std::vector<Ray> rays;
  rays.reserve(std::size_t(1) << dim);
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << dim); ++bits) {
    Ray r;
    r.coords.assign(dim + 1, 0);
    r.coords[dim] = 1;
    r.mask.assign(words, 0);
    for (int i = 0; i < dim; ++i) {
      const bool neg = (bits >> i) & 1u;
      r.coords[i] = neg ? -c : c;
      mask_set(r.mask, 2 * i + (neg ? 1 : 0));
    }
    canonicalize_ray(r.coords);
    rays.push_back(std::move(r));
  }

  std::vector<Rational> vals;
  for (std::size_t k = 2 * std::size_t(dim); k < total; ++k) {
    const Vec& a = constraints[k];
    vals.clear();
    vals.reserve(rays.size());
    bool any_pos = false;
    for (const auto& r : rays) {
      vals.push_back(eval_halfspace(a, r));
      if (vals.back().sign() > 0) any_pos = true;
    }
    if (!any_pos) {
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (vals[i].is_zero()) mask_set(rays[i].mask, k);
      }
      continue;
    }

    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const int s = vals[i].sign();
      if (s > 0)
        pos.push_back(i);
      else if (s < 0)
        neg.push_back(i);
      else
        zero.push_back(i);
    }

    auto adjacent = [&](std::size_t p, std::size_t m) {
      const auto& mp = rays[p].mask;
      const auto& mm = rays[m].mask;
      if (mask_popcount_and(mp, mm) < dim - 1) return false;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (q == p || q == m) continue;
        if (mask_and_subset(mp, mm, rays[q].mask)) return false;
      }
      return true;
    };

    std::vector<Ray> created;
    for (const auto p : pos) {
      for (const auto m : neg) {
        if (!adjacent(p, m)) continue;
        Ray nr;
        nr.coords.assign(dim + 1, 0);
        for (int j = 0; j <= dim; ++j)
          nr.coords[j] = vals[p] * rays[m].coords[j] - vals[m] * rays[p].coords[j];
        canonicalize_ray(nr.coords);
        nr.mask.assign(words, 0);
        for (std::size_t l = 0; l <= k; ++l) {
          if (eval_halfspace(constraints[l], nr).is_zero()) mask_set(nr.mask, l);
        }
        created.push_back(std::move(nr));
      }
    }

    std::vector<Ray> next;
    next.reserve(neg.size() + zero.size() + created.size());
    for (const auto i : neg) next.push_back(std::move(rays[i]));
    for (const auto i : zero) {
      mask_set(rays[i].mask, k);
      next.push_back(std::move(rays[i]));
    }
    for (auto& nr : created) next.push_back(std::move(nr));
    rays = std::move(next);
  }

  std::vector<Vec> vertices;
  vertices.reserve(rays.size());
  for (const auto& r : rays) {
    const Rational& t = r.coords.back();
    if (!(t > Rational(0)))
      throw std::logic_error("polytope_vertices: unbounded direction survived");
    Vec v;
    v.reserve(dim);
    for (int j = 0; j < dim; ++j) v.push_back(r.coords[j] / t);
    vertices.push_back(std::move(v));
  }
  std::sort(vertices.begin(), vertices.end(), lex_less);
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

std::vector<Vec> hull_facet_normals(const std::vector<Vec>& points, int dim) {
  return polytope_vertices(points, dim);
}

}  // namespace predual

#include "predual/oracle.hpp"

#include <algorithm>
#include <set>

namespace predual {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void append_sign_patterns(std::vector<Vec>& out, const Vec& base, const std::vector<int>& idx,
                          const Rational& hi, const Rational& lo, std::size_t at) {
  if (at == idx.size()) {
    out.push_back(base);
    return;
  }
  Vec with_hi = base;
  with_hi[idx[at]] = hi;
  append_sign_patterns(out, with_hi, idx, hi, lo, at + 1);
  Vec with_lo = base;
  with_lo[idx[at]] = lo;
  append_sign_patterns(out, with_lo, idx, hi, lo, at + 1);
}

bool is_zero_vec(const Vec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace

Rational NormSpec::eval(const Vec& v) const {
  const int dim = static_cast<int>(v.size());
  switch (tag) {
    case BallNorm::Sup: {
      Rational m = 0;
      for (const auto& c : v) m = max(m, c.abs());
      return m;
    }
    case BallNorm::L1: {
      Rational s = 0;
      for (const auto& c : v) s += c.abs();
      return s;
    }
    case BallNorm::RenormN: {
      require(n >= 1 && n < dim, "RenormN norm: need 1 <= n < dim");
      Rational head = 0;
      for (int i = 0; i < n; ++i) head = max(head, v[i].abs());
      Rational up = 0, um = 0;  // sup of tail positive / negative parts
      for (int i = n; i < dim; ++i) {
        if (v[i].sign() > 0)
          up = max(up, v[i]);
        else
          um = max(um, -v[i]);
      }
      const Rational tail_term = max(up, r * um) + max(um, r * up);
      return max(tail_term, (Rational(1) + r) * head);
    }
    case BallNorm::DualN: {
      require(n >= 0 && n <= dim, "DualN norm: need 0 <= n <= dim");
      Rational head = 0, tp = 0, tm = 0;
      for (int i = 0; i < dim; ++i) {
        if (i < n)
          head += v[i].abs();
        else if (v[i].sign() > 0)
          tp += v[i];
        else
          tm += -v[i];
      }
      const Rational denom = Rational(1) + r;
      return max(r * tp + tm, tp + r * tm) / denom + head / denom;
    }
  }
  throw std::logic_error("NormSpec::eval: unknown tag");
}

std::vector<Vec> NormSpec::facet_normals(int dim) const {
  std::vector<Vec> out;
  switch (tag) {
    case BallNorm::Sup: {
      for (int i = 0; i < dim; ++i) {
        Vec plus(dim, 0), minus(dim, 0);
        plus[i] = 1;
        minus[i] = -1;
        out.push_back(std::move(plus));
        out.push_back(std::move(minus));
      }
      break;
    }
    case BallNorm::L1: {
      std::vector<int> idx(dim);
      for (int i = 0; i < dim; ++i) idx[i] = i;
      append_sign_patterns(out, Vec(dim, 0), idx, 1, -1, 0);
      break;
    }
    case BallNorm::RenormN: {
      require(n >= 1 && n < dim, "RenormN facets: need 1 <= n < dim");
      for (int i = 0; i < n; ++i) {
        Vec plus(dim, 0), minus(dim, 0);
        plus[i] = Rational(1) + r;
        minus[i] = -(Rational(1) + r);
        out.push_back(std::move(plus));
        out.push_back(std::move(minus));
      }
      // Tail term: (max S1) + (max S2) with S1 = {x(i)} u {-r x(j)} u {0},
      // S2 = {-x(j)} u {r x(i)} u {0}; the facets are all pairwise sums.
      std::vector<Vec> s1{Vec(dim, 0)}, s2{Vec(dim, 0)};
      for (int i = n; i < dim; ++i) {
        Vec a(dim, 0), b(dim, 0), c(dim, 0), d(dim, 0);
        a[i] = 1;
        b[i] = -r;
        c[i] = -1;
        d[i] = r;
        s1.push_back(std::move(a));
        s1.push_back(std::move(b));
        s2.push_back(std::move(c));
        s2.push_back(std::move(d));
      }
      for (const auto& a : s1) {
        for (const auto& b : s2) {
          Vec sum(dim, 0);
          for (int j = 0; j < dim; ++j) sum[j] = a[j] + b[j];
          if (!is_zero_vec(sum)) out.push_back(std::move(sum));
        }
      }
      break;
    }
    case BallNorm::DualN: {
      require(n >= 0 && n <= dim, "DualN facets: need 0 <= n <= dim");
      const Rational denom = Rational(1) + r;
      std::vector<int> head_idx, tail_idx;
      for (int i = 0; i < n; ++i) head_idx.push_back(i);
      for (int i = n; i < dim; ++i) tail_idx.push_back(i);
      std::vector<Vec> heads;
      append_sign_patterns(heads, Vec(dim, 0), head_idx, Rational(1) / denom,
                           Rational(-1) / denom, 0);
      for (const auto& h : heads) {
        std::vector<Vec> branch;
        append_sign_patterns(branch, h, tail_idx, r / denom, Rational(-1) / denom, 0);
        append_sign_patterns(branch, h, tail_idx, Rational(1) / denom, -r / denom, 0);
        for (auto& g : branch)
          if (!is_zero_vec(g)) out.push_back(std::move(g));
      }
      break;
    }
  }
  return out;
}

TruncatedSpace TruncatedSpace::sup_space(int dim) {
  require(dim >= 1, "sup_space: dim must be >= 1");
  return {dim, {BallNorm::Sup, 0, 0}, std::nullopt};
}

TruncatedSpace TruncatedSpace::l1_space(int dim) {
  require(dim >= 1, "l1_space: dim must be >= 1");
  return {dim, {BallNorm::L1, 0, 0}, std::nullopt};
}

TruncatedSpace TruncatedSpace::renorm_space(int prefix_len, int n, Rational r) {
  require(n >= 1 && n <= prefix_len, "renorm_space: need 1 <= n <= prefix_len");
  return {prefix_len + 1, {BallNorm::RenormN, n, std::move(r)}, std::nullopt};
}

TruncatedSpace TruncatedSpace::dual_n_space(int dim, int n, Rational r) {
  require(dim >= 1 && n >= 0 && n <= dim, "dual_n_space: need 0 <= n <= dim");
  return {dim, {BallNorm::DualN, n, std::move(r)}, std::nullopt};
}

TruncatedSpace TruncatedSpace::primal_truncation(const HyperplaneSpec& spec, int N) {
  require(N >= 1, "primal_truncation: N must be >= 1");
  require(spec.alpha.max_support() <= N, "primal_truncation: N below alpha's support");
  TruncatedSpace s;
  s.dim = N + 1;
  if (spec.primal_norm == PrimalNorm::RenormN) {
    require(spec.n <= N, "primal_truncation: N below renorming index");
    s.norm = {BallNorm::RenormN, spec.n, spec.r_n};
  } else {
    s.norm = {BallNorm::Sup, 0, 0};
  }
  s.constraint = spec.alpha;
  return s;
}

std::vector<Vec> ball_vertices(const TruncatedSpace& space, int dim_limit) {
  if (space.dim > dim_limit) throw DimensionLimitError("oracle dimension limit");
  auto normals = space.norm.facet_normals(space.dim);
  if (!space.constraint) return polytope_vertices(normals, space.dim);

  // Slice by the hyperplane constraint: the limit coordinate (last) equals
  // sum alpha(j) x(j), so substitute it and enumerate in prefix coordinates.
  const int eff = space.dim - 1;
  require(eff >= 1, "ball_vertices: constrained space needs a nonempty prefix");
  require(space.constraint->max_support() <= eff, "ball_vertices: constraint exceeds prefix");
  std::vector<Vec> sliced;
  sliced.reserve(normals.size());
  for (const auto& g : normals) {
    Vec h(g.begin(), g.begin() + eff);
    const Rational& gl = g[eff];
    if (!gl.is_zero()) {
      for (const auto& [j, a] : space.constraint->support()) h[j - 1] += gl * a;
    }
    sliced.push_back(std::move(h));
  }
  auto verts = polytope_vertices(sliced, eff);
  std::vector<Vec> out;
  out.reserve(verts.size());
  for (auto& y : verts) {
    Rational limit = 0;
    for (const auto& [j, a] : space.constraint->support()) limit += a * y[j - 1];
    y.push_back(limit);
    out.push_back(std::move(y));
  }
  return out;
}

namespace {

Rational truncated_pairing(const SummableSeq& f, const Vec& point) {
  const int prefix = static_cast<int>(point.size()) - 1;
  Rational s = 0, tail = 0;
  for (const auto& [j, v] : f.support()) {
    if (j <= prefix)
      s += v * point[j - 1];
    else
      tail += v;
  }
  return s + tail * point.back();
}

}  // namespace

Rational max_pairing_over(const std::vector<Vec>& points, const SummableSeq& f) {
  Rational best = 0;
  for (const auto& v : points) best = max(best, truncated_pairing(f, v));
  return best;
}

Rational dual_norm_oracle(const TruncatedSpace& primal, const SummableSeq& f, int dim_limit) {
  return max_pairing_over(ball_vertices(primal, dim_limit), f);
}

Rational dual_norm_oracle(const HyperplaneSpec& spec, const SummableSeq& f, int N,
                          int dim_limit) {
  return dual_norm_oracle(TruncatedSpace::primal_truncation(spec, N), f, dim_limit);
}

namespace {

// Domain-slice basis: unconstrained spaces use the identity, constrained
// (x(1..N), L) spaces parametrize by the prefix with L = alpha.x appended.
Mat slice_basis(const TruncatedSpace& dom) {
  if (!dom.constraint) return identity_matrix(dom.dim);
  const int eff = dom.dim - 1;
  Mat e(dom.dim, Vec(eff, 0));
  for (int i = 0; i < eff; ++i) e[i][i] = 1;
  for (const auto& [j, a] : dom.constraint->support()) e[eff][j - 1] = a;
  return e;
}

void check_in_space(const TruncatedSpace& cod, const Vec& y) {
  if (!cod.constraint) return;
  Rational s = 0;
  for (const auto& [j, a] : cod.constraint->support()) s += a * y[j - 1];
  if (s != y.back()) throw std::invalid_argument("op_norm: image not in codomain");
}

}  // namespace

Rational op_norm(const LinearMapSpec& map, const TruncatedSpace& dom, const TruncatedSpace& cod,
                 int dim_limit) {
  require(map.cols() == dom.dim && map.rows() == cod.dim, "op_norm: dimension mismatch");
  const auto verts = ball_vertices(dom, dim_limit);
  Rational best = 0;
  for (const auto& v : verts) {
    const Vec y = mat_vec(map.matrix, v);
    check_in_space(cod, y);
    best = max(best, cod.norm_value(y));
  }
  return best;
}

namespace {

Mat effective_matrix(const LinearMapSpec& map, const TruncatedSpace& dom,
                     const TruncatedSpace& cod) {
  require(map.cols() == dom.dim && map.rows() == cod.dim,
          "inscribed_radius: dimension mismatch");
  require(!cod.constraint.has_value(), "inscribed_radius: constrained codomain not supported");
  return mat_mul(map.matrix, slice_basis(dom));
}

}  // namespace

Rational inscribed_radius(const LinearMapSpec& map, const TruncatedSpace& dom,
                          const TruncatedSpace& cod, int dim_limit) {
  const Mat m_eff = effective_matrix(map, dom, cod);
  if (rank(m_eff) != cod.dim) throw std::invalid_argument("not onto");
  const auto dom_verts = ball_vertices(dom, dim_limit);
  std::vector<Vec> images;
  images.reserve(dom_verts.size());
  for (const auto& v : dom_verts) images.push_back(mat_vec(map.matrix, v));
  const auto facets = hull_facet_normals(images, cod.dim);
  const auto cod_verts = ball_vertices(cod, dim_limit);
  std::optional<Rational> delta;
  for (const auto& h : facets) {
    Rational support = 0;
    for (const auto& u : cod_verts) support = max(support, dot(h, u));
    const Rational candidate = Rational(1) / support;
    if (!delta || candidate < *delta) delta = candidate;
  }
  return *delta;
}

Rational quotient_inverse_norm(const LinearMapSpec& map, const TruncatedSpace& dom,
                               const TruncatedSpace& cod, int dim_limit) {
  const Mat m_eff = effective_matrix(map, dom, cod);
  if (rank(m_eff) != cod.dim) throw std::invalid_argument("not onto");
  const int eff = static_cast<int>(m_eff[0].size());

  // Split the domain into ker(m_eff) and a deterministic complement; the
  // quotient ball is the projection of the domain ball onto the complement
  // coordinates.
  const auto ker = kernel_basis(m_eff);
  Mat columns;  // basis of Q^eff, kernel columns first
  for (const auto& kv : ker) columns.push_back(kv);
  for (int j = 0; j < eff && static_cast<int>(columns.size()) < eff; ++j) {
    Mat probe = columns;
    Vec e(eff, 0);
    e[j] = 1;
    probe.push_back(e);
    if (rank(probe) > static_cast<int>(columns.size())) columns.push_back(std::move(e));
  }
  const Mat p = mat_transpose(columns);  // columns as actual matrix columns
  const auto p_inv = inverse(p);
  const std::size_t q = ker.size();

  auto quotient_coords = [&](const Vec& slice_vec) {
    const Vec full = mat_vec(*p_inv, slice_vec);
    return Vec(full.begin() + static_cast<long>(q), full.end());
  };

  const auto dom_verts = ball_vertices(dom, dim_limit);
  std::vector<Vec> projected;
  projected.reserve(dom_verts.size());
  for (const auto& v : dom_verts) {
    const Vec slice_vec(v.begin(), v.begin() + eff);
    projected.push_back(quotient_coords(slice_vec));
  }
  const auto facets = hull_facet_normals(projected, cod.dim);

  Rational best = 0;
  for (const auto& u : ball_vertices(cod, dim_limit)) {
    const auto pre = solve(m_eff, u);
    if (!pre) throw std::logic_error("quotient_inverse_norm: preimage must exist");
    const Vec b = quotient_coords(*pre);
    Rational gauge = 0;
    for (const auto& g : facets) gauge = max(gauge, dot(g, b));
    best = max(best, gauge);
  }
  return best;
}

Rational kernel_distance_bound(const SummableSeq& xstar, const SummableSeq& xstar_n,
                               const ConvergentSeq& z) {
  if (pair(xstar, z) != Rational(1))
    throw std::invalid_argument("kernel bound: xstar(z) must equal 1");
  const Rational t = pair(xstar_n, z);
  if (!(t > Rational(0))) throw std::invalid_argument("normalization impossible");
  const Rational lambda = Rational(1) / t;
  const Rational zn = sup_norm(z);
  const Rational delta = l1_norm(lambda * xstar_n - xstar) * zn;
  const Rational delta_rev = l1_norm(xstar - lambda * xstar_n) * zn;
  return (Rational(1) + delta) * (Rational(1) + delta_rev);
}

}  // namespace predual

#include "predual/stability.hpp"

#include <algorithm>
#include <sstream>

#include "predual/prng.hpp"

namespace predual {

Rational r_star(const SummableSeq& alpha) {
  const Rational mass = l1_norm(alpha);
  if (mass > Rational(1)) throw std::invalid_argument("not a predual functional");
  return mass;
}

Rational gamma_star(const Rational& r) {
  if (r < Rational(0) || r > Rational(1))
    throw std::invalid_argument("gamma_star: r must lie in [0,1]");
  return Rational(2) / (Rational(1) + r);
}

Rational bm_upper_formula(const SummableSeq& alpha) {
  return Rational(1) + Rational(2) * l1_norm(alpha);
}

std::string IsoFamilyParams::str() const {
  std::ostringstream os;
  switch (translate) {
    case TranslateMode::None: os << "translate=none"; break;
    case TranslateMode::Plain: os << "translate=plain"; break;
    case TranslateMode::Signed: os << "translate=signed"; break;
  }
  if (insert_scale) os << ",insert=" << insert_scale->str() << ",drop=" << *drop_index;
  return os.str();
}

bool operator<(const IsoFamilyParams& a, const IsoFamilyParams& b) {
  if (a.translate != b.translate) return static_cast<int>(a.translate) < static_cast<int>(b.translate);
  const Rational sa = a.insert_scale.value_or(Rational(0));
  const Rational sb = b.insert_scale.value_or(Rational(0));
  if (sa != sb) return sa < sb;
  return a.drop_index.value_or(0) < b.drop_index.value_or(0);
}

std::vector<IsoFamilyParams> default_family(const SummableSeq& alpha) {
  std::vector<IsoFamilyParams> family;
  family.push_back({TranslateMode::Plain, std::nullopt, std::nullopt});
  family.push_back({TranslateMode::Signed, std::nullopt, std::nullopt});
  // Insertion variants drop the heaviest alpha coordinate; they only exist
  // when alpha has one.
  int drop = 0;
  Rational best_abs = 0;
  for (const auto& [i, v] : alpha.support()) {
    if (v.abs() > best_abs) {
      best_abs = v.abs();
      drop = i;
    }
  }
  if (drop > 0) {
    const Rational grid[] = {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2),
                             Rational(4)};
    for (const auto& c : grid) {
      family.push_back({TranslateMode::Plain, c, drop});
      family.push_back({TranslateMode::Signed, c, drop});
    }
  }
  return family;
}

namespace {

// Translate direction: y(i) = x(i) - beta(i) L with beta(i) = 1 (plain) or
// beta(i) = -sgn(alpha(i)) on the support (signed).
Rational translate_coeff(TranslateMode mode, const SummableSeq& alpha, int i) {
  if (mode == TranslateMode::None) return 0;
  if (mode == TranslateMode::Signed) {
    const int s = alpha.at(i).sign();
    if (s != 0) return Rational(-s);
  }
  return 1;
}

// Candidate matrix acting on (x(1..N), L); rows are the c0(N) coordinates.
std::optional<Mat> candidate_matrix(const IsoFamilyParams& params, const SummableSeq& alpha,
                                    int N) {
  Mat m;
  m.reserve(N);
  if (params.insert_scale) {
    if (*params.drop_index > N || alpha.at(*params.drop_index).is_zero()) return std::nullopt;
    Vec first(N + 1, 0);
    first[N] = *params.insert_scale;
    m.push_back(std::move(first));
    for (int i = 1; i <= N; ++i) {
      if (i == *params.drop_index) continue;
      Vec row(N + 1, 0);
      row[i - 1] = 1;
      row[N] = -translate_coeff(params.translate, alpha, i);
      m.push_back(std::move(row));
    }
  } else {
    if (params.translate == TranslateMode::None) return std::nullopt;  // not a map into c0
    for (int i = 1; i <= N; ++i) {
      Vec row(N + 1, 0);
      row[i - 1] = 1;
      row[N] = -translate_coeff(params.translate, alpha, i);
      m.push_back(std::move(row));
    }
  }
  return m;
}

}  // namespace

BmResult bm_upper_c0(const SummableSeq& alpha, int N, const std::vector<IsoFamilyParams>& family,
                     int dim_limit) {
  if (family.empty()) throw std::invalid_argument("bm_upper_c0: empty candidate family");
  if (alpha.max_support() > N)
    throw std::invalid_argument("bm_upper_c0: alpha not supported within 1..N");
  if (l1_norm(alpha) > Rational(1)) throw std::invalid_argument("not a predual functional");

  const HyperplaneSpec spec = HyperplaneSpec::with_sup_norm(alpha);
  const TruncatedSpace slice = TruncatedSpace::primal_truncation(spec, N);
  const TruncatedSpace c0_trunc = TruncatedSpace::sup_space(N);

  // Slice parametrization (x(1..N), L) <- x: identity over the prefix with
  // the constraint row appended.
  Mat embed_slice(N + 1, Vec(N, 0));
  for (int i = 0; i < N; ++i) embed_slice[i][i] = 1;
  for (const auto& [j, a] : alpha.support()) embed_slice[N][j - 1] = a;

  BmResult result;
  bool have_best = false;
  for (const auto& params : family) {
    BmCandidateReport entry;
    entry.params = params;
    const auto m = candidate_matrix(params, alpha, N);
    if (!m) {
      entry.singular = true;
      result.report.push_back(std::move(entry));
      continue;
    }
    const Mat restricted = mat_mul(*m, embed_slice);  // N x N
    const auto inv = inverse(restricted);
    if (!inv) {
      entry.singular = true;
      result.report.push_back(std::move(entry));
      continue;
    }
    const LinearMapSpec fwd{*m};
    const LinearMapSpec bwd{mat_mul(embed_slice, *inv)};  // (N+1) x N, lands on the slice
    entry.norm_fwd = op_norm(fwd, slice, c0_trunc, dim_limit);
    entry.norm_inv = op_norm(bwd, c0_trunc, slice, dim_limit);
    entry.product = *entry.norm_fwd * *entry.norm_inv;
    if (!have_best || *entry.product < result.best ||
        (*entry.product == result.best && params < result.params)) {
      result.best = *entry.product;
      result.params = params;
      have_best = true;
    }
    result.report.push_back(std::move(entry));
  }
  if (!have_best) throw std::invalid_argument("bm_upper_c0: every candidate was singular");
  return result;
}

CounterexampleBundle counterexample_pipeline(const SummableSeq& beta, const Rational& epsilon) {
  const Rational mass = l1_norm(beta);
  if (mass.is_zero() || mass > Rational(1))
    throw std::invalid_argument("counterexample_pipeline: need 0 < |beta|_1 <= 1");
  const Rational rs = r_star(beta);
  if (!(Rational(0) < epsilon && epsilon < rs)) throw std::invalid_argument("epsilon too large");

  // Smallest n whose lumped head is within eps/2 of beta while keeping the
  // head mass strictly inside (0,1).
  const Rational half_eps = epsilon / Rational(2);
  int n = 0;
  SummableSeq head;
  for (int candidate = 1; candidate <= beta.max_support(); ++candidate) {
    SummableSeq h;
    Rational tail_mass = 0;
    for (const auto& [i, v] : beta.support()) {
      if (i <= candidate)
        h.set(i, v);
      else
        tail_mass += v.abs();
    }
    const Rational head_mass = l1_norm(h);
    if (tail_mass <= half_eps && Rational(0) < head_mass && head_mass < Rational(1)) {
      n = candidate;
      head = std::move(h);
      break;
    }
  }
  if (n == 0) throw std::invalid_argument("degenerate head");

  CounterexampleBundle bundle;
  bundle.n = n;
  bundle.renorm = HyperplaneSpec::renormed(head, n);
  bundle.r_n = bundle.renorm.r_n;
  {
    std::ostringstream c;
    c << "C = { t0 e* + sum_k t_k e*_{" << n << "+k} : t_i >= 0, sum t_i = 1 }, e* = "
      << bundle.renorm.alpha.str();
    bundle.set_C = c.str();
    std::ostringstream t;
    t << "T(t0 e* + sum_k t_k e*_{" << n << "+k}) = sum_{k>=0} t_k e*_{" << n << "+k+1}";
    bundle.map_T = t.str();
  }
  bundle.distance_bound = (Rational(2) * (Rational(1) + epsilon)) /
                          ((Rational(1) - epsilon) * (Rational(1) + rs - epsilon));

  // Certify the wiring: exact isometry on deterministic and random pairs,
  // and the symbolic fixed-point-freeness chain.
  bundle.isometry_certified = true;
  SplitMix64 g(kDefaultSeed);
  std::vector<std::pair<SimplexPoint, SimplexPoint>> checks = {
      {SimplexPoint::at_estar(), SimplexPoint::at_basis(1)},
      {SimplexPoint::at_basis(1), SimplexPoint::at_basis(2)},
  };
  for (int i = 0; i < 25; ++i)
    checks.push_back({random_simplex_point(g, 6, 4), random_simplex_point(g, 6, 4)});
  for (const auto& [p, q] : checks) {
    const auto [before, after] = isometry_check(bundle.renorm, p, q);
    if (before != after) bundle.isometry_certified = false;
  }
  bundle.fixed_point_free_certified =
      fixed_point_free_certificate(bundle.renorm, 20).contradiction_reached;
  return bundle;
}

std::vector<Fact> facts_table() {
  std::vector<Fact> facts;
  facts.push_back({"eta_star_c0",
                   "the w*-fpp stability radius of c0 within preduals of l1 equals 3",
                   Rational(3), "restricted stability constant for c0"});
  facts.push_back({"d_c_c0", "the Banach-Mazur distance between c and c0 equals 3", Rational(3),
                   "Cambern (1968)"});
  facts.push_back({"gamma_star_c0_upper", "gamma*(c0) <= 2", Rational(2), "Lim (1980)"});
  facts.push_back({"r_star_zero_implies_c0", "if r*(X) = 0 then X = c0", std::nullopt,
                   "Durier-Papini (1993)"});
  facts.push_back({"corollary_gamma_iff_dist",
                   "for W_alpha with the w*-fpp: gamma*(W_alpha) > 1 iff d(W_alpha, c0) < 3",
                   std::nullopt, "combine gamma* = 2/(1+r*) with d(W_alpha, c0) <= 1+2|alpha|_1"});
  facts.push_back({"onto_iso_norm_lower",
                   "an onto isomorphism T: X -> c0 with ||T^{-1}|| = 1 from an l1 predual "
                   "failing the w*-fpp has ||T|| >= 3",
                   Rational(3), "extension of Cambern's argument via quotient openings"});
  return facts;
}

std::optional<Fact> fact_lookup(const std::string& key) {
  for (const auto& f : facts_table()) {
    if (f.key == key) return f;
  }
  return std::nullopt;
}

bool corollary_chain_consistent(const SummableSeq& alpha) {
  const Rational mass = l1_norm(alpha);
  if (mass > Rational(1)) throw std::invalid_argument("not a predual functional");
  const bool small_mass = mass < Rational(1);
  const bool gamma_above_one = gamma_star(r_star(alpha)) > Rational(1);
  const bool bound_below_three = bm_upper_formula(alpha) < Rational(3);
  return small_mass == gamma_above_one && gamma_above_one == bound_below_three;
}

}  // namespace predual

#include "predual/hyperplane.hpp"

#include <algorithm>

namespace predual {

HyperplaneSpec HyperplaneSpec::with_sup_norm(SummableSeq alpha) {
  if (l1_norm(alpha) > Rational(1))
    throw std::invalid_argument("not a predual functional: |alpha|_1 > 1");
  HyperplaneSpec s;
  s.alpha = std::move(alpha);
  s.n = 0;
  s.r_n = 0;
  s.primal_norm = PrimalNorm::Sup;
  s.dual_norm = DualNorm::L1;
  return s;
}

HyperplaneSpec HyperplaneSpec::renormed(SummableSeq alpha, int n) {
  if (n < 1) throw std::invalid_argument("renormed spec: n must be >= 1");
  if (alpha.max_support() > n)
    throw std::invalid_argument("renormed spec: alpha must be supported on 1..n");
  const Rational r = l1_norm(alpha);
  if (!(Rational(0) < r && r < Rational(1)))
    throw std::invalid_argument("renormed spec: r_n must lie in (0,1)");
  HyperplaneSpec s;
  s.alpha = std::move(alpha);
  s.n = n;
  s.r_n = r;
  s.primal_norm = PrimalNorm::RenormN;
  s.dual_norm = DualNorm::DualN;
  return s;
}

bool member(const HyperplaneSpec& spec, const ConvergentSeq& x) {
  Rational s = 0;
  for (const auto& [i, v] : spec.alpha.support()) s += v * x.at(i);
  return s == x.limit();
}

ConvergentSeq lift(const HyperplaneSpec& spec, const std::vector<Rational>& prefix) {
  if (static_cast<int>(prefix.size()) < spec.alpha.max_support())
    throw std::invalid_argument("underdetermined: prefix shorter than alpha's support");
  Rational limit = 0;
  for (const auto& [i, v] : spec.alpha.support()) limit += v * prefix[i - 1];
  return ConvergentSeq(prefix, limit);
}

Rational norm_n(const HyperplaneSpec& spec, const ConvergentSeq& x) {
  if (spec.primal_norm != PrimalNorm::RenormN)
    throw std::invalid_argument("norm_n: spec is not renormed");
  if (!member(spec, x)) throw std::invalid_argument("not in hyperplane");
  auto [head, tail] = split_at(x, spec.n);
  auto [tp, tm] = pos_neg(tail);
  const Rational up = sup_norm(tp);
  const Rational um = sup_norm(tm);
  const Rational tail_term = max(up, spec.r_n * um) + max(um, spec.r_n * up);
  const Rational head_term = (Rational(1) + spec.r_n) * sup_norm(head);
  return max(tail_term, head_term);
}

Rational dual_norm_n(const HyperplaneSpec& spec, const SummableSeq& f) {
  if (spec.dual_norm != DualNorm::DualN)
    throw std::invalid_argument("dual_norm_n: spec does not carry the renormed dual norm");
  Rational head = 0, tail_pos = 0, tail_neg = 0;
  for (const auto& [i, v] : f.support()) {
    if (i <= spec.n)
      head += v.abs();
    else if (v.sign() > 0)
      tail_pos += v;
    else
      tail_neg += -v;
  }
  const Rational denom = Rational(1) + spec.r_n;
  const Rational branch = max(spec.r_n * tail_pos + tail_neg, tail_pos + spec.r_n * tail_neg);
  return branch / denom + head / denom;
}

namespace {

// Witness for the branch where the negative tail mass dominates (ties
// included); the caller handles the mirrored case by negation.
ConvergentSeq witness_negative_dominant(const HyperplaneSpec& spec, const SummableSeq& f, int N) {
  const Rational denom = Rational(1) + spec.r_n;
  std::vector<Rational> prefix;
  prefix.reserve(N);
  for (int k = 1; k <= spec.n; ++k) prefix.push_back(Rational(f.at(k).sign()) / denom);
  for (int k = spec.n + 1; k <= N; ++k) {
    if (f.at(k).sign() < 0)
      prefix.push_back(Rational(-1) / denom);
    else
      prefix.push_back(spec.r_n / denom);
  }
  Rational limit = 0;
  for (const auto& [i, v] : spec.alpha.support()) limit += Rational(f.at(i).sign()) * v;
  limit /= denom;
  return ConvergentSeq(std::move(prefix), limit);
}

}  // namespace

ConvergentSeq witness(const HyperplaneSpec& spec, const SummableSeq& f, int N) {
  if (spec.primal_norm != PrimalNorm::RenormN)
    throw std::invalid_argument("witness: spec is not renormed");
  if (N <= spec.n || N < f.max_support())
    throw std::invalid_argument("truncation below support");
  if (f.is_zero()) return ConvergentSeq::zero();
  Rational tail_pos = 0, tail_neg = 0;
  for (const auto& [i, v] : f.support()) {
    if (i > spec.n) {
      if (v.sign() > 0)
        tail_pos += v;
      else
        tail_neg += -v;
    }
  }
  if (tail_pos > tail_neg) return -witness_negative_dominant(spec, -f, N);
  return witness_negative_dominant(spec, f, N);
}

SummableSeq lump_tail(const SummableSeq& alpha, int n) {
  if (n < 1) throw std::invalid_argument("lump_tail: n must be >= 1");
  SummableSeq out;
  Rational tail_mass = 0;
  for (const auto& [i, v] : alpha.support()) {
    if (i <= n)
      out.set(i, v);
    else
      tail_mass += v.abs();
  }
  out.set(n + 1, tail_mass);
  return out;
}

}  // namespace predual

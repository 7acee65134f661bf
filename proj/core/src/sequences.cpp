#include "predual/sequences.hpp"

#include <algorithm>
#include <sstream>

namespace predual {

ConvergentSeq ConvergentSeq::operator-() const {
  std::vector<Rational> p;
  p.reserve(prefix_.size());
  for (const auto& v : prefix_) p.push_back(-v);
  return ConvergentSeq(std::move(p), -limit_);
}

ConvergentSeq operator+(const ConvergentSeq& a, const ConvergentSeq& b) {
  const int n = std::max(a.prefix_len(), b.prefix_len());
  std::vector<Rational> p;
  p.reserve(n);
  for (int i = 1; i <= n; ++i) p.push_back(a.at(i) + b.at(i));
  return ConvergentSeq(std::move(p), a.limit() + b.limit());
}

ConvergentSeq operator-(const ConvergentSeq& a, const ConvergentSeq& b) { return a + (-b); }

ConvergentSeq operator*(const Rational& c, const ConvergentSeq& x) {
  std::vector<Rational> p;
  p.reserve(x.prefix().size());
  for (const auto& v : x.prefix()) p.push_back(c * v);
  return ConvergentSeq(std::move(p), c * x.limit());
}

std::string ConvergentSeq::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (i) os << ",";
    os << prefix_[i];
  }
  os << ";" << limit_ << ")";
  return os.str();
}

SummableSeq SummableSeq::operator-() const {
  SummableSeq g;
  for (const auto& [i, v] : support_) g.support_[i] = -v;
  return g;
}

SummableSeq operator+(const SummableSeq& a, const SummableSeq& b) {
  SummableSeq g = a;
  for (const auto& [i, v] : b.support_) g.add(i, v);
  return g;
}

SummableSeq operator-(const SummableSeq& a, const SummableSeq& b) { return a + (-b); }

SummableSeq operator*(const Rational& c, const SummableSeq& f) {
  SummableSeq g;
  if (c.is_zero()) return g;
  for (const auto& [i, v] : f.support_) g.support_[i] = c * v;
  return g;
}

std::string SummableSeq::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [i, v] : support_) {
    if (!first) os << ",";
    first = false;
    os << i << ":" << v;
  }
  os << "}";
  return os.str();
}

Rational pair(const SummableSeq& f, const ConvergentSeq& x) {
  Rational s = f.at(1) * x.limit();
  for (const auto& [i, v] : f.support()) {
    if (i >= 2) s += v * x.at(i - 1);
  }
  return s;
}

Rational direct_pair(const SummableSeq& f, const ConvergentSeq& x) {
  Rational s = 0;
  for (const auto& [i, v] : f.support()) s += v * x.at(i);
  return s;
}

SummableSeq shift_up(const SummableSeq& f) {
  SummableSeq g;
  for (const auto& [i, v] : f.support()) g.set(i + 1, v);
  return g;
}

Rational sup_norm(const ConvergentSeq& x) {
  Rational m = x.limit().abs();
  for (const auto& v : x.prefix()) m = max(m, v.abs());
  return m;
}

Rational l1_norm(const SummableSeq& f) {
  Rational s = 0;
  for (const auto& [i, v] : f.support()) s += v.abs();
  return s;
}

std::pair<ConvergentSeq, ConvergentSeq> split_at(const ConvergentSeq& x, int n) {
  if (n < 0) throw std::invalid_argument("split_at: n must be >= 0");
  std::vector<Rational> head;
  head.reserve(n);
  for (int i = 1; i <= n; ++i) head.push_back(x.at(i));
  std::vector<Rational> tail;
  const int len = std::max(n, x.prefix_len());
  tail.reserve(len);
  for (int i = 1; i <= len; ++i) tail.push_back(i <= n ? Rational(0) : x.at(i));
  return {ConvergentSeq(std::move(head), 0), ConvergentSeq(std::move(tail), x.limit())};
}

std::pair<ConvergentSeq, ConvergentSeq> pos_neg(const ConvergentSeq& x) {
  auto plus = [](const Rational& v) { return v.sign() > 0 ? v : Rational(0); };
  std::vector<Rational> p, m;
  p.reserve(x.prefix().size());
  m.reserve(x.prefix().size());
  for (const auto& v : x.prefix()) {
    p.push_back(plus(v));
    m.push_back(plus(-v));
  }
  return {ConvergentSeq(std::move(p), plus(x.limit())),
          ConvergentSeq(std::move(m), plus(-x.limit()))};
}

bool basis_tail_pairs_to_limit(const ConvergentSeq& x, int m) {
  if (m <= x.prefix_len() + 1) throw std::invalid_argument("basis index not past the prefix");
  return pair(SummableSeq::basis(m), x) == x.limit();
}

}  // namespace predual

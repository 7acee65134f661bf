#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "predual/rational.hpp"

namespace predual {

/// Element of c, the space of convergent sequences, in the eventually
/// constant model: an explicit finite prefix x(1..N) followed by a literally
/// constant tail equal to the limit. Canonical form trims trailing prefix
/// entries equal to the limit, which makes equality structural.
class ConvergentSeq {
 public:
  ConvergentSeq() = default;
  ConvergentSeq(std::vector<Rational> prefix, Rational limit)
      : prefix_(std::move(prefix)), limit_(std::move(limit)) {
    trim();
  }

  static ConvergentSeq zero() { return ConvergentSeq(); }
  static ConvergentSeq constant(Rational c) { return ConvergentSeq({}, std::move(c)); }

  /// 1-based coordinate access; indices past the prefix return the limit.
  const Rational& at(int i) const {
    if (i < 1) throw std::invalid_argument("ConvergentSeq::at: index must be >= 1");
    if (static_cast<std::size_t>(i) <= prefix_.size()) return prefix_[i - 1];
    return limit_;
  }

  const std::vector<Rational>& prefix() const { return prefix_; }
  const Rational& limit() const { return limit_; }
  int prefix_len() const { return static_cast<int>(prefix_.size()); }
  bool is_zero() const { return prefix_.empty() && limit_.is_zero(); }

  friend bool operator==(const ConvergentSeq& a, const ConvergentSeq& b) {
    return a.limit_ == b.limit_ && a.prefix_ == b.prefix_;
  }
  friend bool operator!=(const ConvergentSeq& a, const ConvergentSeq& b) { return !(a == b); }

  ConvergentSeq operator-() const;
  friend ConvergentSeq operator+(const ConvergentSeq& a, const ConvergentSeq& b);
  friend ConvergentSeq operator-(const ConvergentSeq& a, const ConvergentSeq& b);
  friend ConvergentSeq operator*(const Rational& c, const ConvergentSeq& x);

  std::string str() const;

 private:
  void trim() {
    while (!prefix_.empty() && prefix_.back() == limit_) prefix_.pop_back();
  }

  std::vector<Rational> prefix_;
  Rational limit_ = 0;
};

/// Element of l1 as a finitely supported exact coordinate list: only nonzero
/// entries are stored, keyed by 1-based index.
class SummableSeq {
 public:
  SummableSeq() = default;

  static SummableSeq zero() { return SummableSeq(); }
  static SummableSeq basis(int k) {
    SummableSeq f;
    f.set(k, 1);
    return f;
  }
  /// Dense construction: values are coordinates 1..n.
  static SummableSeq from_dense(const std::vector<Rational>& values) {
    SummableSeq f;
    for (std::size_t j = 0; j < values.size(); ++j) f.set(static_cast<int>(j) + 1, values[j]);
    return f;
  }

  Rational at(int i) const {
    auto it = support_.find(i);
    return it == support_.end() ? Rational(0) : it->second;
  }

  void set(int i, const Rational& v) {
    if (i < 1) throw std::invalid_argument("SummableSeq::set: index must be >= 1");
    if (v.is_zero())
      support_.erase(i);
    else
      support_[i] = v;
  }

  void add(int i, const Rational& v) { set(i, at(i) + v); }

  const std::map<int, Rational>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  int max_support() const { return support_.empty() ? 0 : support_.rbegin()->first; }

  friend bool operator==(const SummableSeq& a, const SummableSeq& b) {
    return a.support_ == b.support_;
  }
  friend bool operator!=(const SummableSeq& a, const SummableSeq& b) { return !(a == b); }

  SummableSeq operator-() const;
  friend SummableSeq operator+(const SummableSeq& a, const SummableSeq& b);
  friend SummableSeq operator-(const SummableSeq& a, const SummableSeq& b);
  friend SummableSeq operator*(const Rational& c, const SummableSeq& f);

  std::string str() const;

 private:
  std::map<int, Rational> support_;
};

/// Standard duality between c and l1:
///   f(x) = f(1) lim x + sum_{j>=1} f(j+1) x(j).
/// Coordinate 1 of the functional pairs with the limit, coordinate j+1 with
/// x(j). The sum is finite: f is finitely supported and x eventually constant.
Rational pair(const SummableSeq& f, const ConvergentSeq& x);

/// Coordinate pairing sum_j f(j) x(j), the convention of the duality map
/// carried by the renormed hyperplanes (no separate limit term).
Rational direct_pair(const SummableSeq& f, const ConvergentSeq& x);

/// Re-indexes a coordinate functional into the standard duality: the result g
/// has g(1)=0, g(j+1)=f(j), so pair(g, x) = direct_pair(f, x) on all of c.
SummableSeq shift_up(const SummableSeq& f);

Rational sup_norm(const ConvergentSeq& x);
Rational l1_norm(const SummableSeq& f);

/// Head/tail split: first = x(1..n) padded with a zero tail, second = the
/// remainder with x's limit. The two recombine to x exactly.
std::pair<ConvergentSeq, ConvergentSeq> split_at(const ConvergentSeq& x, int n);

/// Coordinatewise positive and negative parts (limit included); x = pos - neg.
std::pair<ConvergentSeq, ConvergentSeq> pos_neg(const ConvergentSeq& x);

/// Certificate that the basis functionals converge weak* against x: for every
/// m > prefix_len(x) + 1, pair(e*_m, x) equals the limit literally.
bool basis_tail_pairs_to_limit(const ConvergentSeq& x, int m);

}  // namespace predual

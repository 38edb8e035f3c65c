#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <vector>

#include "orthoforms/errors.hpp"

namespace orthoforms {

/// Exponent vector indexed by a VariableSpace. Exponents are nonnegative
/// and bounded by 65535; the bound is checked on multiplication.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  Monomial(std::initializer_list<unsigned> exps) {
    e_.reserve(exps.size());
    for (unsigned x : exps) e_.push_back(check_exp(x));
  }
  static Monomial from(std::span<const unsigned> exps) {
    Monomial m;
    m.e_.reserve(exps.size());
    for (unsigned x : exps) m.e_.push_back(check_exp(x));
    return m;
  }

  std::size_t nvars() const { return e_.size(); }
  unsigned exp(std::size_t i) const { return e_[i]; }
  void set_exp(std::size_t i, unsigned v) { e_[i] = check_exp(v); }

  bool is_unit() const {
    for (auto x : e_)
      if (x) return false;
    return true;
  }

  unsigned long total_degree() const {
    unsigned long d = 0;
    for (auto x : e_) d += x;
    return d;
  }

  long weighted_degree(std::span<const long> weights) const {
    long d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) d += weights[i] * long(e_[i]);
    return d;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  Monomial times(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
      unsigned long s = (unsigned long)r.e_[i] + other.e_[i];
      if (s > 65535) throw DegreeError("monomial exponent overflow");
      r.e_[i] = std::uint16_t(s);
    }
    return r;
  }

  /// Precondition: other.divides(*this).
  Monomial divided_by(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= other.e_[i];
    return r;
  }

  /// Graded reverse lexicographic order over the fixed variable order:
  /// compare total degree first, then the rightmost differing exponent
  /// (smaller exponent wins the tie). Returns -1, 0 or +1 for a <,=,> b.
  static int grevlex_cmp(const Monomial& a, const Monomial& b) {
    unsigned long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.e_.size(); i-- > 0;) {
      if (a.e_[i] != b.e_[i]) return a.e_[i] > b.e_[i] ? -1 : 1;
    }
    return 0;
  }

  bool operator==(const Monomial& other) const { return e_ == other.e_; }
  bool operator!=(const Monomial& other) const { return e_ != other.e_; }

private:
  static std::uint16_t check_exp(unsigned v) {
    if (v > 65535) throw DegreeError("monomial exponent overflow");
    return std::uint16_t(v);
  }

  std::vector<std::uint16_t> e_;
};

/// Strict-weak-order functors for ordered containers.
struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::grevlex_cmp(a, b) < 0;
  }
};
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::grevlex_cmp(a, b) > 0;
  }
};

}  // namespace orthoforms

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arbordyn/error.hpp"
#include "arbordyn/int_poly.hpp"

namespace arbordyn {

/// Dense polynomial over an exact field F (Rat or QuadExt), low to high.
template <class F>
class FieldPoly {
 public:
  FieldPoly() = default;
  explicit FieldPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static FieldPoly from(const IntPoly& f) {
    std::vector<F> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.emplace_back(Rat(x));
    return FieldPoly(std::move(c));
  }
  static FieldPoly constant(const F& v) { return FieldPoly(std::vector<F>{v}); }
  static FieldPoly linear(const F& c1, const F& c0) { return FieldPoly(std::vector<F>{c0, c1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  F operator[](std::size_t i) const { return i < c_.size() ? c_[i] : F(); }
  const F& lead() const {
    if (c_.empty()) throw Error(ErrorKind::invalid_argument, "leading coefficient of zero polynomial");
    return c_.back();
  }
  const std::vector<F>& coeffs() const { return c_; }

  FieldPoly operator+(const FieldPoly& o) const {
    std::vector<F> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] + o[i];
    return FieldPoly(std::move(r));
  }
  FieldPoly operator-(const FieldPoly& o) const {
    std::vector<F> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] - o[i];
    return FieldPoly(std::move(r));
  }
  FieldPoly operator*(const FieldPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<F> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return FieldPoly(std::move(r));
  }
  FieldPoly operator*(const F& s) const {
    std::vector<F> r = c_;
    for (auto& x : r) x *= s;
    return FieldPoly(std::move(r));
  }
  friend bool operator==(const FieldPoly& a, const FieldPoly& b) { return a.c_ == b.c_; }

  F eval(const F& x) const {
    F acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// sum c_i z^i w^(deg_h - i)
  F eval_homogeneous(const F& z, const F& w, unsigned deg_h) const {
    F acc;
    F wp = F(1);
    for (unsigned k = 0; k + c_.size() <= deg_h; ++k) wp = wp * w;
    // wp = w^(deg_h - degree); fold from the top coefficient down
    if (c_.empty()) return acc;
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * z + c_[i] * wp;
      wp = wp * w;
    }
    return acc;
  }

  FieldPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * F(static_cast<long>(i));
    return FieldPoly(std::move(d));
  }

  /// Quotient and remainder by a nonzero divisor.
  std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& d) const {
    if (d.is_zero()) throw Error(ErrorKind::invalid_argument, "division by zero polynomial");
    if (degree() < d.degree()) return {FieldPoly(), *this};
    std::vector<F> r = c_;
    std::vector<F> q(c_.size() - d.c_.size() + 1);
    const F inv = F(1) / d.lead();
    const int dd = d.degree();
    for (int k = degree(); k >= dd; --k) {
      F t = r[k] * inv;
      if (t == F()) continue;
      for (int i = 0; i <= dd; ++i) r[k - dd + i] -= t * d.c_[i];
      q[k - dd] = t;
    }
    r.resize(dd);
    return {FieldPoly(std::move(q)), FieldPoly(std::move(r))};
  }

  FieldPoly monic() const { return c_.empty() ? *this : *this * (F(1) / lead()); }

  /// Order of vanishing at x (nonzero polynomial).
  int root_multiplicity(const F& x) const {
    if (c_.empty()) throw Error(ErrorKind::invalid_argument, "root multiplicity in zero polynomial");
    int m = 0;
    std::vector<F> cur = c_;
    while (cur.size() > 1) {
      // synthetic division by (z - x)
      std::vector<F> q(cur.size() - 1);
      F acc;
      for (std::size_t i = cur.size(); i-- > 1;) {
        acc = acc * x + cur[i];
        q[i - 1] = acc;
      }
      F rem = acc * x + cur[0];
      if (!(rem == F())) break;
      ++m;
      cur = std::move(q);
    }
    return m;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == F()) c_.pop_back();
  }
  std::vector<F> c_;
};

template <class F>
FieldPoly<F> gcd(FieldPoly<F> a, FieldPoly<F> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace arbordyn

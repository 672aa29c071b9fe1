#include "arbordyn/quad_ext.hpp"

#include <algorithm>

#include "arbordyn/error.hpp"
#include "arbordyn/factor.hpp"

namespace arbordyn {

QuadExt::QuadExt(const Rat& x, const Rat& y, const Int& s) : x_(x), y_(y), s_(s) {
  if (y_ == 0) {
    s_ = 0;
  } else if (s_ == 0 || is_perfect_square(s_)) {
    throw Error(ErrorKind::invalid_argument, "sqrt(" + s_.get_str() + ") is rational");
  }
}

const Rat& QuadExt::to_rat() const {
  if (y_ != 0) throw Error(ErrorKind::not_rational, "value " + to_string() + " is not rational");
  return x_;
}

void QuadExt::adopt(const QuadExt& o) {
  if (o.y_ == 0) return;
  if (y_ == 0) {
    s_ = o.s_;
  } else if (s_ != o.s_) {
    throw Error(ErrorKind::invalid_argument, "mixing sqrt(" + s_.get_str() + ") and sqrt(" + o.s_.get_str() + ")");
  }
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  adopt(o);
  x_ += o.x_;
  y_ += o.y_;
  if (y_ == 0) s_ = 0;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  adopt(o);
  x_ -= o.x_;
  y_ -= o.y_;
  if (y_ == 0) s_ = 0;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  adopt(o);
  if (o.y_ == 0) {
    x_ *= o.x_;
    y_ *= o.x_;
  } else {
    Rat nx = x_ * o.x_ + Rat(s_) * y_ * o.y_;
    Rat ny = x_ * o.y_ + y_ * o.x_;
    x_ = std::move(nx);
    y_ = std::move(ny);
  }
  if (y_ == 0) s_ = 0;
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.is_zero()) throw Error(ErrorKind::invalid_argument, "division by zero");
  if (o.y_ == 0) {
    x_ /= o.x_;
    y_ /= o.x_;
    return *this;
  }
  const Rat n = o.norm();
  *this *= o.conj();
  x_ /= n;
  y_ /= n;
  if (y_ == 0) s_ = 0;
  return *this;
}

std::size_t QuadExt::height_bits() const {
  return std::max({bit_length(x_.get_num()), bit_length(x_.get_den()), bit_length(y_.get_num()),
                   bit_length(y_.get_den())});
}

std::string QuadExt::to_string() const {
  if (y_ == 0) return arbordyn::to_string(x_);
  std::string root = "sqrt(" + s_.get_str() + ")";
  std::string ypart;
  if (y_ == 1) ypart = root;
  else if (y_ == -1) ypart = "-" + root;
  else ypart = arbordyn::to_string(y_) + "*" + root;
  if (x_ == 0) return ypart;
  return arbordyn::to_string(x_) + (y_ > 0 ? "+" : "") + ypart;
}

Int squarefree_kernel(const Int& n) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "squarefree kernel of zero");
  Factorization f = factor_integer(n);
  if (f.cofactor_status == CofactorStatus::composite_unfactored)
    throw Error(ErrorKind::budget_exhausted, "cannot factor " + n.get_str() + " to find its squarefree part");
  Int k = f.sign;
  for (const auto& pp : f.factors)
    if (pp.exponent % 2 == 1) k *= pp.prime;
  k *= f.cofactor;
  return k;
}

}  // namespace arbordyn

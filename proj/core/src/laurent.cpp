/*
  laurent.cpp — exact integer Laurent polynomial arithmetic.
*/
#include "heckecat/laurent.hpp"

#include <sstream>

namespace heckecat {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw CoefficientOverflow("coefficient addition overflows 64 bits");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw CoefficientOverflow("coefficient multiplication overflows 64 bits");
  }
  return r;
}

}  // namespace

LaurentPoly::LaurentPoly(std::int64_t c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exp] = coeff;
  return p;
}

LaurentPoly LaurentPoly::v(int k) { return monomial(1, k); }

std::int64_t LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t LaurentPoly::eval_at_one() const {
  std::int64_t sum = 0;
  for (const auto& [e, c] : terms_) sum = checked_add(sum, c);
  return sum;
}

int LaurentPoly::min_exp() const { return terms_.begin()->first; }
int LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

void LaurentPoly::add_term(int exp, std::int64_t c) {
  if (c == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[-e] = c;
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e + k] = c;
  return out;
}

LaurentPoly LaurentPoly::subst_q(int sign) const {
  if (sign != 2 && sign != -2) {
    throw Error("subst_q: sign must be +2 or -2");
  }
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    if (e < 0) {
      throw NegativeQExponent("subst_q: polynomial in q has exponent " +
                              std::to_string(e));
    }
    out.terms_[sign * e] = c;
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = checked_mul(c, -1);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& r) {
  for (const auto& [e, c] : r.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& r) {
  for (const auto& [e, c] : r.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ea + eb, checked_mul(ca, cb));
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& r) {
  *this = *this * r;
  return *this;
}

std::string LaurentPoly::str(char var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const std::uint64_t mag =
        c < 0 ? ~static_cast<std::uint64_t>(c) + 1 : static_cast<std::uint64_t>(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag;
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace heckecat

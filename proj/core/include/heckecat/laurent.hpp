/*
  laurent.hpp — exact integer Laurent polynomials in the indeterminate v.

  The coefficient ring everywhere in heckecat is Z[v,v^-1].  Coefficients are
  64-bit integers with overflow detection; overflow is a hard error, never a
  silent wrap.  Polynomials "in q" (Kazhdan-Lusztig polynomials, q := v^2) are
  represented by the same type, with the exponent read as a q-power; subst_q
  moves between the two readings.
*/
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "heckecat/errors.hpp"

namespace heckecat {

class LaurentPoly {
 public:
  // The zero polynomial.
  LaurentPoly() = default;
  // The constant polynomial c.
  LaurentPoly(std::int64_t c);  // NOLINT: implicit by design, scalars embed

  // c * v^exp.
  static LaurentPoly monomial(std::int64_t coeff, int exp);
  // v^k.
  static LaurentPoly v(int k = 1);

  bool is_zero() const { return terms_.empty(); }
  // Coefficient of v^exp (0 if absent).
  std::int64_t coeff(int exp) const;
  // Sum of all coefficients, i.e. the evaluation v = 1.
  std::int64_t eval_at_one() const;
  // Smallest / largest exponent with nonzero coefficient.  Pre: !is_zero().
  int min_exp() const;
  int max_exp() const;

  // The bar involution v^k -> v^-k (a ring involution).
  LaurentPoly bar() const;
  // Multiplication by v^k.
  LaurentPoly shifted(int k) const;
  // Substitute q = v^sign into a polynomial in q; sign must be +2 or -2, and
  // every exponent must be >= 0 (throws NegativeQExponent otherwise).
  LaurentPoly subst_q(int sign) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& r);
  LaurentPoly& operator-=(const LaurentPoly& r);
  LaurentPoly& operator*=(const LaurentPoly& r);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly& r) const { return terms_ == r.terms_; }
  bool operator!=(const LaurentPoly& r) const { return !(*this == r); }

  // Exponent -> coefficient, no zero entries, ascending exponent order.
  const std::map<int, std::int64_t>& terms() const { return terms_; }

  // Text form "v^-1 + 2 + v^3" (ascending exponents); var names the
  // indeterminate, 'q' for polynomials in q.
  std::string str(char var = 'v') const;

 private:
  // Add c to the coefficient of v^exp, dropping the entry if it cancels.
  void add_term(int exp, std::int64_t c);

  std::map<int, std::int64_t> terms_;
};

}  // namespace heckecat

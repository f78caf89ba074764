#include <doctest.h>

#include "heckecat/laurent.hpp"

using heckecat::CoefficientOverflow;
using heckecat::LaurentPoly;
using heckecat::NegativeQExponent;

namespace {
LaurentPoly V(int k) { return LaurentPoly::v(k); }
}  // namespace

TEST_CASE("laurent: construction and normalization") {
  CHECK(LaurentPoly{}.is_zero());
  CHECK(LaurentPoly{0}.is_zero());
  CHECK(LaurentPoly{3}.coeff(0) == 3);
  CHECK(LaurentPoly::monomial(0, 5).is_zero());
  CHECK((V(1) - V(1)).is_zero());
  CHECK(V(0) == LaurentPoly{1});
}

TEST_CASE("laurent: ring arithmetic") {
  CHECK(V(1) + V(-1) == LaurentPoly::monomial(1, -1) + LaurentPoly::monomial(1, 1));

  const LaurentPoly b = V(-1) - V(1);
  CHECK(b * b == V(-2) - LaurentPoly{2} + V(2));

  // (1+q)|_{q=v^2} via a plain product chain: (1+v)(1+v) - 2v = 1 + v^2.
  CHECK((LaurentPoly{1} + V(1)) * (LaurentPoly{1} + V(1)) -
            LaurentPoly::monomial(2, 1) ==
        LaurentPoly{1} + V(2));

  // Distributivity and commutativity spot instances.
  const LaurentPoly p = LaurentPoly{2} + V(3);
  const LaurentPoly r = V(-2) - LaurentPoly{5};
  CHECK(p * r == r * p);
  CHECK(p * (r + b) == p * r + p * b);
  CHECK((-p) + p == LaurentPoly{});
}

TEST_CASE("laurent: bar involution") {
  CHECK(V(1).bar() == V(-1));
  CHECK(LaurentPoly{3}.bar() == LaurentPoly{3});
  CHECK((V(-1) - V(1)).bar() == V(1) - V(-1));

  const LaurentPoly p = LaurentPoly{2} + V(3) - V(-1);
  const LaurentPoly r = V(2) + LaurentPoly{7};
  CHECK(p.bar().bar() == p);
  CHECK((p * r).bar() == p.bar() * r.bar());
  CHECK((p + r).bar() == p.bar() + r.bar());
}

TEST_CASE("laurent: q substitution") {
  const LaurentPoly one_plus_q = LaurentPoly{1} + V(1);  // exponent read as q
  CHECK(one_plus_q.subst_q(2) == LaurentPoly{1} + V(2));
  CHECK(one_plus_q.subst_q(-2) == LaurentPoly{1} + V(-2));
  CHECK(LaurentPoly{1}.subst_q(-2) == LaurentPoly{1});
  CHECK_THROWS_AS((void)V(-1).subst_q(2), NegativeQExponent);
}

TEST_CASE("laurent: coefficient access and evaluation") {
  const LaurentPoly p = V(1) + LaurentPoly::monomial(2, 3);
  CHECK(p.coeff(3) == 2);
  CHECK(p.coeff(1) == 1);
  CHECK(LaurentPoly{1}.coeff(5) == 0);
  CHECK((V(-1) - V(1)).eval_at_one() == 0);
  CHECK((LaurentPoly{2} + V(4)).eval_at_one() == 3);

  const LaurentPoly r = LaurentPoly{1} + V(-2);
  CHECK(r.min_exp() == -2);
  CHECK(r.max_exp() == 0);
}

TEST_CASE("laurent: eval_at_one is a ring homomorphism") {
  const LaurentPoly p = LaurentPoly{2} + V(3) - V(-1);
  const LaurentPoly r = V(2) + LaurentPoly{7};
  CHECK((p * r).eval_at_one() == p.eval_at_one() * r.eval_at_one());
  CHECK((p + r).eval_at_one() == p.eval_at_one() + r.eval_at_one());
}

TEST_CASE("laurent: shifted") {
  const LaurentPoly p = LaurentPoly{1} + V(2);
  CHECK(p.shifted(3) == V(3) + V(5));
  CHECK(p.shifted(0) == p);
  CHECK(p.shifted(-2) == V(-2) + LaurentPoly{1});
}

TEST_CASE("laurent: overflow is a hard error") {
  constexpr std::int64_t kBig = INT64_MAX / 2 + 1;
  const LaurentPoly big = LaurentPoly::monomial(kBig, 0);
  CHECK_THROWS_AS((void)(big + big), CoefficientOverflow);
  CHECK_THROWS_AS((void)(big * LaurentPoly{3}), CoefficientOverflow);
}

TEST_CASE("laurent: text rendering") {
  CHECK((V(-1) + LaurentPoly{2} + V(3)).str() == "v^-1 + 2 + v^3");
  CHECK(LaurentPoly{}.str() == "0");
  CHECK(LaurentPoly{1}.str() == "1");
  CHECK(V(1).str() == "v");
  CHECK((-V(1)).str() == "-v");
  CHECK((V(-1) - V(1)).str() == "v^-1 - v");
  CHECK((LaurentPoly{1} + V(1)).str('q') == "1 + q");
  CHECK(LaurentPoly::monomial(2, 2).str('q') == "2q^2");
}

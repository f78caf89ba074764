#include <doctest.h>

#include "heckecat/io.hpp"
#include "heckecat/oracle.hpp"
#include "test_util.hpp"

using namespace heckecat;
using testutil::fixture;
using testutil::V;

TEST_CASE("io: Laurent rendering") {
  const LaurentPoly p = V(-1) + LaurentPoly{2} + LaurentPoly::monomial(1, 3);
  CHECK(render_laurent(p) == "v^-1 + 2 + v^3");
  CHECK(laurent_to_json(p) == R"({"-1":1,"0":2,"3":1})");
  CHECK(laurent_from_json(laurent_to_json(p)) == p);
  CHECK(laurent_from_json("{}").is_zero());
  CHECK_THROWS_AS((void)laurent_from_json("not json"), ParseError);
  CHECK_THROWS_AS((void)laurent_from_json(R"({"x":1})"), ParseError);
  CHECK_THROWS_AS((void)laurent_from_json(R"({"1":1.5})"), ParseError);
}

TEST_CASE("io: Hecke element rendering") {
  const auto& f = fixture("A2");
  HeckeElement h = HeckeElement::basis(f.g, f.g.longest());
  h.add_coeff(f.el("12"), V(1));
  CHECK(render_hecke(h) == "H[121] + v·H[12]");
  CHECK(render_hecke(HeckeElement::zero(f.g)) == "0");

  HeckeElement neg = HeckeElement::basis(f.g, f.el("1"));
  neg.add_coeff(f.el("e"), -V(-1));
  CHECK(render_hecke(neg) == "H[1] - v^-1·H[e]");

  CHECK(hecke_from_json(f.g, hecke_to_json(h)) == h);
  CHECK_THROWS_AS((void)hecke_from_json(f.g, R"({"terms":{}})"), ParseError);
}

TEST_CASE("io: character rendering") {
  const auto& f = fixture("A2");
  CharacterVector vec = CharacterVector::zero(BasisTag::DualVerma, f.g);
  vec.add_coeff(f.g.longest(), V(-1));
  vec.add_coeff(f.el("12"), LaurentPoly{1});
  CHECK(render_character(vec) == "v^-1·[∇(121)] + [∇(12)]");

  CharacterVector composite = CharacterVector::zero(BasisTag::Simple, f.g);
  composite.add_coeff(f.el("21"), V(1) + V(2) - V(3));
  CHECK(render_character(composite) == "(v + v^2 - v^3)·[L(21)]");

  // JSON round trip is the identity.
  const std::string json = character_to_json(vec);
  CHECK(character_from_json(f.g, json) == vec);
  CHECK(character_to_json(character_from_json(f.g, json)) == json);
  CHECK(json.find(R"("basis":"Nabla")") != std::string::npos);
  CHECK(json.find(R"("w":"121")") != std::string::npos);
  CHECK(json.find(R"("-1":1)") != std::string::npos);
}

TEST_CASE("io: CSV rendering") {
  const auto& f = fixture("A2");
  HeckeElement h = HeckeElement::basis(f.g, f.el("12"));
  h.add_coeff(f.el("e"), V(1) + LaurentPoly{1});
  CHECK(hecke_to_csv(h) == "w,coeff\n12,1\ne,1 + v\n");

  CharacterVector vec = CharacterVector::zero(BasisTag::Verma, f.g);
  vec.add_coeff(f.el("1"), V(-1) - V(1));
  CHECK(character_to_csv(vec) == "basis,w,coeff\nDelta,1,v^-1 - v\n");
}

TEST_CASE("io: report rendering") {
  auto& f = fixture("A2");
  const VerificationReport report = verify_suite(f.g, f.kl, {"quadratic"});
  const std::string text = report_to_text(report);
  CHECK(text.find("quadratic") != std::string::npos);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("overall: PASS") != std::string::npos);

  const std::string json = report_to_json(report);
  CHECK(json.find(R"("group": "A2")") != std::string::npos);
  CHECK(json.find(R"("passed": true)") != std::string::npos);

  const std::string csv = report_to_csv(report);
  CHECK(csv.rfind("check,instances,result,counterexample,note\n", 0) == 0);
  CHECK(csv.find("quadratic") != std::string::npos);
}

TEST_CASE("io: class expression grammar") {
  const auto& f = fixture("A2");
  const ClassExpr simple = parse_class_expr(f.g, "L[121]");
  CHECK(simple.basis == BasisTag::Simple);
  CHECK(simple.w == f.g.longest());
  CHECK(simple.shift == 0);

  const ClassExpr shifted = parse_class_expr(f.g, "delta[e]<2>");
  CHECK(shifted.basis == BasisTag::Verma);
  CHECK(shifted.w == f.g.identity());
  CHECK(shifted.shift == 2);

  const ClassExpr negative = parse_class_expr(f.g, "nabla[w0]<-3>");
  CHECK(negative.basis == BasisTag::DualVerma);
  CHECK(negative.w == f.g.longest());
  CHECK(negative.shift == -3);

  CHECK(parse_class_expr(f.g, "P[1]").basis == BasisTag::Projective);
  CHECK(parse_class_expr(f.g, "T[12]").basis == BasisTag::Tilting);
  CHECK(parse_class_expr(f.g, "I[21]").basis == BasisTag::Injective);

  CHECK_THROWS_AS((void)parse_class_expr(f.g, "X[1]"), ParseError);
  CHECK_THROWS_AS((void)parse_class_expr(f.g, "L[12"), ParseError);
  CHECK_THROWS_AS((void)parse_class_expr(f.g, "L[12]extra"), ParseError);
  // Element text goes through the group's parser, which rejects digits
  // beyond the rank as a malformed element.
  CHECK_THROWS_AS((void)parse_class_expr(f.g, "L[3]"), BadElement);
}

TEST_CASE("io: functor expression grammar") {
  const auto& f = fixture("A2");
  const FunctorStep twist = parse_functor_step(f.g, "T[121]");
  CHECK(twist.kind == FunctorKind::DerivedTwist);
  CHECK(twist.letters == std::vector<int>{1, 2, 1});

  CHECK(parse_functor_step(f.g, "C[12]").kind == FunctorKind::DerivedShuffle);
  CHECK(parse_functor_step(f.g, "theta[2]").kind == FunctorKind::Projective);
  CHECK(parse_functor_step(f.g, "Z1[1]").kind == FunctorKind::ZuckermanL1);
  CHECK(parse_functor_step(f.g, "Z2[2]").kind == FunctorKind::ZuckermanL2);
  CHECK(parse_functor_step(f.g, "T[e]").letters.empty());
  CHECK(parse_functor_step(f.g, "T[w0]").letters == std::vector<int>{1, 2, 1});

  CHECK_THROWS_AS((void)parse_functor_step(f.g, "Q[1]"), ParseError);
  CHECK_THROWS_AS((void)parse_functor_step(f.g, "Z1[12]"), ParseError);
  CHECK_THROWS_AS((void)parse_functor_step(f.g, "T[1]<2>"), ParseError);
}

TEST_CASE("io: pipelines compose right to left") {
  auto& f = fixture("A2");
  const std::vector<FunctorStep> steps = {parse_functor_step(f.g, "T[1]")};
  const CharacterVector out = apply_pipeline(
      f.eng, steps, f.ctx.unit(BasisTag::Simple, f.g.longest()));
  CharacterVector expected =
      f.ctx.unit(BasisTag::Simple, f.g.longest()).scaled(V(-1));
  expected.add_coeff(f.el("21"), LaurentPoly{1});
  CHECK(f.ctx.change_basis(out, BasisTag::Simple) == expected);

  // theta then twist equals twist then theta on the same class.
  const std::vector<FunctorStep> theta_then_twist = {
      parse_functor_step(f.g, "T[1]"), parse_functor_step(f.g, "theta[2]")};
  const std::vector<FunctorStep> twist_then_theta = {
      parse_functor_step(f.g, "theta[2]"), parse_functor_step(f.g, "T[1]")};
  const CharacterVector start = f.ctx.unit(BasisTag::DualVerma, f.el("12"));
  CHECK(f.ctx.change_basis(apply_pipeline(f.eng, theta_then_twist, start),
                           BasisTag::DualVerma) ==
        f.ctx.change_basis(apply_pipeline(f.eng, twist_then_theta, start),
                           BasisTag::DualVerma));
}

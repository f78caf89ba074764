// Rendering and parsing: text/JSON/CSV output for Laurent polynomials, Hecke
// elements, character vectors and verification reports, plus the command-line
// expression grammars for classes ("L[121]", "delta[e]<2>") and functor
// pipelines ("T[12]", "C[1]", "theta[2]", "Z1[1]", "Z2[1]").
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heckecat/coxeter.hpp"
#include "heckecat/functors.hpp"
#include "heckecat/hecke.hpp"
#include "heckecat/kgroup.hpp"
#include "heckecat/laurent.hpp"
#include "heckecat/oracle.hpp"

namespace heckecat {

// --- text ------------------------------------------------------------------
// Laurent polynomials render with ascending exponents: "v^-1 + 2 + v^3".
std::string render_laurent(const LaurentPoly& p);
// Hecke elements render with decreasing element id: "H[121] + v·H[12]".
std::string render_hecke(const HeckeElement& h);
// Character vectors likewise: "v^-1·[∇(121)] + [∇(12)]".
std::string render_character(const CharacterVector& vec);
std::string report_to_text(const VerificationReport& report);

// --- JSON ------------------------------------------------------------------
// Laurent: {"-1":1,"0":2,"3":1}.  Character vectors:
// {"basis":"Nabla","terms":[{"w":"121","coeff":{"-1":1}}]}.
std::string laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(std::string_view text);
std::string hecke_to_json(const HeckeElement& h);
HeckeElement hecke_from_json(const CoxeterGroup& g, std::string_view text);
std::string character_to_json(const CharacterVector& vec);
CharacterVector character_from_json(const CoxeterGroup& g, std::string_view text);
std::string report_to_json(const VerificationReport& report);

// --- CSV -------------------------------------------------------------------
std::string hecke_to_csv(const HeckeElement& h);
std::string character_to_csv(const CharacterVector& vec);
std::string report_to_csv(const VerificationReport& report);

// --- command-line expressions ----------------------------------------------
// A class token names one shifted basis class: L[121], delta[e], nabla[w0],
// P[1], T[12], I[21], optionally suffixed with a grading shift "<k>".
struct ClassExpr {
  BasisTag basis;
  Element w;
  int shift;
};
ClassExpr parse_class_expr(const CoxeterGroup& g, std::string_view text);

// One functor token: T[word] / C[word] / theta[word] / Z1[s] / Z2[s].
struct FunctorStep {
  FunctorKind kind;
  std::vector<int> letters;
};
FunctorStep parse_functor_step(const CoxeterGroup& g, std::string_view text);

// Applies the steps right to left (the token next to the class acts first).
// Twisting and shuffling route through costandard coordinates; the result
// stays in whatever basis the final step produces.
CharacterVector apply_pipeline(const FunctorEngine& engine,
                               std::span<const FunctorStep> steps,
                               const CharacterVector& start);

}  // namespace heckecat

// Text/JSON/CSV rendering and the command-line expression grammars.
#include "heckecat/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace heckecat {

namespace {

using nlohmann::json;

// Renders one basis-labelled term.  Unit coefficients are dropped, single
// monomials stay inline ("v^-1·[...]"), anything longer is parenthesized.
// The sign of a negative single monomial is returned separately so the
// caller can fold it into the " - " joiner.
struct TermText {
  bool negative;
  std::string text;
};

TermText render_term(const LaurentPoly& coeff, const std::string& label) {
  if (coeff.is_zero()) return {false, ""};  // never stored, defensive only
  const auto& terms = coeff.terms();
  if (terms.size() > 1) {
    return {false, "(" + coeff.str() + ")·" + label};
  }
  const auto& [exp, c] = *terms.begin();
  (void)exp;
  const bool negative = c < 0;
  const LaurentPoly magnitude = negative ? -coeff : coeff;
  const std::string body = magnitude.str();
  if (body == "1") return {negative, label};
  return {negative, body + "·" + label};
}

template <typename Terms, typename LabelFn>
std::string render_sum(const Terms& terms, LabelFn label_of) {
  if (terms.empty()) return "0";
  std::string out;
  // Decreasing element id, matching how the expansions are usually written.
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const TermText term = render_term(it->second, label_of(it->first));
    if (out.empty()) {
      out = (term.negative ? "-" : "") + term.text;
    } else {
      out += (term.negative ? " - " : " + ") + term.text;
    }
  }
  return out;
}

json laurent_json(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [exp, c] : p.terms()) out[std::to_string(exp)] = c;
  return out;
}

LaurentPoly laurent_of_json(const json& j) {
  if (!j.is_object()) throw ParseError("Laurent polynomial JSON must be an object");
  LaurentPoly out;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer()) {
      throw ParseError("Laurent coefficient must be an integer");
    }
    int exp = 0;
    const auto [ptr, ec] =
        std::from_chars(key.data(), key.data() + key.size(), exp);
    if (ec != std::errc() || ptr != key.data() + key.size()) {
      throw ParseError("bad Laurent exponent key '" + key + "'");
    }
    out += LaurentPoly::monomial(value.get<std::int64_t>(), exp);
  }
  return out;
}

json parse_json(std::string_view text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ParseError(std::string("malformed ") + what + " JSON");
  }
  return j;
}

template <typename Terms>
json terms_json(const CoxeterGroup& g, const Terms& terms) {
  json arr = json::array();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    json entry = json::object();
    entry["w"] = g.element_str(Element{it->first});
    entry["coeff"] = laurent_json(it->second);
    arr.push_back(std::move(entry));
  }
  return arr;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

// --- text --------------------------------------------------------------

std::string render_laurent(const LaurentPoly& p) { return p.str(); }

std::string render_hecke(const HeckeElement& h) {
  if (h.group() == nullptr) return h.is_zero() ? "0" : "?";
  const CoxeterGroup& g = *h.group();
  return render_sum(h.terms(), [&](std::uint32_t id) {
    return "H[" + g.element_str(Element{id}) + "]";
  });
}

std::string render_character(const CharacterVector& vec) {
  if (vec.group() == nullptr) return vec.is_zero() ? "0" : "?";
  const CoxeterGroup& g = *vec.group();
  const std::string symbol = basis_symbol(vec.basis());
  return render_sum(vec.terms(), [&](std::uint32_t id) {
    return "[" + symbol + "(" + g.element_str(Element{id}) + ")]";
  });
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "verification report: " << report.group.str() << " (seed "
      << report.seed << ")\n";
  out << "  check                     instances  result\n";
  std::size_t passed = 0;
  for (const auto& check : report.checks) {
    std::string name = check.name;
    if (name.size() < 24) name.resize(24, ' ');
    std::string count = std::to_string(check.instances);
    if (count.size() < 11) count.insert(0, 11 - count.size(), ' ');
    out << "  " << name << count << "  " << (check.passed ? "PASS" : "FAIL")
        << "\n";
    if (!check.counterexample.empty()) {
      out << "      counterexample: " << check.counterexample << "\n";
    }
    if (!check.note.empty()) {
      out << "      note: " << check.note << "\n";
    }
    if (check.passed) ++passed;
  }
  out << "overall: " << (report.all_passed() ? "PASS" : "FAIL") << " ("
      << passed << "/" << report.checks.size() << " checks)\n";
  return out.str();
}

// --- JSON --------------------------------------------------------------

std::string laurent_to_json(const LaurentPoly& p) {
  return laurent_json(p).dump();
}

LaurentPoly laurent_from_json(std::string_view text) {
  return laurent_of_json(parse_json(text, "Laurent polynomial"));
}

std::string hecke_to_json(const HeckeElement& h) {
  if (h.group() == nullptr) return R"({"terms":[]})";
  json out = json::object();
  out["terms"] = terms_json(*h.group(), h.terms());
  return out.dump();
}

HeckeElement hecke_from_json(const CoxeterGroup& g, std::string_view text) {
  const json j = parse_json(text, "Hecke element");
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw ParseError("Hecke JSON must be an object with a terms array");
  }
  HeckeElement out = HeckeElement::zero(g);
  for (const auto& entry : j["terms"]) {
    if (!entry.is_object() || !entry.contains("w") || !entry.contains("coeff")) {
      throw ParseError("Hecke term must carry w and coeff");
    }
    out.add_coeff(g.parse_element(entry["w"].get<std::string>()),
                  laurent_of_json(entry["coeff"]));
  }
  return out;
}

std::string character_to_json(const CharacterVector& vec) {
  json out = json::object();
  out["basis"] = basis_name(vec.basis());
  out["terms"] = vec.group() == nullptr ? json::array()
                                        : terms_json(*vec.group(), vec.terms());
  return out.dump();
}

CharacterVector character_from_json(const CoxeterGroup& g,
                                    std::string_view text) {
  const json j = parse_json(text, "character vector");
  if (!j.is_object() || !j.contains("basis") || !j.contains("terms") ||
      !j["terms"].is_array()) {
    throw ParseError("character JSON must carry basis and terms");
  }
  CharacterVector out(parse_basis(j["basis"].get<std::string>()), &g);
  for (const auto& entry : j["terms"]) {
    if (!entry.is_object() || !entry.contains("w") || !entry.contains("coeff")) {
      throw ParseError("character term must carry w and coeff");
    }
    out.add_coeff(g.parse_element(entry["w"].get<std::string>()),
                  laurent_of_json(entry["coeff"]));
  }
  return out;
}

std::string report_to_json(const VerificationReport& report) {
  json out = json::object();
  out["group"] = report.group.str();
  out["seed"] = report.seed;
  out["passed"] = report.all_passed();
  json checks = json::array();
  for (const auto& check : report.checks) {
    json entry = json::object();
    entry["name"] = check.name;
    entry["instances"] = check.instances;
    entry["passed"] = check.passed;
    if (!check.counterexample.empty()) {
      entry["counterexample"] = check.counterexample;
    }
    if (!check.note.empty()) entry["note"] = check.note;
    checks.push_back(std::move(entry));
  }
  out["checks"] = std::move(checks);
  return out.dump(2);
}

// --- CSV ---------------------------------------------------------------

std::string hecke_to_csv(const HeckeElement& h) {
  std::string out = "w,coeff\n";
  if (h.group() == nullptr) return out;
  const auto& terms = h.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    out += csv_escape(h.group()->element_str(Element{it->first})) + "," +
           csv_escape(it->second.str()) + "\n";
  }
  return out;
}

std::string character_to_csv(const CharacterVector& vec) {
  std::string out = "basis,w,coeff\n";
  if (vec.group() == nullptr) return out;
  const auto& terms = vec.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    out += std::string(basis_name(vec.basis())) + "," +
           csv_escape(vec.group()->element_str(Element{it->first})) + "," +
           csv_escape(it->second.str()) + "\n";
  }
  return out;
}

std::string report_to_csv(const VerificationReport& report) {
  std::string out = "check,instances,result,counterexample,note\n";
  for (const auto& check : report.checks) {
    out += csv_escape(check.name) + "," + std::to_string(check.instances) +
           "," + (check.passed ? "PASS" : "FAIL") + "," +
           csv_escape(check.counterexample) + "," + csv_escape(check.note) +
           "\n";
  }
  return out;
}

// --- command-line expressions -------------------------------------------

namespace {

// Splits "name[body]<shift>" into its three pieces; shift may be absent.
struct BracketExpr {
  std::string name;
  std::string body;
  int shift = 0;
};

BracketExpr split_bracket_expr(std::string_view text) {
  const auto lb = text.find('[');
  const auto rb = text.find(']', lb == std::string_view::npos ? 0 : lb);
  if (lb == std::string_view::npos || rb == std::string_view::npos || lb == 0) {
    throw ParseError("expected name[word], got '" + std::string(text) + "'");
  }
  BracketExpr out;
  out.name = std::string(text.substr(0, lb));
  out.body = std::string(text.substr(lb + 1, rb - lb - 1));
  std::string_view rest = text.substr(rb + 1);
  if (!rest.empty()) {
    if (rest.size() < 3 || rest.front() != '<' || rest.back() != '>') {
      throw ParseError("trailing text after ']' must be a shift '<k>' in '" +
                       std::string(text) + "'");
    }
    const std::string_view digits = rest.substr(1, rest.size() - 2);
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), out.shift);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("bad shift '" + std::string(rest) + "'");
    }
  }
  return out;
}

std::vector<int> parse_letters(const CoxeterGroup& g, const std::string& body) {
  if (body == "e") return {};
  if (body == "w0") {
    const auto& w = g.word(g.longest());
    return std::vector<int>(w.begin(), w.end());
  }
  std::vector<int> out;
  out.reserve(body.size());
  for (char c : body) {
    if (c < '1' || c > '9') {
      throw ParseError("generator letters must be digits 1-9, got '" +
                       std::string(1, c) + "'");
    }
    const int s = c - '0';
    if (s > g.rank()) {
      throw BadGeneratorIndex("generator " + std::to_string(s) +
                              " exceeds rank " + std::to_string(g.rank()));
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace

ClassExpr parse_class_expr(const CoxeterGroup& g, std::string_view text) {
  const BracketExpr expr = split_bracket_expr(text);
  return ClassExpr{parse_basis(expr.name), g.parse_element(expr.body),
                   expr.shift};
}

FunctorStep parse_functor_step(const CoxeterGroup& g, std::string_view text) {
  const BracketExpr expr = split_bracket_expr(text);
  std::string name;
  for (char c : expr.name) name += static_cast<char>(std::tolower(c));

  FunctorStep step;
  if (name == "t") {
    step.kind = FunctorKind::DerivedTwist;
  } else if (name == "c") {
    step.kind = FunctorKind::DerivedShuffle;
  } else if (name == "theta") {
    step.kind = FunctorKind::Projective;
  } else if (name == "z1") {
    step.kind = FunctorKind::ZuckermanL1;
  } else if (name == "z2") {
    step.kind = FunctorKind::ZuckermanL2;
  } else {
    throw ParseError("unknown functor '" + expr.name +
                     "' (expected T, C, theta, Z1 or Z2)");
  }
  if (expr.shift != 0) {
    throw ParseError("functors do not take a shift suffix");
  }
  step.letters = parse_letters(g, expr.body);
  if ((step.kind == FunctorKind::ZuckermanL1 ||
       step.kind == FunctorKind::ZuckermanL2) &&
      step.letters.size() != 1) {
    throw ParseError("Zuckerman functors take exactly one generator letter");
  }
  return step;
}

CharacterVector apply_pipeline(const FunctorEngine& engine,
                               std::span<const FunctorStep> steps,
                               const CharacterVector& start) {
  KGroupContext& ctx = engine.context();
  const CoxeterGroup& g = engine.group();
  CharacterVector current = start;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    switch (it->kind) {
      case FunctorKind::DerivedTwist:
        current = engine.apply_derived_twist_word(
            ctx.change_basis(current, BasisTag::DualVerma), it->letters);
        break;
      case FunctorKind::DerivedShuffle:
        current = engine.apply_derived_shuffle_word(
            ctx.change_basis(current, BasisTag::DualVerma), it->letters);
        break;
      case FunctorKind::Projective:
        current = engine.apply_theta(current, g.from_word(it->letters));
        break;
      case FunctorKind::ZuckermanL1:
        current = engine.apply_zuckerman(1, it->letters.front(), current);
        break;
      case FunctorKind::ZuckermanL2:
        current = engine.apply_zuckerman(2, it->letters.front(), current);
        break;
    }
  }
  return current;
}

}  // namespace heckecat

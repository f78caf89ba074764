// heckecat: exact Hecke-algebra and category-O Grothendieck-group calculator.
//
//   heckecat group A2
//   heckecat kl A3 --x 2 --y 2132
//   heckecat kl A2 --basis ucH --w 1
//   heckecat basis A2 "P[1]" --basis Delta
//   heckecat apply A2 "T[1]" "L[121]" --basis L
//   heckecat verify A3 --checks quadratic,braid --json report.json
//   heckecat cache build B3
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heckecat/cache.hpp"
#include "heckecat/functors.hpp"
#include "heckecat/io.hpp"
#include "heckecat/kgroup.hpp"
#include "heckecat/oracle.hpp"

namespace {

using namespace heckecat;

enum class Output { Text, Json, Csv };

struct CliConfig {
  std::string cartan;
  Output output = Output::Text;
  std::string cache_dir;
  bool no_cache = false;
  std::uint64_t seed = kDefaultSeed;
};

Output parse_output(const std::string& name) {
  if (name == "text") return Output::Text;
  if (name == "json") return Output::Json;
  if (name == "csv") return Output::Csv;
  throw ParseError("unknown output format '" + name + "'");
}

// Auto-loads a previously built table unless --no-cache was given.  A corrupt
// or mismatched cache file is reported and ignored (the table is recomputed),
// so a stale file never blocks a query.
void maybe_load_cache(KLCache& kl, const CliConfig& cfg) {
  if (cfg.no_cache) return;
  try {
    load_kl_cache(kl, cfg.cache_dir, cfg.seed);
  } catch (const CacheValidationError& ex) {
    std::cerr << "warning: ignoring cache: " << ex.what() << '\n';
  }
}

int cmd_group(const CliConfig& cfg, bool table) {
  const CoxeterGroup g(CartanType::parse(cfg.cartan));
  const Element w0 = g.longest();
  switch (cfg.output) {
    case Output::Text: {
      std::cout << g.type().str() << ": " << g.size() << " elements, rank "
                << g.rank() << ", w0 = " << g.element_str(w0) << " (length "
                << g.length(w0) << ")\n";
      if (table) {
        for (std::uint32_t id = 0; id < g.size(); ++id) {
          const Element w{id};
          std::cout << g.element_str(w) << "  length " << g.length(w)
                    << "  inverse " << g.element_str(g.inverse(w))
                    << "  left descents {";
          bool first = true;
          for (int s : g.descents(w, Side::Left)) {
            std::cout << (first ? "" : ",") << s;
            first = false;
          }
          std::cout << "}  right descents {";
          first = true;
          for (int s : g.descents(w, Side::Right)) {
            std::cout << (first ? "" : ",") << s;
            first = false;
          }
          std::cout << "}\n";
        }
      }
      break;
    }
    case Output::Json: {
      nlohmann::json doc = {{"cartan", g.type().str()},
                            {"order", g.size()},
                            {"rank", g.rank()},
                            {"w0", g.element_str(w0)},
                            {"positive_roots", g.type().positive_roots()}};
      if (table) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::uint32_t id = 0; id < g.size(); ++id) {
          const Element w{id};
          rows.push_back({{"w", g.element_str(w)},
                          {"length", g.length(w)},
                          {"inverse", g.element_str(g.inverse(w))},
                          {"left_descents", g.descents(w, Side::Left)},
                          {"right_descents", g.descents(w, Side::Right)}});
        }
        doc["elements"] = std::move(rows);
      }
      std::cout << doc.dump(2) << '\n';
      break;
    }
    case Output::Csv: {
      std::cout << "w,length,inverse\n";
      for (std::uint32_t id = 0; id < g.size(); ++id) {
        const Element w{id};
        std::cout << g.element_str(w) << ',' << g.length(w) << ','
                  << g.element_str(g.inverse(w)) << '\n';
      }
      break;
    }
  }
  return 0;
}

const HeckeElement& basis_expansion(KLCache& kl, const std::string& name,
                                    Element w, HeckeElement& storage) {
  if (name == "uH") return kl.kl_basis(w);
  if (name == "ucH") return kl.twisted_kl_basis(w);
  if (name == "huH") {
    storage = kl.dual_kl_basis(w);
    return storage;
  }
  if (name == "hucH") {
    storage = kl.dual_twisted_kl_basis(w);
    return storage;
  }
  throw ParseError("unknown basis '" + name + "' (expected uH|ucH|huH|hucH)");
}

int cmd_kl(const CliConfig& cfg, const std::string& x_word,
           const std::string& y_word, const std::string& w_word,
           const std::string& basis) {
  const CoxeterGroup g(CartanType::parse(cfg.cartan));
  KLCache kl(g);
  maybe_load_cache(kl, cfg);

  if (!x_word.empty() || !y_word.empty()) {
    if (x_word.empty() || y_word.empty()) {
      throw ParseError("--x and --y must be given together");
    }
    const Element x = g.parse_element(x_word);
    const Element y = g.parse_element(y_word);
    const LaurentPoly p = kl.kl_poly(x, y);
    const std::int64_t m = kl.mu(x, y);
    switch (cfg.output) {
      case Output::Text:
        std::cout << "P[" << g.element_str(x) << ',' << g.element_str(y)
                  << "] = " << p.str('q') << '\n'
                  << "mu[" << g.element_str(x) << ',' << g.element_str(y)
                  << "] = " << m << '\n';
        break;
      case Output::Json: {
        const nlohmann::json doc = {
            {"x", g.element_str(x)},
            {"y", g.element_str(y)},
            {"P", nlohmann::json::parse(laurent_to_json(p))},
            {"mu", m}};
        std::cout << doc.dump(2) << '\n';
        break;
      }
      case Output::Csv:
        std::cout << "x,y,P,mu\n"
                  << g.element_str(x) << ',' << g.element_str(y) << ",\""
                  << p.str('q') << "\"," << m << '\n';
        break;
    }
    return 0;
  }

  if (!w_word.empty()) {
    const Element w = g.parse_element(w_word);
    const std::vector<std::string> names =
        basis.empty() ? std::vector<std::string>{"uH", "ucH", "huH", "hucH"}
                      : std::vector<std::string>{basis};
    nlohmann::json doc = {{"w", g.element_str(w)}};
    if (cfg.output == Output::Csv) std::cout << "basis,w,coeff\n";
    for (const std::string& name : names) {
      HeckeElement storage(&g);
      const HeckeElement& h = basis_expansion(kl, name, w, storage);
      switch (cfg.output) {
        case Output::Text:
          std::cout << name << '[' << g.element_str(w)
                    << "] = " << render_hecke(h) << '\n';
          break;
        case Output::Json:
          doc[name] = nlohmann::json::parse(hecke_to_json(h));
          break;
        case Output::Csv: {
          for (const auto& [id, c] : h.terms()) {
            std::cout << name << ',' << g.element_str(Element{id}) << ",\""
                      << c.str() << "\"\n";
          }
          break;
        }
      }
    }
    if (cfg.output == Output::Json) std::cout << doc.dump(2) << '\n';
    return 0;
  }
  if (!basis.empty()) throw ParseError("--basis requires --w");

  // No filters: the whole P table (pairs x <= y with nonzero polynomial).
  if (cfg.output == Output::Csv) std::cout << "x,y,P,mu\n";
  nlohmann::json rows = nlohmann::json::array();
  for (std::uint32_t a = 0; a < g.size(); ++a) {
    for (std::uint32_t b = 0; b < g.size(); ++b) {
      const Element x{a}, y{b};
      if (!g.bruhat_leq(x, y)) continue;
      const LaurentPoly p = kl.kl_poly(x, y);
      switch (cfg.output) {
        case Output::Text:
          std::cout << "P[" << g.element_str(x) << ',' << g.element_str(y)
                    << "] = " << p.str('q') << '\n';
          break;
        case Output::Json:
          rows.push_back({{"x", g.element_str(x)},
                          {"y", g.element_str(y)},
                          {"P", nlohmann::json::parse(laurent_to_json(p))},
                          {"mu", kl.mu(x, y)}});
          break;
        case Output::Csv:
          std::cout << g.element_str(x) << ',' << g.element_str(y) << ",\""
                    << p.str('q') << "\"," << kl.mu(x, y) << '\n';
          break;
      }
    }
  }
  if (cfg.output == Output::Json) {
    std::cout << nlohmann::json{{"cartan", g.type().str()},
                                {"P", std::move(rows)}}
                     .dump(2)
              << '\n';
  }
  return 0;
}

void print_character(const CliConfig& cfg, const CharacterVector& vec) {
  switch (cfg.output) {
    case Output::Text:
      std::cout << render_character(vec) << '\n';
      break;
    case Output::Json:
      std::cout << character_to_json(vec) << '\n';
      break;
    case Output::Csv:
      std::cout << character_to_csv(vec);
      break;
  }
}

int cmd_basis(const CliConfig& cfg, const std::string& class_text,
              const std::string& target_name) {
  const CoxeterGroup g(CartanType::parse(cfg.cartan));
  KLCache kl(g);
  maybe_load_cache(kl, cfg);
  KGroupContext ctx(g, kl);

  const ClassExpr expr = parse_class_expr(g, class_text);
  const BasisTag target =
      target_name.empty() ? BasisTag::DualVerma : parse_basis(target_name);
  const CharacterVector vec =
      ctx.unit(expr.basis, expr.w).shifted(expr.shift);
  print_character(cfg, ctx.change_basis(vec, target));
  return 0;
}

int cmd_apply(const CliConfig& cfg, const std::vector<std::string>& tokens,
              const std::string& target_name) {
  if (tokens.empty()) throw ParseError("apply needs at least a class expression");
  const CoxeterGroup g(CartanType::parse(cfg.cartan));
  KLCache kl(g);
  maybe_load_cache(kl, cfg);
  KGroupContext ctx(g, kl);
  FunctorEngine eng(ctx);

  // The last token is the class; everything before it is a functor step,
  // applied right-to-left (composition order).
  const ClassExpr expr = parse_class_expr(g, tokens.back());
  std::vector<FunctorStep> steps;
  steps.reserve(tokens.size() - 1);
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    steps.push_back(parse_functor_step(g, tokens[i]));
  }

  const CharacterVector start =
      ctx.unit(expr.basis, expr.w).shifted(expr.shift);
  const CharacterVector result = apply_pipeline(eng, steps, start);
  const BasisTag target =
      target_name.empty() ? BasisTag::DualVerma : parse_basis(target_name);
  print_character(cfg, ctx.change_basis(result, target));
  return 0;
}

int cmd_verify(const CliConfig& cfg, const std::string& checks_csv,
               const std::string& json_path) {
  const CoxeterGroup g(CartanType::parse(cfg.cartan));
  KLCache kl(g);
  maybe_load_cache(kl, cfg);

  std::vector<std::string> filter;
  std::stringstream ss(checks_csv);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) filter.push_back(item);
  }

  const VerificationReport report = verify_suite(g, kl, filter, cfg.seed);
  switch (cfg.output) {
    case Output::Text:
      std::cout << report_to_text(report);
      break;
    case Output::Json:
      std::cout << report_to_json(report) << '\n';
      break;
    case Output::Csv:
      std::cout << report_to_csv(report);
      break;
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw Error("cannot write " + json_path);
    out << report_to_json(report) << '\n';
  }
  return report.all_passed() ? 0 : 1;
}

int cmd_cache_build(const CliConfig& cfg) {
  const CoxeterGroup g(CartanType::parse(cfg.cartan));
  KLCache kl(g);
  const auto path = save_kl_cache(kl, cfg.cache_dir);
  std::cout << "wrote " << path.string() << '\n';
  return 0;
}

int cmd_cache_path(const CliConfig& cfg) {
  std::cout << cache_file(CartanType::parse(cfg.cartan), cfg.cache_dir).string()
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Kazhdan-Lusztig / graded category O calculator"};
  app.require_subcommand(1);

  std::string output_name = "text";
  CliConfig cfg;
  app.add_option("--output", output_name, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache-dir", cfg.cache_dir, "cache directory override");
  app.add_flag("--no-cache", cfg.no_cache, "do not read a saved KL table");
  app.add_option("--seed", cfg.seed, "seed for randomized spot checks");

  auto* group_cmd = app.add_subcommand("group", "group order, w0, element table");
  bool group_table = false;
  group_cmd->add_option("cartan", cfg.cartan, "Cartan type, e.g. A3")->required();
  group_cmd->add_flag("--table", group_table, "list every element");

  auto* kl_cmd = app.add_subcommand("kl", "KL polynomials and basis expansions");
  std::string kl_x, kl_y, kl_w, kl_basis;
  kl_cmd->add_option("cartan", cfg.cartan)->required();
  kl_cmd->add_option("--x", kl_x, "lower element of P_{x,y}");
  kl_cmd->add_option("--y", kl_y, "upper element of P_{x,y}");
  kl_cmd->add_option("--w", kl_w, "element whose basis expansions to print");
  kl_cmd->add_option("--basis", kl_basis, "one of uH|ucH|huH|hucH");

  auto* basis_cmd = app.add_subcommand("basis", "rewrite a class in another basis");
  std::string basis_class, basis_target;
  basis_cmd->add_option("cartan", cfg.cartan)->required();
  basis_cmd->add_option("class", basis_class, "e.g. P[121] or L[12]<2>")->required();
  basis_cmd->add_option("--basis", basis_target, "target basis (default Nabla)");

  auto* apply_cmd = app.add_subcommand("apply", "apply derived functors to a class");
  std::vector<std::string> apply_tokens;
  std::string apply_target;
  apply_cmd->add_option("cartan", cfg.cartan)->required();
  apply_cmd
      ->add_option("expr", apply_tokens,
                   "functor steps then one class, e.g. T[1] L[121]")
      ->required();
  apply_cmd->add_option("--basis", apply_target, "output basis (default Nabla)");

  auto* verify_cmd = app.add_subcommand("verify", "run the identity battery");
  std::string verify_checks, verify_json;
  verify_cmd->add_option("cartan", cfg.cartan)->required();
  verify_cmd->add_option("--checks", verify_checks, "comma-separated check names");
  verify_cmd->add_option("--json", verify_json, "also write the JSON report here");

  auto* cache_cmd = app.add_subcommand("cache", "KL table cache management");
  cache_cmd->require_subcommand(1);
  auto* cache_build = cache_cmd->add_subcommand("build", "compute and save a table");
  cache_build->add_option("cartan", cfg.cartan)->required();
  auto* cache_path_cmd = cache_cmd->add_subcommand("path", "print the cache file path");
  cache_path_cmd->add_option("cartan", cfg.cartan)->required();

  // Global options (--output, --cache-dir, ...) may follow the subcommand.
  for (CLI::App* sub : {group_cmd, kl_cmd, basis_cmd, apply_cmd, verify_cmd,
                        cache_cmd, cache_build, cache_path_cmd}) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.output = parse_output(output_name);
    if (group_cmd->parsed()) return cmd_group(cfg, group_table);
    if (kl_cmd->parsed()) return cmd_kl(cfg, kl_x, kl_y, kl_w, kl_basis);
    if (basis_cmd->parsed()) return cmd_basis(cfg, basis_class, basis_target);
    if (apply_cmd->parsed()) return cmd_apply(cfg, apply_tokens, apply_target);
    if (verify_cmd->parsed())
      return cmd_verify(cfg, verify_checks, verify_json);
    if (cache_cmd->parsed()) {
      if (cache_build->parsed()) return cmd_cache_build(cfg);
      if (cache_path_cmd->parsed()) return cmd_cache_path(cfg);
    }
  } catch (const Error& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
  return 0;
}

// Brute-force oracles (bar-solve KL basis, subword Bruhat order) and the
// registry of identity checks behind verify_suite.
#include "heckecat/oracle.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "heckecat/functors.hpp"
#include "heckecat/io.hpp"
#include "heckecat/kgroup.hpp"

namespace heckecat {

// ---------------------------------------------------------------------------
// Oracles

HeckeElement kl_by_bar_solve(const CoxeterGroup& g, Element w) {
  // Maintain a candidate E (starting at H_w) together with B = bar(E),
  // updated incrementally.  Walking y below w in decreasing length order,
  // the defect f = B_y - E_y must be killed by a correction c in vZ[v]:
  // adding c H_y changes the defect at y by bar(c) - c, so we need
  // c - bar(c) = f, solvable iff f is bar-antisymmetric with no constant
  // term, in which case c is the strictly-positive-degree part of f.
  HeckeElement e = HeckeElement::basis(g, w);
  HeckeElement b = h_bar(e);
  for (std::int64_t yid = static_cast<std::int64_t>(w.id) - 1; yid >= 0; --yid) {
    const Element y{static_cast<std::uint32_t>(yid)};
    const LaurentPoly f = b.coeff(y) - e.coeff(y);
    if (f.is_zero()) continue;
    if (f.coeff(0) != 0 || f.bar() != -f) {
      throw NoSolution("bar-solve: no correction in vZ[v] clears H_" +
                       g.element_str(y) + " while building uH_" +
                       g.element_str(w));
    }
    LaurentPoly c;
    for (const auto& [exp, coeff] : f.terms()) {
      if (exp > 0) c += LaurentPoly::monomial(coeff, exp);
    }
    e.add_coeff(y, c);
    b += h_inv_std(g, g.inverse(y)).scaled(c.bar());
  }
  if (b != e) {
    throw NoSolution("bar-solve terminated on a non-invariant element for uH_" +
                     g.element_str(w));
  }
  return e;
}

namespace {

// Folds one reduced word: the set of elements reachable as products of
// subsequences of `word`, then tests membership of a.
bool subword_reaches(const CoxeterGroup& g, Element a,
                     const std::vector<int>& word) {
  std::vector<char> reached(g.size(), 0);
  std::vector<std::uint32_t> frontier{g.identity().id};
  reached[g.identity().id] = 1;
  for (int s : word) {
    const std::size_t known = frontier.size();
    for (std::size_t i = 0; i < known; ++i) {
      const Element rs = g.right(Element{frontier[i]}, s);
      if (!reached[rs.id]) {
        reached[rs.id] = 1;
        frontier.push_back(rs.id);
      }
    }
  }
  return reached[a.id] != 0;
}

// Depth-first enumeration of the reduced words of `rest` (building onto
// `word`); stops as soon as one word exhibits a as a subword.
bool subword_search(const CoxeterGroup& g, Element a, std::vector<int>& word,
                    Element rest) {
  if (rest == g.identity()) return subword_reaches(g, a, word);
  for (int s = 1; s <= g.rank(); ++s) {
    if (!g.is_left_descent(s, rest)) continue;
    word.push_back(s);
    const bool hit = subword_search(g, a, word, g.left(s, rest));
    word.pop_back();
    if (hit) return true;
  }
  return false;
}

}  // namespace

bool bruhat_by_subword(const CoxeterGroup& g, Element a, Element b) {
  if (g.length(b) > 12) {
    throw TooLong("subword oracle is capped at l(b) <= 12, got " +
                  std::to_string(g.length(b)));
  }
  std::vector<int> word;
  word.reserve(g.length(b));
  return subword_search(g, a, word, b);
}

// ---------------------------------------------------------------------------
// Check registry

namespace {

struct CheckContext {
  const CoxeterGroup& g;
  KLCache& kl;
  KGroupContext ctx;
  FunctorEngine eng;
  std::uint64_t seed;

  CheckContext(const CoxeterGroup& g_in, KLCache& kl_in, std::uint64_t seed_in)
      : g(g_in), kl(kl_in), ctx(g_in, kl_in), eng(ctx), seed(seed_in) {}

  std::string el(Element x) const { return g.element_str(x); }
  Element gen(int s) const { return g.left(s, g.identity()); }
};

using CheckFn = void (*)(CheckContext&, CheckResult&);

struct CheckEntry {
  const char* name;
  CheckFn fn;
};

void fail(CheckResult& r, std::string what) {
  if (r.counterexample.empty()) r.counterexample = std::move(what);
}

bool expect_hecke(CheckResult& r, const HeckeElement& lhs,
                  const HeckeElement& rhs, const std::string& where) {
  if (lhs == rhs) return true;
  fail(r, where + ": " + render_hecke(lhs) + " != " + render_hecke(rhs));
  return false;
}

bool expect_char(CheckResult& r, const CharacterVector& lhs,
                 const CharacterVector& rhs, const std::string& where) {
  if (lhs == rhs) return true;
  fail(r, where + ": " + render_character(lhs) + " != " + render_character(rhs));
  return false;
}

bool expect_laurent(CheckResult& r, const LaurentPoly& lhs,
                    const LaurentPoly& rhs, const std::string& where) {
  if (lhs == rhs) return true;
  fail(r, where + ": " + lhs.str() + " != " + rhs.str());
  return false;
}

// Runs fn over all ordered pairs of elements, or over `cap` seeded samples
// when the full rectangle is larger than cap.
template <typename Fn>
void for_element_pairs(CheckContext& c, CheckResult& r, std::uint64_t cap,
                       Fn fn) {
  const std::uint64_t n = c.g.size();
  if (n * n <= cap) {
    for (std::uint32_t a = 0; a < n && r.counterexample.empty(); ++a) {
      for (std::uint32_t b = 0; b < n && r.counterexample.empty(); ++b) {
        fn(Element{a}, Element{b});
        ++r.instances;
      }
    }
    return;
  }
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<std::uint32_t> pick(
      0, static_cast<std::uint32_t>(n) - 1);
  for (std::uint64_t k = 0; k < cap && r.counterexample.empty(); ++k) {
    fn(Element{pick(rng)}, Element{pick(rng)});
    ++r.instances;
  }
  r.note = "sampled " + std::to_string(cap) + " of " + std::to_string(n * n) +
           " pairs (seed " + std::to_string(c.seed) + ")";
}

// --- structural sanity of the group itself --------------------------------

void check_coxeter_sanity(CheckContext& c, CheckResult& r) {
  const CoxeterGroup& g = c.g;
  const Element w0 = g.longest();
  if (g.size() != g.type().weyl_order()) {
    return fail(r, "group order does not match the classical formula");
  }
  ++r.instances;
  if (static_cast<int>(g.length(w0)) != g.type().positive_roots()) {
    return fail(r, "l(w0) does not match the number of positive roots");
  }
  ++r.instances;
  if (g.multiply(w0, w0) != g.identity()) {
    return fail(r, "w0 is not an involution");
  }
  ++r.instances;

  for (std::uint32_t id = 0; id < g.size(); ++id) {
    const Element w{id};
    if (g.inverse(g.inverse(w)) != w) {
      return fail(r, "inverse is not an involution at " + c.el(w));
    }
    if (g.length(g.multiply(w0, w)) != g.length(w0) - g.length(w)) {
      return fail(r, "l(w0 w) != l(w0) - l(w) at " + c.el(w));
    }
    for (int s = 1; s <= g.rank(); ++s) {
      const bool descent = g.is_right_descent(w, s);
      const unsigned lws = g.length(g.right(w, s));
      if (descent != (lws + 1 == g.length(w)) ||
          (!descent && lws != g.length(w) + 1)) {
        return fail(r, "descent/length mismatch at " + c.el(w));
      }
    }
    if (!g.bruhat_leq(g.identity(), w) || !g.bruhat_leq(w, w0)) {
      return fail(r, "e <= w <= w0 fails at " + c.el(w));
    }
    ++r.instances;
  }

  for (std::uint32_t a = 0; a < g.size() && r.counterexample.empty(); ++a) {
    for (std::uint32_t b = 0; b < g.size(); ++b) {
      const Element x{a}, y{b};
      if (g.bruhat_leq(x, y) && g.bruhat_leq(y, x) && a != b) {
        return fail(r, "Bruhat antisymmetry fails at (" + c.el(x) + ", " +
                           c.el(y) + ")");
      }
      if (g.bruhat_leq(x, y) && a != b && g.length(x) >= g.length(y)) {
        return fail(r, "Bruhat order does not refine length at (" + c.el(x) +
                           ", " + c.el(y) + ")");
      }
      ++r.instances;
    }
  }
}

// --- Hecke-algebra level ---------------------------------------------------

void check_oracle_kl(CheckContext& c, CheckResult& r) {
  for (std::uint32_t id = 0; id < c.g.size(); ++id) {
    const Element w{id};
    const HeckeElement direct = kl_by_bar_solve(c.g, w);
    if (!expect_hecke(r, direct, c.kl.kl_basis(w), "uH_" + c.el(w))) return;
    ++r.instances;
  }
  if (c.g.type() == CartanType{Family::A, 3}) {
    // The classical first nontrivial KL polynomial: P_{s2, s2 s1 s3 s2} = 1+q.
    const LaurentPoly p = c.kl.kl_poly(c.g.parse_element("2"),
                                       c.g.parse_element("2132"));
    const LaurentPoly expected = LaurentPoly(1) + LaurentPoly::v(1);
    if (!expect_laurent(r, p, expected, "P_{2,2132}(q)")) return;
    ++r.instances;
  }
}

void check_oracle_bruhat(CheckContext& c, CheckResult& r) {
  for_element_pairs(c, r, 4096, [&](Element a, Element b) {
    if (c.g.length(b) > 12) return;  // outside the oracle's contract
    const bool oracle = bruhat_by_subword(c.g, a, b);
    const bool fast = c.g.bruhat_leq(a, b);
    if (oracle != fast) {
      fail(r, "(" + c.el(a) + " <= " + c.el(b) + "): subword oracle says " +
                  (oracle ? "true" : "false"));
    }
  });
}

void check_bar_invariance(CheckContext& c, CheckResult& r) {
  for (std::uint32_t id = 0; id < c.g.size(); ++id) {
    const Element w{id};
    const HeckeElement& uh = c.kl.kl_basis(w);
    if (!expect_hecke(r, h_bar(uh), uh, "bar(uH_" + c.el(w) + ")")) return;
    const HeckeElement& uch = c.kl.twisted_kl_basis(w);
    if (!expect_hecke(r, h_bar(uch), uch, "bar(ucH_" + c.el(w) + ")")) return;
    r.instances += 2;
  }
}

void check_kl_symmetry(CheckContext& c, CheckResult& r) {
  const CoxeterGroup& g = c.g;
  const Element w0 = g.longest();
  for (std::uint32_t a = 0; a < g.size() && r.counterexample.empty(); ++a) {
    for (std::uint32_t b = a; b < g.size(); ++b) {
      const Element x{a}, y{b};
      if (!g.bruhat_leq(x, y)) continue;
      const LaurentPoly p = c.kl.kl_poly(x, y);
      const std::string tag = "P_{" + c.el(x) + "," + c.el(y) + "}";
      // P is invariant under the inverse map and under conjugation by w0
      // (the diagram automorphism); mu enjoys the stronger one-sided flips
      // below, P does not (e.g. P_{e,2132} = 1+q vs P_{2132 w0, w0} = 1 in A3).
      if (!expect_laurent(r, p, c.kl.kl_poly(g.inverse(x), g.inverse(y)),
                          tag + " vs inverses") ||
          !expect_laurent(
              r, p,
              c.kl.kl_poly(g.multiply(w0, g.multiply(x, w0)),
                           g.multiply(w0, g.multiply(y, w0))),
              tag + " vs w0-conjugates")) {
        return;
      }
      const std::int64_t m = c.kl.mu(x, y);
      if (m != c.kl.mu(g.inverse(x), g.inverse(y)) ||
          m != c.kl.mu(g.multiply(y, w0), g.multiply(x, w0)) ||
          m != c.kl.mu(g.multiply(w0, y), g.multiply(w0, x))) {
        return fail(r, "mu symmetry fails at (" + c.el(x) + "," + c.el(y) + ")");
      }
      if (a != b && !p.is_zero()) {
        const int bound =
            (static_cast<int>(g.length(y)) - static_cast<int>(g.length(x)) - 1) /
            2;
        if (p.max_exp() > bound) {
          return fail(r, tag + " = " + p.str() + " exceeds degree bound " +
                             std::to_string(bound));
        }
      }
      ++r.instances;
    }
  }
}

void check_mu_vanishing(CheckContext& c, CheckResult& r) {
  for (std::uint32_t a = 0; a < c.g.size() && r.counterexample.empty(); ++a) {
    for (std::uint32_t b = a + 1; b < c.g.size(); ++b) {
      const Element x{a}, y{b};
      if (!c.g.bruhat_leq(x, y)) continue;
      const unsigned gap = c.g.length(y) - c.g.length(x);
      if (gap == 1) {
        // Covering pairs have P = 1 and mu = 1.
        if (!expect_laurent(r, c.kl.kl_poly(x, y), LaurentPoly(1),
                            "P at covering pair (" + c.el(x) + "," + c.el(y) +
                                ")") ||
            c.kl.mu(x, y) != 1) {
          fail(r, "mu != 1 at covering pair (" + c.el(x) + "," + c.el(y) + ")");
          return;
        }
      } else if (gap % 2 == 0 && c.kl.mu(x, y) != 0) {
        return fail(r, "mu nonzero across even length gap (" + c.el(x) + "," +
                           c.el(y) + ")");
      }
      if (c.kl.mu(x, y) != c.kl.mu(y, x)) {
        return fail(r, "mu symmetric extension broken at (" + c.el(x) + "," +
                           c.el(y) + ")");
      }
      ++r.instances;
    }
  }
}

void check_kl_dual_bases(CheckContext& c, CheckResult& r) {
  const CoxeterGroup& g = c.g;
  const Element w0 = g.longest();
  const HeckeElement hw0 = HeckeElement::basis(g, w0);

  std::vector<std::uint32_t> ids;
  if (g.size() <= 48) {
    for (std::uint32_t id = 0; id < g.size(); ++id) ids.push_back(id);
  } else {
    std::mt19937_64 rng(c.seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, g.size() - 1);
    for (int k = 0; k < 48; ++k) ids.push_back(pick(rng));
    r.note = "sampled 48 of " + std::to_string(g.size()) +
             " elements (seed " + std::to_string(c.seed) + ")";
  }

  for (const std::uint32_t id : ids) {
    const Element w{id};
    const Element ww0 = g.multiply(w, w0);
    const Element w0w = g.multiply(w0, w);
    const HeckeElement huh = c.kl.dual_kl_basis(w);
    const HeckeElement huch = c.kl.dual_twisted_kl_basis(w);
    if (!expect_hecke(r, huh, c.kl.twisted_kl_basis(ww0) * hw0,
                      "huH_" + c.el(w) + " vs ucH_{w w0} H_{w0}") ||
        !expect_hecke(r, huh, hw0 * c.kl.twisted_kl_basis(w0w),
                      "huH_" + c.el(w) + " vs H_{w0} ucH_{w0 w}") ||
        !expect_hecke(r, huch, c.kl.kl_basis(ww0) * hw0,
                      "hucH_" + c.el(w) + " vs uH_{w w0} H_{w0}") ||
        !expect_hecke(r, huch, hw0 * c.kl.kl_basis(w0w),
                      "hucH_" + c.el(w) + " vs H_{w0} uH_{w0 w}")) {
      return;
    }
    ++r.instances;
  }
}

void check_tau_duality(CheckContext& c, CheckResult& r) {
  for_element_pairs(c, r, 576, [&](Element x, Element y) {
    const LaurentPoly expected(x == y ? 1 : 0);
    const LaurentPoly t1 =
        tau(c.kl.kl_basis(x) * c.kl.dual_kl_basis(c.g.inverse(y)));
    if (!expect_laurent(r, t1, expected,
                        "tau(uH_" + c.el(x) + " huH_{" + c.el(y) + "^-1})")) {
      return;
    }
    const LaurentPoly t2 = tau(c.kl.twisted_kl_basis(x) *
                               c.kl.dual_twisted_kl_basis(c.g.inverse(y)));
    expect_laurent(r, t2, expected,
                   "tau(ucH_" + c.el(x) + " hucH_{" + c.el(y) + "^-1})");
  });
}

// --- K-group level ----------------------------------------------------------

void check_r_symmetry(CheckContext& c, CheckResult& r) {
  for (std::uint32_t a = 0; a < c.g.size() && r.counterexample.empty(); ++a) {
    const Element x{a};
    const Element xi = c.g.inverse(x);
    for (std::uint32_t b = 0; b < c.g.size(); ++b) {
      const Element y{b};
      const LaurentPoly lhs = c.ctx.r_coefficient(y, x);
      const LaurentPoly rhs = c.ctx.r_coefficient(c.g.inverse(y), xi);
      if (!expect_laurent(r, lhs, rhs,
                          "r_{" + c.el(y) + "," + c.el(x) + "}")) {
        return;
      }
      ++r.instances;
    }
  }
}

void check_involution_delta(CheckContext& c, CheckResult& r) {
  const Element w0 = c.g.longest();
  for (std::uint32_t id = 0; id < c.g.size(); ++id) {
    const Element x{id};
    if (c.g.inverse(x) != x) continue;
    const HeckeElement lhs = c.ctx.transport_to_hecke(
        TransportMap::RhoTwist, c.ctx.unit(BasisTag::Verma, x));
    const HeckeElement rhs = h_inv_std(c.g, c.g.multiply(x, w0));
    if (!expect_hecke(r, lhs, rhs, "rho([Delta(" + c.el(x) + ")])")) return;
    ++r.instances;
  }
}

void check_nabla_minus_simple(CheckContext& c, CheckResult& r) {
  // [Nabla(x)] - [L(x)] and [Nabla(x^-1)] - [L(x^-1)] carry the same
  // coefficients with the indexing elements inverted (their supports are the
  // upper cones of x and x^-1, which differ as sets).
  for (std::uint32_t id = 0; id < c.g.size(); ++id) {
    const Element x{id};
    const Element xi = c.g.inverse(x);
    const auto difference = [&](Element z) {
      return c.ctx.unit(BasisTag::DualVerma, z) -
             c.ctx.nabla_expansion(BasisTag::Simple, z);
    };
    const CharacterVector dx = difference(x);
    const CharacterVector dxi = difference(xi);
    for (std::uint32_t yid = 0; yid < c.g.size(); ++yid) {
      const Element y{yid};
      if (!expect_laurent(r, dx.coeff(y), dxi.coeff(c.g.inverse(y)),
                          "([Nabla - L](" + c.el(x) + ")) at Nabla(" +
                              c.el(y) + ")")) {
        return;
      }
    }
    ++r.instances;
  }
}

void check_graded_mult(CheckContext& c, CheckResult& r) {
  // [Nabla(x) : L(z)<k>] = v^{l(x)-l(z)} P_{x,z}(v^2), read through the
  // w0-relabel of the stated identity for [Nabla(w0 y) : L(w0 w)].
  for (std::uint32_t a = 0; a < c.g.size() && r.counterexample.empty(); ++a) {
    const Element x{a};
    const CharacterVector in_simple = c.ctx.change_basis(
        c.ctx.unit(BasisTag::DualVerma, x), BasisTag::Simple);
    for (std::uint32_t b = 0; b < c.g.size(); ++b) {
      const Element z{b};
      LaurentPoly expected;
      if (c.g.bruhat_leq(x, z)) {
        const int gap =
            static_cast<int>(c.g.length(x)) - static_cast<int>(c.g.length(z));
        expected = c.kl.kl_poly(x, z).subst_q(2).shifted(gap);
      }
      if (!expect_laurent(r, in_simple.coeff(z), expected,
                          "[Nabla(" + c.el(x) + ") : L(" + c.el(z) + ")]")) {
        return;
      }
      ++r.instances;
    }
  }
}

void check_ringel(CheckContext& c, CheckResult& r) {
  const Element w0 = c.g.longest();
  for (std::uint32_t id = 0; id < c.g.size(); ++id) {
    const Element w{id};
    const Element w0w = c.g.multiply(w0, w);
    // LT_{w0} sends [Delta(w)] to [Nabla(w0 w)].
    const CharacterVector twisted = c.eng.apply_derived_twist(
        c.ctx.verma_in_nabla(w), w0);
    if (!expect_char(r, twisted, c.ctx.unit(BasisTag::DualVerma, w0w),
                     "LT_{w0}[Delta(" + c.el(w) + ")]")) {
      return;
    }
    // Coordinatewise duality matches [P(w)] -> [T(w0 w)].
    const CharacterVector dual = c.ctx.ringel_dual(
        c.ctx.change_basis(c.ctx.unit(BasisTag::Projective, w), BasisTag::Verma));
    if (!expect_char(r, dual, c.ctx.nabla_expansion(BasisTag::Tilting, w0w),
                     "ringel_dual([P(" + c.el(w) + ")])")) {
      return;
    }
    r.instances += 2;
  }
}

void check_positivity(CheckContext& c, CheckResult& r) {
  for (std::uint32_t a = 0; a < c.g.size() && r.counterexample.empty(); ++a) {
    for (std::uint32_t b = a; b < c.g.size(); ++b) {
      const Element x{a}, y{b};
      if (!c.g.bruhat_leq(x, y)) continue;
      const LaurentPoly p = c.kl.kl_poly(x, y);
      for (const auto& [exp, coeff] : p.terms()) {
        (void)exp;
        if (coeff < 0) {
          return fail(r, "P_{" + c.el(x) + "," + c.el(y) +
                             "} has a negative coefficient");
        }
      }
      ++r.instances;
    }
  }
  const BasisTag structural[] = {BasisTag::Verma, BasisTag::Projective,
                                 BasisTag::Tilting, BasisTag::Injective};
  for (const BasisTag tag : structural) {
    for (std::uint32_t id = 0; id < c.g.size(); ++id) {
      if (!r.counterexample.empty()) return;
      const Element w{id};
      const CharacterVector in_simple =
          c.ctx.change_basis(c.ctx.unit(tag, w), BasisTag::Simple);
      for (const auto& [z, coeff] : in_simple.terms()) {
        for (const auto& [exp, cc] : coeff.terms()) {
          (void)exp;
          if (cc < 0) {
            return fail(r, "[" + std::string(basis_name(tag)) + "(" + c.el(w) +
                               ")] has a negative multiplicity at L(" +
                               c.el(Element{z}) + ")");
          }
        }
      }
      ++r.instances;
    }
  }
}

// --- functor level -----------------------------------------------------------

void check_quadratic(CheckContext& c, CheckResult& r) {
  const LaurentPoly vm = LaurentPoly::v(1) - LaurentPoly::v(-1);
  for (int s = 1; s <= c.g.rank(); ++s) {
    for (std::uint32_t id = 0; id < c.g.size(); ++id) {
      const Element x{id};
      const CharacterVector base = c.ctx.unit(BasisTag::DualVerma, x);
      // (F - v^-1)(F + v) = F^2 + (v - v^-1) F - 1.
      const CharacterVector t1 = c.eng.twist_generator(base, s);
      const CharacterVector tq =
          c.eng.twist_generator(t1, s) + t1.scaled(vm) - base;
      if (!tq.is_zero()) {
        return fail(r, "(LT_" + std::to_string(s) + " - v^-1)(LT_" +
                           std::to_string(s) + " + v)[Nabla(" + c.el(x) +
                           ")] = " + render_character(tq));
      }
      const CharacterVector c1 = c.eng.shuffle_generator(base, s);
      const CharacterVector cq =
          c.eng.shuffle_generator(c1, s) + c1.scaled(vm) - base;
      if (!cq.is_zero()) {
        return fail(r, "(LC_" + std::to_string(s) + " - v^-1)(LC_" +
                           std::to_string(s) + " + v)[Nabla(" + c.el(x) +
                           ")] = " + render_character(cq));
      }
      r.instances += 2;
    }
  }
}

void check_braid(CheckContext& c, CheckResult& r) {
  const auto cartan = c.g.type().cartan_matrix();
  for (int i = 1; i <= c.g.rank(); ++i) {
    for (int j = i + 1; j <= c.g.rank(); ++j) {
      const int product = cartan[i - 1][j - 1] * cartan[j - 1][i - 1];
      int m = 0;
      switch (product) {
        case 0: m = 2; break;
        case 1: m = 3; break;
        case 2: m = 4; break;
        case 3: m = 6; break;
        default:
          return fail(r, "unexpected Cartan entry product");
      }
      std::vector<int> word_ij, word_ji;
      for (int k = 0; k < m; ++k) {
        word_ij.push_back(k % 2 == 0 ? i : j);
        word_ji.push_back(k % 2 == 0 ? j : i);
      }
      for (std::uint32_t id = 0; id < c.g.size(); ++id) {
        const Element x{id};
        const CharacterVector base = c.ctx.unit(BasisTag::DualVerma, x);
        if (!expect_char(r, c.eng.apply_derived_twist_word(base, word_ij),
                         c.eng.apply_derived_twist_word(base, word_ji),
                         "braid (LT) s" + std::to_string(i) + "/s" +
                             std::to_string(j) + " on Nabla(" + c.el(x) + ")") ||
            !expect_char(r, c.eng.apply_derived_shuffle_word(base, word_ij),
                         c.eng.apply_derived_shuffle_word(base, word_ji),
                         "braid (LC) s" + std::to_string(i) + "/s" +
                             std::to_string(j) + " on Nabla(" + c.el(x) + ")")) {
          return;
        }
        r.instances += 2;
      }
    }
  }
}

void check_rho_intertwine(CheckContext& c, CheckResult& r) {
  const Element w0 = c.g.longest();
  for_element_pairs(c, r, 576, [&](Element w, Element y) {
    const CharacterVector base = c.ctx.unit(BasisTag::DualVerma, y);
    const HeckeElement hw = HeckeElement::basis(c.g, w);
    const HeckeElement lhs_t = c.ctx.transport_to_hecke(
        TransportMap::RhoTwist, c.eng.apply_derived_twist(base, w));
    const HeckeElement rhs_t =
        HeckeElement::basis(c.g, c.g.multiply(w0, c.g.inverse(y))) * hw;
    if (!expect_hecke(r, lhs_t, rhs_t,
                      "rho(LT_" + c.el(w) + " [Nabla(" + c.el(y) + ")])")) {
      return;
    }
    const HeckeElement lhs_c = c.ctx.transport_to_hecke(
        TransportMap::RhoShuffle, c.eng.apply_derived_shuffle(base, w));
    const HeckeElement rhs_c =
        HeckeElement::basis(c.g, c.g.multiply(w0, y)) * hw;
    expect_hecke(r, lhs_c, rhs_c,
                 "rho'(LC_" + c.el(w) + " [Nabla(" + c.el(y) + ")])");
  });
}

void check_rho_simple(CheckContext& c, CheckResult& r) {
  const Element w0 = c.g.longest();
  for (std::uint32_t id = 0; id < c.g.size(); ++id) {
    const Element x{id};
    const CharacterVector simple = c.ctx.nabla_expansion(BasisTag::Simple, x);
    const HeckeElement twist =
        c.ctx.transport_to_hecke(TransportMap::RhoTwist, simple);
    const HeckeElement shuffle =
        c.ctx.transport_to_hecke(TransportMap::RhoShuffle, simple);
    if (!expect_hecke(r, twist,
                      c.kl.twisted_kl_basis(c.g.multiply(w0, c.g.inverse(x))),
                      "rho([L(" + c.el(x) + ")])") ||
        !expect_hecke(r, shuffle, c.kl.twisted_kl_basis(c.g.multiply(w0, x)),
                      "rho'([L(" + c.el(x) + ")])")) {
      return;
    }
    r.instances += 2;
  }
}

void check_theta_nabla(CheckContext& c, CheckResult& r) {
  for (int s = 1; s <= c.g.rank(); ++s) {
    const Element gen = c.gen(s);
    for (std::uint32_t id = 0; id < c.g.size(); ++id) {
      const Element x{id};
      const Element xs = c.g.right(x, s);
      // apply_theta internally re-derives and compares the published
      // generator formula; spell the expectation out once more here.
      CharacterVector expected(BasisTag::DualVerma, &c.g);
      expected.add_coeff(
          x, LaurentPoly::v(c.g.length(xs) < c.g.length(x) ? 1 : -1));
      expected.add_coeff(xs, LaurentPoly(1));
      const CharacterVector got =
          c.eng.apply_theta(c.ctx.unit(BasisTag::DualVerma, x), gen);
      if (!expect_char(r, got, expected,
                       "theta_" + std::to_string(s) + " [Nabla(" + c.el(x) +
                           ")]")) {
        return;
      }
      ++r.instances;
    }
  }
}

void check_theta_commute(CheckContext& c, CheckResult& r) {
  const std::uint64_t total = static_cast<std::uint64_t>(c.g.size()) *
                              c.g.rank() * c.g.size();
  const std::uint64_t cap = 1728;
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, c.g.size() - 1);
  std::uniform_int_distribution<int> pick_s(1, c.g.rank());
  const bool sample = total > cap;
  if (sample) {
    r.note = "sampled " + std::to_string(cap) + " of " + std::to_string(total) +
             " triples (seed " + std::to_string(c.seed) + ")";
  }

  const auto run_one = [&](Element w, int s, Element y) {
    const CharacterVector base = c.ctx.unit(BasisTag::DualVerma, y);
    const CharacterVector lhs =
        c.eng.apply_theta(c.eng.twist_generator(base, s), w);
    const CharacterVector rhs =
        c.eng.twist_generator(c.eng.apply_theta(base, w), s);
    expect_char(r, lhs, rhs,
                "theta_" + c.el(w) + " LT_" + std::to_string(s) + " [Nabla(" +
                    c.el(y) + ")]");
    ++r.instances;
  };

  if (!sample) {
    for (std::uint32_t w = 0; w < c.g.size() && r.counterexample.empty(); ++w) {
      for (int s = 1; s <= c.g.rank() && r.counterexample.empty(); ++s) {
        for (std::uint32_t y = 0; y < c.g.size() && r.counterexample.empty();
             ++y) {
          run_one(Element{w}, s, Element{y});
        }
      }
    }
  } else {
    for (std::uint64_t k = 0; k < cap && r.counterexample.empty(); ++k) {
      run_one(Element{pick(rng)}, pick_s(rng), Element{pick(rng)});
    }
  }
}

void check_euler(CheckContext& c, CheckResult& r) {
  for (int s = 1; s <= c.g.rank(); ++s) {
    for (std::uint32_t id = 0; id < c.g.size(); ++id) {
      const Element x{id};
      const TwistNablaReport rep = c.eng.twist_nabla_structure(s, x);
      // Euler characteristic: [T_s Nabla(x)] - [L1 T_s Nabla(x)] must equal
      // the derived action of the generator.
      CharacterVector euler =
          c.ctx.unit(BasisTag::DualVerma, rep.image).shifted(rep.shift);
      euler -= rep.l1;
      if (!expect_char(r, euler,
                       c.eng.twist_generator(
                           c.ctx.unit(BasisTag::DualVerma, x), s),
                       "Euler form of T_" + std::to_string(s) + " Nabla(" +
                           c.el(x) + ")")) {
        return;
      }
      ++r.instances;
    }
  }
}

void check_twist_verma(CheckContext& c, CheckResult& r) {
  static const LaurentPoly kOffDiag = LaurentPoly::v(-1) - LaurentPoly::v(1);
  for (int s = 1; s <= c.g.rank(); ++s) {
    for (std::uint32_t id = 0; id < c.g.size(); ++id) {
      const Element x{id};
      const Element sx = c.g.left(s, x);
      if (c.g.length(sx) < c.g.length(x)) continue;
      VermaTwistReport rep = [&] {
        // twist_verma cross-checks both classes against the rho route and
        // throws Inconsistency on mismatch; the runner converts any throw
        // into a failure.
        return c.eng.twist_verma(s, x);
      }();
      CharacterVector expected_sx = c.ctx.unit(BasisTag::Verma, x);
      expected_sx.add_coeff(sx, kOffDiag);
      if (!expect_char(r, rep.ts_delta_x, c.ctx.unit(BasisTag::Verma, sx),
                       "[T_" + std::to_string(s) + " Delta(" + c.el(x) + ")]") ||
          !expect_char(r, rep.ts_delta_sx, expected_sx,
                       "[T_" + std::to_string(s) + " Delta(" + c.el(sx) +
                           ")]")) {
        return;
      }
      ++r.instances;
    }
  }
}

void check_ts_cs_dual(CheckContext& c, CheckResult& r) {
  for (int s = 1; s <= c.g.rank(); ++s) {
    for (std::uint32_t id = 0; id < c.g.size(); ++id) {
      const Element x{id};
      const Element sx = c.g.left(s, x);
      const Element xs = c.g.right(x, s);

      if (c.g.length(sx) < c.g.length(x)) {
        const SimpleTwistReport rep = c.eng.ts_simple(s, x);
        if (!expect_char(r,
                         c.ctx.change_basis(rep.char_l, BasisTag::DualVerma),
                         rep.char_nabla,
                         "[T_" + std::to_string(s) + " L(" + c.el(x) +
                             ")] route agreement")) {
          return;
        }
        if (!expect_laurent(r, rep.char_l.coeff(x), LaurentPoly::v(-1),
                            "[T_sL(x) : L(x)] at x=" + c.el(x)) ||
            !expect_laurent(r, rep.char_l.coeff(sx), LaurentPoly(1),
                            "[T_sL(x) : L(sx)] at x=" + c.el(x))) {
          return;
        }
        for (const auto& [yid, coeff] : rep.char_l.terms()) {
          const Element y{yid};
          if (y == x || y == sx) continue;
          const bool ascent = c.g.length(c.g.left(s, y)) > c.g.length(y);
          const std::int64_t expected_mu = c.kl.mu(x, y);
          if (!ascent || !c.g.bruhat_leq(x, y) || y == x ||
              coeff != LaurentPoly(expected_mu) || expected_mu <= 0) {
            return fail(r, "[T_" + std::to_string(s) + " L(" + c.el(x) +
                               ")] has unexpected coefficient at L(" +
                               c.el(y) + ")");
          }
        }
        ++r.instances;
      }

      if (c.g.length(xs) < c.g.length(x)) {
        const SimpleShuffleReport rep = c.eng.cs_simple(s, x);
        if (!expect_char(r,
                         c.ctx.change_basis(rep.char_l, BasisTag::DualVerma),
                         rep.char_nabla,
                         "[C_" + std::to_string(s) + " L(" + c.el(x) +
                             ")] route agreement") ||
            !expect_laurent(r, rep.char_l.coeff(x), LaurentPoly::v(-1),
                            "[C_sL(x) : L(x)] at x=" + c.el(x)) ||
            !expect_laurent(r, rep.char_l.coeff(xs), LaurentPoly(1),
                            "[C_sL(x) : L(xs)] at x=" + c.el(x))) {
          return;
        }
        ++r.instances;
      }
    }
  }
}

void check_zuckerman(CheckContext& c, CheckResult& r) {
  std::string graded_negatives;
  for (int s = 1; s <= c.g.rank(); ++s) {
    for (std::uint32_t id = 0; id < c.g.size(); ++id) {
      const Element x{id};
      // zuckerman_L1_simple enforces v=1 nonnegativity internally
      // (UngradedNegativity propagates as a failure through the runner).
      const CharacterVector z1 = c.eng.zuckerman_L1_simple(s, x);
      for (const auto& [w, coeff] : z1.terms()) {
        for (const auto& [exp, cc] : coeff.terms()) {
          (void)exp;
          if (cc < 0) {
            if (!graded_negatives.empty()) graded_negatives += "; ";
            graded_negatives += "s=" + std::to_string(s) + ", x=" + c.el(x) +
                                ": coefficient " + coeff.str() + " at L(" +
                                c.el(Element{w}) + ")";
            goto next_term;
          }
        }
      next_term:;
      }
      // L2 is closed-form; verify the published case split.
      CharacterVector expected_l2(BasisTag::Simple, &c.g);
      if (c.g.length(c.g.left(s, x)) > c.g.length(x)) {
        expected_l2.add_coeff(x, LaurentPoly::v(1));
      }
      if (!expect_char(r, c.eng.zuckerman_L2_simple(s, x), expected_l2,
                       "[L2 Z_" + std::to_string(s) + " L(" + c.el(x) + ")]")) {
        return;
      }
      r.instances += 2;
    }
  }
  if (!graded_negatives.empty()) {
    r.note = "graded-negative outputs (inherent to the recursion): " +
             graded_negatives;
  }

  if (c.g.type() == CartanType{Family::A, 2}) {
    // Frozen base values of the recursion in A2.
    const CharacterVector z_w0 =
        c.eng.zuckerman_L1_simple(1, c.g.parse_element("121"));
    const CharacterVector expected_w0 =
        c.ctx.unit(BasisTag::Simple, c.g.parse_element("21")).shifted(1);
    if (!expect_char(r, z_w0, expected_w0, "[L1 Z_1 L(121)]")) return;
    const CharacterVector z_12 =
        c.eng.zuckerman_L1_simple(1, c.g.parse_element("12"));
    const CharacterVector expected_12 =
        c.ctx.unit(BasisTag::Simple, c.g.parse_element("2")).shifted(1);
    if (!expect_char(r, z_12, expected_12, "[L1 Z_1 L(12)]")) return;
    r.instances += 2;
  }
}

const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> entries = {
      {"coxeter_sanity", check_coxeter_sanity},
      {"oracle_kl", check_oracle_kl},
      {"oracle_bruhat", check_oracle_bruhat},
      {"bar_invariance", check_bar_invariance},
      {"kl_symmetry", check_kl_symmetry},
      {"mu_vanishing", check_mu_vanishing},
      {"kl_dual_bases", check_kl_dual_bases},
      {"tau_duality", check_tau_duality},
      {"r_symmetry", check_r_symmetry},
      {"involution_delta", check_involution_delta},
      {"nabla_minus_simple", check_nabla_minus_simple},
      {"graded_mult", check_graded_mult},
      {"ringel", check_ringel},
      {"positivity", check_positivity},
      {"quadratic", check_quadratic},
      {"braid", check_braid},
      {"rho_intertwine", check_rho_intertwine},
      {"rho_simple", check_rho_simple},
      {"theta_nabla", check_theta_nabla},
      {"theta_commute", check_theta_commute},
      {"euler", check_euler},
      {"twist_verma", check_twist_verma},
      {"ts_cs_dual", check_ts_cs_dual},
      {"zuckerman", check_zuckerman},
  };
  return entries;
}

CheckResult run_entry(const CheckEntry& entry, CheckContext& c) {
  CheckResult result;
  result.name = entry.name;
  try {
    entry.fn(c, result);
  } catch (const std::exception& ex) {
    fail(result, ex.what());
  }
  result.passed = result.counterexample.empty();
  return result;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.emplace_back(entry.name);
    return out;
  }();
  return names;
}

CheckResult run_check(const std::string& name, const CoxeterGroup& g,
                      KLCache& kl, std::uint64_t seed) {
  for (const auto& entry : registry()) {
    if (name == entry.name) {
      CheckContext context(g, kl, seed);
      return run_entry(entry, context);
    }
  }
  throw Error("unknown check '" + name + "'");
}

VerificationReport verify_suite(const CoxeterGroup& g, KLCache& kl,
                                const std::vector<std::string>& filter,
                                std::uint64_t seed) {
  VerificationReport report;
  report.group = g.type();
  report.seed = seed;

  std::vector<const CheckEntry*> selected;
  if (filter.empty()) {
    for (const auto& entry : registry()) selected.push_back(&entry);
  } else {
    for (const auto& name : filter) {
      bool found = false;
      for (const auto& entry : registry()) {
        if (name == entry.name) {
          selected.push_back(&entry);
          found = true;
          break;
        }
      }
      if (!found) throw Error("unknown check '" + name + "'");
    }
  }

  CheckContext context(g, kl, seed);
  report.checks.reserve(selected.size());
  for (const CheckEntry* entry : selected) {
    report.checks.push_back(run_entry(*entry, context));
  }
  return report;
}

}  // namespace heckecat

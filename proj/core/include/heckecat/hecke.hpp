/*
  hecke.hpp — the Iwahori-Hecke algebra H(W) over Z[v,v^-1].

  Elements are sparse coordinate maps over the standard basis {H_w}, with
  the quadratic relation H_s^2 = (v^-1 - v) H_s + H_e.  KLCache memoizes the
  four Kazhdan-Lusztig-type bases,

    uH_w  = H_w + sum_{y<w} v^{l(w)-l(y)} P_{y,w}(v^-2) H_y       (KL basis)
    ucH_w = H_w + sum_{y<w} (-v)^{l(y)-l(w)} P_{y,w}(v^2) H_y     (twisted)
    huH_w  = H_w + sum_{y>w} (-v)^{l(y)-l(w)} Q_{w,y}(v^-2) H_y   (dual KL)
    hucH_w = H_w + sum_{y>w} v^{l(w)-l(y)} Q_{w,y}(v^2) H_y       (dual tw.)

  with Q_{w,y} := P_{w0 y, w0 w}, together with the polynomials P_{x,y}, the
  leading coefficients mu(x,y), and the standard-basis inverses H_w^{-1}.
*/
#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "heckecat/coxeter.hpp"
#include "heckecat/laurent.hpp"

namespace heckecat {

class HeckeElement {
 public:
  HeckeElement() = default;  // detached zero; attach before use
  explicit HeckeElement(const CoxeterGroup* g) : group_(g) {}

  static HeckeElement zero(const CoxeterGroup& g) { return HeckeElement(&g); }
  // The standard basis element H_w.
  static HeckeElement basis(const CoxeterGroup& g, Element w);

  const CoxeterGroup* group() const { return group_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly coeff(Element w) const;
  // Sets the coordinate of H_w (erasing it when zero).
  void set_coeff(Element w, LaurentPoly c);
  void add_coeff(Element w, const LaurentPoly& c);

  // Element id -> coordinate, no zero entries.
  const std::map<std::uint32_t, LaurentPoly>& terms() const { return terms_; }

  HeckeElement operator-() const;
  HeckeElement& operator+=(const HeckeElement& r);
  HeckeElement& operator-=(const HeckeElement& r);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  HeckeElement scaled(const LaurentPoly& c) const;
  // Algebra product; throws GroupMismatch when the factors live over
  // different groups.
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);

  bool operator==(const HeckeElement& r) const { return terms_ == r.terms_; }
  bool operator!=(const HeckeElement& r) const { return !(*this == r); }

 private:
  const CoxeterGroup* group_ = nullptr;
  std::map<std::uint32_t, LaurentPoly> terms_;
};

// Product, written h_mul in prose; same as operator*.
HeckeElement h_mul(const HeckeElement& a, const HeckeElement& b);

// Standard-basis expansion of H_w^{-1}, computed by multiplying the
// generator inverses H_s^{-1} = H_s + (v - v^-1) H_e along a reduced word of
// w, reversed.  Stateless; KLCache::inv_std memoizes it.
HeckeElement h_inv_std(const CoxeterGroup& g, Element w);

// Bar involution: v -> v^-1 on coefficients, H_w -> H_{w^-1}^{-1}.
HeckeElement h_bar(const HeckeElement& a);

// The anti-involution * with H_w^* = H_{w^-1}.
HeckeElement h_star(const HeckeElement& a);

// The symmetrizing form tau: the H_e-coordinate.
LaurentPoly tau(const HeckeElement& a);

// Per-group memo tables for the KL machinery.  Thread-safe: entries may be
// requested from any number of threads; a coarse recursive lock keeps the
// in-order recursion simple (desk-scale groups never contend for long).
class KLCache {
 public:
  explicit KLCache(const CoxeterGroup& g);

  const CoxeterGroup& group() const { return g_; }

  // The Kazhdan-Lusztig basis element uH_w, by the mu-correction recursion
  // over the ShortLex-last right descent (see hecke.cpp), triangularity-
  // checked against the defining shape.
  const HeckeElement& kl_basis(Element w);
  // The twisted basis element ucH_w.
  const HeckeElement& twisted_kl_basis(Element w);
  // Dual bases huH_w / hucH_w.  Each is computed from its Q-expansion and
  // cross-checked against the product route huH_w = ucH_{w w0} H_{w0},
  // hucH_w = uH_{w w0} H_{w0}; disagreement throws Inconsistency.
  HeckeElement dual_kl_basis(Element w);
  HeckeElement dual_twisted_kl_basis(Element w);

  // P_{x,y} as a polynomial in q (zero unless x <= y, P_{x,x} = 1).
  LaurentPoly kl_poly(Element x, Element y);
  // Leading coefficient mu(x,y), extended symmetrically: mu(x,y) = mu(y,x).
  std::int64_t mu(Element x, Element y);

  // Memoized standard-basis inverse H_w^{-1}.
  const HeckeElement& inv_std(Element w);

  // Computes every uH_w / ucH_w (and thus the whole P table).
  void fill_all();

  // Serialization image: P entries [x_word, y_word, q-coefficients...] for
  // x < y with P != 0, and mu entries [x_word, y_word, value] for x < y with
  // mu != 0.  Used by the JSON cache (cache.cpp).
  struct Table {
    std::vector<std::pair<std::pair<std::string, std::string>, std::vector<std::int64_t>>> p;
    std::vector<std::pair<std::pair<std::string, std::string>, std::int64_t>> mu;
  };
  // Fills everything and exports the table.
  Table export_table();
  // Installs a previously exported table, then validates `spot_checks`
  // seeded-random bar-invariance instances; throws CacheValidationError on
  // malformed input or failed validation.
  void import_table(const Table& table, std::uint64_t seed, int spot_checks = 10);

 private:
  const HeckeElement& kl_basis_locked(std::uint32_t w);
  const HeckeElement& twisted_kl_basis_locked(std::uint32_t w);
  const HeckeElement& inv_std_locked(std::uint32_t w);
  LaurentPoly kl_poly_locked(std::uint32_t x, std::uint32_t y);
  void check_triangular(const HeckeElement& u, std::uint32_t w, bool positive) const;

  const CoxeterGroup& g_;
  mutable std::recursive_mutex mutex_;
  std::vector<std::optional<HeckeElement>> uh_, uch_, inv_;
};

}  // namespace heckecat

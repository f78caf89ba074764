// K-group of the graded principal block: a free Z[v,v^-1]-module on the
// Weyl group carrying six distinguished bases (standard = Verma, costandard,
// simple, projective, tilting, injective) together with the transport
// isomorphisms onto the Hecke algebra and all basis-change maps.
//
// Internally every conversion is routed through the costandard basis.  The
// expansions used are:
//
//   [Delta(x)] = psi-relabel of  H_{(w0 x)^{-1}}^{-1}
//              = [Nabla(x)] + sum_{y > x} r_{y,x}(v) [Nabla(y)]
//   [L(x)]     = psi-relabel of  ucH_{w0 x}
//              = [Nabla(x)] + sum_{y > x} (-v)^{l(x)-l(y)} P_{w0 y, w0 x}(v^2) [Nabla(y)]
//   [T(x)]     = psi-relabel of  uH_{w0 x}
//   [I(x)]     = psi-relabel of  hucH_{w0 x}
//   [P(w)]     = sum_y v^{l(w)-l(y)} P_{y,w}(v^-2) [Delta(y)]   (phi of uH_w)
//
// where the psi-relabel sends H_u to [Nabla(w0 u)].  All of these are
// triangular with unit diagonal (upward in the Bruhat order for Delta, L, T;
// downward for I, and for P against the Verma basis), so the inverse maps
// are computed by residual back-substitution.
#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string_view>
#include <vector>

#include "heckecat/coxeter.hpp"
#include "heckecat/errors.hpp"
#include "heckecat/hecke.hpp"
#include "heckecat/laurent.hpp"

namespace heckecat {

// The six bases of the K-group.  Verma = [Delta(w)], DualVerma = [Nabla(w)],
// Simple = [L(w)], Projective = [P(w)], Tilting = [T(w)], Injective = [I(w)].
enum class BasisTag {
  Verma,
  DualVerma,
  Simple,
  Projective,
  Tilting,
  Injective,
};

// Stable ASCII identifiers used in JSON and on the command line:
// "Delta", "Nabla", "L", "P", "T", "I".
const char* basis_name(BasisTag tag);

// UTF-8 display symbols used by the text renderer: Δ ∇ L P T I.
const char* basis_symbol(BasisTag tag);

// Accepts the ASCII identifiers above (case-insensitively) plus the
// descriptive synonyms verma, dualverma, simple, projective, tilting,
// injective.  Throws ParseError on anything else.
BasisTag parse_basis(std::string_view token);

// A K-group vector written in one fixed basis: a finite Z[v,v^-1]-linear
// combination of classes [X(w)].  The grading shift M<k> acts as
// multiplication by v^k on every coordinate.  Addition and subtraction
// require matching basis and group.
class CharacterVector {
 public:
  CharacterVector(BasisTag basis, const CoxeterGroup* group)
      : basis_(basis), group_(group) {}

  static CharacterVector zero(BasisTag basis, const CoxeterGroup& g) {
    return CharacterVector(basis, &g);
  }
  static CharacterVector unit(BasisTag basis, const CoxeterGroup& g, Element x);

  BasisTag basis() const { return basis_; }
  const CoxeterGroup* group() const { return group_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  LaurentPoly coeff(Element x) const;
  void set_coeff(Element x, LaurentPoly c);
  void add_coeff(Element x, const LaurentPoly& c);

  // Coordinates keyed by element id; zero coordinates are never stored.
  const std::map<std::uint32_t, LaurentPoly>& terms() const { return terms_; }

  // The class of the shifted object M<k>: every coordinate times v^k.
  CharacterVector shifted(int k) const;
  CharacterVector scaled(const LaurentPoly& c) const;

  CharacterVector operator-() const;
  CharacterVector& operator+=(const CharacterVector& r);
  CharacterVector& operator-=(const CharacterVector& r);
  friend CharacterVector operator+(CharacterVector a, const CharacterVector& b) {
    a += b;
    return a;
  }
  friend CharacterVector operator-(CharacterVector a, const CharacterVector& b) {
    a -= b;
    return a;
  }

  bool operator==(const CharacterVector& r) const {
    return basis_ == r.basis_ && terms_ == r.terms_;
  }
  bool operator!=(const CharacterVector& r) const { return !(*this == r); }

 private:
  void check_compatible(const CharacterVector& r) const;

  BasisTag basis_;
  const CoxeterGroup* group_;
  std::map<std::uint32_t, LaurentPoly> terms_;
};

// The four transport isomorphisms between the K-group and the Hecke algebra:
//   Phi         H_w          <-> [Delta(w)]
//   Psi         H_w          <-> [Nabla(w0 w)]
//   RhoTwist    v^k H_{w0 x^-1} <-> [Nabla(x)<k>]   (twisting picture)
//   RhoShuffle  v^k H_{w0 x}    <-> [Nabla(x)<k>]   (shuffling picture)
enum class TransportMap { Phi, Psi, RhoTwist, RhoShuffle };

// Basis-change and transport engine for one Weyl group.  Costandard
// expansions are memoized; all entry points are thread-safe.
class KGroupContext {
 public:
  KGroupContext(const CoxeterGroup& g, KLCache& kl);

  const CoxeterGroup& group() const { return g_; }
  KLCache& kl() const { return kl_; }

  // The basis vector [X(x)] itself.
  CharacterVector unit(BasisTag basis, Element x) const;

  // [X(x)] expanded in the costandard basis (memoized).
  CharacterVector nabla_expansion(BasisTag basis, Element x) const;

  // Linear extension of nabla_expansion over an arbitrary vector.
  CharacterVector to_nabla(const CharacterVector& vec) const;

  // Inverse of to_nabla for the given target basis, by triangular
  // back-substitution.  The input must be in the costandard basis.
  CharacterVector from_nabla(const CharacterVector& vec, BasisTag target) const;

  // General exact basis change.  Verma -> Simple uses the closed form
  // [Delta(x)] = sum_{z >= x} v^{l(z)-l(x)} P_{x,z}(v^-2) [L(z)]; every other
  // pair is routed through the costandard basis.
  CharacterVector change_basis(const CharacterVector& vec, BasisTag target) const;

  // [Delta(x)] = [Nabla(x)] + sum_{y > x} r_{y,x}(v) [Nabla(y)], the
  // r-coefficients being read off the standard-basis expansion
  // H_{(w0 x)^{-1}}^{-1} = H_{w0 x} + sum r_{y,x}(v) H_{w0 y}.
  CharacterVector verma_in_nabla(Element x) const;

  // r_{y,x}(v) above; returns 1 for y = x and 0 unless y >= x.
  LaurentPoly r_coefficient(Element y, Element x) const;

  HeckeElement transport_to_hecke(TransportMap map, const CharacterVector& vec) const;
  CharacterVector transport_from_hecke(TransportMap map, const HeckeElement& h) const;

  // The Ringel self-duality on classes: [Delta(w)] -> [Nabla(w0 w)]
  // coordinatewise.  Requires a Verma-basis input.
  CharacterVector ringel_dual(const CharacterVector& vec) const;

 private:
  CharacterVector nabla_expansion_locked(BasisTag basis, Element x) const;
  // Relabels a Hecke element through psi: H_u -> [Nabla(w0 u)].
  CharacterVector psi_relabel(const HeckeElement& h) const;
  // [P(w)] in the Verma basis (phi of uH_w).
  CharacterVector projective_in_verma(Element w) const;
  void check_element(Element x) const;
  void check_vector(const CharacterVector& vec) const;

  const CoxeterGroup& g_;
  KLCache& kl_;
  mutable std::recursive_mutex mutex_;
  // Memoized costandard expansions, indexed by basis * |W| + element id.
  mutable std::vector<std::optional<CharacterVector>> nabla_memo_;
};

}  // namespace heckecat

// Basis management for the K-group: costandard expansions of all six bases,
// triangular inversion, transport to and from the Hecke algebra.
#include "heckecat/kgroup.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

namespace heckecat {

namespace {

constexpr int kBasisCount = 6;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

const char* basis_name(BasisTag tag) {
  switch (tag) {
    case BasisTag::Verma: return "Delta";
    case BasisTag::DualVerma: return "Nabla";
    case BasisTag::Simple: return "L";
    case BasisTag::Projective: return "P";
    case BasisTag::Tilting: return "T";
    case BasisTag::Injective: return "I";
  }
  throw Error("unknown basis tag");
}

const char* basis_symbol(BasisTag tag) {
  switch (tag) {
    case BasisTag::Verma: return "Δ";   // Δ
    case BasisTag::DualVerma: return "∇";  // ∇
    case BasisTag::Simple: return "L";
    case BasisTag::Projective: return "P";
    case BasisTag::Tilting: return "T";
    case BasisTag::Injective: return "I";
  }
  throw Error("unknown basis tag");
}

BasisTag parse_basis(std::string_view token) {
  const std::string t = lower(token);
  if (t == "delta" || t == "verma") return BasisTag::Verma;
  if (t == "nabla" || t == "dualverma") return BasisTag::DualVerma;
  if (t == "l" || t == "simple") return BasisTag::Simple;
  if (t == "p" || t == "projective") return BasisTag::Projective;
  if (t == "t" || t == "tilting") return BasisTag::Tilting;
  if (t == "i" || t == "injective") return BasisTag::Injective;
  throw ParseError("unknown basis '" + std::string(token) +
                   "' (expected Delta, Nabla, L, P, T or I)");
}

// ---------------------------------------------------------------------------
// CharacterVector

CharacterVector CharacterVector::unit(BasisTag basis, const CoxeterGroup& g,
                                      Element x) {
  CharacterVector out(basis, &g);
  out.set_coeff(x, LaurentPoly(1));
  return out;
}

LaurentPoly CharacterVector::coeff(Element x) const {
  auto it = terms_.find(x.id);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void CharacterVector::set_coeff(Element x, LaurentPoly c) {
  if (c.is_zero()) {
    terms_.erase(x.id);
  } else {
    terms_[x.id] = std::move(c);
  }
}

void CharacterVector::add_coeff(Element x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x.id, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CharacterVector CharacterVector::shifted(int k) const {
  return scaled(LaurentPoly::v(k));
}

CharacterVector CharacterVector::scaled(const LaurentPoly& c) const {
  CharacterVector out(basis_, group_);
  if (c.is_zero()) return out;
  for (const auto& [w, coeff] : terms_) out.terms_.emplace(w, coeff * c);
  return out;
}

CharacterVector CharacterVector::operator-() const {
  CharacterVector out(basis_, group_);
  for (const auto& [w, coeff] : terms_) out.terms_.emplace(w, -coeff);
  return out;
}

void CharacterVector::check_compatible(const CharacterVector& r) const {
  if (basis_ != r.basis_) {
    throw WrongBasis(std::string("cannot combine ") + basis_name(basis_) +
                     "-basis and " + basis_name(r.basis_) + "-basis vectors");
  }
  if (group_ != nullptr && r.group_ != nullptr && group_ != r.group_) {
    throw GroupMismatch("character vectors over different groups");
  }
}

CharacterVector& CharacterVector::operator+=(const CharacterVector& r) {
  check_compatible(r);
  if (group_ == nullptr) group_ = r.group_;
  for (const auto& [w, coeff] : r.terms_) add_coeff(Element{w}, coeff);
  return *this;
}

CharacterVector& CharacterVector::operator-=(const CharacterVector& r) {
  check_compatible(r);
  if (group_ == nullptr) group_ = r.group_;
  for (const auto& [w, coeff] : r.terms_) add_coeff(Element{w}, -coeff);
  return *this;
}

// ---------------------------------------------------------------------------
// KGroupContext

KGroupContext::KGroupContext(const CoxeterGroup& g, KLCache& kl)
    : g_(g), kl_(kl) {
  if (&kl.group() != &g) {
    throw GroupMismatch("KL cache belongs to a different group");
  }
  nabla_memo_.resize(static_cast<std::size_t>(kBasisCount) * g_.size());
}

void KGroupContext::check_element(Element x) const {
  if (x.id >= g_.size()) {
    throw BadElement("element id " + std::to_string(x.id) + " out of range");
  }
}

void KGroupContext::check_vector(const CharacterVector& vec) const {
  if (vec.group() != nullptr && vec.group() != &g_) {
    throw GroupMismatch("character vector over a different group");
  }
  for (const auto& [w, coeff] : vec.terms()) {
    (void)coeff;
    check_element(Element{w});
  }
}

CharacterVector KGroupContext::unit(BasisTag basis, Element x) const {
  check_element(x);
  return CharacterVector::unit(basis, g_, x);
}

CharacterVector KGroupContext::psi_relabel(const HeckeElement& h) const {
  const Element w0 = g_.longest();
  CharacterVector out(BasisTag::DualVerma, &g_);
  for (const auto& [u, coeff] : h.terms()) {
    out.set_coeff(g_.multiply(w0, Element{u}), coeff);
  }
  return out;
}

CharacterVector KGroupContext::projective_in_verma(Element w) const {
  // phi sends uH_w to [P(w)] and H_y to [Delta(y)], so the Verma coordinates
  // of [P(w)] are literally the standard-basis coordinates of uH_w.
  CharacterVector out(BasisTag::Verma, &g_);
  for (const auto& [y, coeff] : kl_.kl_basis(w).terms()) {
    out.set_coeff(Element{y}, coeff);
  }
  return out;
}

CharacterVector KGroupContext::nabla_expansion(BasisTag basis, Element x) const {
  check_element(x);
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return nabla_expansion_locked(basis, x);
}

CharacterVector KGroupContext::nabla_expansion_locked(BasisTag basis,
                                                      Element x) const {
  const std::size_t slot =
      static_cast<std::size_t>(basis) * g_.size() + x.id;
  if (nabla_memo_[slot].has_value()) return *nabla_memo_[slot];

  const Element w0 = g_.longest();
  CharacterVector out(BasisTag::DualVerma, &g_);
  switch (basis) {
    case BasisTag::DualVerma:
      out.set_coeff(x, LaurentPoly(1));
      break;
    case BasisTag::Verma:
      // H_{(w0 x)^{-1}}^{-1} = H_{w0 x} + sum_{y > x} r_{y,x} H_{w0 y}.
      out = psi_relabel(h_inv_std(g_, g_.inverse(g_.multiply(w0, x))));
      break;
    case BasisTag::Simple:
      out = psi_relabel(kl_.twisted_kl_basis(g_.multiply(w0, x)));
      break;
    case BasisTag::Tilting:
      out = psi_relabel(kl_.kl_basis(g_.multiply(w0, x)));
      break;
    case BasisTag::Injective:
      out = psi_relabel(kl_.dual_twisted_kl_basis(g_.multiply(w0, x)));
      break;
    case BasisTag::Projective: {
      const CharacterVector in_verma = projective_in_verma(x);
      for (const auto& [y, coeff] : in_verma.terms()) {
        out += nabla_expansion_locked(BasisTag::Verma, Element{y}).scaled(coeff);
      }
      break;
    }
  }

  // The Verma, simple and tilting classes are supported upward in the Bruhat
  // order with unit diagonal; injectives downward.  (Elements are numbered by
  // length, so Bruhat comparisons translate into id comparisons.)
  if (basis == BasisTag::Verma || basis == BasisTag::Simple ||
      basis == BasisTag::Tilting || basis == BasisTag::Injective) {
    if (out.coeff(x) != LaurentPoly(1)) {
      throw TriangularityViolation("costandard expansion has non-unit diagonal");
    }
    for (const auto& [y, coeff] : out.terms()) {
      (void)coeff;
      const bool ok = basis == BasisTag::Injective
                          ? g_.bruhat_leq(Element{y}, x)
                          : g_.bruhat_leq(x, Element{y});
      if (!ok) {
        throw TriangularityViolation("costandard expansion escapes its Bruhat cone");
      }
    }
  }

  nabla_memo_[slot] = out;
  return out;
}

CharacterVector KGroupContext::to_nabla(const CharacterVector& vec) const {
  check_vector(vec);
  if (vec.basis() == BasisTag::DualVerma) return vec;
  CharacterVector out(BasisTag::DualVerma, &g_);
  for (const auto& [w, coeff] : vec.terms()) {
    out += nabla_expansion(vec.basis(), Element{w}).scaled(coeff);
  }
  return out;
}

CharacterVector KGroupContext::from_nabla(const CharacterVector& vec,
                                          BasisTag target) const {
  check_vector(vec);
  if (vec.basis() != BasisTag::DualVerma) {
    throw WrongBasis("from_nabla expects a costandard-basis vector");
  }
  if (target == BasisTag::DualVerma) return vec;

  if (target == BasisTag::Projective) {
    // [P(w)] is unitriangular against the Verma basis, supported downward,
    // so convert to Verma coordinates first and back-substitute from the top.
    CharacterVector residual = from_nabla(vec, BasisTag::Verma);
    CharacterVector out(BasisTag::Projective, &g_);
    while (!residual.is_zero()) {
      const auto pivot = std::prev(residual.terms().end());
      const Element w{pivot->first};
      const LaurentPoly c = pivot->second;
      out.add_coeff(w, c);
      residual -= projective_in_verma(w).scaled(c);
      if (!residual.coeff(w).is_zero()) {
        throw Inconsistency("projective back-substitution failed to clear pivot");
      }
    }
    return out;
  }

  // Upward-triangular targets eliminate from the Bruhat-smallest coordinate;
  // the downward-triangular injective basis from the largest.
  const bool upward = target != BasisTag::Injective;
  CharacterVector residual = vec;
  CharacterVector out(target, &g_);
  while (!residual.is_zero()) {
    const auto pivot = upward ? residual.terms().begin()
                              : std::prev(residual.terms().end());
    const Element x{pivot->first};
    const LaurentPoly c = pivot->second;
    out.add_coeff(x, c);
    residual -= nabla_expansion(target, x).scaled(c);
    if (!residual.coeff(x).is_zero()) {
      throw Inconsistency("costandard back-substitution failed to clear pivot");
    }
  }
  return out;
}

CharacterVector KGroupContext::change_basis(const CharacterVector& vec,
                                            BasisTag target) const {
  check_vector(vec);
  if (vec.basis() == target) return vec;

  if (vec.basis() == BasisTag::Verma && target == BasisTag::Simple) {
    // Graded Verma multiplicities, in closed form:
    //   [Delta(x)] = sum_{z >= x} v^{l(z)-l(x)} P_{x,z}(v^-2) [L(z)].
    CharacterVector out(BasisTag::Simple, &g_);
    for (const auto& [xid, coeff] : vec.terms()) {
      const Element x{xid};
      for (std::uint32_t zid = xid; zid < g_.size(); ++zid) {
        const Element z{zid};
        if (!g_.bruhat_leq(x, z)) continue;
        const int gap =
            static_cast<int>(g_.length(z)) - static_cast<int>(g_.length(x));
        const LaurentPoly mult =
            kl_.kl_poly(x, z).subst_q(-2).shifted(gap);
        out.add_coeff(z, coeff * mult);
      }
    }
    return out;
  }

  return from_nabla(to_nabla(vec), target);
}

CharacterVector KGroupContext::verma_in_nabla(Element x) const {
  return nabla_expansion(BasisTag::Verma, x);
}

LaurentPoly KGroupContext::r_coefficient(Element y, Element x) const {
  check_element(y);
  return verma_in_nabla(x).coeff(y);
}

HeckeElement KGroupContext::transport_to_hecke(TransportMap map,
                                               const CharacterVector& vec) const {
  check_vector(vec);
  const Element w0 = g_.longest();
  HeckeElement out = HeckeElement::zero(g_);
  switch (map) {
    case TransportMap::Phi: {
      // phi^{-1}: [Delta(w)] -> H_w.
      const CharacterVector d = change_basis(vec, BasisTag::Verma);
      for (const auto& [w, coeff] : d.terms()) out.add_coeff(Element{w}, coeff);
      return out;
    }
    case TransportMap::Psi: {
      // psi^{-1}: [Nabla(x)] -> H_{w0 x}.
      const CharacterVector n = change_basis(vec, BasisTag::DualVerma);
      for (const auto& [x, coeff] : n.terms()) {
        out.add_coeff(g_.multiply(w0, Element{x}), coeff);
      }
      return out;
    }
    case TransportMap::RhoTwist: {
      // rho: [Nabla(x)<k>] -> v^k H_{w0 x^-1}.
      const CharacterVector n = change_basis(vec, BasisTag::DualVerma);
      for (const auto& [x, coeff] : n.terms()) {
        out.add_coeff(g_.multiply(w0, g_.inverse(Element{x})), coeff);
      }
      return out;
    }
    case TransportMap::RhoShuffle: {
      // rho': [Nabla(x)<k>] -> v^k H_{w0 x}.
      const CharacterVector n = change_basis(vec, BasisTag::DualVerma);
      for (const auto& [x, coeff] : n.terms()) {
        out.add_coeff(g_.multiply(w0, Element{x}), coeff);
      }
      return out;
    }
  }
  throw Error("unknown transport map");
}

CharacterVector KGroupContext::transport_from_hecke(TransportMap map,
                                                    const HeckeElement& h) const {
  if (h.group() != nullptr && h.group() != &g_) {
    throw GroupMismatch("Hecke element over a different group");
  }
  const Element w0 = g_.longest();
  switch (map) {
    case TransportMap::Phi: {
      CharacterVector out(BasisTag::Verma, &g_);
      for (const auto& [u, coeff] : h.terms()) out.set_coeff(Element{u}, coeff);
      return out;
    }
    case TransportMap::Psi:
    case TransportMap::RhoShuffle: {
      // H_u -> [Nabla(w0 u)]; psi and rho'^{-1} agree on the standard basis.
      CharacterVector out(BasisTag::DualVerma, &g_);
      for (const auto& [u, coeff] : h.terms()) {
        out.set_coeff(g_.multiply(w0, Element{u}), coeff);
      }
      return out;
    }
    case TransportMap::RhoTwist: {
      // H_u -> [Nabla(u^-1 w0)], the inverse of x -> w0 x^-1.
      CharacterVector out(BasisTag::DualVerma, &g_);
      for (const auto& [u, coeff] : h.terms()) {
        out.set_coeff(g_.multiply(g_.inverse(Element{u}), w0), coeff);
      }
      return out;
    }
  }
  throw Error("unknown transport map");
}

CharacterVector KGroupContext::ringel_dual(const CharacterVector& vec) const {
  check_vector(vec);
  if (vec.basis() != BasisTag::Verma) {
    throw WrongBasis("Ringel duality acts on Verma-basis vectors");
  }
  const Element w0 = g_.longest();
  CharacterVector out(BasisTag::DualVerma, &g_);
  for (const auto& [w, coeff] : vec.terms()) {
    out.set_coeff(g_.multiply(w0, Element{w}), coeff);
  }
  return out;
}

}  // namespace heckecat

/*
  hecke.cpp — standard-basis arithmetic and the Kazhdan-Lusztig bases.
*/
#include "heckecat/hecke.hpp"

#include <random>
#include <string>

namespace heckecat {

namespace {

// (-v)^k as a Laurent polynomial, valid for k of either sign.
LaurentPoly neg_v_pow(int k) {
  const bool odd = (k % 2) != 0;
  return LaurentPoly::monomial(odd ? -1 : 1, k);
}

}  // namespace

HeckeElement HeckeElement::basis(const CoxeterGroup& g, Element w) {
  HeckeElement h(&g);
  h.set_coeff(w, LaurentPoly(1));
  return h;
}

LaurentPoly HeckeElement::coeff(Element w) const {
  auto it = terms_.find(w.id);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::set_coeff(Element w, LaurentPoly c) {
  if (c.is_zero()) {
    terms_.erase(w.id);
  } else {
    terms_[w.id] = std::move(c);
  }
}

void HeckeElement::add_coeff(Element w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w.id, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement HeckeElement::operator-() const {
  HeckeElement out(group_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& r) {
  if (group_ == nullptr) group_ = r.group_;
  if (r.group_ != nullptr && group_ != r.group_) {
    throw GroupMismatch("Hecke elements over different groups");
  }
  for (const auto& [w, c] : r.terms_) add_coeff(Element{w}, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& r) {
  if (group_ == nullptr) group_ = r.group_;
  if (r.group_ != nullptr && group_ != r.group_) {
    throw GroupMismatch("Hecke elements over different groups");
  }
  for (const auto& [w, c] : r.terms_) add_coeff(Element{w}, -c);
  return *this;
}

HeckeElement HeckeElement::scaled(const LaurentPoly& c) const {
  HeckeElement out(group_);
  if (c.is_zero()) return out;
  for (const auto& [w, p] : terms_) out.terms_.emplace(w, p * c);
  return out;
}

namespace {

// X * H_s in the standard basis: H_x H_s = H_{xs} when xs > x, and
// H_{xs} + (v^-1 - v) H_x otherwise.
HeckeElement mul_gen_right(const HeckeElement& x, int s) {
  const CoxeterGroup& g = *x.group();
  static const LaurentPoly kQuad = LaurentPoly::v(-1) - LaurentPoly::v(1);
  HeckeElement out(&g);
  for (const auto& [wid, c] : x.terms()) {
    const Element w{wid};
    const Element ws = g.right(w, s);
    out.add_coeff(ws, c);
    if (g.length(ws) < g.length(w)) out.add_coeff(w, c * kQuad);
  }
  return out;
}

}  // namespace

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  if (a.group() == nullptr || b.group() == nullptr) {
    throw GroupMismatch("cannot multiply detached Hecke elements");
  }
  if (a.group() != b.group()) {
    throw GroupMismatch("Hecke elements over different groups");
  }
  const CoxeterGroup& g = *a.group();
  // Decompose b along canonical reduced words: A * H_y is a fold of
  // generator multiplications, and the product is bilinear.
  HeckeElement out(&g);
  for (const auto& [yid, cb] : b.terms()) {
    HeckeElement x = a;
    for (std::uint8_t s : g.word(Element{yid})) x = mul_gen_right(x, s);
    out += x.scaled(cb);
  }
  return out;
}

HeckeElement h_mul(const HeckeElement& a, const HeckeElement& b) { return a * b; }

HeckeElement h_inv_std(const CoxeterGroup& g, Element w) {
  // (H_{s_1} ... H_{s_k})^{-1} = H_{s_k}^{-1} ... H_{s_1}^{-1} with
  // H_s^{-1} = H_s + (v - v^-1) H_e.
  static const LaurentPoly kInvQuad = LaurentPoly::v(1) - LaurentPoly::v(-1);
  HeckeElement out = HeckeElement::basis(g, g.identity());
  const auto& word = g.word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    HeckeElement next = mul_gen_right(out, *it);
    next += out.scaled(kInvQuad);
    out = std::move(next);
  }
  return out;
}

HeckeElement h_bar(const HeckeElement& a) {
  if (a.group() == nullptr) return a;
  const CoxeterGroup& g = *a.group();
  HeckeElement out(&g);
  for (const auto& [wid, c] : a.terms()) {
    out += h_inv_std(g, g.inverse(Element{wid})).scaled(c.bar());
  }
  return out;
}

HeckeElement h_star(const HeckeElement& a) {
  if (a.group() == nullptr) return a;
  const CoxeterGroup& g = *a.group();
  HeckeElement out(&g);
  for (const auto& [wid, c] : a.terms()) out.add_coeff(g.inverse(Element{wid}), c);
  return out;
}

LaurentPoly tau(const HeckeElement& a) {
  return a.group() ? a.coeff(a.group()->identity()) : LaurentPoly();
}

KLCache::KLCache(const CoxeterGroup& g)
    : g_(g), uh_(g.size()), uch_(g.size()), inv_(g.size()) {}

const HeckeElement& KLCache::inv_std(Element w) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return inv_std_locked(w.id);
}

const HeckeElement& KLCache::inv_std_locked(std::uint32_t w) {
  if (!inv_[w]) inv_[w] = h_inv_std(g_, Element{w});
  return *inv_[w];
}

// Checks the defining triangular shape of a (twisted) KL basis element:
// unitriangular over {y <= w} with off-diagonal coefficients in vZ[v]
// (positive = true) or v^-1 Z[v^-1] (positive = false).
void KLCache::check_triangular(const HeckeElement& u, std::uint32_t w,
                               bool positive) const {
  for (const auto& [yid, c] : u.terms()) {
    if (yid == w) {
      if (c != LaurentPoly(1)) {
        throw TriangularityViolation("diagonal coefficient of H_" +
                                     g_.element_str(Element{w}) + " is " + c.str());
      }
      continue;
    }
    if (!g_.bruhat_leq(Element{yid}, Element{w})) {
      throw TriangularityViolation("basis element for " +
                                   g_.element_str(Element{w}) +
                                   " is supported outside the Bruhat interval");
    }
    const bool ok = positive ? c.min_exp() >= 1 : c.max_exp() <= -1;
    if (!ok) {
      throw TriangularityViolation("off-diagonal coefficient " + c.str() +
                                   " at H_" + g_.element_str(Element{yid}) +
                                   " in the basis element for " +
                                   g_.element_str(Element{w}));
    }
  }
}

// Canonical-basis product recursion on the ShortLex-last right descent s of
// w, with w' := ws < w:
//   uH_w = uH_{w'} uH_s - sum_{y < w', ys < y} mu(y,w') uH_y,
// and identically for ucH with ucH_s = H_s - v^-1.  mu(y,w') is read off the
// already-computed uH_{w'}: its H_y-coordinate is v^{l(w')-l(y)} P(v^-2),
// whose v^1-coefficient is exactly the leading coefficient.
const HeckeElement& KLCache::kl_basis_locked(std::uint32_t w) {
  if (uh_[w]) return *uh_[w];
  const Element we{w};
  if (g_.length(we) == 0) {
    uh_[w] = HeckeElement::basis(g_, we);
    return *uh_[w];
  }
  const int s = g_.word(we).back();
  const Element wp = g_.right(we, s);

  HeckeElement uhs(&g_);
  uhs.set_coeff(g_.right(g_.identity(), s), LaurentPoly(1));
  uhs.set_coeff(g_.identity(), LaurentPoly::v(1));

  HeckeElement acc = kl_basis_locked(wp.id) * uhs;
  const HeckeElement up = *uh_[wp.id];
  for (const auto& [yid, c] : up.terms()) {
    if (yid == wp.id) continue;
    const std::int64_t mu_y = c.coeff(1);
    if (mu_y == 0 || !g_.is_right_descent(Element{yid}, s)) continue;
    acc -= kl_basis_locked(yid).scaled(LaurentPoly(mu_y));
  }
  check_triangular(acc, w, /*positive=*/true);
  uh_[w] = std::move(acc);
  return *uh_[w];
}

const HeckeElement& KLCache::twisted_kl_basis_locked(std::uint32_t w) {
  if (uch_[w]) return *uch_[w];
  const Element we{w};
  if (g_.length(we) == 0) {
    uch_[w] = HeckeElement::basis(g_, we);
    return *uch_[w];
  }
  const int s = g_.word(we).back();
  const Element wp = g_.right(we, s);

  HeckeElement uchs(&g_);
  uchs.set_coeff(g_.right(g_.identity(), s), LaurentPoly(1));
  uchs.set_coeff(g_.identity(), LaurentPoly::monomial(-1, -1));

  HeckeElement acc = twisted_kl_basis_locked(wp.id) * uchs;
  // Same mu corrections as the untwisted recursion.
  const HeckeElement& up = kl_basis_locked(wp.id);
  std::vector<std::pair<std::uint32_t, std::int64_t>> corrections;
  for (const auto& [yid, c] : up.terms()) {
    if (yid == wp.id) continue;
    const std::int64_t mu_y = c.coeff(1);
    if (mu_y == 0 || !g_.is_right_descent(Element{yid}, s)) continue;
    corrections.emplace_back(yid, mu_y);
  }
  for (const auto& [yid, mu_y] : corrections) {
    acc -= twisted_kl_basis_locked(yid).scaled(LaurentPoly(mu_y));
  }
  check_triangular(acc, w, /*positive=*/false);
  uch_[w] = std::move(acc);
  return *uch_[w];
}

const HeckeElement& KLCache::kl_basis(Element w) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return kl_basis_locked(w.id);
}

const HeckeElement& KLCache::twisted_kl_basis(Element w) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return twisted_kl_basis_locked(w.id);
}

LaurentPoly KLCache::kl_poly(Element x, Element y) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return kl_poly_locked(x.id, y.id);
}

// P_{x,y}(q) is recovered from the H_x-coordinate of uH_y, which equals
// v^{l(y)-l(x)} P_{x,y}(v^-2): the v-exponent l(y)-l(x)-2k corresponds to
// the q-exponent k.
LaurentPoly KLCache::kl_poly_locked(std::uint32_t x, std::uint32_t y) {
  if (x == y) return LaurentPoly(1);
  if (!g_.bruhat_leq(Element{x}, Element{y})) return LaurentPoly();
  const LaurentPoly c = kl_basis_locked(y).coeff(Element{x});
  const int gap = static_cast<int>(g_.length(Element{y})) -
                  static_cast<int>(g_.length(Element{x}));
  LaurentPoly p;
  for (const auto& [e, coeff] : c.terms()) {
    const int twice_k = gap - e;
    if (twice_k < 0 || twice_k % 2 != 0) {
      throw Inconsistency("uH coefficient " + c.str() + " is not of the form v^gap * P(v^-2)");
    }
    p += LaurentPoly::monomial(coeff, twice_k / 2);
  }
  return p;
}

std::int64_t KLCache::mu(Element x, Element y) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  if (x.id == y.id) return 0;
  if (g_.bruhat_leq(x, y)) {
    // Leading coefficient = v^1-coefficient of the H_x-coordinate of uH_y.
    return kl_basis_locked(y.id).coeff(x).coeff(1);
  }
  if (g_.bruhat_leq(y, x)) {
    return kl_basis_locked(x.id).coeff(y).coeff(1);
  }
  return 0;
}

HeckeElement KLCache::dual_kl_basis(Element w) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  const Element w0 = g_.longest();
  // Q-expansion route: huH_w = H_w + sum_{y>w} (-v)^{l(y)-l(w)} Q_{w,y}(v^-2) H_y
  // with Q_{w,y} = P_{w0 y, w0 w}.
  HeckeElement out(&g_);
  out.set_coeff(w, LaurentPoly(1));
  for (std::uint32_t yid = 0; yid < g_.size(); ++yid) {
    const Element y{yid};
    if (yid == w.id || !g_.bruhat_leq(w, y)) continue;
    const LaurentPoly q =
        kl_poly_locked(g_.multiply(w0, y).id, g_.multiply(w0, w).id);
    if (q.is_zero()) continue;
    const int gap = static_cast<int>(g_.length(y)) - static_cast<int>(g_.length(w));
    out.add_coeff(y, neg_v_pow(gap) * q.subst_q(-2));
  }
  // Product route: huH_w = ucH_{w w0} H_{w0}.
  const HeckeElement product =
      twisted_kl_basis_locked(g_.multiply(w, w0).id) * HeckeElement::basis(g_, w0);
  if (out != product) {
    throw Inconsistency("dual KL basis for " + g_.element_str(w) +
                        ": Q-expansion disagrees with the product route");
  }
  return out;
}

HeckeElement KLCache::dual_twisted_kl_basis(Element w) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  const Element w0 = g_.longest();
  // hucH_w = H_w + sum_{y>w} v^{l(w)-l(y)} Q_{w,y}(v^2) H_y.
  HeckeElement out(&g_);
  out.set_coeff(w, LaurentPoly(1));
  for (std::uint32_t yid = 0; yid < g_.size(); ++yid) {
    const Element y{yid};
    if (yid == w.id || !g_.bruhat_leq(w, y)) continue;
    const LaurentPoly q =
        kl_poly_locked(g_.multiply(w0, y).id, g_.multiply(w0, w).id);
    if (q.is_zero()) continue;
    const int gap = static_cast<int>(g_.length(w)) - static_cast<int>(g_.length(y));
    out.add_coeff(y, q.subst_q(2).shifted(gap));
  }
  // Product route: hucH_w = uH_{w w0} H_{w0}.
  const HeckeElement product =
      kl_basis_locked(g_.multiply(w, w0).id) * HeckeElement::basis(g_, w0);
  if (out != product) {
    throw Inconsistency("dual twisted KL basis for " + g_.element_str(w) +
                        ": Q-expansion disagrees with the product route");
  }
  return out;
}

void KLCache::fill_all() {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  for (std::uint32_t w = 0; w < g_.size(); ++w) {
    kl_basis_locked(w);
    twisted_kl_basis_locked(w);
  }
}

KLCache::Table KLCache::export_table() {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  fill_all();
  Table t;
  for (std::uint32_t y = 0; y < g_.size(); ++y) {
    for (std::uint32_t x = 0; x < y; ++x) {
      const LaurentPoly p = kl_poly_locked(x, y);
      if (p.is_zero()) continue;
      std::vector<std::int64_t> coeffs(static_cast<std::size_t>(p.max_exp()) + 1, 0);
      for (const auto& [e, c] : p.terms()) coeffs[static_cast<std::size_t>(e)] = c;
      t.p.push_back({{g_.element_str(Element{x}), g_.element_str(Element{y})},
                     std::move(coeffs)});
      const std::int64_t m = p.coeff((static_cast<int>(g_.length(Element{y})) -
                                      static_cast<int>(g_.length(Element{x})) - 1) / 2);
      const bool odd_gap = ((g_.length(Element{y}) - g_.length(Element{x})) % 2) == 1;
      if (odd_gap && m != 0) {
        t.mu.push_back({{g_.element_str(Element{x}), g_.element_str(Element{y})}, m});
      }
    }
  }
  return t;
}

void KLCache::import_table(const Table& table, std::uint64_t seed, int spot_checks) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  // Rebuild the uH / ucH expansions from the P entries.
  std::vector<HeckeElement> uh(g_.size()), uch(g_.size());
  for (std::uint32_t w = 0; w < g_.size(); ++w) {
    uh[w] = HeckeElement::basis(g_, Element{w});
    uch[w] = HeckeElement::basis(g_, Element{w});
  }
  for (const auto& [words, coeffs] : table.p) {
    Element x, y;
    try {
      x = g_.parse_element(words.first);
      y = g_.parse_element(words.second);
    } catch (const Error& e) {
      throw CacheValidationError(std::string("bad element in cached P table: ") + e.what());
    }
    if (!g_.bruhat_leq(x, y) || x.id == y.id) {
      throw CacheValidationError("cached P entry for a pair not strictly below in Bruhat order");
    }
    LaurentPoly p;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      p += LaurentPoly::monomial(coeffs[k], static_cast<int>(k));
    }
    if (p.is_zero()) continue;
    const int gap = static_cast<int>(g_.length(y)) - static_cast<int>(g_.length(x));
    uh[y.id].add_coeff(x, p.subst_q(-2).shifted(gap));
    uch[y.id].add_coeff(x, neg_v_pow(-gap) * p.subst_q(2));
  }

  // Validate a seeded random sample of bar-invariance instances before
  // installing anything: bar(uH_w) = uH_w is the defining property and fails
  // loudly on stale or truncated tables.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, g_.size() - 1);
  for (int i = 0; i < spot_checks; ++i) {
    const std::uint32_t w = pick(rng);
    if (h_bar(uh[w]) != uh[w] || h_bar(uch[w]) != uch[w]) {
      throw CacheValidationError("cached KL table failed bar-invariance validation at w = " +
                                 g_.element_str(Element{w}));
    }
  }

  for (std::uint32_t w = 0; w < g_.size(); ++w) {
    check_triangular(uh[w], w, /*positive=*/true);
    check_triangular(uch[w], w, /*positive=*/false);
    uh_[w] = std::move(uh[w]);
    uch_[w] = std::move(uch[w]);
  }

  // Cross-check the cached mu values against the freshly installed table.
  for (const auto& [words, m] : table.mu) {
    Element x, y;
    try {
      x = g_.parse_element(words.first);
      y = g_.parse_element(words.second);
    } catch (const Error& e) {
      throw CacheValidationError(std::string("bad element in cached mu table: ") + e.what());
    }
    if (mu(x, y) != m) {
      throw CacheValidationError("cached mu(" + words.first + "," + words.second +
                                 ") disagrees with the P table");
    }
  }
}

}  // namespace heckecat

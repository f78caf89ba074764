/*
  coxeter.cpp — Weyl group enumeration and arithmetic.

  Elements are identified during BFS by their integer matrix in the
  reflection representation on simple-root coordinates: the generator s_i
  acts by s_i(alpha_j) = alpha_j - a[i][j] alpha_i with a the Cartan matrix.
  This is exact, uniform across types, and needs no floating point.  The
  matrices are hashed during enumeration and then discarded in favour of
  dense generator multiplication tables.

  BFS from the identity, scanning generators in ascending index, yields ids
  in length-then-ShortLex order and canonical words that are the
  ShortLex-least reduced words: a word discovered for an element is the
  lexicographically first among the shortest, because parents are dequeued
  in canonical order and letters tried in order.
*/
#include "heckecat/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace heckecat {

namespace {

// Classical Weyl group orders; factorials stay well inside 64 bits for every
// rank that passes the element cap.
std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

struct MatrixKey {
  std::vector<int> m;
  bool operator==(const MatrixKey& o) const { return m == o.m; }
};

struct MatrixKeyHash {
  std::size_t operator()(const MatrixKey& k) const {
    std::size_t h = 1469598103934665603ull;  // FNV-1a over the entries
    for (int x : k.m) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(x) + 0x9e3779b9u);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) {
    throw UnsupportedType("cannot parse Cartan type '" + std::string(text) + "'");
  }
  const char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (fam < 'A' || fam > 'G') {
    throw UnsupportedType("unknown type family '" + std::string(text) + "'");
  }
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])) || rank > 100) {
      throw UnsupportedType("bad rank in Cartan type '" + std::string(text) + "'");
    }
    rank = rank * 10 + (text[i] - '0');
  }
  CartanType t{static_cast<Family>(fam), rank};
  t.cartan_matrix();  // validates the (family, rank) combination
  return t;
}

std::string CartanType::str() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

std::uint64_t CartanType::weyl_order() const {
  const int n = rank;
  switch (family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;  // E8
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  throw UnsupportedType("unknown family");
}

int CartanType::positive_roots() const {
  const int n = rank;
  switch (family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E:
      if (n == 6) return 36;
      if (n == 7) return 63;
      return 120;  // E8
    case Family::F: return 24;
    case Family::G: return 6;
  }
  throw UnsupportedType("unknown family");
}

std::vector<std::vector<int>> CartanType::cartan_matrix() const {
  const int n = rank;
  auto bad = [&] {
    return UnsupportedType("no finite Weyl group of type " + str());
  };
  std::vector<std::vector<int>> a(std::max(n, 0), std::vector<int>(std::max(n, 0), 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) { a[i][j] = a[j][i] = -1; };

  switch (family) {
    case Family::A:
      if (n < 1) throw bad();
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
    case Family::C:
      // Same Weyl group; we use the B_n matrix (alpha_n short), where
      // <alpha_{n-1}, alpha_n^vee> = -2.
      if (n < 2) throw bad();
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case Family::D:
      if (n < 2) throw bad();
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      if (n >= 3) bond(n - 3, n - 1);
      break;
    case Family::E:
      if (n < 6 || n > 8) throw bad();
      // Bourbaki numbering: chain 1-3-4-5-6(-7)(-8) with node 2 on node 4.
      bond(0, 2);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      bond(1, 3);
      break;
    case Family::F:
      if (n != 4) throw bad();
      bond(0, 1);
      bond(2, 3);
      a[1][2] = -1;
      a[2][1] = -2;
      break;
    case Family::G:
      if (n != 2) throw bad();
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return a;
}

CoxeterGroup::CoxeterGroup(CartanType type, std::uint64_t element_cap)
    : type_(type) {
  const auto cartan = type_.cartan_matrix();
  const int n = type_.rank;
  const std::uint64_t order = type_.weyl_order();
  if (order > element_cap) {
    throw GroupTooLarge("group " + type_.str() + " has order " +
                        std::to_string(order) + ", above the element cap " +
                        std::to_string(element_cap));
  }

  // Generator matrices, column-major action: column j of M holds the
  // alpha-coordinates of w(alpha_j).  Then M_{ws} = M_w * M_s.
  const int nn = n * n;
  std::vector<std::vector<int>> gen(n, std::vector<int>(nn, 0));
  for (int s = 0; s < n; ++s) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) gen[s][i * n + j] = (i == j) ? 1 : 0;
      gen[s][s * n + j] -= cartan[s][j];
    }
  }

  std::unordered_map<MatrixKey, std::uint32_t, MatrixKeyHash> seen;
  std::vector<std::vector<int>> mats;  // discarded after the BFS

  MatrixKey ident;
  ident.m.assign(nn, 0);
  for (int i = 0; i < n; ++i) ident.m[i * n + i] = 1;
  seen.emplace(ident, 0);
  mats.push_back(ident.m);
  words_.push_back({});
  right_.assign(order * static_cast<std::uint64_t>(n), 0);

  for (std::uint32_t w = 0; w < mats.size(); ++w) {
    for (int s = 0; s < n; ++s) {
      MatrixKey key;
      key.m.assign(nn, 0);
      // key = M_w * M_s
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
          const int m_ik = mats[w][i * n + k];
          if (m_ik == 0) continue;
          for (int j = 0; j < n; ++j) {
            key.m[i * n + j] += m_ik * gen[s][k * n + j];
          }
        }
      }
      auto it = seen.find(key);
      std::uint32_t target;
      if (it == seen.end()) {
        target = static_cast<std::uint32_t>(mats.size());
        mats.push_back(key.m);
        seen.emplace(std::move(key), target);
        auto word = words_[w];
        word.push_back(static_cast<std::uint8_t>(s + 1));
        words_.push_back(std::move(word));
        if (words_.size() > order) {
          throw Inconsistency("enumeration exceeded the classical group order");
        }
      } else {
        target = it->second;
      }
      right_[static_cast<std::uint64_t>(w) * n + s] = target;
    }
  }

  if (words_.size() != order) {
    throw Inconsistency("enumeration found " + std::to_string(words_.size()) +
                        " elements; classical order of " + type_.str() + " is " +
                        std::to_string(order));
  }
  // BFS produces lengths in nondecreasing order; the generator tables always
  // move between adjacent lengths.  Validate the longest element.
  const unsigned top = static_cast<unsigned>(type_.positive_roots());
  if (words_.back().size() != top) {
    throw Inconsistency("longest element has length " +
                        std::to_string(words_.back().size()) + ", expected " +
                        std::to_string(top));
  }
  if (words_.size() >= 2 && words_[words_.size() - 2].size() == top) {
    throw Inconsistency("longest element is not unique");
  }
  for (std::uint32_t w = 0; w < size(); ++w) {
    for (int s = 0; s < n; ++s) {
      const std::uint32_t ws = right_[static_cast<std::uint64_t>(w) * n + s];
      const auto dl = static_cast<long>(words_[ws].size()) -
                      static_cast<long>(words_[w].size());
      if (dl != 1 && dl != -1) {
        throw Inconsistency("length is not BFS-consistent");
      }
    }
  }

  // Inverses: fold the reversed canonical word through the right table.
  inverse_.resize(size());
  for (std::uint32_t w = 0; w < size(); ++w) {
    std::uint32_t x = 0;
    const auto& wd = words_[w];
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) {
      x = right_[static_cast<std::uint64_t>(x) * n + (*it - 1)];
    }
    inverse_[w] = x;
  }

  // Left products via s*w = (w^{-1} * s)^{-1}.
  left_.assign(size() * static_cast<std::uint64_t>(n), 0);
  for (std::uint32_t w = 0; w < size(); ++w) {
    for (int s = 0; s < n; ++s) {
      left_[static_cast<std::uint64_t>(w) * n + s] =
          inverse_[right_[static_cast<std::uint64_t>(inverse_[w]) * n + s]];
    }
  }

  bruhat_rows_.resize(size());
}

std::uint32_t CoxeterGroup::check(Element a) const {
  if (a.id >= size()) {
    throw BadElement("element id " + std::to_string(a.id) +
                     " out of range for " + type_.str());
  }
  return a.id;
}

Element CoxeterGroup::element(std::uint32_t id) const {
  Element e{id};
  check(e);
  return e;
}

Element CoxeterGroup::right(Element a, int s) const {
  if (s < 1 || s > type_.rank) {
    throw BadGeneratorIndex("generator index " + std::to_string(s) +
                            " outside 1.." + std::to_string(type_.rank));
  }
  return Element{right_[static_cast<std::uint64_t>(check(a)) * type_.rank + (s - 1)]};
}

Element CoxeterGroup::left(int s, Element a) const {
  if (s < 1 || s > type_.rank) {
    throw BadGeneratorIndex("generator index " + std::to_string(s) +
                            " outside 1.." + std::to_string(type_.rank));
  }
  return Element{left_[static_cast<std::uint64_t>(check(a)) * type_.rank + (s - 1)]};
}

Element CoxeterGroup::multiply(Element a, Element b) const {
  Element x = Element{check(a)};
  for (std::uint8_t s : words_[check(b)]) x = right(x, s);
  return x;
}

std::vector<int> CoxeterGroup::descents(Element a, Side side) const {
  std::vector<int> out;
  for (int s = 1; s <= type_.rank; ++s) {
    const bool desc = side == Side::Right ? is_right_descent(a, s)
                                          : is_left_descent(s, a);
    if (desc) out.push_back(s);
  }
  return out;
}

// Fills the Bruhat bitset row for b, walking down a chain of left descents
// and building rows back up (iterative, so no recursion under the lock).
// The recursion is the standard lifting criterion: if sb < b then
//   a <= b  iff  (sa < a ? sa <= sb : a <= sb).
const std::vector<std::uint64_t>& CoxeterGroup::bruhat_row_locked(std::uint32_t b) const {
  const std::size_t nwords = (size() + 63) / 64;
  std::vector<std::uint32_t> chain;
  std::uint32_t cur = b;
  while (bruhat_rows_[cur].empty() && cur != 0) {
    chain.push_back(cur);
    int s = 0;
    for (int t = 1; t <= type_.rank; ++t) {
      if (is_left_descent(t, Element{cur})) {
        s = t;
        break;
      }
    }
    cur = left(s, Element{cur}).id;
  }
  if (bruhat_rows_[0].empty()) {
    bruhat_rows_[0].assign(nwords, 0);
    bruhat_rows_[0][0] = 1;  // e <= e only
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const std::uint32_t y = *it;
    int s = 0;
    for (int t = 1; t <= type_.rank; ++t) {
      if (is_left_descent(t, Element{y})) {
        s = t;
        break;
      }
    }
    const auto& lower = bruhat_rows_[left(s, Element{y}).id];
    std::vector<std::uint64_t> row(nwords, 0);
    for (std::uint32_t a = 0; a < size(); ++a) {
      const std::uint32_t sa = left(s, Element{a}).id;
      const std::uint32_t probe = words_[sa].size() < words_[a].size() ? sa : a;
      if (lower[probe >> 6] & (std::uint64_t{1} << (probe & 63))) {
        row[a >> 6] |= std::uint64_t{1} << (a & 63);
      }
    }
    bruhat_rows_[y] = std::move(row);
  }
  return bruhat_rows_[b];
}

bool CoxeterGroup::bruhat_leq(Element a, Element b) const {
  const std::uint32_t ai = check(a), bi = check(b);
  if (ai == bi) return true;
  if (words_[ai].size() >= words_[bi].size()) return false;
  std::lock_guard<std::mutex> lock(bruhat_mutex_);
  const auto& row = bruhat_row_locked(bi);
  return (row[ai >> 6] & (std::uint64_t{1} << (ai & 63))) != 0;
}

void CoxeterGroup::prefill_bruhat() const {
  std::lock_guard<std::mutex> lock(bruhat_mutex_);
  for (std::uint32_t b = 0; b < size(); ++b) bruhat_row_locked(b);
}

Element CoxeterGroup::from_word(std::span<const int> word) const {
  Element x = identity();
  for (int s : word) x = right(x, s);
  return x;
}

std::string CoxeterGroup::element_str(Element a) const {
  const auto& w = words_[check(a)];
  if (w.empty()) return "e";
  std::string out;
  out.reserve(w.size());
  for (std::uint8_t s : w) out.push_back(static_cast<char>('0' + s));
  return out;
}

Element CoxeterGroup::parse_element(std::string_view text) const {
  if (text == "e") return identity();
  if (text == "w0") return longest();
  if (text.empty()) throw BadElement("empty element");
  Element x = identity();
  for (char c : text) {
    if (c < '1' || c > '9') {
      throw BadElement("cannot parse element '" + std::string(text) +
                       "' (expected \"e\", \"w0\", or generator digits)");
    }
    const int s = c - '0';
    if (s > type_.rank) {
      throw BadElement("generator index " + std::to_string(s) +
                       " outside 1.." + std::to_string(type_.rank) + " in '" +
                       std::string(text) + "'");
    }
    x = right(x, s);
  }
  return x;
}

}  // namespace heckecat

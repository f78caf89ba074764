// Shared test fixtures: one lazily-built group/cache/context/engine per
// Cartan type, so expensive KL tables are computed once per test binary.
#pragma once

#include <map>
#include <memory>
#include <string>

#include "heckecat/coxeter.hpp"
#include "heckecat/functors.hpp"
#include "heckecat/hecke.hpp"
#include "heckecat/kgroup.hpp"

namespace testutil {

using namespace heckecat;

struct Fixture {
  CoxeterGroup g;
  KLCache kl;
  KGroupContext ctx;
  FunctorEngine eng;

  explicit Fixture(const std::string& cartan)
      : g(CartanType::parse(cartan)), kl(g), ctx(g, kl), eng(ctx) {}

  Element el(const std::string& text) const { return g.parse_element(text); }

  CharacterVector unit(BasisTag basis, const std::string& w) const {
    return ctx.unit(basis, el(w));
  }
};

inline Fixture& fixture(const std::string& cartan) {
  static std::map<std::string, std::unique_ptr<Fixture>> cache;
  auto& slot = cache[cartan];
  if (!slot) slot = std::make_unique<Fixture>(cartan);
  return *slot;
}

// v^k as a Laurent polynomial; V(0) = 1.
inline LaurentPoly V(int k) { return LaurentPoly::v(k); }

}  // namespace testutil

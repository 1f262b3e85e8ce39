#include "lieq/catalog.hpp"
#include "lieq/errors.hpp"
#include "lieq/theorems.hpp"

#include <doctest.h>

using namespace lieq;

TEST_CASE("every catalog expectation is reproduced") {
  for (const auto& entry : catalog_all()) {
    CAPTURE(entry.instance.name);
    for (const auto& m : expectation_mismatches(entry)) {
      CAPTURE(m.check);
      CAPTURE(m.expected);
      CHECK(m.actual == m.expected);
    }
  }
}

TEST_CASE("catalog parameters are validated") {
  CHECK_THROWS_AS(catalog_get("no-such-entry"), UnknownEntry);
  CHECK_THROWS_AS(catalog_get("heisenberg", {{"n", 0}}), BadParameters);
  CHECK_THROWS_AS(catalog_get("heisenberg", {{"m", 1}}), BadParameters);
  CHECK_THROWS_AS(catalog_get("dual-pairing", {{"K", 1}, {"d", 4}}), BadParameters);
}

TEST_CASE("catalog sizes") {
  CHECK(catalog_get("Gn", {{"n", 1}}).instance.algebra.dim() == 4);
  CHECK(catalog_get("Gn", {{"n", 2}}).instance.algebra.dim() == 6);
  const auto torus = catalog_get("abelian-torus", {{"p", 1}, {"q", 1}});
  CHECK(torus.instance.algebra.dim() == 4);
  CHECK(torus.instance.algebra.is_abelian());
  CHECK(catalog_get("heisenberg", {{"n", 3}}).instance.algebra.dim() == 7);
}

TEST_CASE("every expectation carries a basis") {
  for (const auto& entry : catalog_all()) {
    for (const auto& e : entry.expected) {
      const std::string b = to_string(e.basis);
      CHECK((b == "stated" || b == "trivial" || b == "derived"));
    }
  }
}

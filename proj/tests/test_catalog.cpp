#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "vg/catalog.hpp"

using namespace vg;

TEST_CASE("catalog names and loading") {
  auto names = catalog_names();
  CHECK(names.size() == 7);
  for (const auto& nm : names) {
    CatalogEntry e = catalog_load(nm);
    CHECK(e.name == nm);
    CHECK(e.arrangement.n() > 0);
  }
  CHECK_THROWS_AS(catalog_load("nonesuch"), UsageError);
}

TEST_CASE("catalog expected values are plausible on load") {
  CatalogEntry a3 = catalog_load("a3");
  CHECK(a3.expected.chambers == 24);
  CHECK(a3.expected.gheav_size == 20);
  CatalogEntry fa = catalog_load("falk-a");
  CHECK(fa.expected.sqzero_lines == 11);
  REQUIRE(fa.expected.reference_sqzero_lines.has_value());
  CHECK(fa.expected.reference_sqzero_lines->size() == 11);
  CatalogEntry fb = catalog_load("falk-b");
  CHECK(fb.expected.sqzero_lines == 10);
}

TEST_CASE("a3 product table matches the catalog realization") {
  VGSpace space(catalog_load("a3").arrangement, FieldSpec::rationals());
  A3Table table = a3_table_load();
  CHECK(table.columns.size() == 24);
  CHECK(table.rows.size() == 10);
  A3TableMatch m = a3_table_match(space, table);
  for (const auto& f : m.failures) MESSAGE(f);
  CHECK(m.ok);
  // the matching is a bijection
  std::vector<bool> seen(24, false);
  for (size_t idx : m.column_to_chamber) {
    CHECK_FALSE(seen[idx]);
    seen[idx] = true;
  }
}

TEST_CASE("full validation of the fast entries") {
  for (const auto& nm : {"b2", "pencil3"}) {
    CatalogValidation v = catalog_validate(nm);
    for (const auto& f : v.failures) MESSAGE(f);
    CHECK(v.ok);
    CHECK(v.notes.empty());
  }
}

TEST_CASE("falk-b emits the reference-list note") {
  CatalogValidation v = catalog_validate("falk-b");
  for (const auto& f : v.failures) MESSAGE(f);
  CHECK(v.ok);
  REQUIRE_FALSE(v.notes.empty());
  CHECK(v.notes.front().find("binding") != std::string::npos);
}

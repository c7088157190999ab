#ifndef VG_CATALOG_HPP
#define VG_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vg/arrangement.hpp"
#include "vg/vgalgebra.hpp"

namespace vg {

/// Expected invariants bundled with a catalog arrangement; every field comes
/// with a provenance note in the data file.
struct CatalogExpected {
  mpz_class chambers = 0;
  std::vector<mpz_class> charpoly;  // coefficients, leading first
  std::vector<mpz_class> betti;
  size_t gheav_size = 0;
  size_t sqzero_lines = 0;
  bool codim2_generic = false;
  std::optional<size_t> degree6_vertices;
  std::optional<uint64_t> aut_graph_order;
  std::optional<uint64_t> aut_filt_order;
  std::optional<std::vector<la::Vec>> reference_sqzero_lines;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  Arrangement arrangement;
  CatalogExpected expected;
};

/// Directory holding the catalog data files: $VG_DATA_DIR when set, else the
/// compiled-in source location.
std::string data_dir();

std::vector<std::string> catalog_names();

/// Loads an entry and re-checks its cheap invariants (chamber count and
/// characteristic polynomial); a mismatch aborts with an InvariantError.
CatalogEntry catalog_load(const std::string& name);

/// Full re-derivation of every tagged invariant of an entry.
struct CatalogValidation {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;  // e.g. reference square-zero list mismatch
};

CatalogValidation catalog_validate(const std::string& name);

/// Fixed 10x24 reference product table shipped with the a3 entry.
struct A3Table {
  std::vector<std::string> columns;                     // reference labels
  std::vector<std::string> row_names;                   // x1..x6, y1..y4
  std::map<std::string, std::vector<int>> rows;
  struct AltRow {
    std::vector<size_t> support;  // 1-based hyperplane labels
    std::vector<int> jumps;
    int base;
  };
  std::map<std::string, AltRow> alternating_rows;
};

A3Table a3_table_load();

/// Matches the reference column labels to the catalog chamber order via the
/// Heaviside rows and verifies all ten rows entry-for-entry.
struct A3TableMatch {
  bool ok = false;
  std::vector<size_t> column_to_chamber;  // per reference column
  std::vector<std::string> failures;
};

A3TableMatch a3_table_match(const VGSpace& space, const A3Table& table);

}  // namespace vg

#endif

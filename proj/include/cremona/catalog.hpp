#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cremona/algebra.hpp"
#include "cremona/cremona.hpp"

namespace cremona {

enum class Provenance { tabulated, computed };

template <class T>
struct Tagged {
  T value;
  Provenance source = Provenance::tabulated;
};

/// One row of a classification table.
struct CatalogEntry {
  enum class Role { row, control, generic };
  enum class Kind { nil, products, adjoint, map };

  std::string id;
  /// nil, p2, p3, p4 or p5.
  std::string table;
  std::string label;
  Role role = Role::row;
  std::size_t dimension = 0;

  Kind kind = Kind::adjoint;
  /// nil and products definitions.
  std::optional<StructureConstants> products;
  /// products and adjoint definitions.
  std::optional<Vector> unit;
  /// adjoint and map definitions.
  std::optional<RationalMap> map;
  /// Multiplication table given alongside an adjoint definition, in the
  /// positional basis identification.
  std::optional<Tagged<Algebra>> multiplication;

  struct Expected {
    std::optional<Tagged<int>> rank, dim_radical, nilindex_at_most;
    std::optional<Tagged<RationalMap>> adjoint;
    std::optional<Tagged<std::string>> type, semisimple, structure, unitalization;
    std::optional<Tagged<std::vector<int>>> multidegree;
    std::optional<Tagged<std::vector<Ideal>>> primary_components;
    std::optional<Tagged<UniPoly>> hilbert_polynomial;
    std::optional<Tagged<bool>> jordan;
    /// Presentation isomorphic over C used for the unitalization check.
    std::optional<StructureConstants> split_products;
    /// Diagonal form and conjugation for a structure that is split only
    /// after a change of quadratic form over C.
    std::optional<Vector> structure_form;
    std::optional<Matrix> structure_conjugation;
  } expected;

  std::vector<std::string> notes;
  /// The formula as listed, when the catalog stores a corrected one.
  std::optional<RationalMap> erratum;
};

class Catalog {
 public:
  explicit Catalog(std::vector<CatalogEntry> entries);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry& at(const std::string& id) const;
  const CatalogEntry* find(const std::string& id) const;
  /// Entries of one table and role, in catalog order.
  std::vector<const CatalogEntry*> select(const std::string& table,
                                          CatalogEntry::Role role = CatalogEntry::Role::row) const;

 private:
  std::vector<CatalogEntry> entries_;
};

/// Parses and validates the embedded data; throws InternalError when the
/// shipped data is malformed. Loaded once, immutable afterwards.
const Catalog& load_catalog();

/// Parses one data file; throws StructuralError naming the offending field.
std::vector<CatalogEntry> parse_catalog_file(const nlohmann::json& file, const std::string& name);

enum class Depth { fast, full };

struct CheckResult {
  enum class Status { pass, fail, skipped };
  std::string name;
  Status status = Status::skipped;
  std::string detail;
};

struct VerificationReport {
  std::string id;
  std::vector<CheckResult> checks;
  double wall_time_ms = 0;

  bool passed() const;
};

/// Runs every applicable check; failures are recorded, never thrown.
VerificationReport verify_entry(const Catalog& catalog, const CatalogEntry& e, Depth depth, std::uint64_t seed);

/// verify_entry over the selected rows, run concurrently and returned in
/// catalog order. `table` is one of nil, p2, p3, p4, p5, or p4-generic,
/// p5-generic and controls.
std::vector<VerificationReport> verify_table(const Catalog& catalog, const std::string& table, Depth depth,
                                             std::uint64_t seed);

std::vector<const CatalogEntry*> table_rows(const Catalog& catalog, const std::string& table);

/// The algebra an entry defines, or nullopt for map-only rows.
std::optional<Algebra> entry_algebra(const CatalogEntry& e);

/// The adjoint map an entry is checked against.
std::optional<RationalMap> entry_map(const CatalogEntry& e);

nlohmann::json report_to_json(const VerificationReport& r, bool timing = false);
const char* to_string(CheckResult::Status s);

}  // namespace cremona

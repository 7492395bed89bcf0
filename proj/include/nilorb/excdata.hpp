#pragma once

#include "nilorb/orbit.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace nilorb {

enum class Rc2Table { Yes, Unknown };

struct ExceptionalOrbitRecord {
  Family type;
  std::string label;
  std::vector<int> characteristic;  // Bourbaki node order
  int dim = 0;
  bool rc1 = false;
  std::string rc1_reason;  // "little", "restriction:E7:A2", or empty
  Rc2Table rc2 = Rc2Table::Unknown;
  std::string rc2_witness;  // "little", "min@{2,3,4}", "(2,1)|(1^2)@{1,2,4}", ...
  bool rigid = false;
  bool little = false;
  std::string notes;
};

enum class OrbitFilter { All, Little, Rigid, Rc2Unknown };

/// One factor of a witness orbit in a Levi subalgebra.
struct WitnessFactor {
  enum class Kind { Minimal, Characteristic, Partition } kind;
  std::vector<int> characteristic;
  Partition partition;
};

struct Witness {
  std::vector<WitnessFactor> factors;  // ordered by smallest node of each component
  std::set<int> nodes;                 // Bourbaki indices of the Levi
};

/// Parses "factor|factor@{n1,n2,...}"; throws std::invalid_argument.
Witness parse_witness(std::string_view text);

/// The exceptional orbit tables. The embedded CSV is used unless the
/// NILORB_EXCEPTIONAL_DATA environment variable names a replacement file.
class ExceptionalTables {
public:
  static const ExceptionalTables& instance();
  static ExceptionalTables from_csv(std::string_view text, std::string source);

  const std::vector<ExceptionalOrbitRecord>& records() const noexcept { return records_; }
  std::vector<const ExceptionalOrbitRecord*> of_type(Family type) const;
  const std::string& source() const noexcept { return source_; }
  std::uint64_t checksum() const noexcept { return checksum_; }

  /// Throws std::out_of_range listing near matches when the label is unknown.
  const ExceptionalOrbitRecord& lookup(Family type, std::string_view label) const;
  const ExceptionalOrbitRecord* find(Family type, std::string_view label) const;
  const ExceptionalOrbitRecord* find_by_characteristic(Family type, const std::vector<int>& c) const;

  std::vector<const ExceptionalOrbitRecord*> list(Family type, OrbitFilter filter) const;

  std::vector<ExceptionalOrbitRecord>& mutable_records() noexcept { return records_; }

private:
  std::vector<ExceptionalOrbitRecord> records_;
  std::string source_;
  std::uint64_t checksum_ = 0;
};

const ExceptionalOrbitRecord& lookup(Family type, std::string_view label);
std::vector<const ExceptionalOrbitRecord*> list_orbits(Family type, OrbitFilter filter);

std::uint64_t fnv1a64(std::string_view data);
std::string_view embedded_exceptional_csv();

struct ValidationReport {
  std::size_t records_checked = 0;
  std::size_t witnesses_replayed = 0;
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate_tables(const ExceptionalTables& tables);
ValidationReport validate_tables();

/// Expected row counts (zero and regular orbits omitted).
int expected_record_count(Family type);

}  // namespace nilorb

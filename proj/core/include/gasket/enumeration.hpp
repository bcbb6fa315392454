#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gasket/geometry.hpp"
#include "gasket/numeric.hpp"
#include "gasket/polynomial.hpp"

namespace gasket {

// ---------------------------------------------------------------- types

// Seven forest types, indexed like ForestClass T1..R.
inline constexpr int kForestTypes = 7;
int forest_type_weight(int type);  // components: 1, 2 or 3
std::string forest_type_name(int type);

// Path types: a tree or S part crossed between the two corners other than
// the marked one. Through types run via the marked corner.
struct ConnType {
  ForestClass base;
  int marked;  // 0-based corner
};
inline constexpr int kConnTypes = 12;
const std::array<ConnType, kConnTypes>& conn_types();
int conn_index(ForestClass base, int marked);  // -1 when not constructible
std::string conn_name(int type);
int conn_weight(int type);  // 1 single edge, 2 through, 3 separated part
bool conn_is_through(int type);

// Component types: a part together with the corners lying in the tracked
// component union.
struct CompType {
  ForestClass base;
  unsigned tracked;  // bit j set when corner j is tracked
};
inline constexpr int kCompTypes = 19;
const std::array<CompType, kCompTypes>& comp_types();
int comp_index(ForestClass base, unsigned tracked);
std::string comp_name(int type);
int comp_weight(int type);  // collapsed class 1..7

// Interface types: multi-component parts whose corners meet at least two
// distinct global components.
struct InterfaceType {
  ForestClass base;
  int lone;  // R with two corners merged: the corner on its own; -1 otherwise
};
inline constexpr int kInterfaceTypes = 7;
const std::array<InterfaceType, kInterfaceTypes>& interface_types();
std::string interface_name(int type);
int interface_class(int type);  // symmetry class 1..3

// -------------------------------------------------------------- census

struct CensusEntry {
  std::uint32_t mask = 0;          // edge subset of G_1
  ForestClass cls = ForestClass::None;
  std::vector<ForestClass> parts;  // class of each copy's restriction
};

struct Census {
  CellRef cell;
  GraphRef g1;
  std::uint64_t subsets_examined = 0;
  std::vector<CensusEntry> entries;
  std::map<ForestClass, std::vector<int>> by_class;

  std::size_t class_size(ForestClass c) const;
  const CensusEntry& entry(int i) const { return entries[static_cast<std::size_t>(i)]; }
};

Census enumerate_cell_forests(const CellRef& cell);
const Census& sg_census();

// ------------------------------------------------------ offspring tables

struct Child {
  int suffix;
  int type;
  int entry = -1;  // path tables: corner where the path enters the child
  int exit = -1;
  bool operator==(const Child& o) const {
    return suffix == o.suffix && type == o.type && entry == o.entry && exit == o.exit;
  }
  bool operator<(const Child& o) const {
    if (suffix != o.suffix) return suffix < o.suffix;
    if (type != o.type) return type < o.type;
    if (entry != o.entry) return entry < o.entry;
    return exit < o.exit;
  }
};

struct Outcome {
  std::vector<Child> children;
  Rational prob;
  int census_index = -1;
};

struct OffspringTable {
  std::string name;
  int alphabet = 3;
  std::vector<std::string> type_names;
  std::vector<std::vector<Outcome>> rows;  // empty row: type has no offspring law

  int type_count() const { return static_cast<int>(type_names.size()); }
  bool has_row(int type) const { return !rows[static_cast<std::size_t>(type)].empty(); }
  // Merges outcomes with equal child tuples; stable lexicographic order.
  OffspringTable grouped() const;
  // Throws ConsistencyError unless every nonempty row sums to one.
  void check_normalized() const;
};

OffspringTable derive_offspring_7(const Census& census);
OffspringTable derive_offspring_12(const Census& census);
OffspringTable derive_offspring_19(const Census& census);
OffspringTable derive_offspring_interface(const Census& census);

// Mixes the rows of each group uniformly and relabels children; the result
// is again an offspring table over the group labels.
OffspringTable collapse_table(const OffspringTable& table, const std::vector<int>& group_of,
                              const std::vector<std::string>& group_names, const std::string& name);
// Five types: T (collapsed), S1, S2, S3, R.
OffspringTable collapsed_forest_table(const OffspringTable& table7);
// Six types: the three marked tree groups, then the three S path types.
OffspringTable collapsed_path_table(const OffspringTable& table12);
std::vector<int> forest_collapse_map();
std::vector<int> path_collapse_map();

// Symmetry classes of the forest types: trees, S, R.
std::vector<int> forest_symmetry_map();

// Generating function of each group, checked to be identical for every
// member of the group.
std::vector<MultiPoly> collapsed_pgfs(const OffspringTable& table, const std::vector<int>& group_of, int groups);
// Generating function of every row, children counted by type.
std::vector<MultiPoly> table_pgfs(const OffspringTable& table);
// True when, in every row and given the grouped child tuple, the actual child
// types are independent and uniform within their groups. Then the choice of
// group member can be postponed to the last generation.
bool postponable(const OffspringTable& table, const std::vector<int>& group_of);

struct UniformityReport {
  bool pass = false;
  bool subclasses_even = false;
  bool weights_constant = false;
  std::map<std::string, std::vector<std::uint64_t>> preimage_counts;
  std::string detail;
};
UniformityReport check_uniformity(const Census& census);

// Lumps a table's per-outcome weight by child; used by tests and CLI exports.
std::string table_to_json(const OffspringTable& table);
std::string census_to_json(const Census& census);

}  // namespace gasket

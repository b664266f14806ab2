#pragma once

// The classification driver: the eleven maximal triangle-point groups, their
// normal subgroups of small index, the quotients, the small groups, and the
// obstruction run over the types that do not embed.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpg/certificate.hpp"
#include "tpg/coset_enum.hpp"
#include "tpg/perm_group.hpp"
#include "tpg/reference.hpp"
#include "tpg/word.hpp"

namespace tpg::classify {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CatalogEntry {
  std::string name;  // "G1" .. "G11"
  std::string type;  // claimed isomorphism type
  std::array<int, 3> mnp{};
  /// Exponents r1..r5; 0 means the relator is absent.
  std::array<int, 5> r{};
  std::size_t order = 0;
  std::string construction;
  /// Generated by generators, in the order a, b, c.
  PermGroup group;
  std::array<Perm, 3> generators;
  /// The triple in which the normal-subgroup words are written.
  std::array<Perm, 3> table_generators;
  /// Coset count over the trivial subgroup.
  std::size_t coset_count = 0;

  fp::Presentation presentation() const;
};

/// Names G1 .. G11.
const std::vector<std::string>& catalog_names();
/// Builds and cross-validates one entry; throws CatalogError naming the entry
/// on any failure and std::out_of_range for an unknown name.
CatalogEntry catalog_entry(const std::string& name, std::size_t capacity = fp::kDefaultCosetCapacity);
std::vector<CatalogEntry> catalog(std::size_t capacity = fp::kDefaultCosetCapacity);

/// Every normal subgroup of g other than the trivial one with index greater
/// than bound, from the lattice generated by the normal closures of the
/// conjugacy classes. Sorted by descending order, then by element list.
std::vector<PermGroup> normal_subgroups_index_gt(const PermGroup& g, std::size_t bound);

/// A printed row of the normal-subgroup tables.
struct PrintedRow {
  std::string parent;
  std::string normal;  // printed structure of N
  std::size_t normal_order = 0;
  std::vector<std::string> words;
  std::string quotient;
  /// Replacement words for rows whose printed words do not give a listed
  /// subgroup; empty otherwise.
  std::vector<std::string> corrected = {};
};
const std::vector<PrintedRow>& printed_rows();

/// A faithful action of g/n with the images of tracked. Tries the cosets of
/// n.H for a few small subgroups H generated by words in the tracked triple
/// before falling back to the regular action on g/n.
struct CompactQuotient {
  PermGroup group;
  std::vector<Perm> tracked;
};
CompactQuotient compact_quotient(const PermGroup& g, const PermGroup& n, const std::array<Perm, 3>& abc);

struct QuotientRecord {
  std::string parent;
  std::size_t normal_order = 0;
  PermGroup normal;
  /// Words of the matching printed row, if any.
  std::vector<std::string> words;
  std::optional<std::size_t> printed_row;
  /// False when only the row's corrected words give this subgroup.
  bool printed_words = true;
  std::size_t quotient_order = 0;
  std::string type;
  PermGroup quotient;
  std::array<Perm, 3> images;
  bool triangle_point = false;
};

std::vector<QuotientRecord> quotients(const CatalogEntry& entry);

/// a, b, c, ab are involutions, they generate g, and every product of two
/// elements of a^G, b^G, c^G, (ab)^G has order at most 6.
bool is_triangle_point(const PermGroup& g, const Perm& a, const Perm& b, const Perm& c);

struct SmallTriangleGroup {
  std::string name;
  PermGroup group;
  std::array<Perm, 3> triple;
};
/// Groups of order 4, 8, 12 admitting a triangle-point triple, with the
/// first such triple in element order.
std::vector<SmallTriangleGroup> small_tp_groups();

struct TypeRecord {
  std::string name;
  std::size_t order = 0;
  std::vector<std::string> sources;
  bool triangle_point = true;
  PermGroup group;
  std::array<Perm, 3> triple;
  bool excluded = false;
  std::optional<axial::ObstructionCertificate> certificate;
  /// Where the certificate's generators came from.
  std::string certificate_source;
};

/// A printed row of the table of types that do not embed.
struct ExcludedRow {
  std::string name;
  std::size_t order = 0;
  std::vector<std::string> parents;
};
const std::vector<ExcludedRow>& excluded_rows();

struct Discrepancy {
  std::string kind;
  std::string detail;
};

/// Compares one parent's records with its printed rows: unmatched rows,
/// orders or quotient types that differ, rows matched only through corrected
/// words, and normal subgroups that no row lists.
std::vector<Discrepancy> row_discrepancies(const std::string& parent, const std::vector<QuotientRecord>& records);

struct ClassifyOptions {
  std::size_t capacity = fp::kDefaultCosetCapacity;
  unsigned jobs = 1;
};

struct ClassificationReport {
  std::vector<CatalogEntry> catalog;
  std::vector<QuotientRecord> quotients;
  std::vector<SmallTriangleGroup> small;
  std::vector<TypeRecord> types;
  /// Quotients whose tracked triple is not a triangle-point triple.
  std::vector<std::string> degenerate;
  std::vector<std::string> admissible;
  std::vector<Discrepancy> discrepancies;
  std::size_t printed_total = 37, printed_excluded = 10, printed_admissible = 27;
};

/// Throws std::runtime_error when some excluded type gets no certificate.
ClassificationReport classify_all(const ClassifyOptions& opts = {});

/// Certificate for one excluded type (name as in excluded_rows, aliases
/// accepted), built the same way as in classify_all.
axial::ObstructionCertificate obstruct_type(const std::string& name, std::size_t capacity = fp::kDefaultCosetCapacity);

}  // namespace tpg::classify

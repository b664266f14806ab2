#pragma once

// Serialization of catalog, normal-subgroup and classification results as
// JSON and as Markdown tables laid out like the printed ones.

#include <string>
#include <vector>

#include "tpg/classify.hpp"

namespace tpg::report {

inline constexpr const char* kClassificationSchema = "tpg-classification/1";
inline constexpr const char* kCatalogSchema = "tpg-catalog/1";
inline constexpr const char* kNormalsSchema = "tpg-normals/1";

/// A catalog entry with the number of its normal subgroups of index > 12.
struct CatalogSummary {
  classify::CatalogEntry entry;
  std::size_t normal_count = 0;
};

std::string catalog_json(const std::vector<CatalogSummary>& entries);
std::string catalog_markdown(const std::vector<CatalogSummary>& entries);

std::string normals_json(const classify::CatalogEntry& entry, const std::vector<classify::QuotientRecord>& rows);
std::string normals_markdown(const classify::CatalogEntry& entry, const std::vector<classify::QuotientRecord>& rows);

std::string classification_json(const classify::ClassificationReport& rep);
/// Tables 3 to 6 and the reconciliation of the type count.
std::string tables_markdown(const classify::ClassificationReport& rep);

}  // namespace tpg::report

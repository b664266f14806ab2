#include "tpg/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace tpg::report {

namespace {

using Json = nlohmann::ordered_json;
using classify::CatalogEntry;
using classify::QuotientRecord;

Json perms(const std::array<perm::Perm, 3>& t) { return Json::array({t[0].str(), t[1].str(), t[2].str()}); }

std::string exponents(const std::array<int, 5>& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < 5; ++i) s += (i ? "," : "") + (r[i] ? std::to_string(r[i]) : std::string("-"));
  return s + ")";
}

bool all_absent(const std::array<int, 5>& r) {
  return std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
}

std::string joined(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

std::string code_words(const std::vector<std::string>& ws) {
  std::vector<std::string> c;
  for (const auto& w : ws) c.push_back("`" + w + "`");
  return joined(c, ", ");
}

Json entry_json(const CatalogEntry& e) {
  Json j;
  j["name"] = e.name;
  j["type"] = e.type;
  j["mnp"] = e.mnp;
  Json r = Json::array();
  for (int x : e.r) r.push_back(x ? Json(x) : Json(nullptr));
  j["r"] = r;
  j["order"] = e.order;
  j["coset_count"] = e.coset_count;
  j["construction"] = e.construction;
  j["degree"] = e.group.degree();
  j["generators"] = perms(e.generators);
  return j;
}

Json record_json(const QuotientRecord& q) {
  const auto& rows = classify::printed_rows();
  Json j;
  j["parent"] = q.parent;
  j["normal_order"] = q.normal_order;
  j["quotient_order"] = q.quotient_order;
  j["type"] = q.type;
  j["triangle_point"] = q.triangle_point;
  if (q.printed_row) {
    const auto& row = rows[*q.printed_row];
    j["printed"] = {{"normal", row.normal}, {"words", row.words}, {"quotient", row.quotient}};
  } else {
    j["printed"] = nullptr;
  }
  j["words"] = q.words;
  j["printed_words_match"] = q.printed_words;
  j["degree"] = q.quotient.degree();
  j["images"] = perms(q.images);
  return j;
}

std::string printed_generators(const CatalogEntry& e) {
  if (e.construction.rfind("printed", 0) != 0) return e.construction;
  return joined({e.table_generators[0].str(), e.table_generators[1].str(), e.table_generators[2].str()}, "<br>");
}

void normals_rows(std::ostringstream& os, const std::vector<QuotientRecord>& rows, bool with_parent,
                  const CatalogEntry* entry) {
  const auto& printed = classify::printed_rows();
  bool first = true;
  for (const auto& q : rows) {
    std::string n = q.printed_row ? printed[*q.printed_row].normal : "(unlisted)";
    std::string x = q.printed_row ? code_words(printed[*q.printed_row].words) : "";
    if (!q.printed_words) x += "<br>used: " + code_words(q.words);
    std::string gq = q.printed_row ? printed[*q.printed_row].quotient : "";
    std::string status = q.printed_row && classify::same_type(gq, q.type) ? (q.printed_words ? "ok" : "words corrected")
                                                                        : "differs";
    if (!q.triangle_point) status += ", not triangle-point";
    os << "|";
    if (with_parent) os << " " << (first ? entry->name : "") << " | " << (first ? printed_generators(*entry) : "") << " |";
    os << " " << n << " | " << q.normal_order << " | " << x << " | " << gq << " | " << q.type << " | " << status
       << " |\n";
    first = false;
  }
}

}  // namespace

std::string catalog_json(const std::vector<CatalogSummary>& entries) {
  Json j;
  j["schema"] = kCatalogSchema;
  j["groups"] = Json::array();
  for (const auto& s : entries) {
    Json e = entry_json(s.entry);
    e["normal_subgroups_index_gt_12"] = s.normal_count;
    j["groups"].push_back(e);
  }
  return j.dump(2) + "\n";
}

std::string catalog_markdown(const std::vector<CatalogSummary>& entries) {
  std::ostringstream os;
  os << "| Name | Isomorphism type | (m,n,p) | (r1,r2,r3,r4,r5) | Order | Cosets | Normals of index > 12 | "
        "Construction |\n";
  os << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& s : entries) {
    const auto& e = s.entry;
    os << "| " << e.name << " | " << e.type << " | (" << e.mnp[0] << "," << e.mnp[1] << "," << e.mnp[2] << ") | "
       << (all_absent(e.r) ? "" : exponents(e.r)) << " | " << e.group.order() << " | " << e.coset_count << " | "
       << s.normal_count << " | " << e.construction << " |\n";
  }
  return os.str();
}

std::string normals_json(const CatalogEntry& entry, const std::vector<QuotientRecord>& rows) {
  Json j;
  j["schema"] = kNormalsSchema;
  j["group"] = entry_json(entry);
  j["normals"] = Json::array();
  for (const auto& q : rows) j["normals"].push_back(record_json(q));
  return j.dump(2) + "\n";
}

std::string normals_markdown(const CatalogEntry& entry, const std::vector<QuotientRecord>& rows) {
  std::ostringstream os;
  os << "| N | \\|N\\| | X | G/N (printed) | G/N (computed) | Status |\n|---|---|---|---|---|---|\n";
  if (rows.empty()) os << "| | | | | | none of index > 12 in " << entry.name << " |\n";
  normals_rows(os, rows, false, &entry);
  return os.str();
}

std::string classification_json(const classify::ClassificationReport& rep) {
  Json j;
  j["schema"] = kClassificationSchema;
  std::size_t excluded = 0;
  for (const auto& t : rep.types) excluded += t.excluded;
  j["counts"] = {{"computed", {{"total", rep.types.size()}, {"excluded", excluded}, {"admissible", rep.admissible.size()}}},
                 {"printed", {{"total", rep.printed_total}, {"excluded", rep.printed_excluded}, {"admissible", rep.printed_admissible}}}};
  j["catalog"] = Json::array();
  for (const auto& e : rep.catalog) j["catalog"].push_back(entry_json(e));
  j["quotients"] = Json::array();
  for (const auto& q : rep.quotients) j["quotients"].push_back(record_json(q));
  j["small"] = Json::array();
  for (const auto& s : rep.small)
    j["small"].push_back({{"name", s.name}, {"order", s.group.order()}, {"triple", perms(s.triple)}});
  j["types"] = Json::array();
  for (const auto& t : rep.types) {
    Json x;
    x["name"] = t.name;
    x["order"] = t.order;
    x["sources"] = t.sources;
    x["excluded"] = t.excluded;
    if (t.certificate) {
      x["certificate_source"] = t.certificate_source;
      x["certificate"] = Json::parse(axial::certificate_to_json(*t.certificate));
    }
    j["types"].push_back(x);
  }
  j["admissible"] = rep.admissible;
  Json ex = Json::array();
  for (const auto& t : rep.types)
    if (t.excluded) ex.push_back(t.name);
  j["excluded"] = ex;
  j["degenerate"] = rep.degenerate;
  j["discrepancies"] = Json::array();
  for (const auto& d : rep.discrepancies) j["discrepancies"].push_back({{"kind", d.kind}, {"detail", d.detail}});
  return j.dump(2) + "\n";
}

std::string tables_markdown(const classify::ClassificationReport& rep) {
  std::ostringstream os;
  os << "# Triangle-point groups\n\n## Triangle-point groups\n\n";
  std::vector<CatalogSummary> cat;
  for (const auto& e : rep.catalog) {
    std::size_t n = 0;
    for (const auto& q : rep.quotients) n += q.parent == e.name;
    cat.push_back({e, n});
  }
  os << catalog_markdown(cat);

  auto block = [&](bool eleven) {
    os << "| G | Generators a, b, c | N | \\|N\\| | X | G/N (printed) | G/N (computed) | Status |\n"
       << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& e : rep.catalog) {
      if ((e.name == "G11") != eleven) continue;
      std::vector<QuotientRecord> rows;
      for (const auto& q : rep.quotients)
        if (q.parent == e.name) rows.push_back(q);
      if (rows.empty()) continue;
      normals_rows(os, rows, true, &e);
    }
  };
  os << "\n## Normal subgroups of G1, ..., G10 of index > 12\n\n";
  block(false);
  os << "\n## Normal subgroups of G11 of index > 12\n\n";
  block(true);

  os << "\n## Triangle-point groups with an obstruction\n\n"
     << "| G | \\|G\\| | Quotient of G_i for i in | Certificate | Witness | Generators from |\n"
     << "|---|---|---|---|---|---|\n";
  for (const auto& row : classify::excluded_rows()) {
    auto it = std::find_if(rep.types.begin(), rep.types.end(),
                           [&](const classify::TypeRecord& t) { return classify::same_type(t.name, row.name); });
    std::vector<std::string> parents;
    for (const auto& p : row.parents) parents.push_back(p.substr(1));
    os << "| " << row.name << " | " << row.order << " | " << joined(parents, ",") << " | ";
    if (it == rep.types.end() || !it->certificate) {
      os << "missing | | |\n";
      continue;
    }
    const auto& c = *it->certificate;
    if (c.kind == axial::ObstructionCertificate::Kind::Klein) {
      std::vector<std::string> g;
      for (const auto& p : c.subgroup) g.push_back(p.str());
      os << "klein | <" << joined(g, ", ") << "> | ";
    } else {
      const auto& b = c.branches.front();
      os << "m1-audit, " << c.branches.size() << " branches | " << b.type_ij << "/" << b.type_jk << ": "
         << qlin::to_string(b.left) << " vs " << qlin::to_string(b.right) << " | ";
    }
    os << it->certificate_source << " |\n";
  }

  os << "\n## Small triangle-point groups\n\n| Type | Order | a, b, c |\n|---|---|---|\n";
  for (const auto& s : rep.small)
    os << "| " << s.name << " | " << s.group.order() << " | " << s.triple[0].str() << ", " << s.triple[1].str()
       << ", " << s.triple[2].str() << " |\n";

  std::size_t excluded = 0;
  for (const auto& t : rep.types) excluded += t.excluded;
  os << "\n## Reconciliation\n\n| | Computed | Printed |\n|---|---|---|\n"
     << "| Distinct triangle-point types | " << rep.types.size() << " | " << rep.printed_total << " |\n"
     << "| With an obstruction | " << excluded << " | " << rep.printed_excluded << " |\n"
     << "| Admissible | " << rep.admissible.size() << " | " << rep.printed_admissible << " |\n\n"
     << "| # | Type | Order | Status | Sources |\n|---|---|---|---|---|\n";
  for (std::size_t i = 0; i < rep.types.size(); ++i) {
    const auto& t = rep.types[i];
    os << "| " << i + 1 << " | " << t.name << " | " << t.order << " | " << (t.excluded ? "obstructed" : "admissible")
       << " | " << joined(t.sources, "; ") << " |\n";
  }
  if (!rep.degenerate.empty()) {
    os << "\n### Quotients whose tracked triple is not a triangle-point triple\n\n";
    for (const auto& d : rep.degenerate) os << "- " << d << "\n";
  }
  os << "\n## Discrepancies\n\n";
  if (rep.discrepancies.empty()) os << "None.\n";
  for (const auto& d : rep.discrepancies) os << "- " << d.kind << ": " << d.detail << "\n";
  return os.str();
}

}  // namespace tpg::report

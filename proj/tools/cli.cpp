#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "tpg/certificate.hpp"
#include "tpg/classify.hpp"
#include "tpg/coset_enum.hpp"
#include "tpg/dihedral.hpp"
#include "tpg/report.hpp"
#include "tpg/word.hpp"

namespace tpg::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string out_dir = "out";
  std::string format = "markdown";
  bool verify = false;
  unsigned jobs = 1;
  std::size_t capacity = fp::kDefaultCosetCapacity;

  std::vector<std::string> only;     // catalog
  std::string group;                 // normals
  std::string dihedral_type;         // dihedral table
  std::string file;                  // enumerate, verify
  std::vector<std::string> subgroup; // enumerate
  std::string type;                  // obstruct
};

bool json(const RunConfig& cfg) { return cfg.format == "json"; }

template <class F>
void parallel_for(std::size_t n, unsigned jobs, F f) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex m;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard lock(m);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::min<std::size_t>(jobs, n); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

void check_group_name(const std::string& name) {
  const auto& names = classify::catalog_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw UsageError("unknown group '" + name + "' (expected G1 .. G11)");
}

const classify::ExcludedRow& check_excluded_type(const std::string& name) {
  for (const auto& row : classify::excluded_rows())
    if (classify::same_type(row.name, name)) return row;
  std::string known;
  for (const auto& row : classify::excluded_rows()) known += (known.empty() ? "" : ", ") + row.name;
  throw UsageError("no obstruction is known for '" + name + "' (one of: " + known + ")");
}

std::string slug(const std::string& name) {
  std::string s;
  for (char ch : name) s += std::isalnum(static_cast<unsigned char>(ch)) || ch == '^' || ch == '+' ? ch : '_';
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

void print_discrepancies(const std::vector<classify::Discrepancy>& ds, std::ostream& err) {
  for (const auto& d : ds) err << "discrepancy: " << d.kind << ": " << d.detail << "\n";
}

int cmd_catalog(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names = cfg.only.empty() ? classify::catalog_names() : cfg.only;
  for (const auto& n : names) check_group_name(n);
  std::vector<report::CatalogSummary> rows(names.size());
  std::vector<std::vector<classify::Discrepancy>> found(names.size());
  parallel_for(names.size(), cfg.jobs, [&](std::size_t i) {
    rows[i].entry = classify::catalog_entry(names[i], cfg.capacity);
    const auto records = classify::quotients(rows[i].entry);
    rows[i].normal_count = records.size();
    found[i] = classify::row_discrepancies(names[i], records);
  });
  out << (json(cfg) ? report::catalog_json(rows) : report::catalog_markdown(rows));
  if (!cfg.verify) return kOk;
  std::vector<classify::Discrepancy> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  print_discrepancies(all, err);
  return all.empty() ? kOk : kDiscrepancy;
}

int cmd_normals(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_group_name(cfg.group);
  const auto entry = classify::catalog_entry(cfg.group, cfg.capacity);
  const auto records = classify::quotients(entry);
  out << (json(cfg) ? report::normals_json(entry, records) : report::normals_markdown(entry, records));
  if (!cfg.verify) return kOk;
  const auto ds = classify::row_discrepancies(cfg.group, records);
  print_discrepancies(ds, err);
  return ds.empty() ? kOk : kDiscrepancy;
}

int cmd_dihedral_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& types = dihedral::all_types();
  std::vector<std::vector<dihedral::CheckReport>> reports(types.size());
  parallel_for(types.size(), cfg.jobs,
               [&](std::size_t i) { reports[i] = dihedral::verify_all(dihedral::build(types[i])); });
  bool ok = true;
  Json j = {{"schema", "tpg-dihedral-verify/1"}, {"types", Json::array()}};
  if (!json(cfg)) out << "| Type | Dimension | Checks | Violations |\n|---|---|---|---|\n";
  for (std::size_t i = 0; i < types.size(); ++i) {
    std::size_t bad = 0;
    Json checks = Json::array();
    for (const auto& r : reports[i]) {
      bad += r.violations.size();
      checks.push_back({{"check", r.check}, {"violations", r.violations}});
      for (const auto& v : r.violations) err << dihedral::name(types[i]) << ": " << r.check << ": " << v << "\n";
    }
    ok = ok && bad == 0;
    j["types"].push_back({{"type", dihedral::name(types[i])}, {"dimension", dihedral::dimension(types[i])},
                          {"checks", checks}});
    if (!json(cfg))
      out << "| " << dihedral::name(types[i]) << " | " << dihedral::dimension(types[i]) << " | " << reports[i].size()
          << " | " << bad << " |\n";
  }
  if (json(cfg)) out << j.dump(2) << "\n";
  return ok ? kOk : kDiscrepancy;
}

int cmd_dihedral_table(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  dihedral::Type t;
  try {
    t = dihedral::parse_type(cfg.dihedral_type);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown dihedral type '" + cfg.dihedral_type + "'");
  }
  out << dihedral::to_json(dihedral::build(t));
  return kOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  fp::Presentation pres;
  std::vector<fp::Word> sub;
  try {
    pres = fp::Presentation::parse(read_file(cfg.file));
    for (const auto& w : cfg.subgroup) sub.push_back(fp::Word::parse(w));
  } catch (const fp::ParseError& e) {
    throw UsageError(e.what());
  }
  const auto table = fp::todd_coxeter(pres, sub, cfg.capacity);
  if (json(cfg)) {
    Json j = {{"schema", "tpg-enumerate/1"}, {"relators", Json::array()}, {"subgroup", cfg.subgroup},
              {"index", table.size()}, {"peak_rows", table.peak_rows}};
    for (const auto& r : pres.relators()) j["relators"].push_back(r.str());
    out << j.dump(2) << "\n";
  } else {
    out << "index " << table.size() << " (peak " << table.peak_rows << " rows)\n";
  }
  return kOk;
}

std::string witness_text(const axial::ObstructionCertificate& c) {
  std::string s;
  if (c.kind == axial::ObstructionCertificate::Kind::Klein) {
    s = "klein <";
    for (std::size_t i = 0; i < c.subgroup.size(); ++i) s += (i ? "," : "") + c.subgroup[i].str();
    return s + ">";
  }
  const auto& b = c.branches.front();
  s = "m1-audit over " + std::to_string(c.branches.size()) + " branch(es): (" + b.triple[0].str() + "*" +
      b.triple[1].str() + ", " + b.triple[2].str() + ") = " + qlin::to_string(b.left) + " but (" + b.triple[0].str() +
      ", " + b.triple[1].str() + "*" + b.triple[2].str() + ") = " + qlin::to_string(b.right);
  return s;
}

int cmd_obstruct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& row = check_excluded_type(cfg.type);
  const auto cert = classify::obstruct_type(row.name, cfg.capacity);
  const std::string text = axial::certificate_to_json(cert);
  const fs::path path = fs::path(cfg.out_dir) / (slug(cfg.type) + ".cert.json");
  write_file(path, text);
  if (json(cfg))
    out << text;
  else
    out << row.name << ": " << witness_text(cert) << "\nwrote " << path.string() << "\n";
  if (!cfg.verify) return kOk;
  const auto rep = axial::verify_certificate(axial::certificate_from_json(read_file(path.string())));
  for (const auto& p : rep.problems) err << "verify: " << p << "\n";
  return rep.ok() ? kOk : kDiscrepancy;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  axial::ObstructionCertificate cert;
  try {
    cert = axial::certificate_from_json(read_file(cfg.file));
  } catch (const axial::CertificateFormatError& e) {
    throw UsageError(cfg.file + ": " + e.what());
  }
  const auto rep = axial::verify_certificate(cert);
  for (const auto& p : rep.problems) err << "verify: " << p << "\n";
  if (json(cfg)) {
    Json j = {{"schema", "tpg-verify/1"}, {"group", cert.group}, {"ok", rep.ok()}, {"problems", rep.problems}};
    out << j.dump(2) << "\n";
  } else {
    out << cert.group << ": " << (rep.ok() ? "verified" : "REJECTED") << ", " << witness_text(cert) << "\n";
  }
  return rep.ok() ? kOk : kDiscrepancy;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto rep = classify::classify_all({cfg.capacity, cfg.jobs});
  const std::string j = report::classification_json(rep);
  const std::string md = report::tables_markdown(rep);
  const fs::path dir(cfg.out_dir);
  write_file(dir / "classification.json", j);
  write_file(dir / "tables.md", md);
  if (json(cfg)) {
    out << j;
  } else {
    std::size_t excluded = 0;
    for (const auto& t : rep.types) excluded += t.excluded;
    out << rep.types.size() << " distinct types (printed " << rep.printed_total << "), " << excluded
        << " obstructed (printed " << rep.printed_excluded << "), " << rep.admissible.size() << " admissible (printed "
        << rep.printed_admissible << ")\n"
        << rep.discrepancies.size() << " discrepancies\nwrote " << (dir / "classification.json").string() << " and "
        << (dir / "tables.md").string() << "\n";
  }
  if (!cfg.verify) return kOk;
  print_discrepancies(rep.discrepancies, err);
  return rep.discrepancies.empty() ? kOk : kDiscrepancy;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Triangle-point groups: catalog, normal subgroups, obstructions and classification", "tpg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--out", cfg.out_dir, "Output directory");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--coset-capacity", cfg.capacity, "Coset table row limit")->check(CLI::PositiveNumber);
  app.add_flag("--verify", cfg.verify, "Exit 1 when a result disagrees with the printed tables");

  auto* catalog = app.add_subcommand("catalog", "The eleven maximal groups, validated");
  catalog->add_option("--only", cfg.only, "Restrict to these groups");
  auto* normals = app.add_subcommand("normals", "Normal subgroups of index > 12 and their quotients");
  normals->add_option("group", cfg.group, "G1 .. G11")->required();
  auto* dihedral = app.add_subcommand("dihedral", "The dihedral algebras");
  dihedral->require_subcommand(1);
  auto* dverify = dihedral->add_subcommand("verify", "Run every axiom check on all nine types");
  auto* dtable = dihedral->add_subcommand("table", "Print one algebra as JSON");
  dtable->add_option("type", cfg.dihedral_type, "1A, 2A, ..., 6A")->required();
  auto* enumerate = app.add_subcommand("enumerate", "Coset enumeration of a presentation file");
  enumerate->add_option("file", cfg.file, "Presentation file")->required();
  enumerate->add_option("--subgroup", cfg.subgroup, "Subgroup generator words");
  auto* obstruct = app.add_subcommand("obstruct", "Certificate that a type has no representation");
  obstruct->add_option("type", cfg.type, "Type name")->required();
  auto* classify = app.add_subcommand("classify", "Full pipeline; writes classification.json and tables.md");
  auto* verify = app.add_subcommand("verify", "Re-check a certificate file");
  verify->add_option("file", cfg.file, "Certificate JSON")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(cfg, out, err);
    if (normals->parsed()) return cmd_normals(cfg, out, err);
    if (dverify->parsed()) return cmd_dihedral_verify(cfg, out, err);
    if (dtable->parsed()) return cmd_dihedral_table(cfg, out, err);
    if (enumerate->parsed()) return cmd_enumerate(cfg, out, err);
    if (obstruct->parsed()) return cmd_obstruct(cfg, out, err);
    if (classify->parsed()) return cmd_classify(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
  } catch (const UsageError& e) {
    err << "tpg: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "tpg: " << e.what() << "\n";
    return kDiscrepancy;
  }
  return kUsage;
}

}  // namespace tpg::cli

#include "tpg/certificate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

namespace tpg::axial {

namespace {

const char* rule_name(Provenance::Rule r) {
  switch (r) {
    case Provenance::Rule::Seed:
      return "seed";
    case Provenance::Rule::Conjugate:
      return "conjugate";
    case Provenance::Rule::Cube:
      return "cube";
  }
  return "";
}

/// Derivation steps for the given T positions and all their ancestors.
std::vector<DerivationStep> derivation_for(const TConfig& cfg, const std::vector<std::size_t>& positions,
                                           std::map<std::size_t, std::size_t>& step_of) {
  std::set<std::size_t> need;
  std::vector<std::size_t> stack(positions);
  while (!stack.empty()) {
    const std::size_t p = stack.back();
    stack.pop_back();
    if (!need.insert(p).second) continue;
    const Provenance& pv = cfg.provenance(p);
    if (pv.rule == Provenance::Rule::Conjugate) stack.push_back(pv.first);
    if (pv.rule == Provenance::Rule::Cube) {
      stack.push_back(pv.first);
      stack.push_back(pv.second);
    }
  }
  std::vector<DerivationStep> steps;
  std::map<std::size_t, fp::Word> words;
  for (const std::size_t p : need) {  // ascending positions are a topological order
    const Provenance& pv = cfg.provenance(p);
    DerivationStep s;
    s.element = cfg.group().element(cfg.elements()[p]);
    s.rule = pv.rule;
    fp::Word w;
    switch (pv.rule) {
      case Provenance::Rule::Seed:
        s.seed = pv.seed;
        w = fp::Word::parse(pv.seed);
        break;
      case Provenance::Rule::Conjugate:
        s.args = {step_of.at(pv.first)};
        s.letter = pv.letter;
        w = words.at(pv.first).conj(fp::Word({pv.letter})).reduced();
        break;
      case Provenance::Rule::Cube:
        s.args = {step_of.at(pv.first), step_of.at(pv.second)};
        w = (words.at(pv.first) * words.at(pv.second)).pow(3).reduced();
        break;
    }
    s.word = w.str();
    words[p] = std::move(w);
    step_of[p] = steps.size();
    steps.push_back(std::move(s));
  }
  return steps;
}

/// Unions of the given classes, indexed by bitmask.
std::vector<std::vector<std::size_t>> subsets_of(const std::vector<std::vector<std::size_t>>& classes) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << classes.size()); ++mask) {
    std::vector<std::size_t> u;
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (mask >> i & 1) u.insert(u.end(), classes[i].begin(), classes[i].end());
    std::sort(u.begin(), u.end());
    out.push_back(std::move(u));
  }
  return out;
}

/// K-classes of involutions of k not met by forced (element indices of g).
std::vector<std::vector<std::size_t>> free_involution_classes(const PermGroup& g, const PermGroup& k,
                                                              const std::vector<std::size_t>& forced,
                                                              std::vector<std::size_t>& closed_forced) {
  std::vector<std::vector<std::size_t>> free;
  closed_forced.clear();
  for (const auto& cls : k.classes()) {
    if (k.order_of(cls.front()) != 2) continue;
    std::vector<std::size_t> in_g;
    for (const std::size_t e : cls) in_g.push_back(g.index(k.element(e)));
    std::sort(in_g.begin(), in_g.end());
    const bool met = std::any_of(in_g.begin(), in_g.end(), [&](std::size_t e) {
      return std::find(forced.begin(), forced.end(), e) != forced.end();
    });
    if (met)
      closed_forced.insert(closed_forced.end(), in_g.begin(), in_g.end());
    else
      free.push_back(std::move(in_g));
  }
  std::sort(closed_forced.begin(), closed_forced.end());
  return free;
}

std::optional<ObstructionCertificate> try_audit(const TConfig& cfg, const PermGroup& k) {
  const PermGroup& g = cfg.group();
  std::vector<std::size_t> forced;
  for (const auto& x : k.elements()) {
    const std::size_t e = g.index(x);
    if (cfg.contains(e)) forced.push_back(e);
  }
  std::vector<std::size_t> closed;
  const auto free = free_involution_classes(g, k, forced, closed);
  std::vector<Branch> branches;
  for (const auto& extra : subsets_of(free)) {
    std::vector<std::size_t> s = closed;
    s.insert(s.end(), extra.begin(), extra.end());
    std::sort(s.begin(), s.end());
    Branch b;
    for (const std::size_t e : extra) b.extra.push_back(g.element(e));
    if (const auto w = klein_search_in(g, k, s)) {
      b.by = Branch::Refutation::Klein;
      for (std::size_t i = 0; i < 3; ++i) b.klein[i] = g.element(w->generators[i]);
    } else if (const auto m = m1_audit(g, k, s)) {
      b.by = Branch::Refutation::M1;
      b.triple = {g.element(m->i), g.element(m->j), g.element(m->k)};
      b.type_ij = m->type_ij.str();
      b.type_jk = m->type_jk.str();
      b.left = m->left;
      b.right = m->right;
    } else {
      return std::nullopt;
    }
    branches.push_back(std::move(b));
  }

  ObstructionCertificate cert;
  cert.kind = ObstructionCertificate::Kind::M1Audit;
  std::vector<std::size_t> positions;
  for (const std::size_t e : forced) positions.push_back(cfg.position(e));
  std::map<std::size_t, std::size_t> step_of;
  cert.derivation = derivation_for(cfg, positions, step_of);
  for (const std::size_t e : forced) cert.members.push_back({g.element(e), step_of.at(cfg.position(e))});
  cert.subgroup = k.generators();
  cert.branches = std::move(branches);
  return cert;
}

/// Basis of a 2^3 taken greedily from its involutions, smallest support
/// first, so that e.g. <(1,2),(3,4),(5,6)> is reported as written.
std::vector<Perm> readable_basis(std::vector<Perm> inv) {
  auto support = [](const Perm& p) {
    std::size_t n = 0;
    for (std::size_t x = 0; x < p.degree(); ++x) n += p(static_cast<perm::Point>(x)) != x;
    return n;
  };
  std::stable_sort(inv.begin(), inv.end(), [&](const Perm& x, const Perm& y) {
    const auto sx = support(x), sy = support(y);
    return sx != sy ? sx < sy : x.str() < y.str();
  });
  std::vector<Perm> basis, span;
  for (const auto& x : inv) {
    if (std::find(span.begin(), span.end(), x) != span.end()) continue;
    basis.push_back(x);
    const std::size_t n = span.size();
    span.push_back(x);
    for (std::size_t i = 0; i < n; ++i) span.push_back(span[i] * x);
  }
  return basis;
}

}  // namespace

std::optional<ObstructionCertificate> obstruct(const TConfig& cfg, std::string group_name) {
  const PermGroup& g = cfg.group();
  std::optional<ObstructionCertificate> cert;
  if (const auto w = klein_search(cfg)) {
    cert.emplace();
    cert->kind = ObstructionCertificate::Kind::Klein;
    std::vector<std::size_t> positions;
    for (const std::size_t e : w->involutions) positions.push_back(cfg.position(e));
    std::map<std::size_t, std::size_t> step_of;
    cert->derivation = derivation_for(cfg, positions, step_of);
    std::vector<Perm> inv;
    for (const std::size_t e : w->involutions) {
      inv.push_back(g.element(e));
      cert->members.push_back({g.element(e), step_of.at(cfg.position(e))});
    }
    cert->subgroup = readable_basis(inv);
  } else {
    const auto ref = PermGroup::generate(
        6, {Perm::parse("(1,2)", 6), Perm::parse("(1,3)(2,4)", 6), Perm::parse("(5,6)", 6)});
    for (const auto& k : find_subgroups_iso(g, ref)) {
      cert = try_audit(cfg, k);
      if (cert) break;
    }
  }
  if (!cert) return std::nullopt;
  cert->group = std::move(group_name);
  cert->degree = g.degree();
  cert->order = g.order();
  cert->generators = cfg.seeds();
  const auto report = verify_certificate(*cert);
  if (!report.ok()) throw std::logic_error("generated certificate fails verification: " + report.problems.front());
  return cert;
}

// ---------------------------------------------------------------------------
// Verification. Everything below works on raw permutations only.

namespace {

std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t degree) {
  std::set<Perm> seen{Perm::identity(degree)};
  std::vector<Perm> queue{Perm::identity(degree)};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const auto& s : gens) {
      Perm y = queue[q] * s;
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  return seen;
}

struct Checker {
  const ObstructionCertificate& cert;
  VerifyReport report;

  void fail(std::string what) { report.problems.push_back(std::move(what)); }

  bool check_steps() {
    const auto& [a, b, c] = cert.generators;
    for (const auto& p : {a, b, c})
      if (p.degree() != cert.degree) {
        fail("generator degree differs from the stated degree");
        return false;
      }
    const std::map<std::string, Perm> seeds{{"a", a}, {"b", b}, {"c", c}, {"ab", a * b}};
    for (const auto& [name, p] : seeds)
      if (p.order() != 2) fail("seed " + name + " is not an involution");
    const std::array<Perm, 3> images{a, b, c};
    for (std::size_t i = 0; i < cert.derivation.size(); ++i) {
      const DerivationStep& s = cert.derivation[i];
      const std::string at = "step " + std::to_string(i) + ": ";
      for (const std::size_t r : s.args)
        if (r >= i) {
          fail(at + "refers to a later step");
          return false;
        }
      try {
        if (fp::evaluate_word(fp::Word::parse(s.word), images) != s.element) fail(at + "word does not evaluate to the element");
      } catch (const std::exception& e) {
        fail(at + "bad word: " + e.what());
      }
      switch (s.rule) {
        case Provenance::Rule::Seed: {
          const auto it = seeds.find(s.seed);
          if (it == seeds.end() || it->second != s.element) fail(at + "not the named seed");
          break;
        }
        case Provenance::Rule::Conjugate:
          if (s.args.size() != 1 ||
              cert.derivation[s.args[0]].element.conj(images[static_cast<std::size_t>(s.letter)]) != s.element)
            fail(at + "not the stated conjugate");
          break;
        case Provenance::Rule::Cube: {
          if (s.args.size() != 2) {
            fail(at + "cube needs two arguments");
            break;
          }
          const Perm x = cert.derivation[s.args[0]].element * cert.derivation[s.args[1]].element;
          if (x.order() != 6) fail(at + "product does not have order 6");
          if (x.pow(3) != s.element) fail(at + "not the cube of the product");
          break;
        }
      }
    }
    return true;
  }

  std::set<Perm> checked_members() {
    std::set<Perm> out;
    for (const Member& m : cert.members) {
      if (m.step >= cert.derivation.size() || cert.derivation[m.step].element != m.element)
        fail("member " + m.element.str() + " is not derived by its step");
      else
        out.insert(m.element);
    }
    return out;
  }

  static std::string type_of(const Perm& t, const Perm& s, const std::set<Perm>& in_s) {
    const Perm x = t * s;
    switch (x.order()) {
      case 1:
        return "1A";
      case 2:
        return in_s.count(x) ? "2A" : "2B";
      case 4:
        return in_s.count(x * x) ? "4B" : "4A";
      default:
        return "?";
    }
  }

  static Rational angle(const std::string& type) {
    if (type == "1A") return 1;
    if (type == "2A") return qlin::ratio(1, 8);
    if (type == "2B") return 0;
    if (type == "4A") return qlin::ratio(1, 32);
    if (type == "4B") return qlin::ratio(1, 64);
    throw std::invalid_argument("no angle for " + type);
  }

  /// a_t . a_s in the axis span, or nothing for 4A and unknown types.
  static std::optional<std::vector<std::pair<Perm, Rational>>> expand(const Perm& t, const Perm& s,
                                                                     const std::string& type) {
    using Terms = std::vector<std::pair<Perm, Rational>>;
    if (type == "1A") return Terms{{t, 1}};
    if (type == "2B") return Terms{};
    if (type == "2A") {
      const Rational e = qlin::ratio(1, 8);
      return Terms{{t, e}, {s, e}, {t * s, -e}};
    }
    if (type == "4B") {
      const Rational e = qlin::ratio(1, 64);
      const Perm rho = t * s;
      return Terms{{t, e}, {s, e}, {t * s * t, -e}, {s * t * s, -e}, {rho * rho, e}};
    }
    return std::nullopt;
  }

  void check_klein() {
    const std::set<Perm> members = checked_members();
    if (cert.subgroup.size() != 3) {
      fail("a 2^3 certificate needs three generators");
      return;
    }
    const auto k = closure(cert.subgroup, cert.degree);
    if (k.size() != 8) fail("the generators do not generate a group of order 8");
    std::set<Perm> invols;
    for (const auto& x : k) {
      if (x.is_identity()) continue;
      if (x.order() != 2) fail("the subgroup has an element of order " + std::to_string(x.order()));
      invols.insert(x);
    }
    for (const auto& x : cert.subgroup)
      for (const auto& y : cert.subgroup)
        if (!commute(x, y)) fail("the generators do not commute");
    if (invols != members) fail("the derived members are not the seven involutions of the subgroup");
  }

  void check_audit() {
    const std::set<Perm> forced = checked_members();
    const auto kset = closure(cert.subgroup, cert.degree);
    const std::vector<Perm> k(kset.begin(), kset.end());
    for (const auto& x : k) {
      const auto o = x.order();
      if (o != 1 && o != 2 && o != 4) fail("the subgroup has an element of order " + std::to_string(o));
    }
    for (const auto& f : forced)
      if (!kset.count(f)) fail("forced member " + f.str() + " is not in the subgroup");
    // K-classes of involutions.
    std::vector<std::set<Perm>> classes;
    std::set<Perm> placed;
    for (const auto& x : k) {
      if (x.order() != 2 || placed.count(x)) continue;
      std::set<Perm> cls;
      for (const auto& y : k) cls.insert(x.conj(y));
      placed.insert(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    std::set<Perm> base;
    std::vector<const std::set<Perm>*> free;
    for (const auto& cls : classes) {
      const bool met = std::any_of(cls.begin(), cls.end(), [&](const Perm& x) { return forced.count(x) > 0; });
      if (met)
        base.insert(cls.begin(), cls.end());
      else
        free.push_back(&cls);
    }
    std::set<std::set<Perm>> expected, covered;
    for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
      std::set<Perm> u;
      for (std::size_t i = 0; i < free.size(); ++i)
        if (mask >> i & 1) u.insert(free[i]->begin(), free[i]->end());
      expected.insert(std::move(u));
    }
    for (const Branch& b : cert.branches) {
      const std::set<Perm> extra(b.extra.begin(), b.extra.end());
      covered.insert(extra);
      std::set<Perm> s = base;
      s.insert(extra.begin(), extra.end());
      if (b.by == Branch::Refutation::Klein)
        check_branch_klein(b, s);
      else
        check_branch_m1(b, s);
    }
    if (covered != expected) fail("the branches do not cover every K-stable choice of K cap T");
  }

  void check_branch_klein(const Branch& b, const std::set<Perm>& s) {
    const std::vector<Perm> gens(b.klein.begin(), b.klein.end());
    const auto k = closure(gens, cert.degree);
    if (k.size() != 8) fail("branch 2^3 generators do not generate a group of order 8");
    for (const auto& x : k) {
      if (x.is_identity()) continue;
      if (x.order() != 2) fail("branch 2^3 is not elementary abelian");
      if (!s.count(x)) fail("branch 2^3 has an involution outside the branch set");
    }
  }

  void check_branch_m1(const Branch& b, const std::set<Perm>& s) {
    const auto& [i, j, k] = b.triple;
    for (const auto& x : {i, j, k})
      if (!s.count(x)) {
        fail("audit triple leaves the branch set");
        return;
      }
    const std::string tij = type_of(i, j, s), tjk = type_of(j, k, s);
    if (tij != b.type_ij || tjk != b.type_jk) fail("recorded pair types do not match");
    const auto ij = expand(i, j, tij), jk = expand(j, k, tjk);
    if (!ij || !jk) {
      fail("audit products leave the axis span");
      return;
    }
    Rational left = 0, right = 0;
    try {
      for (const auto& [m, c] : *ij) left += c * angle(type_of(m, k, s));
      for (const auto& [m, c] : *jk) right += c * angle(type_of(i, m, s));
    } catch (const std::exception& e) {
      fail(std::string("audit: ") + e.what());
      return;
    }
    if (left != b.left || right != b.right) fail("recomputed inner products differ from the recorded values");
    if (left == right) fail("the two inner products agree; no contradiction");
  }
};

}  // namespace

VerifyReport verify_certificate(const ObstructionCertificate& cert) {
  Checker c{cert, {}};
  if (!c.check_steps()) return c.report;
  if (cert.kind == ObstructionCertificate::Kind::Klein)
    c.check_klein();
  else
    c.check_audit();
  return c.report;
}

// ---------------------------------------------------------------------------
// JSON.

namespace {

using nlohmann::ordered_json;

ordered_json perms_json(const std::vector<Perm>& ps) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : ps) arr.push_back(p.str());
  return arr;
}

template <std::size_t N>
ordered_json perms_json(const std::array<Perm, N>& ps) {
  return perms_json(std::vector<Perm>(ps.begin(), ps.end()));
}

}  // namespace

std::string certificate_to_json(const ObstructionCertificate& cert) {
  ordered_json j;
  j["schema"] = "tpg-certificate/1";
  j["group"] = cert.group;
  j["kind"] = cert.kind == ObstructionCertificate::Kind::Klein ? "klein" : "m1-audit";
  j["degree"] = cert.degree;
  j["order"] = cert.order;
  j["generators"] = {{"a", cert.generators[0].str()}, {"b", cert.generators[1].str()}, {"c", cert.generators[2].str()}};
  ordered_json steps = ordered_json::array();
  for (std::size_t i = 0; i < cert.derivation.size(); ++i) {
    const auto& s = cert.derivation[i];
    ordered_json o;
    o["id"] = i;
    o["element"] = s.element.str();
    o["rule"] = rule_name(s.rule);
    if (s.rule == Provenance::Rule::Seed) o["seed"] = s.seed;
    if (s.rule == Provenance::Rule::Conjugate) {
      o["of"] = s.args.at(0);
      o["by"] = std::string(1, fp::to_char(s.letter));
    }
    if (s.rule == Provenance::Rule::Cube) o["of"] = s.args;
    o["word"] = s.word;
    steps.push_back(o);
  }
  j["derivation"] = steps;
  j["subgroup"] = perms_json(cert.subgroup);
  ordered_json members = ordered_json::array();
  for (const auto& m : cert.members) members.push_back({{"element", m.element.str()}, {"step", m.step}});
  j["members"] = members;
  if (cert.kind == ObstructionCertificate::Kind::M1Audit) {
    ordered_json branches = ordered_json::array();
    for (const auto& b : cert.branches) {
      ordered_json o;
      o["extra"] = perms_json(b.extra);
      if (b.by == Branch::Refutation::Klein) {
        o["refutation"] = "klein";
        o["klein"] = perms_json(b.klein);
      } else {
        o["refutation"] = "m1";
        o["triple"] = perms_json(b.triple);
        o["types"] = {b.type_ij, b.type_jk};
        o["left"] = qlin::to_string(b.left);
        o["right"] = qlin::to_string(b.right);
      }
      branches.push_back(o);
    }
    j["branches"] = branches;
  }
  return j.dump(2) + "\n";
}

ObstructionCertificate certificate_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.at("schema").get<std::string>() != "tpg-certificate/1")
      throw CertificateFormatError("unsupported certificate schema");
    ObstructionCertificate cert;
    cert.group = j.at("group").get<std::string>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "klein")
      cert.kind = ObstructionCertificate::Kind::Klein;
    else if (kind == "m1-audit")
      cert.kind = ObstructionCertificate::Kind::M1Audit;
    else
      throw CertificateFormatError("unknown certificate kind " + kind);
    cert.degree = j.at("degree").get<std::size_t>();
    cert.order = j.value("order", std::size_t{0});
    const std::size_t n = cert.degree;
    auto perm = [n](const nlohmann::json& v) { return Perm::parse(v.get<std::string>(), n); };
    const auto& gens = j.at("generators");
    cert.generators = {perm(gens.at("a")), perm(gens.at("b")), perm(gens.at("c"))};
    for (const auto& o : j.at("derivation")) {
      DerivationStep s;
      s.element = perm(o.at("element"));
      const std::string rule = o.at("rule").get<std::string>();
      if (rule == "seed") {
        s.rule = Provenance::Rule::Seed;
        s.seed = o.at("seed").get<std::string>();
      } else if (rule == "conjugate") {
        s.rule = Provenance::Rule::Conjugate;
        s.args = {o.at("of").get<std::size_t>()};
        const std::string by = o.at("by").get<std::string>();
        if (by.size() != 1 || by[0] < 'a' || by[0] > 'c') throw CertificateFormatError("bad conjugating letter " + by);
        s.letter = static_cast<fp::Gen>(by[0] - 'a');
      } else if (rule == "cube") {
        s.rule = Provenance::Rule::Cube;
        s.args = o.at("of").get<std::vector<std::size_t>>();
      } else {
        throw CertificateFormatError("unknown derivation rule " + rule);
      }
      s.word = o.at("word").get<std::string>();
      cert.derivation.push_back(std::move(s));
    }
    for (const auto& p : j.at("subgroup")) cert.subgroup.push_back(perm(p));
    for (const auto& m : j.at("members")) cert.members.push_back({perm(m.at("element")), m.at("step").get<std::size_t>()});
    if (cert.kind == ObstructionCertificate::Kind::M1Audit) {
      for (const auto& o : j.at("branches")) {
        Branch b;
        for (const auto& p : o.at("extra")) b.extra.push_back(perm(p));
        const std::string by = o.at("refutation").get<std::string>();
        auto triple = [&](const nlohmann::json& arr) {
          if (arr.size() != 3) throw CertificateFormatError("expected three permutations");
          return std::array<Perm, 3>{perm(arr[0]), perm(arr[1]), perm(arr[2])};
        };
        if (by == "klein") {
          b.by = Branch::Refutation::Klein;
          b.klein = triple(o.at("klein"));
        } else if (by == "m1") {
          b.by = Branch::Refutation::M1;
          b.triple = triple(o.at("triple"));
          b.type_ij = o.at("types").at(0).get<std::string>();
          b.type_jk = o.at("types").at(1).get<std::string>();
          b.left = qlin::parse_rational(o.at("left").get<std::string>());
          b.right = qlin::parse_rational(o.at("right").get<std::string>());
        } else {
          throw CertificateFormatError("unknown refutation " + by);
        }
        cert.branches.push_back(std::move(b));
      }
    }
    return cert;
  } catch (const CertificateFormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw CertificateFormatError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace tpg::axial

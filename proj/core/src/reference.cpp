#include "tpg/reference.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "tpg/coset_enum.hpp"

namespace tpg::classify {

namespace {

using fp::Presentation;
using fp::Word;

PermGroup gen(std::size_t degree, std::initializer_list<const char*> cycles) {
  std::vector<Perm> gens;
  for (const char* c : cycles) gens.push_back(Perm::parse(c, degree));
  return PermGroup::generate(degree, std::move(gens));
}

PermGroup direct_product(const PermGroup& x, const PermGroup& y) {
  const std::size_t n = x.degree() + y.degree();
  std::vector<Perm> gens;
  for (const auto& g : x.generators()) gens.push_back(g.extended(n));
  for (const auto& g : y.generators()) {
    std::vector<perm::Point> img(n);
    for (std::size_t i = 0; i < x.degree(); ++i) img[i] = static_cast<perm::Point>(i);
    for (std::size_t i = 0; i < y.degree(); ++i) img[x.degree() + i] = static_cast<perm::Point>(x.degree() + g(i));
    gens.push_back(Perm(std::move(img)));
  }
  return PermGroup::generate(n, std::move(gens));
}

PermGroup symmetric(std::size_t n) {
  std::string cyc = "(";
  for (std::size_t i = 1; i <= n; ++i) cyc += std::to_string(i) + (i < n ? "," : ")");
  return PermGroup::generate(n, {Perm::parse("(1,2)", n), Perm::parse(cyc, n)});
}

/// Permutation of {0, ..., n-1} given pointwise.
template <class F>
Perm perm_of(std::size_t n, F f) {
  std::vector<perm::Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<perm::Point>(f(i));
  return Perm(std::move(img));
}

// F4 = {0, 1, w, w^2} coded 0..3; addition is xor.
unsigned f4_mul(unsigned x, unsigned y) {
  static const unsigned log[4] = {0, 0, 1, 2}, exp[3] = {1, 2, 3};
  if (!x || !y) return 0;
  return exp[(log[x] + log[y]) % 3];
}

/// Affine semilinear group of F4^2 on 16 points (x, y) -> x + 4y.
PermGroup a_sigma_l_2_4() {
  auto pt = [](unsigned x, unsigned y) { return x + 4 * y; };
  return PermGroup::generate(
      16, {perm_of(16, [&](std::size_t p) { return pt((p & 3) ^ 1, p >> 2); }),
           perm_of(16, [&](std::size_t p) { return pt((p & 3) ^ (p >> 2), p >> 2); }),
           perm_of(16, [&](std::size_t p) { return pt(p >> 2, p & 3); }),
           perm_of(16, [&](std::size_t p) { return pt(f4_mul(2, p & 3), f4_mul(3, p >> 2)); }),
           perm_of(16, [&](std::size_t p) { return pt(f4_mul(p & 3, p & 3), f4_mul(p >> 2, p >> 2)); })});
}

/// Translations of F2^2 (x) F2^2 extended by GL2(2) x GL2(2) acting on the
/// two tensor factors; bit 2i+j of a point is the (e_i (x) e_j) coordinate.
PermGroup tensor_affine() {
  auto on_first = [](const int m[2][2]) {
    return perm_of(16, [m](std::size_t p) {
      std::size_t q = 0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          if (p >> (2 * i + j) & 1)
            for (int k = 0; k < 2; ++k)
              if (m[k][i]) q ^= std::size_t{1} << (2 * k + j);
      return q;
    });
  };
  auto on_second = [](const int m[2][2]) {
    return perm_of(16, [m](std::size_t p) {
      std::size_t q = 0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          if (p >> (2 * i + j) & 1)
            for (int k = 0; k < 2; ++k)
              if (m[k][j]) q ^= std::size_t{1} << (2 * i + k);
      return q;
    });
  };
  static const int shear[2][2] = {{1, 1}, {0, 1}}, swap[2][2] = {{0, 1}, {1, 0}};
  return PermGroup::generate(16, {perm_of(16, [](std::size_t p) { return p ^ 1; }), on_first(shear), on_first(swap),
                                  on_second(shear), on_second(swap)});
}

/// Pairs (x, y) in S4 x S4 with equal images in S3, extended by the swap.
PermGroup fibered_s4_wreath() {
  return gen(8, {"(1,2)(5,6)", "(1,2,3)(5,6,7)", "(1,2)(3,4)", "(5,6)(7,8)", "(1,5)(2,6)(3,7)(4,8)"});
}

fp::ExtraExponents extras(std::array<int, 5> r) {
  fp::ExtraExponents e;
  for (std::size_t i = 0; i < 5; ++i)
    if (r[i]) e[i] = r[i];
  return e;
}

Presentation g11_presentation() { return fp::tp_presentation(6, 6, 6, extras({6, 6, 6, 0, 3})); }

const std::vector<std::vector<std::string>> kActionCandidates = {
    {"a", "(bc)^2"}, {"a", "b"}, {"a", "c"}, {"b", "c"}, {"a"}, {}};

Reference from_presentation(std::string name, std::vector<std::string> aliases, Presentation pres,
                            std::string construction) {
  PresentedAction act = faithful_action(pres, kActionCandidates, fp::kDefaultCosetCapacity);
  Reference r{std::move(name), std::move(aliases), std::move(construction), act.group, std::move(pres)};
  return r;
}

std::size_t involution_count(const PermGroup& g) {
  const auto& o = g.element_orders();
  return static_cast<std::size_t>(std::count(o.begin(), o.end(), 2));
}

std::vector<Reference> build_references() {
  std::vector<Reference> out;
  auto add = [&](std::string name, std::vector<std::string> aliases, std::string how, PermGroup g) {
    out.push_back(Reference{std::move(name), std::move(aliases), std::move(how), std::move(g), std::nullopt});
  };
  const PermGroup c2 = gen(2, {"(1,2)"});
  const PermGroup v4 = gen(4, {"(1,2)", "(3,4)"});
  const PermGroup d8 = gen(4, {"(1,2,3,4)", "(1,3)"});
  const PermGroup s3 = symmetric(3), s4 = symmetric(4), s5 = symmetric(5), s6 = symmetric(6);
  const PermGroup s3s3 = direct_product(s3, s3);
  const PermGroup extraspecial = from_presentation("", {}, fp::tp_presentation(3, 6, 6), "").group;

  add("1", {}, "trivial group", PermGroup::generate(1, {}));
  add("2^2", {"D4"}, "<(1,2), (3,4)>", v4);
  add("D8", {}, "<(1,2,3,4), (1,3)>", d8);
  add("2^3", {}, "<(1,2), (3,4), (5,6)>", gen(6, {"(1,2)", "(3,4)", "(5,6)"}));
  add("D12", {"2xS3"}, "<(1,2,3,4,5,6), (1,6)(2,5)(3,4)>", gen(6, {"(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"}));
  add("2xD8", {}, "D8 x 2", direct_product(d8, c2));
  add("2^4:2", {}, "2^2 wr 2: <(1,2), (3,4), (1,5)(2,6)(3,7)(4,8)>",
      gen(8, {"(1,2)", "(3,4)", "(1,5)(2,6)(3,7)(4,8)"}));
  add("S4", {}, "symmetric group", s4);
  add("2^2xS3", {"2xD12"}, "S3 x 2^2", direct_product(s3, v4));
  add("S3xS3", {}, "S3 x S3", s3s3);
  add("(S3xS3):2", {"S3wr2"}, "S3 wr 2: <(1,2), (1,2,3), (1,4)(2,5)(3,6)>",
      gen(6, {"(1,2)", "(1,2,3)", "(1,4)(2,5)(3,6)"}));
  add("2xS4", {}, "S4 x 2", direct_product(s4, c2));
  add("2xS3xS3", {}, "S3 x S3 x 2", direct_product(s3s3, c2));
  add("2^2xS4", {}, "S4 x 2^2", direct_product(s4, v4));
  add("A5", {}, "alternating group", gen(5, {"(1,2,3)", "(1,2,3,4,5)"}));
  add("S5", {}, "symmetric group", s5);
  add("2^4:D12", {}, "pairs in S4 x S4 over a common image in S3, with the swap", fibered_s4_wreath());
  add("S3xS3xS3", {"S3^3"}, "S3 x S3 x S3", direct_product(s3s3, s3));
  add("2^4:(S3xS3)", {}, "GL2(2) x GL2(2) on the tensor square of F2^2, with translations", tensor_affine());
  add("S6", {}, "symmetric group", s6);
  add("2^4:S5", {}, "affine semilinear group of F4^2", a_sigma_l_2_4());
  out.push_back(from_presentation("3^(1+2):2^2", {}, fp::tp_presentation(3, 6, 6),
                                  "G(3,6,6) on cosets"));
  add("2x(3^(1+2):2^2)", {}, "3^(1+2):2^2 x 2", direct_product(extraspecial, c2));

  Presentation p648 = g11_presentation();
  p648.add("ab*a^{cbc}", 2);
  p648.add("a*b^{cabc}", 2);
  out.push_back(from_presentation("(3:2):(3^(1+2):2^2)", {"S3:(3^(1+2):2^2)"}, p648,
                                  "G11 with (ab*a^{cbc})^2, (a*b^{cabc})^2"));
  Presentation p1944 = g11_presentation();
  p1944.add("a*b^{cabc}", 2);
  out.push_back(from_presentation("(3^2:2):(3^(1+2):2^2)", {}, p1944, "G11 with (a*b^{cabc})^2"));
  Presentation p5832 = g11_presentation();
  p5832.add("c^{acbcacb}*c^{bcacbca}", 1);
  out.push_back(from_presentation("(3^3:2):(3^(1+2):2^2)", {}, p5832, "G11 with c^{acbcacb}*c^{bcacbca}"));
  out.push_back(from_presentation("(3^4:2):(3^(1+2):2^2)", {}, g11_presentation(), "G(6,6,6; 6,6,6,-,3)"));

  const std::map<std::string, std::size_t> expected = {
      {"1", 1},          {"2^2", 4},         {"D8", 8},
      {"2^3", 8},        {"D12", 12},        {"2xD8", 16},
      {"2^4:2", 32},     {"S4", 24},         {"2^2xS3", 24},
      {"S3xS3", 36},     {"(S3xS3):2", 72},  {"2xS4", 48},
      {"2xS3xS3", 72},   {"2^2xS4", 96},     {"A5", 60},
      {"S5", 120},       {"2^4:D12", 192},   {"S3xS3xS3", 216},
      {"2^4:(S3xS3)", 576}, {"S6", 720},     {"2^4:S5", 1920},
      {"3^(1+2):2^2", 108}, {"2x(3^(1+2):2^2)", 216}, {"(3:2):(3^(1+2):2^2)", 648},
      {"(3^2:2):(3^(1+2):2^2)", 1944}, {"(3^3:2):(3^(1+2):2^2)", 5832}, {"(3^4:2):(3^(1+2):2^2)", 17496}};
  for (const auto& r : out) {
    auto it = expected.find(r.name);
    if (it == expected.end() || r.group.order() != it->second)
      throw std::logic_error("reference " + r.name + " has order " + std::to_string(r.group.order()));
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (out[i].group.order() == out[j].group.order() &&
          perm::fingerprint(out[i].group) == perm::fingerprint(out[j].group))
        throw std::logic_error("references " + out[j].name + " and " + out[i].name + " share a fingerprint");
  return out;
}

bool relators_hold(const Presentation& pres, const std::array<Perm, 3>& images) {
  return std::all_of(pres.relators().begin(), pres.relators().end(),
                     [&](const fp::Relator& r) { return fp::evaluate_word(r.word(), images).is_identity(); });
}

PermGroup regular_q8() {
  // left multiplication by i and j on {1, i, j, k, -1, -i, -j, -k}
  return gen(8, {"(1,2,5,6)(3,4,7,8)", "(1,3,5,7)(2,8,6,4)"});
}

std::vector<SmallGroup> build_small_groups() {
  std::vector<SmallGroup> out = {
      {"C4", gen(4, {"(1,2,3,4)"})},
      {"2^2", gen(4, {"(1,2)", "(3,4)"})},
      {"C8", gen(8, {"(1,2,3,4,5,6,7,8)"})},
      {"C4x2", gen(6, {"(1,2,3,4)", "(5,6)"})},
      {"2^3", gen(6, {"(1,2)", "(3,4)", "(5,6)"})},
      {"D8", gen(4, {"(1,2,3,4)", "(1,3)"})},
      {"Q8", regular_q8()},
      {"C12", gen(7, {"(1,2,3,4)(5,6,7)"})},
      {"C6x2", gen(7, {"(1,2,3)", "(4,5)", "(6,7)"})},
      {"A4", gen(4, {"(1,2,3)", "(1,2)(3,4)"})},
      {"D12", gen(6, {"(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"})},
      {"Dic12", gen(7, {"(1,2,3)", "(2,3)(4,5,6,7)"})},
  };
  const std::map<std::string, std::pair<std::size_t, std::size_t>> expected = {
      {"C4", {4, 1}}, {"2^2", {4, 3}}, {"C8", {8, 1}},   {"C4x2", {8, 3}},  {"2^3", {8, 7}},  {"D8", {8, 5}},
      {"Q8", {8, 1}}, {"C12", {12, 1}}, {"C6x2", {12, 3}}, {"A4", {12, 3}}, {"D12", {12, 7}}, {"Dic12", {12, 1}}};
  for (const auto& s : out) {
    auto [order, inv] = expected.at(s.name);
    if (s.group.order() != order || involution_count(s.group) != inv)
      throw std::logic_error("small group " + s.name + " failed validation");
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (out[i].group.order() == out[j].group.order() && perm::isomorphic(out[i].group, out[j].group))
        throw std::logic_error("small groups " + out[j].name + " and " + out[i].name + " coincide");
  return out;
}

}  // namespace

PresentedAction faithful_action(const fp::Presentation& pres, const std::vector<std::vector<std::string>>& candidates,
                                std::size_t capacity) {
  const std::size_t order = fp::presented_order(pres, capacity);
  for (const auto& words : candidates) {
    std::vector<Word> sub;
    for (const auto& w : words) sub.push_back(Word::parse(w));
    fp::CosetAction act = fp::coset_action(fp::todd_coxeter(pres, sub, capacity));
    if (act.group.order() == order) return {act.group, act.images, words, order};
  }
  throw std::runtime_error("no candidate subgroup gives a faithful action");
}

const std::vector<Reference>& references() {
  static const std::vector<Reference> refs = build_references();
  return refs;
}

const Reference& reference(std::string_view name) {
  for (const auto& r : references()) {
    if (r.name == name) return r;
    if (std::find(r.aliases.begin(), r.aliases.end(), name) != r.aliases.end()) return r;
  }
  throw std::out_of_range("unknown reference group " + std::string(name));
}

std::string canonical_name(std::string_view name) {
  for (const auto& r : references()) {
    if (r.name == name || std::find(r.aliases.begin(), r.aliases.end(), name) != r.aliases.end()) return r.name;
  }
  return std::string(name);
}

bool same_type(std::string_view x, std::string_view y) { return canonical_name(x) == canonical_name(y); }

std::string identify(const PermGroup& g) {
  if (g.order() == 1) return "1";
  std::optional<perm::IsoFingerprint> fp;
  for (const auto& r : references()) {
    if (r.group.order() != g.order()) continue;
    if (r.presentation && g.generators().size() == 3) {
      std::array<Perm, 3> imgs{g.generators()[0], g.generators()[1], g.generators()[2]};
      if (relators_hold(*r.presentation, imgs)) return r.name;
    }
    if (!fp) fp = perm::fingerprint(g);
    if (*fp == perm::fingerprint(r.group) && perm::isomorphic(g, r.group)) return r.name;
  }
  if (!fp) fp = perm::fingerprint(g);
  std::ostringstream os;
  os << "?order=" << fp->order << ",classes=" << fp->class_count << ",center=" << fp->center_order
     << ",derived=" << fp->derived_order;
  return os.str();
}

const std::vector<SmallGroup>& small_groups() {
  static const std::vector<SmallGroup> groups = build_small_groups();
  return groups;
}

}  // namespace tpg::classify

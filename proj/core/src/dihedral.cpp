#include "tpg/dihedral.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>

#include "json.hpp"

namespace tpg::dihedral {

namespace {

using Terms = std::vector<std::pair<std::string, Rational>>;

Rational q(long p, long d = 1) { return qlin::ratio(p, d); }

/// k * (sum of c_i * label_i).
Terms sc(const Rational& k, std::initializer_list<std::pair<const char*, long>> xs) {
  Terms t;
  for (const auto& [label, c] : xs) t.emplace_back(label, k * Rational(c));
  return t;
}

Terms operator+(Terms a, const Terms& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct Printed {
  std::string x, y;
  Terms value;
};

struct PrintedInner {
  std::string x, y;
  Rational value;
};

struct Embedding {
  Type sub;
  std::map<std::string, std::string> labels;
};

struct TypeData {
  int polygon = 1;  // number of polygon axes a_i, indices taken mod polygon
  std::vector<std::string> basis;
  std::vector<Printed> products;
  std::vector<PrintedInner> inners;
  std::vector<Embedding> embeddings;
};

TypeData type_data(Type t) {
  TypeData d;
  switch (t) {
    case Type::T1A:
      d.polygon = 1;
      d.basis = {"a0"};
      break;
    case Type::T2A:
      d.polygon = 2;
      d.basis = {"a0", "a1", "a_rho"};
      d.products = {{"a0", "a1", sc(q(1, 8), {{"a0", 1}, {"a1", 1}, {"a_rho", -1}})},
                    {"a0", "a_rho", sc(q(1, 8), {{"a0", 1}, {"a_rho", 1}, {"a1", -1}})}};
      d.inners = {{"a0", "a1", q(1, 8)}, {"a0", "a_rho", q(1, 8)}, {"a1", "a_rho", q(1, 8)}};
      break;
    case Type::T2B:
      d.polygon = 2;
      d.basis = {"a0", "a1"};
      d.products = {{"a0", "a1", {}}};
      d.inners = {{"a0", "a1", q(0)}};
      break;
    case Type::T3A:
      d.polygon = 3;
      d.basis = {"a-1", "a0", "a1", "u_rho"};
      d.products = {
          {"a0", "a1", sc(q(1, 32), {{"a0", 2}, {"a1", 2}, {"a-1", 1}}) + sc(q(-135, 2048), {{"u_rho", 1}})},
          {"a0", "u_rho", sc(q(1, 9), {{"a0", 2}, {"a1", -1}, {"a-1", -1}}) + sc(q(5, 32), {{"u_rho", 1}})},
          {"u_rho", "u_rho", sc(q(1), {{"u_rho", 1}})}};
      d.inners = {{"a0", "a1", q(13, 256)}, {"a0", "u_rho", q(1, 4)}, {"u_rho", "u_rho", q(8, 5)}};
      break;
    case Type::T3C:
      d.polygon = 3;
      d.basis = {"a-1", "a0", "a1"};
      d.products = {{"a0", "a1", sc(q(1, 64), {{"a0", 1}, {"a1", 1}, {"a-1", -1}})}};
      d.inners = {{"a0", "a1", q(1, 64)}};
      break;
    case Type::T4A:
      d.polygon = 4;
      d.basis = {"a-1", "a0", "a1", "a2", "v_rho"};
      d.products = {
          {"a0", "a1", sc(q(1, 64), {{"a0", 3}, {"a1", 3}, {"a2", 1}, {"a-1", 1}, {"v_rho", -3}})},
          {"a0", "v_rho", sc(q(1, 16), {{"a0", 5}, {"a1", -2}, {"a2", -1}, {"a-1", -2}, {"v_rho", 3}})},
          {"v_rho", "v_rho", sc(q(1), {{"v_rho", 1}})},
          {"a0", "a2", {}}};
      d.inners = {{"a0", "a1", q(1, 32)}, {"a0", "a2", q(0)}, {"a0", "v_rho", q(3, 8)}, {"v_rho", "v_rho", q(2)}};
      d.embeddings = {{Type::T2B, {{"a0", "a0"}, {"a1", "a2"}}}};
      break;
    case Type::T4B:
      d.polygon = 4;
      d.basis = {"a-1", "a0", "a1", "a2", "a_rho2"};
      d.products = {{"a0", "a1", sc(q(1, 64), {{"a0", 1}, {"a1", 1}, {"a-1", -1}, {"a2", -1}, {"a_rho2", 1}})},
                    {"a0", "a2", sc(q(1, 8), {{"a0", 1}, {"a2", 1}, {"a_rho2", -1}})}};
      d.inners = {{"a0", "a1", q(1, 64)}, {"a0", "a2", q(1, 8)}, {"a0", "a_rho2", q(1, 8)}};
      d.embeddings = {{Type::T2A, {{"a0", "a0"}, {"a1", "a2"}, {"a_rho", "a_rho2"}}}};
      break;
    case Type::T5A:
      d.polygon = 5;
      d.basis = {"a-2", "a-1", "a0", "a1", "a2", "w_rho"};
      d.products = {
          {"a0", "a1", sc(q(1, 128), {{"a0", 3}, {"a1", 3}, {"a2", -1}, {"a-1", -1}, {"a-2", -1}}) + sc(q(1), {{"w_rho", 1}})},
          {"a0", "a2", sc(q(1, 128), {{"a0", 3}, {"a2", 3}, {"a1", -1}, {"a-1", -1}, {"a-2", -1}}) + sc(q(-1), {{"w_rho", 1}})},
          {"a0", "w_rho", sc(q(7, 4096), {{"a1", 1}, {"a-1", 1}, {"a2", -1}, {"a-2", -1}}) + sc(q(7, 32), {{"w_rho", 1}})},
          {"w_rho", "w_rho", sc(q(175, 1 << 19), {{"a-2", 1}, {"a-1", 1}, {"a0", 1}, {"a1", 1}, {"a2", 1}})}};
      d.inners = {{"a0", "a1", q(3, 128)}, {"a0", "w_rho", q(0)}, {"w_rho", "w_rho", q(875, 1 << 19)}};
      break;
    case Type::T6A:
      d.polygon = 6;
      d.basis = {"a-2", "a-1", "a0", "a1", "a2", "a3", "a_rho3", "u_rho2"};
      d.products = {
          {"a0", "a1",
           sc(q(1, 64), {{"a0", 1}, {"a1", 1}, {"a-2", -1}, {"a-1", -1}, {"a2", -1}, {"a3", -1}, {"a_rho3", 1}}) +
               sc(q(45, 2048), {{"u_rho2", 1}})},
          {"a0", "a2", sc(q(1, 32), {{"a0", 2}, {"a2", 2}, {"a-2", 1}}) + sc(q(-135, 2048), {{"u_rho2", 1}})},
          {"a0", "u_rho2", sc(q(1, 9), {{"a0", 2}, {"a2", -1}, {"a-2", -1}}) + sc(q(5, 32), {{"u_rho2", 1}})},
          {"a0", "a3", sc(q(1, 8), {{"a0", 1}, {"a3", 1}, {"a_rho3", -1}})},
          {"a_rho3", "u_rho2", {}}};
      d.inners = {{"a_rho3", "u_rho2", q(0)}, {"a0", "a1", q(5, 256)}, {"a0", "a2", q(13, 256)}, {"a0", "a3", q(1, 8)}};
      d.embeddings = {{Type::T3A, {{"a-1", "a-2"}, {"a0", "a0"}, {"a1", "a2"}, {"u_rho", "u_rho2"}}},
                      {Type::T2A, {{"a0", "a0"}, {"a1", "a3"}, {"a_rho", "a_rho3"}}}};
      break;
  }
  return d;
}

bool is_polygon_axis(const std::string& label) {
  return label.size() >= 2 && label[0] == 'a' && (label[1] == '-' || std::isdigit(static_cast<unsigned char>(label[1])));
}

bool is_axis_label(const std::string& label) { return label[0] == 'a'; }

int residue(const std::string& label, int n) {
  const int i = std::stoi(label.substr(1));
  return ((i % n) + n) % n;
}

/// A signed permutation of basis positions.
struct SignedPerm {
  std::vector<std::size_t> image;
  std::vector<int> sign;
};

std::vector<SignedPerm> relabelings(const TypeData& d, const BuildOptions& opts) {
  const int n = d.polygon;
  std::map<int, std::size_t> pos_of_residue;
  for (std::size_t p = 0; p < d.basis.size(); ++p)
    if (is_polygon_axis(d.basis[p])) pos_of_residue[residue(d.basis[p], n)] = p;
  const std::vector<std::function<int(int)>> maps = {
      [n](int i) { return ((-i) % n + n) % n; },
      [n](int i) { return ((2 - i) % n + n) % n; },
      [n](int i) { return ((1 - i) % n + n) % n; },
  };
  std::vector<SignedPerm> out;
  for (std::size_t m = 0; m < maps.size(); ++m) {
    SignedPerm g{std::vector<std::size_t>(d.basis.size()), std::vector<int>(d.basis.size(), 1)};
    for (std::size_t p = 0; p < d.basis.size(); ++p) {
      const auto& label = d.basis[p];
      if (is_polygon_axis(label)) {
        g.image[p] = pos_of_residue.at(maps[m](residue(label, n)));
      } else {
        g.image[p] = p;
        if (m == 2) {
          auto it = opts.swap_signs.find(label);
          if (it != opts.swap_signs.end()) g.sign[p] = it->second;
        }
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

Vector apply(const SignedPerm& g, const Vector& v) {
  Vector w(v.size());
  for (std::size_t p = 0; p < v.size(); ++p) w[g.image[p]] += Rational(g.sign[p]) * v[p];
  return w;
}

/// Partially filled symmetric tables with conflict detection.
class Completion {
 public:
  Completion(Type t, std::vector<std::string> labels)
      : type_(t), labels_(std::move(labels)), n_(labels_.size()), mult_(n_ * n_), gram_(n_ * n_) {}

  std::size_t pos(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw ConstructionError(std::string(name(type_)) + ": unknown basis label " + label);
    return static_cast<std::size_t>(it - labels_.begin());
  }

  Vector vec(const Terms& terms) const {
    Vector v(n_);
    for (const auto& [label, c] : terms) v[pos(label)] += c;
    return v;
  }

  bool set_product(std::size_t i, std::size_t j, const Vector& v, const std::string& source) {
    return set(mult_, i, j, v, "product", source);
  }
  bool set_inner(std::size_t i, std::size_t j, const Rational& r, const std::string& source) {
    return set(gram_, i, j, r, "inner product", source);
  }

  const std::optional<Vector>& product(std::size_t i, std::size_t j) const { return mult_[i * n_ + j]; }
  const std::optional<Rational>& inner(std::size_t i, std::size_t j) const { return gram_[i * n_ + j]; }
  std::size_t size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  template <class T>
  bool set(std::vector<std::optional<T>>& table, std::size_t i, std::size_t j, const T& v, const char* what,
           const std::string& source) {
    auto& slot = table[i * n_ + j];
    if (slot) {
      if (!(*slot == v))
        throw ConstructionError(std::string(name(type_)) + ": " + what + " of " + labels_[i] + " and " + labels_[j] +
                                " derived by " + source + " conflicts with an earlier entry");
      return false;
    }
    slot = v;
    table[j * n_ + i] = v;
    return true;
  }

  Type type_;
  std::vector<std::string> labels_;
  std::size_t n_;
  std::vector<std::optional<Vector>> mult_;
  std::vector<std::optional<Rational>> gram_;
};

/// Fills the unknown inner products from (e_i e_j, e_k) = (e_i, e_j e_k).
void solve_inner_products(Completion& c, Type t) {
  const std::size_t n = c.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> var;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (!c.inner(i, j)) var.emplace(std::make_pair(i, j), var.size());
  if (var.empty()) return;

  std::vector<std::vector<Rational>> rows;
  auto add_term = [&](std::vector<Rational>& row, std::size_t i, std::size_t j, const Rational& coef) {
    if (coef == 0) return;
    if (const auto& known = c.inner(i, j)) {
      row.back() -= coef * *known;
    } else {
      row[var.at({std::min(i, j), std::max(i, j)})] += coef;
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> row(var.size() + 1);
        const Vector& left = *c.product(i, j);
        const Vector& right = *c.product(j, k);
        for (std::size_t m = 0; m < n; ++m) {
          add_term(row, m, k, left[m]);
          add_term(row, i, m, -right[m]);
        }
        if (std::any_of(row.begin(), row.end(), [](const Rational& r) { return r != 0; })) rows.push_back(row);
      }
  Matrix aug(rows.size(), var.size() + 1);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k <= var.size(); ++k) aug(r, k) = rows[r][k];
  const auto ech = qlin::row_reduce(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == var.size())
    throw ConstructionError(std::string(name(t)) + ": associativity of the form is inconsistent with the table");
  if (ech.pivots.size() != var.size())
    throw ConstructionError(std::string(name(t)) + ": some inner products remain underdetermined");
  for (const auto& [ij, v] : var) c.set_inner(ij.first, ij.second, ech.rref(v, var.size()), "associativity");
}

}  // namespace

const std::array<Type, 9>& all_types() {
  static const std::array<Type, 9> types{Type::T1A, Type::T2A, Type::T2B, Type::T3A, Type::T3C,
                                         Type::T4A, Type::T4B, Type::T5A, Type::T6A};
  return types;
}

std::string_view name(Type t) {
  static const std::array<std::string_view, 9> names{"1A", "2A", "2B", "3A", "3C", "4A", "4B", "5A", "6A"};
  return names[static_cast<std::size_t>(t)];
}

Type parse_type(std::string_view s) {
  std::string up(s);
  for (auto& ch : up) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (Type t : all_types())
    if (name(t) == up) return t;
  throw std::invalid_argument("unknown dihedral type: " + std::string(s));
}

std::size_t dimension(Type t) {
  static const std::array<std::size_t, 9> dims{1, 3, 2, 4, 3, 5, 5, 6, 8};
  return dims[static_cast<std::size_t>(t)];
}

DihedralAlgebra::DihedralAlgebra(Type t, std::vector<BasisLabel> basis, std::vector<std::vector<Vector>> mult,
                                 Matrix gram)
    : type_(t), basis_(std::move(basis)), mult_(std::move(mult)), gram_(std::move(gram)) {}

std::size_t DihedralAlgebra::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == label) return i;
  throw std::out_of_range("no basis vector " + std::string(label) + " in type " + std::string(name(type_)));
}

Vector DihedralAlgebra::e(std::string_view label) const { return Vector::unit(dim(), index_of(label)); }

std::vector<std::string> DihedralAlgebra::axis_labels() const {
  std::vector<std::string> out;
  for (const auto& b : basis_)
    if (b.axis) out.push_back(b.name);
  return out;
}

Vector DihedralAlgebra::product(const Vector& u, const Vector& v) const {
  if (u.size() != dim() || v.size() != dim()) throw qlin::DimensionError("vector length does not match the algebra");
  Vector w(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (v[j] == 0) continue;
      const Rational c = u[i] * v[j];
      const Vector& t = mult_[i][j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (t[k] != 0) w[k] += c * t[k];
    }
  }
  return w;
}

Rational DihedralAlgebra::inner(const Vector& u, const Vector& v) const {
  if (u.size() != dim() || v.size() != dim()) throw qlin::DimensionError("vector length does not match the algebra");
  return qlin::dot(u, gram_ * v);
}

Matrix DihedralAlgebra::ad(const Vector& u) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(product(u, Vector::unit(dim(), j)));
  return Matrix::from_columns(cols);
}

DihedralAlgebra build(Type t, const BuildOptions& opts) {
  const TypeData d = type_data(t);
  Completion c(t, d.basis);
  const std::size_t n = d.basis.size();

  for (std::size_t i = 0; i < n; ++i) {
    if (!is_axis_label(d.basis[i])) continue;
    c.set_product(i, i, Vector::unit(n, i), "idempotence");
    c.set_inner(i, i, Rational(1), "unit length");
  }
  for (const auto& p : d.products) c.set_product(c.pos(p.x), c.pos(p.y), c.vec(p.value), "the printed table");
  for (const auto& p : d.inners) c.set_inner(c.pos(p.x), c.pos(p.y), p.value, "the printed table");

  for (const auto& emb : d.embeddings) {
    const DihedralAlgebra sub = build(emb.sub);
    const std::string source = "the " + std::string(name(emb.sub)) + " subalgebra";
    std::vector<std::size_t> to(sub.dim());
    for (std::size_t k = 0; k < sub.dim(); ++k) to[k] = c.pos(emb.labels.at(sub.basis()[k].name));
    for (std::size_t i = 0; i < sub.dim(); ++i)
      for (std::size_t j = i; j < sub.dim(); ++j) {
        Vector v(n);
        for (std::size_t k = 0; k < sub.dim(); ++k) v[to[k]] = sub.table(i, j)[k];
        c.set_product(to[i], to[j], v, source);
        c.set_inner(to[i], to[j], sub.gram()(i, j), source);
      }
  }

  const auto maps = relabelings(d, opts);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& g : maps)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          const Rational s(g.sign[i] * g.sign[j]);
          if (const auto& v = c.product(i, j))
            changed |= c.set_product(g.image[i], g.image[j], s * apply(g, *v), "relabeling");
          if (const auto& r = c.inner(i, j)) changed |= c.set_inner(g.image[i], g.image[j], s * *r, "relabeling");
        }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!c.product(i, j))
        throw ConstructionError(std::string(name(t)) + ": product of " + d.basis[i] + " and " + d.basis[j] +
                                " is not determined");
  solve_inner_products(c, t);

  std::vector<BasisLabel> basis;
  for (const auto& l : d.basis) basis.push_back({l, is_axis_label(l)});
  std::vector<std::vector<Vector>> mult(n, std::vector<Vector>(n));
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mult[i][j] = *c.product(i, j);
      gram(i, j) = *c.inner(i, j);
    }
  DihedralAlgebra a(t, std::move(basis), std::move(mult), std::move(gram));
  const auto m1 = check_m1(a);
  if (!m1.ok()) throw ConstructionError(std::string(name(t)) + ": completed table violates M1: " + m1.violations.front());
  return a;
}

const std::array<Rational, 4>& axis_eigenvalues() {
  static const std::array<Rational, 4> ev{q(1), q(0), q(1, 4), q(1, 32)};
  return ev;
}

std::vector<Eigenspace> ad_spectrum(const DihedralAlgebra& a, std::string_view axis) {
  const std::size_t ai = a.index_of(axis);
  if (!a.basis()[ai].axis) throw std::invalid_argument(std::string(axis) + " is not an axis");
  const Vector x = Vector::unit(a.dim(), ai);
  const Matrix m = a.ad(x);
  std::vector<Eigenspace> out;
  std::size_t total = 0;
  for (const auto& lambda : axis_eigenvalues()) {
    auto basis = qlin::eigenspace(m, lambda);
    total += basis.size();
    if (!basis.empty()) out.push_back({lambda, std::move(basis)});
  }
  if (total != a.dim())
    throw AxiomViolation(std::string(name(a.type())) + ": ad(" + std::string(axis) +
                         ") is not diagonalizable with eigenvalues 1, 0, 1/4, 1/32");
  const auto& ones = out.front();
  if (ones.value != 1 || ones.basis.size() != 1)
    throw AxiomViolation(std::string(name(a.type())) + ": 1-eigenspace of " + std::string(axis) + " is not 1-dimensional");
  const Vector& v = ones.basis.front();
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (k != ai && v[k] != 0)
      throw AxiomViolation(std::string(name(a.type())) + ": 1-eigenspace of " + std::string(axis) +
                           " is not spanned by the axis");
  return out;
}

std::vector<Rational> fusion_rule(const Rational& mu, const Rational& nu) {
  const Rational one = 1, zero = 0, quarter = q(1, 4), small = q(1, 32);
  auto rank = [&](const Rational& r) -> int {
    if (r == one) return 0;
    if (r == zero) return 1;
    if (r == quarter) return 2;
    if (r == small) return 3;
    throw std::invalid_argument("not an axis eigenvalue: " + qlin::to_string(r));
  };
  static const std::vector<std::vector<std::vector<int>>> table = {
      {{0}, {}, {2}, {3}},
      {{}, {1}, {2}, {3}},
      {{2}, {2}, {0, 1}, {3}},
      {{3}, {3}, {3}, {0, 1, 2}},
  };
  std::vector<Rational> out;
  for (int k : table[rank(mu)][rank(nu)]) out.push_back(axis_eigenvalues()[k]);
  return out;
}

namespace {

struct EigenBasis {
  std::vector<Vector> vectors;
  std::vector<Rational> values;
  Matrix p, p_inv;
};

EigenBasis eigen_basis(const DihedralAlgebra& a, std::string_view axis) {
  EigenBasis eb;
  for (const auto& es : ad_spectrum(a, axis))
    for (const auto& v : es.basis) {
      eb.vectors.push_back(v);
      eb.values.push_back(es.value);
    }
  eb.p = Matrix::from_columns(eb.vectors);
  eb.p_inv = qlin::inverse(eb.p);
  return eb;
}

Matrix signed_conjugate(const EigenBasis& eb, const Rational& negated) {
  Matrix d = Matrix::identity(eb.values.size());
  for (std::size_t k = 0; k < eb.values.size(); ++k)
    if (eb.values[k] == negated) d(k, k) = -1;
  return eb.p * d * eb.p_inv;
}

std::string prefix(const DihedralAlgebra& a, std::string_view what) {
  return std::string(name(a.type())) + " " + std::string(what) + ": ";
}

}  // namespace

CheckReport check_fusion(const DihedralAlgebra& a, std::string_view axis) {
  CheckReport r{"fusion(" + std::string(axis) + ")", {}};
  const EigenBasis eb = eigen_basis(a, axis);
  const std::size_t n = eb.vectors.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const auto allowed = fusion_rule(eb.values[i], eb.values[j]);
      const Vector coords = eb.p_inv * a.product(eb.vectors[i], eb.vectors[j]);
      for (std::size_t k = 0; k < n; ++k) {
        if (coords[k] == 0) continue;
        if (std::find(allowed.begin(), allowed.end(), eb.values[k]) == allowed.end())
          r.violations.push_back(prefix(a, "fusion") + "product of a " + qlin::to_string(eb.values[i]) + "- and a " +
                                 qlin::to_string(eb.values[j]) + "-eigenvector of " + std::string(axis) +
                                 " has a " + qlin::to_string(eb.values[k]) + "-component");
      }
    }
  return r;
}

CheckReport check_m1(const DihedralAlgebra& a) {
  CheckReport r{"m1", {}};
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational left = qlin::dot(a.table(i, j), a.gram() * Vector::unit(n, k));
        const Rational right = qlin::dot(a.gram() * Vector::unit(n, i), a.table(j, k));
        if (left != right)
          r.violations.push_back(prefix(a, "m1") + "(" + a.basis()[i].name + "*" + a.basis()[j].name + ", " +
                                 a.basis()[k].name + ") = " + qlin::to_string(left) + " but (" + a.basis()[i].name +
                                 ", " + a.basis()[j].name + "*" + a.basis()[k].name + ") = " + qlin::to_string(right));
      }
  return r;
}

Matrix miyamoto_tau(const DihedralAlgebra& a, std::string_view axis) {
  return signed_conjugate(eigen_basis(a, axis), q(1, 32));
}

CheckReport check_miyamoto(const DihedralAlgebra& a, std::string_view axis) {
  CheckReport r{"miyamoto(" + std::string(axis) + ")", {}};
  const EigenBasis eb = eigen_basis(a, axis);
  const std::size_t n = a.dim();
  const Matrix tau = signed_conjugate(eb, q(1, 32));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Vector ei = Vector::unit(n, i), ej = Vector::unit(n, j);
      if (a.product(tau * ei, tau * ej) != tau * a.table(i, j))
        r.violations.push_back(prefix(a, "tau") + "does not preserve " + a.basis()[i].name + "*" + a.basis()[j].name);
    }
  if (tau.transpose() * a.gram() * tau != a.gram()) r.violations.push_back(prefix(a, "tau") + "does not preserve the form");

  const Matrix sigma = signed_conjugate(eb, q(1, 4));
  std::vector<Vector> fixed;
  for (std::size_t k = 0; k < eb.vectors.size(); ++k)
    if (eb.values[k] != q(1, 32)) fixed.push_back(eb.vectors[k]);
  for (std::size_t i = 0; i < fixed.size(); ++i)
    for (std::size_t j = i; j < fixed.size(); ++j) {
      const Vector uv = a.product(fixed[i], fixed[j]);
      if (tau * uv != uv) r.violations.push_back(prefix(a, "sigma") + "tau-fixed subspace is not closed");
      if (a.product(sigma * fixed[i], sigma * fixed[j]) != sigma * uv)
        r.violations.push_back(prefix(a, "sigma") + "does not preserve a product on the tau-fixed subspace");
      if (a.inner(sigma * fixed[i], sigma * fixed[j]) != a.inner(fixed[i], fixed[j]))
        r.violations.push_back(prefix(a, "sigma") + "does not preserve the form on the tau-fixed subspace");
    }
  return r;
}

CheckReport check_inclusion(const DihedralAlgebra& a) {
  const TypeData d = type_data(a.type());
  if (d.embeddings.empty())
    throw std::invalid_argument("inclusion rules apply to 4A, 4B and 6A, not " + std::string(name(a.type())));
  CheckReport r{"inclusion", {}};
  for (const auto& emb : d.embeddings) {
    const DihedralAlgebra sub = build(emb.sub);
    std::vector<std::size_t> to(sub.dim());
    for (std::size_t k = 0; k < sub.dim(); ++k) to[k] = a.index_of(emb.labels.at(sub.basis()[k].name));
    for (std::size_t i = 0; i < sub.dim(); ++i)
      for (std::size_t j = i; j < sub.dim(); ++j) {
        Vector expect(a.dim());
        for (std::size_t k = 0; k < sub.dim(); ++k) expect[to[k]] = sub.table(i, j)[k];
        const std::string pair = a.basis()[to[i]].name + "*" + a.basis()[to[j]].name;
        if (a.table(to[i], to[j]) != expect)
          r.violations.push_back(prefix(a, "inclusion") + pair + " differs from the " + std::string(name(emb.sub)) +
                                 " table");
        if (a.gram()(to[i], to[j]) != sub.gram()(i, j))
          r.violations.push_back(prefix(a, "inclusion") + "inner product for " + pair + " differs from the " +
                                 std::string(name(emb.sub)) + " table");
      }
  }
  return r;
}

std::vector<Matrix> symmetry_maps(const DihedralAlgebra& a) {
  std::vector<Matrix> out;
  for (const auto& g : relabelings(type_data(a.type()), {})) {
    Matrix m(a.dim(), a.dim());
    for (std::size_t p = 0; p < a.dim(); ++p) m(g.image[p], p) = g.sign[p];
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<CheckReport> verify_all(const DihedralAlgebra& a) {
  std::vector<CheckReport> out;
  CheckReport m3{"m3", {}};
  for (const auto& label : a.axis_labels()) {
    const Vector x = a.e(label);
    if (a.product(x, x) != x) m3.violations.push_back(prefix(a, "m3") + label + " is not idempotent");
    if (a.inner(x, x) != 1) m3.violations.push_back(prefix(a, "m3") + label + " does not have length 1");
  }
  out.push_back(std::move(m3));
  out.push_back(check_m1(a));
  CheckReport psd{"psd", {}};
  if (!qlin::is_psd(a.gram())) psd.violations.push_back(prefix(a, "psd") + "Gram matrix is not positive semidefinite");
  out.push_back(std::move(psd));
  for (const auto& label : a.axis_labels()) {
    try {
      out.push_back(check_fusion(a, label));
      out.push_back(check_miyamoto(a, label));
    } catch (const AxiomViolation& e) {
      out.push_back({"spectrum(" + label + ")", {e.what()}});
    }
  }
  if (!type_data(a.type()).embeddings.empty()) out.push_back(check_inclusion(a));
  return out;
}

std::string format(const DihedralAlgebra& a, const Vector& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    Rational c = v[k];
    if (s.empty()) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (c != 1) s += qlin::to_string(c) + "*";
    s += a.basis()[k].name;
  }
  return s.empty() ? "0" : s;
}

std::string to_json(const DihedralAlgebra& a) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["type"] = name(a.type());
  j["dimension"] = a.dim();
  ordered_json basis = ordered_json::array();
  for (const auto& b : a.basis()) basis.push_back({{"label", b.name}, {"axis", b.axis}});
  j["basis"] = basis;
  ordered_json products = ordered_json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = i; k < a.dim(); ++k) {
      ordered_json coeffs = ordered_json::object();
      for (std::size_t m = 0; m < a.dim(); ++m)
        if (a.table(i, k)[m] != 0) coeffs[a.basis()[m].name] = qlin::to_string(a.table(i, k)[m]);
      products.push_back({{"left", a.basis()[i].name}, {"right", a.basis()[k].name}, {"value", coeffs}});
    }
  j["products"] = products;
  ordered_json gram = ordered_json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(qlin::to_string(a.gram()(i, k)));
    gram.push_back(row);
  }
  j["gram"] = gram;
  return j.dump(2) + "\n";
}

}  // namespace tpg::dihedral

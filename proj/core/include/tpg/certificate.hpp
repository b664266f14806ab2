#pragma once

// Obstruction certificates: self-contained evidence that a triangle-point
// configuration admits no Majorana representation, checkable without the
// search code that produced it.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tpg/axial.hpp"

namespace tpg::axial {

class CertificateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One step of a T-membership derivation. Arguments refer to earlier steps.
struct DerivationStep {
  Perm element;
  Provenance::Rule rule = Provenance::Rule::Seed;
  std::string seed;               // Seed
  std::vector<std::size_t> args;  // Conjugate: {of}; Cube: {t, s}
  fp::Gen letter = fp::Gen::A;    // Conjugate
  /// A word in a, b, c for the element.
  std::string word;
};

/// An element claimed to lie in every admissible T, with its derivation.
struct Member {
  Perm element;
  std::size_t step = 0;
};

/// One admissible choice of K cap T and the reason it fails.
struct Branch {
  enum class Refutation { Klein, M1 };
  /// Involutions of K added to the forced ones (a union of K-classes).
  std::vector<Perm> extra;
  Refutation by = Refutation::M1;
  /// Klein: generators of a 2^3 inside the branch set.
  std::array<Perm, 3> klein;
  /// M1: the triple (i, j, k), the types of (i, j) and (j, k), and
  /// (a_i . a_j, a_k) and (a_i, a_j . a_k).
  std::array<Perm, 3> triple;
  std::string type_ij, type_jk;
  Rational left, right;
};

struct ObstructionCertificate {
  enum class Kind { Klein, M1Audit };
  std::string group;
  Kind kind = Kind::Klein;
  std::size_t degree = 0;
  std::size_t order = 0;
  std::array<Perm, 3> generators;
  std::vector<DerivationStep> derivation;
  /// Klein: the three generators of the 2^3; M1Audit: generators of K.
  std::vector<Perm> subgroup;
  /// Klein: the seven involutions; M1Audit: K cap T for the minimal T.
  std::vector<Member> members;
  /// M1Audit only.
  std::vector<Branch> branches;
};

/// Klein search on cfg; failing that, every subgroup isomorphic to 2 x D8 is
/// tried with each K-stable choice of K cap T containing the forced
/// involutions. The certificate is verified before it is returned.
std::optional<ObstructionCertificate> obstruct(const TConfig& cfg, std::string group_name);

struct VerifyReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Re-derives every T-membership and recomputes every rational from the raw
/// permutations, independently of the search code.
VerifyReport verify_certificate(const ObstructionCertificate& cert);

std::string certificate_to_json(const ObstructionCertificate& cert);
/// Throws CertificateFormatError on malformed input.
ObstructionCertificate certificate_from_json(std::string_view text);

}  // namespace tpg::axial

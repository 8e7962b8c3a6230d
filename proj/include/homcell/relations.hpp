#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "homcell/stanley.hpp"

namespace homcell {

// Witness against Y > X: the least degree where the support inclusion of
// the acyclicity criterion fails, with the smallest failing prime.
struct DegreeObstruction {
  int degree;
  Int prime;
  friend bool operator==(const DegreeObstruction&,
                         const DegreeObstruction&) = default;
};

using Obstruction = std::variant<DegreeObstruction, ModuleObstruction>;

struct AcyclicResult {
  bool acyclic;
  std::optional<DegreeObstruction> obstruction;
};

// Exact: Y > (+) gens iff every Supp(H_k Y) lies in the support of the
// homology of the generators in degrees <= k.
AcyclicResult acyclic_over(const Object& y, const std::vector<Object>& gens);

// Machine-checkable evidence for a Yes verdict. Each variant re-verifies
// from scratch through verify_certificate.
namespace cert {
// Surjection m^t -> n in normal-form coordinates (module case).
struct ModuleEpi {
  std::size_t t;
  IntMatrix matrix;
};
// A chain map x -> y epimorphic on all homology.
struct HomEpi {
  ChainMap f;
};
// Supp(H_k Y) inside Supp(+) H_{i<=k-1} X) for all k: Y is the suspension
// of an X-acyclic object.
struct ShiftedSupportEntry {
  int degree;
  SuppSet supp_y;
  SuppSet supp_x_below;
};
struct ShiftedSupport {
  std::vector<ShiftedSupportEntry> entries;
};
// Y is (up to isomorphism) Sigma^k H_k X.
struct HomologyPiece {
  int degree;
};
}  // namespace cert

using CellCertificate = std::variant<cert::ModuleEpi, cert::HomEpi,
                                     cert::ShiftedSupport, cert::HomologyPiece>;

struct Verdict {
  enum class Kind { Yes, No, Unknown };
  Kind kind;
  std::optional<CellCertificate> certificate;  // Yes
  std::optional<Obstruction> obstruction;      // No
  std::vector<std::string> rules_tried;        // Unknown

  bool is_yes() const { return kind == Kind::Yes; }
  bool is_no() const { return kind == Kind::No; }
  bool is_unknown() const { return kind == Kind::Unknown; }
};

// Sound trichotomy for Y >> X. Rules, in order: acyclicity (necessary),
// exact module case, homology-epi hint, shifted support, homology piece.
Verdict cellular_decide(const Object& y, const Object& x,
                        const std::optional<ChainMap>& hint = std::nullopt);

// Re-checks a certificate against the two objects, independently of the
// decision pipeline.
bool verify_certificate(const CellCertificate& certificate, const Object& y,
                        const Object& x);

// Cor. "mono on homology implies source acyclic over target": when every
// H_k(f) is injective returns the criterion's evaluation (which must be
// true; false exposes an engine bug), nullopt when the hypothesis fails.
std::optional<bool> hom_mono_acyclic(const ChainMap& f);

}  // namespace homcell

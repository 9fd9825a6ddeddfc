#pragma once

#include "vaisman/hermitian/vaisman.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vaisman::classify {

using exact::Integer;
using exact::Matrix;
using exact::Rational;
using liealg::LieAlgebra;

enum class Family { RxH3, RsH3, RxH5, RsDrH5, RxS5, RsD0S5 };

struct FamilyTag {
  Family family = Family::RxH5;
  /// Only used by R x|_{D_r} h5, in [0, 1].
  Rational r = 0;
  bool operator==(const FamilyTag& o) const { return family == o.family && (family != Family::RsDrH5 || r == o.r); }
};

/// "R x h5", "R x|_{D_1/2} h5", ...
std::string name(const FamilyTag& t);
/// Accepts the names produced by name(), plus "R x|_{D_r} h5" shorthands such as "Dr:1/2".
FamilyTag parse_family(const std::string& s);

struct FamilyMember {
  FamilyTag tag;
  hermitian::KahlerFlatPackage package;
  hermitian::HermitianData structure;
};

/// The catalogue algebra with its Vaisman structure, built from a Kahler flat
/// package. Throws std::invalid_argument for r outside [0, 1].
FamilyMember build_family(const FamilyTag& t);

/// The dim-6 tags on an r-grid: R x h5, R x s5, R x|_{D_0} s5 and R x|_{D_r} h5 for each r.
std::vector<FamilyTag> dim6_catalogue(const std::vector<Rational>& r_grid);

/// Eigenvalue pattern of the induced action of g/n on n/n' (codimension one only).
struct SpectrumSignature {
  std::size_t zero = 0;
  /// Conjugate pairs +-i c with c != 0.
  std::size_t imaginary_pairs = 0;
  /// Eigenvalues off the imaginary axis.
  std::size_t other = 0;
  bool operator==(const SpectrumSignature& o) const = default;
};

struct IsoInvariant {
  std::size_t dim = 0;
  bool nilpotent = false;
  std::size_t nilradical_dim = 0;
  std::optional<std::pair<std::size_t, std::size_t>> profile;
  std::size_t center_dim = 0;
  /// Normalized rotation speeds of g/n on n/n' when they are rational.
  std::optional<std::vector<Integer>> speeds;
  std::optional<SpectrumSignature> spectrum;
  bool operator==(const IsoInvariant& o) const = default;
};

/// Throws std::invalid_argument for non-solvable input.
IsoInvariant iso_invariant(const LieAlgebra& g);

/// Names of the components in which a and b differ.
std::vector<std::string> separating_components(const IsoInvariant& a, const IsoInvariant& b);

/// P with build_family(from).g.change_basis(P) == build_family(to).g, for the
/// pairs where an explicit isomorphism is known (R x|_{D_0} s5 and R x|_{D_0} h5).
std::optional<Matrix> explicit_isomorphism(const FamilyTag& from, const FamilyTag& to);

struct PairSeparation {
  FamilyTag a, b;
  std::vector<std::string> components;
  std::optional<Matrix> isomorphism;
};

struct SeparationReport {
  std::vector<FamilyTag> tags;
  std::vector<IsoInvariant> invariants;
  std::vector<PairSeparation> pairs;
  /// Every pair separated by at least one component.
  bool all_separated = true;
  /// Families whose nilradical profile equals the package prediction.
  bool profiles_match_prediction = true;
};

SeparationReport separate(const std::vector<FamilyTag>& tags);

struct Classification {
  IsoInvariant invariant;
  bool unimodular = false;
  bool solvable = false;
  /// Catalogue tags with the same invariant; empty means outside the catalogue.
  std::vector<FamilyTag> matches;
};

/// Compares against the dim-4 or dim-6 catalogue (with r read off the speeds).
Classification classify(const LieAlgebra& g);

}  // namespace vaisman::classify

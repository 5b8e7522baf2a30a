#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "slicekit/integer_matrix.hpp"

namespace slicekit {

/// Free rank plus torsion invariant factors d_1 | d_2 | ... (each > 1).
struct InvariantFactors {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

/// Z^ngens modulo the row space of an integer relation matrix.
///
/// Elements are coordinate vectors in the chosen generators. The Smith form of
/// the relations is computed once on construction and gives a canonical
/// decomposition into cyclic summands, torsion summands first. Copies share
/// the immutable presentation data.
class FgAbGroup {
public:
  FgAbGroup();  // the zero group on no generators
  FgAbGroup(std::size_t ngens, const IntMatrix& relations);

  static FgAbGroup free(std::size_t rank);
  /// Z/n; n = 0 gives Z.
  static FgAbGroup cyclic(const Integer& n);
  /// One generator per factor, torsion first, relations diagonal.
  static FgAbGroup from_invariants(const InvariantFactors& f);
  static FgAbGroup direct_sum(const std::vector<FgAbGroup>& parts);

  std::size_t ngens() const { return d_->ngens; }
  const IntMatrix& relations() const { return d_->relations; }
  const IntLattice& relation_lattice() const { return d_->relation_lattice; }
  const InvariantFactors& invariants() const { return d_->invariants; }

  std::size_t free_rank() const { return d_->invariants.free_rank; }
  const std::vector<Integer>& torsion() const { return d_->invariants.torsion; }
  bool is_zero() const { return d_->invariants.is_zero(); }
  bool is_finite() const { return d_->invariants.free_rank == 0; }
  /// Throws std::domain_error for infinite groups.
  Integer order() const;

  /// Number of cyclic summands in the canonical decomposition.
  std::size_t canonical_rank() const { return d_->moduli.size(); }
  /// Per canonical summand: its order, or 0 for a Z summand.
  const std::vector<Integer>& canonical_moduli() const { return d_->moduli; }
  /// canonical_rank x ngens; canonical coordinates before reduction.
  const IntMatrix& to_canonical() const { return d_->to_canonical; }
  /// ngens x canonical_rank; column i generates the i-th summand.
  const IntMatrix& from_canonical() const { return d_->from_canonical; }

  /// Canonical coordinates with torsion entries reduced into [0, d).
  IntVector canonical(const IntVector& coords) const;
  IntVector lift_canonical(const IntVector& canonical_coords) const;
  /// A fixed representative of the class of coords, in the chosen generators.
  IntVector reduce(const IntVector& coords) const;

  bool contains_relation(const IntVector& coords) const;  // coords == 0 in the group
  bool equal(const IntVector& x, const IntVector& y) const;

  /// All elements as canonical-lift coordinate vectors. Finite groups only.
  std::vector<IntVector> enumerate() const;

  /// Same generator count and same relation lattice.
  bool same_presentation(const FgAbGroup& other) const;

  IntVector zero() const { return IntVector(ngens()); }
  IntVector basis_vector(std::size_t i) const;

private:
  struct Data {
    std::size_t ngens = 0;
    IntMatrix relations;
    IntLattice relation_lattice;
    InvariantFactors invariants;
    std::vector<Integer> moduli;
    IntMatrix to_canonical;
    IntMatrix from_canonical;
  };
  std::shared_ptr<const Data> d_;
};

/// An element of a fixed group, as coordinates in its chosen generators.
struct AbElement {
  FgAbGroup group;
  IntVector coords;
};

/// x == y iff x - y lies in the relation lattice. Throws std::invalid_argument
/// when the two elements do not live in the same presentation.
bool equal_elements(const AbElement& x, const AbElement& y);

/// A homomorphism given by its matrix on generators: target = matrix * source.
class AbHom {
public:
  AbHom() = default;
  /// Throws std::invalid_argument on shape mismatch and std::domain_error when
  /// some source relation is not sent into the target relation lattice.
  AbHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);
  /// Shape-checked only; for callers that establish well-definedness themselves.
  static AbHom unchecked(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

  static AbHom identity(const FgAbGroup& g);
  static AbHom zero(const FgAbGroup& source, const FgAbGroup& target);
  static AbHom scalar(const FgAbGroup& g, const Integer& k);

  const FgAbGroup& source() const { return source_; }
  const FgAbGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector apply(const IntVector& x) const { return matrix_ * x; }
  bool well_defined() const;

private:
  FgAbGroup source_;
  FgAbGroup target_;
  IntMatrix matrix_;
};

/// f after g.
AbHom compose(const AbHom& f, const AbHom& g);
AbHom add(const AbHom& f, const AbHom& g);
bool is_zero_hom(const AbHom& f);
/// Equal as homomorphisms (matrices may differ by relations).
bool equal_homs(const AbHom& f, const AbHom& g);

/// A subgroup S of an ambient group A = Z^n / L, held as the lattice
/// preimage(S) in Z^n (which contains L). The lattice basis is canonical, so
/// two subgroups of one ambient group are equal iff their preimages are.
class AbSubgroup {
public:
  AbSubgroup() = default;
  AbSubgroup(FgAbGroup ambient, const IntLattice& preimage);

  static AbSubgroup zero(const FgAbGroup& ambient);
  static AbSubgroup whole(const FgAbGroup& ambient);

  const FgAbGroup& ambient() const { return ambient_; }
  const IntLattice& preimage() const { return preimage_; }
  /// The subgroup in its own (Smith) presentation.
  const FgAbGroup& group() const { return group_; }
  const AbHom& inclusion() const { return inclusion_; }

  bool contains(const IntVector& ambient_coords) const { return preimage_.contains(ambient_coords); }
  bool contains(const AbSubgroup& other) const { return preimage_.contains(other.preimage_); }
  /// Coordinates in group() of an ambient element lying in the subgroup.
  IntVector coordinates(const IntVector& ambient_coords) const;
  /// Ambient coordinates of the subgroup generators (one per column).
  IntMatrix generator_matrix() const { return inclusion_.matrix(); }

  AbSubgroup sum(const AbSubgroup& other) const;
  AbSubgroup intersection(const AbSubgroup& other) const;

  friend bool operator==(const AbSubgroup& a, const AbSubgroup& b) {
    return a.ambient_.same_presentation(b.ambient_) && a.preimage_ == b.preimage_;
  }

private:
  FgAbGroup ambient_;
  IntLattice preimage_;
  IntMatrix preimage_to_group_;  // group coords from preimage-basis coords
  FgAbGroup group_;
  AbHom inclusion_;
};

/// The smallest subgroup containing the given elements (coordinate vectors).
AbSubgroup subgroup_generated(const FgAbGroup& a, const std::vector<IntVector>& elems);
AbSubgroup subgroup_from_inclusion(const AbHom& inclusion);

AbSubgroup kernel(const AbHom& f);
/// Kernel of several maps out of one group, i.e. of the map into their sum.
AbSubgroup joint_kernel(const FgAbGroup& source, const std::vector<AbHom>& maps);
AbSubgroup image(const AbHom& f);
/// Preimage of a subgroup of the target.
AbSubgroup preimage(const AbHom& f, const AbSubgroup& s);

struct AbQuotient {
  FgAbGroup group;
  AbHom projection;
  /// ambient coords of a chosen lift of each quotient generator (columns)
  IntMatrix lift;
};

AbQuotient quotient(const AbSubgroup& s);
/// Quotient by the image of an inclusion hom into its target.
AbQuotient quotient(const FgAbGroup& a, const AbHom& inclusion);

/// The map S -> T induced by f: A -> B on subgroups S of A and T of B.
/// Throws std::domain_error when f(S) is not inside T.
AbHom restrict_hom(const AbHom& f, const AbSubgroup& s, const AbSubgroup& t);
/// The map A/S -> B/T induced by f. Throws std::domain_error when f(S) is not inside T.
AbHom induced_hom(const AbHom& f, const AbSubgroup& s, const AbQuotient& qs,
                  const AbSubgroup& t, const AbQuotient& qt);

}  // namespace slicekit

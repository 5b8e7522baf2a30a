#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slicekit/abelian.hpp"
#include "slicekit/group.hpp"

namespace slicekit {

/// A Mackey functor for a finite group G: one abelian group per subgroup
/// (all subgroups, not just class representatives), restriction and transfer
/// for every pair K <= H, and conjugation c_g : M(H) -> M(gHg^-1) for every
/// element g and subgroup H.
///
/// Build one by giving levels, then the maps you have, then call complete():
/// missing restrictions and transfers are composed along chains, missing
/// conjugations are composed from the ones given (generators suffice), and
/// identities are filled in.
class MackeyFunctor {
public:
  MackeyFunctor() = default;
  MackeyFunctor(LatticePtr lattice, std::vector<FgAbGroup> levels);

  void set_res(int h, int k, AbHom map);
  void set_tr(int h, int k, AbHom map);
  void set_conj(int g, int h, AbHom map);
  /// Throws std::invalid_argument when some map cannot be derived.
  void complete();

  const SubgroupLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const PermGroup& group() const { return lattice_->group(); }
  std::size_t num_levels() const { return levels_.size(); }

  const FgAbGroup& level(int h) const { return levels_.at(static_cast<std::size_t>(h)); }
  /// M(H) -> M(K), K <= H
  const AbHom& res(int h, int k) const;
  /// M(K) -> M(H), K <= H
  const AbHom& tr(int h, int k) const;
  /// M(H) -> M(gHg^-1)
  const AbHom& conj(int g, int h) const;

  bool has_res(int h, int k) const { return res_[pair(h, k)].has_value(); }
  bool has_tr(int h, int k) const { return tr_[pair(h, k)].has_value(); }
  bool has_conj(int g, int h) const { return conj_[conj_slot(g, h)].has_value(); }

  bool is_zero() const;

private:
  std::size_t pair(int h, int k) const {
    return static_cast<std::size_t>(h) * levels_.size() + static_cast<std::size_t>(k);
  }
  std::size_t conj_slot(int g, int h) const {
    return static_cast<std::size_t>(g) * levels_.size() + static_cast<std::size_t>(h);
  }

  LatticePtr lattice_;
  std::vector<FgAbGroup> levels_;
  std::vector<std::optional<AbHom>> res_;
  std::vector<std::optional<AbHom>> tr_;
  std::vector<std::optional<AbHom>> conj_;
};

/// An element x in M(G/H).
struct MackeyElement {
  int subgroup = 0;
  IntVector coords;
};

// --- axioms -----------------------------------------------------------------

struct AxiomFailure {
  std::string identity;  // e.g. "double-coset"
  std::string witness;   // e.g. "H=G J=e K=e"
};

struct AxiomReport {
  std::vector<AxiomFailure> failures;
  std::size_t identities_checked = 0;

  bool passed() const { return failures.empty(); }
  std::string to_string() const;
};

/// Well-definedness of every map, transitivity and unit laws for res and tr,
/// the conjugation action (trivial on H at level H, compatible with res and
/// tr), and the double coset formula for all J, K <= H.
AxiomReport check_mackey_axioms(const MackeyFunctor& m);

// --- constructors -----------------------------------------------------------

/// Burnside functor: M(H) is the Burnside ring of H, free on H-conjugacy
/// classes of subgroups L <= H, basis ordered from [H/H] down to [H/e].
MackeyFunctor burnside_mackey(const LatticePtr& lattice);
/// Position of [H/L] in the basis of burnside_mackey level H.
std::size_t burnside_basis_position(const SubgroupLattice& lat, int h, int l);

/// Every level A, res = id, tr^H_K = [H:K], conj = id.
MackeyFunctor constant_mackey(const LatticePtr& lattice, const FgAbGroup& a);

/// Integral representation of G on Z^m given by one m x m matrix per group
/// generator. Throws std::invalid_argument when the matrices do not define an
/// action.
MackeyFunctor fixed_point_mackey(const LatticePtr& lattice, const std::vector<IntMatrix>& generator_action);

/// The action matrices for the sign of each generator (1x1), the natural
/// permutation module Z^degree, and the left regular module Z[G].
std::vector<IntMatrix> sign_action(const PermGroup& g);
std::vector<IntMatrix> natural_action(const PermGroup& g);
std::vector<IntMatrix> regular_action(const PermGroup& g);

/// burnside | constant-Z | constant-Z<n> | constant-Z/<n> | sign | regular |
/// permutation. Throws std::invalid_argument for anything else.
MackeyFunctor mackey_preset(const LatticePtr& lattice, std::string_view name);
const std::vector<std::string>& mackey_preset_names();

/// The functor over H with levels M(K) for K <= H and H's conjugations.
MackeyFunctor restrict_mackey(const MackeyFunctor& m, int h);

/// A functor for G/N pulled back to G: level H is Y(H/N) when N <= H and 0
/// otherwise. `projection` sends element indices of G to those of G/N.
MackeyFunctor inflate_mackey(const MackeyFunctor& y, const LatticePtr& lattice, int n,
                             const std::vector<int>& projection);
/// Lattice index in G/N of the image of H.
int image_in_quotient(const SubgroupLattice& lat, const SubgroupLattice& quotient_lat, int h,
                      const std::vector<int>& projection);

// --- sub-functors and quotients ---------------------------------------------

/// One subgroup per level of an ambient functor.
class SubMackey {
public:
  SubMackey() = default;
  explicit SubMackey(std::vector<AbSubgroup> levels) : levels_(std::move(levels)) {}

  static SubMackey zero(const MackeyFunctor& m);
  static SubMackey whole(const MackeyFunctor& m);

  const AbSubgroup& level(int h) const { return levels_.at(static_cast<std::size_t>(h)); }
  const std::vector<AbSubgroup>& levels() const { return levels_; }
  std::size_t num_levels() const { return levels_.size(); }

  bool contains(const SubMackey& other) const;
  bool is_zero() const;
  friend bool operator==(const SubMackey&, const SubMackey&) = default;

private:
  std::vector<AbSubgroup> levels_;
};

/// Every res, tr and conj map sends the sub-level into the target sub-level.
/// Returns the failing maps; empty means closed.
std::vector<AxiomFailure> closure_failures(const MackeyFunctor& m, const SubMackey& s);
inline bool is_closed(const MackeyFunctor& m, const SubMackey& s) { return closure_failures(m, s).empty(); }

/// Smallest sub-functor containing the elements, by closing under all maps.
SubMackey sub_mackey_generated(const MackeyFunctor& m, const std::vector<MackeyElement>& elems);

/// The sub-functor as a Mackey functor in its own right.
MackeyFunctor sub_functor(const MackeyFunctor& m, const SubMackey& s);
/// `inner` (a sub-functor of m inside `outer`) as a sub-functor of sub_functor(m, outer).
SubMackey relative_sub(const MackeyFunctor& m, const SubMackey& outer, const SubMackey& inner);

struct MackeyQuotient {
  MackeyFunctor functor;
  std::vector<AbQuotient> levels;  // per-level projections
};
/// Throws std::invalid_argument when s is not closed.
MackeyQuotient quotient_mackey_with_projection(const MackeyFunctor& m, const SubMackey& s);
MackeyFunctor quotient_mackey(const MackeyFunctor& m, const SubMackey& s);

// --- filtrations --------------------------------------------------------------

/// p/q with q > 0.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n) {}  // NOLINT: integers convert implicitly
  Rational(long long n, long long d);

  /// x <= this
  bool bounds(long long x) const { return static_cast<__int128>(x) * den <= num; }
  long long floor() const;
  std::string to_string() const;
};

/// F^k M(H) = { x in M(H) : res^H_J x = 0 for all J <= H with |J| < k }.
/// k <= 1 gives M, k > |G| gives 0.
SubMackey hill_filtration(const MackeyFunctor& m, long long k);

/// F_c M: the sub-functor generated by all of M(H) for |H| <= c.
SubMackey order_generated_filtration(const MackeyFunctor& m, const Rational& c);

/// Elements of M(H) whose restrictions to every proper subgroup vanish.
AbSubgroup reg_coh(const MackeyFunctor& m, int h);

}  // namespace slicekit

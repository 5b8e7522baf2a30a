#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slicekit/group.hpp"
#include "slicekit/mackey.hpp"

namespace slicekit {

// --- cells ------------------------------------------------------------------

/// G_+ smash_H S^{n rho_H} (regular) or G_+ smash_H S^{n rho_H - 1}.
/// H is a conjugacy class representative in `lattice`.
struct SliceCell {
  LatticePtr lattice;
  int subgroup = 0;
  long long n = 0;
  bool regular = true;

  long long dimension() const;
  std::string to_string() const;  // e.g. "G/H2 n=1 (regular, dim 2)"
};

bool operator==(const SliceCell& a, const SliceCell& b);

/// One cell per conjugacy class and valid n: regular cells with n|H| = k,
/// irregular ones with n|H| - 1 = k unless regular_only.
std::vector<SliceCell> slice_cells(const LatticePtr& lattice, long long k, bool regular_only);

/// Same H, n negated. Throws std::invalid_argument for irregular cells.
SliceCell cell_dual(const SliceCell& c);

struct FiltrationBounds {
  long long slice_degree = 0;
  /// Exact for regular cells, a lower bound (k - (|G|-1)) for irregular ones.
  long long regular_degree = 0;
  /// Regular slice degree of the suspension of the cell.
  long long suspension_regular_degree = 0;
};
FiltrationBounds filtration_bounds(const SliceCell& c);

/// G/N with its lattice, shared by the fixed-point operations.
struct QuotientData {
  int normal = 0;  // lattice index of N in G
  QuotientGroup quotient;
  LatticePtr lattice;
};
/// Throws std::invalid_argument when N is not normal.
QuotientData quotient_data(const SubgroupLattice& lat, int n);

/// Phi^N of a regular cell: (H/N, n) over G/N when N <= H, nullopt (zero)
/// otherwise. Throws std::invalid_argument for irregular cells or when the
/// cell's group is not the one q was built from.
std::optional<SliceCell> geometric_fixed_points_cell(const SliceCell& c, const QuotientData& q);
std::optional<SliceCell> geometric_fixed_points_cell(const SliceCell& c, int n);

/// ceil(m / |N|). Throws std::invalid_argument for trivial or non-normal N.
long long pullback_degree(const SubgroupLattice& lat, int n, long long m);

// --- generators -------------------------------------------------------------

/// G/H_+ smash S^k with H a class representative.
struct SphereGenerator {
  int subgroup = 0;
  long long degree = 0;
  friend bool operator==(const SphereGenerator&, const SphereGenerator&) = default;
};

struct GeneratorSet {
  /// Every (H, k) with k >= min_degree belongs; `listed` shows those up to the cap.
  long long min_degree = 0;
  std::vector<SphereGenerator> listed;
  /// The finitely many generators below min_degree.
  std::vector<SphereGenerator> negative;
};

/// Generators of the regular slice category of level -n (n >= 0): all spheres
/// of degree >= 0 and G/H_+ smash S^-k for k > 0, k|H| <= n.
GeneratorSet negative_generators(const SubgroupLattice& lat, long long n, long long display_cap = 2);
/// Generators of the level-1 regular category: spheres of degree >= 1 only.
GeneratorSet connective_generators(const SubgroupLattice& lat, long long display_cap = 2);

// --- towers -----------------------------------------------------------------

enum class TowerVariant { regular, irregular };
std::string to_string(TowerVariant v);

/// A slice tower of Sigma^shift HM as decreasing sub-functors of M. Stages are
/// stored for degrees lo..hi+1; below lo the stage is stage(lo) and above
/// hi+1 it is stage(hi+1), so slices can only be nonzero in [lo, hi].
class EMTower {
public:
  EMTower() = default;
  EMTower(MackeyFunctor base, int shift, TowerVariant variant, long long lo, std::vector<SubMackey> stages);

  const MackeyFunctor& base() const { return base_; }
  int shift() const { return shift_; }
  TowerVariant variant() const { return variant_; }
  long long lo() const { return lo_; }
  long long hi() const { return lo_ + static_cast<long long>(stages_.size()) - 2; }

  const SubMackey& stage(long long k) const;
  /// stage(k) / stage(k+1) as a Mackey functor.
  const MackeyFunctor& slice(long long k) const;
  const MackeyQuotient& slice_with_projection(long long k) const;
  /// Degrees in [lo, hi] with a nonzero slice, ascending.
  std::vector<long long> slice_degrees() const;

private:
  MackeyFunctor base_;
  int shift_ = 1;
  TowerVariant variant_ = TowerVariant::regular;
  long long lo_ = 0;
  std::vector<SubMackey> stages_;
  std::vector<MackeyQuotient> slices_;  // degrees lo..hi
  MackeyQuotient zero_slice_;
};

/// Sigma HM: stage(k) = F^k M for k in [1, |G|+1].
EMTower em_tower_plus(const MackeyFunctor& m);
/// Sigma^-1 HM: stage(n) = F_{-n} M for n in [-|G|, 0].
EMTower em_tower_minus(const MackeyFunctor& m);
/// Irregular tower of HM from the regular tower of Sigma HM: stage(n) is
/// t.stage(n+1). Throws std::invalid_argument unless t is a regular plus tower.
EMTower irregular_tower_from_regular(const EMTower& t);

/// Pull a regular tower over G/N back to G: stage(j) is the inflation of
/// y.stage(ceil(j/|N|)), so the slice at k|N| is the inflated slice at k.
/// Throws std::invalid_argument when y is not a regular tower over G/N.
EMTower pullback_tower(const EMTower& y, const LatticePtr& lattice, int n);
EMTower pullback_tower(const EMTower& y, const LatticePtr& lattice, const QuotientData& q);

/// F_{m/n} M; the filtration F^{-m} of pi_{-n} for (-n-1)-connected X.
/// Throws std::invalid_argument for n <= 0 or m < 0.
SubMackey homotopy_filtration(const MackeyFunctor& m, long long n, long long mm);

}  // namespace slicekit

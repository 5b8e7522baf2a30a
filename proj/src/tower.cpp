#include <stdexcept>

#include "slicekit/slice.hpp"

namespace slicekit {

std::string to_string(TowerVariant v) { return v == TowerVariant::regular ? "regular" : "irregular"; }

EMTower::EMTower(MackeyFunctor base, int shift, TowerVariant variant, long long lo, std::vector<SubMackey> stages)
    : base_(std::move(base)), shift_(shift), variant_(variant), lo_(lo), stages_(std::move(stages)) {
  if (stages_.empty()) throw std::invalid_argument("a tower needs at least one stage");
  for (const auto& s : stages_)
    if (s.num_levels() != base_.num_levels()) throw std::invalid_argument("stage does not match the base functor");
  for (std::size_t i = 0; i + 1 < stages_.size(); ++i) {
    const SubMackey& outer = stages_[i];
    const SubMackey& inner = stages_[i + 1];
    if (!outer.contains(inner))
      throw std::invalid_argument("tower stages must decrease (degree " + std::to_string(lo_ + static_cast<long long>(i) + 1) + ")");
    slices_.push_back(quotient_mackey_with_projection(sub_functor(base_, outer), relative_sub(base_, outer, inner)));
  }
  zero_slice_ = quotient_mackey_with_projection(base_, SubMackey::whole(base_));
}

const SubMackey& EMTower::stage(long long k) const {
  if (k <= lo_) return stages_.front();
  if (k >= lo_ + static_cast<long long>(stages_.size())) return stages_.back();
  return stages_[static_cast<std::size_t>(k - lo_)];
}

const MackeyQuotient& EMTower::slice_with_projection(long long k) const {
  if (k < lo_ || k > hi()) return zero_slice_;
  return slices_[static_cast<std::size_t>(k - lo_)];
}

const MackeyFunctor& EMTower::slice(long long k) const { return slice_with_projection(k).functor; }

std::vector<long long> EMTower::slice_degrees() const {
  std::vector<long long> out;
  for (long long k = lo_; k <= hi(); ++k)
    if (!slice(k).is_zero()) out.push_back(k);
  return out;
}

EMTower em_tower_plus(const MackeyFunctor& m) {
  const auto g = static_cast<long long>(m.group().order());
  std::vector<SubMackey> stages;
  for (long long k = 1; k <= g + 1; ++k) stages.push_back(hill_filtration(m, k));
  return EMTower(m, 1, TowerVariant::regular, 1, std::move(stages));
}

EMTower em_tower_minus(const MackeyFunctor& m) {
  const auto g = static_cast<long long>(m.group().order());
  std::vector<SubMackey> stages;
  for (long long n = -g; n <= 0; ++n) stages.push_back(order_generated_filtration(m, Rational(-n)));
  return EMTower(m, -1, TowerVariant::regular, -g, std::move(stages));
}

EMTower irregular_tower_from_regular(const EMTower& t) {
  if (t.shift() != 1 || t.variant() != TowerVariant::regular)
    throw std::invalid_argument("expected the regular tower of the suspension (shift +1)");
  std::vector<SubMackey> stages;
  for (long long k = t.lo(); k <= t.hi() + 1; ++k) stages.push_back(t.stage(k));
  return EMTower(t.base(), 0, TowerVariant::irregular, t.lo() - 1, std::move(stages));
}

EMTower pullback_tower(const EMTower& y, const LatticePtr& lattice, const QuotientData& q) {
  if (y.variant() != TowerVariant::regular) throw std::invalid_argument("pullback needs a regular tower");
  if (y.base().group().elements() != q.quotient.group.elements())
    throw std::invalid_argument("tower is not over the quotient G/N");
  const SubgroupLattice& lat = *lattice;
  const int n = q.normal;
  const auto order_n = static_cast<long long>(lat.order(n));
  MackeyFunctor x = inflate_mackey(y.base(), lattice, n, q.quotient.projection);

  auto ceil_div = [](long long a, long long b) { return a / b + ((a % b != 0 && a > 0) ? 1 : 0); };
  const long long lo = order_n * (y.lo() - 1) + 1;
  const long long top = order_n * y.hi() + 1;
  std::vector<SubMackey> stages;
  for (long long j = lo; j <= top; ++j) {
    const SubMackey& ys = y.stage(ceil_div(j, order_n));
    std::vector<AbSubgroup> levels;
    for (int h = 0; h < static_cast<int>(lat.size()); ++h) {
      if (lat.contains(h, n))
        levels.emplace_back(x.level(h), ys.level(image_in_quotient(lat, y.base().lattice(), h, q.quotient.projection)).preimage());
      else
        levels.push_back(AbSubgroup::zero(x.level(h)));
    }
    stages.emplace_back(std::move(levels));
  }
  return EMTower(std::move(x), y.shift(), TowerVariant::regular, lo, std::move(stages));
}

EMTower pullback_tower(const EMTower& y, const LatticePtr& lattice, int n) {
  return pullback_tower(y, lattice, quotient_data(*lattice, n));
}

SubMackey homotopy_filtration(const MackeyFunctor& m, long long n, long long mm) {
  if (n <= 0) throw std::invalid_argument("n must be positive");
  if (mm < 0) throw std::invalid_argument("m must be nonnegative");
  return order_generated_filtration(m, Rational(mm, n));
}

}  // namespace slicekit

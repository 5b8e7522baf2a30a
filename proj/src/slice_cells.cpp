#include <algorithm>
#include <stdexcept>

#include "slicekit/slice.hpp"

namespace slicekit {

namespace {

long long order_of(const SubgroupLattice& lat, int h) { return static_cast<long long>(lat.order(h)); }

long long ceil_div(long long a, long long b) {
  long long q = a / b;
  if (a % b != 0 && (a < 0) == (b < 0)) ++q;
  return q;
}

std::vector<int> class_representatives(const SubgroupLattice& lat) {
  std::vector<int> reps;
  for (const auto& cls : lat.classes()) reps.push_back(cls.front());
  std::sort(reps.begin(), reps.end());
  return reps;
}

}  // namespace

long long SliceCell::dimension() const {
  const long long d = n * order_of(*lattice, subgroup);
  return regular ? d : d - 1;
}

std::string SliceCell::to_string() const {
  return "G/" + lattice->label(subgroup) + " n=" + std::to_string(n) + " (" + (regular ? "regular" : "irregular") +
         ", dim " + std::to_string(dimension()) + ")";
}

bool operator==(const SliceCell& a, const SliceCell& b) {
  return a.lattice == b.lattice && a.subgroup == b.subgroup && a.n == b.n && a.regular == b.regular;
}

std::vector<SliceCell> slice_cells(const LatticePtr& lattice, long long k, bool regular_only) {
  std::vector<SliceCell> out;
  for (int h : class_representatives(*lattice)) {
    const long long order = order_of(*lattice, h);
    if (k % order == 0) out.push_back({lattice, h, k / order, true});
    if (!regular_only && (k + 1) % order == 0) out.push_back({lattice, h, (k + 1) / order, false});
  }
  return out;
}

SliceCell cell_dual(const SliceCell& c) {
  if (!c.regular) throw std::invalid_argument("the dual of an irregular cell is not a slice cell");
  SliceCell d = c;
  d.n = -c.n;
  return d;
}

FiltrationBounds filtration_bounds(const SliceCell& c) {
  const long long k = c.dimension();
  const long long g = static_cast<long long>(c.lattice->group().order());
  FiltrationBounds b;
  b.slice_degree = k;
  b.regular_degree = c.regular ? k : k - (g - 1);
  b.suspension_regular_degree = k + 1;
  return b;
}

QuotientData quotient_data(const SubgroupLattice& lat, int n) {
  if (!lat.is_normal(n)) throw std::invalid_argument("subgroup " + lat.label(n) + " is not normal");
  QuotientData q;
  q.normal = n;
  q.quotient = quotient_group(lat.group(), lat.subgroup(n));
  q.lattice = subgroup_lattice(q.quotient.group);
  return q;
}

std::optional<SliceCell> geometric_fixed_points_cell(const SliceCell& c, const QuotientData& q) {
  if (!c.regular) throw std::invalid_argument("geometric fixed points are only tracked for regular cells");
  if (q.quotient.projection.size() != c.lattice->group().order())
    throw std::invalid_argument("quotient data belongs to a different group");
  const SubgroupLattice& lat = *c.lattice;
  if (!lat.contains(c.subgroup, q.normal)) return std::nullopt;
  const int image = image_in_quotient(lat, *q.lattice, c.subgroup, q.quotient.projection);
  return SliceCell{q.lattice, q.lattice->class_representative(image), c.n, true};
}

std::optional<SliceCell> geometric_fixed_points_cell(const SliceCell& c, int n) {
  return geometric_fixed_points_cell(c, quotient_data(*c.lattice, n));
}

long long pullback_degree(const SubgroupLattice& lat, int n, long long m) {
  if (!lat.is_normal(n)) throw std::invalid_argument("subgroup " + lat.label(n) + " is not normal");
  if (lat.order(n) == 1) throw std::invalid_argument("N is trivial; the degree is unchanged");
  return ceil_div(m, order_of(lat, n));
}

GeneratorSet negative_generators(const SubgroupLattice& lat, long long n, long long display_cap) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  GeneratorSet s;
  s.min_degree = 0;
  const auto reps = class_representatives(lat);
  for (int h : reps)
    for (long long k = 0; k <= display_cap; ++k) s.listed.push_back({h, k});
  for (int h : reps)
    for (long long k = 1; k * order_of(lat, h) <= n; ++k) s.negative.push_back({h, -k});
  return s;
}

GeneratorSet connective_generators(const SubgroupLattice& lat, long long display_cap) {
  GeneratorSet s;
  s.min_degree = 1;
  for (int h : class_representatives(lat))
    for (long long k = 1; k <= display_cap; ++k) s.listed.push_back({h, k});
  return s;
}

}  // namespace slicekit

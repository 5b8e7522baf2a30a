#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

#include "slicekit/group.hpp"

namespace slicekit {

SubgroupLattice::SubgroupLattice(PermGroup g) : group_(std::move(g)) {
  const PermGroup& grp = group_;
  const int order = static_cast<int>(grp.order());

  // Every subgroup is a join of cyclic subgroups: close the cyclic ones
  // under pairwise joins, breadth first.
  std::set<Subgroup> found;
  std::vector<Subgroup> cyclic;
  for (int x = 0; x < order; ++x) {
    Subgroup c = generated_subgroup(grp, {x});
    if (found.insert(c).second) cyclic.push_back(c);
  }
  std::vector<Subgroup> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& s : frontier) {
      for (const auto& c : cyclic) {
        if (s.contains(c)) continue;
        std::vector<int> gens = s.elements;
        gens.insert(gens.end(), c.elements.begin(), c.elements.end());
        Subgroup j = generated_subgroup(grp, gens);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  subgroups_.assign(found.begin(), found.end());

  const std::size_t n = subgroups_.size();
  for (std::size_t i = 0; i < n; ++i) index_.emplace(subgroups_[i].elements, static_cast<int>(i));

  incl_.assign(n * n, 0);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k)
      incl_[h * n + k] = subgroups_[k].order() <= subgroups_[h].order() && subgroups_[h].contains(subgroups_[k]);

  conj_.assign(static_cast<std::size_t>(order) * n, -1);
  for (int x = 0; x < order; ++x)
    for (std::size_t h = 0; h < n; ++h) {
      std::vector<int> img;
      img.reserve(subgroups_[h].order());
      for (int y : subgroups_[h].elements) img.push_back(grp.conj(x, y));
      std::sort(img.begin(), img.end());
      conj_[static_cast<std::size_t>(x) * n + h] = index_.at(img);
    }

  normalizer_.resize(n);
  for (std::size_t h = 0; h < n; ++h) {
    std::vector<int> norm;
    for (int x = 0; x < order; ++x)
      if (conjugate(x, static_cast<int>(h)) == static_cast<int>(h)) norm.push_back(x);
    normalizer_[h] = index_.at(norm);
  }

  class_of_.assign(n, -1);
  for (std::size_t h = 0; h < n; ++h) {
    if (class_of_[h] >= 0) continue;
    std::set<int> members;
    for (int x = 0; x < order; ++x) members.insert(conjugate(x, static_cast<int>(h)));
    const int cls = static_cast<int>(classes_.size());
    for (int m : members) class_of_[static_cast<std::size_t>(m)] = cls;
    classes_.emplace_back(members.begin(), members.end());
  }

  labels_.resize(n);
  for (std::size_t h = 0; h < n; ++h) {
    if (h == 0) {
      labels_[h] = "e";
      continue;
    }
    if (h + 1 == n) {
      labels_[h] = "G";
      continue;
    }
    const std::size_t ord = subgroups_[h].order();
    std::size_t same = 0, rank = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (subgroups_[k].order() == ord) {
        ++same;
        if (k <= h) ++rank;
      }
    labels_[h] = "H" + std::to_string(ord);
    if (same > 1) labels_[h] += "_" + std::to_string(rank);
  }
}

int SubgroupLattice::index_of(const Subgroup& h) const {
  auto it = index_.find(h.elements);
  return it == index_.end() ? -1 : it->second;
}

int SubgroupLattice::require_index(const Subgroup& h) const {
  int i = index_of(h);
  if (i < 0) throw std::invalid_argument("{" + h.id() + "} is not a subgroup");
  return i;
}

std::vector<int> SubgroupLattice::subgroups_of(int h) const {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(size()); ++k)
    if (contains(h, k)) out.push_back(k);
  return out;
}

int SubgroupLattice::intersection(int h, int k) const {
  std::vector<int> common;
  const auto& a = subgroup(h).elements;
  const auto& b = subgroup(k).elements;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return index_.at(common);
}

int SubgroupLattice::parse(std::string_view spec) const {
  if (spec.empty()) throw std::invalid_argument("empty subgroup spec");
  for (std::size_t h = 0; h < size(); ++h)
    if (labels_[h] == spec) return static_cast<int>(h);
  if (spec.front() == '#') {
    int i = -1;
    auto [ptr, ec] = std::from_chars(spec.data() + 1, spec.data() + spec.size(), i);
    if (ec != std::errc() || ptr != spec.data() + spec.size() || i < 0 || i >= static_cast<int>(size()))
      throw std::invalid_argument("bad subgroup index '" + std::string(spec) + "'");
    return i;
  }
  return require_index(parse_subgroup_id(group_, spec));
}

LatticePtr subgroup_lattice(const PermGroup& g) { return std::make_shared<const SubgroupLattice>(g); }

}  // namespace slicekit

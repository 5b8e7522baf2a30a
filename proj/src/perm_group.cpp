#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "slicekit/group.hpp"

namespace slicekit {

Perm compose(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) throw std::invalid_argument("compose: degree mismatch");
  Perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

bool is_permutation(const Perm& p, int degree) {
  if (degree < 1 || p.size() != static_cast<std::size_t>(degree)) return false;
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= degree || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

Perm identity_perm(int degree) {
  Perm p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

namespace {
constexpr std::size_t kTableLimit = 1024;
}

PermGroup::PermGroup() : elements_{Perm{0}} { build_tables(); }

void PermGroup::build_tables() {
  index_.clear();
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<int>(i));
  gen_index_.clear();
  for (const auto& s : gens_) gen_index_.push_back(index_.at(s));

  const std::size_t n = elements_.size();
  table_.clear();
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = index_.at(compose(elements_[a], elements_[b]));
  }
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) inverse_[a] = index_.at(inverse(elements_[a]));
}

PermGroup PermGroup::from_generators(int degree, std::vector<Perm> gens, std::size_t cap) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  for (const auto& s : gens) {
    if (!is_permutation(s, degree)) {
      std::ostringstream os;
      os << "generator is not a bijection of {0.." << degree - 1 << "}";
      throw std::invalid_argument(os.str());
    }
  }

  std::vector<Perm> found{identity_perm(degree)};
  std::map<Perm, int> seen{{found.front(), 0}};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& s : gens) {
      Perm next = compose(s, found[i]);
      if (seen.emplace(next, static_cast<int>(found.size())).second) {
        found.push_back(std::move(next));
        if (found.size() > cap)
          throw std::length_error("group closure exceeds the element cap of " + std::to_string(cap));
      }
    }
  }
  std::sort(found.begin(), found.end());

  PermGroup g;
  g.degree_ = degree;
  g.gens_ = std::move(gens);
  g.elements_ = std::move(found);
  g.build_tables();
  return g;
}

int PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int PermGroup::mul(int a, int b) const {
  const std::size_t n = elements_.size();
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
  return index_.at(compose(elements_[static_cast<std::size_t>(a)], elements_[static_cast<std::size_t>(b)]));
}

PermGroup named_group(std::string_view name) {
  if (name == "trivial") return PermGroup::from_generators(1, {});
  if (name == "C2") return PermGroup::from_generators(2, {{1, 0}});
  if (name == "C3") return PermGroup::from_generators(3, {{1, 2, 0}});
  if (name == "C4") return PermGroup::from_generators(4, {{1, 2, 3, 0}});
  if (name == "V4") return PermGroup::from_generators(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  if (name == "S3") return PermGroup::from_generators(3, {{1, 2, 0}, {1, 0, 2}});
  if (name == "D8") return PermGroup::from_generators(4, {{1, 2, 3, 0}, {3, 2, 1, 0}});
  if (name == "Q8")
    return PermGroup::from_generators(8, {{1, 4, 3, 6, 5, 0, 7, 2}, {2, 7, 4, 1, 6, 3, 0, 5}});
  throw std::invalid_argument("unknown group preset '" + std::string(name) + "'");
}

const std::vector<std::string>& named_group_names() {
  static const std::vector<std::string> names{"trivial", "C2", "C3", "C4", "V4", "S3", "D8", "Q8"};
  return names;
}

// --- Subgroup ---------------------------------------------------------------

bool Subgroup::contains(int g) const { return std::binary_search(elements.begin(), elements.end(), g); }

bool Subgroup::contains(const Subgroup& other) const {
  return std::includes(elements.begin(), elements.end(), other.elements.begin(), other.elements.end());
}

std::string Subgroup::id() const {
  std::string s;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(elements[i]);
  }
  return s;
}

Subgroup generated_subgroup(const PermGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> found{g.identity()};
  in[0] = 1;
  for (std::size_t i = 0; i < found.size(); ++i)
    for (int s : gens) {
      int x = g.mul(s, found[i]);
      if (!in[static_cast<std::size_t>(x)]) {
        in[static_cast<std::size_t>(x)] = 1;
        found.push_back(x);
      }
    }
  std::sort(found.begin(), found.end());
  return Subgroup{std::move(found)};
}

Subgroup whole_group(const PermGroup& g) {
  Subgroup h;
  h.elements.resize(g.order());
  std::iota(h.elements.begin(), h.elements.end(), 0);
  return h;
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

bool is_subgroup(const PermGroup& g, const std::vector<int>& elements) {
  if (elements.empty()) return false;
  std::vector<int> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int x : sorted)
    if (x < 0 || static_cast<std::size_t>(x) >= g.order()) return false;
  Subgroup s{sorted};
  for (int a : sorted)
    for (int b : sorted)
      if (!s.contains(g.mul(a, b))) return false;
  return true;
}

Subgroup parse_subgroup_id(const PermGroup& g, std::string_view id) {
  std::vector<int> elems;
  std::size_t pos = 0;
  while (pos <= id.size()) {
    std::size_t end = id.find('.', pos);
    if (end == std::string_view::npos) end = id.size();
    int v = 0;
    auto [ptr, ec] = std::from_chars(id.data() + pos, id.data() + end, v);
    if (ec != std::errc() || ptr != id.data() + end)
      throw std::invalid_argument("malformed subgroup id '" + std::string(id) + "'");
    elems.push_back(v);
    pos = end + 1;
  }
  if (!is_subgroup(g, elems)) throw std::invalid_argument("'" + std::string(id) + "' is not a subgroup");
  std::sort(elems.begin(), elems.end());
  return Subgroup{std::move(elems)};
}

EmbeddedGroup subgroup_as_group(const PermGroup& g, const Subgroup& h) {
  // Greedy small generating set.
  std::vector<int> picked;
  Subgroup reached = trivial_subgroup();
  for (int x : h.elements)
    if (!reached.contains(x)) {
      picked.push_back(x);
      reached = generated_subgroup(g, picked);
    }
  std::vector<Perm> gens;
  for (int x : picked) gens.push_back(g.element(x));
  EmbeddedGroup out{PermGroup::from_generators(g.degree(), std::move(gens)), {}};
  // Sorted sub-list of a sorted list: local index i is the i-th element of h.
  out.to_parent = h.elements;
  return out;
}

// --- quotients, double cosets, families -------------------------------------

QuotientGroup quotient_group(const PermGroup& g, const Subgroup& n) {
  for (std::size_t x = 0; x < g.order(); ++x)
    for (int y : n.elements)
      if (!n.contains(g.conj(static_cast<int>(x), y)))
        throw std::invalid_argument("subgroup " + n.id() + " is not normal");

  // Coset of each element, numbered by smallest representative.
  std::vector<int> coset(g.order(), -1);
  std::vector<int> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset[x] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(x));
    for (int y : n.elements) coset[static_cast<std::size_t>(g.mul(static_cast<int>(x), y))] = c;
  }
  const int degree = static_cast<int>(reps.size());
  auto action = [&](int x) {
    Perm p(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      p[c] = coset[static_cast<std::size_t>(g.mul(x, reps[c]))];
    return p;
  };
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < g.generators().size(); ++i) gens.push_back(action(g.generator_index(i)));

  QuotientGroup q{PermGroup::from_generators(degree, std::move(gens)), {}};
  q.projection.resize(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) q.projection[x] = q.group.index_of(action(static_cast<int>(x)));
  return q;
}

std::vector<int> double_cosets(const PermGroup& g, const Subgroup& h, const Subgroup& j,
                               const Subgroup& k) {
  if (!h.contains(j) || !h.contains(k))
    throw std::invalid_argument("double_cosets: J and K must be subgroups of H");
  std::vector<char> covered(g.order(), 0);
  std::vector<int> reps;
  for (int x : h.elements) {
    if (covered[static_cast<std::size_t>(x)]) continue;
    reps.push_back(x);
    for (int a : j.elements)
      for (int b : k.elements) covered[static_cast<std::size_t>(g.mul(g.mul(a, x), b))] = 1;
  }
  return reps;
}

SubgroupFamily family_not_containing(const SubgroupLattice& lat, int n) {
  SubgroupFamily f;
  for (int h = 0; h < static_cast<int>(lat.size()); ++h)
    (lat.contains(h, n) ? f.complement : f.members).push_back(h);
  return f;
}

WeylGroup weyl_group(const SubgroupLattice& lat, int h) {
  const PermGroup& g = lat.group();
  WeylGroup w;
  w.normalizer = lat.normalizer(h);
  EmbeddedGroup ng = subgroup_as_group(g, lat.subgroup(w.normalizer));
  std::vector<int> local_h;
  for (int x : lat.subgroup(h).elements) local_h.push_back(ng.group.index_of(g.element(x)));
  std::sort(local_h.begin(), local_h.end());
  QuotientGroup q = quotient_group(ng.group, Subgroup{local_h});
  w.group = q.group;
  w.projection.assign(g.order(), -1);
  for (std::size_t i = 0; i < ng.to_parent.size(); ++i)
    w.projection[static_cast<std::size_t>(ng.to_parent[i])] = q.projection[i];
  for (std::size_t x = 0; x < g.order(); ++x) w.conjugates.push_back(lat.conjugate(static_cast<int>(x), h));
  return w;
}

}  // namespace slicekit

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace slicekit {

/// A permutation of {0..n-1} in one-line image notation: p[i] is the image of i.
using Perm = std::vector<int>;

/// p after q.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
bool is_permutation(const Perm& p, int degree);
Perm identity_perm(int degree);

inline constexpr std::size_t kDefaultElementCap = 10000;

/// A finite group of permutations with its full element list.
///
/// Elements are stored in lexicographic order of their one-line notation, so
/// the identity is element 0 and element indices depend only on the element
/// set, not on the chosen generators.
class PermGroup {
public:
  PermGroup();  // trivial group of degree 1

  /// Throws std::invalid_argument for non-bijective generators and
  /// std::length_error when the closure exceeds `cap` elements.
  static PermGroup from_generators(int degree, std::vector<Perm> gens,
                                   std::size_t cap = kDefaultElementCap);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  const Perm& element(int i) const { return elements_.at(static_cast<std::size_t>(i)); }
  /// -1 when p is not in the group.
  int index_of(const Perm& p) const;
  /// Index of the i-th generator.
  int generator_index(std::size_t i) const { return gen_index_.at(i); }

  int identity() const { return 0; }
  int mul(int a, int b) const;
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  /// g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

private:
  void build_tables();

  int degree_ = 1;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
  std::vector<int> gen_index_;
  std::map<Perm, int> index_;
  std::vector<int> table_;  // order x order, empty for large groups
  std::vector<int> inverse_;
};

/// Fixed permutation models for C2, C3, C4, V4, S3, D8, Q8 and trivial.
/// C_n acts by rotation on n points, V4 and D8 act on the four vertices of a
/// square, S3 on three points, Q8 by left multiplication on itself with the
/// elements ordered 1, i, j, k, -1, -i, -j, -k.
/// Throws std::invalid_argument for other names.
PermGroup named_group(std::string_view name);
const std::vector<std::string>& named_group_names();

/// A subgroup as a sorted list of element indices of its parent group. The
/// parent is passed alongside wherever it is needed.
struct Subgroup {
  std::vector<int> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(int g) const;
  bool contains(const Subgroup& other) const;
  /// Canonical key: element indices joined by '.', e.g. "0.3".
  std::string id() const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() <=> b.order();
    return a.elements <=> b.elements;
  }
};

Subgroup generated_subgroup(const PermGroup& g, const std::vector<int>& gens);
Subgroup whole_group(const PermGroup& g);
Subgroup trivial_subgroup();
/// Parses an id produced by Subgroup::id; throws std::invalid_argument.
Subgroup parse_subgroup_id(const PermGroup& g, std::string_view id);
bool is_subgroup(const PermGroup& g, const std::vector<int>& elements);

/// A subgroup H of G as a group in its own right, plus the embedding of its
/// element indices into G's.
struct EmbeddedGroup {
  PermGroup group;
  std::vector<int> to_parent;
};
EmbeddedGroup subgroup_as_group(const PermGroup& g, const Subgroup& h);

/// Every subgroup of a group, ordered by (order, element list): index 0 is the
/// trivial subgroup and the last index is the whole group. Conjugacy classes
/// and normality are precomputed.
class SubgroupLattice {
public:
  explicit SubgroupLattice(PermGroup g);

  const PermGroup& group() const { return group_; }
  std::size_t size() const { return subgroups_.size(); }
  const Subgroup& subgroup(int i) const { return subgroups_.at(static_cast<std::size_t>(i)); }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  std::size_t order(int i) const { return subgroup(i).order(); }

  int bottom() const { return 0; }
  int top() const { return static_cast<int>(subgroups_.size()) - 1; }

  /// -1 when the element list is not one of the subgroups.
  int index_of(const Subgroup& h) const;
  /// Throws std::invalid_argument when h is not a subgroup.
  int require_index(const Subgroup& h) const;

  /// K is contained in H.
  bool contains(int h, int k) const { return incl_[static_cast<std::size_t>(h) * size() + static_cast<std::size_t>(k)]; }
  /// Subgroups of H (as lattice indices, ascending).
  std::vector<int> subgroups_of(int h) const;

  /// Index of g H g^-1.
  int conjugate(int g, int h) const { return conj_[static_cast<std::size_t>(g) * size() + static_cast<std::size_t>(h)]; }
  int intersection(int h, int k) const;
  int normalizer(int h) const { return normalizer_[static_cast<std::size_t>(h)]; }

  int class_of(int h) const { return class_of_[static_cast<std::size_t>(h)]; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  /// Smallest index in the conjugacy class of h.
  int class_representative(int h) const { return classes_[static_cast<std::size_t>(class_of(h))].front(); }
  bool is_normal(int h) const { return classes_[static_cast<std::size_t>(class_of(h))].size() == 1; }

  /// Short readable name: "e", "G", or "H<order>" with a suffix when several
  /// subgroups share that order.
  const std::string& label(int h) const { return labels_.at(static_cast<std::size_t>(h)); }
  /// Accepts a label, a canonical id, "#<index>", "e" or "G".
  int parse(std::string_view spec) const;

private:
  PermGroup group_;
  std::vector<Subgroup> subgroups_;
  std::map<std::vector<int>, int> index_;
  std::vector<char> incl_;
  std::vector<int> conj_;
  std::vector<int> normalizer_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
  std::vector<std::string> labels_;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;
LatticePtr subgroup_lattice(const PermGroup& g);

struct QuotientGroup {
  PermGroup group;
  /// element index in G -> element index in G/N
  std::vector<int> projection;
};

/// G/N acting on the left cosets of N by left translation. Throws
/// std::invalid_argument when N is not normal.
QuotientGroup quotient_group(const PermGroup& g, const Subgroup& n);

/// One representative (the smallest element index) per double coset J g K of H.
/// Throws std::invalid_argument unless J and K lie in H.
std::vector<int> double_cosets(const PermGroup& g, const Subgroup& h, const Subgroup& j,
                               const Subgroup& k);

struct SubgroupFamily {
  std::vector<int> members;     // lattice indices of H with N not in H
  std::vector<int> complement;  // lattice indices of H containing N
};
SubgroupFamily family_not_containing(const SubgroupLattice& lat, int n);

struct WeylGroup {
  int normalizer = 0;  // lattice index of N_G(H)
  PermGroup group;     // N_G(H)/H
  /// element index in G -> element index of W, or -1 outside the normalizer
  std::vector<int> projection;
  /// element index g in G -> lattice index of g H g^-1
  std::vector<int> conjugates;
};
WeylGroup weyl_group(const SubgroupLattice& lat, int h);

}  // namespace slicekit

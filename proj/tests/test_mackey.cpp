#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "slicekit/mackey.hpp"

using namespace slicekit;

namespace {

IntVector vec(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

InvariantFactors inv(std::size_t free_rank, std::initializer_list<long> torsion = {}) {
  InvariantFactors f;
  f.free_rank = free_rank;
  for (long d : torsion) f.torsion.emplace_back(d);
  return f;
}

LatticePtr lattice_of(const char* name) { return subgroup_lattice(named_group(name)); }

int of_order(const SubgroupLattice& lat, std::size_t order) {
  for (int h = 0; h < static_cast<int>(lat.size()); ++h)
    if (lat.order(h) == order) return h;
  return -1;
}

const std::vector<std::string> kPresets{"burnside", "constant-Z", "constant-Z2", "constant-Z/3",
                                        "sign", "regular", "permutation"};

// The H-set H/L restricted to K, split into orbits by brute force; returns
// the K-conjugacy-class position of each orbit's stabilizer in K's basis.
std::map<std::size_t, long> restricted_orbits(const SubgroupLattice& lat, int h, int l, int k) {
  const PermGroup& g = lat.group();
  // left cosets xL inside H, each as a sorted element list
  std::vector<std::vector<int>> cosets;
  for (int x : lat.subgroup(h).elements) {
    std::vector<int> c;
    for (int y : lat.subgroup(l).elements) c.push_back(g.mul(x, y));
    std::sort(c.begin(), c.end());
    if (std::find(cosets.begin(), cosets.end(), c) == cosets.end()) cosets.push_back(c);
  }
  auto act = [&](int a, const std::vector<int>& c) {
    std::vector<int> out;
    for (int y : c) out.push_back(g.mul(a, y));
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<char> done(cosets.size(), 0);
  std::map<std::size_t, long> out;
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    if (done[i]) continue;
    std::vector<int> stab;
    for (int a : lat.subgroup(k).elements) {
      auto img = act(a, cosets[i]);
      const auto pos = static_cast<std::size_t>(std::find(cosets.begin(), cosets.end(), img) - cosets.begin());
      done[pos] = 1;
      if (img == cosets[i]) stab.push_back(a);
    }
    std::sort(stab.begin(), stab.end());
    ++out[burnside_basis_position(lat, k, lat.require_index(Subgroup{stab}))];
  }
  return out;
}

}  // namespace

TEST_CASE("Burnside functor examples") {
  MackeyFunctor t = burnside_mackey(lattice_of("trivial"));
  REQUIRE(t.num_levels() == 1);
  CHECK(t.level(0).invariants() == inv(1));

  MackeyFunctor c2 = burnside_mackey(lattice_of("C2"));
  CHECK(c2.level(0).invariants() == inv(1));
  CHECK(c2.level(1).invariants() == inv(2));
  CHECK(c2.res(1, 0).matrix() == IntMatrix{{1, 2}});
  CHECK(c2.tr(1, 0).matrix() == IntMatrix{{0}, {1}});

  LatticePtr s3 = lattice_of("S3");
  CHECK(burnside_mackey(s3).level(s3->top()).invariants() == inv(4));
}

TEST_CASE("Burnside restriction counts orbits of restricted sets") {
  for (const auto& name : named_group_names()) {
    LatticePtr lp = subgroup_lattice(named_group(name));
    const SubgroupLattice& lat = *lp;
    MackeyFunctor m = burnside_mackey(lp);
    for (int h = 0; h < static_cast<int>(lat.size()); ++h)
      for (int k : lat.subgroups_of(h))
        for (int l : lat.subgroups_of(h)) {
          const std::size_t col = burnside_basis_position(lat, h, l);
          IntVector got = m.res(h, k).apply(m.level(h).basis_vector(col));
          IntVector want(m.level(k).ngens());
          for (auto [pos, count] : restricted_orbits(lat, h, l, k)) want[pos] = count;
          CHECK(got == want);
        }
  }
}

TEST_CASE("constant functors") {
  LatticePtr c2 = lattice_of("C2");
  MackeyFunctor z = constant_mackey(c2, FgAbGroup::cyclic(0));
  CHECK(z.tr(1, 0).matrix() == IntMatrix{{2}});
  CHECK(equal_homs(compose(z.res(1, 0), z.tr(1, 0)), AbHom::scalar(z.level(0), 2)));
  MackeyFunctor z2 = constant_mackey(c2, FgAbGroup::cyclic(2));
  CHECK(is_zero_hom(z2.tr(1, 0)));
  CHECK(check_mackey_axioms(constant_mackey(lattice_of("S3"), FgAbGroup::cyclic(0))).passed());
}

TEST_CASE("fixed-point functors") {
  LatticePtr c2 = lattice_of("C2");
  {
    // trivial action on Z is the constant functor
    MackeyFunctor f = fixed_point_mackey(c2, {IntMatrix{{1}}});
    MackeyFunctor z = constant_mackey(c2, FgAbGroup::cyclic(0));
    for (int h = 0; h < 2; ++h) CHECK(f.level(h).invariants() == z.level(h).invariants());
    CHECK(f.res(1, 0).matrix() == z.res(1, 0).matrix());
    CHECK(f.tr(1, 0).matrix() == z.tr(1, 0).matrix());
  }
  {
    MackeyFunctor sign = fixed_point_mackey(c2, {IntMatrix{{-1}}});
    CHECK(sign.level(1).is_zero());
    CHECK(sign.level(0).invariants() == inv(1));
  }
  {
    MackeyFunctor reg = mackey_preset(c2, "regular");
    CHECK(reg.level(1).invariants() == inv(1));
    CHECK(reg.level(0).invariants() == inv(2));
    CHECK(reg.res(1, 0).matrix() == IntMatrix{{1}, {1}});
  }
  CHECK_THROWS_AS(fixed_point_mackey(c2, {IntMatrix{{2}}}), std::invalid_argument);
  CHECK_THROWS_AS(fixed_point_mackey(c2, {IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{1}}}), std::invalid_argument);
  // S3 on Z^3 with the second generator acting wrongly: not an action
  LatticePtr s3 = lattice_of("S3");
  CHECK_THROWS_AS(fixed_point_mackey(s3, {IntMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}}),
                  std::invalid_argument);
}

TEST_CASE("every preset satisfies the axioms") {
  for (const auto& g : named_group_names())
    for (const auto& p : kPresets) {
      CAPTURE(g);
      CAPTURE(p);
      AxiomReport r = check_mackey_axioms(mackey_preset(lattice_of(g.c_str()), p));
      CHECK(r.passed());
      CHECK(r.identities_checked > 0);
    }
  CHECK_THROWS_AS(mackey_preset(lattice_of("C2"), "nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(mackey_preset(lattice_of("C2"), "constant-Z1"), std::invalid_argument);
}

TEST_CASE("a corrupted transfer fails the double coset formula") {
  LatticePtr c2 = lattice_of("C2");
  FgAbGroup z = FgAbGroup::cyclic(0);
  MackeyFunctor m(c2, {z, z});
  m.set_res(1, 0, AbHom::identity(z));
  m.set_tr(1, 0, AbHom::identity(z));
  m.set_conj(1, 0, AbHom::identity(z));
  m.set_conj(1, 1, AbHom::identity(z));
  m.complete();
  AxiomReport r = check_mackey_axioms(m);
  REQUIRE_FALSE(r.passed());
  bool found = false;
  for (const auto& f : r.failures)
    if (f.identity == "double-coset" && f.witness == "H=G J=e K=e") found = true;
  CHECK(found);
}

TEST_CASE("complete derives maps along chains and from generators") {
  LatticePtr c4 = lattice_of("C4");
  const SubgroupLattice& lat = *c4;
  FgAbGroup z = FgAbGroup::cyclic(0);
  MackeyFunctor m(c4, {z, z, z});
  const int mid = of_order(lat, 2);
  m.set_res(lat.top(), mid, AbHom::identity(z));
  m.set_res(mid, 0, AbHom::identity(z));
  m.set_tr(lat.top(), mid, AbHom::scalar(z, 2));
  m.set_tr(mid, 0, AbHom::scalar(z, 2));
  const int gen = lat.group().generator_index(0);
  for (int h = 0; h < 3; ++h) m.set_conj(gen, h, AbHom::identity(z));
  m.complete();
  CHECK(m.tr(lat.top(), 0).matrix() == IntMatrix{{4}});
  CHECK(check_mackey_axioms(m).passed());

  MackeyFunctor broken(c4, {z, z, z});
  CHECK_THROWS_AS(broken.complete(), std::invalid_argument);
}

TEST_CASE("restriction to subgroups") {
  LatticePtr s3 = lattice_of("S3");
  MackeyFunctor b = burnside_mackey(s3);
  MackeyFunctor whole = restrict_mackey(b, s3->top());
  CHECK(whole.num_levels() == b.num_levels());
  for (int h = 0; h < static_cast<int>(b.num_levels()); ++h)
    CHECK(whole.level(h).invariants() == b.level(h).invariants());
  MackeyFunctor bottom = restrict_mackey(b, 0);
  CHECK(bottom.num_levels() == 1);
  MackeyFunctor c3 = restrict_mackey(b, of_order(*s3, 3));
  CHECK(c3.num_levels() == 2);
  CHECK(c3.level(1).invariants() == inv(2));
  CHECK(check_mackey_axioms(c3).passed());
  // agrees with the Burnside functor of C3 map by map
  MackeyFunctor direct = burnside_mackey(c3.lattice_ptr());
  CHECK(c3.res(1, 0).matrix() == direct.res(1, 0).matrix());
  CHECK(c3.tr(1, 0).matrix() == direct.tr(1, 0).matrix());
}

TEST_CASE("generated sub-functors") {
  LatticePtr c2 = lattice_of("C2");
  MackeyFunctor z = constant_mackey(c2, FgAbGroup::cyclic(0));
  CHECK(sub_mackey_generated(z, {}).is_zero());
  SubMackey s = sub_mackey_generated(z, {{0, vec({1})}});
  CHECK(s.level(0) == AbSubgroup::whole(z.level(0)));
  CHECK(s.level(1) == subgroup_generated(z.level(1), {vec({2})}));
  CHECK(is_closed(z, s));

  MackeyFunctor b = burnside_mackey(c2);
  SubMackey t = sub_mackey_generated(b, {{0, vec({1})}});
  CHECK(t.level(1) == subgroup_generated(b.level(1), {vec({0, 1})}));
  CHECK_THROWS_AS(sub_mackey_generated(b, {{1, vec({1})}}), std::invalid_argument);
}

TEST_CASE("generated sub-functors against set closure on finite functors") {
  for (const auto& g : named_group_names()) {
    LatticePtr lp = lattice_of(g.c_str());
    const SubgroupLattice& lat = *lp;
    for (const char* preset : {"constant-Z2", "constant-Z/3"}) {
      MackeyFunctor m = mackey_preset(lp, preset);
      for (int seed_level = 0; seed_level < static_cast<int>(lat.size()); ++seed_level) {
        // close {seed} under every map and under addition, element by element
        std::vector<std::set<IntVector>> sets(lat.size());
        for (int h = 0; h < static_cast<int>(lat.size()); ++h) sets[static_cast<std::size_t>(h)].insert(m.level(h).canonical(m.level(h).zero()));
        sets[static_cast<std::size_t>(seed_level)].insert(m.level(seed_level).canonical(vec({1})));
        bool grew = true;
        while (grew) {
          grew = false;
          for (int h = 0; h < static_cast<int>(lat.size()); ++h) {
            auto add_to = [&](int t, const IntVector& v) {
              if (sets[static_cast<std::size_t>(t)].insert(m.level(t).canonical(v)).second) grew = true;
            };
            const auto current = sets[static_cast<std::size_t>(h)];
            for (const auto& c : current) {
              IntVector x = m.level(h).lift_canonical(c);
              for (const auto& d : current) add_to(h, x + m.level(h).lift_canonical(d));
              for (int k : lat.subgroups_of(h)) add_to(k, m.res(h, k).apply(x));
              for (int l = 0; l < static_cast<int>(lat.size()); ++l)
                if (lat.contains(l, h)) add_to(l, m.tr(l, h).apply(x));
              for (int a = 0; a < static_cast<int>(lat.group().order()); ++a) add_to(lat.conjugate(a, h), m.conj(a, h).apply(x));
            }
          }
        }
        SubMackey s = sub_mackey_generated(m, {{seed_level, vec({1})}});
        for (int h = 0; h < static_cast<int>(lat.size()); ++h)
          CHECK(s.level(h).group().order() == static_cast<long>(sets[static_cast<std::size_t>(h)].size()));
      }
    }
  }
}

TEST_CASE("quotient functors") {
  LatticePtr c2 = lattice_of("C2");
  MackeyFunctor b = burnside_mackey(c2);
  MackeyFunctor same = quotient_mackey(b, SubMackey::zero(b));
  for (int h = 0; h < 2; ++h) CHECK(same.level(h).invariants() == b.level(h).invariants());
  CHECK(quotient_mackey(b, SubMackey::whole(b)).is_zero());

  SubMackey f2 = hill_filtration(b, 2);
  CHECK(f2.level(1) == subgroup_generated(b.level(1), {vec({-2, 1})}));
  MackeyFunctor q = quotient_mackey(b, f2);
  CHECK(q.level(0).invariants() == inv(1));
  CHECK(q.level(1).invariants() == inv(1));
  CHECK(check_mackey_axioms(q).passed());

  // not closed: Z at level e alone, transfer leaves it
  SubMackey bad({AbSubgroup::whole(b.level(0)), AbSubgroup::zero(b.level(1))});
  CHECK_FALSE(is_closed(b, bad));
  CHECK_THROWS_AS(quotient_mackey(b, bad), std::invalid_argument);
}

TEST_CASE("sub-functors are Mackey functors") {
  for (const auto& g : named_group_names())
    for (const auto& p : kPresets) {
      MackeyFunctor m = mackey_preset(lattice_of(g.c_str()), p);
      SubMackey s = hill_filtration(m, 2);
      CHECK(check_mackey_axioms(sub_functor(m, s)).passed());
      CHECK(check_mackey_axioms(quotient_mackey(m, s)).passed());
    }
}

TEST_CASE("inflation along a quotient") {
  LatticePtr c4 = lattice_of("C4");
  const SubgroupLattice& lat = *c4;
  const int n = of_order(lat, 2);
  QuotientGroup q = quotient_group(lat.group(), lat.subgroup(n));
  LatticePtr ql = subgroup_lattice(q.group);
  MackeyFunctor y = burnside_mackey(ql);
  MackeyFunctor x = inflate_mackey(y, c4, n, q.projection);
  CHECK(x.level(0).is_zero());
  CHECK(x.level(n).invariants() == inv(1));
  CHECK(x.level(lat.top()).invariants() == inv(2));
  CHECK(check_mackey_axioms(x).passed());
}

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "slicekit/mackey.hpp"

namespace slicekit {

namespace {

// H-conjugacy class representatives of subgroups of H, largest first.
std::vector<int> burnside_basis(const SubgroupLattice& lat, int h) {
  std::vector<int> reps;
  const auto& elems = lat.subgroup(h).elements;
  for (int l : lat.subgroups_of(h)) {
    int rep = l;
    for (int x : elems) rep = std::min(rep, lat.conjugate(x, l));
    if (rep == l) reps.push_back(l);
  }
  std::reverse(reps.begin(), reps.end());
  return reps;
}

}  // namespace

std::size_t burnside_basis_position(const SubgroupLattice& lat, int h, int l) {
  if (!lat.contains(h, l)) throw std::invalid_argument("burnside_basis_position: L is not a subgroup of H");
  int rep = l;
  for (int x : lat.subgroup(h).elements) rep = std::min(rep, lat.conjugate(x, l));
  const std::vector<int> basis = burnside_basis(lat, h);
  return static_cast<std::size_t>(std::find(basis.begin(), basis.end(), rep) - basis.begin());
}

MackeyFunctor burnside_mackey(const LatticePtr& lattice) {
  const SubgroupLattice& lat = *lattice;
  const PermGroup& g = lat.group();
  const int n = static_cast<int>(lat.size());

  std::vector<std::vector<int>> basis;
  std::vector<FgAbGroup> levels;
  for (int h = 0; h < n; ++h) {
    basis.push_back(burnside_basis(lat, h));
    levels.push_back(FgAbGroup::free(basis.back().size()));
  }
  MackeyFunctor m(lattice, levels);
  auto B = [&](int h) -> const std::vector<int>& { return basis[static_cast<std::size_t>(h)]; };

  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) {
      if (!lat.contains(h, k)) continue;
      IntMatrix res(B(k).size(), B(h).size());
      IntMatrix tr(B(h).size(), B(k).size());
      for (std::size_t col = 0; col < B(h).size(); ++col) {
        const int l = B(h)[col];
        for (int x : double_cosets(g, lat.subgroup(h), lat.subgroup(k), lat.subgroup(l))) {
          const int orbit = lat.intersection(k, lat.conjugate(x, l));
          res(burnside_basis_position(lat, k, orbit), col) += 1;
        }
      }
      for (std::size_t col = 0; col < B(k).size(); ++col)
        tr(burnside_basis_position(lat, h, B(k)[col]), col) = 1;
      m.set_res(h, k, AbHom::unchecked(m.level(h), m.level(k), std::move(res)));
      m.set_tr(h, k, AbHom::unchecked(m.level(k), m.level(h), std::move(tr)));
    }
  for (int x = 0; x < static_cast<int>(g.order()); ++x)
    for (int h = 0; h < n; ++h) {
      const int xh = lat.conjugate(x, h);
      IntMatrix c(B(xh).size(), B(h).size());
      for (std::size_t col = 0; col < B(h).size(); ++col)
        c(burnside_basis_position(lat, xh, lat.conjugate(x, B(h)[col])), col) = 1;
      m.set_conj(x, h, AbHom::unchecked(m.level(h), m.level(xh), std::move(c)));
    }
  return m;
}

MackeyFunctor constant_mackey(const LatticePtr& lattice, const FgAbGroup& a) {
  const SubgroupLattice& lat = *lattice;
  const int n = static_cast<int>(lat.size());
  MackeyFunctor m(lattice, std::vector<FgAbGroup>(static_cast<std::size_t>(n), a));
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) {
      if (!lat.contains(h, k)) continue;
      m.set_res(h, k, AbHom::identity(a));
      m.set_tr(h, k, AbHom::scalar(a, Integer(static_cast<unsigned long>(lat.order(h) / lat.order(k)))));
    }
  for (int x = 0; x < static_cast<int>(lat.group().order()); ++x)
    for (int h = 0; h < n; ++h) m.set_conj(x, h, AbHom::identity(a));
  return m;
}

MackeyFunctor fixed_point_mackey(const LatticePtr& lattice, const std::vector<IntMatrix>& generator_action) {
  const SubgroupLattice& lat = *lattice;
  const PermGroup& g = lat.group();
  const int n = static_cast<int>(lat.size());
  const int order = static_cast<int>(g.order());
  if (generator_action.size() != g.generators().size())
    throw std::invalid_argument("need one action matrix per group generator (" +
                                std::to_string(g.generators().size()) + "), got " +
                                std::to_string(generator_action.size()));
  const std::size_t dim = generator_action.empty() ? 0 : generator_action.front().rows();
  for (const auto& a : generator_action)
    if (a.rows() != dim || a.cols() != dim)
      throw std::invalid_argument("action matrices must all be square of the same size");

  // rho on every element, checking rho(s x) = rho(s) rho(x) along the Cayley graph.
  std::vector<std::optional<IntMatrix>> rho(static_cast<std::size_t>(order));
  rho[0] = IntMatrix::identity(dim);
  std::vector<int> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int x = queue[qi];
    for (std::size_t i = 0; i < generator_action.size(); ++i) {
      const int y = g.mul(g.generator_index(i), x);
      IntMatrix m = generator_action[i] * *rho[static_cast<std::size_t>(x)];
      auto& slot = rho[static_cast<std::size_t>(y)];
      if (!slot) {
        slot = std::move(m);
        queue.push_back(y);
      } else if (!(*slot == m)) {
        throw std::invalid_argument("matrices do not define a group action (relation fails at element " +
                                    std::to_string(y) + ")");
      }
    }
  }
  auto R = [&](int x) -> const IntMatrix& { return *rho[static_cast<std::size_t>(x)]; };

  // Fixed lattice of each subgroup, in Hermite normal form.
  std::vector<IntLattice> fixed;
  std::vector<FgAbGroup> levels;
  for (int h = 0; h < n; ++h) {
    IntMatrix stacked(0, dim);
    for (int x : lat.subgroup(h).elements) stacked = stacked.vconcat(R(x) - IntMatrix::identity(dim));
    IntMatrix null = integer_nullspace(stacked);
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < null.cols(); ++j) cols.push_back(null.column(j));
    fixed.push_back(IntLattice::from_rows(dim, cols));
    levels.push_back(FgAbGroup::free(fixed.back().rank()));
  }
  MackeyFunctor m(lattice, levels);

  auto embed = [&](int h, const IntVector& c) {
    IntVector v(dim);
    const auto& basis = fixed[static_cast<std::size_t>(h)].basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < dim; ++j) v[j] += c[i] * basis[i][j];
    return v;
  };
  auto coords = [&](int h, const IntVector& v) {
    auto c = fixed[static_cast<std::size_t>(h)].coordinates(v);
    if (!c) throw std::logic_error("vector is not fixed by the expected subgroup");
    return *c;
  };
  // Column j of the matrix is f applied to basis vector j of level `from`.
  auto build = [&](int from, int to, auto&& f) {
    const std::size_t src = m.level(from).ngens(), tgt = m.level(to).ngens();
    IntMatrix mat(tgt, src);
    for (std::size_t j = 0; j < src; ++j) {
      IntVector c = coords(to, f(embed(from, m.level(from).basis_vector(j))));
      for (std::size_t i = 0; i < tgt; ++i) mat(i, j) = c[i];
    }
    return AbHom::unchecked(m.level(from), m.level(to), std::move(mat));
  };

  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) {
      if (!lat.contains(h, k)) continue;
      m.set_res(h, k, build(h, k, [](const IntVector& v) { return v; }));
      // Left coset representatives of K in H.
      std::vector<int> reps;
      std::vector<char> covered(static_cast<std::size_t>(order), 0);
      for (int x : lat.subgroup(h).elements) {
        if (covered[static_cast<std::size_t>(x)]) continue;
        reps.push_back(x);
        for (int y : lat.subgroup(k).elements) covered[static_cast<std::size_t>(g.mul(x, y))] = 1;
      }
      m.set_tr(h, k, build(k, h, [&](const IntVector& v) {
                 IntVector sum(dim);
                 for (int r : reps) sum = sum + R(r) * v;
                 return sum;
               }));
    }
  for (int x = 0; x < order; ++x)
    for (int h = 0; h < n; ++h)
      m.set_conj(x, h, build(h, lat.conjugate(x, h), [&](const IntVector& v) { return R(x) * v; }));
  return m;
}

std::vector<IntMatrix> sign_action(const PermGroup& g) {
  std::vector<IntMatrix> out;
  for (const Perm& p : g.generators()) {
    // Parity from the cycle decomposition.
    std::vector<char> seen(p.size(), 0);
    int transpositions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
        seen[j] = 1;
        ++len;
      }
      transpositions += static_cast<int>(len) - 1;
    }
    out.push_back(IntMatrix{{transpositions % 2 == 0 ? 1L : -1L}});
  }
  return out;
}

std::vector<IntMatrix> natural_action(const PermGroup& g) {
  std::vector<IntMatrix> out;
  const auto d = static_cast<std::size_t>(g.degree());
  for (const Perm& p : g.generators()) {
    IntMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(static_cast<std::size_t>(p[i]), i) = 1;
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<IntMatrix> regular_action(const PermGroup& g) {
  std::vector<IntMatrix> out;
  const std::size_t n = g.order();
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    const int s = g.generator_index(i);
    IntMatrix m(n, n);
    for (std::size_t x = 0; x < n; ++x) m(static_cast<std::size_t>(g.mul(s, static_cast<int>(x))), x) = 1;
    out.push_back(std::move(m));
  }
  return out;
}

MackeyFunctor mackey_preset(const LatticePtr& lattice, std::string_view name) {
  const PermGroup& g = lattice->group();
  if (name == "burnside") return burnside_mackey(lattice);
  if (name == "sign") return fixed_point_mackey(lattice, sign_action(g));
  if (name == "regular") return fixed_point_mackey(lattice, regular_action(g));
  if (name == "permutation") return fixed_point_mackey(lattice, natural_action(g));
  constexpr std::string_view prefix = "constant-Z";
  if (name.substr(0, prefix.size()) == prefix) {
    std::string_view rest = name.substr(prefix.size());
    if (rest.empty()) return constant_mackey(lattice, FgAbGroup::cyclic(0));
    if (rest.front() == '/') rest.remove_prefix(1);
    unsigned long modulus = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), modulus);
    if (ec == std::errc() && ptr == rest.data() + rest.size() && modulus >= 2)
      return constant_mackey(lattice, FgAbGroup::cyclic(Integer(modulus)));
  }
  throw std::invalid_argument("unknown Mackey preset '" + std::string(name) + "'");
}

const std::vector<std::string>& mackey_preset_names() {
  static const std::vector<std::string> names{"burnside", "constant-Z", "constant-Z2", "constant-Z/<n>",
                                              "sign", "regular", "permutation"};
  return names;
}

}  // namespace slicekit

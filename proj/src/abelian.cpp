#include "slicekit/abelian.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace slicekit {

std::string InvariantFactors::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

// --- FgAbGroup --------------------------------------------------------------

FgAbGroup::FgAbGroup() : FgAbGroup(0, IntMatrix(0, 0)) {}

FgAbGroup::FgAbGroup(std::size_t ngens, const IntMatrix& relations) {
  if (relations.cols() != ngens)
    throw std::invalid_argument("relation matrix has " + std::to_string(relations.cols()) +
                                " columns, expected " + std::to_string(ngens));
  auto d = std::make_shared<Data>();
  d->ngens = ngens;
  d->relations = relations;
  d->relation_lattice = IntLattice::from_row_matrix(relations);

  // Row convention: x -> x V carries the relation row space onto diag(D).
  SmithForm s = smith_normal_form(d->relation_lattice.basis_matrix());
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < ngens; ++i) {
    if (i < s.rank) {
      const Integer& di = s.diagonal(i);
      if (di == 1) continue;
      d->invariants.torsion.push_back(di);
      d->moduli.push_back(di);
    } else {
      ++d->invariants.free_rank;
      d->moduli.push_back(0);
    }
    kept.push_back(i);
  }
  d->to_canonical = IntMatrix(kept.size(), ngens);
  d->from_canonical = IntMatrix(ngens, kept.size());
  for (std::size_t r = 0; r < kept.size(); ++r) {
    for (std::size_t j = 0; j < ngens; ++j) {
      d->to_canonical(r, j) = s.v(j, kept[r]);
      d->from_canonical(j, r) = s.v_inv(kept[r], j);
    }
  }
  d_ = std::move(d);
}

FgAbGroup FgAbGroup::free(std::size_t rank) { return FgAbGroup(rank, IntMatrix(0, rank)); }

FgAbGroup FgAbGroup::cyclic(const Integer& n) {
  if (n == 0) return free(1);
  IntMatrix r(1, 1);
  r(0, 0) = n;
  return FgAbGroup(1, r);
}

FgAbGroup FgAbGroup::from_invariants(const InvariantFactors& f) {
  const std::size_t n = f.torsion.size() + f.free_rank;
  IntMatrix r(f.torsion.size(), n);
  for (std::size_t i = 0; i < f.torsion.size(); ++i) r(i, i) = f.torsion[i];
  return FgAbGroup(n, r);
}

FgAbGroup FgAbGroup::direct_sum(const std::vector<FgAbGroup>& parts) {
  std::size_t n = 0, r = 0;
  for (const auto& p : parts) {
    n += p.ngens();
    r += p.relation_lattice().rank();
  }
  IntMatrix rel(r, n);
  std::size_t col = 0, row = 0;
  for (const auto& p : parts) {
    for (const auto& b : p.relation_lattice().basis()) {
      for (std::size_t j = 0; j < p.ngens(); ++j) rel(row, col + j) = b[j];
      ++row;
    }
    col += p.ngens();
  }
  return FgAbGroup(n, rel);
}

Integer FgAbGroup::order() const {
  if (!is_finite()) throw std::domain_error("order of an infinite group");
  Integer o = 1;
  for (const auto& d : torsion()) o *= d;
  return o;
}

IntVector FgAbGroup::canonical(const IntVector& coords) const {
  IntVector y = d_->to_canonical * coords;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (d_->moduli[i] != 0) mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), d_->moduli[i].get_mpz_t());
  return y;
}

IntVector FgAbGroup::lift_canonical(const IntVector& canonical_coords) const {
  return d_->from_canonical * canonical_coords;
}

IntVector FgAbGroup::reduce(const IntVector& coords) const {
  return lift_canonical(canonical(coords));
}

bool FgAbGroup::contains_relation(const IntVector& coords) const {
  return d_->relation_lattice.contains(coords);
}

bool FgAbGroup::equal(const IntVector& x, const IntVector& y) const {
  return contains_relation(x - y);
}

std::vector<IntVector> FgAbGroup::enumerate() const {
  if (!is_finite()) throw std::domain_error("cannot enumerate an infinite group");
  std::vector<IntVector> out;
  IntVector c(canonical_rank());
  for (;;) {
    out.push_back(lift_canonical(c));
    std::size_t i = 0;
    while (i < c.size()) {
      c[i] += 1;
      if (c[i] < d_->moduli[i]) break;
      c[i] = 0;
      ++i;
    }
    if (i == c.size()) break;
  }
  return out;
}

bool FgAbGroup::same_presentation(const FgAbGroup& other) const {
  if (d_ == other.d_) return true;
  return ngens() == other.ngens() && relation_lattice() == other.relation_lattice();
}

IntVector FgAbGroup::basis_vector(std::size_t i) const {
  IntVector v(ngens());
  v.at(i) = 1;
  return v;
}

bool equal_elements(const AbElement& x, const AbElement& y) {
  if (!x.group.same_presentation(y.group))
    throw std::invalid_argument("equal_elements: elements live in different groups");
  return x.group.equal(x.coords, y.coords);
}

// --- AbHom ------------------------------------------------------------------

AbHom AbHom::unchecked(FgAbGroup source, FgAbGroup target, IntMatrix matrix) {
  if (matrix.rows() != target.ngens() || matrix.cols() != source.ngens())
    throw std::invalid_argument("hom matrix is " + std::to_string(matrix.rows()) + "x" +
                                std::to_string(matrix.cols()) + ", expected " +
                                std::to_string(target.ngens()) + "x" +
                                std::to_string(source.ngens()));
  AbHom h;
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  h.matrix_ = std::move(matrix);
  return h;
}

AbHom::AbHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix) {
  *this = unchecked(std::move(source), std::move(target), std::move(matrix));
  if (!well_defined()) throw std::domain_error("hom does not respect source relations");
}

AbHom AbHom::identity(const FgAbGroup& g) {
  return unchecked(g, g, IntMatrix::identity(g.ngens()));
}

AbHom AbHom::zero(const FgAbGroup& source, const FgAbGroup& target) {
  return unchecked(source, target, IntMatrix(target.ngens(), source.ngens()));
}

AbHom AbHom::scalar(const FgAbGroup& g, const Integer& k) {
  IntMatrix m = IntMatrix::identity(g.ngens());
  for (std::size_t i = 0; i < g.ngens(); ++i) m(i, i) = k;
  return unchecked(g, g, std::move(m));
}

bool AbHom::well_defined() const {
  for (const auto& r : source_.relation_lattice().basis())
    if (!target_.contains_relation(matrix_ * r)) return false;
  return true;
}

AbHom compose(const AbHom& f, const AbHom& g) {
  if (!g.target().same_presentation(f.source()))
    throw std::invalid_argument("compose: target of g is not the source of f");
  return AbHom::unchecked(g.source(), f.target(), f.matrix() * g.matrix());
}

AbHom add(const AbHom& f, const AbHom& g) {
  if (!f.source().same_presentation(g.source()) || !f.target().same_presentation(g.target()))
    throw std::invalid_argument("add: homs have different source or target");
  return AbHom::unchecked(f.source(), f.target(), f.matrix() + g.matrix());
}

bool is_zero_hom(const AbHom& f) {
  for (std::size_t j = 0; j < f.matrix().cols(); ++j)
    if (!f.target().contains_relation(f.matrix().column(j))) return false;
  return true;
}

bool equal_homs(const AbHom& f, const AbHom& g) {
  if (f.source().ngens() != g.source().ngens() || f.target().ngens() != g.target().ngens())
    return false;
  if (!f.target().same_presentation(g.target())) return false;
  for (std::size_t j = 0; j < f.matrix().cols(); ++j)
    if (!f.target().equal(f.matrix().column(j), g.matrix().column(j))) return false;
  return true;
}

// --- AbSubgroup -------------------------------------------------------------

AbSubgroup::AbSubgroup(FgAbGroup ambient, const IntLattice& pre) : ambient_(std::move(ambient)) {
  if (pre.ambient_dim() != ambient_.ngens())
    throw std::invalid_argument("subgroup lattice lives in the wrong ambient dimension");
  preimage_ = pre.sum(ambient_.relation_lattice());

  const std::size_t k = preimage_.rank();
  std::vector<IntVector> rel;
  for (const auto& r : ambient_.relation_lattice().basis()) rel.push_back(*preimage_.coordinates(r));
  FgAbGroup presented(k, IntMatrix::from_rows(k, rel));
  group_ = FgAbGroup::from_invariants(presented.invariants());
  preimage_to_group_ = presented.to_canonical();
  IntMatrix gens = preimage_.basis_matrix().transpose() * presented.from_canonical();
  inclusion_ = AbHom::unchecked(group_, ambient_, std::move(gens));
}

AbSubgroup AbSubgroup::zero(const FgAbGroup& ambient) {
  return AbSubgroup(ambient, IntLattice(ambient.ngens()));
}

AbSubgroup AbSubgroup::whole(const FgAbGroup& ambient) {
  return AbSubgroup(ambient, IntLattice::full(ambient.ngens()));
}

IntVector AbSubgroup::coordinates(const IntVector& ambient_coords) const {
  auto c = preimage_.coordinates(ambient_coords);
  if (!c) throw std::domain_error("element does not lie in the subgroup");
  return group_.reduce(preimage_to_group_ * *c);
}

AbSubgroup AbSubgroup::sum(const AbSubgroup& other) const {
  if (!ambient_.same_presentation(other.ambient_))
    throw std::invalid_argument("subgroup sum: different ambient groups");
  return AbSubgroup(ambient_, preimage_.sum(other.preimage_));
}

namespace {

// Lattice intersection via the kernel of [B1^T | -B2^T].
IntLattice intersect(const IntLattice& a, const IntLattice& b) {
  const std::size_t n = a.ambient_dim();
  IntMatrix ba = a.basis_matrix().transpose();
  IntMatrix bb = b.basis_matrix().transpose();
  IntMatrix neg(bb.rows(), bb.cols());
  IntMatrix stacked = ba.hconcat(neg - bb);
  IntMatrix null = integer_nullspace(stacked);
  std::vector<IntVector> gens;
  for (std::size_t j = 0; j < null.cols(); ++j) {
    IntVector coeff(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) coeff[i] = null(i, j);
    gens.push_back(ba * coeff);
  }
  return IntLattice::from_rows(n, gens);
}

}  // namespace

AbSubgroup AbSubgroup::intersection(const AbSubgroup& other) const {
  if (!ambient_.same_presentation(other.ambient_))
    throw std::invalid_argument("subgroup intersection: different ambient groups");
  return AbSubgroup(ambient_, intersect(preimage_, other.preimage_));
}

AbSubgroup subgroup_generated(const FgAbGroup& a, const std::vector<IntVector>& elems) {
  return AbSubgroup(a, IntLattice::from_rows(a.ngens(), elems));
}

AbSubgroup subgroup_from_inclusion(const AbHom& inclusion) {
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < inclusion.matrix().cols(); ++j) cols.push_back(inclusion.matrix().column(j));
  return subgroup_generated(inclusion.target(), cols);
}

AbSubgroup preimage(const AbHom& f, const AbSubgroup& s) {
  const std::size_t n = f.source().ngens();
  IntMatrix t = s.preimage().basis_matrix().transpose();
  IntMatrix neg(t.rows(), t.cols());
  IntMatrix null = integer_nullspace(f.matrix().hconcat(neg - t));
  std::vector<IntVector> gens;
  for (std::size_t j = 0; j < null.cols(); ++j) {
    IntVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = null(i, j);
    gens.push_back(std::move(x));
  }
  return AbSubgroup(f.source(), IntLattice::from_rows(n, gens));
}

AbSubgroup kernel(const AbHom& f) { return preimage(f, AbSubgroup::zero(f.target())); }

AbSubgroup joint_kernel(const FgAbGroup& source, const std::vector<AbHom>& maps) {
  if (maps.empty()) return AbSubgroup::whole(source);
  std::vector<FgAbGroup> targets;
  IntMatrix stacked(0, source.ngens());
  for (const auto& m : maps) {
    if (!m.source().same_presentation(source))
      throw std::invalid_argument("joint_kernel: map has a different source");
    targets.push_back(m.target());
    stacked = stacked.vconcat(m.matrix());
  }
  return kernel(AbHom::unchecked(source, FgAbGroup::direct_sum(targets), std::move(stacked)));
}

AbSubgroup image(const AbHom& f) { return subgroup_from_inclusion(f); }

AbQuotient quotient(const AbSubgroup& s) {
  const FgAbGroup& a = s.ambient();
  FgAbGroup presented(a.ngens(), s.preimage().basis_matrix());
  AbQuotient q;
  q.group = FgAbGroup::from_invariants(presented.invariants());
  q.projection = AbHom::unchecked(a, q.group, presented.to_canonical());
  q.lift = presented.from_canonical();
  return q;
}

AbQuotient quotient(const FgAbGroup& a, const AbHom& inclusion) {
  if (!inclusion.target().same_presentation(a))
    throw std::invalid_argument("quotient: inclusion does not land in the group");
  if (!inclusion.well_defined()) throw std::domain_error("quotient: inclusion is not well defined");
  return quotient(subgroup_from_inclusion(inclusion));
}

AbHom restrict_hom(const AbHom& f, const AbSubgroup& s, const AbSubgroup& t) {
  const IntMatrix gens = s.generator_matrix();
  IntMatrix m(t.group().ngens(), gens.cols());
  for (std::size_t j = 0; j < gens.cols(); ++j) {
    IntVector w = f.apply(gens.column(j));
    if (!t.contains(w)) throw std::domain_error("restrict_hom: image leaves the target subgroup");
    IntVector c = t.coordinates(w);
    for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
  }
  return AbHom::unchecked(s.group(), t.group(), std::move(m));
}

AbHom induced_hom(const AbHom& f, const AbSubgroup& s, const AbQuotient& qs, const AbSubgroup& t,
                  const AbQuotient& qt) {
  for (const auto& b : s.preimage().basis())
    if (!t.contains(f.apply(b))) throw std::domain_error("induced_hom: f(S) is not inside T");
  IntMatrix m(qt.group.ngens(), qs.group.ngens());
  for (std::size_t j = 0; j < qs.group.ngens(); ++j) {
    IntVector w = qt.group.reduce(qt.projection.apply(f.apply(qs.lift.column(j))));
    for (std::size_t i = 0; i < w.size(); ++i) m(i, j) = w[i];
  }
  return AbHom::unchecked(qs.group, qt.group, std::move(m));
}

}  // namespace slicekit

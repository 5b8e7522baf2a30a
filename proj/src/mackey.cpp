#include "slicekit/mackey.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace slicekit {

MackeyFunctor::MackeyFunctor(LatticePtr lattice, std::vector<FgAbGroup> levels)
    : lattice_(std::move(lattice)), levels_(std::move(levels)) {
  if (!lattice_) throw std::invalid_argument("Mackey functor needs a subgroup lattice");
  if (levels_.size() != lattice_->size())
    throw std::invalid_argument("expected " + std::to_string(lattice_->size()) + " levels, got " +
                                std::to_string(levels_.size()));
  const std::size_t n = levels_.size();
  res_.resize(n * n);
  tr_.resize(n * n);
  conj_.resize(lattice_->group().order() * n);
}

namespace {

void check_endpoints(const AbHom& map, const FgAbGroup& src, const FgAbGroup& tgt, const char* what) {
  if (!map.source().same_presentation(src) || !map.target().same_presentation(tgt))
    throw std::invalid_argument(std::string(what) + ": map does not connect the expected levels");
}

}  // namespace

void MackeyFunctor::set_res(int h, int k, AbHom map) {
  if (!lattice_->contains(h, k)) throw std::invalid_argument("set_res: K is not a subgroup of H");
  check_endpoints(map, level(h), level(k), "set_res");
  res_[pair(h, k)] = std::move(map);
}

void MackeyFunctor::set_tr(int h, int k, AbHom map) {
  if (!lattice_->contains(h, k)) throw std::invalid_argument("set_tr: K is not a subgroup of H");
  check_endpoints(map, level(k), level(h), "set_tr");
  tr_[pair(h, k)] = std::move(map);
}

void MackeyFunctor::set_conj(int g, int h, AbHom map) {
  if (g < 0 || static_cast<std::size_t>(g) >= group().order())
    throw std::invalid_argument("set_conj: no such group element");
  check_endpoints(map, level(h), level(lattice_->conjugate(g, h)), "set_conj");
  conj_[conj_slot(g, h)] = std::move(map);
}

void MackeyFunctor::complete() {
  const SubgroupLattice& lat = *lattice_;
  const int n = static_cast<int>(levels_.size());

  for (int h = 0; h < n; ++h) {
    if (!has_res(h, h)) res_[pair(h, h)] = AbHom::identity(level(h));
    if (!has_tr(h, h)) tr_[pair(h, h)] = AbHom::identity(level(h));
  }

  // Pairs by increasing index [H:K]; shorter chains are always done first.
  std::vector<std::pair<int, int>> pairs;
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k)
      if (h != k && lat.contains(h, k)) pairs.emplace_back(h, k);
  std::stable_sort(pairs.begin(), pairs.end(), [&](auto a, auto b) {
    return lat.order(a.first) / lat.order(a.second) < lat.order(b.first) / lat.order(b.second);
  });
  for (auto [h, k] : pairs) {
    for (int l = 0; l < n && !has_res(h, k); ++l)
      if (l != h && l != k && lat.contains(h, l) && lat.contains(l, k) && has_res(h, l) && has_res(l, k))
        res_[pair(h, k)] = compose(res(l, k), res(h, l));
    for (int l = 0; l < n && !has_tr(h, k); ++l)
      if (l != h && l != k && lat.contains(h, l) && lat.contains(l, k) && has_tr(h, l) && has_tr(l, k))
        tr_[pair(h, k)] = compose(tr(h, l), tr(l, k));
    if (!has_res(h, k))
      throw std::invalid_argument("cannot derive restriction from " + lat.label(h) + " to " + lat.label(k));
    if (!has_tr(h, k))
      throw std::invalid_argument("cannot derive transfer from " + lat.label(k) + " to " + lat.label(h));
  }

  const PermGroup& g = group();
  const int order = static_cast<int>(g.order());
  for (int h = 0; h < n; ++h)
    if (!has_conj(g.identity(), h)) conj_[conj_slot(g.identity(), h)] = AbHom::identity(level(h));

  // Elements whose conjugations are known on every level act as generators.
  std::vector<int> known;
  for (int x = 0; x < order; ++x) {
    bool all = true;
    for (int h = 0; h < n && all; ++h) all = has_conj(x, h);
    if (all && x != g.identity()) known.push_back(x);
  }
  std::vector<char> reached(static_cast<std::size_t>(order), 0);
  std::vector<int> queue{g.identity()};
  reached[0] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int x = queue[qi];
    for (int s : known) {
      const int y = g.mul(s, x);
      if (reached[static_cast<std::size_t>(y)]) continue;
      reached[static_cast<std::size_t>(y)] = 1;
      queue.push_back(y);
      for (int h = 0; h < n; ++h)
        if (!has_conj(y, h)) conj_[conj_slot(y, h)] = compose(conj(s, lat.conjugate(x, h)), conj(x, h));
    }
  }
  for (int x = 0; x < order; ++x)
    for (int h = 0; h < n; ++h)
      if (!has_conj(x, h))
        throw std::invalid_argument("cannot derive conjugation by element " + std::to_string(x) + " on " +
                                    lat.label(h));
}

const AbHom& MackeyFunctor::res(int h, int k) const {
  const auto& m = res_.at(pair(h, k));
  if (!m) throw std::out_of_range("no restriction " + lattice_->label(h) + " -> " + lattice_->label(k));
  return *m;
}

const AbHom& MackeyFunctor::tr(int h, int k) const {
  const auto& m = tr_.at(pair(h, k));
  if (!m) throw std::out_of_range("no transfer " + lattice_->label(k) + " -> " + lattice_->label(h));
  return *m;
}

const AbHom& MackeyFunctor::conj(int g, int h) const {
  const auto& m = conj_.at(conj_slot(g, h));
  if (!m) throw std::out_of_range("no conjugation by " + std::to_string(g) + " on " + lattice_->label(h));
  return *m;
}

bool MackeyFunctor::is_zero() const {
  return std::all_of(levels_.begin(), levels_.end(), [](const FgAbGroup& a) { return a.is_zero(); });
}

// --- axioms -----------------------------------------------------------------

std::string AxiomReport::to_string() const {
  std::ostringstream os;
  if (passed()) {
    os << "PASS (" << identities_checked << " identities)";
    return os.str();
  }
  os << "FAIL (" << failures.size() << " of " << identities_checked << " identities)";
  for (const auto& f : failures) os << "\n  " << f.identity << ": " << f.witness;
  return os.str();
}

AxiomReport check_mackey_axioms(const MackeyFunctor& m) {
  const SubgroupLattice& lat = m.lattice();
  const PermGroup& g = m.group();
  const int n = static_cast<int>(lat.size());
  const int order = static_cast<int>(g.order());
  AxiomReport report;
  auto L = [&](int h) { return lat.label(h); };
  auto expect = [&](bool ok, const char* identity, const std::string& witness) {
    ++report.identities_checked;
    if (!ok) report.failures.push_back({identity, witness});
  };

  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) {
      if (!lat.contains(h, k)) continue;
      const std::string w = "H=" + L(h) + " K=" + L(k);
      if (!m.has_res(h, k) || !m.has_tr(h, k)) {
        expect(false, "missing-map", w);
        continue;
      }
      expect(m.res(h, k).well_defined(), "res-well-defined", w);
      expect(m.tr(h, k).well_defined(), "tr-well-defined", w);
    }
  for (int x = 0; x < order; ++x)
    for (int h = 0; h < n; ++h) {
      if (!m.has_conj(x, h)) {
        expect(false, "missing-map", "g=" + std::to_string(x) + " H=" + L(h));
        continue;
      }
      expect(m.conj(x, h).well_defined(), "conj-well-defined", "g=" + std::to_string(x) + " H=" + L(h));
    }
  if (!report.passed()) return report;

  for (int h = 0; h < n; ++h) {
    expect(equal_homs(m.res(h, h), AbHom::identity(m.level(h))), "res-unit", "H=" + L(h));
    expect(equal_homs(m.tr(h, h), AbHom::identity(m.level(h))), "tr-unit", "H=" + L(h));
  }

  // Transitivity along K <= H <= L.
  for (int l = 0; l < n; ++l)
    for (int h = 0; h < n; ++h) {
      if (!lat.contains(l, h)) continue;
      for (int k = 0; k < n; ++k) {
        if (!lat.contains(h, k)) continue;
        const std::string w = "L=" + L(l) + " H=" + L(h) + " K=" + L(k);
        expect(equal_homs(compose(m.res(h, k), m.res(l, h)), m.res(l, k)), "res-transitivity", w);
        expect(equal_homs(compose(m.tr(l, h), m.tr(h, k)), m.tr(l, k)), "tr-transitivity", w);
      }
    }

  // Conjugation: trivial on H at level H, an action, compatible with res/tr.
  for (int h = 0; h < n; ++h)
    for (int x : lat.subgroup(h).elements)
      expect(equal_homs(m.conj(x, h), AbHom::identity(m.level(h))), "conj-inner-trivial",
             "g=" + std::to_string(x) + " H=" + L(h));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int h = 0; h < n; ++h)
        expect(equal_homs(compose(m.conj(a, lat.conjugate(b, h)), m.conj(b, h)), m.conj(g.mul(a, b), h)),
               "conj-action", "g=" + std::to_string(a) + " g'=" + std::to_string(b) + " H=" + L(h));
  for (int x = 0; x < order; ++x)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        if (!lat.contains(h, k)) continue;
        const int xh = lat.conjugate(x, h), xk = lat.conjugate(x, k);
        const std::string w = "g=" + std::to_string(x) + " H=" + L(h) + " K=" + L(k);
        expect(equal_homs(compose(m.conj(x, k), m.res(h, k)), compose(m.res(xh, xk), m.conj(x, h))),
               "conj-res", w);
        expect(equal_homs(compose(m.conj(x, h), m.tr(h, k)), compose(m.tr(xh, xk), m.conj(x, k))),
               "conj-tr", w);
      }

  // res^H_J tr^H_K = sum over J\H/K of tr^J_{J cap gKg^-1} c_g res^K_{g^-1Jg cap K}
  for (int h = 0; h < n; ++h)
    for (int j = 0; j < n; ++j) {
      if (!lat.contains(h, j)) continue;
      for (int k = 0; k < n; ++k) {
        if (!lat.contains(h, k)) continue;
        AbHom lhs = compose(m.res(h, j), m.tr(h, k));
        AbHom rhs = AbHom::zero(m.level(k), m.level(j));
        for (int x : double_cosets(g, lat.subgroup(h), lat.subgroup(j), lat.subgroup(k))) {
          const int inner = lat.intersection(lat.conjugate(g.inv(x), j), k);
          const int outer = lat.conjugate(x, inner);
          rhs = add(rhs, compose(m.tr(j, outer), compose(m.conj(x, inner), m.res(k, inner))));
        }
        expect(equal_homs(lhs, rhs), "double-coset", "H=" + L(h) + " J=" + L(j) + " K=" + L(k));
      }
    }
  return report;
}

// --- restriction and inflation ----------------------------------------------

MackeyFunctor restrict_mackey(const MackeyFunctor& m, int h) {
  const SubgroupLattice& lat = m.lattice();
  EmbeddedGroup sub = subgroup_as_group(m.group(), lat.subgroup(h));
  LatticePtr sublat = subgroup_lattice(sub.group);
  const int n = static_cast<int>(sublat->size());

  std::vector<int> to_parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Subgroup s;
    for (int x : sublat->subgroup(i).elements) s.elements.push_back(sub.to_parent[static_cast<std::size_t>(x)]);
    std::sort(s.elements.begin(), s.elements.end());
    to_parent[static_cast<std::size_t>(i)] = lat.require_index(s);
  }
  auto P = [&](int i) { return to_parent[static_cast<std::size_t>(i)]; };

  std::vector<FgAbGroup> levels;
  for (int i = 0; i < n; ++i) levels.push_back(m.level(P(i)));
  MackeyFunctor out(sublat, std::move(levels));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (sublat->contains(a, b)) {
        out.set_res(a, b, m.res(P(a), P(b)));
        out.set_tr(a, b, m.tr(P(a), P(b)));
      }
  for (int x = 0; x < static_cast<int>(sub.group.order()); ++x)
    for (int a = 0; a < n; ++a) out.set_conj(x, a, m.conj(sub.to_parent[static_cast<std::size_t>(x)], P(a)));
  return out;
}

int image_in_quotient(const SubgroupLattice& lat, const SubgroupLattice& quotient_lat, int h,
                      const std::vector<int>& projection) {
  Subgroup img;
  for (int x : lat.subgroup(h).elements) img.elements.push_back(projection.at(static_cast<std::size_t>(x)));
  std::sort(img.elements.begin(), img.elements.end());
  img.elements.erase(std::unique(img.elements.begin(), img.elements.end()), img.elements.end());
  return quotient_lat.require_index(img);
}

MackeyFunctor inflate_mackey(const MackeyFunctor& y, const LatticePtr& lattice, int n,
                             const std::vector<int>& projection) {
  const SubgroupLattice& lat = *lattice;
  const int count = static_cast<int>(lat.size());
  std::vector<int> img(static_cast<std::size_t>(count), -1);
  std::vector<FgAbGroup> levels;
  for (int h = 0; h < count; ++h) {
    if (lat.contains(h, n)) {
      img[static_cast<std::size_t>(h)] = image_in_quotient(lat, y.lattice(), h, projection);
      levels.push_back(y.level(img[static_cast<std::size_t>(h)]));
    } else {
      levels.emplace_back();
    }
  }
  MackeyFunctor out(lattice, levels);
  auto I = [&](int h) { return img[static_cast<std::size_t>(h)]; };
  for (int h = 0; h < count; ++h)
    for (int k = 0; k < count; ++k) {
      if (!lat.contains(h, k)) continue;
      if (I(h) >= 0 && I(k) >= 0) {
        out.set_res(h, k, y.res(I(h), I(k)));
        out.set_tr(h, k, y.tr(I(h), I(k)));
      } else {
        out.set_res(h, k, AbHom::zero(out.level(h), out.level(k)));
        out.set_tr(h, k, AbHom::zero(out.level(k), out.level(h)));
      }
    }
  for (int x = 0; x < static_cast<int>(lat.group().order()); ++x)
    for (int h = 0; h < count; ++h) {
      if (I(h) >= 0)
        out.set_conj(x, h, y.conj(projection.at(static_cast<std::size_t>(x)), I(h)));
      else
        out.set_conj(x, h, AbHom::zero(out.level(h), out.level(lat.conjugate(x, h))));
    }
  return out;
}

// --- sub-functors -------------------------------------------------------------

SubMackey SubMackey::zero(const MackeyFunctor& m) {
  std::vector<AbSubgroup> levels;
  for (int h = 0; h < static_cast<int>(m.num_levels()); ++h) levels.push_back(AbSubgroup::zero(m.level(h)));
  return SubMackey(std::move(levels));
}

SubMackey SubMackey::whole(const MackeyFunctor& m) {
  std::vector<AbSubgroup> levels;
  for (int h = 0; h < static_cast<int>(m.num_levels()); ++h) levels.push_back(AbSubgroup::whole(m.level(h)));
  return SubMackey(std::move(levels));
}

bool SubMackey::contains(const SubMackey& other) const {
  if (other.levels_.size() != levels_.size()) return false;
  for (std::size_t h = 0; h < levels_.size(); ++h)
    if (!levels_[h].contains(other.levels_[h])) return false;
  return true;
}

bool SubMackey::is_zero() const {
  return std::all_of(levels_.begin(), levels_.end(), [](const AbSubgroup& s) { return s.group().is_zero(); });
}

std::vector<AxiomFailure> closure_failures(const MackeyFunctor& m, const SubMackey& s) {
  const SubgroupLattice& lat = m.lattice();
  const int n = static_cast<int>(lat.size());
  std::vector<AxiomFailure> out;
  auto sends_into = [&](const AbHom& f, int from, int to) {
    for (const auto& b : s.level(from).preimage().basis())
      if (!s.level(to).contains(f.apply(b))) return false;
    return true;
  };
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) {
      if (!lat.contains(h, k)) continue;
      if (!sends_into(m.res(h, k), h, k)) out.push_back({"res-closure", "H=" + lat.label(h) + " K=" + lat.label(k)});
      if (!sends_into(m.tr(h, k), k, h)) out.push_back({"tr-closure", "H=" + lat.label(h) + " K=" + lat.label(k)});
    }
  for (int x = 0; x < static_cast<int>(m.group().order()); ++x)
    for (int h = 0; h < n; ++h)
      if (!sends_into(m.conj(x, h), h, lat.conjugate(x, h)))
        out.push_back({"conj-closure", "g=" + std::to_string(x) + " H=" + lat.label(h)});
  return out;
}

SubMackey sub_mackey_generated(const MackeyFunctor& m, const std::vector<MackeyElement>& elems) {
  const SubgroupLattice& lat = m.lattice();
  const int n = static_cast<int>(lat.size());
  const int order = static_cast<int>(m.group().order());
  std::vector<IntLattice> span;
  for (int h = 0; h < n; ++h) span.push_back(m.level(h).relation_lattice());

  std::deque<int> work;
  std::vector<char> queued(static_cast<std::size_t>(n), 0);
  auto push = [&](int h, const IntVector& v) {
    if (span[static_cast<std::size_t>(h)].insert(v) && !queued[static_cast<std::size_t>(h)]) {
      queued[static_cast<std::size_t>(h)] = 1;
      work.push_back(h);
    }
  };
  for (const auto& e : elems) {
    if (e.subgroup < 0 || e.subgroup >= n) throw std::invalid_argument("generator names no subgroup");
    if (e.coords.size() != m.level(e.subgroup).ngens())
      throw std::invalid_argument("generator has the wrong number of coordinates");
    push(e.subgroup, e.coords);
  }

  while (!work.empty()) {
    const int h = work.front();
    work.pop_front();
    queued[static_cast<std::size_t>(h)] = 0;
    const std::vector<IntVector> basis = span[static_cast<std::size_t>(h)].basis();
    for (const auto& b : basis) {
      for (int k = 0; k < n; ++k) {
        if (k != h && lat.contains(h, k)) push(k, m.res(h, k).apply(b));
        if (k != h && lat.contains(k, h)) push(k, m.tr(k, h).apply(b));
      }
      for (int x = 0; x < order; ++x) push(lat.conjugate(x, h), m.conj(x, h).apply(b));
    }
  }

  std::vector<AbSubgroup> levels;
  for (int h = 0; h < n; ++h) levels.emplace_back(m.level(h), span[static_cast<std::size_t>(h)]);
  return SubMackey(std::move(levels));
}

MackeyFunctor sub_functor(const MackeyFunctor& m, const SubMackey& s) {
  const SubgroupLattice& lat = m.lattice();
  const int n = static_cast<int>(lat.size());
  std::vector<FgAbGroup> levels;
  for (int h = 0; h < n; ++h) levels.push_back(s.level(h).group());
  MackeyFunctor out(m.lattice_ptr(), std::move(levels));
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) {
      if (!lat.contains(h, k)) continue;
      out.set_res(h, k, restrict_hom(m.res(h, k), s.level(h), s.level(k)));
      out.set_tr(h, k, restrict_hom(m.tr(h, k), s.level(k), s.level(h)));
    }
  for (int x = 0; x < static_cast<int>(m.group().order()); ++x)
    for (int h = 0; h < n; ++h)
      out.set_conj(x, h, restrict_hom(m.conj(x, h), s.level(h), s.level(lat.conjugate(x, h))));
  return out;
}

SubMackey relative_sub(const MackeyFunctor& m, const SubMackey& outer, const SubMackey& inner) {
  std::vector<AbSubgroup> levels;
  for (int h = 0; h < static_cast<int>(m.num_levels()); ++h) {
    const AbSubgroup& o = outer.level(h);
    std::vector<IntVector> gens;
    for (const auto& b : inner.level(h).preimage().basis()) {
      if (!o.contains(b)) throw std::invalid_argument("relative_sub: inner is not contained in outer");
      gens.push_back(o.coordinates(b));
    }
    levels.push_back(subgroup_generated(o.group(), gens));
  }
  return SubMackey(std::move(levels));
}

MackeyQuotient quotient_mackey_with_projection(const MackeyFunctor& m, const SubMackey& s) {
  auto failures = closure_failures(m, s);
  if (!failures.empty())
    throw std::invalid_argument("sub-functor is not closed (" + failures.front().identity + " at " +
                                failures.front().witness + ")");
  const SubgroupLattice& lat = m.lattice();
  const int n = static_cast<int>(lat.size());
  MackeyQuotient q;
  std::vector<FgAbGroup> levels;
  for (int h = 0; h < n; ++h) {
    q.levels.push_back(quotient(s.level(h)));
    levels.push_back(q.levels.back().group);
  }
  q.functor = MackeyFunctor(m.lattice_ptr(), std::move(levels));
  auto Q = [&](int h) -> const AbQuotient& { return q.levels[static_cast<std::size_t>(h)]; };
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) {
      if (!lat.contains(h, k)) continue;
      q.functor.set_res(h, k, induced_hom(m.res(h, k), s.level(h), Q(h), s.level(k), Q(k)));
      q.functor.set_tr(h, k, induced_hom(m.tr(h, k), s.level(k), Q(k), s.level(h), Q(h)));
    }
  for (int x = 0; x < static_cast<int>(m.group().order()); ++x)
    for (int h = 0; h < n; ++h) {
      const int xh = lat.conjugate(x, h);
      q.functor.set_conj(x, h, induced_hom(m.conj(x, h), s.level(h), Q(h), s.level(xh), Q(xh)));
    }
#ifndef NDEBUG
  AxiomReport report = check_mackey_axioms(q.functor);
  if (!report.passed()) throw std::logic_error("quotient functor fails the axioms: " + report.to_string());
#endif
  return q;
}

MackeyFunctor quotient_mackey(const MackeyFunctor& m, const SubMackey& s) {
  return quotient_mackey_with_projection(m, s).functor;
}

// --- filtrations --------------------------------------------------------------

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

long long Rational::floor() const {
  long long q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

SubMackey hill_filtration(const MackeyFunctor& m, long long k) {
  const SubgroupLattice& lat = m.lattice();
  if (k <= 1) return SubMackey::whole(m);
  if (k > static_cast<long long>(m.group().order())) return SubMackey::zero(m);
  std::vector<AbSubgroup> levels;
  for (int h = 0; h < static_cast<int>(lat.size()); ++h) {
    std::vector<AbHom> maps;
    for (int j : lat.subgroups_of(h))
      if (static_cast<long long>(lat.order(j)) < k) maps.push_back(m.res(h, j));
    levels.push_back(joint_kernel(m.level(h), maps));
  }
  SubMackey f(std::move(levels));
  auto failures = closure_failures(m, f);
  if (!failures.empty())
    throw std::logic_error("filtration level is not a sub-functor (" + failures.front().identity + " at " +
                           failures.front().witness + "); check the Mackey axioms");
  return f;
}

SubMackey order_generated_filtration(const MackeyFunctor& m, const Rational& c) {
  const SubgroupLattice& lat = m.lattice();
  std::vector<MackeyElement> seeds;
  for (int h = 0; h < static_cast<int>(lat.size()); ++h) {
    if (!c.bounds(static_cast<long long>(lat.order(h)))) continue;
    for (std::size_t i = 0; i < m.level(h).ngens(); ++i) seeds.push_back({h, m.level(h).basis_vector(i)});
  }
  return sub_mackey_generated(m, seeds);
}

AbSubgroup reg_coh(const MackeyFunctor& m, int h) {
  const SubgroupLattice& lat = m.lattice();
  std::vector<AbHom> maps;
  for (int j : lat.subgroups_of(h))
    if (j != h) maps.push_back(m.res(h, j));
  return joint_kernel(m.level(h), maps);
}

}  // namespace slicekit

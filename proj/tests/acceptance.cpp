#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "slicekit/chart.hpp"
#include "slicekit/serialize.hpp"
#include "slicekit/slice.hpp"

using namespace slicekit;
namespace fs = std::filesystem;

namespace {

const std::vector<std::string> kGroups{"trivial", "C2", "C3", "C4", "V4", "S3", "D8", "Q8"};
const std::vector<std::string> kFunctors{"burnside", "constant-Z", "constant-Z2", "sign", "regular"};

/// Collects failed checks of one criterion.
class Checker {
public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  bool passed() const { return failed_ == 0; }
  std::size_t checks() const { return checks_; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }

private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

LatticePtr lattice_of(const std::string& g) { return subgroup_lattice(named_group(g)); }

void for_each_pair(const std::function<void(const std::string&, const std::string&, const MackeyFunctor&)>& f) {
  for (const auto& g : kGroups) {
    LatticePtr lp = lattice_of(g);
    for (const auto& p : kFunctors) f(g, p, mackey_preset(lp, p));
  }
}

std::string where(const std::string& g, const std::string& p) { return g + "/" + p; }

// --- 1 ------------------------------------------------------------------------

void mackey_axioms(Checker& c) {
  for_each_pair([&](const std::string& g, const std::string& p, const MackeyFunctor& m) {
    AxiomReport r = check_mackey_axioms(m);
    c.expect(r.passed(), where(g, p) + ": " + r.to_string());
    c.expect(r.identities_checked > 0, where(g, p) + ": nothing checked");
  });
}

// --- 2 ------------------------------------------------------------------------

std::vector<int> parent_indices(const SubgroupLattice& lat, const SubgroupLattice& sub, int h) {
  std::vector<int> out;
  const auto& elems = lat.subgroup(h).elements;
  for (int i = 0; i < static_cast<int>(sub.size()); ++i) {
    Subgroup s;
    for (int x : sub.subgroup(i).elements) s.elements.push_back(elems[static_cast<std::size_t>(x)]);
    out.push_back(lat.require_index(s));
  }
  return out;
}

void hill_filtration_suite(Checker& c) {
  for_each_pair([&](const std::string& g, const std::string& p, const MackeyFunctor& m) {
    const SubgroupLattice& lat = m.lattice();
    const std::string at = where(g, p);
    const auto order = static_cast<long long>(lat.group().order());
    c.expect(hill_filtration(m, 1) == SubMackey::whole(m), at + ": F^1 != M");
    for (long long k = 1; k <= order + 1; ++k) {
      SubMackey fk = hill_filtration(m, k);
      const std::string atk = at + " k=" + std::to_string(k);
      c.expect(fk.contains(hill_filtration(m, k + 1)), atk + ": F^{k+1} not inside F^k");
      c.expect(is_closed(m, fk), atk + ": F^k not closed");
      for (int h = 0; h < static_cast<int>(lat.size()); ++h)
        if (static_cast<long long>(lat.order(h)) < k)
          c.expect(fk.level(h).group().is_zero(), atk + ": F^k nonzero at " + lat.label(h));
      // vanishing below order k gives F^k = M
      MackeyFunctor n = sub_functor(m, fk);
      c.expect(hill_filtration(n, k) == SubMackey::whole(n), atk + ": F^k of F^k M is not everything");
    }
    for (int h = 0; h < static_cast<int>(lat.size()); ++h) {
      MackeyFunctor r = restrict_mackey(m, h);
      std::vector<int> parent = parent_indices(lat, r.lattice(), h);
      for (long long k = 1; k <= static_cast<long long>(lat.order(h)) + 1; ++k) {
        SubMackey outer = hill_filtration(m, k), inner = hill_filtration(r, k);
        for (int i = 0; i < static_cast<int>(r.num_levels()); ++i)
          c.expect(inner.level(i).preimage() == outer.level(parent[static_cast<std::size_t>(i)]).preimage(),
                   at + ": restriction to " + lat.label(h) + " does not commute at k=" + std::to_string(k));
      }
    }
  });
}

// --- 3 ------------------------------------------------------------------------

void reconstruction(Checker& c) {
  for_each_pair([&](const std::string& g, const std::string& p, const MackeyFunctor& m) {
    const SubgroupLattice& lat = m.lattice();
    for (const EMTower& t : {em_tower_plus(m), em_tower_minus(m)}) {
      const std::string at = where(g, p) + " shift " + std::to_string(t.shift());
      c.expect(t.stage(t.lo()) == SubMackey::whole(m), at + ": tower does not start at M");
      c.expect(t.stage(t.hi() + 1).is_zero(), at + ": tower does not end at 0");
      for (int h = 0; h < static_cast<int>(lat.size()); ++h) {
        std::size_t rank = 0;
        Integer order = 1;
        for (long long k = t.lo(); k <= t.hi(); ++k) {
          const FgAbGroup& s = t.slice(k).level(h);
          rank += s.free_rank();
          for (const auto& d : s.torsion()) order *= d;
        }
        const FgAbGroup& level = m.level(h);
        c.expect(rank == level.free_rank(), at + ": free ranks do not add at " + lat.label(h));
        // only finite levels have an order to multiply
        if (level.is_finite())
          c.expect(order == level.order(), at + ": torsion orders do not multiply at " + lat.label(h));
      }
      for (long long k = t.lo(); k <= t.hi(); ++k) {
        const std::string atk = at + " k=" + std::to_string(k);
        c.expect(t.stage(k).contains(t.stage(k + 1)), atk + ": stages do not decrease");
        const MackeyQuotient& q = t.slice_with_projection(k);
        SubMackey inner = relative_sub(m, t.stage(k), t.stage(k + 1));
        for (int h = 0; h < static_cast<int>(lat.size()); ++h) {
          const AbHom& proj = q.levels[static_cast<std::size_t>(h)].projection;
          c.expect(kernel(proj).preimage() == inner.level(h).preimage(),
                   atk + ": kernel of the projection is not the next stage at " + lat.label(h));
          c.expect(image(proj) == AbSubgroup::whole(proj.target()),
                   atk + ": projection not onto at " + lat.label(h));
          c.expect(proj.target().same_presentation(q.functor.level(h)),
                   atk + ": projection target is not the slice at " + lat.label(h));
        }
      }
    }
  });
}

// --- 4 ------------------------------------------------------------------------

InvariantFactors inv(std::size_t free_rank, std::initializer_list<long> torsion = {}) {
  InvariantFactors f;
  f.free_rank = free_rank;
  for (long d : torsion) f.torsion.emplace_back(d);
  return f;
}

void golden_values(Checker& c) {
  LatticePtr c2 = lattice_of("C2");
  const int e = 0, top = c2->top();
  EMTower b = em_tower_plus(burnside_mackey(c2));
  c.expect(b.slice_degrees() == std::vector<long long>{1, 2}, "C2 Burnside plus: slice degrees");
  c.expect(b.slice(1).level(e).invariants() == inv(1), "C2 Burnside plus: slice 1 at e");
  c.expect(b.slice(1).level(top).invariants() == inv(1), "C2 Burnside plus: slice 1 at C2");
  c.expect(b.slice(2).level(e).is_zero(), "C2 Burnside plus: slice 2 at e");
  c.expect(b.slice(2).level(top).invariants() == inv(1), "C2 Burnside plus: slice 2 at C2");

  MackeyFunctor z = constant_mackey(c2, FgAbGroup::cyclic(0));
  EMTower zp = em_tower_plus(z);
  c.expect(zp.slice_degrees() == std::vector<long long>{1}, "C2 constant Z plus: single slice at 1");
  c.expect(zp.slice(1).level(e).invariants() == inv(1) && zp.slice(1).level(top).invariants() == inv(1),
           "C2 constant Z plus: slice 1 is constant Z");

  EMTower zm = em_tower_minus(z);
  c.expect(zm.slice_degrees() == std::vector<long long>{-2, -1}, "C2 constant Z minus: slice degrees");
  c.expect(zm.slice(-2).level(e).is_zero(), "C2 constant Z minus: slice -2 at e");
  c.expect(zm.slice(-2).level(top).invariants() == inv(0, {2}), "C2 constant Z minus: slice -2 at C2");

  // a tiny end-to-end check through the command line
  std::ostringstream out, err;
  const int code = cli::run({"--group", "C2", "--mackey", "burnside", "tower", "--shift", "+1", "--format", "json"},
                            out, err);
  c.expect(code == 0, "cli tower exit code");
  if (code == 0) {
    Json j = parse_json(out.str());
    c.expect(j["slices"].size() == 2 && j["slices"].contains("1") && j["slices"].contains("2"),
             "cli tower slices at 1 and 2");
  }
}

// --- 5 ------------------------------------------------------------------------

void cell_calculus(Checker& c) {
  for (const auto& g : kGroups) {
    LatticePtr lp = lattice_of(g);
    const SubgroupLattice& lat = *lp;
    const auto order = static_cast<long long>(lat.group().order());
    std::vector<QuotientData> quotients;
    for (int n = 0; n < static_cast<int>(lat.size()); ++n)
      if (lat.is_normal(n)) quotients.push_back(quotient_data(lat, n));
    for (long long d = -4 * order; d <= 4 * order; ++d)
      for (const auto& cell : slice_cells(lp, d, true)) {
        const std::string at = g + " " + cell.to_string();
        SliceCell dual = cell_dual(cell);
        c.expect(cell_dual(dual) == cell, at + ": dual is not an involution");
        c.expect(dual.dimension() == -d, at + ": dual does not negate the dimension");
        for (const auto& q : quotients) {
          auto image = geometric_fixed_points_cell(cell, q);
          const bool contains = lat.contains(cell.subgroup, q.normal);
          c.expect(image.has_value() == contains, at + ": Phi^N support");
          if (image)
            c.expect(image->dimension() * static_cast<long long>(lat.order(q.normal)) == d,
                     at + ": Phi^N dimension law for N=" + lat.label(q.normal));
        }
      }
  }

  LatticePtr c4 = lattice_of("C4");
  int n = 0;
  while (c4->order(n) != 2) ++n;
  QuotientData q = quotient_data(*c4, n);
  for (long long m = -8; m <= 8; ++m) {
    long long best = 1000;
    for (long long d = m; d <= m + 8; ++d)
      for (const auto& cell : slice_cells(c4, d, true))
        if (auto image = geometric_fixed_points_cell(cell, q)) best = std::min(best, image->dimension());
    long long ceiling = -100;
    while (2 * ceiling < m) ++ceiling;
    c.expect(best == ceiling, "C4/C2 m=" + std::to_string(m) + ": least Phi^N dimension");
    c.expect(pullback_degree(*c4, n, m) == ceiling, "C4/C2 m=" + std::to_string(m) + ": pullback_degree");
  }
}

// --- 6 ------------------------------------------------------------------------

void degree_support(Checker& c) {
  for_each_pair([&](const std::string& g, const std::string& p, const MackeyFunctor& m) {
    const auto order = static_cast<long long>(m.group().order());
    const std::string at = where(g, p);
    EMTower plus = em_tower_plus(m);
    for (long long k : plus.slice_degrees()) c.expect(k >= 1 && k <= order, at + ": plus slice at " + std::to_string(k));
    for (long long k = -3 * order; k <= 3 * order; ++k)
      if (k < 1 || k > order) c.expect(plus.slice(k).is_zero(), at + ": plus slice outside range");
    EMTower minus = em_tower_minus(m);
    for (long long k : minus.slice_degrees())
      c.expect(k >= -order && k <= -1, at + ": minus slice at " + std::to_string(k));
    EMTower irr = irregular_tower_from_regular(plus);
    for (long long k : irr.slice_degrees())
      c.expect(k >= 0 && k <= order - 1, at + ": irregular slice at " + std::to_string(k));
    c.expect(!m.is_zero() || plus.slice_degrees().empty(), at + ": zero functor has slices");
    c.expect(m.is_zero() || !plus.slice_degrees().empty(), at + ": nonzero functor has no slices");
  });
}

// --- 7 ------------------------------------------------------------------------

void consistency(Checker& c) {
  for_each_pair([&](const std::string& g, const std::string& p, const MackeyFunctor& m) {
    const SubgroupLattice& lat = m.lattice();
    const auto order = static_cast<long long>(lat.group().order());
    const std::string at = where(g, p);
    EMTower minus = em_tower_minus(m);
    for (long long mm = 0; mm <= 2 * order; ++mm)
      c.expect(minus.stage(-mm) == homotopy_filtration(m, 1, mm), at + ": minus stage -" + std::to_string(mm));
    for (int h = 0; h < static_cast<int>(lat.size()); ++h)
      c.expect(reg_coh(m, h) == hill_filtration(m, static_cast<long long>(lat.order(h))).level(h),
               at + ": reg_coh at " + lat.label(h));
    EMTower irr = irregular_tower_from_regular(em_tower_plus(m));
    for (long long n = -1; n <= order + 1; ++n) {
      SubMackey upper = hill_filtration(m, n + 1), lower = hill_filtration(m, n + 2);
      c.expect(irr.stage(n) == upper, at + ": irregular stage " + std::to_string(n));
      MackeyFunctor direct = quotient_mackey(sub_functor(m, upper), relative_sub(m, upper, lower));
      for (int h = 0; h < static_cast<int>(lat.size()); ++h)
        c.expect(direct.level(h).invariants() == irr.slice(n).level(h).invariants(),
                 at + ": irregular slice " + std::to_string(n) + " at " + lat.label(h));
    }
  });
}

// --- 8 ------------------------------------------------------------------------

struct CliResult {
  int code = 0;
  std::string out, err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string read_text(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void cli_suite(Checker& c) {
  fs::path dir = fs::temp_directory_path() / "slicekit-acceptance";
  fs::create_directories(dir);
  for (const auto& g : kGroups)
    for (const auto& p : kFunctors) {
      const std::string at = where(g, p);
      CliResult first = run_cli({"--group", g, "--mackey", p, "--format", "json", "mackey"});
      c.expect(first.code == 0, at + ": mackey json");
      if (first.code != 0) continue;
      c.expect(dump_json(parse_json(first.out)) == first.out, at + ": emit -> parse -> emit");
      fs::path f = dir / (g + "_" + p + ".json");
      std::ofstream(f, std::ios::binary) << first.out;
      CliResult second = run_cli({"--mackey", f.string(), "--format", "json", "mackey"});
      c.expect(second.code == 0 && second.out == first.out, at + ": file round trip");
      CliResult tower = run_cli({"--group", g, "--mackey", p, "--format", "json", "tower"});
      c.expect(tower.code == 0 && dump_json(parse_json(tower.out)) == tower.out, at + ": tower json stable");
    }

  CliResult burnside = run_cli({"--group", "C2", "--mackey", "burnside", "--format", "json", "mackey"});
  Json j = parse_json(burnside.out);
  j["tr"]["0.1,0"] = Json::array({Json::array({0}), Json::array({2})});
  fs::path corrupt = dir / "corrupt.json";
  std::ofstream(corrupt, std::ios::binary) << dump_json(j);
  CliResult rejected = run_cli({"--mackey", corrupt.string(), "tower"});
  c.expect(rejected.code == 1, "corrupted functor: exit code");
  c.expect(rejected.err.find("H=G J=e K=e") != std::string::npos, "corrupted functor: witness");
  CliResult report = run_cli({"--mackey", corrupt.string(), "check-axioms"});
  c.expect(report.code == 1 && report.out.find("H=G J=e K=e") != std::string::npos, "check-axioms witness");

  for (const auto& g : kGroups) {
    fs::path a = dir / (g + "_a.svg"), b = dir / (g + "_b.svg");
    const int ca = run_cli({"--group", g, "--mackey", "burnside", "--out", a.string(), "chart"}).code;
    const int cb = run_cli({"--group", g, "--mackey", "burnside", "--out", b.string(), "chart"}).code;
    c.expect(ca == 0 && cb == 0, g + ": chart exit code");
    const std::string sa = read_text(a);
    c.expect(!sa.empty() && sa == read_text(b), g + ": chart bytes differ");
    c.expect(sa == render_chart(em_tower_plus(burnside_mackey(lattice_of(g)))), g + ": chart differs from library");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*run)(Checker&);
  };
  const std::vector<Criterion> criteria{
      {"Mackey axiom suite", mackey_axioms},
      {"Hill filtration suite", hill_filtration_suite},
      {"EM tower reconstruction", reconstruction},
      {"golden values", golden_values},
      {"cell calculus suite", cell_calculus},
      {"degree-support suite", degree_support},
      {"consistency suite", consistency},
      {"CLI suite", cli_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < 60.0, "took longer than 60 s");
    std::cout << (c.passed() ? "[PASS] " : "[FAIL] ") << i + 1 << " " << criteria[i].name << " (" << c.checks()
              << " checks, " << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s)\n";
    for (const auto& f : c.failures()) std::cout << "       " << f << "\n";
    if (!c.passed()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

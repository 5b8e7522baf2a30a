#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "slicekit/chart.hpp"
#include "slicekit/serialize.hpp"
#include "slicekit/slice.hpp"

namespace slicekit::cli {

namespace {

/// A domain precondition failed; exit code 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string group;
  std::string mackey;
  std::string format = "text";
  std::string out;

  std::string shift = "+1";
  bool irregular = false;
  long long dim = 0;
  bool regular_only = false;
  long long gen_n = 0;
  bool connective = false;
  long long display_cap = 2;
  std::string normal;
  std::optional<long long> degree;
};

bool looks_like_file(const std::string& spec) {
  return spec.ends_with(".json") || spec.find('/') != std::string::npos || std::filesystem::is_regular_file(spec);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t element_cap() {
  const char* env = std::getenv("SLICEKIT_ELEMENT_CAP");
  if (!env || !*env) return kDefaultElementCap;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(env).size() || v == 0)
    throw ParseError("SLICEKIT_ELEMENT_CAP must be a positive integer, got '" + std::string(env) + "'");
  return static_cast<std::size_t>(v);
}

/// The resolved inputs of one invocation.
struct Inputs {
  LatticePtr lattice;
  Json group_ref;
  std::optional<MackeyFunctor> mackey;
  Json mackey_ref;
  bool mackey_is_preset = false;
};

Inputs load_inputs(const Options& o, bool need_mackey) {
  const std::size_t cap = element_cap();
  Inputs in;
  if (!o.mackey.empty() && looks_like_file(o.mackey)) {
    MackeyFunctor m = mackey_from_json(parse_json(read_file(o.mackey)), cap);
    AxiomReport report = check_mackey_axioms(m);
    if (!report.passed())
      throw DomainError("Mackey functor from '" + o.mackey + "' fails the axioms: " + report.failures.front().identity +
                        " at " + report.failures.front().witness);
    if (!o.group.empty()) {
      Json gj = looks_like_file(o.group) ? parse_json(read_file(o.group)) : Json(o.group);
      if (group_from_json(gj, cap).elements() != m.group().elements())
        throw DomainError("--group does not match the group of the Mackey functor file");
    }
    in.lattice = m.lattice_ptr();
    in.group_ref = group_to_json(m.group());
    in.mackey_ref = mackey_to_json(m);
    in.mackey = std::move(m);
    return in;
  }

  if (o.group.empty()) throw ParseError("--group is required (a preset name or a JSON file)");
  if (looks_like_file(o.group)) {
    in.group_ref = parse_json(read_file(o.group));
  } else {
    in.group_ref = o.group;
  }
  in.lattice = subgroup_lattice(group_from_json(in.group_ref, cap));
  if (o.mackey.empty()) {
    if (need_mackey) throw ParseError("--mackey is required for this command");
    return in;
  }
  try {
    in.mackey = mackey_preset(in.lattice, o.mackey);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  in.mackey_ref = o.mackey;
  in.mackey_is_preset = true;
  return in;
}

int parse_shift(const std::string& s) {
  if (s == "+1" || s == "1") return 1;
  if (s == "-1") return -1;
  throw ParseError("--shift must be +1 or -1, got '" + s + "'");
}

EMTower build_tower(const Options& o, const MackeyFunctor& m) {
  const int shift = parse_shift(o.shift);
  if (o.irregular) {
    if (shift != 1) throw DomainError("--irregular gives the tower of HM and needs --shift +1");
    return irregular_tower_from_regular(em_tower_plus(m));
  }
  return shift == 1 ? em_tower_plus(m) : em_tower_minus(m);
}

Json tower_base_ref(const Inputs& in) { return Json{{"group", in.group_ref}, {"mackey", in.mackey_ref}}; }

std::string describe_ref(const Json& j) { return j.is_string() ? j.get<std::string>() : std::string("<file>"); }

void print_tower_text(std::ostream& os, const EMTower& t, const Inputs& in) {
  const SubgroupLattice& lat = t.base().lattice();
  os << (t.variant() == TowerVariant::irregular ? "irregular" : "regular") << " slice tower of ";
  if (t.shift() == 0)
    os << "H";
  else
    os << "Sigma^" << t.shift() << " H";
  os << "(" << describe_ref(in.mackey_ref) << ") over " << describe_ref(in.group_ref) << "\n";
  const auto degrees = t.slice_degrees();
  if (degrees.empty()) os << "(no nonzero slices)\n";
  for (long long k : degrees) {
    os << "degree " << k << ":";
    const MackeyFunctor& s = t.slice(k);
    bool first = true;
    for (const auto& cls : lat.classes()) {
      const int h = cls.front();
      if (s.level(h).is_zero()) continue;
      os << (first ? " " : ", ") << lat.label(h) << ": " << s.level(h).invariants().to_string();
      first = false;
    }
    os << "\n";
  }
}

void print_functor_text(std::ostream& os, const MackeyFunctor& m, const std::string& indent) {
  const SubgroupLattice& lat = m.lattice();
  for (int h = 0; h < static_cast<int>(lat.size()); ++h)
    os << indent << lat.label(h) << " {" << lat.subgroup(h).id() << "}: " << m.level(h).invariants().to_string()
       << "\n";
}

std::string cell_text(const SliceCell& c) { return c.to_string(); }

Json cell_json(const SliceCell& c) {
  return Json{{"subgroup", c.lattice->label(c.subgroup)},
              {"id", c.lattice->subgroup(c.subgroup).id()},
              {"n", c.n},
              {"regular", c.regular},
              {"dim", c.dimension()}};
}

// --- commands ------------------------------------------------------------------

void cmd_tower(const Options& o, std::ostream& os) {
  Inputs in = load_inputs(o, true);
  EMTower t = build_tower(o, *in.mackey);
  if (o.format == "json")
    os << dump_json(tower_to_json(t, tower_base_ref(in)));
  else if (o.format == "svg")
    os << render_chart(t);
  else
    print_tower_text(os, t, in);
}

void cmd_slices(const Options& o, std::ostream& os) {
  Inputs in = load_inputs(o, true);
  EMTower t = build_tower(o, *in.mackey);
  if (o.format == "json") {
    Json slices = Json::object();
    for (long long k : t.slice_degrees()) slices[std::to_string(k)] = mackey_to_json(t.slice(k));
    os << dump_json(Json{{"base", tower_base_ref(in)},
                         {"shift", t.shift()},
                         {"variant", to_string(t.variant())},
                         {"slices", slices}});
    return;
  }
  if (o.format == "svg") {
    os << render_chart(t);
    return;
  }
  for (long long k : t.slice_degrees()) {
    os << "slice " << k << ":\n";
    print_functor_text(os, t.slice(k), "  ");
  }
}

void cmd_cells(const Options& o, std::ostream& os) {
  Inputs in = load_inputs(o, false);
  auto cells = slice_cells(in.lattice, o.dim, o.regular_only);
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& c : cells) {
      Json j = cell_json(c);
      const FiltrationBounds b = filtration_bounds(c);
      j["slice_degree"] = b.slice_degree;
      j["regular_degree"] = b.regular_degree;
      if (c.regular) j["dual"] = cell_json(cell_dual(c));
      arr.push_back(j);
    }
    os << dump_json(Json{{"dim", o.dim}, {"cells", arr}});
    return;
  }
  os << cells.size() << " slice cell" << (cells.size() == 1 ? "" : "s") << " of dimension " << o.dim << "\n";
  for (const auto& c : cells) {
    const FiltrationBounds b = filtration_bounds(c);
    os << "  " << cell_text(c) << "; regular slice degree " << (c.regular ? "" : ">= ") << b.regular_degree
       << ", suspension at " << b.suspension_regular_degree << "\n";
  }
}

void cmd_generators(const Options& o, std::ostream& os) {
  Inputs in = load_inputs(o, false);
  const SubgroupLattice& lat = *in.lattice;
  if (o.gen_n < 0) throw DomainError("--n must be nonnegative");
  GeneratorSet s = o.connective ? connective_generators(lat, o.display_cap)
                                : negative_generators(lat, o.gen_n, o.display_cap);
  auto to_json = [&](const std::vector<SphereGenerator>& v) {
    Json arr = Json::array();
    for (const auto& g : v) arr.push_back(Json{{"subgroup", lat.label(g.subgroup)}, {"degree", g.degree}});
    return arr;
  };
  if (o.format == "json") {
    os << dump_json(Json{{"n", o.connective ? Json(nullptr) : Json(o.gen_n)},
                         {"min_degree", s.min_degree},
                         {"listed", to_json(s.listed)},
                         {"negative", to_json(s.negative)}});
    return;
  }
  os << "all G/H+ ^ S^k with k >= " << s.min_degree << ", for every H\n";
  for (const auto& g : s.listed) os << "  G/" << lat.label(g.subgroup) << "+ ^ S^" << g.degree << "\n";
  os << "  ...\n";
  os << s.negative.size() << " negative generator" << (s.negative.size() == 1 ? "" : "s") << "\n";
  for (const auto& g : s.negative) os << "  G/" << lat.label(g.subgroup) << "+ ^ S^" << g.degree << "\n";
}

void cmd_phi(const Options& o, std::ostream& os) {
  Inputs in = load_inputs(o, false);
  const SubgroupLattice& lat = *in.lattice;
  int n = 0;
  try {
    n = lat.parse(o.normal);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("--normal: ") + e.what());
  }
  if (!lat.is_normal(n)) throw DomainError("subgroup " + lat.label(n) + " is not normal");
  QuotientData q = quotient_data(lat, n);
  SubgroupFamily fam = family_not_containing(lat, n);

  Json j;
  j["normal"] = lat.label(n);
  j["quotient_order"] = q.quotient.group.order();
  Json family = Json::array();
  for (int h : fam.members) family.push_back(lat.label(h));
  j["family"] = family;

  if (o.degree) {
    const long long m = *o.degree;
    if (lat.order(n) == 1) throw DomainError("N is trivial; geometric fixed points do not change degrees");
    j["pullback_degree"] = pullback_degree(lat, n, m);
    Json cells = Json::array();
    for (const auto& c : slice_cells(in.lattice, m, true)) {
      auto image = geometric_fixed_points_cell(c, q);
      cells.push_back(Json{{"cell", cell_json(c)}, {"image", image ? cell_json(*image) : Json(nullptr)}});
    }
    j["cells"] = cells;
  }
  std::optional<EMTower> pulled;
  if (in.mackey_is_preset) {
    MackeyFunctor y = mackey_preset(q.lattice, in.mackey_ref.get<std::string>());
    Options over_quotient = o;
    pulled = pullback_tower(build_tower(over_quotient, y), in.lattice, q);
    j["pullback_tower"] = tower_to_json(*pulled, Json{{"group", in.group_ref},
                                                      {"mackey", in.mackey_ref},
                                                      {"pulled_back_along", lat.label(n)}});
  }

  if (o.format == "json") {
    os << dump_json(j);
    return;
  }
  os << "N = " << lat.label(n) << " {" << lat.subgroup(n).id() << "}, |G/N| = " << q.quotient.group.order() << "\n";
  os << "subgroups not containing N:";
  for (int h : fam.members) os << " " << lat.label(h);
  os << (fam.members.empty() ? " (none)\n" : "\n");
  if (o.degree) {
    os << "pullback degree of " << *o.degree << ": " << j["pullback_degree"].get<long long>() << "\n";
    for (const auto& c : slice_cells(in.lattice, *o.degree, true)) {
      auto image = geometric_fixed_points_cell(c, q);
      os << "  Phi^N " << cell_text(c) << " = " << (image ? cell_text(*image) + " over G/N" : std::string("0"))
         << "\n";
    }
  }
  if (pulled) {
    os << "pulled back tower:\n";
    print_tower_text(os, *pulled, in);
  }
}

void cmd_check_axioms(const Options& o, std::ostream& os) {
  const std::size_t cap = element_cap();
  // Files are checked here rather than rejected in load_inputs.
  MackeyFunctor m;
  if (!o.mackey.empty() && looks_like_file(o.mackey)) {
    m = mackey_from_json(parse_json(read_file(o.mackey)), cap);
  } else {
    Options copy = o;
    m = *load_inputs(copy, true).mackey;
  }
  AxiomReport report = check_mackey_axioms(m);
  if (o.format == "json") {
    Json failures = Json::array();
    for (const auto& f : report.failures) failures.push_back(Json{{"identity", f.identity}, {"witness", f.witness}});
    os << dump_json(Json{{"passed", report.passed()}, {"checked", report.identities_checked}, {"failures", failures}});
  } else {
    os << (report.passed() ? std::string("PASS") : report.to_string()) << "\n";
  }
  if (!report.passed()) throw DomainError("");
}

void cmd_mackey(const Options& o, std::ostream& os) {
  Inputs in = load_inputs(o, true);
  if (o.format == "json") {
    os << dump_json(mackey_to_json(*in.mackey));
    return;
  }
  print_functor_text(os, *in.mackey, "");
}

void cmd_lattice(const Options& o, std::ostream& os) {
  Inputs in = load_inputs(o, false);
  const SubgroupLattice& lat = *in.lattice;
  if (o.format == "json") {
    Json arr = Json::array();
    for (int h = 0; h < static_cast<int>(lat.size()); ++h)
      arr.push_back(Json{{"label", lat.label(h)},
                         {"id", lat.subgroup(h).id()},
                         {"order", lat.order(h)},
                         {"class", lat.class_of(h)},
                         {"normal", lat.is_normal(h)}});
    os << dump_json(Json{{"order", lat.group().order()}, {"subgroups", arr}});
    return;
  }
  os << "|G| = " << lat.group().order() << ", " << lat.size() << " subgroups in " << lat.classes().size()
     << " conjugacy classes\n";
  for (int h = 0; h < static_cast<int>(lat.size()); ++h)
    os << "  " << lat.label(h) << " {" << lat.subgroup(h).id() << "} order " << lat.order(h) << " class "
       << lat.class_of(h) << (lat.is_normal(h) ? " normal" : "") << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Slice towers and slice cells for Mackey functors over finite groups", "slicekit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--group", o.group, "group preset (trivial C2 C3 C4 V4 S3 D8 Q8) or JSON file");
  app.add_option("--mackey", o.mackey,
                 "Mackey preset (burnside constant-Z constant-Z2 constant-Z/n sign regular permutation) or JSON file");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "svg"}));
  app.add_option("--out", o.out, "write output to this file");

  auto* tower = app.add_subcommand("tower", "slice tower of a suspended or desuspended EM spectrum");
  auto* slices = app.add_subcommand("slices", "every nonzero slice as a Mackey functor");
  for (auto* sub : {tower, slices}) {
    sub->add_option("--shift", o.shift, "+1 or -1")->allow_extra_args(false);
    sub->add_flag("--irregular", o.irregular, "irregular tower of HM (from the +1 tower)");
  }
  auto* cells = app.add_subcommand("cells", "slice cells of a given dimension");
  cells->add_option("--dim", o.dim, "dimension k")->required();
  cells->add_flag("--regular", o.regular_only, "regular cells only");
  auto* gens = app.add_subcommand("generators", "sphere generators of the regular slice categories");
  gens->add_option("--n", o.gen_n, "level -n (n >= 0)");
  gens->add_flag("--connective", o.connective, "generators of level 1 instead");
  gens->add_option("--cap", o.display_cap, "largest nonnegative degree to list");
  auto* phi = app.add_subcommand("phi", "geometric fixed points for a normal subgroup");
  phi->add_option("--normal", o.normal, "normal subgroup: label, id or #index")->required();
  phi->add_option("--degree", o.degree, "slice degree to transport");
  phi->add_option("--shift", o.shift, "+1 or -1 for the pulled back tower");
  auto* check = app.add_subcommand("check-axioms", "verify the Mackey functor axioms");
  auto* chart = app.add_subcommand("chart", "SVG chart of a slice tower");
  chart->add_option("--shift", o.shift, "+1 or -1");
  chart->add_flag("--irregular", o.irregular, "irregular tower of HM");
  auto* mackey = app.add_subcommand("mackey", "print the Mackey functor");
  auto* lattice = app.add_subcommand("lattice", "list the subgroups");

  // CLI11 reads a vector back to front.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  }

  const bool is_chart = chart->parsed();
  if (o.format == "svg" && !(is_chart || tower->parsed() || slices->parsed())) {
    err << "error: --format svg is only available for tower, slices and chart\n";
    return kExitParseError;
  }
  if (is_chart) o.format = "svg";

  std::ostringstream buffer;
  try {
    if (tower->parsed() || is_chart)
      cmd_tower(o, buffer);
    else if (slices->parsed())
      cmd_slices(o, buffer);
    else if (cells->parsed())
      cmd_cells(o, buffer);
    else if (gens->parsed())
      cmd_generators(o, buffer);
    else if (phi->parsed())
      cmd_phi(o, buffer);
    else if (check->parsed())
      cmd_check_axioms(o, buffer);
    else if (mackey->parsed())
      cmd_mackey(o, buffer);
    else if (lattice->parsed())
      cmd_lattice(o, buffer);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const DomainError& e) {
    out << buffer.str();
    if (*e.what()) err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }

  if (o.out.empty()) {
    out << buffer.str();
    return kExitOk;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file || !(file << buffer.str()) || !file.flush()) {
    err << "error: cannot write '" << o.out << "'\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace slicekit::cli

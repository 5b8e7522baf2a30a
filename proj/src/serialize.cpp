#include "slicekit/serialize.hpp"

#include <limits>

namespace slicekit {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

// "a,b" -> (a, b)
std::pair<std::string, std::string> split_key(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos)
    fail("map key '" + key + "' is not of the form \"H,K\"");
  return {key.substr(0, comma), key.substr(comma + 1)};
}

int subgroup_from_key(const SubgroupLattice& lat, const std::string& s) {
  try {
    return lat.parse(s);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

}  // namespace

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<long long>(x.get_si()));
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Integer x;
    const bool digits = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                        s != "-";
    if (!digits || x.set_str(s, 10) != 0) fail("'" + s + "' is not an integer");
    return x;
  }
  fail("expected an integer, got " + j.dump());
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(integer_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  const std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
  if (!j.is_array() || j.size() != rows) fail("expected a " + shape + " matrix, got " + j.dump());
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) fail("expected a " + shape + " matrix, got " + j.dump());
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = integer_from_json(j[i][k]);
  }
  return m;
}

Json invariants_to_json(const InvariantFactors& f) {
  Json t = Json::array();
  for (const auto& d : f.torsion) t.push_back(integer_to_json(d));
  return Json{{"free_rank", f.free_rank}, {"torsion", t}};
}

InvariantFactors invariants_from_json(const Json& j) {
  InvariantFactors f;
  f.free_rank = size_from_json(field(j, "free_rank"), "free_rank");
  const Json& t = field(j, "torsion");
  if (!t.is_array()) fail("torsion must be an array");
  for (const auto& d : t) {
    Integer x = integer_from_json(d);
    if (x < 2) fail("torsion factors must be at least 2");
    if (!f.torsion.empty() && x % f.torsion.back() != 0) fail("torsion factors must divide each other in order");
    f.torsion.push_back(x);
  }
  return f;
}

Json presentation_to_json(const FgAbGroup& a) {
  return Json{{"ngens", a.ngens()}, {"relations", matrix_to_json(a.relations())}};
}

FgAbGroup presentation_from_json(const Json& j) {
  const std::size_t ngens = size_from_json(field(j, "ngens"), "ngens");
  const Json& rel = field(j, "relations");
  if (!rel.is_array()) fail("relations must be an array of rows");
  return FgAbGroup(ngens, matrix_from_json(rel, rel.size(), ngens));
}

Json group_to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const Perm& p : g.generators()) gens.push_back(p);
  return Json{{"degree", g.degree()}, {"generators", gens}};
}

PermGroup group_from_json(const Json& j, std::size_t cap) {
  if (j.is_string()) {
    try {
      return named_group(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  const Json& d = field(j, "degree");
  if (!d.is_number_integer() || d.get<long long>() < 1) fail("degree must be a positive integer");
  const int degree = d.get<int>();
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) fail("generators must be an array of permutations");
  std::vector<Perm> perms;
  for (const auto& p : gens) {
    if (!p.is_array()) fail("each generator must be an array of point images");
    Perm q;
    for (const auto& x : p) {
      if (!x.is_number_integer()) fail("point images must be integers");
      q.push_back(x.get<int>());
    }
    perms.push_back(std::move(q));
  }
  return PermGroup::from_generators(degree, std::move(perms), cap);
}

Json mackey_to_json(const MackeyFunctor& m) {
  const SubgroupLattice& lat = m.lattice();
  const int n = static_cast<int>(lat.size());
  Json levels = Json::object(), res = Json::object(), tr = Json::object(), conj = Json::object();
  for (int h = 0; h < n; ++h) levels[lat.subgroup(h).id()] = presentation_to_json(m.level(h));
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) {
      if (!lat.contains(h, k)) continue;
      const std::string key = lat.subgroup(h).id() + "," + lat.subgroup(k).id();
      res[key] = matrix_to_json(m.res(h, k).matrix());
      tr[key] = matrix_to_json(m.tr(h, k).matrix());
    }
  for (int x = 0; x < static_cast<int>(m.group().order()); ++x)
    for (int h = 0; h < n; ++h)
      conj[std::to_string(x) + "," + lat.subgroup(h).id()] = matrix_to_json(m.conj(x, h).matrix());
  return Json{{"group", group_to_json(m.group())}, {"levels", levels}, {"res", res}, {"tr", tr}, {"conj", conj}};
}

MackeyFunctor mackey_from_json(const Json& j, std::size_t cap) {
  try {
    LatticePtr lattice = subgroup_lattice(group_from_json(field(j, "group"), cap));
    const SubgroupLattice& lat = *lattice;

    if (j.contains("preset")) {
      const Json& p = j["preset"];
      if (!p.is_string()) fail("preset must be a string");
      const std::string name = p.get<std::string>();
      if (name == "constant") return constant_mackey(lattice, FgAbGroup::from_invariants(invariants_from_json(field(j, "value"))));
      if (name == "fixed") {
        const Json& action = field(j, "action");
        if (!action.is_array()) fail("action must be an array of matrices");
        std::vector<IntMatrix> mats;
        for (const auto& a : action) {
          if (!a.is_array()) fail("action matrices must be arrays of rows");
          mats.push_back(matrix_from_json(a, a.size(), a.size()));
        }
        return fixed_point_mackey(lattice, mats);
      }
      try {
        return mackey_preset(lattice, name);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }

    const Json& levels_json = field(j, "levels");
    if (!levels_json.is_object()) fail("levels must be an object keyed by subgroup");
    std::vector<std::optional<FgAbGroup>> found(lat.size());
    for (auto it = levels_json.begin(); it != levels_json.end(); ++it) {
      const int h = subgroup_from_key(lat, it.key());
      if (found[static_cast<std::size_t>(h)]) fail("level " + it.key() + " given twice");
      found[static_cast<std::size_t>(h)] = presentation_from_json(it.value());
    }
    std::vector<FgAbGroup> levels;
    for (int h = 0; h < static_cast<int>(lat.size()); ++h) {
      if (!found[static_cast<std::size_t>(h)]) fail("missing level for subgroup " + lat.subgroup(h).id());
      levels.push_back(*found[static_cast<std::size_t>(h)]);
    }
    MackeyFunctor m(lattice, levels);

    auto read_pairs = [&](const char* name, bool is_res) {
      if (!j.contains(name)) return;
      const Json& maps = j[name];
      if (!maps.is_object()) fail(std::string(name) + " must be an object keyed by \"H,K\"");
      for (auto it = maps.begin(); it != maps.end(); ++it) {
        auto [hs, ks] = split_key(it.key());
        const int h = subgroup_from_key(lat, hs), k = subgroup_from_key(lat, ks);
        if (!lat.contains(h, k)) fail(std::string(name) + " key " + it.key() + ": K is not inside H");
        const FgAbGroup& src = is_res ? m.level(h) : m.level(k);
        const FgAbGroup& tgt = is_res ? m.level(k) : m.level(h);
        AbHom f(src, tgt, matrix_from_json(it.value(), tgt.ngens(), src.ngens()));
        if (is_res)
          m.set_res(h, k, std::move(f));
        else
          m.set_tr(h, k, std::move(f));
      }
    };
    read_pairs("res", true);
    read_pairs("tr", false);
    if (j.contains("conj")) {
      const Json& maps = j["conj"];
      if (!maps.is_object()) fail("conj must be an object keyed by \"g,H\"");
      for (auto it = maps.begin(); it != maps.end(); ++it) {
        auto [gs, hs] = split_key(it.key());
        int x = -1;
        try {
          std::size_t used = 0;
          x = std::stoi(gs, &used);
          if (used != gs.size()) x = -1;
        } catch (const std::exception&) {
          x = -1;
        }
        if (x < 0 || x >= static_cast<int>(lat.group().order())) fail("conj key " + it.key() + ": no such element");
        const int h = subgroup_from_key(lat, hs);
        const FgAbGroup& src = m.level(h);
        const FgAbGroup& tgt = m.level(lat.conjugate(x, h));
        m.set_conj(x, h, AbHom(src, tgt, matrix_from_json(it.value(), tgt.ngens(), src.ngens())));
      }
    }
    m.complete();
    return m;
  } catch (const Json::exception& e) {
    fail(std::string("malformed Mackey functor JSON: ") + e.what());
  }
}

Json tower_to_json(const EMTower& t, const Json& base_ref) {
  const SubgroupLattice& lat = t.base().lattice();
  Json slices = Json::object();
  for (long long k : t.slice_degrees()) {
    const MackeyFunctor& s = t.slice(k);
    Json levels = Json::object();
    for (const auto& cls : lat.classes()) {
      const int h = cls.front();
      if (!s.level(h).is_zero()) levels[lat.label(h)] = invariants_to_json(s.level(h).invariants());
    }
    slices[std::to_string(k)] = levels;
  }
  return Json{{"base", base_ref}, {"shift", t.shift()}, {"variant", to_string(t.variant())}, {"slices", slices}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace slicekit

#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "slicekit/abelian.hpp"
#include "slicekit/group.hpp"
#include "slicekit/mackey.hpp"
#include "slicekit/slice.hpp"

namespace slicekit {

using Json = nlohmann::json;

/// Malformed input: bad JSON, wrong types, wrong matrix shapes, unknown names.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

/// Row-major nested arrays.
Json matrix_to_json(const IntMatrix& m);
/// Throws ParseError unless the array has the given shape.
IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

/// {"free_rank": r, "torsion": [d1, ...]}
Json invariants_to_json(const InvariantFactors& f);
InvariantFactors invariants_from_json(const Json& j);

/// {"ngens": n, "relations": [[...], ...]}
Json presentation_to_json(const FgAbGroup& a);
FgAbGroup presentation_from_json(const Json& j);

/// {"degree": d, "generators": [[...], ...]} or a preset name.
Json group_to_json(const PermGroup& g);
PermGroup group_from_json(const Json& j, std::size_t cap = kDefaultElementCap);

/// {"group": ..., "levels": {id: presentation}, "res"/"tr": {"H,K": matrix},
/// "conj": {"g,H": matrix}}; subgroups by canonical id, g by element index.
Json mackey_to_json(const MackeyFunctor& m);
/// Also accepts {"group": ..., "preset": name} with name a Mackey preset,
/// "constant" (with "value": invariant factors) or "fixed" (with "action":
/// one matrix per generator). Missing maps are derived by complete(); the
/// axioms are not checked here.
MackeyFunctor mackey_from_json(const Json& j, std::size_t cap = kDefaultElementCap);

/// {"base": base_ref, "shift": s, "variant": v, "slices": {degree: {label: invariants}}}
/// with one entry per conjugacy class and zero slices and levels left out.
Json tower_to_json(const EMTower& t, const Json& base_ref);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_json(const Json& j);
/// Throws ParseError on syntax errors.
Json parse_json(const std::string& text);

}  // namespace slicekit

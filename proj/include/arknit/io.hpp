#pragma once

// JSON and DOT formats. Scalars are exact strings ("3/2", or residues mod p); arrow matrices
// act on column vectors and have dim(target) rows.

#include <string>

#include <json.hpp>

#include "arknit/knit.hpp"
#include "arknit/tube.hpp"

namespace arknit::io {

using json = nlohmann::json;

/// {"kind": "finite"|"family"|"composite", "vertices", "arrows": [[src, tgt, label]], "family", "rays"}
json quiver_to_json(const QuiverSpec& spec);
/// Throws ValidationError on malformed input.
QuiverSpec quiver_from_json(const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const Field& f, std::size_t rows, std::size_t cols);

/// {"field", "quiver": <finite window>, "open_in", "open_out", "dims": {v: d}, "maps": {label: rows}}
json representation_to_json(const Representation& x);
/// Accepts any quiver kind; infinite quivers are truncated at "level" (or `default_level`).
/// Missing dims are 0 and missing maps are zero matrices.
Representation representation_from_json(const json& j, const Field& f, int default_level = 0);

json morphism_to_json(const Morphism& m);
json almost_split_to_json(const AlmostSplitSequence& s, bool certify);

/// {"shape", "partial", "notes", "vertices": [...], "arrows": [[from, to]], "tau": [[v, tau v]]}
json model_to_json(const ARComponentModel& m);
/// Arrows solid, tau dashed and pointing from Z to tau Z.
std::string model_to_dot(const ARComponentModel& m);
std::string quiver_to_dot(const TruncatedQuiver& q);

json tube_object_to_json(const TubeCategory& c, const TubeObject& t);

std::string family_tag_name(FamilyTag t);
FamilyTag family_tag_from_name(const std::string& s);

}  // namespace arknit::io

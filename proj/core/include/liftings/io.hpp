#pragma once

#include <optional>
#include <string>

#include "liftings/lifting2d.hpp"
#include "liftings/polytopal.hpp"

namespace liftings {

/// JSON framework document:
/// { "dim": n, "vertices": [{"id": int, "coords": [..]}],
///   "edges": [{"i": int, "j": int, "stress"?: real}],
///   "metadata"?: object }
std::pair<Framework, std::optional<Stress>> parse_framework(const std::string& text);

std::string serialize_framework(const Framework& fw, const Stress* s = nullptr);

/// JSON polytopal 2-complex document:
/// { "ambient_dim": n, "face_dim": 2,
///   "polygons": [[[x,..], ..], ..], "loads"?: [real per polygon],
///   "caller_validated"?: bool, "metadata"?: object }
std::pair<PolytopalComplex, std::optional<ForceLoad>> parse_complex(const std::string& text);

std::string serialize_complex(const PolytopalComplex& c, const ForceLoad* w = nullptr);

/// ASCII OBJ of the lifted surface: one fan-triangulated polygon per
/// bounded chamber at height L(x); vertices deduplicated within
/// eps_geom, 9-decimal fixed precision.
std::string export_obj(const PolyhedralLifting& pl);

/// SVG 1.1 drawing of the chamber complex; when forms are given, each
/// bounded chamber is annotated with its 1-form.
std::string export_svg(const ChamberComplex& cc,
                       const std::map<int, MForm>* forms = nullptr);

} // namespace liftings

#include "liftings/io.hpp"

#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>

namespace liftings {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Vec coords_to_vec(const json& arr, int expected_dim, const std::string& where) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != expected_dim)
    throw ParseError(where + ": coords must be an array of length dim");
  Vec v(expected_dim);
  for (int k = 0; k < expected_dim; ++k) {
    if (!arr[static_cast<std::size_t>(k)].is_number())
      throw ParseError(where + ": non-numeric coordinate");
    v[k] = arr[static_cast<std::size_t>(k)].get<double>();
  }
  return v;
}

std::string fixed9(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(9) << (x == 0.0 ? 0.0 : x);
  return os.str();
}

std::string form_label(const MForm& f) {
  static const char* names[] = {"dx", "dy", "dz"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : f.terms()) {
    if (!first) os << (c >= 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    double mag = std::abs(c);
    os << (std::abs(mag - 1.0) < 1e-12 ? std::string() : fixed9(mag) + " ");
    for (std::size_t k = 0; k < key.size(); ++k) {
      if (k) os << "^";
      os << (key[k] < 3 ? names[key[k]] : "dx" + std::to_string(key[k] + 1));
    }
  }
  if (first) os << "0";
  return os.str();
}

} // namespace

std::pair<Framework, std::optional<Stress>> parse_framework(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("vertices") ||
      !doc.contains("edges"))
    throw ParseError("framework document: requires dim, vertices, edges");
  if (!doc["dim"].is_number_integer())
    throw ParseError("framework document: dim must be an integer");

  Framework fw;
  fw.dim = doc["dim"].get<int>();
  if (fw.dim < 1) throw ParseError("framework document: dim must be >= 1");

  if (!doc["vertices"].is_array())
    throw ParseError("framework document: vertices must be an array");
  for (const auto& v : doc["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v.contains("coords") ||
        !v["id"].is_number_integer())
      throw ParseError("framework document: vertex needs integer id and coords");
    int id = v["id"].get<int>();
    if (fw.vertices.count(id)) throw ParseError("framework document: duplicate vertex id");
    fw.add_vertex(id, coords_to_vec(v["coords"], fw.dim, "vertex " + std::to_string(id)));
  }

  if (!doc["edges"].is_array())
    throw ParseError("framework document: edges must be an array");
  bool any_stress = false, all_stress = true;
  Stress s;
  for (const auto& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("i") || !e.contains("j") ||
        !e["i"].is_number_integer() || !e["j"].is_number_integer())
      throw ParseError("framework document: edge needs integer endpoints i, j");
    int i = e["i"].get<int>(), j = e["j"].get<int>();
    if (i == j) throw ParseError("framework document: loop edge {" +
                                 std::to_string(i) + ", " + std::to_string(j) + "}");
    try {
      fw.add_edge(i, j);
    } catch (const DegenerateInput& ex) {
      throw ParseError(std::string("framework document: ") + ex.what());
    }
    if (e.contains("stress")) {
      if (!e["stress"].is_number())
        throw ParseError("framework document: stress must be numeric");
      s.values[make_edge(i, j)] = e["stress"].get<double>();
      any_stress = true;
    } else {
      all_stress = false;
    }
  }
  try {
    fw.validate();
  } catch (const Error& ex) {
    throw ParseError(std::string("framework document: ") + ex.what());
  }
  if (any_stress && !all_stress)
    throw ParseError("framework document: stress must be present on all edges or none");
  if (any_stress) return {fw, s};
  return {fw, std::nullopt};
}

std::string serialize_framework(const Framework& fw, const Stress* s) {
  json doc;
  doc["dim"] = fw.dim;
  doc["vertices"] = json::array();
  for (const auto& [id, p] : fw.vertices) {
    json coords = json::array();
    for (Eigen::Index k = 0; k < p.size(); ++k) coords.push_back(p[k]);
    doc["vertices"].push_back({{"id", id}, {"coords", coords}});
  }
  doc["edges"] = json::array();
  for (const auto& [i, j] : fw.edges) {
    json e = {{"i", i}, {"j", j}};
    if (s) {
      auto it = s->values.find({i, j});
      if (it != s->values.end()) e["stress"] = it->second;
    }
    doc["edges"].push_back(e);
  }
  return doc.dump(2) + "\n";
}

std::pair<PolytopalComplex, std::optional<ForceLoad>> parse_complex(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("ambient_dim") || !doc.contains("polygons"))
    throw ParseError("complex document: requires ambient_dim and polygons");
  PolytopalComplex c;
  if (!doc["ambient_dim"].is_number_integer())
    throw ParseError("complex document: ambient_dim must be an integer");
  c.ambient_dim = doc["ambient_dim"].get<int>();
  c.face_dim = doc.value("face_dim", 2);
  if (c.face_dim != 2) throw ParseError("complex document: face_dim must be 2");
  c.caller_validated = doc.value("caller_validated", false);

  if (!doc["polygons"].is_array() || doc["polygons"].empty())
    throw ParseError("complex document: polygons must be a non-empty array");
  for (const auto& poly : doc["polygons"]) {
    if (!poly.is_array() || poly.size() < 3)
      throw ParseError("complex document: each polygon needs at least 3 vertices");
    std::vector<Vec> verts;
    for (const auto& p : poly) {
      verts.push_back(coords_to_vec(p, c.ambient_dim, "polygon vertex"));
    }
    c.polygons.push_back(std::move(verts));
  }

  if (doc.contains("loads")) {
    if (!doc["loads"].is_array() || doc["loads"].size() != c.polygons.size())
      throw ParseError("complex document: loads must list one value per polygon");
    ForceLoad w;
    for (std::size_t k = 0; k < c.polygons.size(); ++k) {
      if (!doc["loads"][k].is_number())
        throw ParseError("complex document: non-numeric load");
      w.values[static_cast<int>(k)] = doc["loads"][k].get<double>();
    }
    return {c, w};
  }
  return {c, std::nullopt};
}

std::string serialize_complex(const PolytopalComplex& c, const ForceLoad* w) {
  json doc;
  doc["ambient_dim"] = c.ambient_dim;
  doc["face_dim"] = c.face_dim;
  if (c.caller_validated) doc["caller_validated"] = true;
  doc["polygons"] = json::array();
  for (const auto& poly : c.polygons) {
    json jp = json::array();
    for (const Vec& p : poly) {
      json coords = json::array();
      for (Eigen::Index k = 0; k < p.size(); ++k) coords.push_back(p[k]);
      jp.push_back(coords);
    }
    doc["polygons"].push_back(jp);
  }
  if (w) {
    json loads = json::array();
    for (std::size_t k = 0; k < c.polygons.size(); ++k) {
      loads.push_back(w->at(static_cast<int>(k)));
    }
    doc["loads"] = loads;
  }
  return doc.dump(2) + "\n";
}

std::string export_obj(const PolyhedralLifting& pl) {
  const double eps = tolerances().eps_geom;
  std::vector<Eigen::Vector3d> verts;
  auto vertex_index = [&](const Eigen::Vector3d& p) {
    for (std::size_t k = 0; k < verts.size(); ++k) {
      if ((verts[k] - p).norm() <= eps) return static_cast<int>(k);
    }
    verts.push_back(p);
    return static_cast<int>(verts.size()) - 1;
  };

  std::vector<std::vector<int>> triangles;
  for (const Chamber& ch : pl.complex.chambers) {
    if (!ch.bounded) continue;
    const PolyhedralLifting::Piece& piece = pl.pieces.at(ch.id);
    const BoundaryCycle& cycle = ch.cycles[0];
    std::vector<int> ids;
    for (const Eigen::Vector2d& p : cycle) {
      double z = piece.gradient.dot(p) + piece.offset;
      ids.push_back(vertex_index(Eigen::Vector3d(p.x(), p.y(), z)));
    }
    for (std::size_t k = 1; k + 1 < ids.size(); ++k) {
      if (ids[0] == ids[k] || ids[k] == ids[k + 1] || ids[0] == ids[k + 1]) continue;
      triangles.push_back({ids[0], ids[k], ids[k + 1]});
    }
  }

  std::ostringstream os;
  for (const auto& v : verts) {
    os << "v " << fixed9(v.x()) << " " << fixed9(v.y()) << " " << fixed9(v.z()) << "\n";
  }
  for (const auto& t : triangles) {
    os << "f " << t[0] + 1 << " " << t[1] + 1 << " " << t[2] + 1 << "\n";
  }
  return os.str();
}

std::string export_svg(const ChamberComplex& cc, const std::map<int, MForm>* forms) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const Adjacency& adj : cc.adjacencies) {
    for (const Eigen::Vector2d& p : {adj.seg_a, adj.seg_b}) {
      xmin = std::min(xmin, p.x());
      xmax = std::max(xmax, p.x());
      ymin = std::min(ymin, p.y());
      ymax = std::max(ymax, p.y());
    }
  }
  double span = std::max(xmax - xmin, ymax - ymin);
  if (span <= 0) span = 1.0;
  double margin = 0.15 * span;
  double unit = 400.0 / span;
  auto sx = [&](double x) { return (x - xmin + margin) * unit; };
  auto sy = [&](double y) { return (ymax - y + margin) * unit; };

  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  double w = (xmax - xmin + 2 * margin) * unit;
  double h = (ymax - ymin + 2 * margin) * unit;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
     << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  for (const Adjacency& adj : cc.adjacencies) {
    os << "  <line x1=\"" << sx(adj.seg_a.x()) << "\" y1=\"" << sy(adj.seg_a.y())
       << "\" x2=\"" << sx(adj.seg_b.x()) << "\" y2=\"" << sy(adj.seg_b.y())
       << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  for (const Chamber& ch : cc.chambers) {
    if (!ch.bounded) continue;
    Eigen::Vector2d c = Eigen::Vector2d::Zero();
    for (const Eigen::Vector2d& p : ch.cycles[0]) c += p;
    c /= static_cast<double>(ch.cycles[0].size());
    std::string label = "C" + std::to_string(ch.id);
    if (forms) {
      auto it = forms->find(ch.id);
      if (it != forms->end()) label += ": " + form_label(it->second);
    }
    os << "  <text x=\"" << sx(c.x()) << "\" y=\"" << sy(c.y())
       << "\" font-size=\"12\" text-anchor=\"middle\">" << label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace liftings

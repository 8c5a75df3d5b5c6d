#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "liftings/io.hpp"

using namespace liftings;

TEST_CASE("framework documents round trip") {
  auto [fw, s] = testdata::prism();
  std::string text = serialize_framework(fw, &s);
  auto [fw2, s2] = parse_framework(text);
  REQUIRE(s2.has_value());
  CHECK(fw2.dim == fw.dim);
  CHECK(fw2.vertices.size() == fw.vertices.size());
  CHECK(fw2.edges == fw.edges);
  for (const auto& [id, p] : fw.vertices) {
    CHECK((fw2.point(id) - p).norm() < 1e-15);
  }
  for (const auto& e : fw.edges) {
    CHECK(s2->at(e) == doctest::Approx(s.at(e)).epsilon(1e-15));
  }
  // serialization is deterministic
  CHECK(serialize_framework(fw2, &*s2) == text);
}

TEST_CASE("framework documents without stresses") {
  auto [fw, s] = testdata::k4_planar();
  std::string text = serialize_framework(fw);
  auto [fw2, s2] = parse_framework(text);
  CHECK(!s2.has_value());
  CHECK(fw2.edges.size() == fw.edges.size());
}

TEST_CASE("framework parse errors carry diagnostics") {
  CHECK_THROWS_AS(parse_framework("not json"), ParseError);
  CHECK_THROWS_AS(parse_framework("{}"), ParseError);
  CHECK_THROWS_AS(parse_framework(R"({"dim": 2, "vertices": [], "edges": 3})"),
                  ParseError);

  // loop edge
  std::string loop_doc = R"({
    "dim": 2,
    "vertices": [{"id": 1, "coords": [0, 0]}, {"id": 2, "coords": [1, 0]}],
    "edges": [{"i": 1, "j": 1}]
  })";
  CHECK_THROWS_WITH_AS(parse_framework(loop_doc),
                       doctest::Contains("loop edge"), ParseError);

  // duplicate edge
  std::string dup_doc = R"({
    "dim": 2,
    "vertices": [{"id": 1, "coords": [0, 0]}, {"id": 2, "coords": [1, 0]}],
    "edges": [{"i": 1, "j": 2}, {"i": 2, "j": 1}]
  })";
  CHECK_THROWS_AS(parse_framework(dup_doc), ParseError);

  // partial stresses
  std::string partial = R"({
    "dim": 2,
    "vertices": [{"id": 1, "coords": [0, 0]}, {"id": 2, "coords": [1, 0]},
                 {"id": 3, "coords": [0, 1]}],
    "edges": [{"i": 1, "j": 2, "stress": 1.0}, {"i": 2, "j": 3}]
  })";
  CHECK_THROWS_AS(parse_framework(partial), ParseError);

  // coincident vertices
  std::string coincident = R"({
    "dim": 2,
    "vertices": [{"id": 1, "coords": [0, 0]}, {"id": 2, "coords": [0, 0]}],
    "edges": [{"i": 1, "j": 2}]
  })";
  CHECK_THROWS_AS(parse_framework(coincident), ParseError);
}

TEST_CASE("complex documents round trip") {
  PolytopalComplex c = parallel_prism_complex(testdata::unit_cube_mesh(), 0.5);
  MFramework mf = associated_mframework(c);
  auto basis = forceload_basis(mf);
  REQUIRE(!basis.empty());
  std::string text = serialize_complex(c, &basis[0]);
  auto [c2, w2] = parse_complex(text);
  REQUIRE(w2.has_value());
  CHECK(c2.ambient_dim == c.ambient_dim);
  REQUIRE(c2.polygons.size() == c.polygons.size());
  for (std::size_t f = 0; f < c.polygons.size(); ++f) {
    REQUIRE(c2.polygons[f].size() == c.polygons[f].size());
    for (std::size_t k = 0; k < c.polygons[f].size(); ++k) {
      CHECK((c2.polygons[f][k] - c.polygons[f][k]).norm() < 1e-15);
    }
    CHECK(w2->at(static_cast<int>(f)) ==
          doctest::Approx(basis[0].at(static_cast<int>(f))).epsilon(1e-15));
  }
  CHECK(serialize_complex(c2, &*w2) == text);
}

TEST_CASE("complex parse errors") {
  CHECK_THROWS_AS(parse_complex("{}"), ParseError);
  CHECK_THROWS_AS(parse_complex(R"({"ambient_dim": 3, "polygons": []})"), ParseError);
  CHECK_THROWS_AS(
      parse_complex(R"({"ambient_dim": 3, "polygons": [[[0,0,0],[1,0,0]]]})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_complex(
          R"({"ambient_dim": 3, "polygons": [[[0,0,0],[1,0,0],[0,1,0]]], "loads": [1, 2]})"),
      ParseError);
}

TEST_CASE("OBJ export of the central K4 lifting") {
  auto [fw, s] = testdata::k4_planar();
  PolyhedralLifting pl = integrate_polyhedral_lifting(fw, s);
  std::string obj = export_obj(pl);

  std::istringstream is(obj);
  std::string line;
  std::vector<Eigen::Vector3d> verts;
  int faces = 0;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      Eigen::Vector3d p;
      ls >> p.x() >> p.y() >> p.z();
      verts.push_back(p);
    } else if (tag == "f") {
      ++faces;
    }
  }
  // three boundary corners at height 0 plus one interior apex
  CHECK(verts.size() == 4);
  CHECK(faces == 3);
  int zeros = 0, apex = 0;
  for (const auto& p : verts) {
    bool on_framework = false;
    for (const auto& [id, q] : fw.vertices) {
      if ((p.head<2>() - Eigen::Vector2d(q[0], q[1])).norm() < 1e-8) on_framework = true;
    }
    CHECK(on_framework);
    if (std::abs(p.z()) < 1e-9) ++zeros;
    if (std::abs(p.z() - std::sqrt(3.0) / 2) < 1e-8) ++apex;
  }
  CHECK(zeros == 3);
  CHECK(apex == 1);
}

TEST_CASE("OBJ export of the flat zero lifting") {
  auto [fw, s] = testdata::prism();
  Stress zero;
  for (const auto& e : fw.edges) zero.values[e] = 0.0;
  PolyhedralLifting pl = integrate_polyhedral_lifting(fw, zero);
  std::string obj = export_obj(pl);
  std::istringstream is(obj);
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind("v ", 0) != 0) continue;
    std::istringstream ls(line);
    std::string tag;
    double x, y, z;
    ls >> tag >> x >> y >> z;
    CHECK(z == doctest::Approx(0.0));
  }
}

TEST_CASE("SVG export labels the chambers") {
  auto [fw, s] = testdata::k4_planar();
  DifferentialLifting2D dl = differential_lifting_2d(fw, s);
  std::string svg = export_svg(dl.complex, &dl.forms);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<line") != std::string::npos);
  CHECK(svg.find("<text") != std::string::npos);
  CHECK(svg.find("dx") != std::string::npos);

  // one line per adjacency
  std::size_t lines = 0, pos = 0;
  while ((pos = svg.find("<line", pos)) != std::string::npos) {
    ++lines;
    pos += 5;
  }
  CHECK(lines == dl.complex.adjacencies.size());
}

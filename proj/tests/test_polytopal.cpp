#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "liftings/homotopy_nd.hpp"
#include "liftings/polytopal.hpp"

using namespace liftings;

namespace {

PolytopalComplex cube_pair(double lambda = 0.5) {
  return parallel_prism_complex(testdata::unit_cube_mesh(), lambda);
}

} // namespace

TEST_CASE("cube pair has 24 polygons and trivalent facets") {
  PolytopalComplex c = cube_pair();
  CHECK(c.polygons.size() == 24);
  auto facets = complex_facets(c);
  CHECK(facets.size() == 32); // 12 + 12 cube edges + 8 vertex connectors
  for (const auto& fc : facets) {
    CHECK(fc.polygons.size() == 3);
  }
}

TEST_CASE("cube pair passes complex validation") {
  PolytopalComplex c = cube_pair();
  CHECK_NOTHROW(validate_complex(c));
}

TEST_CASE("parallel prism generator rejects bad scale factors") {
  Mesh m = testdata::unit_cube_mesh();
  CHECK_THROWS_AS(parallel_prism_complex(m, 1.0), DegenerateInput);
  CHECK_THROWS_AS(parallel_prism_complex(m, -0.5), DegenerateInput);
  CHECK_THROWS_AS(parallel_prism_complex(m, 0.0), DegenerateInput);
  CHECK_NOTHROW(parallel_prism_complex(m, 2.0));
}

TEST_CASE("parallel prism generator rejects face planes through the origin") {
  Mesh m;
  m.vertices = {make_vec({0.0, 0.0, 0.0}), make_vec({1.0, 0.0, 0.0}),
                make_vec({0.0, 1.0, 0.0})};
  // shift off the origin so no edge is collinear with it, but keep the
  // plane z = 0 through the origin
  for (auto& p : m.vertices) {
    p[0] += 2.0;
    p[1] += 2.0;
  }
  m.faces = {{0, 1, 2}};
  CHECK_THROWS_AS(parallel_prism_complex(m, 0.5), DegenerateInput);
}

TEST_CASE("associated m-framework of the cube pair") {
  PolytopalComplex c = cube_pair();
  MFramework mf = associated_mframework(c);
  CHECK(mf.ambient_dim == 3);
  CHECK(mf.face_dim == 2);
  CHECK(mf.faces.size() == 24);
  CHECK(mf.edges.size() == 32);
  CHECK(mf.incidences.size() == 96); // 32 trivalent facets
  CHECK_NOTHROW(mf.validate());
}

TEST_CASE("cube pair has an equilibrium force-load") {
  PolytopalComplex c = cube_pair();
  MFramework mf = associated_mframework(c);
  auto basis = forceload_basis(mf);
  REQUIRE(!basis.empty());
  for (const auto& w : basis) {
    CHECK(max_forceload_residual(mf, w) < 1e-8);
    CHECK(is_equilibrium_forceload(mf, w));
    for (int e = 0; e < static_cast<int>(mf.edges.size()); ++e) {
      CHECK(facet_monodromy(mf, w, e).max_abs_coeff() < 1e-8);
    }
  }
}

TEST_CASE("facet monodromy detects perturbed force-loads") {
  PolytopalComplex c = cube_pair();
  MFramework mf = associated_mframework(c);
  auto basis = forceload_basis(mf);
  REQUIRE(!basis.empty());
  std::mt19937_64 rng(5150u);
  for (int trial = 0; trial < 50; ++trial) {
    ForceLoad w = basis[static_cast<std::size_t>(trial) % basis.size()];
    int face = static_cast<int>(rng() % mf.faces.size());
    w.values[face] += 0.25;
    double worst = 0.0;
    for (int e = 0; e < static_cast<int>(mf.edges.size()); ++e) {
      worst = std::max(worst, facet_monodromy(mf, w, e).max_abs_coeff());
    }
    CHECK(worst > 1e-8);
    CHECK_FALSE(is_equilibrium_forceload(mf, w));
  }
}

TEST_CASE("face_form of standard flats") {
  Flat xy;
  xy.base = make_vec({0.0, 0.0, 0.0});
  xy.basis = {make_vec({1.0, 0.0, 0.0}), make_vec({0.0, 1.0, 0.0})};
  MForm f = face_form(xy);
  CHECK(f.coeff({0, 1}) == doctest::Approx(1.0));
  CHECK(f.coeff({0, 2}) == doctest::Approx(0.0));

  const double r2 = std::sqrt(2.0);
  Flat tilted;
  tilted.base = make_vec({0.0, 0.0, 0.0});
  tilted.basis = {make_vec({1.0, 0.0, 0.0}), make_vec({0.0, 1.0 / r2, 1.0 / r2})};
  MForm g = face_form(tilted);
  CHECK(g.coeff({0, 1}) == doctest::Approx(1.0 / r2));
  CHECK(g.coeff({0, 2}) == doctest::Approx(1.0 / r2));
  CHECK(g.coeff({1, 2}) == doctest::Approx(0.0));

  Flat bad;
  bad.base = make_vec({0.0, 0.0, 0.0});
  bad.basis = {make_vec({1.0, 0.0, 0.0}), make_vec({1.0, 1.0, 0.0})};
  CHECK_THROWS_AS(face_form(bad), DegenerateInput);
}

TEST_CASE("face_form is independent of the positively oriented basis") {
  const double c = std::cos(0.7), s = std::sin(0.7);
  Flat a, b;
  a.base = make_vec({1.0, 2.0, 3.0});
  a.basis = {make_vec({1.0, 0.0, 0.0}), make_vec({0.0, 1.0, 0.0})};
  b.base = a.base;
  // rotated frame of the same oriented plane
  b.basis = {make_vec({c, s, 0.0}), make_vec({-s, c, 0.0})};
  CHECK(face_form(a).approx_distance(face_form(b)) < 1e-12);
}

TEST_CASE("lifting of face words") {
  PolytopalComplex c = cube_pair();
  MFramework mf = associated_mframework(c);
  auto basis = forceload_basis(mf);
  REQUIRE(!basis.empty());
  const ForceLoad& w = basis[0];

  MForm one = lifting_of_word_m(c, w, {{0, +1}});
  MForm expected = face_form(mf.faces[0]) * w.at(0);
  CHECK(one.approx_distance(expected) < 1e-9);

  MForm cancel = lifting_of_word_m(c, w, {{3, +1}, {3, -1}});
  CHECK(cancel.max_abs_coeff() < 1e-12);

  CHECK(lifting_of_word_m(c, w, {}).is_zero(0.0));
}

TEST_CASE("stress to force-load conversion round trips") {
  PolytopalComplex c = cube_pair();
  std::map<int, double> stress;
  for (int f = 0; f < static_cast<int>(c.polygons.size()); ++f) {
    stress[f] = 1.0 + 0.1 * f;
  }
  auto loads = convert_stress_forceload(c, stress, true);
  auto back = convert_stress_forceload(c, loads, false);
  for (const auto& [f, v] : stress) {
    CHECK(back.at(f) == doctest::Approx(v).epsilon(1e-12));
  }
  // unit cube faces have area 1, so stress equals load there
  CHECK(loads.at(0) == doctest::Approx(stress.at(0)));
}

TEST_CASE("m = 1 view reproduces the graph elementary forms") {
  auto [fw, s] = testdata::k4_planar();
  MFramework mf = mframework_from_framework(fw);
  CHECK(mf.face_dim == 1);
  CHECK(mf.edges.size() == fw.vertices.size());
  CHECK(mf.faces.size() == fw.edges.size());
  ForceLoad w = forceload_from_stress(fw, s);

  for (std::size_t k = 0; k < fw.edges.size(); ++k) {
    MForm from_face = face_form(mf.faces[k]) * w.at(static_cast<int>(k));
    MForm from_graph = elementary_lifting_form(fw, s, fw.edges[k].first,
                                               fw.edges[k].second, +1);
    CHECK(from_face.approx_distance(from_graph) < 1e-9);
  }

  // m = 1 facet monodromy vanishes exactly where the vertex one does
  CHECK(is_equilibrium_forceload(mf, w));
  for (int e = 0; e < static_cast<int>(mf.edges.size()); ++e) {
    CHECK(facet_monodromy(mf, w, e).max_abs_coeff() < 1e-9);
  }
  ForceLoad bad = w;
  bad.values[0] += 0.5;
  double worst = 0.0;
  for (int e = 0; e < static_cast<int>(mf.edges.size()); ++e) {
    worst = std::max(worst, facet_monodromy(mf, bad, e).max_abs_coeff());
  }
  CHECK(worst > 1e-8);
}

TEST_CASE("complex validation rejects overlapping coplanar polygons") {
  PolytopalComplex c;
  c.ambient_dim = 3;
  auto quad = [](double x0, double x1) {
    return std::vector<Vec>{make_vec({x0, 0.0, 0.0}), make_vec({x1, 0.0, 0.0}),
                            make_vec({x1, 1.0, 0.0}), make_vec({x0, 1.0, 0.0})};
  };
  // shifted in both axes so no two boundary edges are collinear
  c.polygons = {quad(0.0, 1.0),
                {make_vec({0.5, 0.25, 0.0}), make_vec({1.5, 0.25, 0.0}),
                 make_vec({1.5, 1.25, 0.0}), make_vec({0.5, 1.25, 0.0})}};
  CHECK_THROWS_AS(validate_complex(c), DegenerateInput);

  // a fold along a shared edge is fine
  const double fx = std::cos(1.0), fz = std::sin(1.0);
  PolytopalComplex ok;
  ok.ambient_dim = 3;
  ok.polygons = {quad(0.0, 1.0),
                 {make_vec({1.0, 0.0, 0.0}), make_vec({1.0 + fx, 0.0, fz}),
                  make_vec({1.0 + fx, 1.0, fz}), make_vec({1.0, 1.0, 0.0})}};
  CHECK_NOTHROW(validate_complex(ok));
}

TEST_CASE("complex validation rejects crossing polygons") {
  PolytopalComplex c;
  c.ambient_dim = 3;
  c.polygons = {
      {make_vec({-1.0, -1.0, 0.0}), make_vec({1.0, -1.0, 0.0}),
       make_vec({1.0, 1.0, 0.0}), make_vec({-1.0, 1.0, 0.0})},
      {make_vec({-1.0, 0.0, -1.0}), make_vec({1.0, 0.0, -1.0}),
       make_vec({1.0, 0.0, 1.0}), make_vec({-1.0, 0.0, 1.0})},
  };
  CHECK_THROWS_AS(validate_complex(c), DegenerateInput);
}

TEST_CASE("non-planar polygons are rejected") {
  PolytopalComplex c;
  c.ambient_dim = 3;
  c.polygons = {{make_vec({0.0, 0.0, 0.0}), make_vec({1.0, 0.0, 0.0}),
                 make_vec({1.0, 1.0, 0.5}), make_vec({0.0, 1.0, 0.0})}};
  CHECK_THROWS_AS(validate_complex(c), DegenerateInput);
}

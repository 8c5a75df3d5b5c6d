#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "liftings/framework.hpp"

using namespace liftings;

TEST_CASE("reference fixtures are self-stresses") {
  for (auto [fw, s] : {testdata::k4_planar(), testdata::k4_nonplanar(),
                       testdata::prism(), testdata::k5()}) {
    fw.validate();
    CHECK(max_equilibrium_residual(fw, s) < 1e-9);
    CHECK(is_self_stress(fw, s));
  }
}

TEST_CASE("a single stressed edge is not in equilibrium") {
  Framework fw;
  fw.dim = 2;
  fw.add_vertex(1, make_vec({0.0, 0.0}));
  fw.add_vertex(2, make_vec({2.0, 0.0}));
  fw.add_edge(1, 2);
  Stress s;
  s.set(1, 2, 1.0);
  CHECK(max_equilibrium_residual(fw, s) == doctest::Approx(2.0));
  CHECK_FALSE(is_self_stress(fw, s));
  auto res = equilibrium_residuals(fw, s);
  CHECK(res.at(1)[0] == doctest::Approx(-2.0));
  CHECK(res.at(2)[0] == doctest::Approx(2.0));
}

TEST_CASE("framework validation rejects bad input") {
  Framework fw;
  fw.dim = 2;
  fw.add_vertex(1, make_vec({0.0, 0.0}));
  fw.add_vertex(2, make_vec({1.0, 0.0}));
  CHECK_THROWS_AS(fw.add_edge(1, 1), DegenerateInput);
  fw.add_edge(1, 2);
  CHECK_THROWS_AS(fw.add_edge(2, 1), DegenerateInput);
  fw.add_vertex(3, make_vec({0.0, 0.0})); // coincides with vertex 1
  CHECK_THROWS_AS(fw.validate(), DegenerateInput);
}

TEST_CASE("K5 self-stress space is one-dimensional") {
  auto [fw, s] = testdata::k5();
  auto basis = self_stress_basis(fw);
  REQUIRE(basis.size() == 1);
  // proportional to the reference stress
  double ratio = basis[0].at(1, 2) / s.at(1, 2);
  CHECK(ratio != doctest::Approx(0.0));
  for (const auto& e : fw.edges) {
    CHECK(basis[0].at(e) == doctest::Approx(ratio * s.at(e)).epsilon(1e-9));
  }
  CHECK(is_self_stress(fw, basis[0]));
}

TEST_CASE("planar K4 self-stress space is one-dimensional") {
  auto [fw, s] = testdata::k4_planar();
  auto basis = self_stress_basis(fw);
  REQUIRE(basis.size() == 1);
  double ratio = basis[0].at(1, 2) / s.at(1, 2);
  for (const auto& e : fw.edges) {
    CHECK(basis[0].at(e) == doctest::Approx(ratio * s.at(e)).epsilon(1e-9));
  }
}

TEST_CASE("basis members are always self-stresses") {
  std::mt19937_64 rng(424242u);
  for (int trial = 0; trial < 100; ++trial) {
    int dim = 2 + static_cast<int>(rng() % 2);
    int count = 4 + static_cast<int>(rng() % 3);
    Framework fw = testdata::random_complete_framework(dim, count, rng);
    for (const auto& s : self_stress_basis(fw)) {
      CHECK(is_self_stress(fw, s));
    }
  }
}

TEST_CASE("a tree has no self-stress") {
  Framework fw;
  fw.dim = 2;
  fw.add_vertex(1, make_vec({0.0, 0.0}));
  fw.add_vertex(2, make_vec({1.0, 0.0}));
  fw.add_vertex(3, make_vec({0.0, 1.0}));
  fw.add_vertex(4, make_vec({1.0, 1.0}));
  fw.add_edge(1, 2);
  fw.add_edge(2, 3);
  fw.add_edge(3, 4);
  CHECK(self_stress_basis(fw).empty());
}

TEST_CASE("bridge edges carry zero stress in every self-stress") {
  std::mt19937_64 rng(909090u);
  for (int trial = 0; trial < 25; ++trial) {
    // triangle with a pendant path attached: the path edges are bridges
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    Framework fw;
    fw.dim = 2;
    for (int k = 1; k <= 5; ++k) {
      fw.add_vertex(k, make_vec({coord(rng), coord(rng)}));
    }
    fw.add_edge(1, 2);
    fw.add_edge(2, 3);
    fw.add_edge(1, 3);
    fw.add_edge(3, 4);
    fw.add_edge(4, 5);
    try {
      fw.validate();
    } catch (const Error&) {
      continue;
    }
    for (const auto& s : self_stress_basis(fw)) {
      CHECK(std::abs(s.at(3, 4)) < 1e-9);
      CHECK(std::abs(s.at(4, 5)) < 1e-9);
    }
  }
}

TEST_CASE("subdivide_crossings splits the K4 diagonals") {
  auto [fw, s] = testdata::k4_nonplanar();
  CHECK(has_interior_crossings(fw));
  auto [sub, ss] = subdivide_crossings(fw, s);
  CHECK_FALSE(has_interior_crossings(sub));
  CHECK(sub.vertices.size() == 5);
  CHECK(sub.edges.size() == 8);
  CHECK(is_self_stress(sub, ss));

  // the crossing point is the origin, both halves at lambda = 1/2, so
  // the diagonal stresses rescale from 1 to 2
  int mid = -1;
  for (const auto& [id, p] : sub.vertices) {
    if (p.norm() < 1e-12) mid = id;
  }
  REQUIRE(mid > 0);
  for (int corner = 1; corner <= 4; ++corner) {
    CHECK(ss.at(corner, mid) == doctest::Approx(2.0));
  }
}

TEST_CASE("subdivide_crossings leaves crossing-free input unchanged") {
  auto [fw, s] = testdata::prism();
  CHECK_FALSE(has_interior_crossings(fw));
  auto [sub, ss] = subdivide_crossings(fw, s);
  CHECK(sub.vertices.size() == fw.vertices.size());
  CHECK(sub.edges.size() == fw.edges.size());
  for (const auto& e : fw.edges) {
    CHECK(ss.at(e) == doctest::Approx(s.at(e)));
  }
}

TEST_CASE("stress arithmetic") {
  Stress a, b;
  a.set(1, 2, 2.0);
  b.set(1, 2, 0.5);
  b.set(2, 3, -1.0);
  Stress c = a + b * 2.0;
  CHECK(c.at(1, 2) == doctest::Approx(3.0));
  CHECK(c.at(2, 3) == doctest::Approx(-2.0));
  CHECK(c.at(7, 9) == doctest::Approx(0.0)); // absent edges read as zero
}

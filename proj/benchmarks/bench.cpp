#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "liftings/arrangement2d.hpp"
#include "liftings/grassmannian.hpp"
#include "liftings/lifting2d.hpp"
#include "liftings/polytopal.hpp"

using namespace liftings;

namespace {

// wheel: a regular n-gon with a hub connected to every rim vertex,
// carrying the classical one-parameter self-stress family
std::pair<Framework, Stress> wheel(int spokes) {
  const double pi = std::acos(-1.0);
  Framework fw;
  fw.dim = 2;
  fw.add_vertex(0, make_vec({0.0, 0.0}));
  for (int k = 0; k < spokes; ++k) {
    double phi = 2 * pi * k / spokes;
    fw.add_vertex(k + 1, make_vec({std::cos(phi), std::sin(phi)}));
  }
  for (int k = 0; k < spokes; ++k) {
    fw.add_edge(0, k + 1);
    fw.add_edge(k + 1, (k + 1) % spokes + 1);
  }
  auto basis = self_stress_basis(fw);
  return {fw, basis.at(0)};
}

Framework random_complete(int dim, int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  Framework fw;
  fw.dim = dim;
  for (int k = 1; k <= count; ++k) {
    Vec p(dim);
    for (int c = 0; c < dim; ++c) p[c] = coord(rng);
    fw.add_vertex(k, p);
  }
  for (int i = 1; i <= count; ++i) {
    for (int j = i + 1; j <= count; ++j) fw.add_edge(i, j);
  }
  return fw;
}

Mesh cube_mesh() {
  // origin strictly inside but off-center, so the homothetic copy nests
  // and the connector facets get pairwise distinct supporting lines
  Mesh m;
  for (int k = 0; k < 8; ++k) {
    double x = 0.10 + ((k & 1) ? 0.5 : -0.5);
    double y = 0.07 + ((k & 2) ? 0.5 : -0.5);
    double z = 0.03 + ((k & 4) ? 0.5 : -0.5);
    m.vertices.push_back(make_vec({x, y, z}));
  }
  m.faces = {{0, 1, 3, 2}, {4, 6, 7, 5}, {0, 4, 5, 1},
             {2, 3, 7, 6}, {0, 2, 6, 4}, {1, 5, 7, 3}};
  return m;
}

void BM_ChamberComplex(benchmark::State& state) {
  auto [fw, s] = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_chamber_complex(fw));
  }
}
BENCHMARK(BM_ChamberComplex)->Arg(6)->Arg(12)->Arg(24);

void BM_StressBasis(benchmark::State& state) {
  Framework fw = random_complete(2, static_cast<int>(state.range(0)), 42u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(self_stress_basis(fw));
  }
}
BENCHMARK(BM_StressBasis)->Arg(6)->Arg(10)->Arg(14);

void BM_PolyhedralLifting(benchmark::State& state) {
  auto [fw, s] = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_polyhedral_lifting(fw, s));
  }
}
BENCHMARK(BM_PolyhedralLifting)->Arg(6)->Arg(12)->Arg(24);

void BM_ForceloadBasis(benchmark::State& state) {
  PolytopalComplex c = parallel_prism_complex(cube_mesh(), 0.5);
  MFramework mf = associated_mframework(c);
  for (auto _ : state) {
    benchmark::DoNotOptimize(forceload_basis(mf));
  }
}
BENCHMARK(BM_ForceloadBasis);

void BM_GrassmannScan(benchmark::State& state) {
  FaceSystem fs;
  fs.ambient_dim = 3;
  const double pi = std::acos(-1.0);
  for (int k = 0; k < 6; ++k) {
    double phi = 2 * pi * k / 6;
    FaceSystem::Face face;
    face.span.spanning_points = {make_vec({0.0, 0.0, 0.0}),
                                 make_vec({std::cos(phi), std::sin(phi), 0.0})};
    face.verts = face.span.spanning_points;
    face.load = 1.0;
    fs.faces.push_back(std::move(face));
  }
  GrassmannPath path;
  AffineFlat a, b;
  a.spanning_points = {make_vec({3.0, 3.0, 0.0}), make_vec({3.0, 3.0, 1.0})};
  b.spanning_points = {make_vec({0.1, 0.2, 0.0}), make_vec({0.1, 0.2, 1.0})};
  path.samples = {a, b};
  for (auto _ : state) {
    benchmark::DoNotOptimize(path_crossings(path, fs));
  }
}
BENCHMARK(BM_GrassmannScan);

} // namespace

BENCHMARK_MAIN();

#include "helpers.hpp"

#include <cmath>

namespace testdata {

using liftings::make_vec;

std::pair<Framework, Stress> k4_planar() {
  const double s3 = std::sqrt(3.0);
  Framework fw;
  fw.dim = 2;
  fw.add_vertex(1, make_vec({0.0, 0.0}));
  fw.add_vertex(2, make_vec({1.0, 0.0}));
  fw.add_vertex(3, make_vec({-0.5, s3 / 2}));
  fw.add_vertex(4, make_vec({-0.5, -s3 / 2}));
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) fw.add_edge(i, j);
  }
  Stress s;
  s.set(1, 2, 3.0);
  s.set(1, 3, 3.0);
  s.set(1, 4, 3.0);
  s.set(2, 3, -1.0);
  s.set(3, 4, -1.0);
  s.set(2, 4, -1.0);
  return {fw, s};
}

std::pair<Framework, Stress> k4_nonplanar() {
  Framework fw;
  fw.dim = 2;
  fw.add_vertex(1, make_vec({1.0, 0.0}));
  fw.add_vertex(2, make_vec({0.0, 1.0}));
  fw.add_vertex(3, make_vec({-1.0, 0.0}));
  fw.add_vertex(4, make_vec({0.0, -1.0}));
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) fw.add_edge(i, j);
  }
  Stress s;
  s.set(1, 2, -1.0);
  s.set(2, 3, -1.0);
  s.set(3, 4, -1.0);
  s.set(1, 4, -1.0);
  s.set(1, 3, 1.0);
  s.set(2, 4, 1.0);
  return {fw, s};
}

std::pair<Framework, Stress> prism() {
  Framework fw;
  fw.dim = 2;
  fw.add_vertex(1, make_vec({-1.0, -1.0}));
  fw.add_vertex(2, make_vec({3.0, -1.0}));
  fw.add_vertex(3, make_vec({3.0, 1.0}));
  fw.add_vertex(4, make_vec({-1.0, 1.0}));
  fw.add_vertex(5, make_vec({0.0, 0.0}));
  fw.add_vertex(6, make_vec({2.0, 0.0}));
  fw.add_edge(1, 2);
  fw.add_edge(2, 3);
  fw.add_edge(3, 4);
  fw.add_edge(1, 4);
  fw.add_edge(1, 5);
  fw.add_edge(4, 5);
  fw.add_edge(2, 6);
  fw.add_edge(3, 6);
  fw.add_edge(5, 6);
  Stress s;
  s.set(1, 2, -1.0);
  s.set(3, 4, -1.0);
  s.set(2, 3, -2.0);
  s.set(1, 4, -2.0);
  s.set(1, 5, 4.0);
  s.set(4, 5, 4.0);
  s.set(2, 6, 4.0);
  s.set(3, 6, 4.0);
  s.set(5, 6, 4.0); // forced by equilibrium at p5
  return {fw, s};
}

std::pair<Framework, Stress> k5() {
  Framework fw;
  fw.dim = 3;
  fw.add_vertex(1, make_vec({0.0, 0.0, 0.0}));
  fw.add_vertex(2, make_vec({1.0, 0.0, 0.0}));
  fw.add_vertex(3, make_vec({0.0, 1.0, 0.0}));
  fw.add_vertex(4, make_vec({0.0, 0.0, 1.0}));
  fw.add_vertex(5, make_vec({1.0, 1.0, 1.0}));
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) fw.add_edge(i, j);
  }
  Stress s;
  s.set(1, 2, 2.0);
  s.set(1, 3, 2.0);
  s.set(1, 4, 2.0);
  s.set(1, 5, -2.0);
  s.set(2, 3, -1.0);
  s.set(2, 4, -1.0);
  s.set(2, 5, 1.0);
  s.set(3, 4, -1.0);
  s.set(3, 5, 1.0);
  s.set(4, 5, 1.0);
  return {fw, s};
}

Mesh unit_cube_mesh() {
  // The origin must lie strictly inside the cube (so the homothetic copy
  // nests and every ray from the origin meets the boundary once) but off
  // its center (a centered cube puts antipodal connectors on a common
  // line through the origin, which complex validation rejects).
  Mesh m;
  for (int k = 0; k < 8; ++k) {
    double x = 0.10 + ((k & 1) ? 0.5 : -0.5);
    double y = 0.07 + ((k & 2) ? 0.5 : -0.5);
    double z = 0.03 + ((k & 4) ? 0.5 : -0.5);
    m.vertices.push_back(make_vec({x, y, z}));
  }
  m.faces = {
      {0, 1, 3, 2}, // z = -1/2
      {4, 6, 7, 5}, // z = +1/2
      {0, 4, 5, 1}, // y = -1/2
      {2, 3, 7, 6}, // y = +1/2
      {0, 2, 6, 4}, // x = -1/2
      {1, 5, 7, 3}, // x = +1/2
  };
  return m;
}

PolygonalLoop polygon_circle(const Vec& center, const Vec& u, const Vec& v,
                             double radius, int segments) {
  PolygonalLoop loop;
  const double pi = std::acos(-1.0);
  for (int k = 0; k < segments; ++k) {
    double phi = 2 * pi * k / segments;
    loop.points.push_back(center + radius * std::cos(phi) * u +
                          radius * std::sin(phi) * v);
  }
  return loop;
}

Framework random_complete_framework(int dim, int count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  while (true) {
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
    try {
      fw.validate();
      return fw;
    } catch (const liftings::Error&) {
      // coincident draw, retry
    }
  }
}

double gauss_linking_oracle(const PolygonalLoop& a, const PolygonalLoop& b) {
  // 16-point Gauss-Legendre nodes and weights on [0, 1]
  static const double nodes[16] = {
      0.0052995325041750, 0.0277124884633837, 0.0671843988060841,
      0.1222977958224985, 0.1910618777986781, 0.2709916111713863,
      0.3591982246103705, 0.4524937450811813, 0.5475062549188187,
      0.6408017753896295, 0.7290083888286137, 0.8089381222013219,
      0.8777022041775015, 0.9328156011939159, 0.9722875115366163,
      0.9947004674958250};
  static const double weights[16] = {
      0.0135762297058770, 0.0311267619693239, 0.0475792558412464,
      0.0623144856277669, 0.0747979944082884, 0.0845782596975013,
      0.0913017075224618, 0.0947253052275343, 0.0947253052275343,
      0.0913017075224618, 0.0845782596975013, 0.0747979944082884,
      0.0623144856277669, 0.0475792558412464, 0.0311267619693239,
      0.0135762297058770};

  auto pt3 = [](const Vec& v) { return Eigen::Vector3d(v[0], v[1], v[2]); };
  const double pi = std::acos(-1.0);
  double total = 0.0;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    Eigen::Vector3d a0 = pt3(a.points[i]);
    Eigen::Vector3d da = pt3(a.points[(i + 1) % a.points.size()]) - a0;
    for (std::size_t j = 0; j < b.points.size(); ++j) {
      Eigen::Vector3d b0 = pt3(b.points[j]);
      Eigen::Vector3d db = pt3(b.points[(j + 1) % b.points.size()]) - b0;
      for (int s = 0; s < 16; ++s) {
        Eigen::Vector3d x = a0 + nodes[s] * da;
        for (int t = 0; t < 16; ++t) {
          Eigen::Vector3d y = b0 + nodes[t] * db;
          Eigen::Vector3d r = x - y;
          double r3 = std::pow(r.norm(), 3);
          total += weights[s] * weights[t] * da.cross(db).dot(r) / r3;
        }
      }
    }
  }
  return total / (4 * pi);
}

} // namespace testdata

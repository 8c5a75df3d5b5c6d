#include "liftings/framework.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

namespace liftings {

void Framework::add_vertex(int id, Vec p) {
  if (p.size() != dim) throw DimensionError("add_vertex: wrong coordinate count");
  vertices[id] = std::move(p);
}

void Framework::add_edge(int i, int j) {
  EdgeKey e = make_edge(i, j);
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it != edges.end() && *it == e) throw DegenerateInput("add_edge: duplicate edge");
  edges.insert(it, e);
}

const Vec& Framework::point(int id) const {
  auto it = vertices.find(id);
  if (it == vertices.end()) throw DegenerateInput("unknown vertex id");
  return it->second;
}

bool Framework::has_edge(EdgeKey e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

double Framework::scale() const {
  double s = 1.0;
  for (const auto& [id, p] : vertices) s = std::max(s, p.lpNorm<Eigen::Infinity>());
  return s;
}

void Framework::validate() const {
  if (dim < 1) throw DimensionError("framework: dim must be >= 1");
  const double eps = tolerances().eps_geom * scale();
  for (const auto& [id, p] : vertices) {
    if (p.size() != dim) throw DimensionError("framework: vertex with wrong dimension");
    if (!p.allFinite()) throw DegenerateInput("framework: non-finite coordinates");
  }
  for (auto a = vertices.begin(); a != vertices.end(); ++a) {
    auto b = a;
    for (++b; b != vertices.end(); ++b) {
      if ((a->second - b->second).norm() <= eps)
        throw DegenerateInput("framework: coincident vertex placements");
    }
  }
  for (const auto& [i, j] : edges) {
    if (i == j) throw DegenerateInput("framework: loop edge");
    if (!vertices.count(i) || !vertices.count(j))
      throw DegenerateInput("framework: edge endpoint missing");
  }
}

double Stress::at(EdgeKey e) const {
  auto it = values.find(e);
  return it == values.end() ? 0.0 : it->second;
}

Stress& Stress::operator+=(const Stress& o) {
  for (const auto& [e, w] : o.values) values[e] += w;
  return *this;
}

Stress& Stress::operator*=(double s) {
  for (auto& [e, w] : values) w *= s;
  return *this;
}

std::map<int, Vec> equilibrium_residuals(const Framework& fw, const Stress& s) {
  for (const auto& [e, w] : s.values) {
    if (!fw.has_edge(e)) throw DegenerateInput("stress key is not a framework edge");
  }
  std::map<int, Vec> res;
  for (const auto& [id, p] : fw.vertices) res[id] = Vec::Zero(fw.dim);
  for (const auto& e : fw.edges) {
    auto it = s.values.find(e);
    double w = it == s.values.end() ? 0.0 : it->second;
    const Vec& pi = fw.point(e.first);
    const Vec& pj = fw.point(e.second);
    res[e.first] += w * (pi - pj);
    res[e.second] += w * (pj - pi);
  }
  return res;
}

double max_equilibrium_residual(const Framework& fw, const Stress& s) {
  double m = 0.0;
  for (const auto& [id, r] : equilibrium_residuals(fw, s)) m = std::max(m, r.norm());
  return m;
}

bool is_self_stress(const Framework& fw, const Stress& s) {
  double stress_scale = 1.0;
  for (const auto& [e, w] : s.values) stress_scale = std::max(stress_scale, std::abs(w));
  return max_equilibrium_residual(fw, s) <=
         tolerances().eps_geom * fw.scale() * stress_scale * 100.0;
}

std::vector<Stress> self_stress_basis(const Framework& fw) {
  fw.validate();
  const int n = fw.dim;
  const auto ne = static_cast<Eigen::Index>(fw.edges.size());
  if (ne == 0) return {};

  std::map<int, Eigen::Index> row_block;
  Eigen::Index nb = 0;
  for (const auto& [id, p] : fw.vertices) row_block[id] = nb++;

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n * nb, ne);
  for (Eigen::Index c = 0; c < ne; ++c) {
    const auto& [i, j] = fw.edges[static_cast<std::size_t>(c)];
    Vec d = fw.point(i) - fw.point(j);
    A.block(n * row_block[i], c, n, 1) = d;
    A.block(n * row_block[j], c, n, 1) = -d;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  double cutoff = tolerances().eps_rank * std::max(smax, 1.0);
  // singular values beyond min(rows, cols) are implicitly zero
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) > cutoff) ++rank;
  }

  std::vector<Stress> basis;
  for (Eigen::Index c = rank; c < ne; ++c) {
    Stress s;
    for (Eigen::Index r = 0; r < ne; ++r) {
      s.values[fw.edges[static_cast<std::size_t>(r)]] = svd.matrixV()(r, c);
    }
    basis.push_back(std::move(s));
  }
  return basis;
}

namespace {

struct Seg {
  Eigen::Vector2d a, b;
};

double cross2(const Eigen::Vector2d& u, const Eigen::Vector2d& v) {
  return u.x() * v.y() - u.y() * v.x();
}

// Transversal intersection of two segments; returns parameters (t, u) on
// [0,1] when the supporting lines meet, nullopt when near-parallel.
std::optional<std::pair<double, double>> line_params(const Seg& p, const Seg& q,
                                                     double eps) {
  Eigen::Vector2d r = p.b - p.a;
  Eigen::Vector2d s = q.b - q.a;
  double denom = cross2(r, s);
  if (std::abs(denom) <= eps * r.norm() * s.norm()) return std::nullopt;
  Eigen::Vector2d d = q.a - p.a;
  return std::pair{cross2(d, s) / denom, cross2(d, r) / denom};
}

bool collinear_overlap(const Seg& p, const Seg& q, double eps) {
  Eigen::Vector2d r = p.b - p.a;
  Eigen::Vector2d s = q.b - q.a;
  if (std::abs(cross2(r, s)) > eps * r.norm() * s.norm()) return false;
  if (std::abs(cross2(q.a - p.a, r)) > eps * r.norm()) return false;
  // same line: check 1D interval overlap with positive length
  Eigen::Vector2d u = r.normalized();
  double pa = 0.0, pb = r.norm();
  double qa = u.dot(q.a - p.a), qb = u.dot(q.b - p.a);
  if (qa > qb) std::swap(qa, qb);
  return std::min(pb, qb) - std::max(pa, qa) > eps;
}

} // namespace

bool has_interior_crossings(const Framework& fw) {
  if (fw.dim != 2) throw DimensionError("interior crossings: requires dim = 2");
  const double eps = tolerances().eps_geom * fw.scale();
  for (std::size_t a = 0; a < fw.edges.size(); ++a) {
    Seg sa{fw.point(fw.edges[a].first).head<2>(), fw.point(fw.edges[a].second).head<2>()};
    for (std::size_t b = a + 1; b < fw.edges.size(); ++b) {
      Seg sb{fw.point(fw.edges[b].first).head<2>(), fw.point(fw.edges[b].second).head<2>()};
      auto tu = line_params(sa, sb, eps);
      if (!tu) continue;
      auto [t, u] = *tu;
      double la = (sa.b - sa.a).norm(), lb = (sb.b - sb.a).norm();
      if (t * la > eps && (1 - t) * la > eps && u * lb > eps && (1 - u) * lb > eps)
        return true;
    }
  }
  return false;
}

std::pair<Framework, Stress> subdivide_crossings(const Framework& fw,
                                                 const Stress& s) {
  if (fw.dim != 2) throw DimensionError("subdivide_crossings: requires dim = 2");
  if (!is_self_stress(fw, s))
    throw NotSelfStress("subdivide_crossings: stress fails equilibrium precheck");

  const double eps = tolerances().eps_geom * fw.scale();
  const std::size_t ne = fw.edges.size();
  std::vector<Seg> segs(ne);
  for (std::size_t a = 0; a < ne; ++a) {
    segs[a] = {fw.point(fw.edges[a].first).head<2>(),
               fw.point(fw.edges[a].second).head<2>()};
  }

  // collect interior crossing points, merged within eps
  std::vector<Eigen::Vector2d> xpoints;
  std::vector<std::vector<double>> cut_params(ne); // parameter t on each edge
  auto merge_point = [&](const Eigen::Vector2d& p) {
    for (auto& q : xpoints) {
      if ((q - p).norm() <= eps) return;
    }
    xpoints.push_back(p);
  };

  for (std::size_t a = 0; a < ne; ++a) {
    double la = (segs[a].b - segs[a].a).norm();
    for (std::size_t b = a + 1; b < ne; ++b) {
      if (collinear_overlap(segs[a], segs[b], eps))
        throw DegenerateInput("subdivide_crossings: overlapping collinear edges");
      double lb = (segs[b].b - segs[b].a).norm();
      auto tu = line_params(segs[a], segs[b], eps);
      if (!tu) continue;
      auto [t, u] = *tu;
      bool a_interior = t * la > eps && (1 - t) * la > eps;
      bool b_interior = u * lb > eps && (1 - u) * lb > eps;
      bool a_touch = t * la > -eps && (1 - t) * la > -eps;
      bool b_touch = u * lb > -eps && (1 - u) * lb > -eps;
      if (a_interior && b_interior) {
        Eigen::Vector2d p = segs[a].a + t * (segs[a].b - segs[a].a);
        merge_point(p);
        cut_params[a].push_back(t);
        cut_params[b].push_back(u);
      } else if ((a_interior && b_touch) || (b_interior && a_touch)) {
        throw DegenerateInput(
            "subdivide_crossings: edge endpoint touches another edge interior");
      }
    }
  }

  bool any_cut = false;
  for (auto& c : cut_params) {
    if (!c.empty()) any_cut = true;
  }
  if (!any_cut) return {fw, s};

  Framework out = fw;
  Stress sout;
  out.edges.clear();

  int next_id = fw.vertices.empty() ? 0 : fw.vertices.rbegin()->first + 1;
  std::vector<int> xids(xpoints.size());
  for (std::size_t k = 0; k < xpoints.size(); ++k) {
    Vec p(2);
    p << xpoints[k].x(), xpoints[k].y();
    xids[k] = next_id;
    out.add_vertex(next_id++, p);
  }
  auto xid_at = [&](const Eigen::Vector2d& p) {
    for (std::size_t k = 0; k < xpoints.size(); ++k) {
      if ((xpoints[k] - p).norm() <= eps) return xids[k];
    }
    throw ConsistencyError("subdivide_crossings: lost a crossing point");
  };

  for (std::size_t a = 0; a < ne; ++a) {
    const auto& e = fw.edges[a];
    double w = s.values.count(e) ? s.values.at(e) : 0.0;
    double la = (segs[a].b - segs[a].a).norm();
    std::vector<std::pair<double, int>> stops; // (param, vertex id)
    stops.emplace_back(0.0, e.first);
    stops.emplace_back(1.0, e.second);
    std::sort(cut_params[a].begin(), cut_params[a].end());
    for (double t : cut_params[a]) {
      if (!stops.empty() && std::abs(stops.back().first - t) * la <= eps) continue;
      Eigen::Vector2d p = segs[a].a + t * (segs[a].b - segs[a].a);
      stops.emplace_back(t, xid_at(p));
    }
    std::sort(stops.begin(), stops.end());
    for (std::size_t k = 0; k + 1 < stops.size(); ++k) {
      double lambda = stops[k + 1].first - stops[k].first;
      EdgeKey sub = make_edge(stops[k].second, stops[k + 1].second);
      if (!out.has_edge(sub)) out.add_edge(sub.first, sub.second);
      sout.values[sub] = w / lambda;
    }
  }
  return {out, sout};
}

} // namespace liftings

#include "liftings/homotopy_nd.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <random>

namespace liftings {

namespace {

// Global sign conventions, calibrated once against a right-handed Hopf
// link (projection crossings) and a loop encircling an oriented segment
// counterclockwise as seen from the segment direction (cone crossings).
constexpr double kProjectionSign = +1.0;
constexpr double kConeSign = +1.0;

double cross2(const Eigen::Vector2d& u, const Eigen::Vector2d& v) {
  return u.x() * v.y() - u.y() * v.x();
}

// Closest distance between two segments in R^3.
double segment_distance(const Eigen::Vector3d& p1, const Eigen::Vector3d& p2,
                        const Eigen::Vector3d& q1, const Eigen::Vector3d& q2) {
  Eigen::Vector3d d1 = p2 - p1, d2 = q2 - q1, r = p1 - q1;
  double a = d1.squaredNorm(), e = d2.squaredNorm(), f = d2.dot(r);
  double s = 0.0, t = 0.0;
  if (a <= 0.0 && e <= 0.0) return r.norm();
  if (a <= 0.0) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    double c = d1.dot(r);
    if (e <= 0.0) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      double b = d1.dot(d2);
      double denom = a * e - b * b;
      if (denom > 0.0) s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  return (p1 + s * d1 - (q1 + t * d2)).norm();
}

// Closest distance from a point to a filled triangle (Ericson's
// barycentric clamping).
double point_triangle_distance(const Eigen::Vector3d& p, const Eigen::Vector3d& a,
                               const Eigen::Vector3d& b, const Eigen::Vector3d& c) {
  Eigen::Vector3d ab = b - a, ac = c - a, ap = p - a;
  double d1 = ab.dot(ap), d2 = ac.dot(ap);
  if (d1 <= 0.0 && d2 <= 0.0) return (p - a).norm();
  Eigen::Vector3d bp = p - b;
  double d3 = ab.dot(bp), d4 = ac.dot(bp);
  if (d3 >= 0.0 && d4 <= d3) return (p - b).norm();
  double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
    double v = d1 / (d1 - d3);
    return (p - (a + v * ab)).norm();
  }
  Eigen::Vector3d cp = p - c;
  double d5 = ab.dot(cp), d6 = ac.dot(cp);
  if (d6 >= 0.0 && d5 <= d6) return (p - c).norm();
  double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
    double w = d2 / (d2 - d6);
    return (p - (a + w * ac)).norm();
  }
  double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
    double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    return (p - (b + w * (c - b))).norm();
  }
  double denom = 1.0 / (va + vb + vc);
  double v = vb * denom, w = vc * denom;
  return (p - (a + v * ab + w * ac)).norm();
}

double segment_triangle_distance(const Eigen::Vector3d& q1, const Eigen::Vector3d& q2,
                                 const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                                 const Eigen::Vector3d& c) {
  double best = std::numeric_limits<double>::infinity();
  const int samples = 33;
  for (int k = 0; k < samples; ++k) {
    double t = static_cast<double>(k) / (samples - 1);
    best = std::min(best, point_triangle_distance(q1 + t * (q2 - q1), a, b, c));
  }
  return best;
}

Eigen::Vector3d as3(const Vec& v) {
  if (v.size() != 3) throw DimensionError("expected a point in R^3");
  return Eigen::Vector3d(v[0], v[1], v[2]);
}

std::vector<Eigen::Vector3d> loop_points3(const PolygonalLoop& loop) {
  loop.validate();
  std::vector<Eigen::Vector3d> pts;
  pts.reserve(loop.points.size());
  for (const Vec& p : loop.points) pts.push_back(as3(p));
  return pts;
}

double loop_scale(const std::vector<Eigen::Vector3d>& pts) {
  double s = 1.0;
  for (const auto& p : pts) s = std::max(s, p.lpNorm<Eigen::Infinity>());
  return s;
}

} // namespace

void PolygonalLoop::validate() const {
  if (points.size() < 3) throw DegenerateInput("loop: needs at least 3 points");
  for (const Vec& p : points) {
    if (p.size() != 3) throw DimensionError("loop: points must lie in R^3");
    if (!p.allFinite()) throw DegenerateInput("loop: non-finite coordinates");
  }
  for (std::size_t k = 0; k < points.size(); ++k) {
    const Vec& a = points[k];
    const Vec& b = points[(k + 1) % points.size()];
    if ((a - b).norm() <= tolerances().eps_geom)
      throw DegenerateInput("loop: consecutive points coincide");
  }
}

MForm elementary_lifting_form(const Framework& fw, const Stress& s, int i, int j,
                              int sign) {
  if (sign != 1 && sign != -1)
    throw DegenerateInput("elementary_lifting_form: sign must be +1 or -1");
  EdgeKey e = make_edge(i, j);
  if (!fw.has_edge(e)) throw DegenerateInput("elementary_lifting_form: unknown edge");
  auto it = s.values.find(e);
  double w = it == s.values.end() ? 0.0 : it->second;
  Vec d = fw.point(i) - fw.point(j);
  return MForm::covector(d) * (sign * w);
}

MForm lifting_of_word(const Framework& fw, const Stress& s, const CrossingWord& w) {
  MForm out(fw.dim, 1);
  for (const auto& entry : w.entries) {
    out += elementary_lifting_form(fw, s, entry.i, entry.j, entry.sign);
  }
  return out;
}

MForm vertex_monodromy(const Framework& fw, const Stress& s, int vertex) {
  if (!fw.vertices.count(vertex))
    throw DegenerateInput("vertex_monodromy: unknown vertex");
  MForm out(fw.dim, 1);
  for (const auto& e : fw.edges) {
    if (e.first != vertex && e.second != vertex) continue;
    int other = e.first == vertex ? e.second : e.first;
    auto it = s.values.find(e);
    double w = it == s.values.end() ? 0.0 : it->second;
    out += MForm::covector(fw.point(vertex) - fw.point(other)) * w;
  }
  return out;
}

int linking_number(const PolygonalLoop& a, const PolygonalLoop& b, unsigned seed) {
  auto pa = loop_points3(a);
  auto pb = loop_points3(b);
  const double scale = std::max(loop_scale(pa), loop_scale(pb));
  const double eps = tolerances().eps_geom * scale;

  for (std::size_t i = 0; i < pa.size(); ++i) {
    for (std::size_t j = 0; j < pb.size(); ++j) {
      if (segment_distance(pa[i], pa[(i + 1) % pa.size()], pb[j],
                           pb[(j + 1) % pb.size()]) <= eps)
        throw DegenerateInput("linking_number: loops intersect");
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const double margin = 1e-7;

  for (int attempt = 0; attempt < 32; ++attempt) {
    Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
    if (attempt > 0) {
      Eigen::Quaterniond q(unit(rng), unit(rng), unit(rng), unit(rng));
      if (q.norm() < 1e-3) continue;
      q.normalize();
      R = q.toRotationMatrix();
    }
    std::vector<Eigen::Vector3d> ra(pa.size()), rb(pb.size());
    for (std::size_t k = 0; k < pa.size(); ++k) ra[k] = R * pa[k];
    for (std::size_t k = 0; k < pb.size(); ++k) rb[k] = R * pb[k];

    bool degenerate = false;
    double total = 0.0;
    for (std::size_t i = 0; i < ra.size() && !degenerate; ++i) {
      Eigen::Vector3d a1 = ra[i], a2 = ra[(i + 1) % ra.size()];
      Eigen::Vector2d da = (a2 - a1).head<2>();
      for (std::size_t j = 0; j < rb.size() && !degenerate; ++j) {
        Eigen::Vector3d b1 = rb[j], b2 = rb[(j + 1) % rb.size()];
        Eigen::Vector2d db = (b2 - b1).head<2>();
        double denom = cross2(da, db);
        if (std::abs(denom) <= margin * da.norm() * db.norm()) {
          // parallel in projection: degenerate only when the shadows overlap
          if (segment_distance({a1.x(), a1.y(), 0}, {a2.x(), a2.y(), 0},
                               {b1.x(), b1.y(), 0}, {b2.x(), b2.y(), 0}) <=
              margin * scale)
            degenerate = true;
          continue;
        }
        Eigen::Vector2d d = (b1 - a1).head<2>();
        double t = cross2(d, db) / denom;
        double u = cross2(d, da) / denom;
        bool t_in = t > margin && t < 1 - margin;
        bool u_in = u > margin && u < 1 - margin;
        bool t_out = t < -margin || t > 1 + margin;
        bool u_out = u < -margin || u > 1 + margin;
        if (t_out || u_out) continue;
        if (!t_in || !u_in) {
          degenerate = true;
          continue;
        }
        double za = a1.z() + t * (a2.z() - a1.z());
        double zb = b1.z() + u * (b2.z() - b1.z());
        if (std::abs(za - zb) <= margin * scale) {
          degenerate = true;
          continue;
        }
        if (za > zb) total += denom > 0 ? 1.0 : -1.0;
      }
    }
    if (degenerate) continue;
    return static_cast<int>(std::lround(kProjectionSign * total));
  }
  throw DegenerateInput("linking_number: no generic projection found");
}

int cone_crossings(const PolygonalLoop& loop, const Vec& apex, const Vec& q1,
                   const Vec& q2) {
  auto pts = loop_points3(loop);
  Eigen::Vector3d ap = as3(apex), a3 = as3(q1), b3 = as3(q2);
  Eigen::Vector3d D = b3 - a3;
  if (D.norm() <= tolerances().eps_geom)
    throw DegenerateInput("cone_crossings: zero-length segment");
  const double scale = std::max({loop_scale(pts), ap.lpNorm<Eigen::Infinity>(),
                                 a3.lpNorm<Eigen::Infinity>(),
                                 b3.lpNorm<Eigen::Infinity>()});
  const double eps = tolerances().eps_geom * scale;
  const double margin = 1e-9;

  int total = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    Eigen::Vector3d A = pts[k] - ap;
    Eigen::Vector3d B = pts[(k + 1) % pts.size()] - ap;
    Eigen::Matrix3d M;
    M.col(0) = A;
    M.col(1) = B;
    M.col(2) = -D;
    double det = M.determinant();
    if (std::abs(det) <= 1e-12 * A.norm() * B.norm() * D.norm()) {
      // cone triangle parallel to the segment direction
      if (segment_triangle_distance(a3, b3, ap, pts[k],
                                    pts[(k + 1) % pts.size()]) <= eps)
        throw DegenerateInput("cone_crossings: non-transversal cone");
      continue;
    }
    Eigen::Vector3d sol = M.partialPivLu().solve(a3 - ap);
    double u = sol[0], v = sol[1], t = sol[2];
    bool inside = u > margin && v > margin && (u + v) < 1 - margin && t > margin &&
                  t < 1 - margin;
    bool outside = u < -margin || v < -margin || (u + v) > 1 + margin ||
                   t < -margin || t > 1 + margin;
    if (inside) {
      double sgn = (A.cross(B)).dot(D) > 0 ? 1.0 : -1.0;
      total += static_cast<int>(kConeSign * sgn);
    } else if (!outside) {
      throw DegenerateInput("cone_crossings: crossing at a fan boundary");
    }
  }
  return total;
}

MForm lifting_of_loop(const Framework& fw, const Stress& s, const PolygonalLoop& loop,
                      const Vec& apex) {
  if (fw.dim != 3) throw DimensionError("lifting_of_loop: requires dim = 3");
  if (!is_self_stress(fw, s))
    throw NotSelfStress("lifting_of_loop: stress fails equilibrium precheck");
  auto pts = loop_points3(loop);
  const double scale = std::max(fw.scale(), loop_scale(pts));
  const double eps = tolerances().eps_geom * scale;
  for (const auto& e : fw.edges) {
    Eigen::Vector3d p = as3(fw.point(e.first)), q = as3(fw.point(e.second));
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (segment_distance(pts[k], pts[(k + 1) % pts.size()], p, q) <= eps)
        throw DegenerateInput("lifting_of_loop: loop touches the framework");
    }
  }

  std::mt19937_64 rng(987654321u);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Vec base = apex;
  for (int attempt = 0; attempt < 16; ++attempt) {
    Vec try_apex = base;
    if (attempt > 0) {
      for (Eigen::Index k = 0; k < 3; ++k) try_apex[k] += 1e-3 * scale * unit(rng);
    }
    try {
      MForm out(3, 1);
      for (const auto& e : fw.edges) {
        int count = cone_crossings(loop, try_apex, fw.point(e.first), fw.point(e.second));
        if (count == 0) continue;
        auto it = s.values.find(e);
        double w = it == s.values.end() ? 0.0 : it->second;
        out += MForm::covector(fw.point(e.first) - fw.point(e.second)) * (count * w);
      }
      return out;
    } catch (const DegenerateInput&) {
      continue;
    }
  }
  throw DegenerateInput("lifting_of_loop: no transversal apex found");
}

Stress recover_stress_nd(const Framework& fw,
                         const std::map<std::pair<int, int>, MForm>& elementary_values) {
  Stress out;
  const double tol = tolerances().eps_form * std::max(1.0, fw.scale());
  for (const auto& [oriented, form] : elementary_values) {
    EdgeKey e = make_edge(oriented.first, oriented.second);
    if (!fw.has_edge(e)) throw DegenerateInput("recover_stress_nd: unknown edge");
    Vec d = fw.point(oriented.first) - fw.point(oriented.second);
    Vec c = form.as_covector();
    double w = c.dot(d) / d.squaredNorm();
    if ((c - w * d).lpNorm<Eigen::Infinity>() > tol * std::max(1.0, std::abs(w)))
      throw ConsistencyError("recover_stress_nd: form not parallel to its edge covector");
    auto it = out.values.find(e);
    if (it == out.values.end()) {
      out.values[e] = w;
    } else if (std::abs(it->second - w) > tol * std::max(1.0, std::abs(w))) {
      throw ConsistencyError("recover_stress_nd: inconsistent orientations");
    }
  }
  for (const auto& e : fw.edges) {
    if (!out.values.count(e)) out.values[e] = 0.0;
  }
  return out;
}

} // namespace liftings

#include "liftings/grassmannian.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

namespace liftings {

namespace {

double flats_scale(const FaceSystem& fs, const GrassmannPath& path) {
  double s = 1.0;
  for (const auto& f : fs.faces) {
    for (const Vec& p : f.span.spanning_points) s = std::max(s, p.lpNorm<Eigen::Infinity>());
    for (const Vec& p : f.verts) s = std::max(s, p.lpNorm<Eigen::Infinity>());
  }
  for (const auto& fl : path.samples) {
    for (const Vec& p : fl.spanning_points) s = std::max(s, p.lpNorm<Eigen::Infinity>());
  }
  return s;
}

std::vector<Vec> difference_tuple(const AffineFlat& f) {
  std::vector<Vec> d;
  for (std::size_t k = 1; k < f.spanning_points.size(); ++k) {
    d.push_back(f.spanning_points[k] - f.spanning_points[0]);
  }
  return d;
}

// Intersection point of two flats whose dimensions add to n - 1,
// assuming they meet (dist ~ 0); returns false when the least-squares
// solve leaves a large residual.
bool flat_intersection(const AffineFlat& a, const AffineFlat& b, double eps, Vec& x) {
  auto da = difference_tuple(a);
  auto db = difference_tuple(b);
  const auto n = a.spanning_points[0].size();
  Eigen::MatrixXd M(n, static_cast<Eigen::Index>(da.size() + db.size()));
  for (std::size_t k = 0; k < db.size(); ++k) M.col(static_cast<Eigen::Index>(k)) = db[k];
  for (std::size_t k = 0; k < da.size(); ++k) {
    M.col(static_cast<Eigen::Index>(db.size() + k)) = -da[k];
  }
  Vec rhs = a.spanning_points[0] - b.spanning_points[0];
  Vec sol = M.colPivHouseholderQr().solve(rhs);
  if ((M * sol - rhs).norm() > eps) return false;
  x = b.spanning_points[0];
  for (std::size_t k = 0; k < db.size(); ++k) x += sol[static_cast<Eigen::Index>(k)] * db[k];
  return true;
}

// -1: outside the polytope, 0: within eps of its boundary, +1: interior.
int polytope_side(const std::vector<Vec>& verts, const Vec& x, double eps) {
  if (verts.size() == 2) {
    Vec d = verts[1] - verts[0];
    double len = d.norm();
    double u = (x - verts[0]).dot(d) / (len * len);
    Vec foot = verts[0] + u * d;
    if ((x - foot).norm() > eps) return -1;
    if (u * len < -eps || (u - 1) * len > eps) return -1;
    if (u * len < eps || (1 - u) * len < eps) return 0;
    return 1;
  }
  // polygon: work in an in-plane orthonormal frame
  const Vec& base = verts[0];
  std::vector<Vec> basis;
  for (std::size_t k = 1; k < verts.size() && basis.size() < 2; ++k) {
    Vec v = verts[k] - base;
    for (const Vec& b : basis) v -= b.dot(v) * b;
    if (v.norm() > eps) basis.push_back(v.normalized());
  }
  if (basis.size() != 2) throw DegenerateInput("face polytope is degenerate");
  Vec rel = x - base;
  Vec inplane = Vec::Zero(rel.size());
  for (const Vec& b : basis) inplane += b.dot(rel) * b;
  if ((rel - inplane).norm() > eps) return -1;

  std::vector<Eigen::Vector2d> uv;
  for (const Vec& p : verts) {
    Vec r = p - base;
    uv.emplace_back(basis[0].dot(r), basis[1].dot(r));
  }
  Eigen::Vector2d pt(basis[0].dot(rel), basis[1].dot(rel));

  for (std::size_t k = 0; k < uv.size(); ++k) {
    Eigen::Vector2d a2 = uv[k], b2 = uv[(k + 1) % uv.size()];
    Eigen::Vector2d d = b2 - a2;
    double len2 = d.squaredNorm();
    double u = std::clamp((pt - a2).dot(d) / len2, 0.0, 1.0);
    if ((pt - (a2 + u * d)).norm() <= eps) return 0;
  }
  int winding = 0;
  for (std::size_t k = 0; k < uv.size(); ++k) {
    Eigen::Vector2d p2 = uv[k], q2 = uv[(k + 1) % uv.size()];
    double cr = (q2.x() - p2.x()) * (pt.y() - p2.y()) -
                (q2.y() - p2.y()) * (pt.x() - p2.x());
    if (p2.y() <= pt.y()) {
      if (q2.y() > pt.y() && cr > 0) ++winding;
    } else {
      if (q2.y() <= pt.y() && cr < 0) --winding;
    }
  }
  return winding != 0 ? 1 : -1;
}

} // namespace

int AffineFlat::ambient_dim() const {
  if (spanning_points.empty()) throw DegenerateInput("flat: no spanning points");
  return static_cast<int>(spanning_points[0].size());
}

void AffineFlat::validate() const {
  if (spanning_points.empty()) throw DegenerateInput("flat: no spanning points");
  const auto n = spanning_points[0].size();
  for (const Vec& p : spanning_points) {
    if (p.size() != n) throw DimensionError("flat: mixed ambient dimensions");
    if (!p.allFinite()) throw DegenerateInput("flat: non-finite coordinates");
  }
  if (spanning_points.size() > 1) {
    auto d = difference_tuple(*this);
    double s = 1.0;
    for (const Vec& p : spanning_points) s = std::max(s, p.lpNorm<Eigen::Infinity>());
    if (gram_volume(d) <= tolerances().eps_geom * std::pow(s, static_cast<double>(d.size())))
      throw DegenerateInput("flat: spanning points affinely dependent");
  }
}

AffineFlat GrassmannPath::at(double t) const {
  validate();
  t = std::clamp(t, 0.0, 1.0);
  const auto nseg = samples.size() - 1;
  double scaled = t * static_cast<double>(nseg);
  std::size_t seg = std::min(static_cast<std::size_t>(scaled), nseg - 1);
  double local = scaled - static_cast<double>(seg);
  AffineFlat f;
  const auto& a = samples[seg].spanning_points;
  const auto& b = samples[seg + 1].spanning_points;
  for (std::size_t k = 0; k < a.size(); ++k) {
    f.spanning_points.push_back(a[k] + local * (b[k] - a[k]));
  }
  return f;
}

void GrassmannPath::validate() const {
  if (samples.size() < 2) throw DegenerateInput("path: needs at least 2 samples");
  const auto count = samples[0].spanning_points.size();
  for (const auto& f : samples) {
    f.validate();
    if (f.spanning_points.size() != count)
      throw DimensionError("path: samples with different spanning-point counts");
  }
}

double flat_distance(const AffineFlat& a, const AffineFlat& b) {
  a.validate();
  b.validate();
  const int n = a.ambient_dim();
  if (b.ambient_dim() != n) throw DimensionError("flat_distance: mixed ambient dimensions");
  const auto r = a.spanning_points.size();
  const auto s = b.spanning_points.size();
  if (r + s != static_cast<std::size_t>(n) + 1)
    throw DimensionError("flat_distance: spanning-point counts must add to n + 1");

  std::vector<Vec> cols;
  for (std::size_t k = 1; k < s; ++k) {
    cols.push_back(b.spanning_points[k] - b.spanning_points[0]);
  }
  for (std::size_t k = 0; k < r; ++k) {
    cols.push_back(a.spanning_points[k] - b.spanning_points[0]);
  }
  double num = signed_det(cols);

  double den = 1.0;
  auto da = difference_tuple(a);
  auto db = difference_tuple(b);
  if (!da.empty()) den *= gram_volume(da);
  if (!db.empty()) den *= gram_volume(db);
  if (den <= 0.0) throw DegenerateInput("flat_distance: degenerate spanning tuple");
  return num / den;
}

std::vector<CrossingEvent> path_crossings(const GrassmannPath& path,
                                          const FaceSystem& fs) {
  path.validate();
  const double scale = flats_scale(fs, path);
  const double eps = tolerances().eps_geom * scale;
  const std::size_t nseg = path.samples.size() - 1;

  auto flat_at = [&](std::size_t seg, double local) {
    AffineFlat f;
    const auto& a = path.samples[seg].spanning_points;
    const auto& b = path.samples[seg + 1].spanning_points;
    for (std::size_t k = 0; k < a.size(); ++k) {
      f.spanning_points.push_back(a[k] + local * (b[k] - a[k]));
    }
    return f;
  };

  std::vector<CrossingEvent> events;
  for (std::size_t fi = 0; fi < fs.faces.size(); ++fi) {
    const FaceSystem::Face& face = fs.faces[fi];
    auto g_at = [&](std::size_t seg, double local) {
      return flat_distance(flat_at(seg, local), face.span);
    };
    double g_start = g_at(0, 0.0);
    if (std::abs(g_start) <= eps) {
      Vec x;
      if (flat_intersection(path.samples.front(), face.span, eps, x) &&
          polytope_side(face.verts, x, eps) >= 0)
        throw NonSimplePath("path_crossings: start flat meets a face");
    }

    for (std::size_t seg = 0; seg < nseg; ++seg) {
      bool resolved = false;
      for (int density = 1024; density <= 65536 && !resolved; density *= 2) {
        // interior samples are shifted by an irrational fraction of the
        // step so that roots at simple rational parameters never land
        // exactly on a sample
        std::vector<double> g(static_cast<std::size_t>(density) + 1);
        std::vector<double> pos(static_cast<std::size_t>(density) + 1);
        for (int k = 0; k <= density; ++k) {
          double u = static_cast<double>(k) / density;
          if (k > 0 && k < density) u = (static_cast<double>(k) + 0.3819660112501051) / density;
          pos[static_cast<std::size_t>(k)] = u;
          g[static_cast<std::size_t>(k)] = g_at(seg, u);
        }
        bool tangency = false;
        std::vector<CrossingEvent> seg_events;
        for (int k = 0; k < density; ++k) {
          double g0 = g[static_cast<std::size_t>(k)];
          double g1 = g[static_cast<std::size_t>(k) + 1];
          bool change = (g0 < 0 && g1 > 0) || (g0 > 0 && g1 < 0);
          if (!change) {
            bool interior_sample = k > 0 || seg > 0;
            if (std::abs(g0) <= eps && interior_sample &&
                !((k > 0 && (g[static_cast<std::size_t>(k) - 1] < 0) != (g1 < 0))))
              tangency = true;
            continue;
          }
          double lo = pos[static_cast<std::size_t>(k)];
          double hi = pos[static_cast<std::size_t>(k) + 1];
          double glo = g0;
          while (hi - lo > tolerances().eps_geom) {
            double mid = 0.5 * (lo + hi);
            double gm = g_at(seg, mid);
            if ((gm < 0) == (glo < 0)) {
              lo = mid;
              glo = gm;
            } else {
              hi = mid;
            }
          }
          double root = 0.5 * (lo + hi);
          Vec x;
          if (!flat_intersection(flat_at(seg, root), face.span, eps * 1e3, x))
            throw NonSimplePath("path_crossings: unresolved root cluster");
          int side = polytope_side(face.verts, x, eps);
          if (side == 0)
            throw NonSimplePath("path_crossings: crossing at a facet point");
          if (side < 0) continue;
          CrossingEvent ev;
          ev.face = static_cast<int>(fi);
          ev.t = (static_cast<double>(seg) + root) / static_cast<double>(nseg);
          ev.mu = g1 > 0 ? +1 : -1;
          if (ev.t < 1.0 - tolerances().eps_geom) seg_events.push_back(ev);
        }
        if (tangency) {
          if (density == 65536)
            throw NonSimplePath("path_crossings: tangency or unresolved root cluster");
          continue;
        }
        events.insert(events.end(), seg_events.begin(), seg_events.end());
        resolved = true;
      }
      if (!resolved)
        throw NonSimplePath("path_crossings: tangency or unresolved root cluster");
    }
  }
  std::sort(events.begin(), events.end(),
            [](const CrossingEvent& a, const CrossingEvent& b) { return a.t < b.t; });
  return events;
}

double grassmann_lifting(const GrassmannPath& path, const FaceSystem& fs) {
  auto events = path_crossings(path, fs);
  const AffineFlat& final_flat = path.samples.back();
  double total = 0.0;
  for (const CrossingEvent& ev : events) {
    const FaceSystem::Face& face = fs.faces[static_cast<std::size_t>(ev.face)];
    total += ev.mu * face.load * flat_distance(final_flat, face.span);
  }
  return total;
}

double trivalent_monodromy_identity(double alpha, double beta, double a, double b,
                                    double c, double d, double lambda) {
  const double pi = std::acos(-1.0);
  auto in_domain = [&](double x) {
    return x > 0.0 && x < 2 * pi && std::abs(x - pi) > 1e-12;
  };
  if (!in_domain(alpha) || !in_domain(beta) || std::abs(alpha - beta) <= 1e-12)
    throw DegenerateInput("trivalent_monodromy_identity: angles out of domain");

  AffineFlat line;
  line.spanning_points = {make_vec({a, b, 0.0}), make_vec({c, d, 1.0})};
  auto edge = [&](double x, double y, double z) {
    AffineFlat e;
    e.spanning_points = {make_vec({0.0, 0.0, 0.0}), make_vec({x, y, z})};
    return e;
  };
  double term12 = lambda * std::sin(alpha - beta) * flat_distance(line, edge(1, 0, 0));
  double term13 =
      lambda * std::sin(beta) * flat_distance(line, edge(std::cos(alpha), std::sin(alpha), 0));
  double term14 =
      lambda * std::sin(alpha) * flat_distance(line, edge(std::cos(beta), std::sin(beta), 0));
  return term12 + term13 - term14;
}

FaceSystem face_system_from_framework(const Framework& fw, const Stress& s) {
  fw.validate();
  if (!is_self_stress(fw, s))
    throw NotEquilibrium("face_system_from_framework: stress fails equilibrium");
  FaceSystem fs;
  fs.ambient_dim = fw.dim;
  for (const auto& e : fw.edges) {
    FaceSystem::Face face;
    face.span.spanning_points = {fw.point(e.first), fw.point(e.second)};
    face.verts = {fw.point(e.first), fw.point(e.second)};
    auto it = s.values.find(e);
    double w = it == s.values.end() ? 0.0 : it->second;
    face.load = w * (fw.point(e.first) - fw.point(e.second)).norm();
    fs.faces.push_back(std::move(face));
  }
  return fs;
}

FaceSystem face_system_from_complex(const PolytopalComplex& c, const ForceLoad& w) {
  MFramework mf = associated_mframework(c);
  if (!is_equilibrium_forceload(mf, w))
    throw NotEquilibrium("face_system_from_complex: force-load fails equilibrium");
  FaceSystem fs;
  fs.ambient_dim = c.ambient_dim;
  for (std::size_t f = 0; f < c.polygons.size(); ++f) {
    const Flat& flat = mf.faces[f];
    FaceSystem::Face face;
    face.span.spanning_points = {flat.base, flat.base + flat.basis[0],
                                 flat.base + flat.basis[1]};
    face.verts = c.polygons[f];
    face.load = w.at(static_cast<int>(f));
    fs.faces.push_back(std::move(face));
  }
  return fs;
}

} // namespace liftings

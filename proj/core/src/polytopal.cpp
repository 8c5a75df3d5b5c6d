#include "liftings/polytopal.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

namespace liftings {

namespace {

double coords_scale(const std::vector<std::vector<Vec>>& polys) {
  double s = 1.0;
  for (const auto& poly : polys) {
    for (const Vec& p : poly) s = std::max(s, p.lpNorm<Eigen::Infinity>());
  }
  return s;
}

// Orthonormal in-order Gram-Schmidt; returns empty on rank deficiency.
std::vector<Vec> orthonormalize(const std::vector<Vec>& directions, double eps) {
  std::vector<Vec> basis;
  for (Vec v : directions) {
    for (const Vec& b : basis) v -= b.dot(v) * b;
    if (v.norm() <= eps) return {};
    basis.push_back(v.normalized());
  }
  return basis;
}

struct PolygonFrame {
  Flat flat;            // oriented 2-flat of the polygon
  Vec centroid;
  std::vector<Eigen::Vector2d> plane_coords; // vertices in the flat's basis
};

PolygonFrame polygon_frame(const std::vector<Vec>& poly, double eps) {
  if (poly.size() < 3) throw DegenerateInput("polygon: needs at least 3 vertices");
  const Vec& base = poly[0];
  const auto n = base.size();
  std::vector<Vec> dirs;
  for (std::size_t k = 1; k < poly.size(); ++k) {
    if (poly[k].size() != n) throw DimensionError("polygon: mixed ambient dimensions");
    dirs.push_back(poly[k] - base);
  }
  // first independent pair, in vertex order, fixes the orientation
  std::vector<Vec> basis;
  for (const Vec& d : dirs) {
    std::vector<Vec> trial = basis;
    trial.push_back(d);
    auto ortho = orthonormalize(trial, eps);
    if (!ortho.empty()) basis = std::move(trial);
    if (basis.size() == 2) break;
  }
  auto ortho = orthonormalize(basis, eps);
  if (ortho.size() != 2) throw DegenerateInput("polygon: degenerate (rank deficient)");

  PolygonFrame pf;
  pf.flat.base = base;
  pf.flat.basis = ortho;
  pf.centroid = Vec::Zero(n);
  for (const Vec& p : poly) pf.centroid += p;
  pf.centroid /= static_cast<double>(poly.size());

  for (const Vec& p : poly) {
    Vec rel = p - base;
    Eigen::Vector2d uv(ortho[0].dot(rel), ortho[1].dot(rel));
    Vec recon = base + uv.x() * ortho[0] + uv.y() * ortho[1];
    if ((p - recon).norm() > eps) throw DegenerateInput("polygon: not planar");
    pf.plane_coords.push_back(uv);
  }
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if ((poly[k] - poly[(k + 1) % poly.size()]).norm() <= eps)
      throw DegenerateInput("polygon: repeated consecutive vertices");
  }
  return pf;
}

double polygon_signed_area_2d(const std::vector<Eigen::Vector2d>& uv) {
  double a = 0.0;
  for (std::size_t k = 0; k < uv.size(); ++k) {
    const auto& p = uv[k];
    const auto& q = uv[(k + 1) % uv.size()];
    a += p.x() * q.y() - p.y() * q.x();
  }
  return 0.5 * a;
}

bool same_segment(const Vec& a1, const Vec& b1, const Vec& a2, const Vec& b2,
                  double eps) {
  return ((a1 - a2).norm() <= eps && (b1 - b2).norm() <= eps) ||
         ((a1 - b2).norm() <= eps && (b1 - a2).norm() <= eps);
}

// Clips the line p0 + t*d against a convex polygon given in 2D plane
// coordinates; returns false when the intersection is empty.
bool clip_line_convex(const std::vector<Eigen::Vector2d>& uv, Eigen::Vector2d p0,
                      Eigen::Vector2d d, double eps, double& t_lo, double& t_hi) {
  std::vector<Eigen::Vector2d> poly = uv;
  if (polygon_signed_area_2d(poly) < 0) std::reverse(poly.begin(), poly.end());
  t_lo = -std::numeric_limits<double>::infinity();
  t_hi = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < poly.size(); ++k) {
    Eigen::Vector2d v = poly[k];
    Eigen::Vector2d e = poly[(k + 1) % poly.size()] - v;
    // inside: cross(e, x - v) >= 0, linear in t: a + b t >= 0
    double a = e.x() * (p0.y() - v.y()) - e.y() * (p0.x() - v.x());
    double b = e.x() * d.y() - e.y() * d.x();
    if (std::abs(b) <= eps) {
      if (a < -eps) return false;
      continue;
    }
    double t = -a / b;
    if (b > 0) {
      t_lo = std::max(t_lo, t);
    } else {
      t_hi = std::min(t_hi, t);
    }
  }
  return t_lo < t_hi;
}

// Sutherland-Hodgman clip of convex subject polygon by convex clip
// polygon (both CCW); returns the overlap area.
double convex_overlap_area(std::vector<Eigen::Vector2d> subject,
                           std::vector<Eigen::Vector2d> clip) {
  if (polygon_signed_area_2d(subject) < 0) std::reverse(subject.begin(), subject.end());
  if (polygon_signed_area_2d(clip) < 0) std::reverse(clip.begin(), clip.end());
  std::vector<Eigen::Vector2d> out = subject;
  for (std::size_t k = 0; k < clip.size() && !out.empty(); ++k) {
    Eigen::Vector2d v = clip[k];
    Eigen::Vector2d e = clip[(k + 1) % clip.size()] - v;
    auto side = [&](const Eigen::Vector2d& x) {
      return e.x() * (x.y() - v.y()) - e.y() * (x.x() - v.x());
    };
    std::vector<Eigen::Vector2d> in = std::move(out);
    out.clear();
    for (std::size_t q = 0; q < in.size(); ++q) {
      Eigen::Vector2d cur = in[q], nxt = in[(q + 1) % in.size()];
      double sc = side(cur), sn = side(nxt);
      if (sc >= 0) out.push_back(cur);
      if ((sc >= 0) != (sn >= 0)) {
        double t = sc / (sc - sn);
        out.push_back(cur + t * (nxt - cur));
      }
    }
  }
  if (out.size() < 3) return 0.0;
  return std::abs(polygon_signed_area_2d(out));
}

} // namespace

Flat make_flat(Vec base, const std::vector<Vec>& directions) {
  if (!base.allFinite()) throw DegenerateInput("flat: non-finite base point");
  for (const Vec& d : directions) {
    if (d.size() != base.size()) throw DimensionError("flat: mixed ambient dimensions");
  }
  auto ortho = orthonormalize(directions, tolerances().eps_geom);
  if (ortho.size() != directions.size())
    throw DegenerateInput("flat: dependent spanning directions");
  Flat f;
  f.base = std::move(base);
  f.basis = std::move(ortho);
  return f;
}

void MFramework::validate() const {
  const double eps = tolerances().eps_geom;
  if (face_dim < 1 || ambient_dim <= face_dim)
    throw DimensionError("mframework: requires n > m >= 1");
  for (const auto& inc : incidences) {
    if (inc.first < 0 || inc.first >= static_cast<int>(edges.size()) ||
        inc.second < 0 || inc.second >= static_cast<int>(faces.size()))
      throw DegenerateInput("mframework: incidence index out of range");
    auto it = normals.find(inc);
    if (it == normals.end()) throw DegenerateInput("mframework: missing normal");
    const Vec& n = it->second;
    if (std::abs(n.norm() - 1.0) > eps)
      throw DegenerateInput("mframework: non-unit normal");
    const Flat& face = faces[static_cast<std::size_t>(inc.second)];
    Vec proj = Vec::Zero(n.size());
    for (const Vec& b : face.basis) proj += b.dot(n) * b;
    if ((proj - n).norm() > eps)
      throw DegenerateInput("mframework: normal outside its face plane");
    const Flat& edge = edges[static_cast<std::size_t>(inc.first)];
    for (const Vec& b : edge.basis) {
      if (std::abs(b.dot(n)) > eps)
        throw DegenerateInput("mframework: normal not orthogonal to its edge");
    }
  }
}

double ForceLoad::at(int face) const {
  auto it = values.find(face);
  return it == values.end() ? 0.0 : it->second;
}

std::vector<Facet> complex_facets(const PolytopalComplex& c) {
  const double eps = tolerances().eps_geom * coords_scale(c.polygons);
  std::vector<Facet> facets;
  for (std::size_t f = 0; f < c.polygons.size(); ++f) {
    const auto& poly = c.polygons[f];
    for (std::size_t k = 0; k < poly.size(); ++k) {
      const Vec& a = poly[k];
      const Vec& b = poly[(k + 1) % poly.size()];
      bool found = false;
      for (auto& fc : facets) {
        if (same_segment(a, b, fc.a, fc.b, eps)) {
          fc.polygons.push_back(static_cast<int>(f));
          found = true;
          break;
        }
      }
      if (!found) facets.push_back({a, b, {static_cast<int>(f)}});
    }
  }
  return facets;
}

void validate_complex(const PolytopalComplex& c) {
  if (c.face_dim != 2) throw DimensionError("validate_complex: face_dim must be 2");
  const double scale = coords_scale(c.polygons);
  const double eps = tolerances().eps_geom * scale;

  std::vector<PolygonFrame> frames;
  for (const auto& poly : c.polygons) frames.push_back(polygon_frame(poly, eps));

  // facet supporting lines must be pairwise distinct
  auto facets = complex_facets(c);
  for (std::size_t i = 0; i < facets.size(); ++i) {
    Vec di = (facets[i].b - facets[i].a).normalized();
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      Vec dj = (facets[j].b - facets[j].a).normalized();
      if (std::abs(std::abs(di.dot(dj)) - 1.0) > tolerances().eps_geom) continue;
      Vec rel = facets[j].a - facets[i].a;
      Vec off = rel - di.dot(rel) * di;
      if (off.norm() <= eps)
        throw DegenerateInput("validate_complex: two facets share a supporting line");
    }
  }

  if (c.ambient_dim != 3) {
    if (!c.caller_validated)
      throw DegenerateInput(
          "validate_complex: pairwise-intersection rule implemented for n = 3 only; "
          "set caller_validated for other ambient dimensions");
    return;
  }

  auto normal3 = [](const PolygonFrame& pf) {
    Eigen::Vector3d e1(pf.flat.basis[0][0], pf.flat.basis[0][1], pf.flat.basis[0][2]);
    Eigen::Vector3d e2(pf.flat.basis[1][0], pf.flat.basis[1][1], pf.flat.basis[1][2]);
    return e1.cross(e2);
  };

  for (std::size_t i = 0; i < c.polygons.size(); ++i) {
    Eigen::Vector3d ni = normal3(frames[i]);
    Eigen::Vector3d bi(frames[i].flat.base[0], frames[i].flat.base[1],
                       frames[i].flat.base[2]);
    for (std::size_t j = i + 1; j < c.polygons.size(); ++j) {
      Eigen::Vector3d nj = normal3(frames[j]);
      Eigen::Vector3d bj(frames[j].flat.base[0], frames[j].flat.base[1],
                         frames[j].flat.base[2]);
      Eigen::Vector3d dir = ni.cross(nj);
      if (dir.norm() <= tolerances().eps_geom) {
        // parallel planes
        if (std::abs(ni.dot(bj - bi)) > eps) continue; // distinct planes: disjoint
        // coplanar: overlap of interiors is forbidden
        std::vector<Eigen::Vector2d> uvj;
        for (const Vec& p : c.polygons[j]) {
          Vec rel = p - frames[i].flat.base;
          uvj.emplace_back(frames[i].flat.basis[0].dot(rel),
                           frames[i].flat.basis[1].dot(rel));
        }
        if (convex_overlap_area(frames[i].plane_coords, uvj) > eps * scale)
          throw DegenerateInput("validate_complex: coplanar polygons overlap");
        continue;
      }
      dir.normalize();
      // point on the intersection line of the two planes
      Eigen::Matrix<double, 2, 3> A;
      A.row(0) = ni.transpose();
      A.row(1) = nj.transpose();
      Eigen::Vector2d rhs(ni.dot(bi), nj.dot(bj));
      Eigen::Vector3d p0 =
          A.transpose() * (A * A.transpose()).inverse() * rhs;

      auto clip_poly = [&](std::size_t idx, double& lo, double& hi) {
        const PolygonFrame& pf = frames[idx];
        Vec relp(3);
        relp << p0.x() - pf.flat.base[0], p0.y() - pf.flat.base[1],
            p0.z() - pf.flat.base[2];
        Eigen::Vector2d q0(pf.flat.basis[0].dot(relp), pf.flat.basis[1].dot(relp));
        Vec dv(3);
        dv << dir.x(), dir.y(), dir.z();
        Eigen::Vector2d q1(pf.flat.basis[0].dot(dv), pf.flat.basis[1].dot(dv));
        return clip_line_convex(pf.plane_coords, q0, q1, tolerances().eps_geom, lo, hi);
      };
      double lo_i, hi_i, lo_j, hi_j;
      if (!clip_poly(i, lo_i, hi_i) || !clip_poly(j, lo_j, hi_j)) continue;
      double lo = std::max(lo_i, lo_j), hi = std::min(hi_i, hi_j);
      if (hi - lo <= eps) continue; // point contact or empty
      Vec e0(3), e1(3);
      Eigen::Vector3d x0 = p0 + lo * dir, x1 = p0 + hi * dir;
      e0 << x0.x(), x0.y(), x0.z();
      e1 << x1.x(), x1.y(), x1.z();
      auto has_matching_edge = [&](std::size_t idx) {
        const auto& poly = c.polygons[idx];
        for (std::size_t k = 0; k < poly.size(); ++k) {
          if (same_segment(e0, e1, poly[k], poly[(k + 1) % poly.size()], eps))
            return true;
        }
        return false;
      };
      if (!has_matching_edge(i) || !has_matching_edge(j))
        throw DegenerateInput(
            "validate_complex: polygon intersection is not a shared facet");
    }
  }
}

MFramework associated_mframework(const PolytopalComplex& c) {
  if (c.face_dim != 2)
    throw DimensionError("associated_mframework: face_dim must be 2");
  const double scale = coords_scale(c.polygons);
  const double eps = tolerances().eps_geom * scale;

  MFramework mf;
  mf.ambient_dim = c.ambient_dim;
  mf.face_dim = 2;

  std::vector<PolygonFrame> frames;
  for (const auto& poly : c.polygons) frames.push_back(polygon_frame(poly, eps));
  for (const auto& pf : frames) mf.faces.push_back(pf.flat);

  auto facets = complex_facets(c);
  for (const auto& fc : facets) {
    Vec d = fc.b - fc.a;
    mf.edges.push_back(make_flat(fc.a, {d}));
    mf.edge_forms.push_back(face_form(mf.edges.back()));
  }

  for (std::size_t e = 0; e < facets.size(); ++e) {
    Vec u = (facets[e].b - facets[e].a).normalized();
    Vec mid = 0.5 * (facets[e].a + facets[e].b);
    for (int f : facets[e].polygons) {
      const PolygonFrame& pf = frames[static_cast<std::size_t>(f)];
      Vec w = pf.centroid - mid;
      Vec n = w - u.dot(w) * u;
      // keep only the in-plane component
      Vec proj = Vec::Zero(n.size());
      for (const Vec& b : pf.flat.basis) proj += b.dot(n) * b;
      if (proj.norm() <= eps)
        throw DegenerateInput("associated_mframework: degenerate inward normal");
      auto key = std::pair{static_cast<int>(e), f};
      mf.incidences.push_back(key);
      mf.normals[key] = proj.normalized();
    }
  }
  mf.validate();
  return mf;
}

std::map<int, Vec> forceload_residuals(const MFramework& mf, const ForceLoad& w) {
  std::map<int, Vec> res;
  for (std::size_t e = 0; e < mf.edges.size(); ++e) {
    res[static_cast<int>(e)] = Vec::Zero(mf.ambient_dim);
  }
  for (const auto& inc : mf.incidences) {
    res[inc.first] += w.at(inc.second) * mf.normals.at(inc);
  }
  return res;
}

double max_forceload_residual(const MFramework& mf, const ForceLoad& w) {
  double m = 0.0;
  for (const auto& [e, r] : forceload_residuals(mf, w)) m = std::max(m, r.norm());
  return m;
}

bool is_equilibrium_forceload(const MFramework& mf, const ForceLoad& w) {
  double wmax = 1.0;
  for (const auto& [f, v] : w.values) wmax = std::max(wmax, std::abs(v));
  return max_forceload_residual(mf, w) <= tolerances().eps_form * wmax;
}

std::vector<ForceLoad> forceload_basis(const MFramework& mf) {
  mf.validate();
  const int n = mf.ambient_dim;
  const auto nf = static_cast<Eigen::Index>(mf.faces.size());
  const auto ne = static_cast<Eigen::Index>(mf.edges.size());
  if (nf == 0) return {};

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n * ne, nf);
  for (const auto& inc : mf.incidences) {
    A.block(n * inc.first, inc.second, n, 1) += mf.normals.at(inc);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  double cutoff = tolerances().eps_rank * std::max(smax, 1.0);
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) > cutoff) ++rank;
  }
  std::vector<ForceLoad> basis;
  for (Eigen::Index c = rank; c < nf; ++c) {
    ForceLoad w;
    for (Eigen::Index r = 0; r < nf; ++r) {
      w.values[static_cast<int>(r)] = svd.matrixV()(r, c);
    }
    basis.push_back(std::move(w));
  }
  return basis;
}

MForm face_form(const Flat& face) {
  const double eps = tolerances().eps_geom;
  for (std::size_t i = 0; i < face.basis.size(); ++i) {
    for (std::size_t j = i; j < face.basis.size(); ++j) {
      double expected = i == j ? 1.0 : 0.0;
      if (std::abs(face.basis[i].dot(face.basis[j]) - expected) > eps)
        throw DegenerateInput("face_form: basis not orthonormal");
    }
  }
  MForm out = MForm::basis(face.ambient_dim(), {}, 1.0); // empty wedge = 1
  for (const Vec& b : face.basis) out = wedge(out, MForm::covector(b));
  return out;
}

MForm lifting_of_word_m(const PolytopalComplex& c, const ForceLoad& w,
                        const std::vector<std::pair<int, int>>& word) {
  MFramework mf = associated_mframework(c);
  if (!is_equilibrium_forceload(mf, w))
    throw NotEquilibrium("lifting_of_word_m: force-load fails equilibrium precheck");
  MForm out(mf.ambient_dim, mf.face_dim);
  for (const auto& [f, sign] : word) {
    if (f < 0 || f >= static_cast<int>(mf.faces.size()))
      throw DegenerateInput("lifting_of_word_m: unknown face");
    if (sign != 1 && sign != -1)
      throw DegenerateInput("lifting_of_word_m: sign must be +1 or -1");
    out += face_form(mf.faces[static_cast<std::size_t>(f)]) * (sign * w.at(f));
  }
  return out;
}

MForm facet_monodromy(const MFramework& mf, const ForceLoad& w, int edge) {
  if (edge < 0 || edge >= static_cast<int>(mf.edges.size()))
    throw DegenerateInput("facet_monodromy: unknown edge");
  const MForm& alpha_e = mf.edge_forms[static_cast<std::size_t>(edge)];
  MForm out(mf.ambient_dim, mf.face_dim);
  for (const auto& inc : mf.incidences) {
    if (inc.first != edge) continue;
    out += wedge(alpha_e, MForm::covector(mf.normals.at(inc))) * w.at(inc.second);
  }
  return out;
}

std::map<int, double> convert_stress_forceload(const PolytopalComplex& c,
                                               const std::map<int, double>& values,
                                               bool to_forceload) {
  const double eps = tolerances().eps_geom * coords_scale(c.polygons);
  std::map<int, double> out;
  for (const auto& [f, v] : values) {
    if (f < 0 || f >= static_cast<int>(c.polygons.size()))
      throw DegenerateInput("convert_stress_forceload: unknown face");
    PolygonFrame pf = polygon_frame(c.polygons[static_cast<std::size_t>(f)], eps);
    double vol = std::abs(polygon_signed_area_2d(pf.plane_coords));
    if (to_forceload) {
      out[f] = vol * v;
    } else {
      if (vol <= eps * eps)
        throw DegenerateInput("convert_stress_forceload: zero-volume face");
      out[f] = v / vol;
    }
  }
  return out;
}

PolytopalComplex parallel_prism_complex(const Mesh& mesh, double lambda) {
  if (mesh.vertices.empty() || mesh.faces.empty())
    throw DegenerateInput("parallel_prism_complex: empty mesh");
  const auto n = mesh.vertices.front().size();
  double scale = 1.0;
  for (const Vec& p : mesh.vertices) {
    if (p.size() != n)
      throw DimensionError("parallel_prism_complex: mixed ambient dimensions");
    scale = std::max(scale, p.lpNorm<Eigen::Infinity>());
  }
  const double eps = tolerances().eps_geom * scale;
  if (std::abs(lambda - 1.0) <= tolerances().eps_geom || lambda <= 0.0)
    throw DegenerateInput(
        "parallel_prism_complex: scale factor must be positive and differ from 1");

  PolytopalComplex out;
  out.ambient_dim = static_cast<int>(n);
  out.face_dim = 2;

  std::vector<EdgeKey> mesh_edges;
  for (const auto& loop : mesh.faces) {
    if (loop.size() < 3)
      throw DegenerateInput("parallel_prism_complex: face with fewer than 3 vertices");
    std::vector<Vec> poly;
    for (int idx : loop) {
      if (idx < 0 || idx >= static_cast<int>(mesh.vertices.size()))
        throw DegenerateInput("parallel_prism_complex: face index out of range");
      poly.push_back(mesh.vertices[static_cast<std::size_t>(idx)]);
    }
    PolygonFrame pf = polygon_frame(poly, eps); // throws on non-planar faces
    // a face plane through the origin coincides with its scaled copy
    Vec rel = -pf.flat.base;
    Vec inplane = Vec::Zero(n);
    for (const Vec& b : pf.flat.basis) inplane += b.dot(rel) * b;
    if ((rel - inplane).norm() <= eps)
      throw DegenerateInput("parallel_prism_complex: face plane through the origin");

    out.polygons.push_back(poly);
    for (std::size_t k = 0; k < loop.size(); ++k) {
      EdgeKey e = make_edge(loop[k], loop[(k + 1) % loop.size()]);
      if (std::find(mesh_edges.begin(), mesh_edges.end(), e) == mesh_edges.end())
        mesh_edges.push_back(e);
    }
  }
  const std::size_t nf = out.polygons.size();
  for (std::size_t f = 0; f < nf; ++f) {
    std::vector<Vec> scaled;
    for (const Vec& p : out.polygons[f]) scaled.push_back(lambda * p);
    out.polygons.push_back(std::move(scaled));
  }
  for (const auto& [i, j] : mesh_edges) {
    const Vec& a = mesh.vertices[static_cast<std::size_t>(i)];
    const Vec& b = mesh.vertices[static_cast<std::size_t>(j)];
    if (gram_volume(std::vector<Vec>{a, b}) <= eps * scale)
      throw DegenerateInput("parallel_prism_complex: edge collinear with the origin");
    out.polygons.push_back({a, b, lambda * b, lambda * a});
  }
  return out;
}

MFramework mframework_from_framework(const Framework& fw) {
  fw.validate();
  MFramework mf;
  mf.ambient_dim = fw.dim;
  mf.face_dim = 1;

  std::map<int, int> edge_index_of_vertex;
  for (const auto& [id, p] : fw.vertices) {
    edge_index_of_vertex[id] = static_cast<int>(mf.edges.size());
    Flat e;
    e.base = p;
    mf.edges.push_back(std::move(e));
    mf.edge_forms.push_back(MForm::basis(fw.dim, {}, 1.0));
  }
  for (std::size_t k = 0; k < fw.edges.size(); ++k) {
    const auto& [i, j] = fw.edges[k];
    Vec d = fw.point(i) - fw.point(j);
    mf.faces.push_back(make_flat(fw.point(j), {d}));
    int f = static_cast<int>(k);
    auto key_i = std::pair{edge_index_of_vertex[i], f};
    auto key_j = std::pair{edge_index_of_vertex[j], f};
    mf.incidences.push_back(key_i);
    mf.incidences.push_back(key_j);
    mf.normals[key_i] = (fw.point(j) - fw.point(i)).normalized();
    mf.normals[key_j] = (fw.point(i) - fw.point(j)).normalized();
  }
  mf.validate();
  return mf;
}

ForceLoad forceload_from_stress(const Framework& fw, const Stress& s) {
  ForceLoad w;
  for (std::size_t k = 0; k < fw.edges.size(); ++k) {
    const auto& e = fw.edges[k];
    auto it = s.values.find(e);
    double omega = it == s.values.end() ? 0.0 : it->second;
    w.values[static_cast<int>(k)] =
        omega * (fw.point(e.first) - fw.point(e.second)).norm();
  }
  return w;
}

} // namespace liftings

#include "liftings/lifting2d.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace liftings {

namespace {

double stress_magnitude(const Stress& s) {
  double m = 0.0;
  for (const auto& [e, w] : s.values) m = std::max(m, std::abs(w));
  return m;
}

// Jump across an adjacency, from chamber_a to chamber_b:
// sign(det(n, p_i - p_j)) * omega_ij * d(p_i - p_j).
MForm adjacency_jump(const Framework& fw, const Stress& s, const Adjacency& adj) {
  Eigen::Vector2d v = (fw.point(adj.edge_ref.first) - fw.point(adj.edge_ref.second)).head<2>();
  double det = adj.normal.x() * v.y() - adj.normal.y() * v.x();
  if (std::abs(det) <= tolerances().eps_geom * v.norm())
    throw ConsistencyError("lifting: adjacency normal parallel to its edge");
  double sign = det > 0 ? 1.0 : -1.0;
  auto it = s.values.find(adj.edge_ref);
  double w = it == s.values.end() ? 0.0 : it->second;
  Vec d(2);
  d << v.x(), v.y();
  return MForm::covector(d) * (sign * w);
}

} // namespace

const MForm& DifferentialLifting2D::form(int chamber_id) const {
  auto it = forms.find(chamber_id);
  if (it == forms.end()) throw DegenerateInput("lifting: unknown chamber id");
  return it->second;
}

double PolyhedralLifting::value(const Eigen::Vector2d& x) const {
  int c = locate_chamber(complex, x);
  const Piece& pc = pieces.at(c);
  return pc.gradient.dot(x) + pc.offset;
}

DifferentialLifting2D differential_lifting_2d(const Framework& fw, const Stress& s) {
  if (fw.dim != 2) throw DimensionError("differential_lifting_2d: requires dim = 2");
  if (!is_self_stress(fw, s))
    throw NotSelfStress("differential_lifting_2d: stress fails equilibrium precheck");

  DifferentialLifting2D dl;
  dl.complex = build_chamber_complex(fw);
  const ChamberComplex& cc = dl.complex;

  std::vector<std::vector<int>> incident(cc.chambers.size());
  for (std::size_t k = 0; k < cc.adjacencies.size(); ++k) {
    incident[static_cast<std::size_t>(cc.adjacencies[k].chamber_a)].push_back(static_cast<int>(k));
    incident[static_cast<std::size_t>(cc.adjacencies[k].chamber_b)].push_back(static_cast<int>(k));
  }

  const double tol = tolerances().eps_form *
                     std::max(1.0, stress_magnitude(s) * fw.scale());

  dl.forms.emplace(cc.unbounded_id, MForm(2, 1));
  std::deque<int> queue{cc.unbounded_id};
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int k : incident[static_cast<std::size_t>(c)]) {
      const Adjacency& adj = cc.adjacencies[static_cast<std::size_t>(k)];
      MForm jump = adjacency_jump(fw, s, adj);
      int other = adj.chamber_a == c ? adj.chamber_b : adj.chamber_a;
      MForm expected = adj.chamber_a == c ? dl.forms.at(c) + jump
                                          : dl.forms.at(c) - jump;
      auto it = dl.forms.find(other);
      if (it == dl.forms.end()) {
        dl.forms.emplace(other, std::move(expected));
        queue.push_back(other);
      } else if (it->second.approx_distance(expected) > tol) {
        throw ConsistencyError(
            "differential_lifting_2d: adjacency re-check violates the jump rule");
      }
    }
  }
  if (dl.forms.size() != cc.chambers.size())
    throw ConsistencyError("differential_lifting_2d: chamber adjacency graph disconnected");
  return dl;
}

Stress recover_stress(const Framework& fw, const DifferentialLifting2D& dl) {
  Stress out;
  for (const auto& e : fw.edges) out.values[e] = 0.0;

  const double tol = tolerances().eps_form * std::max(1.0, fw.scale());
  std::set<EdgeKey> read;
  for (const Adjacency& adj : dl.complex.adjacencies) {
    if (adj.chamber_a == adj.chamber_b) continue;
    Eigen::Vector2d v =
        (fw.point(adj.edge_ref.first) - fw.point(adj.edge_ref.second)).head<2>();
    double det = adj.normal.x() * v.y() - adj.normal.y() * v.x();
    double sign = det > 0 ? 1.0 : -1.0;
    Vec diff = (dl.form(adj.chamber_b) - dl.form(adj.chamber_a)).as_covector();
    double w = sign * diff.dot(Vec(v)) / v.squaredNorm();
    Vec residual = diff - sign * w * Vec(v);
    if (residual.lpNorm<Eigen::Infinity>() > tol * std::max(1.0, std::abs(w)))
      throw ConsistencyError("recover_stress: chamber difference not parallel to its edge");
    auto [it, first] = read.emplace(adj.edge_ref);
    if (first) {
      out.values[adj.edge_ref] = w;
    } else if (std::abs(out.values[adj.edge_ref] - w) >
               tol * std::max(1.0, std::abs(w))) {
      throw ConsistencyError("recover_stress: inconsistent readings along one edge");
    }
  }
  return out;
}

PolyhedralLifting integrate_polyhedral_lifting(const Framework& fw, const Stress& s) {
  if (fw.dim != 2) throw DimensionError("integrate_polyhedral_lifting: requires dim = 2");
  if (has_interior_crossings(fw))
    throw NotPlanar("integrate_polyhedral_lifting: framework has interior crossings");

  DifferentialLifting2D dl = differential_lifting_2d(fw, s);
  PolyhedralLifting pl;
  pl.complex = dl.complex;
  const ChamberComplex& cc = pl.complex;

  for (const auto& [c, alpha] : dl.forms) {
    Vec g = hodge_star(alpha).as_covector();
    PolyhedralLifting::Piece piece;
    piece.gradient = Eigen::Vector2d(g[0], g[1]);
    pl.pieces[c] = piece;
  }

  const double tol = tolerances().eps_form *
                     std::max(1.0, stress_magnitude(s) * fw.scale() * fw.scale());

  std::vector<std::vector<int>> incident(cc.chambers.size());
  for (std::size_t k = 0; k < cc.adjacencies.size(); ++k) {
    incident[static_cast<std::size_t>(cc.adjacencies[k].chamber_a)].push_back(static_cast<int>(k));
    incident[static_cast<std::size_t>(cc.adjacencies[k].chamber_b)].push_back(static_cast<int>(k));
  }

  std::set<int> placed{cc.unbounded_id};
  std::deque<int> queue{cc.unbounded_id};
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int k : incident[static_cast<std::size_t>(c)]) {
      const Adjacency& adj = cc.adjacencies[static_cast<std::size_t>(k)];
      int other = adj.chamber_a == c ? adj.chamber_b : adj.chamber_a;
      Eigen::Vector2d x1 = adj.seg_a + (adj.seg_b - adj.seg_a) / 3.0;
      Eigen::Vector2d x2 = adj.seg_a + (adj.seg_b - adj.seg_a) * (2.0 / 3.0);
      PolyhedralLifting::Piece& pc = pl.pieces.at(c);
      PolyhedralLifting::Piece& po = pl.pieces.at(other);
      if (!placed.count(other)) {
        po.offset = pc.gradient.dot(x1) + pc.offset - po.gradient.dot(x1);
        placed.insert(other);
        queue.push_back(other);
      } else {
        double m1 = (pc.gradient.dot(x1) + pc.offset) - (po.gradient.dot(x1) + po.offset);
        if (std::abs(m1) > tol)
          throw ContinuityError("integrate_polyhedral_lifting: closure failure");
      }
      double m2 = (pc.gradient.dot(x2) + pc.offset) - (po.gradient.dot(x2) + po.offset);
      if (std::abs(m2) > tol)
        throw ContinuityError("integrate_polyhedral_lifting: discontinuity at check point");
    }
  }

  for (const auto& [c, piece] : pl.pieces) {
    pl.normals[c] = Eigen::Vector3d(piece.gradient.x(), piece.gradient.y(), -1.0);
  }
  return pl;
}

Framework reciprocal_diagram(const Framework& fw, const Stress& s, bool perpendicular) {
  if (fw.dim != 2) throw DimensionError("reciprocal_diagram: requires dim = 2");
  if (has_interior_crossings(fw))
    throw NotPlanar("reciprocal_diagram: framework has interior crossings");

  DifferentialLifting2D dl = differential_lifting_2d(fw, s);
  const ChamberComplex& cc = dl.complex;

  const double tol = tolerances().eps_form * std::max(1.0, stress_magnitude(s));
  for (const Adjacency& adj : cc.adjacencies) {
    if (adj.chamber_a != adj.chamber_b) continue;
    auto it = s.values.find(adj.edge_ref);
    if (it != s.values.end() && std::abs(it->second) > tol)
      throw DegenerateInput("reciprocal_diagram: bridge edge with nonzero stress");
  }

  Framework dual;
  dual.dim = 2;
  for (const auto& [c, alpha] : dl.forms) {
    Vec coeff = perpendicular ? hodge_star(alpha).as_covector() : alpha.as_covector();
    dual.add_vertex(c, coeff);
  }
  for (auto a = dual.vertices.begin(); a != dual.vertices.end(); ++a) {
    auto b = a;
    for (++b; b != dual.vertices.end(); ++b) {
      if ((a->second - b->second).norm() <= tolerances().eps_geom * dual.scale())
        throw DegenerateDual("reciprocal_diagram: coincident dual vertices");
    }
  }
  for (const Adjacency& adj : cc.adjacencies) {
    if (adj.chamber_a == adj.chamber_b) continue;
    if (!dual.has_edge(make_edge(adj.chamber_a, adj.chamber_b)))
      dual.add_edge(adj.chamber_a, adj.chamber_b);
  }
  return dual;
}

} // namespace liftings

#include "liftings/arrangement2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>

namespace liftings {

namespace {

double cross2(const Eigen::Vector2d& u, const Eigen::Vector2d& v) {
  return u.x() * v.y() - u.y() * v.x();
}

struct SubEdge {
  int n1, n2;       // node indices
  int orig;         // original framework edge index
};

struct HalfEdgeMesh {
  std::vector<Eigen::Vector2d> nodes;
  std::vector<SubEdge> subedges;
  // half-edge 2k goes n1->n2 of subedge k, 2k+1 goes n2->n1
  std::vector<int> next;

  int origin(int he) const {
    const SubEdge& s = subedges[he / 2];
    return (he % 2 == 0) ? s.n1 : s.n2;
  }
  int target(int he) const {
    const SubEdge& s = subedges[he / 2];
    return (he % 2 == 0) ? s.n2 : s.n1;
  }
};

double polygon_area(const BoundaryCycle& cycle) {
  double a = 0.0;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const auto& p = cycle[k];
    const auto& q = cycle[(k + 1) % cycle.size()];
    a += cross2(p, q);
  }
  return 0.5 * a;
}

int winding_number(const BoundaryCycle& cycle, const Eigen::Vector2d& pt) {
  int w = 0;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const auto& p = cycle[k];
    const auto& q = cycle[(k + 1) % cycle.size()];
    if (p.y() <= pt.y()) {
      if (q.y() > pt.y() && cross2(q - p, pt - p) > 0) ++w;
    } else {
      if (q.y() <= pt.y() && cross2(q - p, pt - p) < 0) --w;
    }
  }
  return w;
}

double point_segment_distance(const Eigen::Vector2d& p, const Eigen::Vector2d& a,
                              const Eigen::Vector2d& b) {
  Eigen::Vector2d d = b - a;
  double len2 = d.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  double t = std::clamp((p - a).dot(d) / len2, 0.0, 1.0);
  return (p - (a + t * d)).norm();
}

} // namespace

ChamberComplex build_chamber_complex(const Framework& fw) {
  if (fw.dim != 2) throw DimensionError("build_chamber_complex: requires dim = 2");
  fw.validate();
  if (fw.edges.empty()) throw DegenerateInput("build_chamber_complex: no edges");
  const double eps = tolerances().eps_geom * fw.scale();

  const std::size_t ne = fw.edges.size();
  std::vector<Eigen::Vector2d> sa(ne), sb(ne);
  for (std::size_t k = 0; k < ne; ++k) {
    sa[k] = fw.point(fw.edges[k].first).head<2>();
    sb[k] = fw.point(fw.edges[k].second).head<2>();
  }

  HalfEdgeMesh mesh;
  auto add_node = [&](const Eigen::Vector2d& p) -> int {
    for (std::size_t k = 0; k < mesh.nodes.size(); ++k) {
      if ((mesh.nodes[k] - p).norm() <= eps) return static_cast<int>(k);
    }
    mesh.nodes.push_back(p);
    return static_cast<int>(mesh.nodes.size()) - 1;
  };

  for (std::size_t k = 0; k < ne; ++k) {
    add_node(sa[k]);
    add_node(sb[k]);
  }
  // pairwise intersections (interior or endpoint-on-interior) become nodes
  for (std::size_t a = 0; a < ne; ++a) {
    Eigen::Vector2d ra = sb[a] - sa[a];
    for (std::size_t b = a + 1; b < ne; ++b) {
      Eigen::Vector2d rb = sb[b] - sa[b];
      double denom = cross2(ra, rb);
      if (std::abs(denom) <= eps * ra.norm() * rb.norm()) {
        // parallel; overlapping collinear segments are rejected below when
        // sub-edges collide
        continue;
      }
      Eigen::Vector2d d = sa[b] - sa[a];
      double t = cross2(d, rb) / denom;
      double u = cross2(d, ra) / denom;
      if (t * ra.norm() > -eps && (1 - t) * ra.norm() > -eps &&
          u * rb.norm() > -eps && (1 - u) * rb.norm() > -eps) {
        add_node(sa[a] + t * ra);
      }
    }
  }

  // split each original segment at every node lying on it
  std::map<std::pair<int, int>, int> seen_subedge;
  for (std::size_t k = 0; k < ne; ++k) {
    Eigen::Vector2d dir = sb[k] - sa[k];
    double len = dir.norm();
    std::vector<std::pair<double, int>> stops;
    for (std::size_t nidx = 0; nidx < mesh.nodes.size(); ++nidx) {
      const Eigen::Vector2d& p = mesh.nodes[nidx];
      double t = (p - sa[k]).dot(dir) / (len * len);
      if (t * len < -eps || (t - 1) * len > eps) continue;
      if (point_segment_distance(p, sa[k], sb[k]) > eps) continue;
      stops.emplace_back(t, static_cast<int>(nidx));
    }
    std::sort(stops.begin(), stops.end());
    for (std::size_t q = 0; q + 1 < stops.size(); ++q) {
      int u = stops[q].second, v = stops[q + 1].second;
      if (u == v) continue;
      auto key = std::minmax(u, v);
      auto [it, inserted] = seen_subedge.emplace(std::pair{key.first, key.second},
                                                 static_cast<int>(mesh.subedges.size()));
      if (!inserted)
        throw DegenerateInput("build_chamber_complex: overlapping collinear segments");
      mesh.subedges.push_back({u, v, static_cast<int>(k)});
    }
  }

  // angular order of outgoing half-edges around each node
  const int nhe = static_cast<int>(mesh.subedges.size()) * 2;
  std::vector<std::vector<std::pair<double, int>>> out(mesh.nodes.size());
  for (int he = 0; he < nhe; ++he) {
    Eigen::Vector2d d = mesh.nodes[mesh.target(he)] - mesh.nodes[mesh.origin(he)];
    out[mesh.origin(he)].emplace_back(std::atan2(d.y(), d.x()), he);
  }
  for (auto& lst : out) std::sort(lst.begin(), lst.end());

  mesh.next.assign(nhe, -1);
  for (int he = 0; he < nhe; ++he) {
    int twin = he ^ 1;
    const auto& lst = out[mesh.origin(twin)];
    int pos = -1;
    for (std::size_t q = 0; q < lst.size(); ++q) {
      if (lst[q].second == twin) pos = static_cast<int>(q);
    }
    int prev = (pos + static_cast<int>(lst.size()) - 1) % static_cast<int>(lst.size());
    mesh.next[he] = lst[prev].second;
  }

  // extract face cycles
  std::vector<int> face_of(nhe, -1);
  std::vector<BoundaryCycle> cycles;
  std::vector<std::vector<int>> cycle_hes;
  for (int he = 0; he < nhe; ++he) {
    if (face_of[he] != -1) continue;
    int cid = static_cast<int>(cycles.size());
    BoundaryCycle cyc;
    std::vector<int> hes;
    int cur = he;
    do {
      face_of[cur] = cid;
      cyc.push_back(mesh.nodes[mesh.origin(cur)]);
      hes.push_back(cur);
      cur = mesh.next[cur];
    } while (cur != he);
    cycles.push_back(std::move(cyc));
    cycle_hes.push_back(std::move(hes));
  }

  // positive cycles bound chambers; non-positive cycles are hole boundaries
  std::vector<double> areas(cycles.size());
  std::vector<int> chamber_of_cycle(cycles.size(), -1);
  ChamberComplex cc;
  for (std::size_t c = 0; c < cycles.size(); ++c) areas[c] = polygon_area(cycles[c]);

  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (areas[c] > eps * eps) {
      Chamber ch;
      ch.id = static_cast<int>(cc.chambers.size());
      ch.bounded = true;
      ch.cycles.push_back(cycles[c]);
      chamber_of_cycle[c] = ch.id;
      cc.chambers.push_back(std::move(ch));
    }
  }
  Chamber unbounded;
  unbounded.id = static_cast<int>(cc.chambers.size());
  unbounded.bounded = false;
  cc.unbounded_id = unbounded.id;
  cc.chambers.push_back(std::move(unbounded));

  // attach each hole cycle to its surrounding chamber
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (areas[c] > eps * eps) continue;
    // probe point just left of the leftmost cycle node
    Eigen::Vector2d lm = cycles[c][0];
    for (const auto& p : cycles[c]) {
      if (p.x() < lm.x()) lm = p;
    }
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& se : mesh.subedges) {
      const Eigen::Vector2d &p = mesh.nodes[se.n1], &q = mesh.nodes[se.n2];
      // horizontal ray to the left from lm
      if ((p.y() - lm.y()) * (q.y() - lm.y()) > 0) continue;
      double dy = q.y() - p.y();
      if (std::abs(dy) <= eps) continue;
      double t = (lm.y() - p.y()) / dy;
      double x = p.x() + t * (q.x() - p.x());
      if (x < lm.x() - eps) nearest = std::min(nearest, lm.x() - x);
    }
    Eigen::Vector2d probe = lm;
    probe.x() -= std::isfinite(nearest) ? nearest / 2 : 1.0;
    int best = cc.unbounded_id;
    double best_area = std::numeric_limits<double>::infinity();
    for (std::size_t d = 0; d < cycles.size(); ++d) {
      if (areas[d] <= eps * eps) continue;
      if (winding_number(cycles[d], probe) != 0 && areas[d] < best_area) {
        best = chamber_of_cycle[d];
        best_area = areas[d];
      }
    }
    chamber_of_cycle[c] = best;
    cc.chambers[static_cast<std::size_t>(best)].cycles.push_back(cycles[c]);
  }

  // one adjacency per sub-segment
  for (std::size_t k = 0; k < mesh.subedges.size(); ++k) {
    const SubEdge& se = mesh.subedges[k];
    int he = static_cast<int>(k) * 2;
    Adjacency adj;
    adj.chamber_a = chamber_of_cycle[static_cast<std::size_t>(face_of[he])];
    adj.chamber_b = chamber_of_cycle[static_cast<std::size_t>(face_of[he ^ 1])];
    adj.edge_ref = fw.edges[static_cast<std::size_t>(se.orig)];
    adj.seg_a = mesh.nodes[se.n1];
    adj.seg_b = mesh.nodes[se.n2];
    Eigen::Vector2d d = adj.seg_b - adj.seg_a;
    // chamber_a lies left of n1->n2, so the normal toward chamber_b points right
    adj.normal = Eigen::Vector2d(d.y(), -d.x()).normalized();
    cc.adjacencies.push_back(std::move(adj));
  }

  cc.node_count = static_cast<int>(mesh.nodes.size());
  cc.subedge_count = static_cast<int>(mesh.subedges.size());
  return cc;
}

int locate_chamber(const ChamberComplex& cc, const Eigen::Vector2d& point) {
  const double eps = tolerances().eps_geom;
  for (const auto& adj : cc.adjacencies) {
    if (point_segment_distance(point, adj.seg_a, adj.seg_b) <= eps)
      throw DegenerateInput("locate_chamber: point lies on the framework");
  }
  for (const auto& ch : cc.chambers) {
    if (!ch.bounded) continue;
    if (winding_number(ch.cycles[0], point) == 0) continue;
    bool in_hole = false;
    for (std::size_t k = 1; k < ch.cycles.size(); ++k) {
      if (winding_number(ch.cycles[k], point) != 0) in_hole = true;
    }
    if (!in_hole) return ch.id;
  }
  return cc.unbounded_id;
}

int locate_chamber(const ChamberComplex& cc, const Vec& point) {
  if (point.size() != 2) throw DimensionError("locate_chamber: point must be 2D");
  return locate_chamber(cc, Eigen::Vector2d(point[0], point[1]));
}

} // namespace liftings

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "liftings/forms.hpp"

namespace liftings {

/// Unordered edge between two vertex ids, normalized to first < second.
using EdgeKey = std::pair<int, int>;

inline EdgeKey make_edge(int i, int j) {
  if (i == j) throw DegenerateInput("edge: loops are not allowed");
  return i < j ? EdgeKey{i, j} : EdgeKey{j, i};
}

/// Graph framework in R^n: a simple graph with an injective placement.
struct Framework {
  int dim = 2;
  std::map<int, Vec> vertices;
  std::vector<EdgeKey> edges; ///< sorted, unique, i < j

  void add_vertex(int id, Vec p);
  void add_edge(int i, int j);

  const Vec& point(int id) const;
  bool has_edge(EdgeKey e) const;

  /// Largest coordinate magnitude, used to scale residual tolerances.
  double scale() const;

  /// Throws on loops, duplicate edges, missing endpoints, or coincident
  /// vertex placements (within eps_geom).
  void validate() const;
};

/// Edge scalars omega_ij, symmetric by unordered keys.
struct Stress {
  std::map<EdgeKey, double> values;

  double at(EdgeKey e) const;
  double at(int i, int j) const { return at(make_edge(i, j)); }
  void set(int i, int j, double w) { values[make_edge(i, j)] = w; }

  Stress& operator+=(const Stress& o);
  Stress& operator*=(double s);
  friend Stress operator+(Stress a, const Stress& b) { return a += b; }
  friend Stress operator*(Stress a, double s) { return a *= s; }
};

/// Residual sum_j omega_ij (p_i - p_j) at every vertex. The stress is a
/// self-stress iff all residual norms are <= eps_geom * scale.
std::map<int, Vec> equilibrium_residuals(const Framework& fw, const Stress& s);

/// Largest residual norm over all vertices.
double max_equilibrium_residual(const Framework& fw, const Stress& s);

bool is_self_stress(const Framework& fw, const Stress& s);

/// Basis of the nullspace of the (n|V|) x |E| equilibrium matrix,
/// computed with a relative singular-value cutoff.
std::vector<Stress> self_stress_basis(const Framework& fw);

/// Splits every pairwise transversal interior crossing of a 2D
/// self-stressed framework into a new vertex, rescaling sub-edge
/// stresses by omega/lambda. Crossing-free input is returned unchanged.
std::pair<Framework, Stress> subdivide_crossings(const Framework& fw,
                                                 const Stress& s);

/// True when some pair of edges crosses transversally in both interiors.
bool has_interior_crossings(const Framework& fw);

} // namespace liftings

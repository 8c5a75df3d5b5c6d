#pragma once

#include <map>
#include <utility>
#include <vector>

#include "liftings/framework.hpp"

namespace liftings {

/// Affine flat stored as a base point plus an orthonormal (oriented)
/// direction basis, produced by Gram-Schmidt at construction.
struct Flat {
  Vec base;
  std::vector<Vec> basis;

  int ambient_dim() const { return static_cast<int>(base.size()); }
  int dim() const { return static_cast<int>(basis.size()); }
};

/// Orthonormalizes the given spanning directions; throws DegenerateInput
/// when they are dependent.
Flat make_flat(Vec base, const std::vector<Vec>& directions);

/// Planes-incidences-normals structure: E a set of (m-1)-flats, F a set
/// of oriented m-flats, incidences (e, f) with e inside f, and unit
/// normals n(e,f) lying in f and orthogonal to e.
struct MFramework {
  int ambient_dim = 3;
  int face_dim = 2;
  std::vector<Flat> edges;
  std::vector<Flat> faces;
  std::vector<std::pair<int, int>> incidences;
  std::map<std::pair<int, int>, Vec> normals;

  /// alpha_e bases fixed once at construction so monodromy values are
  /// deterministic.
  std::vector<MForm> edge_forms;

  void validate() const;
};

/// Per-face scalars omega(f).
struct ForceLoad {
  std::map<int, double> values;

  double at(int face) const;
};

/// Polytopal 2-complex: polygons given as ordered vertex loops in R^n.
/// Facets (polygon edges) are identified geometrically.
struct PolytopalComplex {
  int ambient_dim = 3;
  int face_dim = 2;
  std::vector<std::vector<Vec>> polygons;

  /// Pairwise-intersection validation is implemented for m = 2, n = 3;
  /// other ambient dimensions require the caller to vouch for it.
  bool caller_validated = false;
};

/// A polygon edge shared by one or more polygons.
struct Facet {
  Vec a, b;
  std::vector<int> polygons;
};

/// Polygon-edge identification by endpoint geometry (within eps_geom).
std::vector<Facet> complex_facets(const PolytopalComplex& c);

/// Checks the pairwise-intersection rule (shared facet or dimension
/// <= 0) and facet-plane distinctness; throws on violation. Convex
/// polygons assumed.
void validate_complex(const PolytopalComplex& c);

/// Spans of facets as E, spans of polygons as F (orientation from the
/// vertex order), incidences, and inward unit normals.
MFramework associated_mframework(const PolytopalComplex& c);

/// Residual sum over incident faces of omega(f) n(e,f), per edge.
std::map<int, Vec> forceload_residuals(const MFramework& mf, const ForceLoad& w);

double max_forceload_residual(const MFramework& mf, const ForceLoad& w);

bool is_equilibrium_forceload(const MFramework& mf, const ForceLoad& w);

/// Nullspace basis of the (n|E|) x |F| matrix with blocks n(e,f).
std::vector<ForceLoad> forceload_basis(const MFramework& mf);

/// alpha_f = de_1 ^ ... ^ de_m for an oriented orthonormal basis of the
/// flat; independent of the positively oriented basis chosen.
MForm face_form(const Flat& face);

/// Lifting of a crossing word over faces: sum of sign * omega(f) * alpha_f.
MForm lifting_of_word_m(const PolytopalComplex& c, const ForceLoad& w,
                        const std::vector<std::pair<int, int>>& word);

/// Sum over incidences (e,f) of omega(f) * (alpha_e ^ d n(e,f)); zero
/// exactly when the force-load is in equilibrium at e.
MForm facet_monodromy(const MFramework& mf, const ForceLoad& w, int edge);

/// omega'(f) = Vol(f) * omega(f) (stress to force-load) or the inverse
/// division; Vol is the polygon area for m = 2.
std::map<int, double> convert_stress_forceload(const PolytopalComplex& c,
                                               const std::map<int, double>& values,
                                               bool to_forceload);

/// Polygonal mesh input for the parallel-mesh generator.
struct Mesh {
  std::vector<Vec> vertices;
  std::vector<std::vector<int>> faces;
};

/// Pair of parallel meshes (the mesh and its homothetic copy about the
/// origin) joined by one planar trapezoid per mesh edge; every
/// connecting facet is trivalent.
PolytopalComplex parallel_prism_complex(const Mesh& mesh, double lambda);

/// m = 1 view of a graph framework: vertices as 0-flats E, edge lines as
/// 1-flats F with alpha_f = d(p_i - p_j)/|p_i - p_j| for i < j, and
/// normals pointing from each endpoint into its edge.
MFramework mframework_from_framework(const Framework& fw);

/// Force-load normalization of a stress on a graph framework:
/// omega(f) = omega_ij * |p_i - p_j|.
ForceLoad forceload_from_stress(const Framework& fw, const Stress& s);

} // namespace liftings

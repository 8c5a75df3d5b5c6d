#pragma once

#include <vector>

#include "liftings/framework.hpp"
#include "liftings/polytopal.hpp"

namespace liftings {

/// Affine flat given by spanning points; dim = count - 1.
struct AffineFlat {
  std::vector<Vec> spanning_points;

  int ambient_dim() const;
  int dim() const { return static_cast<int>(spanning_points.size()) - 1; }
  void validate() const;
};

/// Piecewise-linear motion of a flat: spanning points interpolate
/// linearly between consecutive samples. Parameter runs over [0, 1].
struct GrassmannPath {
  std::vector<AffineFlat> samples;

  AffineFlat at(double t) const;
  void validate() const;
};

struct CrossingEvent {
  int face = -1;
  double t = 0.0;
  int mu = 0; ///< sign of the derivative of dist at the crossing
};

/// Bounded faces of a complex (or the edges of a framework) with their
/// affine spans and force-load values; crossings count only when the
/// moving flat passes through a polytope interior.
struct FaceSystem {
  struct Face {
    AffineFlat span;        ///< spanning points of the face's flat
    std::vector<Vec> verts; ///< polytope: segment endpoints or polygon loop
    double load = 0.0;
  };
  int ambient_dim = 3;
  std::vector<Face> faces;
};

/// Signed distance-like pairing of two flats whose dimensions add to
/// n - 1: signed_det(q_2-q_1, ..., q_s-q_1, p_1-q_1, ..., p_r-q_1)
/// divided by the product of the two Gram volumes of the difference
/// tuples, where a = (p_1..p_r) and b = (q_1..q_s). Zero exactly when
/// the flats meet.
double flat_distance(const AffineFlat& a, const AffineFlat& b);

/// Scans dist(H(t), f) for every face over a dense grid (1024 samples
/// per segment, adaptively doubled up to 2^16), refines roots by
/// bisection, keeps only crossings through face interiors, and rejects
/// crossings at facet points or tangencies.
std::vector<CrossingEvent> path_crossings(const GrassmannPath& path,
                                          const FaceSystem& fs);

/// L(path) = sum over crossing events of mu * load(f) * dist(final
/// flat, f); path-independent for equilibrium loads.
double grassmann_lifting(const GrassmannPath& path, const FaceSystem& fs);

/// Three-term monodromy sum around a trivalent vertex: the star
/// p1 = 0, p2 = (1,0,0), p3 = (cos a, sin a, 0), p4 = (cos b, sin b, 0)
/// with loads lambda sin(a-b), lambda sin b, -lambda sin a, paired
/// against the line through (a,b,0) and (c,d,1). Always vanishes.
double trivalent_monodromy_identity(double alpha, double beta, double a, double b,
                                    double c, double d, double lambda);

/// Face system of a graph framework: one face per edge segment with the
/// force-load normalization omega * |p_i - p_j|. Throws NotEquilibrium
/// when the stress is not a self-stress.
FaceSystem face_system_from_framework(const Framework& fw, const Stress& s);

/// Face system of a polytopal 2-complex with an equilibrium force-load.
FaceSystem face_system_from_complex(const PolytopalComplex& c, const ForceLoad& w);

} // namespace liftings

#pragma once

#include <utility>
#include <vector>

#include "liftings/framework.hpp"

namespace liftings {

/// Signed sequence of transversal edge crossings encoding a homotopy
/// class of the framework complement relative to the trivial class.
/// Edge orientation (i, j) is recorded explicitly so d(p_i - p_j) is
/// well defined; sign is +1 or -1.
struct CrossingWord {
  struct Entry {
    int i = 0;
    int j = 0;
    int sign = +1;
  };
  std::vector<Entry> entries;
};

/// Closed polyline in R^3.
struct PolygonalLoop {
  std::vector<Vec> points;

  void validate() const;
};

/// sign * omega_ij * d(p_i - p_j) as a 1-form in R^n: the jump of the
/// lifting across one transversal crossing of the edge.
MForm elementary_lifting_form(const Framework& fw, const Stress& s, int i, int j,
                              int sign);

/// Sum of elementary forms over the word; the empty word gives zero.
MForm lifting_of_word(const Framework& fw, const Stress& s, const CrossingWord& w);

/// Sum over edges incident to the vertex of omega_ij * d(p_i - p_j);
/// zero exactly when equilibrium holds there.
MForm vertex_monodromy(const Framework& fw, const Stress& s, int vertex);

/// Integer linking number of two disjoint closed polygonal curves in
/// R^3, by signed crossings in a generic projection (random rotations
/// retried on degeneracy). Sign convention: two circles forming a
/// right-handed Hopf link give +1.
int linking_number(const PolygonalLoop& a, const PolygonalLoop& b, unsigned seed = 12345u);

/// Signed count of intersections of the triangle fan (apex, x_t,
/// x_{t+1}) over the loop with the open segment (q1, q2); each crossing
/// contributes sign(det(x_t - apex, x_{t+1} - apex, q2 - q1)). Throws
/// DegenerateInput on non-transversal configurations so the caller can
/// perturb the apex.
int cone_crossings(const PolygonalLoop& loop, const Vec& apex, const Vec& q1,
                   const Vec& q2);

/// Lifting of the homotopy class of a concrete loop: sum over framework
/// edges of cone_crossings * omega * d(p_i - p_j). Independent of the
/// apex; non-transversal cones are retried with perturbed apexes.
MForm lifting_of_loop(const Framework& fw, const Stress& s, const PolygonalLoop& loop,
                      const Vec& apex);

/// Inverse of elementary_lifting_form over all edges: recovers omega_ij
/// by projecting each form onto d(p_i - p_j).
Stress recover_stress_nd(const Framework& fw,
                         const std::map<std::pair<int, int>, MForm>& elementary_values);

} // namespace liftings

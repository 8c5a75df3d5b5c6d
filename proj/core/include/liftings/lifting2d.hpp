#pragma once

#include <map>

#include "liftings/arrangement2d.hpp"
#include "liftings/framework.hpp"

namespace liftings {

/// Assignment of a constant 1-form to every chamber; zero on the
/// unbounded chamber, and across each adjacency the jump equals
/// sign(det(n, p_i - p_j)) * omega_ij * d(p_i - p_j).
struct DifferentialLifting2D {
  ChamberComplex complex;
  std::map<int, MForm> forms;

  const MForm& form(int chamber_id) const;
};

/// Continuous piecewise-affine L: R^2 -> R, affine on each chamber,
/// L(x) = <gradient, x> + offset, zero on the unbounded chamber.
/// normals[c] = (gradient_c, -1).
struct PolyhedralLifting {
  ChamberComplex complex;

  struct Piece {
    Eigen::Vector2d gradient = Eigen::Vector2d::Zero();
    double offset = 0.0;
  };
  std::map<int, Piece> pieces;
  std::map<int, Eigen::Vector3d> normals;

  double value(const Eigen::Vector2d& x) const;
};

/// Unique differential lifting of a self-stressed 2D framework:
/// breadth-first propagation of the jump rule from the unbounded
/// chamber, with every non-tree adjacency re-checked.
DifferentialLifting2D differential_lifting_2d(const Framework& fw, const Stress& s);

/// Inverse of differential_lifting_2d: reads omega_ij off the chamber
/// differences across each adjacency and checks consistency.
Stress recover_stress(const Framework& fw, const DifferentialLifting2D& dl);

/// Integrates the differential lifting of a crossing-free framework to
/// a continuous polyhedral lifting. The gradient on chamber C is
/// +hodge_star(alpha_C); offsets are fixed by continuity at the 1/3 and
/// 2/3 points of every shared sub-segment.
PolyhedralLifting integrate_polyhedral_lifting(const Framework& fw, const Stress& s);

/// Reciprocal framework: one dual vertex per chamber at the coefficient
/// pair of alpha_C (parallel mode) or of hodge_star(alpha_C)
/// (perpendicular mode, dual edges orthogonal to primal ones with
/// length |omega_ij| * |p_i - p_j|).
Framework reciprocal_diagram(const Framework& fw, const Stress& s, bool perpendicular);

} // namespace liftings

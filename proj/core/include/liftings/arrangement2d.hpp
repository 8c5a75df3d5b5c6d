#pragma once

#include <Eigen/Dense>
#include <vector>

#include "liftings/framework.hpp"

namespace liftings {

/// One boundary cycle of a chamber, as a closed point sequence.
using BoundaryCycle = std::vector<Eigen::Vector2d>;

struct Chamber {
  int id = -1;
  std::vector<BoundaryCycle> cycles; ///< first cycle is the outer one for bounded chambers
  bool bounded = true;
};

/// A sub-segment of an original framework edge separating two chambers.
/// `normal` is the unit normal pointing from chamber_a to chamber_b.
struct Adjacency {
  int chamber_a = -1;
  int chamber_b = -1;
  EdgeKey edge_ref{};
  Eigen::Vector2d normal = Eigen::Vector2d::Zero();
  Eigen::Vector2d seg_a = Eigen::Vector2d::Zero();
  Eigen::Vector2d seg_b = Eigen::Vector2d::Zero();
};

/// Planar subdivision of R^2 induced by a 2D framework.
struct ChamberComplex {
  std::vector<Chamber> chambers;
  int unbounded_id = -1;
  std::vector<Adjacency> adjacencies;

  // refined subdivision counts (for Euler checks and reports)
  int node_count = 0;
  int subedge_count = 0;

  int bounded_count() const {
    return static_cast<int>(chambers.size()) - 1;
  }
};

/// Builds the chamber decomposition: refines all pairwise edge crossings,
/// extracts faces by cyclic angular ordering of half-edges, and records
/// one adjacency per separating sub-segment labeled with the original edge.
ChamberComplex build_chamber_complex(const Framework& fw);

/// Chamber containing the point (ray casting); the point must be farther
/// than eps_geom from every edge segment.
int locate_chamber(const ChamberComplex& cc, const Vec& point);
int locate_chamber(const ChamberComplex& cc, const Eigen::Vector2d& point);

} // namespace liftings

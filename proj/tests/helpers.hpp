#pragma once

#include <random>
#include <vector>

#include "liftings/framework.hpp"
#include "liftings/homotopy_nd.hpp"
#include "liftings/polytopal.hpp"

namespace testdata {

using liftings::Framework;
using liftings::Mesh;
using liftings::PolygonalLoop;
using liftings::Stress;
using liftings::Vec;

// Equilateral K4 with a central vertex: p1 at the barycentre of the
// triangle p2 p3 p4.
std::pair<Framework, Stress> k4_planar();

// K4 on a square with both diagonals crossing at the origin.
std::pair<Framework, Stress> k4_nonplanar();

// Triangular-prism combinatorics: outer rectangle, inner segment, legs.
std::pair<Framework, Stress> prism();

// K5 on the standard simplex corners plus (1,1,1) with its
// one-dimensional self-stress.
std::pair<Framework, Stress> k5();

// Cube with side 1 centred at the origin.
Mesh unit_cube_mesh();

// Planar circle approximated by a regular polygon, in the plane with
// the given orthonormal axes u, v.
PolygonalLoop polygon_circle(const Vec& center, const Vec& u, const Vec& v,
                             double radius, int segments);

// Complete graph on `count` random points, coordinates in [-1, 1].
Framework random_complete_framework(int dim, int count, std::mt19937_64& rng);

// Numeric Gauss-integral linking number of two polygonal loops
// (16-point Gauss-Legendre per segment pair); approximates the integer
// linking number to well under 0.01 for well-separated loops.
double gauss_linking_oracle(const PolygonalLoop& a, const PolygonalLoop& b);

} // namespace testdata

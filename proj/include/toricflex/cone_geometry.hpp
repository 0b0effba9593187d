#pragma once

// Geometry of a single simplicial cone: facet normals, membership, faces,
// torus-orbit codimensions and the finite group of a full-dimensional cone.

#include <cstddef>
#include <span>
#include <vector>

#include "toricflex/fan.hpp"
#include "toricflex/int_matrix.hpp"

namespace toricflex {

struct Face {
  Cone cone;
  std::size_t dim;
};

struct FaceLattice {
  Cone cone;
  /// Ordered by dimension, then lexicographically.
  std::vector<Face> faces;
};

/// N modulo the sublattice spanned by a full-dimensional cone's generators.
struct QuotientGroup {
  std::vector<Integer> invariant_factors;  // only factors > 1
  Integer order = 1;

  bool trivial() const { return invariant_factors.empty(); }
  friend bool operator==(const QuotientGroup&, const QuotientGroup&) = default;
};

/// One primitive covector per generator, dual to it inside the span of the
/// cone: zero on every other generator, positive on its own. For a cone that
/// is not full-dimensional the covector is taken from the span itself, so it
/// also vanishes on the orthogonal complement.
std::vector<IntVector> facet_normals(std::span<const IntVector> generators);
std::vector<IntVector> facet_normals(const Fan& f, const Cone& c);

bool cone_contains(std::span<const IntVector> generators, std::span<const Integer> v);
bool cone_contains(const Fan& f, const Cone& c, std::span<const Integer> v);

FaceLattice face_lattice(const Cone& c);

/// Codimension of the torus orbit attached to c.
std::size_t orbit_codim(const Cone& c);

/// Throws NotFullDimensional unless there are exactly n independent
/// generators in rank n.
QuotientGroup quotient_group(std::span<const IntVector> generators, std::size_t ambient_rank);
QuotientGroup quotient_group(const Fan& f, const Cone& c);

/// True iff the two cones intersect exactly in the cone on their common rays.
/// Decided by an exact rational feasibility problem.
bool meet_in_common_face(const Fan& f, const Cone& a, const Cone& b);

}  // namespace toricflex

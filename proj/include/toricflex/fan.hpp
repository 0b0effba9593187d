#pragma once

// Simplicial fans in N_R = R^n with N = Z^n.
//
// A cone is stored as the sorted set of indices of its rays. Generators of a
// cone must be linearly independent, so every face of a cone is a subset of
// its index set and the empty set is the zero cone.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "toricflex/int_matrix.hpp"

namespace toricflex {

/// Primitive generator of a one-dimensional cone.
using Ray = IntVector;

class Cone {
 public:
  Cone() = default;
  /// Sorts the indices. Throws BadCone on repeated indices.
  explicit Cone(std::vector<std::size_t> ray_indices);
  Cone(std::initializer_list<std::size_t> ray_indices);

  const std::vector<std::size_t>& ray_indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(std::size_t ray) const;
  bool is_subset_of(const Cone& other) const;

  friend bool operator==(const Cone&, const Cone&) = default;
  friend auto operator<=>(const Cone&, const Cone&) = default;

 private:
  std::vector<std::size_t> indices_;
};

std::string to_string(const Cone& c);

class Fan {
 public:
  /// Checks structure only: rank >= 1, rays primitive, distinct and of the
  /// right length, cone indices in range, cone generators independent.
  /// Throws MalformedFan, DimensionMismatch, BadIndex or NonSimplicial.
  /// The fan axioms themselves are checked by validate_fan.
  Fan(std::size_t ambient_rank, std::vector<Ray> rays, std::vector<Cone> max_cones);

  std::size_t ambient_rank() const noexcept { return rank_; }
  const std::vector<Ray>& rays() const noexcept { return rays_; }
  const std::vector<Cone>& max_cones() const noexcept { return cones_; }
  const Ray& ray(std::size_t i) const;

  std::vector<IntVector> generators(const Cone& c) const;
  /// Generators of c as the rows of a matrix (c must be nonempty).
  IntMatrix generator_matrix(const Cone& c) const;
  /// Throws BadIndex if c references a ray outside the fan.
  void check_cone(const Cone& c) const;
  /// True iff c is a face of some maximal cone.
  bool has_cone(const Cone& c) const;

  friend bool operator==(const Fan&, const Fan&) = default;

 private:
  std::size_t rank_;
  std::vector<Ray> rays_;
  std::vector<Cone> cones_;
};

struct FanReport {
  bool valid = false;
  bool smooth = false;
  bool simplicial = true;
  bool nondegenerate = false;
  bool complete = false;
  std::size_t torus_factor_rank = 0;
  std::vector<std::string> diagnostics;

  friend bool operator==(const FanReport&, const FanReport&) = default;
};

/// Checks the fan axioms and fills in every predicate. Never throws on an
/// invalid fan; failures become diagnostics.
FanReport validate_fan(const Fan& f);

std::size_t cone_dim(const Fan& f, const Cone& c);
bool is_smooth_cone(const Fan& f, const Cone& c);
bool is_smooth_fan(const Fan& f);
std::size_t torus_factor_rank(const Fan& f);
bool is_nondegenerate(const Fan& f);

/// Facet-pairing criterion: every (n-1)-face of a maximal cone lies in
/// exactly two maximal cones. Exact for valid pure full-dimensional simplicial
/// fans. Throws NotPure if some maximal cone is not n-dimensional.
bool is_complete(const Fan& f);

/// Inserts the primitive sum of c's generators and splits every maximal cone
/// containing c. Throws BadCone, NotSmooth or InvalidFan.
Fan star_subdivision(const Fan& f, const Cone& c);

/// Rays sorted lexicographically, cone index sets remapped and sorted.
Fan canonical_form(const Fan& f);

/// Lexicographic order on vectors, used for the canonical ray order.
bool lex_less(const IntVector& a, const IntVector& b);

Fan fan_affine_space(std::size_t n);
Fan fan_projective_space(std::size_t n);
Fan fan_hirzebruch(long a);
Fan fan_product(const Fan& f1, const Fan& f2);
/// C^n minus the origin: each coordinate ray is its own maximal cone.
Fan fan_punctured_affine(std::size_t n);

}  // namespace toricflex

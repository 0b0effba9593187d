#include "toricflex/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "toricflex/cone_geometry.hpp"
#include "toricflex/errors.hpp"

namespace toricflex {

Cone::Cone(std::vector<std::size_t> ray_indices) : indices_(std::move(ray_indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw Error(ErrorKind::BadCone, "repeated ray index in cone");
}

Cone::Cone(std::initializer_list<std::size_t> ray_indices)
    : Cone(std::vector<std::size_t>(ray_indices)) {}

bool Cone::contains(std::size_t ray) const {
  return std::binary_search(indices_.begin(), indices_.end(), ray);
}

bool Cone::is_subset_of(const Cone& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(), indices_.end());
}

std::string to_string(const Cone& c) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c.ray_indices()[i];
  out << '}';
  return out.str();
}

Fan::Fan(std::size_t ambient_rank, std::vector<Ray> rays, std::vector<Cone> max_cones)
    : rank_(ambient_rank), rays_(std::move(rays)), cones_(std::move(max_cones)) {
  if (rank_ == 0) throw Error(ErrorKind::MalformedFan, "ambient rank must be at least 1");
  if (cones_.empty()) throw Error(ErrorKind::MalformedFan, "a fan needs at least one maximal cone");
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    const auto& r = rays_[i];
    if (r.size() != rank_)
      throw Error(ErrorKind::DimensionMismatch, "ray " + std::to_string(i) + " has length " +
                                                    std::to_string(r.size()) + " in rank " +
                                                    std::to_string(rank_));
    const Integer g = content(r);
    if (g == 0) throw Error(ErrorKind::MalformedFan, "ray " + std::to_string(i) + " is zero");
    if (g != 1)
      throw Error(ErrorKind::MalformedFan, "ray " + std::to_string(i) + " " + to_string(r) +
                                               " is not primitive");
  }
  std::vector<std::size_t> order(rays_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lex_less(rays_[a], rays_[b]); });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (rays_[order[i - 1]] == rays_[order[i]])
      throw Error(ErrorKind::MalformedFan, "rays " + std::to_string(order[i - 1]) + " and " +
                                               std::to_string(order[i]) + " coincide");
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    check_cone(cones_[i]);
    if (cones_[i].empty()) continue;
    if (rank(generator_matrix(cones_[i])) != cones_[i].size())
      throw Error(ErrorKind::NonSimplicial, "maximal cone " + std::to_string(i) + " " +
                                                to_string(cones_[i]) +
                                                " has linearly dependent generators");
  }
}

const Ray& Fan::ray(std::size_t i) const {
  if (i >= rays_.size())
    throw Error(ErrorKind::BadIndex, "ray index " + std::to_string(i) + " out of range");
  return rays_[i];
}

std::vector<IntVector> Fan::generators(const Cone& c) const {
  std::vector<IntVector> gens;
  gens.reserve(c.size());
  for (auto i : c.ray_indices()) gens.push_back(ray(i));
  return gens;
}

IntMatrix Fan::generator_matrix(const Cone& c) const {
  const auto gens = generators(c);
  return IntMatrix::from_rows(gens);
}

void Fan::check_cone(const Cone& c) const {
  for (auto i : c.ray_indices())
    if (i >= rays_.size())
      throw Error(ErrorKind::BadIndex, "cone " + to_string(c) + " references ray " + std::to_string(i) +
                                           " of " + std::to_string(rays_.size()));
}

bool Fan::has_cone(const Cone& c) const {
  return std::any_of(cones_.begin(), cones_.end(), [&](const Cone& m) { return c.is_subset_of(m); });
}

FanReport validate_fan(const Fan& f) {
  FanReport report;
  const auto& cones = f.max_cones();

  for (std::size_t r = 0; r < f.rays().size(); ++r)
    if (std::none_of(cones.begin(), cones.end(), [&](const Cone& c) { return c.contains(r); }))
      report.diagnostics.push_back("ray " + std::to_string(r) + " " + to_string(f.ray(r)) +
                                   " lies in no maximal cone");

  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      const std::string a = "maximal cone " + std::to_string(i) + " " + to_string(cones[i]);
      const std::string b = "maximal cone " + std::to_string(j) + " " + to_string(cones[j]);
      if (cones[i] == cones[j]) {
        report.diagnostics.push_back(b + " duplicates " + a);
      } else if (cones[i].is_subset_of(cones[j])) {
        report.diagnostics.push_back(a + " is a face of " + b);
      } else if (cones[j].is_subset_of(cones[i])) {
        report.diagnostics.push_back(b + " is a face of " + a);
      } else if (!meet_in_common_face(f, cones[i], cones[j])) {
        report.diagnostics.push_back(a + " and " + b + " overlap outside their common face");
      }
    }
  report.valid = report.diagnostics.empty();

  report.smooth = true;
  for (std::size_t i = 0; i < cones.size(); ++i)
    if (!is_smooth_cone(f, cones[i])) {
      report.smooth = false;
      report.diagnostics.push_back("maximal cone " + std::to_string(i) + " " + to_string(cones[i]) +
                                   " is not smooth");
    }
  report.torus_factor_rank = torus_factor_rank(f);
  report.nondegenerate = report.torus_factor_rank == 0;
  if (!report.nondegenerate)
    report.diagnostics.push_back("rays do not span N_R: torus_factor_rank = " +
                                 std::to_string(report.torus_factor_rank));
  if (report.valid) {
    try {
      report.complete = is_complete(f);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotPure) throw;
      report.complete = false;
      report.diagnostics.push_back("not pure, completeness undefined");
    }
  }
  return report;
}

std::size_t cone_dim(const Fan& f, const Cone& c) {
  f.check_cone(c);
  return c.size();
}

bool is_smooth_cone(const Fan& f, const Cone& c) {
  f.check_cone(c);
  if (c.empty()) return true;
  return extends_to_z_basis(f.generators(c), f.ambient_rank());
}

bool is_smooth_fan(const Fan& f) {
  return std::all_of(f.max_cones().begin(), f.max_cones().end(),
                     [&](const Cone& c) { return is_smooth_cone(f, c); });
}

std::size_t torus_factor_rank(const Fan& f) {
  if (f.rays().empty()) return f.ambient_rank();
  return f.ambient_rank() - rank(IntMatrix::from_rows(f.rays()));
}

bool is_nondegenerate(const Fan& f) { return torus_factor_rank(f) == 0; }

bool is_complete(const Fan& f) {
  const std::size_t n = f.ambient_rank();
  std::map<Cone, int> facet_count;
  for (std::size_t i = 0; i < f.max_cones().size(); ++i) {
    const Cone& c = f.max_cones()[i];
    if (c.size() != n)
      throw Error(ErrorKind::NotPure, "maximal cone " + std::to_string(i) + " " + to_string(c) +
                                          " has dimension " + std::to_string(c.size()) + " < " +
                                          std::to_string(n));
    for (std::size_t drop = 0; drop < n; ++drop) {
      std::vector<std::size_t> facet;
      for (std::size_t j = 0; j < n; ++j)
        if (j != drop) facet.push_back(c.ray_indices()[j]);
      ++facet_count[Cone(std::move(facet))];
    }
  }
  return std::all_of(facet_count.begin(), facet_count.end(), [](const auto& kv) { return kv.second == 2; });
}

Fan star_subdivision(const Fan& f, const Cone& c) {
  f.check_cone(c);
  if (c.size() < 2)
    throw Error(ErrorKind::BadCone, "star subdivision needs a cone of dimension >= 2, got " + to_string(c));
  if (!f.has_cone(c)) throw Error(ErrorKind::BadCone, to_string(c) + " is not a cone of the fan");
  const FanReport report = validate_fan(f);
  if (!report.valid) throw Error(ErrorKind::InvalidFan, "cannot subdivide an invalid fan");
  if (!report.smooth) throw Error(ErrorKind::NotSmooth, "cannot subdivide a non-smooth fan");

  IntVector sum(f.ambient_rank());
  for (auto i : c.ray_indices())
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += f.ray(i)[k];
  Ray added = primitivize(sum);
  if (std::find(f.rays().begin(), f.rays().end(), added) != f.rays().end())
    throw Error(ErrorKind::BadCone, "subdivision ray " + to_string(added) + " already present");

  const std::size_t added_index = f.rays().size();
  std::vector<Ray> rays = f.rays();
  rays.push_back(std::move(added));
  std::vector<Cone> cones;
  for (const Cone& sigma : f.max_cones()) {
    if (!c.is_subset_of(sigma)) {
      cones.push_back(sigma);
      continue;
    }
    for (auto dropped : c.ray_indices()) {
      std::vector<std::size_t> idx;
      for (auto i : sigma.ray_indices())
        if (i != dropped) idx.push_back(i);
      idx.push_back(added_index);
      cones.emplace_back(std::move(idx));
    }
  }
  return Fan(f.ambient_rank(), std::move(rays), std::move(cones));
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Fan canonical_form(const Fan& f) {
  std::vector<std::size_t> order(f.rays().size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lex_less(f.rays()[a], f.rays()[b]); });
  std::vector<std::size_t> new_index(order.size());
  std::vector<Ray> rays;
  rays.reserve(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    new_index[order[k]] = k;
    rays.push_back(f.rays()[order[k]]);
  }
  std::vector<Cone> cones;
  for (const Cone& c : f.max_cones()) {
    std::vector<std::size_t> idx;
    for (auto i : c.ray_indices()) idx.push_back(new_index[i]);
    cones.emplace_back(std::move(idx));
  }
  std::sort(cones.begin(), cones.end());
  return Fan(f.ambient_rank(), std::move(rays), std::move(cones));
}

namespace {

Ray unit_vector(std::size_t n, std::size_t i) {
  Ray r(n);
  r[i] = 1;
  return r;
}

void require_rank(std::size_t n, std::size_t minimum, const char* what) {
  if (n < minimum)
    throw Error(ErrorKind::BadParameter, std::string(what) + " needs n >= " + std::to_string(minimum) +
                                             ", got " + std::to_string(n));
}

}  // namespace

Fan fan_affine_space(std::size_t n) {
  require_rank(n, 1, "affine space");
  std::vector<Ray> rays;
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) {
    rays.push_back(unit_vector(n, i));
    all[i] = i;
  }
  return Fan(n, std::move(rays), {Cone(std::move(all))});
}

Fan fan_projective_space(std::size_t n) {
  require_rank(n, 1, "projective space");
  std::vector<Ray> rays;
  for (std::size_t i = 0; i < n; ++i) rays.push_back(unit_vector(n, i));
  rays.emplace_back(n, Integer(-1));
  // Cone omitting ray n first, then omitting 0, 1, ..., n-1.
  std::vector<Cone> cones;
  auto omitting = [n](std::size_t skip) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) idx.push_back(i);
    return Cone(std::move(idx));
  };
  cones.push_back(omitting(n));
  for (std::size_t skip = 0; skip < n; ++skip) cones.push_back(omitting(skip));
  return Fan(n, std::move(rays), std::move(cones));
}

Fan fan_hirzebruch(long a) {
  if (a < 0) throw Error(ErrorKind::BadParameter, "Hirzebruch surface needs a >= 0, got " + std::to_string(a));
  std::vector<Ray> rays{make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, a}), make_vector({0, -1})};
  return Fan(2, std::move(rays), {Cone{0, 1}, Cone{1, 2}, Cone{2, 3}, Cone{0, 3}});
}

Fan fan_product(const Fan& f1, const Fan& f2) {
  const std::size_t n1 = f1.ambient_rank();
  const std::size_t n = n1 + f2.ambient_rank();
  std::vector<Ray> rays;
  for (const auto& r : f1.rays()) {
    Ray v(n);
    std::copy(r.begin(), r.end(), v.begin());
    rays.push_back(std::move(v));
  }
  for (const auto& r : f2.rays()) {
    Ray v(n);
    std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(n1));
    rays.push_back(std::move(v));
  }
  const std::size_t offset = f1.rays().size();
  std::vector<Cone> cones;
  for (const Cone& a : f1.max_cones())
    for (const Cone& b : f2.max_cones()) {
      std::vector<std::size_t> idx = a.ray_indices();
      for (auto i : b.ray_indices()) idx.push_back(i + offset);
      cones.emplace_back(std::move(idx));
    }
  return Fan(n, std::move(rays), std::move(cones));
}

Fan fan_punctured_affine(std::size_t n) {
  require_rank(n, 2, "punctured affine space");
  std::vector<Ray> rays;
  std::vector<Cone> cones;
  for (std::size_t i = 0; i < n; ++i) {
    rays.push_back(unit_vector(n, i));
    cones.push_back(Cone{i});
  }
  return Fan(n, std::move(rays), std::move(cones));
}

}  // namespace toricflex

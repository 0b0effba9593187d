#include "toricflex/flex_cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "toricflex/errors.hpp"
#include "toricflex/fan_io.hpp"

namespace toricflex {

const std::vector<std::string> kCitations = {
    "AKZ2012 Theorem 0.2: the smooth locus of a nondegenerate affine toric variety is flexible",
    "FKZ2016 Theorem 0.1: removing a subvariety of codimension at least 2 from a flexible "
    "quasi-affine manifold leaves a flexible manifold",
};

std::string to_string(ChartKind kind) {
  return kind == ChartKind::AffineSpace ? "AffineSpace" : "FlexibleComplement";
}

namespace {

std::vector<std::size_t> canonical_ray_order(const Fan& f) {
  std::vector<std::size_t> order(f.rays().size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lex_less(f.rays()[a], f.rays()[b]); });
  return order;
}

std::string first_non_smooth(const Fan& f) {
  for (std::size_t i = 0; i < f.max_cones().size(); ++i)
    if (!is_smooth_cone(f, f.max_cones()[i]))
      return "maximal cone " + std::to_string(i) + " " + to_string(f.max_cones()[i]) + " is not smooth";
  return {};
}

}  // namespace

ChartCertificate build_chart(const Fan& f, std::size_t cone_index) {
  if (cone_index >= f.max_cones().size())
    throw Error(ErrorKind::BadIndex, "maximal cone " + std::to_string(cone_index) + " of " +
                                         std::to_string(f.max_cones().size()));
  if (const std::string bad = first_non_smooth(f); !bad.empty()) throw Error(ErrorKind::NotSmooth, bad);

  const Cone& cone = f.max_cones()[cone_index];
  ChartCertificate chart;
  chart.cone_index = cone_index;
  chart.n = f.ambient_rank();
  chart.k = cone.size();

  if (chart.k == chart.n) {
    chart.kind = ChartKind::AffineSpace;
    chart.cprime_ray_indices = cone.ray_indices();
    chart.quotient = quotient_group(f, cone);
    chart.min_complement_codim = chart.n + 1;
    return chart;
  }

  chart.kind = ChartKind::FlexibleComplement;
  std::vector<IntVector> spanning = f.generators(cone);
  for (std::size_t r : canonical_ray_order(f)) {
    if (spanning.size() == chart.n) break;
    if (cone.contains(r)) continue;
    spanning.push_back(f.ray(r));
    if (rank(IntMatrix::from_rows(spanning)) == spanning.size())
      chart.added_ray_indices.push_back(r);
    else
      spanning.pop_back();
  }
  if (spanning.size() != chart.n)
    throw Error(ErrorKind::Degenerate, "maximal cone " + std::to_string(cone_index) +
                                           " cannot be extended to a basis of N_R: torus_factor_rank = " +
                                           std::to_string(torus_factor_rank(f)));
  std::sort(chart.added_ray_indices.begin(), chart.added_ray_indices.end());

  std::vector<std::size_t> cprime = cone.ray_indices();
  cprime.insert(cprime.end(), chart.added_ray_indices.begin(), chart.added_ray_indices.end());
  const Cone cprime_cone(std::move(cprime));
  chart.cprime_ray_indices = cprime_cone.ray_indices();
  chart.quotient = quotient_group(f, cprime_cone);

  // F' holds the faces of C, the added rays and the zero cone.
  auto in_subfan = [&](const Cone& face) {
    return face.is_subset_of(cone) ||
           (face.size() == 1 && std::binary_search(chart.added_ray_indices.begin(),
                                                   chart.added_ray_indices.end(),
                                                   face.ray_indices().front()));
  };
  chart.min_complement_codim = chart.n + 1;
  for (const Face& face : face_lattice(cprime_cone).faces) {
    if (in_subfan(face.cone)) continue;
    const std::size_t codim = orbit_codim(face.cone);
    chart.complement_faces.push_back({face.cone, codim});
    chart.min_complement_codim = std::min(chart.min_complement_codim, codim);
  }
  return chart;
}

CoverCertificate build_cover(const Fan& f) {
  CoverCertificate cert;
  cert.report = validate_fan(f);
  if (!cert.report.valid) {
    std::string why;
    for (const auto& d : cert.report.diagnostics) why += (why.empty() ? "" : "; ") + d;
    throw Error(ErrorKind::InvalidFan, why);
  }
  if (!cert.report.smooth) throw Error(ErrorKind::NotSmooth, first_non_smooth(f));
  if (!cert.report.nondegenerate)
    throw Error(ErrorKind::Degenerate,
                "rays do not span N_R: torus_factor_rank = " + std::to_string(cert.report.torus_factor_rank));

  cert.fan_digest = fan_digest(f);
  cert.citations = kCitations;
  for (std::size_t i = 0; i < f.max_cones().size(); ++i) cert.charts.push_back(build_chart(f, i));
  cert.a_covered = std::all_of(cert.charts.begin(), cert.charts.end(),
                               [](const ChartCertificate& c) { return c.kind == ChartKind::AffineSpace; });
  return cert;
}

namespace {

class ChartChecker {
 public:
  ChartChecker(const Fan& f, const ChartCertificate& chart, std::size_t position,
               std::vector<std::string>& findings)
      : f_(f), chart_(chart), findings_(findings) {
    prefix_ = "chart " + std::to_string(position) + " (maximal cone " + std::to_string(chart.cone_index) + "): ";
  }

  void run() {
    const std::size_t n = f_.ambient_rank();
    const Cone& cone = f_.max_cones()[chart_.cone_index];
    const std::size_t k = cone_dim(f_, cone);

    if (chart_.n != n) fail("n = " + std::to_string(chart_.n) + ", ambient rank is " + std::to_string(n));
    if (chart_.k != k) fail("k = " + std::to_string(chart_.k) + ", cone dimension is " + std::to_string(k));
    if (chart_.kind == ChartKind::AffineSpace && k != n) fail("kind AffineSpace but the cone has dimension < n");
    if (chart_.kind == ChartKind::FlexibleComplement && k == n)
      fail("kind FlexibleComplement but the cone is full-dimensional");
    if (chart_.kind == ChartKind::AffineSpace && !chart_.added_ray_indices.empty())
      fail("kind AffineSpace with added rays");
    if (chart_.kind == ChartKind::FlexibleComplement && chart_.added_ray_indices.empty())
      fail("kind FlexibleComplement without added rays");
    if (chart_.kind == ChartKind::AffineSpace && !is_smooth_cone(f_, cone))
      fail("kind AffineSpace but the cone is not smooth");

    std::set<std::size_t> added;
    bool added_ok = true;
    for (auto r : chart_.added_ray_indices) {
      if (r >= f_.rays().size()) {
        fail("added ray " + std::to_string(r) + " is not a ray of the fan");
        added_ok = false;
      } else if (cone.contains(r)) {
        fail("added ray " + std::to_string(r) + " already lies in the cone");
        added_ok = false;
      } else if (!added.insert(r).second) {
        fail("added ray " + std::to_string(r) + " listed twice");
        added_ok = false;
      }
    }
    if (!added_ok) return;

    std::vector<std::size_t> expected = cone.ray_indices();
    expected.insert(expected.end(), added.begin(), added.end());
    std::sort(expected.begin(), expected.end());
    std::vector<std::size_t> recorded = chart_.cprime_ray_indices;
    std::sort(recorded.begin(), recorded.end());
    if (recorded != expected) {
      fail("C' rays " + to_string(Cone(recorded)) + " differ from cone plus added rays " +
           to_string(Cone(expected)));
      return;
    }
    const Cone cprime(expected);
    if (cprime.size() != n) {
      fail("C' has " + std::to_string(cprime.size()) + " rays, expected " + std::to_string(n));
      return;
    }
    const auto gens = f_.generators(cprime);
    if (rank(IntMatrix::from_rows(gens)) != n) {
      fail("C' generators do not form a basis of N_R");
      return;
    }
    for (const auto& g : gens) {
      IntVector neg(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
      if (!cone_contains(gens, g) || cone_contains(gens, neg)) fail("C' is not pointed");
    }

    auto in_subfan = [&](const Cone& face) {
      return face.is_subset_of(cone) || (face.size() == 1 && added.count(face.ray_indices().front()));
    };

    const FaceLattice lattice = face_lattice(cprime);
    for (const Face& face : lattice.faces)
      if (face.dim <= 1 && !in_subfan(face.cone)) fail("edge " + to_string(face.cone) + " of C' is not in F'");

    std::map<Cone, std::size_t> listed;
    std::size_t min_codim = n + 1;
    for (const auto& cf : chart_.complement_faces) {
      const std::string name = "complement face " + to_string(cf.face);
      if (!listed.emplace(cf.face, cf.codim).second) {
        fail(name + " listed twice");
        continue;
      }
      if (!cf.face.is_subset_of(cprime)) {
        fail(name + " is not a face of C'");
        continue;
      }
      if (in_subfan(cf.face)) fail(name + " lies in F'");
      const std::size_t codim = orbit_codim(cf.face);
      if (cf.codim != codim)
        fail(name + " recorded codim " + std::to_string(cf.codim) + ", orbit codim is " + std::to_string(codim));
      if (codim < 2) fail(name + " has codimension " + std::to_string(codim) + " < 2");
      min_codim = std::min(min_codim, codim);
    }
    for (const Face& face : lattice.faces)
      if (!in_subfan(face.cone) && !listed.count(face.cone))
        fail("face " + to_string(face.cone) + " of C' unaccounted");
    if (chart_.min_complement_codim != min_codim)
      fail("min_complement_codim " + std::to_string(chart_.min_complement_codim) + ", expected " +
           std::to_string(min_codim));

    const QuotientGroup g = quotient_group(gens, n);
    if (!(g == chart_.quotient)) {
      auto show = [](const QuotientGroup& q) {
        return to_string(std::span<const Integer>(q.invariant_factors)) + " of order " + q.order.get_str();
      };
      fail("quotient recorded as " + show(chart_.quotient) + ", recomputed " + show(g));
    }
  }

 private:
  void fail(const std::string& what) { findings_.push_back(prefix_ + what); }

  const Fan& f_;
  const ChartCertificate& chart_;
  std::vector<std::string>& findings_;
  std::string prefix_;
};

void compare_reports(const FanReport& recorded, const FanReport& actual, std::vector<std::string>& findings) {
  auto check = [&](const char* field, auto a, auto b) {
    if (a != b)
      findings.push_back(std::string("report field ") + field + " recorded " + std::to_string(a) +
                         ", recomputed " + std::to_string(b));
  };
  check("valid", recorded.valid, actual.valid);
  check("smooth", recorded.smooth, actual.smooth);
  check("simplicial", recorded.simplicial, actual.simplicial);
  check("nondegenerate", recorded.nondegenerate, actual.nondegenerate);
  check("complete", recorded.complete, actual.complete);
  check("torus_factor_rank", recorded.torus_factor_rank, actual.torus_factor_rank);
  if (recorded.diagnostics != actual.diagnostics) findings.push_back("report diagnostics differ from recomputed");
}

}  // namespace

VerificationReport verify_certificate(const Fan& f, const CoverCertificate& cert) {
  VerificationReport out;
  auto& findings = out.findings;

  if (cert.format_version != kCertificateFormatVersion)
    findings.push_back("unsupported format_version " + std::to_string(cert.format_version));
  if (cert.digest_algorithm != kDigestAlgorithm)
    findings.push_back("unsupported digest algorithm " + cert.digest_algorithm);
  else if (cert.fan_digest != fan_digest(f))
    findings.push_back("fan digest does not match the fan");
  if (cert.citations != kCitations) findings.push_back("citations differ from the expected results");

  const FanReport report = validate_fan(f);
  compare_reports(cert.report, report, findings);
  if (!report.valid) findings.push_back("hypothesis failed: fan is not valid");
  if (!report.smooth) findings.push_back("hypothesis failed: fan is not smooth");
  if (!report.nondegenerate)
    findings.push_back("hypothesis failed: fan is degenerate, torus_factor_rank = " +
                       std::to_string(report.torus_factor_rank));

  const std::size_t cones = f.max_cones().size();
  if (cert.charts.size() != cones)
    findings.push_back(std::to_string(cert.charts.size()) + " charts for " + std::to_string(cones) +
                       " maximal cones");
  std::vector<int> covered(cones, 0);
  for (std::size_t i = 0; i < cert.charts.size(); ++i) {
    const auto& chart = cert.charts[i];
    if (chart.cone_index >= cones) {
      findings.push_back("chart " + std::to_string(i) + " names maximal cone " + std::to_string(chart.cone_index) +
                         " out of range");
      continue;
    }
    if (++covered[chart.cone_index] > 1) {
      findings.push_back("maximal cone " + std::to_string(chart.cone_index) + " covered more than once");
      continue;
    }
    try {
      ChartChecker(f, chart, i, findings).run();
    } catch (const Error& e) {
      findings.push_back("chart " + std::to_string(i) + ": " + e.what());
    }
  }
  for (std::size_t c = 0; c < cones; ++c)
    if (covered[c] == 0) findings.push_back("maximal cone " + std::to_string(c) + " uncovered");

  const bool all_affine = std::all_of(cert.charts.begin(), cert.charts.end(),
                                      [](const ChartCertificate& c) { return c.kind == ChartKind::AffineSpace; });
  if (cert.a_covered != all_affine)
    findings.push_back(std::string("a_covered recorded ") + (cert.a_covered ? "true" : "false") +
                       " but charts say " + (all_affine ? "true" : "false"));

  out.passed = findings.empty();
  return out;
}

}  // namespace toricflex

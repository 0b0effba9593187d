#pragma once

// Flexible charts for smooth nondegenerate toric varieties.
//
// Every maximal cone C of a smooth fan gives an affine chart. When C is
// n-dimensional the chart is C^n. Otherwise C is padded with further rays of
// the fan to an n-dimensional simplicial cone C'; the subfan F' made of C's
// faces and the added rays defines an open set V that is the complement, in
// the affine toric variety Z = C^n / G of C', of the orbits of faces of C' not
// in F'. Because every ray of C' is in F', those orbits have codimension at
// least two. A certificate records this data so that it can be re-checked
// against the fan without trusting the builder.

#include <cstddef>
#include <string>
#include <vector>

#include "toricflex/cone_geometry.hpp"
#include "toricflex/fan.hpp"

namespace toricflex {

inline constexpr int kCertificateFormatVersion = 1;
inline constexpr const char* kDigestAlgorithm = "sha256";

/// Results the certificate relies on. Their hypotheses are what gets checked;
/// their conclusions are cited.
extern const std::vector<std::string> kCitations;

enum class ChartKind { AffineSpace, FlexibleComplement };

std::string to_string(ChartKind kind);

struct ComplementFace {
  Cone face;
  std::size_t codim;

  friend bool operator==(const ComplementFace&, const ComplementFace&) = default;
};

struct ChartCertificate {
  std::size_t cone_index = 0;
  ChartKind kind = ChartKind::AffineSpace;
  std::size_t k = 0;
  std::size_t n = 0;
  std::vector<std::size_t> added_ray_indices;
  std::vector<std::size_t> cprime_ray_indices;
  QuotientGroup quotient;
  std::vector<ComplementFace> complement_faces;
  /// n + 1 when complement_faces is empty.
  std::size_t min_complement_codim = 0;

  friend bool operator==(const ChartCertificate&, const ChartCertificate&) = default;
};

struct CoverCertificate {
  int format_version = kCertificateFormatVersion;
  std::string digest_algorithm = kDigestAlgorithm;
  std::string fan_digest;
  std::vector<std::string> citations;
  FanReport report;
  std::vector<ChartCertificate> charts;
  bool a_covered = false;

  friend bool operator==(const CoverCertificate&, const CoverCertificate&) = default;
};

struct VerificationReport {
  bool passed = false;
  std::vector<std::string> findings;
};

/// Chart for one maximal cone. Added rays are chosen greedily in canonical
/// (lexicographic) ray order, keeping each ray that is independent of those
/// already chosen. Throws BadIndex, NotSmooth or Degenerate.
ChartCertificate build_chart(const Fan& f, std::size_t cone_index);

/// Checks validity, smoothness and nondegeneracy, then builds one chart per
/// maximal cone in index order. Throws InvalidFan, NotSmooth or Degenerate.
CoverCertificate build_cover(const Fan& f);

/// Re-derives every recorded claim from the fan predicates and cone geometry
/// alone. Never throws on a bad certificate; each defect is a finding.
VerificationReport verify_certificate(const Fan& f, const CoverCertificate& cert);

}  // namespace toricflex

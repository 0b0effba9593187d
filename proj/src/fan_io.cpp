#include "toricflex/fan_io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>

#include "toricflex/errors.hpp"

namespace toricflex {

namespace {

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Integer integer_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      throw Error(ErrorKind::Parse, std::string(what) + ": '" + j.get<std::string>() + "' is not an integer");
    return v;
  }
  throw Error(ErrorKind::Parse, std::string(what) + ": expected an integer");
}

std::size_t index_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw Error(ErrorKind::Parse, std::string(what) + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, std::string("expected an object holding '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) throw Error(ErrorKind::Parse, std::string("missing field '") + name + "'");
  return *it;
}

const Json& array_field(const Json& j, const char* name) {
  const Json& a = field(j, name);
  if (!a.is_array()) throw Error(ErrorKind::Parse, std::string("field '") + name + "' must be an array");
  return a;
}

bool bool_field(const Json& j, const char* name) {
  const Json& b = field(j, name);
  if (!b.is_boolean()) throw Error(ErrorKind::Parse, std::string("field '") + name + "' must be a boolean");
  return b.get<bool>();
}

std::string string_field(const Json& j, const char* name) {
  const Json& s = field(j, name);
  if (!s.is_string()) throw Error(ErrorKind::Parse, std::string("field '") + name + "' must be a string");
  return s.get<std::string>();
}

std::vector<std::size_t> index_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, std::string(what) + ": expected an array");
  std::vector<std::size_t> out;
  for (const auto& e : j) out.push_back(index_from_json(e, what));
  return out;
}

Json index_list_to_json(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto i : v) a.push_back(i);
  return a;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, std::string(what) + ": expected an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(ErrorKind::Parse, std::string(what) + ": expected strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

}  // namespace

Json fan_to_json(const Fan& f) {
  Json rays = Json::array();
  for (const auto& r : f.rays()) {
    Json v = Json::array();
    for (const auto& e : r) v.push_back(integer_to_json(e));
    rays.push_back(std::move(v));
  }
  Json cones = Json::array();
  for (const auto& c : f.max_cones()) cones.push_back(index_list_to_json(c.ray_indices()));
  Json j;
  j["rank"] = f.ambient_rank();
  j["rays"] = std::move(rays);
  j["max_cones"] = std::move(cones);
  return j;
}

Fan fan_from_json(const Json& j) {
  const std::size_t rank = index_from_json(field(j, "rank"), "rank");
  std::vector<Ray> rays;
  for (const auto& r : array_field(j, "rays")) {
    if (!r.is_array()) throw Error(ErrorKind::Parse, "each ray must be an array of integers");
    Ray v;
    for (const auto& e : r) v.push_back(integer_from_json(e, "ray entry"));
    rays.push_back(std::move(v));
  }
  std::vector<Cone> cones;
  for (const auto& c : array_field(j, "max_cones")) cones.emplace_back(index_list(c, "max_cones entry"));
  return Fan(rank, std::move(rays), std::move(cones));
}

std::string serialize_fan(const Fan& f) { return fan_to_json(f).dump(2) + "\n"; }

Fan parse_fan(std::string_view text) { return fan_from_json(parse_json(text)); }

std::string fan_digest(const Fan& f) {
  const std::string bytes = fan_to_json(canonical_form(f)).dump();
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

Json report_to_json(const FanReport& r) {
  Json j;
  j["valid"] = r.valid;
  j["smooth"] = r.smooth;
  j["simplicial"] = r.simplicial;
  j["nondegenerate"] = r.nondegenerate;
  j["complete"] = r.complete;
  j["torus_factor_rank"] = r.torus_factor_rank;
  j["diagnostics"] = r.diagnostics;
  return j;
}

Json certificate_to_json(const CoverCertificate& c) {
  Json charts = Json::array();
  for (const auto& ch : c.charts) {
    Json factors = Json::array();
    for (const auto& d : ch.quotient.invariant_factors) factors.push_back(integer_to_json(d));
    Json faces = Json::array();
    for (const auto& cf : ch.complement_faces) {
      Json face;
      face["face"] = index_list_to_json(cf.face.ray_indices());
      face["codim"] = cf.codim;
      faces.push_back(std::move(face));
    }
    Json j;
    j["cone_index"] = ch.cone_index;
    j["kind"] = to_string(ch.kind);
    j["k"] = ch.k;
    j["n"] = ch.n;
    j["added_ray_indices"] = index_list_to_json(ch.added_ray_indices);
    j["cprime_ray_indices"] = index_list_to_json(ch.cprime_ray_indices);
    j["quotient"]["invariant_factors"] = std::move(factors);
    j["quotient"]["order"] = integer_to_json(ch.quotient.order);
    j["complement_faces"] = std::move(faces);
    j["min_complement_codim"] = ch.min_complement_codim;
    charts.push_back(std::move(j));
  }
  Json j;
  j["format_version"] = c.format_version;
  j["digest_algorithm"] = c.digest_algorithm;
  j["fan_digest"] = c.fan_digest;
  j["citations"] = c.citations;
  j["report"] = report_to_json(c.report);
  j["a_covered"] = c.a_covered;
  j["charts"] = std::move(charts);
  return j;
}

CoverCertificate certificate_from_json(const Json& j) {
  CoverCertificate c;
  const Json& version = field(j, "format_version");
  if (!version.is_number_integer()) throw Error(ErrorKind::Parse, "format_version must be an integer");
  c.format_version = version.get<int>();
  c.digest_algorithm = string_field(j, "digest_algorithm");
  c.fan_digest = string_field(j, "fan_digest");
  c.citations = string_list(field(j, "citations"), "citations");

  const Json& r = field(j, "report");
  c.report.valid = bool_field(r, "valid");
  c.report.smooth = bool_field(r, "smooth");
  c.report.simplicial = bool_field(r, "simplicial");
  c.report.nondegenerate = bool_field(r, "nondegenerate");
  c.report.complete = bool_field(r, "complete");
  c.report.torus_factor_rank = index_from_json(field(r, "torus_factor_rank"), "torus_factor_rank");
  c.report.diagnostics = string_list(field(r, "diagnostics"), "diagnostics");
  c.a_covered = bool_field(j, "a_covered");

  for (const auto& ch : array_field(j, "charts")) {
    ChartCertificate chart;
    chart.cone_index = index_from_json(field(ch, "cone_index"), "cone_index");
    const std::string kind = string_field(ch, "kind");
    if (kind == "AffineSpace")
      chart.kind = ChartKind::AffineSpace;
    else if (kind == "FlexibleComplement")
      chart.kind = ChartKind::FlexibleComplement;
    else
      throw Error(ErrorKind::Parse, "unknown chart kind '" + kind + "'");
    chart.k = index_from_json(field(ch, "k"), "k");
    chart.n = index_from_json(field(ch, "n"), "n");
    chart.added_ray_indices = index_list(field(ch, "added_ray_indices"), "added_ray_indices");
    chart.cprime_ray_indices = index_list(field(ch, "cprime_ray_indices"), "cprime_ray_indices");
    const Json& q = field(ch, "quotient");
    for (const auto& d : array_field(q, "invariant_factors"))
      chart.quotient.invariant_factors.push_back(integer_from_json(d, "invariant factor"));
    chart.quotient.order = integer_from_json(field(q, "order"), "order");
    for (const auto& cf : array_field(ch, "complement_faces")) {
      std::vector<std::size_t> idx = index_list(field(cf, "face"), "complement face");
      std::sort(idx.begin(), idx.end());
      if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        throw Error(ErrorKind::Parse, "complement face with a repeated ray index");
      chart.complement_faces.push_back({Cone(std::move(idx)), index_from_json(field(cf, "codim"), "codim")});
    }
    chart.min_complement_codim = index_from_json(field(ch, "min_complement_codim"), "min_complement_codim");
    c.charts.push_back(std::move(chart));
  }
  return c;
}

std::string serialize_certificate(const CoverCertificate& c) { return certificate_to_json(c).dump(2) + "\n"; }

CoverCertificate parse_certificate(std::string_view text) { return certificate_from_json(parse_json(text)); }

}  // namespace toricflex

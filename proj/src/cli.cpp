#include "toricflex/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "toricflex/cone_geometry.hpp"
#include "toricflex/errors.hpp"
#include "toricflex/fan.hpp"
#include "toricflex/fan_io.hpp"
#include "toricflex/flex_cover.hpp"

namespace toricflex::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read " + path);
  buf << file.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, std::ostream& out, const std::string& text) {
  if (path == "-") {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
  if (!file) throw UsageError("failed writing " + path);
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
    case ErrorKind::BadParameter:
      return kUsage;
    case ErrorKind::NotSmooth:
    case ErrorKind::Degenerate:
      return kHypothesisFailed;
    default:
      return kInvalidFan;
  }
}

std::string summary(const FanReport& r) {
  std::string s = r.valid ? "valid" : "invalid";
  s += r.smooth ? ", smooth" : ", not smooth";
  s += r.nondegenerate ? ", nondegenerate"
                       : ", degenerate (torus_factor_rank = " + std::to_string(r.torus_factor_rank) + ")";
  s += r.complete ? ", complete" : ", not complete";
  return s;
}

Cone parse_cone(const std::string& text) {
  std::vector<std::size_t> idx;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad cone '" + text + "': expected comma-separated ray indices");
    }
    if (used != item.size() || item.find('-') != std::string::npos)
      throw UsageError("bad cone '" + text + "': expected comma-separated ray indices");
    idx.push_back(v);
  }
  return Cone(std::move(idx));
}

std::size_t param_as_size(long p) {
  if (p < 0) throw UsageError("parameter must be nonnegative, got " + std::to_string(p));
  return static_cast<std::size_t>(p);
}

Fan example_fan(const std::string& name, const std::vector<long>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw UsageError("example '" + name + "' takes " + std::to_string(count) + " --param value(s)");
  };
  if (name == "affine") {
    need(1);
    return fan_affine_space(param_as_size(params[0]));
  }
  if (name == "projective") {
    need(1);
    return fan_projective_space(param_as_size(params[0]));
  }
  if (name == "hirzebruch") {
    need(1);
    return fan_hirzebruch(params[0]);
  }
  if (name == "punctured") {
    need(1);
    return fan_punctured_affine(param_as_size(params[0]));
  }
  if (name == "product") {
    // Product of projective spaces of the given dimensions.
    if (params.size() < 2) throw UsageError("example 'product' takes at least two --param values");
    Fan f = fan_projective_space(param_as_size(params[0]));
    for (std::size_t i = 1; i < params.size(); ++i) f = fan_product(f, fan_projective_space(param_as_size(params[i])));
    return f;
  }
  throw UsageError("unknown example '" + name + "' (affine, projective, hirzebruch, product, punctured)");
}

int cmd_validate(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const Fan f = parse_fan(read_text(cfg.input, in));
  const FanReport r = validate_fan(f);
  write_text(cfg.output, out, summary(r) + "\n");
  if (!r.valid || cfg.verbose)
    for (const auto& d : r.diagnostics) err << d << '\n';
  return r.valid ? kOk : kInvalidFan;
}

int cmd_analyze(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const Fan f = parse_fan(read_text(cfg.input, in));
  const FanReport r = validate_fan(f);
  Json doc;
  doc["report"] = report_to_json(r);
  Json cones = Json::array();
  for (std::size_t i = 0; i < f.max_cones().size(); ++i) {
    const Cone& c = f.max_cones()[i];
    Json entry;
    entry["index"] = i;
    entry["rays"] = c.ray_indices();
    entry["dim"] = cone_dim(f, c);
    entry["smooth"] = is_smooth_cone(f, c);
    if (c.size() == f.ambient_rank()) {
      const QuotientGroup g = quotient_group(f, c);
      Json factors = Json::array();
      for (const auto& d : g.invariant_factors) factors.push_back(d.get_str());
      entry["quotient_invariant_factors"] = std::move(factors);
      entry["quotient_order"] = g.order.get_str();
    }
    cones.push_back(std::move(entry));
  }
  doc["cones"] = std::move(cones);
  write_text(cfg.output, out, doc.dump(2) + "\n");
  if (cfg.verbose)
    for (const auto& d : r.diagnostics) err << d << '\n';
  return r.valid ? kOk : kInvalidFan;
}

int cmd_cover(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const Fan f = parse_fan(read_text(cfg.input, in));
  const CoverCertificate cert = build_cover(f);
  write_text(cfg.output, out, serialize_certificate(cert));
  if (cfg.verbose)
    err << cert.charts.size() << " charts, a_covered = " << (cert.a_covered ? "true" : "false") << '\n';
  return kOk;
}

int cmd_verify(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  if (cfg.input == "-" && cfg.certificate == "-") throw UsageError("fan and certificate cannot both be stdin");
  const Fan f = parse_fan(read_text(cfg.input, in));
  const CoverCertificate cert = parse_certificate(read_text(cfg.certificate, in));
  const VerificationReport v = verify_certificate(f, cert);
  Json doc;
  doc["passed"] = v.passed;
  doc["findings"] = v.findings;
  write_text(cfg.output, out, doc.dump(2) + "\n");
  for (const auto& finding : v.findings) err << finding << '\n';
  return v.passed ? kOk : kVerificationFailed;
}

int cmd_example(const CliConfig& cfg, std::ostream& out) {
  write_text(cfg.output, out, serialize_fan(canonical_form(example_fan(cfg.name, cfg.params))));
  return kOk;
}

int cmd_subdivide(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const Fan f = parse_fan(read_text(cfg.input, in));
  write_text(cfg.output, out, serialize_fan(canonical_form(star_subdivision(f, parse_cone(cfg.cone)))));
  return kOk;
}

}  // namespace

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Validate: return cmd_validate(config, in, out, err);
      case Command::Analyze: return cmd_analyze(config, in, out, err);
      case Command::Cover: return cmd_cover(config, in, out, err);
      case Command::Verify: return cmd_verify(config, in, out, err);
      case Command::Example: return cmd_example(config, out);
      case Command::Subdivide: return cmd_subdivide(config, in, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kUsage;
}

int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificates of local flexibility for smooth toric varieties", "toricflex"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto io = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("--input,-i", cfg.input, "Fan file, - for stdin")->capture_default_str();
    sub->add_option("--output,-o", cfg.output, "Output file, - for stdout")->capture_default_str();
    sub->add_flag("--verbose,-v", cfg.verbose, "Print diagnostics to stderr");
  };

  auto* validate = app.add_subcommand("validate", "Check the fan axioms and print a summary");
  io(validate, true);
  auto* analyze = app.add_subcommand("analyze", "Print the fan report and per-cone data as JSON");
  io(analyze, true);
  auto* cover = app.add_subcommand("cover", "Build a cover certificate");
  io(cover, true);
  auto* verify = app.add_subcommand("verify", "Check a cover certificate against its fan");
  io(verify, true);
  verify->add_option("--certificate,-c", cfg.certificate, "Certificate file, - for stdin")->required();
  auto* example = app.add_subcommand("example", "Write a standard fan");
  io(example, false);
  example->add_option("--name", cfg.name, "affine | projective | hirzebruch | product | punctured")->required();
  example->add_option("--param", cfg.params, "Integer parameter (repeatable)");
  auto* subdivide = app.add_subcommand("subdivide", "Star-subdivide a fan at a cone");
  io(subdivide, true);
  subdivide->add_option("--cone", cfg.cone, "Comma-separated ray indices, e.g. 0,1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (validate->parsed()) cfg.command = Command::Validate;
  if (analyze->parsed()) cfg.command = Command::Analyze;
  if (cover->parsed()) cfg.command = Command::Cover;
  if (verify->parsed()) cfg.command = Command::Verify;
  if (example->parsed()) cfg.command = Command::Example;
  if (subdivide->parsed()) cfg.command = Command::Subdivide;
  return run(cfg, in, out, err);
}

}  // namespace toricflex::cli

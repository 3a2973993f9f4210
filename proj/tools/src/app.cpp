#include "gframe/cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include <gframe/cframe.hpp>
#include <gframe/certificate.hpp>
#include <gframe/decomposition.hpp>
#include <gframe/errors.hpp>
#include <gframe/factorization.hpp>
#include <gframe/generators.hpp>

#include "gframe/cli/io.hpp"

namespace gframe::cli {
namespace {

namespace fs = std::filesystem;

/// Bad option value discovered after CLI11 parsing; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  double tol = kDefaultTolerance;
  bool json = false;
  bool text = false;
  std::string out;

  std::string frame;
  std::string basis;
  std::string kind;
  std::string bases = "identity";

  std::string target;
  std::uint64_t seed = 0;
  std::size_t n = 2;
  std::vector<std::size_t> dims;
  std::vector<double> weights;
  std::optional<double> lower;
  std::optional<double> upper;
};

struct LoadedFrame {
  GFrameFamily family;
  std::string digest;
};

LoadedFrame load_frame(const std::string& path) {
  const std::string bytes = read_text(path);
  return {frame_from_json(parse_json(bytes, path), path), content_digest(bytes)};
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string complex_text(Complex z) {
  if (z.imag() == 0.0) return num(z.real());
  return num(z.real()) + (z.imag() < 0 ? " - " : " + ") + num(std::abs(z.imag())) + "i";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void emit(const Options& opt, std::ostream& out, const std::string& body) {
  if (opt.out.empty()) {
    out << body;
  } else {
    write_text(opt.out, body);
  }
}

void certificate_text(std::ostream& os, const FrameCertificate& c) {
  os << "  dimensions          n = " << c.ambient_dim << ", D = " << c.coefficient_dim << ", rank " << c.rank << "\n"
     << "  bounds              A = " << num(c.lower_bound) << ", B = " << num(c.upper_bound) << "\n"
     << "  synthesis sigma     min " << num(c.sigma_min) << ", max " << num(c.sigma_max) << "\n"
     << "  bessel              " << yes_no(c.is_bessel) << "\n"
     << "  frame               " << yes_no(c.is_frame) << "\n"
     << "  tight               " << yes_no(c.is_tight) << "\n"
     << "  parseval            " << yes_no(c.is_parseval) << "\n"
     << "  complete            " << yes_no(c.is_complete) << "\n"
     << "  riesz basis         " << yes_no(c.is_riesz_basis) << "\n"
     << "  orthonormal system  " << yes_no(c.is_orthonormal_system) << "\n"
     << "  orthonormal basis   " << yes_no(c.is_orthonormal_basis) << "\n"
     << "  defects\n";
  for (const auto& [key, value] : c.defects) {
    os << "    " << key << std::string(std::max<std::size_t>(1, 22 - key.size()), ' ') << sci(value) << "\n";
  }
}

int cmd_certify(const Options& opt, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const LoadedFrame in = load_frame(opt.frame);
  CertificateFile file;
  file.tool_version = tool_version();
  file.input_digest = in.digest;
  file.tolerance = opt.tol;
  file.certificate = certify(in.family, opt.tol);
  file.agreement = summarize(equivalence_report(in.family, LocalBases::identity(in.family.dims()), opt.tol));
  file.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::ostringstream os;
  if (opt.json) {
    os << certificate_file_to_json(file).dump(2) << "\n";
  } else {
    os << "certificate for " << opt.frame << "\n"
       << "  input               " << file.input_digest << "\n"
       << "  tolerance           " << sci(opt.tol) << "\n";
    certificate_text(os, file.certificate);
    os << "  c-frame agreement   " << yes_no(file.agreement.all) << " (operator diff " << sci(file.agreement.operator_diff)
       << ")\n"
       << "  time                " << num(file.timing_ms) << " ms\n";
  }
  emit(opt, out, os.str());
  return kExitOk;
}

int cmd_factorize(const Options& opt, std::ostream& out) {
  const LoadedFrame frame = load_frame(opt.frame);
  const LoadedFrame basis = load_frame(opt.basis);
  const TransitionReport report = transition_operator(frame.family, basis.family, opt.tol);
  std::ostringstream os;
  if (opt.json) {
    const Json j = {{"tool_version", tool_version()},
                    {"input_digest", frame.digest},
                    {"basis_digest", basis.digest},
                    {"tolerance", opt.tol},
                    {"transition", transition_to_json(report)}};
    os << j.dump(2) << "\n";
  } else {
    const auto& c = report.classification;
    os << "transition operator V for " << opt.frame << " against " << opt.basis << "\n";
    for (Eigen::Index r = 0; r < report.v.rows(); ++r) {
      os << "  [";
      for (Eigen::Index k = 0; k < report.v.cols(); ++k) os << (k ? ", " : " ") << complex_text(report.v(r, k));
      os << " ]\n";
    }
    os << "  residual            " << sci(report.residual) << "\n"
       << "  singular values     min " << num(c.sigma_min) << ", max " << num(c.sigma_max) << "\n"
       << "  isometry            " << yes_no(c.is_isometry) << " (defect " << sci(c.isometry_defect) << ")\n"
       << "  unitary             " << yes_no(c.is_unitary) << " (defect " << sci(c.coisometry_defect) << ")\n"
       << "  injective           " << yes_no(c.is_injective) << "\n"
       << "  invertible          " << yes_no(c.is_invertible) << "\n";
  }
  emit(opt, out, os.str());
  return kExitOk;
}

bool recertifies(const GFrameFamily& part, DeclaredClass declared, double tol) {
  const FrameCertificate c = certify(part, tol);
  switch (declared) {
    case DeclaredClass::kParseval: return c.is_parseval;
    case DeclaredClass::kOrthonormalBasis: return c.is_orthonormal_basis;
    case DeclaredClass::kRieszBasis: return c.is_riesz_basis;
  }
  return false;
}

int cmd_split(const Options& opt, std::ostream& out) {
  const SplitKind kind = parse_split_kind(opt.kind);
  const LoadedFrame frame = load_frame(opt.frame);
  const LoadedFrame basis = load_frame(opt.basis);
  const FrameSplit s = split(kind, frame.family, basis.family, opt.tol);

  const fs::path dir = opt.out.empty() ? fs::path("split") : fs::path(opt.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw FormatError(dir.string() + ": cannot create directory: " + ec.message());

  SplitManifest m;
  m.tool_version = tool_version();
  m.kind = std::string(split_kind_name(kind));
  m.input_digest = frame.digest;
  m.basis_digest = basis.digest;
  m.tolerance = opt.tol;
  m.phase = s.phase;
  m.notes = s.notes;
  for (std::size_t k = 0; k < s.parts.size(); ++k) {
    const std::string name = "part_" + std::to_string(k) + ".json";
    write_frame_file(dir / name, s.parts[k]);
    m.parts.push_back({name, s.coefficients[k], s.declared[k], recertifies(s.parts[k], s.declared[k], opt.tol)});
  }
  const Json manifest = manifest_to_json(m);
  write_text(dir / "manifest.json", manifest.dump(2) + "\n");

  if (opt.json) {
    out << manifest.dump(2) << "\n";
  } else {
    out << "split " << m.kind << " of " << opt.frame << " into " << dir.string() << "\n";
    for (const auto& p : m.parts) {
      out << "  " << p.file << "  coefficient " << complex_text(p.coefficient) << "  " << declared_class_name(p.declared)
          << (p.recertified ? "  recertified" : "  NOT recertified") << "\n";
    }
    if (m.phase) out << "  phase               " << num(*m.phase) << "\n";
    for (const auto& note : m.notes) out << "  note: " << note << "\n";
  }
  return kExitOk;
}

LocalBases parse_bases(const std::string& spec, const LocalDims& dims) {
  if (spec == "identity") return LocalBases::identity(dims);
  const std::string prefix = "random:";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string digits = spec.substr(prefix.size());
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      try {
        return random_local_bases(std::stoull(digits), dims);
      } catch (const std::out_of_range&) {
      }
    }
  }
  throw UsageError("--bases: expected identity or random:SEED, got '" + spec + "'");
}

int cmd_induce(const Options& opt, std::ostream& out) {
  const LoadedFrame frame = load_frame(opt.frame);
  const LocalBases bases = parse_bases(opt.bases, frame.family.dims());
  const CFrame cframe = induce(frame.family, bases, opt.tol);
  const EquivalenceReport report = equivalence_report(frame.family, bases, opt.tol);
  if (!opt.out.empty()) write_text(opt.out, cframe_to_json(cframe).dump(2) + "\n");

  if (opt.json) {
    const Json j = {{"tool_version", tool_version()},
                    {"input_digest", frame.digest},
                    {"tolerance", opt.tol},
                    {"items", cframe.size()},
                    {"g_side", certificate_to_json(report.g_side)},
                    {"c_side", certificate_to_json(report.c_side)},
                    {"agreement", agreement_to_json(summarize(report))}};
    out << j.dump(2) << "\n";
  } else {
    out << "induced c-frame of " << opt.frame << " (" << cframe.size() << " vectors, bases " << opt.bases << ")\n"
        << "  g-side bounds       A = " << num(report.g_side.lower_bound) << ", B = " << num(report.g_side.upper_bound)
        << "\n"
        << "  c-side bounds       A = " << num(report.c_side.lower_bound) << ", B = " << num(report.c_side.upper_bound)
        << "\n"
        << "  operator diff       " << sci(report.operator_diff) << "\n"
        << "  flags agree         " << yes_no(report.flags_agree()) << "\n"
        << "  pointwise defect    " << sci(report.c_side.defects.at("pointwise_orthonormal")) << "\n";
    if (!opt.out.empty()) out << "  written to          " << opt.out << "\n";
  }
  return report.all_agree() ? kExitOk : kExitEquivalenceMismatch;
}

int cmd_generate(const Options& opt, std::ostream& out) {
  GeneratorSpec spec;
  try {
    spec.target = parse_target_class(opt.target);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--class: ") + e.what());
  }
  spec.seed = opt.seed;
  spec.ambient_dim = opt.n;
  spec.dims = opt.dims.empty() ? std::vector<std::size_t>(opt.n, 1) : opt.dims;
  spec.weights = opt.weights;
  if (spec.target == TargetClass::kTight) {
    if (opt.lower && opt.upper && *opt.lower != *opt.upper) {
      throw Error(Errc::kInvalidBounds, "tight class takes a single bound (A == B)");
    }
    spec.lower = spec.upper = opt.lower.value_or(opt.upper.value_or(1.0));
  } else {
    spec.lower = opt.lower.value_or(1.0);
    spec.upper = opt.upper.value_or(std::max(1.0, spec.lower));
  }
  if (!spec.weights.empty() && spec.weights.size() != spec.dims.size()) {
    throw Error(Errc::kShapeMismatch, "--weights has " + std::to_string(spec.weights.size()) + " entries, --dims has " +
                                          std::to_string(spec.dims.size()));
  }
  const GFrameFamily family = generate(spec);
  const std::string body = frame_to_json(family).dump(2) + "\n";
  if (opt.out.empty()) {
    out << body;
  } else {
    write_text(opt.out, body);
    if (!opt.json) {
      out << "generated " << target_class_name(spec.target) << " family (n = " << family.ambient_dim()
          << ", D = " << family.coefficient_dim() << ", seed " << spec.seed << ") into " << opt.out << "\n";
    }
  }
  return kExitOk;
}

int exit_for(const Error& e, bool split_command) {
  switch (e.code()) {
    case Errc::kNotOrthonormalBasis: return kExitBasisNotOnb;
    case Errc::kNotAFrame:
    case Errc::kNotRieszBasis:
    case Errc::kDegenerateSpectrumGrid:
      return split_command ? kExitSplitPrecondition : kExitInvalidInput;
    default: return kExitInvalidInput;
  }
}

}  // namespace

const char* tool_version() { return GFRAME_TOOL_VERSION; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Continuous g-frame toolkit: certify, factorize, split and flatten frame families.", "gframe"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1, 1);
  app.add_option("--tol", opt.tol, "Classification tolerance")->capture_default_str();
  auto* json = app.add_flag("--json", opt.json, "Machine-readable output");
  auto* text = app.add_flag("--text", opt.text, "Human-readable output (default)");
  json->excludes(text);
  app.add_option("--out", opt.out, "Output path (file, or directory for split)");

  auto* certify_cmd = app.add_subcommand("certify", "Classify a frame file");
  certify_cmd->add_option("frame", opt.frame, "Frame file")->required();

  auto* factorize_cmd = app.add_subcommand("factorize", "Transition operator against an orthonormal basis");
  factorize_cmd->add_option("frame", opt.frame, "Frame file")->required();
  factorize_cmd->add_option("basis", opt.basis, "Orthonormal basis file")->required();

  auto* split_cmd = app.add_subcommand("split", "Decompose a frame into structured parts");
  split_cmd->add_option("frame", opt.frame, "Frame file")->required();
  split_cmd->add_option("basis", opt.basis, "Orthonormal basis file")->required();
  split_cmd->add_option("--kind", opt.kind, "Decomposition kind")
      ->required()
      ->check(CLI::IsMember({"parseval-pair", "three-onb", "two-onb", "onb-riesz"}));

  auto* induce_cmd = app.add_subcommand("induce", "Flatten to a vector frame through local bases");
  induce_cmd->add_option("frame", opt.frame, "Frame file")->required();
  induce_cmd->add_option("--bases", opt.bases, "identity or random:SEED")->capture_default_str();

  auto* generate_cmd = app.add_subcommand("generate", "Write a seeded random family of a given class");
  generate_cmd->add_option("--class", opt.target, "onb, parseval, tight, frame, riesz or incomplete")->required();
  generate_cmd->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  generate_cmd->add_option("--n", opt.n, "Ambient dimension")->capture_default_str();
  generate_cmd->add_option("--dims", opt.dims, "Local dimensions, comma separated (default 1 per axis)")
      ->delimiter(',');
  generate_cmd->add_option("--weights", opt.weights, "Atom weights, comma separated (default 1)")->delimiter(',');
  generate_cmd->add_option("--A", opt.lower, "Lower frame bound");
  generate_cmd->add_option("--B", opt.upper, "Upper frame bound");

  for (auto* sub : {certify_cmd, factorize_cmd, split_cmd, induce_cmd, generate_cmd}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'gframe --help' for usage\n";
    return kExitUsage;
  }

  const bool is_split = split_cmd->parsed();
  try {
    require_tolerance(opt.tol);
    if (certify_cmd->parsed()) return cmd_certify(opt, out);
    if (factorize_cmd->parsed()) return cmd_factorize(opt, out);
    if (is_split) return cmd_split(opt, out);
    if (induce_cmd->parsed()) return cmd_induce(opt, out);
    return cmd_generate(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e, is_split);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace gframe::cli

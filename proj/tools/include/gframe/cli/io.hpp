#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <gframe/cframe.hpp>
#include <gframe/certificate.hpp>
#include <gframe/decomposition.hpp>
#include <gframe/factorization.hpp>
#include <gframe/family.hpp>

namespace gframe::cli {

using Json = nlohmann::json;

/// Malformed or inconsistent input file. The message carries the file name and
/// either the line/column of a syntax error or the path of the offending field,
/// e.g. "frame.json: atoms[1].block[0]: expected 3 entries, found 2".
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// "sha256:" followed by the lowercase hex digest of the bytes.
std::string content_digest(const std::string& bytes);

/// Parses text to JSON, turning syntax errors into FormatError with line context.
Json parse_json(const std::string& text, const std::string& source);

// Complex numbers are [re, im] pairs; matrices are lists of rows.
Json complex_to_json(Complex z);
Json matrix_to_json(const Matrix& m);
Json vector_to_json(const Vector& v);
Matrix matrix_from_json(const Json& j, const std::string& field);

/// {"ambient_dim": n, "atoms": [{"weight": w, "block": [[[re, im], ...], ...]}, ...]}
Json frame_to_json(const GFrameFamily& family);
GFrameFamily frame_from_json(const Json& j, const std::string& source);
GFrameFamily read_frame_file(const std::filesystem::path& path);
/// Numbers are written in shortest round-trip form, so reading back is bit-exact.
void write_frame_file(const std::filesystem::path& path, const GFrameFamily& family);

Json cframe_to_json(const CFrame& frame);
CFrame cframe_from_json(const Json& j, const std::string& source);

Json certificate_to_json(const FrameCertificate& cert);
FrameCertificate certificate_from_json(const Json& j, const std::string& source);

/// Cross-check of a certificate against the flattened family built from
/// identity local bases.
struct AgreementSummary {
  bool bessel = false;
  bool frame = false;
  bool tight = false;
  bool parseval = false;
  bool complete = false;
  bool riesz = false;
  bool orthonormal = false;
  bool all = false;
  double lower_bound_diff = 0.0;
  double upper_bound_diff = 0.0;
  double operator_diff = 0.0;
  friend bool operator==(const AgreementSummary&, const AgreementSummary&) = default;
};

AgreementSummary summarize(const EquivalenceReport& report);
Json agreement_to_json(const AgreementSummary& a);
AgreementSummary agreement_from_json(const Json& j, const std::string& source);

struct CertificateFile {
  std::string tool_version;
  std::string input_digest;
  double tolerance = kDefaultTolerance;
  double timing_ms = 0.0;
  FrameCertificate certificate;
  AgreementSummary agreement;
  friend bool operator==(const CertificateFile&, const CertificateFile&) = default;
};

Json certificate_file_to_json(const CertificateFile& file);
CertificateFile certificate_file_from_json(const Json& j, const std::string& source);

Json transition_to_json(const TransitionReport& report);

struct ManifestPart {
  std::string file;
  Complex coefficient;
  DeclaredClass declared = DeclaredClass::kParseval;
  bool recertified = false;
};

/// manifest.json written next to the part files of a split.
struct SplitManifest {
  std::string tool_version;
  std::string kind;
  std::string input_digest;
  std::string basis_digest;
  double tolerance = kDefaultTolerance;
  std::optional<double> phase;
  std::vector<ManifestPart> parts;
  std::vector<std::string> notes;
};

Json manifest_to_json(const SplitManifest& m);
SplitManifest manifest_from_json(const Json& j, const std::string& source);

/// Reads manifest.json in `dir` and rebuilds sum_k c_k * part_k.
GFrameFamily recombine(const std::filesystem::path& dir);

}  // namespace gframe::cli

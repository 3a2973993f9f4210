#include "gframe/cli/io.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include <gframe/errors.hpp>

namespace gframe::cli {
namespace {

[[noreturn]] void fail(const std::string& source, const std::string& field, const std::string& what) {
  throw FormatError(source + ": " + (field.empty() ? std::string() : field + ": ") + what);
}

const Json& member(const Json& j, const char* key, const std::string& source, const std::string& field) {
  if (!j.is_object()) fail(source, field, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(source, field, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string join(const std::string& field, const std::string& key) {
  return field.empty() ? key : field + "." + key;
}

double number(const Json& j, const std::string& source, const std::string& field) {
  if (!j.is_number()) fail(source, field, "expected a number");
  return j.get<double>();
}

std::size_t count(const Json& j, const std::string& source, const std::string& field) {
  if (!j.is_number_unsigned()) fail(source, field, "expected a non-negative integer");
  return j.get<std::size_t>();
}

bool boolean(const Json& j, const std::string& source, const std::string& field) {
  if (!j.is_boolean()) fail(source, field, "expected true or false");
  return j.get<bool>();
}

std::string text(const Json& j, const std::string& source, const std::string& field) {
  if (!j.is_string()) fail(source, field, "expected a string");
  return j.get<std::string>();
}

const Json& array(const Json& j, const std::string& source, const std::string& field) {
  if (!j.is_array()) fail(source, field, "expected a list");
  return j;
}

Complex complex_from(const Json& j, const std::string& source, const std::string& field) {
  if (!j.is_array() || j.size() != 2) fail(source, field, "expected a complex number as [re, im]");
  return {number(j[0], source, field + "[0]"), number(j[1], source, field + "[1]")};
}

Matrix matrix_from(const Json& j, const std::string& source, const std::string& field) {
  array(j, source, field);
  if (j.empty()) fail(source, field, "expected at least one row");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  Matrix m;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_field = field + "[" + std::to_string(r) + "]";
    const Json& row = array(j[r], source, row_field);
    if (r == 0) {
      cols = row.size();
      m.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    } else if (row.size() != cols) {
      fail(source, row_field, "expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_from(row[c], source, row_field + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

Vector vector_from(const Json& j, const std::string& source, const std::string& field) {
  array(j, source, field);
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = complex_from(j[i], source, field + "[" + std::to_string(i) + "]");
  }
  return v;
}

// Library validation errors point at atoms by index; keep that in the message.
[[noreturn]] void rethrow_validation(const Error& e, const std::string& source) {
  throw FormatError(source + ": " + e.what());
}

}  // namespace

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError(path.string() + ": cannot write file");
  out << text;
  if (!out) throw FormatError(path.string() + ": write failed");
}

std::string content_digest(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  std::ostringstream hex;
  hex << "sha256:" << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) hex << std::setw(2) << static_cast<int>(md[i]);
  return hex.str();
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // nlohmann reports "... at line L, column C: ..." in what().
    throw FormatError(source + ": " + e.what());
  }
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Matrix matrix_from_json(const Json& j, const std::string& field) { return matrix_from(j, "<json>", field); }

Json frame_to_json(const GFrameFamily& family) {
  Json atoms = Json::array();
  for (std::size_t k = 0; k < family.atom_count(); ++k) {
    atoms.push_back({{"weight", family.measure().weight(k)}, {"block", matrix_to_json(family.block(k))}});
  }
  return {{"ambient_dim", family.ambient_dim()}, {"atoms", std::move(atoms)}};
}

GFrameFamily frame_from_json(const Json& j, const std::string& source) {
  const std::size_t n = count(member(j, "ambient_dim", source, ""), source, "ambient_dim");
  if (n == 0) fail(source, "ambient_dim", "must be positive");
  const Json& atoms = array(member(j, "atoms", source, ""), source, "atoms");
  if (atoms.empty()) fail(source, "atoms", "expected at least one atom");
  std::vector<double> weights;
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const std::string field = "atoms[" + std::to_string(k) + "]";
    const double w = number(member(atoms[k], "weight", source, field), source, join(field, "weight"));
    if (!(w > 0.0) || !std::isfinite(w)) fail(source, join(field, "weight"), "weight must be positive and finite");
    Matrix block = matrix_from(member(atoms[k], "block", source, field), source, join(field, "block"));
    if (static_cast<std::size_t>(block.cols()) != n) {
      fail(source, join(field, "block") + "[0]",
           "expected " + std::to_string(n) + " entries, found " + std::to_string(block.cols()));
    }
    weights.push_back(w);
    blocks.push_back(std::move(block));
  }
  try {
    return GFrameFamily(n, MeasureSpace(std::move(weights)), std::move(blocks));
  } catch (const Error& e) {
    rethrow_validation(e, source);
  }
}

GFrameFamily read_frame_file(const std::filesystem::path& path) {
  const std::string source = path.string();
  return frame_from_json(parse_json(read_text(path), source), source);
}

void write_frame_file(const std::filesystem::path& path, const GFrameFamily& family) {
  write_text(path, frame_to_json(family).dump(2) + "\n");
}

Json cframe_to_json(const CFrame& frame) {
  Json items = Json::array();
  for (const auto& item : frame.items()) {
    Json j = {{"weight", item.weight}, {"vector", vector_to_json(item.vector)}};
    if (item.origin) j["origin"] = {{"atom", item.origin->atom}, {"local", item.origin->local}};
    items.push_back(std::move(j));
  }
  return {{"ambient_dim", frame.ambient_dim()}, {"items", std::move(items)}};
}

CFrame cframe_from_json(const Json& j, const std::string& source) {
  const std::size_t n = count(member(j, "ambient_dim", source, ""), source, "ambient_dim");
  const Json& items = array(member(j, "items", source, ""), source, "items");
  std::vector<CFrameItem> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string field = "items[" + std::to_string(i) + "]";
    CFrameItem item;
    item.weight = number(member(items[i], "weight", source, field), source, join(field, "weight"));
    item.vector = vector_from(member(items[i], "vector", source, field), source, join(field, "vector"));
    if (items[i].contains("origin")) {
      const Json& o = items[i]["origin"];
      const std::string of = join(field, "origin");
      item.origin = CFrameOrigin{count(member(o, "atom", source, of), source, join(of, "atom")),
                                 count(member(o, "local", source, of), source, join(of, "local"))};
    }
    out.push_back(std::move(item));
  }
  try {
    return CFrame(n, std::move(out));
  } catch (const Error& e) {
    rethrow_validation(e, source);
  }
}

Json certificate_to_json(const FrameCertificate& c) {
  return {
      {"ambient_dim", c.ambient_dim},
      {"coefficient_dim", c.coefficient_dim},
      {"lower_bound", c.lower_bound},
      {"upper_bound", c.upper_bound},
      {"rank", c.rank},
      {"sigma_min", c.sigma_min},
      {"sigma_max", c.sigma_max},
      {"is_bessel", c.is_bessel},
      {"is_frame", c.is_frame},
      {"is_tight", c.is_tight},
      {"is_parseval", c.is_parseval},
      {"is_complete", c.is_complete},
      {"is_riesz_basis", c.is_riesz_basis},
      {"is_orthonormal_system", c.is_orthonormal_system},
      {"is_orthonormal_basis", c.is_orthonormal_basis},
      {"defects", c.defects},
      {"tolerance", c.tolerance},
  };
}

FrameCertificate certificate_from_json(const Json& j, const std::string& source) {
  FrameCertificate c;
  auto num = [&](const char* key) { return number(member(j, key, source, ""), source, key); };
  auto cnt = [&](const char* key) { return count(member(j, key, source, ""), source, key); };
  auto flag = [&](const char* key) { return boolean(member(j, key, source, ""), source, key); };
  c.ambient_dim = cnt("ambient_dim");
  c.coefficient_dim = cnt("coefficient_dim");
  c.lower_bound = num("lower_bound");
  c.upper_bound = num("upper_bound");
  c.rank = cnt("rank");
  c.sigma_min = num("sigma_min");
  c.sigma_max = num("sigma_max");
  c.is_bessel = flag("is_bessel");
  c.is_frame = flag("is_frame");
  c.is_tight = flag("is_tight");
  c.is_parseval = flag("is_parseval");
  c.is_complete = flag("is_complete");
  c.is_riesz_basis = flag("is_riesz_basis");
  c.is_orthonormal_system = flag("is_orthonormal_system");
  c.is_orthonormal_basis = flag("is_orthonormal_basis");
  const Json& defects = member(j, "defects", source, "");
  if (!defects.is_object()) fail(source, "defects", "expected an object");
  for (const auto& [key, value] : defects.items()) c.defects[key] = number(value, source, "defects." + key);
  c.tolerance = num("tolerance");
  return c;
}

AgreementSummary summarize(const EquivalenceReport& r) {
  return {r.bessel_agrees,    r.frame_agrees,     r.tight_agrees,     r.parseval_agrees,
          r.complete_agrees,  r.riesz_agrees,     r.orthonormal_agrees, r.all_agree(),
          r.lower_bound_diff, r.upper_bound_diff, r.operator_diff};
}

Json agreement_to_json(const AgreementSummary& a) {
  return {{"bessel", a.bessel},
          {"frame", a.frame},
          {"tight", a.tight},
          {"parseval", a.parseval},
          {"complete", a.complete},
          {"riesz", a.riesz},
          {"orthonormal", a.orthonormal},
          {"all", a.all},
          {"lower_bound_diff", a.lower_bound_diff},
          {"upper_bound_diff", a.upper_bound_diff},
          {"operator_diff", a.operator_diff}};
}

AgreementSummary agreement_from_json(const Json& j, const std::string& source) {
  auto flag = [&](const char* key) { return boolean(member(j, key, source, "agreement"), source, key); };
  auto num = [&](const char* key) { return number(member(j, key, source, "agreement"), source, key); };
  return {flag("bessel"),   flag("frame"), flag("tight"),          flag("parseval"),
          flag("complete"), flag("riesz"), flag("orthonormal"),    flag("all"),
          num("lower_bound_diff"), num("upper_bound_diff"), num("operator_diff")};
}

Json certificate_file_to_json(const CertificateFile& f) {
  return {{"tool_version", f.tool_version},
          {"input_digest", f.input_digest},
          {"tolerance", f.tolerance},
          {"timing_ms", f.timing_ms},
          {"certificate", certificate_to_json(f.certificate)},
          {"agreement", agreement_to_json(f.agreement)}};
}

CertificateFile certificate_file_from_json(const Json& j, const std::string& source) {
  CertificateFile f;
  f.tool_version = text(member(j, "tool_version", source, ""), source, "tool_version");
  f.input_digest = text(member(j, "input_digest", source, ""), source, "input_digest");
  f.tolerance = number(member(j, "tolerance", source, ""), source, "tolerance");
  f.timing_ms = number(member(j, "timing_ms", source, ""), source, "timing_ms");
  f.certificate = certificate_from_json(member(j, "certificate", source, ""), source);
  f.agreement = agreement_from_json(member(j, "agreement", source, ""), source);
  return f;
}

Json transition_to_json(const TransitionReport& r) {
  const auto& c = r.classification;
  return {{"v", matrix_to_json(r.v)},
          {"residual", r.residual},
          {"classification",
           {{"sigma_min", c.sigma_min},
            {"sigma_max", c.sigma_max},
            {"lower_gram", c.lower_gram},
            {"upper_gram", c.upper_gram},
            {"isometry_defect", c.isometry_defect},
            {"coisometry_defect", c.coisometry_defect},
            {"is_isometry", c.is_isometry},
            {"is_unitary", c.is_unitary},
            {"is_injective", c.is_injective},
            {"is_invertible", c.is_invertible}}}};
}

Json manifest_to_json(const SplitManifest& m) {
  Json parts = Json::array();
  for (const auto& p : m.parts) {
    parts.push_back({{"file", p.file},
                     {"coefficient", complex_to_json(p.coefficient)},
                     {"declared", std::string(declared_class_name(p.declared))},
                     {"recertified", p.recertified}});
  }
  Json j = {{"tool_version", m.tool_version},
            {"kind", m.kind},
            {"input_digest", m.input_digest},
            {"basis_digest", m.basis_digest},
            {"tolerance", m.tolerance},
            {"phase", m.phase ? Json(*m.phase) : Json(nullptr)},
            {"parts", std::move(parts)},
            {"notes", m.notes}};
  return j;
}

SplitManifest manifest_from_json(const Json& j, const std::string& source) {
  SplitManifest m;
  m.tool_version = text(member(j, "tool_version", source, ""), source, "tool_version");
  m.kind = text(member(j, "kind", source, ""), source, "kind");
  m.input_digest = text(member(j, "input_digest", source, ""), source, "input_digest");
  m.basis_digest = text(member(j, "basis_digest", source, ""), source, "basis_digest");
  m.tolerance = number(member(j, "tolerance", source, ""), source, "tolerance");
  const Json& phase = member(j, "phase", source, "");
  if (!phase.is_null()) m.phase = number(phase, source, "phase");
  const Json& parts = array(member(j, "parts", source, ""), source, "parts");
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const std::string field = "parts[" + std::to_string(k) + "]";
    ManifestPart p;
    p.file = text(member(parts[k], "file", source, field), source, join(field, "file"));
    p.coefficient = complex_from(member(parts[k], "coefficient", source, field), source, join(field, "coefficient"));
    const std::string declared = text(member(parts[k], "declared", source, field), source, join(field, "declared"));
    bool known = false;
    for (DeclaredClass c : {DeclaredClass::kParseval, DeclaredClass::kOrthonormalBasis, DeclaredClass::kRieszBasis}) {
      if (declared_class_name(c) == declared) {
        p.declared = c;
        known = true;
      }
    }
    if (!known) fail(source, join(field, "declared"), "unknown class \"" + declared + "\"");
    p.recertified = boolean(member(parts[k], "recertified", source, field), source, join(field, "recertified"));
    m.parts.push_back(std::move(p));
  }
  for (const auto& note : array(member(j, "notes", source, ""), source, "notes")) {
    m.notes.push_back(text(note, source, "notes"));
  }
  return m;
}

GFrameFamily recombine(const std::filesystem::path& dir) {
  const auto manifest_path = dir / "manifest.json";
  const SplitManifest m =
      manifest_from_json(parse_json(read_text(manifest_path), manifest_path.string()), manifest_path.string());
  if (m.parts.empty()) throw FormatError(manifest_path.string() + ": parts: expected at least one part");
  std::vector<Complex> coefficients;
  std::vector<GFrameFamily> parts;
  for (const auto& p : m.parts) {
    coefficients.push_back(p.coefficient);
    parts.push_back(read_frame_file(dir / p.file));
  }
  try {
    return linear_combination(coefficients, parts);
  } catch (const Error& e) {
    rethrow_validation(e, manifest_path.string());
  }
}

}  // namespace gframe::cli

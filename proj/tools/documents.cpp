#include "documents.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "l2a/error.hpp"

namespace l2a::cli {

using nlohmann::json;

namespace {

Error parse_error(const std::string& what) { return Error(ErrorCode::Parse, what); }
Error shape_error(const std::string& what) { return Error(ErrorCode::DimensionMismatch, what); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

void check_header(const json& j, std::string_view kind) {
  if (!j.is_object()) throw parse_error("document must be a JSON object");
  if (!j.contains("format_version") || j["format_version"] != std::string(kFormatVersion))
    throw parse_error("unsupported or missing format_version (expected \"" + std::string(kFormatVersion) + "\")");
  if (!j.contains("kind") || j["kind"] != std::string(kind))
    throw parse_error("expected a document of kind \"" + std::string(kind) + "\"");
}

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) throw parse_error(std::string("missing field \"") + key + "\"");
  return j[key];
}

std::optional<std::string> optional_string(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  if (!j[key].is_string()) throw parse_error(std::string("field \"") + key + "\" must be a string");
  return j[key].get<std::string>();
}

Rational read_rational(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      throw parse_error(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.dump(), 10);
  throw parse_error(where + ": entries must be rational strings");
}

std::string index_path(const std::string& name, const std::vector<std::size_t>& index) {
  std::string out = name;
  for (auto i : index) out += "[" + std::to_string(i) + "]";
  return out;
}

/// Reads a nested array of the given shape into flat row-major storage.
void read_nested(const json& j, const std::vector<std::size_t>& shape, const std::string& name,
                 std::vector<std::size_t>& index, std::vector<Rational>& out) {
  const std::size_t depth = index.size();
  if (depth == shape.size()) {
    out.push_back(read_rational(j, index_path(name, index)));
    return;
  }
  if (!j.is_array()) throw shape_error(index_path(name, index) + ": expected an array");
  if (j.size() != shape[depth])
    throw shape_error(index_path(name, index) + ": expected " + std::to_string(shape[depth]) + " entries, found " +
                      std::to_string(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    index.push_back(i);
    read_nested(j[i], shape, name, index, out);
    index.pop_back();
  }
}

std::vector<Rational> read_array(const json& j, const std::vector<std::size_t>& shape, const std::string& name) {
  std::vector<Rational> out;
  std::vector<std::size_t> index;
  // an array with a zero extent may be written as a bare [] at that depth
  bool empty = false;
  for (auto e : shape) empty = empty || e == 0;
  if (empty && j.is_array() && j.empty()) return out;
  read_nested(j, shape, name, index, out);
  return out;
}

Matrix read_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& name) {
  return Matrix(rows, cols, read_array(j, {rows, cols}, name));
}

Tensor read_tensor(const json& j, std::vector<std::size_t> shape, const std::string& name) {
  Tensor t(shape);
  auto values = read_array(j, shape, name);
  if (!values.empty()) t.data() = std::move(values);
  return t;
}

/// Matrix of unspecified shape: rows from the outer array, columns from the
/// first row.
Matrix read_free_matrix(const json& j, const std::string& name) {
  if (!j.is_array()) throw shape_error(name + ": expected an array");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  return read_matrix(j, rows, cols, name);
}

std::size_t read_dim(const json& j, std::size_t i) {
  if (!j.is_array() || j.size() != 2 || !j[i].is_number_unsigned())
    throw parse_error("dims must be a pair of non-negative integers");
  return j[i].get<std::size_t>();
}

AlgebraDocument algebra_from_json(const json& j) {
  check_header(j, "algebra");
  const json& dims = field(j, "dims");
  const std::size_t n0 = read_dim(dims, 0);
  const std::size_t n1 = read_dim(dims, 1);
  AlgebraDocument doc;
  doc.name = optional_string(j, "name");
  doc.provenance = optional_string(j, "provenance");
  auto& a = doc.algebra;
  a.n0 = n0;
  a.n1 = n1;
  a.d = read_matrix(field(j, "d"), n0, n1, "d");
  a.b00 = read_tensor(field(j, "b00"), {n0, n0, n0}, "b00");
  a.b01 = read_tensor(field(j, "b01"), {n0, n1, n1}, "b01");
  a.jac = read_tensor(field(j, "jac"), {n0, n0, n0, n1}, "jac");
  return doc;
}

// ---------------------------------------------------------------------------
// Canonical writer
// ---------------------------------------------------------------------------

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string pad(std::size_t indent) { return std::string(indent, ' '); }

void write_nested(std::ostringstream& os, const std::vector<Rational>& data, const std::vector<std::size_t>& shape,
                  std::size_t depth, std::size_t& offset, std::size_t indent) {
  const std::size_t n = shape[depth];
  if (n == 0) {
    os << "[]";
    return;
  }
  if (depth + 1 == shape.size()) {
    os << '[';
    for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << quoted(to_string(data[offset++]));
    os << ']';
    return;
  }
  os << "[\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << pad(indent + 2);
    write_nested(os, data, shape, depth + 1, offset, indent + 2);
    os << (i + 1 < n ? ",\n" : "\n");
  }
  os << pad(indent) << ']';
}

std::string array_text(const std::vector<Rational>& data, const std::vector<std::size_t>& shape, std::size_t indent) {
  std::ostringstream os;
  std::size_t offset = 0;
  bool empty = false;
  for (auto e : shape) empty = empty || e == 0;
  if (empty) {
    // keep the outer structure only as far as it is nonempty
    std::vector<std::size_t> trimmed;
    for (auto e : shape) {
      trimmed.push_back(e);
      if (e == 0) break;
    }
    std::vector<Rational> none;
    write_nested(os, none, trimmed, 0, offset, indent);
    return os.str();
  }
  write_nested(os, data, shape, 0, offset, indent);
  return os.str();
}

std::string matrix_text(const Matrix& m, std::size_t indent) { return array_text(m.entries(), {m.rows(), m.cols()}, indent); }

std::string tensor_text(const Tensor& t, std::size_t indent) { return array_text(t.data(), t.shape(), indent); }

/// Writes key/value pairs as an object whose closing brace sits at `indent`.
std::string object_text(const std::vector<std::pair<std::string, std::string>>& members, std::size_t indent) {
  std::ostringstream os;
  os << "{\n";
  for (std::size_t i = 0; i < members.size(); ++i) {
    os << pad(indent + 2) << quoted(members[i].first) << ": " << members[i].second;
    os << (i + 1 < members.size() ? ",\n" : "\n");
  }
  os << pad(indent) << '}';
  return os.str();
}

std::string algebra_text(const TwoTermAlgebra& a, const std::optional<std::string>& name,
                         const std::optional<std::string>& provenance, std::size_t indent) {
  std::vector<std::pair<std::string, std::string>> members{{"format_version", quoted(std::string(kFormatVersion))},
                                                           {"kind", quoted("algebra")}};
  if (name) members.emplace_back("name", quoted(*name));
  if (provenance) members.emplace_back("provenance", quoted(*provenance));
  const std::size_t inner = indent + 2;
  members.emplace_back("dims", "[" + std::to_string(a.n0) + ", " + std::to_string(a.n1) + "]");
  members.emplace_back("d", matrix_text(a.d, inner));
  members.emplace_back("b00", tensor_text(a.b00, inner));
  members.emplace_back("b01", tensor_text(a.b01, inner));
  members.emplace_back("jac", tensor_text(a.jac, inner));
  return object_text(members, indent);
}

std::string endpoint_text(const EndpointRef& ref, const TwoTermAlgebra& algebra, std::size_t indent) {
  if (ref.path) return quoted(*ref.path);
  return algebra_text(algebra, ref.name, ref.provenance, indent);
}

}  // namespace

AlgebraDocument parse_algebra(std::string_view text) { return algebra_from_json(parse_json(text)); }

MorphismDocument parse_morphism(std::string_view text, const std::filesystem::path& base_dir) {
  const json j = parse_json(text);
  check_header(j, "morphism");
  MorphismDocument doc;
  doc.name = optional_string(j, "name");
  auto endpoint = [&](const char* key, EndpointRef& ref) -> AlgebraPtr {
    const json& e = field(j, key);
    if (e.is_string()) {
      ref.path = e.get<std::string>();
      return share(load_algebra(base_dir / *ref.path).algebra);
    }
    AlgebraDocument inner = algebra_from_json(e);
    ref.name = inner.name;
    ref.provenance = inner.provenance;
    return share(std::move(inner.algebra));
  };
  auto& m = doc.morphism;
  m.source = endpoint("source", doc.source);
  m.target = endpoint("target", doc.target);
  const std::size_t n0 = m.source->n0, n1 = m.source->n1;
  const std::size_t t0 = m.target->n0, t1 = m.target->n1;
  m.phi0 = read_matrix(field(j, "phi0"), t0, n0, "phi0");
  m.phi1 = read_matrix(field(j, "phi1"), t1, n1, "phi1");
  m.Phi = read_tensor(field(j, "Phi"), {n0, n0, t1}, "Phi");
  return doc;
}

MapsDocument parse_maps(std::string_view text) {
  const json j = parse_json(text);
  check_header(j, "maps");
  return MapsDocument{read_free_matrix(field(j, "chi"), "chi"), read_free_matrix(field(j, "fU"), "fU"),
                      read_free_matrix(field(j, "tV"), "tV")};
}

std::string serialize(const AlgebraDocument& doc) {
  return algebra_text(doc.algebra, doc.name, doc.provenance, 0) + "\n";
}

std::string serialize(const MorphismDocument& doc) {
  const auto& m = doc.morphism;
  std::vector<std::pair<std::string, std::string>> members{{"format_version", quoted(std::string(kFormatVersion))},
                                                           {"kind", quoted("morphism")}};
  if (doc.name) members.emplace_back("name", quoted(*doc.name));
  members.emplace_back("source", endpoint_text(doc.source, *m.source, 2));
  members.emplace_back("target", endpoint_text(doc.target, *m.target, 2));
  members.emplace_back("phi0", matrix_text(m.phi0, 2));
  members.emplace_back("phi1", matrix_text(m.phi1, 2));
  members.emplace_back("Phi", tensor_text(m.Phi, 2));
  return object_text(members, 0) + "\n";
}

std::string serialize(const MapsDocument& doc) {
  return object_text({{"format_version", quoted(std::string(kFormatVersion))},
                      {"kind", quoted("maps")},
                      {"chi", matrix_text(doc.chi, 2)},
                      {"fU", matrix_text(doc.fU, 2)},
                      {"tV", matrix_text(doc.tV, 2)}},
                     0) +
         "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot write " + path.string());
  out << content;
}

AlgebraDocument load_algebra(const std::filesystem::path& path) { return parse_algebra(read_file(path)); }

MorphismDocument load_morphism(const std::filesystem::path& path) {
  return parse_morphism(read_file(path), path.parent_path());
}

MapsDocument load_maps(const std::filesystem::path& path) { return parse_maps(read_file(path)); }

}  // namespace l2a::cli

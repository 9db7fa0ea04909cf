#ifndef L2A_TOOLS_DOCUMENTS_HPP
#define L2A_TOOLS_DOCUMENTS_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "l2a/algebra.hpp"
#include "l2a/morphism.hpp"

namespace l2a::cli {

inline constexpr std::string_view kFormatVersion = "1";

struct AlgebraDocument {
  TwoTermAlgebra algebra;
  std::optional<std::string> name;
  std::optional<std::string> provenance;
};

/// How an endpoint of a morphism document was given: a path (resolved
/// relative to the morphism document's directory) or an inline algebra with
/// its metadata.
struct EndpointRef {
  std::optional<std::string> path;
  std::optional<std::string> name;
  std::optional<std::string> provenance;
};

struct MorphismDocument {
  Morphism morphism;
  EndpointRef source;
  EndpointRef target;
  std::optional<std::string> name;
};

/// The maps (chi, fU, tV) handed to certify_isomorphism.
struct MapsDocument {
  Matrix chi;
  Matrix fU;
  Matrix tV;
};

/// Parsers throw Error(Parse) on malformed JSON, a wrong kind or version,
/// or bad rational strings, and Error(DimensionMismatch) when array shapes
/// disagree with the declared dims. They do not run verify.
AlgebraDocument parse_algebra(std::string_view text);
MorphismDocument parse_morphism(std::string_view text, const std::filesystem::path& base_dir = {});
MapsDocument parse_maps(std::string_view text);

/// Canonical serialization: fixed key order, two-space indentation,
/// innermost arrays on one line, rationals as reduced "p" or "p/q" strings.
std::string serialize(const AlgebraDocument& doc);
std::string serialize(const MorphismDocument& doc);
std::string serialize(const MapsDocument& doc);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

AlgebraDocument load_algebra(const std::filesystem::path& path);
MorphismDocument load_morphism(const std::filesystem::path& path);
MapsDocument load_maps(const std::filesystem::path& path);

}  // namespace l2a::cli

#endif  // L2A_TOOLS_DOCUMENTS_HPP

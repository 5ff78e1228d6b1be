#pragma once

#include <optional>
#include <string>
#include <variant>

#include "kantor/lie.hpp"
#include "kantor/structurable.hpp"
#include "kantor/triple.hpp"

namespace kantor {

/// One serialized object: a triple system, an involutive algebra, a graded
/// (super)algebra or a plain linear map, plus metadata.  Scalars serialize
/// as "p/q" strings; tensors as sparse records with zero-based indices.
/// Canonicalized content round-trips byte-identically; unknown fields are
/// rejected on load.
struct SystemFile {
  std::string label;
  std::string provenance;         // construction lineage, free text
  std::optional<SignPair> signs;  // declared signature (triple systems)
  std::optional<Vec> unit;        // declared left unit (triple systems)
  std::variant<TripleSystem, InvolutiveAlgebra, GradedSuperalgebra, Mat> payload;

  const char* kind() const;
  size_t dim() const;
};

std::string save_system_file(const SystemFile& f);
SystemFile load_system_file(const std::string& text);

SystemFile read_system_file(const std::string& path);
void write_system_file(const SystemFile& f, const std::string& path);

/// "1,0,-1/2" -> Vec; used for command-line vectors.
Vec parse_vector(const std::string& text);
/// "-1,1" -> SignPair.
SignPair parse_signs(const std::string& text);

}  // namespace kantor

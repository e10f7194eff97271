#pragma once

#include <json.hpp>

#include "qhr/hopf.hpp"

namespace qhr {

/// An algebra loaded from a file: always carries the plain algebra, and the
/// Hopf structure when the file declares one.
struct LoadedAlgebra {
  bool is_hopf = false;
  AlgebraPtr algebra;
  HopfPtr hopf;  // null unless is_hopf
};

/// Serialization to the sparse JSON file format: integer-indexed entries
/// sorted lexicographically, scalars as canonical strings.
nlohmann::json algebra_to_json(const Algebra& a);
nlohmann::json hopf_to_json(const HopfAlgebra& h);

/// Parse and structurally validate (indices in range, scalars well-formed).
/// Axioms are NOT checked here; callers decide how strictly to verify.
LoadedAlgebra algebra_from_json(const nlohmann::json& j);

/// Canonical text form used for files: 2-space indent, trailing newline.
/// Emit -> load -> emit is byte-identical.
std::string canonical_dump(const nlohmann::json& j);

LoadedAlgebra load_algebra_file(const std::string& path);
void save_algebra_file(const std::string& path, const nlohmann::json& j);

}  // namespace qhr

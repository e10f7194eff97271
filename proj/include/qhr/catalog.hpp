#pragma once

#include "qhr/hopf.hpp"

namespace qhr {

/// Builds a named builtin Hopf algebra. Recognized names:
///   trivial, group:Z/2, group:Z/3, group:Z/4, group:S3,
///   dual_group:Z/2 ... dual_group:S3, sweedler, taft:2, taft:3, ...
/// Every returned algebra passes verify_hopf (checked at build).
HopfPtr catalog_build(const std::string& name);

std::vector<std::string> catalog_names();

}  // namespace qhr

// sha256.hpp — content fingerprints for the run manifests.

#pragma once

#include <string>
#include <string_view>

namespace srlab {

// lowercase hex digest of the standard SHA-256 of `data`
std::string sha256_hex(std::string_view data);

} // namespace srlab

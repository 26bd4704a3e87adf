#pragma once

#include <string>
#include <string_view>

namespace trialkit {

/// SHA-256 of the input, lowercase hex.
std::string sha256_hex(std::string_view data);

} // namespace trialkit

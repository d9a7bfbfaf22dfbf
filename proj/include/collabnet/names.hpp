#pragma once

#include <string>
#include <string_view>

namespace collabnet {

// Canonical form used for person identity: whitespace-trimmed, Unicode NFC,
// otherwise case-sensitive.
std::string canonical_name(std::string_view raw);

}  // namespace collabnet

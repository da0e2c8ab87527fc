#pragma once

// Engine version (reported by the CLI) and the layout version stamped into
// every JSON certificate. Bump the certificate version on any change to key
// names, key order, or value encoding.

#define CHISINI_AUDIT_VERSION "1.0.0"

namespace chisini {

inline constexpr const char* engine_version = CHISINI_AUDIT_VERSION;
inline constexpr int certificate_version = 1;

} // namespace chisini

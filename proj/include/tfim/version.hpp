#pragma once

namespace tfim {

// Bumping this invalidates every cached correlator payload.
inline constexpr const char* kEngineVersion = "1.0.0";

}  // namespace tfim

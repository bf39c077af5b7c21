#pragma once

namespace ccr {

/// Selects the OpenMP kernel or its serial reference. Both produce
/// bit-identical results; the serial path is kept as the test oracle.
enum class Execution { serial, parallel };

}  // namespace ccr

#pragma once

namespace bettikit {

/// Thread count for the per-degree sweeps: OpenMP's maximum, capped by
/// the BETTIKIT_THREADS environment variable when set.
int effective_threads();

}  // namespace bettikit

#pragma once

namespace pframe {

/// Execution mode for the data-parallel check/analysis kernels. `serial` is
/// the plain reference loop kept for testing; `parallel` distributes
/// independent outputs over OpenMP threads. Every kernel computes each output
/// element with the same serial arithmetic, so the two modes are bit-identical
/// and only differ in wall time.
enum class Exec { serial, parallel };

}  // namespace pframe

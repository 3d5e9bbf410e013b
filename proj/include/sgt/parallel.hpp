#pragma once

namespace sgt {

/// Global worker-thread setting for the OpenMP kernels. 0 means the OpenMP
/// runtime default. Exact integer arithmetic keeps every result identical
/// for any thread count.
void set_num_threads(int n);
int num_threads();

/// True when the build has OpenMP and the current setting allows more than
/// one worker.
bool parallel_enabled();

}  // namespace sgt

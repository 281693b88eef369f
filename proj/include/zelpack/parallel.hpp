#pragma once

namespace zelpack {

// Thread count for the OpenMP kernels. n <= 0 leaves the runtime default.
// Results never depend on it.
void set_jobs(int n);
int max_jobs();

}  // namespace zelpack

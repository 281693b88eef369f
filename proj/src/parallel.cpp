#include "zelpack/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zelpack {

#ifdef _OPENMP
void set_jobs(int n) {
  if (n > 0) omp_set_num_threads(n);
}
int max_jobs() { return omp_get_max_threads(); }
#else
void set_jobs(int) {}
int max_jobs() { return 1; }
#endif

}  // namespace zelpack

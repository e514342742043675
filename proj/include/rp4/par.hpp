#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rp4 {

// jobs <= 0 selects all hardware threads; otherwise the value caps workers.
inline int effective_jobs(int jobs) {
#ifdef _OPENMP
    if (jobs <= 0) return omp_get_max_threads();
    return jobs;
#else
    (void)jobs;
    return 1;
#endif
}

}  // namespace rp4

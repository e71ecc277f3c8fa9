#pragma once

#ifdef ANICK_HAVE_OPENMP
#include <omp.h>
#endif

namespace anick {

// threads == 1 runs the serial reference path; threads > 1 dispatches the
// same work items over OpenMP. Work items write disjoint slots, so results
// are identical under any schedule.
struct ExecPolicy {
    int threads = 1;

    bool parallel() const { return threads > 1; }
};

template <class F>
void parallel_for(int n, const ExecPolicy& policy, F&& body) {
#ifdef ANICK_HAVE_OPENMP
    if (policy.parallel()) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(policy.threads)
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
#else
    (void)policy;
#endif
    for (int i = 0; i < n; ++i) body(i);
}

}  // namespace anick

#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace carlitz {

// Runs body(k, ctx) for k in [0, n), where each worker thread gets its own
// ctx = make_ctx(). jobs <= 1 is the serial reference path; jobs > 1 uses an
// OpenMP parallel for when available.
//
// Kernels use make_ctx to clone the field context and rebase their inputs
// per thread: every ring operation copies the context handle, and sharing
// one handle across threads serializes them on its reference count. Results
// must be written into pre-sized slots indexed by k, so the outcome is
// identical on either path. Exceptions are captured per index and the
// lowest-index one is rethrown, independent of the schedule.
template <typename MakeCtx, typename Body>
void parallel_for_with(size_t n, int jobs, const MakeCtx& make_ctx, const Body& body) {
  if (n == 0) return;
#ifdef _OPENMP
  if (jobs > 1 && n > 1) {
    std::vector<std::exception_ptr> errors(n);
    std::exception_ptr setup_error = nullptr;
    #pragma omp parallel num_threads(jobs)
    {
      std::optional<std::decay_t<decltype(make_ctx())>> ctx;
      try {
        ctx.emplace(make_ctx());
      } catch (...) {
        #pragma omp critical(carlitz_parallel_setup)
        if (!setup_error) setup_error = std::current_exception();
      }
      #pragma omp for schedule(dynamic)
      for (long long k = 0; k < static_cast<long long>(n); ++k) {
        if (!ctx) continue;
        try {
          body(static_cast<size_t>(k), *ctx);
        } catch (...) {
          errors[static_cast<size_t>(k)] = std::current_exception();
        }
      }
    }
    if (setup_error) std::rethrow_exception(setup_error);
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
    return;
  }
#else
  (void)jobs;
#endif
  auto ctx = make_ctx();
  for (size_t k = 0; k < n; ++k) body(k, ctx);
}

// Context-free variant.
template <typename Body>
void parallel_for(size_t n, int jobs, const Body& body) {
  parallel_for_with(
      n, jobs, [] { return 0; }, [&](size_t k, int) { body(k); });
}

// Hardware width for benchmarks and the CLI's --jobs 0.
inline int hardware_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace carlitz

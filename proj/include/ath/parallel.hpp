#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace ath {

enum class Exec { Serial, Parallel };

// out[i] = f(i) for i in [0, n). The parallel branch uses OpenMP with dynamic
// scheduling; the first exception thrown by any iteration is rethrown.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f, Exec exec = Exec::Parallel) {
  std::vector<T> out(n);
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::exception_ptr err = nullptr;
  const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < nn; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(ath_parallel_err)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

int max_threads();

}  // namespace ath

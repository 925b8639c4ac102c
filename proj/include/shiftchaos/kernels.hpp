#pragma once

// Data-parallel sweeps used by the verification code. Each kernel has a
// serial reference and an OpenMP version with identical results; the
// serial one is what the tests compare against.
//
// Parallel versions assign results by index, so output never depends on
// scheduling. Exceptions thrown inside a parallel region are captured and
// rethrown on the calling thread.

#include "shiftchaos/scalar.hpp"

#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace shiftchaos::kernels {

using Index = std::int64_t;

enum class Exec { Serial, Parallel };

inline Exec default_exec() {
#ifdef _OPENMP
  return Exec::Parallel;
#else
  return Exec::Serial;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Largest value of f over [lo, hi] and the first index attaining it.
/// Empty ranges give {0, lo - 1}.
struct MaxResult {
  Rational value{0};
  Index arg = -1;
};

template <class F>
MaxResult max_over_serial(Index lo, Index hi, F&& f) {
  MaxResult best{Rational(0), lo - 1};
  for (Index k = lo; k <= hi; ++k) {
    Rational v = f(k);
    if (best.arg < lo || v > best.value) best = {std::move(v), k};
  }
  return best;
}

template <class T, class F>
std::vector<T> map_serial(Index count, F&& f) {
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Index i = 0; i < count; ++i) out.push_back(f(i));
  return out;
}

template <class T, class F>
std::vector<T> map_parallel(Index count, F&& f) {
  std::vector<std::optional<T>> slots(static_cast<std::size_t>(count));
  std::exception_ptr error;
  std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic)
  for (Index i = 0; i < count; ++i) {
    try {
      slots[static_cast<std::size_t>(i)].emplace(f(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  std::vector<T> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

template <class F>
MaxResult max_over_parallel(Index lo, Index hi, F&& f) {
  if (hi < lo) return {Rational(0), lo - 1};
  const auto values = map_parallel<Rational>(hi - lo + 1, [&](Index i) { return f(lo + i); });
  MaxResult best{values[0], lo};
  for (Index i = 1; i < static_cast<Index>(values.size()); ++i) {
    if (values[static_cast<std::size_t>(i)] > best.value) best = {values[static_cast<std::size_t>(i)], lo + i};
  }
  return best;
}

template <class F>
bool all_of_serial(Index count, F&& pred) {
  for (Index i = 0; i < count; ++i) {
    if (!pred(i)) return false;
  }
  return true;
}

template <class F>
bool all_of_parallel(Index count, F&& pred) {
  const auto flags = map_parallel<char>(count, [&](Index i) { return static_cast<char>(pred(i) ? 1 : 0); });
  for (char c : flags) {
    if (!c) return false;
  }
  return true;
}

template <class F>
MaxResult max_over(Exec exec, Index lo, Index hi, F&& f) {
  return exec == Exec::Parallel ? max_over_parallel(lo, hi, f) : max_over_serial(lo, hi, f);
}

template <class T, class F>
std::vector<T> map(Exec exec, Index count, F&& f) {
  return exec == Exec::Parallel ? map_parallel<T>(count, f) : map_serial<T>(count, f);
}

template <class F>
bool all_of(Exec exec, Index count, F&& pred) {
  return exec == Exec::Parallel ? all_of_parallel(count, pred) : all_of_serial(count, pred);
}

}  // namespace shiftchaos::kernels

#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qrf::detail {

namespace {

// The planner is not re-entrant, so plan creation is serialised; executing an
// existing plan on other (aligned) arrays through fftw_execute_dft is safe.
std::mutex plan_mutex;
std::map<std::tuple<std::size_t, std::size_t, int>, fftw_plan> plans;

struct Scratch {
  fftw_complex* ptr = nullptr;
  std::size_t capacity = 0;
  ~Scratch() {
    if (ptr) fftw_free(ptr);
  }
  fftw_complex* get(std::size_t count) {
    if (count > capacity) {
      if (ptr) fftw_free(ptr);
      ptr = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * count));
      if (!ptr) throw std::bad_alloc();
      capacity = count;
    }
    return ptr;
  }
};

thread_local Scratch scratch;

fftw_plan plan_for(std::size_t n, std::size_t howmany, Direction dir) {
  const auto key = std::make_tuple(n, howmany, static_cast<int>(dir));
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto it = plans.find(key);
  if (it != plans.end()) return it->second;
  fftw_complex* tmp = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n * howmany));
  int dims[1] = {static_cast<int>(n)};
  fftw_plan plan = fftw_plan_many_dft(1, dims, static_cast<int>(howmany), tmp, nullptr, 1,
                                      static_cast<int>(n), tmp, nullptr, 1, static_cast<int>(n),
                                      static_cast<int>(dir), FFTW_ESTIMATE);
  fftw_free(tmp);
  if (!plan) throw std::runtime_error("fftw planning failed");
  plans.emplace(key, plan);
  return plan;
}

}  // namespace

void dft_lines(std::complex<double>* data, std::size_t n, std::size_t howmany, Direction dir) {
  if (n == 0 || howmany == 0) return;
  const std::size_t total = n * howmany;
  fftw_complex* buf = scratch.get(total);
  std::memcpy(static_cast<void*>(buf), static_cast<const void*>(data), sizeof(fftw_complex) * total);
  fftw_execute_dft(plan_for(n, howmany, dir), buf, buf);
  std::memcpy(static_cast<void*>(data), static_cast<const void*>(buf), sizeof(fftw_complex) * total);
}

void dft_axis(std::span<std::complex<double>> data, std::span<const std::size_t> shape,
              std::size_t axis, Direction dir) {
  std::size_t outer = 1, inner = 1;
  for (std::size_t a = 0; a < axis; ++a) outer *= shape[a];
  for (std::size_t a = axis + 1; a < shape.size(); ++a) inner *= shape[a];
  const std::size_t n = shape[axis];
  if (inner == 1) {
    dft_lines(data.data(), n, outer, dir);
    return;
  }
  const std::size_t total = outer * n * inner;
  fftw_complex* buf = scratch.get(total);
  auto* lines = reinterpret_cast<std::complex<double>*>(buf);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::complex<double>* src = data.data() + (o * n + k) * inner;
      for (std::size_t i = 0; i < inner; ++i) lines[(o * inner + i) * n + k] = src[i];
    }
  }
  fftw_execute_dft(plan_for(n, outer * inner, dir), buf, buf);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t k = 0; k < n; ++k) {
      std::complex<double>* dst = data.data() + (o * n + k) * inner;
      for (std::size_t i = 0; i < inner; ++i) dst[i] = lines[(o * inner + i) * n + k];
    }
  }
}

}  // namespace qrf::detail

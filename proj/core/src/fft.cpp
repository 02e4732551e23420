#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "cnls/errors.hpp"

namespace cnls::detail {
namespace {

using Key = std::tuple<int, int, int>;  // rows, cols, sign

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int rows, int cols, int sign) {
    std::lock_guard lock(mutex_);
    const Key key{rows, cols, sign};
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;

    const auto n = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    auto* in = fftw_alloc_complex(n);
    auto* out = fftw_alloc_complex(n);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan plan = rows == 1 ? fftw_plan_dft_1d(cols, in, out, sign, flags)
                               : fftw_plan_dft_2d(rows, cols, in, out, sign, flags);
    fftw_free(in);
    fftw_free(out);
    if (plan == nullptr) throw Error("FFTW failed to create a plan");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<Key, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void execute(std::span<const std::complex<double>> in, std::span<std::complex<double>> out,
             int rows, int cols, Direction dir) {
  const auto n = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  if (in.size() != n || out.size() != n) {
    throw DimensionError("transform buffers do not match the requested shape");
  }
  const int sign = dir == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
  fftw_plan plan = cache().get(rows, cols, sign);
  // Out-of-place complex transforms leave the input untouched.
  auto* src = reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data()));
  auto* dst = reinterpret_cast<fftw_complex*>(out.data());
  fftw_execute_dft(plan, src, dst);
}

}  // namespace

void dft(std::span<const std::complex<double>> in, std::span<std::complex<double>> out,
         Direction dir) {
  execute(in, out, 1, static_cast<int>(in.size()), dir);
}

void dft2(std::span<const std::complex<double>> in, std::span<std::complex<double>> out,
          int rows, int cols, Direction dir) {
  execute(in, out, rows, cols, dir);
}

}  // namespace cnls::detail

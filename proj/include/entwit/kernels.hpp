#pragma once

// Complex double inner-loop kernels.
//
// Every kernel has a portable scalar reference implementation and, on x86-64
// builds, an AVX2/FMA variant. The variant used by the dispatching entry points
// is chosen once at startup from CPUID (override with ENTWIT_KERNELS=scalar)
// and can be switched explicitly, which the equivalence tests rely on.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace entwit::kernels {

using cplx = std::complex<double>;

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b);
bool backend_supported(Backend b);
std::vector<Backend> supported_backends();

Backend active_backend();
// Throws std::invalid_argument if the CPU or the build lacks the backend.
void set_backend(Backend b);

// Restores the previously active backend on scope exit.
class ScopedBackend {
 public:
  explicit ScopedBackend(Backend b) : previous_(active_backend()) { set_backend(b); }
  ~ScopedBackend() { set_backend(previous_); }
  ScopedBackend(const ScopedBackend&) = delete;
  ScopedBackend& operator=(const ScopedBackend&) = delete;

 private:
  Backend previous_;
};

// sum_i conj(x_i) * y_i
cplx dotc(std::span<const cplx> x, std::span<const cplx> y);
// sum_i x_i * y_i
cplx dotu(std::span<const cplx> x, std::span<const cplx> y);
// y += alpha * x
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);
// max_i |x_i - y_i| (modulus of the complex difference)
double max_abs_diff(std::span<const cplx> x, std::span<const cplx> y);

namespace scalar {
cplx dotc(const cplx* x, const cplx* y, std::size_t n);
cplx dotu(const cplx* x, const cplx* y, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
double max_abs_diff(const cplx* x, const cplx* y, std::size_t n);
}  // namespace scalar

#if defined(ENTWIT_HAVE_AVX2)
namespace avx2 {
cplx dotc(const cplx* x, const cplx* y, std::size_t n);
cplx dotu(const cplx* x, const cplx* y, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
double max_abs_diff(const cplx* x, const cplx* y, std::size_t n);
}  // namespace avx2
#endif

}  // namespace entwit::kernels

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "entwit/error.hpp"
#include "entwit/kernels.hpp"

namespace entwit::kernels {
namespace {

struct KernelTable {
  cplx (*dotc)(const cplx*, const cplx*, std::size_t);
  cplx (*dotu)(const cplx*, const cplx*, std::size_t);
  void (*axpy)(cplx, const cplx*, cplx*, std::size_t);
  double (*max_abs_diff)(const cplx*, const cplx*, std::size_t);
};

constexpr KernelTable kScalarTable{&scalar::dotc, &scalar::dotu, &scalar::axpy, &scalar::max_abs_diff};
#if defined(ENTWIT_HAVE_AVX2)
constexpr KernelTable kAvx2Table{&avx2::dotc, &avx2::dotu, &avx2::axpy, &avx2::max_abs_diff};
#endif

bool cpu_has_avx2() {
#if defined(ENTWIT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* table_for(Backend b) {
#if defined(ENTWIT_HAVE_AVX2)
  if (b == Backend::avx2) return &kAvx2Table;
#endif
  (void)b;
  return &kScalarTable;
}

Backend initial_backend() {
  if (const char* env = std::getenv("ENTWIT_KERNELS"); env != nullptr && std::string(env) == "scalar") {
    return Backend::scalar;
  }
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

struct State {
  std::atomic<Backend> backend{initial_backend()};
  std::atomic<const KernelTable*> table{table_for(backend.load())};
};

State& state() {
  static State s;
  return s;
}

const KernelTable& table() { return *state().table.load(std::memory_order_acquire); }

void check_lengths(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatch("kernel operands differ in length");
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_supported(Backend b) {
  if (b == Backend::scalar) return true;
  return cpu_has_avx2();
}

std::vector<Backend> supported_backends() {
  std::vector<Backend> out{Backend::scalar};
  if (backend_supported(Backend::avx2)) out.push_back(Backend::avx2);
  return out;
}

Backend active_backend() { return state().backend.load(); }

void set_backend(Backend b) {
  if (!backend_supported(b)) {
    throw std::invalid_argument("kernel backend '" + std::string(backend_name(b)) + "' is not available");
  }
  state().backend.store(b);
  state().table.store(table_for(b), std::memory_order_release);
}

cplx dotc(std::span<const cplx> x, std::span<const cplx> y) {
  check_lengths(x.size(), y.size());
  return table().dotc(x.data(), y.data(), x.size());
}

cplx dotu(std::span<const cplx> x, std::span<const cplx> y) {
  check_lengths(x.size(), y.size());
  return table().dotu(x.data(), y.data(), x.size());
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
  check_lengths(x.size(), y.size());
  table().axpy(alpha, x.data(), y.data(), x.size());
}

double max_abs_diff(std::span<const cplx> x, std::span<const cplx> y) {
  check_lengths(x.size(), y.size());
  return table().max_abs_diff(x.data(), y.data(), x.size());
}

}  // namespace entwit::kernels

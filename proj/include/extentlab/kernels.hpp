#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace extentlab::kernels {

// Data-parallel inner loops shared by ensemble generation and analytics.
// Each kernel has a scalar reference implementation and SIMD variants (AVX2 on
// x86-64, NEON on aarch64) selected once at runtime. Contract for every entry:
//
//  * Exceedance predicates are evaluated in double precision as
//    (double)v - (double)ref > c (ref == nullptr means 0), so scalar and SIMD
//    paths take bit-identical branch decisions.
//  * Elementwise kernels (neumaier_*, ar1_*, compose_day, vsub) perform the
//    same IEEE operation sequence per element in every backend -> bit-exact
//    agreement. Weighted reductions (wsum_*) differ only in summation order;
//    all backends use compensated accumulation, agreement within ~1e-13.
//
// Within one process the backend is fixed, so all outputs are reproducible for
// a given binary + machine + seed regardless of thread count.
struct Ops {
    // sum_i w[i] * 1(v[i] - ref[i] > c), with 1/2/3-day windows (all must exceed).
    double (*wsum_exceed1)(const float* v0, const float* ref, double c, const double* w,
                           std::size_t n);
    double (*wsum_exceed2)(const float* v0, const float* v1, const float* ref, double c,
                           const double* w, std::size_t n);
    double (*wsum_exceed3)(const float* vm, const float* v0, const float* vp, const float* ref,
                           double c, const double* w, std::size_t n);

    // acc[i] += indicator (int32 exceedance counters for probability surfaces).
    void (*count_exceed1)(const float* v0, const float* ref, double c, int32_t* acc,
                          std::size_t n);
    void (*count_exceed2)(const float* v0, const float* v1, const float* ref, double c,
                          int32_t* acc, std::size_t n);
    void (*count_exceed3)(const float* vm, const float* v0, const float* vp, const float* ref,
                          double c, int32_t* acc, std::size_t n);

    // Elementwise Neumaier accumulation: (acc, comp)[i] += x[i] or (a[i] - b[i]).
    void (*neumaier_add)(double* acc, double* comp, const float* x, std::size_t n);
    void (*neumaier_add_diff)(double* acc, double* comp, const float* a, const float* b,
                              std::size_t n);

    // AR(1) recursion across sites: anom = sd0 * z (day 1), anom = rho*anom + sd*z.
    void (*ar1_init)(double* anom, const double* sd0, const double* z, std::size_t n);
    void (*ar1_step)(double* anom, const double* rho, const double* sd, const double* z,
                     std::size_t n);

    // out[i] = float(base[i] + harm + anom[i]); the float32 ensemble plane.
    void (*compose_day)(const double* anom, const double* base, double harm, float* out,
                        std::size_t n);

    // out = a - b (float planes, used to materialize increment fields).
    void (*vsub)(const float* a, const float* b, float* out, std::size_t n);
};

enum class Backend { scalar, avx2, neon };

// Reference implementation table (always available).
const Ops& scalar_ops();

// Active table: EXTENTLAB_KERNELS=scalar|avx2|neon overrides auto-detection;
// requesting an unsupported backend throws ValidationError. Resolved once.
const Ops& ops();
Backend active_backend();
std::string backend_name();

// Introspection used by tests: true when the named backend can run here.
bool backend_available(Backend b);
const Ops* backend_ops(Backend b);  // nullptr when unavailable

}  // namespace extentlab::kernels

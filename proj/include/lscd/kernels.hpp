#pragma once

#include <cstddef>

// Dense vector kernels used by the spectral and LP inner loops.
// Every kernel has a scalar reference implementation and, on x86-64 with
// AVX2+FMA, a vectorized variant selected once at runtime. The two are
// equivalence-tested; callers only see the dispatched entry points.

namespace lscd::kernels {

enum class Isa { scalar, avx2 };

/// Instruction set the dispatched kernels currently run on.
Isa active_isa();

/// Name of an Isa value ("scalar", "avx2").
const char* isa_name(Isa isa);

/// True if the AVX2 variants were compiled in and the CPU supports them.
bool avx2_available();

/// Testing hook: pin the dispatch table to one implementation.
/// Requests for an unavailable ISA fall back to scalar.
void force_isa(Isa isa);

double dot(const double* a, const double* b, std::size_t n);
void axpy(double* y, double a, const double* x, std::size_t n); // y += a*x
void scale(double* x, double a, std::size_t n);                 // x *= a
void multiply(double* out, const double* a, const double* b, std::size_t n);
double sum(const double* x, std::size_t n);
double max_abs_diff(const double* a, const double* b, std::size_t n);

// Scalar reference kernels, callable directly (the oracle side of the
// equivalence tests).
namespace scalar_ref {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double* y, double a, const double* x, std::size_t n);
void scale(double* x, double a, std::size_t n);
void multiply(double* out, const double* a, const double* b, std::size_t n);
double sum(const double* x, std::size_t n);
double max_abs_diff(const double* a, const double* b, std::size_t n);
} // namespace scalar_ref

} // namespace lscd::kernels

#pragma once

#include <cstddef>

namespace lscd::kernels::avx2 {

// Defined in kernels_avx2.cpp, which is compiled with -mavx2 -mfma when the
// toolchain supports it. compiled_in() tells the dispatcher whether the
// vector bodies exist in this build.
bool compiled_in();

double dot(const double* a, const double* b, std::size_t n);
void axpy(double* y, double a, const double* x, std::size_t n);
void scale(double* x, double a, std::size_t n);
void multiply(double* out, const double* a, const double* b, std::size_t n);
double sum(const double* x, std::size_t n);
double max_abs_diff(const double* a, const double* b, std::size_t n);

} // namespace lscd::kernels::avx2

#include "lscd/kernels.hpp"

#include "kernels_internal.hpp"

namespace lscd::kernels {

namespace {

struct Table {
    Isa isa;
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double*, double, const double*, std::size_t);
    void (*scale)(double*, double, std::size_t);
    void (*multiply)(double*, const double*, const double*, std::size_t);
    double (*sum)(const double*, std::size_t);
    double (*max_abs_diff)(const double*, const double*, std::size_t);
};

constexpr Table kScalarTable{
    Isa::scalar,         scalar_ref::dot, scalar_ref::axpy,
    scalar_ref::scale,   scalar_ref::multiply,
    scalar_ref::sum,     scalar_ref::max_abs_diff,
};

constexpr Table kAvx2Table{
    Isa::avx2,    avx2::dot, avx2::axpy, avx2::scale,
    avx2::multiply, avx2::sum, avx2::max_abs_diff,
};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Table pick_default() {
    if (avx2::compiled_in() && cpu_has_avx2())
        return kAvx2Table;
    return kScalarTable;
}

Table g_table = pick_default();

} // namespace

Isa active_isa() { return g_table.isa; }

const char* isa_name(Isa isa) {
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    }
    return "?";
}

bool avx2_available() { return avx2::compiled_in() && cpu_has_avx2(); }

void force_isa(Isa isa) {
    if (isa == Isa::avx2 && avx2_available())
        g_table = kAvx2Table;
    else
        g_table = kScalarTable;
}

double dot(const double* a, const double* b, std::size_t n) { return g_table.dot(a, b, n); }
void axpy(double* y, double a, const double* x, std::size_t n) { g_table.axpy(y, a, x, n); }
void scale(double* x, double a, std::size_t n) { g_table.scale(x, a, n); }
void multiply(double* out, const double* a, const double* b, std::size_t n) {
    g_table.multiply(out, a, b, n);
}
double sum(const double* x, std::size_t n) { return g_table.sum(x, n); }
double max_abs_diff(const double* a, const double* b, std::size_t n) {
    return g_table.max_abs_diff(a, b, n);
}

} // namespace lscd::kernels

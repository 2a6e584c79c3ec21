#include "tscm/kernels.hpp"

namespace tscm::kernels {
namespace {

double weighted_sq_distance_scalar(const double* a, const double* b, const double* w,
                                   const DiffLayout& layout) {
    double sum = 0.0;
    const std::size_t r = layout.size();
    for (std::size_t t = 0; t < r; ++t) {
        const double d = attribute_difference(layout.kind(t), a[t], b[t]);
        sum += w[t] * d * d;
    }
    return sum;
}

void accumulate_sq_diff_scalar(const double* a, const double* b, const DiffLayout& layout,
                               double* acc) {
    const std::size_t r = layout.size();
    for (std::size_t t = 0; t < r; ++t) {
        const double d = attribute_difference(layout.kind(t), a[t], b[t]);
        acc[t] += d * d;
    }
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable table{Isa::scalar, "scalar", &weighted_sq_distance_scalar,
                                   &accumulate_sq_diff_scalar};
    return table;
}

}  // namespace tscm::kernels

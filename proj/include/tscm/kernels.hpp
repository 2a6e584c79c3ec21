#pragma once

// Data-parallel inner loops over attribute vectors.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The variant is picked once at runtime from the CPU features; the
// TSCM_SIMD environment variable (scalar|avx2|auto) overrides the choice.
// The two variants agree to within floating-point reassociation error, which
// tests/unit/kernels_test.cpp pins down.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace tscm {

enum class AttributeKind : std::uint8_t { numerical, binary, categorical };

namespace kernels {

/// Per-attribute kind information laid out for the kernels. Attribute codes
/// are doubles: normalized value (numerical), 0/1 (binary) or label index
/// (categorical).
class DiffLayout {
  public:
    DiffLayout() = default;
    explicit DiffLayout(std::span<const AttributeKind> kinds);

    std::size_t size() const { return kinds_.size(); }
    AttributeKind kind(std::size_t t) const { return kinds_[t]; }
    std::span<const AttributeKind> kinds() const { return kinds_; }

    // Lane masks: all bits set where the attribute has that kind, zero elsewhere.
    const double* numerical_mask() const { return numerical_mask_.data(); }
    const double* binary_mask() const { return binary_mask_.data(); }

  private:
    std::vector<AttributeKind> kinds_;
    std::vector<double> numerical_mask_;
    std::vector<double> binary_mask_;
};

/// Value difference for a single attribute (numerical: signed difference of
/// normalized values; categorical: 0 if equal else 1; binary: 0 iff both are 1).
inline double attribute_difference(AttributeKind kind, double a, double b) {
    switch (kind) {
        case AttributeKind::numerical:
            return a - b;
        case AttributeKind::binary:
            return (a == 1.0 && b == 1.0) ? 0.0 : 1.0;
        case AttributeKind::categorical:
            return a == b ? 0.0 : 1.0;
    }
    return 0.0;
}

enum class Isa { scalar, avx2 };

struct KernelTable {
    Isa isa;
    std::string_view name;

    /// sum_t w[t] * diff_t(a, b)^2
    double (*weighted_sq_distance)(const double* a, const double* b, const double* w,
                                   const DiffLayout& layout);

    /// acc[t] += diff_t(a, b)^2 for every attribute t
    void (*accumulate_sq_diff)(const double* a, const double* b, const DiffLayout& layout,
                               double* acc);
};

const KernelTable& scalar_table();

/// nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2_table();

/// The table selected for this process.
const KernelTable& active();

/// Overrides the selection (tests and benchmarks). Falls back to scalar when
/// the requested ISA is unavailable; returns the table now in effect.
const KernelTable& select(Isa isa);

}  // namespace kernels
}  // namespace tscm

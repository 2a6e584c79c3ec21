#include <atomic>
#include <bit>
#include <cstdlib>
#include <string_view>

#include "tscm/kernels.hpp"
#include "tscm/log.hpp"

namespace tscm::kernels {

DiffLayout::DiffLayout(std::span<const AttributeKind> kinds)
    : kinds_(kinds.begin(), kinds.end()),
      numerical_mask_(kinds.size(), 0.0),
      binary_mask_(kinds.size(), 0.0) {
    const double all_set = std::bit_cast<double>(~std::uint64_t{0});
    for (std::size_t t = 0; t < kinds_.size(); ++t) {
        if (kinds_[t] == AttributeKind::numerical) numerical_mask_[t] = all_set;
        if (kinds_[t] == AttributeKind::binary) binary_mask_[t] = all_set;
    }
}

namespace {

const KernelTable* initial_table() {
    const char* env = std::getenv("TSCM_SIMD");
    const std::string_view request = env ? env : "auto";
    if (request == "scalar") return &scalar_table();
    if (const KernelTable* avx2 = avx2_table()) return avx2;
    if (request == "avx2") log::warn("TSCM_SIMD=avx2 requested but unsupported; using scalar kernels");
    return &scalar_table();
}

std::atomic<const KernelTable*>& current() {
    static std::atomic<const KernelTable*> table{initial_table()};
    return table;
}

}  // namespace

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

const KernelTable& select(Isa isa) {
    const KernelTable* table = &scalar_table();
    if (isa == Isa::avx2 && avx2_table() != nullptr) table = avx2_table();
    current().store(table, std::memory_order_release);
    return *table;
}

}  // namespace tscm::kernels

#include "tcore/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace tcore {

namespace {

constexpr uint64_t kStreamGuard = 60;
constexpr uint64_t kCountGuard = 40;

void gen(uint64_t remaining, uint32_t maxpart, std::vector<uint32_t>& prefix,
         const std::function<void(const PartitionDiagram&)>& fn) {
    if (remaining == 0) {
        fn(PartitionDiagram(prefix));
        return;
    }
    uint32_t top = static_cast<uint32_t>(
        std::min<uint64_t>(maxpart, remaining));
    for (uint32_t p = top; p >= 1; --p) {
        prefix.push_back(p);
        gen(remaining - p, p, prefix, fn);
        prefix.pop_back();
    }
}

}  // namespace

PartitionDiagram::PartitionDiagram(std::vector<uint32_t> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0) throw std::invalid_argument("partition parts must be >= 1");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be non-increasing");
        n += parts[i];
    }
}

void for_each_partition(uint64_t n,
                        const std::function<void(const PartitionDiagram&)>& fn) {
    if (n > kStreamGuard)
        throw std::invalid_argument("partition enumeration guarded at n <= 60");
    std::vector<uint32_t> prefix;
    gen(n, n == 0 ? 1 : static_cast<uint32_t>(n), prefix, fn);
}

std::vector<PartitionDiagram> partitions_of(uint64_t n) {
    std::vector<PartitionDiagram> out;
    for_each_partition(n, [&](const PartitionDiagram& d) { out.push_back(d); });
    return out;
}

std::vector<uint32_t> conjugate(const PartitionDiagram& d) {
    if (d.parts.empty()) return {};
    std::vector<uint32_t> conj(d.parts[0], 0);
    for (uint32_t part : d.parts)
        for (uint32_t j = 0; j < part; ++j) ++conj[j];
    return conj;
}

std::vector<std::vector<uint32_t>> hook_numbers(const PartitionDiagram& d) {
    std::vector<uint32_t> conj = conjugate(d);
    std::vector<std::vector<uint32_t>> rows(d.parts.size());
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        rows[i].resize(d.parts[i]);
        for (uint32_t j = 0; j < d.parts[i]; ++j)
            rows[i][j] = d.parts[i] - (j + 1) + conj[j] - (i + 1) + 1;
    }
    return rows;
}

bool is_t_core(const PartitionDiagram& d, uint64_t t) {
    if (t < 2) throw std::invalid_argument("is_t_core requires t >= 2");
    std::vector<uint32_t> conj = conjugate(d);
    for (std::size_t i = 0; i < d.parts.size(); ++i)
        for (uint32_t j = 0; j < d.parts[i]; ++j) {
            uint32_t hook = d.parts[i] - (j + 1) + conj[j] - (i + 1) + 1;
            if (hook % t == 0) return false;
        }
    return true;
}

uint64_t count_t_cores(uint64_t n, uint64_t t) {
    if (n > kCountGuard)
        throw std::invalid_argument("t-core counting guarded at n <= 40");
    uint64_t count = 0;
    for_each_partition(n, [&](const PartitionDiagram& d) {
        if (is_t_core(d, t)) ++count;
    });
    return count;
}

}  // namespace tcore

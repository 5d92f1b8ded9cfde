// Brute-force partition enumeration with Ferrers-Young hook numbers.
// This is the ground-truth oracle for t-core counts: exponential-time,
// guarded, and deliberately free of generating-function shortcuts.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace tcore {

struct PartitionDiagram {
    std::vector<uint32_t> parts;  // non-increasing, all >= 1
    uint64_t n = 0;               // sum of parts

    explicit PartitionDiagram(std::vector<uint32_t> p);
};

// Visit every partition of n exactly once in descending lexicographic
// order. Guarded at n <= 60.
void for_each_partition(uint64_t n,
                        const std::function<void(const PartitionDiagram&)>& fn);

// Materialized variant of for_each_partition.
std::vector<PartitionDiagram> partitions_of(uint64_t n);

// Hook numbers H(i,j) = parts[i] - j + conjugate[j] - i + 1, one row per
// part (0-indexed i, j here; the formula is the usual 1-indexed one).
std::vector<std::vector<uint32_t>> hook_numbers(const PartitionDiagram& d);

std::vector<uint32_t> conjugate(const PartitionDiagram& d);

// True iff no hook number of d is divisible by t. Requires t >= 2.
bool is_t_core(const PartitionDiagram& d, uint64_t t);

// Number of t-core partitions of n, by exhaustive enumeration.
// Guarded at n <= 40.
uint64_t count_t_cores(uint64_t n, uint64_t t);

}  // namespace tcore

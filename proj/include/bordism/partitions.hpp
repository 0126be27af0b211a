#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bordism {

// Non-increasing list of positive integers. Partitions index Stiefel-Whitney
// numbers; the canonical order (descending lexicographic on the part lists)
// makes profile bit vectors stable across runs.
struct Partition {
    std::vector<int> parts;

    int weight() const noexcept;
    std::string to_string() const; // e.g. "[3,1]"; the empty partition is "[]"

    bool operator==(const Partition&) const = default;
};

// All partitions of d in canonical order; d = 0 yields {[]}.
std::vector<Partition> partitions(int d);

// Number of partitions of d, without enumerating them.
std::uint64_t partition_count(int d);

} // namespace bordism

#include "bordism/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace bordism {

int Partition::weight() const noexcept {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0)
            out += ",";
        out += std::to_string(parts[i]);
    }
    out += "]";
    return out;
}

namespace {

void emit(int remaining, int max_part, std::vector<int>& stack, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition{stack});
        return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        stack.push_back(p);
        emit(remaining - p, p, stack, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions(int d) {
    if (d < 0)
        throw std::invalid_argument("partitions: negative weight");
    std::vector<Partition> out;
    std::vector<int> stack;
    emit(d, d, stack, out);
    return out;
}

std::uint64_t partition_count(int d) {
    if (d < 0)
        throw std::invalid_argument("partition_count: negative weight");
    // table[j] = number of partitions of j using parts considered so far
    std::vector<std::uint64_t> table(static_cast<std::size_t>(d) + 1, 0);
    table[0] = 1;
    for (int part = 1; part <= d; ++part)
        for (int j = part; j <= d; ++j)
            table[j] += table[j - part];
    return table[d];
}

} // namespace bordism

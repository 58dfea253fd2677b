#include "rademacher/partition.hpp"

#include <numeric>
#include <stdexcept>

#include "rademacher/count.hpp"

namespace rademacher {

PartVector::PartVector(std::vector<std::int64_t> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw std::invalid_argument("part vector must have at least one part");
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (sizes_[i] < 1) throw std::invalid_argument("part sizes must be >= 1: " + to_string());
        if (i > 0 && sizes_[i] > sizes_[i - 1]) throw std::invalid_argument("part sizes must be nonincreasing: " + to_string());
    }
}

std::int64_t PartVector::total() const noexcept { return std::accumulate(sizes_.begin(), sizes_.end(), std::int64_t{0}); }

std::int64_t PartVector::cross_pairs() const {
    std::int64_t sum = 0;
    std::int64_t prefix = 0;
    for (std::int64_t x : sizes_) {
        sum = checked_add(sum, checked_mul(prefix, x));
        prefix += x;
    }
    return sum;
}

std::int64_t PartVector::product(std::size_t from, std::size_t to) const {
    std::int64_t p = 1;
    for (std::size_t i = from; i < to && i < sizes_.size(); ++i) p = checked_mul(p, sizes_[i]);
    return p;
}

std::string PartVector::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(sizes_[i]);
    }
    return out + ")";
}

PartVector balanced_partition(std::int64_t n, std::int64_t parts) {
    if (parts < 1) throw std::invalid_argument("need at least one part");
    if (n < parts) throw std::invalid_argument("balanced partition of " + std::to_string(n) + " into " +
                                               std::to_string(parts) + " nonempty parts is impossible");
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(parts), n / parts);
    for (std::int64_t i = 0; i < n % parts; ++i) ++sizes[static_cast<std::size_t>(i)];
    return PartVector(std::move(sizes));
}

}  // namespace rademacher

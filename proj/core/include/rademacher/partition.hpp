#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rademacher {

/// Part sizes (x_1, ..., x_{k-1}) of a vertex partition: nonincreasing, all >= 1.
class PartVector {
public:
    PartVector() = default;
    explicit PartVector(std::vector<std::int64_t> sizes);
    PartVector(std::initializer_list<std::int64_t> sizes) : PartVector(std::vector<std::int64_t>(sizes)) {}

    std::span<const std::int64_t> sizes() const noexcept { return sizes_; }
    std::size_t parts() const noexcept { return sizes_.size(); }
    std::int64_t operator[](std::size_t i) const { return sizes_.at(i); }
    std::int64_t total() const noexcept;

    /// Sum over unordered part pairs of x_i x_j: edges of the complete multipartite graph.
    std::int64_t cross_pairs() const;
    /// prod_{i=from}^{to-1} x_i (0-based, half open).
    std::int64_t product(std::size_t from, std::size_t to) const;

    std::string to_string() const;

    friend bool operator==(const PartVector&, const PartVector&) = default;

private:
    std::vector<std::int64_t> sizes_;
};

/// Balanced partition of n into `parts` parts, nonincreasing.
PartVector balanced_partition(std::int64_t n, std::int64_t parts);

}  // namespace rademacher

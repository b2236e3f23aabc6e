#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include <gmpxx.h>

namespace bang {

/// A set partition of {0, ..., s-1}. Blocks are non-empty, sorted, and listed
/// in order of their least element.
struct SetPartition {
    std::vector<std::vector<std::size_t>> blocks;

    std::size_t length() const { return blocks.size(); }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition&, const SetPartition&) = default;
};

/// Largest s enumerated unless the caller raises it. Bell(12) = 4213597.
inline constexpr std::size_t default_partition_cap = 12;

/// Bell(s), the number of set partitions of an s-element set.
mpz_class bell_number(std::size_t s);

/// Throws SizeLimitError, naming Bell(s), when s > cap.
void require_partition_budget(std::size_t s, std::size_t cap);

/// Visits every partition of {0..s-1} exactly once, generated from
/// restricted-growth strings in lexicographic order. s = 0 yields the single
/// empty partition.
void for_each_set_partition(std::size_t s, std::size_t cap, const std::function<void(const SetPartition&)>& visit);

std::vector<SetPartition> set_partitions(std::size_t s, std::size_t cap = default_partition_cap);

} // namespace bang

#include "bang/partitions.hpp"

#include <string>

#include "bang/errors.hpp"

namespace bang {

mpz_class bell_number(std::size_t s)
{
    // Bell triangle: each row starts with the last entry of the previous row.
    std::vector<mpz_class> row{1};
    for (std::size_t i = 0; i < s; ++i) {
        std::vector<mpz_class> next{row.back()};
        next.reserve(row.size() + 1);
        for (const auto& value : row) {
            next.push_back(next.back() + value);
        }
        row = std::move(next);
    }
    return row.front();
}

void require_partition_budget(std::size_t s, std::size_t cap)
{
    if (s > cap) {
        throw SizeLimitError("lifting a degree-" + std::to_string(s) + " ket needs Bell(" + std::to_string(s) +
                             ") = " + bell_number(s).get_str() + " set partitions, above the partition cap of " +
                             std::to_string(cap));
    }
}

void for_each_set_partition(std::size_t s, std::size_t cap, const std::function<void(const SetPartition&)>& visit)
{
    require_partition_budget(s, cap);
    if (s == 0) {
        visit(SetPartition{});
        return;
    }
    // growth[i] is the block of element i; prefix_max[i] = max(growth[0..i]).
    std::vector<std::size_t> growth(s, 0);
    std::vector<std::size_t> prefix_max(s, 0);
    SetPartition partition;
    while (true) {
        partition.blocks.assign(prefix_max.back() + 1, {});
        for (std::size_t i = 0; i < s; ++i) {
            partition.blocks[growth[i]].push_back(i);
        }
        visit(partition);

        std::size_t i = s - 1;
        while (i > 0 && growth[i] > prefix_max[i - 1]) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++growth[i];
        prefix_max[i] = std::max(prefix_max[i - 1], growth[i]);
        for (std::size_t j = i + 1; j < s; ++j) {
            growth[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

std::vector<SetPartition> set_partitions(std::size_t s, std::size_t cap)
{
    std::vector<SetPartition> result;
    for_each_set_partition(s, cap, [&](const SetPartition& p) { result.push_back(p); });
    return result;
}

} // namespace bang

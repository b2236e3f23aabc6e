#pragma once

// Independent reference computations. None of these reuse the engine's
// binomial coproduct, partition enumerator or ket normalisation.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <unordered_set>
#include <vector>

#include "bang/bang_element.hpp"
#include "bang/lifting.hpp"

namespace bang::testing {

/// Coproduct by literal enumeration of the 2^s subsets I of {1..s}:
/// |nu_1..nu_s> -> sum_I |nu_I> (x) |nu_{I^c}>.
inline TensorElement subset_coproduct(const BangElement& element)
{
    TensorElement result(2);
    for (const auto& [k, c] : element) {
        const std::vector<BasisIndex> nus = k.content.expand();
        const std::size_t s = nus.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
            std::vector<BasisIndex> in, out;
            for (std::size_t j = 0; j < s; ++j) {
                ((mask >> j) & 1u ? in : out).push_back(nus[j]);
            }
            result.add({CanonicalKet{k.point, Multiindex::from_labels(in)},
                        CanonicalKet{k.point, Multiindex::from_labels(out)}},
                       c);
        }
    }
    return result;
}

/// Number of distinct set partitions of {0..s-1}, found by enumerating every
/// block-assignment function {0..s-1} -> {0..s-1} and deduplicating the
/// induced partitions. Each partition is keyed by relabelling its blocks in
/// order of first appearance. Precondition: s <= 15.
inline std::size_t assignment_partition_count(std::size_t s)
{
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::size_t> assignment(s, 0);
    std::vector<int> relabel(s);
    while (true) {
        std::fill(relabel.begin(), relabel.end(), -1);
        int next = 0;
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < s; ++i) {
            int& label = relabel[assignment[i]];
            if (label < 0) {
                label = next++;
            }
            key = key * 16 + static_cast<std::uint64_t>(label);
        }
        seen.insert(key);

        std::size_t i = 0;
        while (i < s && ++assignment[i] == s) {
            assignment[i++] = 0;
        }
        if (i == s) {
            break;
        }
    }
    return seen.size();
}

/// Generalised-fraction coefficients reached from the vacuum by applying
/// d_i fraction-wise: [1/z^a dz/z] . d_i = (a_i + 1) [1/z^{a + e_i} dz/z].
inline std::map<Multiindex, Rational> fractions_from_vacuum(const std::vector<BasisIndex>& creators)
{
    std::map<Multiindex, Rational> current{{Multiindex{}, Rational(1)}};
    for (const auto& index : creators) {
        std::map<Multiindex, Rational> next;
        for (const auto& [a, c] : current) {
            next[a.with_added(index)] += c * Rational(static_cast<long>(a.count(index)) + 1);
        }
        current = std::move(next);
    }
    return current;
}

/// z_index . [1/z^a dz/z] = [1/z^{a - e_index} dz/z], zero when a_index = 0.
inline std::map<Multiindex, Rational> lower_fraction(const std::map<Multiindex, Rational>& fractions,
                                                     const BasisIndex& index)
{
    std::map<Multiindex, Rational> result;
    for (const auto& [a, c] : fractions) {
        if (auto lowered = a.with_removed(index)) {
            result[*lowered] += c;
        }
    }
    return result;
}

/// Rank of a rational matrix by exact Gaussian elimination.
inline std::size_t matrix_rank(std::vector<std::vector<Rational>> m)
{
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m.front().size() : 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) {
                continue;
            }
            const Rational factor = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < cols; ++c) {
                m[r][c] -= factor * m[rank][c];
            }
        }
        ++rank;
    }
    return rank;
}

/// Right-hand side of the recursion identity for x_e g on a single ket, by
/// literal subset enumeration:
///   sum_{I subset {1..s}} phi|nu_I>_e * E(g, |nu_{I^c}>).
template <typename Functional>
Rational recursion_rhs(const KetMap& phi, const CanonicalKet& k, const BasisIndex& e, Functional&& functional)
{
    const std::vector<BasisIndex> nus = k.content.expand();
    const std::size_t s = nus.size();
    Rational total(0);
    for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
        std::vector<BasisIndex> in, out;
        for (std::size_t j = 0; j < s; ++j) {
            ((mask >> j) & 1u ? in : out).push_back(nus[j]);
        }
        const Rational coordinate = phi(CanonicalKet{k.point, Multiindex::from_labels(in)})[e];
        if (coordinate.is_zero()) {
            continue;
        }
        total += coordinate * functional(BangElement(CanonicalKet{k.point, Multiindex::from_labels(out)}));
    }
    return total;
}

} // namespace bang::testing

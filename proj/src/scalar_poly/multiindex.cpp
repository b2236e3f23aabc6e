#include "bang/multiindex.hpp"

#include <algorithm>
#include <cassert>

namespace bang {

Multiindex::Multiindex(std::initializer_list<Entry> entries) : entries_(entries)
{
    normalize();
}

Multiindex::Multiindex(std::vector<Entry> entries) : entries_(std::move(entries))
{
    normalize();
}

void Multiindex::normalize()
{
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    std::vector<Entry> merged;
    merged.reserve(entries_.size());
    for (auto& e : entries_) {
        if (!merged.empty() && merged.back().first == e.first) {
            merged.back().second += e.second;
        } else {
            merged.push_back(std::move(e));
        }
    }
    std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
    entries_ = std::move(merged);
}

Multiindex Multiindex::from_labels(std::span<const BasisIndex> labels)
{
    std::vector<Entry> entries;
    entries.reserve(labels.size());
    for (const auto& l : labels) {
        entries.emplace_back(l, 1u);
    }
    return Multiindex(std::move(entries));
}

unsigned Multiindex::count(const BasisIndex& index) const
{
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                                     [](const Entry& e, const BasisIndex& i) { return e.first < i; });
    return (it != entries_.end() && it->first == index) ? it->second : 0u;
}

unsigned Multiindex::degree() const
{
    unsigned total = 0;
    for (const auto& e : entries_) {
        total += e.second;
    }
    return total;
}

Multiindex Multiindex::with_added(const BasisIndex& index, unsigned times) const
{
    Multiindex result = *this;
    if (times == 0) {
        return result;
    }
    auto it = std::lower_bound(result.entries_.begin(), result.entries_.end(), index,
                               [](const Entry& e, const BasisIndex& i) { return e.first < i; });
    if (it != result.entries_.end() && it->first == index) {
        it->second += times;
    } else {
        result.entries_.insert(it, Entry{index, times});
    }
    return result;
}

std::optional<Multiindex> Multiindex::with_removed(const BasisIndex& index) const
{
    Multiindex result = *this;
    auto it = std::lower_bound(result.entries_.begin(), result.entries_.end(), index,
                               [](const Entry& e, const BasisIndex& i) { return e.first < i; });
    if (it == result.entries_.end() || !(it->first == index)) {
        return std::nullopt;
    }
    if (--it->second == 0) {
        result.entries_.erase(it);
    }
    return result;
}

Multiindex Multiindex::operator+(const Multiindex& other) const
{
    std::vector<Entry> entries = entries_;
    entries.insert(entries.end(), other.entries_.begin(), other.entries_.end());
    return Multiindex(std::move(entries));
}

Multiindex Multiindex::operator-(const Multiindex& other) const
{
    assert(contains(other));
    std::vector<Entry> entries = entries_;
    for (auto& e : entries) {
        e.second -= other.count(e.first);
    }
    return Multiindex(std::move(entries));
}

bool Multiindex::contains(const Multiindex& other) const
{
    return std::all_of(other.begin(), other.end(),
                       [this](const Entry& e) { return count(e.first) >= e.second; });
}

std::vector<BasisIndex> Multiindex::expand() const
{
    std::vector<BasisIndex> labels;
    labels.reserve(degree());
    for (const auto& [index, times] : entries_) {
        labels.insert(labels.end(), times, index);
    }
    return labels;
}

std::vector<Multiindex> Multiindex::sub_multisets() const
{
    std::vector<Multiindex> result{Multiindex{}};
    for (const auto& [index, times] : entries_) {
        std::vector<Multiindex> next;
        next.reserve(result.size() * (times + 1));
        for (const auto& partial : result) {
            for (unsigned k = 0; k <= times; ++k) {
                next.push_back(partial.with_added(index, k));
            }
        }
        result = std::move(next);
    }
    return result;
}

Rational Multiindex::factorial() const
{
    Rational product(1);
    for (const auto& e : entries_) {
        product *= bang::factorial(e.second);
    }
    return product;
}

std::strong_ordering graded_compare(const Multiindex& a, const Multiindex& b)
{
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) {
        return db <=> da;
    }
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        // The smaller label present in either operand decides first.
        const bool take_a = ib == b.end() || (ia != a.end() && ia->first < ib->first);
        const bool take_b = ia == a.end() || (ib != b.end() && ib->first < ia->first);
        if (take_a) {
            return std::strong_ordering::less;
        }
        if (take_b) {
            return std::strong_ordering::greater;
        }
        if (ia->second != ib->second) {
            return ib->second <=> ia->second;
        }
        ++ia;
        ++ib;
    }
    return std::strong_ordering::equal;
}

} // namespace bang

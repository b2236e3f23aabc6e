#pragma once

// Seeded random generators for property tests. Scalars have numerators and
// denominators drawn from [-5, 5] (denominators positive).

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bang/bang_element.hpp"
#include "bang/lifting.hpp"
#include "bang/polynomial.hpp"

namespace bang::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

    Rational rational() { return Rational(integer(-5, 5), integer(1, 5)); }

    Rational nonzero_rational()
    {
        Rational r;
        do {
            r = rational();
        } while (r.is_zero());
        return r;
    }

    static Basis basis(const std::string& name, const std::string& prefix, std::size_t n)
    {
        std::vector<BasisIndex> indices;
        for (std::size_t i = 1; i <= n; ++i) {
            indices.push_back(BasisIndex{prefix + std::to_string(i)});
        }
        return Basis(name, indices);
    }

    /// Each coordinate is zero with probability zero_chance.
    Vector vector(const Basis& b, double zero_chance = 0.3)
    {
        Vector v;
        for (const auto& index : b.indices()) {
            if (!chance(zero_chance)) {
                v.add(index, rational());
            }
        }
        return v;
    }

    Vector nonzero_vector(const Basis& b)
    {
        Vector v;
        while (v.is_zero()) {
            v = vector(b);
        }
        return v;
    }

    Multiindex content(const Basis& b, unsigned degree)
    {
        std::vector<BasisIndex> labels;
        for (unsigned k = 0; k < degree; ++k) {
            labels.push_back(b.indices()[static_cast<std::size_t>(integer(0, static_cast<int>(b.dimension()) - 1))]);
        }
        return Multiindex::from_labels(labels);
    }

    CanonicalKet ket(const Basis& b, unsigned max_degree, const std::vector<Vector>& points)
    {
        const Vector& p = points[static_cast<std::size_t>(integer(0, static_cast<int>(points.size()) - 1))];
        return CanonicalKet{p, content(b, static_cast<unsigned>(integer(0, static_cast<int>(max_degree))))};
    }

    /// A combination of up to max_terms kets over one or two random points.
    BangElement element(const Basis& b, unsigned max_degree, int max_terms = 3)
    {
        std::vector<Vector> points{vector(b)};
        if (chance(0.4)) {
            points.push_back(vector(b));
        }
        BangElement e;
        const int terms = integer(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            e.add(ket(b, max_degree, points), nonzero_rational());
        }
        return e;
    }

    Polynomial polynomial(const Basis& b, unsigned max_degree, int max_terms = 4)
    {
        Polynomial f;
        const int terms = integer(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            f.add_term(content(b, static_cast<unsigned>(integer(0, static_cast<int>(max_degree)))), nonzero_rational());
        }
        return f;
    }

    /// Table for phi: !W -> V covering every ket promote() reads for element,
    /// plus a few kets it never reads. With generic = true no value is zero.
    LinearMapSpec table(const Basis& domain, const Basis& codomain, const BangElement& element, bool generic = false)
    {
        LinearMapSpec::Table t;
        for (const auto& k : lift_query_set(element)) {
            t[k] = generic ? nonzero_vector(codomain) : vector(codomain, 0.35);
        }
        t[CanonicalKet{vector(domain), content(domain, 1)}] = vector(codomain);
        return LinearMapSpec(domain, codomain, t);
    }

    MatrixMapSpec matrix(const Basis& domain, const Basis& codomain)
    {
        MatrixMapSpec::Images images;
        for (const auto& index : domain.indices()) {
            images[index] = vector(codomain, 0.4);
        }
        return MatrixMapSpec(domain, codomain, images);
    }

private:
    std::mt19937_64 rng_;
};

/// Every monomial of total degree <= max_degree over the basis labels.
inline std::vector<Multiindex> monomials_up_to(const Basis& b, unsigned max_degree)
{
    std::vector<Multiindex> result{Multiindex{}};
    std::vector<Multiindex> frontier{Multiindex{}};
    for (unsigned d = 1; d <= max_degree; ++d) {
        std::vector<Multiindex> next;
        for (const auto& m : frontier) {
            for (const auto& index : b.indices()) {
                Multiindex grown = m.with_added(index);
                if (std::find(next.begin(), next.end(), grown) == next.end()) {
                    next.push_back(grown);
                }
            }
        }
        result.insert(result.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return result;
}

} // namespace bang::testing

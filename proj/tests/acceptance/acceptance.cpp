// Acceptance suite: one PASS/FAIL line per criterion, exact equality throughout.
// Sampling: dim <= 3, ket degree <= 5, coordinates p/q with |p|, |q| <= 5.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "bang/coalgebra.hpp"
#include "bang/lifting.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace bang;
using bang::testing::Gen;

namespace {

struct Outcome {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what)
    {
        if (!ok) {
            if (failures == 0) {
                first_failure = what;
            }
            ++failures;
        }
    }
};

Polynomial x(const BasisIndex& i) { return Polynomial::variable(i); }

TensorElement swap(const TensorElement& t)
{
    const std::array order{std::size_t{1}, std::size_t{0}};
    return permute(t, order);
}

/// Dimension in [1, 3] for one sampled case.
std::size_t dimension(Gen& gen) { return static_cast<std::size_t>(gen.integer(1, 3)); }

Outcome coalgebra_axioms()
{
    Outcome out;
    Gen gen(101);
    for (int trial = 0; trial < 200; ++trial, ++out.cases) {
        const Basis w = Gen::basis("W", "e", dimension(gen));
        const BangElement eta = gen.element(w, 5);
        const TensorElement delta = coproduct(eta);
        out.check(delta == bang::testing::subset_coproduct(eta), "coproduct vs subset enumeration");
        out.check(coproduct_at(delta, 0) == coproduct_at(delta, 1), "coassociativity");
        out.check(counit_at(delta, 0).to_bang() == eta, "left counit");
        out.check(counit_at(delta, 1).to_bang() == eta, "right counit");
        out.check(swap(delta) == delta, "cocommutativity");
    }
    for (int trial = 0; trial < 50; ++trial, ++out.cases) {
        const BangElement vac = vacuum(gen.vector(Gen::basis("W", "e", dimension(gen))));
        out.check(coproduct(vac) == tensor(vac, vac), "group-like vacuum");
        out.check(counit(vac) == Rational(1), "vacuum counit");
    }
    return out;
}

Outcome dereliction_table()
{
    Outcome out;
    Gen gen(102);
    for (int trial = 0; trial < 100; ++trial, ++out.cases) {
        const Basis w = Gen::basis("W", "e", dimension(gen));
        const Vector p = gen.vector(w), nu = gen.vector(w);
        out.check(dereliction(vacuum(p)) == p, "d|0>_P = P");
        const std::array one{nu};
        out.check(dereliction(ket(p, one)) == nu, "d|nu>_P = nu");
        std::vector<Vector> many{nu};
        const int extra = gen.integer(1, 4);
        for (int i = 0; i < extra; ++i) {
            many.push_back(gen.vector(w));
        }
        out.check(dereliction(ket(p, many)).is_zero(), "d of degree >= 2 is zero");
        const CanonicalKet high{p, gen.content(w, static_cast<unsigned>(gen.integer(2, 5)))};
        out.check(dereliction(BangElement(high)).is_zero(), "d of a canonical ket of degree >= 2");
    }
    return out;
}

Outcome pairing_consistency()
{
    Outcome out;
    Gen gen(103);
    for (int trial = 0; trial < 200; ++trial, ++out.cases) {
        const Basis w = Gen::basis("W", "e", dimension(gen));
        const Polynomial f = gen.polynomial(w, 5);
        const BangElement eta = gen.element(w, 5);
        const Rational direct = residue_pair(f, eta);
        out.check(direct == counit(r_action(f, eta)), "residue_pair vs counit(r_action)");

        Rational poly_route(0);
        for (const auto& [key, c] : eta) {
            std::vector<Vector> nus;
            for (const auto& label : key.content.expand()) {
                nus.push_back(Vector::unit(label));
            }
            poly_route += c * evaluate(apply_diff_op(nus, f), key.point);
        }
        out.check(direct == poly_route, "residue_pair vs apply_diff_op route");
    }
    return out;
}

Outcome fraction_normalization()
{
    Outcome out;
    Gen gen(104);
    for (int trial = 0; trial < 200; ++trial, ++out.cases) {
        const BangElement eta = gen.element(Gen::basis("W", "e", dimension(gen)), 5);
        out.check(from_fractions(to_fractions(eta)) == eta, "round trip");
    }
    // Every ket with a_i <= 4 over three labels, at a random point each.
    const Basis w = Gen::basis("W", "e", 3);
    for (unsigned a1 = 0; a1 <= 4; ++a1) {
        for (unsigned a2 = 0; a2 <= 4; ++a2) {
            for (unsigned a3 = 0; a3 <= 4; ++a3, ++out.cases) {
                const Multiindex a{{w.indices()[0], a1}, {w.indices()[1], a2}, {w.indices()[2], a3}};
                const Vector p = gen.vector(w);
                const auto labels = a.expand();
                std::vector<Vector> nus;
                for (const auto& label : labels) {
                    nus.push_back(Vector::unit(label));
                }
                FractionTerms expected;
                for (const auto& [exponents, c] : bang::testing::fractions_from_vacuum(labels)) {
                    expected.push_back({GeneralizedFraction{p, exponents}, c});
                }
                out.check(to_fractions(ket(p, nus)) == expected, "creation from the vacuum in fraction form");
                out.check(to_fractions(BangElement(CanonicalKet{p, a})) ==
                              FractionTerms{{GeneralizedFraction{p, a}, a.factorial()}},
                          "factorial factor");
            }
        }
    }
    return out;
}

struct LiftCase {
    Basis domain;
    Basis codomain;
    BangElement eta;
    LinearMapSpec phi;
};

LiftCase lift_case(Gen& gen, unsigned max_degree)
{
    Basis w = Gen::basis("W", "e", dimension(gen));
    Basis v = Gen::basis("V", "f", dimension(gen));
    BangElement eta = gen.element(w, max_degree);
    LinearMapSpec phi = gen.table(w, v, eta);
    return {w, v, eta, phi};
}

Outcome lifting_factorization()
{
    Outcome out;
    Gen gen(105);
    for (int trial = 0; trial < 200; ++trial, ++out.cases) {
        const LiftCase c = lift_case(gen, 4);
        out.check(dereliction(promote(c.phi, c.eta)) == eval_map(c.phi, c.eta), "d o promote = eval_map");
    }
    return out;
}

Outcome lifting_morphism()
{
    Outcome out;
    Gen gen(106);
    for (int trial = 0; trial < 200; ++trial, ++out.cases) {
        const LiftCase c = lift_case(gen, 4);
        const BangElement lifted = promote(c.phi, c.eta);
        const auto lift_ket = [&](const CanonicalKet& key) { return promote(c.phi, BangElement(key)); };
        out.check(coproduct(lifted) == map_slots(coproduct(c.eta), lift_ket), "Delta o Phi = (Phi x Phi) o Delta");
        out.check(counit(lifted) == counit(c.eta), "eps o Phi = eps");
    }
    return out;
}

Outcome oracle_equivalence()
{
    Outcome out;
    Gen gen(107);
    for (int trial = 0; trial < 200; ++trial, ++out.cases) {
        const Basis w = Gen::basis("W", "e", dimension(gen));
        const Basis v = Gen::basis("V", "f", dimension(gen));
        const unsigned s = static_cast<unsigned>(trial % 5);
        const CanonicalKet key{gen.vector(w), gen.content(w, s)};
        const BangElement eta = Rational(gen.nonzero_rational()) * BangElement(key);
        const LinearMapSpec table = gen.table(w, v, eta);
        const KetMap phi = table.as_ket_map();
        const BangElement lifted = promote(table, eta);
        for (const auto& m : bang::testing::monomials_up_to(v, s)) {
            const Polynomial f = Polynomial::monomial(m);
            const Rational paired = residue_pair(f, lifted);
            out.check(paired == coproduct_contraction(f, phi, eta), "pairing vs coproduct contraction");
            out.check(paired == partition_pairing(f, phi, eta), "pairing vs partition pairing");
        }
    }
    return out;
}

Outcome recursion_identity()
{
    Outcome out;
    Gen gen(108);
    for (int trial = 0; trial < 100; ++trial, ++out.cases) {
        const Basis w = Gen::basis("W", "e", dimension(gen));
        const Basis v = Gen::basis("V", "f", dimension(gen));
        const CanonicalKet key{gen.vector(w), gen.content(w, static_cast<unsigned>(gen.integer(0, 5)))};
        const BangElement eta(key);
        const LinearMapSpec table = gen.table(w, v, eta);
        const KetMap phi = table.as_ket_map();
        const Polynomial g = gen.polynomial(v, 3);
        for (const auto& e : v.indices()) {
            const Polynomial xg = x(e) * g;
            out.check(coproduct_contraction(xg, phi, eta) ==
                          bang::testing::recursion_rhs(phi, key, e, [&](const BangElement& rest) {
                              return coproduct_contraction(g, phi, rest);
                          }),
                      "recursion for the coproduct contraction");
            out.check(partition_pairing(xg, phi, eta) ==
                          bang::testing::recursion_rhs(phi, key, e, [&](const BangElement& rest) {
                              return partition_pairing(g, phi, rest);
                          }),
                      "recursion for the partition pairing");
        }
    }
    return out;
}

Outcome functoriality()
{
    Outcome out;
    Gen gen(109);
    for (int trial = 0; trial < 200; ++trial, ++out.cases) {
        const Basis u = Gen::basis("U", "e", dimension(gen));
        const Basis v = Gen::basis("V", "f", dimension(gen));
        const Basis t = Gen::basis("T", "g", dimension(gen));
        const BangElement eta = gen.element(u, 5);
        const MatrixMapSpec inner = gen.matrix(u, v), outer = gen.matrix(v, t);
        out.check(bang_map(MatrixMapSpec::identity(u), eta) == eta, "bang_map(id) = id");
        out.check(bang_map(compose(outer, inner), eta) == bang_map(outer, bang_map(inner, eta)), "composition");
        out.check(bang_map(inner, eta) == promote(derelict_then(inner), eta), "bang_map vs promote of psi o d");
    }
    for (int trial = 0; trial < 100; ++trial, ++out.cases) {
        const BangElement eta = gen.element(Gen::basis("W", "e", dimension(gen)), 5);
        out.check(promote(dereliction_map(), eta) == eta, "promote(d) = id");
    }
    return out;
}

Outcome partition_counts()
{
    Outcome out;
    const std::array<unsigned long, 9> bell{1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (std::size_t s = 0; s <= 8; ++s, ++out.cases) {
        const auto all = set_partitions(s);
        out.check(all.size() == bell[s], "Bell(" + std::to_string(s) + ")");
        out.check(all.size() == bang::testing::assignment_partition_count(s), "assignment enumeration");
        out.check(std::set<SetPartition>(all.begin(), all.end()).size() == all.size(), "duplicates");
        for (const auto& partition : all) {
            std::vector<bool> covered(s, false);
            bool ok = true;
            for (const auto& block : partition.blocks) {
                ok = ok && !block.empty();
                for (const std::size_t i : block) {
                    ok = ok && i < s && !covered[i];
                    if (i < s) {
                        covered[i] = true;
                    }
                }
            }
            for (const bool c : covered) {
                ok = ok && c;
            }
            out.check(ok, "not a partition");
        }
    }
    Gen gen(110);
    for (unsigned s = 0; s <= 6; ++s, ++out.cases) {
        const Basis w = Gen::basis("W", "e", 3), v = Gen::basis("V", "f", 3);
        const CanonicalKet key{gen.vector(w), gen.content(w, s)};
        const LinearMapSpec phi = gen.table(w, v, BangElement(key), true);
        const auto terms = lift_terms(phi.as_ket_map(), key);
        out.check(terms.size() == bell[s], "pre-merge term count for s = " + std::to_string(s));
        BangElement summed;
        for (const auto& term : terms) {
            summed += ket(term.target, term.creators);
        }
        out.check(summed == promote(phi, BangElement(key)), "pre-merge terms sum to promote");
    }
    return out;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Runs a shell command, returning its exit status and standard output.
std::pair<int, std::string> capture(const std::string& command)
{
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return {-1, output};
    }
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        output.append(buffer.data(), n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

Outcome cli_golden()
{
    Outcome out;
    const std::string bang = BANG_EXECUTABLE;
    const std::string golden = GOLDEN_DIR;
    const std::string session = golden + "/session.bang";
    for (const auto& [format, expected] :
         {std::pair{"text", golden + "/session.txt"}, std::pair{"machine", golden + "/session.json"}}) {
        ++out.cases;
        const auto [status, output] = capture("'" + bang + "' --input '" + session + "' --format " + format);
        out.check(status == 0, std::string(format) + " run exited " + std::to_string(status));
        out.check(output == slurp(expected), std::string(format) + " output differs from " + expected);
    }
    ++out.cases;
    const auto [status, log] = capture("'" + bang + "' --check --input '" + golden + "/examples.bang'");
    out.check(status == 0, "--check exited " + std::to_string(status) + "\n" + log);
    return out;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"coalgebra axioms", coalgebra_axioms},
        {"dereliction table", dereliction_table},
        {"pairing consistency", pairing_consistency},
        {"fraction normalization", fraction_normalization},
        {"lifting factorization", lifting_factorization},
        {"lifting is a coalgebra morphism", lifting_morphism},
        {"oracle equivalence", oracle_equivalence},
        {"recursion identity", recursion_identity},
        {"functoriality", functoriality},
        {"partition counts", partition_counts},
        {"CLI golden files", cli_golden},
    };

    const auto start = std::chrono::steady_clock::now();
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [name, run] = criteria[i];
        Outcome outcome;
        try {
            outcome = run();
        } catch (const std::exception& e) {
            outcome.check(false, std::string("exception: ") + e.what());
        }
        const bool pass = outcome.failures == 0;
        failed += pass ? 0 : 1;
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << name << " (" << outcome.cases
                  << " cases";
        if (!pass) {
            std::cout << ", " << outcome.failures << " failed checks; first: " << outcome.first_failure;
        }
        std::cout << ")\n";
    }
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << " in "
              << elapsed << " s\n";
    return failed == 0 ? 0 : 1;
}

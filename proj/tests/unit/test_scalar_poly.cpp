#include <doctest.h>

#include <array>
#include <stdexcept>

#include "bang/errors.hpp"
#include "bang/polynomial.hpp"
#include "generators.hpp"

using namespace bang;
using bang::testing::Gen;

namespace {

const BasisIndex e1{"e1"}, e2{"e2"}, e3{"e3"};

Polynomial x(const BasisIndex& i) { return Polynomial::variable(i); }

} // namespace

TEST_CASE("rational normal form and arithmetic")
{
    CHECK(Rational(6, 4).to_string() == "3/2");
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS(Rational::parse("1.5"));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK(factorial(5) == Rational(120));
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(2, 3) == Rational(0));
}

TEST_CASE("multiindex normal form")
{
    const Multiindex a{{e2, 1}, {e1, 2}, {e3, 0}, {e2, 1}};
    CHECK(a.size() == 2);
    CHECK(a.count(e1) == 2);
    CHECK(a.count(e2) == 2);
    CHECK(a.count(e3) == 0);
    CHECK(a.degree() == 4);
    CHECK(a.factorial() == Rational(4));
    const std::array labels{e1, e2, e1};
    CHECK(Multiindex::from_labels(labels) == Multiindex{{e1, 2}, {e2, 1}});
    CHECK_FALSE(Multiindex{{e1, 1}}.with_removed(e2).has_value());
    CHECK(a.sub_multisets().size() == 9);
    CHECK(graded_compare(Multiindex{{e1, 2}}, Multiindex{{e1, 1}, {e2, 1}}) < 0);
    CHECK(graded_compare(Multiindex{{e1, 1}, {e2, 1}}, Multiindex{{e2, 2}}) < 0);
    CHECK(graded_compare(Multiindex{{e3, 1}}, Multiindex{{e1, 1}, {e2, 1}}) > 0);
}

TEST_CASE("vector arithmetic")
{
    CHECK((Vector{{e1, Rational(1)}} + Vector{{e1, Rational(-1)}}).is_zero());
    CHECK((Rational(0) * Vector{{e1, Rational(3)}}).is_zero());
    const Vector sum = Vector{{e1, Rational(1, 2)}} + Vector{{e2, Rational(1, 3)}};
    CHECK(sum == Vector{{e1, Rational(1, 2)}, {e2, Rational(1, 3)}});
    CHECK(to_string(sum) == "{e1: 1/2, e2: 1/3}");
    CHECK(to_string(Vector{}) == "{}");
    const Basis w("W", {e1, e2});
    CHECK(to_string(Vector{{e1, Rational(2)}}, w) == "(2, 0)");
    CHECK_THROWS_AS(to_string(Vector{{e3, Rational(1)}}, w), ContextError);
    CHECK_THROWS_AS(Basis("W", {e1, e1}), ContextError);
}

TEST_CASE("polynomial evaluation")
{
    CHECK(evaluate(pow(x(e1), 2), Vector{{e1, Rational(3)}}) == Rational(9));
    CHECK(evaluate(Polynomial(Rational(1)), Vector{{e2, Rational(-4, 3)}}) == Rational(1));
    const Polynomial f = x(e1) * x(e2) - x(e2);
    CHECK(evaluate(f, Vector{{e1, Rational(2)}, {e2, Rational(5)}}) == Rational(5));
    CHECK(evaluate(x(e3), Vector{{e1, Rational(7)}}) == Rational(0));
}

TEST_CASE("partial derivatives")
{
    CHECK(partial(pow(x(e1), 3), e1) == Rational(3) * pow(x(e1), 2));
    CHECK(partial(x(e1), e2).is_zero());
    CHECK(partial(x(e1) * x(e2) + x(e1), e1) == x(e2) + Polynomial(Rational(1)));
}

TEST_CASE("apply_diff_op")
{
    const Polynomial f = x(e1) * x(e2) - Rational(3, 2) * x(e2);
    CHECK(apply_diff_op({}, f) == f);
    const std::array zero{Vector{}};
    CHECK(apply_diff_op(zero, f).is_zero());
    const std::array twice{Vector::unit(e1), Vector::unit(e1)};
    CHECK(apply_diff_op(twice, pow(x(e1), 2)) == Polynomial(Rational(2)));
}

TEST_CASE("polynomial rendering")
{
    const Polynomial f = pow(x(e1), 2) * x(e2) - Polynomial(Rational(3, 2));
    CHECK(to_string(f) == "x.e1^2*x.e2 - 3/2");
    CHECK(to_string(Polynomial{}) == "0");
    CHECK(to_string(Rational(-2) * x(e1) + x(e2)) == "-2*x.e1 + x.e2");
}

TEST_CASE("property: evaluation is a ring homomorphism")
{
    Gen gen(11);
    const Basis w = Gen::basis("W", "e", 3);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial f = gen.polynomial(w, 3), g = gen.polynomial(w, 3);
        const Vector p = gen.vector(w);
        const Rational c = gen.rational();
        CHECK(evaluate(f * g, p) == evaluate(f, p) * evaluate(g, p));
        CHECK(evaluate(f + c * g, p) == evaluate(f, p) + c * evaluate(g, p));
    }
}

TEST_CASE("property: partial derivatives commute")
{
    Gen gen(12);
    const Basis w = Gen::basis("W", "e", 3);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial f = gen.polynomial(w, 5);
        for (const auto& i : w.indices()) {
            for (const auto& j : w.indices()) {
                CHECK(partial(partial(f, i), j) == partial(partial(f, j), i));
            }
        }
    }
}

TEST_CASE("property: apply_diff_op is multilinear and symmetric")
{
    Gen gen(13);
    const Basis w = Gen::basis("W", "e", 3);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial f = gen.polynomial(w, 5);
        const Vector u = gen.vector(w), v = gen.vector(w), t = gen.vector(w);
        const Rational c = gen.rational();
        const std::array uvt{u, v, t}, tuv{t, u, v}, vut{v, u, t};
        const Polynomial base = apply_diff_op(uvt, f);
        CHECK(apply_diff_op(tuv, f) == base);
        CHECK(apply_diff_op(vut, f) == base);

        const std::array mixed{u + c * t, v};
        const std::array first{u, v}, second{t, v};
        CHECK(apply_diff_op(mixed, f) == apply_diff_op(first, f) + c * apply_diff_op(second, f));
    }
}

TEST_CASE("property: Leibniz rule")
{
    Gen gen(14);
    const Basis w = Gen::basis("W", "e", 3);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial f = gen.polynomial(w, 3), g = gen.polynomial(w, 3);
        for (const auto& i : w.indices()) {
            CHECK(partial(f * g, i) == partial(f, i) * g + f * partial(g, i));
        }
    }
}

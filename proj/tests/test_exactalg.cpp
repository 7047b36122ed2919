// Copyright 2026 the carlitzq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "testutil.hpp"

using namespace carlitzq;
using testutil::make_poly;
using testutil::make_ratfunc;
using testutil::random_intpoly;
using testutil::random_ratfunc;

TEST_CASE("Rational canonical form and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7).str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), ZeroDenominator);

    CHECK(Rational::parse("1/2") == Rational(1, 2));
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("+7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), ZeroDenominator);
    CHECK_THROWS_AS(Rational::parse("a/b"), Error);
    CHECK_THROWS_AS(Rational::parse("1/-2"), Error);
    CHECK_THROWS_AS(Rational::parse(""), Error);

    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational(0).pow(-1), DivisionByZero);
}

TEST_CASE("IntPoly basics and printing") {
    IntPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.str() == "0");

    IntPoly p = make_poly({1, 2, 2, 1}); // q^3 + 2q^2 + 2q + 1
    CHECK(p.degree() == 3);
    CHECK(p.str() == "q^3 + 2*q^2 + 2*q + 1");
    CHECK(make_poly({1, -2, 1}).str() == "q^2 - 2*q + 1");
    CHECK(make_poly({-1}).str() == "-1");
    CHECK(make_poly({0, 1}).str() == "q");
    CHECK(make_poly({0, -3}).str() == "-3*q");

    CHECK(make_poly({0, 1}).pow(3) == make_poly({0, 0, 0, 1}));
    CHECK(p.eval(Rational(1)) == Rational(6));
    CHECK(make_poly({-2, 0, 2}).content() == 2);
    CHECK(make_poly({-2, 0, 2}).primitive_part() == make_poly({-1, 0, 1}));
}

TEST_CASE("poly_gcd spec examples") {
    CHECK(poly_gcd(make_poly({-1, 0, 1}), make_poly({-1, 1})) == make_poly({-1, 1}));
    CHECK(poly_gcd(make_poly({0, 1}), make_poly({1, 1})) == make_poly({1}));
    CHECK(poly_gcd(make_poly({0, 2, 2}), make_poly({0, 4})) == make_poly({0, 1}));
    CHECK(poly_gcd(IntPoly(), IntPoly()).is_zero());
    CHECK(poly_gcd(IntPoly(), make_poly({0, -2})) == make_poly({0, 1}));
}

TEST_CASE("poly_gcd properties") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        IntPoly a = random_intpoly(rng, 3, true);
        IntPoly b = random_intpoly(rng, 3, true);
        IntPoly c = random_intpoly(rng, 2, true);
        IntPoly g = poly_gcd(a * c, b * c);
        // The common factor's primitive part must divide the gcd.
        CHECK_NOTHROW((void)g.div_exact(poly_gcd(c, c)));
        // And the gcd divides both inputs.
        CHECK_NOTHROW((void)(a * c).div_exact(g));
        CHECK_NOTHROW((void)(b * c).div_exact(g));
        CHECK(g.leading() > 0);
        CHECK(g.content() == 1);
    }
}

TEST_CASE("ratfunc_normalize spec examples") {
    RatFunc a = RatFunc::normalized(make_poly({-1, 0, 1}), make_poly({-1, 1}));
    CHECK(a.num() == make_poly({1, 1}));
    CHECK(a.den() == make_poly({1}));

    RatFunc b = RatFunc::normalized(IntPoly(), make_poly({7, 7}));
    CHECK(b.num().is_zero());
    CHECK(b.den().is_one());

    RatFunc c = RatFunc::normalized(make_poly({2, 2}), make_poly({4}));
    CHECK(c.num() == make_poly({1, 1}));
    CHECK(c.den() == make_poly({2}));

    CHECK_THROWS_AS(RatFunc::normalized(make_poly({1}), IntPoly()), ZeroDenominator);

    // Denominator sign convention.
    RatFunc d = RatFunc::normalized(make_poly({1}), make_poly({1, -1}));
    CHECK(d.den().leading() > 0);
    CHECK(d.num() == make_poly({-1}));
}

TEST_CASE("RatFunc field operations") {
    RatFunc inv_qm1 = make_ratfunc({1}, {-1, 1}); // 1/(q-1)
    RatFunc sum = inv_qm1 + RatFunc(1);
    CHECK(sum == make_ratfunc({0, 1}, {-1, 1})); // q/(q-1)

    RatFunc qp1 = RatFunc(make_poly({1, 1}));
    CHECK((qp1 * qp1.inverse()).is_one());

    RatFunc ratio = make_ratfunc({-1, 1}, {1, 1});
    CHECK(ratio.pow(2) == make_ratfunc({1, -2, 1}, {1, 2, 1}));
    CHECK(ratio.pow(-2) == make_ratfunc({1, 2, 1}, {1, -2, 1}));
    CHECK_THROWS_AS(RatFunc() .inverse(), DivisionByZero);
    CHECK_THROWS_AS(qp1 / RatFunc(), DivisionByZero);

    CHECK(RatFunc::q_power(-2) == make_ratfunc({1}, {0, 0, 1}));
}

TEST_CASE("ratfunc_eval spec examples") {
    RatFunc f = make_ratfunc({0, 1}, {1, 1});
    CHECK(f.eval(Rational(1, 2)) == Rational(1, 3));
    CHECK(RatFunc(make_poly({1, 1})).eval(Rational(-1)) == Rational(0));
    CHECK_THROWS_AS(make_ratfunc({1}, {-1, 1}).eval(Rational(1)), PoleAtPoint);
}

TEST_CASE("RatFunc printing") {
    CHECK(make_ratfunc({0, 1}, {1, 2, 2, 1}).str() == "q/(q^3 + 2*q^2 + 2*q + 1)");
    CHECK(make_ratfunc({-1}, {1, 1}).str() == "-1/(q + 1)");
    CHECK(make_ratfunc({1, 1}, {2}).str() == "(q + 1)/(2)");
    CHECK(RatFunc(1).str() == "1");
    CHECK(RatFunc().str() == "0");
    CHECK(make_ratfunc({1, 2, 1}, {1}).str() == "q^2 + 2*q + 1");
}

TEST_CASE("canonical form properties") {
    std::mt19937_64 rng(11);
    const Rational q0(3, 5);
    for (int trial = 0; trial < 80; ++trial) {
        IntPoly a = random_intpoly(rng, 3, false);
        IntPoly b = random_intpoly(rng, 3, true);
        IntPoly c = random_intpoly(rng, 2, true);
        CHECK(RatFunc::normalized(a * c, b * c) == RatFunc::normalized(a, b));

        RatFunc f = random_ratfunc(rng), g = random_ratfunc(rng);
        bool cross = (f.num() * g.den()) == (g.num() * f.den());
        CHECK(cross == (f == g));
        try {
            CHECK((f + g).eval(q0) == f.eval(q0) + g.eval(q0));
            CHECK((f * g).eval(q0) == f.eval(q0) * g.eval(q0));
        } catch (const PoleAtPoint&) {
            // Quantified only over points where both sides are defined.
        }
    }
}

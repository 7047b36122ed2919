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

#include "carlitzq/classical.hpp"
#include "testutil.hpp"

using namespace carlitzq;
using testutil::make_poly;
using testutil::make_ratfunc;
using testutil::random_values;

TEST_CASE("q_bracket") {
    CHECK(q_bracket(0).is_zero());
    CHECK(q_bracket(3) == RatFunc(make_poly({1, 1, 1})));
    CHECK(q_bracket(-1) == make_ratfunc({-1}, {0, 1}));
    // [-k] = -q^{-k} [k] for a few k.
    for (long k = 1; k <= 6; ++k)
        CHECK(q_bracket(-k) == -(RatFunc::q_power(-k) * q_bracket(k)));
}

TEST_CASE("q_factorial") {
    CHECK(q_factorial(0).is_one());
    CHECK(q_factorial(2) == make_poly({1, 1}));
    CHECK(q_factorial(3) == make_poly({1, 2, 2, 1}));
}

TEST_CASE("q_binomial") {
    CHECK(q_binomial(5, 0).is_one());
    CHECK(q_binomial(2, 1) == make_poly({1, 1}));
    CHECK(q_binomial(4, 2) == make_poly({1, 1, 2, 1, 1}));
    CHECK_THROWS_AS(q_binomial(3, 4), IndexOutOfRange);

    for (unsigned long n = 0; n <= 20; ++n)
        for (unsigned long k = 0; k <= n; ++k) {
            CHECK(q_binomial(n, k) == q_binomial(n, n - k));
            CHECK(q_binomial(n, k).eval_int(1) == binomial(n, k));
        }
}

TEST_CASE("q_falling_int") {
    CHECK(q_falling_int(5, 0).is_one());
    CHECK(q_falling_int(2, 3).is_zero());
    CHECK(q_falling_int(-1, 2) == make_ratfunc({1, 1}, {0, 0, 0, 1}));

    // [-1]_k = (-1)^k q^{-k(k+1)/2} [k]!
    for (unsigned long k = 0; k <= 10; ++k) {
        RatFunc expected = RatFunc::q_power(-static_cast<long>(k * (k + 1) / 2)) *
                           RatFunc(q_factorial(k));
        if (k % 2 == 1) expected = -expected;
        CHECK(q_falling_int(-1, k) == expected);
    }
}

TEST_CASE("bracket_x_power") {
    CHECK(bracket_x_power(0) == QExpPoly{RatFunc(1)});
    QExpPoly b1 = bracket_x_power(1);
    CHECK(b1.coeff(0) == make_ratfunc({-1}, {-1, 1}));
    CHECK(b1.coeff(1) == make_ratfunc({1}, {-1, 1}));
    QExpPoly b2 = bracket_x_power(2);
    RatFunc inv_sq = make_ratfunc({1}, {1, -2, 1});
    CHECK(b2.coeff(0) == inv_sq);
    CHECK(b2.coeff(1) == RatFunc(-2) * inv_sq);
    CHECK(b2.coeff(2) == inv_sq);
}

TEST_CASE("bracket_x_falling") {
    CHECK(bracket_x_falling(0) == QExpPoly{RatFunc(1)});
    CHECK(bracket_x_falling(1) == bracket_x_power(1));
    CHECK(bracket_x_falling(2).eval_int(3).eval(Rational(2)) == Rational(21));
    // Integer evaluations reproduce the integer falling products.
    for (long n = -2; n <= 5; ++n)
        for (unsigned long k = 0; k <= 4; ++k)
            CHECK(bracket_x_falling(k).eval_int(n) == q_falling_int(n, k));
}

TEST_CASE("qexp evaluation and shifting") {
    CHECK(bracket_x_power(1).eval_int(0).is_zero());
    CHECK(bracket_x_power(2).eval_int(2) == RatFunc(make_poly({1, 2, 1})));
    CHECK(QExpPoly::y().eval_int(5) == RatFunc(make_poly({0, 0, 0, 0, 0, 1})));

    CHECK(QExpPoly::y().shift_x(1) == QExpPoly::monomial(RatFunc(make_poly({0, 1})), 1));
    QExpPoly c{make_ratfunc({3, 1}, {2})};
    CHECK(c.shift_x(4) == c);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        QExpPoly p(random_values(rng, 5));
        CHECK(p.shift_x(1).shift_x(-1) == p);
        // Shifting by j then evaluating at N equals evaluating at N + j.
        CHECK(p.shift_x(2).eval_int(1) == p.eval_int(3));
    }
}

TEST_CASE("divide_by_y") {
    CHECK(QExpPoly::monomial(RatFunc(1), 2).divide_by_y() == QExpPoly::y());
    CHECK(QExpPoly().divide_by_y().is_zero());
    QExpPoly one_plus_y = QExpPoly{RatFunc(1)} + QExpPoly::y();
    CHECK_THROWS_AS(one_plus_y.divide_by_y(), NonDivisible);
}

TEST_CASE("finite_difference_iter") {
    auto tabulate = [](auto f, std::size_t len) {
        std::vector<RatFunc> v(len);
        for (std::size_t i = 0; i < len; ++i) v[i] = RatFunc(f(static_cast<long>(i)));
        return v;
    };
    std::vector<RatFunc> ones = tabulate([](long) { return 1L; }, 4);
    CHECK(finite_difference_iter(ones, 1).is_zero());
    std::vector<RatFunc> squares = tabulate([](long x) { return x * x; }, 4);
    CHECK(finite_difference_iter(squares, 2) == RatFunc(2));
    std::vector<RatFunc> linear = tabulate([](long x) { return x; }, 4);
    CHECK(finite_difference_iter(linear, 2).is_zero());
    CHECK_THROWS_AS(finite_difference_iter(linear, 5), InsufficientValues);
}

TEST_CASE("binomial transforms") {
    std::vector<RatFunc> ones(5, RatFunc(1));
    std::vector<RatFunc> v = binomial_inversion(ones);
    CHECK(v[0] == RatFunc(1));
    for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i].is_zero());

    std::vector<RatFunc> pow2 = {RatFunc(1), RatFunc(2), RatFunc(4)};
    std::vector<RatFunc> inv = binomial_inversion(pow2);
    CHECK(inv == std::vector<RatFunc>{RatFunc(1), RatFunc(1), RatFunc(1)});

    std::mt19937_64 rng(5);
    for (std::size_t len : {1, 3, 7, 12}) {
        std::vector<RatFunc> x = random_values(rng, len);
        CHECK(binomial_inversion(binomial_forward(x)) == x);
        CHECK(binomial_forward(binomial_inversion(x)) == x);
    }
}

TEST_CASE("q_stirling2_row basics") {
    CHECK(q_stirling2_row(0).entries == std::vector<RatFunc>{RatFunc(1)});
    CHECK(q_stirling2_row(2).entries ==
          std::vector<RatFunc>{RatFunc(), RatFunc(1), RatFunc(1)});
    CHECK(q_stirling2_row(3).entries[2] == RatFunc(make_poly({2, 1})));
}

TEST_CASE("q_stirling2_row against the triangle recurrence") {
    // Independent oracle: S_q(n+1,k) = S_q(n,k-1) + [k] S_q(n,k),
    // seeded from row 0.
    std::vector<RatFunc> prev = {RatFunc(1)};
    for (unsigned long n = 0; n <= 8; ++n) {
        CHECK(q_stirling2_row(n).entries == prev);
        std::vector<RatFunc> next(n + 2);
        for (unsigned long k = 0; k <= n + 1; ++k) {
            RatFunc up = (k <= n) ? prev[k] : RatFunc();
            RatFunc left = (k >= 1) ? prev[k - 1] : RatFunc();
            next[k] = left + q_bracket(static_cast<long>(k)) * up;
        }
        prev = std::move(next);
    }
    // Classical check point through the recurrence at q = 1.
    CHECK(eval_at_q1(q_stirling2_row(3).entries[2]) == Rational(3));
}

TEST_CASE("falling-basis round-trip") {
    for (unsigned long n = 0; n <= 10; ++n) {
        StirlingRowQ row = q_stirling2_row(n);
        QExpPoly rebuilt;
        for (unsigned long k = 0; k <= n; ++k)
            rebuilt += bracket_x_falling(k) *
                       (RatFunc::q_power(static_cast<long>(k * (k - 1) / 2)) * row.entries[k]);
        CHECK(rebuilt == bracket_x_power(n));
    }
}

TEST_CASE("Gauss product identity on a rational grid") {
    for (unsigned long n = 1; n <= 10; ++n) {
        // (n+1)^2 grid points pin a bivariate polynomial of degree n in
        // each variable.
        for (long xi = 0; xi <= static_cast<long>(n); ++xi)
            for (long yi = 1; yi <= static_cast<long>(n) + 1; ++yi) {
                Rational x(xi, 7), y(yi, 5);
                RatFunc lhs(1);
                for (unsigned long k = 0; k < n; ++k)
                    lhs *= RatFunc(x) + RatFunc::q_power(static_cast<long>(k)) * RatFunc(y);
                RatFunc rhs;
                for (unsigned long k = 0; k <= n; ++k)
                    rhs += RatFunc::q_power(static_cast<long>(k * (k - 1) / 2)) *
                           RatFunc(q_binomial(n, k)) *
                           RatFunc(x.pow(static_cast<long>(n - k))) *
                           RatFunc(y.pow(static_cast<long>(k)));
                CHECK(lhs == rhs);
            }
    }
}

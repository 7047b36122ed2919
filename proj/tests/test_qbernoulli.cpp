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

#include "carlitzq/qbernoulli.hpp"
#include "testutil.hpp"

using namespace carlitzq;
using testutil::make_poly;
using testutil::make_ratfunc;

TEST_CASE("tower anchor values") {
    BernoulliTower tower(3, 4);
    // At n = 0 the closed form gives r/[r]; that is 1 for the first two
    // rows and collapses to 1 for every order only at q = 1.
    CHECK(tower.number(0, 0) == RatFunc(1)); // eta_0
    CHECK(tower.number(1, 0) == RatFunc(1)); // beta_0
    for (unsigned long r = 2; r <= 3; ++r)
        CHECK(tower.number(r, 0) ==
              RatFunc(static_cast<long>(r)) / q_bracket(static_cast<long>(r)));
    CHECK(tower.number(2, 0) == make_ratfunc({2}, {1, 1}));
    CHECK(tower.number(0, 1).is_zero());                          // eta_1
    CHECK(tower.number(1, 1) == make_ratfunc({-1}, {1, 1}));      // beta_1
    CHECK(tower.number(1, 2) == make_ratfunc({0, 1}, {1, 2, 2, 1})); // beta_2 = q/([2][3])
    // eta_2 = -1/((q-1)(q+1)).
    CHECK(tower.number(0, 2) == make_ratfunc({-1}, {-1, 0, 1}));
}

TEST_CASE("closed form matches the tower and handles q = 1 remarks") {
    BernoulliTower tower(2, 5);
    for (unsigned long r = 0; r <= 2; ++r)
        for (unsigned long n = 0; n <= 5; ++n) {
            CHECK(beta_poly_closed(n, r) == tower.poly(r, n));
            CHECK(beta_number_closed(n, r) == tower.number(r, n));
        }
    // The eta numbers keep their (q-1) poles; they are valid rational
    // functions away from q = 1.
    CHECK(beta_number_closed(2, 0).den().eval(Rational(1)).is_zero());
}

TEST_CASE("power_sum_direct spec examples") {
    CHECK(power_sum_direct(0, 1, 3) == RatFunc(make_poly({1, 1, 1})));
    // q [1] + q^2 [2] = q + q^2 (1 + q).
    CHECK(power_sum_direct(1, 1, 3) ==
          RatFunc(make_poly({0, 1}) + make_poly({0, 0, 1, 1})));
    CHECK(power_sum_direct(2, 2, 2) == RatFunc(make_poly({0, 0, 1})));
    CHECK_THROWS_AS(power_sum_direct(1, 0, 3), Error);
    CHECK_THROWS_AS(power_sum_direct(1, 1, 0), Error);
}

TEST_CASE("power-sum closed forms, single instances") {
    CHECK(check_thm2(0, 1, 1).ok());
    CHECK(check_thm2(5, 2, 4).ok());
    CHECK(check_thm3(3, 2, 1, 4).ok());
    CHECK(check_thm3(4, 2, 2, 3).ok());
    CHECK_THROWS_AS(check_thm3(1, 1, 2, 3), Error); // r < d

    BernoulliTower tower(3, 6);
    CHECK(check_cor2(1, 1, tower).ok());
    CHECK(check_cor2(4, 5, tower).ok());
    CHECK(check_cor3(1, 1, tower).ok());
    CHECK(check_cor3(1, 2, tower).ok());
    CHECK(check_thm5(3, 0, 4, tower).ok());
    CHECK(check_thm5(3, 3, 4, tower).ok());
}

TEST_CASE("theorem-5 reduction to the low-order corollaries") {
    // r = 0 is the eta-sum identity; r = 1 the beta one: check the raw
    // sums agree with the corollary forms.
    BernoulliTower tower(1, 6);
    for (unsigned long n = 1; n <= 6; ++n)
        for (unsigned long N = 1; N <= 4; ++N) {
            RatFunc lhs0 = RatFunc(static_cast<long>(n)) * power_sum_direct(n - 1, 1, N);
            RatFunc rhs0 = tower.poly(0, n).eval_int(static_cast<long>(N)) - tower.number(0, n);
            CHECK(lhs0 == rhs0);
        }
}

TEST_CASE("f_r closed form") {
    // k = 0, r = 1: the sum collapses to [N].
    QExpPoly f = f_r_closed(1, 0);
    for (long N = 1; N <= 6; ++N) CHECK(f.eval_int(N) == q_bracket(N));
    CHECK(f.eval_int(0).is_zero());

    CHECK(check_prop3(2, 1, 8).ok());
    CHECK(check_prop3(3, 5, 8).ok());
}

TEST_CASE("partial fraction coefficients") {
    PartialFractionQ pf0 = partial_fraction_q(0);
    CHECK(pf0.alphas == std::vector<RatFunc>{RatFunc(1)});

    PartialFractionQ pf1 = partial_fraction_q(1);
    CHECK(pf1.alphas[1] == RatFunc(make_poly({0, 1})));
    CHECK(pf1.alphas[0] == -RatFunc(make_poly({0, 1})));
    // Direct check of the k = 1 identity y = alpha_0 [X-1] + alpha_1 [X].
    CHECK(pf1.alphas[0] * bracket_x_minus(1) + pf1.alphas[1] * bracket_x_minus(0) ==
          QExpPoly::y());

    for (unsigned long k = 0; k <= 6; ++k) CHECK(check_prop4(k).ok());
}

TEST_CASE("partial fractions against a Gaussian-elimination oracle") {
    // Independent route: solve the linear system expressing y^k in the
    // basis {prod_{j != i} [X-j]} over Q(q) and compare coefficients.
    for (unsigned long k = 0; k <= 4; ++k) {
        std::vector<std::vector<RatFunc>> m(k + 1, std::vector<RatFunc>(k + 2));
        for (unsigned long i = 0; i <= k; ++i) {
            QExpPoly basis{RatFunc(1)};
            for (unsigned long j = 0; j <= k; ++j)
                if (j != i) basis *= bracket_x_minus(static_cast<long>(j));
            for (unsigned long row = 0; row <= k; ++row) m[row][i] = basis.coeff(row);
        }
        for (unsigned long row = 0; row <= k; ++row)
            m[row][k + 1] = (row == k) ? RatFunc(1) : RatFunc();

        for (unsigned long col = 0; col <= k; ++col) {
            unsigned long pivot = col;
            while (m[pivot][col].is_zero()) ++pivot;
            std::swap(m[col], m[pivot]);
            RatFunc inv = m[col][col].inverse();
            for (auto& x : m[col]) x *= inv;
            for (unsigned long row = 0; row <= k; ++row) {
                if (row == col || m[row][col].is_zero()) continue;
                RatFunc factor = m[row][col];
                for (unsigned long c2 = 0; c2 <= k + 1; ++c2)
                    m[row][c2] -= factor * m[col][c2];
            }
        }
        PartialFractionQ pf = partial_fraction_q(k);
        for (unsigned long i = 0; i <= k; ++i) CHECK(m[i][k + 1] == pf.alphas[i]);
    }
}

TEST_CASE("g_r spec values") {
    // r = 1: the weight (-1)^k [k]!/[k+1].
    for (unsigned long k = 0; k <= 8; ++k) {
        RatFunc expected = RatFunc(q_factorial(k)) / q_bracket(static_cast<long>(k) + 1);
        if (k % 2 == 1) expected = -expected;
        CHECK(g_r_sum_form(1, k) == expected);
        CHECK(phi_r(1, k) == expected);
    }
    // r = 2: (-1)^k [k]! q^{-1} (1/[k+1] + (q-1)/[k+2]).
    RatFunc qm1 = RatFunc(IntPoly::q() - IntPoly(1));
    for (unsigned long k = 0; k <= 8; ++k) {
        RatFunc expected = RatFunc(q_factorial(k)) * RatFunc::q_power(-1) *
                           (q_bracket(static_cast<long>(k) + 1).inverse() +
                            qm1 / q_bracket(static_cast<long>(k) + 2));
        if (k % 2 == 1) expected = -expected;
        CHECK(g_r_fraction_form(2, k) == expected);
        CHECK(phi_r(2, k) == expected);
    }
    for (unsigned long r = 1; r <= 4; ++r)
        for (unsigned long k = 0; k <= 8; ++k) CHECK(check_g_r(r, k).ok());
}

TEST_CASE("Stirling expansion of the numbers") {
    CHECK(beta_via_stirling(0, 1) == RatFunc(1));
    CHECK(beta_via_stirling(2, 1) == make_ratfunc({0, 1}, {1, 2, 2, 1}));
    BernoulliTower tower(4, 10);
    for (unsigned long r = 1; r <= 4; ++r)
        for (unsigned long n = 0; n <= 10; ++n)
            CHECK(beta_via_stirling(n, r) == tower.number(r, n));
}

TEST_CASE("pair identity via the Stirling row") {
    BernoulliTower tower(1, 11);
    // n = 0: beta_0 + q beta_1 = 1/(q+1) = [0]!/[2].
    RatFunc lhs = tower.number(1, 0) + RatFunc::q_power(1) * tower.number(1, 1);
    CHECK(lhs == make_ratfunc({1}, {1, 1}));
    for (unsigned long n = 0; n <= 10; ++n) CHECK(check_cor6(n, tower).ok());
}

TEST_CASE("symbolic suite") {
    Report r = check_symbolic(12, 4);
    CHECK(r.ok());
    // The n = 1 defect for the order-1 sequence: q + (q^2-1) beta_1 = 1.
    RatFunc beta1 = beta_number_closed(1, 1);
    RatFunc lhs = RatFunc(make_poly({0, 1})) + RatFunc(make_poly({-1, 0, 1})) * beta1;
    CHECK(lhs == RatFunc(1));
}

TEST_CASE("triple agreement") {
    CHECK(check_triple_agreement(6, 3).ok());
}

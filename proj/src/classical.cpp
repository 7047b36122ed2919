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

#include "carlitzq/classical.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace carlitzq {

BigInt classical_stirling2(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    // row[j] = S(i, j) while climbing the triangle.
    std::vector<BigInt> row(n + 1, BigInt(0));
    row[0] = 1;
    for (unsigned long i = 1; i <= n; ++i) {
        for (unsigned long j = std::min(i, n); j >= 1; --j)
            row[j] = row[j - 1] + BigInt(static_cast<long>(j)) * row[j];
        row[0] = 0;
    }
    return row[k];
}

Rational classical_bernoulli(unsigned long n) {
    Rational acc(0);
    for (unsigned long k = 0; k <= n; ++k) {
        Rational term = Rational(factorial(k), BigInt(static_cast<long>(k) + 1)) *
                        Rational(classical_stirling2(n, k));
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
}

Rational eval_at_q1(const RatFunc& f) {
    Rational den = f.den().eval(Rational(1));
    if (den.is_zero()) throw PoleAtOne("eval_at_q1: denominator vanishes at q = 1");
    return f.num().eval(Rational(1)) / den;
}

SeriesReport series_beta(unsigned long n, unsigned long r, const Rational& q0,
                         const Rational& tol) {
    if (n < 1) throw Error("series_beta: n must be >= 1");
    if (!(tol > Rational(0))) throw Error("series_beta: tol must be positive");
    Rational aq = abs(q0);
    if (!(aq < Rational(1))) throw InvalidQ("series_beta: |q| must be < 1, got " + q0.str());

    SeriesReport rep;
    rep.n = n;
    rep.r = r;
    rep.q0 = q0;
    rep.exact_value = beta_number_closed(n, r).eval(q0);

    const unsigned long m = std::max<unsigned long>(r, 1);
    const Rational one(1);
    // bound(K) = C * |q|^{mK}; C collects the termwise estimate
    // |[k]| <= 1/(1-|q|) and the geometric tail of |q|^{mk}.
    Rational c = Rational(static_cast<long>(n + 2 * r + 2)) *
                 (one - aq).pow(1 - static_cast<long>(n)) / (one - aq.pow(static_cast<long>(m)));

    Rational partial = (r == 0) ? (one - q0).pow(-static_cast<long>(n)) : Rational(0);
    Rational bracket(0);              // [K] at q0
    Rational q_pow_k(1);              // q0^K
    Rational q_pow_rk(1);             // q0^{rK}
    Rational q_pow_r1k(1);            // q0^{(r+1)K}
    Rational aq_pow_mk(1);            // |q0|^{mK}
    const Rational q_pow_r = q0.pow(static_cast<long>(r));
    const Rational q_pow_r1 = q0.pow(static_cast<long>(r) + 1);
    const Rational aq_pow_m = aq.pow(static_cast<long>(m));

    unsigned long k = 0;
    while (true) {
        Rational bound = c * aq_pow_mk;
        if (bound < tol) {
            rep.terms_used = k;
            rep.tail_bound = bound;
            break;
        }
        Rational bracket_pow = bracket.pow(static_cast<long>(n) - 1);
        if (r == 0) {
            partial -= Rational(static_cast<long>(n)) * q_pow_k * bracket_pow;
        } else {
            partial += (Rational(static_cast<long>(r)) * q_pow_rk -
                        Rational(static_cast<long>(n + r)) * q_pow_r1k) *
                       bracket_pow;
        }
        bracket += q_pow_k;
        q_pow_k *= q0;
        q_pow_rk *= q_pow_r;
        q_pow_r1k *= q_pow_r1;
        aq_pow_mk *= aq_pow_m;
        ++k;
    }
    rep.partial_sum = partial;
    return rep;
}

Report check_q1_limits(unsigned long n_max, unsigned long r_max) {
    Report report;
    report.title = "q = 1 specializations";
    if (r_max < 1) throw Error("check_q1_limits: r_max must be >= 1");

    for (unsigned long r = 1; r <= r_max; ++r)
        for (unsigned long n = 0; n <= n_max; ++n) {
            bool pass = false;
            std::string detail;
            try {
                Rational got = eval_at_q1(beta_number_closed(n, r));
                pass = got == classical_bernoulli(n);
                if (!pass) detail = "got " + got.str();
            } catch (const PoleAtOne&) {
                detail = "unexpected pole";
            }
            report.add("beta_n^(r) at q=1 equals B_n, n=" + std::to_string(n) +
                           " r=" + std::to_string(r),
                       pass, detail);
        }

    for (unsigned long n = 2; n <= n_max; ++n) {
        bool poled = false;
        try {
            eval_at_q1(beta_number_closed(n, 0));
        } catch (const PoleAtOne&) {
            poled = true;
        }
        report.add("eta_n diverges at q=1, n=" + std::to_string(n), poled);
    }

    for (unsigned long n = 0; n <= n_max; ++n) {
        Rational lhs = classical_bernoulli(n) + classical_bernoulli(n + 1);
        Rational rhs(0);
        for (unsigned long k = 0; k <= n; ++k) {
            Rational term = Rational(factorial(k), BigInt(static_cast<long>(k) + 2)) *
                            Rational(classical_stirling2(n, k));
            rhs += (k % 2 == 0) ? term : -term;
        }
        report.add("B_n + B_{n+1} = sum (-1)^k k!/(k+2) S(n,k), n=" + std::to_string(n),
                   lhs == rhs);

        // The q-weighted identity collapses to the classical one at q = 1.
        Rational left_q1 = eval_at_q1(beta_number_closed(n, 1) +
                                      RatFunc::q_power(1) * beta_number_closed(n + 1, 1));
        report.add("q-identity for beta_n + q beta_{n+1} at q=1, n=" + std::to_string(n),
                   left_q1 == lhs);
    }

    for (unsigned long n = 0; n <= n_max; ++n) {
        StirlingRowQ row = q_stirling2_row(n);
        bool all = true;
        for (unsigned long k = 0; k <= n; ++k)
            all = all && eval_at_q1(row.entries[k]) == Rational(classical_stirling2(n, k));
        report.add("S_q(n,k) at q=1 equals S(n,k), n=" + std::to_string(n), all);
    }
    return report;
}

Report check_cor4(unsigned long n, unsigned long r, std::span<const Rational> q_grid,
                  const Rational& tol) {
    Report report;
    report.title = "series at fixed q plus exact q=1 substitution";
    if (n < 1 || r < 1) throw Error("check_cor4: need n >= 1 and r >= 1");
    for (const Rational& q0 : q_grid) {
        SeriesReport rep = series_beta(n, r, q0, tol);
        report.add("series matches exact value at q0=" + q0.str() + ", n=" + std::to_string(n) +
                       " r=" + std::to_string(r),
                   rep.within_bound() && rep.tail_bound < tol);
    }
    Rational b = classical_bernoulli(n);
    report.add("beta_n^(r) at q=1 equals B_n, n=" + std::to_string(n) +
                   " r=" + std::to_string(r),
               eval_at_q1(beta_number_closed(n, r)) == b);
    return report;
}

} // namespace carlitzq

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

#include "carlitzq/qsymbols.hpp"

#include <string>

namespace carlitzq {

IntPoly q_bracket_poly(unsigned long k) {
    std::vector<BigInt> c(k, BigInt(1));
    return IntPoly(std::move(c));
}

RatFunc q_bracket(long k) {
    if (k >= 0) return RatFunc(q_bracket_poly(static_cast<unsigned long>(k)));
    // [k] = -q^k [-k] for k < 0.
    return -(RatFunc::q_power(k) * RatFunc(q_bracket_poly(static_cast<unsigned long>(-k))));
}

IntPoly q_factorial(unsigned long n) {
    IntPoly r(1);
    for (unsigned long k = 2; k <= n; ++k) r *= q_bracket_poly(k);
    return r;
}

IntPoly q_binomial(unsigned long n, unsigned long k) {
    if (k > n)
        throw IndexOutOfRange("q_binomial: k = " + std::to_string(k) + " exceeds n = " +
                              std::to_string(n));
    // The quotient [n]!/([k]![n-k]!) is exact; div_exact checks that.
    return q_factorial(n).div_exact(q_factorial(k) * q_factorial(n - k));
}

RatFunc q_falling_int(long n, unsigned long k) {
    RatFunc r(1);
    for (unsigned long j = 0; j < k; ++j) {
        RatFunc f = q_bracket(n - static_cast<long>(j));
        if (f.is_zero()) return RatFunc();
        r *= f;
    }
    return r;
}

QExpPoly bracket_x_power(unsigned long n) {
    return bracket_x_minus(0).pow(n);
}

QExpPoly bracket_x_minus(long j) {
    RatFunc inv_qm1 = RatFunc::normalized(IntPoly(1), IntPoly::q() - IntPoly(1));
    std::vector<RatFunc> c(2);
    c[0] = -inv_qm1;
    c[1] = RatFunc::q_power(-j) * inv_qm1;
    return QExpPoly(std::move(c));
}

QExpPoly bracket_x_falling(unsigned long k) {
    QExpPoly r{RatFunc(1)};
    for (unsigned long j = 0; j < k; ++j) r *= bracket_x_minus(static_cast<long>(j));
    return r;
}

RatFunc finite_difference_iter(std::span<const RatFunc> values, unsigned long n) {
    if (values.size() < n + 1)
        throw InsufficientValues("finite_difference_iter: need " + std::to_string(n + 1) +
                                 " values, got " + std::to_string(values.size()));
    RatFunc acc;
    for (unsigned long k = 0; k <= n; ++k) {
        RatFunc term = RatFunc(binomial(n, k)) * values[k];
        acc += ((n - k) % 2 == 0) ? term : -term;
    }
    return acc;
}

std::vector<RatFunc> binomial_inversion(std::span<const RatFunc> u) {
    std::vector<RatFunc> v(u.size());
    for (std::size_t n = 0; n < u.size(); ++n) {
        RatFunc acc;
        for (std::size_t k = 0; k <= n; ++k) {
            RatFunc term = RatFunc(binomial(n, k)) * u[k];
            acc += ((n - k) % 2 == 0) ? term : -term;
        }
        v[n] = acc;
    }
    return v;
}

std::vector<RatFunc> binomial_forward(std::span<const RatFunc> v) {
    std::vector<RatFunc> u(v.size());
    for (std::size_t n = 0; n < v.size(); ++n) {
        RatFunc acc;
        for (std::size_t k = 0; k <= n; ++k) acc += RatFunc(binomial(n, k)) * v[k];
        u[n] = acc;
    }
    return u;
}

StirlingRowQ q_stirling2_row(unsigned long n) {
    StirlingRowQ row;
    row.n = n;
    row.entries.assign(n + 1, RatFunc());

    // Peel the falling-factorial basis off [X]^n from the top degree down.
    // [X]_k has degree exactly k, so the system is triangular.
    QExpPoly rem = bracket_x_power(n);
    std::vector<QExpPoly> falling(n + 1);
    falling[0] = QExpPoly{RatFunc(1)};
    for (unsigned long k = 1; k <= n; ++k)
        falling[k] = falling[k - 1] * bracket_x_minus(static_cast<long>(k) - 1);

    for (unsigned long k = n + 1; k-- > 0;) {
        RatFunc c = rem.coeff(k) / falling[k].coeff(k);
        if (!c.is_zero()) rem -= falling[k] * c;
        row.entries[k] = c * RatFunc::q_power(-static_cast<long>(k * (k - 1) / 2));
    }
    if (!rem.is_zero())
        throw ConsistencyError("q_stirling2_row: triangular solve left a nonzero remainder");
    if (!(row.entries[n] == RatFunc(1)) || (n >= 1 && !row.entries[0].is_zero()))
        throw ConsistencyError("q_stirling2_row: row invariants violated at n = " +
                               std::to_string(n));
    return row;
}

} // namespace carlitzq

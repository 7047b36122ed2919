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

#ifndef CARLITZQ_QSYMBOLS_HPP
#define CARLITZQ_QSYMBOLS_HPP

#include <span>
#include <vector>

#include "carlitzq/qexppoly.hpp"

namespace carlitzq {

/// [k] = (q^k - 1)/(q - 1). For k >= 0 this is 1 + q + ... + q^{k-1}
/// (denominator 1); for k < 0 it is the Laurent value -q^k * [-k].
RatFunc q_bracket(long k);

/// [k] as an IntPoly, k >= 0.
IntPoly q_bracket_poly(unsigned long k);

/// [n]! = [n][n-1]...[1]; [0]! = 1.
IntPoly q_factorial(unsigned long n);

/// Gaussian binomial [n]! / ([k]! [n-k]!); IndexOutOfRange unless 0 <= k <= n.
IntPoly q_binomial(unsigned long n, unsigned long k);

/// [n]_k = [n][n-1]...[n-k+1] for any integer n; 0 when 0 <= n < k.
RatFunc q_falling_int(long n, unsigned long k);

/// [X]^n = ((y - 1)/(q - 1))^n expanded in powers of y.
QExpPoly bracket_x_power(unsigned long n);

/// [X - j] = (q^{-j} y - 1)/(q - 1).
QExpPoly bracket_x_minus(long j);

/// [X]_k = [X][X-1]...[X-k+1]; degree k.
QExpPoly bracket_x_falling(unsigned long k);

/// n-fold forward difference at 0 from tabulated values:
/// sum_k (-1)^{n-k} C(n,k) values[k]. InsufficientValues if fewer than
/// n+1 values are supplied.
RatFunc finite_difference_iter(std::span<const RatFunc> values, unsigned long n);

/// v_n = sum_{k<=n} (-1)^{n-k} C(n,k) u_k — the inverse of the forward
/// binomial transform.
std::vector<RatFunc> binomial_inversion(std::span<const RatFunc> u);

/// u_n = sum_{k<=n} C(n,k) v_k — the forward binomial transform.
std::vector<RatFunc> binomial_forward(std::span<const RatFunc> v);

/// Row n of the q-Stirling numbers of the second kind: the coefficients
/// S_q(n,k) in the basis identity [X]^n = sum_k q^{k(k-1)/2} S_q(n,k) [X]_k.
struct StirlingRowQ {
    unsigned long n = 0;
    std::vector<RatFunc> entries; // S_q(n,0) .. S_q(n,n)
};

/// Computes row n by triangular solve of the defining basis identity;
/// entries satisfy S_q(n,n) = 1 and S_q(n,0) = 0 for n >= 1.
StirlingRowQ q_stirling2_row(unsigned long n);

} // namespace carlitzq

#endif // CARLITZQ_QSYMBOLS_HPP

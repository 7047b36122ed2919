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

#ifndef CARLITZQ_CLASSICAL_HPP
#define CARLITZQ_CLASSICAL_HPP

#include <span>

#include "carlitzq/qbernoulli.hpp"

namespace carlitzq {

/// Classical Stirling numbers of the second kind via the triangle
/// recurrence S(n,k) = S(n-1,k-1) + k S(n-1,k); 0 for k > n.
BigInt classical_stirling2(unsigned long n, unsigned long k);

/// Exact Bernoulli number from the Stirling expansion
/// B_n = sum_k (-1)^k k!/(k+1) S(n,k).
Rational classical_bernoulli(unsigned long n);

/// Exact substitution q := 1 of a canonical rational function.
/// PoleAtOne when the denominator vanishes at 1 (canonical form makes
/// the pole genuine); this is the documented behavior of eta_n, n >= 2.
Rational eval_at_q1(const RatFunc& f);

/// Certified truncation of the series representation of beta_n^(r) at a
/// numeric q0 with |q0| < 1. All fields are exact rationals and satisfy
/// |partial_sum - exact_value| <= tail_bound.
struct SeriesReport {
    unsigned long n = 0;
    unsigned long r = 0;
    Rational q0;
    unsigned long terms_used = 0;
    Rational partial_sum;
    Rational tail_bound;
    Rational exact_value;

    bool within_bound() const { return abs(partial_sum - exact_value) <= tail_bound; }
};

/// Sums the series for beta_n^(r) — for r >= 1 the single series
/// sum_k (r q^{rk} - (n+r) q^{(r+1)k}) [k]^{n-1}, for r = 0 the two-part
/// form -n sum_k q^k [k]^{n-1} + (1-q)^{-n} — until the rigorous tail
/// bound (n+2r+2) (1-|q|)^{1-n} |q|^{max(r,1) K} / (1-|q|^{max(r,1)})
/// drops below tol. InvalidQ when |q0| >= 1; tol must be positive.
SeriesReport series_beta(unsigned long n, unsigned long r, const Rational& q0,
                         const Rational& tol);

/// q = 1 limits: eval_at_q1(beta_n^(r)) = B_n for 1 <= r <= r_max,
/// n <= n_max; eta_n has a pole at 1 for n >= 2; the Stirling-weighted
/// identity B_n + B_{n+1} = sum_k (-1)^k k!/(k+2) S(n,k); and
/// S_q(n,k) at q = 1 equals S(n,k).
Report check_q1_limits(unsigned long n_max, unsigned long r_max);

/// Composition check behind B_n = lim_{q->1^-} of the series: at each
/// grid point the series matches the exact beta_n^(r)(q0) within tol,
/// and eval_at_q1(beta_n^(r)) equals B_n.
Report check_cor4(unsigned long n, unsigned long r, std::span<const Rational> q_grid,
                  const Rational& tol);

} // namespace carlitzq

#endif // CARLITZQ_CLASSICAL_HPP

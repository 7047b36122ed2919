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

#ifndef CARLITZQ_QBERNOULLI_HPP
#define CARLITZQ_QBERNOULLI_HPP

#include "carlitzq/carlitz.hpp"

namespace carlitzq {

/// The associated sequence ((k+r)/[k+r])_{k<=n_max} of the order-r
/// extended q-Bernoulli sequence; r = 0 is the eta sequence with the
/// convention a_0 = 1.
AssociatedSeq beta_assoc(unsigned long r, unsigned long n_max);

/// Closed form of the order-r extended q-Bernoulli polynomial:
/// beta_n^(r)(X) = (q-1)^{-n} sum_k (-1)^{n-k} C(n,k) (k+r)/[k+r] q^{kX}.
QExpPoly beta_poly_closed(unsigned long n, unsigned long r);

/// beta_n^(r) = beta_n^(r)(0) from the closed form.
RatFunc beta_number_closed(unsigned long n, unsigned long r);

/// The table beta_n^(r) / beta_n^(r)(X) for r <= r_max, n <= n_max.
/// Rows are built from the closed form (the source of truth) and
/// cross-checked at construction against the order recursion
/// beta^(r+1) = shift of beta^(r)'s associated sequence, including the
/// value recursion beta_n^(r+1) = beta_n^(r) + (q-1) beta_{n+1}^(r).
/// Row 0 is the eta sequence, row 1 the classical q-Bernoulli sequence.
/// ConsistencyError with diagnostics if any cross-check fails.
class BernoulliTower {
public:
    BernoulliTower(unsigned long r_max, unsigned long n_max);

    unsigned long r_max() const { return rows_.size() - 1; }
    unsigned long n_max() const { return n_max_; }
    const RatFunc& number(unsigned long r, unsigned long n) const;
    const QExpPoly& poly(unsigned long r, unsigned long n) const;

private:
    unsigned long n_max_;
    std::vector<CarlitzSeq> rows_;
};

/// S_{n,r}(N) = sum_{k=0}^{N-1} q^{rk} [k]^n, exactly. The brute-force
/// oracle for every power-sum closed form. Requires r >= 1, N >= 1.
RatFunc power_sum_direct(unsigned long n, unsigned long r, unsigned long N);

/// q-partial-fraction coefficients alpha_{k,i} in
/// q^{kX}/[X]_{k+1} = sum_i alpha_{k,i}/[X-i]:
/// alpha_{k,i} = (1/[k]!) (-1)^{k-i} qbinom(k,i) q^{(k^2+k)/2 + (i^2-i)/2}.
struct PartialFractionQ {
    unsigned long k = 0;
    std::vector<RatFunc> alphas; // alpha_{k,0} .. alpha_{k,k}
};

PartialFractionQ partial_fraction_q(unsigned long k);

/// The q-polynomial in X interpolating the weighted falling-power sums
/// q^{k(k-1)/2} sum_{i<N} q^{ir} [i]_k at X = N:
/// q^{k(k-1)/2} (sum_l q^{(r-l-1)X + (l+1)k} [r-1]_l/[k+r]_{l+1}) [X]_{k+1}.
QExpPoly f_r_closed(unsigned long r, unsigned long k);

/// g_r(q,k) = lim_{X->0} f_r(q,k,X)/[X], by three independent routes
/// that must agree structurally.
RatFunc g_r_sum_form(unsigned long r, unsigned long k);
RatFunc g_r_fraction_form(unsigned long r, unsigned long k);
RatFunc g_r_limit_form(unsigned long r, unsigned long k);

/// The Stirling-expansion weight: phi_r(q,k) = g_r(q,k), r >= 1.
RatFunc phi_r(unsigned long r, unsigned long k);

/// beta_n^(r) = sum_k phi_r(q,k) S_q(n,k), r >= 1.
RatFunc beta_via_stirling(unsigned long n, unsigned long r);

// Verification suites. Every identity is checked by exact structural
// equality of canonical rational functions; a failing instance appears
// as a failing report item.

/// sum_{k<N} q^{rk} [k]^n = q^{rN} S_n(N) - S_n(0), with S the sequence
/// associated to a_k = 1/((q-1)[k+r]). r >= 1.
Report check_thm2(unsigned long n, unsigned long r, unsigned long N);

/// sum_{k<N} q^{rk} [k]^{n-d} = (q^{(r-d)N} T_n(N) - T_n(0)) / (n)_d,
/// with T associated to b_k = (q-1)^{d-1} (k)_d / [k+r-d]. r >= d, n >= d.
Report check_thm3(unsigned long n, unsigned long r, unsigned long d, unsigned long N);

/// sum_{k<N} q^k [k]^{n-1} = (eta_n(N) - eta_n)/n.
Report check_cor2(unsigned long n, unsigned long N, const BernoulliTower& tower);

/// n sum q^{2k}[k]^{n-1} + (q-1) sum q^k [k]^n = q^N beta_n(N) - beta_n.
Report check_cor3(unsigned long n, unsigned long N, const BernoulliTower& tower);

/// n sum q^{(r+1)k}[k]^{n-1} + (q-1) r sum q^{rk}[k]^n
///   = q^{rN} beta_n^(r)(N) - beta_n^(r).
Report check_thm5(unsigned long n, unsigned long r, unsigned long N,
                  const BernoulliTower& tower);

/// f_r_closed evaluated at X = N against the brute-force weighted sum,
/// for N <= N_max.
Report check_prop3(unsigned long r, unsigned long k, unsigned long N_max);

/// Multiplied-through partial-fraction identity
/// y^k = sum_i alpha_{k,i} prod_{j!=i} [X-j], structurally.
Report check_prop4(unsigned long k);

/// Equality of the three g_r routes and phi_r = g_r.
Report check_g_r(unsigned long r, unsigned long k);

/// beta_n^(r) = sum_k phi_r(q,k) S_q(n,k) against the tower.
Report check_thm7(unsigned long n, unsigned long r, const BernoulliTower& tower);

/// beta_n + q beta_{n+1} = sum_k (-1)^k [k]!/[k+2] S_q(n,k).
Report check_cor6(unsigned long n, const BernoulliTower& tower);

/// The symbolic suite: (q eta + 1)^n = eta^n (n >= 2),
/// q(q beta + 1)^n - beta^n = delta_{n,1} (n >= 1),
/// beta_n = eta_n + (q-1) eta_{n+1}, and
/// q^r(q beta^(r) + 1)^n = (beta^(r))^n (n >= 2, r <= r_max; the n = 1
/// residual for r != 1 is recorded, not asserted).
Report check_symbolic(unsigned long n_max, unsigned long r_max);

/// Triple agreement: recursion, closed form and Stirling expansion give
/// the same beta_n^(r) for n <= n_max, r <= r_max (Stirling for r >= 1).
Report check_triple_agreement(unsigned long n_max, unsigned long r_max);

} // namespace carlitzq

#endif // CARLITZQ_QBERNOULLI_HPP

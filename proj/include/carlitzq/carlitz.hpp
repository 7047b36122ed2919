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

#ifndef CARLITZQ_CARLITZ_HPP
#define CARLITZQ_CARLITZ_HPP

#include <span>
#include <vector>

#include "carlitzq/qsymbols.hpp"
#include "carlitzq/report.hpp"

namespace carlitzq {

/// The scalar sequence (a_k) generating a Carlitz-type q-polynomial
/// sequence. Finite prefix, length >= 1.
struct AssociatedSeq {
    std::vector<RatFunc> a;
};

/// A finite prefix T_0..T_{n_max} of a Carlitz-type q-polynomial
/// sequence T_n(X) = (q-1)^{-n} sum_k (-1)^{n-k} C(n,k) a_k q^{kX},
/// together with its values t_n = T_n(0) and associated sequence.
/// Immutable after construction.
class CarlitzSeq {
public:
    static CarlitzSeq from_associated(AssociatedSeq assoc);

    unsigned long n_max() const { return polys_.size() - 1; }
    const QExpPoly& poly(unsigned long n) const;
    const RatFunc& value(unsigned long n) const;
    const std::vector<QExpPoly>& polys() const { return polys_; }
    const std::vector<RatFunc>& values() const { return values_; }
    const AssociatedSeq& assoc() const { return assoc_; }

private:
    CarlitzSeq() = default;
    AssociatedSeq assoc_;
    std::vector<QExpPoly> polys_;
    std::vector<RatFunc> values_;
};

/// Symbolic-form construction from values alone:
/// T_n(X) = sum_k C(n,k) t_k q^{kX} [X]^{n-k}. For a Carlitz-type
/// sequence this reproduces the definition-form polynomials exactly.
std::vector<QExpPoly> carlitz_reconstruct_symbolic(std::span<const RatFunc> values);

/// a_n = sum_k C(n,k) (q-1)^k t_k — recovers the associated sequence
/// from the values; inverse of value extraction.
AssociatedSeq associated_from_values(std::span<const RatFunc> values);

/// (q^X n T_{n-1})_n, associated ((q-1) k a_{k-1})_k. Extends n_max by 1.
CarlitzSeq transform_raise_index(const CarlitzSeq& s);

/// (q^{-X} T_{n+1}/(n+1))_n, associated (a_{k+1}/((q-1)(k+1)))_k.
/// Requires a_0 = 0; NonDivisible otherwise. Shrinks n_max by 1.
CarlitzSeq transform_lower_index(const CarlitzSeq& s);

/// (q^{-X}(T_n + (q-1) T_{n+1}))_n, associated (a_{k+1})_k — the shift
/// of the associated sequence. Shrinks n_max by 1. The constant
/// y-coefficients cancel before the division; NonDivisible here means an
/// implementation bug, never a legitimate input.
CarlitzSeq transform_shift_assoc(const CarlitzSeq& s);

/// (n (T_{n-1} + (q-1) T_n))_n, associated ((q-1) k a_k)_k. Equals
/// transform_raise_index after transform_shift_assoc.
CarlitzSeq transform_weight_assoc(const CarlitzSeq& s);

/// Builds the associated sequence a_k = P(k)/[k+r] for a polynomial P
/// given by its coefficient list (ascending). When r = 0 the k = 0 entry
/// is the 0/0 convention value: P(0) must be 0 and a_0 is taken as the
/// linear coefficient of P (so P(k) = k gives a_0 = 1).
AssociatedSeq assoc_poly_over_bracket(std::span<const Rational> p_coeffs, unsigned long r,
                                      unsigned long n_max);

/// Checks the symbolic identity q^r (q t + 1)^n = t^n, i.e.
/// q^r sum_k C(n,k) q^k t_k = t_n, for d < n <= n_max, where t comes
/// from the sequence with associated a_k = P(k)/[k+r] and d = deg P.
/// Residuals for 1 <= n <= d are recorded as informational notes.
Report check_theorem4(std::span<const Rational> p_coeffs, unsigned long r, unsigned long n_max);

} // namespace carlitzq

#endif // CARLITZQ_CARLITZ_HPP

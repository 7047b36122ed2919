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

#include "carlitzq/carlitz.hpp"

#include <string>
#include <utility>

namespace carlitzq {

namespace {

RatFunc q_minus_one() {
    return RatFunc(IntPoly::q() - IntPoly(1));
}

// The dual construction is the computational content of the transform
// identities: the polynomial-side rule and the associated-sequence rule
// must produce the same sequence. Any mismatch is an implementation bug.
void cross_check(const CarlitzSeq& got, const char* what) {
    CarlitzSeq rebuilt = CarlitzSeq::from_associated(got.assoc());
    if (rebuilt.polys() != got.polys())
        throw ConsistencyError(std::string(what) +
                               ": polynomial rule and associated-sequence rule disagree");
}

} // namespace

CarlitzSeq CarlitzSeq::from_associated(AssociatedSeq assoc) {
    if (assoc.a.empty()) throw Error("CarlitzSeq: associated sequence must be nonempty");
    CarlitzSeq s;
    s.assoc_ = std::move(assoc);
    const std::size_t len = s.assoc_.a.size();
    s.polys_.reserve(len);
    s.values_.reserve(len);
    RatFunc qm1_inv = q_minus_one().inverse();
    RatFunc prefactor(1); // (q-1)^{-n}
    for (std::size_t n = 0; n < len; ++n) {
        if (n > 0) prefactor *= qm1_inv;
        std::vector<RatFunc> coeffs(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            RatFunc term = prefactor * RatFunc(binomial(n, k)) * s.assoc_.a[k];
            coeffs[k] = ((n - k) % 2 == 0) ? term : -term;
        }
        s.polys_.emplace_back(std::move(coeffs));
        s.values_.push_back(s.polys_.back().eval_int(0));
    }
    return s;
}

const QExpPoly& CarlitzSeq::poly(unsigned long n) const {
    if (n >= polys_.size()) throw IndexOutOfRange("CarlitzSeq: index beyond n_max");
    return polys_[n];
}

const RatFunc& CarlitzSeq::value(unsigned long n) const {
    if (n >= values_.size()) throw IndexOutOfRange("CarlitzSeq: index beyond n_max");
    return values_[n];
}

std::vector<QExpPoly> carlitz_reconstruct_symbolic(std::span<const RatFunc> values) {
    std::vector<QExpPoly> bxp(values.size());
    for (std::size_t d = 0; d < values.size(); ++d) bxp[d] = bracket_x_power(d);
    std::vector<QExpPoly> polys(values.size());
    for (std::size_t n = 0; n < values.size(); ++n) {
        QExpPoly acc;
        for (std::size_t k = 0; k <= n; ++k) {
            RatFunc c = RatFunc(binomial(n, k)) * values[k];
            acc += QExpPoly::monomial(std::move(c), k) * bxp[n - k];
        }
        polys[n] = std::move(acc);
    }
    return polys;
}

AssociatedSeq associated_from_values(std::span<const RatFunc> values) {
    AssociatedSeq assoc;
    assoc.a.resize(values.size());
    RatFunc qm1 = q_minus_one();
    for (std::size_t n = 0; n < values.size(); ++n) {
        RatFunc acc, p(1);
        for (std::size_t k = 0; k <= n; ++k) {
            acc += RatFunc(binomial(n, k)) * p * values[k];
            p *= qm1;
        }
        assoc.a[n] = acc;
    }
    return assoc;
}

CarlitzSeq transform_raise_index(const CarlitzSeq& s) {
    const unsigned long m = s.n_max();
    AssociatedSeq assoc;
    assoc.a.resize(m + 2);
    RatFunc qm1 = q_minus_one();
    for (unsigned long k = 1; k <= m + 1; ++k)
        assoc.a[k] = qm1 * RatFunc(static_cast<long>(k)) * s.assoc().a[k - 1];
    CarlitzSeq out = CarlitzSeq::from_associated(std::move(assoc));

    for (unsigned long n = 0; n <= m + 1; ++n) {
        QExpPoly direct;
        if (n > 0) direct = QExpPoly::y() * s.poly(n - 1) * RatFunc(static_cast<long>(n));
        if (direct != out.poly(n))
            throw ConsistencyError("transform_raise_index: rules disagree at n = " +
                                   std::to_string(n));
    }
    return out;
}

CarlitzSeq transform_lower_index(const CarlitzSeq& s) {
    if (s.n_max() < 1) throw Error("transform_lower_index: sequence too short");
    const unsigned long m = s.n_max();
    std::vector<QExpPoly> polys(m);
    for (unsigned long n = 0; n + 1 <= m; ++n)
        polys[n] = s.poly(n + 1).divide_by_y() * RatFunc(Rational(1L, static_cast<long>(n) + 1));

    AssociatedSeq assoc;
    assoc.a.resize(m);
    RatFunc qm1 = q_minus_one();
    for (unsigned long k = 0; k + 1 <= m; ++k)
        assoc.a[k] = s.assoc().a[k + 1] / (qm1 * RatFunc(static_cast<long>(k) + 1));
    CarlitzSeq out = CarlitzSeq::from_associated(std::move(assoc));
    if (out.polys() != polys)
        throw ConsistencyError("transform_lower_index: rules disagree");
    return out;
}

CarlitzSeq transform_shift_assoc(const CarlitzSeq& s) {
    if (s.n_max() < 1) throw Error("transform_shift_assoc: sequence too short");
    const unsigned long m = s.n_max();
    RatFunc qm1 = q_minus_one();
    std::vector<QExpPoly> polys(m);
    for (unsigned long n = 0; n + 1 <= m; ++n)
        polys[n] = (s.poly(n) + s.poly(n + 1) * qm1).divide_by_y();

    AssociatedSeq assoc;
    assoc.a.assign(s.assoc().a.begin() + 1, s.assoc().a.end());
    CarlitzSeq out = CarlitzSeq::from_associated(std::move(assoc));
    if (out.polys() != polys)
        throw ConsistencyError("transform_shift_assoc: rules disagree");
    return out;
}

CarlitzSeq transform_weight_assoc(const CarlitzSeq& s) {
    const unsigned long m = s.n_max();
    RatFunc qm1 = q_minus_one();
    AssociatedSeq assoc;
    assoc.a.resize(m + 1);
    for (unsigned long k = 0; k <= m; ++k)
        assoc.a[k] = qm1 * RatFunc(static_cast<long>(k)) * s.assoc().a[k];
    CarlitzSeq out = CarlitzSeq::from_associated(std::move(assoc));

    for (unsigned long n = 0; n <= m; ++n) {
        QExpPoly direct;
        if (n > 0)
            direct = (s.poly(n - 1) + s.poly(n) * qm1) * RatFunc(static_cast<long>(n));
        if (direct != out.poly(n))
            throw ConsistencyError("transform_weight_assoc: rules disagree at n = " +
                                   std::to_string(n));
    }
    return out;
}

namespace {

Rational eval_poly_at(std::span<const Rational> coeffs, long x) {
    Rational acc(0), xs(x);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * xs + coeffs[i];
    return acc;
}

std::size_t poly_degree(std::span<const Rational> coeffs) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) d = i;
    return d;
}

} // namespace

AssociatedSeq assoc_poly_over_bracket(std::span<const Rational> p_coeffs, unsigned long r,
                                      unsigned long n_max) {
    AssociatedSeq assoc;
    assoc.a.resize(n_max + 1);
    for (unsigned long k = 0; k <= n_max; ++k) {
        if (k == 0 && r == 0) {
            if (!eval_poly_at(p_coeffs, 0).is_zero())
                throw Error("assoc_poly_over_bracket: P(0)/[0] undefined, P(0) must be 0");
            assoc.a[0] = p_coeffs.size() > 1 ? RatFunc(p_coeffs[1]) : RatFunc();
            continue;
        }
        assoc.a[k] = RatFunc(eval_poly_at(p_coeffs, static_cast<long>(k))) /
                     q_bracket(static_cast<long>(k + r));
    }
    return assoc;
}

Report check_theorem4(std::span<const Rational> p_coeffs, unsigned long r,
                      unsigned long n_max) {
    Report report;
    report.title = "q^r (q t + 1)^n = t^n for the sequence with a_k = P(k)/[k+r]";
    const std::size_t d = poly_degree(p_coeffs);
    CarlitzSeq seq = CarlitzSeq::from_associated(assoc_poly_over_bracket(p_coeffs, r, n_max));
    RatFunc q_r = RatFunc::q_power(static_cast<long>(r));
    for (unsigned long n = 1; n <= n_max; ++n) {
        // (q t + 1)^n expands to sum_k C(n,k) q^k t_k.
        RatFunc lhs;
        for (unsigned long k = 0; k <= n; ++k)
            lhs += RatFunc(binomial(n, k)) * RatFunc::q_power(static_cast<long>(k)) *
                   seq.value(k);
        lhs *= q_r;
        std::string name = "r=" + std::to_string(r) + " d=" + std::to_string(d) +
                           " n=" + std::to_string(n);
        if (n > d) {
            report.add(name, lhs == seq.value(n));
        } else {
            report.note(name, "residual q^r(qt+1)^n - t^n = " + (lhs - seq.value(n)).str());
        }
    }
    return report;
}

} // namespace carlitzq

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

#include "carlitzq/qbernoulli.hpp"

#include <string>
#include <utility>

namespace carlitzq {

namespace {

RatFunc q_minus_one() {
    return RatFunc(IntPoly::q() - IntPoly(1));
}

long tri(unsigned long k) { // k(k-1)/2
    return static_cast<long>(k * (k - 1) / 2);
}

std::string tag(std::initializer_list<std::pair<const char*, unsigned long>> kv) {
    std::string s;
    for (const auto& [key, val] : kv) {
        if (!s.empty()) s += ' ';
        s += key;
        s += '=';
        s += std::to_string(val);
    }
    return s;
}

} // namespace

AssociatedSeq beta_assoc(unsigned long r, unsigned long n_max) {
    AssociatedSeq assoc;
    assoc.a.resize(n_max + 1);
    for (unsigned long k = 0; k <= n_max; ++k) {
        if (k + r == 0) {
            assoc.a[k] = RatFunc(1); // the k/[k] = 1 convention at k = 0
            continue;
        }
        assoc.a[k] = RatFunc(static_cast<long>(k + r)) / q_bracket(static_cast<long>(k + r));
    }
    return assoc;
}

QExpPoly beta_poly_closed(unsigned long n, unsigned long r) {
    AssociatedSeq assoc = beta_assoc(r, n);
    RatFunc prefactor = q_minus_one().pow(-static_cast<long>(n));
    std::vector<RatFunc> coeffs(n + 1);
    for (unsigned long k = 0; k <= n; ++k) {
        RatFunc term = prefactor * RatFunc(binomial(n, k)) * assoc.a[k];
        coeffs[k] = ((n - k) % 2 == 0) ? term : -term;
    }
    return QExpPoly(std::move(coeffs));
}

RatFunc beta_number_closed(unsigned long n, unsigned long r) {
    return beta_poly_closed(n, r).eval_int(0);
}

BernoulliTower::BernoulliTower(unsigned long r_max, unsigned long n_max) : n_max_(n_max) {
    // The order recursion consumes one index per row, so pad row 0.
    const unsigned long depth = n_max + r_max;
    std::vector<CarlitzSeq> rec;
    rec.reserve(r_max + 1);
    rec.push_back(CarlitzSeq::from_associated(beta_assoc(0, depth)));
    for (unsigned long r = 1; r <= r_max; ++r)
        rec.push_back(transform_shift_assoc(rec.back()));

    rows_.reserve(r_max + 1);
    RatFunc qm1 = q_minus_one();
    for (unsigned long r = 0; r <= r_max; ++r) {
        CarlitzSeq closed = CarlitzSeq::from_associated(beta_assoc(r, n_max));
        for (unsigned long n = 0; n <= n_max; ++n) {
            if (closed.poly(n) != rec[r].poly(n))
                throw ConsistencyError("BernoulliTower: closed form and order recursion "
                                       "disagree at " + tag({{"r", r}, {"n", n}}) +
                                       ": closed value " + closed.value(n).str() +
                                       " vs recursive " + rec[r].value(n).str());
            if (r < r_max) {
                RatFunc next = rec[r].value(n) + qm1 * rec[r].value(n + 1);
                if (next != rec[r + 1].value(n))
                    throw ConsistencyError("BernoulliTower: value recursion fails at " +
                                           tag({{"r", r}, {"n", n}}));
            }
        }
        rows_.push_back(std::move(closed));
    }
}

const RatFunc& BernoulliTower::number(unsigned long r, unsigned long n) const {
    if (r >= rows_.size() || n > n_max_)
        throw IndexOutOfRange("BernoulliTower: (r,n) outside the built table");
    return rows_[r].value(n);
}

const QExpPoly& BernoulliTower::poly(unsigned long r, unsigned long n) const {
    if (r >= rows_.size() || n > n_max_)
        throw IndexOutOfRange("BernoulliTower: (r,n) outside the built table");
    return rows_[r].poly(n);
}

RatFunc power_sum_direct(unsigned long n, unsigned long r, unsigned long N) {
    if (r < 1) throw Error("power_sum_direct: r must be >= 1");
    if (N < 1) throw Error("power_sum_direct: N must be >= 1");
    IntPoly acc;
    for (unsigned long k = 0; k < N; ++k) {
        IntPoly term = q_bracket_poly(k).pow(n);
        if (term.is_zero()) continue;
        acc += IntPoly::monomial(1, r * k) * term;
    }
    return RatFunc(std::move(acc));
}

PartialFractionQ partial_fraction_q(unsigned long k) {
    PartialFractionQ pf;
    pf.k = k;
    pf.alphas.resize(k + 1);
    RatFunc inv_kfact = RatFunc(q_factorial(k)).inverse();
    for (unsigned long i = 0; i <= k; ++i) {
        long e = static_cast<long>((k * k + k) / 2) + static_cast<long>((i * i - i) / 2);
        RatFunc a = inv_kfact * RatFunc(q_binomial(k, i)) * RatFunc::q_power(e);
        pf.alphas[i] = ((k - i) % 2 == 0) ? a : -a;
    }
    return pf;
}

namespace {

// sum_l q^{(l+1)k} ([r-1]_l / [k+r]_{l+1}) y^{r-l-1}, the bracketed part
// shared by f_r and the limit route for g_r.
QExpPoly f_r_inner(unsigned long r, unsigned long k) {
    if (r < 1) throw Error("f_r: r must be >= 1");
    QExpPoly inner;
    for (unsigned long l = 0; l < r; ++l) {
        RatFunc w = RatFunc::q_power(static_cast<long>((l + 1) * k)) *
                    q_falling_int(static_cast<long>(r) - 1, l) /
                    q_falling_int(static_cast<long>(k + r), l + 1);
        inner += QExpPoly::monomial(std::move(w), r - l - 1);
    }
    return inner;
}

} // namespace

QExpPoly f_r_closed(unsigned long r, unsigned long k) {
    return f_r_inner(r, k) * bracket_x_falling(k + 1) * RatFunc::q_power(tri(k));
}

RatFunc g_r_sum_form(unsigned long r, unsigned long k) {
    if (r < 1) throw Error("g_r: r must be >= 1");
    RatFunc sum;
    for (unsigned long i = 0; i < r; ++i)
        sum += RatFunc::q_power(static_cast<long>(i * k)) *
               q_falling_int(static_cast<long>(r) - 1, i) /
               q_falling_int(static_cast<long>(k + r), i + 1);
    RatFunc g = RatFunc(q_factorial(k)) * sum;
    return (k % 2 == 0) ? g : -g;
}

RatFunc g_r_fraction_form(unsigned long r, unsigned long k) {
    if (r < 1) throw Error("g_r: r must be >= 1");
    RatFunc qm1 = q_minus_one();
    RatFunc sum;
    for (unsigned long i = 0; i < r; ++i) {
        long e = static_cast<long>(i * (i + 1) / 2) -
                 static_cast<long>(i) * (static_cast<long>(r) - 1);
        sum += qm1.pow(static_cast<long>(i)) * RatFunc::q_power(e) /
               (RatFunc(q_factorial(r - 1 - i)) * q_bracket(static_cast<long>(k + i) + 1));
    }
    RatFunc g = RatFunc(q_factorial(k)) * RatFunc(q_factorial(r - 1)) *
                RatFunc::q_power(1 - static_cast<long>(r)) * sum;
    return (k % 2 == 0) ? g : -g;
}

RatFunc g_r_limit_form(unsigned long r, unsigned long k) {
    // f_r with the single factor [X] of [X]_{k+1} cancelled, at X = 0.
    QExpPoly rest{RatFunc(1)};
    for (unsigned long j = 1; j <= k; ++j) rest *= bracket_x_minus(static_cast<long>(j));
    return (f_r_inner(r, k) * rest * RatFunc::q_power(tri(k))).eval_int(0);
}

RatFunc phi_r(unsigned long r, unsigned long k) {
    return g_r_sum_form(r, k);
}

RatFunc beta_via_stirling(unsigned long n, unsigned long r) {
    if (r < 1) throw Error("beta_via_stirling: r must be >= 1");
    StirlingRowQ row = q_stirling2_row(n);
    RatFunc acc;
    for (unsigned long k = 0; k <= n; ++k) {
        if (row.entries[k].is_zero()) continue;
        acc += phi_r(r, k) * row.entries[k];
    }
    return acc;
}

Report check_thm2(unsigned long n, unsigned long r, unsigned long N) {
    Report report;
    report.title = "power sum vs closed form, a_k = 1/((q-1)[k+r])";
    RatFunc qm1 = q_minus_one();
    AssociatedSeq assoc;
    assoc.a.resize(n + 1);
    for (unsigned long k = 0; k <= n; ++k)
        assoc.a[k] = (qm1 * q_bracket(static_cast<long>(k + r))).inverse();
    CarlitzSeq seq = CarlitzSeq::from_associated(std::move(assoc));
    RatFunc lhs = power_sum_direct(n, r, N);
    RatFunc rhs = RatFunc::q_power(static_cast<long>(r * N)) *
                      seq.poly(n).eval_int(static_cast<long>(N)) -
                  seq.value(n);
    report.add(tag({{"n", n}, {"r", r}, {"N", N}}), lhs == rhs);
    return report;
}

Report check_thm3(unsigned long n, unsigned long r, unsigned long d, unsigned long N) {
    Report report;
    report.title = "power sum vs closed form, b_k = (q-1)^{d-1} (k)_d / [k+r-d]";
    if (r < d || n < d) throw Error("check_thm3: need r >= d and n >= d");
    RatFunc qm1_pow = q_minus_one().pow(static_cast<long>(d) - 1);
    AssociatedSeq assoc;
    assoc.a.resize(n + 1);
    for (unsigned long k = 0; k <= n; ++k) {
        // (k)_d = k(k-1)...(k-d+1); zero numerator wins over the [0]
        // denominator that appears at k = 0, r = d.
        BigInt falling = 1;
        for (unsigned long j = 0; j < d; ++j)
            falling *= BigInt(static_cast<long>(k) - static_cast<long>(j));
        if (falling == 0) continue;
        assoc.a[k] = qm1_pow * RatFunc(falling) / q_bracket(static_cast<long>(k + r - d));
    }
    CarlitzSeq seq = CarlitzSeq::from_associated(std::move(assoc));

    BigInt n_falling = 1;
    for (unsigned long j = 0; j < d; ++j) n_falling *= BigInt(n - j);
    RatFunc lhs = power_sum_direct(n - d, r, N);
    RatFunc rhs = (RatFunc::q_power(static_cast<long>((r - d) * N)) *
                       seq.poly(n).eval_int(static_cast<long>(N)) -
                   seq.value(n)) /
                  RatFunc(n_falling);
    report.add(tag({{"n", n}, {"r", r}, {"d", d}, {"N", N}}), lhs == rhs);
    return report;
}

Report check_cor2(unsigned long n, unsigned long N, const BernoulliTower& tower) {
    Report report;
    report.title = "sum q^k [k]^{n-1} = (eta_n(N) - eta_n)/n";
    RatFunc lhs = power_sum_direct(n - 1, 1, N);
    RatFunc rhs = (tower.poly(0, n).eval_int(static_cast<long>(N)) - tower.number(0, n)) /
                  RatFunc(static_cast<long>(n));
    report.add(tag({{"n", n}, {"N", N}}), lhs == rhs);
    return report;
}

Report check_cor3(unsigned long n, unsigned long N, const BernoulliTower& tower) {
    Report report;
    report.title = "n sum q^{2k}[k]^{n-1} + (q-1) sum q^k [k]^n = q^N beta_n(N) - beta_n";
    RatFunc lhs = RatFunc(static_cast<long>(n)) * power_sum_direct(n - 1, 2, N) +
                  q_minus_one() * power_sum_direct(n, 1, N);
    RatFunc rhs = RatFunc::q_power(static_cast<long>(N)) *
                      tower.poly(1, n).eval_int(static_cast<long>(N)) -
                  tower.number(1, n);
    report.add(tag({{"n", n}, {"N", N}}), lhs == rhs);
    return report;
}

Report check_thm5(unsigned long n, unsigned long r, unsigned long N,
                  const BernoulliTower& tower) {
    Report report;
    report.title =
        "n sum q^{(r+1)k}[k]^{n-1} + (q-1) r sum q^{rk}[k]^n = q^{rN} beta_n^(r)(N) - beta_n^(r)";
    RatFunc lhs = RatFunc(static_cast<long>(n)) * power_sum_direct(n - 1, r + 1, N);
    if (r >= 1)
        lhs += q_minus_one() * RatFunc(static_cast<long>(r)) * power_sum_direct(n, r, N);
    RatFunc rhs = RatFunc::q_power(static_cast<long>(r * N)) *
                      tower.poly(r, n).eval_int(static_cast<long>(N)) -
                  tower.number(r, n);
    report.add(tag({{"n", n}, {"r", r}, {"N", N}}), lhs == rhs);
    return report;
}

Report check_prop3(unsigned long r, unsigned long k, unsigned long N_max) {
    Report report;
    report.title = "closed form of q^{k(k-1)/2} sum_{i<N} q^{ir} [i]_k";
    QExpPoly f = f_r_closed(r, k);
    report.add(tag({{"r", r}, {"k", k}}) + " X=0", f.eval_int(0).is_zero());
    RatFunc brute;
    RatFunc weight = RatFunc::q_power(tri(k));
    for (unsigned long N = 1; N <= N_max; ++N) {
        brute += RatFunc::q_power(static_cast<long>((N - 1) * r)) *
                 q_falling_int(static_cast<long>(N) - 1, k);
        report.add(tag({{"r", r}, {"k", k}, {"N", N}}),
                   f.eval_int(static_cast<long>(N)) == weight * brute);
    }
    return report;
}

Report check_prop4(unsigned long k) {
    Report report;
    report.title = "y^k = sum_i alpha_{k,i} prod_{j!=i} [X-j]";
    PartialFractionQ pf = partial_fraction_q(k);
    QExpPoly rhs;
    for (unsigned long i = 0; i <= k; ++i) {
        QExpPoly prod{pf.alphas[i]};
        for (unsigned long j = 0; j <= k; ++j) {
            if (j == i) continue;
            prod *= bracket_x_minus(static_cast<long>(j));
        }
        rhs += prod;
    }
    report.add(tag({{"k", k}}), rhs == QExpPoly::monomial(RatFunc(1), k));
    return report;
}

Report check_g_r(unsigned long r, unsigned long k) {
    Report report;
    report.title = "g_r(q,k): sum form = fraction form = limit form = phi_r";
    RatFunc sum = g_r_sum_form(r, k);
    RatFunc frac = g_r_fraction_form(r, k);
    RatFunc lim = g_r_limit_form(r, k);
    report.add(tag({{"r", r}, {"k", k}}) + " sum=fraction", sum == frac);
    report.add(tag({{"r", r}, {"k", k}}) + " sum=limit", sum == lim);
    report.add(tag({{"r", r}, {"k", k}}) + " phi=g", phi_r(r, k) == sum);
    return report;
}

Report check_thm7(unsigned long n, unsigned long r, const BernoulliTower& tower) {
    Report report;
    report.title = "beta_n^(r) = sum_k phi_r(q,k) S_q(n,k)";
    report.add(tag({{"n", n}, {"r", r}}), beta_via_stirling(n, r) == tower.number(r, n));
    return report;
}

Report check_cor6(unsigned long n, const BernoulliTower& tower) {
    Report report;
    report.title = "beta_n + q beta_{n+1} = sum_k (-1)^k [k]!/[k+2] S_q(n,k)";
    RatFunc lhs = tower.number(1, n) + RatFunc::q_power(1) * tower.number(1, n + 1);
    StirlingRowQ row = q_stirling2_row(n);
    RatFunc rhs;
    for (unsigned long k = 0; k <= n; ++k) {
        RatFunc w = RatFunc(q_factorial(k)) / q_bracket(static_cast<long>(k) + 2);
        if (k % 2 == 1) w = -w;
        rhs += w * row.entries[k];
    }
    report.add(tag({{"n", n}}), lhs == rhs);
    return report;
}

namespace {

// sum_k C(n,k) q^k t_k — the expansion of the symbolic (q t + 1)^n.
RatFunc umbral_qt_plus_1(const BernoulliTower& tower, unsigned long r, unsigned long n) {
    RatFunc acc;
    for (unsigned long k = 0; k <= n; ++k)
        acc += RatFunc(binomial(n, k)) * RatFunc::q_power(static_cast<long>(k)) *
               tower.number(r, k);
    return acc;
}

} // namespace

Report check_symbolic(unsigned long n_max, unsigned long r_max) {
    Report report;
    report.title = "symbolic identities for eta, beta and beta^(r)";
    BernoulliTower tower(r_max, n_max + 1);
    RatFunc qm1 = q_minus_one();

    for (unsigned long n = 2; n <= n_max; ++n)
        report.add("eta: (q eta + 1)^n = eta^n, " + tag({{"n", n}}),
                   umbral_qt_plus_1(tower, 0, n) == tower.number(0, n));

    for (unsigned long n = 1; n <= n_max; ++n) {
        RatFunc residual =
            RatFunc::q_power(1) * umbral_qt_plus_1(tower, 1, n) - tower.number(1, n);
        RatFunc expected = (n == 1) ? RatFunc(1) : RatFunc();
        report.add("beta: q(q beta + 1)^n - beta^n = delta_{n,1}, " + tag({{"n", n}}),
                   residual == expected);
    }

    for (unsigned long n = 0; n <= n_max; ++n)
        report.add("beta_n = eta_n + (q-1) eta_{n+1}, " + tag({{"n", n}}),
                   tower.number(1, n) == tower.number(0, n) + qm1 * tower.number(0, n + 1));

    for (unsigned long r = 0; r <= r_max; ++r) {
        RatFunc q_r = RatFunc::q_power(static_cast<long>(r));
        for (unsigned long n = 2; n <= n_max; ++n)
            report.add("q^r (q b + 1)^n = b^n for b = beta^(r), " + tag({{"r", r}, {"n", n}}),
                       q_r * umbral_qt_plus_1(tower, r, n) == tower.number(r, n));
        RatFunc res1 = q_r * umbral_qt_plus_1(tower, r, 1) - tower.number(r, 1);
        report.note("n=1 residual for beta^(r), " + tag({{"r", r}}), res1.str());
    }
    return report;
}

Report check_triple_agreement(unsigned long n_max, unsigned long r_max) {
    Report report;
    report.title = "recursion = closed form = Stirling expansion for beta_n^(r)";

    std::vector<CarlitzSeq> rec;
    rec.push_back(CarlitzSeq::from_associated(beta_assoc(0, n_max + r_max)));
    for (unsigned long r = 1; r <= r_max; ++r)
        rec.push_back(transform_shift_assoc(rec.back()));

    for (unsigned long r = 0; r <= r_max; ++r) {
        for (unsigned long n = 0; n <= n_max; ++n) {
            RatFunc closed = beta_number_closed(n, r);
            report.add("recursion=closed " + tag({{"r", r}, {"n", n}}),
                       rec[r].value(n) == closed);
            if (r >= 1)
                report.add("stirling=closed " + tag({{"r", r}, {"n", n}}),
                           beta_via_stirling(n, r) == closed);
        }
        // Values alone regenerate the polynomials (the symbolic form).
        std::vector<RatFunc> values(rec[r].values().begin(),
                                    rec[r].values().begin() + static_cast<long>(n_max) + 1);
        std::vector<QExpPoly> symbolic = carlitz_reconstruct_symbolic(values);
        bool polys_match = true;
        for (unsigned long n = 0; n <= n_max; ++n)
            polys_match = polys_match && symbolic[n] == beta_poly_closed(n, r);
        report.add("symbolic-form polynomials " + tag({{"r", r}}), polys_match);
    }
    return report;
}

} // namespace carlitzq

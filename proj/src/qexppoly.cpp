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

#include "carlitzq/qexppoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace carlitzq {

namespace {
const RatFunc kZero;
} // namespace

QExpPoly::QExpPoly(RatFunc constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

void QExpPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QExpPoly QExpPoly::monomial(RatFunc coeff, std::size_t power) {
    QExpPoly p;
    if (coeff.is_zero()) return p;
    p.c_.assign(power + 1, kZero);
    p.c_[power] = std::move(coeff);
    return p;
}

const RatFunc& QExpPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

QExpPoly operator+(const QExpPoly& a, const QExpPoly& b) {
    QExpPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), kZero);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

QExpPoly operator-(const QExpPoly& a, const QExpPoly& b) {
    QExpPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), kZero);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
}

QExpPoly operator*(const QExpPoly& a, const QExpPoly& b) {
    if (a.is_zero() || b.is_zero()) return QExpPoly();
    QExpPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, kZero);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

QExpPoly QExpPoly::operator-() const {
    QExpPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

QExpPoly operator*(const QExpPoly& a, const RatFunc& s) {
    if (s.is_zero()) return QExpPoly();
    QExpPoly r(a);
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
}

QExpPoly QExpPoly::pow(unsigned long e) const {
    QExpPoly base(*this), r{RatFunc(1)};
    while (e != 0) {
        if (e & 1ul) r *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return r;
}

RatFunc QExpPoly::eval_int(long n) const {
    RatFunc x = RatFunc::q_power(n);
    RatFunc acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

QExpPoly QExpPoly::shift_x(long j) const {
    QExpPoly r(*this);
    for (std::size_t m = 0; m < r.c_.size(); ++m) {
        if (m == 0 || r.c_[m].is_zero()) continue;
        r.c_[m] *= RatFunc::q_power(j * static_cast<long>(m));
    }
    return r;
}

QExpPoly QExpPoly::divide_by_y() const {
    if (is_zero()) return QExpPoly();
    if (!c_[0].is_zero())
        throw NonDivisible("QExpPoly: nonzero constant coefficient, q^{-X} leaves the ring");
    QExpPoly r;
    r.c_.assign(c_.begin() + 1, c_.end());
    return r;
}

std::string QExpPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << '(' << c_[i].str() << ')';
        if (i == 1) out << "*y";
        else if (i > 1) out << "*y^" << i;
    }
    return out.str();
}

} // namespace carlitzq

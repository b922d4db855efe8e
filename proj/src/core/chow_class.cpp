/* Copyright 2026 the chowcal authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "chow_class.hpp"

#include <string>
#include <utility>

#include "binomial.hpp"

namespace chowcal {

namespace {

void check_ambient(int ambient_dim) {
    if (ambient_dim < 0)
        fail(ErrorCode::Argument, "ambient dimension must be non-negative, got " +
                                      std::to_string(ambient_dim));
}

void check_same_ambient(const ChowClass& a, const ChowClass& b) {
    if (a.ambient_dim() != b.ambient_dim())
        fail(ErrorCode::Dimension,
             "ambient dimension mismatch: P^" + std::to_string(a.ambient_dim()) +
                 " vs P^" + std::to_string(b.ambient_dim()));
}

}  // namespace

ChowClass::ChowClass(int ambient_dim) : ambient_(ambient_dim) {
    check_ambient(ambient_dim);
    coeffs_.assign(static_cast<std::size_t>(ambient_dim) + 1, BigInt(0));
}

ChowClass::ChowClass(int ambient_dim, std::vector<BigInt> coeffs)
    : ambient_(ambient_dim), coeffs_(std::move(coeffs)) {
    check_ambient(ambient_dim);
    if (coeffs_.size() != static_cast<std::size_t>(ambient_dim) + 1)
        fail(ErrorCode::Argument,
             "a class on P^" + std::to_string(ambient_dim) + " needs " +
                 std::to_string(ambient_dim + 1) + " coefficients, got " +
                 std::to_string(coeffs_.size()));
}

ChowClass ChowClass::unit(int ambient_dim) {
    ChowClass c(ambient_dim);
    c.coeffs_[0] = 1;
    return c;
}

ChowClass ChowClass::hyperplane_power(int ambient_dim, int codim) {
    ChowClass c(ambient_dim);
    if (codim < 0 || codim > ambient_dim)
        fail(ErrorCode::Argument, "codimension " + std::to_string(codim) +
                                      " out of range for P^" +
                                      std::to_string(ambient_dim));
    c.coeffs_[static_cast<std::size_t>(codim)] = 1;
    return c;
}

const BigInt& ChowClass::coeff(int codim) const {
    if (codim < 0 || codim > ambient_)
        fail(ErrorCode::Argument, "codimension " + std::to_string(codim) +
                                      " out of range for P^" +
                                      std::to_string(ambient_));
    return coeffs_[static_cast<std::size_t>(codim)];
}

void ChowClass::set_coeff(int codim, BigInt value) {
    if (codim < 0 || codim > ambient_)
        fail(ErrorCode::Argument, "codimension " + std::to_string(codim) +
                                      " out of range for P^" +
                                      std::to_string(ambient_));
    coeffs_[static_cast<std::size_t>(codim)] = std::move(value);
}

bool ChowClass::is_zero() const {
    for (const BigInt& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

ChowClass& ChowClass::operator+=(const ChowClass& other) {
    check_same_ambient(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& other) {
    check_same_ambient(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    return *this;
}

ChowClass& ChowClass::operator*=(const BigInt& scalar) {
    for (BigInt& c : coeffs_)
        c *= scalar;
    return *this;
}

ChowClass ChowClass::operator-() const {
    ChowClass r(*this);
    for (BigInt& c : r.coeffs_)
        c = -c;
    return r;
}

ChowClass ring_product(const ChowClass& a, const ChowClass& b) {
    check_same_ambient(a, b);
    const int n = a.ambient_dim();
    ChowClass r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i) == 0)
            continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j) == 0)
                continue;
            r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

ChowClass unit_inverse(const ChowClass& a) {
    const BigInt& lead = a.coeff(0);
    if (lead != 1 && lead != -1)
        fail(ErrorCode::Unit, "leading coefficient " + to_decimal(lead) +
                                  " is not a unit; cannot invert");
    const int n = a.ambient_dim();
    ChowClass b(n);
    // Power series inversion: lead * b_k = -sum_{i=1..k} a_i b_{k-i}.
    // Dividing by lead is multiplying, since lead is +-1.
    b.set_coeff(0, lead);
    for (int k = 1; k <= n; ++k) {
        BigInt s(0);
        for (int i = 1; i <= k; ++i)
            s += a.coeff(i) * b.coeff(k - i);
        b.set_coeff(k, -lead * s);
    }
    return b;
}

ChowClass dual(const ChowClass& a) {
    ChowClass r(a);
    for (int i = 1; i <= a.ambient_dim(); i += 2)
        r.set_coeff(i, -r.coeff(i));
    return r;
}

ChowClass tensor_line(const ChowClass& a, LineBundle line) {
    const int n = a.ambient_dim();
    if (line.twist == 0)
        return a;
    ChowClass r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i) == 0)
            continue;
        // a_i H^i / (1 + mH)^i, truncated at H^n.
        ChowClass inv = chern_power(n, line, -static_cast<long>(i));
        for (int j = 0; i + j <= n; ++j)
            r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * inv.coeff(j));
    }
    return r;
}

ChowClass involution(const ChowClass& a, long n, LineBundle line) {
    return ring_product(chern_power(a.ambient_dim(), line, n),
                        tensor_line(dual(a), line));
}

BigInt degree(const ChowClass& a) { return a.coeff(a.ambient_dim()); }

ChowClass chern_power(int ambient_dim, LineBundle line, long k) {
    ChowClass r = ChowClass::unit(ambient_dim);
    if (line.twist == 0 || k == 0)
        return r;
    const BigInt m(line.twist);
    BigInt mj(1);
    for (int j = 1; j <= ambient_dim; ++j) {
        mj *= m;
        r.set_coeff(j, binomial(BigInt(k), j) * mj);
    }
    return r;
}

}  // namespace chowcal

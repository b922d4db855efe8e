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

#include "correspondence.hpp"

#include <string>
#include <utility>

#include "binomial.hpp"

namespace chowcal {

namespace {

void check_product_ambient(int ambient_dim) {
    if (ambient_dim < 1)
        fail(ErrorCode::Argument,
             "correspondences need ambient dimension >= 1, got " +
                 std::to_string(ambient_dim));
}

void check_same_ambient(int a, int b) {
    if (a != b)
        fail(ErrorCode::Dimension, "ambient dimension mismatch: P^" +
                                       std::to_string(a) + " vs P^" +
                                       std::to_string(b));
}

}  // namespace

Correspondence::Correspondence(int ambient_dim) : ambient_(ambient_dim) {
    check_product_ambient(ambient_dim);
    const std::size_t side = static_cast<std::size_t>(ambient_dim) + 1;
    grid_.assign(side * side, BigInt(0));
}

Correspondence Correspondence::diagonal(int ambient_dim) {
    Correspondence d(ambient_dim);
    for (int j = 0; j <= ambient_dim; ++j)
        d.set_entry(ambient_dim - j, j, BigInt(1));
    return d;
}

void Correspondence::check_exponents(int x_exp, int y_exp) const {
    if (x_exp < 0 || x_exp > ambient_ || y_exp < 0 || y_exp > ambient_)
        fail(ErrorCode::Argument, "exponent pair (" + std::to_string(x_exp) +
                                      ", " + std::to_string(y_exp) +
                                      ") out of range for P^" +
                                      std::to_string(ambient_) + " x P^" +
                                      std::to_string(ambient_));
}

const BigInt& Correspondence::entry(int x_exp, int y_exp) const {
    check_exponents(x_exp, y_exp);
    return grid_[static_cast<std::size_t>(x_exp) * (ambient_ + 1) + y_exp];
}

void Correspondence::set_entry(int x_exp, int y_exp, BigInt value) {
    check_exponents(x_exp, y_exp);
    grid_[static_cast<std::size_t>(x_exp) * (ambient_ + 1) + y_exp] =
        std::move(value);
}

Correspondence& Correspondence::operator+=(const Correspondence& other) {
    check_same_ambient(ambient_, other.ambient_);
    for (std::size_t i = 0; i < grid_.size(); ++i)
        grid_[i] += other.grid_[i];
    return *this;
}

OperatorMatrix::OperatorMatrix(int ambient_dim) : ambient_(ambient_dim) {
    check_product_ambient(ambient_dim);
    const std::size_t side = static_cast<std::size_t>(ambient_dim) + 1;
    entries_.assign(side * side, BigInt(0));
}

OperatorMatrix OperatorMatrix::identity(int ambient_dim) {
    OperatorMatrix m(ambient_dim);
    for (int i = 0; i <= ambient_dim; ++i)
        m.set_entry(i, i, BigInt(1));
    return m;
}

const BigInt& OperatorMatrix::entry(int row, int col) const {
    if (row < 0 || row > ambient_ || col < 0 || col > ambient_)
        fail(ErrorCode::Argument, "matrix index out of range");
    return entries_[static_cast<std::size_t>(row) * (ambient_ + 1) + col];
}

void OperatorMatrix::set_entry(int row, int col, BigInt value) {
    if (row < 0 || row > ambient_ || col < 0 || col > ambient_)
        fail(ErrorCode::Argument, "matrix index out of range");
    entries_[static_cast<std::size_t>(row) * (ambient_ + 1) + col] =
        std::move(value);
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    check_same_ambient(a.ambient_dim(), b.ambient_dim());
    const int n = a.ambient_dim();
    OperatorMatrix r(n);
    for (int i = 0; i <= n; ++i)
        for (int k = 0; k <= n; ++k) {
            if (a.entry(i, k) == 0)
                continue;
            for (int j = 0; j <= n; ++j)
                if (b.entry(k, j) != 0)
                    r.set_entry(i, j, r.entry(i, j) + a.entry(i, k) * b.entry(k, j));
        }
    return r;
}

Correspondence involutive_correspondence(int ambient_dim, long n, long m) {
    Correspondence alpha(ambient_dim);
    const BigInt big_m(m);
    for (int j = 0; j <= ambient_dim; ++j) {
        const bool negate = (j % 2 != 0);
        for (int i = j; i <= ambient_dim; ++i) {
            // a_{N-j,i} = (-1)^j C(n-j, i-j) m^{i-j}; m^0 = 1 even at m = 0.
            BigInt value = binomial(BigInt(n - j), i - j) *
                           int_pow(big_m, static_cast<unsigned long>(i - j));
            alpha.set_entry(ambient_dim - j, i, negate ? -value : value);
        }
    }
    return alpha;
}

ChowClass pushforward(const Correspondence& alpha, const ChowClass& beta) {
    check_same_ambient(alpha.ambient_dim(), beta.ambient_dim());
    const int n = alpha.ambient_dim();
    ChowClass result(n);
    for (int i = 0; i <= n; ++i) {
        BigInt acc(0);
        for (int j = 0; j <= n; ++j)
            acc += alpha.entry(n - j, i) * beta.coeff(j);
        result.set_coeff(i, std::move(acc));
    }
    return result;
}

ChowClass pullback(const Correspondence& alpha, const ChowClass& gamma) {
    check_same_ambient(alpha.ambient_dim(), gamma.ambient_dim());
    const int n = alpha.ambient_dim();
    ChowClass result(n);
    for (int i = 0; i <= n; ++i) {
        BigInt acc(0);
        for (int k = 0; k <= n; ++k)
            acc += alpha.entry(i, n - k) * gamma.coeff(k);
        result.set_coeff(i, std::move(acc));
    }
    return result;
}

OperatorMatrix to_matrix(const Correspondence& alpha) {
    const int n = alpha.ambient_dim();
    OperatorMatrix m(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            m.set_entry(i, j, alpha.entry(n - j, i));
    return m;
}

Correspondence from_matrix(const OperatorMatrix& m) {
    const int n = m.ambient_dim();
    Correspondence alpha(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            alpha.set_entry(n - j, i, m.entry(i, j));
    return alpha;
}

Correspondence compose(const Correspondence& outer, const Correspondence& inner) {
    check_same_ambient(outer.ambient_dim(), inner.ambient_dim());
    return from_matrix(to_matrix(outer) * to_matrix(inner));
}

}  // namespace chowcal

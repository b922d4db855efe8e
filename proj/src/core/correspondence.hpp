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

#pragma once

#include <vector>

#include "chow_class.hpp"

namespace chowcal {

/// A class in A_*(P^N x P^N), identified with Z[x,y]/(x^{N+1}, y^{N+1});
/// entry(i, j) is the coefficient of x^i y^j.  Acts on A_*P^N by
/// pull-multiply-push in either direction.  The full (N+1)^2 grid is kept:
/// the involutive correspondences genuinely carry terms of total degree
/// above N, and the operator bijection needs the whole basis.
class Correspondence {
  public:
    /// Zero correspondence; requires ambient_dim >= 1.
    explicit Correspondence(int ambient_dim);

    /// The class of the diagonal, sum_j x^{N-j} y^j; the identity
    /// correspondence (its operator matrix is the identity).
    static Correspondence diagonal(int ambient_dim);

    int ambient_dim() const noexcept { return ambient_; }

    const BigInt& entry(int x_exp, int y_exp) const;
    void set_entry(int x_exp, int y_exp, BigInt value);

    friend bool operator==(const Correspondence&, const Correspondence&) = default;

    Correspondence& operator+=(const Correspondence& other);
    friend Correspondence operator+(Correspondence a, const Correspondence& b) {
        return a += b;
    }

  private:
    void check_exponents(int x_exp, int y_exp) const;

    int ambient_;
    std::vector<BigInt> grid_;  // row-major, row = x exponent
};

/// The pushforward operator of a correspondence in the monomial basis:
/// entry(i, j) is the coefficient of H^i in the image of H^j.
class OperatorMatrix {
  public:
    explicit OperatorMatrix(int ambient_dim);

    static OperatorMatrix identity(int ambient_dim);

    int ambient_dim() const noexcept { return ambient_; }

    const BigInt& entry(int row, int col) const;
    void set_entry(int row, int col, BigInt value);

    friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);

  private:
    int ambient_;
    std::vector<BigInt> entries_;
};

/// The unique correspondence whose pushforward realizes the involution
/// i_{n,O(m)} on A_*P^N: entry(N-j, i) = (-1)^j C(n-j, i-j) m^{i-j}, with
/// C(a, k) = 0 for k < 0 and m^0 = 1 even at m = 0.
Correspondence involutive_correspondence(int ambient_dim, long n, long m);

/// q_*(alpha . p^* beta): multiply by beta(x) and extract the coefficient
/// of x^N as a polynomial in y; componentwise,
/// result_i = sum_j entry(N-j, i) beta_j.
ChowClass pushforward(const Correspondence& alpha, const ChowClass& beta);

/// p_*(alpha . q^* gamma): the mirror-image operator,
/// result_i = sum_k entry(i, N-k) gamma_k.
ChowClass pullback(const Correspondence& alpha, const ChowClass& gamma);

/// Matrix of the pushforward operator; together with from_matrix a
/// bijection between correspondences and (N+1)x(N+1) integer matrices.
OperatorMatrix to_matrix(const Correspondence& alpha);
Correspondence from_matrix(const OperatorMatrix& m);

/// The correspondence whose pushforward is outer_* o inner_*; computed
/// through the matrix bijection, so the functoriality law holds exactly.
Correspondence compose(const Correspondence& outer, const Correspondence& inner);

}  // namespace chowcal

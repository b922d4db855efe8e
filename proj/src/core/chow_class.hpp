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

#include "bigint.hpp"
#include "error.hpp"

namespace chowcal {

/// A line bundle O(m) on P^N, identified by its twist m; c(O(m)) = 1 + mH.
/// Twist 0 is the trivial bundle, the neutral element of the tensor action.
struct LineBundle {
    long twist = 0;

    friend constexpr bool operator==(LineBundle, LineBundle) = default;
    /// Tensor product of line bundles adds twists.
    friend constexpr LineBundle operator+(LineBundle a, LineBundle b) {
        return LineBundle{a.twist + b.twist};
    }
};

/// An element of the Chow group A_*P^N, identified with Z[H]/(H^{N+1})
/// via codimension grading: coeff(i) is the coefficient of H^i, the
/// component of codimension i.  The dimension-k component corresponds to
/// codimension N-k.  Values are immutable in practice: every ring
/// operation returns a fresh class.
class ChowClass {
  public:
    /// The zero class on P^ambient_dim.
    explicit ChowClass(int ambient_dim);

    /// Requires coeffs.size() == ambient_dim + 1.
    ChowClass(int ambient_dim, std::vector<BigInt> coeffs);

    /// The unit 1 = [P^N].
    static ChowClass unit(int ambient_dim);

    /// The class H^codim of a codimension-codim linear subspace.
    static ChowClass hyperplane_power(int ambient_dim, int codim);

    int ambient_dim() const noexcept { return ambient_; }

    const BigInt& coeff(int codim) const;
    void set_coeff(int codim, BigInt value);

    /// Coefficient of the dimension-k component, i.e. coeff(N - k).
    const BigInt& coeff_dim(int k) const { return coeff(ambient_ - k); }

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;

    ChowClass& operator+=(const ChowClass& other);
    ChowClass& operator-=(const ChowClass& other);
    ChowClass& operator*=(const BigInt& scalar);

    friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
    friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
    friend ChowClass operator*(ChowClass a, const BigInt& s) { return a *= s; }
    friend ChowClass operator*(const BigInt& s, ChowClass a) { return a *= s; }
    ChowClass operator-() const;

    friend bool operator==(const ChowClass&, const ChowClass&) = default;

  private:
    int ambient_;
    std::vector<BigInt> coeffs_;
};

/// Product in Z[H]/(H^{N+1}); terms beyond H^N are discarded.  Realizes
/// the cap/intersection products of the calculus.  Throws on ambient
/// dimension mismatch.
ChowClass ring_product(const ChowClass& a, const ChowClass& b);

/// Multiplicative inverse of a class with unit leading coefficient
/// (coeff(0) must be +1 or -1); the result has integer coefficients and
/// ring_product(a, unit_inverse(a)) == 1.
ChowClass unit_inverse(const ChowClass& a);

/// The dual: the sign of each odd-codimension component is flipped.
/// An involution.
ChowClass dual(const ChowClass& a);

/// The Pic-action: the codimension-i component is divided by c(L)^i.
/// tensor_line(tensor_line(a, L), M) == tensor_line(a, L + M) exactly.
ChowClass tensor_line(const ChowClass& a, LineBundle line);

/// The involution i_{n,L}: a |-> c(L)^n cap (dual(a) tensor L).  Applying
/// it twice returns the argument exactly, for every integer n and twist.
ChowClass involution(const ChowClass& a, long n, LineBundle line);

/// Proper pushforward to a point: the coefficient of the point class H^N.
BigInt degree(const ChowClass& a);

/// c(O(m))^k = (1 + mH)^k on P^ambient_dim for any integer k, expanded
/// with generalized binomial coefficients when k < 0.
ChowClass chern_power(int ambient_dim, LineBundle line, long k);

}  // namespace chowcal

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

#include "chow_class.hpp"
#include "virtual_bundle.hpp"

namespace chowcal {

/// How the Segre class of the singular scheme was obtained.
enum class SingularModelKind {
    Smooth,    // empty singular scheme, Segre class 0
    Points,    // r reduced points, Segre class r * H^N
    Linear,    // a linear P^k, Segre class (1+H)^{-(N-k)} cap H^{N-k}
    Explicit,  // caller-supplied coefficient vector
};

/// Sign convention for the component-wise Milnor/Le formulas.  Derived is
/// (-1)^{N-k-j}, which agrees with the involution identities exactly;
/// Paper is the printed (-1)^{j+k} form, the same classes times the global
/// factor (-1)^N.
enum class SignConvention { Derived, Paper };

/// A degree-d hypersurface X in P^N, possibly singular or non-reduced,
/// described by the data the characteristic-class formulas consume: the
/// ambient dimension, the degree (so O(X) = O(d) and [X] = dH), and the
/// Segre class of its singular scheme pushed forward to A_*P^N.
///
/// Segre classes are inputs here.  The three built-in models cover an
/// empty singular scheme, finitely many reduced points, and a linear
/// subspace; anything else enters through the explicit coefficient form.
class HypersurfaceModel {
  public:
    static HypersurfaceModel smooth(int ambient_dim, long degree);
    static HypersurfaceModel points(int ambient_dim, long degree, long count);
    static HypersurfaceModel linear(int ambient_dim, long degree, int dim);
    static HypersurfaceModel with_segre(int ambient_dim, long degree,
                                        ChowClass segre_singular);

    int ambient_dim() const noexcept { return ambient_; }
    long degree() const noexcept { return degree_; }
    SingularModelKind kind() const noexcept { return kind_; }
    long points_count() const noexcept { return points_count_; }
    int linear_dim() const noexcept { return linear_dim_; }

    /// s(X_s, P^N), codimension-indexed; coeff(0) is always 0.
    const ChowClass& segre_singular() const noexcept { return segre_; }

    /// O(X) = O(degree).
    LineBundle bundle() const noexcept { return LineBundle{degree_}; }

    /// [X] = degree * H.
    ChowClass fundamental_class() const;

    friend bool operator==(const HypersurfaceModel&, const HypersurfaceModel&) = default;

  private:
    HypersurfaceModel(int ambient_dim, long degree, SingularModelKind kind,
                      ChowClass segre);

    int ambient_;
    long degree_;
    SingularModelKind kind_;
    long points_count_ = 0;
    int linear_dim_ = 0;
    ChowClass segre_;
};

/// Fulton class c(TM) cap s(X, M) = c(TM)/c(O(X)) cap [X]; insensitive to
/// the singularities, only to the rational equivalence class of X.
ChowClass fulton(const HypersurfaceModel& x);

/// Chern-Schwartz-MacPherson class
/// c(TM)/c(O(X)) cap ([X] + dual(s(X_s,M)) tensor O(X)); its degree is the
/// Euler characteristic.  Equals fulton(x) when the singular scheme is empty.
ChowClass csm(const HypersurfaceModel& x);

/// Milnor class c(TM)/c(O(X)) cap (dual(s(X_s,M)) tensor O(X)); equals
/// csm(x) - fulton(x) and is supported on the singular locus.
ChowClass milnor(const HypersurfaceModel& x);

/// Le class c(O(X)) c(T*M tensor O(X)) cap s(X_s,M) = alpha_n(x, N).
ChowClass le_class(const HypersurfaceModel& x);

/// mu-class c(T*M tensor O(X)) cap s(X_s,M) = alpha_n(x, N-1); intrinsic
/// to the singular scheme.
ChowClass mu_class(const HypersurfaceModel& x);

/// The dual partner of the Milnor class at level n:
/// alpha_n = c(T*M tensor O(X)) c(O(X))^{n+1-N} cap s(X_s,M), satisfying
/// milnor(x) == involution(alpha_n(x,n), n, O(d)) for every integer n.
ChowClass alpha_n(const HypersurfaceModel& x, long n);

/// The dual partner of the Fulton class at level n:
/// nu_n = c(T*M tensor O(X)) c(O(X))^{n-N} cap (-[X]), satisfying
/// fulton(x) == involution(nu_n(x,n), n, O(d)); touches only [X], never
/// the Segre class.
ChowClass nu_n(const HypersurfaceModel& x, long n);

/// Aluffi class c(O(X)) cap milnor(x); integrates to the Donaldson-Thomas
/// type invariant of the singular scheme, and satisfies
/// aluffi_class(x) == involution(alpha_n(x,n), n+1, O(d)) for every n.
ChowClass aluffi_class(const HypersurfaceModel& x);

/// Binomial component assembly: the dimension-k piece of the result is
/// sum_j sign * C(j+k, j) * (dH)^j cap source_{j+k}, summed over k+j <= N,
/// with sign (-1)^{N-k-j} (Derived) or (-1)^{j+k} (Paper).  Applying it to
/// the Le class yields the Milnor class and vice versa.
ChowClass assemble_dual_components(const ChowClass& source, long degree,
                                   SignConvention convention);

/// Milnor class assembled component-by-component from the Le class.
ChowClass milnor_components_from_le(const HypersurfaceModel& x,
                                    SignConvention convention = SignConvention::Derived);

/// Le class assembled component-by-component from the Milnor class.
ChowClass le_components_from_milnor(const HypersurfaceModel& x,
                                    SignConvention convention = SignConvention::Derived);

/// degree(csm(x)); the Euler characteristic of X.
BigInt euler_char(const HypersurfaceModel& x);

}  // namespace chowcal

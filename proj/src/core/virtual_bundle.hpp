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

/// One formal line-bundle summand O(twist) with an integer multiplicity,
/// which may be negative.
struct BundleRoot {
    long twist = 0;
    long long multiplicity = 0;

    friend constexpr bool operator==(BundleRoot, BundleRoot) = default;
};

/// A class in the Grothendieck group of vector bundles on P^N, stored as
/// a formal multiset of line-bundle roots.  Every bundle used by the
/// calculus (tangent and cotangent bundles, O(d), and their twists) splits
/// this way via the Euler sequence, so total Chern classes become exact
/// integer arithmetic even at negative virtual rank.
///
/// The root list is kept canonical: merged by twist, zero multiplicities
/// dropped, sorted by twist.  Equality of values is therefore structural.
class VirtualBundle {
  public:
    /// Rank-0 trivial class (empty root list).
    explicit VirtualBundle(int ambient_dim);

    VirtualBundle(int ambient_dim, std::vector<BundleRoot> roots);

    /// TP^N as {(1, N+1), (0, -1)}, so c = (1+H)^{N+1} in the truncated ring.
    static VirtualBundle tangent(int ambient_dim);

    /// T*P^N, the dual of tangent().
    static VirtualBundle cotangent(int ambient_dim);

    int ambient_dim() const noexcept { return ambient_; }
    const std::vector<BundleRoot>& roots() const noexcept { return roots_; }

    /// Sum of multiplicities; may be negative.
    long long rank() const;

    friend bool operator==(const VirtualBundle&, const VirtualBundle&) = default;

  private:
    int ambient_;
    std::vector<BundleRoot> roots_;
};

/// Total Chern class c(E) = prod (1 + a_i H)^{mu_i}, truncated at H^N.
ChowClass chern_total(const VirtualBundle& e);

/// Every twist negated, multiplicities kept; an involution on bundles.
VirtualBundle dual_bundle(const VirtualBundle& e);

/// Every twist shifted by the line bundle's twist; rank preserved.
VirtualBundle tensor_by_line(const VirtualBundle& e, LineBundle line);

}  // namespace chowcal

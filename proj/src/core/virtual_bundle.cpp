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

#include "virtual_bundle.hpp"

#include <map>
#include <string>
#include <utility>

namespace chowcal {

namespace {

std::vector<BundleRoot> normalize(std::vector<BundleRoot> roots) {
    std::map<long, long long> merged;
    for (const BundleRoot& r : roots)
        merged[r.twist] += r.multiplicity;
    std::vector<BundleRoot> out;
    out.reserve(merged.size());
    for (const auto& [twist, mult] : merged)
        if (mult != 0)
            out.push_back(BundleRoot{twist, mult});
    return out;
}

}  // namespace

VirtualBundle::VirtualBundle(int ambient_dim) : ambient_(ambient_dim) {
    if (ambient_dim < 0)
        fail(ErrorCode::Argument, "ambient dimension must be non-negative, got " +
                                      std::to_string(ambient_dim));
}

VirtualBundle::VirtualBundle(int ambient_dim, std::vector<BundleRoot> roots)
    : VirtualBundle(ambient_dim) {
    roots_ = normalize(std::move(roots));
}

VirtualBundle VirtualBundle::tangent(int ambient_dim) {
    return VirtualBundle(ambient_dim,
                         {{1, static_cast<long long>(ambient_dim) + 1}, {0, -1}});
}

VirtualBundle VirtualBundle::cotangent(int ambient_dim) {
    return dual_bundle(tangent(ambient_dim));
}

long long VirtualBundle::rank() const {
    long long r = 0;
    for (const BundleRoot& root : roots_)
        r += root.multiplicity;
    return r;
}

ChowClass chern_total(const VirtualBundle& e) {
    ChowClass c = ChowClass::unit(e.ambient_dim());
    for (const BundleRoot& root : e.roots())
        c = ring_product(c, chern_power(e.ambient_dim(), LineBundle{root.twist},
                                        static_cast<long>(root.multiplicity)));
    return c;
}

VirtualBundle dual_bundle(const VirtualBundle& e) {
    std::vector<BundleRoot> roots = e.roots();
    for (BundleRoot& r : roots)
        r.twist = -r.twist;
    return VirtualBundle(e.ambient_dim(), std::move(roots));
}

VirtualBundle tensor_by_line(const VirtualBundle& e, LineBundle line) {
    std::vector<BundleRoot> roots = e.roots();
    for (BundleRoot& r : roots)
        r.twist += line.twist;
    return VirtualBundle(e.ambient_dim(), std::move(roots));
}

}  // namespace chowcal

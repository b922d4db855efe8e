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

#include <doctest.h>

#include "core/hypersurface.hpp"
#include "test_util.hpp"

using namespace chowcal;
using testutil::cls;

namespace {

// The two worked singular examples used throughout.
HypersurfaceModel nodal_cubic() { return HypersurfaceModel::points(2, 3, 1); }
HypersurfaceModel two_planes() { return HypersurfaceModel::linear(3, 2, 1); }

}  // namespace

TEST_CASE("built-in singular models produce the expected Segre classes") {
    CHECK(nodal_cubic().segre_singular() == cls({0, 0, 1}));
    // (1+H)^{-2} cap [P^1] in P^3
    CHECK(two_planes().segre_singular() == cls({0, 0, 1, -2}));
    CHECK(HypersurfaceModel::smooth(4, 3).segre_singular() == ChowClass(4));
    CHECK(HypersurfaceModel::points(3, 2, 4).segre_singular() == cls({0, 0, 0, 4}));
    // a hyperplane singular locus: (1+H)^{-1} cap [P^{N-1}]
    CHECK(HypersurfaceModel::linear(3, 2, 2).segre_singular() ==
          cls({0, 1, -1, 1}));
}

TEST_CASE("model constructors validate their inputs") {
    CHECK_THROWS_AS(HypersurfaceModel::points(2, 3, 0), Error);
    CHECK_THROWS_AS(HypersurfaceModel::linear(3, 2, 3), Error);
    CHECK_THROWS_AS(HypersurfaceModel::linear(3, 2, -1), Error);
    CHECK_THROWS_AS(HypersurfaceModel::smooth(0, 1), Error);
    CHECK_THROWS_AS(HypersurfaceModel::smooth(2, 0), Error);
    // explicit Segre classes must vanish in codimension 0
    CHECK_THROWS_AS(HypersurfaceModel::with_segre(2, 2, cls({1, 0, 1})), Error);
    CHECK_THROWS_AS(HypersurfaceModel::with_segre(2, 2, cls({0, 1})), Error);
    CHECK(HypersurfaceModel::with_segre(2, 2, cls({0, 0, 1})).kind() ==
          SingularModelKind::Explicit);
}

TEST_CASE("fulton class examples") {
    CHECK(fulton(nodal_cubic()) == cls({0, 3, 0}));
    CHECK(fulton(two_planes()) == cls({0, 2, 4, 4}));
    // a line in P^2: degree = chi(P^1) = 2
    const HypersurfaceModel line = HypersurfaceModel::smooth(2, 1);
    CHECK(fulton(line) == cls({0, 1, 2}));
    CHECK(degree(fulton(line)) == 2);
}

TEST_CASE("csm class examples and Euler characteristics") {
    // nodal cubic: chi = chi(P^1) - 2 + 1 = 1 by normalization
    CHECK(csm(nodal_cubic()) == cls({0, 3, 1}));
    CHECK(euler_char(nodal_cubic()) == 1);
    // two planes: chi = 2 chi(P^2) - chi(P^1) = 4 by inclusion-exclusion
    CHECK(csm(two_planes()) == cls({0, 2, 5, 4}));
    CHECK(euler_char(two_planes()) == 4);
    // smooth conic is a P^1
    const HypersurfaceModel conic = HypersurfaceModel::smooth(2, 2);
    CHECK(csm(conic) == cls({0, 2, 2}));
    CHECK(euler_char(conic) == 2);
}

TEST_CASE("milnor class examples") {
    CHECK(milnor(HypersurfaceModel::smooth(3, 4)) == ChowClass(3));
    CHECK(milnor(nodal_cubic()) == cls({0, 0, 1}));  // Milnor number of a node
    CHECK(milnor(two_planes()) == cls({0, 0, 1, 0}));
}

TEST_CASE("milnor equals csm minus fulton") {
    for (const auto& x : {nodal_cubic(), two_planes(),
                          HypersurfaceModel::points(4, 3, 2),
                          HypersurfaceModel::linear(4, 5, 2)})
        CHECK(milnor(x) == csm(x) - fulton(x));
}

TEST_CASE("le class examples") {
    CHECK(le_class(nodal_cubic()) == cls({0, 0, 1}));
    CHECK(le_class(two_planes()) == cls({0, 0, 1, 2}));
    CHECK(le_class(HypersurfaceModel::smooth(3, 2)) == ChowClass(3));
}

TEST_CASE("mu class examples") {
    CHECK(mu_class(nodal_cubic()) == cls({0, 0, 1}));
    CHECK(mu_class(two_planes()) == cls({0, 0, 1, 0}));
    CHECK(mu_class(HypersurfaceModel::smooth(4, 2)) == ChowClass(4));
}

TEST_CASE("alpha_n interpolates the le and mu classes") {
    CHECK(alpha_n(two_planes(), 3) == cls({0, 0, 1, 2}));
    CHECK(alpha_n(two_planes(), 2) == cls({0, 0, 1, 0}));
    CHECK(alpha_n(HypersurfaceModel::smooth(3, 5), -2) == ChowClass(3));
    for (const auto& x : {nodal_cubic(), two_planes()}) {
        CHECK(le_class(x) == alpha_n(x, x.ambient_dim()));
        CHECK(mu_class(x) == alpha_n(x, x.ambient_dim() - 1));
    }
}

TEST_CASE("nu_n examples") {
    // line in P^2 at n = 2: c(T*P^2 @ O(1)) cap (-H) = -H + H^2
    const HypersurfaceModel line = HypersurfaceModel::smooth(2, 1);
    CHECK(nu_n(line, 2) == cls({0, -1, 1}));
    CHECK(involution(nu_n(line, 2), 2, line.bundle()) == fulton(line));
    // nodal cubic at n = 2: (1+2H)^3/(1+3H) cap (-3H) = -3H - 9H^2
    CHECK(nu_n(nodal_cubic(), 2) == cls({0, -3, -9}));
    CHECK(involution(nu_n(nodal_cubic(), 2), 2, LineBundle{3}) ==
          fulton(nodal_cubic()));
}

TEST_CASE("nu_n ignores the singular scheme") {
    const HypersurfaceModel a = HypersurfaceModel::smooth(3, 2);
    const HypersurfaceModel b = two_planes();
    const HypersurfaceModel c = HypersurfaceModel::points(3, 2, 5);
    for (long n = -4; n <= 6; ++n) {
        CHECK(nu_n(a, n) == nu_n(b, n));
        CHECK(nu_n(a, n) == nu_n(c, n));
    }
}

TEST_CASE("aluffi class examples") {
    CHECK(aluffi_class(nodal_cubic()) == cls({0, 0, 1}));
    CHECK(aluffi_class(two_planes()) == cls({0, 0, 1, 2}));
    CHECK(aluffi_class(HypersurfaceModel::smooth(2, 3)) == ChowClass(2));
}

TEST_CASE("duality sweep: milnor, csm and aluffi against their partners") {
    for (const auto& x :
         {nodal_cubic(), two_planes(), HypersurfaceModel::points(4, 4, 3),
          HypersurfaceModel::linear(5, 3, 2),
          HypersurfaceModel::with_segre(3, 2, cls({0, 0, 1, -2}))}) {
        const LineBundle line = x.bundle();
        const ChowClass m = milnor(x);
        const ChowClass c = csm(x);
        const ChowClass ca = aluffi_class(x);
        for (long n = -4; n <= x.ambient_dim() + 3; ++n) {
            const ChowClass alpha = alpha_n(x, n);
            CHECK(involution(alpha, n, line) == m);
            CHECK(involution(m, n, line) == alpha);
            CHECK(involution(nu_n(x, n) + alpha, n, line) == c);
            CHECK(involution(alpha, n + 1, line) == ca);
        }
    }
}

TEST_CASE("component formulas reproduce the total classes") {
    // two planes: M_1 collects the single j=0 term, M_0 cancels exactly
    const ChowClass assembled =
        milnor_components_from_le(two_planes(), SignConvention::Derived);
    CHECK(assembled == milnor(two_planes()));
    CHECK(assembled.coeff_dim(1) == 1);
    CHECK(assembled.coeff_dim(0) == 0);
    // nodal cubic: single j=0 term with positive sign (D = 2)
    CHECK(milnor_components_from_le(nodal_cubic(), SignConvention::Derived) ==
          cls({0, 0, 1}));
    CHECK(le_components_from_milnor(two_planes(), SignConvention::Derived) ==
          le_class(two_planes()));
    CHECK(milnor_components_from_le(HypersurfaceModel::smooth(3, 3),
                                    SignConvention::Derived) == ChowClass(3));
}

TEST_CASE("the paper sign convention differs by the global factor (-1)^N") {
    for (const auto& x : {nodal_cubic(), two_planes(),
                          HypersurfaceModel::points(4, 2, 3),
                          HypersurfaceModel::linear(5, 4, 1)}) {
        const BigInt sign(x.ambient_dim() % 2 == 0 ? 1 : -1);
        CHECK(milnor_components_from_le(x, SignConvention::Paper) ==
              sign * milnor_components_from_le(x, SignConvention::Derived));
        CHECK(le_components_from_milnor(x, SignConvention::Paper) ==
              sign * le_components_from_milnor(x, SignConvention::Derived));
    }
}

TEST_CASE("component assembly round-trips under both conventions") {
    for (const auto& x : {nodal_cubic(), two_planes(),
                          HypersurfaceModel::linear(4, 3, 2)}) {
        const ChowClass le = le_class(x);
        for (SignConvention conv : {SignConvention::Derived, SignConvention::Paper})
            CHECK(assemble_dual_components(
                      assemble_dual_components(le, x.degree(), conv), x.degree(),
                      conv) == le);
    }
}

TEST_CASE("smooth models degenerate to the classical picture") {
    for (int n = 1; n <= 5; ++n)
        for (long d = 1; d <= 5; ++d) {
            const HypersurfaceModel x = HypersurfaceModel::smooth(n, d);
            const ChowClass zero(n);
            CHECK(milnor(x) == zero);
            CHECK(le_class(x) == zero);
            CHECK(mu_class(x) == zero);
            CHECK(aluffi_class(x) == zero);
            CHECK(csm(x) == fulton(x));
        }
    // plane curves: chi = 3d - d^2 = 2 - 2g with g = (d-1)(d-2)/2
    for (long d = 1; d <= 6; ++d) {
        const long genus = (d - 1) * (d - 2) / 2;
        CHECK(euler_char(HypersurfaceModel::smooth(2, d)) == BigInt(2 - 2 * genus));
        CHECK(euler_char(HypersurfaceModel::smooth(2, d)) == BigInt(3 * d - d * d));
    }
}

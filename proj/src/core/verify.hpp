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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypersurface.hpp"

namespace chowcal::verify {

/// Deliberate defect injected into the suite's own operator table.  Used
/// to demonstrate that the harness actually catches broken identities:
/// with a mutant active the run must fail with a counterexample.
enum class Mutant {
    None,
    // dual keeps the sign of the codimension-1 component: a plausible
    // off-by-one sign bug that breaks the involution roundtrip.
    DualSign,
};

std::optional<Mutant> mutant_from_name(std::string_view name);
std::string_view mutant_name(Mutant m);

struct Options {
    std::uint64_t seed = 0;
    int max_dim = 6;
    Mutant mutant = Mutant::None;
};

struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    long long cases = 0;
    bool passed = true;
    bool vacuous = false;           // ran zero cases (max_dim too small)
    std::string counterexample;     // multi-line; empty when passed
};

struct Report {
    Options options;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    long long total_cases() const;
};

// Individual checks, one per documented identity.  Each draws its cases
// from a stream derived from options.seed alone, so they can be run in
// any combination with identical results.
CheckResult check_involution_roundtrip(const Options& o);
CheckResult check_dual_involution(const Options& o);
CheckResult check_tensor_action(const Options& o);
CheckResult check_linearity(const Options& o);
CheckResult check_unit_inverse(const Options& o);
CheckResult check_bundle_dual_formula(const Options& o);
CheckResult check_bundle_tensor_formula(const Options& o);
CheckResult check_bundle_multiplicativity(const Options& o);
CheckResult check_milnor_le_duality(const Options& o);
CheckResult check_csm_duality(const Options& o);
CheckResult check_aluffi_duality(const Options& o);
CheckResult check_class_consistency(const Options& o);
CheckResult check_component_formulas(const Options& o);
CheckResult check_smooth_degeneracy(const Options& o);
CheckResult check_operator_realization(const Options& o);
CheckResult check_correspondence_involutivity(const Options& o);
CheckResult check_matrix_bijection(const Options& o);
CheckResult check_functoriality(const Options& o);
CheckResult check_pushforward_bilinearity(const Options& o);

/// The singular models swept by the hypersurface checks: the nodal-cubic
/// and two-planes examples plus the smooth/points/linear families with
/// N <= min(max_dim, 5), d <= 5, all valid k, r <= 5.
std::vector<HypersurfaceModel> builtin_models(int max_dim);

/// Run every check in fixed order.
Report run(const Options& options);

std::string render_text(const Report& report);
std::string render_json(const Report& report);

}  // namespace chowcal::verify

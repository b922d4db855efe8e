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

#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "correspondence.hpp"
#include "json_format.hpp"
#include "rng.hpp"
#include "text_format.hpp"
#include "virtual_bundle.hpp"

namespace chowcal::verify {

namespace {

// Fixed per-check salts so every check owns an independent, order-free
// random stream.
enum CheckSalt : std::uint64_t {
    kInvolutionRoundtrip = 1,
    kDualInvolution,
    kTensorAction,
    kLinearity,
    kUnitInverse,
    kBundleDual,
    kBundleTensor,
    kBundleMultiplicative,
    kMilnorLeDuality,
    kCsmDuality,
    kAluffiDuality,
    kClassConsistency,
    kComponentFormulas,
    kSmoothDegeneracy,
    kOperatorRealization,
    kCorrInvolutivity,
    kMatrixBijection,
    kFunctoriality,
    kBilinearity,
};

ChowClass random_class(Rng& rng, int ambient, long lo = -9, long hi = 9) {
    ChowClass c(ambient);
    for (int i = 0; i <= ambient; ++i)
        c.set_coeff(i, BigInt(rng.range(lo, hi)));
    return c;
}

ChowClass random_unit_class(Rng& rng, int ambient) {
    ChowClass c = random_class(rng, ambient);
    c.set_coeff(0, BigInt(rng.range(0, 1) == 0 ? 1 : -1));
    return c;
}

VirtualBundle random_bundle(Rng& rng, int ambient) {
    const long count = rng.range(0, 5);
    std::vector<BundleRoot> roots;
    for (long i = 0; i < count; ++i)
        roots.push_back(BundleRoot{rng.range(-3, 3), rng.range(-3, 3)});
    return VirtualBundle(ambient, std::move(roots));
}

Correspondence random_corr(Rng& rng, int ambient) {
    Correspondence alpha(ambient);
    for (int i = 0; i <= ambient; ++i)
        for (int j = 0; j <= ambient; ++j)
            alpha.set_entry(i, j, BigInt(rng.range(-9, 9)));
    return alpha;
}

OperatorMatrix random_matrix(Rng& rng, int ambient) {
    OperatorMatrix m(ambient);
    for (int i = 0; i <= ambient; ++i)
        for (int j = 0; j <= ambient; ++j)
            m.set_entry(i, j, BigInt(rng.range(-9, 9)));
    return m;
}

// The operator table the suite verifies.  The involution is rebuilt from
// its parts so an injected dual defect propagates into it, exactly like a
// real sign bug would.
struct OpTable {
    Mutant mutant = Mutant::None;

    ChowClass dual(const ChowClass& a) const {
        ChowClass d = chowcal::dual(a);
        if (mutant == Mutant::DualSign && a.ambient_dim() >= 1)
            d.set_coeff(1, a.coeff(1));
        return d;
    }

    ChowClass involution(const ChowClass& a, long n, LineBundle line) const {
        return ring_product(chern_power(a.ambient_dim(), line, n),
                            tensor_line(dual(a), line));
    }
};

// Greedy minimizer for class-valued counterexamples: zero out
// coefficients, then walk magnitudes toward +-1, as long as the case
// still fails.
ChowClass shrink_class(const std::function<bool(const ChowClass&)>& still_fails,
                       ChowClass c) {
    for (int round = 0; round < 64; ++round) {
        bool progress = false;
        for (int i = 0; i <= c.ambient_dim(); ++i) {
            if (c.coeff(i) == 0)
                continue;
            ChowClass zeroed = c;
            zeroed.set_coeff(i, BigInt(0));
            if (still_fails(zeroed)) {
                c = std::move(zeroed);
                progress = true;
                continue;
            }
            while (abs(c.coeff(i)) > 1) {
                ChowClass halved = c;
                halved.set_coeff(i, BigInt(c.coeff(i) / 2));
                if (!still_fails(halved))
                    break;
                c = std::move(halved);
                progress = true;
            }
        }
        if (!progress)
            break;
    }
    return c;
}

std::string model_text(const HypersurfaceModel& x) {
    std::string out = "P^" + std::to_string(x.ambient_dim()) +
                      " degree=" + std::to_string(x.degree()) + " singular=";
    switch (x.kind()) {
        case SingularModelKind::Smooth:
            out += "smooth";
            break;
        case SingularModelKind::Points:
            out += "points(" + std::to_string(x.points_count()) + ")";
            break;
        case SingularModelKind::Linear:
            out += "linear(" + std::to_string(x.linear_dim()) + ")";
            break;
        case SingularModelKind::Explicit:
            out += "explicit[" + to_text(x.segre_singular()) + "]";
            break;
    }
    return out;
}

std::string mismatch(const std::string& config, const std::string& input,
                     const ChowClass& expected, const ChowClass& actual) {
    return config + "\ninput    : " + input + "\nexpected : " + to_text(expected) +
           "\nactual   : " + to_text(actual);
}

void flag_vacuous(CheckResult& r) {
    if (r.cases == 0)
        r.vacuous = true;
}

}  // namespace

std::optional<Mutant> mutant_from_name(std::string_view name) {
    if (name.empty() || name == "none")
        return Mutant::None;
    if (name == "dual-sign")
        return Mutant::DualSign;
    return std::nullopt;
}

std::string_view mutant_name(Mutant m) {
    switch (m) {
        case Mutant::None:
            return "none";
        case Mutant::DualSign:
            return "dual-sign";
    }
    return "none";
}

bool Report::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

long long Report::total_cases() const {
    long long total = 0;
    for (const CheckResult& c : checks)
        total += c.cases;
    return total;
}

CheckResult check_involution_roundtrip(const Options& o) {
    CheckResult r{"involution.roundtrip"};
    Rng rng(Rng::mix(o.seed, kInvolutionRoundtrip));
    OpTable ops{o.mutant};
    for (int dim = 0; dim <= o.max_dim; ++dim)
        for (long n = -4; n <= 4; ++n)
            for (long m = -3; m <= 3; ++m) {
                const LineBundle line{m};
                for (int t = 0; t < 100; ++t) {
                    ++r.cases;
                    const ChowClass a = random_class(rng, dim);
                    auto still_fails = [&](const ChowClass& c) {
                        return ops.involution(ops.involution(c, n, line), n,
                                              line) != c;
                    };
                    if (still_fails(a)) {
                        const ChowClass small = shrink_class(still_fails, a);
                        r.passed = false;
                        r.counterexample = mismatch(
                            "i(i(a)) != a at N=" + std::to_string(dim) +
                                " n=" + std::to_string(n) + " m=" + std::to_string(m),
                            to_text(small), small,
                            ops.involution(ops.involution(small, n, line), n, line));
                        return r;
                    }
                }
            }
    flag_vacuous(r);
    return r;
}

CheckResult check_dual_involution(const Options& o) {
    CheckResult r{"dual.involution"};
    Rng rng(Rng::mix(o.seed, kDualInvolution));
    OpTable ops{o.mutant};
    for (int dim = 0; dim <= o.max_dim; ++dim)
        for (int t = 0; t < 200; ++t) {
            ++r.cases;
            const ChowClass a = random_class(rng, dim);
            auto still_fails = [&](const ChowClass& c) {
                return ops.dual(ops.dual(c)) != c;
            };
            if (still_fails(a)) {
                const ChowClass small = shrink_class(still_fails, a);
                r.passed = false;
                r.counterexample =
                    mismatch("dual(dual(a)) != a at N=" + std::to_string(dim),
                             to_text(small), small, ops.dual(ops.dual(small)));
                return r;
            }
        }
    flag_vacuous(r);
    return r;
}

CheckResult check_tensor_action(const Options& o) {
    CheckResult r{"tensor.action"};
    Rng rng(Rng::mix(o.seed, kTensorAction));
    for (int dim = 0; dim <= o.max_dim; ++dim)
        for (long m1 = -3; m1 <= 3; ++m1)
            for (long m2 = -3; m2 <= 3; ++m2)
                for (int t = 0; t < 20; ++t) {
                    ++r.cases;
                    const ChowClass a = random_class(rng, dim);
                    const LineBundle l{m1}, mm{m2};
                    auto still_fails = [&](const ChowClass& c) {
                        return tensor_line(tensor_line(c, l), mm) !=
                               tensor_line(c, l + mm);
                    };
                    if (still_fails(a)) {
                        const ChowClass small = shrink_class(still_fails, a);
                        r.passed = false;
                        r.counterexample = mismatch(
                            "((a@L)@M) != a@(L+M) at N=" + std::to_string(dim) +
                                " L=O(" + std::to_string(m1) + ") M=O(" +
                                std::to_string(m2) + ")",
                            to_text(small), tensor_line(small, l + mm),
                            tensor_line(tensor_line(small, l), mm));
                        return r;
                    }
                }
    flag_vacuous(r);
    return r;
}

CheckResult check_linearity(const Options& o) {
    CheckResult r{"linearity"};
    Rng rng(Rng::mix(o.seed, kLinearity));
    OpTable ops{o.mutant};
    for (int dim = 0; dim <= o.max_dim; ++dim)
        for (long n = -4; n <= 4; ++n)
            for (long m = -3; m <= 3; ++m)
                for (int t = 0; t < 10; ++t) {
                    ++r.cases;
                    const ChowClass a = random_class(rng, dim);
                    const ChowClass b = random_class(rng, dim);
                    const LineBundle line{m};
                    const ChowClass sum = a + b;
                    const bool dual_ok =
                        ops.dual(sum) == ops.dual(a) + ops.dual(b);
                    const bool tensor_ok = tensor_line(sum, line) ==
                                           tensor_line(a, line) + tensor_line(b, line);
                    const bool inv_ok =
                        ops.involution(sum, n, line) ==
                        ops.involution(a, n, line) + ops.involution(b, n, line);
                    if (!dual_ok || !tensor_ok || !inv_ok) {
                        r.passed = false;
                        r.counterexample =
                            std::string("linearity broken for ") +
                            (!dual_ok ? "dual" : (!tensor_ok ? "tensor" : "involution")) +
                            " at N=" + std::to_string(dim) + " n=" + std::to_string(n) +
                            " m=" + std::to_string(m) + "\na        : " + to_text(a) +
                            "\nb        : " + to_text(b);
                        return r;
                    }
                }
    flag_vacuous(r);
    return r;
}

CheckResult check_unit_inverse(const Options& o) {
    CheckResult r{"unit-inverse.product"};
    Rng rng(Rng::mix(o.seed, kUnitInverse));
    for (int dim = 0; dim <= o.max_dim; ++dim)
        for (int t = 0; t < 200; ++t) {
            ++r.cases;
            const ChowClass a = random_unit_class(rng, dim);
            const ChowClass product = ring_product(a, unit_inverse(a));
            if (product != ChowClass::unit(dim)) {
                r.passed = false;
                r.counterexample =
                    mismatch("a * unit_inverse(a) != 1 at N=" + std::to_string(dim),
                             to_text(a), ChowClass::unit(dim), product);
                return r;
            }
        }
    flag_vacuous(r);
    return r;
}

CheckResult check_bundle_dual_formula(const Options& o) {
    CheckResult r{"bundle.dual-formula"};
    Rng rng(Rng::mix(o.seed, kBundleDual));
    OpTable ops{o.mutant};
    for (int dim = 0; dim <= o.max_dim; ++dim)
        for (int t = 0; t < 200; ++t) {
            ++r.cases;
            const VirtualBundle e = random_bundle(rng, dim);
            const ChowClass a = random_class(rng, dim);
            const ChowClass lhs = ops.dual(ring_product(chern_total(e), a));
            const ChowClass rhs = ring_product(chern_total(dual_bundle(e)), ops.dual(a));
            if (lhs != rhs) {
                r.passed = false;
                r.counterexample =
                    "dual(c(E) cap a) != c(E^) cap dual(a) at N=" +
                    std::to_string(dim) + "\nE roots  : " + to_json(e).dump() +
                    "\na        : " + to_text(a) + "\nlhs      : " + to_text(lhs) +
                    "\nrhs      : " + to_text(rhs);
                return r;
            }
        }
    flag_vacuous(r);
    return r;
}

CheckResult check_bundle_tensor_formula(const Options& o) {
    CheckResult r{"bundle.tensor-formula"};
    Rng rng(Rng::mix(o.seed, kBundleTensor));
    for (int dim = 0; dim <= o.max_dim; ++dim)
        for (int t = 0; t < 200; ++t) {
            ++r.cases;
            const VirtualBundle e = random_bundle(rng, dim);
            const ChowClass a = random_class(rng, dim);
            const LineBundle line{rng.range(-3, 3)};
            const ChowClass lhs = tensor_line(ring_product(chern_total(e), a), line);
            const ChowClass rhs = ring_product(
                ring_product(chern_total(tensor_by_line(e, line)),
                             chern_power(dim, line, -static_cast<long>(e.rank()))),
                tensor_line(a, line));
            if (lhs != rhs) {
                r.passed = false;
                r.counterexample =
                    "(c(E) cap a)@L != c(E@L)/c(L)^r cap (a@L) at N=" +
                    std::to_string(dim) + " L=O(" + std::to_string(line.twist) +
                    ")\nE roots  : " + to_json(e).dump() +
                    "\na        : " + to_text(a) + "\nlhs      : " + to_text(lhs) +
                    "\nrhs      : " + to_text(rhs);
                return r;
            }
        }
    flag_vacuous(r);
    return r;
}

CheckResult check_bundle_multiplicativity(const Options& o) {
    CheckResult r{"bundle.chern-multiplicative"};
    Rng rng(Rng::mix(o.seed, kBundleMultiplicative));
    for (int dim = 0; dim <= o.max_dim; ++dim)
        for (int t = 0; t < 100; ++t) {
            ++r.cases;
            const VirtualBundle e1 = random_bundle(rng, dim);
            const VirtualBundle e2 = random_bundle(rng, dim);
            std::vector<BundleRoot> joined = e1.roots();
            joined.insert(joined.end(), e2.roots().begin(), e2.roots().end());
            const ChowClass lhs = chern_total(VirtualBundle(dim, std::move(joined)));
            const ChowClass rhs = ring_product(chern_total(e1), chern_total(e2));
            if (lhs != rhs) {
                r.passed = false;
                r.counterexample = "c(E1+E2) != c(E1)c(E2) at N=" +
                                   std::to_string(dim) +
                                   "\nE1       : " + to_json(e1).dump() +
                                   "\nE2       : " + to_json(e2).dump() +
                                   "\nlhs      : " + to_text(lhs) +
                                   "\nrhs      : " + to_text(rhs);
                return r;
            }
        }
    flag_vacuous(r);
    return r;
}

std::vector<HypersurfaceModel> builtin_models(int max_dim) {
    std::vector<HypersurfaceModel> models;
    const int top = std::min(max_dim, 5);
    for (int n = 1; n <= top; ++n)
        for (long d = 1; d <= 5; ++d) {
            models.push_back(HypersurfaceModel::smooth(n, d));
            for (long count = 1; count <= 5; ++count)
                models.push_back(HypersurfaceModel::points(n, d, count));
            for (int k = 0; k <= n - 1; ++k)
                models.push_back(HypersurfaceModel::linear(n, d, k));
        }
    // one explicit-form model so that ingestion path is swept too:
    // the two-planes Segre class H^2 - 2H^3 entered as a raw vector
    if (top >= 3) {
        ChowClass segre(3);
        segre.set_coeff(2, BigInt(1));
        segre.set_coeff(3, BigInt(-2));
        models.push_back(HypersurfaceModel::with_segre(3, 2, std::move(segre)));
    }
    return models;
}

CheckResult check_milnor_le_duality(const Options& o) {
    CheckResult r{"hypersurface.milnor-le-duality"};
    OpTable ops{o.mutant};
    for (const HypersurfaceModel& x : builtin_models(o.max_dim)) {
        const ChowClass m = milnor(x);
        const LineBundle line = x.bundle();
        for (long n = -4; n <= x.ambient_dim() + 3; ++n) {
            ++r.cases;
            const ChowClass alpha = alpha_n(x, n);
            const ChowClass from_alpha = ops.involution(alpha, n, line);
            const ChowClass from_milnor = ops.involution(m, n, line);
            if (from_alpha != m) {
                r.passed = false;
                r.counterexample =
                    mismatch("M != i_n(alpha_n) for " + model_text(x) +
                                 " n=" + std::to_string(n),
                             to_text(alpha), m, from_alpha);
                return r;
            }
            if (from_milnor != alpha) {
                r.passed = false;
                r.counterexample =
                    mismatch("alpha_n != i_n(M) for " + model_text(x) +
                                 " n=" + std::to_string(n),
                             to_text(m), alpha, from_milnor);
                return r;
            }
        }
    }
    flag_vacuous(r);
    return r;
}

CheckResult check_csm_duality(const Options& o) {
    CheckResult r{"hypersurface.csm-duality"};
    OpTable ops{o.mutant};
    for (const HypersurfaceModel& x : builtin_models(o.max_dim)) {
        const ChowClass c = csm(x);
        const LineBundle line = x.bundle();
        for (long n = -4; n <= x.ambient_dim() + 3; ++n) {
            ++r.cases;
            const ChowClass partner = nu_n(x, n) + alpha_n(x, n);
            const ChowClass got = ops.involution(partner, n, line);
            if (got != c) {
                r.passed = false;
                r.counterexample =
                    mismatch("csm != i_n(nu_n + alpha_n) for " + model_text(x) +
                                 " n=" + std::to_string(n),
                             to_text(partner), c, got);
                return r;
            }
        }
    }
    flag_vacuous(r);
    return r;
}

CheckResult check_aluffi_duality(const Options& o) {
    CheckResult r{"hypersurface.aluffi-duality"};
    OpTable ops{o.mutant};
    for (const HypersurfaceModel& x : builtin_models(o.max_dim)) {
        const ChowClass ca = aluffi_class(x);
        const LineBundle line = x.bundle();
        for (long n = -4; n <= x.ambient_dim() + 3; ++n) {
            ++r.cases;
            const ChowClass got = ops.involution(alpha_n(x, n), n + 1, line);
            if (got != ca) {
                r.passed = false;
                r.counterexample =
                    mismatch("c_A != i_{n+1}(alpha_n) for " + model_text(x) +
                                 " n=" + std::to_string(n),
                             to_text(alpha_n(x, n)), ca, got);
                return r;
            }
        }
    }
    flag_vacuous(r);
    return r;
}

CheckResult check_class_consistency(const Options& o) {
    CheckResult r{"hypersurface.class-consistency"};
    for (const HypersurfaceModel& x : builtin_models(o.max_dim)) {
        ++r.cases;
        const int n = x.ambient_dim();
        const ChowClass m = milnor(x);
        std::string broken;
        if (m != csm(x) - fulton(x))
            broken = "milnor != csm - fulton";
        else if (le_class(x) != alpha_n(x, n))
            broken = "le != alpha_n(N)";
        else if (mu_class(x) != alpha_n(x, n - 1))
            broken = "mu != alpha_n(N-1)";
        else if (aluffi_class(x) != ring_product(chern_power(n, x.bundle(), 1), m))
            broken = "aluffi != c(O(X)) cap milnor";
        if (!broken.empty()) {
            r.passed = false;
            r.counterexample = broken + " for " + model_text(x);
            return r;
        }
    }
    flag_vacuous(r);
    return r;
}

CheckResult check_component_formulas(const Options& o) {
    CheckResult r{"hypersurface.component-formulas"};
    for (const HypersurfaceModel& x : builtin_models(o.max_dim)) {
        ++r.cases;
        const ChowClass m = milnor(x);
        const ChowClass le = le_class(x);
        const BigInt global_sign(x.ambient_dim() % 2 == 0 ? 1 : -1);
        std::string broken;
        if (milnor_components_from_le(x, SignConvention::Derived) != m)
            broken = "derived assembly of M from le";
        else if (le_components_from_milnor(x, SignConvention::Derived) != le)
            broken = "derived assembly of le from M";
        else if (milnor_components_from_le(x, SignConvention::Paper) != global_sign * m)
            broken = "paper-sign assembly of M from le";
        else if (le_components_from_milnor(x, SignConvention::Paper) != global_sign * le)
            broken = "paper-sign assembly of le from M";
        else if (assemble_dual_components(
                     assemble_dual_components(le, x.degree(), SignConvention::Derived),
                     x.degree(), SignConvention::Derived) != le)
            broken = "derived assembly roundtrip";
        else if (assemble_dual_components(
                     assemble_dual_components(le, x.degree(), SignConvention::Paper),
                     x.degree(), SignConvention::Paper) != le)
            broken = "paper-sign assembly roundtrip";
        if (!broken.empty()) {
            r.passed = false;
            r.counterexample = broken + " broken for " + model_text(x);
            return r;
        }
    }
    flag_vacuous(r);
    return r;
}

CheckResult check_smooth_degeneracy(const Options& o) {
    CheckResult r{"hypersurface.smooth-degeneracy"};
    const int top = std::min(o.max_dim, 5);
    for (int n = 1; n <= top; ++n)
        for (long d = 1; d <= 5; ++d) {
            ++r.cases;
            const HypersurfaceModel x = HypersurfaceModel::smooth(n, d);
            const ChowClass zero(n);
            std::string broken;
            if (milnor(x) != zero || le_class(x) != zero || mu_class(x) != zero ||
                aluffi_class(x) != zero)
                broken = "singular classes nonzero on a smooth model";
            else if (csm(x) != fulton(x))
                broken = "csm != fulton on a smooth model";
            else if (n == 2 && euler_char(x) != BigInt(3 * d - d * d))
                broken = "plane curve euler char != 3d - d^2";
            if (!broken.empty()) {
                r.passed = false;
                r.counterexample = broken + " for " + model_text(x);
                return r;
            }
        }
    flag_vacuous(r);
    return r;
}

CheckResult check_operator_realization(const Options& o) {
    CheckResult r{"correspondence.operator-realization"};
    OpTable ops{o.mutant};
    for (int dim = 1; dim <= o.max_dim; ++dim)
        for (long n = -3; n <= 3; ++n)
            for (long m = -3; m <= 3; ++m) {
                const Correspondence alpha = involutive_correspondence(dim, n, m);
                const OperatorMatrix matrix = to_matrix(alpha);
                const LineBundle line{m};
                for (int j = 0; j <= dim; ++j) {
                    ++r.cases;
                    const ChowClass basis = ChowClass::hyperplane_power(dim, j);
                    const ChowClass expected = ops.involution(basis, n, line);
                    const ChowClass pushed = pushforward(alpha, basis);
                    bool column_ok = true;
                    for (int i = 0; i <= dim; ++i)
                        if (matrix.entry(i, j) != expected.coeff(i))
                            column_ok = false;
                    if (pushed != expected || !column_ok) {
                        r.passed = false;
                        r.counterexample = mismatch(
                            "correspondence does not realize i_{n,O(m)} at N=" +
                                std::to_string(dim) + " n=" + std::to_string(n) +
                                " m=" + std::to_string(m),
                            to_text(basis), expected, pushed);
                        return r;
                    }
                }
            }
    flag_vacuous(r);
    return r;
}

CheckResult check_correspondence_involutivity(const Options& o) {
    CheckResult r{"correspondence.involutivity"};
    for (int dim = 1; dim <= o.max_dim; ++dim)
        for (long n = -3; n <= 3; ++n)
            for (long m = -3; m <= 3; ++m) {
                ++r.cases;
                const Correspondence alpha = involutive_correspondence(dim, n, m);
                const Correspondence square = compose(alpha, alpha);
                if (square != Correspondence::diagonal(dim)) {
                    r.passed = false;
                    r.counterexample =
                        "compose(alpha, alpha) != diagonal at N=" +
                        std::to_string(dim) + " n=" + std::to_string(n) +
                        " m=" + std::to_string(m) + "\nalpha    : " + to_text(alpha) +
                        "\nsquare   : " + to_text(square);
                    return r;
                }
            }
    flag_vacuous(r);
    return r;
}

CheckResult check_matrix_bijection(const Options& o) {
    CheckResult r{"correspondence.matrix-bijection"};
    Rng rng(Rng::mix(o.seed, kMatrixBijection));
    for (int dim = 1; dim <= o.max_dim; ++dim)
        for (int t = 0; t < 50; ++t) {
            ++r.cases;
            const Correspondence alpha = random_corr(rng, dim);
            if (from_matrix(to_matrix(alpha)) != alpha) {
                r.passed = false;
                r.counterexample = "from_matrix(to_matrix(alpha)) != alpha at N=" +
                                   std::to_string(dim) +
                                   "\nalpha    : " + to_text(alpha);
                return r;
            }
            const OperatorMatrix m = random_matrix(rng, dim);
            if (to_matrix(from_matrix(m)) != m) {
                r.passed = false;
                r.counterexample = "to_matrix(from_matrix(M)) != M at N=" +
                                   std::to_string(dim) +
                                   "\nM        : " + to_json(m).dump();
                return r;
            }
        }
    flag_vacuous(r);
    return r;
}

CheckResult check_functoriality(const Options& o) {
    CheckResult r{"correspondence.functoriality"};
    Rng rng(Rng::mix(o.seed, kFunctoriality));
    for (int dim = 1; dim <= o.max_dim; ++dim)
        for (int t = 0; t < 50; ++t) {
            ++r.cases;
            const Correspondence a = random_corr(rng, dim);
            const Correspondence b = random_corr(rng, dim);
            const Correspondence ab = compose(a, b);
            const ChowClass beta = random_class(rng, dim);
            std::string broken;
            if (to_matrix(ab) != to_matrix(a) * to_matrix(b))
                broken = "to_matrix(compose(a,b)) != to_matrix(a)*to_matrix(b)";
            else if (pushforward(ab, beta) != pushforward(a, pushforward(b, beta)))
                broken = "(a o b)_* != a_* o b_*";
            else if (compose(a, Correspondence::diagonal(dim)) != a ||
                     compose(Correspondence::diagonal(dim), a) != a)
                broken = "diagonal is not neutral for compose";
            if (!broken.empty()) {
                r.passed = false;
                r.counterexample = broken + " at N=" + std::to_string(dim) +
                                   "\na        : " + to_text(a) +
                                   "\nb        : " + to_text(b);
                return r;
            }
        }
    flag_vacuous(r);
    return r;
}

CheckResult check_pushforward_bilinearity(const Options& o) {
    CheckResult r{"correspondence.bilinearity"};
    Rng rng(Rng::mix(o.seed, kBilinearity));
    for (int dim = 1; dim <= o.max_dim; ++dim)
        for (int t = 0; t < 50; ++t) {
            ++r.cases;
            const Correspondence a1 = random_corr(rng, dim);
            const Correspondence a2 = random_corr(rng, dim);
            const ChowClass b1 = random_class(rng, dim);
            const ChowClass b2 = random_class(rng, dim);
            const bool corr_linear = pushforward(a1 + a2, b1) ==
                                     pushforward(a1, b1) + pushforward(a2, b1);
            const bool class_linear = pushforward(a1, b1 + b2) ==
                                      pushforward(a1, b1) + pushforward(a1, b2);
            if (!corr_linear || !class_linear) {
                r.passed = false;
                r.counterexample =
                    std::string("pushforward not linear in ") +
                    (corr_linear ? "the class argument" : "the correspondence") +
                    " at N=" + std::to_string(dim);
                return r;
            }
        }
    flag_vacuous(r);
    return r;
}

Report run(const Options& options) {
    Report report;
    report.options = options;
    report.checks = {
        check_involution_roundtrip(options),
        check_dual_involution(options),
        check_tensor_action(options),
        check_linearity(options),
        check_unit_inverse(options),
        check_bundle_dual_formula(options),
        check_bundle_tensor_formula(options),
        check_bundle_multiplicativity(options),
        check_milnor_le_duality(options),
        check_csm_duality(options),
        check_aluffi_duality(options),
        check_class_consistency(options),
        check_component_formulas(options),
        check_smooth_degeneracy(options),
        check_operator_realization(options),
        check_correspondence_involutivity(options),
        check_matrix_bijection(options),
        check_functoriality(options),
        check_pushforward_bilinearity(options),
    };
    return report;
}

std::string render_text(const Report& report) {
    std::string out = "chowcal verify: seed=" + std::to_string(report.options.seed) +
                      " max-dim=" + std::to_string(report.options.max_dim) +
                      " mutant=" + std::string(mutant_name(report.options.mutant)) +
                      "\n";
    int vacuous = 0;
    int passed = 0;
    for (const CheckResult& c : report.checks) {
        std::string line = "  " + c.name + " ";
        while (line.size() < 44)
            line += '.';
        line += c.passed ? " ok   " : " FAIL ";
        std::string cases = std::to_string(c.cases);
        while (cases.size() < 8)
            cases.insert(cases.begin(), ' ');
        line += cases + " cases";
        if (c.vacuous) {
            line += " (vacuous: no admissible instances at this max-dim)";
            ++vacuous;
        }
        out += line + "\n";
        if (!c.passed) {
            out += "    counterexample:\n";
            std::string_view rest = c.counterexample;
            while (!rest.empty()) {
                const std::size_t eol = rest.find('\n');
                out += "      " + std::string(rest.substr(0, eol)) + "\n";
                if (eol == std::string_view::npos)
                    break;
                rest.remove_prefix(eol + 1);
            }
        }
        if (c.passed)
            ++passed;
    }
    out += "result: ";
    out += report.all_passed() ? "PASS" : "FAIL";
    out += " (" + std::to_string(passed) + "/" +
           std::to_string(report.checks.size()) + " checks, " +
           std::to_string(report.total_cases()) + " cases)";
    if (vacuous > 0)
        out += " [" + std::to_string(vacuous) + " vacuous]";
    out += "\n";
    return out;
}

std::string render_json(const Report& report) {
    ojson j;
    j["seed"] = report.options.seed;
    j["max_dim"] = report.options.max_dim;
    j["mutant"] = std::string(mutant_name(report.options.mutant));
    ojson checks = ojson::array();
    for (const CheckResult& c : report.checks) {
        ojson jc;
        jc["name"] = c.name;
        jc["cases"] = c.cases;
        jc["passed"] = c.passed;
        jc["vacuous"] = c.vacuous;
        jc["counterexample"] =
            c.counterexample.empty() ? ojson(nullptr) : ojson(c.counterexample);
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    j["all_passed"] = report.all_passed();
    j["total_cases"] = report.total_cases();
    return j.dump(2) + "\n";
}

}  // namespace chowcal::verify

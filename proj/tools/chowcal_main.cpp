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

/* Command-line front end.  Sits entirely on the public C interface of
 * libchowcal; exit codes are 0 = success, 1 = an identity failed to
 * verify, 2 = bad input or bad flags.
 */

#include <chowcal.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using ojson = nlohmann::ordered_json;

[[noreturn]] void fail_cli(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(2);
}

void check(chow_status status) {
    if (status != CHOW_OK)
        fail_cli(std::string(chow_last_error()) + " [" +
                 chow_status_name(status) + "]");
}

/* Owned string coming back from the C interface. */
class ApiString {
  public:
    ~ApiString() { chow_string_free(ptr_); }
    char** out() { return &ptr_; }
    std::string str() const { return ptr_ != nullptr ? ptr_ : ""; }

  private:
    char* ptr_ = nullptr;
};

template <typename T, void (*FreeFn)(T*)>
class Handle {
  public:
    Handle() = default;
    ~Handle() { FreeFn(ptr_); }
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;

    T** out() {
        FreeFn(ptr_);
        ptr_ = nullptr;
        return &ptr_;
    }
    T* get() const { return ptr_; }

  private:
    T* ptr_ = nullptr;
};

using ClassHandle = Handle<chow_class, chow_class_free>;
using HypersurfaceHandle = Handle<chow_hypersurface, chow_hypersurface_free>;
using CorrHandle = Handle<chow_corr, chow_corr_free>;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail_cli("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        return c == '{' || c == '[';
    }
    return false;
}

std::string class_text(const chow_class* cls) {
    ApiString s;
    check(chow_class_to_text(cls, s.out()));
    return s.str();
}

ojson class_json(const chow_class* cls) {
    ApiString s;
    check(chow_class_to_json(cls, s.out()));
    return ojson::parse(s.str());
}

/* Dimension-indexed annotation for a class; the canonical form stays
 * codimension-graded, this is display only.  "k=1:1 k=0:2" lists the
 * nonzero components by dimension. */
std::string dim_annotation(const chow_class* cls) {
    const ojson coeffs = class_json(cls);
    const int ambient = chow_class_ambient(cls);
    std::string out;
    for (int i = 0; i <= ambient; ++i) {
        const ojson& c = coeffs[static_cast<std::size_t>(i)];
        const bool zero = c.is_number_integer() && c.get<long long>() == 0;
        if (zero)
            continue;
        if (!out.empty())
            out += " ";
        const std::string value =
            c.is_string() ? c.get<std::string>() : c.dump();
        out += "k=" + std::to_string(ambient - i) + ":" + value;
    }
    return out.empty() ? "0" : out;
}

/* Decimal integers render as JSON numbers when they fit, strings when
 * they do not; matches the library's own convention. */
ojson json_int(const std::string& decimal) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(decimal, &used);
        if (used == decimal.size())
            return ojson(v);
    } catch (const std::exception&) {
    }
    return ojson(decimal);
}

void parse_class_argument(const std::string& text, int ambient, ClassHandle& cls) {
    if (looks_like_json(text)) {
        check(chow_class_parse_json(text.c_str(), cls.out()));
        if (ambient >= 0 && chow_class_ambient(cls.get()) != ambient)
            fail_cli("class has ambient dimension " +
                     std::to_string(chow_class_ambient(cls.get())) +
                     ", but --ambient " + std::to_string(ambient) + " was given");
    } else {
        check(chow_class_parse_text(text.c_str(), ambient, cls.out()));
    }
}

/* A correspondence argument may be a file path, a JSON literal, or a
 * text polynomial. */
void parse_corr_argument(const std::string& spec, int ambient, CorrHandle& corr) {
    std::string content = spec;
    std::error_code ec;
    if (std::filesystem::exists(spec, ec))
        content = read_file(spec);
    if (looks_like_json(content))
        check(chow_corr_parse_json(content.c_str(), corr.out()));
    else
        check(chow_corr_parse_text(content.c_str(), ambient, corr.out()));
}

void print_class(const chow_class* cls, bool as_json) {
    if (as_json)
        std::cout << class_json(cls).dump() << "\n";
    else
        std::cout << class_text(cls) << "\n";
}

void print_corr(const chow_corr* corr, bool as_json) {
    ApiString s;
    if (as_json) {
        check(chow_corr_to_json(corr, s.out()));
        std::cout << s.str() << "\n";
    } else {
        check(chow_corr_to_text(corr, s.out()));
        std::cout << s.str() << "\n";
    }
}

int run_report(const std::string& path, bool as_json, bool paper_sign) {
    const std::string content = read_file(path);
    HypersurfaceHandle hs;
    check(chow_hypersurface_parse_json(content.c_str(), hs.out()));

    const int ambient = chow_hypersurface_ambient(hs.get());
    const long degree = chow_hypersurface_degree(hs.get());

    ApiString echo;
    check(chow_hypersurface_to_json(hs.get(), echo.out()));
    const ojson model = ojson::parse(echo.str());

    ClassHandle segre, fundamental, fulton, csm, milnor, le, mu, aluffi;
    ClassHandle milnor_from_le, le_from_milnor;
    check(chow_hypersurface_segre(hs.get(), segre.out()));
    check(chow_hypersurface_fundamental(hs.get(), fundamental.out()));
    check(chow_fulton(hs.get(), fulton.out()));
    check(chow_csm(hs.get(), csm.out()));
    check(chow_milnor(hs.get(), milnor.out()));
    check(chow_le_class(hs.get(), le.out()));
    check(chow_mu_class(hs.get(), mu.out()));
    check(chow_aluffi(hs.get(), aluffi.out()));
    check(chow_milnor_from_le(hs.get(), paper_sign ? 1 : 0, milnor_from_le.out()));
    check(chow_le_from_milnor(hs.get(), paper_sign ? 1 : 0, le_from_milnor.out()));

    ApiString euler, aluffi_integral;
    check(chow_euler(hs.get(), euler.out()));
    {
        ClassHandle aluffi_copy;
        check(chow_aluffi(hs.get(), aluffi_copy.out()));
        check(chow_degree(aluffi_copy.get(), aluffi_integral.out()));
    }

    /* Spot checks of the duality between the Milnor class and its level-n
     * partners, at n = 0, N-1 and N. */
    std::set<long> levels{0, static_cast<long>(ambient) - 1,
                          static_cast<long>(ambient)};
    std::vector<std::pair<long, bool>> duality;
    for (long n : levels) {
        ClassHandle alpha, image;
        check(chow_alpha_n(hs.get(), n, alpha.out()));
        check(chow_involution(alpha.get(), n, degree, image.out()));
        duality.emplace_back(n, chow_class_equal(image.get(), milnor.get()) == 1);
    }

    const char* convention = paper_sign ? "paper" : "derived";

    if (as_json) {
        ojson doc;
        doc["ambient"] = ambient;
        doc["degree"] = degree;
        doc["singular"] = model.at("singular");
        ojson classes;
        classes["segre"] = class_json(segre.get());
        classes["fundamental"] = class_json(fundamental.get());
        classes["fulton"] = class_json(fulton.get());
        classes["csm"] = class_json(csm.get());
        classes["milnor"] = class_json(milnor.get());
        classes["le"] = class_json(le.get());
        classes["mu"] = class_json(mu.get());
        classes["aluffi"] = class_json(aluffi.get());
        classes["milnor_from_le"] = class_json(milnor_from_le.get());
        classes["le_from_milnor"] = class_json(le_from_milnor.get());
        doc["classes"] = classes;
        doc["sign_convention"] = convention;
        doc["euler"] = json_int(euler.str());
        doc["aluffi_integral"] = json_int(aluffi_integral.str());
        ojson checks = ojson::array();
        for (const auto& [n, ok] : duality)
            checks.push_back(ojson{{"n", n}, {"ok", ok}});
        doc["duality_checks"] = checks;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "ambient          : " << ambient << "\n";
        std::cout << "degree           : " << degree << "\n";
        std::cout << "singular         : " << model.at("singular").dump() << "\n";
        std::cout << "segre            : " << class_text(segre.get()) << "\n";
        std::cout << "fundamental      : " << class_text(fundamental.get()) << "\n";
        std::cout << "fulton           : " << class_text(fulton.get()) << "\n";
        std::cout << "csm              : " << class_text(csm.get()) << "\n";
        std::cout << "milnor           : " << class_text(milnor.get()) << "\n";
        std::cout << "le               : " << class_text(le.get()) << "\n";
        std::cout << "mu               : " << class_text(mu.get()) << "\n";
        std::cout << "aluffi           : " << class_text(aluffi.get()) << "\n";
        std::cout << "milnor-dims      : " << dim_annotation(milnor.get()) << "\n";
        std::cout << "le-dims          : " << dim_annotation(le.get()) << "\n";
        std::cout << "milnor-from-le   : " << class_text(milnor_from_le.get()) << "\n";
        std::cout << "le-from-milnor   : " << class_text(le_from_milnor.get()) << "\n";
        std::cout << "sign-convention  : " << convention << "\n";
        std::cout << "euler            : " << euler.str() << "\n";
        std::cout << "aluffi-integral  : " << aluffi_integral.str() << "\n";
        for (const auto& [n, ok] : duality)
            std::cout << "duality-check n=" << n << " : " << (ok ? "ok" : "FAIL")
                      << "\n";
    }

    const bool all_ok = std::all_of(duality.begin(), duality.end(),
                                    [](const auto& p) { return p.second; });
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chowcal: exact intersection-theory calculator for P^N"};
    app.require_subcommand(1);

    /* report */
    auto* report = app.add_subcommand(
        "report", "Characteristic classes of a hypersurface (JSON file)");
    std::string report_path;
    std::string report_format = "text";
    std::string report_sign = "derived";
    report->add_option("file", report_path, "hypersurface JSON file")->required();
    report->add_option("--output-format", report_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    report->add_option("--sign-convention", report_sign,
                       "component-formula sign: derived or paper")
        ->check(CLI::IsMember({"derived", "paper"}));

    /* involve */
    auto* involve =
        app.add_subcommand("involve", "Apply the involution i_{n,O(m)} to a class");
    long involve_n = 0;
    long involve_twist = 0;
    int involve_ambient = -1;
    std::string involve_class;
    std::string involve_format = "text";
    involve->add_option("--n", involve_n, "involution level n")->required();
    involve->add_option("--twist", involve_twist, "line bundle twist m")->required();
    involve->add_option("--ambient", involve_ambient,
                        "ambient dimension N (default: inferred)");
    involve->add_option("class", involve_class, "class literal, text or JSON array")
        ->required();
    involve->add_option("--output-format", involve_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    /* correspond */
    auto* correspond =
        app.add_subcommand("correspond", "Correspondences on P^N x P^N");
    correspond->require_subcommand(1);

    auto* emit = correspond->add_subcommand(
        "emit", "Emit the involutive correspondence for (n, m)");
    int emit_ambient = 0;
    long emit_n = 0;
    long emit_twist = 0;
    bool emit_matrix = false;
    std::string emit_format = "text";
    emit->add_option("--ambient", emit_ambient, "ambient dimension N >= 1")
        ->required();
    emit->add_option("--n", emit_n, "involution level n")->required();
    emit->add_option("--twist", emit_twist, "line bundle twist m")->required();
    emit->add_flag("--matrix", emit_matrix,
                   "print the operator matrix JSON instead of the class");
    emit->add_option("--output-format", emit_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* apply = correspond->add_subcommand(
        "apply", "Apply a correspondence to a class");
    std::string apply_corr, apply_class;
    int apply_ambient = -1;
    bool apply_pullback = false;
    std::string apply_format = "text";
    apply->add_option("correspondence", apply_corr,
                      "file, JSON literal or text polynomial")
        ->required();
    apply->add_option("class", apply_class, "class literal, text or JSON array")
        ->required();
    apply->add_option("--ambient", apply_ambient,
                      "ambient dimension for text correspondences");
    apply->add_flag("--pullback", apply_pullback,
                    "apply the pullback operator instead of the pushforward");
    apply->add_option("--output-format", apply_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* comp = correspond->add_subcommand("compose",
                                            "Compose two correspondences");
    std::string comp_outer, comp_inner;
    int comp_ambient = -1;
    std::string comp_format = "text";
    comp->add_option("outer", comp_outer, "outer correspondence")->required();
    comp->add_option("inner", comp_inner, "inner correspondence")->required();
    comp->add_option("--ambient", comp_ambient,
                     "ambient dimension for text correspondences");
    comp->add_option("--output-format", comp_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    /* verify */
    auto* verify =
        app.add_subcommand("verify", "Run the identity-verification suite");
    std::uint64_t verify_seed = 0;
    int verify_max_dim = 0;
    std::string verify_format = "text";
    std::string verify_mutant = "none";
    verify->add_option("--seed", verify_seed, "RNG seed")->required();
    verify->add_option("--max-dim", verify_max_dim, "largest ambient dimension")
        ->required();
    verify->add_option("--output-format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--mutant", verify_mutant,
                       "inject a defect (self-test of the harness): none or "
                       "dual-sign");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (report->parsed())
        return run_report(report_path, report_format == "json",
                          report_sign == "paper");

    if (involve->parsed()) {
        ClassHandle cls, image;
        parse_class_argument(involve_class, involve_ambient, cls);
        check(chow_involution(cls.get(), involve_n, involve_twist, image.out()));
        print_class(image.get(), involve_format == "json");
        return 0;
    }

    if (emit->parsed()) {
        CorrHandle corr;
        check(chow_corr_involutive(emit_ambient, emit_n, emit_twist, corr.out()));
        if (emit_matrix) {
            ApiString s;
            check(chow_corr_to_matrix_json(corr.get(), s.out()));
            std::cout << s.str() << "\n";
        } else {
            print_corr(corr.get(), emit_format == "json");
        }
        return 0;
    }

    if (apply->parsed()) {
        CorrHandle corr;
        parse_corr_argument(apply_corr, apply_ambient, corr);
        ClassHandle cls, image;
        parse_class_argument(apply_class, chow_corr_ambient(corr.get()), cls);
        if (apply_pullback)
            check(chow_corr_pullback(corr.get(), cls.get(), image.out()));
        else
            check(chow_corr_pushforward(corr.get(), cls.get(), image.out()));
        print_class(image.get(), apply_format == "json");
        return 0;
    }

    if (comp->parsed()) {
        CorrHandle outer, inner, result;
        parse_corr_argument(comp_outer, comp_ambient, outer);
        parse_corr_argument(comp_inner, comp_ambient, inner);
        check(chow_corr_compose(outer.get(), inner.get(), result.out()));
        print_corr(result.get(), comp_format == "json");
        return 0;
    }

    if (verify->parsed()) {
        chow_verify_options options{};
        options.seed = verify_seed;
        options.max_dim = verify_max_dim;
        options.json_format = (verify_format == "json") ? 1 : 0;
        options.mutant = verify_mutant.c_str();
        ApiString out;
        int all_passed = 0;
        check(chow_verify_run(&options, out.out(), &all_passed));
        std::cout << out.str();
        return all_passed == 1 ? 0 : 1;
    }

    return 2;
}

#include <CLI11.hpp>

#include <qpl/json_io.hpp>
#include <qpl/normal_form.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "cli_config.hpp"
#include "selftest.hpp"

namespace {

using namespace qpl;
using cli::Config;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw BadParameter(std::string("malformed JSON: ") + e.what());
    }
}

/// Positional JSON values, or a JSON array read from stdin when absent.
std::vector<json> gather_inputs(const std::vector<std::string>& args) {
    std::vector<json> out;
    if (!args.empty()) {
        for (const std::string& a : args) out.push_back(parse_json(a));
        return out;
    }
    std::string text((std::istreambuf_iterator<char>(std::cin)),
                     std::istreambuf_iterator<char>());
    const json parsed = parse_json(text);
    if (!parsed.is_array()) throw BadParameter("stdin input must be a JSON array");
    for (const json& j : parsed) out.push_back(j);
    return out;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int cmd_mul(const Config& config, const std::vector<std::string>& args) {
    ProjClass product = ProjClass::rank_zero(0, 0);
    for (const json& j : gather_inputs(args))
        product = monoid_mul(product, proj_class_from_json(j), config.geometry);
    emit(to_json(product));
    return 0;
}

int cmd_classify(const Config& config, const std::vector<std::string>& args,
                 bool with_certificate, bool with_verify) {
    const std::vector<json> inputs = gather_inputs(args);
    if (inputs.size() != 1) throw BadParameter("classify expects exactly one spec");
    const BlockSpec spec = block_spec_from_json(inputs[0]);

    json out;
    out["class"] = to_json(classify(spec, config.geometry));
    if (with_certificate || with_verify) {
        const auto [cls, cert] = reduce(spec, config.geometry);
        out["class"] = to_json(cls);
        out["certificate"] = to_json(cert);
        if (with_verify) {
            // Library bug guard: a reduce certificate must always verify.
            out["verified"] = verify_certificate(spec, cert, cls, config.geometry);
        }
    }
    emit(out);
    return 0;
}

int cmd_kclass(const Config& config, const std::vector<std::string>& args) {
    const std::vector<json> inputs = gather_inputs(args);
    if (inputs.size() != 1) throw BadParameter("kclass expects exactly one class");
    emit(to_json(k0_of_class(proj_class_from_json(inputs[0]), config.geometry)));
    return 0;
}

int cmd_cone(const Config& config, Int a, Int b) {
    emit(json{{"a", a},
              {"b", b},
              {"geometry", geometry_name(config.geometry)},
              {"in_positive_cone", in_positive_cone(K0Class{a, b}, config.geometry)}});
    return 0;
}

int cmd_linebundle(Int k) {
    emit(to_json(line_bundle_class(k)));
    return 0;
}

int cmd_eta(const Config& config) {
    const auto [leg1, leg2] = index_eta(config.geometry, config.eta_sign_flip);
    emit(json{{"leg1", leg1}, {"leg2", leg2}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Config config;
    try {
        config = qpl::cli::load_config_from_env();
    } catch (const qpl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"Exact projection calculus for the quantum projective line and sphere"};
    app.require_subcommand(1);
    std::string geometry = geometry_name(config.geometry);
    app.add_option("--geometry", geometry, "geometry: projline or podles")
        ->check(CLI::IsMember({"projline", "podles"}));
    app.add_option("--truncation", config.truncation,
                   "representation truncation size (>= 2)");
    app.add_option("--tolerance", config.tolerance,
                   "float tolerance for truncated-representation checks");
    app.add_flag("--eta-sign-flip", config.eta_sign_flip,
                 "negate the index pair convention");

    std::vector<std::string> mul_args, classify_args, kclass_args;
    bool with_certificate = false, with_verify = false;
    Int cone_a = 0, cone_b = 0, bundle_k = 0;
    std::string level = "fast";

    CLI::App* mul = app.add_subcommand("mul", "product of projection classes");
    mul->add_option("classes", mul_args, "class JSON values (or array on stdin)");

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "canonical class of a block spec");
    classify_cmd->add_option("spec", classify_args, "spec JSON (or stdin)");
    classify_cmd->add_flag("--certificate", with_certificate,
                           "emit the reduction certificate");
    classify_cmd->add_flag("--verify", with_verify,
                           "verify the emitted certificate exactly");

    CLI::App* kclass = app.add_subcommand("kclass", "K0 class of a projection class");
    kclass->add_option("class", kclass_args, "class JSON (or stdin)");

    CLI::App* cone = app.add_subcommand("cone", "positive cone membership");
    cone->add_option("a", cone_a, "coefficient of [e11+0]")->required();
    cone->add_option("b", cone_b, "coefficient of [Itilde]")->required();

    CLI::App* bundle = app.add_subcommand("linebundle", "class of the degree-k line bundle");
    bundle->add_option("k", bundle_k, "bundle degree")->required();

    CLI::App* eta = app.add_subcommand("eta", "index pair of the circle generator");

    CLI::App* selftest = app.add_subcommand("selftest", "run the identity suite");
    selftest->add_option("--level", level, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        config.geometry = qpl::geometry_from_string(geometry);
        qpl::cli::validate(config);
        if (mul->parsed()) return cmd_mul(config, mul_args);
        if (classify_cmd->parsed())
            return cmd_classify(config, classify_args, with_certificate, with_verify);
        if (kclass->parsed()) return cmd_kclass(config, kclass_args);
        if (cone->parsed()) return cmd_cone(config, cone_a, cone_b);
        if (bundle->parsed()) return cmd_linebundle(bundle_k);
        if (eta->parsed()) return cmd_eta(config);
        if (selftest->parsed()) {
            const auto lvl = level == "full" ? qpl::cli::SelftestLevel::Full
                                             : qpl::cli::SelftestLevel::Fast;
            return qpl::cli::run_selftest(config, lvl) == 0 ? 0 : 1;
        }
        return 2;
    } catch (const qpl::BadCertificate& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const qpl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

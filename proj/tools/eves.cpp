// Command-line front end for the eves library.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eves/eves.hpp"

namespace {

enum Exit : int {
    ok = 0,
    negative = 1,
    input_error = 2,
    fully_distinguishable = 3,
    oracle_mismatch = 4,
};

struct Options {
    bool oracle = false;
    std::vector<std::string> inputs;
    std::string matrix_path;
    std::string weight;
    std::string a;
    std::string b;
    bool complex_field = false;
};

/// Thrown when an oracle pipeline disagrees with the main one.
struct OracleMismatch {
    std::string what;
};

void oracle_expect(bool agree, const std::string& what)
{
    if (!agree)
        throw OracleMismatch{what};
}

std::string render_degrees(const eves::DegreeReport& report)
{
    std::ostringstream out;
    auto degrees = [](const std::vector<long>& d) {
        std::string s = "(";
        for (std::size_t c = 0; c < d.size(); ++c)
            s += (c ? "," : "") + std::to_string(d[c]);
        return s + ")";
    };
    out << "weight: (";
    for (std::size_t c = 0; c < report.weight.size(); ++c)
        out << (c ? "," : "") << report.weight[c];
    out << ")\n";
    for (const auto& pd : report.points) {
        out << "point " << pd.name << ": degrees " << degrees(pd.degrees);
        out << " quotient " << (pd.quotient ? std::to_string(*pd.quotient) : "-") << '\n';
    }
    for (const auto& sd : report.subspaces) {
        out << "subspace " << eves::to_string(sd.span) << ": degrees " << degrees(sd.degrees);
        out << " multiplicity " << (sd.multiplicity ? std::to_string(*sd.multiplicity) : "-") << '\n';
    }
    out << "h_valid: " << (report.h_valid ? "true" : "false") << '\n';
    if (!report.h_valid)
        out << "first_failure: " << report.first_failure << '\n';
    return out.str();
}

int run_validate(const Options& opt)
{
    auto cfg = eves::io::load_configuration(opt.inputs.at(0));
    eves::Weight weight = opt.weight.empty() ? cfg.weight() : eves::io::parse_weight(opt.weight, cfg.weight().field());
    auto report = eves::validate_h(cfg, weight);
    std::cout << render_degrees(report);
    if (opt.oracle)
        oracle_expect(eves::oracle::brute_h_valid(cfg, weight) == report.h_valid, "h-configuration verdict");
    return report.h_valid ? ok : negative;
}

int run_invariant(const Options& opt)
{
    auto cfg = eves::io::load_configuration(opt.inputs.at(0));
    auto value = eves::eves_invariant(cfg);
    std::cout << "E_p = " << eves::to_string(value.point()) << '\n';
    if (opt.oracle)
        oracle_expect(eves::equivalent(value, eves::oracle::brute_invariant(cfg)), "invariant class");
    return ok;
}

int run_reconstruct(const Options& opt)
{
    auto cfg = eves::io::load_configuration(opt.inputs.at(0));
    auto rv = eves::reconstruction_vector(cfg);
    bool verdict = eves::check_corollary(cfg);
    std::cout << eves::render(rv);
    std::cout << "E_p: " << eves::to_string(eves::eves_invariant(cfg).point()) << '\n';
    std::cout << "projection_identity: " << (verdict ? "true" : "false") << '\n';
    if (opt.oracle) {
        for (std::size_t k = 0; k < rv.pairs.size(); ++k) {
            auto [i, j] = rv.pairs[k];
            auto brute = eves::oracle::brute_invariant(eves::unit_weight_expansion(eves::restrict_pair(cfg, i, j)));
            oracle_expect(eves::wps_equivalent(brute.point(), rv.values[k]), eves::pair_label(i, j));
        }
    }
    return verdict ? ok : negative;
}

int run_compare(const Options& opt)
{
    if (opt.inputs.size() != 2)
        throw eves::ParseError("compare: expected exactly two configuration files");
    auto a = eves::io::load_configuration(opt.inputs[0]);
    auto b = eves::io::load_configuration(opt.inputs[1]);
    auto report = eves::compare(a, b);
    std::cout << eves::render(report);
    if (opt.oracle) {
        bool brute = eves::equivalent(eves::oracle::brute_invariant(a), eves::oracle::brute_invariant(b));
        oracle_expect(brute == report.ep_equivalent, "ep_equivalent verdict");
        oracle_expect(eves::oracle::real_lambda_oracle(report.ep_a.point(), report.ep_b.point()) ==
                          report.ep_equivalent,
                      "weighted equivalence of the two invariants");
    }
    if (report.ep_equivalent)
        return ok;
    return report.reconstruction_equal ? negative : fully_distinguishable;
}

int run_transform(const Options& opt)
{
    if (opt.matrix_path.empty())
        throw eves::ParseError("transform: --matrix is required");
    auto cfg = eves::io::load_configuration(opt.inputs.at(0));
    auto matrix = eves::io::load_matrix(opt.matrix_path);
    auto image = eves::apply_morphism(cfg, eves::LinearMorphism{matrix});
    std::cout << eves::io::serialize_configuration(image);
    if (opt.oracle) {
        oracle_expect(eves::oracle::brute_h_valid(image, image.weight()), "image h-configuration");
        oracle_expect(eves::equivalent(eves::oracle::brute_invariant(image), eves::oracle::brute_invariant(cfg)),
                      "invariant preserved by the morphism");
    }
    return ok;
}

eves::FieldTag field_of(const Options& opt)
{
    return opt.complex_field ? eves::FieldTag::ComplexLike : eves::FieldTag::RealLike;
}

int run_wps_equiv(const Options& opt)
{
    auto weight = eves::io::parse_weight(opt.weight, field_of(opt));
    auto make = [&](const std::string& text, const std::string& flag) {
        try {
            return eves::WeightedPoint(eves::io::parse_vector(text, flag), weight);
        } catch (const eves::InvalidInput& e) {
            throw eves::ParseError(flag + ": " + e.what());
        }
    };
    auto z = make(opt.a, "--a");
    auto w = make(opt.b, "--b");
    bool verdict = eves::wps_equivalent(z, w);
    std::cout << (verdict ? "true" : "false") << '\n';
    if (opt.oracle)
        oracle_expect(eves::oracle::real_lambda_oracle(z, w) == verdict, "weighted equivalence");
    return verdict ? ok : negative;
}

int run_witness(const Options& opt)
{
    auto weight = eves::io::parse_weight(opt.weight, field_of(opt));
    auto [z, w] = eves::nonreconstructible_witness(weight);
    std::cout << "z = " << eves::to_string(z) << '\n';
    std::cout << "w = " << eves::to_string(w) << '\n';
    if (opt.oracle) {
        oracle_expect(eves::same_image(eves::product_map(z), eves::product_map(w)), "witness product map images");
        oracle_expect(!eves::oracle::real_lambda_oracle(z, w), "witness points inequivalent");
    }
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Eves invariants of colored point configurations and weighted projective equivalence"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--oracle", opt.oracle, "Recheck the result with the brute-force pipeline (exit 4 on mismatch)");

    auto* validate = app.add_subcommand("validate", "Print color degrees and the h-configuration verdict");
    validate->add_option("file", opt.inputs, "Configuration JSON")->required()->expected(1);
    validate->add_option("--weight", opt.weight, "Check against this weight instead, e.g. 1,1");

    auto* invariant = app.add_subcommand("invariant", "Print the weighted invariant E_p");
    invariant->add_option("file", opt.inputs, "Configuration JSON")->required()->expected(1);

    auto* reconstruct = app.add_subcommand("reconstruct", "Print the two-color invariants for every color pair");
    reconstruct->add_option("file", opt.inputs, "Configuration JSON")->required()->expected(1);

    auto* compare = app.add_subcommand("compare", "Compare two configurations");
    compare->add_option("files", opt.inputs, "Two configuration JSON files")->required()->expected(2);

    auto* transform = app.add_subcommand("transform", "Apply a linear map and print the image configuration");
    transform->add_option("file", opt.inputs, "Configuration JSON")->required()->expected(1);
    transform->add_option("--matrix", opt.matrix_path, "Matrix JSON (array of rows)")->required();

    auto* equiv = app.add_subcommand("wps-equiv", "Decide weighted projective equivalence of two vectors");
    equiv->add_option("--weight", opt.weight, "Weight, e.g. 2,2")->required();
    equiv->add_option("--a", opt.a, "First vector, e.g. 1,1")->required()->allow_extra_args(false);
    equiv->add_option("--b", opt.b, "Second vector, e.g. -1,-1")->required()->allow_extra_args(false);
    equiv->add_flag("--complex", opt.complex_field, "Decide over C instead of R");

    auto* witness = app.add_subcommand("witness", "Two inequivalent points with equal axis projections");
    witness->add_option("--weight", opt.weight, "All-even weight, e.g. 2,2,4")->required();
    witness->add_flag("--complex", opt.complex_field, "Use the complex field");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return input_error;
    }

    try {
        if (*validate)
            return run_validate(opt);
        if (*invariant)
            return run_invariant(opt);
        if (*reconstruct)
            return run_reconstruct(opt);
        if (*compare)
            return run_compare(opt);
        if (*transform)
            return run_transform(opt);
        if (*equiv)
            return run_wps_equiv(opt);
        if (*witness)
            return run_witness(opt);
    } catch (const OracleMismatch& e) {
        std::cerr << "oracle mismatch: " << e.what << '\n';
        return oracle_mismatch;
    } catch (const eves::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}

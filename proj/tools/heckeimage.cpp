// Command-line surface: batch verification of braid-group images inside the
// irreducible representations of the type-A Hecke algebra over a finite
// field, plus single-purpose dumps (representation matrices, invariant
// forms, classification records, exhaustive enumeration, subfield descent).
//
// Exit codes: 0 all checks pass, 2 mathematical mismatch or refusal,
// 1 invalid invocation.

#include <iostream>

#include <CLI11.hpp>

#include "heckeimage/pipeline.hpp"

using namespace heckeimage;

namespace {

struct common_flags {
    std::string field_spec;
    std::uint64_t alpha_order = 0;

    void attach(CLI::App* app) {
        app->add_option("--field", field_spec,
                        "field spec: p=<int>,k=<int>,mod=AUTO|c0,c1,...,ck")
            ->required();
        app->add_option("--alpha-order", alpha_order,
                        "multiplicative order of the defining parameter")
            ->required();
    }

    std::pair<gf::field_ctx, gf::fel> resolve() const {
        gf::field_ctx F = gf::field_ctx::parse(field_spec);
        gf::fel alpha = F.find_element_of_order(alpha_order);
        return {std::move(F), alpha};
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"braid image verification in Hecke algebra representations"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run the full verification pipeline");
    pipeline::verify_options vopts;
    common_flags vflags;
    verify->add_option("--n", vopts.n, "number of strands")->required();
    vflags.attach(verify);
    verify->add_option("--enumerate-cap", vopts.enumerate_cap, "closure size cap");
    verify->add_flag("--heavy", vopts.heavy, "run closures expected to take minutes");
    verify->add_option("--seed", vopts.seed, "seed for randomized steps");

    // rep
    auto* repc = app.add_subcommand("rep", "dump one generator matrix as CSV");
    common_flags rflags;
    int rep_n = 0, rep_r = 1;
    std::string rep_lambda;
    repc->add_option("--n", rep_n, "number of strands")->required();
    repc->add_option("--lambda", rep_lambda, "shape, e.g. 2,2")->required();
    repc->add_option("--r", rep_r, "generator index")->required();
    rflags.attach(repc);

    // forms
    auto* formsc = app.add_subcommand("forms", "invariant pairings for one shape");
    common_flags fflags;
    int forms_n = 0;
    std::string forms_lambda;
    formsc->add_option("--n", forms_n, "number of strands")->required();
    formsc->add_option("--lambda", forms_lambda, "shape")->required();
    fflags.attach(formsc);

    // classify
    auto* classc = app.add_subcommand("classify", "classification record for one shape");
    common_flags cflags;
    int class_n = 0;
    std::uint64_t class_seed = 0;
    std::string class_lambda;
    classc->add_option("--n", class_n, "number of strands")->required();
    classc->add_option("--lambda", class_lambda, "shape")->required();
    classc->add_option("--seed", class_seed, "seed for sampled words");
    cflags.attach(classc);

    // enumerate
    auto* enumc = app.add_subcommand("enumerate", "exhaustive closure of the image");
    common_flags eflags;
    int enum_n = 0;
    std::uint64_t enum_cap = 20'000'000;
    std::string enum_lambda;
    enumc->add_option("--n", enum_n, "number of strands")->required();
    enumc->add_option("--lambda", enum_lambda, "shape")->required();
    enumc->add_option("--cap", enum_cap, "visited-element cap");
    eflags.attach(enumc);

    // descend
    auto* descc = app.add_subcommand("descend", "conjugate the image into the subfield");
    common_flags dflags;
    int desc_n = 0;
    std::uint64_t desc_seed = 0;
    std::string desc_lambda;
    descc->add_option("--n", desc_n, "number of strands")->required();
    descc->add_option("--lambda", desc_lambda, "shape")->required();
    descc->add_option("--seed", desc_seed, "seed for the splitting step");
    dflags.attach(descc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // help exits cleanly, bad usage is 1
    }

    try {
        if (*verify) {
            vopts.field_spec = vflags.field_spec;
            vopts.alpha_order = vflags.alpha_order;
            auto report = pipeline::run_verify(vopts);
            std::cout << report.dump(2) << "\n";
            return pipeline::exit_code(report);
        }
        if (*repc) {
            auto [F, alpha] = rflags.resolve();
            auto lam = young::partition::parse(rep_lambda);
            if (lam.n() != rep_n) fail(errc::bad_format, "--lambda does not sum to --n");
            std::cout << pipeline::rep_csv(F, lam, alpha, rep_r);
            return 0;
        }
        if (*formsc) {
            auto [F, alpha] = fflags.resolve();
            auto lam = young::partition::parse(forms_lambda);
            if (lam.n() != forms_n) fail(errc::bad_format, "--lambda does not sum to --n");
            auto rec = pipeline::forms_record(F, lam, alpha);
            std::cout << rec.dump(2) << "\n";
            bool ok = rec["bilinear"]["equivariant"].get<bool>() &&
                      (!rec.contains("hermitian") ||
                       rec["hermitian"]["invariant"].get<bool>());
            return ok ? 0 : 2;
        }
        if (*classc) {
            auto [F, alpha] = cflags.resolve();
            auto lam = young::partition::parse(class_lambda);
            if (lam.n() != class_n) fail(errc::bad_format, "--lambda does not sum to --n");
            auto rec = pipeline::classification_record(F, lam, alpha, class_seed);
            std::cout << rec.dump(2) << "\n";
            return 0;
        }
        if (*enumc) {
            auto [F, alpha] = eflags.resolve();
            auto lam = young::partition::parse(enum_lambda);
            if (lam.n() != enum_n) fail(errc::bad_format, "--lambda does not sum to --n");
            auto rec = pipeline::enumerate_record(F, lam, alpha, enum_cap, true, &std::cerr);
            std::cout << rec.dump(2) << "\n";
            if (rec.contains("verdict")) return rec["verdict"] == "Match" ? 0 : 2;
            return rec["status"] == "Complete" ? 0 : 2;
        }
        if (*descc) {
            auto [F, alpha] = dflags.resolve();
            auto lam = young::partition::parse(desc_lambda);
            if (lam.n() != desc_n) fail(errc::bad_format, "--lambda does not sum to --n");
            auto rec = pipeline::descend_record(F, lam, alpha, desc_seed);
            std::cout << rec.dump(2) << "\n";
            return 0;
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        // malformed inputs are usage errors; mathematical failures are code 2
        switch (e.code()) {
            case errc::bad_format:
            case errc::degree_mismatch:
            case errc::not_prime:
            case errc::reducible_modulus:
            case errc::index_out_of_range:
                return 1;
            default:
                return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

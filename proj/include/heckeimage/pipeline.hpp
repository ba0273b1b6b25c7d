#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "heckeimage/classify.hpp"
#include "heckeimage/engine.hpp"
#include "heckeimage/hecke.hpp"

namespace heckeimage::pipeline {

using nlohmann::json;

struct verify_options {
    int n = 0;
    std::string field_spec;
    std::uint64_t alpha_order = 0;
    std::uint64_t enumerate_cap = 20'000'000;
    bool heavy = false;
    std::uint64_t seed = 0;
};

// Full verification report over every shape of size n: relation checks, form
// construction and equivariance, presentation relations, irreducibility,
// invariant-form solver, trace fields, predictions, and order certification
// where it fits the budget. Byte-identical output for identical options.
json run_verify(const verify_options& opts);

// Supporting records for the single-purpose commands.
std::string rep_csv(const gf::field_ctx& F, const young::partition& shape, gf::fel alpha,
                    int r);
json forms_record(const gf::field_ctx& F, const young::partition& shape, gf::fel alpha);
json classification_record(const gf::field_ctx& F, const young::partition& shape,
                           gf::fel alpha, std::uint64_t seed);
json enumerate_record(const gf::field_ctx& F, const young::partition& shape, gf::fel alpha,
                      std::uint64_t cap, bool with_timing, std::ostream* diag = nullptr);
json descend_record(const gf::field_ctx& F, const young::partition& shape, gf::fel alpha,
                    std::uint64_t seed);

// Images of the commutator-subgroup generators under the model of the shape.
std::vector<fqmat> commutator_images(const hecke::hecke_rep& rep);

// 0 when the verdict is Pass, 2 otherwise.
int exit_code(const json& report);

} // namespace heckeimage::pipeline

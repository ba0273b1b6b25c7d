#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "heckeimage/fqmat.hpp"
#include "heckeimage/young.hpp"

namespace heckeimage::classify {

using bigint = boost::multiprecision::cpp_int;

enum class family { sl, su, sp, omega_plus };
const char* family_name(family f);

struct predicted_group {
    family fam;
    int dim;                   // N
    std::uint64_t field_size;  // q for SL/SU, sqrt(q) for the descended families
    bigint order;
    bool unitary;              // which branch of the case tree produced it
    bool inferred;             // prediction extrapolated beyond the stated tree
    std::string label() const;
};

enum class symmetry { symmetric, alternating, neither };
const char* symmetry_name(symmetry s);

struct form_solution {
    bool sesquilinear;
    gf::fel scalar;                 // imposed equivariance factor c
    std::vector<fqmat> basis;       // solution-space basis, deterministic order
    std::vector<symmetry> kinds;    // per basis element
    int dim() const { return int(basis.size()); }
};

// Basis of { W : t(g) W g = c W for all g }. In characteristic 2 the
// alternating test is zero diagonal plus t(W) = W.
form_solution invariant_bilinear_space(const gf::field_ctx& F, std::span<const fqmat> gens,
                                       gf::fel c);

// Basis of { D : t(conj(g)) D g = c D }, hermitian-symmetrized so every basis
// element satisfies t(conj(D)) = D.
form_solution invariant_sesquilinear_space(const gf::field_ctx& F,
                                           std::span<const fqmat> gens, gf::fel c);

symmetry classify_symmetry(const gf::field_ctx& F, const fqmat& w);

// Witt index of a nondegenerate symmetric form, odd characteristic, computed
// by iterated isotropic-vector search and hyperbolic splitting.
int witt_index(const gf::field_ctx& F, const fqmat& w);

struct trace_budget {
    std::uint64_t products = 10000;  // closure elements inspected
    std::uint64_t samples = 1000;    // extra sampled words
};

// Degree over F_p of the field generated by traces of products of the
// generators (breadth-first, up to the budget) plus sampled extra matrices.
// A lower-bound procedure by nature; the defaults stabilize at desk scale.
std::uint32_t trace_field_degree(const gf::field_ctx& F, std::span<const fqmat> gens,
                                 const std::function<fqmat(std::uint64_t)>& sampler,
                                 trace_budget budget = {});

// Dimension of the matrix algebra spanned by products of the generators;
// equals N^2 exactly when the family acts absolutely irreducibly.
int burnside_span_dim(const gf::field_ctx& F, std::span<const fqmat> gens);

struct admissibility {
    bool ok;
    std::string reason;          // empty when ok
    std::uint64_t alpha_order;
    bool unitary;                // F_p(alpha + alpha^-1) is the index-2 subfield
};

// The hypotheses under which predictions are made: the order of alpha exceeds
// n, is not one of 2,3,4,5,6,10, and alpha generates the field over F_p.
admissibility check_admissible(const gf::field_ctx& F, gf::fel alpha, int n);

// Walks the case tree on (p, linear vs unitary, self-conjugate, nu) and
// returns the classical group containing (and, at certified scale, equal to)
// the image on this shape. Shapes must be non-hooks or the (n-1,1) hook.
predicted_group predict_group(const gf::field_ctx& F, const young::partition& shape,
                              gf::fel alpha);

bigint group_order(family f, int dim, std::uint64_t field_size);

struct descent_result {
    fqmat conjugator;          // S with S^-1 g S defined over the subfield
    std::vector<fqmat> gens;   // conjugated generators, entries conj-fixed
    fqmat subfield_form;       // nonzero bilinear form with entries conj-fixed
};

// Constructive form of the descent: generators that preserve both a bilinear
// and a hermitian form are conjugated into the index-2 subfield. P is solved
// from conj(g) P = P g (a line, by irreducibility), normalized by the norm
// equation, then split as P = B conj(B)^-1 with B = C + P conj(C) for
// randomized C; S = conj(B). The output form keeps the symmetry type of W.
descent_result hilbert90_descent(const gf::field_ctx& F, std::span<const fqmat> gens,
                                 const fqmat& w, std::uint64_t seed);

} // namespace heckeimage::classify

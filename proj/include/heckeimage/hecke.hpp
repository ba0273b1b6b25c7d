#pragma once

#include <span>
#include <vector>

#include "heckeimage/braid.hpp"
#include "heckeimage/fqmat.hpp"
#include "heckeimage/young.hpp"

namespace heckeimage::hecke {

// Irreducible matrix model of the braid generators acting on the span of the
// standard tableaux of one shape. Generator r sends a tableau T to
//   alpha T                       if r, r+1 share a row,
//   -T                            if r, r+1 share a column,
//   m T + (1+m) T_swap            otherwise,
// with m = (alpha-1) ct(r+1) / (ct(r+1) - ct(r)) and ct(v) = -alpha^content(v).
// Matrices act on coordinate columns; the column indexed by T carries the
// image of T. All mixing denominators are checked at construction.
class hecke_rep {
public:
    hecke_rep(const gf::field_ctx& F, young::partition shape, gf::fel alpha);

    const gf::field_ctx& field() const { return *F_; }
    const young::partition& shape() const { return shape_; }
    gf::fel alpha() const { return alpha_; }
    int n() const { return shape_.n(); }
    int dim() const { return int(basis_.size()); }
    const std::vector<young::std_tableau>& basis() const { return basis_; }

    const fqmat& gen(int r) const;      // r in 1..n-1
    const fqmat& gen_inv(int r) const;

    fqmat of_word(const braid::braid_word& w) const;
    std::vector<fqmat> of_words(std::span<const std::pair<std::string, braid::braid_word>>) const;

private:
    const gf::field_ctx* F_;
    young::partition shape_;
    gf::fel alpha_;
    std::vector<young::std_tableau> basis_;
    std::vector<fqmat> gens_, inv_;
};

// Multiplicity-one direct sum of the models over all shapes of size n. One
// basis vector per standard tableau, so total_dim counts the involutions;
// the squared block dimensions sum to n! (checked downstream).
struct gelfand_model {
    std::vector<hecke_rep> blocks;
    long long total_dim = 0;
    long long square_dim = 0;

    gelfand_model(const gf::field_ctx& F, int n, gf::fel alpha);
};

enum class pairing_kind { bilinear_self, bilinear_pair, hermitian };

struct pairing_spec {
    pairing_kind kind;
    fqmat gram;          // N x N (self / hermitian) or 2N x 2N on the pair
    int sign;            // bilinear: +1 symmetric, -1 alternating (shape sign)
};

// Pairing (T1|T2) = w(T1) [T2 == T1']. For self-conjugate shapes this is a
// nondegenerate form on the single block; otherwise it couples the shape with
// its transpose and the gram lives on the direct sum.
pairing_spec bilinear_pairing(const gf::field_ctx& F, const young::partition& shape,
                              gf::fel alpha);

// <T1, T2> = d(T1) [T1 == T2] with the diagonal hermitian weights; defined
// when the field carries the involution and conj(alpha) = alpha^-1.
pairing_spec hermitian_pairing(const gf::field_ctx& F, const young::partition& shape,
                               gf::fel alpha);

// Bilinear: t(S) W S == (-alpha) W for every generator matrix S.
// Hermitian: t(conj(S)) D S == D. The generator list must match the gram's
// dimension (pass the direct-sum generators for a coupled pair).
bool check_form_equivariance(const gf::field_ctx& F, std::span<const fqmat> gens,
                             const pairing_spec& spec, gf::fel alpha);

// T -> w(T) T' exchanging the two blocks of V_shape (+) V_shape'. Satisfies
// L^2 = pairing_sign(shape) Id and L S L^-1 = (-alpha) t(S)^-1 for every
// generator S of the direct-sum action.
fqmat duality_operator(const gf::field_ctx& F, const young::partition& shape,
                       gf::fel alpha);

// Compares the r-th exterior power of the (n-1)-dimensional hook model with
// the model of shape [n-r, 1^r] under the subset correspondence of bases;
// equality holds entrywise up to the factor alpha^(r-1) per generator.
bool exterior_power_compare(const gf::field_ctx& F, int n, int r, gf::fel alpha);

// r-th exterior power matrices of the given generator family.
std::vector<fqmat> exterior_power(const gf::field_ctx& F, std::span<const fqmat> gens,
                                  int r, const std::vector<std::vector<int>>& subsets,
                                  const std::vector<int>& value_to_index);

// The wedge family of the (n-1,1) model in the basis order of [n-r, 1^r],
// together with that target model.
struct hook_wedge {
    std::vector<fqmat> wedge;
    hecke_rep target;
};
hook_wedge build_hook_wedge(const gf::field_ctx& F, int n, int r, gf::fel alpha);

// Given two generator families that agree on the commutator subgroup and
// whose common restriction is absolutely irreducible, the quotient
// eta(s_i) = R2(s_i) R1(s_i)^-1 is a scalar character; returns the scalar per
// generator (a genuine character is constant since all generators are
// conjugate). Errors: NotAgreeingOnCommutators, NotIrreducible, NotScalar.
std::vector<gf::fel> character_twist(const gf::field_ctx& F, std::span<const fqmat> r1,
                                     std::span<const fqmat> r2, int n);

} // namespace heckeimage::hecke

#include "heckeimage/hecke.hpp"

#include <algorithm>
#include <map>

#include "heckeimage/classify.hpp"

namespace heckeimage::hecke {

using gf::fel;
using gf::field_ctx;
using young::partition;
using young::std_tableau;

hecke_rep::hecke_rep(const field_ctx& F, partition shape, fel alpha)
    : F_(&F), shape_(std::move(shape)), alpha_(alpha) {
    F.check(alpha);
    if (!alpha.v) fail(errc::zero_element, "alpha must be invertible");
    basis_ = young::standard_tableaux(shape_);
    std::map<std::string, int> index;
    for (std::size_t t = 0; t < basis_.size(); ++t) index[basis_[t].to_string()] = int(t);

    int n = shape_.n();
    int N = dim();
    fel minus_one = F.neg(F.one());
    for (int r = 1; r <= n - 1; ++r) {
        fqmat M(N, N);
        for (int t = 0; t < N; ++t) {
            const std_tableau& T = basis_[t];
            if (T.row_of(r) == T.row_of(r + 1)) {
                M(t, t) = alpha_;
            } else if (T.col_of(r) == T.col_of(r + 1)) {
                M(t, t) = minus_one;
            } else {
                fel c1 = F.neg(F.pow(alpha_, T.content(r)));
                fel c2 = F.neg(F.pow(alpha_, T.content(r + 1)));
                fel den = F.sub(c2, c1);
                if (!den.v)
                    fail(errc::degenerate_parameter,
                         "content denominator vanishes at shape " + shape_.to_string() +
                             ", generator " + std::to_string(r));
                fel m = F.div(F.mul(F.sub(alpha_, F.one()), c2), den);
                int s = index.at(T.swap_adjacent(r).to_string());
                M(t, t) = m;
                M(s, t) = F.add(F.one(), m);
            }
        }
        gens_.push_back(std::move(M));
    }
    inv_.reserve(gens_.size());
    for (auto& g : gens_) inv_.push_back(inverse(F, g));
}

const fqmat& hecke_rep::gen(int r) const {
    if (r < 1 || r > int(gens_.size()))
        fail(errc::index_out_of_range, "generator index " + std::to_string(r));
    return gens_[r - 1];
}

const fqmat& hecke_rep::gen_inv(int r) const {
    if (r < 1 || r > int(inv_.size()))
        fail(errc::index_out_of_range, "generator index " + std::to_string(r));
    return inv_[r - 1];
}

fqmat hecke_rep::of_word(const braid::braid_word& w) const {
    if (w.strands() != n())
        fail(errc::dimension_mismatch, "word strand count does not match the model");
    fqmat acc = fqmat::identity(dim());
    for (auto [g, e] : w.letters())
        acc = mul(*F_, acc, e == 1 ? gen(g) : gen_inv(g));
    return acc;
}

std::vector<fqmat> hecke_rep::of_words(
    std::span<const std::pair<std::string, braid::braid_word>> ws) const {
    std::vector<fqmat> out;
    out.reserve(ws.size());
    for (auto& [name, w] : ws) out.push_back(of_word(w));
    return out;
}

gelfand_model::gelfand_model(const field_ctx& F, int n, fel alpha) {
    for (auto& lam : young::partitions_of(n)) {
        blocks.emplace_back(F, lam, alpha);
        long long d = blocks.back().dim();
        total_dim += d;
        square_dim += d * d;
    }
}

namespace {

// gram block sending the basis of `from` to the basis of `to` via T -> w(T) T'
fqmat transpose_block(const field_ctx& F, const std::vector<std_tableau>& from,
                      const std::vector<std_tableau>& to) {
    std::map<std::string, int> index;
    for (std::size_t t = 0; t < to.size(); ++t) index[to[t].to_string()] = int(t);
    fqmat B(int(to.size()), int(from.size()));
    for (std::size_t t = 0; t < from.size(); ++t) {
        int sgn = from[t].w_sign();
        int u = index.at(from[t].transposed().to_string());
        B(u, int(t)) = sgn == 1 ? F.one() : F.neg(F.one());
    }
    return B;
}

} // namespace

pairing_spec bilinear_pairing(const field_ctx& F, const partition& shape, fel alpha) {
    (void)alpha;
    auto tabs = standard_tableaux(shape);
    if (shape.self_conjugate()) {
        // gram[i][j] = w(T_i) [T_j == T_i']
        fqmat W = transpose_block(F, tabs, tabs).transpose();
        return {pairing_kind::bilinear_self, std::move(W), shape.pairing_sign()};
    }
    auto tabsT = standard_tableaux(shape.transpose());
    int N = int(tabs.size());
    fqmat W(2 * N, 2 * N);
    fqmat B1 = transpose_block(F, tabs, tabsT).transpose();   // rows V, cols V'
    fqmat B2 = transpose_block(F, tabsT, tabs).transpose();   // rows V', cols V
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            W(i, N + j) = B1(i, j);
            W(N + i, j) = B2(i, j);
        }
    return {pairing_kind::bilinear_pair, std::move(W), shape.pairing_sign()};
}

pairing_spec hermitian_pairing(const field_ctx& F, const partition& shape, fel alpha) {
    if (!F.conj_defined())
        fail(errc::conj_undefined, "hermitian pairing needs an even-degree field");
    auto tabs = standard_tableaux(shape);
    fqmat D(int(tabs.size()), int(tabs.size()));
    for (std::size_t t = 0; t < tabs.size(); ++t)
        D(int(t), int(t)) = young::hermitian_weight(F, tabs[t], alpha);
    return {pairing_kind::hermitian, std::move(D), +1};
}

bool check_form_equivariance(const field_ctx& F, std::span<const fqmat> gens,
                             const pairing_spec& spec, fel alpha) {
    for (const auto& S : gens) {
        if (S.rows() != spec.gram.rows() || S.cols() != spec.gram.cols())
            fail(errc::dimension_mismatch, "generator does not match the gram matrix");
        if (spec.kind == pairing_kind::hermitian) {
            fqmat lhs = mul(F, conj(F, S).transpose(), mul(F, spec.gram, S));
            if (!(lhs == spec.gram)) return false;
        } else {
            fqmat lhs = mul(F, S.transpose(), mul(F, spec.gram, S));
            if (!(lhs == scal(F, F.neg(alpha), spec.gram))) return false;
        }
    }
    return true;
}

fqmat duality_operator(const field_ctx& F, const partition& shape, fel alpha) {
    (void)alpha;
    if (shape.self_conjugate())
        fail(errc::self_conjugate_shape,
             "duality operator exchanges two distinct blocks; shape " + shape.to_string() +
                 " is self-conjugate");
    auto tabs = standard_tableaux(shape);
    auto tabsT = standard_tableaux(shape.transpose());
    int N = int(tabs.size());
    fqmat L(2 * N, 2 * N);
    fqmat B1 = transpose_block(F, tabs, tabsT);  // image of V block inside V'
    fqmat B2 = transpose_block(F, tabsT, tabs);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            L(N + i, j) = B1(i, j);
            L(i, N + j) = B2(i, j);
        }
    // L^2 = pairing_sign * Id by w(T) w(T') = const
    fel sgn = shape.pairing_sign() == 1 ? F.one() : F.neg(F.one());
    fqmat L2 = mul(F, L, L);
    if (!(L2 == scal(F, sgn, fqmat::identity(2 * N))))
        fail(errc::degenerate, "duality operator failed its square check");
    return L;
}

std::vector<fqmat> exterior_power(const field_ctx& F, std::span<const fqmat> gens, int r,
                                  const std::vector<std::vector<int>>& subsets,
                                  const std::vector<int>& value_to_index) {
    std::vector<fqmat> out;
    int D = int(subsets.size());
    for (const auto& M : gens) {
        fqmat W(D, D);
        for (int b = 0; b < D; ++b) {
            for (int a = 0; a < D; ++a) {
                fqmat sub(r, r);
                for (int x = 0; x < r; ++x)
                    for (int y = 0; y < r; ++y)
                        sub(x, y) = M(value_to_index[subsets[a][x]],
                                      value_to_index[subsets[b][y]]);
                W(a, b) = det(F, sub);
            }
        }
        out.push_back(std::move(W));
    }
    return out;
}

hook_wedge build_hook_wedge(const field_ctx& F, int n, int r, fel alpha) {
    if (r < 1 || r > n - 2) fail(errc::index_out_of_range, "need 1 <= r <= n-2");
    hecke_rep base(F, partition({n - 1, 1}), alpha);
    std::vector<int> hook_parts{n - r};
    hook_parts.insert(hook_parts.end(), r, 1);
    hecke_rep target(F, partition(std::move(hook_parts)), alpha);

    // v_i index in the base model: the tableau with i alone in row 2
    std::vector<int> value_to_index(n + 1, -1);
    for (int t = 0; t < base.dim(); ++t)
        value_to_index[base.basis()[t].hook_subset()[0]] = t;
    // subset of each target tableau, in the target basis order
    std::vector<std::vector<int>> subsets;
    for (auto& T : target.basis()) subsets.push_back(T.hook_subset());

    std::vector<fqmat> bgens;
    for (int k = 1; k <= n - 1; ++k) bgens.push_back(base.gen(k));
    return {exterior_power(F, bgens, r, subsets, value_to_index), std::move(target)};
}

bool exterior_power_compare(const field_ctx& F, int n, int r, fel alpha) {
    auto hw = build_hook_wedge(F, n, r, alpha);
    fel fac = F.pow(alpha, r - 1);
    for (int k = 1; k <= n - 1; ++k)
        if (!(hw.wedge[k - 1] == scal(F, fac, hw.target.gen(k)))) return false;
    return true;
}

std::vector<fel> character_twist(const field_ctx& F, std::span<const fqmat> r1,
                                 std::span<const fqmat> r2, int n) {
    if (r1.size() != r2.size() || int(r1.size()) != n - 1)
        fail(errc::dimension_mismatch, "need one matrix per braid generator");
    int N = r1[0].rows();

    auto eval = [&](std::span<const fqmat> fam, const braid::braid_word& w) {
        fqmat acc = fqmat::identity(N);
        for (auto [g, e] : w.letters()) {
            const fqmat& M = fam[g - 1];
            acc = mul(F, acc, e == 1 ? M : inverse(F, M));
        }
        return acc;
    };

    auto gl = braid::gorin_lin_generators(n);
    std::vector<fqmat> commutator_images;
    for (auto& [name, w] : gl.words) {
        fqmat a = eval(r1, w), b = eval(r2, w);
        if (!(a == b))
            fail(errc::not_agreeing_on_commutators,
                 "families differ on commutator generator " + name);
        commutator_images.push_back(std::move(a));
    }
    if (classify::burnside_span_dim(F, commutator_images) != N * N)
        fail(errc::not_irreducible, "commutator restriction is not absolutely irreducible");

    std::vector<fel> eta;
    for (std::size_t i = 0; i < r1.size(); ++i) {
        fqmat Q = mul(F, r2[i], inverse(F, r1[i]));
        fel c = Q(0, 0);
        if (!(Q == scal(F, c, fqmat::identity(N))))
            fail(errc::not_scalar, "twist at generator " + std::to_string(i + 1) +
                                       " is not scalar");
        eta.push_back(c);
    }
    for (std::size_t i = 1; i < eta.size(); ++i)
        if (eta[i] != eta[0])
            fail(errc::not_scalar, "twist is not constant across generators");
    return eta;
}

} // namespace heckeimage::hecke

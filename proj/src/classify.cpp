#include "heckeimage/classify.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <set>
#include <unordered_set>

namespace heckeimage::classify {

using gf::fel;
using gf::field_ctx;
using young::partition;

const char* family_name(family f) {
    switch (f) {
        case family::sl: return "SL";
        case family::su: return "SU";
        case family::sp: return "SP";
        case family::omega_plus: return "OmegaPlus";
    }
    return "?";
}

std::string predicted_group::label() const {
    std::string core;
    switch (fam) {
        case family::sl: core = "SL"; break;
        case family::su: core = "SU"; break;
        case family::sp: core = "SP"; break;
        case family::omega_plus: core = "Omega+"; break;
    }
    return core + "_" + std::to_string(dim) + "(" + std::to_string(field_size) + ")";
}

const char* symmetry_name(symmetry s) {
    switch (s) {
        case symmetry::symmetric: return "symmetric";
        case symmetry::alternating: return "alternating";
        case symmetry::neither: return "neither";
    }
    return "?";
}

symmetry classify_symmetry(const field_ctx& F, const fqmat& w) {
    bool zero_diag = true;
    for (int i = 0; i < w.rows(); ++i)
        if (w(i, i).v) { zero_diag = false; break; }
    bool sym = w == w.transpose();
    bool skew = w == neg(F, w.transpose());
    if (F.p() == 2) {
        // symmetric and skew coincide; alternating means zero diagonal
        if (sym && zero_diag) return symmetry::alternating;
        if (sym) return symmetry::symmetric;
        return symmetry::neither;
    }
    if (skew && zero_diag) return symmetry::alternating;
    if (sym) return symmetry::symmetric;
    return symmetry::neither;
}

namespace {

form_solution solve_form_space(const field_ctx& F, std::span<const fqmat> gens, fel c,
                               bool sesquilinear) {
    if (gens.empty()) fail(errc::dimension_mismatch, "no generators given");
    int N = gens[0].rows();
    for (const auto& g : gens)
        if (g.rows() != N || g.cols() != N)
            fail(errc::dimension_mismatch, "generators must be square of equal size");
    if (sesquilinear && !F.conj_defined())
        fail(errc::conj_undefined, "sesquilinear solver needs an even-degree field");

    // unknowns W[u][v], equations per generator and position (a,b):
    //   sum_{u,v} gL[u][a] W[u][v] g[v][b] - c W[a][b] = 0
    // with gL = conj(g) in the sesquilinear case and g itself otherwise.
    std::vector<std::vector<fel>> rows;
    rows.reserve(gens.size() * std::size_t(N) * N);
    for (const auto& g : gens) {
        fqmat gl = sesquilinear ? conj(F, g) : g;
        for (int a = 0; a < N; ++a) {
            for (int b = 0; b < N; ++b) {
                std::vector<fel> row(std::size_t(N) * N, fel{0});
                for (int u = 0; u < N; ++u) {
                    fel left = gl(u, a);
                    if (!left.v) continue;
                    for (int v = 0; v < N; ++v)
                        row[std::size_t(u) * N + v] =
                            F.add(row[std::size_t(u) * N + v], F.mul(left, g(v, b)));
                }
                row[std::size_t(a) * N + b] = F.sub(row[std::size_t(a) * N + b], c);
                rows.push_back(std::move(row));
            }
        }
    }
    auto null_basis = nullspace(F, std::move(rows), N * N);

    form_solution out{sesquilinear, c, {}, {}};
    for (auto& v : null_basis) out.basis.push_back(unflatten(v, N, N));

    if (sesquilinear) {
        // replace each basis element by a nonzero hermitian representative
        std::vector<fqmat> herm;
        for (auto& d : out.basis) {
            fqmat h = add(F, d, conj(F, d).transpose());
            if (h.is_zero()) {
                // gamma d + conj(gamma) d* for any gamma not fixed by conj
                fel gamma{0};
                for (std::uint32_t v = 1; v < F.q(); ++v)
                    if (F.conj(fel{v}) != fel{v}) { gamma = fel{v}; break; }
                h = add(F, scal(F, gamma, d), scal(F, F.conj(gamma), conj(F, d).transpose()));
            }
            if (!h.is_zero()) herm.push_back(std::move(h));
        }
        out.basis = std::move(herm);
    }
    for (auto& w : out.basis) out.kinds.push_back(classify_symmetry(F, w));
    return out;
}

} // namespace

form_solution invariant_bilinear_space(const field_ctx& F, std::span<const fqmat> gens,
                                       fel c) {
    return solve_form_space(F, gens, c, false);
}

form_solution invariant_sesquilinear_space(const field_ctx& F, std::span<const fqmat> gens,
                                           fel c) {
    return solve_form_space(F, gens, c, true);
}

namespace {

fel eval_form(const field_ctx& F, const fqmat& w, const std::vector<fel>& x,
              const std::vector<fel>& y) {
    fel s{0};
    for (int i = 0; i < w.rows(); ++i) {
        if (!x[i].v) continue;
        for (int j = 0; j < w.cols(); ++j)
            s = F.add(s, F.mul(x[i], F.mul(w(i, j), y[j])));
    }
    return s;
}

bool is_square(const field_ctx& F, fel x) {
    if (!x.v) return true;
    return F.pow(x, std::int64_t((F.q() - 1) / 2)).v == 1;
}

// Gram matrix of the form restricted to the given basis vectors.
fqmat restrict_form(const field_ctx& F, const fqmat& w,
                    const std::vector<std::vector<fel>>& basis) {
    int m = int(basis.size());
    fqmat out(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) out(i, j) = eval_form(F, w, basis[i], basis[j]);
    return out;
}

// Orthogonal diagonalization over odd characteristic: returns basis vectors
// b_1..b_m with B(b_i, b_j) = 0 for i != j and B(b_i, b_i) != 0.
std::vector<std::vector<fel>> diagonalize(const field_ctx& F, const fqmat& w) {
    int m = w.rows();
    std::vector<std::vector<fel>> pool;
    for (int i = 0; i < m; ++i) {
        std::vector<fel> e(m, fel{0});
        e[i] = fel{1};
        pool.push_back(std::move(e));
    }
    std::vector<std::vector<fel>> out;
    while (!pool.empty()) {
        int pick = -1;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (eval_form(F, w, pool[i], pool[i]).v) { pick = int(i); break; }
        if (pick < 0) {
            // all isotropic: some pair must pair nontrivially, use their sum
            bool found = false;
            for (std::size_t i = 0; i < pool.size() && !found; ++i)
                for (std::size_t j = i + 1; j < pool.size() && !found; ++j)
                    if (eval_form(F, w, pool[i], pool[j]).v) {
                        for (int t = 0; t < m; ++t)
                            pool[i][t] = F.add(pool[i][t], pool[j][t]);
                        pick = int(i);
                        found = true;
                    }
            if (!found) break;  // radical reached
        }
        auto b = pool[pick];
        pool.erase(pool.begin() + pick);
        fel nb = eval_form(F, w, b, b);
        fel inb = F.inv(nb);
        std::vector<std::vector<fel>> next;
        for (auto& v : pool) {
            fel t = F.mul(eval_form(F, w, v, b), inb);
            std::vector<fel> u(m);
            for (int x = 0; x < m; ++x) u[x] = F.sub(v[x], F.mul(t, b[x]));
            bool nonzero = false;
            for (auto& e : u)
                if (e.v) { nonzero = true; break; }
            if (nonzero) next.push_back(std::move(u));
        }
        // keep next linearly independent of each other within the complement:
        // reduce later during recursion; here independence follows from the
        // pool being a basis and projection having rank m-1
        pool = std::move(next);
        out.push_back(std::move(b));
    }
    return out;
}

// A vector v != 0 with B(v,v) = 0 for a nondegenerate form of rank >= 3.
std::vector<fel> find_isotropic(const field_ctx& F, const fqmat& w) {
    int m = w.rows();
    for (int i = 0; i < m; ++i) {
        if (!w(i, i).v) {
            std::vector<fel> e(m, fel{0});
            e[i] = fel{1};
            return e;
        }
    }
    auto diag = diagonalize(F, w);
    if (int(diag.size()) < 3) fail(errc::degenerate, "isotropic search needs rank >= 3");
    fel d1 = eval_form(F, w, diag[0], diag[0]);
    fel d2 = eval_form(F, w, diag[1], diag[1]);
    fel d3 = eval_form(F, w, diag[2], diag[2]);
    // solve d1 x^2 + d2 y^2 = -d3
    for (std::uint32_t xv = 0; xv < F.q(); ++xv) {
        fel x{xv};
        fel rhs = F.sub(F.neg(d3), F.mul(d1, F.mul(x, x)));
        fel yy = F.div(rhs, d2);
        if (!is_square(F, yy)) continue;
        // extract a square root by scan (desk-scale fields)
        for (std::uint32_t yv = 0; yv < F.q(); ++yv) {
            fel y{yv};
            if (F.mul(y, y) == yy) {
                std::vector<fel> v(m, fel{0});
                for (int t = 0; t < m; ++t) {
                    v[t] = F.add(v[t], F.mul(x, diag[0][t]));
                    v[t] = F.add(v[t], F.mul(y, diag[1][t]));
                    v[t] = F.add(v[t], diag[2][t]);
                }
                return v;
            }
        }
    }
    fail(errc::degenerate, "no isotropic vector found");  // unreachable for rank >= 3
}

} // namespace

int witt_index(const field_ctx& F, const fqmat& w0) {
    if (F.p() == 2)
        fail(errc::even_characteristic, "witt index is restricted to odd characteristic");
    if (!w0.is_square()) fail(errc::dimension_mismatch, "gram matrix must be square");
    if (!(w0 == w0.transpose())) fail(errc::degenerate, "gram matrix must be symmetric");
    if (!det(F, w0).v) fail(errc::degenerate, "gram matrix must be nondegenerate");

    fqmat w = w0;
    int index = 0;
    fel two_inv = F.inv(F.from_int(2));
    while (w.rows() >= 3) {
        int m = w.rows();
        auto v = find_isotropic(F, w);
        // partner u with B(v,u) != 0
        std::vector<fel> u(m, fel{0});
        for (int i = 0; i < m; ++i) {
            std::vector<fel> e(m, fel{0});
            e[i] = fel{1};
            if (eval_form(F, w, v, e).v) { u = e; break; }
        }
        fel pv = eval_form(F, w, v, u);
        if (!pv.v) fail(errc::degenerate, "isotropic vector has no pairing partner");
        fel ipv = F.inv(pv);
        for (auto& x : u) x = F.mul(ipv, x);
        // make u isotropic: u -= (B(u,u)/2) v
        fel t = F.mul(eval_form(F, w, u, u), two_inv);
        for (int i = 0; i < m; ++i) u[i] = F.sub(u[i], F.mul(t, v[i]));
        // orthogonal complement of the hyperbolic plane (v, u)
        std::vector<std::vector<fel>> comp;
        echelon_basis indep(F);
        for (int i = 0; i < m && int(comp.size()) < m - 2; ++i) {
            std::vector<fel> e(m, fel{0});
            e[i] = fel{1};
            fel a = eval_form(F, w, e, u);  // coefficient along v
            fel b = eval_form(F, w, e, v);  // coefficient along u
            for (int x = 0; x < m; ++x) {
                e[x] = F.sub(e[x], F.mul(a, v[x]));
                e[x] = F.sub(e[x], F.mul(b, u[x]));
            }
            if (indep.insert(e)) comp.push_back(std::move(e));
        }
        if (int(comp.size()) != m - 2)
            fail(errc::degenerate, "hyperbolic complement has wrong rank");
        w = restrict_form(F, w, comp);
        ++index;
    }
    if (w.rows() == 2) {
        // isotropic iff -det is a square
        if (is_square(F, F.neg(det(F, w)))) ++index;
    }
    return index;
}

std::uint32_t trace_field_degree(const field_ctx& F, std::span<const fqmat> gens,
                                 const std::function<fqmat(std::uint64_t)>& sampler,
                                 trace_budget budget) {
    std::vector<fel> traces;
    traces.push_back(fel{0});
    traces.push_back(fel{1});
    if (!gens.empty()) {
        int N = gens[0].rows();
        auto key = [&](const fqmat& m) {
            std::string s;
            s.reserve(std::size_t(N) * N * 4);
            for (auto x : m.data()) {
                s.push_back(char(x.v & 0xff));
                s.push_back(char((x.v >> 8) & 0xff));
                s.push_back(char((x.v >> 16) & 0xff));
            }
            return s;
        };
        std::unordered_set<std::string> seen;
        std::deque<fqmat> queue;
        fqmat id = fqmat::identity(N);
        seen.insert(key(id));
        queue.push_back(id);
        std::uint64_t count = 1;
        while (!queue.empty() && count < budget.products) {
            fqmat m = std::move(queue.front());
            queue.pop_front();
            for (const auto& g : gens) {
                fqmat p = mul(F, m, g);
                if (seen.insert(key(p)).second) {
                    traces.push_back(trace(F, p));
                    ++count;
                    if (count >= budget.products) break;
                    queue.push_back(std::move(p));
                }
            }
        }
    }
    if (sampler) {
        for (std::uint64_t i = 0; i < budget.samples; ++i)
            traces.push_back(trace(F, sampler(i)));
    }
    return F.subfield_degree_of(traces);
}

int burnside_span_dim(const field_ctx& F, std::span<const fqmat> gens) {
    if (gens.empty()) return 0;
    int N = gens[0].rows();
    echelon_basis basis(F);
    std::deque<fqmat> work;
    fqmat id = fqmat::identity(N);
    basis.insert(flatten(id));
    work.push_back(id);
    while (!work.empty()) {
        fqmat m = std::move(work.front());
        work.pop_front();
        for (const auto& g : gens) {
            fqmat p = mul(F, g, m);
            auto v = flatten(p);
            if (basis.insert(v)) {
                work.push_back(std::move(p));
                if (basis.dim() == N * N) return N * N;
            }
        }
    }
    return basis.dim();
}

admissibility check_admissible(const field_ctx& F, fel alpha, int n) {
    admissibility out{true, "", 0, false};
    if (!alpha.v) {
        out.ok = false;
        out.reason = "alpha must be nonzero";
        return out;
    }
    out.alpha_order = F.element_order(alpha);
    static const std::set<std::uint64_t> excluded{2, 3, 4, 5, 6, 10};
    if (out.alpha_order <= std::uint64_t(n)) {
        out.ok = false;
        out.reason = "order of alpha must exceed n (got " +
                     std::to_string(out.alpha_order) + ")";
    } else if (excluded.count(out.alpha_order)) {
        out.ok = false;
        out.reason = "order " + std::to_string(out.alpha_order) + " is excluded";
    } else {
        std::vector<fel> a{alpha};
        if (F.subfield_degree_of(a) != F.k()) {
            out.ok = false;
            out.reason = "alpha does not generate the field over its prime subfield";
        }
    }
    if (out.ok) {
        std::vector<fel> t{F.add(alpha, F.inv(alpha))};
        std::uint32_t d = F.subfield_degree_of(t);
        if (d == F.k()) {
            out.unitary = false;
        } else if (F.k() % 2 == 0 && d == F.k() / 2) {
            out.unitary = true;
        } else {
            out.ok = false;
            out.reason = "alpha + alpha^-1 generates an unexpected subfield";
        }
    }
    return out;
}

predicted_group predict_group(const field_ctx& F, const partition& shape, fel alpha) {
    admissibility adm = check_admissible(F, alpha, shape.n());
    if (!adm.ok) fail(errc::inadmissible_parameter, adm.reason);
    int n = shape.n();
    if (shape.is_hook() && !(shape.rows() == 2 && shape.part(0) == n - 1 && shape.part(1) == 1))
        fail(errc::hook_not_lambda_zero,
             "predictions for hooks exist only for the (n-1,1) shape");

    int N = int(young::standard_tableaux(shape).size());
    bool self = shape.self_conjugate();
    std::uint64_t q = F.q();
    std::uint64_t u = 1;
    if (adm.unitary)
        for (std::uint32_t i = 0; i < F.k() / 2; ++i) u *= F.p();

    predicted_group out{};
    out.dim = N;
    out.unitary = adm.unitary;
    out.inferred = false;
    if (shape.is_hook()) {
        // the (n-1,1) factor: SL in the linear case, SU in the unitary case
        out.fam = adm.unitary ? family::su : family::sl;
        out.field_size = q;
        out.inferred = adm.unitary;  // the stated tree covers non-hooks only
    } else if (!self) {
        out.fam = adm.unitary ? family::su : family::sl;
        out.field_size = q;
    } else if (F.p() == 2 || shape.nu() == -1) {
        out.fam = family::sp;
        out.field_size = adm.unitary ? u : q;
    } else {
        out.fam = family::omega_plus;
        out.field_size = adm.unitary ? u : q;
    }
    out.order = group_order(out.fam, out.dim, out.field_size);
    return out;
}

bigint group_order(family f, int dim, std::uint64_t field_size) {
    bigint q = field_size;
    switch (f) {
        case family::sl: {
            if (dim < 1) fail(errc::unsupported_family, "SL needs dim >= 1");
            bigint order = boost::multiprecision::pow(q, dim * (dim - 1) / 2);
            for (int i = 2; i <= dim; ++i)
                order *= boost::multiprecision::pow(q, i) - 1;
            return order;
        }
        case family::su: {
            // field_size q must be a square; the formula runs over sqrt(q)
            std::uint64_t ur = std::uint64_t(std::sqrt(double(field_size)));
            while (ur * ur < field_size) ++ur;
            while (ur * ur > field_size) --ur;
            if (ur * ur != field_size)
                fail(errc::unsupported_family, "SU needs a square field size");
            bigint u = ur;
            bigint order = boost::multiprecision::pow(u, dim * (dim - 1) / 2);
            for (int i = 2; i <= dim; ++i) {
                bigint term = boost::multiprecision::pow(u, i);
                order *= (i % 2 == 0) ? bigint(term - 1) : bigint(term + 1);
            }
            return order;
        }
        case family::sp: {
            if (dim % 2 != 0) fail(errc::unsupported_family, "SP needs even dim");
            int m = dim / 2;
            bigint order = boost::multiprecision::pow(q, m * m);
            for (int i = 1; i <= m; ++i)
                order *= boost::multiprecision::pow(q, 2 * i) - 1;
            return order;
        }
        case family::omega_plus: {
            if (dim % 2 != 0) fail(errc::unsupported_family, "Omega+ needs even dim");
            if (field_size % 2 == 0)
                fail(errc::unsupported_family, "Omega+ is computed for odd q only");
            int m = dim / 2;
            bigint order = boost::multiprecision::pow(q, m * (m - 1));
            order *= boost::multiprecision::pow(q, m) - 1;
            for (int i = 1; i <= m - 1; ++i)
                order *= boost::multiprecision::pow(q, 2 * i) - 1;
            return order / 2;
        }
    }
    fail(errc::unsupported_family, "unknown family");
}

descent_result hilbert90_descent(const field_ctx& F, std::span<const fqmat> gens,
                                 const fqmat& w, std::uint64_t seed) {
    if (!F.conj_defined()) fail(errc::conj_undefined, "descent needs an even-degree field");
    if (gens.empty()) fail(errc::not_irreducible, "no generators");
    int N = gens[0].rows();
    if (burnside_span_dim(F, gens) != N * N)
        fail(errc::not_irreducible, "generators do not act absolutely irreducibly");

    // solve conj(g) P = P g for all g
    std::vector<std::vector<fel>> rows;
    for (const auto& g : gens) {
        fqmat gb = conj(F, g);
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                std::vector<fel> row(std::size_t(N) * N, fel{0});
                for (int u = 0; u < N; ++u)
                    row[std::size_t(u) * N + b] =
                        F.add(row[std::size_t(u) * N + b], gb(a, u));
                for (int v = 0; v < N; ++v)
                    row[std::size_t(a) * N + v] =
                        F.sub(row[std::size_t(a) * N + v], g(v, b));
                rows.push_back(std::move(row));
            }
    }
    auto sol = nullspace(F, std::move(rows), N * N);
    if (sol.empty())
        fail(errc::not_irreducible, "no intertwiner between the action and its conjugate");
    fqmat P = unflatten(sol[0], N, N);
    if (!det(F, P).v) fail(errc::degenerate, "intertwiner is singular");

    fqmat PbP = mul(F, conj(F, P), P);
    fel c = PbP(0, 0);
    if (!(PbP == scal(F, c, fqmat::identity(N))))
        fail(errc::not_irreducible, "conj(P) P is not scalar");
    if (F.conj(c) != c) fail(errc::degenerate, "conj(P) P scalar is not subfield-fixed");

    fel mu{0};
    for (std::uint32_t v = 1; v < F.q(); ++v) {
        fel x{v};
        if (F.mul(x, F.conj(x)) == c) { mu = x; break; }
    }
    if (!mu.v) fail(errc::norm_equation_failure, "norm equation has no solution");
    P = scal(F, F.inv(mu), P);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, F.q() - 1);
    fqmat B(N, N);
    bool ok = false;
    for (int attempt = 0; attempt < 64; ++attempt) {
        fqmat C(N, N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) C(i, j) = fel{pick(rng)};
        B = add(F, C, mul(F, P, conj(F, C)));
        if (det(F, B).v) { ok = true; break; }
    }
    if (!ok) fail(errc::max_random_retries_exceeded, "no invertible splitting found");

    fqmat S = conj(F, B);
    fqmat Sinv = inverse(F, S);
    descent_result out{S, {}, fqmat()};
    for (const auto& g : gens) {
        fqmat h = mul(F, Sinv, mul(F, g, S));
        if (!(conj(F, h) == h))
            fail(errc::degenerate, "conjugated generator is not subfield-fixed");
        out.gens.push_back(std::move(h));
    }

    fqmat ws = mul(F, S.transpose(), mul(F, w, S));
    fqmat phi = add(F, ws, conj(F, ws));
    if (phi.is_zero()) {
        fel gamma{0};
        for (std::uint32_t v = 1; v < F.q(); ++v)
            if (F.conj(fel{v}) != fel{v}) { gamma = fel{v}; break; }
        phi = add(F, scal(F, gamma, ws), scal(F, F.conj(gamma), conj(F, ws)));
    }
    if (phi.is_zero()) fail(errc::degenerate, "descended form vanished");
    if (!(conj(F, phi) == phi)) fail(errc::degenerate, "descended form not subfield-fixed");
    for (const auto& h : out.gens)
        if (!(mul(F, h.transpose(), mul(F, phi, h)) == phi))
            fail(errc::degenerate, "descended form not preserved");
    out.subfield_form = std::move(phi);
    return out;
}

} // namespace heckeimage::classify

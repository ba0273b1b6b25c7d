#include "heckeimage/gf.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace heckeimage::gf {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            std::uint32_t e = 0;
            while (n % d == 0) n /= d, ++e;
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

namespace {

// Polynomial helpers over Z_p used only while bootstrapping a context
// (irreducibility test, generator search). Coefficients low degree first.
using poly = std::vector<std::uint32_t>;

void trim(poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

poly poly_mulmod(const poly& a, const poly& b, const poly& f, std::uint32_t p) {
    std::vector<std::uint64_t> prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    }
    // reduce by monic f of degree d
    std::size_t d = f.size() - 1;
    for (std::size_t i = prod.size(); i-- > d;) {
        std::uint64_t c = prod[i] % p;
        if (!c) continue;
        prod[i] = 0;
        for (std::size_t j = 0; j < d; ++j)
            prod[i - d + j] = (prod[i - d + j] + std::uint64_t(p - 1) * c % p * f[j]) % p;
    }
    poly out(d);
    for (std::size_t i = 0; i < d && i < prod.size(); ++i) out[i] = std::uint32_t(prod[i]);
    trim(out);
    return out;
}

poly poly_powmod(poly base, std::uint64_t e, const poly& f, std::uint32_t p) {
    poly acc{1};
    while (e) {
        if (e & 1) acc = poly_mulmod(acc, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return acc;
}

poly poly_sub(poly a, const poly& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

poly poly_mod(poly a, const poly& m, std::uint32_t p) {
    trim(a);
    std::size_t d = m.size() - 1;
    std::uint32_t lead_inv = 1;
    {
        // inverse of m's leading coefficient mod p
        std::uint32_t l = m.back(), t = 1;
        for (std::uint32_t x = 1; x < p; ++x)
            if (std::uint64_t(l) * x % p == 1) { t = x; break; }
        lead_inv = t;
    }
    while (a.size() > d) {
        std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
        std::size_t shift = a.size() - 1 - d;
        for (std::size_t j = 0; j < m.size(); ++j)
            a[shift + j] = std::uint32_t((a[shift + j] + std::uint64_t(p - 1) * c % p * m[j]) % p);
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

poly poly_gcd(poly a, poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool poly_irreducible(const poly& f, std::uint32_t p) {
    std::size_t k = f.size() - 1;
    if (k == 0) return false;
    poly xr = poly_mod(poly{0, 1}, f, p);  // the class of x, reduced
    // x^(p^k) == x mod f
    poly t = xr;
    for (std::size_t i = 0; i < k; ++i) t = poly_powmod(t, p, f, p);
    if (poly_sub(t, xr, p) != poly{}) return false;
    for (auto [r, e] : factorize(k)) {
        (void)e;
        poly u = xr;
        for (std::size_t i = 0; i < k / r; ++i) u = poly_powmod(u, p, f, p);
        poly g = poly_gcd(poly_sub(u, xr, p), f, p);
        if (g.size() != 1) return false;  // gcd must be a nonzero constant
    }
    return true;
}

std::uint32_t digits_to_value(std::span<const std::uint32_t> c, std::uint32_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return std::uint32_t(v);
}

} // namespace

field_ctx field_ctx::make(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) fail(errc::not_prime, "p = " + std::to_string(p));
    if (k < 1) fail(errc::degree_mismatch, "extension degree must be >= 1");
    if (modulus.size() != k + 1 || modulus[k] != 1)
        fail(errc::degree_mismatch, "modulus must be monic of degree k");
    for (auto& c : modulus)
        if (c >= p) fail(errc::degree_mismatch, "modulus coefficient out of range");
    if (!poly_irreducible(modulus, p))
        fail(errc::reducible_modulus, "modulus is reducible over F_p");

    field_ctx F;
    F.p_ = p;
    F.k_ = k;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > (1u << 20)) fail(errc::degree_mismatch, "q exceeds the 2^20 desk-scale bound");
    }
    F.q_ = std::uint32_t(q);
    F.modulus_ = std::move(modulus);
    F.qm1_factors_ = factorize(F.q_ - 1);
    F.build_tables();
    return F;
}

field_ctx field_ctx::make_auto(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) fail(errc::not_prime, "p = " + std::to_string(p));
    if (k < 1) fail(errc::degree_mismatch, "extension degree must be >= 1");
    // scan monic degree-k moduli in increasing value of (c0..c_{k-1})
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
        poly f(k + 1, 0);
        std::uint64_t t = v;
        for (std::uint32_t i = 0; i < k; ++i) f[i] = std::uint32_t(t % p), t /= p;
        f[k] = 1;
        if (poly_irreducible(f, p)) return make(p, k, f);
    }
    fail(errc::reducible_modulus, "no irreducible modulus found");  // unreachable
}

field_ctx field_ctx::parse(std::string_view spec) {
    std::uint32_t p = 0, k = 0;
    std::string mod;
    std::string s(spec);
    // split on commas, but the mod=... part swallows the rest of the string
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t eq = s.find('=', pos);
        if (eq == std::string::npos) fail(errc::bad_format, "field spec: expected key=value");
        std::string key = s.substr(pos, eq - pos);
        if (key == "mod") {
            mod = s.substr(eq + 1);
            break;
        }
        std::size_t comma = s.find(',', eq);
        std::string val = s.substr(eq + 1, comma == std::string::npos ? std::string::npos
                                                                      : comma - eq - 1);
        std::uint32_t num = 0;
        auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), num);
        if (ec != std::errc{} || ptr != val.data() + val.size())
            fail(errc::bad_format, "field spec: bad integer '" + val + "'");
        if (key == "p") p = num;
        else if (key == "k") k = num;
        else fail(errc::bad_format, "field spec: unknown key '" + key + "'");
        if (comma == std::string::npos) { pos = s.size(); break; }
        pos = comma + 1;
    }
    if (!p || !k) fail(errc::bad_format, "field spec: p and k are required");
    if (mod.empty() || mod == "AUTO") return make_auto(p, k);
    std::vector<std::uint32_t> coeffs;
    std::size_t start = 0;
    while (start <= mod.size()) {
        std::size_t comma = mod.find(',', start);
        std::string val = mod.substr(start, comma == std::string::npos ? std::string::npos
                                                                       : comma - start);
        std::uint32_t num = 0;
        auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), num);
        if (ec != std::errc{} || ptr != val.data() + val.size())
            fail(errc::bad_format, "field spec: bad modulus coefficient '" + val + "'");
        coeffs.push_back(num);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return make(p, k, std::move(coeffs));
}

std::string field_ctx::spec_string() const {
    std::string s = "p=" + std::to_string(p_) + ",k=" + std::to_string(k_) + ",mod=";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(modulus_[i]);
    }
    return s;
}

void field_ctx::build_tables() {
    // find a generator of F_q^x: g with g^((q-1)/r) != 1 for all prime r | q-1
    const poly& f = modulus_;
    auto val_of = [&](const poly& a) {
        std::uint64_t v = 0;
        for (std::size_t i = a.size(); i-- > 0;) v = v * p_ + a[i];
        return std::uint32_t(v);
    };
    std::uint32_t g = 0;
    for (std::uint32_t cand = 2; cand < q_; ++cand) {
        poly c;
        std::uint64_t t = cand;
        while (t) c.push_back(std::uint32_t(t % p_)), t /= p_;
        bool ok = true;
        for (auto [r, e] : qm1_factors_) {
            (void)e;
            if (val_of(poly_powmod(c, (q_ - 1) / r, f, p_)) == 1) { ok = false; break; }
        }
        if (ok) { g = cand; break; }
    }
    if (!g && q_ == 2) g = 1;
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    poly gp;
    {
        std::uint64_t t = g;
        while (t) gp.push_back(std::uint32_t(t % p_)), t /= p_;
    }
    poly cur{1};
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        std::uint32_t v = val_of(cur);
        exp_[i] = v;
        log_[v] = i;
        cur = poly_mulmod(cur, gp, f, p_);
    }
    if (q_ <= add_table_limit) {
        add_.assign(std::size_t(q_) * q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a) {
            for (std::uint32_t b = a; b < q_; ++b) {
                std::uint32_t s = 0, mul = 1, x = a, y = b;
                for (std::uint32_t i = 0; i < k_; ++i) {
                    s += (x % p_ + y % p_) % p_ * mul;
                    x /= p_;
                    y /= p_;
                    mul *= p_;
                }
                add_[std::size_t(a) * q_ + b] = s;
                add_[std::size_t(b) * q_ + a] = s;
            }
        }
    }
}

fel field_ctx::from_value(std::uint32_t v) const {
    if (v >= q_) fail(errc::context_mismatch, "value out of range");
    return fel{v};
}

fel field_ctx::from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() != k_) fail(errc::degree_mismatch, "coefficient vector has wrong length");
    for (auto x : c)
        if (x >= p_) fail(errc::context_mismatch, "coefficient out of range");
    return fel{digits_to_value(c, p_)};
}

std::vector<std::uint32_t> field_ctx::coeffs(fel x) const {
    check(x);
    std::vector<std::uint32_t> c(k_);
    std::uint32_t v = x.v;
    for (std::uint32_t i = 0; i < k_; ++i) c[i] = v % p_, v /= p_;
    return c;
}

fel field_ctx::from_int(std::int64_t a) const {
    std::int64_t r = a % std::int64_t(p_);
    if (r < 0) r += p_;
    return fel{std::uint32_t(r)};
}

std::string field_ctx::to_string(fel x) const {
    auto c = coeffs(x);
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s;
}

fel field_ctx::parse_el(std::string_view sv) const {
    std::vector<std::uint32_t> c;
    std::string s(sv);
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string val = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                     : comma - start);
        std::uint32_t num = 0;
        auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), num);
        if (ec != std::errc{} || ptr != val.data() + val.size())
            fail(errc::bad_format, "bad element coefficient '" + val + "'");
        c.push_back(num);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return from_coeffs(c);
}

fel field_ctx::add(fel a, fel b) const {
    check(a);
    check(b);
    if (p_ == 2) return fel{a.v ^ b.v};
    if (!add_.empty()) return fel{add_[std::size_t(a.v) * q_ + b.v]};
    std::uint32_t s = 0, mul = 1, x = a.v, y = b.v;
    for (std::uint32_t i = 0; i < k_; ++i) {
        s += (x % p_ + y % p_) % p_ * mul;
        x /= p_;
        y /= p_;
        mul *= p_;
    }
    return fel{s};
}

fel field_ctx::neg(fel a) const {
    check(a);
    if (p_ == 2) return a;
    std::uint32_t s = 0, mul = 1, x = a.v;
    for (std::uint32_t i = 0; i < k_; ++i) {
        s += (p_ - x % p_) % p_ * mul;
        x /= p_;
        mul *= p_;
    }
    return fel{s};
}

fel field_ctx::sub(fel a, fel b) const { return add(a, neg(b)); }

fel field_ctx::mul(fel a, fel b) const {
    check(a);
    check(b);
    if (a.v == 0 || b.v == 0) return fel{0};
    std::uint64_t e = std::uint64_t(log_[a.v]) + log_[b.v];
    if (e >= q_ - 1) e -= q_ - 1;
    return fel{exp_[e]};
}

fel field_ctx::inv(fel a) const {
    check(a);
    if (a.v == 0) fail(errc::zero_element, "inverse of zero");
    return fel{exp_[(q_ - 1 - log_[a.v]) % (q_ - 1)]};
}

fel field_ctx::pow(fel a, std::int64_t e) const {
    check(a);
    if (a.v == 0) {
        if (e <= 0) fail(errc::zero_element, "0^e with e <= 0");
        return fel{0};
    }
    std::int64_t m = q_ - 1;
    std::int64_t r = (std::int64_t(log_[a.v]) * (e % m)) % m;
    if (r < 0) r += m;
    return fel{exp_[r]};
}

std::uint64_t field_ctx::element_order(fel x) const {
    check(x);
    if (x.v == 0) fail(errc::zero_element, "order of zero");
    std::uint64_t o = q_ - 1;
    for (auto [r, e] : qm1_factors_) {
        for (std::uint32_t i = 0; i < e; ++i) {
            if (pow(x, std::int64_t(o / r)).v == 1) o /= r;
            else break;
        }
    }
    return o;
}

fel field_ctx::find_element_of_order(std::uint64_t m) const {
    if (m == 0 || (q_ - 1) % m != 0)
        fail(errc::no_such_order, "no element of order " + std::to_string(m) +
                                      " in F_" + std::to_string(q_));
    for (std::uint32_t v = 1; v < q_; ++v) {
        fel x{v};
        if (pow(x, std::int64_t(m)).v == 1 && element_order(x) == m) return x;
    }
    fail(errc::no_such_order, "unreachable");
}

fel field_ctx::frobenius(fel x, std::uint32_t i) const {
    check(x);
    if (x.v == 0) return x;
    std::uint64_t e = 1, m = q_ - 1;
    for (std::uint32_t t = 0; t < i % k_; ++t) e = e * p_ % m;
    return fel{exp_[std::uint64_t(log_[x.v]) * e % m]};
}

fel field_ctx::conj(fel x) const {
    if (!conj_defined())
        fail(errc::conj_undefined, "conjugation needs even extension degree, k = " +
                                       std::to_string(k_));
    return frobenius(x, k_ / 2);
}

std::uint32_t field_ctx::subfield_degree_of(std::span<const fel> s) const {
    for (std::uint32_t d = 1; d <= k_; ++d) {
        if (k_ % d != 0) continue;
        bool ok = true;
        for (fel x : s)
            if (frobenius(x, d) != x) { ok = false; break; }
        if (ok) return d;
    }
    return k_;  // unreachable: d = k always works
}

} // namespace heckeimage::gf

namespace heckeimage {

const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::context_mismatch: return "ContextMismatch";
        case errc::zero_element: return "ZeroElement";
        case errc::no_such_order: return "NoSuchOrder";
        case errc::conj_undefined: return "ConjUndefined";
        case errc::degenerate_parameter: return "DegenerateParameter";
        case errc::not_exchangeable: return "NotExchangeable";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::self_conjugate_shape: return "SelfConjugateShape";
        case errc::not_scalar: return "NotScalar";
        case errc::not_agreeing_on_commutators: return "NotAgreeingOnCommutators";
        case errc::too_few_strands: return "TooFewStrands";
        case errc::odd_length: return "OddLength";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::even_characteristic: return "EvenCharacteristic";
        case errc::degenerate: return "Degenerate";
        case errc::inadmissible_parameter: return "InadmissibleParameter";
        case errc::hook_not_lambda_zero: return "HookNotLambdaZero";
        case errc::unsupported_family: return "UnsupportedFamily";
        case errc::not_irreducible: return "NotIrreducible";
        case errc::norm_equation_failure: return "NormEquationFailure";
        case errc::max_random_retries_exceeded: return "MaxRandomRetriesExceeded";
        case errc::singular: return "Singular";
        case errc::bad_format: return "BadFormat";
    }
    return "UnknownError";
}

} // namespace heckeimage

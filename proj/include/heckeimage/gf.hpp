#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heckeimage/error.hpp"

namespace heckeimage::gf {

// Element of F_q in canonical residue form. The wrapped value encodes the
// coefficient vector (c0,...,c_{k-1}), low degree first, as sum c_i p^i.
// Elements carry no context pointer; every operation takes the context
// explicitly and range-checks its arguments.
struct fel {
    std::uint32_t v = 0;
    friend bool operator==(fel, fel) = default;
    friend auto operator<=>(fel, fel) = default;
};

// Explicit finite field F_q = F_p[x]/(f), f monic irreducible of degree k.
// Multiplication runs on discrete log tables; q-1 is factored once at
// construction. Immutable after construction, safe to share across threads.
class field_ctx {
public:
    // modulus: coefficients c0..ck, monic of degree k, low degree first.
    static field_ctx make(std::uint32_t p, std::uint32_t k,
                          std::vector<std::uint32_t> modulus);
    // Picks the smallest monic irreducible of degree k, where moduli are
    // ordered by the value sum c_i p^i of their coefficient vector.
    static field_ctx make_auto(std::uint32_t p, std::uint32_t k);
    // "p=<int>,k=<int>,mod=AUTO" or "p=..,k=..,mod=c0,c1,...,ck"
    static field_ctx parse(std::string_view spec);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    std::string spec_string() const;

    fel zero() const { return fel{0}; }
    fel one() const { return fel{1}; }
    fel from_value(std::uint32_t v) const;
    fel from_coeffs(std::span<const std::uint32_t> c) const;
    std::vector<std::uint32_t> coeffs(fel x) const;
    fel from_int(std::int64_t a) const;  // image of an integer (prime subfield)

    // serialization "c0,c1,...,c(k-1)"
    std::string to_string(fel x) const;
    fel parse_el(std::string_view s) const;

    fel add(fel a, fel b) const;
    fel sub(fel a, fel b) const;
    fel neg(fel a) const;
    fel mul(fel a, fel b) const;
    fel inv(fel a) const;
    fel div(fel a, fel b) const { return mul(a, inv(b)); }
    // e may be negative; pow(0, e) requires e > 0
    fel pow(fel a, std::int64_t e) const;

    std::uint64_t element_order(fel x) const;
    fel find_element_of_order(std::uint64_t m) const;
    fel frobenius(fel x, std::uint32_t i) const;  // x^(p^i)
    bool conj_defined() const { return k_ % 2 == 0; }
    fel conj(fel x) const;  // x^(p^(k/2)), k even
    // smallest d | k with x^(p^d) = x for all of S, i.e. F_p(S) = F_{p^d}
    std::uint32_t subfield_degree_of(std::span<const fel> s) const;

    const std::vector<std::pair<std::uint64_t, std::uint32_t>>& qm1_factors() const {
        return qm1_factors_;
    }

    void check(fel x) const {
        if (x.v >= q_) fail(errc::context_mismatch, "element out of range for this field");
    }

private:
    field_ctx() = default;
    void build_tables();

    std::uint32_t p_ = 0, k_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;      // exp_[i] = g^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;      // log_[x] for x != 0
    std::vector<std::uint32_t> add_;      // q*q table when q <= add_table_limit
    std::vector<std::pair<std::uint64_t, std::uint32_t>> qm1_factors_;

    static constexpr std::uint32_t add_table_limit = 1024;
};

bool is_prime(std::uint64_t n);
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

} // namespace heckeimage::gf

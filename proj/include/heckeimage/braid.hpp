#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heckeimage/error.hpp"

namespace heckeimage::braid {

struct letter {
    int gen;  // 1..n-1
    int exp;  // +1 or -1
    friend bool operator==(letter, letter) = default;
};

// Word in the standard generators of the braid group on n strands. Stored as
// an explicit letter sequence; free reduction gives the canonical storage
// form. Evaluation into matrices is the only semantics needed here.
class braid_word {
public:
    explicit braid_word(int strands, std::vector<letter> letters = {});

    int strands() const { return n_; }
    const std::vector<letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    braid_word reduced() const;       // cancel adjacent inverse pairs
    braid_word inverse() const;
    braid_word concat(const braid_word& other) const;
    braid_word conjugate_by(const braid_word& x) const;  // x * this * x^-1

    int exponent_sum() const;

    // "s3 S1" reads as s3 * s1^-1
    std::string to_string() const;
    static braid_word parse(int strands, std::string_view s);

    friend bool operator==(const braid_word&, const braid_word&) = default;

private:
    int n_;
    std::vector<letter> letters_;
};

// Generating set of the commutator subgroup: p0 = s2 s1^-1, p1 = s1 s2 s1^-2,
// and for n >= 4 also b = s2 s1^-1 s3 s2^-1 and q_l = s_l s1^-1, 3 <= l <= n-1.
struct commutator_gens {
    std::vector<std::pair<std::string, braid_word>> words;  // named, fixed order

    const braid_word& named(const std::string& name) const;
};

commutator_gens gorin_lin_generators(int n);  // needs n >= 3

struct relation_report {
    std::array<bool, 8> holds;
    std::array<bool, 8> vacuous;
    bool all() const {
        for (bool b : holds)
            if (!b) return false;
        return true;
    }
};

// Checks the eight defining relations of the commutator subgroup presentation
// as matrix identities under the supplied evaluation. Relations with an empty
// index range report true and are marked vacuous.
template <class Eval>
relation_report verify_gorin_lin_relations(Eval&& eval, int n);

// The conjugation identity expressing the top generator pair q_{n-1} as a
// conjugate of q_{n-2}: q_{n-1} = (q_{n-2} q_{n-1}) q_{n-2} (q_{n-2} q_{n-1})^-1.
// This needs s1 to commute with s_{n-2}, hence n >= 5; for n = 4 the identity
// is false already in the quotient by the pure braid group.
std::pair<braid_word, braid_word> normal_closure_witness(int n);

// Deterministic sample from the kernel of the exponent sum: length/2 pairs
// s_i s_j^-1 with i, j uniform, freely reduced.
braid_word random_commutator_word(int n, int length, std::uint64_t seed);

// --- template implementation ---

template <class Eval>
relation_report verify_gorin_lin_relations(Eval&& eval, int n) {
    if (n < 4) fail(errc::too_few_strands, "relation suite needs n >= 4");
    auto gens = gorin_lin_generators(n);
    auto w = [&](const std::string& name) { return gens.named(name); };
    auto holds = [&](const braid_word& lhs, const braid_word& rhs) {
        return eval(lhs) == eval(rhs);
    };
    auto cat = [](std::initializer_list<braid_word> ws) {
        braid_word out = *ws.begin();
        bool first = true;
        for (const auto& x : ws) {
            if (first) { first = false; continue; }
            out = out.concat(x);
        }
        return out;
    };
    relation_report rep{};
    rep.holds.fill(true);
    rep.vacuous.fill(false);

    braid_word p0 = w("p0"), p1 = w("p1"), b = w("b"), q3 = w("q3");
    // (1) b = p0 q3 p0^-1
    rep.holds[0] = holds(b, cat({p0, q3, p0.inverse()}));
    // (2) p0 b p0^-1 = b^2 q3^-1 b
    rep.holds[1] = holds(cat({p0, b, p0.inverse()}), cat({b, b, q3.inverse(), b}));
    // (3) p1 q3 p1^-1 = q3^-1 b
    rep.holds[2] = holds(cat({p1, q3, p1.inverse()}), cat({q3.inverse(), b}));
    // (4) p1 b p1^-1 = (q3^-1 b)^3 q3^-2 b
    {
        braid_word u = cat({q3.inverse(), b});
        rep.holds[3] = holds(cat({p1, b, p1.inverse()}),
                             cat({u, u, u, q3.inverse(), q3.inverse(), b}));
    }
    // (5) p0 q_i = q_i p1, (6) p1 q_i = q_i p0^-1 p1, both for i >= 4
    if (n >= 5) {
        for (int i = 4; i <= n - 1; ++i) {
            braid_word qi = w("q" + std::to_string(i));
            rep.holds[4] = rep.holds[4] && holds(cat({p0, qi}), cat({qi, p1}));
            rep.holds[5] = rep.holds[5] && holds(cat({p1, qi}), cat({qi, p0.inverse(), p1}));
        }
    } else {
        rep.vacuous[4] = rep.vacuous[5] = true;
    }
    // (7) q_i q_{i+1} q_i = q_{i+1} q_i q_{i+1} for i >= 3
    if (n >= 5) {
        for (int i = 3; i + 1 <= n - 1; ++i) {
            braid_word a = w("q" + std::to_string(i)), c = w("q" + std::to_string(i + 1));
            rep.holds[6] = rep.holds[6] && holds(cat({a, c, a}), cat({c, a, c}));
        }
    } else {
        rep.vacuous[6] = true;
    }
    // (8) q_i q_j = q_j q_i for i >= 3, j > i+1
    if (n >= 6) {
        for (int i = 3; i <= n - 1; ++i)
            for (int j = i + 2; j <= n - 1; ++j) {
                braid_word a = w("q" + std::to_string(i)), c = w("q" + std::to_string(j));
                rep.holds[7] = rep.holds[7] && holds(cat({a, c}), cat({c, a}));
            }
    } else {
        rep.vacuous[7] = true;
    }
    return rep;
}

} // namespace heckeimage::braid

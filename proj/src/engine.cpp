#include "heckeimage/engine.hpp"

#include <chrono>
#include <ostream>
#include <unordered_set>
#include <vector>

namespace heckeimage::engine {

using gf::fel;
using gf::field_ctx;

namespace {

int bits_for(std::uint32_t q) {
    int b = 0;
    while ((1u << b) < q) ++b;
    return b;
}

// Open-addressing set for nonzero 64-bit keys (0 is the empty slot marker;
// the all-zero matrix is singular and never enumerated).
class u64_set {
public:
    explicit u64_set(std::size_t initial = 1u << 20) {
        cap_ = initial;
        slots_.assign(cap_, 0);
    }
    bool insert(std::uint64_t key) {
        if (2 * (size_ + 1) > cap_) grow();
        std::size_t i = probe(key);
        if (slots_[i] == key) return false;
        slots_[i] = key;
        ++size_;
        return true;
    }
    std::size_t size() const { return size_; }

private:
    std::size_t probe(std::uint64_t key) const {
        std::size_t mask = cap_ - 1;
        std::size_t i = std::size_t(key * 0x9e3779b97f4a7c15ull) & mask;
        while (slots_[i] != 0 && slots_[i] != key) i = (i + 1) & mask;
        return i;
    }
    void grow() {
        std::vector<std::uint64_t> old = std::move(slots_);
        cap_ *= 2;
        slots_.assign(cap_, 0);
        for (auto k : old)
            if (k) slots_[probe(k)] = k;
    }
    std::size_t cap_, size_ = 0;
    std::vector<std::uint64_t> slots_;
};

// Flat mul/add tables copied out of the context so the inner loop is pure
// array indexing.
struct scratch_tables {
    std::uint32_t q;
    std::vector<std::uint16_t> mul, add;
    explicit scratch_tables(const field_ctx& F) : q(F.q()) {
        mul.assign(std::size_t(q) * q, 0);
        add.assign(std::size_t(q) * q, 0);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                mul[std::size_t(a) * q + b] = std::uint16_t(F.mul(fel{a}, fel{b}).v);
                add[std::size_t(a) * q + b] = std::uint16_t(F.add(fel{a}, fel{b}).v);
            }
    }
};

} // namespace

closure_result bfs_closure(const field_ctx& F, std::span<const fqmat> gens,
                           std::uint64_t cap, std::ostream* diag) {
    auto t0 = std::chrono::steady_clock::now();
    if (gens.empty()) fail(errc::dimension_mismatch, "no generators");
    int N = gens[0].rows();
    for (const auto& g : gens) {
        if (!g.is_square() || g.rows() != N)
            fail(errc::dimension_mismatch, "generators must be square of equal size");
        if (!det(F, g).v) fail(errc::singular, "generator is singular");
    }

    const std::uint32_t q = F.q();
    const int w = bits_for(q);
    const int nn = N * N;
    const int key_bits = nn * w;

    closure_result out{};
    out.cap = cap;
    out.key_bits = key_bits;

    auto finish = [&](closure_status st, std::uint64_t count) {
        out.status = st;
        out.visited = count;
        if (st == closure_status::complete) out.order = count;
        out.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return out;
    };

    if (key_bits <= 64 && q <= 1024) {
        out.packed = true;
        scratch_tables tab(F);
        const std::uint16_t* MT = tab.mul.data();
        const std::uint16_t* AT = tab.add.data();
        const std::uint64_t mask = w == 64 ? ~0ull : ((1ull << w) - 1);

        std::vector<std::uint16_t> genflat(gens.size() * nn);
        for (std::size_t k = 0; k < gens.size(); ++k)
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    genflat[k * nn + std::size_t(i) * N + j] =
                        std::uint16_t(gens[k](i, j).v);

        auto encode = [&](const std::uint16_t* m) {
            std::uint64_t key = 0;
            for (int i = nn - 1; i >= 0; --i) key = (key << w) | m[i];
            return key;
        };
        auto decode = [&](std::uint64_t key, std::uint16_t* m) {
            for (int i = 0; i < nn; ++i) {
                m[i] = std::uint16_t(key & mask);
                key >>= w;
            }
        };

        // direct bitmap when the key space is small, hash set otherwise
        const bool bitmap_mode = key_bits <= 28;
        std::vector<std::uint64_t> bitmap;
        u64_set hset(1u << 16);
        if (bitmap_mode) bitmap.assign((std::size_t(1) << key_bits) / 64 + 1, 0);
        auto insert = [&](std::uint64_t key) {
            if (bitmap_mode) {
                std::uint64_t bit = 1ull << (key & 63);
                std::uint64_t& word = bitmap[key >> 6];
                if (word & bit) return false;
                word |= bit;
                return true;
            }
            return hset.insert(key);
        };

        std::vector<std::uint16_t> cur(nn), prod(nn);
        std::vector<std::uint16_t> idf(nn);
        for (int i = 0; i < N; ++i) idf[std::size_t(i) * N + i] = 1;
        std::uint64_t idkey = encode(idf.data());
        insert(idkey);
        std::uint64_t count = 1;

        std::vector<std::uint64_t> frontier{idkey}, next;
        while (!frontier.empty()) {
            if (diag)
                (*diag) << "visited=" << count << " frontier=" << frontier.size() << "\n";
            next.clear();
            for (std::uint64_t key : frontier) {
                decode(key, cur.data());
                for (std::size_t k = 0; k < gens.size(); ++k) {
                    const std::uint16_t* g = &genflat[k * nn];
                    for (int i = 0; i < N; ++i) {
                        for (int j = 0; j < N; ++j) {
                            std::uint32_t acc = 0;
                            for (int t = 0; t < N; ++t) {
                                std::uint32_t x = cur[std::size_t(i) * N + t];
                                std::uint32_t y = g[std::size_t(t) * N + j];
                                acc = AT[std::size_t(acc) * q + MT[std::size_t(x) * q + y]];
                            }
                            prod[std::size_t(i) * N + j] = std::uint16_t(acc);
                        }
                    }
                    std::uint64_t pkey = encode(prod.data());
                    if (insert(pkey)) {
                        ++count;
                        if (count > cap) return finish(closure_status::cap_exceeded, count);
                        next.push_back(pkey);
                    }
                }
            }
            frontier.swap(next);
        }
        return finish(closure_status::complete, count);
    }

    // generic byte-key path
    auto key_of = [&](const fqmat& m) {
        std::string s;
        s.reserve(std::size_t(nn) * 3);
        for (auto x : m.data()) {
            s.push_back(char(x.v & 0xff));
            s.push_back(char((x.v >> 8) & 0xff));
            s.push_back(char((x.v >> 16) & 0xff));
        }
        return s;
    };
    std::unordered_set<std::string> seen;
    std::vector<fqmat> frontier{fqmat::identity(N)}, next;
    seen.insert(key_of(frontier[0]));
    std::uint64_t count = 1;
    while (!frontier.empty()) {
        if (diag) (*diag) << "visited=" << count << " frontier=" << frontier.size() << "\n";
        next.clear();
        for (const auto& m : frontier) {
            for (const auto& g : gens) {
                fqmat p = mul(F, m, g);
                if (seen.insert(key_of(p)).second) {
                    ++count;
                    if (count > cap) return finish(closure_status::cap_exceeded, count);
                    next.push_back(std::move(p));
                }
            }
        }
        frontier.swap(next);
    }
    return finish(closure_status::complete, count);
}

std::uint64_t matrix_order(const field_ctx& F, const fqmat& m) {
    if (!m.is_square()) fail(errc::dimension_mismatch, "order of nonsquare matrix");
    if (!det(F, m).v) fail(errc::singular, "order of singular matrix");
    fqmat p = m;
    std::uint64_t ord = 1;
    const std::uint64_t guard = 100'000'000;
    while (!p.is_identity()) {
        p = mul(F, p, m);
        if (++ord > guard) fail(errc::degenerate, "order exceeds the iteration guard");
    }
    return ord;
}

const char* certify_name(certify_verdict v) {
    switch (v) {
        case certify_verdict::match: return "Match";
        case certify_verdict::mismatch: return "Mismatch";
        case certify_verdict::inconclusive: return "Inconclusive";
    }
    return "?";
}

certify_result certify_order(const closure_result& closure,
                             const classify::predicted_group& predicted) {
    certify_result out{certify_verdict::inconclusive, true};
    if (closure.status == closure_status::cap_exceeded) return out;
    classify::bigint got = closure.order;
    out.verdict = got == predicted.order ? certify_verdict::match : certify_verdict::mismatch;
    out.lagrange_ok = got != 0 && predicted.order % got == 0;
    return out;
}

} // namespace heckeimage::engine

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>

#include "heckeimage/classify.hpp"
#include "heckeimage/fqmat.hpp"

namespace heckeimage::engine {

enum class closure_status { complete, cap_exceeded };

struct closure_result {
    closure_status status;
    std::uint64_t order = 0;     // exact when complete
    std::uint64_t cap = 0;
    std::uint64_t visited = 0;   // elements enumerated before stopping
    int key_bits = 0;
    bool packed = false;         // 64-bit key fast path used
    double seconds = 0;
};

// Breadth-first closure of the group generated by the matrices, starting at
// the identity, right-multiplying by generators. Keys pack the canonical
// entry encodings little-endian, ceil(log2 q) bits per entry; when they do
// not fit in 64 bits a byte-vector key path takes over. Deterministic FIFO
// order. Stops with cap_exceeded once more than `cap` elements are seen.
closure_result bfs_closure(const gf::field_ctx& F, std::span<const fqmat> gens,
                           std::uint64_t cap, std::ostream* diag = nullptr);

// Multiplicative order by direct iteration.
std::uint64_t matrix_order(const gf::field_ctx& F, const fqmat& m);

enum class certify_verdict { match, mismatch, inconclusive };
const char* certify_name(certify_verdict v);

struct certify_result {
    certify_verdict verdict;
    // when complete: the enumerated order divides the predicted one, as it
    // must whenever containment in the predicted group has been established
    bool lagrange_ok = true;
};

certify_result certify_order(const closure_result& closure,
                             const classify::predicted_group& predicted);

} // namespace heckeimage::engine

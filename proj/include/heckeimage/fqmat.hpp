#pragma once

#include <span>
#include <string>
#include <vector>

#include "heckeimage/gf.hpp"

namespace heckeimage {

// Dense matrix over an explicit finite field. Entries are context-free field
// elements; all arithmetic takes the context explicitly, matching the element
// design. Desk-scale dimensions only, so everything is plain O(n^3).
class fqmat {
public:
    fqmat() = default;
    fqmat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    static fqmat identity(int n) {
        fqmat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = gf::fel{1};
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    gf::fel& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    gf::fel operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }
    std::span<const gf::fel> data() const { return a_; }

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_identity() const;
    fqmat transpose() const;

    friend bool operator==(const fqmat&, const fqmat&) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<gf::fel> a_;
};

fqmat mul(const gf::field_ctx& F, const fqmat& a, const fqmat& b);
fqmat add(const gf::field_ctx& F, const fqmat& a, const fqmat& b);
fqmat sub(const gf::field_ctx& F, const fqmat& a, const fqmat& b);
fqmat neg(const gf::field_ctx& F, const fqmat& a);
fqmat scal(const gf::field_ctx& F, gf::fel c, const fqmat& a);
fqmat conj(const gf::field_ctx& F, const fqmat& a);  // entrywise half-Frobenius
fqmat inverse(const gf::field_ctx& F, const fqmat& a);  // throws Singular
gf::fel det(const gf::field_ctx& F, fqmat a);
gf::fel trace(const gf::field_ctx& F, const fqmat& a);
fqmat direct_sum(const fqmat& a, const fqmat& b);

// Row space / null space over F_q. Rows are length-ncols coefficient vectors.
// Returns a basis of the solution space of (rows) * x = 0, deterministic
// (free columns in increasing index order).
std::vector<std::vector<gf::fel>> nullspace(const gf::field_ctx& F,
                                            std::vector<std::vector<gf::fel>> rows,
                                            int ncols);

// Incremental echelon basis for a vector space of flattened matrices;
// used for span computations.
class echelon_basis {
public:
    explicit echelon_basis(const gf::field_ctx& F) : F_(&F) {}
    // reduces v against the basis; if independent, inserts and returns true
    bool insert(std::vector<gf::fel> v);
    int dim() const { return int(rows_.size()); }
    const std::vector<gf::fel>& row(int i) const { return rows_[i].second; }

private:
    const gf::field_ctx* F_;
    std::vector<std::pair<int, std::vector<gf::fel>>> rows_;  // (pivot, vector)
};

std::vector<gf::fel> flatten(const fqmat& m);
fqmat unflatten(std::span<const gf::fel> v, int rows, int cols);

// Matrix dump used by the CLI: one header line, then row-major coefficient
// stream, k consecutive numbers per entry.
std::string dump_csv(const gf::field_ctx& F, const fqmat& m, const std::string& header);

} // namespace heckeimage

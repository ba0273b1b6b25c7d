#include "heckeimage/fqmat.hpp"

#include <algorithm>

namespace heckeimage {

using gf::fel;
using gf::field_ctx;

bool fqmat::is_zero() const {
    for (auto x : a_)
        if (x.v) return false;
    return true;
}

bool fqmat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j).v != (i == j ? 1u : 0u)) return false;
    return true;
}

fqmat fqmat::transpose() const {
    fqmat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

fqmat mul(const field_ctx& F, const fqmat& a, const fqmat& b) {
    if (a.cols() != b.rows()) fail(errc::dimension_mismatch, "matrix product");
    fqmat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int t = 0; t < a.cols(); ++t) {
            fel x = a(i, t);
            if (!x.v) continue;
            for (int j = 0; j < b.cols(); ++j)
                c(i, j) = F.add(c(i, j), F.mul(x, b(t, j)));
        }
    return c;
}

fqmat add(const field_ctx& F, const fqmat& a, const fqmat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(errc::dimension_mismatch, "matrix sum");
    fqmat c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = F.add(a(i, j), b(i, j));
    return c;
}

fqmat sub(const field_ctx& F, const fqmat& a, const fqmat& b) {
    return add(F, a, neg(F, b));
}

fqmat neg(const field_ctx& F, const fqmat& a) {
    fqmat c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = F.neg(a(i, j));
    return c;
}

fqmat scal(const field_ctx& F, fel c, const fqmat& a) {
    fqmat out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = F.mul(c, a(i, j));
    return out;
}

fqmat conj(const field_ctx& F, const fqmat& a) {
    fqmat out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = F.conj(a(i, j));
    return out;
}

fqmat inverse(const field_ctx& F, const fqmat& a) {
    if (!a.is_square()) fail(errc::dimension_mismatch, "inverse of nonsquare matrix");
    int n = a.rows();
    fqmat m = a, inv = fqmat::identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m(r, c).v) { piv = r; break; }
        if (piv < 0) fail(errc::singular, "matrix not invertible");
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
        fel ic = F.inv(m(c, c));
        for (int j = 0; j < n; ++j) {
            m(c, j) = F.mul(ic, m(c, j));
            inv(c, j) = F.mul(ic, inv(c, j));
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || !m(r, c).v) continue;
            fel f = m(r, c);
            for (int j = 0; j < n; ++j) {
                m(r, j) = F.sub(m(r, j), F.mul(f, m(c, j)));
                inv(r, j) = F.sub(inv(r, j), F.mul(f, inv(c, j)));
            }
        }
    }
    return inv;
}

fel det(const field_ctx& F, fqmat a) {
    if (!a.is_square()) fail(errc::dimension_mismatch, "determinant of nonsquare matrix");
    int n = a.rows();
    fel d{1};
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a(r, c).v) { piv = r; break; }
        if (piv < 0) return fel{0};
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
            d = F.neg(d);
        }
        d = F.mul(d, a(c, c));
        fel ic = F.inv(a(c, c));
        for (int r = c + 1; r < n; ++r) {
            if (!a(r, c).v) continue;
            fel f = F.mul(a(r, c), ic);
            for (int j = c; j < n; ++j) a(r, j) = F.sub(a(r, j), F.mul(f, a(c, j)));
        }
    }
    return d;
}

fel trace(const field_ctx& F, const fqmat& a) {
    fel t{0};
    for (int i = 0; i < a.rows(); ++i) t = F.add(t, a(i, i));
    return t;
}

fqmat direct_sum(const fqmat& a, const fqmat& b) {
    fqmat c(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
    return c;
}

std::vector<std::vector<fel>> nullspace(const field_ctx& F,
                                        std::vector<std::vector<fel>> rows, int ncols) {
    // reduced echelon rows as (pivot, coefficients)
    std::vector<std::pair<int, std::vector<fel>>> ech;
    for (auto& row : rows) {
        for (auto& [p, b] : ech) {
            if (row[p].v) {
                fel f = row[p];
                for (int j = 0; j < ncols; ++j) row[j] = F.sub(row[j], F.mul(f, b[j]));
            }
        }
        int piv = -1;
        for (int j = 0; j < ncols; ++j)
            if (row[j].v) { piv = j; break; }
        if (piv < 0) continue;
        fel iv = F.inv(row[piv]);
        for (int j = 0; j < ncols; ++j) row[j] = F.mul(iv, row[j]);
        for (auto& [p, b] : ech) {
            if (b[piv].v) {
                fel f = b[piv];
                for (int j = 0; j < ncols; ++j) b[j] = F.sub(b[j], F.mul(f, row[j]));
            }
        }
        ech.emplace_back(piv, std::move(row));
    }
    std::sort(ech.begin(), ech.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<bool> is_piv(ncols, false);
    for (auto& [p, b] : ech) is_piv[p] = true;
    std::vector<std::vector<fel>> basis;
    for (int j = 0; j < ncols; ++j) {
        if (is_piv[j]) continue;
        std::vector<fel> v(ncols, fel{0});
        v[j] = fel{1};
        for (auto& [p, b] : ech) v[p] = F.neg(b[j]);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool echelon_basis::insert(std::vector<fel> v) {
    const field_ctx& F = *F_;
    for (auto& [p, b] : rows_) {
        if (v[p].v) {
            fel f = v[p];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(f, b[j]));
        }
    }
    int piv = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j].v) { piv = int(j); break; }
    if (piv < 0) return false;
    fel iv = F.inv(v[piv]);
    for (auto& x : v) x = F.mul(iv, x);
    rows_.emplace_back(piv, std::move(v));
    return true;
}

std::vector<fel> flatten(const fqmat& m) {
    return std::vector<fel>(m.data().begin(), m.data().end());
}

fqmat unflatten(std::span<const fel> v, int rows, int cols) {
    fqmat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = v[std::size_t(i) * cols + j];
    return m;
}

std::string dump_csv(const field_ctx& F, const fqmat& m, const std::string& header) {
    std::string s = header + "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) s += ',';
            s += F.to_string(m(i, j));
        }
        s += '\n';
    }
    return s;
}

} // namespace heckeimage

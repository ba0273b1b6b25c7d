#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "heckeimage/gf.hpp"

namespace heckeimage::young {

// Integer partition with strictly positive, weakly decreasing parts.
class partition {
public:
    explicit partition(std::vector<int> parts);

    int n() const { return n_; }
    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return int(parts_.size()); }
    int part(int i) const { return i < rows() ? parts_[i] : 0; }  // 0-based

    partition transpose() const;
    bool self_conjugate() const { return *this == transpose(); }
    bool is_hook() const;
    // diagonal length b = max{ i : lambda_i >= i }
    int diagonal() const;
    // +1 if (n - b)/2 is even, -1 otherwise; meaningful when n - b is even,
    // which holds for self-conjugate shapes
    int nu() const;
    // (-1)^(number of strictly incomparable cell pairs); this is the constant
    // value of w(T) w(T') over standard tableaux T of this shape, and agrees
    // with nu() on self-conjugate shapes
    int pairing_sign() const;

    std::string to_string() const;  // "3,1"
    static partition parse(std::string_view s);

    friend bool operator==(const partition&, const partition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

std::vector<partition> partitions_of(int n);  // reverse-lexicographic order
std::vector<partition> non_hooks(int n);

// Standard tableau: cells of the shape filled by 1..n, strictly increasing
// along rows and columns. Rows and columns are 1-based.
class std_tableau {
public:
    std_tableau(partition shape, std::vector<std::pair<int, int>> pos);

    const partition& shape() const { return shape_; }
    int n() const { return shape_.n(); }
    int row_of(int v) const { return pos_[v - 1].first; }
    int col_of(int v) const { return pos_[v - 1].second; }
    int content(int v) const { return col_of(v) - row_of(v); }

    std_tableau transposed() const;
    int w_sign() const;  // (-1)^#{i<j : row(i) > row(j)}
    std_tableau swap_adjacent(int r) const;  // exchanges r and r+1
    bool exchangeable(int r) const;

    // hook shapes only: the values sitting in rows 2..; determines the tableau
    std::vector<int> hook_subset() const;

    std::string to_string() const;  // rows joined by '/', entries by ','
    static std_tableau parse(std::string_view s);

    friend bool operator==(const std_tableau&, const std_tableau&) = default;

private:
    partition shape_;
    std::vector<std::pair<int, int>> pos_;  // pos_[v-1] = (row, col) of value v
};

// All standard tableaux of the shape, ordered lexicographically by the row
// vector (row_of(1), ..., row_of(n)). This order fixes the basis of every
// representation space downstream.
std::vector<std_tableau> standard_tableaux(const partition& shape);

// Diagonal weight of the hermitian pairing. Product over pairs i < j with
// row(i) > row(j) of (a^bi - a^(bj+1)) / (a^(bi+1) - a^bj), where bi, bj are
// the contents of i and j. Requires all factors nonzero, which holds whenever
// the order of alpha exceeds n.
gf::fel hermitian_weight(const gf::field_ctx& F, const std_tableau& t, gf::fel alpha);

} // namespace heckeimage::young

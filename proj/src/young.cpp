#include "heckeimage/young.hpp"

#include <algorithm>
#include <charconv>

namespace heckeimage::young {

partition::partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) fail(errc::bad_format, "partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1])
            fail(errc::bad_format, "partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
    if (parts_.empty()) fail(errc::bad_format, "empty partition");
}

partition partition::transpose() const {
    std::vector<int> t(parts_[0]);
    for (int j = 0; j < parts_[0]; ++j)
        t[j] = int(std::count_if(parts_.begin(), parts_.end(), [&](int x) { return x > j; }));
    return partition(std::move(t));
}

bool partition::is_hook() const {
    return rows() == 1 || parts_[1] == 1;
}

int partition::diagonal() const {
    int b = 0;
    while (b < rows() && parts_[b] >= b + 1) ++b;
    return b;
}

int partition::nu() const {
    return ((n_ - diagonal()) / 2) % 2 == 0 ? 1 : -1;
}

int partition::pairing_sign() const {
    // count incomparable cell pairs: (r,c), (r',c') with r < r', c > c'
    long long count = 0;
    for (int r1 = 0; r1 < rows(); ++r1)
        for (int r2 = r1 + 1; r2 < rows(); ++r2)
            for (int c2 = 0; c2 < parts_[r2]; ++c2)
                count += std::max(0, parts_[r1] - (c2 + 1));  // cells (r1,c1), c1 > c2
    return count % 2 == 0 ? 1 : -1;
}

std::string partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

partition partition::parse(std::string_view sv) {
    std::vector<int> parts;
    std::string s(sv);
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string val = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                     : comma - start);
        int num = 0;
        auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), num);
        if (ec != std::errc{} || ptr != val.data() + val.size())
            fail(errc::bad_format, "bad partition part '" + val + "'");
        parts.push_back(num);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return partition(std::move(parts));
}

std::vector<partition> partitions_of(int n) {
    if (n < 1) fail(errc::bad_format, "partitions_of needs n >= 1");
    std::vector<partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int a = std::min(rest, maxpart); a >= 1; --a) {
            cur.push_back(a);
            self(self, rest - a, a);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<partition> non_hooks(int n) {
    std::vector<partition> out;
    for (auto& lam : partitions_of(n))
        if (!lam.is_hook()) out.push_back(lam);
    return out;
}

std_tableau::std_tableau(partition shape, std::vector<std::pair<int, int>> pos)
    : shape_(std::move(shape)), pos_(std::move(pos)) {
    if (int(pos_.size()) != shape_.n())
        fail(errc::bad_format, "tableau entry count does not match shape");
    // occupancy and standardness
    std::vector<std::vector<int>> grid(shape_.rows());
    for (int i = 0; i < shape_.rows(); ++i) grid[i].assign(shape_.part(i), 0);
    for (int v = 1; v <= shape_.n(); ++v) {
        auto [r, c] = pos_[v - 1];
        if (r < 1 || r > shape_.rows() || c < 1 || c > shape_.part(r - 1))
            fail(errc::bad_format, "tableau cell outside shape");
        if (grid[r - 1][c - 1]) fail(errc::bad_format, "tableau cell occupied twice");
        grid[r - 1][c - 1] = v;
    }
    for (int i = 0; i < shape_.rows(); ++i)
        for (int j = 0; j < shape_.part(i); ++j) {
            if (j && grid[i][j] < grid[i][j - 1])
                fail(errc::bad_format, "tableau rows must increase");
            if (i && j < shape_.part(i - 1) && grid[i][j] < grid[i - 1][j])
                fail(errc::bad_format, "tableau columns must increase");
        }
}

std_tableau std_tableau::transposed() const {
    std::vector<std::pair<int, int>> pos(pos_.size());
    for (std::size_t i = 0; i < pos_.size(); ++i)
        pos[i] = {pos_[i].second, pos_[i].first};
    return std_tableau(shape_.transpose(), std::move(pos));
}

int std_tableau::w_sign() const {
    int inv = 0;
    for (std::size_t i = 0; i < pos_.size(); ++i)
        for (std::size_t j = i + 1; j < pos_.size(); ++j)
            if (pos_[i].first > pos_[j].first) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

bool std_tableau::exchangeable(int r) const {
    if (r < 1 || r + 1 > n()) return false;
    return pos_[r - 1].first != pos_[r].first && pos_[r - 1].second != pos_[r].second;
}

std_tableau std_tableau::swap_adjacent(int r) const {
    if (!exchangeable(r))
        fail(errc::not_exchangeable,
             "values " + std::to_string(r) + "," + std::to_string(r + 1) +
                 " share a row or column");
    auto pos = pos_;
    std::swap(pos[r - 1], pos[r]);
    return std_tableau(shape_, std::move(pos));
}

std::vector<int> std_tableau::hook_subset() const {
    if (!shape_.is_hook()) fail(errc::bad_format, "hook_subset on non-hook shape");
    std::vector<int> out;
    for (int v = 1; v <= n(); ++v)
        if (row_of(v) >= 2) out.push_back(v);
    return out;
}

std::string std_tableau::to_string() const {
    std::vector<std::vector<int>> grid(shape_.rows());
    for (int i = 0; i < shape_.rows(); ++i) grid[i].assign(shape_.part(i), 0);
    for (int v = 1; v <= n(); ++v) grid[row_of(v) - 1][col_of(v) - 1] = v;
    std::string s;
    for (int i = 0; i < shape_.rows(); ++i) {
        if (i) s += '/';
        for (int j = 0; j < shape_.part(i); ++j) {
            if (j) s += ',';
            s += std::to_string(grid[i][j]);
        }
    }
    return s;
}

std_tableau std_tableau::parse(std::string_view sv) {
    std::string s(sv);
    std::vector<std::vector<int>> grid;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t slash = s.find('/', start);
        std::string rowstr = s.substr(start, slash == std::string::npos ? std::string::npos
                                                                        : slash - start);
        std::vector<int> row;
        std::size_t p = 0;
        while (p <= rowstr.size()) {
            std::size_t comma = rowstr.find(',', p);
            std::string val = rowstr.substr(p, comma == std::string::npos ? std::string::npos
                                                                          : comma - p);
            int num = 0;
            auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), num);
            if (ec != std::errc{} || ptr != val.data() + val.size())
                fail(errc::bad_format, "bad tableau entry '" + val + "'");
            row.push_back(num);
            if (comma == std::string::npos) break;
            p = comma + 1;
        }
        grid.push_back(std::move(row));
        if (slash == std::string::npos) break;
        start = slash + 1;
    }
    std::vector<int> parts;
    int n = 0;
    for (auto& row : grid) parts.push_back(int(row.size())), n += int(row.size());
    std::vector<std::pair<int, int>> pos(n, {0, 0});
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j < grid[i].size(); ++j) {
            int v = grid[i][j];
            if (v < 1 || v > n) fail(errc::bad_format, "tableau entries must be 1..n");
            pos[v - 1] = {int(i) + 1, int(j) + 1};
        }
    return std_tableau(partition(std::move(parts)), std::move(pos));
}

std::vector<std_tableau> standard_tableaux(const partition& shape) {
    std::vector<std_tableau> out;
    int rows = shape.rows();
    std::vector<int> lens(rows, 0);
    std::vector<std::pair<int, int>> pos(shape.n());
    auto rec = [&](auto&& self, int v) -> void {
        if (v > shape.n()) {
            out.emplace_back(shape, pos);
            return;
        }
        for (int i = 0; i < rows; ++i) {
            if (lens[i] < shape.part(i) && (i == 0 || lens[i - 1] > lens[i])) {
                pos[v - 1] = {i + 1, lens[i] + 1};
                ++lens[i];
                self(self, v + 1);
                --lens[i];
            }
        }
    };
    rec(rec, 1);
    return out;
}

gf::fel hermitian_weight(const gf::field_ctx& F, const std_tableau& t, gf::fel alpha) {
    int n = t.n();
    gf::fel d{1};
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (t.row_of(i) <= t.row_of(j)) continue;
            std::int64_t bi = t.content(i), bj = t.content(j);
            gf::fel num = F.sub(F.pow(alpha, bi), F.pow(alpha, bj + 1));
            gf::fel den = F.sub(F.pow(alpha, bi + 1), F.pow(alpha, bj));
            if (!num.v || !den.v)
                fail(errc::degenerate_parameter,
                     "hermitian weight factor vanishes; order of alpha too small");
            d = F.mul(d, F.div(num, den));
        }
    }
    return d;
}

} // namespace heckeimage::young

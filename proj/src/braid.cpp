#include "heckeimage/braid.hpp"

#include <cctype>
#include <random>

namespace heckeimage::braid {

braid_word::braid_word(int strands, std::vector<letter> letters)
    : n_(strands), letters_(std::move(letters)) {
    if (n_ < 2) fail(errc::too_few_strands, "braid words need at least 2 strands");
    for (auto [g, e] : letters_) {
        if (g < 1 || g > n_ - 1)
            fail(errc::index_out_of_range,
                 "generator s" + std::to_string(g) + " outside 1.." + std::to_string(n_ - 1));
        if (e != 1 && e != -1) fail(errc::bad_format, "letter exponent must be +-1");
    }
}

braid_word braid_word::reduced() const {
    std::vector<letter> out;
    for (auto l : letters_) {
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return braid_word(n_, std::move(out));
}

braid_word braid_word::inverse() const {
    std::vector<letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.push_back({it->gen, -it->exp});
    return braid_word(n_, std::move(out));
}

braid_word braid_word::concat(const braid_word& other) const {
    if (other.n_ != n_) fail(errc::dimension_mismatch, "strand counts differ");
    std::vector<letter> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return braid_word(n_, std::move(out));
}

braid_word braid_word::conjugate_by(const braid_word& x) const {
    return x.concat(*this).concat(x.inverse());
}

int braid_word::exponent_sum() const {
    int s = 0;
    for (auto l : letters_) s += l.exp;
    return s;
}

std::string braid_word::to_string() const {
    if (letters_.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) s += ' ';
        s += (letters_[i].exp == 1 ? 's' : 'S');
        s += std::to_string(letters_[i].gen);
    }
    return s;
}

braid_word braid_word::parse(int strands, std::string_view sv) {
    std::vector<letter> out;
    std::size_t i = 0;
    std::string s(sv);
    while (i < s.size()) {
        if (s[i] == ' ') { ++i; continue; }
        char c = s[i];
        if (c != 's' && c != 'S') fail(errc::bad_format, "expected token s<k> or S<k>");
        std::size_t j = i + 1;
        while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i + 1) fail(errc::bad_format, "missing generator index");
        int g = std::stoi(s.substr(i + 1, j - i - 1));
        out.push_back({g, c == 's' ? 1 : -1});
        i = j;
    }
    if (out.empty() && !s.empty() && s != "e")
        fail(errc::bad_format, "empty braid word");
    return braid_word(strands, std::move(out));
}

const braid_word& commutator_gens::named(const std::string& name) const {
    for (auto& [k, w] : words)
        if (k == name) return w;
    fail(errc::index_out_of_range, "no commutator generator named " + name);
}

commutator_gens gorin_lin_generators(int n) {
    if (n < 3) fail(errc::too_few_strands, "commutator generators need n >= 3");
    commutator_gens out;
    out.words.emplace_back("p0", braid_word(n, {{2, 1}, {1, -1}}));
    out.words.emplace_back("p1", braid_word(n, {{1, 1}, {2, 1}, {1, -1}, {1, -1}}));
    if (n >= 4) {
        out.words.emplace_back("b", braid_word(n, {{2, 1}, {1, -1}, {3, 1}, {2, -1}}));
        for (int l = 3; l <= n - 1; ++l)
            out.words.emplace_back("q" + std::to_string(l),
                                   braid_word(n, {{l, 1}, {1, -1}}));
    }
    return out;
}

std::pair<braid_word, braid_word> normal_closure_witness(int n) {
    if (n < 5)
        fail(errc::too_few_strands,
             "witness identity needs n >= 5 (s1 must commute with s_{n-2})");
    braid_word qa(n, {{n - 2, 1}, {1, -1}});  // q_{n-2}
    braid_word qb(n, {{n - 1, 1}, {1, -1}});  // q_{n-1}
    braid_word rhs = qa.conjugate_by(qa.concat(qb)).reduced();
    return {qb, rhs};
}

braid_word random_commutator_word(int n, int length, std::uint64_t seed) {
    if (length % 2 != 0) fail(errc::odd_length, "commutator samples have even length");
    if (n < 2) fail(errc::too_few_strands, "need n >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> gen(1, n - 1);
    std::vector<letter> out;
    for (int t = 0; t < length / 2; ++t) {
        out.push_back({gen(rng), 1});
        out.push_back({gen(rng), -1});
    }
    return braid_word(n, std::move(out)).reduced();
}

} // namespace heckeimage::braid

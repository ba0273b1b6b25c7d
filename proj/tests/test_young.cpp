#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "heckeimage/young.hpp"

using namespace heckeimage;
using young::partition;
using young::std_tableau;

TEST_CASE("partition enumeration order") {
    auto p4 = young::partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0].parts() == std::vector<int>{4});
    CHECK(p4[1].parts() == std::vector<int>{3, 1});
    CHECK(p4[2].parts() == std::vector<int>{2, 2});
    CHECK(p4[3].parts() == std::vector<int>{2, 1, 1});
    CHECK(p4[4].parts() == std::vector<int>{1, 1, 1, 1});
    CHECK(young::partitions_of(1).size() == 1);
    CHECK(young::partitions_of(6).size() == 11);
}

TEST_CASE("transpose involution and hooks") {
    for (int n = 1; n <= 7; ++n)
        for (auto& lam : young::partitions_of(n))
            CHECK(lam.transpose().transpose() == lam);

    CHECK(partition({3, 1, 1}).is_hook());
    CHECK_FALSE(partition({2, 2}).is_hook());
    auto nh5 = young::non_hooks(5);
    REQUIRE(nh5.size() == 2);
    CHECK(nh5[0].parts() == std::vector<int>{3, 2});
    CHECK(nh5[1].parts() == std::vector<int>{2, 2, 1});
    CHECK(young::non_hooks(3).empty());

    // a hook has at most one part >= 2
    for (int n = 1; n <= 8; ++n)
        for (auto& lam : young::partitions_of(n)) {
            int big = 0;
            for (int x : lam.parts())
                if (x >= 2) ++big;
            CHECK(lam.is_hook() == (big <= 1));
        }
}

TEST_CASE("diagonal length and nu") {
    CHECK(partition({2, 2}).diagonal() == 2);
    CHECK(partition({2, 2}).nu() == -1);
    CHECK(partition({1}).diagonal() == 1);
    CHECK(partition({1}).nu() == 1);
    CHECK(partition({3, 2, 1}).diagonal() == 2);
    CHECK(partition({3, 2, 1}).nu() == 1);
}

TEST_CASE("standard tableaux enumeration and basis order") {
    auto t21 = young::standard_tableaux(partition({2, 1}));
    REQUIRE(t21.size() == 2);
    CHECK(t21[0].to_string() == "1,2/3");
    CHECK(t21[1].to_string() == "1,3/2");

    CHECK(young::standard_tableaux(partition({5})).size() == 1);
    CHECK(young::standard_tableaux(partition({3, 2, 1})).size() == 16);

    // lexicographic in the row vector
    auto t31 = young::standard_tableaux(partition({3, 1}));
    REQUIRE(t31.size() == 3);
    CHECK(t31[0].to_string() == "1,2,3/4");
    CHECK(t31[1].to_string() == "1,2,4/3");
    CHECK(t31[2].to_string() == "1,3,4/2");

    // Gelfand dimension count: sum of squares is n!
    long long fact = 1;
    for (int n = 1; n <= 8; ++n) {
        fact *= n;
        long long total = 0;
        for (auto& lam : young::partitions_of(n)) {
            long long d = (long long)young::standard_tableaux(lam).size();
            total += d * d;
        }
        CHECK(total == fact);
    }
}

TEST_CASE("tableau serialization round trip") {
    auto t = std_tableau::parse("1,3/2,4");
    CHECK(t.shape() == partition({2, 2}));
    CHECK(t.row_of(3) == 1);
    CHECK(t.col_of(3) == 2);
    CHECK(t.to_string() == "1,3/2,4");
    CHECK_THROWS_AS(std_tableau::parse("1,4/2,3"), error);  // columns must increase
}

TEST_CASE("w sign") {
    auto row = young::standard_tableaux(partition({4}))[0];
    CHECK(row.w_sign() == 1);
    auto t21 = young::standard_tableaux(partition({2, 1}));
    CHECK(t21[0].w_sign() == 1);
    CHECK(t21[1].w_sign() == -1);  // single inversion, pair (2,3)

    // swapping r and r+1 flips the sign whenever the swap is standard
    for (int n = 3; n <= 6; ++n)
        for (auto& lam : young::partitions_of(n))
            for (auto& T : young::standard_tableaux(lam))
                for (int r = 1; r < n; ++r)
                    if (T.exchangeable(r))
                        CHECK(T.swap_adjacent(r).w_sign() == -T.w_sign());
}

TEST_CASE("adjacent swaps") {
    auto t21 = young::standard_tableaux(partition({2, 1}));
    CHECK(t21[0].swap_adjacent(2) == t21[1]);
    CHECK_THROWS_WITH_AS(t21[0].swap_adjacent(1), doctest::Contains("NotExchangeable"),
                         error);
    CHECK(t21[0].swap_adjacent(2).swap_adjacent(2) == t21[0]);

    // transpose commutes with swaps
    for (auto& lam : young::partitions_of(5))
        for (auto& T : young::standard_tableaux(lam))
            for (int r = 1; r < 5; ++r)
                if (T.exchangeable(r))
                    CHECK(T.swap_adjacent(r).transposed() ==
                          T.transposed().swap_adjacent(r));
}

TEST_CASE("w(T) w(T') is a shape invariant matching the diagonal rule on "
          "self-conjugate shapes") {
    for (int n = 1; n <= 8; ++n) {
        for (auto& lam : young::partitions_of(n)) {
            int expected = lam.pairing_sign();
            for (auto& T : young::standard_tableaux(lam))
                CHECK(T.w_sign() * T.transposed().w_sign() == expected);
            if (lam.self_conjugate()) CHECK(expected == lam.nu());
        }
    }
}

TEST_CASE("hermitian weights") {
    auto F49 = gf::field_ctx::make_auto(7, 2);
    gf::fel a = F49.find_element_of_order(8);

    auto row = young::standard_tableaux(partition({4}))[0];
    CHECK(young::hermitian_weight(F49, row, a) == F49.one());

    auto t21 = young::standard_tableaux(partition({2, 1}));
    // single inverted pair: (a^-1 - a^2) / (1 - a)
    gf::fel expect = F49.div(F49.sub(F49.inv(a), F49.mul(a, a)),
                             F49.sub(F49.one(), a));
    CHECK(young::hermitian_weight(F49, t21[1], a) == expect);
    CHECK(young::hermitian_weight(F49, t21[1], a) == gf::fel{5});

    // ratio identity: d(T_swap) = d(T) (a^(v-u) - a^(j-i+1)) / (a^(v-u+1) - a^(j-i))
    // with (i,j) the cell of r and (u,v) the cell of r+1, when row(r) < row(r+1)
    for (auto& lam : young::partitions_of(5)) {
        for (auto& T : young::standard_tableaux(lam)) {
            for (int r = 1; r < 5; ++r) {
                if (!T.exchangeable(r) || T.row_of(r) >= T.row_of(r + 1)) continue;
                std::int64_t ij = T.content(r), uv = T.content(r + 1);
                gf::fel ratio = F49.div(F49.sub(F49.pow(a, uv), F49.pow(a, ij + 1)),
                                        F49.sub(F49.pow(a, uv + 1), F49.pow(a, ij)));
                CHECK(young::hermitian_weight(F49, T.swap_adjacent(r), a) ==
                      F49.mul(young::hermitian_weight(F49, T, a), ratio));
            }
        }
    }

    // weights are fixed by the involution (hermitian diagonal)
    for (auto& lam : young::partitions_of(6))
        for (auto& T : young::standard_tableaux(lam)) {
            auto d = young::hermitian_weight(F49, T, a);
            CHECK(F49.conj(d) == d);
            CHECK(d.v != 0);
        }
}

TEST_CASE("hermitian weights reject degenerate parameters") {
    // alpha of order 3 makes the factor numerator alpha^-1 - alpha^2 vanish
    auto F7 = gf::field_ctx::make_auto(7, 1);
    gf::fel a = F7.find_element_of_order(3);
    auto t21 = young::standard_tableaux(partition({2, 1}));
    CHECK_THROWS_WITH_AS(young::hermitian_weight(F7, t21[1], a),
                         doctest::Contains("DegenerateParameter"), error);
}

TEST_CASE("hook subset encoding") {
    auto t = std_tableau::parse("1,4/2/3");
    CHECK(t.hook_subset() == std::vector<int>{2, 3});
    CHECK_THROWS_AS(std_tableau::parse("1,2/3,4").hook_subset(), error);
}

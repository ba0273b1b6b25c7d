#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "heckeimage/engine.hpp"
#include "heckeimage/hecke.hpp"
#include "heckeimage/pipeline.hpp"

using namespace heckeimage;
using gf::fel;
using young::partition;

namespace {

std::vector<fqmat> cgens(const gf::field_ctx& F, const partition& lam, fel a) {
    hecke::hecke_rep R(F, lam, a);
    return pipeline::commutator_images(R);
}

} // namespace

TEST_CASE("closure of the trivial group") {
    auto F = gf::field_ctx::make(2, 3, {1, 1, 0, 1});
    std::vector<fqmat> gens{fqmat::identity(2)};
    auto res = engine::bfs_closure(F, gens, 100);
    CHECK(res.status == engine::closure_status::complete);
    CHECK(res.order == 1);
}

TEST_CASE("closure certifies the 504-element image") {
    auto F = gf::field_ctx::make(2, 3, {1, 1, 0, 1});
    fel a = F.find_element_of_order(7);
    auto gens = cgens(F, partition({2, 1}), a);
    auto res = engine::bfs_closure(F, gens, 1000);
    CHECK(res.status == engine::closure_status::complete);
    CHECK(res.order == 504);
    CHECK(res.packed);

    // the closure is inversion-closed
    std::ostringstream diag;
    auto res2 = engine::bfs_closure(F, gens, 1000, &diag);
    CHECK(res2.order == 504);
    CHECK(diag.str().find("visited=") != std::string::npos);

    auto cap = engine::bfs_closure(F, gens, 100);
    CHECK(cap.status == engine::closure_status::cap_exceeded);
    CHECK(cap.visited > 100);
}

TEST_CASE("closure is inversion-closed") {
    // adjoining the inverses does not enlarge a complete closure
    auto F = gf::field_ctx::make(2, 3, {1, 1, 0, 1});
    fel a = F.find_element_of_order(7);
    auto gens = cgens(F, partition({2, 1}), a);
    auto base = engine::bfs_closure(F, gens, 1000);
    std::vector<fqmat> both = gens;
    for (auto& g : gens) both.push_back(inverse(F, g));
    auto wide = engine::bfs_closure(F, both, 1000);
    CHECK(base.order == wide.order);

    // every element order divides the group order
    for (auto& g : gens) {
        bool divides = base.order % engine::matrix_order(F, g) == 0;
        CHECK(divides);
    }
}

TEST_CASE("closure in odd characteristic and the unitary case") {
    auto F9 = gf::field_ctx::make_auto(3, 2);
    auto g9 = cgens(F9, partition({2, 2}), F9.find_element_of_order(8));
    auto r9 = engine::bfs_closure(F9, g9, 10000);
    CHECK(r9.status == engine::closure_status::complete);
    CHECK(r9.order == 720);

    auto F49 = gf::field_ctx::make_auto(7, 2);
    auto g49 = cgens(F49, partition({2, 1}), F49.find_element_of_order(8));
    auto r49 = engine::bfs_closure(F49, g49, 10000);
    CHECK(r49.status == engine::closure_status::complete);
    CHECK(r49.order == 336);
}

TEST_CASE("generic key path matches the packed path") {
    auto F = gf::field_ctx::make_auto(3, 2);
    fel a = F.find_element_of_order(8);
    hecke::hecke_rep R(F, partition({2, 1}), a);  // dim 2 over F_9: 16 bits, packed
    auto gens = pipeline::commutator_images(R);
    auto packed = engine::bfs_closure(F, gens, 20000);
    CHECK(packed.packed);
    CHECK(packed.status == engine::closure_status::complete);
    CHECK(packed.order == 720);

    // pad with an identity block to push the key past 64 bits
    std::vector<fqmat> big;
    for (auto& g : gens) big.push_back(direct_sum(g, fqmat::identity(3)));
    auto generic = engine::bfs_closure(F, big, 20000);
    CHECK_FALSE(generic.packed);
    CHECK(generic.status == engine::closure_status::complete);
    CHECK(generic.order == packed.order);
}

TEST_CASE("singular generators are rejected") {
    auto F = gf::field_ctx::make(2, 3, {1, 1, 0, 1});
    std::vector<fqmat> gens{fqmat(2, 2)};
    CHECK_THROWS_WITH_AS(engine::bfs_closure(F, gens, 10),
                         doctest::Contains("Singular"), error);
}

TEST_CASE("matrix order") {
    auto F = gf::field_ctx::make(2, 3, {1, 1, 0, 1});
    fel a = F.find_element_of_order(7);
    CHECK(engine::matrix_order(F, fqmat::identity(3)) == 1);

    fqmat d(2, 2);
    d(0, 0) = a;
    d(1, 1) = F.inv(a);
    CHECK(engine::matrix_order(F, d) == 7);

    // s1 acts with eigenvalues {alpha, -1}; in characteristic 2 that is order 7
    hecke::hecke_rep R(F, partition({2, 1}), a);
    CHECK(engine::matrix_order(F, R.gen(1)) == 7);

    auto F49 = gf::field_ctx::make_auto(7, 2);
    fel a49 = F49.find_element_of_order(8);
    hecke::hecke_rep R49(F49, partition({2, 1}), a49);
    // eigenvalues {alpha, -1}: lcm(8, 2) = 8
    CHECK(engine::matrix_order(F49, R49.gen(1)) == 8);

    CHECK_THROWS_AS(engine::matrix_order(F, fqmat(2, 2)), error);
}

TEST_CASE("order certification") {
    auto F = gf::field_ctx::make(2, 3, {1, 1, 0, 1});
    fel a = F.find_element_of_order(7);
    auto pred = classify::predict_group(F, partition({2, 1}), a);

    auto gens = cgens(F, partition({2, 1}), a);
    auto res = engine::bfs_closure(F, gens, 1000);
    auto cert = engine::certify_order(res, pred);
    CHECK(cert.verdict == engine::certify_verdict::match);
    CHECK(cert.lagrange_ok);

    auto capped = engine::bfs_closure(F, gens, 100);
    CHECK(engine::certify_order(capped, pred).verdict ==
          engine::certify_verdict::inconclusive);

    engine::closure_result wrong = res;
    wrong.order = 503;
    auto mism = engine::certify_order(wrong, pred);
    CHECK(mism.verdict == engine::certify_verdict::mismatch);
    CHECK_FALSE(mism.lagrange_ok);

    engine::closure_result sub = res;
    sub.order = 252;  // a proper divisor: mismatch but Lagrange-consistent
    auto mism2 = engine::certify_order(sub, pred);
    CHECK(mism2.verdict == engine::certify_verdict::mismatch);
    CHECK(mism2.lagrange_ok);
}

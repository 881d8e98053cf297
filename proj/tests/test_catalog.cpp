#include <doctest.h>

#include <random>

#include "chiy/catalog.hpp"
#include "chiy/verify.hpp"
#include "test_util.hpp"

using namespace chiy;
using namespace chiy::testutil;

TEST_CASE("projective spaces from the binomial Chern class") {
    const ChernData cp1 = projective_space(1);
    CHECK(cp1.number(Partition({1})) == 2);

    const ChernData cp2 = projective_space(2);
    CHECK(cp2.number(Partition({1, 1})) == 9);
    CHECK(cp2.number(Partition({2})) == 3);

    const ChernData cp3 = projective_space(3);
    CHECK(cp3.number(Partition({1, 1, 1})) == 64);
    CHECK(cp3.number(Partition({2, 1})) == 24);
    CHECK(cp3.number(Partition({3})) == 4);

    const ChernData pt = projective_space(0);
    CHECK(pt.number(Partition()) == 1);

    CHECK_THROWS_AS(projective_space(-1), std::invalid_argument);
}

TEST_CASE("hypersurfaces by adjunction") {
    const ChernData k3 = hypersurface(2, 4);
    CHECK(k3.number(Partition({1, 1})) == 0);
    CHECK(k3.number(Partition({2})) == 24);

    const ChernData quadric = hypersurface(2, 2);
    CHECK(quadric.number(Partition({1, 1})) == 8);
    CHECK(quadric.number(Partition({2})) == 4);

    CHECK(hypersurface(2, 1) == projective_space(2));
    for (int n = 0; n <= 6; ++n) CHECK(hypersurface(n, 1) == projective_space(n));

    CHECK_THROWS_AS(hypersurface(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(hypersurface(-1, 2), std::invalid_argument);
}

TEST_CASE("products via the Whitney formula") {
    const ChernData cp1 = projective_space(1);
    const ChernData sq = product(cp1, cp1);
    CHECK(sq.dim() == 2);
    CHECK(sq.number(Partition({1, 1})) == 8);
    CHECK(sq.number(Partition({2})) == 4);
    CHECK(sq == hypersurface(2, 2));

    ChernData point(0);
    point.set_number(Partition(), 1);
    CHECK(product(projective_space(3), point) == projective_space(3));
    CHECK(product(point, projective_space(3)) == projective_space(3));

    const ChernData tube = product(cp1, projective_space(2));
    CHECK(tube.dim() == 3);
    CHECK(tube.number(Partition({3})) == 6);  // euler 2 * euler 3

    // commutative and associative
    std::mt19937 rng(59);
    const ChernData a = random_chern_data(2, rng());
    const ChernData b = random_chern_data(3, rng());
    const ChernData c = random_chern_data(1, rng());
    CHECK(product(a, b) == product(b, a));
    CHECK(product(product(a, b), c) == product(a, product(b, c)));
}

TEST_CASE("catalog ties into the genus engine") {
    const GenusPoly expected(2, {rq(1), rq(-2), rq(1)});  // (1-y)^2
    CHECK(chi_y(hypersurface(2, 2)) == expected);
    CHECK(chi_y(product(projective_space(1), projective_space(1))) == expected);

    for (long long k = 1; k <= 6; ++k) {
        const Rat euler = specialize(chi_y(hypersurface(2, int(k))), Specialization::euler);
        CHECK(euler == Rat(k * k * k - 4 * k * k + 6 * k));
    }

    // chi_y of every catalog manifold here is integral
    for (const ChernData& data :
         {projective_space(4), hypersurface(3, 5), product(projective_space(1), hypersurface(2, 3))}) {
        const GenusPoly g = chi_y(data);
        for (int j = 0; j <= g.dim(); ++j) CHECK(g.coeff(j).is_integer());
    }
}

TEST_CASE("parse_spec accepts the documented schema") {
    const ManifoldSpec p = parse_spec(R"({"kind":"projective","n":2})");
    CHECK(p.kind == ManifoldSpec::Kind::projective);
    CHECK(realize(p) == projective_space(2));
    CHECK(spec_name(p) == "cp:2");

    const ManifoldSpec h = parse_spec(R"({"kind":"hypersurface","n":2,"k":4})");
    CHECK(realize(h) == hypersurface(2, 4));
    CHECK(spec_name(h) == "hyp:2:4");

    const ManifoldSpec k3 = parse_spec(
        R"({"kind":"explicit","dim":2,"chern":{"1,1":0,"2":24},"name":"K3"})");
    CHECK(spec_name(k3) == "K3");
    CHECK(realize(k3).number(Partition({2})) == 24);
    CHECK(realize(k3).number(Partition({1, 1})) == 0);

    const ManifoldSpec prod_spec = parse_spec(
        R"({"kind":"product","a":{"kind":"projective","n":1},"b":{"kind":"projective","n":1}})");
    CHECK(realize(prod_spec) == product(projective_space(1), projective_space(1)));
    CHECK(spec_name(prod_spec) == "prod:cp:1:cp:1");
}

TEST_CASE("parse_spec rejects malformed documents and names the fault") {
    CHECK_THROWS_AS(parse_spec("not json"), SpecError);
    CHECK_THROWS_AS(parse_spec(R"({"kind":"blowup"})"), SpecError);
    CHECK_THROWS_AS(parse_spec(R"({"kind":"projective"})"), SpecError);
    CHECK_THROWS_AS(parse_spec(R"({"kind":"projective","n":-1})"), SpecError);
    CHECK_THROWS_AS(parse_spec(R"({"kind":"hypersurface","n":2,"k":0})"), SpecError);
    CHECK_THROWS_AS(parse_spec(R"({"kind":"explicit","dim":2,"chern":{"3":1}})"), SpecError);
    CHECK_THROWS_AS(parse_spec(R"({"kind":"explicit","dim":2,"chern":{"x":1}})"), SpecError);

    try {
        parse_spec(R"({"kind":"explicit","dim":2,"chern":{"3":1}})");
        FAIL("expected SpecError");
    } catch (const SpecError& e) {
        CHECK(std::string(e.what()).find("weight 3") != std::string::npos);
        CHECK(e.where().find("chern") != std::string::npos);
    }

    try {
        parse_spec(R"({"kind":"product","a":{"kind":"projective","n":1},"b":{"kind":"projective"}})");
        FAIL("expected SpecError");
    } catch (const SpecError& e) {
        CHECK(e.where() == "/b/n");
    }
}

TEST_CASE("builtin manifold ids") {
    CHECK(realize(parse_manifold_id("cp:2")) == projective_space(2));
    CHECK(realize(parse_manifold_id("hyp:2:4")) == hypersurface(2, 4));
    CHECK(realize(parse_manifold_id("prod:cp:1:cp:2")) ==
          product(projective_space(1), projective_space(2)));
    CHECK(realize(parse_manifold_id("prod:cp:1:prod:cp:1:cp:1")) ==
          product(projective_space(1),
                  product(projective_space(1), projective_space(1))));

    CHECK_THROWS_AS(parse_manifold_id("torus:1"), SpecError);
    CHECK_THROWS_AS(parse_manifold_id("cp"), SpecError);
    CHECK_THROWS_AS(parse_manifold_id("cp:x"), SpecError);
    CHECK_THROWS_AS(parse_manifold_id("cp:2:3"), SpecError);
    CHECK_THROWS_AS(parse_manifold_id("hyp:2:0"), SpecError);
    CHECK_THROWS_AS(parse_manifold_id("prod:cp:1"), SpecError);
}

TEST_CASE("Hodge tables where known") {
    const auto cp2 = hodge_table_for(spec_projective(2));
    REQUIRE(cp2.has_value());
    CHECK(cp2->b(0, 0) == 1);
    CHECK(cp2->b(1, 1) == 1);
    CHECK(cp2->b(2, 2) == 1);
    CHECK(cp2->b(1, 0) == 0);
    CHECK(cp2->is_kahler_symmetric());
    CHECK(chi_from_hodge(*cp2) == chi_y(projective_space(2)));

    const auto sq = hodge_table_for(spec_product(spec_projective(1), spec_projective(1)));
    REQUIRE(sq.has_value());
    CHECK(sq->b(1, 1) == 2);  // Kuenneth
    CHECK(chi_from_hodge(*sq) == chi_y(hypersurface(2, 2)));

    CHECK(!hodge_table_for(spec_hypersurface(2, 4)).has_value());
}

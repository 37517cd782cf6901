#include <doctest.h>

#include "perind/examplemodels.hpp"
#include "perind/periodindex.hpp"

using namespace perind;

TEST_CASE("builder data is pinned") {
    SixManifoldModel a = model_a_teichner_orientable();
    CHECK(a.H2.factors == std::vector<long long>{4});
    CHECK(a.H3.factors == std::vector<long long>{2});
    CHECK(a.dim_w == 2);
    CHECK(a.v2 == 0);
    REQUIRE(a.c1.has_value());
    CHECK(*a.c1 == Elem{0});
    CHECK(a.T.nonzero_triples() == std::vector<std::array<int, 3>>{{0, 0, 1}, {0, 1, 1}});

    SixManifoldModel b = model_b_teichner_nonorientable();
    CHECK(b.H3.factors == std::vector<long long>{2, 2});
    CHECK(b.dim_w == 3);
    CHECK(b.v2 == 0b100);
    CHECK_FALSE(b.c1.has_value());
}

TEST_CASE("ring slice products and the bundle Whitney formulas") {
    Z2RingSlice ring;
    ring.dim1 = 2;
    ring.dim2 = 2;
    ring.prod = {{0b01, 0b00}, {0b00, 0b10}};  // x0^2 = y0, x1^2 = y1
    ring.bock2 = gf2::BitMat(1, 2);
    ring.bock2.set(0, 1, true);  // Bockstein kills y0 but not y1
    ring.check();

    CHECK(ring.product(0b11, 0b11) == 0b11);
    CHECK(ring.bockstein_vanishes(0b01));
    CHECK_FALSE(ring.bockstein_vanishes(0b10));

    SUBCASE("orientable, both terms lift: spin^c") {
        auto r = sphere_bundle_low_sw(ring, 0, 0b01, 0, 0b01);
        CHECK(r.w1n == 0);
        CHECK(r.w2n == 0);
        CHECK(r.verdict == SpinCVerdict::SPIN_C);
    }
    SUBCASE("matching nonzero w1: orientable total space") {
        auto r = sphere_bundle_low_sw(ring, 0b01, 0b01, 0b01, 0);
        CHECK(r.w1n == 0);
        CHECK(r.w2n == (0b01 ^ 0b01));  // w1M w1E = x0^2 = y0
    }
    SUBCASE("all zero") {
        auto r = sphere_bundle_low_sw(ring, 0, 0, 0, 0);
        CHECK(r.w1n == 0);
        CHECK(r.w2n == 0);
        CHECK(r.verdict == SpinCVerdict::SPIN_C);
    }
    SUBCASE("non-liftable w2 stays unknown") {
        auto r = sphere_bundle_low_sw(ring, 0, 0b10, 0, 0);
        CHECK(r.verdict == SpinCVerdict::UNKNOWN);
    }
    SUBCASE("degree errors") {
        CHECK_THROWS_AS(sphere_bundle_low_sw(ring, 0b100, 0, 0, 0), MalformedInput);
        CHECK_THROWS_AS(sphere_bundle_low_sw(ring, 0, 0b100, 0, 0), MalformedInput);
    }
}

TEST_CASE("ring slice validation") {
    Z2RingSlice bad;
    bad.dim1 = 2;
    bad.dim2 = 1;
    bad.prod = {{0b1, 0b0}, {0b1, 0b0}};  // not symmetric
    bad.bock2 = gf2::BitMat(0, 1);
    CHECK_THROWS_AS(bad.check(), MalformedInput);
}

TEST_CASE("enumeration: bounds, determinism, and the pinned models") {
    CHECK_THROWS_AS(enumerate_valid_models(5, {2}, [](const SixManifoldModel&) {}),
                    UnsupportedInput);

    SUBCASE("dim 0 models have no mod-2 classes") {
        int count = 0;
        enumerate_valid_models(0, {3}, [&](const SixManifoldModel& m) {
            CHECK(m.dim_w == 0);
            CHECK(validate(m).pass);
            ++count;
        });
        CHECK(count > 0);
    }
    SUBCASE("the stream is deterministic") {
        std::vector<SixManifoldModel> first, second;
        enumerate_valid_models(2, {4}, [&](const SixManifoldModel& m) { first.push_back(m); });
        enumerate_valid_models(2, {4}, [&](const SixManifoldModel& m) { second.push_back(m); });
        CHECK(first == second);
        CHECK_FALSE(first.empty());
    }
    SUBCASE("contains MODEL-A") {
        bool found = false;
        SixManifoldModel a = model_a_teichner_orientable();
        enumerate_valid_models(2, {4}, [&](const SixManifoldModel& m) { found |= m == a; });
        CHECK(found);
    }
    SUBCASE("contains MODEL-B") {
        bool found = false;
        SixManifoldModel b = model_b_teichner_nonorientable();
        enumerate_valid_models(3, {2, 4}, [&](const SixManifoldModel& m) { found |= m == b; });
        CHECK(found);
    }
    SUBCASE("every emitted model validates") {
        int count = 0;
        enumerate_valid_models(2, {2, 4}, [&](const SixManifoldModel& m) {
            CHECK(validate(m).pass);
            ++count;
        });
        CHECK(count > 0);
    }
}

#include <doctest.h>

#include "perind/examplemodels.hpp"
#include "perind/model6.hpp"

using namespace perind;

TEST_CASE("the two built-in models validate") {
    ValidationReport a = validate(model_a_teichner_orientable());
    CHECK(a.pass);
    CHECK(model_a_teichner_orientable().c1.has_value());

    ValidationReport b = validate(model_b_teichner_nonorientable());
    CHECK(b.pass);
    CHECK_FALSE(model_b_teichner_nonorientable().c1.has_value());
}

TEST_CASE("dropping a triple product breaks the Wu identity with a witness") {
    SixManifoldModel m = model_a_teichner_orientable();
    m.T = forms2::Z2Trilinear::from_triples(2, {{1, 1, 0}});  // T(x,t,t) flipped to 0
    ValidationReport rep = validate(m);
    REQUIRE_FALSE(rep.pass);
    bool wu = false;
    for (const auto& v : rep.violations) wu = wu || v.invariant == "wu-cartan";
    CHECK(wu);
    CHECK_THROWS_AS(Model{m}, InvalidModel);
}

TEST_CASE("shape errors precede semantic validation") {
    SixManifoldModel m = model_a_teichner_orientable();
    m.bock = Mat(1, 3);
    CHECK_THROWS_AS(validate(m), MalformedInput);

    SixManifoldModel m2 = model_a_teichner_orientable();
    m2.c1 = Elem{7};  // out of range coordinate
    CHECK_THROWS_AS(validate(m2), MalformedInput);
}

TEST_CASE("exactness violations are caught") {
    SixManifoldModel m = model_a_teichner_orientable();
    m.bock = Mat(1, 2);  // im(bock) = 0 != H3[2]
    ValidationReport rep = validate(m);
    CHECK_FALSE(rep.pass);

    SixManifoldModel m2 = model_a_teichner_orientable();
    m2.red2 = gf2::BitMat(2, 1);  // red2 = 0 not injective on H2/2H2
    CHECK_FALSE(validate(m2).pass);
}

TEST_CASE("spin-c bookkeeping") {
    SixManifoldModel m = model_a_teichner_orientable();
    m.c1.reset();  // bock(v2) = 0 but no lift supplied
    CHECK_FALSE(validate(m).pass);

    SixManifoldModel b = model_b_teichner_nonorientable();
    b.c1 = Elem{0};  // bock(v2) != 0 yet a lift is claimed
    CHECK_FALSE(validate(b).pass);

    SixManifoldModel a = model_a_teichner_orientable();
    a.c1 = Elem{1};  // red2(c1) = t != v2 = 0
    CHECK_FALSE(validate(a).pass);
}

TEST_CASE("functionals: representation and stability properties") {
    Model m(model_b_teichner_nonorientable());
    const gf2::Word x = 0b010;

    // beta(x^2) is nonzero for the fiber class, zero on integral classes
    CHECK_FALSE(beta_square_functional(m, x).is_zero());
    CHECK(beta_square_functional(m, 0).is_zero());
    for (gf2::Word r : m.im_red2_basis()) CHECK(beta_square_functional(m, r).is_zero());

    // stability of beta(x^2) under integral shifts of x
    for (gf2::Word w = 0; w < 8; ++w)
        for (gf2::Word r : m.im_red2_basis())
            CHECK(beta_square_functional(m, w ^ r) == beta_square_functional(m, w));

    // beta(x) e depends only on red2(e)
    Model a(model_a_teichner_orientable());
    CHECK(beta_times_functional(a, 0b10, Elem{1}) == beta_times_functional(a, 0b10, Elem{3}));
    CHECK(beta_times_functional(a, 0b10, Elem{2}).is_zero());  // red2(2s) = 0
    CHECK(beta_times_functional(a, 0b10, Elem{0}).is_zero());

    // full Wu identity, not just on basis vectors
    for (gf2::Word w = 0; w < 8; ++w)
        for (gf2::Word r : m.im_red2_basis())
            CHECK(m.triple(m.v2(), w, r) == (m.triple(w, w, r) ^ m.triple(w, r, r)));
}

TEST_CASE("model accessors") {
    Model m(model_a_teichner_orientable());
    CHECK(m.dim_w() == 2);
    CHECK(m.spin_c());
    CHECK(m.red2_of(Elem{1}) == 0b01);
    CHECK(m.red2_of(Elem{2}) == 0);
    CHECK(m.bock_of(0b10) == Elem{1});
    CHECK(m.bock_of(0b01) == Elem{0});
    CHECK(m.v_basis() == std::vector<gf2::Word>{0b01});
    CHECK(m.im_red2_basis() == std::vector<gf2::Word>{0b01});
    // every bock preimage statement needs im(bock) = H3[2]; check generator hit
    CHECK(m.h3().equal(m.bock_of(0b10), Elem{1}));
}

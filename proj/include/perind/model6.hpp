#pragma once

#include <optional>
#include <string>
#include <vector>

#include "perind/abelian.hpp"
#include "perind/forms2.hpp"
#include "perind/gf2.hpp"

namespace perind {

// Finite presentation of the degree-(2,3) cohomology of a closed connected
// oriented 6-manifold: integral groups, the mod-2 class space W with
// reduction and Bockstein, the triple-product tensor, and the Wu class.
struct SixManifoldModel {
    FgAbelianGroup H2;
    FgAbelianGroup H3;
    int dim_w = 0;
    gf2::BitMat red2;  // dim_w x H2.rank(); column j = image of generator j
    Mat bock;          // H3.rank() x dim_w; column j = image of basis vector j
    forms2::Z2Trilinear T;
    gf2::Word v2 = 0;
    std::optional<Elem> c1;
    friend bool operator==(const SixManifoldModel&, const SixManifoldModel&) = default;
};

struct Violation {
    std::string invariant;
    std::string witness;
};

struct ValidationReport {
    bool pass = true;
    std::vector<Violation> violations;
    std::string describe() const;
};

// Semantic validation. Throws MalformedInput on dimension mismatches before
// any semantic check runs.
ValidationReport validate(const SixManifoldModel& m);

struct InvalidModel : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A validated model with the pinned section data every solver uses:
//  - a basis of im(red2) with H2 preimages (one generator each),
//  - a basis of V = red2(TH2) with torsion preimages.
class Model {
public:
    explicit Model(SixManifoldModel m);  // throws InvalidModel when validate fails

    const SixManifoldModel& raw() const { return m_; }
    const FgAbelianGroup& h2() const { return m_.H2; }
    const FgAbelianGroup& h3() const { return m_.H3; }
    int dim_w() const { return m_.dim_w; }
    bool spin_c() const { return m_.c1.has_value(); }
    gf2::Word v2() const { return m_.v2; }
    const std::optional<Elem>& c1() const { return m_.c1; }

    gf2::Word red2_of(const Elem& e) const;
    Elem bock_of(gf2::Word w) const;
    bool triple(gf2::Word a, gf2::Word b, gf2::Word c) const { return m_.T.eval(a, b, c); }

    const std::vector<gf2::Word>& v_basis() const { return v_basis_; }
    const std::vector<Elem>& v_section() const { return v_section_; }
    const std::vector<gf2::Word>& im_red2_basis() const { return im_basis_; }
    const std::vector<Elem>& im_red2_section() const { return im_section_; }

private:
    SixManifoldModel m_;
    std::vector<gf2::Word> im_basis_;
    std::vector<Elem> im_section_;
    std::vector<gf2::Word> v_basis_;
    std::vector<Elem> v_section_;
};

// Linear functional on V; the faithful stand-in for a 2-torsion class of
// TH^5 through the perfect linking pairing.
struct TorsionFunctional {
    std::vector<uint8_t> coeffs;  // value on each v_basis vector
    bool is_zero() const;
    friend bool operator==(const TorsionFunctional&, const TorsionFunctional&) = default;
};

// v |-> T(x, x, v): represents beta(x^2).
TorsionFunctional beta_square_functional(const Model& m, gf2::Word x);
// v |-> T(x, red2(e), v): represents beta(x) e.
TorsionFunctional beta_times_functional(const Model& m, gf2::Word x, const Elem& e);

}  // namespace perind

#include <doctest.h>

#include "cartan/models.hpp"

using namespace cartan;

namespace {

void check_bundle(const ModelBundle& b) {
    auto rep = validate_model(b.model);
    for (const auto& f : rep.failures) INFO(f.condition << " " << f.detail);
    CHECK(rep.ok());
    for (const auto& r : b.reps) {
        auto vr = validate_rep(b.model, r);
        INFO(b.model.info().family << " rep " << r.label);
        CHECK(vr.ok());
    }
}

}  // namespace

TEST_CASE("every family builds a valid model with valid reps") {
    check_bundle(sl2_model());
    for (int n = 1; n <= 4; ++n) check_bundle(projective(n));
    check_bundle(grassmannian(2, 2));
    check_bundle(grassmannian(2, 3));
    check_bundle(grassmannian(1, 3));
    for (int n = 1; n <= 3; ++n) check_bundle(lagrangian_grassmannian(n));
    for (int n = 3; n <= 6; ++n) check_bundle(conformal(n));
    check_bundle(foliated_projective(1, 1));
    check_bundle(foliated_projective(2, 1));
    check_bundle(foliated_projective(1, 2));
    check_bundle(split_projective(1, 1));
    check_bundle(split_projective(2, 1));
    check_bundle(g2_flag());
}

TEST_CASE("dimensions") {
    CHECK(projective(3).model.dims() == std::array<int, 3>{3, 9, 3});
    CHECK(grassmannian(2, 3).model.dims() == std::array<int, 3>{6, 12, 6});
    CHECK(lagrangian_grassmannian(3).model.dims() == std::array<int, 3>{6, 9, 6});
    CHECK(conformal(4).model.dims() == std::array<int, 3>{4, 7, 4});
    CHECK(conformal(5).model.dims() == std::array<int, 3>{5, 11, 5});
    CHECK(foliated_projective(2, 1).model.dims() == std::array<int, 3>{3, 5, 3});
    CHECK(g2_flag().model.dims() == std::array<int, 3>{5, 4, 5});
}

TEST_CASE("grassmannian(1,n) coincides with projective(n)") {
    for (int n = 1; n <= 3; ++n) {
        auto a = grassmannian(1, n).model, b = projective(n).model;
        CHECK(a.table() == b.table());
    }
}

TEST_CASE("lagrangian(1) and projective(1) versus the sl2 table") {
    CHECK(lagrangian_grassmannian(1).model.table() == sl2_model().model.table());
    // projective(1) uses b = -h/2 in g0
    auto p = projective(1).model;
    CHECK(p.structure_constant(1, 2, 2) == Rational(-1));
}

TEST_CASE("sl2 tangent weight") {
    auto b = sl2_model();
    CHECK(b.rep("tangent").matrices[0](0, 0) == Rational(-2));
}

TEST_CASE("g2 root system") {
    auto rs = detail::root_system(QMatrix{{2, -1}, {-3, 2}});
    REQUIRE(rs.roots.size() == 6);
    CHECK(rs.lengths[0] == Rational(2));
    CHECK(rs.lengths[1] == Rational(6));
    CHECK(rs.find({3, 2}) >= 0);
    CHECK(rs.find({3, 1}) >= 0);
    CHECK(rs.find({2, 1}) >= 0);
}

TEST_CASE("chevalley algebras satisfy Jacobi") {
    for (auto cm : {QMatrix{{2, -1}, {-3, 2}}, QMatrix{{2, -1}, {-1, 2}}, QMatrix{{2, -2}, {-1, 2}},
                    QMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, QMatrix{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}}) {
        auto ca = detail::chevalley(cm);
        int n = static_cast<int>(ca.basis_weights.size());
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
        LieModel m({0, n, 0}, names, ca.table);
        CHECK(validate_model(m).ok());
    }
}

TEST_CASE("g2 graded tangent weights") {
    auto b = g2_flag();
    const auto& t = b.rep("graded-tangent");
    // first g0 generator is H1 with weight 2 on w1, 1 on w2, 1 on w3
    CHECK(t.matrices[0](0, 0) == Rational(2));
    CHECK(t.matrices[0](1, 1) == Rational(1));
    CHECK(t.matrices[3](0, 0) == Rational(1));
    CHECK(t.matrices[3](1, 1) == Rational(2));
}

TEST_CASE("build_model dispatch and errors") {
    CHECK(build_model("projective", {2}).model.total_dim() == 8);
    CHECK_THROWS_AS(build_model("projective", {}), std::invalid_argument);
    CHECK_THROWS_AS(build_model("nope", {}), std::invalid_argument);
    CHECK_THROWS_AS(conformal(2), std::invalid_argument);
}

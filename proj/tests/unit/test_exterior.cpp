#include <doctest.h>

#include "cartan/exterior.hpp"
#include "helpers.hpp"

#include <random>

using namespace cartan;
using testing_support::random_form;
using testing_support::random_graded_form;

namespace {

// sl2 globals: f = 0 (minus), h = 1 (zero), e = 2 (plus)
constexpr int F = 0, H = 1, E = 2;

Form gen(int g) { return Form::generator(g); }

}  // namespace

TEST_CASE("wedge sign rules") {
    Form w = gen(0), x = gen(2), w2 = gen(1), x2 = gen(3);
    CHECK(wedge(w, w).is_zero());
    CHECK(wedge(w, x) == -wedge(x, w));
    Form a = wedge(w, x), b = wedge(w2, x2);
    CHECK(wedge(a, b) == wedge(b, a));
    CHECK(wedge(gen(3), gen(1)) == -Form::monomial(Monomial::of({1, 3}), TauScalar(1)));
    CHECK(wedge_sign(Monomial::of({0, 2}), Monomial::of({1})) == -1);
    CHECK(wedge_sign(Monomial::of({0}), Monomial::of({0})) == 0);
}

TEST_CASE("wedge is associative and graded commutative on random forms") {
    auto b = projective(2);
    std::mt19937 rng(3);
    for (int t = 0; t < 40; ++t) {
        Form a = random_form(b.model, rng, 1 + t % 3, 4), c = random_form(b.model, rng, 2, 3), d = random_form(b.model, rng, 1, 3);
        CHECK(wedge(wedge(a, c), d) == wedge(a, wedge(c, d)));
        int sign = ((1 + t % 3) % 2) ? -1 : 1;  // deg a * deg d parity with deg d = 1
        CHECK(wedge(a, d) == wedge(d, a) * Rational(sign));
    }
}

TEST_CASE("ce differential on sl2") {
    auto b = sl2_model();
    const auto& m = b.model;
    // d eta^h = -chi ^ omega
    CHECK(ce_differential(m, gen(H)) == -wedge(gen(E), gen(F)));
    // d omega = 2 eta^h ^ omega
    CHECK(ce_differential(m, gen(F)) == wedge(gen(H), gen(F)) * Rational(2));
    CHECK(ce_differential(m, gen(E)) == wedge(gen(E), gen(H)) * Rational(2));
}

TEST_CASE("d^2 = 0 and dS^2 = 0 on generators and random forms of every model") {
    std::mt19937 rng(2024);
    for (const auto& [label, bundle] : testing_support::catalogue()) {
        INFO(label);
        const auto& m = bundle.model;
        for (int g = 0; g < m.total_dim(); ++g) {
            Form x = gen(g);
            CHECK(ce_differential(m, ce_differential(m, x)).is_zero());
            Grade gr = natural_grade(m, g);
            Form ds = slovak_d(m, x, gr);
            CHECK(slovak_d(m, ds, Grade{gr.p, gr.q, gr.r + 1}).is_zero());
        }
        for (int t = 0; t < 100; ++t) {
            Form x = random_form(m, rng, 1 + t % 3, 3);
            CHECK(ce_differential(m, ce_differential(m, x)).is_zero());
            Grade g{t % 2, (t / 2) % 2, (t / 4) % 2};
            if (g.p > m.dim(Part::Minus) || g.q > m.dim(Part::Zero) || g.r > m.dim(Part::Plus)) continue;
            Form y = random_graded_form(m, rng, g, 3);
            Form dy = slovak_d(m, y, g);
            CHECK(dy.at_grade(m.layout(), Grade{g.p, g.q, g.r + 1}));
            CHECK(slovak_d(m, dy, Grade{g.p, g.q, g.r + 1}).is_zero());
        }
    }
}

TEST_CASE("Leibniz rule for d") {
    auto b = conformal(3);
    const auto& m = b.model;
    std::mt19937 rng(5);
    for (int t = 0; t < 30; ++t) {
        int da = 1 + t % 2;
        Form a = random_form(m, rng, da, 3), c = random_form(m, rng, 2, 3);
        Form lhs = ce_differential(m, wedge(a, c));
        Form rhs = wedge(ce_differential(m, a), c) + wedge(a, ce_differential(m, c)) * Rational(da % 2 ? -1 : 1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("dS examples") {
    auto p1 = projective(1);
    const auto& m = p1.model;
    // w (minus) = 0, w1_1 (zero) = 1, wb (plus) = 2
    Form eta = gen(1);
    CHECK_FALSE(slovak_d(m, eta, Grade{0, 1, 0}).is_zero());
    CHECK(slovak_d(m, gen(0), Grade{1, 0, 0}).is_zero());
    CHECK_THROWS_AS(slovak_d(m, gen(0), Grade{0, 0, 1}), GradeMismatch);
    // top plus count
    CHECK(slovak_d(m, wedge(gen(0), gen(2)), Grade{1, 0, 1}).is_zero());

    auto s = sl2_model();
    CHECK(slovak_d(s.model, gen(H), Grade{0, 1, 0}) == -wedge(gen(E), gen(F)));
}

TEST_CASE("g2 dS pattern on w3 and v7") {
    auto b = g2_flag();
    const auto& m = b.model;
    auto at = [&](const char* n) { return m.index_of(n); };
    Form d3 = slovak_d(m, gen(at("w3")), Grade{1, 0, 0});
    REQUIRE(d3.size() == 2);
    CHECK(d3.terms().count(Monomial::of({at("w1"), at("v5")})) == 1);
    CHECK(d3.terms().count(Monomial::of({at("w2"), at("v6")})) == 1);
    Form d7 = slovak_d(m, gen(at("v7")), Grade{0, 0, 1});
    REQUIRE(d7.size() == 1);
    CHECK(d7.terms().count(Monomial::of({at("v5"), at("v6")})) == 1);
    CHECK(slovak_d(m, gen(at("w1")), Grade{1, 0, 0}).is_zero());
    CHECK(slovak_d(m, gen(at("w2")), Grade{1, 0, 0}).is_zero());
}

TEST_CASE("coadjoint action on sl2") {
    auto b = sl2_model();
    const auto& m = b.model;
    CHECK(coadjoint_action(m, H, gen(H)).is_zero());
    CHECK(coadjoint_action(m, H, gen(E)) == gen(E) * Rational(-2));
    CHECK(coadjoint_action(m, H, gen(F)) == gen(F) * Rational(2));
    CHECK(coadjoint_action(m, H, wedge(gen(F), gen(E))).is_zero());
}

TEST_CASE("coadjoint action is a derivation commuting with d and dS") {
    std::mt19937 rng(9);
    for (auto bundle : {projective(2), conformal(3), g2_flag()}) {
        const auto& m = bundle.model;
        for (int t = 0; t < 20; ++t) {
            int u = m.global(Part::Zero, t % m.dim(Part::Zero));
            Form a = random_form(m, rng, 1, 2), c = random_form(m, rng, 2, 2);
            CHECK(coadjoint_action(m, u, wedge(a, c)) ==
                  wedge(coadjoint_action(m, u, a), c) + wedge(a, coadjoint_action(m, u, c)));
            Form x = random_form(m, rng, 2, 3);
            CHECK(coadjoint_action(m, u, ce_differential(m, x)) == ce_differential(m, coadjoint_action(m, u, x)));
            Grade g{1, 0, 1};
            Form y = random_graded_form(m, rng, g, 3);
            CHECK(coadjoint_action(m, u, slovak_d(m, y, g)) == slovak_d(m, coadjoint_action(m, u, y), g));
        }
    }
}

TEST_CASE("invariant basis examples") {
    auto p1 = projective(1);
    const auto& m = p1.model;
    auto b2 = invariant_basis(m, 2, 1, 1);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0].size() == 1);
    CHECK(b2[0].terms().count(Monomial::of({0, 2})) == 1);
    auto b1 = invariant_basis(m, 1, 0, 0);
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].terms().count(Monomial::of({1})) == 1);
    auto b0 = invariant_basis(m, 0, 0, 0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0] == Form::constant(TauScalar(1)));
    // every basis element is annihilated by g0
    auto g2 = g2_flag();
    for (const auto& f : invariant_basis(g2.model, 3, 1, 1))
        for (int i = 0; i < g2.model.dim(Part::Zero); ++i)
            CHECK(coadjoint_action(g2.model, g2.model.global(Part::Zero, i), f).is_zero());
}

TEST_CASE("enumerate monomials respects the grade constraints") {
    auto b = projective(2);
    const auto& m = b.model;
    auto mons = enumerate_monomials(m, 3, 1, 1);
    for (Monomial x : mons) {
        CHECK(x.degree() == 3);
        CHECK(x.count_in(m.layout().plus) == 1);
        CHECK(x.count_in(m.layout().minus) >= 1);
    }
    // 2 plus choices * (C(2,2)*C(4,0) + C(2,1)*C(4,1))
    CHECK(mons.size() == 2 * (1 + 2 * 4));
}

TEST_CASE("dS of a (p,q,0) form vanishes iff g+ annihilates it") {
    std::mt19937 rng(17);
    for (auto bundle : {projective(2), foliated_projective(1, 1)}) {
        const auto& m = bundle.model;
        auto plus_kills = [&](const Form& f) {
            for (int i = 0; i < m.dim(Part::Plus); ++i) {
                Form img = coadjoint_action(m, m.global(Part::Plus, i), f).plus_component(m.layout(), 0);
                if (!img.is_zero()) return false;
            }
            return true;
        };
        for (Grade g : {Grade{1, 0, 0}, Grade{2, 0, 0}, Grade{1, 1, 0}}) {
            for (const auto& f : invariant_basis(m, g.degree(), 0, g.p)) {
                if (!f.at_grade(m.layout(), g)) continue;
                CHECK(slovak_d(m, f, g).is_zero() == plus_kills(f));
            }
            for (int t = 0; t < 10; ++t) {
                Form f = random_graded_form(m, rng, g, 2);
                CHECK(slovak_d(m, f, g).is_zero() == plus_kills(f));
            }
        }
    }
}

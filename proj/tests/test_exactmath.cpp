#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multisym/error.hpp"
#include "multisym/linalg.hpp"
#include "multisym/poly.hpp"
#include "multisym/poly_io.hpp"
#include "support.hpp"

using namespace multisym;

namespace {

Poly P(const std::string& s) { return parse_poly(s); }

}  // namespace

TEST_CASE("rationals stay normalized") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(3, -6).str() == "-1/2");
    CHECK(Rat(0, 5).str() == "0");
    CHECK(Rat(0, 5).denominator() == 1);
    CHECK(Rat::parse(" -10/4 ") == Rat(-5, 2));
    CHECK((Rat(1, 2) + Rat(1, 3)) == Rat(5, 6));
    CHECK(factorial(5) == Rat(120));
    CHECK_THROWS_AS(Rat(1) / Rat(0), Error);
    CHECK_THROWS_AS(Rat::parse("1/0"), Error);
    CHECK_THROWS_AS(Rat::parse("1.5"), Error);
}

TEST_CASE("add and mul examples") {
    CHECK(P("x + y") + P("-x") == P("y"));
    CHECK(Poly() + P("x*y - 3") == P("x*y - 3"));
    CHECK(P("1/2*x") + P("1/3*x") == P("5/6*x"));
    CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
    CHECK((P("x^3 + 2") * Poly()).terms().empty());
    // hand expansion of (x1 + x2)^2
    const Poly sq = P("x1 + x2") * P("x1 + x2");
    CHECK(sq.terms().size() == 3);
    CHECK(sq.coefficient(Mono(Var::intern("x1")) * Mono(Var::intern("x2"))) == Rat(2));
    CHECK(sq == P("x1^2 + 2*x1*x2 + x2^2"));
}

TEST_CASE("monomial order is graded then lexicographic") {
    const Var x = Var::intern("ord_x"), y = Var::intern("ord_y");
    MonoLess less;
    CHECK(less(Mono(x), Mono(x, 2)));
    CHECK(less(Mono(x) * Mono(y), Mono(x, 2)));
    CHECK(less(Mono(y, 2), Mono(x) * Mono(y)));
    CHECK(render(P("ord_y^2 + ord_x*ord_y + ord_x^2 + 1")) == "ord_x^2 + ord_x*ord_y + ord_y^2 + 1");
}

TEST_CASE("substitute examples") {
    const Var ty = Var::intern("T_y");
    const Poly image = P("z1^2 + z2^2 + z3^2");
    CHECK(substitute(Poly(ty), {{ty, image}}) == image);
    const Var x = Var::intern("x");
    CHECK(substitute(P("x^2"), {{x, Poly(x)}}) == P("x^2"));
    const Var ty3 = Var::intern("T_{y3}");
    const Poly replacement = P("3*S^2 + 3/2*T_{y2}*T_y - 1/2*T_y^3");
    CHECK(substitute(Poly(ty3), {{ty3, replacement}}) == replacement);
    // unmapped variables pass through
    CHECK(substitute(P("x*w + w"), {{x, P("2")}}) == P("3*w"));
}

TEST_CASE("eval examples") {
    const Var x1 = Var::intern("x1"), x2 = Var::intern("x2"), x3 = Var::intern("x3");
    const Poly s = P("x1 + x2 + x3");
    CHECK(eval(s, {{x1, Rat(0)}, {x2, Rat(0)}, {x3, Rat(0)}}) == Rat(0));
    CHECK(eval(s, {{x1, Rat(2)}, {x2, Rat(2)}, {x3, Rat(2)}}) == Rat(6));
    const Var z1 = Var::intern("z1"), z2 = Var::intern("z2"), z3 = Var::intern("z3");
    CHECK(eval(P("z1*z2*z3"), {{z1, Rat(1)}, {z2, Rat(0)}, {z3, Rat(0)}}) == Rat(0));
    try {
        eval(s, {{x1, Rat(1)}});
        FAIL("expected MissingVariable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MissingVariable);
    }
}

TEST_CASE("rref_nullspace examples") {
    auto identity = RatMatrix::Identity(3, 3).eval();
    auto r = rref_nullspace(identity);
    CHECK(r.rank == 3);
    CHECK(r.basis.empty());

    RatMatrix ones(2, 2);
    ones << Rat(1), Rat(1), Rat(1), Rat(1);
    r = rref_nullspace(ones);
    CHECK(r.rank == 1);
    REQUIRE(r.basis.size() == 1);
    CHECK(r.basis[0](0) == -r.basis[0](1));

    RatMatrix m(2, 3);
    m << Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6);
    r = rref_nullspace(m);
    CHECK(r.rank == 2);
    REQUIRE(r.basis.size() == 1);
    // proportional to (1, -2, 1)
    const auto& v = r.basis[0];
    CHECK(v(1) == Rat(-2) * v(0));
    CHECK(v(2) == v(0));
}

TEST_CASE("property: nullspace vectors are annihilated and rank-nullity holds") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dim(1, 6), zero(0, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = dim(rng), cols = dim(rng);
        RatMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = zero(rng) == 0 ? Rat(0) : testsupport::random_rat(rng);
        // duplicate a row now and then to force dependencies
        if (rows > 1 && trial % 3 == 0) m.row(rows - 1) = m.row(0);
        const auto r = rref_nullspace(m);
        CHECK(r.rank + r.basis.size() == static_cast<std::size_t>(cols));
        for (const auto& v : r.basis) {
            const RatVector image = m * v;
            for (int i = 0; i < rows; ++i) CHECK(image(i).is_zero());
        }
        // the sparse echelon agrees on the rank
        SparseEchelon echelon;
        for (int i = 0; i < rows; ++i) {
            SparseVector row;
            for (int j = 0; j < cols; ++j)
                if (!m(i, j).is_zero()) row.emplace(static_cast<std::uint32_t>(j), m(i, j));
            echelon.insert(row);
        }
        CHECK(echelon.rank() == r.rank);
    }
}

TEST_CASE("sparse echelon records dependencies") {
    SparseEchelon e(true);
    CHECK(e.insert({{0, Rat(1)}, {1, Rat(2)}}));
    CHECK(e.insert({{1, Rat(1)}}));
    CHECK_FALSE(e.insert({{0, Rat(2)}, {1, Rat(7)}}));
    REQUIRE(e.dependencies().size() == 1);
    // 2*v0 + 3*v1 - v2 = 0, up to scale
    const auto& dep = e.dependencies()[0];
    const Rat scale = dep.at(2);
    CHECK(dep.at(0) == Rat(-2) * scale);
    CHECK(dep.at(1) == Rat(-3) * scale);
    CHECK(e.in_span({{0, Rat(1)}}));
    CHECK_FALSE(e.in_span({{2, Rat(1)}}));
}

TEST_CASE("property: ring axioms on random polynomials") {
    std::mt19937_64 rng(5);
    const std::vector<Var> vars{Var::intern("a"), Var::intern("b"), Var::intern("c")};
    for (int trial = 0; trial < 100; ++trial) {
        const Poly p = testsupport::random_poly(rng, vars), q = testsupport::random_poly(rng, vars),
                   r = testsupport::random_poly(rng, vars);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        CHECK(p + q == q + p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p - p).terms().empty());
        for (const auto& [m, c] : (p * q).terms()) CHECK_FALSE(c.is_zero());
        // rebuilding term by term changes nothing
        Poly rebuilt;
        for (const auto& [m, c] : p.terms()) rebuilt.add_term(m, c);
        CHECK(rebuilt == p);
    }
}

TEST_CASE("property: substitution is a homomorphism and commutes with eval") {
    std::mt19937_64 rng(6);
    const std::vector<Var> vars{Var::intern("a"), Var::intern("b")};
    const std::vector<Var> targets{Var::intern("u"), Var::intern("v")};
    for (int trial = 0; trial < 60; ++trial) {
        const Poly p = testsupport::random_poly(rng, vars), q = testsupport::random_poly(rng, vars);
        Substitution sigma{{vars[0], testsupport::random_poly(rng, targets, 3, 2)},
                           {vars[1], testsupport::random_poly(rng, targets, 3, 2)}};
        CHECK(substitute(p + q, sigma) == substitute(p, sigma) + substitute(q, sigma));
        CHECK(substitute(p * q, sigma) == substitute(p, sigma) * substitute(q, sigma));

        Point point{{targets[0], testsupport::random_rat(rng)}, {targets[1], testsupport::random_rat(rng)}};
        Point composed{{vars[0], eval(sigma.at(vars[0]), point)}, {vars[1], eval(sigma.at(vars[1]), point)}};
        CHECK(eval(substitute(p, sigma), point) == eval(p, composed));
    }
}

TEST_CASE("parse and render") {
    CHECK(P("x1 + x2 + x3") == Poly(Var::intern("x1")) + Poly(Var::intern("x2")) + Poly(Var::intern("x3")));
    const Poly p = P("1/2*x^2 - 3*y");
    CHECK(p.terms().size() == 2);
    CHECK(render(p) == "1/2*x^2 - 3*y");
    // leading monomial first: degree 3 before degree 1
    CHECK(render(P("- 2*T_{x3} - T_x^3")) == "-T_x^3 - 2*T_{x3}");
    CHECK(render(Poly()) == "0");
    CHECK(P(" 2 * x * x ") == P("2*x^2"));
    CHECK(P("-3/6") == Poly(Rat(-1, 2)));

    for (const char* bad : {"x^^2", "x +", "2/0*x", "x^0", "*x", "x y"}) {
        try {
            P(bad);
            FAIL("accepted " << bad);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Syntax);
        }
    }
    try {
        parse_poly("x + q", VariableContext::only({"x"}));
        FAIL("accepted q");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownVariable);
        CHECK(std::string(e.what()).find('q') != std::string::npos);
    }
}

TEST_CASE("property: parse inverts render") {
    std::mt19937_64 rng(7);
    const std::vector<Var> vars{Var::intern("x"), Var::intern("y"), Var::intern("T_{x2y}"), Var::intern("x_{12}")};
    for (int trial = 0; trial < 200; ++trial) {
        const Poly p = testsupport::random_poly(rng, vars, 5, 5);
        CHECK(parse_poly(render(p)) == p);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multisym/error.hpp"
#include "multisym/poly_io.hpp"
#include "multisym/syzygy.hpp"
#include "multisym/trace.hpp"
#include "support.hpp"

using namespace multisym;

namespace {

const BasedAlgebra kx = BasedAlgebra::polynomial(1);
const BasedAlgebra kxy = BasedAlgebra::polynomial(2);
const BasedAlgebra kxz = BasedAlgebra::polynomial(2, {"x", "z"});

Poly P(const std::string& s) { return parse_poly(s); }

// Tr^π by explicit index sums: for a cycle (i1 ... id),
// Tr(Y_i1 ⋯ Y_id) = Σ_{a1..ad} Y_i1[a1,a2] Y_i2[a2,a3] ⋯ Y_id[ad,a1]
Poly trace_word_by_indices(const Perm& pi, const std::vector<MatrixPoly>& ys) {
    const auto n = static_cast<unsigned>(ys.front().rows());
    Poly total(1);
    for (const auto& cycle : pi.cycles()) {
        const std::size_t d = cycle.size();
        std::vector<unsigned> idx(d, 0);
        Poly trace;
        while (true) {
            Poly term(1);
            for (std::size_t s = 0; s < d; ++s) term *= ys[cycle[s]](idx[s], idx[(s + 1) % d]);
            trace += term;
            std::size_t pos = 0;
            while (pos < d && ++idx[pos] == n) idx[pos++] = 0;
            if (pos == d) break;
        }
        total *= trace;
    }
    return total;
}

Perm inverse(const Perm& p) {
    std::vector<unsigned> image(p.size());
    for (unsigned i = 0; i < p.size(); ++i) image[p(i)] = i;
    return Perm(image);
}

}  // namespace

TEST_CASE("permutations") {
    const Perm c = Perm::cycle(3, {1, 2, 3});
    CHECK(c(0) == 1);
    CHECK(c(2) == 0);
    CHECK(c.sign() == 1);
    CHECK(Perm::cycle(4, {1, 2}).sign() == -1);
    CHECK(Perm::cycle(4, {2, 4}).cycles() == std::vector<std::vector<unsigned>>{{0}, {1, 3}, {2}});
    CHECK(all_permutations(4).size() == 24);
    CHECK((c * inverse(c)) == Perm::identity(3));
    CHECK_THROWS_AS(Perm({0, 0, 1}), Error);
    int sign_sum = 0;
    for (const auto& p : all_permutations(5)) sign_sum += p.sign();
    CHECK(sign_sum == 0);
}

TEST_CASE("trace_word examples") {
    const auto ys = generic_matrices(2, 2);
    const Poly tr1 = ys[0].trace(), tr2 = ys[1].trace();
    CHECK(trace_word<Poly>(Perm::identity(2), ys) == tr1 * tr2);
    CHECK(trace_word<Poly>(Perm::cycle(2, {1, 2}), ys) == (ys[0] * ys[1]).trace());
    const std::vector<RatMatrix> ids(3, RatMatrix::Identity(3, 3));
    CHECK(trace_word<Rat>(Perm::cycle(3, {1, 2, 3}), ids) == Rat(3));
    try {
        trace_word<Poly>(Perm::identity(3), ys);
        FAIL("expected SizeMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SizeMismatch);
    }
}

TEST_CASE("trace_word matches explicit index sums") {
    for (unsigned n = 1; n <= 2; ++n) {
        const auto ys = generic_matrices(n, 3);
        for (const auto& pi : all_permutations(3)) CHECK(trace_word<Poly>(pi, ys) == trace_word_by_indices(pi, ys));
    }
}

TEST_CASE("property: trace_word is invariant under relabelling") {
    // Tr^π(Y) = Tr^{σπσ^-1}(Y ∘ σ^-1): covers rotation inside cycles and reordering of cycles
    std::mt19937_64 rng(41);
    const auto generic = generic_matrices(2, 4);
    for (int trial = 0; trial < 20; ++trial) {
        const Perm pi = testsupport::random_perm(rng, 4), sigma = testsupport::random_perm(rng, 4);
        std::vector<MatrixPoly> relabelled(4);
        for (unsigned i = 0; i < 4; ++i) relabelled[sigma(i)] = generic[i];
        CHECK(trace_word<Poly>(pi, generic) == trace_word<Poly>(sigma * pi * inverse(sigma), relabelled));
    }
}

TEST_CASE("fundamental identity") {
    for (unsigned n = 1; n <= 2; ++n) {
        const auto ys = generic_matrices(n, n + 1);
        CHECK(fundamental_identity<Poly>(n, std::span<const MatrixPoly>(ys)).terms().empty());
        // the same sum built from the index-sum oracle
        Poly total;
        for (const auto& pi : all_permutations(n + 1)) total += trace_word_by_indices(pi, ys) * Rat(pi.sign());
        CHECK(total.terms().empty());
    }
    // n = 1 by hand: Tr(Y1)Tr(Y2) - Tr(Y1 Y2) for 1x1 matrices
    const auto ys = generic_matrices(1, 2);
    CHECK(ys[0](0, 0) * ys[1](0, 0) - (ys[0] * ys[1]).trace() == Poly());

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<RatMatrix> rs;
        for (int i = 0; i < 5; ++i) rs.push_back(random_rational_matrix(4, rng));
        CHECK(fundamental_identity<Rat>(4, std::span<const RatMatrix>(rs)).is_zero());
        // too few matrices: the identity for 4x4 needs five
        rs.pop_back();
        CHECK_THROWS_AS(fundamental_identity<Rat>(4, std::span<const RatMatrix>(rs)), Error);
    }
    // the n = 2 identity fails for 3x3 matrices
    std::vector<RatMatrix> big;
    for (int i = 0; i < 3; ++i) big.push_back(random_rational_matrix(3, rng));
    Rat sum(0);
    for (const auto& pi : all_permutations(3)) sum += trace_word<Rat>(pi, big) * Rat(pi.sign());
    CHECK_FALSE(sum.is_zero());
}

TEST_CASE("generic matrices") {
    auto count_vars = [](const std::vector<MatrixPoly>& ms) {
        std::set<Var> vars;
        for (const auto& m : ms)
            for (Eigen::Index i = 0; i < m.rows(); ++i)
                for (Eigen::Index j = 0; j < m.cols(); ++j)
                    for (Var v : m(i, j).variables()) vars.insert(v);
        return vars.size();
    };
    CHECK(generic_matrices(1, 2).size() == 2);
    CHECK(count_vars(generic_matrices(1, 2)) == 2);
    CHECK(count_vars(generic_matrices(2, 1)) == 4);
    CHECK(count_vars(generic_matrices(3, 2)) == 18);
}

TEST_CASE("random rational matrices stay in range") {
    std::mt19937_64 rng(43);
    const RatMatrix m = random_rational_matrix(6, rng);
    for (Eigen::Index i = 0; i < 6; ++i)
        for (Eigen::Index j = 0; j < 6; ++j) {
            CHECK(abs(m(i, j).numerator()) <= 9);
            CHECK(m(i, j).denominator() <= 9);
        }
    std::mt19937_64 again(43);
    CHECK(random_rational_matrix(6, again) == m);
}

TEST_CASE("diagonal embedding") {
    const auto dx = diagonal_embedding(kx, 2, AlgElement::word(kx.parse_word("x")));
    CHECK(dx(0, 0) == P("x1"));
    CHECK(dx(1, 1) == P("x2"));
    CHECK(dx(0, 1) == Poly());
    AlgElement one;
    one.c0 = Rat(1);
    const auto id = diagonal_embedding(kx, 3, one);
    for (Eigen::Index i = 0; i < 3; ++i)
        for (Eigen::Index j = 0; j < 3; ++j) CHECK(id(i, j) == Poly(i == j ? 1 : 0));
    AlgElement mixed = AlgElement::word(kxz.parse_word("x"));
    mixed += AlgElement::word(kxz.parse_word("z^2"));
    const auto dm = diagonal_embedding(kxz, 3, mixed);
    CHECK(dm(0, 0) == P("x1 + z1^2"));
    CHECK(dm(2, 2) == P("x3 + z3^2"));
    try {
        diagonal_embedding(testsupport::sign_character_algebra(), 2, one);
        FAIL("expected UnsupportedKind");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedKind);
    }
}

TEST_CASE("verify_psi_by_substitution") {
    CHECK(verify_psi_by_substitution(kx, 2, kx.parse_words("x,x,x")));
    CHECK(verify_psi_by_substitution(kxz, 1, kxz.parse_words("x,z")));
    CHECK(verify_psi_by_substitution(kxz, 3, kxz.parse_words("x,x,z,z^2")));
    std::mt19937_64 rng(44);
    const auto pool = basis_words_up_to(kxy, 2);
    for (int trial = 0; trial < 15; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 3);
        CHECK(verify_psi_by_substitution(kxy, n, testsupport::random_words(rng, pool, n + 1)));
    }
    CHECK_THROWS_AS(verify_psi_by_substitution(kx, 2, kx.parse_words("x,x")), Error);
}

TEST_CASE("traces at diagonal embeddings are power sums") {
    for (unsigned n = 1; n <= 3; ++n)
        for (const auto& w : basis_words_up_to(kxy, 4)) CHECK(trace_at_diagonal(kxy, n, w) == to_poly(kxy, power_sum(kxy, n, w)));
}

TEST_CASE("gamma evaluation") {
    RatMatrix a(2, 2), b(2, 2);
    a << Rat(1), Rat(0), Rat(0), Rat(2);
    b << Rat(3), Rat(0), Rat(0), Rat(1, 2);
    const std::vector<RatMatrix> diag{a, b};
    CHECK(gamma_evaluate(kxy, diag, psi(kxy, 2, kxy.parse_words("x,x,y"))).is_zero());
    // T_{x y} ↦ Tr(AB) = 3 + 1 = 4, T_x T_y ↦ 3 * 7/2
    CHECK(gamma_evaluate(kxy, diag, P("T_{xy}")) == Rat(4));
    CHECK(gamma_evaluate(kxy, diag, P("T_x*T_y + 1")) == Rat(23, 2));

    const std::vector<RatMatrix> identity{RatMatrix::Identity(3, 3)};
    CHECK(gamma_evaluate(kx, identity, P("T_x")) == Rat(3));

    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 6; ++trial) {
        const auto point = random_commuting_tuple(3, 2, trial % 2 == 0, rng);
        CHECK(point[0] * point[1] == point[1] * point[0]);
        CHECK(gamma_evaluate(kxy, point, psi(kxy, 3, kxy.parse_words("x,y,xy,x2"))).is_zero());
    }

    RatMatrix c(2, 2);
    c << Rat(0), Rat(1), Rat(0), Rat(0);
    const std::vector<RatMatrix> noncommuting{a, c};
    try {
        gamma_evaluate(kxy, noncommuting, P("T_x"));
        FAIL("expected NotCommuting");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotCommuting);
    }
    const std::vector<RatMatrix> one{a};
    CHECK_THROWS_AS(gamma_evaluate(kxy, one, P("T_x")), Error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "multisym/error.hpp"
#include "multisym/poly_io.hpp"
#include "multisym/s4pairs.hpp"
#include "multisym/syzygy.hpp"
#include "support.hpp"

using namespace multisym;

namespace {

const BasedAlgebra kx = BasedAlgebra::polynomial(1);
const BasedAlgebra kxy = BasedAlgebra::polynomial(2);

std::vector<BasisWord> W(const BasedAlgebra& a, const std::string& words) { return a.parse_words(words); }

// T symbols resolve through the algebra, so parsing by name is enough
FPoly F(const std::string& s) { return parse_poly(s); }

// Bell numbers by the recurrence B(k+1) = Σ C(k, j) B(j)
std::vector<long> bell_numbers(unsigned k_max) {
    std::vector<long> b{1};
    for (unsigned k = 0; k < k_max; ++k) {
        long next = 0, binom = 1;
        for (unsigned j = 0; j <= k; ++j) {
            next += binom * b[j];
            binom = binom * (k - j) / (j + 1);
        }
        b.push_back(next);
    }
    return b;
}

std::vector<std::vector<BasisWord>> multisets_of_size(const std::vector<BasisWord>& pool, std::size_t size, unsigned max_degree) {
    std::vector<std::vector<BasisWord>> out;
    std::vector<BasisWord> current;
    std::function<void(std::size_t, unsigned)> extend = [&](std::size_t start, unsigned degree) {
        if (current.size() == size) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            if (degree + pool[i].degree > max_degree) continue;
            current.push_back(pool[i]);
            extend(i, degree + pool[i].degree);
            current.pop_back();
        }
    };
    extend(0, 0);
    return out;
}

}  // namespace

TEST_CASE("set partitions") {
    const auto one = set_partitions(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].blocks == std::vector<std::vector<unsigned>>{{0}});
    CHECK(set_partitions(3).size() == 5);
    CHECK(set_partitions(5).size() == 52);
    const auto bell = bell_numbers(8);
    for (unsigned k = 1; k <= 8; ++k) {
        const auto parts = set_partitions(k);
        CHECK(static_cast<long>(parts.size()) == bell[k]);
        std::set<std::vector<std::vector<unsigned>>> distinct;
        for (const auto& p : parts) {
            // blocks cover {0..k-1} once, sorted inside and by least element
            std::vector<unsigned> seen;
            for (const auto& b : p.blocks) {
                CHECK(std::is_sorted(b.begin(), b.end()));
                seen.insert(seen.end(), b.begin(), b.end());
            }
            for (std::size_t i = 1; i < p.blocks.size(); ++i) CHECK(p.blocks[i - 1].front() < p.blocks[i].front());
            std::sort(seen.begin(), seen.end());
            CHECK(seen.size() == k);
            for (unsigned i = 0; i < seen.size(); ++i) CHECK(seen[i] == i);
            distinct.insert(p.blocks);
        }
        CHECK(distinct.size() == parts.size());
    }
}

TEST_CASE("linearize") {
    AlgElement one;
    one.c0 = Rat(1);
    CHECK(linearize(kx, 3, one) == FPoly(3));
    const auto kxz = BasedAlgebra::polynomial(2, {"x", "z"});
    CHECK(linearize(kxz, 3, AlgElement::word(kxz.parse_word("x^2"))) == Poly(kxz.t_symbol(kxz.parse_word("x^2"))));
    CHECK(linearize(kx, 2, AlgElement{}) == FPoly());
}

TEST_CASE("psi examples") {
    CHECK(psi(kx, 1, W(kx, "x,x")) == F("T_x^2 - T_{x2}"));
    const FPoly cubic = psi(kx, 2, W(kx, "x,x,x"));
    CHECK(cubic == F("-T_x^3 + 3*T_{x2}*T_x - 2*T_{x3}"));
    CHECK(phi(kx, 2, cubic).is_zero());
    CHECK(phi(kx, 2, FPoly(1)) == Tensor::constant(kx, 2));

    const auto trunc = testsupport::truncated_cubic();
    const auto x = trunc.table_word(0);
    const FPoly truncated = psi(trunc, 2, {x, x, x});
    const Var tx = trunc.t_symbol(x), tx2 = trunc.t_symbol(trunc.table_word(1));
    CHECK(truncated == Poly(Mono(tx, 3), Rat(-1)) + Poly(Mono(tx2) * Mono(tx), Rat(3)));
    CHECK(phi(trunc, 2, truncated).is_zero());

    try {
        psi(kx, 2, W(kx, "x,x"));
        FAIL("expected WrongSize");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::WrongSize);
    }
}

TEST_CASE("phi examples") {
    const auto kxz = BasedAlgebra::polynomial(2, {"x", "z"});
    CHECK(to_poly(kxz, phi(kxz, 3, F("T_x"))) == F("x1 + x2 + x3"));
    try {
        phi(kx, 2, F("q + T_x"));
        FAIL("expected UnknownVariable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownVariable);
    }
}

TEST_CASE("property: psi lies in ker(phi) for small polynomial algebras") {
    for (unsigned n = 1; n <= 2; ++n)
        for (const auto& words : multisets_of_size(basis_words_up_to(kxy, 6), n + 1, 6)) CHECK(kernel_member(kxy, n, psi(kxy, n, words)));
}

TEST_CASE("property: psi on structure-constant algebras") {
    std::mt19937_64 rng(31);
    const auto sign = testsupport::sign_character_algebra();
    const auto trunc = testsupport::truncated_cubic();
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 3);
        CHECK(kernel_member(sign, n, psi(sign, n, testsupport::random_words(rng, {sign.table_word(0)}, n + 1))));
        const auto words = testsupport::random_words(rng, {trunc.table_word(0), trunc.table_word(1)}, n + 1);
        CHECK(kernel_member(trunc, n, psi(trunc, n, words)));
    }
    // x*x = 1 feeds the c0*n term: Ψ_{x,x} = T_x^2 - T_{x·x} = T_x^2 - n
    const auto x = sign.table_word(0);
    CHECK(psi(sign, 1, {x, x}) == Poly(Mono(sign.t_symbol(x), 2)) - FPoly(1));
}

TEST_CASE("property: psi is symmetric and has the expected top coefficient") {
    std::mt19937_64 rng(32);
    const auto pool = basis_words_up_to(kxy, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 3);
        auto words = testsupport::random_words(rng, pool, n + 1);
        const FPoly base = psi(kxy, n, words);
        std::shuffle(words.begin(), words.end(), rng);
        CHECK(psi(kxy, n, words) == base);

        // only the discrete partition yields n+1 factors, so the coefficient of
        // Π T_{w_i} is (-1)^{n+1} whatever the repetitions
        Mono top;
        for (const auto& w : words) top = top * Mono(kxy.t_symbol(w));
        CHECK(base.coefficient(top) == Rat((n + 1) % 2 == 0 ? 1 : -1));
        for (const auto& [m, c] : base.terms()) CHECK(m.degree() <= n + 1);
    }
}

TEST_CASE("rewrite_product examples") {
    CHECK(rewrite_product(kx, 1, make_multiset(W(kx, "x,x"))) == MultisetCoordinates{{make_multiset(W(kx, "x2")), Rat(1)}});
    const auto cubic = rewrite_product(kx, 2, make_multiset(W(kx, "x,x,x")));
    CHECK(cubic == MultisetCoordinates{{make_multiset(W(kx, "x,x2")), Rat(3)}, {make_multiset(W(kx, "x3")), Rat(-2)}});
    // at x1 = x2 = 1: [x]^3 = 8 = 3*[x]*[x2] - 2*[x3] = 3*2*2 - 2*2
    const Var x1 = kx.slot_var(0, 1), x2 = kx.slot_var(0, 2);
    CHECK(eval(to_poly(kx, from_power_product_basis(kx, 2, cubic)), {{x1, Rat(1)}, {x2, Rat(1)}}) == Rat(8));
    const auto short_mu = make_multiset(W(kxy, "x,xy"));
    CHECK(rewrite_product(kxy, 2, short_mu) == MultisetCoordinates{{short_mu, Rat(1)}});
}

TEST_CASE("property: rewriting agrees with direct expansion") {
    std::mt19937_64 rng(33);
    const auto pool = basis_words_up_to(kxy, 2);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 3);
        const auto words = testsupport::random_words(rng, pool, 1 + rng() % 5);
        FPoly product(1);
        for (const auto& w : words) product *= Poly(kxy.t_symbol(w));
        CHECK(rewrite_product(kxy, n, make_multiset(words)) == to_power_product_basis(kxy, phi(kxy, n, product)));
    }
}

TEST_CASE("reduce_long_word") {
    CHECK(reduce_long_word(kx, 2, W(kx, "x,x,x")) == F("-1/2*T_x^3 + 3/2*T_{x2}*T_x"));
    CHECK(reduce_long_word(kx, 1, W(kx, "x,x")) == F("T_x^2"));
    const FPoly mixed = reduce_long_word(kxy, 2, W(kxy, "x,x,y"));
    CHECK(phi(kxy, 2, mixed) == power_sum(kxy, 2, kxy.parse_word("x2y")));
    CHECK(mixed.coefficient(Mono(kxy.t_symbol(kxy.parse_word("x2y")))).is_zero());

    std::mt19937_64 rng(34);
    const auto pool = basis_words_up_to(kxy, 2);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 3);
        const auto words = testsupport::random_words(rng, pool, n + 1);
        AlgElement full;
        full.c0 = Rat(1);
        for (const auto& w : words) full = kxy.product(full, AlgElement::word(w));
        const BasisWord product = full.terms.begin()->first;
        const FPoly g = reduce_long_word(kxy, n, words);
        CHECK(phi(kxy, n, g) == power_sum(kxy, n, product));
        CHECK(g.coefficient(Mono(kxy.t_symbol(product))).is_zero());
    }

    const auto trunc = testsupport::truncated_cubic();
    try {
        reduce_long_word(trunc, 1, {trunc.table_word(1), trunc.table_word(1)});
        FAIL("expected NotAWord");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAWord);
    }
}

TEST_CASE("kernel_member") {
    CHECK(kernel_member(kx, 2, psi(kx, 2, W(kx, "x,x,x"))));
    CHECK_FALSE(kernel_member(kx, 2, F("T_x")));
    std::mt19937_64 rng(35);
    const auto pool = basis_words_up_to(kxy, 2);
    std::vector<Var> symbols;
    for (const auto& w : pool) symbols.push_back(kxy.t_symbol(w));
    for (int trial = 0; trial < 20; ++trial) {
        const FPoly g = testsupport::random_poly(rng, symbols, 3, 2);
        CHECK(kernel_member(kxy, 2, g * psi(kxy, 2, testsupport::random_words(rng, pool, 3))));
    }
}

TEST_CASE("the J relations are syzygies of T^3(K[x,y])") {
    // T_{x^a y^b} name the same symbols in both settings; S2 involves S and is skipped
    for (const auto& r : s4::relation_generators()) {
        if (r.name == "S2") continue;
        CHECK_MESSAGE(kernel_member(kxy, 3, r.poly), r.name);
        // at n = 4 products of at most four brackets are independent
        CHECK_FALSE(kernel_member(kxy, 4, r.poly));
    }
}

TEST_CASE("invariant_space_basis") {
    auto as_set = [](const std::vector<WordMultiset>& v) { return std::set<WordMultiset>(v.begin(), v.end()); };
    auto expected = [&](const BasedAlgebra& a, std::initializer_list<const char*> items) {
        std::set<WordMultiset> out;
        for (const char* s : items) out.insert(make_multiset(a.parse_words(s)));
        return out;
    };
    CHECK(as_set(invariant_space_basis(kxy, 3, 1)) == expected(kxy, {"x", "y"}));
    const auto d2 = invariant_space_basis(kxy, 3, 2);
    CHECK(d2.size() == 6);
    CHECK(as_set(d2) == expected(kxy, {"x,x", "x,y", "y,y", "x2", "xy", "y2"}));
    CHECK(as_set(invariant_space_basis(kx, 2, 3)) == expected(kx, {"x3", "x,x2"}));
    CHECK(invariant_space_basis(kx, 2, 0) == std::vector<WordMultiset>{{}});
    CHECK_THROWS_AS(invariant_space_basis(testsupport::sign_character_algebra(), 2, 1), Error);
}

TEST_CASE("min_generator_report") {
    const auto report = min_generator_report(kxy, 3, 4);
    REQUIRE(report.size() == 5);
    CHECK(report[0].dim == 1);
    CHECK(report[0].indecomposable_count == 0);
    std::vector<std::size_t> counts;
    for (const auto& row : report) counts.push_back(row.indecomposable_count);
    CHECK(counts == std::vector<std::size_t>{0, 2, 3, 4, 0});
    // the witnesses are the nine brackets [w] with deg w <= 3
    std::size_t singles = 0;
    for (const auto& row : report)
        for (const auto& mu : row.witnesses) singles += mu.size() == 1;
    CHECK(singles == 9);

    // Veronese: no indecomposables at or above (n+1)q
    for (unsigned q = 2; q <= 3; ++q)
        for (unsigned n = 1; n <= 2; ++n) {
            const auto ver = BasedAlgebra::veronese(2, q);
            const unsigned bound = (n + 1) * q;
            std::size_t total = 0;
            for (const auto& row : min_generator_report(ver, n, bound + q)) {
                total += row.indecomposable_count;
                if (row.degree >= bound) CHECK(row.indecomposable_count == 0);
            }
            CHECK(total > 0);
        }
    CHECK_THROWS_AS(min_generator_report(testsupport::sign_character_algebra(), 2, 2), Error);
}

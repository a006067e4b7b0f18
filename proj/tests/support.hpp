#pragma once

// Small hand-rolled generators for the property tests.

#include <random>
#include <vector>

#include "multisym/algebra.hpp"
#include "multisym/poly.hpp"
#include "multisym/trace.hpp"

namespace testsupport {

using multisym::Poly;
using multisym::Rat;
using multisym::Var;

inline Rat random_rat(std::mt19937_64& rng, long span = 9) {
    std::uniform_int_distribution<long> num(-span, span), den(1, span);
    return Rat(num(rng), den(rng));
}

inline Poly random_poly(std::mt19937_64& rng, const std::vector<Var>& vars, unsigned max_terms = 4, unsigned max_exp = 3) {
    std::uniform_int_distribution<unsigned> terms(0, max_terms), exp(0, max_exp);
    Poly p;
    const unsigned count = terms(rng);
    for (unsigned t = 0; t < count; ++t) {
        std::vector<multisym::Mono::Factor> factors;
        for (Var v : vars) factors.emplace_back(v, exp(rng) / 2);
        p += Poly(multisym::Mono::from_factors(factors), random_rat(rng));
    }
    return p;
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items) {
    std::uniform_int_distribution<std::size_t> d(0, items.size() - 1);
    return items[d(rng)];
}

inline multisym::Perm random_perm(std::mt19937_64& rng, unsigned k) {
    std::vector<unsigned> image(k);
    for (unsigned i = 0; i < k; ++i) image[i] = i;
    std::shuffle(image.begin(), image.end(), rng);
    return multisym::Perm(image);
}

inline std::vector<multisym::BasisWord> random_words(std::mt19937_64& rng, const std::vector<multisym::BasisWord>& pool,
                                                     std::size_t count) {
    std::vector<multisym::BasisWord> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(pick(rng, pool));
    return out;
}

// {x} with x*x = 1: the group algebra of the order-two group
inline multisym::BasedAlgebra sign_character_algebra() {
    multisym::StructureTable table;
    table[{0, 0}].c0 = Rat(1);
    return multisym::BasedAlgebra::structure_constant({"x"}, table);
}

// K[x]/(x^3) with basis x, x2
inline multisym::BasedAlgebra truncated_cubic() {
    multisym::StructureTable table;
    table[{0, 0}] = multisym::AlgElement::word(multisym::BasisWord{multisym::AlgebraKind::StructureConstant, 2, {1}});
    table[{0, 1}] = multisym::AlgElement{};
    table[{1, 1}] = multisym::AlgElement{};
    return multisym::BasedAlgebra::structure_constant({"x", "x2"}, table, std::vector<unsigned>{1, 2});
}

}  // namespace testsupport

#include "multisym/trace.hpp"

#include <numeric>

#include "multisym/tensor.hpp"

namespace multisym {

Perm::Perm(std::vector<unsigned> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (unsigned v : image_) {
        if (v >= image_.size() || seen[v]) throw Error(ErrorKind::InvalidArgument, "not a permutation");
        seen[v] = true;
    }
}

Perm Perm::identity(unsigned k) {
    std::vector<unsigned> image(k);
    std::iota(image.begin(), image.end(), 0U);
    return Perm(std::move(image));
}

Perm Perm::cycle(unsigned k, const std::vector<unsigned>& one_based_cycle) {
    std::vector<unsigned> image(k);
    std::iota(image.begin(), image.end(), 0U);
    for (std::size_t i = 0; i < one_based_cycle.size(); ++i)
        image.at(one_based_cycle[i] - 1) = one_based_cycle[(i + 1) % one_based_cycle.size()] - 1;
    return Perm(std::move(image));
}

std::vector<std::vector<unsigned>> Perm::cycles() const {
    std::vector<std::vector<unsigned>> out;
    std::vector<bool> seen(image_.size(), false);
    for (unsigned start = 0; start < image_.size(); ++start) {
        if (seen[start]) continue;
        std::vector<unsigned> cycle;
        for (unsigned i = start; !seen[i]; i = image_[i]) {
            seen[i] = true;
            cycle.push_back(i);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

int Perm::sign() const {
    const auto k = image_.size();
    const auto c = cycles().size();
    return (k - c) % 2 == 0 ? 1 : -1;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::SizeMismatch, "permutations of different degree");
    std::vector<unsigned> image(a.size());
    for (unsigned i = 0; i < a.size(); ++i) image[i] = a(b(i));
    return Perm(std::move(image));
}

std::vector<Perm> all_permutations(unsigned k) {
    std::vector<unsigned> image(k);
    std::iota(image.begin(), image.end(), 0U);
    std::vector<Perm> out;
    do {
        out.emplace_back(image);
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

std::vector<MatrixPoly> generic_matrices(unsigned n, unsigned m) {
    if (n == 0 || m == 0) throw Error(ErrorKind::InvalidArgument, "generic matrices need n, m >= 1");
    std::vector<MatrixPoly> out;
    for (unsigned r = 1; r <= m; ++r) {
        MatrixPoly x(n, n);
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = 1; j <= n; ++j)
                x(i - 1, j - 1) = Poly(Var::intern("X" + std::to_string(r) + "_" + std::to_string(i) + "_" + std::to_string(j), 0,
                                                   static_cast<int>(r)));
        out.push_back(std::move(x));
    }
    return out;
}

namespace {

Poly slot_image(const BasedAlgebra& a, unsigned slot, const BasisWord& w) {
    std::vector<Mono::Factor> factors;
    for (std::size_t g = 0; g < w.key.size(); ++g)
        if (w.key[g] > 0) factors.emplace_back(a.slot_var(static_cast<unsigned>(g), slot), w.key[g]);
    return Poly(Mono::from_factors(std::move(factors)));
}

}  // namespace

MatrixPoly diagonal_embedding(const BasedAlgebra& a, unsigned n, const AlgElement& element) {
    if (a.kind() == AlgebraKind::StructureConstant)
        throw Error(ErrorKind::UnsupportedKind, "diagonal embedding needs slot polynomials");
    MatrixPoly out = MatrixPoly::Constant(n, n, Poly());
    for (unsigned i = 0; i < n; ++i) {
        Poly entry(element.c0);
        for (const auto& [w, c] : element.terms) entry += slot_image(a, i + 1, w) * c;
        out(i, i) = entry;
    }
    return out;
}

bool verify_psi_by_substitution(const BasedAlgebra& a, unsigned n, const std::vector<BasisWord>& words) {
    if (words.size() != n + 1) throw Error(ErrorKind::WrongSize, "need exactly n+1 words");
    std::vector<MatrixPoly> diagonals;
    for (const auto& w : words) diagonals.push_back(diagonal_embedding(a, n, AlgElement::word(w)));

    // trace identity grouped by the set partition formed by the cycles
    std::map<std::vector<std::vector<unsigned>>, Poly> by_partition;
    Poly identity_total;
    for (const auto& pi : all_permutations(n + 1)) {
        auto blocks = pi.cycles();
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        std::sort(blocks.begin(), blocks.end());
        Poly term = trace_word<Poly>(pi, diagonals) * Rat(pi.sign());
        by_partition[blocks] += term;
        identity_total += term;
    }

    const Rat top_sign = (n + 1) % 2 == 0 ? Rat(1) : Rat(-1);
    SetPartitions partitions(n + 1);
    while (auto lambda = partitions.next()) {
        FPoly term((lambda->size() % 2 == 0) ? Rat(1) : Rat(-1));
        for (const auto& block : lambda->blocks) {
            AlgElement prod = AlgElement::word(words[block[0]]);
            for (std::size_t i = 1; i < block.size(); ++i) prod = a.product(prod, AlgElement::word(words[block[i]]));
            term *= linearize(a, n, prod) * factorial(static_cast<unsigned>(block.size() - 1));
        }
        Poly expected = to_poly(a, phi(a, n, term)) * top_sign;
        if (!(expected == by_partition[lambda->blocks])) return false;
    }
    Poly syzygy_image = to_poly(a, phi(a, n, psi(a, n, words)));
    return identity_total.is_zero() && syzygy_image.is_zero() && syzygy_image * top_sign == identity_total;
}

Rat gamma_evaluate(const BasedAlgebra& a, std::span<const RatMatrix> point, const FPoly& f) {
    if (a.kind() == AlgebraKind::StructureConstant)
        throw Error(ErrorKind::UnsupportedKind, "gamma evaluation needs a polynomial algebra");
    if (point.size() != a.generator_count())
        throw Error(ErrorKind::SizeMismatch, "need one matrix per algebra generator");
    if (point.empty()) throw Error(ErrorKind::SizeMismatch, "empty point");
    const auto n = point[0].rows();
    for (const auto& m : point)
        if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::SizeMismatch, "matrices must be square of equal size");
    for (std::size_t i = 0; i < point.size(); ++i)
        for (std::size_t j = i + 1; j < point.size(); ++j)
            if (!(point[i] * point[j] == point[j] * point[i]))
                throw Error(ErrorKind::NotCommuting, "matrices " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not commute");

    Point values;
    for (Var v : f.variables()) {
        auto w = a.word_of_symbol(v);
        if (!w) throw Error(ErrorKind::UnknownVariable, v.name() + " is not a presentation symbol of this algebra");
        RatMatrix product = RatMatrix::Identity(n, n);
        for (std::size_t g = 0; g < w->key.size(); ++g)
            for (std::uint32_t e = 0; e < w->key[g]; ++e) product = (product * point[g]).eval();
        values.emplace(v, product.trace());
    }
    return eval(f, values);
}

Poly trace_at_diagonal(const BasedAlgebra& a, unsigned n, const BasisWord& w) {
    MatrixPoly product = MatrixPoly::Identity(n, n);
    for (std::size_t g = 0; g < w.key.size(); ++g) {
        std::vector<std::uint32_t> e(w.key.size(), 0);
        e[g] = 1;
        const MatrixPoly generator = diagonal_embedding(a, n, AlgElement::word(BasisWord{a.kind(), 1, e}));
        for (std::uint32_t k = 0; k < w.key[g]; ++k) product = (product * generator).eval();
    }
    return product.trace();
}

RatMatrix random_rational_matrix(unsigned n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    RatMatrix m(n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            long p = num(rng);
            m(i, j) = Rat(p, den(rng));
        }
    return m;
}

std::vector<RatMatrix> random_commuting_tuple(unsigned n, unsigned m, bool diagonal, std::mt19937_64& rng) {
    std::vector<RatMatrix> out;
    if (diagonal) {
        for (unsigned r = 0; r < m; ++r) {
            RatMatrix d = RatMatrix::Constant(n, n, Rat(0));
            RatMatrix src = random_rational_matrix(n, rng);
            for (unsigned i = 0; i < n; ++i) d(i, i) = src(i, i);
            out.push_back(std::move(d));
        }
        return out;
    }
    const RatMatrix base = random_rational_matrix(n, rng);
    out.push_back(base);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (unsigned r = 1; r < m; ++r) {
        RatMatrix value = RatMatrix::Constant(n, n, Rat(0));
        RatMatrix power = RatMatrix::Identity(n, n);
        for (int k = 0; k <= 2; ++k) {
            value += power * Rat(coeff(rng));
            power = (power * base).eval();
        }
        out.push_back(std::move(value));
    }
    return out;
}

}  // namespace multisym

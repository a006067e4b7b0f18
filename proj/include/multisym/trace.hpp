#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "multisym/algebra.hpp"
#include "multisym/error.hpp"
#include "multisym/linalg.hpp"
#include "multisym/poly.hpp"
#include "multisym/syzygy.hpp"

namespace multisym {

using MatrixPoly = Matrix<Poly>;

/// Permutation of {0..k-1} stored as its image array.
class Perm {
public:
    explicit Perm(std::vector<unsigned> image);
    static Perm identity(unsigned k);
    /// Cycle notation, 1-based: Perm::cycle(3, {1,2,3}) is (123) in S_3.
    static Perm cycle(unsigned k, const std::vector<unsigned>& one_based_cycle);

    unsigned size() const { return static_cast<unsigned>(image_.size()); }
    unsigned operator()(unsigned i) const { return image_.at(i); }
    const std::vector<unsigned>& image() const { return image_; }

    /// Cycles (fixed points included), each starting at its least element,
    /// ordered by least element; cycle (i, π(i), π²(i), …).
    std::vector<std::vector<unsigned>> cycles() const;
    int sign() const;

    friend Perm operator*(const Perm& a, const Perm& b);  // (a*b)(i) = a(b(i))
    friend bool operator==(const Perm&, const Perm&) = default;

private:
    std::vector<unsigned> image_;
};

/// All of S_k in lexicographic order of image arrays.
std::vector<Perm> all_permutations(unsigned k);

/// Tr^π: product over the cycles (i1 … id) of π of Tr(Y(i1)⋯Y(id)).
template <class Scalar>
Scalar trace_word(const Perm& pi, std::span<const Matrix<Scalar>> ys) {
    if (ys.size() != pi.size()) throw Error(ErrorKind::SizeMismatch, "need one matrix per permuted index");
    for (const auto& y : ys)
        if (y.rows() != ys[0].rows() || y.cols() != ys[0].rows())
            throw Error(ErrorKind::SizeMismatch, "matrices must be square of equal size");
    Scalar result(1);
    for (const auto& cycle : pi.cycles()) {
        Matrix<Scalar> product = ys[cycle[0]];
        for (std::size_t i = 1; i < cycle.size(); ++i) product = (product * ys[cycle[i]]).eval();
        result = result * Scalar(product.trace());
    }
    return result;
}

/// Σ_{π∈S_{n+1}} sign(π) Tr^π for n×n matrices Y(1..n+1); vanishes
/// identically over any commutative ring.
template <class Scalar>
Scalar fundamental_identity(unsigned n, std::span<const Matrix<Scalar>> ys) {
    if (ys.size() != n + 1) throw Error(ErrorKind::SizeMismatch, "need n+1 matrices");
    for (const auto& y : ys)
        if (y.rows() != n || y.cols() != n) throw Error(ErrorKind::SizeMismatch, "matrices must be n×n");
    Scalar total(0);
    for (const auto& pi : all_permutations(n + 1)) {
        Scalar term = trace_word<Scalar>(pi, ys);
        if (pi.sign() < 0)
            total = total - term;
        else
            total = total + term;
    }
    return total;
}

/// m generic n×n matrices with fresh variables X{r}_{i}_{j}.
std::vector<MatrixPoly> generic_matrices(unsigned n, unsigned m);

/// diag(a in slot 1, …, a in slot n) over the slot polynomials of T^n(A).
/// Throws UnsupportedKind for structure-constant algebras.
MatrixPoly diagonal_embedding(const BasedAlgebra& a, unsigned n, const AlgElement& element);

/// Checks, partition by partition, that the fundamental trace identity at the
/// diagonal embeddings of the words equals (-1)^{n+1} φ(Ψ), and that both
/// vanish. Throws WrongSize.
bool verify_psi_by_substitution(const BasedAlgebra& a, unsigned n, const std::vector<BasisWord>& words);

/// Value of f under T_w ↦ Tr(w(M_1,…,M_m)) at pairwise commuting matrices.
/// Throws NotCommuting or SizeMismatch.
Rat gamma_evaluate(const BasedAlgebra& a, std::span<const RatMatrix> point, const FPoly& f);

/// Tr(w̃) for the diagonal embedding of the generators; equals [w].
Poly trace_at_diagonal(const BasedAlgebra& a, unsigned n, const BasisWord& w);

/// Random rational matrix: numerators in [-9, 9], denominators in [1, 9].
RatMatrix random_rational_matrix(unsigned n, std::mt19937_64& rng);
/// m commuting random matrices: diagonal when `diagonal`, otherwise
/// (M, p_2(M), …, p_m(M)) for a random M and random polynomials p_i.
std::vector<RatMatrix> random_commuting_tuple(unsigned n, unsigned m, bool diagonal, std::mt19937_64& rng);

}  // namespace multisym

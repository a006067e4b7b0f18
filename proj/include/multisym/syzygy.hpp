#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "multisym/algebra.hpp"
#include "multisym/poly.hpp"
#include "multisym/tensor.hpp"

namespace multisym {

/// Element of the free presentation algebra K[T_w | w ∈ M]: a Poly whose
/// variables are the algebra's T symbols.
using FPoly = Poly;

/// Partition of {0..k-1} into blocks, blocks ordered by least element.
struct SetPartition {
    std::vector<std::vector<unsigned>> blocks;
    std::size_t size() const { return blocks.size(); }
    friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// Enumerates set partitions of {0..k-1} through restricted growth strings.
class SetPartitions {
public:
    explicit SetPartitions(unsigned k);
    /// Next partition, or nullopt when exhausted.
    std::optional<SetPartition> next();

private:
    unsigned k_;
    std::vector<unsigned> growth_;  // growth_[i] = block of element i
    std::vector<unsigned> prefix_max_;
    bool done_ = false;
    bool started_ = false;
};

std::vector<SetPartition> set_partitions(unsigned k);

/// T_a = c0*n + Σ c_w T_w.
FPoly linearize(const BasedAlgebra& a, unsigned n, const AlgElement& element);

/// Master syzygy for a multiset of n+1 words (any order; result symmetric).
/// Throws WrongSize.
FPoly psi(const BasedAlgebra& a, unsigned n, const std::vector<BasisWord>& words);

/// φ: T_w ↦ [w]. Throws UnknownVariable for non-T variables.
Tensor phi(const BasedAlgebra& a, unsigned n, const FPoly& f);

/// Normal form of Π_{w∈mu} [w] in the power-product basis, obtained by
/// repeatedly resolving the first n+1 factors with their syzygy.
MultisetCoordinates rewrite_product(const BasedAlgebra& a, unsigned n, const WordMultiset& mu);

/// Expresses [w_1⋯w_{n+1}] through brackets of proper subproducts by solving
/// the syzygy for its single-block term. Throws NotAWord / WrongSize.
FPoly reduce_long_word(const BasedAlgebra& a, unsigned n, const std::vector<BasisWord>& factors);

bool kernel_member(const BasedAlgebra& a, unsigned n, const FPoly& f);

/// Multisets of height <= n and total degree d: a basis of the degree-d part
/// of T^n(A)^{S_n} (through orbit sums or bracket products).
std::vector<WordMultiset> invariant_space_basis(const BasedAlgebra& a, unsigned n, unsigned d);

struct DegreeGenerators {
    unsigned degree = 0;
    std::size_t dim = 0;
    /// Dimension of (R_+)^2 in this degree; in degree 0 it is set to dim so
    /// that constants never count as generators.
    std::size_t decomposable_dim = 0;
    std::size_t indecomposable_count = 0;
    /// Multisets whose orbit sums complete the decomposables to a basis;
    /// single-word brackets [w] are preferred.
    std::vector<WordMultiset> witnesses;
};

/// Degreewise count of indecomposable invariants for degrees 0..d_max.
std::vector<DegreeGenerators> min_generator_report(const BasedAlgebra& a, unsigned n, unsigned d_max);

}  // namespace multisym

#pragma once

#include <map>
#include <vector>

#include "multisym/algebra.hpp"
#include "multisym/poly.hpp"

namespace multisym {

/// One basis tensor w_1 ⊗ ... ⊗ w_n (unit words in untouched slots).
using SlotTuple = std::vector<BasisWord>;

/// Element of T^n(A): a rational combination of basis tensors.
class Tensor {
public:
    using Terms = std::map<SlotTuple, Rat>;

    explicit Tensor(unsigned power = 1) : power_(power) {}
    /// 1 ⊗ ... ⊗ 1 scaled by c.
    static Tensor constant(const BasedAlgebra& a, unsigned power, const Rat& c = Rat(1));

    unsigned power() const { return power_; }
    const Terms& terms() const& { return terms_; }
    // by value on temporaries, so range-for over f(x).terms() stays valid
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    Rat coefficient(const SlotTuple& t) const;

    void add_term(const SlotTuple& t, const Rat& c);

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor& operator*=(const Rat& c);
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(Tensor a, const Rat& c) { return a *= c; }
    friend bool operator==(const Tensor& a, const Tensor& b) { return a.power_ == b.power_ && a.terms_ == b.terms_; }

private:
    unsigned power_;
    Terms terms_;
};

/// Multiplication in T^n(A) (slotwise products).
Tensor multiply(const BasedAlgebra& a, const Tensor& s, const Tensor& t);

/// Exchanges tensor slots i and j (0-based).
Tensor swap_slots(const Tensor& t, unsigned i, unsigned j);
/// Fixed by all adjacent transpositions, hence by S_n.
bool is_invariant(const Tensor& t);

/// [w] = w⊗1⊗…⊗1 + … + 1⊗…⊗1⊗w
Tensor power_sum(const BasedAlgebra& a, unsigned n, const BasisWord& w);
/// S_n-orbit sum O_mu of w_1⊗…⊗w_r⊗1⊗…⊗1; each orbit element once.
Tensor orbit_sum(const BasedAlgebra& a, unsigned n, const WordMultiset& mu);
/// [w_1]⋯[w_r]; the empty multiset gives 1.
Tensor bracket_product(const BasedAlgebra& a, unsigned n, const WordMultiset& mu);

/// Coefficients indexed by multisets (empty multiset = constant part).
using MultisetCoordinates = std::map<WordMultiset, Rat>;

/// t = Σ c_mu O_mu. Throws NotInvariant.
MultisetCoordinates to_orbit_basis(const BasedAlgebra& a, const Tensor& t);
/// t = Σ c_mu [w_1]⋯[w_r], by descending-height elimination. Throws NotInvariant.
MultisetCoordinates to_power_product_basis(const BasedAlgebra& a, const Tensor& t);

Tensor from_orbit_basis(const BasedAlgebra& a, unsigned n, const MultisetCoordinates& coords);
Tensor from_power_product_basis(const BasedAlgebra& a, unsigned n, const MultisetCoordinates& coords);

/// Slot-variable polynomial of a tensor (polynomial and Veronese kinds),
/// e.g. x⊗1⊗1 ↦ x1.
Poly to_poly(const BasedAlgebra& a, const Tensor& t);
/// Inverse of to_poly; throws NotAWord for monomials outside T^n(A).
Tensor from_poly(const BasedAlgebra& a, unsigned n, const Poly& p);

}  // namespace multisym

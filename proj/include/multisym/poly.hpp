#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multisym/rational.hpp"

namespace multisym {

/// Interned polynomial variable. Variables order by interning order, which is
/// deterministic for a given sequence of calls within one process.
class Var {
public:
    constexpr Var() = default;
    constexpr explicit Var(std::uint32_t id) : id_(id) {}

    /// Interns `name` (insert-if-absent, thread safe).
    static Var intern(std::string_view name);
    /// Interns with structured metadata: the slot of a tensor factor and/or a
    /// generator index (e.g. r in x^{(r)}_{ij}). Zero means "absent".
    static Var intern(std::string_view name, int slot, int index);
    static std::optional<Var> find(std::string_view name);

    std::uint32_t id() const { return id_; }
    const std::string& name() const;
    int slot() const;
    int index() const;

    friend constexpr auto operator<=>(Var, Var) = default;

private:
    std::uint32_t id_ = 0;
};

/// Monomial: sorted (variable, positive exponent) pairs; empty is 1.
class Mono {
public:
    using Factor = std::pair<Var, std::uint32_t>;

    Mono() = default;
    explicit Mono(Var v, std::uint32_t exponent = 1);
    /// Builds from arbitrary factors; merges repeats and drops zero exponents.
    static Mono from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    std::uint32_t degree() const { return degree_; }
    std::uint32_t exponent(Var v) const;
    bool is_one() const { return factors_.empty(); }

    friend Mono operator*(const Mono& a, const Mono& b);
    friend bool operator==(const Mono& a, const Mono& b) { return a.factors_ == b.factors_; }

private:
    std::vector<Factor> factors_;
    std::uint32_t degree_ = 0;
};

/// Graded order, ties broken lexicographically with earlier-interned variables
/// heavier: x^2 > x*y > y^2 when x was interned before y.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

class Poly;
using Substitution = std::map<Var, Poly>;
using Point = std::map<Var, Rat>;

/// Sparse multivariate polynomial with exact rational coefficients.
class Poly {
public:
    using Terms = std::map<Mono, Rat, MonoLess>;

    Poly() = default;
    template <std::integral I>
    Poly(I c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(const Rat& c);          // NOLINT(google-explicit-constructor)
    Poly(Var v);                 // NOLINT(google-explicit-constructor)
    Poly(const Mono& m, const Rat& c = Rat(1));

    const Terms& terms() const& { return terms_; }
    // by value on temporaries, so range-for over f(x).terms() stays valid
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    Rat coefficient(const Mono& m) const;
    Rat constant_term() const { return coefficient(Mono()); }
    bool is_constant() const;
    std::vector<Var> variables() const;

    /// Adds c*m in place.
    void add_term(const Mono& m, const Rat& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    friend Poly operator-(Poly a) { return a *= Rat(-1); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

Poly pow(const Poly& p, unsigned exponent);

/// Ring homomorphism sending each mapped variable to its image; unmapped
/// variables are left unchanged.
Poly substitute(const Poly& p, const Substitution& sigma);

/// Exact value at `point`; throws MissingVariable when a variable is unmapped.
Rat eval(const Poly& p, const Point& point);

}  // namespace multisym

namespace Eigen {
template <>
struct NumTraits<multisym::Poly> : GenericNumTraits<multisym::Poly> {
    using Real = multisym::Poly;
    using NonInteger = multisym::Poly;
    using Literal = multisym::Poly;
    using Nested = multisym::Poly;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 20,
        MulCost = 100,
    };
    // exact scalars: stream output needs no precision setting
    static constexpr int digits10() { return 0; }
};
}  // namespace Eigen

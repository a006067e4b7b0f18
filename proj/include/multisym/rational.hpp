#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace multisym {

/// Exact rational number in lowest terms with positive denominator.
class Rat {
public:
    Rat() = default;

    template <std::integral I>
    Rat(I value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

    Rat(long num, long den);
    explicit Rat(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

    /// Parses "p" or "p/q" (optional sign, surrounding whitespace ignored).
    static Rat parse(std::string_view text);

    const mpq_class& value() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    std::string str() const { return q_.get_str(); }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat factorial(unsigned k);
Rat pow(const Rat& base, unsigned exponent);

}  // namespace multisym

namespace Eigen {
template <>
struct NumTraits<multisym::Rat> : GenericNumTraits<multisym::Rat> {
    using Real = multisym::Rat;
    using NonInteger = multisym::Rat;
    using Literal = multisym::Rat;
    using Nested = multisym::Rat;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 5,
        MulCost = 10,
    };
    // exact scalars: stream output needs no precision setting
    static constexpr int digits10() { return 0; }
};
}  // namespace Eigen

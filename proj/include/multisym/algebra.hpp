#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multisym/poly.hpp"
#include "multisym/rational.hpp"

namespace multisym {

enum class AlgebraKind { Polynomial, Veronese, StructureConstant };

/// An element of the chosen basis {1} ∪ M of a based algebra. The unit is the
/// word with an empty key. Keys are exponent vectors for polynomial and
/// Veronese kinds and a single basis index for structure-constant kinds.
struct BasisWord {
    AlgebraKind kind = AlgebraKind::Polynomial;
    std::uint32_t degree = 0;
    std::vector<std::uint32_t> key;

    static BasisWord unit(AlgebraKind kind) { return BasisWord{kind, 0, {}}; }
    bool is_unit() const { return key.empty(); }

    friend bool operator==(const BasisWord&, const BasisWord&) = default;
    /// Lowest degree first; within a degree, exponent vectors descending
    /// lexicographically (x^2, x*y, y^2) and table indices ascending.
    friend bool operator<(const BasisWord& a, const BasisWord& b);
};

/// c0 + sum of c_w w over basis words.
struct AlgElement {
    Rat c0;
    std::map<BasisWord, Rat> terms;

    static AlgElement word(const BasisWord& w, const Rat& c = Rat(1));
    bool is_zero() const { return c0.is_zero() && terms.empty(); }

    AlgElement& operator+=(const AlgElement& o);
    AlgElement& operator*=(const Rat& c);
    friend bool operator==(const AlgElement&, const AlgElement&) = default;
};

/// Sorted multiset of basis words; its size is the height.
using WordMultiset = std::vector<BasisWord>;

WordMultiset make_multiset(std::vector<BasisWord> words);

/// Multiplication table of a structure-constant algebra: unordered index
/// pairs (i <= j) to the expanded product.
using StructureTable = std::map<std::pair<std::uint32_t, std::uint32_t>, AlgElement>;

/// A commutative algebra with a fixed basis {1} ∪ M.
class BasedAlgebra {
public:
    /// K[x_1..x_m]; M = non-constant monomials. Default names x, y, z for
    /// m <= 3, otherwise x1..xm.
    static BasedAlgebra polynomial(unsigned m, std::vector<std::string> names = {});
    /// q-th Veronese subalgebra of K[x_1..x_m].
    static BasedAlgebra veronese(unsigned m, unsigned q, std::vector<std::string> names = {});
    /// Finite-dimensional algebra given by its multiplication table. The
    /// table is checked for commutativity and associativity over every triple
    /// whose products are present; `degrees` (one per basis element) makes
    /// the algebra graded and is checked against the table.
    static BasedAlgebra structure_constant(std::vector<std::string> basis_names, StructureTable table,
                                           std::optional<std::vector<unsigned>> degrees = std::nullopt);
    /// `poly:m`, `veronese:m:q` or `table:<path>`.
    static BasedAlgebra from_descriptor(std::string_view descriptor);
    /// Parses the JSON table format: {"u,v": {"1": "1/2", "w": 3}, ...},
    /// optionally wrapped as {"table": {...}, "degrees": {"u": 1, ...}}.
    static BasedAlgebra from_table_json(std::string_view json_text);

    AlgebraKind kind() const;
    bool graded() const;
    const std::string& descriptor() const;
    /// Number of polynomial generators (poly kinds) or basis size (table kind).
    unsigned generator_count() const;
    unsigned veronese_q() const;
    const std::vector<std::string>& names() const;

    /// Word for an exponent vector (poly kinds). Throws NotAWord for the zero
    /// vector or, for Veronese, a degree not divisible by q.
    BasisWord word(std::span<const std::uint32_t> exponents) const;
    /// Word by basis index (table kind).
    BasisWord table_word(std::uint32_t index) const;
    /// Parses "x^2*y", the compact "x2y", or a table basis name.
    BasisWord parse_word(std::string_view text) const;
    std::vector<BasisWord> parse_words(std::string_view comma_separated) const;
    /// Compact display name: "x2y" (poly kinds) or the table name.
    std::string word_name(const BasisWord& w) const;

    /// u*v expanded in the basis.
    AlgElement product(const BasisWord& u, const BasisWord& v) const;
    AlgElement product(const AlgElement& a, const AlgElement& b) const;

    std::vector<BasisWord> basis_words_of_degree(unsigned d) const;
    std::vector<BasisWord> basis_words_up_to(unsigned d) const;

    /// Formal symbol T_w of the presentation algebra.
    Var t_symbol(const BasisWord& w) const;
    /// Inverse of t_symbol, for symbols of this algebra (parsed back from the
    /// name, so symbols typed by a user resolve too).
    std::optional<BasisWord> word_of_symbol(Var v) const;

    /// Slot-tagged copy of generator g (0-based) in tensor slot s (1-based);
    /// poly kinds only. Interning order is generator-major.
    Var slot_var(unsigned generator, unsigned slot) const;

private:
    struct Impl;
    explicit BasedAlgebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

std::vector<BasisWord> basis_words_up_to(const BasedAlgebra& a, unsigned d);
AlgElement word_product(const BasedAlgebra& a, const BasisWord& u, const BasisWord& v);

std::string multiset_name(const BasedAlgebra& a, const WordMultiset& mu);

}  // namespace multisym

#include "multisym/algebra.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "multisym/error.hpp"

namespace multisym {

bool operator<(const BasisWord& a, const BasisWord& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.key.size() != b.key.size()) return a.key.size() < b.key.size();
    if (a.kind == AlgebraKind::StructureConstant) return a.key < b.key;
    return b.key < a.key;
}

AlgElement AlgElement::word(const BasisWord& w, const Rat& c) {
    AlgElement e;
    if (c.is_zero()) return e;
    if (w.is_unit())
        e.c0 = c;
    else
        e.terms.emplace(w, c);
    return e;
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
    c0 += o.c0;
    for (const auto& [w, c] : o.terms) {
        auto [it, inserted] = terms.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    return *this;
}

AlgElement& AlgElement::operator*=(const Rat& c) {
    if (c.is_zero()) {
        *this = AlgElement{};
        return *this;
    }
    c0 *= c;
    for (auto& [w, coeff] : terms) coeff *= c;
    return *this;
}

WordMultiset make_multiset(std::vector<BasisWord> words) {
    std::sort(words.begin(), words.end());
    return words;
}

struct BasedAlgebra::Impl {
    AlgebraKind kind = AlgebraKind::Polynomial;
    unsigned m = 0;
    unsigned q = 1;
    std::vector<std::string> names;
    std::string descriptor;
    StructureTable table;
    std::optional<std::vector<unsigned>> degrees;
};

namespace {

std::vector<std::string> default_names(unsigned m) {
    if (m <= 3) {
        static const char* const short_names[] = {"x", "y", "z"};
        return {short_names, short_names + m};
    }
    std::vector<std::string> out;
    for (unsigned i = 1; i <= m; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

bool ends_with_digit(const std::string& s) { return !s.empty() && std::isdigit(static_cast<unsigned char>(s.back())); }

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

// all exponent vectors of total degree d, descending lexicographically
void exponent_vectors(unsigned m, unsigned d, std::vector<std::uint32_t>& prefix,
                      std::vector<std::vector<std::uint32_t>>& out) {
    if (prefix.size() + 1 == m) {
        prefix.push_back(d);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (unsigned e = d + 1; e-- > 0;) {
        prefix.push_back(e);
        exponent_vectors(m, d - e, prefix, out);
        prefix.pop_back();
    }
}

Rat json_rat(const nlohmann::json& v) {
    if (v.is_string()) return Rat::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long>());
    throw Error(ErrorKind::Syntax, "table coefficients must be integers or rational strings");
}

}  // namespace

BasedAlgebra BasedAlgebra::polynomial(unsigned m, std::vector<std::string> names) {
    return veronese(m, 1, std::move(names));
}

BasedAlgebra BasedAlgebra::veronese(unsigned m, unsigned q, std::vector<std::string> names) {
    if (m == 0 || q == 0) throw Error(ErrorKind::InvalidArgument, "variable count and q must be positive");
    if (names.empty()) names = default_names(m);
    if (names.size() != m) throw Error(ErrorKind::InvalidArgument, "need one name per variable");
    auto impl = std::make_shared<Impl>();
    impl->kind = q == 1 ? AlgebraKind::Polynomial : AlgebraKind::Veronese;
    impl->m = m;
    impl->q = q;
    impl->names = std::move(names);
    impl->descriptor = q == 1 ? "poly:" + std::to_string(m) : "veronese:" + std::to_string(m) + ":" + std::to_string(q);
    return BasedAlgebra(impl);
}

BasedAlgebra BasedAlgebra::structure_constant(std::vector<std::string> basis_names, StructureTable table,
                                              std::optional<std::vector<unsigned>> degrees) {
    const auto size = static_cast<std::uint32_t>(basis_names.size());
    if (size == 0) throw Error(ErrorKind::InvalidArgument, "empty basis");
    if (degrees) {
        if (degrees->size() != size) throw Error(ErrorKind::InvalidArgument, "need one degree per basis element");
        for (unsigned d : *degrees)
            if (d == 0) throw Error(ErrorKind::InvalidArgument, "basis degrees must be positive");
    }
    auto impl = std::make_shared<Impl>();
    impl->kind = AlgebraKind::StructureConstant;
    impl->m = size;
    impl->names = std::move(basis_names);
    impl->degrees = std::move(degrees);
    impl->descriptor = "table";

    // re-key words with their degrees, normalise pair order
    auto word_of = [&](std::uint32_t i) {
        return BasisWord{AlgebraKind::StructureConstant, impl->degrees ? (*impl->degrees)[i] : 0U, {i}};
    };
    for (auto& [pair, value] : table) {
        auto [i, j] = pair;
        if (i >= size || j >= size) throw Error(ErrorKind::InvalidArgument, "table index out of range");
        AlgElement fixed;
        fixed.c0 = value.c0;
        for (const auto& [w, c] : value.terms) {
            if (w.key.size() != 1 || w.key[0] >= size) throw Error(ErrorKind::InvalidArgument, "table entry names unknown word");
            fixed.terms.emplace(word_of(w.key[0]), c);
        }
        std::erase_if(fixed.terms, [](const auto& t) { return t.second.is_zero(); });
        const std::pair<std::uint32_t, std::uint32_t> key = std::minmax(i, j);
        if (auto it = impl->table.find(key); it != impl->table.end() && !(it->second == fixed))
            throw Error(ErrorKind::InvalidArgument, "table is not commutative at (" + impl->names[i] + "," + impl->names[j] + ")");
        if (impl->degrees) {
            if (!fixed.c0.is_zero())
                throw Error(ErrorKind::InvalidArgument, "graded table has a constant term in a positive degree product");
            for (const auto& [w, c] : fixed.terms)
                if (w.degree != (*impl->degrees)[i] + (*impl->degrees)[j])
                    throw Error(ErrorKind::InvalidArgument, "table product breaks the grading");
        }
        impl->table[key] = std::move(fixed);
    }

    BasedAlgebra algebra(impl);
    for (std::uint32_t a = 0; a < size; ++a)
        for (std::uint32_t b = 0; b < size; ++b)
            for (std::uint32_t c = 0; c < size; ++c) {
                try {
                    AlgElement left = algebra.product(algebra.product(word_of(a), word_of(b)), AlgElement::word(word_of(c)));
                    AlgElement right = algebra.product(AlgElement::word(word_of(a)), algebra.product(word_of(b), word_of(c)));
                    if (!(left == right))
                        throw Error(ErrorKind::InvalidArgument, "table is not associative at (" + impl->names[a] + "," +
                                                                    impl->names[b] + "," + impl->names[c] + ")");
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::TableMiss) throw;
                }
            }
    return algebra;
}

BasedAlgebra BasedAlgebra::from_table_json(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Syntax, std::string("table JSON: ") + e.what());
    }
    nlohmann::json table_json = doc;
    std::optional<nlohmann::json> degrees_json;
    if (doc.contains("table")) {
        table_json = doc.at("table");
        if (doc.contains("degrees")) degrees_json = doc.at("degrees");
    }
    if (!table_json.is_object()) throw Error(ErrorKind::Syntax, "table must be a JSON object");

    std::vector<std::string> names;
    auto note = [&](const std::string& name) {
        if (name != "1" && std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    };
    for (const auto& [key, value] : table_json.items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) throw Error(ErrorKind::Syntax, "table key '" + key + "' is not \"u,v\"");
        note(trim(std::string_view(key).substr(0, comma)));
        note(trim(std::string_view(key).substr(comma + 1)));
        for (const auto& [w, c] : value.items()) note(trim(w));
    }
    std::sort(names.begin(), names.end());
    auto index_of = [&](const std::string& name) {
        return static_cast<std::uint32_t>(std::find(names.begin(), names.end(), name) - names.begin());
    };

    StructureTable table;
    for (const auto& [key, value] : table_json.items()) {
        auto comma = key.find(',');
        std::string u = trim(std::string_view(key).substr(0, comma));
        std::string v = trim(std::string_view(key).substr(comma + 1));
        if (u == "1" || v == "1") throw Error(ErrorKind::Syntax, "products with 1 are implicit");
        AlgElement product;
        for (const auto& [w, c] : value.items()) {
            std::string name = trim(w);
            Rat coeff = json_rat(c);
            if (name == "1")
                product.c0 += coeff;
            else
                product += AlgElement::word(BasisWord{AlgebraKind::StructureConstant, 0, {index_of(name)}}, coeff);
        }
        const std::uint32_t iu = index_of(u), iv = index_of(v);
        const std::pair<std::uint32_t, std::uint32_t> pair = std::minmax(iu, iv);
        if (auto it = table.find(pair); it != table.end() && !(it->second == product))
            throw Error(ErrorKind::InvalidArgument, "table is not commutative at (" + u + "," + v + ")");
        table[pair] = product;
    }

    std::optional<std::vector<unsigned>> degrees;
    if (degrees_json) {
        degrees.emplace(names.size(), 0);
        for (const auto& [name, d] : degrees_json->items()) {
            auto i = index_of(trim(name));
            if (i >= names.size()) throw Error(ErrorKind::Syntax, "degree given for unknown basis element " + name);
            (*degrees)[i] = d.get<unsigned>();
        }
    }
    return structure_constant(std::move(names), std::move(table), std::move(degrees));
}

BasedAlgebra BasedAlgebra::from_descriptor(std::string_view descriptor) {
    auto fail = [&] {
        throw Error(ErrorKind::InvalidArgument,
                    "algebra descriptor '" + std::string(descriptor) + "' must be poly:m, veronese:m:q or table:<path>");
    };
    auto parse_count = [&](std::string_view s) -> unsigned {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            fail();
        unsigned v = static_cast<unsigned>(std::stoul(std::string(s)));
        if (v == 0) fail();
        return v;
    };
    if (descriptor.starts_with("poly:")) return polynomial(parse_count(descriptor.substr(5)));
    if (descriptor.starts_with("veronese:")) {
        auto rest = descriptor.substr(9);
        auto colon = rest.find(':');
        if (colon == std::string_view::npos) fail();
        return veronese(parse_count(rest.substr(0, colon)), parse_count(rest.substr(colon + 1)));
    }
    if (descriptor.starts_with("table:")) {
        std::string path(descriptor.substr(6));
        std::ifstream in(path);
        if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read table file " + path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return from_table_json(buffer.str());
    }
    fail();
    return polynomial(1);
}

AlgebraKind BasedAlgebra::kind() const { return impl_->kind; }
bool BasedAlgebra::graded() const { return impl_->kind != AlgebraKind::StructureConstant || impl_->degrees.has_value(); }
const std::string& BasedAlgebra::descriptor() const { return impl_->descriptor; }
unsigned BasedAlgebra::generator_count() const { return impl_->m; }
unsigned BasedAlgebra::veronese_q() const { return impl_->q; }
const std::vector<std::string>& BasedAlgebra::names() const { return impl_->names; }

BasisWord BasedAlgebra::word(std::span<const std::uint32_t> exponents) const {
    if (impl_->kind == AlgebraKind::StructureConstant)
        throw Error(ErrorKind::UnsupportedKind, "exponent words need a polynomial or Veronese algebra");
    if (exponents.size() != impl_->m) throw Error(ErrorKind::InvalidArgument, "exponent vector has wrong length");
    const auto degree = std::accumulate(exponents.begin(), exponents.end(), std::uint32_t{0});
    if (degree == 0) throw Error(ErrorKind::NotAWord, "the constant 1 is not a basis word");
    if (degree % impl_->q != 0)
        throw Error(ErrorKind::NotAWord, "degree " + std::to_string(degree) + " is not a multiple of " + std::to_string(impl_->q));
    return BasisWord{impl_->kind, degree, {exponents.begin(), exponents.end()}};
}

BasisWord BasedAlgebra::table_word(std::uint32_t index) const {
    if (impl_->kind != AlgebraKind::StructureConstant)
        throw Error(ErrorKind::UnsupportedKind, "indexed words need a structure-constant algebra");
    if (index >= impl_->m) throw Error(ErrorKind::NotAWord, "basis index out of range");
    return BasisWord{AlgebraKind::StructureConstant, impl_->degrees ? (*impl_->degrees)[index] : 0U, {index}};
}

BasisWord BasedAlgebra::parse_word(std::string_view text) const {
    const std::string s = trim(text);
    const auto& names = impl_->names;
    if (impl_->kind == AlgebraKind::StructureConstant) {
        auto it = std::find(names.begin(), names.end(), s);
        if (it == names.end()) throw Error(ErrorKind::NotAWord, "unknown basis element '" + s + "'");
        return table_word(static_cast<std::uint32_t>(it - names.begin()));
    }
    std::vector<std::uint32_t> exps(impl_->m, 0);
    auto bad = [&] { throw Error(ErrorKind::NotAWord, "cannot parse word '" + s + "'"); };
    auto name_index = [&](std::string_view name) -> std::size_t {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) bad();
        return static_cast<std::size_t>(it - names.begin());
    };
    if (s.find_first_of("^*") != std::string::npos) {
        std::stringstream ss(s);
        std::string factor;
        while (std::getline(ss, factor, '*')) {
            factor = trim(factor);
            auto caret = factor.find('^');
            std::uint32_t e = 1;
            if (caret != std::string::npos) {
                auto digits = trim(std::string_view(factor).substr(caret + 1));
                if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                    bad();
                e = static_cast<std::uint32_t>(std::stoul(digits));
                factor = trim(std::string_view(factor).substr(0, caret));
            }
            exps[name_index(factor)] += e;
        }
        return word(exps);
    }
    // compact form: generator names (longest match first) with optional exponents
    std::size_t pos = 0;
    if (s.empty()) bad();
    while (pos < s.size()) {
        std::size_t best = names.size();
        for (std::size_t g = 0; g < names.size(); ++g)
            if (s.compare(pos, names[g].size(), names[g]) == 0 && (best == names.size() || names[g].size() > names[best].size()))
                best = g;
        if (best == names.size()) bad();
        pos += names[best].size();
        bool want_digits = false;
        if (ends_with_digit(names[best])) {
            if (pos < s.size() && s[pos] == '_') {
                ++pos;
                want_digits = true;
            }
        } else {
            want_digits = pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
        }
        std::uint32_t e = 1;
        if (want_digits) {
            std::size_t digits_start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == digits_start) bad();
            e = static_cast<std::uint32_t>(std::stoul(s.substr(digits_start, pos - digits_start)));
            if (e == 0) bad();
        }
        exps[best] += e;
    }
    return word(exps);
}

std::vector<BasisWord> BasedAlgebra::parse_words(std::string_view comma_separated) const {
    std::vector<BasisWord> out;
    std::stringstream ss{std::string(comma_separated)};
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_word(item));
    return out;
}

std::string BasedAlgebra::word_name(const BasisWord& w) const {
    if (w.is_unit()) return "1";
    if (impl_->kind == AlgebraKind::StructureConstant) return impl_->names.at(w.key.at(0));
    std::string out;
    for (std::size_t g = 0; g < w.key.size(); ++g) {
        if (w.key[g] == 0) continue;
        out += impl_->names[g];
        if (w.key[g] > 1) out += (ends_with_digit(impl_->names[g]) ? "_" : "") + std::to_string(w.key[g]);
    }
    return out;
}

AlgElement BasedAlgebra::product(const BasisWord& u, const BasisWord& v) const {
    if (u.is_unit()) return AlgElement::word(v);
    if (v.is_unit()) return AlgElement::word(u);
    if (impl_->kind == AlgebraKind::StructureConstant) {
        auto it = impl_->table.find(std::minmax(u.key.at(0), v.key.at(0)));
        if (it == impl_->table.end())
            throw Error(ErrorKind::TableMiss, "no product for (" + word_name(u) + "," + word_name(v) + ")");
        return it->second;
    }
    BasisWord w{impl_->kind, u.degree + v.degree, u.key};
    for (std::size_t g = 0; g < w.key.size(); ++g) w.key[g] += v.key[g];
    return AlgElement::word(w);
}

AlgElement BasedAlgebra::product(const AlgElement& a, const AlgElement& b) const {
    AlgElement out;
    out.c0 = a.c0 * b.c0;
    for (const auto& [w, c] : b.terms) out += AlgElement::word(w, a.c0 * c);
    for (const auto& [w, c] : a.terms) out += AlgElement::word(w, b.c0 * c);
    for (const auto& [u, cu] : a.terms)
        for (const auto& [v, cv] : b.terms) {
            AlgElement uv = product(u, v);
            uv *= cu * cv;
            out += uv;
        }
    return out;
}

std::vector<BasisWord> BasedAlgebra::basis_words_of_degree(unsigned d) const {
    if (!graded()) throw Error(ErrorKind::NotGraded, "structure-constant algebra has no grading");
    std::vector<BasisWord> out;
    if (d == 0) return out;
    if (impl_->kind == AlgebraKind::StructureConstant) {
        for (std::uint32_t i = 0; i < impl_->m; ++i)
            if ((*impl_->degrees)[i] == d) out.push_back(table_word(i));
        std::sort(out.begin(), out.end());
        return out;
    }
    if (d % impl_->q != 0) return out;
    std::vector<std::vector<std::uint32_t>> vectors;
    std::vector<std::uint32_t> prefix;
    exponent_vectors(impl_->m, d, prefix, vectors);
    for (const auto& e : vectors) out.push_back(word(e));
    return out;
}

std::vector<BasisWord> BasedAlgebra::basis_words_up_to(unsigned d) const {
    if (!graded()) throw Error(ErrorKind::NotGraded, "structure-constant algebra has no grading");
    std::vector<BasisWord> out;
    for (unsigned k = 1; k <= d; ++k) {
        auto words = basis_words_of_degree(k);
        out.insert(out.end(), words.begin(), words.end());
    }
    return out;
}

Var BasedAlgebra::t_symbol(const BasisWord& w) const {
    if (w.is_unit()) throw Error(ErrorKind::NotAWord, "T_1 is not a presentation symbol");
    std::string name = word_name(w);
    return Var::intern(name.size() == 1 ? "T_" + name : "T_{" + name + "}");
}

std::optional<BasisWord> BasedAlgebra::word_of_symbol(Var v) const {
    std::string_view name = v.name();
    if (!name.starts_with("T_")) return std::nullopt;
    name.remove_prefix(2);
    if (name.starts_with("{") && name.ends_with("}")) name = name.substr(1, name.size() - 2);
    try {
        BasisWord w = parse_word(name);
        if (t_symbol(w) != v) return std::nullopt;
        return w;
    } catch (const Error&) {
        return std::nullopt;
    }
}

Var BasedAlgebra::slot_var(unsigned generator, unsigned slot) const {
    if (impl_->kind == AlgebraKind::StructureConstant)
        throw Error(ErrorKind::UnsupportedKind, "slot variables need a polynomial or Veronese algebra");
    if (generator >= impl_->m) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
    auto name_for = [&](unsigned g, unsigned s) {
        const auto& b = impl_->names[g];
        return b + (ends_with_digit(b) ? "_" : "") + std::to_string(s);
    };
    if (auto found = Var::find(name_for(generator, slot))) return *found;
    for (unsigned g = 0; g < impl_->m; ++g)
        for (unsigned s = 1; s <= slot; ++s) Var::intern(name_for(g, s), static_cast<int>(s), static_cast<int>(g + 1));
    return *Var::find(name_for(generator, slot));
}

std::vector<BasisWord> basis_words_up_to(const BasedAlgebra& a, unsigned d) { return a.basis_words_up_to(d); }

AlgElement word_product(const BasedAlgebra& a, const BasisWord& u, const BasisWord& v) { return a.product(u, v); }

std::string multiset_name(const BasedAlgebra& a, const WordMultiset& mu) {
    std::string out = "{";
    for (std::size_t i = 0; i < mu.size(); ++i) out += (i ? "," : "") + a.word_name(mu[i]);
    return out + "}";
}

}  // namespace multisym

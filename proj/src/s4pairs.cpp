#include "multisym/s4pairs.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "multisym/error.hpp"
#include "multisym/poly_io.hpp"
#include "multisym/tensor.hpp"

namespace multisym::s4 {

namespace {

constexpr std::array<std::pair<unsigned, unsigned>, 6> kPairs{{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

// x_k, z_k pair up (pair, complement): 12|34, 13|24, 14|23
constexpr std::array<std::pair<unsigned, unsigned>, 3> kComplementary{{{0, 5}, {1, 4}, {2, 3}}};

unsigned pair_index(unsigned i, unsigned j) {
    if (i > j) std::swap(i, j);
    for (unsigned k = 0; k < kPairs.size(); ++k)
        if (kPairs[k] == std::make_pair(i, j)) return k;
    throw Error(ErrorKind::InvalidArgument, "not a pair of distinct vertices in 1..4");
}

// permutation of the six pair indices induced by sigma on the vertices
std::array<unsigned, 6> pair_permutation(const Perm& sigma) {
    if (sigma.size() != 4) throw Error(ErrorKind::SizeMismatch, "S_4 acts through permutations of four points");
    std::array<unsigned, 6> out{};
    for (unsigned k = 0; k < 6; ++k) out[k] = pair_index(sigma(kPairs[k].first - 1) + 1, sigma(kPairs[k].second - 1) + 1);
    return out;
}

Mono permute_mono(const Mono& m, const std::array<unsigned, 6>& perm) {
    const auto& vars = pair_vars();
    std::vector<Mono::Factor> factors;
    for (const auto& [v, e] : m.factors()) {
        auto it = std::find(vars.begin(), vars.end(), v);
        factors.emplace_back(vars[perm[static_cast<std::size_t>(it - vars.begin())]], e);
    }
    return Mono::from_factors(std::move(factors));
}

const std::vector<std::array<unsigned, 6>>& all_pair_permutations() {
    static const std::vector<std::array<unsigned, 6>> perms = [] {
        std::vector<std::array<unsigned, 6>> out;
        for (const auto& sigma : all_permutations(4)) out.push_back(pair_permutation(sigma));
        return out;
    }();
    return perms;
}

// all monomials of degree d in the pair variables
std::vector<Mono> pair_monomials(unsigned d) {
    std::vector<Mono> out;
    std::vector<Mono::Factor> factors;
    std::function<void(unsigned, unsigned)> extend = [&](unsigned k, unsigned remaining) {
        if (k == 5) {
            factors.emplace_back(pair_vars()[5], remaining);
            out.push_back(Mono::from_factors(factors));
            factors.pop_back();
            return;
        }
        for (unsigned e = remaining + 1; e-- > 0;) {
            factors.emplace_back(pair_vars()[k], e);
            extend(k + 1, remaining - e);
            factors.pop_back();
        }
    };
    extend(0, d);
    return out;
}

const BasedAlgebra& xy_algebra() {
    static const BasedAlgebra a = BasedAlgebra::polynomial(2, {"x", "y"});
    return a;
}

Poly symbol_image(const PresentationSymbol& s) {
    const auto& xz = xz_vars();
    if (s.is_s) return Poly(xz[3]) * Poly(xz[4]) * Poly(xz[5]);
    const std::uint32_t exps[2] = {s.x_degree, 2 * s.y_degree};
    return to_poly(xz_algebra(), power_sum(xz_algebra(), 3, xz_algebra().word(exps)));
}

const Substitution& phi_map() {
    static const Substitution sigma = [] {
        Substitution out;
        for (const auto& s : presentation_symbols()) out.emplace(s.var, symbol_image(s));
        return out;
    }();
    return sigma;
}

}  // namespace

const std::array<Var, 6>& pair_vars() {
    static const std::array<Var, 6> vars = [] {
        std::array<Var, 6> out;
        for (unsigned k = 0; k < 6; ++k)
            out[k] = Var::intern("x_{" + std::to_string(kPairs[k].first) + std::to_string(kPairs[k].second) + "}");
        return out;
    }();
    return vars;
}

Var pair_var(unsigned i, unsigned j) { return pair_vars()[pair_index(i, j)]; }

const BasedAlgebra& xz_algebra() {
    static const BasedAlgebra a = BasedAlgebra::polynomial(2, {"x", "z"});
    return a;
}

const std::array<Var, 6>& xz_vars() {
    static const std::array<Var, 6> vars = [] {
        const auto& a = xz_algebra();
        return std::array<Var, 6>{a.slot_var(0, 1), a.slot_var(0, 2), a.slot_var(0, 3),
                                  a.slot_var(1, 1), a.slot_var(1, 2), a.slot_var(1, 3)};
    }();
    return vars;
}

RatMatrix xz_change_of_basis() {
    RatMatrix m = RatMatrix::Constant(6, 6, Rat(0));
    for (unsigned k = 0; k < 3; ++k) {
        auto [p, c] = kComplementary[k];
        m(k, p) = Rat(1);
        m(k, c) = Rat(1);
        m(k + 3, p) = Rat(1);
        m(k + 3, c) = Rat(-1);
    }
    return m;
}

Poly to_xz(const Poly& p) {
    static const Substitution sigma = [] {
        Substitution out;
        const auto& xz = xz_vars();
        const Rat half(1, 2);
        for (unsigned k = 0; k < 3; ++k) {
            auto [p, c] = kComplementary[k];
            out.emplace(pair_vars()[p], (Poly(xz[k]) + Poly(xz[k + 3])) * half);
            out.emplace(pair_vars()[c], (Poly(xz[k]) - Poly(xz[k + 3])) * half);
        }
        return out;
    }();
    return substitute(p, sigma);
}

Poly from_xz(const Poly& p) {
    static const Substitution sigma = [] {
        Substitution out;
        const auto& xz = xz_vars();
        for (unsigned k = 0; k < 3; ++k) {
            auto [p, c] = kComplementary[k];
            out.emplace(xz[k], Poly(pair_vars()[p]) + Poly(pair_vars()[c]));
            out.emplace(xz[k + 3], Poly(pair_vars()[p]) - Poly(pair_vars()[c]));
        }
        return out;
    }();
    return substitute(p, sigma);
}

Poly act(const Perm& sigma, const Poly& p) {
    const auto perm = pair_permutation(sigma);
    Substitution pairs;
    for (unsigned k = 0; k < 6; ++k) pairs.emplace(pair_vars()[k], Poly(pair_vars()[perm[k]]));
    Substitution all = pairs;
    for (Var v : xz_vars()) all.emplace(v, to_xz(substitute(from_xz(Poly(v)), pairs)));
    return substitute(p, all);
}

std::vector<Perm> klein_four() {
    return {Perm::identity(4), Perm({1, 0, 3, 2}), Perm({2, 3, 0, 1}), Perm({3, 2, 1, 0})};
}

const std::vector<PresentationSymbol>& presentation_symbols() {
    static const std::vector<PresentationSymbol> symbols = [] {
        const auto& a = xy_algebra();
        const std::array<std::pair<unsigned, unsigned>, 9> words{{{1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {2, 1}, {1, 2}}};
        std::vector<PresentationSymbol> out;
        for (auto [x, y] : words) {
            const std::uint32_t exps[2] = {x, y};
            out.push_back(PresentationSymbol{a.t_symbol(a.word(exps)), x, y, x + 2 * y, false});
        }
        out.push_back(PresentationSymbol{Var::intern("S"), 0, 0, 3, true});
        return out;
    }();
    return symbols;
}

Var symbol(std::string_view name) {
    for (const auto& s : presentation_symbols())
        if (s.var.name() == name) return s.var;
    throw Error(ErrorKind::UnknownVariable, "no presentation symbol " + std::string(name));
}

namespace {

const PresentationSymbol& symbol_info(Var v) {
    for (const auto& s : presentation_symbols())
        if (s.var == v) return s;
    throw Error(ErrorKind::UnknownVariable, v.name() + " is not a presentation symbol");
}

}  // namespace

unsigned weighted_degree(const Mono& m) {
    unsigned d = 0;
    for (const auto& [v, e] : m.factors()) d += symbol_info(v).degree * e;
    return d;
}

bool is_homogeneous(const FPoly& f, unsigned degree) {
    return std::all_of(f.terms().begin(), f.terms().end(), [&](const auto& t) { return weighted_degree(t.first) == degree; });
}

bool is_bihomogeneous(const FPoly& f, unsigned a, unsigned b) {
    for (const auto& [m, c] : f.terms()) {
        unsigned x = 0, y = 0;
        for (const auto& [v, e] : m.factors()) {
            const auto& s = symbol_info(v);
            if (s.is_s) return false;
            x += s.x_degree * e;
            y += s.y_degree * e;
        }
        if (x != a || y != b) return false;
    }
    return true;
}

FPoly swap_xy(const FPoly& f) {
    Substitution sigma;
    for (const auto& s : presentation_symbols()) {
        if (s.is_s) continue;
        for (const auto& t : presentation_symbols())
            if (!t.is_s && t.x_degree == s.y_degree && t.y_degree == s.x_degree) sigma.emplace(s.var, Poly(t.var));
    }
    return substitute(f, sigma);
}

std::vector<Poly> ten_generators() {
    std::vector<Poly> out;
    for (const auto& s : presentation_symbols()) out.push_back(symbol_image(s));
    return out;
}

std::vector<Poly> nine_generators() {
    auto ten = ten_generators();
    ten.erase(ten.begin() + 5);
    return ten;
}

const std::vector<std::string>& nine_generator_names() {
    static const std::vector<std::string> names{"[x]", "[x^2]", "[x^3]", "[z^2]", "[z^4]", "[xz^2]", "[x^2z^2]", "[xz^4]", "z1z2z3"};
    return names;
}

Poly phi(const FPoly& f) {
    for (Var v : f.variables()) symbol_info(v);
    return substitute(f, phi_map());
}

const std::vector<Relation>& relation_generators() {
    static const std::vector<Relation> relations = [] {
        presentation_symbols();
        const std::vector<std::pair<std::string, std::string>> text{
            {"S2", "S^2 - 1/3*T_{y3} + 1/2*T_{y2}*T_y - 1/6*T_y^3"},
            {"J_{3,2}",
             "6*T_{x2y}*T_{xy} - 3*T_{xy2}*T_{x2} - 2*T_{x2y}*T_x*T_y + T_{xy2}*T_x^2 - 4*T_{xy}^2*T_x"
             " + 2*T_{xy}*T_x^2*T_y - 3*T_{x3}*T_{y2} + 4*T_{x2}*T_x*T_{y2} - T_x^3*T_{y2}"
             " + T_{x3}*T_y^2 - T_{x2}*T_x*T_y^2"},
            {"J_{2,3}",
             "6*T_{xy2}*T_{xy} - 3*T_{x2y}*T_{y2} - 2*T_{xy2}*T_x*T_y + T_{x2y}*T_y^2 - 4*T_{xy}^2*T_y"
             " + 2*T_{xy}*T_y^2*T_x - 3*T_{y3}*T_{x2} + 4*T_{y2}*T_y*T_{x2} - T_y^3*T_{x2}"
             " + T_{y3}*T_x^2 - T_{y2}*T_y*T_x^2"},
            {"J_{4,2}",
             "6*T_{x2y}^2 + T_{xy}^2*T_{x2} - 3*T_{xy}^2*T_x^2 - 6*T_{x3}*T_{xy2} + 2*T_{x2}*T_{xy2}*T_x"
             " + 4*T_{x3}*T_{xy}*T_y - 2*T_{x2}*T_{xy}*T_x*T_y + 2*T_{xy}*T_x^3*T_y - 4*T_{x2y}*T_{x2}*T_y"
             " - T_{x2}^2*T_{y2} + T_{x2}^2*T_y^2 + 4*T_{x2}*T_x^2*T_{y2} - T_{x2}*T_x^2*T_y^2"
             " - T_x^4*T_{y2} - 2*T_{x3}*T_x*T_{y2}"},
            {"J_{3,3}",
             "3*T_{x2y}*T_{xy2} - T_{xy}*T_{x2}*T_{y2} + T_{xy}^3 + T_{xy}*T_x^2*T_{y2} - 5*T_{xy}^2*T_x*T_y"
             " - 3*T_{x3}*T_{y3} + 2*T_{xy}*T_{xy2}*T_x + T_{x2}*T_x*T_{y3} - 3*T_{x2}*T_{xy2}*T_y"
             " + 2*T_{x2y}*T_{xy}*T_y + 3*T_{x2}*T_x*T_{y2}*T_y + T_{x3}*T_{y2}*T_y + T_{x2}*T_{xy}*T_y^2"
             " - T_x^3*T_{y2}*T_y + 2*T_x^2*T_{xy}*T_y^2 - T_{x2}*T_x*T_y^3 - 3*T_x*T_{x2y}*T_{y2}"},
            {"J_{2,4}",
             "6*T_{xy2}^2 + T_{xy}^2*T_{y2} - 3*T_{xy}^2*T_y^2 - 6*T_{y3}*T_{x2y} + 2*T_{y2}*T_{x2y}*T_y"
             " + 4*T_{y3}*T_{xy}*T_x - 2*T_{y2}*T_{xy}*T_x*T_y + 2*T_{xy}*T_y^3*T_x - 4*T_{xy2}*T_{y2}*T_x"
             " - T_{y2}^2*T_{x2} + T_{y2}^2*T_x^2 + 4*T_{y2}*T_y^2*T_{x2} - T_{y2}*T_y^2*T_x^2"
             " - T_y^4*T_{x2} - 2*T_{y3}*T_y*T_{x2}"},
        };
        std::set<std::string> names;
        for (const auto& s : presentation_symbols()) names.insert(s.var.name());
        std::vector<Relation> out;
        for (const auto& [name, body] : text) {
            FPoly f = parse_poly(body, VariableContext::only(names));
            unsigned degree = weighted_degree(f.terms().rbegin()->first);
            out.push_back(Relation{name, std::move(f), degree});
        }
        return out;
    }();
    return relations;
}

FPoly eliminate_y3(const FPoly& f) {
    const Var s = symbol("S"), y = symbol("T_y"), y2 = symbol("T_{y2}"), y3 = symbol("T_{y3}");
    Poly image = Poly(Mono(s, 2), Rat(3)) + Poly(Mono(y2) * Mono(y), Rat(3, 2)) + Poly(Mono(y, 3), Rat(-1, 2));
    return substitute(f, Substitution{{y3, image}});
}

std::vector<Relation> y3_free_relations() {
    std::vector<Relation> out;
    for (const auto& r : relation_generators()) {
        if (r.name == "S2") continue;
        out.push_back(Relation{"~" + r.name, eliminate_y3(r.poly), r.degree});
    }
    return out;
}

std::size_t invariant_dim(unsigned d) {
    // Burnside: average number of degree-d monomials fixed by each group element
    mpz_class total = 0;
    for (const auto& perm : all_pair_permutations()) {
        std::vector<unsigned> cycle_lengths;
        std::array<bool, 6> seen{};
        for (unsigned k = 0; k < 6; ++k) {
            if (seen[k]) continue;
            unsigned len = 0;
            for (unsigned i = k; !seen[i]; i = perm[i]) {
                seen[i] = true;
                ++len;
            }
            cycle_lengths.push_back(len);
        }
        // fixed monomials are constant on cycles: count Σ len_c * k_c = d
        std::vector<mpz_class> ways(d + 1, 0);
        ways[0] = 1;
        for (unsigned len : cycle_lengths)
            for (unsigned s = len; s <= d; ++s) ways[s] += ways[s - len];
        total += ways[d];
    }
    return static_cast<std::size_t>(mpz_class(total / 24).get_ui());
}

std::size_t symmetrized_rank(unsigned d) {
    ColumnIndex<Mono, MonoLess> columns;
    SparseEchelon echelon;
    for (const auto& m : pair_monomials(d)) {
        Poly sym;
        for (const auto& perm : all_pair_permutations()) sym.add_term(permute_mono(m, perm), Rat(1));
        SparseVector v;
        for (const auto& [mono, c] : sym.terms()) v.emplace(columns(mono), c);
        echelon.insert(std::move(v));
    }
    return echelon.rank();
}

std::vector<Mono> presentation_monomials(unsigned d) {
    const auto& symbols = presentation_symbols();
    std::vector<Mono> out;
    std::vector<Mono::Factor> factors;
    std::function<void(std::size_t, unsigned)> extend = [&](std::size_t k, unsigned remaining) {
        if (remaining == 0) {
            out.push_back(Mono::from_factors(factors));
            return;
        }
        if (k == symbols.size()) return;
        for (unsigned e = remaining / symbols[k].degree + 1; e-- > 0;) {
            factors.emplace_back(symbols[k].var, e);
            extend(k + 1, remaining - e * symbols[k].degree);
            factors.pop_back();
        }
    };
    extend(0, d);
    std::sort(out.begin(), out.end(), MonoLess());
    return out;
}

std::vector<KernelDegree> kernel_report(unsigned d_max, const std::vector<Relation>& relations) {
    std::map<Mono, Poly, MonoLess> images;
    std::function<const Poly&(const Mono&)> image = [&](const Mono& m) -> const Poly& {
        if (auto it = images.find(m); it != images.end()) return it->second;
        Poly value(1);
        if (!m.is_one()) {
            auto factors = m.factors();
            const Var v = factors.front().first;
            if (--factors.front().second == 0) factors.erase(factors.begin());
            value = image(Mono::from_factors(factors)) * phi_map().at(v);
        }
        return images.emplace(m, std::move(value)).first->second;
    };

    std::vector<KernelDegree> report;
    for (unsigned d = 0; d <= d_max; ++d) {
        KernelDegree row;
        row.degree = d;
        const auto monos = presentation_monomials(d);
        row.monomials = monos.size();

        ColumnIndex<Mono, MonoLess> target;
        SparseEchelon kernel(true);
        for (const auto& m : monos) {
            SparseVector v;
            for (const auto& [tm, c] : image(m).terms()) v.emplace(target(tm), c);
            kernel.insert(std::move(v));
        }
        row.kernel_dim = monos.size() - kernel.rank();
        for (const auto& dep : kernel.dependencies()) {
            FPoly f;
            for (const auto& [i, c] : dep) f.add_term(monos[i], c);
            row.kernel_basis.push_back(std::move(f));
        }

        std::map<Mono, std::uint32_t, MonoLess> column;
        for (std::uint32_t i = 0; i < monos.size(); ++i) column.emplace(monos[i], i);
        auto ideal_rank = [&](std::optional<std::size_t> skip) {
            SparseEchelon ideal;
            for (std::size_t r = 0; r < relations.size(); ++r) {
                if (skip == r || relations[r].degree > d) continue;
                for (const auto& u : presentation_monomials(d - relations[r].degree)) {
                    SparseVector v;
                    const Poly multiple = Poly(u) * relations[r].poly;
                    for (const auto& [m, c] : multiple.terms()) {
                        auto it = column.find(m);
                        if (it == column.end()) throw Error(ErrorKind::InvalidArgument, relations[r].name + " is not homogeneous");
                        v.emplace(it->second, c);
                    }
                    ideal.insert(std::move(v));
                }
            }
            return ideal.rank();
        };
        row.ideal_dim = ideal_rank(std::nullopt);
        row.match = row.ideal_dim == row.kernel_dim;
        for (std::size_t r = 0; r < relations.size(); ++r)
            if (relations[r].degree == d) row.dropped_ideal_dims.emplace_back(relations[r].name, ideal_rank(r));
        report.push_back(std::move(row));
    }
    return report;
}

std::vector<KernelDegree> kernel_report(unsigned d_max) { return kernel_report(d_max, relation_generators()); }

namespace {

// orbit-sum bases of R^{S_4} in each degree, with orbit coordinates
struct PairInvariants {
    struct Degree {
        std::vector<Poly> orbit_sums;
        std::map<Mono, std::uint32_t, MonoLess> representative;  // orbit representative -> orbit id
    };
    std::vector<Degree> degrees;

    explicit PairInvariants(unsigned d_max) {
        for (unsigned d = 0; d <= d_max; ++d) {
            Degree deg;
            std::set<Mono, MonoLess> seen;
            for (const auto& m : pair_monomials(d)) {
                if (seen.count(m)) continue;
                Poly sum;
                for (const auto& perm : all_pair_permutations()) {
                    Mono image = permute_mono(m, perm);
                    if (seen.insert(image).second) sum.add_term(image, Rat(1));
                }
                deg.representative.emplace(m, static_cast<std::uint32_t>(deg.orbit_sums.size()));
                deg.orbit_sums.push_back(std::move(sum));
            }
            degrees.push_back(std::move(deg));
        }
    }

    SparseVector coordinates(unsigned d, const Poly& p) const {
        SparseVector v;
        for (const auto& [m, c] : p.terms())
            if (auto it = degrees[d].representative.find(m); it != degrees[d].representative.end()) v.emplace(it->second, c);
        return v;
    }

    SparseEchelon decomposables(unsigned d) const {
        SparseEchelon echelon;
        for (unsigned e = 1; 2 * e <= d; ++e)
            for (const auto& f : degrees[e].orbit_sums)
                for (const auto& g : degrees[d - e].orbit_sums) echelon.insert(coordinates(d, f * g));
        return echelon;
    }
};

}  // namespace

std::vector<GeneratorDegree> min_generator_report(unsigned d_max) {
    PairInvariants invariants(d_max);
    std::vector<Poly> named;
    for (const auto& g : nine_generators()) named.push_back(from_xz(g));
    std::vector<GeneratorDegree> report;
    for (unsigned d = 1; d <= d_max; ++d) {
        GeneratorDegree row;
        row.degree = d;
        row.dim = invariants.degrees[d].orbit_sums.size();
        SparseEchelon echelon = invariants.decomposables(d);
        row.decomposable_dim = echelon.rank();
        row.indecomposable_count = row.dim - row.decomposable_dim;
        std::size_t named_count = 0;
        for (const auto& g : named) {
            if (static_cast<unsigned>(g.degree()) != d) continue;
            ++named_count;
            echelon.insert(invariants.coordinates(d, g));
        }
        row.named_generators_complete = echelon.rank() == row.dim && named_count == row.indecomposable_count;
        report.push_back(row);
    }
    return report;
}

bool z6_is_decomposable() {
    PairInvariants invariants(6);
    const Poly z6 = from_xz(ten_generators()[5]);
    return invariants.decomposables(6).in_span(invariants.coordinates(6, z6));
}

// ------------------------------------------------------------ graphs

Graph4 Graph4::parse(std::string_view edge_list) {
    Graph4 g;
    std::stringstream ss{std::string(edge_list)};
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string digits;
        for (char c : item)
            if (!std::isspace(static_cast<unsigned char>(c))) digits.push_back(c);
        if (digits.empty()) continue;
        if (digits.size() != 2 || digits[0] < '1' || digits[0] > '4' || digits[1] < '1' || digits[1] > '4' || digits[0] == digits[1])
            throw Error(ErrorKind::Syntax, "edge '" + item + "' is not a pair of distinct digits in 1..4");
        g.edges |= static_cast<std::uint8_t>(1U << pair_index(static_cast<unsigned>(digits[0] - '0'), static_cast<unsigned>(digits[1] - '0')));
    }
    return g;
}

std::string Graph4::str() const {
    std::string out;
    for (unsigned k = 0; k < 6; ++k)
        if (edges & (1U << k)) {
            if (!out.empty()) out += ',';
            out += std::to_string(kPairs[k].first) + std::to_string(kPairs[k].second);
        }
    return out;
}

Graph4 Graph4::relabel(const Perm& sigma) const {
    const auto perm = pair_permutation(sigma);
    Graph4 g;
    for (unsigned k = 0; k < 6; ++k)
        if (edges & (1U << k)) g.edges |= static_cast<std::uint8_t>(1U << perm[k]);
    return g;
}

Fingerprint fingerprint(const Graph4& g) {
    static const std::vector<Poly> generators = [] {
        std::vector<Poly> out;
        for (const auto& p : nine_generators()) out.push_back(from_xz(p));
        return out;
    }();
    Point point;
    for (unsigned k = 0; k < 6; ++k) point.emplace(pair_vars()[k], Rat((g.edges >> k) & 1U));
    Fingerprint f;
    for (std::size_t i = 0; i < 9; ++i) f[i] = eval(generators[i], point);
    return f;
}

std::string fingerprint_str(const Fingerprint& f) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + f[i].str();
    return out + ")";
}

GraphClasses isomorphism_classes() {
    GraphClasses out;
    std::map<Fingerprint, std::vector<Graph4>> by_fp;
    std::map<Graph4, std::vector<Graph4>> by_orbit;
    const auto perms = all_permutations(4);
    for (unsigned e = 0; e < 64; ++e) {
        const Graph4 g{static_cast<std::uint8_t>(e)};
        by_fp[fingerprint(g)].push_back(g);
        Graph4 canonical = g;
        for (const auto& sigma : perms) canonical = std::min(canonical, g.relabel(sigma));
        by_orbit[canonical].push_back(g);
    }
    // classes in order of their smallest member
    std::vector<std::pair<std::vector<Graph4>, Fingerprint>> fp_classes;
    for (auto& [fp, graphs] : by_fp) fp_classes.emplace_back(graphs, fp);
    std::sort(fp_classes.begin(), fp_classes.end());
    for (auto& [graphs, fp] : fp_classes) {
        out.by_fingerprint.push_back(graphs);
        out.fingerprints.push_back(fp);
    }
    for (auto& [canonical, graphs] : by_orbit) out.by_orbit.push_back(graphs);
    std::sort(out.by_orbit.begin(), out.by_orbit.end());
    out.equal = out.by_fingerprint == out.by_orbit;
    return out;
}

}  // namespace multisym::s4

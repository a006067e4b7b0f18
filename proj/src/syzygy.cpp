#include "multisym/syzygy.hpp"

#include <algorithm>
#include <functional>

#include "multisym/error.hpp"
#include "multisym/linalg.hpp"

namespace multisym {

// ------------------------------------------------------------ partitions

SetPartitions::SetPartitions(unsigned k) : k_(k), growth_(k, 0), prefix_max_(k, 0) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "set partitions need k >= 1");
}

std::optional<SetPartition> SetPartitions::next() {
    if (done_) return std::nullopt;
    if (started_) {
        // advance the restricted growth string: a[i] <= 1 + max(a[0..i-1])
        unsigned i = k_;
        while (i-- > 1) {
            if (growth_[i] <= prefix_max_[i - 1]) {
                ++growth_[i];
                prefix_max_[i] = std::max(prefix_max_[i - 1], growth_[i]);
                for (unsigned j = i + 1; j < k_; ++j) {
                    growth_[j] = 0;
                    prefix_max_[j] = prefix_max_[i];
                }
                break;
            }
        }
        if (i == 0) {
            done_ = true;
            return std::nullopt;
        }
    }
    started_ = true;
    SetPartition p;
    p.blocks.resize(prefix_max_[k_ - 1] + 1);
    for (unsigned e = 0; e < k_; ++e) p.blocks[growth_[e]].push_back(e);
    return p;
}

std::vector<SetPartition> set_partitions(unsigned k) {
    std::vector<SetPartition> out;
    SetPartitions gen(k);
    while (auto p = gen.next()) out.push_back(std::move(*p));
    return out;
}

// ------------------------------------------------------------ presentation

FPoly linearize(const BasedAlgebra& a, unsigned n, const AlgElement& element) {
    FPoly out(element.c0 * Rat(n));
    for (const auto& [w, c] : element.terms) out += FPoly(Mono(a.t_symbol(w)), c);
    return out;
}

FPoly psi(const BasedAlgebra& a, unsigned n, const std::vector<BasisWord>& words) {
    if (words.size() != n + 1)
        throw Error(ErrorKind::WrongSize, "syzygy needs exactly n+1 = " + std::to_string(n + 1) + " words, got " +
                                              std::to_string(words.size()));
    FPoly out;
    SetPartitions partitions(n + 1);
    while (auto lambda = partitions.next()) {
        FPoly term((lambda->size() % 2 == 0) ? Rat(1) : Rat(-1));
        for (const auto& block : lambda->blocks) {
            AlgElement prod = AlgElement::word(words[block[0]]);
            for (std::size_t i = 1; i < block.size(); ++i) prod = a.product(prod, AlgElement::word(words[block[i]]));
            term *= linearize(a, n, prod) * factorial(static_cast<unsigned>(block.size() - 1));
            if (term.is_zero()) break;
        }
        out += term;
    }
    return out;
}

Tensor phi(const BasedAlgebra& a, unsigned n, const FPoly& f) {
    std::map<std::pair<Var, std::uint32_t>, Tensor> powers;
    auto power_of = [&](Var v, std::uint32_t e) -> const Tensor& {
        auto key = std::make_pair(v, e);
        if (auto it = powers.find(key); it != powers.end()) return it->second;
        auto w = a.word_of_symbol(v);
        if (!w) throw Error(ErrorKind::UnknownVariable, v.name() + " is not a presentation symbol of this algebra");
        const Tensor base = power_sum(a, n, *w);
        Tensor result = Tensor::constant(a, n);
        for (std::uint32_t i = 0; i < e; ++i) result = multiply(a, result, base);
        return powers.emplace(key, std::move(result)).first->second;
    };
    Tensor out(n);
    for (const auto& [m, c] : f.terms()) {
        Tensor term = Tensor::constant(a, n, c);
        for (const auto& [v, e] : m.factors()) term = multiply(a, term, power_of(v, e));
        out += term;
    }
    return out;
}

namespace {

WordMultiset words_of(const BasedAlgebra& a, const Mono& m) {
    WordMultiset out;
    for (const auto& [v, e] : m.factors()) {
        auto w = a.word_of_symbol(v);
        if (!w) throw Error(ErrorKind::UnknownVariable, v.name() + " is not a presentation symbol of this algebra");
        out.insert(out.end(), e, *w);
    }
    return out;
}

FPoly symbol_product(const BasedAlgebra& a, const std::vector<BasisWord>& words) {
    std::vector<Mono::Factor> factors;
    for (const auto& w : words) factors.emplace_back(a.t_symbol(w), 1);
    return FPoly(Mono::from_factors(std::move(factors)));
}

}  // namespace

MultisetCoordinates rewrite_product(const BasedAlgebra& a, unsigned n, const WordMultiset& mu_in) {
    if (mu_in.empty()) throw Error(ErrorKind::InvalidArgument, "rewrite needs at least one factor");
    std::map<WordMultiset, MultisetCoordinates> memo;
    const Rat top_sign = (n + 1) % 2 == 0 ? Rat(1) : Rat(-1);

    std::function<const MultisetCoordinates&(const WordMultiset&)> rewrite = [&](const WordMultiset& mu) -> const MultisetCoordinates& {
        if (auto it = memo.find(mu); it != memo.end()) return it->second;
        MultisetCoordinates result;
        if (mu.size() <= n) {
            result.emplace(mu, Rat(1));
        } else {
            std::vector<BasisWord> head(mu.begin(), mu.begin() + n + 1);
            std::vector<BasisWord> tail(mu.begin() + n + 1, mu.end());
            // Π T_head ≡ Π T_head - (-1)^{n+1} Ψ_head modulo the kernel
            FPoly reduced = symbol_product(a, head) - psi(a, n, head) * top_sign;
            for (const auto& [m, c] : reduced.terms()) {
                WordMultiset next = words_of(a, m);
                next.insert(next.end(), tail.begin(), tail.end());
                std::sort(next.begin(), next.end());
                for (const auto& [nu, d] : rewrite(next)) result[nu] += c * d;
            }
            std::erase_if(result, [](const auto& kv) { return kv.second.is_zero(); });
        }
        return memo.emplace(mu, std::move(result)).first->second;
    };
    WordMultiset mu = mu_in;
    std::sort(mu.begin(), mu.end());
    return rewrite(mu);
}

FPoly reduce_long_word(const BasedAlgebra& a, unsigned n, const std::vector<BasisWord>& factors) {
    if (factors.size() != n + 1)
        throw Error(ErrorKind::WrongSize, "need exactly n+1 = " + std::to_string(n + 1) + " factors");
    AlgElement full = AlgElement::word(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) full = a.product(full, AlgElement::word(factors[i]));
    if (!full.c0.is_zero() || full.terms.size() != 1)
        throw Error(ErrorKind::NotAWord, "the product of the factors is not a multiple of a basis word");
    const Var target = a.t_symbol(full.terms.begin()->first);
    FPoly relation = psi(a, n, factors);
    const Rat lead = relation.coefficient(Mono(target));
    FPoly rest = relation - FPoly(Mono(target), lead);
    for (const auto& [m, c] : rest.terms())
        if (m.exponent(target) > 0 || lead.is_zero())
            throw Error(ErrorKind::NotAWord, "the full product also occurs in a proper subproduct");
    return rest * (Rat(-1) / lead);
}

bool kernel_member(const BasedAlgebra& a, unsigned n, const FPoly& f) { return phi(a, n, f).is_zero(); }

std::vector<WordMultiset> invariant_space_basis(const BasedAlgebra& a, unsigned n, unsigned d) {
    std::vector<WordMultiset> out;
    if (d == 0) {
        out.emplace_back();
        return out;
    }
    const std::vector<BasisWord> words = a.basis_words_up_to(d);
    WordMultiset current;
    std::function<void(std::size_t, unsigned)> extend = [&](std::size_t start, unsigned remaining) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (current.size() == n) return;
        for (std::size_t i = start; i < words.size(); ++i) {
            if (words[i].degree > remaining) break;
            current.push_back(words[i]);
            extend(i, remaining - words[i].degree);
            current.pop_back();
        }
    };
    extend(0, d);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DegreeGenerators> min_generator_report(const BasedAlgebra& a, unsigned n, unsigned d_max) {
    if (!a.graded()) throw Error(ErrorKind::NotGraded, "minimal generators need a graded algebra");
    std::vector<std::vector<WordMultiset>> bases;
    std::vector<std::vector<Tensor>> orbit_sums;
    std::vector<DegreeGenerators> report;
    for (unsigned d = 0; d <= d_max; ++d) {
        bases.push_back(invariant_space_basis(a, n, d));
        orbit_sums.emplace_back();
        for (const auto& mu : bases[d]) orbit_sums[d].push_back(orbit_sum(a, n, mu));

        DegreeGenerators row;
        row.degree = d;
        row.dim = bases[d].size();
        if (d == 0) {
            row.decomposable_dim = row.dim;
            report.push_back(row);
            continue;
        }
        ColumnIndex<WordMultiset> columns;
        for (const auto& mu : bases[d]) columns(mu);
        auto coordinates = [&](const Tensor& t) {
            SparseVector v;
            for (const auto& [mu, c] : to_orbit_basis(a, t)) v.emplace(columns(mu), c);
            return v;
        };
        SparseEchelon echelon;
        for (unsigned e = 1; 2 * e <= d; ++e)
            for (const auto& f : orbit_sums[e])
                for (const auto& g : orbit_sums[d - e]) echelon.insert(coordinates(multiply(a, f, g)));
        row.decomposable_dim = echelon.rank();
        row.indecomposable_count = row.dim - row.decomposable_dim;

        std::vector<std::size_t> order(bases[d].size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_partition(order.begin(), order.end(), [&](std::size_t i) { return bases[d][i].size() == 1; });
        for (std::size_t i : order) {
            if (echelon.rank() == row.dim) break;
            if (echelon.insert(coordinates(orbit_sums[d][i]))) row.witnesses.push_back(bases[d][i]);
        }
        report.push_back(std::move(row));
    }
    return report;
}

}  // namespace multisym

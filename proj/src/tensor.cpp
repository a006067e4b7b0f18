#include "multisym/tensor.hpp"

#include <algorithm>

#include "multisym/error.hpp"

namespace multisym {

Tensor Tensor::constant(const BasedAlgebra& a, unsigned power, const Rat& c) {
    Tensor t(power);
    t.add_term(SlotTuple(power, BasisWord::unit(a.kind())), c);
    return t;
}

Rat Tensor::coefficient(const SlotTuple& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Tensor::add_term(const SlotTuple& t, const Rat& c) {
    if (c.is_zero()) return;
    if (t.size() != power_) throw Error(ErrorKind::SizeMismatch, "slot tuple length differs from tensor power");
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Tensor& Tensor::operator+=(const Tensor& o) {
    if (o.power_ != power_) throw Error(ErrorKind::SizeMismatch, "tensor powers differ");
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    if (o.power_ != power_) throw Error(ErrorKind::SizeMismatch, "tensor powers differ");
    for (const auto& [t, c] : o.terms_) add_term(t, -c);
    return *this;
}

Tensor& Tensor::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, coeff] : terms_) coeff *= c;
    return *this;
}

Tensor multiply(const BasedAlgebra& a, const Tensor& s, const Tensor& t) {
    if (s.power() != t.power()) throw Error(ErrorKind::SizeMismatch, "tensor powers differ");
    const unsigned n = s.power();
    const BasisWord unit = BasisWord::unit(a.kind());
    Tensor out(n);
    std::vector<std::vector<std::pair<BasisWord, Rat>>> slots(n);
    for (const auto& [u, cu] : s.terms())
        for (const auto& [v, cv] : t.terms()) {
            bool zero = false;
            for (unsigned i = 0; i < n && !zero; ++i) {
                AlgElement prod = a.product(u[i], v[i]);
                slots[i].clear();
                if (!prod.c0.is_zero()) slots[i].emplace_back(unit, prod.c0);
                for (const auto& [w, c] : prod.terms) slots[i].emplace_back(w, c);
                zero = slots[i].empty();
            }
            if (zero) continue;
            // expand the slotwise sums
            std::vector<std::size_t> choice(n, 0);
            SlotTuple tuple(n, unit);
            while (true) {
                Rat c = cu * cv;
                for (unsigned i = 0; i < n; ++i) {
                    tuple[i] = slots[i][choice[i]].first;
                    c *= slots[i][choice[i]].second;
                }
                out.add_term(tuple, c);
                unsigned i = 0;
                while (i < n && ++choice[i] == slots[i].size()) choice[i++] = 0;
                if (i == n) break;
            }
        }
    return out;
}

Tensor swap_slots(const Tensor& t, unsigned i, unsigned j) {
    Tensor out(t.power());
    for (const auto& [key, c] : t.terms()) {
        SlotTuple tuple = key;
        std::swap(tuple.at(i), tuple.at(j));
        out.add_term(tuple, c);
    }
    return out;
}

bool is_invariant(const Tensor& t) {
    for (unsigned i = 0; i + 1 < t.power(); ++i)
        if (!(swap_slots(t, i, i + 1) == t)) return false;
    return true;
}

Tensor power_sum(const BasedAlgebra& a, unsigned n, const BasisWord& w) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "tensor power must be positive");
    if (w.is_unit()) throw Error(ErrorKind::NotAWord, "[1] is not a power-sum generator");
    Tensor out(n);
    SlotTuple tuple(n, BasisWord::unit(a.kind()));
    for (unsigned i = 0; i < n; ++i) {
        tuple[i] = w;
        out.add_term(tuple, Rat(1));
        tuple[i] = BasisWord::unit(a.kind());
    }
    return out;
}

Tensor orbit_sum(const BasedAlgebra& a, unsigned n, const WordMultiset& mu) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "tensor power must be positive");
    if (mu.size() > n)
        throw Error(ErrorKind::HeightExceedsPower,
                    "multiset of height " + std::to_string(mu.size()) + " exceeds power " + std::to_string(n));
    SlotTuple tuple(mu.begin(), mu.end());
    tuple.resize(n, BasisWord::unit(a.kind()));
    std::sort(tuple.begin(), tuple.end());
    Tensor out(n);
    do {
        out.add_term(tuple, Rat(1));
    } while (std::next_permutation(tuple.begin(), tuple.end()));
    return out;
}

Tensor bracket_product(const BasedAlgebra& a, unsigned n, const WordMultiset& mu) {
    Tensor out = Tensor::constant(a, n);
    for (const auto& w : mu) out = multiply(a, out, power_sum(a, n, w));
    return out;
}

namespace {

WordMultiset multiset_of(const SlotTuple& tuple) {
    WordMultiset mu;
    for (const auto& w : tuple)
        if (!w.is_unit()) mu.push_back(w);
    std::sort(mu.begin(), mu.end());
    return mu;
}

Rat multiplicity_factorials(const WordMultiset& mu) {
    Rat out(1);
    for (std::size_t i = 0; i < mu.size();) {
        std::size_t j = i;
        while (j < mu.size() && mu[j] == mu[i]) ++j;
        out *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return out;
}

}  // namespace

MultisetCoordinates to_orbit_basis(const BasedAlgebra& /*a*/, const Tensor& t) {
    if (!is_invariant(t)) throw Error(ErrorKind::NotInvariant, "tensor is not fixed by the symmetric group");
    MultisetCoordinates out;
    for (const auto& [tuple, c] : t.terms()) out.try_emplace(multiset_of(tuple), c);
    return out;
}

MultisetCoordinates to_power_product_basis(const BasedAlgebra& a, const Tensor& t) {
    MultisetCoordinates out;
    Tensor rest = t;
    while (true) {
        MultisetCoordinates orbit = to_orbit_basis(a, rest);
        if (orbit.empty()) break;
        std::size_t top = 0;
        for (const auto& [mu, c] : orbit) top = std::max(top, mu.size());
        for (const auto& [mu, c] : orbit) {
            if (mu.size() != top) continue;
            Rat coeff = c / multiplicity_factorials(mu);
            out[mu] += coeff;
            rest -= bracket_product(a, t.power(), mu) * coeff;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

Tensor from_orbit_basis(const BasedAlgebra& a, unsigned n, const MultisetCoordinates& coords) {
    Tensor out(n);
    for (const auto& [mu, c] : coords) out += orbit_sum(a, n, mu) * c;
    return out;
}

Tensor from_power_product_basis(const BasedAlgebra& a, unsigned n, const MultisetCoordinates& coords) {
    Tensor out(n);
    for (const auto& [mu, c] : coords) out += bracket_product(a, n, mu) * c;
    return out;
}

Poly to_poly(const BasedAlgebra& a, const Tensor& t) {
    if (a.kind() == AlgebraKind::StructureConstant)
        throw Error(ErrorKind::UnsupportedKind, "slot polynomials need a polynomial or Veronese algebra");
    Poly out;
    for (const auto& [tuple, c] : t.terms()) {
        std::vector<Mono::Factor> factors;
        for (unsigned s = 0; s < tuple.size(); ++s)
            for (std::size_t g = 0; g < tuple[s].key.size(); ++g)
                if (tuple[s].key[g] > 0)
                    factors.emplace_back(a.slot_var(static_cast<unsigned>(g), s + 1), tuple[s].key[g]);
        out.add_term(Mono::from_factors(std::move(factors)), c);
    }
    return out;
}

Tensor from_poly(const BasedAlgebra& a, unsigned n, const Poly& p) {
    std::map<Var, std::pair<unsigned, unsigned>> slot_of;  // var -> (generator, slot)
    for (unsigned g = 0; g < a.generator_count(); ++g)
        for (unsigned s = 1; s <= n; ++s) slot_of.emplace(a.slot_var(g, s), std::make_pair(g, s));
    Tensor out(n);
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::vector<std::uint32_t>> exps(n, std::vector<std::uint32_t>(a.generator_count(), 0));
        for (const auto& [v, e] : m.factors()) {
            auto it = slot_of.find(v);
            if (it == slot_of.end()) throw Error(ErrorKind::UnknownVariable, v.name() + " is not a slot variable");
            exps[it->second.second - 1][it->second.first] += e;
        }
        SlotTuple tuple;
        for (const auto& e : exps) {
            bool unit = std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
            tuple.push_back(unit ? BasisWord::unit(a.kind()) : a.word(e));
        }
        out.add_term(tuple, c);
    }
    return out;
}

}  // namespace multisym

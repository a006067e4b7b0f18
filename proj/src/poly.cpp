#include "multisym/poly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "multisym/error.hpp"

namespace multisym {

namespace {

struct VarInfo {
    std::string name;
    int slot = 0;
    int index = 0;
};

class VarRegistry {
public:
    static VarRegistry& instance() {
        static VarRegistry registry;
        return registry;
    }

    Var intern(std::string_view name, int slot, int index) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = ids_.find(std::string(name)); it != ids_.end()) return Var(it->second);
        }
        std::unique_lock lock(mutex_);
        auto [it, inserted] = ids_.try_emplace(std::string(name), static_cast<std::uint32_t>(infos_.size()));
        if (inserted) infos_.push_back(VarInfo{std::string(name), slot, index});
        return Var(it->second);
    }

    std::optional<Var> find(std::string_view name) const {
        std::shared_lock lock(mutex_);
        if (auto it = ids_.find(std::string(name)); it != ids_.end()) return Var(it->second);
        return std::nullopt;
    }

    // deque keeps references stable across inserts
    const VarInfo& info(Var v) const {
        std::shared_lock lock(mutex_);
        return infos_.at(v.id());
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, std::uint32_t> ids_;
    std::deque<VarInfo> infos_;
};

}  // namespace

Var Var::intern(std::string_view name) { return VarRegistry::instance().intern(name, 0, 0); }
Var Var::intern(std::string_view name, int slot, int index) {
    return VarRegistry::instance().intern(name, slot, index);
}
std::optional<Var> Var::find(std::string_view name) { return VarRegistry::instance().find(name); }
const std::string& Var::name() const { return VarRegistry::instance().info(*this).name; }
int Var::slot() const { return VarRegistry::instance().info(*this).slot; }
int Var::index() const { return VarRegistry::instance().info(*this).index; }

// ---------------------------------------------------------------- Mono

Mono::Mono(Var v, std::uint32_t exponent) {
    if (exponent > 0) {
        factors_.emplace_back(v, exponent);
        degree_ = exponent;
    }
}

Mono Mono::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Mono m;
    for (const auto& [v, e] : factors) {
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == v)
            m.factors_.back().second += e;
        else
            m.factors_.emplace_back(v, e);
        m.degree_ += e;
    }
    return m;
}

std::uint32_t Mono::exponent(Var v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, Var x) { return f.first < x; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Mono operator*(const Mono& a, const Mono& b) {
    Mono out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first) {
            out.factors_.push_back(*i++);
        } else if (j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    out.degree_ = a.degree_ + b.degree_;
    return out;
}

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        if (fa[i].first != fb[i].first) return fb[i].first < fa[i].first;
        if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second;
    }
    return fa.size() < fb.size();
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rat& c) {
    if (!c.is_zero()) terms_.emplace(Mono(), c);
}

Poly::Poly(Var v) { terms_.emplace(Mono(v), Rat(1)); }

Poly::Poly(const Mono& m, const Rat& c) {
    if (!c.is_zero()) terms_.emplace(m, c);
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.degree());
}

Rat Poly::coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

std::vector<Var> Poly::variables() const {
    std::vector<Var> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void Poly::add_term(const Mono& m, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
    } else {
        for (auto& [m, coeff] : terms_) coeff *= c;
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Poly pow(const Poly& p, unsigned exponent) {
    Poly result(1);
    Poly base = p;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

Poly substitute(const Poly& p, const Substitution& sigma) {
    std::map<std::pair<Var, std::uint32_t>, Poly> powers;
    auto power_of = [&](Var v, std::uint32_t e) -> const Poly& {
        auto key = std::make_pair(v, e);
        if (auto it = powers.find(key); it != powers.end()) return it->second;
        auto img = sigma.find(v);
        Poly base = img == sigma.end() ? Poly(v) : img->second;
        return powers.emplace(key, pow(base, e)).first->second;
    };
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        Poly term(c);
        Mono passthrough;
        for (const auto& [v, e] : m.factors()) {
            if (sigma.count(v))
                term *= power_of(v, e);
            else
                passthrough = passthrough * Mono(v, e);
        }
        if (!passthrough.is_one()) term *= Poly(passthrough);
        out += term;
    }
    return out;
}

Rat eval(const Poly& p, const Point& point) {
    Rat total;
    for (const auto& [m, c] : p.terms()) {
        Rat value = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = point.find(v);
            if (it == point.end()) throw Error(ErrorKind::MissingVariable, "no value for variable " + v.name());
            value *= pow(it->second, e);
        }
        total += value;
    }
    return total;
}

}  // namespace multisym

#include "multisym/linalg.hpp"

namespace multisym {

RatMatrix rref(RatMatrix m, std::vector<Eigen::Index>* pivots) {
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) m.row(pivot).swap(m.row(row));
        const Rat inv = Rat(1) / m(row, col);
        for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Rat factor = m(i, col);
            for (Eigen::Index j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
        }
        if (pivots) pivots->push_back(col);
        ++row;
    }
    return m;
}

NullspaceResult rref_nullspace(const RatMatrix& m) {
    std::vector<Eigen::Index> pivots;
    RatMatrix r = rref(m, &pivots);
    NullspaceResult out;
    out.rank = static_cast<Eigen::Index>(pivots.size());
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    for (Eigen::Index free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        RatVector v = RatVector::Constant(m.cols(), Rat(0));
        v(free) = Rat(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v(pivots[k]) = -r(static_cast<Eigen::Index>(k), free);
        out.basis.push_back(std::move(v));
    }
    return out;
}

void axpy(SparseVector& v, const Rat& factor, const SparseVector& w) {
    if (factor.is_zero()) return;
    for (const auto& [col, value] : w) {
        auto [it, inserted] = v.try_emplace(col, factor * value);
        if (!inserted) {
            it->second += factor * value;
            if (it->second.is_zero()) v.erase(it);
        }
    }
}

void SparseEchelon::reduce(SparseVector& v, SparseVector* combination) const {
    auto it = v.begin();
    while (it != v.end()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        const std::uint32_t col = it->first;
        const Rat factor = -it->second;
        axpy(v, factor, row->second.entries);
        if (combination) axpy(*combination, factor, row->second.combination);
        it = v.upper_bound(col);
    }
}

bool SparseEchelon::insert(SparseVector v) {
    const auto id = static_cast<std::uint32_t>(inserted_++);
    SparseVector combination;
    if (track_) combination.emplace(id, Rat(1));
    reduce(v, track_ ? &combination : nullptr);
    if (v.empty()) {
        if (track_) dependencies_.push_back(std::move(combination));
        return false;
    }
    const Rat inv = Rat(1) / v.begin()->second;
    for (auto& [col, value] : v) value *= inv;
    for (auto& [col, value] : combination) value *= inv;
    const std::uint32_t lead = v.begin()->first;
    rows_.emplace(lead, Row{std::move(v), std::move(combination)});
    return true;
}

bool SparseEchelon::in_span(SparseVector v) const {
    reduce(v, nullptr);
    return v.empty();
}

}  // namespace multisym

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <map>
#include <vector>

#include "multisym/rational.hpp"

namespace multisym {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = Matrix<Rat>;
using RatVector = Vector<Rat>;

struct NullspaceResult {
    Eigen::Index rank = 0;
    std::vector<RatVector> basis;
};

/// Reduced row echelon form by rational Gauss-Jordan elimination. Pivot
/// columns are appended to `pivots` when non-null.
RatMatrix rref(RatMatrix m, std::vector<Eigen::Index>* pivots = nullptr);

/// Rank and a nullspace basis: one vector per free column f, with entry 1 at
/// f, zero at the other free columns.
NullspaceResult rref_nullspace(const RatMatrix& m);

using SparseVector = std::map<std::uint32_t, Rat>;

/// v += factor * w
void axpy(SparseVector& v, const Rat& factor, const SparseVector& w);

/// Incrementally grown row echelon basis of sparse rational vectors. Used for
/// rank and span-membership questions where dense matrices would be wasteful.
/// With tracking enabled every dependent insert records the linear relation
/// among inserted vectors (indexed by insertion order) that witnessed it.
class SparseEchelon {
public:
    explicit SparseEchelon(bool track_dependencies = false) : track_(track_dependencies) {}

    /// Returns true when `v` was independent of the current span.
    bool insert(SparseVector v);
    bool in_span(SparseVector v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t inserted() const { return inserted_; }
    const std::vector<SparseVector>& dependencies() const { return dependencies_; }

private:
    struct Row {
        SparseVector entries;  // leading entry is 1
        SparseVector combination;
    };

    // Reduces v (and its combination) against the stored rows.
    void reduce(SparseVector& v, SparseVector* combination) const;

    bool track_;
    std::size_t inserted_ = 0;
    std::map<std::uint32_t, Row> rows_;
    std::vector<SparseVector> dependencies_;
};

/// Assigns dense column numbers to arbitrary ordered keys on first sight.
template <class Key, class Less = std::less<Key>>
class ColumnIndex {
public:
    std::uint32_t operator()(const Key& key) {
        auto [it, inserted] = index_.try_emplace(key, static_cast<std::uint32_t>(index_.size()));
        return it->second;
    }
    std::size_t size() const { return index_.size(); }

private:
    std::map<Key, std::uint32_t, Less> index_;
};

}  // namespace multisym

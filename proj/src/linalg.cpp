#include "leibform/linalg.hpp"

namespace leibform {

void axpy(SparseVector& acc, const Rational& c, const SparseVector& v) {
    if (sgn(c) == 0) return;
    for (const auto& [col, val] : v) {
        auto [it, inserted] = acc.try_emplace(col, c * val);
        if (!inserted) {
            it->second += c * val;
            if (sgn(it->second) == 0) acc.erase(it);
        }
    }
}

SparseVector SparseEchelon::reduce(SparseVector v) const {
    // Stored rows are fully reduced against each other, so one pass over the
    // pivots present in v suffices; pivots are visited in increasing order and
    // eliminating one never reintroduces an earlier pivot column.
    for (auto pit = pivots_.begin(); pit != pivots_.end() && !v.empty(); ++pit) {
        auto it = v.find(pit->first);
        if (it == v.end()) continue;
        const Rational factor = -it->second;
        axpy(v, factor, pit->second);
    }
    return v;
}

void SparseEchelon::back_substitute_into(SparseVector& row) const { row = reduce(std::move(row)); }

bool SparseEchelon::add(SparseVector row) {
    back_substitute_into(row);
    if (row.empty()) return false;
    const int pivot = row.begin()->first;
    const Rational inv = 1 / row.begin()->second;
    for (auto& [c, v] : row) v *= inv;
    // Keep existing rows free of the new pivot column.
    for (auto& [p, other] : pivots_) {
        auto it = other.find(pivot);
        if (it == other.end()) continue;
        const Rational factor = -it->second;
        axpy(other, factor, row);
    }
    pivots_.emplace(pivot, std::move(row));
    return true;
}

std::vector<int> SparseEchelon::pivot_columns() const {
    std::vector<int> out;
    out.reserve(pivots_.size());
    for (const auto& [p, r] : pivots_) out.push_back(p);
    return out;
}

std::vector<SparseVector> SparseEchelon::kernel_basis(int num_cols) const {
    std::vector<SparseVector> out;
    for (int free = 0; free < num_cols; ++free) {
        if (pivots_.count(free)) continue;
        SparseVector v;
        v.emplace(free, Rational(1));
        for (const auto& [p, row] : pivots_) {
            auto it = row.find(free);
            if (it != row.end()) v.emplace(p, -it->second);
        }
        out.push_back(std::move(v));
    }
    return out;
}

SparseVector to_sparse(const std::vector<Rational>& dense) {
    SparseVector v;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (sgn(dense[i]) != 0) v.emplace(static_cast<int>(i), dense[i]);
    return v;
}

std::size_t rank(const DenseMatrix& m) {
    SparseEchelon e;
    for (const auto& row : m) e.add(to_sparse(row));
    return e.rank();
}

std::vector<std::vector<Rational>> kernel(const DenseMatrix& m, std::size_t cols) {
    SparseEchelon e;
    for (const auto& row : m) e.add(to_sparse(row));
    std::vector<std::vector<Rational>> out;
    for (const auto& v : e.kernel_basis(static_cast<int>(cols))) {
        std::vector<Rational> dense(cols, Rational(0));
        for (const auto& [c, val] : v) dense[static_cast<std::size_t>(c)] = val;
        out.push_back(std::move(dense));
    }
    return out;
}

}  // namespace leibform

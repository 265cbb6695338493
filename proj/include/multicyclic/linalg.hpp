#pragma once

// Exact Gauss-Jordan elimination over F_q.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "gf.hpp"

namespace multicyclic {

class GfMatrix {
public:
    GfMatrix() = default;
    GfMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    GfMatrix(std::size_t rows, std::size_t cols, std::vector<GfElement> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) throw Error(Errc::dimension_mismatch, "entry count != rows * cols");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GfElement& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    GfElement at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const GfElement> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    std::span<GfElement> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }

    void append_row(std::span<const GfElement> v) {
        if (rows_ == 0 && entries_.empty() && cols_ == 0) cols_ = v.size();
        if (v.size() != cols_) throw Error(Errc::dimension_mismatch, "row width mismatch");
        entries_.insert(entries_.end(), v.begin(), v.end());
        ++rows_;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
    }

    friend bool operator==(const GfMatrix&, const GfMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GfElement> entries_;
};

struct Echelon {
    GfMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Pivots are taken as the first nonzero entry in
/// column order, scanning rows top to bottom.
inline Echelon rref(const Field& F, GfMatrix m) {
    Echelon out;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        std::size_t pivot = lead;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(lead, pivot);
        const GfElement scale = F.inv(m.at(lead, col));
        for (auto& x : m.row(lead)) x = F.mul(x, scale);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m.at(r, col).is_zero()) continue;
            const GfElement factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                m.at(r, c) = F.sub(m.at(r, c), F.mul(factor, m.at(lead, c)));
            }
        }
        out.pivots.push_back(col);
        ++lead;
    }
    out.rank = lead;
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const Field& F, const GfMatrix& m) { return rref(F, m).rank; }

/// Coefficients a with v = sum_i a_i * basis.row(i), or nullopt when v is not
/// in the row space. Free variables are set to zero.
inline std::optional<std::vector<GfElement>> in_span(const Field& F, std::span<const GfElement> v,
                                                     const GfMatrix& basis) {
    if (basis.rows() > 0 && v.size() != basis.cols())
        throw Error(Errc::dimension_mismatch, "vector of width " + std::to_string(v.size()) +
                                                  " against rows of width " + std::to_string(basis.cols()));
    // Columns are the basis rows, augmented by v.
    GfMatrix system(v.size(), basis.rows() + 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t b = 0; b < basis.rows(); ++b) system.at(i, b) = basis.at(b, i);
        system.at(i, basis.rows()) = v[i];
    }
    const Echelon e = rref(F, std::move(system));
    if (!e.pivots.empty() && e.pivots.back() == basis.rows()) return std::nullopt;
    std::vector<GfElement> coeffs(basis.rows());
    for (std::size_t r = 0; r < e.rank; ++r) coeffs[e.pivots[r]] = e.reduced.at(r, basis.rows());
    return coeffs;
}

/// Incrementally maintained row space; keeps a reduced echelon copy so that
/// membership and rank growth are cheap to test.
class RowSpace {
public:
    RowSpace(const Field& F, std::size_t width) : field_(&F), width_(width) {}

    std::size_t rank() const { return pivots_.size(); }

    /// Reduces v against the current echelon rows; zero means v is in the span.
    std::vector<GfElement> reduce(std::span<const GfElement> v) const {
        if (v.size() != width_) throw Error(Errc::dimension_mismatch, "row width mismatch");
        std::vector<GfElement> out(v.begin(), v.end());
        for (std::size_t r = 0; r < pivots_.size(); ++r) {
            const GfElement factor = out[pivots_[r]];
            if (factor.is_zero()) continue;
            const auto row = echelon_.row(r);
            for (std::size_t c = 0; c < width_; ++c) out[c] = field_->sub(out[c], field_->mul(factor, row[c]));
        }
        return out;
    }

    bool contains(std::span<const GfElement> v) const {
        const auto rem = reduce(v);
        for (auto x : rem) {
            if (!x.is_zero()) return false;
        }
        return true;
    }

    /// Adds v; returns true when the rank grew.
    bool insert(std::span<const GfElement> v) {
        auto rem = reduce(v);
        std::size_t pivot = 0;
        while (pivot < width_ && rem[pivot].is_zero()) ++pivot;
        if (pivot == width_) return false;
        const GfElement scale = field_->inv(rem[pivot]);
        for (auto& x : rem) x = field_->mul(x, scale);
        // Keep earlier rows reduced with respect to the new pivot.
        for (std::size_t r = 0; r < pivots_.size(); ++r) {
            auto row = echelon_.row(r);
            const GfElement factor = row[pivot];
            if (factor.is_zero()) continue;
            for (std::size_t c = 0; c < width_; ++c) row[c] = field_->sub(row[c], field_->mul(factor, rem[c]));
        }
        if (echelon_.rows() == 0) echelon_ = GfMatrix(0, width_);
        echelon_.append_row(rem);
        pivots_.push_back(pivot);
        return true;
    }

private:
    const Field* field_;
    std::size_t width_;
    GfMatrix echelon_;
    std::vector<std::size_t> pivots_;
};

}  // namespace multicyclic

#pragma once

// The ring F_q[X_1..X_r]/<X_t^{n_t} - 1> with elements stored as dense
// coefficient tensors.
//
// Storage is row-major over the index box (axis 0 slowest). The graded-lex
// monomial order used for every exported vector and generator-matrix column
// is kept separately: total degree ascending, ties broken lexicographically
// with X_1 > X_2 > ... > X_r.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "gf.hpp"

namespace multicyclic {

using MultiIndex = std::vector<std::uint32_t>;

/// "(i_1,...,i_r)"
inline std::string format_index(const MultiIndex& idx) {
    std::string out = "(";
    for (std::size_t t = 0; t < idx.size(); ++t) {
        if (t > 0) out += ',';
        out += std::to_string(idx[t]);
    }
    return out + ")";
}

/// The index box Z_{n_1} x ... x Z_{n_r} with row-major flattening.
class IndexBox {
public:
    IndexBox() = default;

    explicit IndexBox(std::vector<std::uint32_t> lengths) : lengths_(std::move(lengths)) {
        if (lengths_.empty()) throw Error(Errc::invalid_argument, "at least one axis is required");
        strides_.assign(lengths_.size(), 1);
        size_ = 1;
        for (std::size_t t = lengths_.size(); t-- > 0;) {
            if (lengths_[t] == 0) throw Error(Errc::invalid_argument, "axis lengths must be positive");
            strides_[t] = size_;
            size_ *= lengths_[t];
        }
    }

    const std::vector<std::uint32_t>& lengths() const { return lengths_; }
    std::size_t rank() const { return lengths_.size(); }
    std::size_t size() const { return size_; }
    std::size_t stride(std::size_t axis) const { return strides_[axis]; }

    bool contains(const MultiIndex& idx) const {
        if (idx.size() != lengths_.size()) return false;
        for (std::size_t t = 0; t < idx.size(); ++t) {
            if (idx[t] >= lengths_[t]) return false;
        }
        return true;
    }

    void check(const MultiIndex& idx) const {
        if (idx.size() != lengths_.size())
            throw Error(Errc::arity_mismatch, "index has " + std::to_string(idx.size()) + " components, expected " +
                                                  std::to_string(lengths_.size()));
        if (!contains(idx)) throw Error(Errc::index_out_of_range, "index outside the box");
    }

    std::size_t flat(const MultiIndex& idx) const {
        check(idx);
        std::size_t out = 0;
        for (std::size_t t = 0; t < idx.size(); ++t) out += idx[t] * strides_[t];
        return out;
    }

    MultiIndex unravel(std::size_t flat_index) const {
        MultiIndex out(lengths_.size());
        for (std::size_t t = 0; t < lengths_.size(); ++t) {
            out[t] = static_cast<std::uint32_t>(flat_index / strides_[t]);
            flat_index %= strides_[t];
        }
        return out;
    }

    friend bool operator==(const IndexBox& a, const IndexBox& b) { return a.lengths_ == b.lengths_; }

private:
    std::vector<std::uint32_t> lengths_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 0;
};

/// Dense tensor of field elements over an index box. The tag separates
/// coefficient tensors from spectra at the type level.
template <class Tag>
class Grid {
public:
    Grid() = default;
    explicit Grid(IndexBox box) : box_(std::move(box)), data_(box_.size()) {}
    Grid(IndexBox box, std::vector<GfElement> data) : box_(std::move(box)), data_(std::move(data)) {
        if (data_.size() != box_.size()) throw Error(Errc::dimension_mismatch, "tensor data does not match its shape");
    }

    const IndexBox& box() const { return box_; }
    const std::vector<std::uint32_t>& shape() const { return box_.lengths(); }
    std::size_t size() const { return data_.size(); }

    GfElement& operator[](std::size_t flat) { return data_[flat]; }
    GfElement operator[](std::size_t flat) const { return data_[flat]; }
    GfElement& at(const MultiIndex& idx) { return data_[box_.flat(idx)]; }
    GfElement at(const MultiIndex& idx) const { return data_[box_.flat(idx)]; }

    std::span<const GfElement> data() const { return data_; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](GfElement x) { return x.is_zero(); });
    }

    friend bool operator==(const Grid& a, const Grid& b) { return a.box_ == b.box_ && a.data_ == b.data_; }

private:
    IndexBox box_;
    std::vector<GfElement> data_;
};

struct CoefficientTag {};
struct SpectrumTag {};

/// coeffs[m_1..m_r] is the coefficient of X_1^{m_1}...X_r^{m_r}.
using PolyTensor = Grid<CoefficientTag>;
/// values[j_1..j_r] is f(w_1^{j_1}, ..., w_r^{j_r}).
using Spectrum = Grid<SpectrumTag>;

class Ring {
public:
    /// Fails with OrderNotDividing naming the first axis t (1-based) with n_t not dividing q-1.
    Ring(Field field, std::vector<std::uint32_t> lengths) : field_(std::move(field)), box_(std::move(lengths)) {
        const auto& n = box_.lengths();
        roots_.reserve(n.size());
        root_powers_.resize(n.size());
        for (std::size_t t = 0; t < n.size(); ++t) {
            if ((field_.order() - 1) % n[t] != 0) {
                throw Error(Errc::order_not_dividing, "axis " + std::to_string(t + 1) + ": " + std::to_string(n[t]) +
                                                          " does not divide q-1 = " +
                                                          std::to_string(field_.order() - 1));
            }
            roots_.push_back(field_.nth_root_of_unity(n[t]));
            auto& powers = root_powers_[t];
            powers.resize(n[t]);
            GfElement x = field_.one();
            for (std::uint32_t k = 0; k < n[t]; ++k) {
                powers[k] = x;
                x = field_.mul(x, roots_[t]);
            }
        }

        digits_.resize(box_.size() * box_.rank());
        for (std::size_t i = 0; i < box_.size(); ++i) {
            auto idx = box_.unravel(i);
            std::copy(idx.begin(), idx.end(), digits_.begin() + static_cast<std::ptrdiff_t>(i * box_.rank()));
        }

        order_.resize(box_.size());
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::sort(order_.begin(), order_.end(), [this](std::size_t a, std::size_t b) {
            auto da = digits(a), db = digits(b);
            auto sa = std::accumulate(da.begin(), da.end(), std::size_t{0});
            auto sb = std::accumulate(db.begin(), db.end(), std::size_t{0});
            if (sa != sb) return sa < sb;
            return std::lexicographical_compare(db.begin(), db.end(), da.begin(), da.end());
        });
        position_.resize(box_.size());
        for (std::size_t pos = 0; pos < order_.size(); ++pos) position_[order_[pos]] = pos;
    }

    const Field& field() const { return field_; }
    const IndexBox& box() const { return box_; }
    const std::vector<std::uint32_t>& lengths() const { return box_.lengths(); }
    std::size_t rank() const { return box_.rank(); }
    std::size_t size() const { return box_.size(); }
    const std::vector<GfElement>& roots() const { return roots_; }

    /// w_t^k with the exponent reduced mod n_t; k may be negative.
    GfElement root_power(std::size_t axis, std::int64_t k) const {
        const std::int64_t n = box_.lengths()[axis];
        return root_powers_[axis][static_cast<std::size_t>(((k % n) + n) % n)];
    }

    /// Exponent digits of a flat index.
    std::span<const std::uint32_t> digits(std::size_t flat) const {
        return {digits_.data() + flat * box_.rank(), box_.rank()};
    }

    /// Flat indices listed in graded-lex monomial order.
    std::span<const std::size_t> monomial_order() const { return order_; }
    /// Position of a flat index within the monomial order.
    std::size_t monomial_position(std::size_t flat) const { return position_[flat]; }

    PolyTensor zero() const { return PolyTensor(box_); }

    PolyTensor one() const { return constant(field_.one()); }

    PolyTensor constant(GfElement c) const {
        PolyTensor out(box_);
        out[0] = c;
        return out;
    }

    PolyTensor monomial(const MultiIndex& exponents, GfElement c) const {
        if (exponents.size() != rank()) throw Error(Errc::arity_mismatch, "monomial arity mismatch");
        MultiIndex reduced(exponents);
        for (std::size_t t = 0; t < rank(); ++t) reduced[t] %= lengths()[t];
        PolyTensor out(box_);
        out.at(reduced) = c;
        return out;
    }

    PolyTensor monomial(const MultiIndex& exponents) const { return monomial(exponents, field_.one()); }

    void check(const PolyTensor& f) const {
        if (!(f.box() == box_)) throw Error(Errc::ctx_mismatch, "tensor shape does not match the ring");
    }

    PolyTensor add(const PolyTensor& a, const PolyTensor& b) const {
        check(a);
        check(b);
        PolyTensor out(box_);
        for (std::size_t i = 0; i < size(); ++i) out[i] = field_.add(a[i], b[i]);
        return out;
    }

    PolyTensor sub(const PolyTensor& a, const PolyTensor& b) const {
        check(a);
        check(b);
        PolyTensor out(box_);
        for (std::size_t i = 0; i < size(); ++i) out[i] = field_.sub(a[i], b[i]);
        return out;
    }

    PolyTensor scale(const PolyTensor& a, GfElement c) const {
        check(a);
        PolyTensor out(box_);
        for (std::size_t i = 0; i < size(); ++i) out[i] = field_.mul(a[i], c);
        return out;
    }

    /// Schoolbook r-dimensional cyclic convolution.
    PolyTensor mul(const PolyTensor& a, const PolyTensor& b) const {
        check(a);
        check(b);
        PolyTensor out(box_);
        const auto& n = lengths();
        const std::size_t r = rank();
        for (std::size_t u = 0; u < size(); ++u) {
            if (a[u].is_zero()) continue;
            const auto du = digits(u);
            for (std::size_t v = 0; v < size(); ++v) {
                if (b[v].is_zero()) continue;
                const auto dv = digits(v);
                std::size_t w = 0;
                for (std::size_t t = 0; t < r; ++t) {
                    std::uint32_t s = du[t] + dv[t];
                    if (s >= n[t]) s -= n[t];
                    w += s * box_.stride(t);
                }
                out[w] = field_.add(out[w], field_.mul(a[u], b[v]));
            }
        }
        return out;
    }

    /// Horner evaluation, collapsing the last axis first.
    GfElement evaluate(const PolyTensor& f, std::span<const GfElement> point) const {
        check(f);
        if (point.size() != rank())
            throw Error(Errc::arity_mismatch, "point has " + std::to_string(point.size()) + " components, expected " +
                                                  std::to_string(rank()));
        std::vector<GfElement> current(f.data().begin(), f.data().end());
        for (std::size_t t = rank(); t-- > 0;) {
            const std::size_t len = lengths()[t];
            std::vector<GfElement> next(current.size() / len);
            for (std::size_t prefix = 0; prefix < next.size(); ++prefix) {
                GfElement acc = field_.zero();
                for (std::size_t k = len; k-- > 0;) {
                    acc = field_.add(field_.mul(acc, point[t]), current[prefix * len + k]);
                }
                next[prefix] = acc;
            }
            current = std::move(next);
        }
        return current.front();
    }

    /// Multiplication by X_axis^power (axis is 0-based): a cyclic shift along that axis.
    PolyTensor shift_mul(const PolyTensor& f, std::size_t axis, std::int64_t power) const {
        check(f);
        if (axis >= rank())
            throw Error(Errc::axis_out_of_range, "axis " + std::to_string(axis) + " outside ring of rank " +
                                                     std::to_string(rank()));
        const std::int64_t n = lengths()[axis];
        const auto k = static_cast<std::uint32_t>(((power % n) + n) % n);
        PolyTensor out(box_);
        for (std::size_t i = 0; i < size(); ++i) {
            const std::uint32_t from = digits(i)[axis];
            std::uint32_t to = from + k;
            if (to >= n) to -= static_cast<std::uint32_t>(n);
            const std::size_t j = i + (static_cast<std::size_t>(to) - from) * box_.stride(axis);
            out[j] = f[i];
        }
        return out;
    }

    /// Coefficients listed in monomial order.
    std::vector<GfElement> to_vector(const PolyTensor& f) const {
        check(f);
        std::vector<GfElement> out(size());
        for (std::size_t pos = 0; pos < size(); ++pos) out[pos] = f[order_[pos]];
        return out;
    }

    PolyTensor from_vector(std::span<const GfElement> v) const {
        if (v.size() != size()) throw Error(Errc::dimension_mismatch, "vector length does not match ring size");
        PolyTensor out(box_);
        for (std::size_t pos = 0; pos < size(); ++pos) out[order_[pos]] = v[pos];
        return out;
    }

    /// Variable names: x, y, z for r <= 3, otherwise X1..Xr.
    std::string variable_name(std::size_t axis) const {
        if (rank() <= 3) return std::string(1, "xyz"[axis]);
        return "X" + std::to_string(axis + 1);
    }

    /// Text form of a monomial, "1" for the constant.
    std::string monomial_name(std::span<const std::uint32_t> exponents) const {
        std::string out;
        for (std::size_t t = 0; t < exponents.size(); ++t) {
            if (exponents[t] == 0) continue;
            if (!out.empty() && rank() > 3) out += '*';
            out += variable_name(t);
            if (exponents[t] > 1) out += "^" + std::to_string(exponents[t]);
        }
        return out.empty() ? "1" : out;
    }

    /// Canonical text: nonzero terms in monomial order joined by " + ", unit
    /// coefficients omitted except on the constant term; "0" for zero.
    std::string to_string(const PolyTensor& f) const {
        check(f);
        std::string out;
        for (std::size_t flat : order_) {
            const GfElement c = f[flat];
            if (c.is_zero()) continue;
            if (!out.empty()) out += " + ";
            const auto exps = digits(flat);
            const bool constant_term = std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
            if (constant_term) {
                out += std::to_string(c.value);
            } else {
                if (c != field_.one()) out += std::to_string(c.value) + (rank() > 3 ? "*" : "");
                out += monomial_name(exps);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    Field field_;
    IndexBox box_;
    std::vector<GfElement> roots_;
    std::vector<std::vector<GfElement>> root_powers_;
    std::vector<std::uint32_t> digits_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> position_;
};

}  // namespace multicyclic

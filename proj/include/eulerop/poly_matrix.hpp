#pragma once

// Matrices over ℚ[c] and fraction-free (Bareiss) determinants.

#include "polynomial.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eulerop {

/// Row-major matrix of polynomials in the coupling parameter c.
class QPolyMatrix {
   public:
    QPolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    QPolyMatrix(std::size_t rows, std::size_t cols, std::vector<QPolynomial> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) throw std::invalid_argument("QPolyMatrix: entry count does not match shape");
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::vector<QPolynomial>& entries() const noexcept { return entries_; }

    QPolynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const QPolynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    /// Substitutes c = value in every entry.
    std::vector<Rational> evaluate(const Rational& value) const {
        std::vector<Rational> out;
        out.reserve(entries_.size());
        for (const auto& e : entries_) out.push_back(e(value));
        return out;
    }

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<QPolynomial> entries_;
};

namespace detail {

inline bool is_zero_entry(const QPolynomial& p) { return p.is_zero(); }
inline bool is_zero_entry(const Rational& r) { return r == 0; }
inline QPolynomial exact_quotient(const QPolynomial& a, const QPolynomial& b) { return exact_divide(a, b); }
inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

}  // namespace detail

/// Determinant of an n×n row-major matrix by fraction-free elimination with
/// row pivoting. Every division in the recurrence is exact.
template <class T>
T bareiss_determinant(std::vector<T> a, std::size_t n) {
    if (a.size() != n * n) throw std::invalid_argument("bareiss_determinant: matrix is not square");
    if (n == 0) return T(Rational(1));
    auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * n + j]; };
    bool negate = false;
    T prev = T(Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (detail::is_zero_entry(at(k, k))) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && detail::is_zero_entry(at(swap_row, k))) ++swap_row;
            if (swap_row == n) return T{};
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                at(i, j) = detail::exact_quotient(num, prev);
            }
            at(i, k) = T{};
        }
        prev = at(k, k);
    }
    T det = at(n - 1, n - 1);
    if (negate) det = -det;
    return det;
}

/// Exact determinant of a square polynomial matrix, as a polynomial in c.
inline QPolynomial bareiss_det(const QPolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("bareiss_det: matrix is not square");
    return bareiss_determinant(m.entries(), m.rows());
}

/// Leading principal minors Δ₁..Δₙ of a rational matrix, computed as the
/// pivots of pivot-free Bareiss elimination. Returns nullopt as soon as some
/// Δ_k (k < n) vanishes, since elimination cannot continue without pivoting.
inline std::optional<std::vector<Rational>> leading_principal_minors(std::vector<Rational> a, std::size_t n) {
    if (a.size() != n * n) throw std::invalid_argument("leading_principal_minors: matrix is not square");
    auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };
    std::vector<Rational> minors;
    minors.reserve(n);
    Rational prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        minors.push_back(at(k, k));
        if (k + 1 == n) break;
        if (at(k, k) == 0) return std::nullopt;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return minors;
}

}  // namespace eulerop

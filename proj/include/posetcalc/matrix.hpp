#pragma once

#include "posetcalc/field.hpp"

#include <cassert>
#include <optional>
#include <type_traits>
#include <vector>

namespace posetcalc {

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
public:
    using Scalar = typename F::Elem;

    Matrix() = default;
    Matrix(F field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols),
          e_(static_cast<size_t>(rows) * cols, field.zero()) {}

    static Matrix identity(F field, int n) {
        Matrix m(field, n, n);
        for (int i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const F& field() const { return field_; }

    Scalar& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& v : e_)
            if (!field_.is_zero(v)) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const {
        assert(cols_ == o.rows_);
        Matrix r(field_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Scalar& a = (*this)(i, k);
                if (field_.is_zero(a)) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r(i, j) = field_.add(r(i, j), field_.mul(a, o(k, j)));
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.add(r.e_[i], o.e_[i]);
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.sub(r.e_[i], o.e_[i]);
        return r;
    }

    Matrix negated() const {
        Matrix r = *this;
        for (auto& v : r.e_) v = field_.neg(v);
        return r;
    }

    Matrix transposed() const {
        Matrix r(field_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    /// Copies `o` into this matrix with top-left corner at (i0, j0).
    void insert_block(int i0, int j0, const Matrix& o) {
        for (int i = 0; i < o.rows_; ++i)
            for (int j = 0; j < o.cols_; ++j) (*this)(i0 + i, j0 + j) = o(i, j);
    }

    Matrix block(int i0, int j0, int r, int c) const {
        Matrix out(field_, r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) out(i, j) = (*this)(i0 + i, j0 + j);
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    F field_{};
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

namespace detail {

/// Rank over F_2 with rows packed into machine words.
inline int rank_gf2(const Matrix<PrimeField>& a) {
    const int words = (a.cols() + 63) / 64;
    std::vector<std::uint64_t> rows(static_cast<size_t>(a.rows()) * words, 0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j)) rows[static_cast<size_t>(i) * words + j / 64] |= 1ull << (j % 64);
    int rank = 0;
    for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
        const int w = col / 64;
        const std::uint64_t bit = 1ull << (col % 64);
        int pivot = -1;
        for (int i = rank; i < a.rows(); ++i)
            if (rows[static_cast<size_t>(i) * words + w] & bit) { pivot = i; break; }
        if (pivot < 0) continue;
        for (int k = 0; k < words; ++k)
            std::swap(rows[static_cast<size_t>(pivot) * words + k],
                      rows[static_cast<size_t>(rank) * words + k]);
        for (int i = rank + 1; i < a.rows(); ++i)
            if (rows[static_cast<size_t>(i) * words + w] & bit)
                for (int k = w; k < words; ++k)
                    rows[static_cast<size_t>(i) * words + k] ^=
                        rows[static_cast<size_t>(rank) * words + k];
        ++rank;
    }
    return rank;
}

} // namespace detail

template <class F>
int rank(Matrix<F> a) {
    if constexpr (std::is_same_v<F, PrimeField>) {
        if (a.field().p == 2) return detail::rank_gf2(a);
    }
    const F& K = a.field();
    int r = 0;
    for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
        int pivot = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!K.is_zero(a(i, col))) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = col; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
        auto pinv = K.inv(a(r, col));
        for (int i = r + 1; i < a.rows(); ++i) {
            if (K.is_zero(a(i, col))) continue;
            auto factor = K.mul(a(i, col), pinv);
            for (int j = col; j < a.cols(); ++j)
                a(i, j) = K.sub(a(i, j), K.mul(factor, a(r, j)));
        }
        ++r;
    }
    return r;
}

template <class F>
struct Rref {
    Matrix<F> mat;
    std::vector<int> pivots;  // pivot column per nonzero row
};

/// Reduced row echelon form with unit pivots; canonical for a given matrix.
template <class F>
Rref<F> rref(Matrix<F> a) {
    const F& K = a.field();
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
        int pivot = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!K.is_zero(a(i, col))) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
        auto pinv = K.inv(a(r, col));
        for (int j = 0; j < a.cols(); ++j) a(r, j) = K.mul(a(r, j), pinv);
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || K.is_zero(a(i, col))) continue;
            auto factor = a(i, col);
            for (int j = 0; j < a.cols(); ++j)
                a(i, j) = K.sub(a(i, j), K.mul(factor, a(r, j)));
        }
        pivots.push_back(col);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

/// Columns form a basis of the null space of a.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& a) {
    const F& K = a.field();
    auto e = rref(a);
    std::vector<int> free_cols;
    {
        size_t next = 0;
        for (int j = 0; j < a.cols(); ++j) {
            if (next < e.pivots.size() && e.pivots[next] == j)
                ++next;
            else
                free_cols.push_back(j);
        }
    }
    Matrix<F> ker(K, a.cols(), static_cast<int>(free_cols.size()));
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        int fc = free_cols[fi];
        ker(fc, static_cast<int>(fi)) = K.one();
        for (size_t ri = 0; ri < e.pivots.size(); ++ri)
            ker(e.pivots[ri], static_cast<int>(fi)) = K.neg(e.mat(static_cast<int>(ri), fc));
    }
    return ker;
}

/// Any solution X of A X = B, or nullopt when the system is inconsistent.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
    assert(a.rows() == b.rows());
    const F& K = a.field();
    Matrix<F> aug(K, a.rows(), a.cols() + b.cols());
    aug.insert_block(0, 0, a);
    aug.insert_block(0, a.cols(), b);
    auto e = rref(aug);
    for (size_t ri = 0; ri < e.pivots.size(); ++ri)
        if (e.pivots[ri] >= a.cols()) return std::nullopt;
    Matrix<F> x(K, a.cols(), b.cols());
    for (size_t ri = 0; ri < e.pivots.size(); ++ri)
        for (int j = 0; j < b.cols(); ++j)
            x(e.pivots[ri], j) = e.mat(static_cast<int>(ri), a.cols() + j);
    return x;
}

/// X with A X = I; exists iff A has full row rank.
template <class F>
std::optional<Matrix<F>> right_inverse(const Matrix<F>& a) {
    return solve(a, Matrix<F>::identity(a.field(), a.rows()));
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    auto r = right_inverse(a);
    if (!r) return std::nullopt;
    if (!((*r) * a == Matrix<F>::identity(a.field(), a.rows()))) return std::nullopt;
    return r;
}

template <class F>
bool is_isomorphism(const Matrix<F>& a) {
    return a.rows() == a.cols() && rank(a) == a.rows();
}

} // namespace posetcalc

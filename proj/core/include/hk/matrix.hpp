#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "hk/error.hpp"
#include "hk/numeric.hpp"

namespace hk {

// Dense row-major matrix with value semantics. Instantiated with Int, Rat
// and GaussRat; the elimination algorithms below require a field scalar.
template <typename T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Mat from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) return Mat(0, 0);
        Mat m(int(rows.size()), int(rows[0].size()));
        for (int i = 0; i < m.rows(); ++i) {
            if (rows[i].size() != size_t(m.cols()))
                throw DimensionMismatch("ragged rows in matrix literal");
            for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    std::vector<T> row(int i) const {
        std::vector<T> r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    std::vector<T> col(int j) const {
        std::vector<T> c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!(x == T(0))) return false;
        return true;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        check_same_shape(a, b);
        Mat c(a.rows_, a.cols_);
        for (size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] + b.a_[k];
        return c;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        check_same_shape(a, b);
        Mat c(a.rows_, a.cols_);
        for (size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] - b.a_[k];
        return c;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("matrix product shape mismatch");
        Mat c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    std::vector<T> mul(const std::vector<T>& v) const {
        if (v.size() != size_t(cols_))
            throw DimensionMismatch("matrix-vector shape mismatch");
        std::vector<T> out(rows_, T(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    Mat pow(unsigned k) const {
        if (!is_square()) throw DimensionMismatch("pow of non-square matrix");
        Mat r = identity(rows_);
        Mat base = *this;
        while (k) {
            if (k & 1u) r = r * base;
            base = base * base;
            k >>= 1u;
        }
        return r;
    }

private:
    static void check_same_shape(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix shape mismatch");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;
using GaussMat = Mat<GaussRat>;

inline RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

// --- field algorithms (Gauss-Jordan; scalar must support exact division) ---

// Reduces in place to reduced row echelon form, returns the pivot columns.
template <typename T>
std::vector<int> rref_in_place(Mat<T>& a) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int p = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!(a(i, c) == T(0))) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        T inv = T(1) / a(r, c);
        for (int j = 0; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == T(0)) continue;
            T f = a(i, c);
            for (int j = 0; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <typename T>
int rank_of(const Mat<T>& a) {
    Mat<T> w = a;
    return int(rref_in_place(w).size());
}

// Basis of {x : a x = 0}, one vector per free column of the RREF.
template <typename T>
std::vector<std::vector<T>> kernel_basis(const Mat<T>& a) {
    Mat<T> w = a;
    std::vector<int> pivots = rref_in_place(w);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (int c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<T> v(a.cols(), T(0));
        v[c] = T(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w(int(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <typename T>
std::optional<Mat<T>> inverse(const Mat<T>& a) {
    if (!a.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    int n = a.rows();
    Mat<T> w(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w(i, j) = a(i, j);
        w(i, n + i) = T(1);
    }
    std::vector<int> pivots = rref_in_place(w);
    int left_pivots = 0;
    for (int c : pivots) left_pivots += (c < n);
    if (left_pivots < n) return std::nullopt;
    Mat<T> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = w(i, n + j);
    return inv;
}

template <typename T>
T det(const Mat<T>& a) {
    if (!a.is_square()) throw DimensionMismatch("det of non-square matrix");
    Mat<T> w = a;
    int n = w.rows();
    T d(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!(w(i, c) == T(0))) { p = i; break; }
        if (p < 0) return T(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(w(p, j), w(c, j));
            d = -d;
        }
        d = d * w(c, c);
        T inv = T(1) / w(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (w(i, c) == T(0)) continue;
            T f = w(i, c) * inv;
            for (int j = c; j < n; ++j) w(i, j) = w(i, j) - f * w(c, j);
        }
    }
    return d;
}

// --- exact integer algorithms (defined in intmat.cpp) ---

// Fraction-free determinant (Bareiss).
Int bareiss_det(const IntMat& a);

// Rank over Q.
int int_rank(const IntMat& a);

// Unique row Hermite normal form; zero rows dropped. Row span is preserved
// by unimodular operations, so this canonicalizes sublattice bases.
IntMat row_hnf(const IntMat& a);

// Z-basis of {x in Z^n : a x = 0}. The result is saturated (an integer
// multiple of x lies in the kernel iff x does) and in row HNF.
std::vector<IntVec> integer_kernel(const IntMat& a);

// Z-basis of the saturation of the column span of a, i.e. span_Q(cols) n Z^n.
std::vector<IntVec> saturated_image(const IntMat& a);

inline IntMat mat_from_vec_rows(const std::vector<IntVec>& rows, int cols) {
    IntMat m(int(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i) {
        if (rows[i].size() != size_t(cols))
            throw DimensionMismatch("vector length does not match matrix width");
        for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

}  // namespace hk

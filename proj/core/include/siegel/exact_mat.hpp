#pragma once

#include <stdexcept>
#include <vector>

#include "siegel/scalars.hpp"

namespace siegel {

// Small dense matrix over an exact field (Rational, GaussianRational, ...).
// Dimensions here never exceed a few dozen, so plain Gauss elimination with
// nonzero pivoting is all we need.
template <class T>
class ExactMat {
  public:
    ExactMat() : rows_(0), cols_(0) {}
    ExactMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

    static ExactMat identity(int n) {
        ExactMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return a_[i * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[i * cols_ + j]; }

    ExactMat transpose() const {
        ExactMat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    ExactMat operator-() const {
        ExactMat r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }

    ExactMat& operator+=(const ExactMat& o) {
        check_same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    ExactMat& operator-=(const ExactMat& o) {
        check_same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }

    friend ExactMat operator+(ExactMat a, const ExactMat& b) { return a += b; }
    friend ExactMat operator-(ExactMat a, const ExactMat& b) { return a -= b; }

    friend ExactMat operator*(const ExactMat& a, const ExactMat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("ExactMat: shape mismatch in product");
        ExactMat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend ExactMat operator*(const T& s, ExactMat m) {
        for (auto& x : m.a_) x = s * x;
        return m;
    }
    friend ExactMat operator*(ExactMat m, const T& s) {
        for (auto& x : m.a_) x = x * s;
        return m;
    }

    bool operator==(const ExactMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const ExactMat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!(x == T(0))) return false;
        return true;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

    T trace() const {
        T t(0);
        for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    ExactMat block(int i0, int j0, int r, int c) const {
        ExactMat b(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
        return b;
    }

    void set_block(int i0, int j0, const ExactMat& b) {
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }

    T det() const {
        if (rows_ != cols_) throw std::invalid_argument("ExactMat: det of non-square");
        ExactMat m = *this;
        T d(1);
        for (int c = 0; c < cols_; ++c) {
            int p = -1;
            for (int r = c; r < rows_; ++r)
                if (!(m(r, c) == T(0))) {
                    p = r;
                    break;
                }
            if (p < 0) return T(0);
            if (p != c) {
                for (int j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
                d = -d;
            }
            d *= m(c, c);
            T inv = T(1) / m(c, c);
            for (int r = c + 1; r < rows_; ++r) {
                T f = m(r, c) * inv;
                if (f == T(0)) continue;
                for (int j = c; j < cols_; ++j) m(r, j) -= f * m(c, j);
            }
        }
        return d;
    }

    ExactMat inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("ExactMat: inverse of non-square");
        int n = rows_;
        ExactMat m = *this, inv = identity(n);
        for (int c = 0; c < n; ++c) {
            int p = -1;
            for (int r = c; r < n; ++r)
                if (!(m(r, c) == T(0))) {
                    p = r;
                    break;
                }
            if (p < 0) throw std::domain_error("ExactMat: singular matrix");
            if (p != c)
                for (int j = 0; j < n; ++j) {
                    std::swap(m(p, j), m(c, j));
                    std::swap(inv(p, j), inv(c, j));
                }
            T piv = T(1) / m(c, c);
            for (int j = 0; j < n; ++j) {
                m(c, j) *= piv;
                inv(c, j) *= piv;
            }
            for (int r = 0; r < n; ++r) {
                if (r == c) continue;
                T f = m(r, c);
                if (f == T(0)) continue;
                for (int j = 0; j < n; ++j) {
                    m(r, j) -= f * m(c, j);
                    inv(r, j) -= f * inv(c, j);
                }
            }
        }
        return inv;
    }

    int rank() const {
        ExactMat m = *this;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int p = -1;
            for (int i = r; i < rows_; ++i)
                if (!(m(i, c) == T(0))) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            if (p != r)
                for (int j = 0; j < cols_; ++j) std::swap(m(p, j), m(r, j));
            T inv = T(1) / m(r, c);
            for (int i = r + 1; i < rows_; ++i) {
                T f = m(i, c) * inv;
                if (f == T(0)) continue;
                for (int j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
            }
            ++r;
        }
        return r;
    }

  private:
    void check_same_shape(const ExactMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("ExactMat: shape mismatch");
    }

    int rows_, cols_;
    std::vector<T> a_;
};

using RatMat = ExactMat<Rational>;
using GaussMat = ExactMat<GaussianRational>;

inline GaussMat to_gauss(const RatMat& m) {
    GaussMat g(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) g(i, j) = GaussianRational(m(i, j));
    return g;
}

inline RatMat real_part(const GaussMat& m) {
    RatMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).re;
    return r;
}

inline RatMat imag_part(const GaussMat& m) {
    RatMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).im;
    return r;
}

inline GaussMat conj(const GaussMat& m) {
    GaussMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).conj();
    return r;
}

// Sylvester criterion via rational LDL^t: true iff symmetric M is positive
// definite, decided exactly.
bool rat_positive_definite(const RatMat& m);

// Kronecker product, used to flatten sigma(c x Y tx) quadratic forms.
RatMat rat_kron(const RatMat& a, const RatMat& b);

// Solve A x = b over the field; A square nonsingular.
template <class T>
std::vector<T> exact_solve(const ExactMat<T>& a, const std::vector<T>& b) {
    ExactMat<T> inv = a.inverse();
    std::vector<T> x(a.rows(), T(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) x[i] += inv(i, j) * b[j];
    return x;
}

} // namespace siegel

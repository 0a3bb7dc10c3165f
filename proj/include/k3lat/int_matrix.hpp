#ifndef K3LAT_INT_MATRIX_HPP
#define K3LAT_INT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "k3lat/rational.hpp"

namespace k3lat {

// Dense matrix over Z with arbitrary-precision entries. Dimensions are fixed
// at construction; entries are mutable through at().
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    bool is_symmetric() const;
    bool is_square() const { return rows_ == cols_; }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

// Dense matrix over Q.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_int(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    RatMatrix operator*(const RatMatrix& o) const;
    bool is_integral() const;
    IntMatrix to_int() const;  // throws DomainError on non-integral entries

private:
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

// Smith normal form U*A*V = D with U, V unimodular and the diagonal of D
// nonnegative, divisibility-sorted (1s first, zeros last).
struct SnfResult {
    IntMatrix d, u, v;
    int sign_u = 1;  // det(U), always +-1
    int sign_v = 1;  // det(V)
    std::vector<Int> diagonal() const;
    std::vector<Int> nontrivial_divisors() const;  // entries > 1
};

SnfResult snf(const IntMatrix& a);

// Bareiss fraction-free elimination; throws DimensionError on non-square input.
Int det(const IntMatrix& a);

// det via SNF: sign(U)*sign(V)*prod(d_i). Used as the independent route in
// cross-checks.
Int det_via_snf(const IntMatrix& a);

// Exact inverse over Q. Throws SingularMatrixError / DimensionError.
RatMatrix rational_inverse(const IntMatrix& a);
RatMatrix rational_inverse(const RatMatrix& a);

std::size_t rank(const IntMatrix& a);

// (positive, negative) inertia counts of a symmetric matrix, computed by
// congruence diagonalization over Q.
std::pair<std::size_t, std::size_t> signature(const IntMatrix& a);

// Basis of the saturated integer kernel {x : a*x = 0}, returned as columns.
IntMatrix integer_kernel(const IntMatrix& a);

} // namespace k3lat

#endif

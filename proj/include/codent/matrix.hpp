#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "codent/cyclo.hpp"

namespace codent {

/// Polynomial in the formal variable t with Cyclo8 coefficients.
/// Trailing zero coefficients are trimmed; the zero polynomial has no
/// coefficients and degree -1.
class TPoly {
  public:
    TPoly() = default;
    explicit TPoly(std::vector<Cyclo8> coeffs) : c_(std::move(coeffs)) { trim(); }
    static TPoly one() { return TPoly({Cyclo8(1)}); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Cyclo8 coeff(size_t i) const { return i < c_.size() ? c_[i] : Cyclo8(); }
    const std::vector<Cyclo8>& coeffs() const { return c_; }

    TPoly operator*(const TPoly& o) const;
    TPoly operator+(const TPoly& o) const;
    bool operator==(const TPoly& o) const { return c_ == o.c_; }

    std::string to_text() const;

  private:
    void trim();
    std::vector<Cyclo8> c_;
};

/// Dense exact matrix over Q(zeta8).
class CMatrix {
  public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    static CMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Cyclo8& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Cyclo8& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    const std::vector<Cyclo8>& entries() const { return e_; }

    CMatrix operator*(const CMatrix& o) const;
    CMatrix operator+(const CMatrix& o) const;
    CMatrix operator-(const CMatrix& o) const;
    CMatrix scaled(const Cyclo8& s) const;
    CMatrix transpose() const;
    /// Entrywise z -> z^-1 composed with transpose.
    CMatrix conj_transpose() const;
    bool is_identity() const;
    /// M * conj(M)^T == I under the exact Q(zeta8) conjugation.
    bool is_unitary() const;
    /// At most one nonzero entry per row and per column.
    bool is_monomial() const;
    bool is_diagonal() const;

    /// Exact determinant by division-based elimination; ShapeError if non-square.
    Cyclo8 det() const;
    /// det(I - t*M) as a polynomial with constant term 1.
    TPoly char_det() const;
    /// Basis of the right kernel; empty iff full column rank.
    std::vector<std::vector<Cyclo8>> nullspace() const;
    size_t rank() const;
    CMatrix inverse() const;

    /// Injective byte-string key; equal matrices map to identical bytes.
    std::string canonical_key() const;

    bool operator==(const CMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const CMatrix& o) const { return !(*this == o); }

    /// Bracketed, column-aligned layout for fixture diffs.
    std::string to_text() const;

  private:
    size_t rows_, cols_;
    std::vector<Cyclo8> e_;
};

} // namespace codent

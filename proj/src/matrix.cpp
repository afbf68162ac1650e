#include "codent/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace codent {

void TPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TPoly TPoly::operator*(const TPoly& o) const {
    if (c_.empty() || o.c_.empty()) return TPoly();
    std::vector<Cyclo8> out(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    return TPoly(std::move(out));
}

TPoly TPoly::operator+(const TPoly& o) const {
    std::vector<Cyclo8> out(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < c_.size()) out[i] += c_[i];
        if (i < o.c_.size()) out[i] += o.c_[i];
    }
    return TPoly(std::move(out));
}

std::string TPoly::to_text() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string term = c_[i].to_text();
        bool neg = false;
        if (term[0] == '-' && term.find(' ') == std::string::npos) {
            neg = true;
            term = term.substr(1);
        } else if (term.find(' ') != std::string::npos || term.find('+') != std::string::npos) {
            term = "(" + term + ")";
        }
        if (i > 0) {
            if (term == "1")
                term = "";
            else
                term += "*";
            term += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

CMatrix CMatrix::identity(size_t n) {
    CMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyclo8(1);
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    if (cols_ != o.rows_)
        throw ShapeError("matrix product shape mismatch: " + std::to_string(cols_) + " vs " +
                         std::to_string(o.rows_));
    CMatrix out(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Cyclo8& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Cyclo8& b = o.at(k, j);
                if (!b.is_zero()) out.at(i, j) += a * b;
            }
        }
    return out;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
    CMatrix out = *this;
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] += o.e_[i];
    return out;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
    CMatrix out = *this;
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] -= o.e_[i];
    return out;
}

CMatrix CMatrix::scaled(const Cyclo8& s) const {
    CMatrix out = *this;
    for (auto& x : out.e_) x *= s;
    return out;
}

CMatrix CMatrix::transpose() const {
    CMatrix out(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

CMatrix CMatrix::conj_transpose() const {
    CMatrix out(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).conj();
    return out;
}

bool CMatrix::is_identity() const {
    if (!is_square()) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

bool CMatrix::is_unitary() const {
    if (!is_square()) return false;
    return (*this * conj_transpose()).is_identity();
}

bool CMatrix::is_monomial() const {
    if (!is_square()) return false;
    std::vector<int> col_hits(cols_, 0);
    for (size_t i = 0; i < rows_; ++i) {
        int row_hits = 0;
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) {
                ++row_hits;
                ++col_hits[j];
            }
        if (row_hits > 1) return false;
    }
    return std::all_of(col_hits.begin(), col_hits.end(), [](int h) { return h <= 1; });
}

bool CMatrix::is_diagonal() const {
    if (!is_square()) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

Cyclo8 CMatrix::det() const {
    if (!is_square()) throw ShapeError("determinant of non-square matrix");
    CMatrix m = *this;
    Cyclo8 d(1);
    for (size_t c = 0; c < cols_; ++c) {
        size_t pivot = c;
        while (pivot < rows_ && m.at(pivot, c).is_zero()) ++pivot;
        if (pivot == rows_) return Cyclo8();
        if (pivot != c) {
            for (size_t j = c; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Cyclo8 inv = m.at(c, c).inv();
        for (size_t r = c + 1; r < rows_; ++r) {
            if (m.at(r, c).is_zero()) continue;
            Cyclo8 f = m.at(r, c) * inv;
            for (size_t j = c; j < cols_; ++j) m.at(r, j) -= f * m.at(c, j);
        }
    }
    return d;
}

TPoly CMatrix::char_det() const {
    if (!is_square()) throw ShapeError("char_det of non-square matrix");
    size_t n = rows_;
    // Faddeev-LeVerrier: M1 = M, c_k = tr(M_k)/k, M_{k+1} = M(M_k - c_k I);
    // then det(I - tM) = 1 - c_1 t - c_2 t^2 - ... - c_n t^n.
    std::vector<Cyclo8> coeffs(n + 1);
    coeffs[0] = Cyclo8(1);
    CMatrix mk = *this;
    for (size_t k = 1; k <= n; ++k) {
        Cyclo8 tr;
        for (size_t i = 0; i < n; ++i) tr += mk.at(i, i);
        Cyclo8 ck = tr * Cyclo8(Rational(1, static_cast<long>(k)));
        coeffs[k] = -ck;
        if (k == n) break;
        for (size_t i = 0; i < n; ++i) mk.at(i, i) -= ck;
        mk = *this * mk;
    }
    return TPoly(std::move(coeffs));
}

namespace {

// Reduced row echelon form in place; returns pivot column list.
std::vector<size_t> rref(CMatrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m.at(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Cyclo8 inv = m.at(r, c).inv();
        for (size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Cyclo8 f = m.at(i, c);
            for (size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::vector<std::vector<Cyclo8>> CMatrix::nullspace() const {
    CMatrix m = *this;
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Cyclo8>> basis;
    for (size_t fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Cyclo8> v(cols_);
        v[fc] = Cyclo8(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

size_t CMatrix::rank() const {
    CMatrix m = *this;
    return rref(m).size();
}

CMatrix CMatrix::inverse() const {
    if (!is_square()) throw ShapeError("inverse of non-square matrix");
    CMatrix aug(rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Cyclo8(1);
    }
    std::vector<size_t> pivots = rref(aug);
    if (pivots.size() != rows_ || (!pivots.empty() && pivots.back() >= cols_))
        throw DomainError("matrix is singular");
    CMatrix out(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
    return out;
}

std::string CMatrix::canonical_key() const {
    std::string key = "M" + std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
    for (const auto& x : e_) {
        for (int i = 0; i < 4; ++i) {
            key += x.coeff(i).get_str();
            key += ',';
        }
        key += ';';
    }
    return key;
}

std::string CMatrix::to_text() const {
    std::vector<std::string> cells(e_.size());
    std::vector<size_t> width(cols_, 0);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            cells[i * cols_ + j] = at(i, j).to_text();
            width[j] = std::max(width[j], cells[i * cols_ + j].size());
        }
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << "[ ";
        for (size_t j = 0; j < cols_; ++j) {
            const std::string& s = cells[i * cols_ + j];
            os << s << std::string(width[j] - s.size(), ' ');
            if (j + 1 < cols_) os << "  ";
        }
        os << " ]\n";
    }
    return os.str();
}

} // namespace codent

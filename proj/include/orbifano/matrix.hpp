#pragma once

#include "orbifano/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace orbifano {

// Dense integer matrix, row-major. Small sizes only (the whole artifact
// lives below 12x12), so no attempt at sparsity or blocking.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
  IntMat(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : init) {
      if (r.size() != cols_) throw std::invalid_argument("ragged initializer");
      for (long long x : r) a_.emplace_back(x);
    }
  }

  static IntMat identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMat from_rows(const std::vector<IVec>& rows) {
    IntMat m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMat from_cols(const std::vector<IVec>& cols) {
    IntMat m(cols.empty() ? 0 : cols.front().size(), cols.size());
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (cols[j].size() != m.rows_) throw std::invalid_argument("ragged cols");
      for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IVec row(std::size_t i) const {
    IVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }
  IVec col(std::size_t j) const {
    IVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  IntMat transpose() const {
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  IntMat mul(const IntMat& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("dim mismatch");
    IntMat out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& x = at(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < other.cols_; ++j)
          out.at(i, j) += x * other.at(k, j);
      }
    return out;
  }

  IVec mul_vec(const IVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dim mismatch");
    IVec out(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
  }

  IntMat submatrix(const std::vector<std::size_t>& ris,
                   const std::vector<std::size_t>& cis) const {
    IntMat out(ris.size(), cis.size());
    for (std::size_t i = 0; i < ris.size(); ++i)
      for (std::size_t j = 0; j < cis.size(); ++j)
        out.at(i, j) = at(ris[i], cis[j]);
    return out;
  }

  IntMat columns(const std::vector<std::size_t>& cis) const {
    std::vector<std::size_t> ris(rows_);
    for (std::size_t i = 0; i < rows_; ++i) ris[i] = i;
    return submatrix(ris, cis);
  }

  IntMat drop_column(std::size_t j) const {
    std::vector<std::size_t> cis;
    for (std::size_t c = 0; c < cols_; ++c)
      if (c != j) cis.push_back(c);
    return columns(cis);
  }

  bool operator==(const IntMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

// Fraction-free Bareiss determinant; exact for any size.
Int det(const IntMat& m);

// Rank over Q.
std::size_t rank_q(const IntMat& m);

IVec vec_add(const IVec& a, const IVec& b);
IVec vec_sub(const IVec& a, const IVec& b);
IVec vec_neg(const IVec& a);
IVec vec_scale(const IVec& a, const Int& s);
bool vec_is_zero(const IVec& a);
Int vec_gcd(const IVec& a);
// divide by the gcd, fixing the sign so the first nonzero entry is positive
IVec vec_primitive(const IVec& a);
QVec to_qvec(const IVec& a);

}  // namespace orbifano

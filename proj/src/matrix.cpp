#include "orbifano/matrix.hpp"

namespace orbifano {

Int det(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::size_t rank_q(const IntMat& m) {
  IntMat a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a.at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(p, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a.at(i, c) == 0) continue;
      Int g = gcd_int(a.at(i, c), a.at(r, c));
      Int fi = a.at(r, c) / g, fr = a.at(i, c) / g;
      for (std::size_t j = 0; j < cols; ++j)
        a.at(i, j) = a.at(i, j) * fi - a.at(r, j) * fr;
    }
    ++r;
  }
  return r;
}

IVec vec_add(const IVec& a, const IVec& b) {
  IVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IVec vec_sub(const IVec& a, const IVec& b) {
  IVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IVec vec_neg(const IVec& a) {
  IVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

IVec vec_scale(const IVec& a, const Int& s) {
  IVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

bool vec_is_zero(const IVec& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

Int vec_gcd(const IVec& a) {
  Int g = 0;
  for (const Int& x : a) g = gcd_int(g, x);
  return g;
}

IVec vec_primitive(const IVec& a) {
  Int g = vec_gcd(a);
  if (g == 0) return a;
  IVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] / g;
  for (const Int& x : out) {
    if (x == 0) continue;
    if (x < 0)
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = -out[i];
    break;
  }
  return out;
}

QVec to_qvec(const IVec& a) {
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = Rat(a[i]);
  return out;
}

}  // namespace orbifano

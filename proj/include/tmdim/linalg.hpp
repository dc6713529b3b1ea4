#pragma once

#include "tmdim/rational.hpp"

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace tmdim {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  std::vector<Rational> multiply(const std::vector<Rational>& v) const {
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (sgn((*this)(r, c)) != 0) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

namespace detail {

// Scales every row to integers (multiplying by the lcm of its denominators)
// and drops zero rows.
inline std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer lcm(1);
    bool nonzero = false;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(m(r, c)) == 0) continue;
      nonzero = true;
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    if (!nonzero) continue;
    std::vector<Integer> row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) row[c] = m(r, c).get_num() * (lcm / m(r, c).get_den());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void remove_content(std::vector<Integer>& row, std::size_t from) {
  Integer g(0);
  for (std::size_t c = from; c < row.size(); ++c) {
    if (sgn(row[c]) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[c].get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (std::size_t c = from; c < row.size(); ++c)
    if (sgn(row[c]) != 0) mpz_divexact(row[c].get_mpz_t(), row[c].get_mpz_t(), g.get_mpz_t());
}

}  // namespace detail

/// Exact rank. Rows are cleared of denominators, then eliminated with
/// integer-preserving cross multiplication; each updated row is divided by
/// its content to bound coefficient growth. Pivot: first row (in current
/// order) with a nonzero entry in the column.
inline std::size_t rank(const RationalMatrix& m) {
  auto rows = detail::integer_rows(m);
  const std::size_t ncols = m.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const auto& prow = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      auto& row = rows[r];
      if (sgn(row[c]) == 0) continue;
      Integer g;
      mpz_gcd(g.get_mpz_t(), prow[c].get_mpz_t(), row[c].get_mpz_t());
      Integer fp = prow[c] / g;
      Integer fr = row[c] / g;
      row[c] = 0;
      for (std::size_t j = c + 1; j < ncols; ++j) {
        const bool pz = sgn(prow[j]) == 0;
        if (sgn(row[j]) == 0) {
          if (!pz) row[j] = -fr * prow[j];
        } else {
          row[j] *= fp;
          if (!pz) row[j] -= fr * prow[j];
        }
      }
      detail::remove_content(row, c + 1);
    }
    ++rank;
  }
  return rank;
}

inline std::size_t nullity(const RationalMatrix& m) { return m.cols() - rank(m); }

/// Reduced row echelon form over the rationals; returns pivot columns.
inline std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rational inv = 1 / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (sgn(m(row, j)) != 0) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(row, j)) != 0) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

/// Basis of ker(m): one vector per free column of the RREF, with a 1 in
/// that column.
inline std::vector<std::vector<Rational>> null_space_basis(const RationalMatrix& m) {
  RationalMatrix work = m;
  auto pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -work(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Text dump: header "rows cols", then one line per row of "p/q" entries.
inline void write_matrix(std::ostream& os, const RationalMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << to_fraction_string(m(r, c));
    }
    os << '\n';
  }
}

inline RationalMatrix read_matrix(std::istream& is) {
  std::size_t rows = 0, cols = 0;
  if (!(is >> rows >> cols)) throw ParseError("matrix dump: missing 'rows cols' header");
  RationalMatrix m(rows, cols);
  std::string token;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(is >> token)) throw ParseError("matrix dump: truncated at row " + std::to_string(r));
      m(r, c) = parse_rational(token);
    }
  if (is >> token) throw ParseError("matrix dump: trailing data '" + token + "'");
  return m;
}

}  // namespace tmdim

#include "dehnkit/matrix.hpp"

#include <regex>

namespace dehnkit {

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols, Integer(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("int_matrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

namespace {

template <class T, class Div>
T bareiss(Matrix<T> a, const T& one, Div exact_div) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == a(k, k) - a(k, k)) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == a(p, k) - a(p, k)) ++p;
      if (p == n) return one - one;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = a(i, j) * a(k, k);
        v -= a(i, k) * a(k, j);
        a(i, j) = exact_div(v, prev);
      }
    }
    prev = a(k, k);
  }
  T det = a(n - 1, n - 1);
  return negate ? T(-det) : det;
}

template <class T>
T cofactor(const Matrix<T>& m, const T& one) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return one;
  if (n == 1) return m(0, 0);
  T total = one - one;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == m(0, j) - m(0, j)) continue;
    T minor = cofactor(m.without_row(0).without_column(j), one);
    T term = m(0, j) * minor;
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  return bareiss<Integer>(m, Integer(1), [](const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  });
}

LaurentPoly determinant(const LaurentMatrix& m) {
  return bareiss<LaurentPoly>(m, LaurentPoly::constant(1, 1),
                              [](const LaurentPoly& a, const LaurentPoly& b) { return univariate::divide_exact(a, b); });
}

Integer determinant_by_cofactors(const IntMatrix& m) { return cofactor<Integer>(m, Integer(1)); }

LaurentPoly determinant_by_cofactors(const LaurentMatrix& m) {
  return cofactor<LaurentPoly>(m, LaurentPoly::constant(1, 1));
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) -= b(i, j);
  return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) += b(i, j);
  return r;
}

LaurentMatrix minus_t_times(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
  LaurentMatrix r(a.rows(), a.cols(), LaurentPoly(1));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      LaurentPoly p = LaurentPoly::constant(1, a(i, j));
      p -= LaurentPoly::monomial({1}, b(i, j));
      r(i, j) = p;
    }
  r.row_tags = a.row_tags;
  r.col_tags = a.col_tags;
  return r;
}

bool is_zero(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

bool is_symmetric(const IntMatrix& m) { return m.rows() == m.cols() && m == m.transpose(); }

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << m(i, j).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

namespace {

template <class T, class F>
std::string latex(const Matrix<T>& m, F render) {
  std::ostringstream out;
  out << "\\begin{pmatrix}";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? " \\\\ " : " ");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " & " : "") << render(m(i, j));
  }
  out << " \\end{pmatrix}";
  return out.str();
}

}  // namespace

std::string to_latex(const IntMatrix& m) {
  return latex(m, [](const Integer& x) { return x.get_str(); });
}

std::string to_latex(const LaurentMatrix& m) {
  return latex(m, [](const LaurentPoly& p) {
    std::string s = p.to_string();
    return std::regex_replace(s, std::regex(R"(\^(-?\d+))"), "^{$1}");
  });
}

}  // namespace dehnkit

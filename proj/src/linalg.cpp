#include "singlocus/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace singlocus {

std::string to_string(const Rat& q) { return q.get_str(); }

Rat parse_rat(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Rat q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vec operator*(const Rat& s, const Vec& v) {
  Vec out(v);
  for (auto& x : out) x *= s;
  return out;
}

Rat dot(const Vec& a, const Vec& b) {
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Vec clear_denominators(const Vec& v) {
  Integer l = 1;
  for (const auto& x : v) {
    if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  Integer g = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    Integer num = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g == 0) return v;
  Rat factor(l, g);
  factor.canonicalize();
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * factor;
  return out;
}

Mat::Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat();
  Mat m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Mat::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Mat::col(std::size_t j) const {
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return x == 0; });
}

Rat Mat::trace() const {
  Rat t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  Mat out(a);
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  Mat out(a);
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch");
  Mat out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

Mat operator*(const Rat& s, const Mat& a) {
  Mat out(a);
  for (auto& x : out.data_) x *= s;
  return out;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("shape mismatch");
  Vec out(a.rows_, Rat(0));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (v[j] != 0 && a(i, j) != 0) out[i] += a(i, j) * v[j];
  return out;
}

namespace {

// Scales each row by the lcm of its denominators. Row scaling by nonzero
// integers preserves rank and null space.
std::vector<std::vector<Integer>> integer_rows(const Mat& m, Integer* scale_product) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  if (scale_product) *scale_product = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& x = m(i, j);
      if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& x = m(i, j);
      if (x != 0) out[i][j] = x.get_num() * (l / x.get_den());
    }
    if (scale_product) *scale_product *= l;
  }
  return out;
}

// Single-step fraction-free elimination in place; returns pivot columns.
// After step k every remaining entry is a (k+1)-minor of the input, so the
// division by the previous pivot is exact.
std::vector<std::size_t> eliminate(std::vector<std::vector<Integer>>& a, std::size_t cols,
                                   int* swap_parity) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  Integer prev = 1;
  Integer t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      if (swap_parity) *swap_parity ^= 1;
    }
    const Integer& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      Integer& lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        // a[i][j] = (piv * a[i][j] - lead * a[r][j]) / prev
        t = piv * a[i][j];
        if (lead != 0 && a[r][j] != 0) t -= lead * a[r][j];
        if (prev != 1) mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      lead = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Echelon bareiss_echelon(const Mat& m) {
  Echelon e;
  e.cols = m.cols();
  e.rows = integer_rows(m, nullptr);
  e.pivots = eliminate(e.rows, m.cols(), nullptr);
  e.rows.resize(e.pivots.size());
  return e;
}

std::size_t rank(const Mat& m) { return bareiss_echelon(m).pivots.size(); }

std::vector<Vec> kernel_basis(const Mat& m) {
  const Echelon e = bareiss_echelon(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec x(n, Rat(0));
    x[f] = 1;
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
      const auto& row = e.rows[k];
      Rat acc = 0;
      for (std::size_t j = e.pivots[k] + 1; j < n; ++j) {
        if (row[j] != 0 && x[j] != 0) acc += Rat(row[j]) * x[j];
      }
      x[e.pivots[k]] = -acc / Rat(row[e.pivots[k]]);
    }
    out.push_back(clear_denominators(x));
  }
  return out;
}

Rat det(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer scale;
  auto a = integer_rows(m, &scale);
  int parity = 0;
  const auto pivots = eliminate(a, n, &parity);
  if (pivots.size() < n) return 0;
  // Bareiss: the last pivot is the determinant of the integer matrix.
  Rat d(a[n - 1][n - 1]);
  if (parity) d = -d;
  return d / Rat(scale);
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const Echelon e = bareiss_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  const std::size_t n = m.cols();
  Vec x(n, Rat(0));
  for (std::size_t k = e.pivots.size(); k-- > 0;) {
    const auto& row = e.rows[k];
    Rat acc(row[n]);
    for (std::size_t j = e.pivots[k] + 1; j < n; ++j) {
      if (row[j] != 0 && x[j] != 0) acc -= Rat(row[j]) * x[j];
    }
    x[e.pivots[k]] = acc / Rat(row[e.pivots[k]]);
  }
  return x;
}

Mat inverse(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Mat a(m);
  Mat inv = Mat::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("inverse: matrix is singular");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const Rat piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rat f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (a(c, j) != 0) a(i, j) -= f * a(c, j);
        if (inv(c, j) != 0) inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace singlocus

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "singlocus/rational.hpp"

namespace singlocus {

/// Dense matrix of exact rationals, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat from_cols(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  Mat transpose() const;
  bool is_zero() const;
  Rat trace() const;

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const Rat& s, const Mat& a);
  friend Vec operator*(const Mat& a, const Vec& v);
  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Row echelon form produced by fraction-free (Bareiss) elimination.
/// `rows` holds the integer echelon rows, `pivots[k]` the pivot column of row k.
struct Echelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;
};

Echelon bareiss_echelon(const Mat& m);

std::size_t rank(const Mat& m);

/// Basis of the right null space; length cols - rank. Each vector is a
/// primitive integer vector whose free coordinate equals a positive value.
std::vector<Vec> kernel_basis(const Mat& m);

/// Throws std::invalid_argument on non-square input.
Rat det(const Mat& m);

/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Throws std::domain_error when singular.
Mat inverse(const Mat& m);

/// Incrementally maintained span of sparse vectors, kept in leading-term
/// echelon form. Each stored row has leading coefficient 1 at its smallest key.
template <class Key>
class SparseSpan {
 public:
  using Vector = std::map<Key, Rat>;

  /// Reduces v against the stored rows. The result is zero iff v lies in the span.
  Vector reduce(Vector v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      const Key key = it->first;
      const Rat coef = it->second;
      for (const auto& [k, c] : rows_[p->second]) {
        auto [slot, inserted] = v.try_emplace(k, 0);
        slot->second -= coef * c;
        if (slot->second == 0) v.erase(slot);
      }
      it = v.upper_bound(key);
    }
    return v;
  }

  /// Adds v; returns true iff it was independent of the current span.
  bool insert(const Vector& v) {
    Vector red = reduce(v);
    if (red.empty()) return false;
    const Rat lead = red.begin()->second;
    for (auto& [k, c] : red) c /= lead;
    pivots_.emplace(red.begin()->first, rows_.size());
    rows_.push_back(std::move(red));
    return true;
  }

  bool contains(const Vector& v) const { return reduce(v).empty(); }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }

 private:
  std::vector<Vector> rows_;
  std::map<Key, std::size_t> pivots_;
};

}  // namespace singlocus

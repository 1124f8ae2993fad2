#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arrtool/rational.hpp"

namespace arrtool {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& k);
  /// col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& k);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

BigInt determinant(const IntMatrix& m);

struct SmithForm {
  /// min(rows, cols) nonnegative entries with d1 | d2 | ...; zeros last.
  std::vector<BigInt> diagonal;
  IntMatrix left;
  IntMatrix right;
  /// left * a * right
  IntMatrix reduced;
};

/// Unimodular left/right transforms with left * a * right diagonal.
SmithForm smith_normal_form(const IntMatrix& a);

/// Finitely generated abelian group Z^free_rank + sum Z/torsion[i].
struct AbelianGroupDescription {
  std::size_t free_rank = 0;
  /// Divisors > 1 with torsion[i] | torsion[i + 1].
  std::vector<BigInt> torsion;

  /// "Z^3", "Z/2 + Z^1", "0".
  std::string str() const;
  friend bool operator==(const AbelianGroupDescription&, const AbelianGroupDescription&) = default;
};

/// Cokernel of the relation matrix (rows = relations, cols = generators).
AbelianGroupDescription cokernel(const IntMatrix& relations);

}  // namespace arrtool

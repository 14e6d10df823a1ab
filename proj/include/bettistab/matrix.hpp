#pragma once

#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace bettistab {

/// Dense integer matrix in row-major storage. Boundary matrices only ever
/// hold -1, 0, 1; elimination intermediates live elsewhere.
class IntegerMatrix {
public:
  IntegerMatrix() : rows_(0), cols_(0) {}
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  IntegerMatrix transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend bool operator==(const IntegerMatrix& x, const IntegerMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

private:
  std::size_t rows_, cols_;
  std::vector<std::int64_t> a_;
};

}  // namespace bettistab

#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <vector>

#include "sacat/error.hpp"

namespace sacat {

using Int = mpz_class;

/// Sparse integer matrix with arbitrary-precision entries. Absent entries are
/// zero. Rows are maps column -> value.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(uint32_t rows, uint32_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    static IntMatrix identity(uint32_t n);
    static IntMatrix diagonal(const std::vector<Int>& d);

    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }

    const Int& get(uint32_t r, uint32_t c) const;
    void set(uint32_t r, uint32_t c, Int v);
    void add(uint32_t r, uint32_t c, const Int& v);

    const std::map<uint32_t, Int>& row(uint32_t r) const { return data_[r]; }

    size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }

    IntMatrix multiply(const IntMatrix& other) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix& other) const;

    /// Matrix-vector product over the integers.
    std::vector<Int> apply(const std::vector<Int>& v) const;

  private:
    uint32_t rows_ = 0, cols_ = 0;
    std::vector<std::map<uint32_t, Int>> data_;
};

struct SnfResult {
    IntMatrix d;                 // diagonal, d1 | d2 | ..., nonnegative
    IntMatrix u, uinv;           // unimodular row transform, u * m * v = d
    IntMatrix v, vinv;
    uint32_t rank = 0;           // number of nonzero diagonal entries
    std::vector<Int> diagonal;   // first min(rows,cols) entries of d
};

/// Smith normal form with deterministic pivoting (least |value|, ties by
/// (row, col)). Postcondition u*m*v = d is asserted on every call through the
/// factored identity u*m == d*vinv together with v*vinv == I.
SnfResult smith_normal_form(const IntMatrix& m);

} // namespace sacat

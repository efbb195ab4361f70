#pragma once

#include <cstdint>
#include <vector>

#include "sacat/error.hpp"

namespace sacat {

/// Dense incremental row echelon over F2 with bitset rows. Pivot rows are
/// kept in insertion order; each stored row is zero at the pivot columns of
/// all earlier rows, so reducing a new row is a single in-order pass.
class EchelonF2 {
  public:
    explicit EchelonF2(uint32_t cols);

    /// Returns true when the row became a new pivot.
    bool add_sparse(const std::vector<uint32_t>& one_cols);
    bool add_dense(std::vector<uint64_t> row);

    uint32_t rank() const { return static_cast<uint32_t>(pivot_cols_.size()); }
    uint32_t cols() const { return cols_; }

    /// In-place reduction against the pivot set; true if it vanished.
    bool reduce(std::vector<uint64_t>& row) const;

    /// Back-substitutes to reduced echelon form; required before kernel().
    void finalize();
    /// Basis of {x : R x = 0 for every inserted row R}, one bitset per free
    /// column, deterministic order.
    std::vector<std::vector<uint64_t>> kernel() const;

    std::vector<uint64_t> zero_row() const { return std::vector<uint64_t>(blocks_, 0); }
    static bool get_bit(const std::vector<uint64_t>& row, uint32_t c) {
        return (row[c >> 6] >> (c & 63)) & 1;
    }
    static void flip_bit(std::vector<uint64_t>& row, uint32_t c) { row[c >> 6] ^= 1ull << (c & 63); }

    const std::vector<std::vector<uint64_t>>& pivot_rows() const { return rows_; }
    const std::vector<uint32_t>& pivot_columns() const { return pivot_cols_; }

  private:
    uint32_t cols_, blocks_;
    std::vector<std::vector<uint64_t>> rows_;
    std::vector<uint32_t> pivot_cols_;
    std::vector<int32_t> pivot_at_; // col -> row index or -1
    bool rref_ = false;
};

/// Dense incremental row echelon over F_p for odd p, canonical values with
/// lazy in-pass accumulation.
class EchelonModP {
  public:
    EchelonModP(uint32_t cols, uint32_t p);

    bool add_sparse(const std::vector<std::pair<uint32_t, int32_t>>& entries);
    bool add_dense(std::vector<uint32_t> row);

    uint32_t rank() const { return static_cast<uint32_t>(pivot_cols_.size()); }
    uint32_t prime() const { return p_; }

    bool reduce(std::vector<uint32_t>& row) const;
    void finalize();
    std::vector<std::vector<uint32_t>> kernel() const;

    std::vector<uint32_t> zero_row() const { return std::vector<uint32_t>(cols_, 0); }

    const std::vector<std::vector<uint32_t>>& pivot_rows() const { return rows_; }
    const std::vector<uint32_t>& pivot_columns() const { return pivot_cols_; }

  private:
    uint32_t inv_mod(uint32_t a) const;
    uint32_t cols_, p_;
    std::vector<std::vector<uint32_t>> rows_;
    std::vector<uint32_t> pivot_cols_;
    std::vector<int32_t> pivot_at_;
    bool rref_ = false;
};

/// Layered echelon over Z/4 for the 2-adic elementary divisor counts: n0
/// unit pivots, n1 second-layer pivots among the halved residues. The
/// low-bit planes of the pivots double as an F2 echelon of the row space.
class LayeredMod4 {
  public:
    explicit LayeredMod4(uint32_t cols);

    void add_sparse(const std::vector<std::pair<uint32_t, int32_t>>& entries);

    struct Result {
        uint32_t n0 = 0, n1 = 0;
    };
    Result finish();

    /// F2 echelon built from the low planes; valid after finish().
    EchelonF2 low_plane_echelon() const;

  private:
    struct Row {
        std::vector<uint64_t> lo, hi; // value = lo + 2*hi
    };
    bool row_zero(const Row& r) const;
    void add_multiple(Row& w, const Row& p, uint32_t mult) const;
    void reduce_in_order(Row& w) const;

    uint32_t cols_, blocks_;
    std::vector<Row> rows_;
    std::vector<uint32_t> pivot_cols_;
    std::vector<int32_t> pivot_at_;
    std::vector<Row> deferred_;
    bool finished_ = false;
    uint32_t n1_ = 0;
};

/// Generic scalar layered echelon over Z/p^K: unit pivots per layer, residues
/// divided by p and recursed. Returns the elementary divisor valuation counts
/// n_0..n_{K-1}. Slower than the specialized engines; used off the hot path.
class LayeredModPK {
  public:
    LayeredModPK(uint32_t cols, uint32_t p, uint32_t k);

    void add_sparse(const std::vector<std::pair<uint32_t, int32_t>>& entries);
    std::vector<uint32_t> finish(); // n_0 .. n_{K-1}

  private:
    void add_reduced(std::vector<uint32_t> row);
    void reduce_in_order(std::vector<uint32_t>& row) const;

    uint32_t cols_, p_, k_;
    uint64_t modulus_;
    std::vector<std::vector<uint32_t>> rows_;
    std::vector<uint32_t> pivot_cols_;
    std::vector<std::vector<uint32_t>> deferred_;
    bool finished_ = false;
};

} // namespace sacat

#include "sacat/modp.hpp"

namespace sacat {

// ---------------------------------------------------------------- EchelonF2

EchelonF2::EchelonF2(uint32_t cols) : cols_(cols), blocks_((cols + 63) / 64) {
    pivot_at_.assign(cols, -1);
}

bool EchelonF2::add_sparse(const std::vector<uint32_t>& one_cols) {
    auto row = zero_row();
    for (auto c : one_cols)
        flip_bit(row, c);
    return add_dense(std::move(row));
}

bool EchelonF2::add_dense(std::vector<uint64_t> row) {
    check(!rref_, errc::internal, "echelon is finalized");
    reduce(row);
    for (uint32_t b = 0; b < blocks_; ++b)
        if (row[b]) {
            const uint32_t c = b * 64 + static_cast<uint32_t>(__builtin_ctzll(row[b]));
            pivot_at_[c] = static_cast<int32_t>(rows_.size());
            pivot_cols_.push_back(c);
            rows_.push_back(std::move(row));
            return true;
        }
    return false;
}

bool EchelonF2::reduce(std::vector<uint64_t>& row) const {
    // Single pass in insertion order: stored row k is zero at the pivot
    // columns of rows 0..k-1, so cleared columns stay cleared.
    for (size_t k = 0; k < rows_.size(); ++k) {
        if (get_bit(row, pivot_cols_[k])) {
            const auto& p = rows_[k];
            for (uint32_t b = 0; b < blocks_; ++b)
                row[b] ^= p[b];
        }
    }
    for (uint32_t b = 0; b < blocks_; ++b)
        if (row[b])
            return false;
    return true;
}

void EchelonF2::finalize() {
    if (rref_)
        return;
    for (size_t k = rows_.size(); k-- > 0;) {
        for (size_t l = k + 1; l < rows_.size(); ++l)
            if (get_bit(rows_[k], pivot_cols_[l]))
                for (uint32_t b = 0; b < blocks_; ++b)
                    rows_[k][b] ^= rows_[l][b];
    }
    rref_ = true;
}

std::vector<std::vector<uint64_t>> EchelonF2::kernel() const {
    check(rref_, errc::internal, "kernel requires finalize()");
    std::vector<std::vector<uint64_t>> basis;
    for (uint32_t f = 0; f < cols_; ++f) {
        if (pivot_at_[f] >= 0)
            continue;
        auto v = zero_row();
        flip_bit(v, f);
        for (size_t k = 0; k < rows_.size(); ++k)
            if (get_bit(rows_[k], f))
                flip_bit(v, pivot_cols_[k]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// -------------------------------------------------------------- EchelonModP

EchelonModP::EchelonModP(uint32_t cols, uint32_t p) : cols_(cols), p_(p) {
    check(p >= 2 && p <= 251, errc::solver_cap_exceeded, "modulus out of range");
    pivot_at_.assign(cols, -1);
}

uint32_t EchelonModP::inv_mod(uint32_t a) const {
    uint32_t r = 1;
    uint64_t b = a % p_;
    uint32_t e = p_ - 2;
    while (e) {
        if (e & 1)
            r = static_cast<uint32_t>(r * b % p_);
        b = b * b % p_;
        e >>= 1;
    }
    return r;
}

bool EchelonModP::add_sparse(const std::vector<std::pair<uint32_t, int32_t>>& entries) {
    auto row = zero_row();
    for (const auto& [c, v] : entries) {
        int64_t t = (static_cast<int64_t>(row[c]) + v) % static_cast<int64_t>(p_);
        if (t < 0)
            t += p_;
        row[c] = static_cast<uint32_t>(t);
    }
    return add_dense(std::move(row));
}

bool EchelonModP::add_dense(std::vector<uint32_t> row) {
    check(!rref_, errc::internal, "echelon is finalized");
    reduce(row);
    for (uint32_t c = 0; c < cols_; ++c)
        if (row[c]) {
            const uint64_t inv = inv_mod(row[c]);
            for (uint32_t i = 0; i < cols_; ++i)
                row[i] = static_cast<uint32_t>(row[i] * inv % p_);
            pivot_at_[c] = static_cast<int32_t>(rows_.size());
            pivot_cols_.push_back(c);
            rows_.push_back(std::move(row));
            return true;
        }
    return false;
}

bool EchelonModP::reduce(std::vector<uint32_t>& row) const {
    // Lazy accumulation: entries drift above p during the pass and are only
    // reduced when read or when the growth bound nears uint32 range.
    const uint64_t cap = 0xFFFFFFFFull - static_cast<uint64_t>(p_) * p_;
    uint64_t growth = static_cast<uint64_t>(p_) - 1;
    uint32_t* w = row.data();
    for (size_t k = 0; k < rows_.size(); ++k) {
        const uint32_t c = pivot_cols_[k];
        const uint32_t val = w[c] % p_;
        if (!val)
            continue;
        const uint32_t mult = p_ - val; // pivot entry is 1
        const uint32_t* pr = rows_[k].data();
        for (uint32_t i = 0; i < cols_; ++i)
            w[i] += mult * pr[i];
        growth = (growth + static_cast<uint64_t>(mult) * (p_ - 1)) * 1;
        if (growth > cap) {
            for (uint32_t i = 0; i < cols_; ++i)
                w[i] %= p_;
            growth = static_cast<uint64_t>(p_) - 1;
        }
    }
    bool zero = true;
    for (uint32_t i = 0; i < cols_; ++i) {
        w[i] %= p_;
        if (w[i])
            zero = false;
    }
    return zero;
}

void EchelonModP::finalize() {
    if (rref_)
        return;
    for (size_t k = rows_.size(); k-- > 0;) {
        for (size_t l = k + 1; l < rows_.size(); ++l) {
            const uint32_t val = rows_[k][pivot_cols_[l]];
            if (!val)
                continue;
            const uint32_t mult = p_ - val;
            for (uint32_t i = 0; i < cols_; ++i)
                rows_[k][i] = (rows_[k][i] + mult * rows_[l][i]) % p_;
        }
    }
    rref_ = true;
}

std::vector<std::vector<uint32_t>> EchelonModP::kernel() const {
    check(rref_, errc::internal, "kernel requires finalize()");
    std::vector<std::vector<uint32_t>> basis;
    for (uint32_t f = 0; f < cols_; ++f) {
        if (pivot_at_[f] >= 0)
            continue;
        auto v = zero_row();
        v[f] = 1;
        for (size_t k = 0; k < rows_.size(); ++k)
            if (rows_[k][f])
                v[pivot_cols_[k]] = p_ - rows_[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

// -------------------------------------------------------------- LayeredMod4

LayeredMod4::LayeredMod4(uint32_t cols) : cols_(cols), blocks_((cols + 63) / 64) {
    pivot_at_.assign(cols, -1);
}

bool LayeredMod4::row_zero(const Row& r) const {
    for (uint32_t b = 0; b < blocks_; ++b)
        if (r.lo[b] | r.hi[b])
            return false;
    return true;
}

void LayeredMod4::add_multiple(Row& w, const Row& p, uint32_t mult) const {
    mult &= 3;
    if (mult == 0)
        return;
    if (mult & 1) { // += p, ripple adder mod 4
        for (uint32_t b = 0; b < blocks_; ++b) {
            const uint64_t carry = w.lo[b] & p.lo[b];
            w.lo[b] ^= p.lo[b];
            w.hi[b] ^= p.hi[b] ^ carry;
        }
    }
    if (mult & 2) { // += 2p: only p's low plane matters mod 4
        for (uint32_t b = 0; b < blocks_; ++b)
            w.hi[b] ^= p.lo[b];
    }
}

void LayeredMod4::reduce_in_order(Row& w) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        const uint32_t c = pivot_cols_[k];
        const uint32_t val =
            (EchelonF2::get_bit(w.lo, c) ? 1u : 0u) | (EchelonF2::get_bit(w.hi, c) ? 2u : 0u);
        if (val)
            add_multiple(w, rows_[k], 4 - val); // pivot entry is 1
    }
}

void LayeredMod4::add_sparse(const std::vector<std::pair<uint32_t, int32_t>>& entries) {
    check(!finished_, errc::internal, "layered eliminator is finished");
    Row w{std::vector<uint64_t>(blocks_, 0), std::vector<uint64_t>(blocks_, 0)};
    for (const auto& [c, v] : entries) {
        const uint32_t cur =
            (EchelonF2::get_bit(w.lo, c) ? 1u : 0u) | (EchelonF2::get_bit(w.hi, c) ? 2u : 0u);
        const uint32_t nv = (cur + static_cast<uint32_t>((v % 4) + 4)) & 3;
        if ((cur ^ nv) & 1)
            EchelonF2::flip_bit(w.lo, c);
        if ((cur ^ nv) & 2)
            EchelonF2::flip_bit(w.hi, c);
    }
    reduce_in_order(w);
    // A unit entry (odd value) makes a new pivot; choose the smallest unit
    // column and normalize the pivot entry to 1.
    for (uint32_t b = 0; b < blocks_; ++b)
        if (w.lo[b]) {
            const uint32_t c = b * 64 + static_cast<uint32_t>(__builtin_ctzll(w.lo[b]));
            if (EchelonF2::get_bit(w.hi, c)) { // value 3: scale by 3 = -1
                // 3*(lo + 2hi) = lo + 2*(lo ^ hi) mod 4
                for (uint32_t i = 0; i < blocks_; ++i)
                    w.hi[i] ^= w.lo[i];
            }
            pivot_at_[c] = static_cast<int32_t>(rows_.size());
            pivot_cols_.push_back(c);
            rows_.push_back(std::move(w));
            return;
        }
    if (!row_zero(w))
        deferred_.push_back(std::move(w));
}

LayeredMod4::Result LayeredMod4::finish() {
    check(!finished_, errc::internal, "already finished");
    finished_ = true;
    EchelonF2 layer1(cols_);
    for (auto& w : deferred_) {
        reduce_in_order(w); // clear against pivots inserted after deferral
        for (uint32_t b = 0; b < blocks_; ++b)
            check(w.lo[b] == 0, errc::internal, "deferred row has a unit entry");
        layer1.add_dense(w.hi); // residue / 2 over F2
    }
    deferred_.clear();
    n1_ = layer1.rank();
    return Result{static_cast<uint32_t>(rows_.size()), n1_};
}

EchelonF2 LayeredMod4::low_plane_echelon() const {
    check(finished_, errc::internal, "finish() first");
    EchelonF2 e(cols_);
    for (const auto& r : rows_) {
        const bool fresh = e.add_dense(r.lo);
        check(fresh, errc::internal, "low planes must stay independent");
    }
    return e;
}

// -------------------------------------------------------------- LayeredModPK

LayeredModPK::LayeredModPK(uint32_t cols, uint32_t p, uint32_t k)
    : cols_(cols), p_(p), k_(k) {
    check(k >= 1, errc::schema_error, "layer count must be positive");
    modulus_ = 1;
    for (uint32_t i = 0; i < k; ++i) {
        modulus_ *= p;
        check(modulus_ <= (1u << 30), errc::solver_cap_exceeded, "p^k too large");
    }
}

void LayeredModPK::reduce_in_order(std::vector<uint32_t>& row) const {
    for (size_t j = 0; j < rows_.size(); ++j) {
        const uint32_t c = pivot_cols_[j];
        const uint64_t val = row[c];
        if (!val)
            continue;
        const uint64_t mult = modulus_ - val; // pivot entry is exactly 1
        const auto& pr = rows_[j];
        for (uint32_t i = 0; i < cols_; ++i)
            row[i] = static_cast<uint32_t>((row[i] + mult * pr[i]) % modulus_);
    }
}

void LayeredModPK::add_reduced(std::vector<uint32_t> row) {
    reduce_in_order(row);
    // Smallest column with a unit entry becomes the pivot.
    for (uint32_t c = 0; c < cols_; ++c)
        if (row[c] % p_ != 0) {
            // Normalize by the inverse of the unit mod p^k.
            uint64_t a = row[c] % modulus_, inv = 1, e = modulus_ / p_ * (p_ - 1) - 1;
            uint64_t b = a;
            while (e) { // a^(phi-1) = a^{-1}
                if (e & 1)
                    inv = inv * b % modulus_;
                b = b * b % modulus_;
                e >>= 1;
            }
            for (uint32_t i = 0; i < cols_; ++i)
                row[i] = static_cast<uint32_t>(row[i] * inv % modulus_);
            pivot_cols_.push_back(c);
            rows_.push_back(std::move(row));
            return;
        }
    for (uint32_t c = 0; c < cols_; ++c)
        if (row[c]) {
            deferred_.push_back(std::move(row));
            return;
        }
}

void LayeredModPK::add_sparse(const std::vector<std::pair<uint32_t, int32_t>>& entries) {
    check(!finished_, errc::internal, "layered eliminator is finished");
    std::vector<uint32_t> row(cols_, 0);
    for (const auto& [c, v] : entries) {
        int64_t t = (static_cast<int64_t>(row[c]) + v) % static_cast<int64_t>(modulus_);
        if (t < 0)
            t += static_cast<int64_t>(modulus_);
        row[c] = static_cast<uint32_t>(t);
    }
    add_reduced(std::move(row));
}

std::vector<uint32_t> LayeredModPK::finish() {
    check(!finished_, errc::internal, "already finished");
    finished_ = true;
    std::vector<uint32_t> counts{static_cast<uint32_t>(rows_.size())};
    if (k_ == 1) {
        check(deferred_.empty(), errc::internal, "residues below the last layer");
        return counts;
    }
    LayeredModPK next(cols_, p_, k_ - 1);
    for (auto& w : deferred_) {
        reduce_in_order(w);
        std::vector<uint32_t> half(cols_);
        for (uint32_t i = 0; i < cols_; ++i) {
            check(w[i] % p_ == 0, errc::internal, "deferred row has a unit entry");
            half[i] = w[i] / p_;
        }
        next.add_reduced(std::move(half));
    }
    deferred_.clear();
    auto rest = next.finish();
    counts.insert(counts.end(), rest.begin(), rest.end());
    return counts;
}

} // namespace sacat

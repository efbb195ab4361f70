#include "sacat/intmat.hpp"

namespace sacat {

namespace {
const Int kZero = 0;
}

IntMatrix IntMatrix::identity(uint32_t n) {
    IntMatrix m(n, n);
    for (uint32_t i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
    IntMatrix m(static_cast<uint32_t>(d.size()), static_cast<uint32_t>(d.size()));
    for (uint32_t i = 0; i < d.size(); ++i)
        m.set(i, i, d[i]);
    return m;
}

const Int& IntMatrix::get(uint32_t r, uint32_t c) const {
    check(r < rows_ && c < cols_, errc::schema_error, "matrix index out of range");
    auto it = data_[r].find(c);
    return it == data_[r].end() ? kZero : it->second;
}

void IntMatrix::set(uint32_t r, uint32_t c, Int v) {
    check(r < rows_ && c < cols_, errc::schema_error, "matrix index out of range");
    if (v == 0)
        data_[r].erase(c);
    else
        data_[r][c] = std::move(v);
}

void IntMatrix::add(uint32_t r, uint32_t c, const Int& v) {
    if (v == 0)
        return;
    auto [it, inserted] = data_[r].try_emplace(c, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0)
            data_[r].erase(it);
    }
}

size_t IntMatrix::nnz() const {
    size_t n = 0;
    for (const auto& row : data_)
        n += row.size();
    return n;
}

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
    check(cols_ == other.rows_, errc::not_composable, "matrix product shape mismatch");
    IntMatrix out(rows_, other.cols_);
    for (uint32_t r = 0; r < rows_; ++r)
        for (const auto& [k, v] : data_[r])
            for (const auto& [c, w] : other.data_[k])
                out.add(r, c, v * w);
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (uint32_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r])
            out.set(c, r, v);
    return out;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    check(v.size() == cols_, errc::not_composable, "matrix-vector shape mismatch");
    std::vector<Int> out(rows_, 0);
    for (uint32_t r = 0; r < rows_; ++r)
        for (const auto& [c, w] : data_[r])
            out[r] += w * v[c];
    return out;
}

} // namespace sacat

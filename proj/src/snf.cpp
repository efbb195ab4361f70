#include "sacat/intmat.hpp"

#include <set>

namespace sacat {

namespace {

/// Sparse row-major working matrix with a column occupancy index, mirroring
/// every elementary operation onto the four transform matrices. U and V are
/// kept so that row ops are cheap: v is stored transposed, as is uinv.
struct Worker {
    uint32_t rows, cols;
    std::vector<std::map<uint32_t, Int>> m;
    std::vector<std::set<uint32_t>> colrows; // col -> rows with nonzero entry
    std::vector<std::map<uint32_t, Int>> u, uinv_t, v_t, vinv;

    explicit Worker(const IntMatrix& a) : rows(a.rows()), cols(a.cols()) {
        m.resize(rows);
        colrows.resize(cols);
        for (uint32_t r = 0; r < rows; ++r)
            for (const auto& [c, val] : a.row(r)) {
                m[r][c] = val;
                colrows[c].insert(r);
            }
        auto ident = [](std::vector<std::map<uint32_t, Int>>& t, uint32_t n) {
            t.resize(n);
            for (uint32_t i = 0; i < n; ++i)
                t[i][i] = 1;
        };
        ident(u, rows);
        ident(uinv_t, rows);
        ident(v_t, cols);
        ident(vinv, cols);
    }

    void set_entry(uint32_t r, uint32_t c, const Int& val) {
        if (val == 0) {
            if (m[r].erase(c))
                colrows[c].erase(r);
        } else {
            if (m[r].emplace(c, val).second)
                colrows[c].insert(r);
            else
                m[r][c] = val;
        }
    }

    static void plain_addmul(std::vector<std::map<uint32_t, Int>>& t, uint32_t dst, uint32_t src,
                             const Int& q) {
        if (q == 0)
            return;
        for (const auto& [c, val] : t[src]) {
            auto [it, inserted] = t[dst].try_emplace(c, q * val);
            if (!inserted) {
                it->second += q * val;
                if (it->second == 0)
                    t[dst].erase(it);
            }
        }
    }

    static void plain_negate(std::vector<std::map<uint32_t, Int>>& t, uint32_t i) {
        for (auto& [c, val] : t[i])
            val = -val;
    }

    // row dst += q * row src
    void row_addmul(uint32_t dst, uint32_t src, const Int& q) {
        if (q == 0)
            return;
        for (const auto& [c, val] : m[src]) {
            auto it = m[dst].find(c);
            if (it == m[dst].end()) {
                m[dst].emplace(c, q * val);
                colrows[c].insert(dst);
            } else {
                it->second += q * val;
                if (it->second == 0) {
                    m[dst].erase(it);
                    colrows[c].erase(dst);
                }
            }
        }
        plain_addmul(u, dst, src, q);
        plain_addmul(uinv_t, src, dst, -q);
    }

    void swap_rows(uint32_t i, uint32_t j) {
        if (i == j)
            return;
        for (const auto& [c, val] : m[i])
            if (!m[j].count(c))
                colrows[c].erase(i), colrows[c].insert(j);
        for (const auto& [c, val] : m[j])
            if (!m[i].count(c))
                colrows[c].erase(j), colrows[c].insert(i);
        std::swap(m[i], m[j]);
        std::swap(u[i], u[j]);
        std::swap(uinv_t[i], uinv_t[j]);
    }

    void negate_row(uint32_t i) {
        for (auto& [c, val] : m[i])
            val = -val;
        plain_negate(u, i);
        plain_negate(uinv_t, i);
    }

    // col dst += q * col src
    void col_addmul(uint32_t dst, uint32_t src, const Int& q) {
        if (q == 0)
            return;
        std::vector<uint32_t> rows_src(colrows[src].begin(), colrows[src].end());
        for (uint32_t r : rows_src) {
            const Int& val = m[r][src];
            auto it = m[r].find(dst);
            if (it == m[r].end()) {
                m[r].emplace(dst, q * val);
                colrows[dst].insert(r);
            } else {
                it->second += q * val;
                if (it->second == 0) {
                    m[r].erase(it);
                    colrows[dst].erase(r);
                }
            }
        }
        plain_addmul(v_t, dst, src, q);
        plain_addmul(vinv, src, dst, -q);
    }

    void swap_cols(uint32_t i, uint32_t j) {
        if (i == j)
            return;
        std::vector<uint32_t> rws;
        for (uint32_t r : colrows[i])
            rws.push_back(r);
        for (uint32_t r : colrows[j])
            if (!colrows[i].count(r))
                rws.push_back(r);
        for (uint32_t r : rws) {
            auto it_i = m[r].find(i);
            auto it_j = m[r].find(j);
            Int vi = it_i == m[r].end() ? Int(0) : it_i->second;
            Int vj = it_j == m[r].end() ? Int(0) : it_j->second;
            set_entry(r, i, vj);
            set_entry(r, j, vi);
        }
        std::swap(v_t[i], v_t[j]);
        std::swap(vinv[i], vinv[j]);
    }

    void negate_col(uint32_t c) {
        for (uint32_t r : colrows[c])
            m[r][c] = -m[r][c];
        plain_negate(v_t, c);
        plain_negate(vinv, c);
    }
};

struct Pivot {
    bool found = false;
    uint32_t row = 0, col = 0;
};

/// Least |value| in the active region, ties by (row, col).
Pivot find_pivot(const Worker& w, uint32_t k) {
    Pivot best;
    Int best_abs = 0;
    for (uint32_t r = k; r < w.rows; ++r)
        for (const auto& [c, val] : w.m[r]) {
            if (c < k)
                continue;
            Int a = abs(val);
            if (!best.found || a < best_abs ||
                (a == best_abs && (r < best.row || (r == best.row && c < best.col)))) {
                best = {true, r, c};
                best_abs = a;
            }
        }
    return best;
}

IntMatrix to_matrix(const std::vector<std::map<uint32_t, Int>>& t, uint32_t rows, uint32_t cols,
                    bool transposed) {
    IntMatrix out(rows, cols);
    for (uint32_t r = 0; r < t.size(); ++r)
        for (const auto& [c, val] : t[r]) {
            if (transposed)
                out.set(c, r, val);
            else
                out.set(r, c, val);
        }
    return out;
}

} // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
    Worker w(a);
    const uint32_t n = std::min(w.rows, w.cols);
    uint32_t k = 0;
    while (k < n) {
        Pivot p = find_pivot(w, k);
        if (!p.found)
            break;
        w.swap_rows(k, p.row);
        w.swap_cols(k, p.col);

        // Alternately clear column k and row k; smaller remainders become the
        // new pivot until both are clean.
        bool clean = false;
        while (!clean) {
            clean = true;
            // Re-pivot on the least entry within row k / column k.
            {
                Pivot local{true, k, k};
                Int local_abs = abs(w.m[k].at(k));
                for (uint32_t r : w.colrows[k])
                    if (r > k) {
                        Int aval = abs(w.m[r].at(k));
                        if (aval < local_abs) {
                            local = {true, r, k};
                            local_abs = aval;
                        }
                    }
                for (const auto& [c, val] : w.m[k])
                    if (c > k) {
                        Int aval = abs(val);
                        if (aval < local_abs) {
                            local = {true, k, c};
                            local_abs = aval;
                        }
                    }
                w.swap_rows(k, local.row);
                w.swap_cols(k, local.col);
            }
            const Int pivot = w.m[k].at(k);
            // Clear column k.
            std::vector<uint32_t> below;
            for (uint32_t r : w.colrows[k])
                if (r != k)
                    below.push_back(r);
            for (uint32_t r : below) {
                Int q = w.m[r].at(k) / pivot; // truncated: |remainder| < |pivot|
                w.row_addmul(r, k, -q);
                if (w.m[r].count(k))
                    clean = false; // nonzero remainder became a smaller entry
            }
            if (!clean)
                continue;
            // Clear row k.
            std::vector<uint32_t> right;
            for (const auto& [c, val] : w.m[k])
                if (c != k)
                    right.push_back(c);
            for (uint32_t c : right) {
                Int q = w.m[k].at(c) / pivot;
                w.col_addmul(c, k, -q);
                if (w.m[k].count(c))
                    clean = false;
            }
        }

        // Divisibility sweep: the pivot must divide every remaining entry.
        {
            const Int pivot = w.m[k].at(k);
            bool fixed = true;
            for (uint32_t r = k + 1; r < w.rows && fixed; ++r)
                for (const auto& [c, val] : w.m[r]) {
                    if (c <= k)
                        continue;
                    if (val % pivot != 0) {
                        w.row_addmul(k, r, 1);
                        fixed = false;
                        break;
                    }
                }
            if (!fixed)
                continue; // redo step k with the enlarged row
        }
        if (w.m[k].at(k) < 0)
            w.negate_row(k);
        ++k;
    }

    SnfResult res;
    res.rank = k;
    res.d = IntMatrix(w.rows, w.cols);
    res.diagonal.assign(n, 0);
    for (uint32_t i = 0; i < k; ++i) {
        res.diagonal[i] = w.m[i].at(i);
        res.d.set(i, i, res.diagonal[i]);
    }
    res.u = to_matrix(w.u, w.rows, w.rows, false);
    res.uinv = to_matrix(w.uinv_t, w.rows, w.rows, true);
    res.v = to_matrix(w.v_t, w.cols, w.cols, true);
    res.vinv = to_matrix(w.vinv, w.cols, w.cols, false);

    // Postcondition, recomputed on every call: u*m == d*vinv is u*m*v == d
    // given v*vinv == I; the latter is re-verified fully at small sizes where
    // the sparse product is affordable.
    check(res.u.multiply(a) == res.d.multiply(res.vinv), errc::internal,
          "smith normal form postcondition failed");
    if (a.cols() <= 512)
        check(res.v.multiply(res.vinv) == IntMatrix::identity(a.cols()), errc::internal,
              "column transform is not invertible");
    if (a.rows() <= 512)
        check(res.u.multiply(res.uinv) == IntMatrix::identity(a.rows()), errc::internal,
              "row transform is not invertible");
    for (uint32_t i = 0; i + 1 < k; ++i)
        check(res.diagonal[i + 1] % res.diagonal[i] == 0, errc::internal,
              "diagonal divisibility chain broken");
    return res;
}

} // namespace sacat

#include "stabspace/zd_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace stabspace {

bool is_prime(int m) {
    if (m < 2) return false;
    for (int p = 2; static_cast<long long>(p) * p <= m; ++p) {
        if (m % p == 0) return false;
    }
    return true;
}

int mod_reduce(long long value, int d) {
    if (d < 2) throw std::invalid_argument("modulus must be at least 2");
    long long r = value % d;
    if (r < 0) r += d;
    return static_cast<int>(r);
}

int mod_inverse(int a, int p) {
    if (!is_prime(p)) throw std::invalid_argument("modular inverse requires a prime modulus");
    a = mod_reduce(a, p);
    if (a == 0) throw std::invalid_argument("zero has no modular inverse");
    // Fermat: a^(p-2) mod p.
    long long base = a, acc = 1;
    int e = p - 2;
    while (e > 0) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<int>(acc);
}

ZdVector::ZdVector(int modulus, std::vector<int> entries) : d_(modulus), entries_(std::move(entries)) {
    if (d_ < 2) throw std::invalid_argument("modulus must be at least 2");
    if (entries_.empty()) throw std::invalid_argument("vector length must be positive");
    for (auto &e : entries_) e = mod_reduce(e, d_);
}

ZdVector::ZdVector(int modulus, std::size_t length) : d_(modulus), entries_(length, 0) {
    if (d_ < 2) throw std::invalid_argument("modulus must be at least 2");
    if (length == 0) throw std::invalid_argument("vector length must be positive");
}

void ZdVector::set(std::size_t i, long long value) {
    entries_.at(i) = mod_reduce(value, d_);
}

int ZdVector::digit_sum() const {
    long long s = 0;
    for (int e : entries_) s += e;
    return mod_reduce(s, d_);
}

bool ZdVector::is_zero() const {
    for (int e : entries_) {
        if (e != 0) return false;
    }
    return true;
}

ZdVector ZdVector::scaled(long long factor) const {
    ZdVector out(d_, entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out.set(i, static_cast<long long>(entries_[i]) * mod_reduce(factor, d_));
    }
    return out;
}

ZdMatrix::ZdMatrix(int modulus, std::size_t cols) : d_(modulus), cols_(cols) {
    if (d_ < 2) throw std::invalid_argument("modulus must be at least 2");
    if (cols_ == 0) throw std::invalid_argument("column count must be positive");
}

ZdMatrix::ZdMatrix(int modulus, std::vector<std::vector<int>> rows) : ZdMatrix(modulus, rows.empty() ? 1 : rows.front().size()) {
    for (auto &r : rows) append_row(ZdVector(modulus, std::move(r)));
}

ZdMatrix::ZdMatrix(const std::vector<ZdVector> &rows) : ZdMatrix(rows.empty() ? 2 : rows.front().modulus(), rows.empty() ? 1 : rows.front().size()) {
    if (rows.empty()) throw std::invalid_argument("matrix needs at least one row to infer shape");
    for (const auto &r : rows) append_row(r);
}

void ZdMatrix::append_row(const ZdVector &v) {
    if (v.modulus() != d_) throw std::invalid_argument("row modulus mismatch");
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    rows_.push_back(v);
}

namespace {

// In-place elimination working on plain int rows; returns pivot columns.
std::vector<int> eliminate(std::vector<std::vector<int>> &a, int d) {
    if (!is_prime(d)) throw std::invalid_argument("elimination requires a prime modulus");
    const std::size_t n_rows = a.size();
    const std::size_t n_cols = n_rows == 0 ? 0 : a.front().size();
    std::vector<int> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n_cols && r < n_rows; ++c) {
        std::size_t sel = r;
        while (sel < n_rows && a[sel][c] == 0) ++sel;
        if (sel == n_rows) continue;
        std::swap(a[r], a[sel]);
        const long long inv = mod_inverse(a[r][c], d);
        for (auto &e : a[r]) e = static_cast<int>(e * inv % d);
        for (std::size_t i = 0; i < n_rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const long long f = a[i][c];
            for (std::size_t j = 0; j < n_cols; ++j) {
                a[i][j] = mod_reduce(a[i][j] - f * a[r][j], d);
            }
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

std::vector<std::vector<int>> to_raw(const ZdMatrix &m) {
    std::vector<std::vector<int>> a;
    a.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(m.row(i).entries());
    return a;
}

} // namespace

int rank(const ZdMatrix &m) {
    auto a = to_raw(m);
    return static_cast<int>(eliminate(a, m.modulus()).size());
}

bool in_span(const ZdVector &v, const ZdMatrix &m) {
    if (v.modulus() != m.modulus()) throw std::invalid_argument("modulus mismatch");
    if (v.size() != m.cols()) throw std::invalid_argument("dimension mismatch");
    auto a = to_raw(m);
    a.push_back(v.entries());
    return eliminate(a, m.modulus()).size() == static_cast<std::size_t>(rank(m));
}

ZdMatrix row_reduce(const ZdMatrix &m) {
    auto a = to_raw(m);
    const auto pivots = eliminate(a, m.modulus());
    ZdMatrix out(m.modulus(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        out.append_row(ZdVector(m.modulus(), a[i]));
    }
    return out;
}

ZdMatrix transpose(const ZdMatrix &m) {
    ZdMatrix out(m.modulus(), m.rows() == 0 ? 1 : m.rows());
    if (m.rows() == 0) throw std::invalid_argument("cannot transpose an empty matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) {
        ZdVector row(m.modulus(), m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) row.set(r, m.row(r)[c]);
        out.append_row(row);
    }
    return out;
}

ZdMatrix null_space(const ZdMatrix &m) {
    auto a = to_raw(m);
    const auto pivots = eliminate(a, m.modulus());
    const int d = m.modulus();
    const std::size_t n = m.cols();

    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;

    ZdMatrix basis(d, n);
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        ZdVector x(d, n);
        x.set(free_col, 1);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            // Pivot variable balances the free column's contribution.
            x.set(pivots[i], -static_cast<long long>(a[i][free_col]));
        }
        basis.append_row(x);
    }
    return basis;
}

} // namespace stabspace

#include "descent/linalg.hpp"

#include <algorithm>

#include "descent/combinatorics.hpp"

namespace descent {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("int64 addition overflow");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("int64 multiplication overflow");
    return out;
}

std::uint32_t mod_reduce(std::int64_t value, std::uint32_t p) {
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

static void require_modulus(std::uint32_t p) {
    if (p >= kMaxModulus || !is_prime(static_cast<int>(p)))
        throw InputError("modulus must be a prime below 2^16");
}

// x^(p-2) mod p: inverse of x in F_p.
static std::uint32_t fp_inverse(std::uint32_t x, std::uint32_t p) {
    std::uint64_t base = x % p, acc = 1;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

FpMatrix::FpMatrix(int rows, int cols, std::uint32_t p) : rows_(rows), cols_(cols), p_(p) {
    require_modulus(p);
    if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be non-negative");
    e_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

FpMatrix FpMatrix::identity(int n, std::uint32_t p) {
    FpMatrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::multiply(const FpMatrix& other) const {
    if (cols_ != other.rows_ || p_ != other.p_)
        throw InputError("matrix product dimension or modulus mismatch");
    FpMatrix out(rows_, other.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            std::uint64_t a = at(i, k);
            if (!a) continue;
            for (int j = 0; j < other.cols_; ++j) {
                std::uint64_t v = out.at(i, j) + a * other.at(k, j) % p_;
                out.at(i, j) = static_cast<std::uint32_t>(v >= p_ ? v - p_ : v);
            }
        }
    return out;
}

// In-place row elimination; returns pivot columns.
static std::vector<int> eliminate(std::vector<std::vector<std::uint32_t>>& rows, int cols,
                                  std::uint32_t p) {
    std::vector<int> pivots;
    std::size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        std::uint64_t inv = fp_inverse(rows[r][c], p);
        for (int j = c; j < cols; ++j)
            rows[r][j] = static_cast<std::uint32_t>(rows[r][j] * inv % p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            std::uint64_t f = p - rows[i][c];
            for (int j = c; j < cols; ++j) {
                std::uint64_t v = rows[i][j] + f * rows[r][j] % p;
                rows[i][j] = static_cast<std::uint32_t>(v >= p ? v - p : v);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size());
    return pivots;
}

int rank(const FpMatrix& m) {
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        rows.emplace_back(m.row(i).begin(), m.row(i).end());
    return static_cast<int>(eliminate(rows, m.cols(), m.modulus()).size());
}

Subspace::Subspace(int ambient, std::uint32_t p) : ambient_(ambient), p_(p) {
    require_modulus(p);
    if (ambient < 0) throw InputError("ambient dimension must be non-negative");
}

std::vector<std::uint32_t> Subspace::reduce(std::span<const std::uint32_t> v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw InputError("vector dimension does not match ambient dimension");
    std::vector<std::uint32_t> w(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::uint32_t c = w[pivots_[i]];
        if (!c) continue;
        std::uint64_t f = p_ - c;
        for (int j = pivots_[i]; j < ambient_; ++j) {
            std::uint64_t x = w[j] + f * rows_[i][j] % p_;
            w[j] = static_cast<std::uint32_t>(x >= p_ ? x - p_ : x);
        }
    }
    return w;
}

bool Subspace::insert(std::span<const std::uint32_t> v) {
    std::vector<std::uint32_t> w = reduce(v);
    int pivot = -1;
    for (int j = 0; j < ambient_; ++j)
        if (w[j]) { pivot = j; break; }
    if (pivot < 0) return false;
    std::uint64_t inv = fp_inverse(w[pivot], p_);
    for (int j = pivot; j < ambient_; ++j)
        w[j] = static_cast<std::uint32_t>(w[j] * inv % p_);
    // clear this column in the existing rows, then keep rows sorted by pivot
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::uint32_t c = rows_[i][pivot];
        if (!c) continue;
        std::uint64_t f = p_ - c;
        for (int j = pivot; j < ambient_; ++j) {
            std::uint64_t x = rows_[i][j] + f * w[j] % p_;
            rows_[i][j] = static_cast<std::uint32_t>(x >= p_ ? x - p_ : x);
        }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    std::size_t k = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + k, std::move(w));
    return true;
}

bool Subspace::contains(std::span<const std::uint32_t> v) const {
    std::vector<std::uint32_t> w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_ || other.p_ != p_)
        throw InputError("subspace comparison dimension or modulus mismatch");
    for (const auto& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

Subspace span_of(const std::vector<std::vector<std::uint32_t>>& vectors, int ambient,
                 std::uint32_t p) {
    Subspace s(ambient, p);
    for (const auto& v : vectors) s.insert(v);
    return s;
}

Subspace kernel(const FpMatrix& m) {
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        rows.emplace_back(m.row(i).begin(), m.row(i).end());
    std::vector<int> pivots = eliminate(rows, m.cols(), m.modulus());
    std::uint32_t p = m.modulus();

    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    Subspace ker(m.cols(), p);
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            std::uint32_t coef = rows[i][free];
            if (coef) v[pivots[i]] = p - coef;
        }
        ker.insert(v);
    }
    return ker;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || a.modulus() != b.modulus())
        throw InputError("subspace sum dimension or modulus mismatch");
    Subspace s = a;
    for (const auto& row : b.basis()) s.insert(row);
    return s;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || a.modulus() != b.modulus())
        throw InputError("subspace intersection dimension or modulus mismatch");
    const std::uint32_t p = a.modulus();
    const int ka = a.dimension(), kb = b.dimension(), d = a.ambient();
    // x in both spans: x = u A = v B.  Solve [A^T | -B^T] (u;v) = 0 and map
    // the u-part back through A.
    FpMatrix stacked(d, ka + kb, p);
    for (int j = 0; j < ka; ++j)
        for (int i = 0; i < d; ++i) stacked.at(i, j) = a.basis()[j][i];
    for (int j = 0; j < kb; ++j)
        for (int i = 0; i < d; ++i)
            stacked.at(i, ka + j) = (p - b.basis()[j][i]) % p;
    Subspace null = kernel(stacked);

    Subspace out(d, p);
    for (const auto& coef : null.basis()) {
        std::vector<std::uint32_t> x(d, 0);
        for (int j = 0; j < ka; ++j) {
            std::uint64_t c = coef[j];
            if (!c) continue;
            for (int i = 0; i < d; ++i) {
                std::uint64_t v = x[i] + c * a.basis()[j][i] % p;
                x[i] = static_cast<std::uint32_t>(v >= p ? v - p : v);
            }
        }
        out.insert(x);
    }
    return out;
}

} // namespace descent

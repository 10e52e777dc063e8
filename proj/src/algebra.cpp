#include "descent/algebra.hpp"

#include <algorithm>

namespace descent {

RingTag RingTag::prime_field(std::uint32_t p) {
    if (p >= kMaxModulus || !is_prime(static_cast<int>(p)))
        throw InputError("prime_field: modulus must be a prime below 2^16");
    return RingTag(p);
}

std::string RingTag::str() const {
    return is_integers() ? "Z" : "F" + std::to_string(p_);
}

AlgebraElement::AlgebraElement(int n, RingTag ring) : n_(n), ring_(ring) {
    if (n < 1 || n > kMaxCompositionDegree)
        throw InputError("algebra degree out of range");
}

AlgebraElement AlgebraElement::from_terms(
    int n, RingTag ring, const std::vector<std::pair<Composition, std::int64_t>>& terms) {
    AlgebraElement x(n, ring);
    std::vector<Term> acc;
    for (const auto& [q, c] : terms) {
        if (q.n() != n) throw InputError("term composition has wrong degree");
        acc.push_back({q.index(), c});
    }
    std::sort(acc.begin(), acc.end(),
              [](const Term& a, const Term& b) { return a.index < b.index; });
    for (const Term& t : acc) {
        if (!x.terms_.empty() && x.terms_.back().index == t.index)
            x.terms_.back().coeff = checked_add(x.terms_.back().coeff, t.coeff);
        else
            x.terms_.push_back(t);
    }
    std::uint32_t p = ring.modulus();
    if (p)
        for (Term& t : x.terms_) t.coeff = mod_reduce(t.coeff, p);
    std::erase_if(x.terms_, [](const Term& t) { return t.coeff == 0; });
    return x;
}

std::int64_t AlgebraElement::coefficient(std::uint32_t index) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                               [](const Term& t, std::uint32_t i) { return t.index < i; });
    return (it != terms_.end() && it->index == index) ? it->coeff : 0;
}

std::int64_t AlgebraElement::coefficient(const Composition& q) const {
    if (q.n() != n_) throw InputError("coefficient: composition has wrong degree");
    return coefficient(q.index());
}

std::vector<std::int64_t> AlgebraElement::coords() const {
    std::vector<std::int64_t> v(dimension(), 0);
    for (const Term& t : terms_) v[t.index] = t.coeff;
    return v;
}

AlgebraElement AlgebraElement::from_coords(int n, RingTag ring,
                                           const std::vector<std::int64_t>& coords) {
    AlgebraElement x(n, ring);
    if (static_cast<int>(coords.size()) != x.dimension())
        throw InputError("from_coords: wrong coordinate dimension");
    std::uint32_t p = ring.modulus();
    for (std::uint32_t i = 0; i < coords.size(); ++i) {
        std::int64_t c = p ? mod_reduce(coords[i], p) : coords[i];
        if (c) x.terms_.push_back({i, c});
    }
    return x;
}

static void require_compatible(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.n() != y.n()) throw InputError("elements have different degrees");
    if (x.ring() != y.ring()) throw InputError("elements have different rings");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
    require_compatible(*this, other);
    AlgebraElement out(n_, ring_);
    std::uint32_t p = ring_.modulus();
    auto a = terms_.begin(), b = other.terms_.begin();
    auto push = [&](std::uint32_t idx, std::int64_t c) {
        if (p) c = mod_reduce(c, p);
        if (c) out.terms_.push_back({idx, c});
    };
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->index < b->index))
            push(a->index, a->coeff), ++a;
        else if (a == terms_.end() || b->index < a->index)
            push(b->index, b->coeff), ++b;
        else
            push(a->index, checked_add(a->coeff, b->coeff)), ++a, ++b;
    }
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
    return *this + other.scaled(-1);
}

AlgebraElement AlgebraElement::scaled(std::int64_t factor) const {
    AlgebraElement out(n_, ring_);
    std::uint32_t p = ring_.modulus();
    for (const Term& t : terms_) {
        std::int64_t c = checked_mul(t.coeff, factor);
        if (p) c = mod_reduce(c, p);
        if (c) out.terms_.push_back({t.index, c});
    }
    return out;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const Term& t : terms_) {
        if (!s.empty()) s += " + ";
        if (t.coeff != 1) s += std::to_string(t.coeff) + "*";
        s += "B" + Composition::from_index(n_, t.index).str();
    }
    return s;
}

AlgebraElement basis_element(int n, RingTag ring, const Composition& q) {
    if (q.n() != n) throw InputError("basis_element: composition has wrong degree");
    return AlgebraElement::from_terms(n, ring, {{q, 1}});
}

AlgebraElement identity(int n, RingTag ring) {
    return basis_element(n, ring, Composition({n}));
}

// Enumerates contingency matrices row by row, the final row forced by the
// remaining column capacities, and reports each matrix as the interior
// partial-sum mask of its row-major nonzero word.  Entries are chosen in
// ascending order, so matrices appear in ascending lexicographic row-major
// order.  Each row level keeps its own suffix-capacity array so the
// feasibility bound stays valid across the nested row recursion.
namespace {

template <typename Visit>
class ContingencyEnumerator {
public:
    ContingencyEnumerator(const std::vector<int>& rows, const std::vector<int>& cols,
                          Visit visit, std::vector<IntMatrix>* out)
        : rows_(rows),
          cols_(cols),
          rem_(cols),
          suffix_(rows.size() * (cols.size() + 1), 0),
          visit_(visit),
          out_(out),
          scratch_(static_cast<int>(rows.size()), static_cast<int>(cols.size())) {}

    void run() { fill_row(0); }

private:
    int& suffix(std::size_t i, std::size_t j) { return suffix_[i * (cols_.size() + 1) + j]; }

    void emit() {
        std::uint32_t mask = word_mask_;
        int acc = word_sum_;
        int last = static_cast<int>(rows_.size()) - 1;
        for (std::size_t j = 0; j < rem_.size(); ++j) {
            if (rem_[j] == 0) continue;
            acc += rem_[j];
            mask |= std::uint32_t{1} << (acc - 1);
            if (out_) scratch_.at(last, static_cast<int>(j)) = rem_[j];
        }
        mask &= ~(std::uint32_t{1} << (acc - 1)); // drop the full sum n
        visit_(mask);
        if (out_) {
            out_->push_back(scratch_);
            for (std::size_t j = 0; j < rem_.size(); ++j)
                scratch_.at(last, static_cast<int>(j)) = 0;
        }
    }

    void fill_row(std::size_t i) {
        if (i + 1 == rows_.size()) {
            emit();
            return;
        }
        suffix(i, rem_.size()) = 0;
        for (std::size_t j = rem_.size(); j-- > 0;)
            suffix(i, j) = suffix(i, j + 1) + rem_[j];
        fill_entry(i, 0, rows_[i]);
    }

    void fill_entry(std::size_t i, std::size_t j, int remaining) {
        if (j == rem_.size()) {
            if (remaining == 0) fill_row(i + 1);
            return;
        }
        // what is left of this row must fit in the later columns
        int lo = std::max(0, remaining - suffix(i, j + 1));
        int hi = std::min(remaining, rem_[j]);
        for (int z = lo; z <= hi; ++z) {
            if (z) {
                rem_[j] -= z;
                word_sum_ += z;
                word_mask_ |= std::uint32_t{1} << (word_sum_ - 1);
                if (out_) scratch_.at(static_cast<int>(i), static_cast<int>(j)) = z;
            }
            fill_entry(i, j + 1, remaining - z);
            if (z) {
                if (out_) scratch_.at(static_cast<int>(i), static_cast<int>(j)) = 0;
                word_mask_ &= ~(std::uint32_t{1} << (word_sum_ - 1));
                word_sum_ -= z;
                rem_[j] += z;
            }
        }
    }

    const std::vector<int>& rows_;
    const std::vector<int>& cols_;
    std::vector<int> rem_;
    std::vector<int> suffix_;
    std::uint32_t word_mask_ = 0;
    int word_sum_ = 0;
    Visit visit_;
    std::vector<IntMatrix>* out_;
    IntMatrix scratch_;
};

template <typename Visit>
void for_each_word_mask(const Composition& q, const Composition& r, Visit visit,
                        std::vector<IntMatrix>* out = nullptr) {
    ContingencyEnumerator<Visit> en(q.parts(), r.parts(), visit, out);
    en.run();
}

} // namespace

std::vector<IntMatrix> contingency_matrices(const Composition& q, const Composition& r) {
    if (q.n() != r.n())
        throw InputError("contingency_matrices: compositions of different degree");
    std::vector<IntMatrix> out;
    for_each_word_mask(q, r, [](std::uint32_t) {}, &out);
    return out;
}

Composition read_word(const IntMatrix& z) {
    std::vector<int> parts;
    for (int v : z.e)
        if (v < 0)
            throw InputError("read_word: negative entry");
        else if (v > 0)
            parts.push_back(v);
    if (parts.empty()) throw InputError("read_word: all-zero matrix");
    return Composition(std::move(parts));
}

// Shared inner product: accumulate x*y into dense scratch.
static void accumulate_product(const AlgebraElement& x, const AlgebraElement& y,
                               std::vector<std::int64_t>& dense,
                               std::vector<std::uint32_t>& touched) {
    const int n = x.n();
    const std::uint32_t p = x.ring().modulus();
    for (const auto& tx : x.terms()) {
        Composition q = Composition::from_index(n, tx.index);
        for (const auto& ty : y.terms()) {
            Composition r = Composition::from_index(n, ty.index);
            std::int64_t c = checked_mul(tx.coeff, ty.coeff);
            if (p) c = mod_reduce(c, p);
            if (c == 0) continue;
            for_each_word_mask(q, r, [&](std::uint32_t mask) {
                if (dense[mask] == 0) touched.push_back(mask);
                dense[mask] = checked_add(dense[mask], c);
            });
        }
    }
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
    require_compatible(x, y);
    std::vector<std::int64_t> dense(x.dimension(), 0);
    std::vector<std::uint32_t> touched;
    accumulate_product(x, y, dense, touched);
    std::sort(touched.begin(), touched.end());
    // cancellation to zero and back puts an index on the list twice
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    std::vector<std::pair<Composition, std::int64_t>> terms;
    for (std::uint32_t i : touched)
        if (dense[i]) terms.push_back({Composition::from_index(x.n(), i), dense[i]});
    return AlgebraElement::from_terms(x.n(), x.ring(), terms);
}

AlgebraElement reduce_mod_p(const AlgebraElement& x, std::uint32_t p) {
    if (!x.ring().is_integers())
        throw InputError("reduce_mod_p: element must have integer coefficients");
    RingTag fp = RingTag::prime_field(p); // validates p
    AlgebraElement out(x.n(), fp);
    std::vector<std::pair<Composition, std::int64_t>> terms;
    for (const auto& t : x.terms())
        terms.push_back({Composition::from_index(x.n(), t.index), t.coeff});
    return AlgebraElement::from_terms(x.n(), fp, terms);
}

StructureTable StructureTable::build(int n, RingTag ring, bool force) {
    if (n < 1 || n > kMaxCompositionDegree)
        throw InputError("structure table: degree out of range");
    int bound = ring.is_integers() ? kMaxTableDegreeZ : kMaxTableDegreeFp;
    if (n > bound && !force)
        throw ResourceError("structure table for n=" + std::to_string(n) + " over " +
                            ring.str() + " exceeds the default bound of " +
                            std::to_string(bound));
    StructureTable t(n, ring);
    t.products_.reserve(static_cast<std::size_t>(t.dim_) * t.dim_);
    std::vector<Composition> basis = compositions(n);
    std::vector<std::int64_t> dense(t.dim_, 0);
    const std::uint32_t p = ring.modulus();
    for (int qi = 0; qi < t.dim_; ++qi) {
        for (int ri = 0; ri < t.dim_; ++ri) {
            std::vector<std::uint32_t> touched;
            for_each_word_mask(basis[qi], basis[ri], [&](std::uint32_t mask) {
                if (dense[mask] == 0) touched.push_back(mask);
                dense[mask] = checked_add(dense[mask], 1);
            });
            std::sort(touched.begin(), touched.end());
            AlgebraElement cell(n, ring);
            std::vector<std::pair<Composition, std::int64_t>> terms;
            for (std::uint32_t i : touched) {
                std::int64_t c = p ? static_cast<std::int64_t>(mod_reduce(dense[i], p)) : dense[i];
                if (c) terms.push_back({Composition::from_index(n, i), c});
                dense[i] = 0;
            }
            t.products_.push_back(AlgebraElement::from_terms(n, ring, terms));
        }
    }
    return t;
}

StructureTable StructureTable::from_products(int n, RingTag ring,
                                             std::vector<AlgebraElement> products) {
    StructureTable t(n, ring);
    if (products.size() != static_cast<std::size_t>(t.dim_) * t.dim_)
        throw InputError("structure table: wrong product count");
    for (const auto& x : products)
        if (x.n() != n || !(x.ring() == ring))
            throw InputError("structure table: inconsistent cell");
    t.products_ = std::move(products);
    return t;
}

std::vector<std::int64_t> StructureTable::multiply_coords(std::span<const std::int64_t> x,
                                                          std::span<const std::int64_t> y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
        throw InputError("multiply_coords: wrong coordinate dimension");
    std::vector<std::int64_t> out(dim_, 0);
    const std::uint32_t p = ring_.modulus();
    for (int qi = 0; qi < dim_; ++qi) {
        if (!x[qi]) continue;
        for (int ri = 0; ri < dim_; ++ri) {
            if (!y[ri]) continue;
            std::int64_t c = checked_mul(x[qi], y[ri]);
            if (p) c = mod_reduce(c, p);
            if (!c) continue;
            for (const auto& t : product(qi, ri).terms())
                out[t.index] = checked_add(out[t.index], checked_mul(c, t.coeff));
        }
        if (p)
            for (auto& v : out) v = mod_reduce(v, p);
    }
    if (p)
        for (auto& v : out) v = mod_reduce(v, p);
    return out;
}

FpMatrix DenseMatrix::to_fp(std::uint32_t p) const {
    FpMatrix m(rows, cols, p);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, at(i, j));
    return m;
}

DenseMatrix regular_rep_matrix(const StructureTable& table, const AlgebraElement& x, Side side) {
    if (x.n() != table.n() || !(x.ring() == table.ring()))
        throw InputError("regular_rep_matrix: element does not match table");
    const int d = table.dimension();
    const std::uint32_t p = table.ring().modulus();
    DenseMatrix m(d, d);
    for (int qi = 0; qi < d; ++qi) {
        // column qi: coordinates of B_q * x (right) or x * B_q (left)
        for (const auto& t : x.terms()) {
            const AlgebraElement& cell =
                side == Side::right ? table.product(qi, t.index) : table.product(t.index, qi);
            for (const auto& u : cell.terms())
                m.at(u.index, qi) = checked_add(m.at(u.index, qi), checked_mul(t.coeff, u.coeff));
        }
    }
    if (p)
        for (auto& v : m.e) v = mod_reduce(v, p);
    return m;
}

bool is_nilpotent(const StructureTable& table, const AlgebraElement& x) {
    if (table.ring().is_integers())
        throw InputError("is_nilpotent: requires a prime-field table");
    const std::uint32_t p = table.ring().modulus();
    FpMatrix m = regular_rep_matrix(table, x, Side::right).to_fp(p);
    int r = rank(m);
    if (r == 0) return true;
    while (true) {
        m = m.multiply(m);
        int r2 = rank(m);
        if (r2 == 0) return true;
        if (r2 == r) return false;
        r = r2;
    }
}

} // namespace descent

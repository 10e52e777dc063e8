#include "descent/characters.hpp"

#include <algorithm>

namespace descent {

bool CharacterVector::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](std::int64_t v) { return v == 0; });
}

CharacterVector CharacterVector::pointwise_product(const CharacterVector& other) const {
    if (n != other.n || modulus != other.modulus)
        throw InputError("character product degree or modulus mismatch");
    CharacterVector out{n, modulus, std::vector<std::int64_t>(values.size(), 0)};
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::int64_t v = checked_mul(values[i], other.values[i]);
        out.values[i] = modulus ? mod_reduce(v, modulus) : v;
    }
    return out;
}

CharacterVector CharacterVector::reduced_mod(std::uint32_t p) const {
    if (modulus != 0) throw InputError("character values already reduced");
    if (!is_prime(static_cast<int>(p))) throw InputError("modulus must be prime");
    CharacterVector out{n, p, std::vector<std::int64_t>(values.size(), 0)};
    for (std::size_t i = 0; i < values.size(); ++i) out.values[i] = mod_reduce(values[i], p);
    return out;
}

namespace {

// Distribute, length by length, the cycles of pi over the blocks of q,
// accumulating multinomial weights; a distribution counts only when every
// block is filled exactly.
class TabloidCounter {
public:
    TabloidCounter(const Composition& q, const Partition& pi) : caps_(q.parts()) {
        MultiplicityVector mult = multiplicities(pi);
        for (int l = 1; l <= pi.n(); ++l)
            if (mult.count(l)) lengths_.push_back({l, mult.count(l)});
    }

    std::int64_t count() {
        total_ = 0;
        next_length(0, 1);
        return total_;
    }

private:
    void next_length(std::size_t idx, std::int64_t weight) {
        if (idx == lengths_.size()) {
            for (int c : caps_)
                if (c) return;
            total_ = checked_add(total_, weight);
            return;
        }
        distribute(idx, 0, lengths_[idx].second, weight);
    }

    // choose how many cycles of lengths_[idx] go into block j
    void distribute(std::size_t idx, std::size_t j, int cycles_left, std::int64_t weight) {
        if (j == caps_.size()) {
            if (cycles_left == 0) next_length(idx + 1, weight);
            return;
        }
        const int l = lengths_[idx].first;
        const int max_here = std::min(cycles_left, caps_[j] / l);
        std::int64_t choose = 1; // C(cycles_left, c), updated incrementally
        for (int c = 0; c <= max_here; ++c) {
            if (c) {
                choose = checked_mul(choose, cycles_left - c + 1) / c;
                caps_[j] -= l;
            }
            distribute(idx, j + 1, cycles_left - c, checked_mul(weight, choose));
            if (c == max_here) caps_[j] += l * c;
        }
    }

    std::vector<int> caps_;
    std::vector<std::pair<int, int>> lengths_; // (cycle length, multiplicity)
    std::int64_t total_ = 0;
};

} // namespace

std::int64_t young_character_value(const Composition& q, const Partition& pi) {
    if (q.n() != pi.n())
        throw InputError("young_character_value: degree mismatch");
    TabloidCounter counter(q, pi);
    return counter.count();
}

CharacterVector character_vector(const AlgebraElement& x) {
    const std::uint32_t p = x.ring().modulus();
    std::vector<Partition> parts = partitions(x.n());
    CharacterVector out{x.n(), p, std::vector<std::int64_t>(parts.size(), 0)};
    for (std::size_t j = 0; j < parts.size(); ++j) {
        std::int64_t v = 0;
        for (const auto& t : x.terms()) {
            Composition q = Composition::from_index(x.n(), t.index);
            v = checked_add(v, checked_mul(t.coeff, young_character_value(q, parts[j])));
        }
        out.values[j] = p ? mod_reduce(v, p) : v;
    }
    return out;
}

CharacterMatrix::CharacterMatrix(int n, bool force) : n_(n) {
    if (n < 1 || n > kMaxCompositionDegree)
        throw InputError("character matrix: degree out of range");
    if (n > kMaxCharacterMatrixDegree && !force)
        throw ResourceError("character matrix for n=" + std::to_string(n) +
                            " exceeds the default bound of " +
                            std::to_string(kMaxCharacterMatrixDegree));
    rows_ = compositions(n);
    cols_ = partitions(n);
    values_.reserve(rows_.size() * cols_.size());
    for (const Composition& q : rows_)
        for (const Partition& pi : cols_) values_.push_back(young_character_value(q, pi));
}

FpMatrix CharacterMatrix::reduced_mod(std::uint32_t p) const {
    FpMatrix m(row_count(), col_count(), p);
    for (int i = 0; i < row_count(); ++i)
        for (int j = 0; j < col_count(); ++j) m.set(i, j, at(i, j));
    return m;
}

int rank_mod_p(const CharacterMatrix& m, std::uint32_t p) {
    return rank(m.reduced_mod(p));
}

bool check_triangular_diagonal(int n, std::uint32_t p, bool force) {
    if (n > 9 && !force)
        throw ResourceError("check_triangular_diagonal: n exceeds the default bound of 9");
    if (!is_prime(static_cast<int>(p))) throw InputError("modulus must be prime");
    std::vector<Partition> parts = partitions(n);
    std::reverse(parts.begin(), parts.end()); // ascending lexicographic
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Composition row_i(parts[i].parts());
        for (std::size_t j = 0; j < parts.size(); ++j) {
            std::uint32_t v = mod_reduce(young_character_value(row_i, parts[j]), p);
            if (j > i && v != 0) return false;
            if (j == i && v != multiplicities(parts[i]).factorial_product_mod(p)) return false;
        }
    }
    return true;
}

bool check_column_congruence(int n, std::uint32_t p, bool force) {
    if (n > 8 && !force)
        throw ResourceError("check_column_congruence: n exceeds the default bound of 8");
    if (!is_prime(static_cast<int>(p))) throw InputError("modulus must be prime");
    CharacterMatrix m(n, force);
    const auto& cols = m.cols();
    for (std::size_t a = 0; a < cols.size(); ++a)
        for (std::size_t b = a + 1; b < cols.size(); ++b) {
            if (!(p_regular_part(cols[a], static_cast<int>(p)) ==
                  p_regular_part(cols[b], static_cast<int>(p))))
                continue;
            for (int qi = 0; qi < m.row_count(); ++qi)
                if (mod_reduce(m.at(qi, static_cast<int>(a)), p) !=
                    mod_reduce(m.at(qi, static_cast<int>(b)), p))
                    return false;
        }
    return true;
}

std::uint32_t IrreducibleRep::operator()(const AlgebraElement& x) const {
    const std::uint32_t p = x.ring().modulus();
    if (!p) throw InputError("representation values need a prime-field element");
    std::uint64_t acc = 0;
    for (const auto& t : x.terms())
        acc = (acc + static_cast<std::uint64_t>(mod_reduce(t.coeff, p)) * values[t.index]) % p;
    return static_cast<std::uint32_t>(acc);
}

std::vector<IrreducibleRep> irreducible_representations(int n, std::uint32_t p, bool force) {
    if (n > 9 && !force)
        throw ResourceError("irreducible_representations: n exceeds the default bound of 9");
    CharacterMatrix m(n, force);
    std::vector<IrreducibleRep> reps;
    for (int j = 0; j < m.col_count(); ++j) {
        const Partition& pi = m.cols()[j];
        bool regular = true;
        for (int l : pi.parts())
            if (l % static_cast<int>(p) == 0) { regular = false; break; }
        if (!regular) continue;
        IrreducibleRep rep{pi, {}};
        rep.values.reserve(m.row_count());
        for (int qi = 0; qi < m.row_count(); ++qi)
            rep.values.push_back(mod_reduce(m.at(qi, j), p));
        reps.push_back(std::move(rep));
    }
    return reps;
}

} // namespace descent

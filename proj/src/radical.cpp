#include "descent/radical.hpp"

#include <algorithm>

#include "descent/characters.hpp"
#include "descent/combinatorics.hpp"

namespace descent {

namespace {

std::vector<std::uint32_t> fp_coords(const AlgebraElement& x) {
    std::vector<std::uint32_t> v(x.dimension(), 0);
    for (const auto& t : x.terms())
        v[t.index] = static_cast<std::uint32_t>(t.coeff); // already reduced
    return v;
}

std::vector<std::int64_t> widen(std::span<const std::uint32_t> v) {
    return {v.begin(), v.end()};
}

std::vector<std::uint32_t> narrow(const std::vector<std::int64_t>& v) {
    std::vector<std::uint32_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<std::uint32_t>(v[i]);
    return out;
}

void require_fp_table(const StructureTable& table) {
    if (table.ring().is_integers())
        throw InputError("operation requires a prime-field structure table");
}

} // namespace

std::vector<AlgebraElement> radical_spanning_set(int n, std::uint32_t p, bool force) {
    if (n < 1) throw InputError("radical_spanning_set: degree must be positive");
    if (n > kMaxRadicalSpanDegree && !force)
        throw ResourceError("radical_spanning_set: n exceeds the default bound of " +
                            std::to_string(kMaxRadicalSpanDegree));
    RingTag fp = RingTag::prime_field(p);
    std::vector<AlgebraElement> out;
    for (const Composition& q : compositions(n)) {
        Composition rep = class_representative(q);
        if (rep == q) continue;
        out.push_back(AlgebraElement::from_terms(n, fp, {{q, 1}, {rep, -1}}));
    }
    for (const Partition& pi : partitions(n)) {
        if (multiplicities(pi).max_multiplicity() < static_cast<int>(p)) continue;
        out.push_back(basis_element(n, fp, Composition(pi.parts())));
    }
    return out;
}

Subspace radical_span(int n, std::uint32_t p, bool force) {
    Subspace span(1 << (n - 1), p);
    for (const AlgebraElement& x : radical_spanning_set(n, p, force))
        span.insert(fp_coords(x));
    return span;
}

int radical_dimension(int n, std::uint32_t p, bool force) {
    return radical_span(n, p, force).dimension();
}

namespace {

// span of all products u * v with u in the row basis of `power` and v in
// `generators`; used for the descending chain of ideal powers.
Subspace next_ideal_power(const StructureTable& table, const Subspace& power,
                          const std::vector<std::vector<std::int64_t>>& generators) {
    Subspace out(table.dimension(), power.modulus());
    for (const auto& row : power.basis()) {
        std::vector<std::int64_t> u = widen(row);
        for (const auto& v : generators) out.insert(narrow(table.multiply_coords(u, v)));
    }
    return out;
}

struct PowerResult {
    int index = 1;
    bool nilpotent = true;
};

PowerResult power_chain(const StructureTable& table, const Subspace& span,
                        const std::vector<std::vector<std::int64_t>>& generators) {
    PowerResult res;
    Subspace current = span;
    while (current.dimension() > 0) {
        Subspace next = next_ideal_power(table, current, generators);
        if (next.dimension() >= current.dimension()) {
            res.nilpotent = false; // stabilized without vanishing
            return res;
        }
        ++res.index;
        current = next;
    }
    return res;
}

} // namespace

RadicalCertificate certify_radical(const StructureTable& table, bool force) {
    require_fp_table(table);
    const int n = table.n();
    const std::uint32_t p = table.ring().modulus();
    if (n > kMaxCertifyDegree && !force)
        throw ResourceError("certify_radical: n exceeds the default bound of " +
                            std::to_string(kMaxCertifyDegree));
    const int d = table.dimension();

    RadicalCertificate cert;
    cert.n = n;
    cert.p = p;
    cert.spanning_set = radical_spanning_set(n, p, force);

    Subspace span(d, p);
    for (const AlgebraElement& x : cert.spanning_set) span.insert(fp_coords(x));
    cert.dimension = span.dimension();

    std::vector<std::vector<std::int64_t>> generators;
    for (const AlgebraElement& x : cert.spanning_set) generators.push_back(widen(fp_coords(x)));

    // (a) two-sided ideal: closed under left and right multiplication by
    // every basis element
    for (const auto& row : span.basis()) {
        std::vector<std::int64_t> u = widen(row);
        for (int ri = 0; ri < d; ++ri) {
            std::vector<std::int64_t> e(d, 0);
            e[ri] = 1;
            if (!span.contains(narrow(table.multiply_coords(u, e))))
                throw CertificationError("radical certification failed: span is not a right ideal");
            if (!span.contains(narrow(table.multiply_coords(e, u))))
                throw CertificationError("radical certification failed: span is not a left ideal");
        }
    }
    cert.is_ideal = true;

    // (b) nilpotent, recording the index of the power chain
    PowerResult powers = power_chain(table, span, generators);
    if (!powers.nilpotent)
        throw CertificationError("radical certification failed: span is not nilpotent");
    cert.is_nilpotent = true;
    cert.nilpotency_index = powers.index;

    // (c) commutative quotient: all commutators fall into the span
    for (int qi = 0; qi < d; ++qi)
        for (int ri = qi + 1; ri < d; ++ri) {
            std::vector<std::int64_t> comm(d, 0);
            for (const auto& t : table.product(qi, ri).terms()) comm[t.index] += t.coeff;
            for (const auto& t : table.product(ri, qi).terms()) comm[t.index] -= t.coeff;
            std::vector<std::uint32_t> v(d);
            for (int i = 0; i < d; ++i) v[i] = mod_reduce(comm[i], p);
            if (!span.contains(v))
                throw CertificationError(
                    "radical certification failed: quotient is not commutative");
        }
    cert.quotient_commutative = true;

    // (d) reduced quotient: no nonzero nilpotents survive
    CommutativeAlgebra quotient = quotient_algebra(table, span);
    if (nilradical(quotient).dimension() != 0)
        throw CertificationError("radical certification failed: quotient is not reduced");
    cert.quotient_reduced = true;

    // span = kernel of the mod-p character map, dimension for dimension
    CharacterMatrix chars(n, force);
    FpMatrix transposed(chars.col_count(), chars.row_count(), p);
    for (int qi = 0; qi < chars.row_count(); ++qi)
        for (int pj = 0; pj < chars.col_count(); ++pj)
            transposed.set(pj, qi, chars.at(qi, pj));
    Subspace ker = kernel(transposed);
    if (!ker.contains(span) || ker.dimension() != span.dimension())
        throw CertificationError(
            "radical certification failed: span does not match the character kernel");
    cert.matches_kernel = true;

    return cert;
}

RadicalCertificate certify_radical(int n, std::uint32_t p, bool force) {
    return certify_radical(StructureTable::build(n, RingTag::prime_field(p), force), force);
}

int nilpotency_index(const StructureTable& table, bool force) {
    require_fp_table(table);
    if (table.n() > kMaxCertifyDegree && !force)
        throw ResourceError("nilpotency_index: n exceeds the default bound of " +
                            std::to_string(kMaxCertifyDegree));
    const std::uint32_t p = table.ring().modulus();
    std::vector<AlgebraElement> spanning = radical_spanning_set(table.n(), p, force);
    Subspace span(table.dimension(), p);
    std::vector<std::vector<std::int64_t>> generators;
    for (const AlgebraElement& x : spanning) {
        span.insert(fp_coords(x));
        generators.push_back(widen(fp_coords(x)));
    }
    PowerResult powers = power_chain(table, span, generators);
    if (!powers.nilpotent)
        throw CertificationError("nilpotency_index: ideal powers do not vanish");
    return powers.index;
}

int nilpotency_index(int n, std::uint32_t p, bool force) {
    return nilpotency_index(StructureTable::build(n, RingTag::prime_field(p), force), force);
}

AlgebraElement nilpotency_witness(int n) {
    if (n < 3) throw InputError("nilpotency_witness requires degree at least 3");
    return AlgebraElement::from_terms(n, RingTag::integers(),
                                      {{Composition({1, n - 1}), 1}, {Composition({n - 1, 1}), -1}});
}

bool witness_power_identity(int n, int r) {
    if (n < 3 || n > 9) throw InputError("witness_power_identity: n must be in 3..9");
    if (r < 1 || r > n - 2) throw InputError("witness_power_identity: r must be in 1..n-2");
    AlgebraElement w = nilpotency_witness(n);
    AlgebraElement power = w;
    for (int k = 1; k < r; ++k) power = multiply(power, w);

    std::vector<std::pair<Composition, std::int64_t>> terms;
    std::int64_t binom = 1;
    for (int k = 0; k <= r; ++k) {
        if (k) binom = binom * (r - k + 1) / k;
        std::vector<int> parts;
        for (int i = 0; i < r - k; ++i) parts.push_back(1);
        parts.push_back(n - r);
        for (int i = 0; i < k; ++i) parts.push_back(1);
        terms.push_back({Composition(parts), (k & 1) ? -binom : binom});
    }
    return power == AlgebraElement::from_terms(n, RingTag::integers(), terms);
}

Filtration filtration(int n, std::uint32_t p) {
    if (n < 1 || n > kMaxCompositionDegree) throw InputError("filtration: degree out of range");
    const int d = 1 << (n - 1);
    Filtration f;
    f.n = n;
    f.p = p;
    for (int m = 1; m <= n + 1; ++m) {
        Subspace y(d, p);
        for (std::uint32_t qi = 0; qi < static_cast<std::uint32_t>(d); ++qi) {
            int parts = __builtin_popcount(qi) + 1;
            if (parts < m) continue;
            std::vector<std::uint32_t> e(d, 0);
            e[qi] = 1;
            y.insert(e);
        }
        f.levels.push_back(std::move(y));
    }
    return f;
}

bool filtration_check(const StructureTable& table) {
    require_fp_table(table);
    const int d = table.dimension();
    const std::uint32_t p = table.ring().modulus();
    std::vector<AlgebraElement> spanning = radical_spanning_set(table.n(), p);
    // For s with k parts the strongest requirement over Y_1..Y_k applies:
    // every product B_s X must be supported on compositions with more than
    // k parts.
    for (std::uint32_t si = 0; si < static_cast<std::uint32_t>(d); ++si) {
        int parts = __builtin_popcount(si) + 1;
        std::vector<std::int64_t> e(d, 0);
        e[si] = 1;
        for (const AlgebraElement& x : spanning) {
            std::vector<std::int64_t> prod = table.multiply_coords(e, widen(fp_coords(x)));
            for (std::uint32_t u = 0; u < static_cast<std::uint32_t>(d); ++u)
                if (prod[u] && __builtin_popcount(u) + 1 <= parts) return false;
        }
    }
    return true;
}

bool containment_check(const StructureTable& table) {
    require_fp_table(table);
    const int n = table.n();
    const int d = table.dimension();
    const std::uint32_t p = table.ring().modulus();

    std::vector<AlgebraElement> spanning = radical_spanning_set(n, p);
    Subspace radical(d, p);
    std::vector<std::vector<std::int64_t>> generators;
    for (const AlgebraElement& x : spanning) {
        radical.insert(fp_coords(x));
        generators.push_back(widen(fp_coords(x)));
    }

    Subspace differences(d, p);
    RingTag fp = RingTag::prime_field(p);
    for (const Composition& q : compositions(n)) {
        Composition rep = class_representative(q);
        if (rep == q) continue;
        differences.insert(
            fp_coords(AlgebraElement::from_terms(n, fp, {{q, 1}, {rep, -1}})));
    }

    Filtration f = filtration(n, p);
    if (n % 2 == 1 || p != 2) {
        Subspace bound = sum(intersect(f.level(2), differences), f.level(std::min(3, n + 1)));
        return bound.contains(radical);
    }
    // n even, p = 2: the square of the radical sits one layer deeper
    Subspace square(d, p);
    for (const auto& u : generators)
        for (const auto& v : generators) square.insert(narrow(table.multiply_coords(u, v)));
    Subspace bound = sum(intersect(f.level(std::min(3, n + 1)), differences),
                         f.level(std::min(4, n + 1)));
    return bound.contains(square);
}

CommutativeAlgebra quotient_algebra(const StructureTable& table, const Subspace& modulo) {
    require_fp_table(table);
    const int d = table.dimension();
    const std::uint32_t p = table.ring().modulus();
    if (modulo.ambient() != d || modulo.modulus() != p)
        throw InputError("quotient_algebra: subspace does not match table");

    // class representatives: the coordinates without a pivot
    std::vector<bool> is_pivot(d, false);
    for (const auto& row : modulo.basis())
        for (int j = 0; j < d; ++j)
            if (row[j]) { is_pivot[j] = true; break; }
    std::vector<int> reps;
    for (int j = 0; j < d; ++j)
        if (!is_pivot[j]) reps.push_back(j);

    CommutativeAlgebra q;
    q.p = p;
    q.dim = static_cast<int>(reps.size());
    q.product.assign(q.dim, std::vector<std::vector<std::uint32_t>>(q.dim));
    for (int a = 0; a < q.dim; ++a)
        for (int b = 0; b < q.dim; ++b) {
            std::vector<std::uint32_t> v(d, 0);
            for (const auto& t : table.product(reps[a], reps[b]).terms())
                v[t.index] = static_cast<std::uint32_t>(t.coeff);
            std::vector<std::uint32_t> reduced = modulo.reduce(v);
            std::vector<std::uint32_t> coords(q.dim, 0);
            for (int k = 0; k < q.dim; ++k) coords[k] = reduced[reps[k]];
            q.product[a][b] = std::move(coords);
        }
    return q;
}

Subspace nilradical(const CommutativeAlgebra& a) {
    const std::uint32_t p = a.p;
    const int d = a.dim;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (a.product[i][j] != a.product[j][i])
                throw InputError("nilradical: input algebra is not commutative");

    auto mult = [&](const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y) {
        std::vector<std::uint32_t> out(d, 0);
        for (int i = 0; i < d; ++i) {
            if (!x[i]) continue;
            for (int j = 0; j < d; ++j) {
                if (!y[j]) continue;
                std::uint64_t c = static_cast<std::uint64_t>(x[i]) * y[j] % p;
                if (!c) continue;
                for (int k = 0; k < d; ++k) {
                    std::uint64_t v = out[k] + c * a.product[i][j][k] % p;
                    out[k] = static_cast<std::uint32_t>(v >= p ? v - p : v);
                }
            }
        }
        return out;
    };

    // x -> x^p is linear over F_p on a commutative algebra; iterate it until
    // p^m exceeds the dimension, then nilpotent == killed by the composite.
    FpMatrix frob(d, d, p);
    for (int i = 0; i < d; ++i) {
        std::vector<std::uint32_t> e(d, 0), pw(d, 0);
        e[i] = 1;
        pw = e;
        for (std::uint32_t k = 1; k < p; ++k) pw = mult(pw, e);
        for (int k = 0; k < d; ++k) frob.at(k, i) = pw[k];
    }
    FpMatrix composite = FpMatrix::identity(d, p);
    for (std::int64_t reach = 1; reach <= d; reach *= p) composite = composite.multiply(frob);
    return kernel(composite);
}

} // namespace descent

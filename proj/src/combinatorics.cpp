#include "descent/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace descent {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<std::int64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

static void require_prime(int p) {
    if (!is_prime(p)) throw InputError("modulus must be prime, got " + std::to_string(p));
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InputError("composition needs at least one part");
    for (int a : parts_) {
        if (a < 1) throw InputError("composition parts must be positive");
        n_ += a;
    }
}

std::uint32_t Composition::partial_sum_mask() const {
    std::uint32_t mask = 0;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        acc += parts_[i];
        mask |= std::uint32_t{1} << (acc - 1);
    }
    return mask;
}

std::uint32_t Composition::index() const {
    if (n_ > kMaxCompositionDegree)
        throw InputError("composition degree exceeds indexable bound");
    return partial_sum_mask();
}

Composition Composition::from_index(int n, std::uint32_t index) {
    if (n < 1 || n > kMaxCompositionDegree)
        throw InputError("composition degree out of range");
    if (index >= (std::uint32_t{1} << (n - 1)))
        throw InputError("composition index out of range");
    std::vector<int> parts;
    int prev = 0;
    for (int v = 1; v < n; ++v) {
        if (index & (std::uint32_t{1} << (v - 1))) {
            parts.push_back(v - prev);
            prev = v;
        }
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

static std::string bracket_list(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    s += ']';
    return s;
}

std::string Composition::str() const { return bracket_list(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InputError("partition needs at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw InputError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InputError("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

std::string Partition::str() const { return bracket_list(parts_); }

MultiplicityVector::MultiplicityVector(int n, std::vector<int> counts)
    : n_(n), counts_(std::move(counts)) {}

int MultiplicityVector::count(int i) const {
    if (i < 1 || i >= static_cast<int>(counts_.size())) return 0;
    return counts_[i];
}

int MultiplicityVector::max_multiplicity() const {
    int m = 0;
    for (int c : counts_) m = std::max(m, c);
    return m;
}

std::int64_t MultiplicityVector::factorial_product() const {
    std::int64_t prod = 1;
    for (int c : counts_)
        for (int k = 2; k <= c; ++k) prod *= k;
    return prod;
}

std::uint32_t MultiplicityVector::factorial_product_mod(std::uint32_t p) const {
    std::uint64_t prod = 1;
    for (int c : counts_)
        for (int k = 2; k <= c; ++k) prod = prod * static_cast<std::uint64_t>(k % p) % p;
    return static_cast<std::uint32_t>(prod);
}

std::vector<Composition> compositions(int n) {
    if (n < 1 || n > kMaxCompositionDegree)
        throw InputError("compositions: n must be in 1.." +
                         std::to_string(kMaxCompositionDegree));
    std::uint32_t total = std::uint32_t{1} << (n - 1);
    std::vector<Composition> out;
    out.reserve(total);
    for (std::uint32_t idx = 0; idx < total; ++idx)
        out.push_back(Composition::from_index(n, idx));
    return out;
}

static void emit_partitions(int remaining, int max_part, std::vector<int>& acc,
                            std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        acc.push_back(part);
        emit_partitions(remaining - part, part, acc, out);
        acc.pop_back();
    }
}

std::vector<Partition> partitions(int n) {
    if (n < 1 || n > kMaxPartitionDegree)
        throw InputError("partitions: n must be in 1.." +
                         std::to_string(kMaxPartitionDegree));
    std::vector<Partition> out;
    std::vector<int> acc;
    emit_partitions(n, n, acc, out);
    return out;
}

bool equivalent(const Composition& q, const Composition& r) {
    if (q.n() != r.n()) throw InputError("equivalent: compositions of different degree");
    std::vector<int> a = q.parts(), b = r.parts();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

bool refines(const Composition& r, const Composition& q) {
    if (q.n() != r.n()) throw InputError("refines: compositions of different degree");
    std::uint32_t sq = q.partial_sum_mask(), sr = r.partial_sum_mask();
    return (sq & ~sr) == 0;
}

static MultiplicityVector count_parts(int n, const std::vector<int>& parts) {
    std::vector<int> counts(n + 1, 0);
    for (int a : parts) ++counts[a];
    return MultiplicityVector(n, std::move(counts));
}

MultiplicityVector multiplicities(const Composition& q) { return count_parts(q.n(), q.parts()); }
MultiplicityVector multiplicities(const Partition& pi) { return count_parts(pi.n(), pi.parts()); }

Partition partition_of(const Composition& q) {
    std::vector<int> parts = q.parts();
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Composition class_representative(const Composition& q) {
    std::vector<int> parts = q.parts();
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Composition(std::move(parts));
}

Partition p_regular_part(const Partition& pi, int p) {
    require_prime(p);
    std::vector<int> parts;
    for (int l : pi.parts()) {
        int power = 1;
        while (l % p == 0) {
            l /= p;
            power *= p;
        }
        for (int k = 0; k < power; ++k) parts.push_back(l);
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

int regular_class_count(int n, int p) {
    require_prime(p);
    if (n < 1 || n > kMaxPartitionDegree) throw InputError("regular_class_count: n out of range");
    int count = 0;
    for (const Partition& pi : partitions(n)) {
        bool regular = true;
        for (int l : pi.parts())
            if (l % p == 0) { regular = false; break; }
        if (regular) ++count;
    }
    return count;
}

int high_multiplicity_count(int n, int p) {
    require_prime(p);
    if (n < 1 || n > kMaxPartitionDegree)
        throw InputError("high_multiplicity_count: n out of range");
    int count = 0;
    for (const Partition& pi : partitions(n))
        if (multiplicities(pi).max_multiplicity() >= p) ++count;
    return count;
}

} // namespace descent

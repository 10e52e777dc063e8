#include "descent/group_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

namespace descent {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty()) throw InputError("permutation needs degree at least 1");
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
            throw InputError("images do not form a permutation");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::then(const Permutation& t) const {
    if (t.n() != n()) throw InputError("composition of permutations of different degree");
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) im[i] = t.images_[images_[i] - 1];
    return Permutation(std::move(im));
}

std::uint32_t descent_mask(const Permutation& sigma) {
    std::uint32_t mask = 0;
    for (int i = 1; i < sigma.n(); ++i)
        if (sigma.image(i) > sigma.image(i + 1)) mask |= std::uint32_t{1} << (i - 1);
    return mask;
}

std::string signature_string(std::uint32_t mask, int n) {
    std::string s;
    for (int i = 1; i < n; ++i) s += (mask & (std::uint32_t{1} << (i - 1))) ? '-' : '+';
    return s;
}

std::string signature(const Permutation& sigma) {
    if (sigma.n() < 2) throw InputError("signature requires degree at least 2");
    return signature_string(descent_mask(sigma), sigma.n());
}

std::vector<SignatureClass> class_sums(int n, bool force) {
    if (n < 1) throw InputError("class_sums: degree must be positive");
    if (n > kMaxOracleDegree && !force)
        throw ResourceError("class_sums: degree " + std::to_string(n) +
                            " exceeds the oracle bound of " + std::to_string(kMaxOracleDegree));
    std::vector<SignatureClass> classes(std::size_t{1} << (n - 1));
    for (std::uint32_t m = 0; m < classes.size(); ++m) classes[m].mask = m;
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    do {
        Permutation s{im};
        classes[descent_mask(s)].members.push_back(std::move(s));
    } while (std::next_permutation(im.begin(), im.end()));
    return classes;
}

// 4 bits per image value: a hashable key for degrees up to 16.
static std::uint64_t pack(const Permutation& s) {
    std::uint64_t k = 0;
    for (int i = s.n(); i >= 1; --i) k = (k << 4) | static_cast<std::uint64_t>(s.image(i));
    return k;
}

// Tally the pairwise products of two member sets, then regroup by signature
// class, insisting on a constant coefficient within each class.
static std::map<std::uint32_t, std::int64_t> regroup(
    const std::vector<SignatureClass>& classes, const std::vector<const Permutation*>& left,
    const std::vector<const Permutation*>& right) {
    std::unordered_map<std::uint64_t, std::int64_t> tally;
    tally.reserve(left.size() * 4);
    for (const Permutation* a : left)
        for (const Permutation* b : right) ++tally[pack(a->then(*b))];

    std::map<std::uint32_t, std::int64_t> out;
    for (const SignatureClass& cl : classes) {
        auto it = tally.find(pack(cl.members.front()));
        std::int64_t c0 = it == tally.end() ? 0 : it->second;
        for (const Permutation& s : cl.members) {
            auto jt = tally.find(pack(s));
            std::int64_t c = jt == tally.end() ? 0 : jt->second;
            if (c != c0)
                throw CertificationError(
                    "group-algebra product is not constant on signature class " +
                    signature_string(cl.mask, s.n()));
        }
        if (c0) out[cl.mask] = c0;
    }
    return out;
}

std::map<std::uint32_t, std::int64_t> class_product(const std::vector<SignatureClass>& classes,
                                                    std::uint32_t eps, std::uint32_t eta) {
    if (eps >= classes.size() || eta >= classes.size())
        throw InputError("class_product: signature out of range");
    std::vector<const Permutation*> left, right;
    for (const Permutation& s : classes[eps].members) left.push_back(&s);
    for (const Permutation& s : classes[eta].members) right.push_back(&s);
    return regroup(classes, left, right);
}

std::map<std::uint32_t, std::int64_t> oracle_product(const std::vector<SignatureClass>& classes,
                                                     const Composition& q, const Composition& r) {
    if (q.n() != r.n()) throw InputError("oracle_product: compositions of different degree");
    const std::uint32_t full = static_cast<std::uint32_t>(classes.size()) - 1;
    auto closure = [&](std::uint32_t mask) {
        std::vector<const Permutation*> members;
        for (const SignatureClass& cl : classes)
            if ((cl.mask & ~mask) == 0)
                for (const Permutation& s : cl.members) members.push_back(&s);
        return members;
    };
    std::map<std::uint32_t, std::int64_t> grouped =
        regroup(classes, closure(q.index()), closure(r.index()));

    // coefficients on descent-closure sums -> coefficients on the B-basis:
    // d_u = sum over supersets T of S(u) of (-1)^{|T \ S(u)|} c_T
    std::map<std::uint32_t, std::int64_t> out;
    for (std::uint32_t u = 0; u <= full; ++u) {
        std::int64_t d = 0;
        std::uint32_t rest = full & ~u;
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            auto it = grouped.find(u | sub);
            if (it != grouped.end())
                d += (__builtin_popcount(sub) & 1) ? -it->second : it->second;
            if (sub == 0) break;
        }
        if (d) out[u] = d;
    }
    return out;
}

static std::map<std::uint32_t, std::int64_t> rule_product(const StructureTable& table,
                                                          std::uint32_t qi, std::uint32_t ri) {
    std::map<std::uint32_t, std::int64_t> out;
    for (const auto& t : table.product(qi, ri).terms()) out[t.index] = t.coeff;
    return out;
}

static const char* kOrientation =
    "descents at '-': B_q spans the permutations whose descent set lies in the "
    "partial-sum set of q; products compose left-to-right (left factor acts first)";

static void compare_pair(const StructureTable& table,
                         const std::vector<SignatureClass>& classes, std::uint32_t qi,
                         std::uint32_t ri, OracleReport& report) {
    Composition q = Composition::from_index(table.n(), qi);
    Composition r = Composition::from_index(table.n(), ri);
    auto expect = rule_product(table, qi, ri);
    auto got = oracle_product(classes, q, r);
    bool match = expect == got;
    report.pairs.push_back({qi, ri, match});
    if (!match) report.mismatches.push_back({qi, ri, std::move(expect), std::move(got)});
}

OracleReport oracle_compare_all(const StructureTable& table,
                                const std::vector<SignatureClass>& classes) {
    if (!table.ring().is_integers())
        throw InputError("oracle comparison needs the integer structure table");
    OracleReport report;
    report.n = table.n();
    report.orientation = kOrientation;
    const std::uint32_t d = static_cast<std::uint32_t>(table.dimension());
    for (std::uint32_t qi = 0; qi < d; ++qi)
        for (std::uint32_t ri = 0; ri < d; ++ri) compare_pair(table, classes, qi, ri, report);
    return report;
}

OracleReport oracle_compare_sample(const StructureTable& table,
                                   const std::vector<SignatureClass>& classes, int count,
                                   std::uint64_t seed) {
    if (!table.ring().is_integers())
        throw InputError("oracle comparison needs the integer structure table");
    OracleReport report;
    report.n = table.n();
    report.orientation = kOrientation;
    std::mt19937_64 rng(seed);
    const std::uint32_t d = static_cast<std::uint32_t>(table.dimension());
    // modular draw keeps the sample identical across standard libraries
    auto pick = [&] { return static_cast<std::uint32_t>(rng() % d); };
    for (int k = 0; k < count; ++k) {
        std::uint32_t qi = pick(), ri = pick();
        compare_pair(table, classes, qi, ri, report);
    }
    return report;
}

} // namespace descent

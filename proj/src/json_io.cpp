#include "descent/json_io.hpp"

#include <fstream>

namespace descent {

using nlohmann::json;

json to_json(const RingTag& ring) {
    if (ring.is_integers()) return json("Z");
    return json{{"Fp", ring.modulus()}};
}

RingTag ring_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "Z") return RingTag::integers();
    if (j.is_object() && j.contains("Fp"))
        return RingTag::prime_field(j.at("Fp").get<std::uint32_t>());
    throw InputError("ring must be \"Z\" or {\"Fp\": p}");
}

json to_json(const AlgebraElement& x) {
    json terms = json::array();
    for (const auto& t : x.terms()) {
        json term;
        term["composition"] = Composition::from_index(x.n(), t.index).parts();
        term["coeff"] = t.coeff;
        terms.push_back(std::move(term));
    }
    json j;
    j["n"] = x.n();
    j["ring"] = to_json(x.ring());
    j["terms"] = std::move(terms);
    return j;
}

AlgebraElement element_from_json(const json& j) {
    int n = j.at("n").get<int>();
    RingTag ring = ring_from_json(j.at("ring"));
    std::vector<std::pair<Composition, std::int64_t>> terms;
    for (const auto& term : j.at("terms"))
        terms.push_back({Composition(term.at("composition").get<std::vector<int>>()),
                         term.at("coeff").get<std::int64_t>()});
    return AlgebraElement::from_terms(n, ring, terms);
}

json to_json(const RadicalCertificate& cert) {
    json j;
    j["n"] = cert.n;
    j["p"] = cert.p;
    j["dimension"] = cert.dimension;
    j["nilpotency_index"] = cert.nilpotency_index;
    j["is_ideal"] = cert.is_ideal;
    j["is_nilpotent"] = cert.is_nilpotent;
    j["quotient_commutative"] = cert.quotient_commutative;
    j["quotient_reduced"] = cert.quotient_reduced;
    j["matches_kernel"] = cert.matches_kernel;
    json span = json::array();
    for (const AlgebraElement& x : cert.spanning_set) span.push_back(to_json(x));
    j["spanning_set"] = std::move(span);
    return j;
}

json to_json(const CharacterMatrix& m) {
    json rows = json::array(), cols = json::array(), values = json::array();
    for (const Composition& q : m.rows()) rows.push_back(q.parts());
    for (const Partition& pi : m.cols()) cols.push_back(pi.parts());
    for (int i = 0; i < m.row_count(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.col_count(); ++j) row.push_back(m.at(i, j));
        values.push_back(std::move(row));
    }
    json j;
    j["n"] = m.n();
    j["rows"] = std::move(rows);
    j["cols"] = std::move(cols);
    j["values"] = std::move(values);
    return j;
}

// '+'-joined parts keep the labels free of the CSV delimiter.
static std::string plus_label(const std::vector<int>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += '+';
        s += std::to_string(parts[i]);
    }
    return s;
}

std::string to_csv(const CharacterMatrix& m) {
    std::string out = "composition";
    for (const Partition& pi : m.cols()) out += "," + plus_label(pi.parts());
    out += '\n';
    for (int i = 0; i < m.row_count(); ++i) {
        out += plus_label(m.rows()[i].parts());
        for (int j = 0; j < m.col_count(); ++j) out += "," + std::to_string(m.at(i, j));
        out += '\n';
    }
    return out;
}

static json coefficient_list(int n, const std::map<std::uint32_t, std::int64_t>& coeffs) {
    json list = json::array();
    for (const auto& [idx, c] : coeffs) {
        json term;
        term["composition"] = Composition::from_index(n, idx).parts();
        term["coeff"] = c;
        list.push_back(std::move(term));
    }
    return list;
}

json to_json(const OracleReport& report) {
    json j;
    j["n"] = report.n;
    j["orientation"] = report.orientation;
    j["pairs_checked"] = report.pairs_checked();
    j["all_match"] = report.all_match();
    json pairs = json::array();
    for (const OraclePairResult& pr : report.pairs) {
        json entry;
        entry["q"] = Composition::from_index(report.n, pr.qi).parts();
        entry["r"] = Composition::from_index(report.n, pr.ri).parts();
        entry["match"] = pr.match;
        pairs.push_back(std::move(entry));
    }
    j["pairs"] = std::move(pairs);
    json mismatches = json::array();
    for (const OracleMismatch& m : report.mismatches) {
        json entry;
        entry["q"] = Composition::from_index(report.n, m.qi).parts();
        entry["r"] = Composition::from_index(report.n, m.ri).parts();
        entry["rule"] = coefficient_list(report.n, m.from_rule);
        entry["oracle"] = coefficient_list(report.n, m.from_oracle);
        mismatches.push_back(std::move(entry));
    }
    j["mismatches"] = std::move(mismatches);
    return j;
}

void save_table(const StructureTable& table, const std::filesystem::path& path) {
    json j;
    j["format_version"] = kTableFormatVersion;
    j["n"] = table.n();
    j["ring"] = to_json(table.ring());
    json products = json::array();
    for (const AlgebraElement& cell : table.products()) products.push_back(to_json(cell));
    j["products"] = std::move(products);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write table cache file: " + path.string());
    out << j.dump();
    out << '\n';
}

std::optional<StructureTable> load_table(const std::filesystem::path& path, int n, RingTag ring) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    json j;
    try {
        in >> j;
        if (j.at("format_version").get<int>() != kTableFormatVersion) return std::nullopt;
        if (j.at("n").get<int>() != n) return std::nullopt;
        if (!(ring_from_json(j.at("ring")) == ring)) return std::nullopt;
        std::vector<AlgebraElement> products;
        for (const auto& cell : j.at("products")) products.push_back(element_from_json(cell));
        return StructureTable::from_products(n, ring, std::move(products));
    } catch (const std::exception&) {
        return std::nullopt; // unreadable cache counts as a miss
    }
}

std::string table_cache_filename(int n, RingTag ring) {
    return "table-v" + std::to_string(kTableFormatVersion) + "-n" + std::to_string(n) + "-" +
           ring.str() + ".json";
}

const StructureTable& TableCache::get(int n, RingTag ring, bool force) {
    auto key = std::make_pair(n, ring.str());
    auto it = store_.find(key);
    if (it != store_.end()) return it->second;

    if (dir_) {
        std::filesystem::path file = *dir_ / table_cache_filename(n, ring);
        if (auto loaded = load_table(file, n, ring)) {
            auto [pos, inserted] = store_.emplace(key, std::move(*loaded));
            return pos->second;
        }
    }
    StructureTable built = StructureTable::build(n, ring, force);
    if (dir_) {
        std::error_code ec;
        std::filesystem::create_directories(*dir_, ec);
        if (!ec) save_table(built, *dir_ / table_cache_filename(n, ring));
    }
    auto [pos, inserted] = store_.emplace(key, std::move(built));
    return pos->second;
}

} // namespace descent

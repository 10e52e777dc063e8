#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "descent/algebra.hpp"
#include "descent/characters.hpp"
#include "descent/group_oracle.hpp"
#include "descent/radical.hpp"

namespace descent {

inline constexpr int kTableFormatVersion = 1;

/// {"n": int, "ring": "Z" | {"Fp": p}, "terms": [{"composition": [...], "coeff": c}, ...]}
nlohmann::json to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RingTag& ring);
RingTag ring_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RadicalCertificate& cert);

nlohmann::json to_json(const CharacterMatrix& m);
std::string to_csv(const CharacterMatrix& m);

nlohmann::json to_json(const OracleReport& report);

/// Versioned structure-table cache file; loading returns nothing when the
/// header disagrees with the request (wrong version, degree, or ring).
void save_table(const StructureTable& table, const std::filesystem::path& path);
std::optional<StructureTable> load_table(const std::filesystem::path& path, int n, RingTag ring);

std::string table_cache_filename(int n, RingTag ring);

/// In-process structure-table store with optional disk persistence.
class TableCache {
public:
    TableCache() = default;
    explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const StructureTable& get(int n, RingTag ring, bool force = false);

private:
    std::optional<std::filesystem::path> dir_;
    std::map<std::pair<int, std::string>, StructureTable> store_;
};

} // namespace descent

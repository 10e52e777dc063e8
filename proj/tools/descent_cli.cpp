// descent: compositions, the descent algebras of symmetric groups over Z and
// F_p, their characters, and certified radicals, from the command line.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "descent/characters.hpp"
#include "descent/json_io.hpp"
#include "descent/radical.hpp"
#include "descent/verify.hpp"

namespace {

using namespace descent;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitBadInputOrBounds = 2;

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::stringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(piece, &used);
            if (used != piece.size()) throw InputError("");
            parts.push_back(v);
        } catch (const std::exception&) {
            throw InputError("malformed composition entry '" + piece + "'");
        }
    }
    if (parts.empty()) throw InputError("empty composition");
    return parts;
}

std::vector<std::uint32_t> parse_primes(const std::string& text) {
    std::vector<std::uint32_t> primes;
    for (int v : parse_parts(text)) {
        if (!is_prime(v)) throw InputError(std::to_string(v) + " is not prime");
        primes.push_back(static_cast<std::uint32_t>(v));
    }
    return primes;
}

// "4" or "3..5"
std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        int lo = std::stoi(text.substr(0, dots));
        int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) throw InputError("");
        return {lo, hi};
    } catch (const std::exception&) {
        throw InputError("malformed range '" + text + "', expected N or A..B");
    }
}

RingTag parse_ring(const std::string& text) {
    if (text == "Z") return RingTag::integers();
    if (text.size() > 1 && text[0] == 'F') {
        try {
            return RingTag::prime_field(static_cast<std::uint32_t>(std::stoi(text.substr(1))));
        } catch (const InputError&) {
            throw;
        } catch (const std::exception&) {
        }
    }
    throw InputError("ring must be Z or F<p>, got '" + text + "'");
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag) {
    if (!flag.empty()) return std::filesystem::path(flag);
    if (const char* env = std::getenv("DESCENT_CACHE_DIR")) return std::filesystem::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return std::filesystem::path(xdg) / "descent";
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "descent";
    return std::nullopt;
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot open output file: " + out_path);
    out << text;
}

struct CommonOptions {
    std::string format = "text";
    std::string out_path;
    std::string cache_dir;
    bool force = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_cache = true) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", opt.out_path, "write output to this file instead of stdout");
    if (with_cache)
        cmd->add_option("--cache-dir", opt.cache_dir,
                        "structure-table cache directory (default: $DESCENT_CACHE_DIR, then the "
                        "platform cache)");
    cmd->add_flag("--force", opt.force, "relax resource bounds (never correctness checks)");
}

int run_multiply(int n, const std::string& q_text, const std::string& r_text,
                 const std::string& ring_text, const CommonOptions& opt) {
    Composition q(parse_parts(q_text)), r(parse_parts(r_text));
    if (q.n() != n || r.n() != n)
        throw InputError("compositions must sum to n=" + std::to_string(n));
    RingTag ring = parse_ring(ring_text);
    AlgebraElement prod = multiply(basis_element(n, ring, q), basis_element(n, ring, r));
    if (opt.format == "json") {
        write_output(opt.out_path, to_json(prod).dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "B" << q.str() << " * B" << r.str() << " over " << ring.str() << " = "
            << prod.str() << "\n";
        write_output(opt.out_path, out.str());
    }
    return 0;
}

int run_radical(int n, std::uint32_t p, const CommonOptions& opt) {
    TableCache tables;
    if (auto dir = resolve_cache_dir(opt.cache_dir)) tables = TableCache(*dir);
    RadicalCertificate cert =
        certify_radical(tables.get(n, RingTag::prime_field(p), opt.force), opt.force);
    if (opt.format == "json") {
        write_output(opt.out_path, to_json(cert).dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "radical certificate for n=" << cert.n << ", p=" << cert.p << "\n";
        out << "  dimension            " << cert.dimension << "\n";
        out << "  nilpotency index     " << cert.nilpotency_index << "\n";
        auto flag = [](bool b) { return b ? "yes" : "no"; };
        out << "  two-sided ideal      " << flag(cert.is_ideal) << "\n";
        out << "  nilpotent            " << flag(cert.is_nilpotent) << "\n";
        out << "  quotient commutative " << flag(cert.quotient_commutative) << "\n";
        out << "  quotient reduced     " << flag(cert.quotient_reduced) << "\n";
        out << "  equals char kernel   " << flag(cert.matches_kernel) << "\n";
        out << "  spanning set (" << cert.spanning_set.size() << " elements)\n";
        for (const AlgebraElement& x : cert.spanning_set) out << "    " << x.str() << "\n";
        write_output(opt.out_path, out.str());
    }
    return cert.all_flags() ? 0 : kExitVerificationFailure;
}

int run_table(const std::string& range_text, const std::string& primes_text,
              const CommonOptions& opt) {
    auto [lo, hi] = parse_range(range_text);
    if (lo < 1) throw InputError("table: n must be positive");
    std::vector<std::uint32_t> primes = parse_primes(primes_text);

    struct Row {
        int n;
        std::uint32_t p;
        std::int64_t basis;
        int partitions_count;
        int regular;
        int radical_dim;
        int index;
    };
    std::vector<Row> rows;
    for (int n = lo; n <= hi; ++n)
        for (std::uint32_t p : primes) {
            Row row;
            row.n = n;
            row.p = p;
            row.basis = std::int64_t{1} << (n - 1);
            row.partitions_count = static_cast<int>(partitions(n).size());
            row.regular = regular_class_count(n, static_cast<int>(p));
            row.radical_dim = radical_dimension(n, p, opt.force);
            // degree >= 3 carries the proven index n-1; the two tiny degrees
            // are recomputed directly
            row.index = n >= 3 ? n - 1 : nilpotency_index(n, p, opt.force);
            rows.push_back(row);
        }

    if (opt.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const Row& r : rows) {
            nlohmann::json row;
            row["n"] = r.n;
            row["p"] = r.p;
            row["basis_dim"] = r.basis;
            row["partitions"] = r.partitions_count;
            row["regular_classes"] = r.regular;
            row["radical_dim"] = r.radical_dim;
            row["nilpotency_index"] = r.index;
            j.push_back(std::move(row));
        }
        write_output(opt.out_path, j.dump(2) + "\n");
    } else if (opt.format == "csv") {
        std::ostringstream out;
        out << "n,p,basis_dim,partitions,regular_classes,radical_dim,nilpotency_index\n";
        for (const Row& r : rows)
            out << r.n << ',' << r.p << ',' << r.basis << ',' << r.partitions_count << ','
                << r.regular << ',' << r.radical_dim << ',' << r.index << "\n";
        write_output(opt.out_path, out.str());
    } else {
        std::ostringstream out;
        out << std::setw(3) << "n" << std::setw(4) << "p" << std::setw(10) << "2^(n-1)"
            << std::setw(8) << "p(n)" << std::setw(8) << "g(n,p)" << std::setw(8) << "dim R"
            << std::setw(7) << "index" << "\n";
        for (const Row& r : rows)
            out << std::setw(3) << r.n << std::setw(4) << r.p << std::setw(10) << r.basis
                << std::setw(8) << r.partitions_count << std::setw(8) << r.regular
                << std::setw(8) << r.radical_dim << std::setw(7) << r.index << "\n";
        write_output(opt.out_path, out.str());
    }
    return 0;
}

int run_verify(int max_n, const std::string& primes_text, bool with_oracle,
               const CommonOptions& opt) {
    verify::VerifyOptions options;
    options.max_n = max_n;
    options.primes = parse_primes(primes_text);
    options.with_oracle = with_oracle;
    TableCache tables;
    if (auto dir = resolve_cache_dir(opt.cache_dir)) tables = TableCache(*dir);

    std::vector<verify::CheckResult> results = verify::run_verification(options, tables);
    if (opt.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : results) {
            nlohmann::json row;
            row["name"] = r.name;
            row["scope"] = r.scope;
            row["pass"] = r.pass;
            row["detail"] = r.detail;
            j.push_back(std::move(row));
        }
        write_output(opt.out_path, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        int passed = 0;
        for (const auto& r : results) {
            out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.scope << ")\n";
            if (!r.detail.empty()) out << "      " << r.detail << "\n";
            if (r.pass) ++passed;
        }
        out << passed << "/" << results.size() << " checks passed\n";
        write_output(opt.out_path, out.str());
    }
    return verify::all_passed(results) ? 0 : kExitVerificationFailure;
}

int run_characters(int n, int p_value, const CommonOptions& opt) {
    CharacterMatrix m(n, opt.force);
    const bool with_p = p_value > 0;
    std::uint32_t p = with_p ? static_cast<std::uint32_t>(p_value) : 0;

    if (opt.format == "csv") {
        write_output(opt.out_path, to_csv(m));
        return 0;
    }
    if (opt.format == "json") {
        nlohmann::json j = to_json(m);
        if (with_p) {
            j["p"] = p;
            j["rank_mod_p"] = rank_mod_p(m, p);
            j["regular_classes"] = regular_class_count(n, static_cast<int>(p));
            nlohmann::json reps = nlohmann::json::array();
            for (const IrreducibleRep& rep : irreducible_representations(n, p, opt.force)) {
                nlohmann::json entry;
                entry["partition"] = rep.label.parts();
                entry["values"] = rep.values;
                reps.push_back(std::move(entry));
            }
            j["irreducible_representations"] = std::move(reps);
        }
        write_output(opt.out_path, j.dump(2) + "\n");
        return 0;
    }

    std::ostringstream out;
    out << "character matrix for n=" << n << " (rows: compositions, cols: partitions)\n";
    out << std::setw(14) << " ";
    for (const Partition& pi : m.cols()) out << std::setw(8) << pi.str();
    out << "\n";
    for (int qi = 0; qi < m.row_count(); ++qi) {
        out << std::setw(14) << m.rows()[qi].str();
        for (int pj = 0; pj < m.col_count(); ++pj) out << std::setw(8) << m.at(qi, pj);
        out << "\n";
    }
    if (with_p) {
        out << "rank mod " << p << " = " << rank_mod_p(m, p)
            << ", p-regular classes = " << regular_class_count(n, static_cast<int>(p)) << "\n";
        out << "one-dimensional representations (values over the basis):\n";
        for (const IrreducibleRep& rep : irreducible_representations(n, p, opt.force)) {
            out << "  " << rep.label.str() << ":";
            for (std::uint32_t v : rep.values) out << " " << v;
            out << "\n";
        }
    }
    write_output(opt.out_path, out.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"descent algebras of symmetric groups over Z and F_p: products, characters, "
                 "and certified radicals"};
    app.require_subcommand(1);

    // multiply
    auto* multiply_cmd = app.add_subcommand("multiply", "product of two basis elements");
    int mul_n = 0;
    std::string mul_q, mul_r, mul_ring = "Z";
    CommonOptions mul_opt;
    multiply_cmd->add_option("--n", mul_n, "degree")->required();
    multiply_cmd->add_option("--q", mul_q, "left composition, comma separated")->required();
    multiply_cmd->add_option("--r", mul_r, "right composition, comma separated")->required();
    multiply_cmd->add_option("--ring", mul_ring, "coefficient ring: Z or F<p>");
    add_common(multiply_cmd, mul_opt, false);

    // radical
    auto* radical_cmd = app.add_subcommand("radical", "certify the radical of one (n, p)");
    int rad_n = 0;
    int rad_p = 0;
    CommonOptions rad_opt;
    radical_cmd->add_option("--n", rad_n, "degree")->required();
    radical_cmd->add_option("--p", rad_p, "prime modulus")->required();
    add_common(radical_cmd, rad_opt);

    // table
    auto* table_cmd = app.add_subcommand("table", "summary rows over a range of (n, p)");
    std::string table_range, table_primes;
    CommonOptions table_opt;
    table_cmd->add_option("--n", table_range, "degree or range A..B")->required();
    table_cmd->add_option("--p", table_primes, "comma-separated primes")->required();
    add_common(table_cmd, table_opt, false);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
    int verify_max_n = 5;
    std::string verify_primes = "2,3";
    bool with_oracle = false;
    CommonOptions verify_opt;
    verify_cmd->add_option("--n-max", verify_max_n, "largest degree to verify (default 5)");
    verify_cmd->add_option("--p", verify_primes, "comma-separated primes (default 2,3)");
    verify_cmd->add_flag("--with-oracle", with_oracle,
                         "include the group-algebra oracle comparison");
    add_common(verify_cmd, verify_opt);

    // characters
    auto* characters_cmd =
        app.add_subcommand("characters", "character matrix, rank, and representations");
    int char_n = 0;
    int char_p = 0;
    CommonOptions char_opt;
    characters_cmd->add_option("--n", char_n, "degree")->required();
    characters_cmd->add_option("--p", char_p, "prime modulus (optional)");
    add_common(characters_cmd, char_opt, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInputOrBounds;
    }

    try {
        if (multiply_cmd->parsed()) return run_multiply(mul_n, mul_q, mul_r, mul_ring, mul_opt);
        if (radical_cmd->parsed()) {
            if (!is_prime(rad_p)) throw InputError("--p must be prime");
            return run_radical(rad_n, static_cast<std::uint32_t>(rad_p), rad_opt);
        }
        if (table_cmd->parsed()) return run_table(table_range, table_primes, table_opt);
        if (verify_cmd->parsed())
            return run_verify(verify_max_n, verify_primes, with_oracle, verify_opt);
        if (characters_cmd->parsed()) {
            if (char_p != 0 && !is_prime(char_p)) throw InputError("--p must be prime");
            return run_characters(char_n, char_p, char_opt);
        }
    } catch (const CertificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInputOrBounds;
    }
    return kExitBadInputOrBounds;
}

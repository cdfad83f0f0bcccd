#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "lscat/algebra.hpp"

namespace lscat::cli {

enum ExitCode : int {
    kOk = 0,
    kMismatch = 1,
    kViolated = 2,
    kInconclusive = 3,
    kUsage = 64,
    kDataError = 65,
};

inline constexpr std::uint64_t kDefaultSeed = 20240229;

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SoRow {
    unsigned n = 0;
    unsigned dimension = 0;
    unsigned expected_dimension = 0;
    std::vector<unsigned> truncations;
    std::vector<unsigned> expected_truncations;
    unsigned cl_formula = 0;
    unsigned cl_search = 0;
    unsigned expected_cl = 0;
    std::optional<std::size_t> known_cat;
    bool ok = false;
};

struct G2Row {
    unsigned dimension = 0;
    unsigned q = 0;
    std::size_t cat = 0;
    long long rhs = 0;  // 2 q cat - 4
    bool certified = false;
    bool ok = false;
};

struct TorusRow {
    unsigned n = 0;
    unsigned k = 0;
    long long lhs = 0;
    long long rhs = 0;
    bool ok = false;
};

struct OracleRow {
    std::string presentation;
    std::size_t size = 0;
    unsigned cl_formula = 0;
    unsigned cl_search = 0;
    bool ok = false;
};

struct PaperCheck {
    std::vector<SoRow> so_rows;
    G2Row g2;
    TorusRow torus;
    std::vector<OracleRow> oracle_rows;
    std::uint64_t seed = kDefaultSeed;
    double seconds = 0;
    bool ok = false;
};

PaperCheck verify_paper(std::uint64_t seed = kDefaultSeed, std::size_t random_rows = 20);
nlohmann::json to_json(const PaperCheck& c);

/// A pure-truncation presentation with 1..4 generators, truncations in
/// 2..64, expanded size at most `max_size`, top degree = sum deg (p - 1).
TruncatedPresentation random_presentation(std::mt19937_64& rng, std::size_t max_size = 4096);

}  // namespace lscat::cli

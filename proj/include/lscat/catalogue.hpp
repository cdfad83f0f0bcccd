#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lscat/algebra.hpp"
#include "lscat/invariants.hpp"

namespace lscat {

/// A closed manifold as far as this library knows it: declared geometric
/// flags, optional mod-2 cohomology ring and integral homology ranks, and
/// known invariant values with their sources.
struct SpaceRecord {
    std::string name;
    unsigned dimension = 0;
    /// The space is `connectivity`-connected; 0 means merely connected.
    unsigned connectivity = 0;
    bool orientable = true;
    bool stably_parallelizable = false;
    std::optional<Ring> ring;
    std::optional<MorseData> morse;
    std::optional<KnownValue> known_cat;
    std::optional<unsigned> genus;
    std::vector<std::string> notes;
};

class RecordError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Checks ring top degree = dimension and cl <= known_cat <= dimension.
void validate_record(const SpaceRecord& r);

std::optional<unsigned> cup_length_of(const SpaceRecord& r);
BoundLedger ledger_for(const SpaceRecord& r);

/// Standard records.
SpaceRecord point_record();
SpaceRecord so_n_record(unsigned n);
SpaceRecord g2_record();
SpaceRecord torus_record(unsigned k);
SpaceRecord sphere_record(unsigned n);
SpaceRecord surface_record(unsigned genus);
/// Künneth product; known cat is not carried over.
SpaceRecord product_record(const SpaceRecord& a, const SpaceRecord& b);

/// H*(S_g; Z/2): 1; a_1..a_g, b_1..b_g in degree 1; w in degree 2 with
/// a_i * b_i = w and every other product of degree-1 classes zero.
MultiplicationTable surface_table(unsigned genus);

/// Name-addressed records: point, SO3..SO9, G2, T<k>, S<n> (sphere),
/// S_<g> (surface of genus g), and products joined with 'x' (e.g. S3xS3).
/// Parametric entries are built on first use and cached.
class Catalogue {
  public:
    static Catalogue& instance();

    /// Throws std::out_of_range for unknown names.
    std::shared_ptr<const SpaceRecord> get(std::string_view name);
    bool contains(std::string_view name);
    /// Fixed entries plus a representative range of each parametric family.
    std::vector<std::string> list() const;

  private:
    std::shared_ptr<const SpaceRecord> build(const std::string& name);

    std::mutex mutex_;
    std::map<std::string, std::shared_ptr<const SpaceRecord>, std::less<>> cache_;
};

}  // namespace lscat

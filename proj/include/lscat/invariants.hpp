#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lscat/algebra.hpp"

namespace lscat {

/// Sum of (p_i - 1) over all generators.
unsigned cup_length_formula(const TruncatedPresentation& p);

/// H*(SO_n; Z/2) as a truncated algebra: generators b_i of odd degree i < n,
/// b_i truncated at the least power of two p_i with i * p_i >= n. Generators
/// with p_i = 1 are dropped. Top degree n(n-1)/2.
TruncatedPresentation so_n_presentation(unsigned n);

/// Largest m with I^m != 0, where I is the positive-degree ideal. Computed
/// by iterating echelon spans of I, I*I, I*I*I, ...
unsigned cup_length_search(const MultiplicationTable& t);

/// Formula for presentations, ideal-power search for tables.
unsigned cup_length(const Ring& ring);

std::size_t betti_sum(std::span<const std::size_t> ranks);

/// Integral homology data for Morse-theoretic counts: ranks r_k and torsion
/// ranks t_k of H_k for k = 0..dimension.
struct MorseData {
    std::vector<std::size_t> ranks;
    std::vector<std::size_t> torsion;
    bool simply_connected = false;
    unsigned dimension = 0;

    /// Throws std::invalid_argument on length mismatch.
    void validate() const;
    bool operator==(const MorseData&) const = default;
};

struct MorseBound {
    std::size_t bound = 0;
    /// Smale: realized by some Morse function when simply connected, dim >= 6.
    bool exact = false;
};

/// sum over k of r_k + t_k + t_{k-1}.
MorseBound morse_lower_bound(const MorseData& d);

struct KnownValue {
    std::size_t value = 0;
    std::string citation;

    bool operator==(const KnownValue&) const = default;
};

struct Interval {
    std::size_t lower = 0;
    std::optional<std::size_t> upper;  // nullopt = unbounded
    std::string lower_source;
    std::string upper_source;

    bool collapsed() const { return upper && *upper == lower; }
};

class LedgerError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Interval bounds for cat and its neighbours, chained by
///   cl <= e* <= cat <= dim,  cat <= ballcat <= crit - 1,  SB <= crit*.
struct BoundLedger {
    std::size_t dimension = 0;
    std::size_t cup_length = 0;
    std::size_t betti_sum = 0;
    Interval cat;
    Interval toomer_e;
    Interval ballcat;
    Interval crit;
    Interval crit_star;

    /// Every broken chain link, empty when consistent.
    std::vector<std::string> violations() const;
    bool consistent() const { return violations().empty(); }

    /// Raises cat.lower (never lowers it) and propagates along the chain.
    /// Throws LedgerError if the result would exceed cat.upper.
    void raise_cat_lower(std::size_t value, const std::string& source);
};

struct LedgerInput {
    std::size_t dimension = 0;
    /// nullopt when no ring data is available.
    std::optional<std::size_t> cup_length;
    /// Sum of Betti numbers; taken from Morse data when present.
    std::optional<std::size_t> betti_sum;
    std::optional<MorseData> morse;
    std::optional<KnownValue> known_cat;
};

/// Throws LedgerError when known_cat lies outside [cl, dim].
BoundLedger cat_bounds(const LedgerInput& input);
BoundLedger cat_bounds(const Ring& ring, unsigned dimension, const std::optional<KnownValue>& known_cat = {});

}  // namespace lscat

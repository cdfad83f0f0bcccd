#include "lscat/catalogue.hpp"

#include <charconv>

namespace lscat {

void validate_record(const SpaceRecord& r) {
    if (r.name.empty()) throw RecordError("space name must not be empty");
    if (r.ring && top_degree(*r.ring) != r.dimension)
        throw RecordError("space '" + r.name + "': ring top degree " + std::to_string(top_degree(*r.ring)) +
                          " differs from dimension " + std::to_string(r.dimension));
    if (r.morse) {
        r.morse->validate();
        if (r.morse->dimension != r.dimension)
            throw RecordError("space '" + r.name + "': Morse data has the wrong dimension");
    }
    if (r.known_cat) {
        const auto k = r.known_cat->value;
        if (k > r.dimension)
            throw RecordError("space '" + r.name + "': known cat " + std::to_string(k) + " exceeds dimension " +
                              std::to_string(r.dimension));
        if (const auto cl = cup_length_of(r); cl && k < *cl)
            throw RecordError("space '" + r.name + "': known cat " + std::to_string(k) + " is below cup-length " +
                              std::to_string(*cl));
    }
    if (r.genus && r.dimension != 2) throw RecordError("space '" + r.name + "': genus is only defined for surfaces");
}

std::optional<unsigned> cup_length_of(const SpaceRecord& r) {
    if (!r.ring) return std::nullopt;
    return cup_length(*r.ring);
}

BoundLedger ledger_for(const SpaceRecord& r) {
    LedgerInput in;
    in.dimension = r.dimension;
    if (r.ring) {
        in.cup_length = cup_length(*r.ring);
        const auto poly = poincare_polynomial(*r.ring);
        std::size_t total = 0;
        for (auto c : poly) total += c;
        in.betti_sum = total;
    }
    in.morse = r.morse;
    in.known_cat = r.known_cat;
    return cat_bounds(in);
}

MultiplicationTable surface_table(unsigned genus) {
    std::vector<BasisElement> basis{{"1", 0}};
    for (unsigned i = 1; i <= genus; ++i) basis.push_back({"a" + std::to_string(i), 1});
    for (unsigned i = 1; i <= genus; ++i) basis.push_back({"b" + std::to_string(i), 1});
    basis.push_back({"w", 2});
    const std::size_t w = basis.size() - 1;
    std::vector<ProductRule> products;
    for (unsigned i = 1; i <= genus; ++i) products.push_back({i, genus + i, {w}});
    return MultiplicationTable(std::move(basis), 2, std::move(products));
}

namespace {

std::vector<std::size_t> zeros(std::size_t n) { return std::vector<std::size_t>(n, 0); }

std::size_t binomial(unsigned n, unsigned k) {
    std::size_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// cat SO(n) for n = 3..9, computed by Iwase, Mimura and Nishimoto.
std::optional<std::size_t> known_cat_so(unsigned n) {
    static constexpr std::size_t values[] = {3, 4, 8, 9, 11, 12, 20};
    if (n < 3 || n > 9) return std::nullopt;
    return values[n - 3];
}

}  // namespace

SpaceRecord point_record() {
    SpaceRecord r;
    r.name = "point";
    r.ring = TruncatedPresentation();
    r.morse = MorseData{{1}, {0}, true, 0};
    r.known_cat = KnownValue{0, "cat of a point is 0"};
    r.stably_parallelizable = true;
    return r;
}

SpaceRecord so_n_record(unsigned n) {
    SpaceRecord r;
    r.name = "SO" + std::to_string(n);
    r.ring = so_n_presentation(n);
    r.dimension = n * (n - 1) / 2;
    r.stably_parallelizable = true;
    if (auto k = known_cat_so(n))
        r.known_cat = KnownValue{*k, "Iwase-Mimura-Nishimoto: cat SO(n) = cl(SO(n)) for n <= 9"};
    r.notes.push_back("Lie group: parallelizable");
    return r;
}

SpaceRecord g2_record() {
    SpaceRecord r;
    r.name = "G2";
    r.dimension = 14;
    r.connectivity = 2;
    r.stably_parallelizable = true;
    r.known_cat = KnownValue{4, "Iwase-Mimura: cat G2 = 4"};
    r.notes.push_back("Lie group: parallelizable");
    r.notes.push_back("cohomology ring not recorded; ring-based criteria do not apply");
    return r;
}

SpaceRecord torus_record(unsigned k) {
    if (k < 1) throw std::out_of_range("torus dimension must be >= 1");
    SpaceRecord r;
    r.name = "T" + std::to_string(k);
    std::vector<GeneratorSpec> gens;
    for (unsigned i = 1; i <= k; ++i) gens.push_back({"t" + std::to_string(i), 1});
    r.ring = TruncatedPresentation(std::move(gens), std::vector<unsigned>(k, 2), k);
    r.dimension = k;
    r.stably_parallelizable = true;
    MorseData m{zeros(k + 1), zeros(k + 1), false, k};
    for (unsigned j = 0; j <= k; ++j) m.ranks[j] = binomial(k, j);
    r.morse = std::move(m);
    r.known_cat = KnownValue{k, "cat T^k = k"};
    if (k == 2) r.genus = 1;
    return r;
}

SpaceRecord sphere_record(unsigned n) {
    if (n < 1) throw std::out_of_range("sphere dimension must be >= 1");
    SpaceRecord r;
    r.name = "S" + std::to_string(n);
    r.ring = TruncatedPresentation({{"u" + std::to_string(n), n}}, {2}, n);
    r.dimension = n;
    r.connectivity = n - 1;
    r.stably_parallelizable = true;
    MorseData m{zeros(n + 1), zeros(n + 1), n >= 2, n};
    m.ranks.front() = 1;
    m.ranks.back() = 1;
    r.morse = std::move(m);
    r.known_cat = KnownValue{1, "cat S^n = 1"};
    if (n == 2) r.genus = 0;
    return r;
}

SpaceRecord surface_record(unsigned genus) {
    SpaceRecord r;
    r.name = "S_" + std::to_string(genus);
    r.ring = surface_table(genus);
    r.dimension = 2;
    r.connectivity = genus == 0 ? 1 : 0;
    r.stably_parallelizable = true;
    r.genus = genus;
    r.morse = MorseData{{1, 2 * static_cast<std::size_t>(genus), 1}, {0, 0, 0}, genus == 0, 2};
    if (genus == 0)
        r.known_cat = KnownValue{1, "cat S^2 = 1 (genus 0)"};
    else if (genus == 1)
        r.known_cat = KnownValue{2, "via cat T^2 = 2 (torus)"};
    else
        r.known_cat = KnownValue{2, "cat = 2 for surfaces of genus > 1"};
    if (genus >= 1)
        r.notes.push_back("crit* >= SB = " + std::to_string(2 * genus + 2) +
                          " from Morse inequalities; a literature value crit* S_g = 2g conflicts with SB <= crit* and "
                          "is not encoded");
    return r;
}

SpaceRecord product_record(const SpaceRecord& a, const SpaceRecord& b) {
    SpaceRecord r;
    r.name = a.name + "x" + b.name;
    r.dimension = a.dimension + b.dimension;
    r.connectivity = std::min(a.connectivity, b.connectivity);
    r.orientable = a.orientable && b.orientable;
    r.stably_parallelizable = a.stably_parallelizable && b.stably_parallelizable;
    if (a.ring && b.ring) r.ring = tensor_product(*a.ring, *b.ring).ring;
    const auto torsion_free = [](const MorseData& m) {
        for (auto t : m.torsion)
            if (t) return false;
        return true;
    };
    if (a.morse && b.morse && torsion_free(*a.morse) && torsion_free(*b.morse)) {
        MorseData m{zeros(r.dimension + 1), zeros(r.dimension + 1),
                    a.morse->simply_connected && b.morse->simply_connected, r.dimension};
        for (std::size_t i = 0; i < a.morse->ranks.size(); ++i)
            for (std::size_t j = 0; j < b.morse->ranks.size(); ++j) m.ranks[i + j] += a.morse->ranks[i] * b.morse->ranks[j];
        r.morse = std::move(m);
    }
    return r;
}

namespace {

std::optional<unsigned> parse_suffix(std::string_view s, std::string_view prefix) {
    if (s.size() <= prefix.size() || s.substr(0, prefix.size()) != prefix) return std::nullopt;
    const auto digits = s.substr(prefix.size());
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    return v;
}

}  // namespace

Catalogue& Catalogue::instance() {
    static Catalogue c;
    return c;
}

std::shared_ptr<const SpaceRecord> Catalogue::get(std::string_view name) {
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(name); it != cache_.end()) return it->second;
    }
    auto rec = build(std::string(name));
    std::lock_guard lock(mutex_);
    return cache_.emplace(std::string(name), std::move(rec)).first->second;
}

bool Catalogue::contains(std::string_view name) {
    try {
        get(name);
        return true;
    } catch (const std::out_of_range&) {
        return false;
    }
}

std::shared_ptr<const SpaceRecord> Catalogue::build(const std::string& name) {
    const auto unknown = [&] { return std::out_of_range("unknown space '" + name + "'"); };
    if (name == "point") return std::make_shared<const SpaceRecord>(point_record());
    if (name == "G2") return std::make_shared<const SpaceRecord>(g2_record());
    if (const auto x = name.find('x'); x != std::string::npos) {
        if (x == 0 || x + 1 == name.size()) throw unknown();
        const auto left = get(std::string_view(name).substr(0, x));
        const auto right = get(std::string_view(name).substr(x + 1));
        return std::make_shared<const SpaceRecord>(product_record(*left, *right));
    }
    if (auto n = parse_suffix(name, "SO")) {
        if (*n < 2 || *n > 12) throw unknown();
        return std::make_shared<const SpaceRecord>(so_n_record(*n));
    }
    if (auto g = parse_suffix(name, "S_")) {
        if (*g > 1000) throw unknown();
        return std::make_shared<const SpaceRecord>(surface_record(*g));
    }
    if (auto n = parse_suffix(name, "S")) {
        if (*n < 1 || *n > 1000) throw unknown();
        return std::make_shared<const SpaceRecord>(sphere_record(*n));
    }
    if (auto k = parse_suffix(name, "T")) {
        if (*k < 1 || *k > 20) throw unknown();
        return std::make_shared<const SpaceRecord>(torus_record(*k));
    }
    throw unknown();
}

std::vector<std::string> Catalogue::list() const {
    std::vector<std::string> names{"point"};
    for (unsigned n = 3; n <= 9; ++n) names.push_back("SO" + std::to_string(n));
    names.push_back("G2");
    for (unsigned k = 1; k <= 8; ++k) names.push_back("T" + std::to_string(k));
    for (unsigned n = 1; n <= 10; ++n) names.push_back("S" + std::to_string(n));
    for (unsigned g = 0; g <= 4; ++g) names.push_back("S_" + std::to_string(g));
    return names;
}

}  // namespace lscat

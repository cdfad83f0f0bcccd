#include "lscat/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lscat/catalogue.hpp"
#include "lscat/invariants.hpp"
#include "lscat/io.hpp"
#include "lscat/maps.hpp"

namespace lscat::cli {

using nlohmann::json;

namespace {

// Tables larger than this are not expanded for search or duality checks.
constexpr std::size_t kTableLimit = std::size_t{1} << 14;

// Reference values for SO_3 .. SO_9.
constexpr unsigned kSoDims[] = {3, 6, 10, 15, 21, 28, 36};
constexpr unsigned kSoCl[] = {3, 4, 8, 9, 11, 12, 20};
const std::vector<std::vector<unsigned>> kSoTruncations = {
    {4}, {4, 2}, {8, 2}, {8, 2, 2}, {8, 4, 2}, {8, 4, 2, 2}, {16, 4, 2, 2},
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FileError : std::runtime_error {
    FileError(std::string file, const ParseError& e) : std::runtime_error(e.what()), file(std::move(file)), error(e) {}
    std::string file;
    ParseError error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SpaceRecord load_space_file(const std::string& path) {
    const auto text = read_file(path);
    try {
        return parse_space(text);
    } catch (const ParseError& e) {
        throw FileError(path, e);
    }
}

/// Spaces loaded with --space, then catalogue names, then file paths.
class Resolver {
  public:
    void add_file(const std::string& path) {
        auto r = load_space_file(path);
        const auto name = r.name;
        extra_[name] = std::make_shared<const SpaceRecord>(std::move(r));
    }

    std::shared_ptr<const SpaceRecord> get(const std::string& name) {
        if (auto it = extra_.find(name); it != extra_.end()) return it->second;
        if (Catalogue::instance().contains(name)) return Catalogue::instance().get(name);
        if (std::ifstream(name)) return std::make_shared<const SpaceRecord>(load_space_file(name));
        throw UsageError("unknown space '" + name + "' (not loaded, not in the catalogue, not a file)");
    }

  private:
    std::map<std::string, std::shared_ptr<const SpaceRecord>> extra_;
};

json opt(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

json to_json(const Interval& i) {
    return {{"lower", i.lower}, {"upper", opt(i.upper)}, {"lower_source", i.lower_source},
            {"upper_source", i.upper_source}};
}

json to_json(const BoundLedger& l) {
    return {{"dimension", l.dimension}, {"cup_length", l.cup_length}, {"betti_sum", l.betti_sum},
            {"cat", to_json(l.cat)},    {"toomer_e", to_json(l.toomer_e)}, {"ballcat", to_json(l.ballcat)},
            {"crit", to_json(l.crit)},  {"crit_star", to_json(l.crit_star)}, {"violations", l.violations()}};
}

json to_json(const std::optional<KnownValue>& k) {
    if (!k) return nullptr;
    return {{"value", k->value}, {"citation", k->citation}};
}

json to_json(const CriterionVerdict& v) {
    return {{"criterion", std::string(to_string(v.criterion))},
            {"status", std::string(to_string(v.status))},
            {"reason", v.reason},
            {"citations", v.citations}};
}

json ring_json(const Ring& ring) {
    if (const auto* p = std::get_if<TruncatedPresentation>(&ring)) {
        json gens = json::array();
        for (std::size_t i = 0; i < p->num_generators(); ++i)
            gens.push_back({{"name", p->generators()[i].name},
                            {"degree", p->generators()[i].degree},
                            {"truncation", p->truncations()[i]}});
        return {{"kind", "presentation"}, {"top_degree", p->top_degree()}, {"generators", gens}};
    }
    const auto& t = std::get<MultiplicationTable>(ring);
    json basis = json::array(), products = json::array();
    for (const auto& b : t.basis()) basis.push_back({{"label", b.label}, {"degree", b.degree}});
    for (const auto& r : t.product_rules()) {
        if (r.left == t.unit_index() || r.right == t.unit_index()) continue;
        json terms = json::array();
        for (auto k : r.terms) terms.push_back(t.label(k));
        products.push_back({{"left", t.label(r.left)}, {"right", t.label(r.right)}, {"terms", terms}});
    }
    return {{"kind", "table"}, {"top_degree", t.top_degree()}, {"basis", basis}, {"products", products}};
}

json record_json(const SpaceRecord& r) {
    json j = {{"name", r.name},
              {"dimension", r.dimension},
              {"connectivity", r.connectivity},
              {"orientable", r.orientable},
              {"stably_parallelizable", r.stably_parallelizable},
              {"known_cat", to_json(r.known_cat)},
              {"genus", r.genus ? json(*r.genus) : json(nullptr)},
              {"ring", r.ring ? ring_json(*r.ring) : json(nullptr)},
              {"notes", r.notes}};
    if (r.morse)
        j["morse"] = {{"ranks", r.morse->ranks},
                      {"torsion", r.morse->torsion},
                      {"simply_connected", r.morse->simply_connected}};
    else
        j["morse"] = nullptr;
    return j;
}

std::size_t table_size(const Ring& ring) {
    if (const auto* p = std::get_if<TruncatedPresentation>(&ring)) return p->basis_size();
    return std::get<MultiplicationTable>(ring).size();
}

std::string show_upper(const json& v) { return v.is_null() ? "inf" : std::to_string(v.get<std::size_t>()); }

std::string interval_text(const json& i) {
    const auto lo = std::to_string(i["lower"].get<std::size_t>());
    if (i["upper"].is_null()) return "[" + lo + ", inf)";
    return "[" + lo + ", " + show_upper(i["upper"]) + "]";
}

std::string join(const json& arr, const std::string& sep) {
    std::string s;
    for (const auto& v : arr) {
        if (!s.empty()) s += sep;
        s += v.is_string() ? v.get<std::string>() : v.dump();
    }
    return s;
}

// ---- invariants / cup-length -------------------------------------------

json cup_length_model(const SpaceRecord& r) {
    json j = {{"space", r.name}, {"formula", nullptr}, {"search", nullptr}, {"agree", nullptr}, {"value", nullptr},
              {"skipped", nullptr}};
    if (!r.ring) {
        j["skipped"] = "no ring data";
        return j;
    }
    std::optional<unsigned> formula, search;
    if (const auto* p = std::get_if<TruncatedPresentation>(&*r.ring)) formula = cup_length_formula(*p);
    if (table_size(*r.ring) <= kTableLimit)
        search = cup_length_search(as_table(*r.ring));
    else
        j["skipped"] = "search skipped: " + std::to_string(table_size(*r.ring)) + " basis elements";
    if (formula) j["formula"] = *formula;
    if (search) j["search"] = *search;
    if (formula && search) j["agree"] = *formula == *search;
    j["value"] = formula ? *formula : *search;
    return j;
}

std::string cup_length_text(const json& cl) {
    if (cl["value"].is_null()) return "cl = n/a (" + cl["skipped"].get<std::string>() + ")";
    std::string s = "cl = ";
    if (!cl["formula"].is_null()) {
        s += std::to_string(cl["formula"].get<unsigned>()) + " (formula)";
        if (!cl["search"].is_null())
            s += (cl["agree"].get<bool>() ? " = " : " != ") + std::to_string(cl["search"].get<unsigned>()) + " (search)";
    } else {
        s += std::to_string(cl["search"].get<unsigned>()) + " (search)";
    }
    if (!cl["skipped"].is_null()) s += " [" + cl["skipped"].get<std::string>() + "]";
    return s;
}

json invariants_model(const SpaceRecord& r) {
    json j;
    j["space"] = r.name;
    j["dimension"] = r.dimension;
    j["connectivity"] = r.connectivity;
    j["stably_parallelizable"] = r.stably_parallelizable;
    j["poincare_polynomial"] = r.ring ? json(poincare_polynomial(*r.ring)) : json(nullptr);
    j["cup_length"] = cup_length_model(r);
    const std::size_t cl = j["cup_length"]["value"].is_null() ? 0 : j["cup_length"]["value"].get<std::size_t>();
    j["cat_interval"] = {cl, r.dimension};
    j["known_cat"] = to_json(r.known_cat);
    j["ledger"] = to_json(ledger_for(r));
    j["poincare_duality"] = nullptr;
    if (r.ring && table_size(*r.ring) <= kTableLimit) j["poincare_duality"] = check_poincare_duality(as_table(*r.ring));
    j["morse"] = nullptr;
    if (r.morse) {
        const auto b = morse_lower_bound(*r.morse);
        j["morse"] = {{"bound", b.bound}, {"exact", b.exact}};
    }
    json warnings = json::array();
    if (r.ring)
        if (const auto* p = std::get_if<TruncatedPresentation>(&*r.ring))
            for (const auto& w : p->warnings()) warnings.push_back(w);
    j["warnings"] = warnings;
    return j;
}

void render_ledger(std::ostream& out, const json& l) {
    for (const char* key : {"cat", "toomer_e", "ballcat", "crit", "crit_star"}) {
        const auto& i = l[key];
        out << "  " << std::left << std::setw(10) << key << std::setw(12) << interval_text(i)
            << "lower: " << i["lower_source"].get<std::string>();
        if (!i["upper"].is_null()) out << "; upper: " << i["upper_source"].get<std::string>();
        out << "\n";
    }
    for (const auto& v : l["violations"]) out << "  VIOLATION: " << v.get<std::string>() << "\n";
}

void render_invariants(std::ostream& out, const json& j) {
    out << "space " << j["space"].get<std::string>() << " (dim " << j["dimension"] << ")\n";
    if (!j["poincare_polynomial"].is_null()) out << "poincare: " << join(j["poincare_polynomial"], " ") << "\n";
    out << cup_length_text(j["cup_length"]) << "; cat \u2208 [" << j["cat_interval"][0] << ", " << j["cat_interval"][1]
        << "]";
    if (!j["known_cat"].is_null()) out << "; known cat = " << j["known_cat"]["value"];
    out << "\n";
    if (!j["known_cat"].is_null()) out << "known cat source: " << j["known_cat"]["citation"].get<std::string>() << "\n";
    out << "ledger:\n";
    render_ledger(out, j["ledger"]);
    if (!j["morse"].is_null())
        out << "morse bound: " << j["morse"]["bound"] << (j["morse"]["exact"].get<bool>() ? " (exact)" : "") << "\n";
    if (j["poincare_duality"].is_null())
        out << "poincare duality: not checked\n";
    else
        out << "poincare duality: " << (j["poincare_duality"].get<bool>() ? "ok" : "FAILS") << "\n";
    for (const auto& w : j["warnings"]) out << "warning: " << w.get<std::string>() << "\n";
}

// ---- maps and reports --------------------------------------------------

json hom_model(const ValidatedHom& h) {
    const auto inj = check_injectivity(h);
    const auto top = check_top_class(h);
    json per_degree = json::array();
    for (bool b : inj.per_degree) per_degree.push_back(b);
    return {{"injective_per_degree", per_degree},
            {"injective", inj.overall},
            {"top_class", {{"holds", top.holds ? json(*top.holds) : json(nullptr)}, {"diagnostic", top.diagnostic}}},
            {"verdict", to_json(hom_check(h))}};
}

json diagnostics_json(const HomValidation& v) {
    json d = json::array();
    for (const auto& x : v.diagnostics) d.push_back({{"kind", std::string(to_string(x.kind))}, {"message", x.message}});
    return d;
}

int exit_for(std::string_view status) {
    if (status == "violated") return kViolated;
    if (status == "certified") return kOk;
    return kInconclusive;
}

void render_verdict(std::ostream& out, const json& v) {
    out << "  " << std::left << std::setw(18) << v["criterion"].get<std::string>() << std::setw(15)
        << v["status"].get<std::string>() << v["reason"].get<std::string>();
    if (!v["citations"].empty()) out << " [" << join(v["citations"], "; ") << "]";
    out << "\n";
}

void render_check_map(std::ostream& out, const json& j) {
    out << "map " << j["map"].get<std::string>() << ": " << j["domain"].get<std::string>() << " -> "
        << j["range"].get<std::string>() << " (degree " << j["degree"] << ")\n";
    if (!j["valid"].get<bool>()) {
        out << "invalid homomorphism:\n";
        for (const auto& d : j["diagnostics"])
            out << "  " << d["kind"].get<std::string>() << ": " << d["message"].get<std::string>() << "\n";
        return;
    }
    const auto& h = j["hom"];
    out << "injective per degree: ";
    for (const auto& b : h["injective_per_degree"]) out << (b.get<bool>() ? '1' : '0');
    out << (h["injective"].get<bool>() ? " (injective)\n" : " (not injective)\n");
    const auto& top = h["top_class"];
    out << "top class: " << (top["holds"].is_null() ? "n/a" : top["holds"].get<bool>() ? "hit" : "MISSED");
    if (!top["diagnostic"].get<std::string>().empty()) out << " (" << top["diagnostic"].get<std::string>() << ")";
    out << "\n";
    render_verdict(out, h["verdict"]);
}

void render_report(std::ostream& out, const json& j) {
    out << "degree-1 report: M = " << j["m"].get<std::string>() << ", N = " << j["n"].get<std::string>() << " (dim "
        << j["dimension"] << ")\n";
    for (const auto& v : j["verdicts"]) render_verdict(out, v);
    out << "overall: " << j["overall"].get<std::string>() << "\n";
    out << "ledger of M:\n";
    render_ledger(out, j["m_ledger"]);
    out << "ledger of N:\n";
    render_ledger(out, j["n_ledger"]);
    if (!j["notes"].empty()) {
        out << "notes:\n";
        for (const auto& n : j["notes"]) out << "  - " << n.get<std::string>() << "\n";
    }
}

// ---- verify-paper ------------------------------------------------------

void render_paper(std::ostream& out, const json& j) {
    out << std::left << std::setw(4) << "n" << std::setw(6) << "dim" << std::setw(18) << "truncations" << std::setw(13)
        << "cl(formula)" << std::setw(12) << "cl(search)" << std::setw(11) << "known cat" << "status\n";
    for (const auto& r : j["so"]) {
        out << std::setw(4) << r["n"].get<unsigned>() << std::setw(6) << r["dimension"].get<unsigned>() << std::setw(18)
            << "(" + join(r["truncations"], ",") + ")" << std::setw(13) << r["cl_formula"].get<unsigned>()
            << std::setw(12) << r["cl_search"].get<unsigned>() << std::setw(11)
            << (r["known_cat"].is_null() ? std::string("-") : r["known_cat"].dump())
            << (r["ok"].get<bool>() ? "OK" : "MISMATCH") << "\n";
    }
    const auto& g = j["g2"];
    out << "G2: " << g["dimension"] << " = dim <= 2*q*cat - 4 = 2*" << g["q"] << "*" << g["cat"] << " - 4 = " << g["rhs"]
        << (g["certified"].get<bool>() ? ", 14-dim stably parallelizable M certified" : ", NOT certified") << "  "
        << (g["ok"].get<bool>() ? "OK" : "MISMATCH") << "\n";
    const auto& t = j["torus"];
    out << "torus: n = " << t["n"] << ", k = " << t["k"] << ", 2k - 4 = " << t["lhs"] << " >= k + n = " << t["rhs"]
        << "  " << (t["ok"].get<bool>() ? "OK" : "MISMATCH") << "\n";
    std::size_t agree = 0;
    for (const auto& r : j["oracle"]) {
        if (r["ok"].get<bool>())
            ++agree;
        else
            out << "oracle MISMATCH: " << r["presentation"].get<std::string>() << " formula " << r["cl_formula"]
                << " search " << r["cl_search"] << "\n";
    }
    out << "random presentations (seed " << j["seed"] << "): " << agree << "/" << j["oracle"].size()
        << " formula = search\n";
    out << "time: " << std::fixed << std::setprecision(3) << j["seconds"].get<double>() << " s\n";
    out << (j["ok"].get<bool>() ? "all checks OK" : "MISMATCH FOUND") << "\n";
}

std::string describe(const TruncatedPresentation& p) {
    std::string s = "Z/2[";
    std::string rel;
    for (std::size_t i = 0; i < p.num_generators(); ++i) {
        const auto& g = p.generators()[i];
        s += (i ? "," : "") + g.name + "(" + std::to_string(g.degree) + ")";
        rel += (i ? "," : "") + g.name + "^" + std::to_string(p.truncations()[i]);
    }
    return s + "]/(" + rel + ")";
}

}  // namespace

TruncatedPresentation random_presentation(std::mt19937_64& rng, std::size_t max_size) {
    std::uniform_int_distribution<unsigned> count(1, 4), degree(1, 6);
    const unsigned k = count(rng);
    std::vector<GeneratorSpec> gens;
    std::vector<unsigned> truncs;
    std::size_t size = 1;
    unsigned top = 0;
    for (unsigned i = 0; i < k; ++i) {
        const std::size_t room = max_size / size;
        if (room < 2) break;
        const unsigned hi = static_cast<unsigned>(std::min<std::size_t>(64, room));
        const unsigned p = std::uniform_int_distribution<unsigned>(2, hi)(rng);
        const unsigned d = degree(rng);
        gens.push_back({"x" + std::to_string(i + 1), d});
        truncs.push_back(p);
        size *= p;
        top += d * (p - 1);
    }
    return TruncatedPresentation(std::move(gens), std::move(truncs), top);
}

PaperCheck verify_paper(std::uint64_t seed, std::size_t random_rows) {
    const auto start = std::chrono::steady_clock::now();
    PaperCheck c;
    c.seed = seed;
    c.ok = true;
    for (unsigned n = 3; n <= 9; ++n) {
        const auto rec = so_n_record(n);
        const auto& p = std::get<TruncatedPresentation>(*rec.ring);
        SoRow row;
        row.n = n;
        row.dimension = rec.dimension;
        row.expected_dimension = kSoDims[n - 3];
        row.truncations = p.truncations();
        row.expected_truncations = kSoTruncations[n - 3];
        row.cl_formula = cup_length_formula(p);
        row.cl_search = cup_length_search(expand_to_table(p));
        row.expected_cl = kSoCl[n - 3];
        if (rec.known_cat) row.known_cat = rec.known_cat->value;
        row.ok = row.dimension == row.expected_dimension && p.top_degree() == row.expected_dimension &&
                 row.truncations == row.expected_truncations && row.cl_formula == row.expected_cl &&
                 row.cl_search == row.expected_cl && row.known_cat == std::optional<std::size_t>(row.expected_cl);
        c.ok = c.ok && row.ok;
        c.so_rows.push_back(std::move(row));
    }

    const auto g2 = g2_record();
    SpaceRecord m;
    m.name = "X14";
    m.dimension = 14;
    m.stably_parallelizable = true;
    c.g2.dimension = g2.dimension;
    c.g2.q = g2.connectivity + 1;
    c.g2.cat = g2.known_cat ? g2.known_cat->value : 0;
    c.g2.rhs = 2LL * c.g2.q * static_cast<long long>(c.g2.cat) - 4;
    c.g2.certified = thm_main_check(m, g2).status == Status::certified;
    c.g2.ok = c.g2.dimension == 14 && c.g2.rhs == 20 && c.g2.dimension <= c.g2.rhs && c.g2.certified;
    c.ok = c.ok && c.g2.ok;

    const auto ts = torus_stabilization_k(14);
    c.torus = {14, ts.k, ts.lhs, ts.rhs, false};
    const auto prev = static_cast<long long>(ts.k) - 1;
    c.torus.ok = ts.k == 18 && ts.lhs >= ts.rhs && 2 * prev - 4 < prev + 14;
    c.ok = c.ok && c.torus.ok;

    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < random_rows; ++i) {
        const auto p = random_presentation(rng);
        OracleRow row{describe(p), p.basis_size(), cup_length_formula(p), 0, false};
        row.cl_search = cup_length_search(expand_to_table(p));
        row.ok = row.cl_formula == row.cl_search;
        c.ok = c.ok && row.ok;
        c.oracle_rows.push_back(std::move(row));
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return c;
}

json to_json(const PaperCheck& c) {
    json so = json::array(), oracle = json::array();
    for (const auto& r : c.so_rows)
        so.push_back({{"n", r.n},
                      {"dimension", r.dimension},
                      {"expected_dimension", r.expected_dimension},
                      {"truncations", r.truncations},
                      {"expected_truncations", r.expected_truncations},
                      {"cl_formula", r.cl_formula},
                      {"cl_search", r.cl_search},
                      {"expected_cl", r.expected_cl},
                      {"known_cat", opt(r.known_cat)},
                      {"ok", r.ok}});
    for (const auto& r : c.oracle_rows)
        oracle.push_back({{"presentation", r.presentation},
                          {"size", r.size},
                          {"cl_formula", r.cl_formula},
                          {"cl_search", r.cl_search},
                          {"ok", r.ok}});
    return {{"so", so},
            {"g2",
             {{"dimension", c.g2.dimension},
              {"q", c.g2.q},
              {"cat", c.g2.cat},
              {"rhs", c.g2.rhs},
              {"certified", c.g2.certified},
              {"ok", c.g2.ok}}},
            {"torus", {{"n", c.torus.n}, {"k", c.torus.k}, {"lhs", c.torus.lhs}, {"rhs", c.torus.rhs}, {"ok", c.torus.ok}}},
            {"oracle", oracle},
            {"seed", c.seed},
            {"seconds", c.seconds},
            {"ok", c.ok}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lusternik-Schnirelmann category bounds and degree-one map criteria", "lscat"};
    bool as_json = false;
    std::uint64_t seed = kDefaultSeed;
    app.add_flag("--json", as_json, "Print the machine-readable report");
    app.add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();
    app.require_subcommand(1);

    std::string space;
    auto* show = app.add_subcommand("show", "Print a space in the space-file format");
    show->add_option("space", space, "Catalogue name or space file")->required();

    auto* inv = app.add_subcommand("invariants", "Poincare polynomial, cup-length, bounds and duality");
    inv->add_option("space", space, "Catalogue name or space file")->required();

    auto* cup = app.add_subcommand("cup-length", "Cup-length by formula and by search");
    cup->add_option("space", space, "Catalogue name or space file")->required();

    std::string map_file;
    std::vector<std::string> space_files;
    auto* check = app.add_subcommand("check-map", "Validate f* and check injectivity and the top class");
    check->add_option("map", map_file, "Map file")->required()->check(CLI::ExistingFile);
    check->add_option("--space", space_files, "Extra space files")->check(CLI::ExistingFile);

    std::string m_name, n_name;
    auto* report = app.add_subcommand("degree1-report", "Evaluate every criterion for a degree-one map M -> N");
    report->add_option("-m", m_name, "Domain M");
    report->add_option("-n", n_name, "Range N");
    report->add_option("--map", map_file, "Map file")->check(CLI::ExistingFile);
    report->add_option("--space", space_files, "Extra space files")->check(CLI::ExistingFile);

    std::size_t random_rows = 20;
    auto* paper = app.add_subcommand("verify-paper", "Recompute the SO_n table and the G2 and torus conditions");
    paper->add_option("--random", random_rows, "Number of random formula/search comparisons")->capture_default_str();

    auto* list = app.add_subcommand("catalogue", "List catalogue entries");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    auto emit = [&](const json& model, auto&& render) {
        if (as_json)
            out << model.dump(2) << "\n";
        else
            render(out, model);
    };

    try {
        Resolver resolver;
        for (const auto& f : space_files) resolver.add_file(f);

        if (*show) {
            const auto r = resolver.get(space);
            emit(record_json(*r), [&](std::ostream& o, const json&) { o << serialize_space(*r); });
            return kOk;
        }
        if (*inv) {
            const auto model = invariants_model(*resolver.get(space));
            emit(model, render_invariants);
            const auto& agree = model["cup_length"]["agree"];
            return agree.is_boolean() && !agree.get<bool>() ? kMismatch : kOk;
        }
        if (*cup) {
            const auto model = cup_length_model(*resolver.get(space));
            emit(model, [](std::ostream& o, const json& j) {
                o << j["space"].get<std::string>() << ": " << cup_length_text(j) << "\n";
            });
            return model["agree"].is_boolean() && !model["agree"].get<bool>() ? kMismatch : kOk;
        }
        if (*check) {
            MapFile mf;
            try {
                mf = parse_map(read_file(map_file));
            } catch (const ParseError& e) {
                throw FileError(map_file, e);
            }
            const auto dom = resolver.get(mf.domain);
            const auto ran = resolver.get(mf.range);
            RingHomSpec spec;
            try {
                spec = resolve_map(mf, *dom, *ran);
            } catch (const ParseError& e) {
                throw FileError(map_file, e);
            }
            const auto v = validate_hom(spec);
            json model = {{"map", mf.name},   {"domain", mf.domain},          {"range", mf.range},
                          {"degree", mf.degree}, {"valid", v.ok()}, {"diagnostics", diagnostics_json(v)},
                          {"hom", v.ok() ? hom_model(*v.hom) : json(nullptr)}};
            emit(model, render_check_map);
            if (!v.ok()) return kDataError;
            return exit_for(model["hom"]["verdict"]["status"].get<std::string>());
        }
        if (*report) {
            std::optional<RingHomSpec> hom;
            std::optional<MapFile> mf;
            if (!map_file.empty()) {
                try {
                    mf = parse_map(read_file(map_file));
                } catch (const ParseError& e) {
                    throw FileError(map_file, e);
                }
                if (m_name.empty()) m_name = mf->domain;
                if (n_name.empty()) n_name = mf->range;
                if (m_name != mf->domain || n_name != mf->range)
                    throw UsageError("map file describes " + mf->domain + " -> " + mf->range + ", not " + m_name +
                                     " -> " + n_name);
            }
            if (m_name.empty() || n_name.empty()) throw UsageError("degree1-report needs -m and -n (or --map)");
            const auto m = resolver.get(m_name);
            const auto n = resolver.get(n_name);
            if (m->dimension != n->dimension)
                throw UsageError("refusing: a degree-one map M -> N requires dim M = dim N, got " +
                                 std::to_string(m->dimension) + " and " + std::to_string(n->dimension));
            if (mf) {
                try {
                    hom = resolve_map(*mf, *m, *n);
                } catch (const ParseError& e) {
                    throw FileError(map_file, e);
                }
                const auto v = validate_hom(*hom);
                if (!v.ok()) {
                    err << map_file << ": invalid homomorphism\n";
                    for (const auto& d : v.diagnostics) err << "  " << to_string(d.kind) << ": " << d.message << "\n";
                    return kDataError;
                }
            }
            const auto rep = full_report(*m, *n, hom);
            json verdicts = json::array();
            for (const auto& v : rep.verdicts) verdicts.push_back(to_json(v));
            const json model = {{"m", m->name},
                                {"n", n->name},
                                {"dimension", m->dimension},
                                {"verdicts", verdicts},
                                {"overall", std::string(to_string(rep.overall))},
                                {"notes", rep.notes},
                                {"m_ledger", to_json(rep.m_ledger)},
                                {"n_ledger", to_json(rep.n_ledger)}};
            emit(model, render_report);
            return exit_for(model["overall"].get<std::string>());
        }
        if (*paper) {
            const auto model = to_json(verify_paper(seed, random_rows));
            emit(model, render_paper);
            return model["ok"].get<bool>() ? kOk : kMismatch;
        }
        if (*list) {
            json model = json::array();
            for (const auto& name : Catalogue::instance().list()) {
                const auto r = Catalogue::instance().get(name);
                model.push_back({{"name", name},
                                 {"dimension", r->dimension},
                                 {"known_cat", r->known_cat ? json(r->known_cat->value) : json(nullptr)},
                                 {"ring", r->ring ? (std::holds_alternative<TruncatedPresentation>(*r->ring)
                                                         ? "presentation"
                                                         : "table")
                                                  : "none"}});
            }
            emit(model, [](std::ostream& o, const json& j) {
                for (const auto& e : j) {
                    o << std::left << std::setw(8) << e["name"].get<std::string>() << " dim " << std::setw(4)
                      << e["dimension"].get<unsigned>() << " ring " << std::setw(13) << e["ring"].get<std::string>()
                      << " known cat " << (e["known_cat"].is_null() ? std::string("-") : e["known_cat"].dump()) << "\n";
                }
            });
            return kOk;
        }
    } catch (const FileError& e) {
        err << e.file << ":" << e.error.line() << ":" << e.error.column() << ": error [" << to_string(e.error.kind())
            << "]: " << e.error.detail() << "\n";
        return kDataError;
    } catch (const UsageError& e) {
        err << "lscat: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "lscat: " << e.what() << "\n";
        return kDataError;
    } catch (const AlgebraError& e) {
        err << "lscat: " << e.what() << "\n";
        return kDataError;
    }
    return kUsage;
}

}  // namespace lscat::cli

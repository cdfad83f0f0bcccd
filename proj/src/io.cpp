#include "lscat/io.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>

namespace lscat {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      detail_(message) {}

std::string_view to_string(ParseError::Kind kind) {
    switch (kind) {
        case ParseError::Kind::syntax: return "syntax";
        case ParseError::Kind::duplicate: return "duplicate";
        case ParseError::Kind::invalid_value: return "invalid_value";
        case ParseError::Kind::missing_field: return "missing_field";
        case ParseError::Kind::unknown_name: return "unknown_name";
        case ParseError::Kind::conflict: return "conflict";
        case ParseError::Kind::invalid_ring: return "invalid_ring";
    }
    return "?";
}

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'')) return false;
    return true;
}

namespace {

using Kind = ParseError::Kind;

std::optional<unsigned> to_unsigned(std::string_view s) {
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

}  // namespace

Expr parse_expr(std::string_view text, std::size_t line, std::size_t column) {
    // Compact the text, remembering each kept character's original column.
    std::string s;
    std::vector<std::size_t> col;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
        s += text[i];
        col.push_back(column + i);
    }
    col.push_back(column + text.size());
    auto fail = [&](std::size_t pos, const std::string& msg) -> ParseError {
        return ParseError(Kind::syntax, line, col[std::min(pos, col.size() - 1)], msg);
    };
    if (s.empty()) throw fail(0, "empty expression");

    Expr e;
    std::size_t pos = 0;
    while (true) {
        ExprTerm term;
        if (pos < s.size() && (s[pos] == '0' || s[pos] == '1') &&
            (pos + 1 == s.size() || s[pos + 1] == '+')) {
            term.zero = s[pos] == '0';
            ++pos;
        } else {
            while (true) {
                const std::size_t start = pos;
                while (pos < s.size() && s[pos] != '*' && s[pos] != '+' && s[pos] != '^') ++pos;
                const std::string name = s.substr(start, pos - start);
                if (!is_identifier(name)) throw fail(start, "expected a name, found '" + name + "'");
                Factor f{name, 1};
                if (pos < s.size() && s[pos] == '^') {
                    const std::size_t num = ++pos;
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                    const auto v = to_unsigned(std::string_view(s).substr(num, pos - num));
                    if (!v) throw fail(num, "expected an exponent after '^'");
                    f.exponent = *v;
                }
                term.factors.push_back(std::move(f));
                if (pos < s.size() && s[pos] == '*') {
                    ++pos;
                    continue;
                }
                break;
            }
        }
        e.terms.push_back(std::move(term));
        if (pos == s.size()) break;
        if (s[pos] != '+') throw fail(pos, std::string("unexpected '") + s[pos] + "'");
        ++pos;
        if (pos == s.size()) throw fail(pos, "expression ends with '+'");
    }
    return e;
}

std::string format_expr(const Expr& e) {
    std::string s;
    for (const auto& t : e.terms) {
        if (!s.empty()) s += " + ";
        if (t.zero) {
            s += '0';
        } else if (t.factors.empty()) {
            s += '1';
        } else {
            for (std::size_t i = 0; i < t.factors.size(); ++i) {
                if (i) s += '*';
                s += t.factors[i].name;
                if (t.factors[i].exponent != 1) s += '^' + std::to_string(t.factors[i].exponent);
            }
        }
    }
    return s;
}

BitVec evaluate(const Expr& e, const Ring& ring, const MultiplicationTable& table) {
    BitVec out = table.zero();
    if (const auto* p = std::get_if<TruncatedPresentation>(&ring)) {
        for (const auto& t : e.terms) {
            if (t.zero) continue;
            std::vector<unsigned> exps(p->num_generators(), 0);
            for (const auto& f : t.factors) {
                const auto g = p->generator_index(f.name);
                if (!g) throw std::out_of_range("unknown generator '" + f.name + "'");
                exps[*g] += f.exponent;
            }
            out ^= embed(*p, p->normal_form(exps));
        }
        return out;
    }
    for (const auto& t : e.terms) {
        if (t.zero) continue;
        BitVec v = table.unit();
        for (const auto& f : t.factors) {
            const auto i = table.index_of(f.name);
            if (!i) throw std::out_of_range("unknown basis label '" + f.name + "'");
            v = table.multiply(v, table.power(table.basis_vector(*i), f.exponent));
        }
        out ^= v;
    }
    return out;
}

BitVec evaluate(const Expr& e, const Ring& ring) { return evaluate(e, ring, as_table(ring)); }

namespace {

struct Token {
    std::string text;
    std::size_t column = 0;
    bool quoted = false;
};

struct Line {
    std::size_t number = 0;
    std::string_view raw;
    std::vector<Token> tokens;
    std::size_t end = 0;  // raw offset where the comment (if any) starts
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty() || number == 0) {
        ++number;
        const auto nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        Line line{number, raw, {}, raw.size()};
        std::size_t i = 0;
        while (i < raw.size()) {
            const char c = raw[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
            } else if (c == '#') {
                line.end = i;
                break;
            } else if (c == '"') {
                const auto close = raw.find('"', i + 1);
                if (close == std::string_view::npos) throw ParseError(Kind::syntax, number, i + 1, "unterminated quote");
                line.tokens.push_back({std::string(raw.substr(i + 1, close - i - 1)), i + 1, true});
                i = close + 1;
            } else {
                const std::size_t start = i;
                while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])) && raw[i] != '#' &&
                       raw[i] != '"')
                    ++i;
                line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1, false});
            }
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (text.empty()) break;
    }
    return lines;
}

void expect_arity(const Line& l, std::size_t n, const char* usage) {
    if (l.tokens.size() != n)
        throw ParseError(Kind::syntax, l.number, l.tokens.front().column,
                         std::string("expected '") + usage + "'");
}

unsigned number_at(const Line& l, std::size_t idx, const char* what) {
    const auto& t = l.tokens[idx];
    const auto v = to_unsigned(t.text);
    if (!v || t.quoted)
        throw ParseError(Kind::invalid_value, l.number, t.column, std::string(what) + " must be a natural number");
    return *v;
}

bool bool_at(const Line& l, std::size_t idx) {
    const auto& t = l.tokens[idx];
    if (t.text == "true") return true;
    if (t.text == "false") return false;
    throw ParseError(Kind::invalid_value, l.number, t.column, "expected true or false, found '" + t.text + "'");
}

std::string name_at(const Line& l, std::size_t idx, const char* what) {
    const auto& t = l.tokens[idx];
    if (t.quoted || !is_identifier(t.text))
        throw ParseError(Kind::syntax, l.number, t.column, std::string(what) + " '" + t.text + "' is not a valid name");
    return t.text;
}

/// Basis labels are identifiers, or "1" for the unit.
std::string label_at(const Line& l, std::size_t idx) {
    if (l.tokens[idx].text == "1" && !l.tokens[idx].quoted) return "1";
    return name_at(l, idx, "label");
}

/// Raw text after the token at `idx` up to the comment.
std::string_view rest_after(const Line& l, std::size_t idx) {
    const auto& t = l.tokens[idx];
    const std::size_t from = t.column - 1 + t.text.size();
    return l.raw.substr(from, l.end - from);
}

struct Located {
    std::size_t line = 0;
    std::size_t column = 0;
};

std::string quote(const std::string& s) {
    std::string out = s;
    for (auto& c : out)
        if (c == '"' || c == '\n') c = '\'';
    return "\"" + out + "\"";
}

std::vector<std::size_t> numbers_from(const Line& l, const char* what) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) out.push_back(number_at(l, i, what));
    return out;
}

}  // namespace

SpaceRecord parse_space(std::string_view text) {
    const auto lines = split_lines(text);
    const std::size_t eof_line = lines.empty() ? 1 : lines.back().number + 1;

    SpaceRecord r;
    std::map<std::string, Located> singletons;
    auto once = [&](const Line& l) {
        const auto& kw = l.tokens.front();
        if (!singletons.emplace(kw.text, Located{l.number, kw.column}).second)
            throw ParseError(Kind::duplicate, l.number, kw.column, "'" + kw.text + "' given twice");
    };

    std::optional<unsigned> dim;
    std::optional<bool> simply_connected;
    std::optional<std::vector<std::size_t>> betti, torsion;
    std::optional<Located> betti_at;
    std::vector<GeneratorSpec> gens;
    std::map<std::string, Located> gen_at;
    std::map<std::string, std::pair<unsigned, Located>> truncs;
    std::vector<BasisElement> basis;
    std::map<std::string, Located> basis_at;
    struct PendingProduct {
        Located at;
        std::string left, right;
        Expr value;
    };
    std::vector<PendingProduct> products;
    std::optional<Located> first_generator, first_basis;

    for (const auto& l : lines) {
        const auto& kw = l.tokens.front().text;
        const std::size_t kcol = l.tokens.front().column;
        if (kw == "space") {
            once(l);
            expect_arity(l, 2, "space NAME");
            if (l.tokens[1].quoted)
                throw ParseError(Kind::syntax, l.number, l.tokens[1].column, "space name must not be quoted");
            r.name = l.tokens[1].text;
        } else if (kw == "dim") {
            once(l);
            expect_arity(l, 2, "dim N");
            dim = number_at(l, 1, "dimension");
        } else if (kw == "connectivity") {
            once(l);
            expect_arity(l, 2, "connectivity C");
            r.connectivity = number_at(l, 1, "connectivity");
        } else if (kw == "stably-parallelizable") {
            once(l);
            expect_arity(l, 2, "stably-parallelizable BOOL");
            r.stably_parallelizable = bool_at(l, 1);
        } else if (kw == "orientable") {
            once(l);
            expect_arity(l, 2, "orientable BOOL");
            r.orientable = bool_at(l, 1);
        } else if (kw == "simply-connected") {
            once(l);
            expect_arity(l, 2, "simply-connected BOOL");
            simply_connected = bool_at(l, 1);
        } else if (kw == "genus") {
            once(l);
            expect_arity(l, 2, "genus G");
            r.genus = number_at(l, 1, "genus");
        } else if (kw == "known-cat") {
            once(l);
            if (l.tokens.size() != 3 || !l.tokens[2].quoted)
                throw ParseError(Kind::syntax, l.number, kcol, "expected 'known-cat K \"CITATION\"'");
            r.known_cat = KnownValue{number_at(l, 1, "known cat"), l.tokens[2].text};
        } else if (kw == "betti") {
            once(l);
            betti = numbers_from(l, "Betti number");
            betti_at = Located{l.number, kcol};
        } else if (kw == "torsion") {
            once(l);
            torsion = numbers_from(l, "torsion rank");
        } else if (kw == "note") {
            if (l.tokens.size() != 2 || !l.tokens[1].quoted)
                throw ParseError(Kind::syntax, l.number, kcol, "expected 'note \"TEXT\"'");
            r.notes.push_back(l.tokens[1].text);
        } else if (kw == "generator") {
            expect_arity(l, 3, "generator NAME DEGREE");
            if (!first_generator) first_generator = Located{l.number, kcol};
            const auto name = name_at(l, 1, "generator");
            const unsigned degree = number_at(l, 2, "degree");
            if (degree < 1)
                throw ParseError(Kind::invalid_value, l.number, l.tokens[2].column, "degree must be >= 1");
            if (!gen_at.emplace(name, Located{l.number, l.tokens[1].column}).second)
                throw ParseError(Kind::duplicate, l.number, l.tokens[1].column, "duplicate generator '" + name + "'");
            gens.push_back({name, degree});
        } else if (kw == "truncate") {
            expect_arity(l, 3, "truncate NAME EXPONENT");
            const auto name = name_at(l, 1, "generator");
            const unsigned p = number_at(l, 2, "exponent");
            if (p < 1) throw ParseError(Kind::invalid_value, l.number, l.tokens[2].column, "exponent must be >= 1");
            if (!truncs.emplace(name, std::pair{p, Located{l.number, l.tokens[1].column}}).second)
                throw ParseError(Kind::duplicate, l.number, l.tokens[1].column, "'" + name + "' truncated twice");
        } else if (kw == "basis") {
            expect_arity(l, 3, "basis LABEL DEGREE");
            if (!first_basis) first_basis = Located{l.number, kcol};
            const auto label = label_at(l, 1);
            const unsigned degree = number_at(l, 2, "degree");
            if (!basis_at.emplace(label, Located{l.number, l.tokens[1].column}).second)
                throw ParseError(Kind::duplicate, l.number, l.tokens[1].column, "duplicate basis label '" + label + "'");
            basis.push_back({label, degree});
        } else if (kw == "product") {
            if (l.tokens.size() < 5 || l.tokens[3].text != "=")
                throw ParseError(Kind::syntax, l.number, kcol, "expected 'product LABEL LABEL = EXPR'");
            if (!first_basis) first_basis = Located{l.number, kcol};
            const auto value = rest_after(l, 3);
            const std::size_t value_col = l.tokens[3].column + 1;
            products.push_back({Located{l.number, kcol}, label_at(l, 1), label_at(l, 2),
                                parse_expr(value, l.number, value_col)});
        } else {
            throw ParseError(Kind::syntax, l.number, kcol, "unknown keyword '" + kw + "'");
        }
    }

    if (!singletons.count("space")) throw ParseError(Kind::missing_field, eof_line, 1, "missing 'space NAME'");
    if (!dim) throw ParseError(Kind::missing_field, eof_line, 1, "missing 'dim N'");
    r.dimension = *dim;
    if (first_generator && first_basis) {
        const auto at = first_generator->line > first_basis->line ? *first_generator : *first_basis;
        throw ParseError(Kind::conflict, at.line, at.column,
                         "generator/truncate and basis/product blocks are mutually exclusive");
    }
    if (!truncs.empty() && first_basis) {
        const auto& at = truncs.begin()->second.second;
        throw ParseError(Kind::conflict, at.line, at.column,
                         "generator/truncate and basis/product blocks are mutually exclusive");
    }

    if (!basis.empty() || !products.empty()) {
        std::vector<ProductRule> rules;
        for (const auto& pp : products) {
            auto index = [&](const std::string& label) {
                const auto it = basis_at.find(label);
                if (it == basis_at.end())
                    throw ParseError(Kind::unknown_name, pp.at.line, pp.at.column, "unknown basis label '" + label + "'");
                for (std::size_t i = 0; i < basis.size(); ++i)
                    if (basis[i].label == label) return i;
                return std::size_t{0};
            };
            ProductRule rule{index(pp.left), index(pp.right), {}};
            for (const auto& t : pp.value.terms) {
                if (t.zero) continue;
                if (t.factors.empty()) {
                    std::optional<std::size_t> unit;
                    for (std::size_t i = 0; i < basis.size(); ++i)
                        if (basis[i].degree == 0) unit = i;
                    if (!unit) throw ParseError(Kind::invalid_ring, pp.at.line, pp.at.column, "table has no unit");
                    rule.terms.push_back(*unit);
                } else if (t.factors.size() == 1 && t.factors[0].exponent == 1) {
                    rule.terms.push_back(index(t.factors[0].name));
                } else {
                    throw ParseError(Kind::invalid_value, pp.at.line, pp.at.column,
                                     "product values must be sums of basis labels");
                }
            }
            rules.push_back(std::move(rule));
        }
        try {
            r.ring = MultiplicationTable(basis, r.dimension, std::move(rules));
        } catch (const AlgebraError& e) {
            throw ParseError(Kind::invalid_ring, first_basis->line, first_basis->column, e.what());
        }
    } else if (!gens.empty() || !truncs.empty() || r.dimension == 0) {
        std::vector<unsigned> exps;
        for (const auto& g : gens) {
            const auto it = truncs.find(g.name);
            if (it == truncs.end()) {
                const auto& at = gen_at[g.name];
                throw ParseError(Kind::missing_field, at.line, at.column, "generator '" + g.name + "' has no truncate");
            }
            exps.push_back(it->second.first);
        }
        for (const auto& [name, entry] : truncs)
            if (!gen_at.count(name))
                throw ParseError(Kind::unknown_name, entry.second.line, entry.second.column,
                                 "truncate refers to unknown generator '" + name + "'");
        try {
            r.ring = TruncatedPresentation(gens, std::move(exps), r.dimension);
        } catch (const AlgebraError& e) {
            throw ParseError(Kind::invalid_ring, first_generator ? first_generator->line : eof_line, 1, e.what());
        }
    }

    if (torsion && !betti) throw ParseError(Kind::missing_field, eof_line, 1, "'torsion' requires 'betti'");
    if (betti) {
        MorseData m;
        m.dimension = r.dimension;
        m.ranks = *betti;
        m.torsion = torsion ? *torsion : std::vector<std::size_t>(betti->size(), 0);
        m.simply_connected = simply_connected.value_or(r.connectivity >= 1);
        try {
            m.validate();
        } catch (const std::invalid_argument& e) {
            throw ParseError(Kind::invalid_value, betti_at->line, betti_at->column, e.what());
        }
        r.morse = std::move(m);
    }

    try {
        validate_record(r);
    } catch (const std::exception& e) {
        throw ParseError(Kind::invalid_ring, eof_line, 1, e.what());
    }
    return r;
}

std::string serialize_space(const SpaceRecord& r) {
    std::string s;
    auto line = [&](const std::string& l) { s += l + '\n'; };
    line("space " + r.name);
    line("dim " + std::to_string(r.dimension));
    line("connectivity " + std::to_string(r.connectivity));
    line(std::string("stably-parallelizable ") + (r.stably_parallelizable ? "true" : "false"));
    line(std::string("orientable ") + (r.orientable ? "true" : "false"));
    if (r.genus) line("genus " + std::to_string(*r.genus));
    if (r.known_cat) line("known-cat " + std::to_string(r.known_cat->value) + " " + quote(r.known_cat->citation));
    if (r.morse) {
        std::string b = "betti", t = "torsion";
        for (auto v : r.morse->ranks) b += " " + std::to_string(v);
        for (auto v : r.morse->torsion) t += " " + std::to_string(v);
        line(b);
        line(t);
        line(std::string("simply-connected ") + (r.morse->simply_connected ? "true" : "false"));
    }
    if (r.ring) {
        if (const auto* p = std::get_if<TruncatedPresentation>(&*r.ring)) {
            for (const auto& g : p->generators()) line("generator " + g.name + " " + std::to_string(g.degree));
            for (std::size_t i = 0; i < p->num_generators(); ++i)
                line("truncate " + p->generators()[i].name + " " + std::to_string(p->truncations()[i]));
        } else {
            const auto& t = std::get<MultiplicationTable>(*r.ring);
            std::vector<std::string> labels;
            std::set<std::string> used;
            for (const auto& b : t.basis())
                used.insert(b.label);
            for (std::size_t i = 0; i < t.size(); ++i) {
                std::string l = t.label(i);
                if (!is_identifier(l) && !(l == "1" && i == t.unit_index())) {
                    l = "e" + std::to_string(i);
                    while (used.count(l)) l += "_";
                    used.insert(l);
                }
                labels.push_back(std::move(l));
            }
            for (std::size_t i = 0; i < t.size(); ++i) line("basis " + labels[i] + " " + std::to_string(t.degree(i)));
            for (const auto& rule : t.product_rules()) {
                if (rule.left == t.unit_index() || rule.right == t.unit_index()) continue;
                std::string value;
                for (auto term : rule.terms) value += (value.empty() ? "" : " + ") + labels[term];
                line("product " + labels[rule.left] + " " + labels[rule.right] + " = " + value);
            }
        }
    }
    for (const auto& n : r.notes) line("note " + quote(n));
    return s;
}

MapFile parse_map(std::string_view text) {
    const auto lines = split_lines(text);
    const std::size_t eof_line = lines.empty() ? 1 : lines.back().number + 1;
    MapFile m;
    std::set<std::string> seen;
    auto once = [&](const Line& l) {
        const auto& kw = l.tokens.front();
        if (!seen.insert(kw.text).second)
            throw ParseError(Kind::duplicate, l.number, kw.column, "'" + kw.text + "' given twice");
    };
    std::set<std::string> sent;
    for (const auto& l : lines) {
        const auto& kw = l.tokens.front().text;
        const std::size_t kcol = l.tokens.front().column;
        if (kw == "map") {
            once(l);
            expect_arity(l, 2, "map NAME");
            m.name = l.tokens[1].text;
        } else if (kw == "domain") {
            once(l);
            expect_arity(l, 2, "domain SPACE");
            m.domain = l.tokens[1].text;
        } else if (kw == "range") {
            once(l);
            expect_arity(l, 2, "range SPACE");
            m.range = l.tokens[1].text;
        } else if (kw == "degree") {
            once(l);
            expect_arity(l, 2, "degree +1|-1");
            const auto& v = l.tokens[1].text;
            if (v == "1" || v == "+1")
                m.degree = 1;
            else if (v == "-1")
                m.degree = -1;
            else
                throw ParseError(Kind::invalid_value, l.number, l.tokens[1].column, "degree must be +1 or -1");
        } else if (kw == "send") {
            if (l.tokens.size() < 4 || l.tokens[2].text != "->")
                throw ParseError(Kind::syntax, l.number, kcol, "expected 'send GEN -> EXPR'");
            const auto gen = name_at(l, 1, "generator");
            if (!sent.insert(gen).second)
                throw ParseError(Kind::duplicate, l.number, l.tokens[1].column, "'" + gen + "' sent twice");
            m.sends.emplace_back(gen, parse_expr(rest_after(l, 2), l.number, l.tokens[2].column + 2));
            m.send_lines.push_back(l.number);
        } else {
            throw ParseError(Kind::syntax, l.number, kcol, "unknown keyword '" + kw + "'");
        }
    }
    for (const char* required : {"map", "domain", "range", "degree"})
        if (!seen.count(required))
            throw ParseError(Kind::missing_field, eof_line, 1, std::string("missing '") + required + "'");
    return m;
}

std::string serialize_map(const MapFile& m) {
    std::string s = "map " + m.name + "\ndomain " + m.domain + "\nrange " + m.range + "\ndegree " +
                    (m.degree < 0 ? "-1" : "+1") + "\n";
    for (const auto& [gen, e] : m.sends) s += "send " + gen + " -> " + format_expr(e) + "\n";
    return s;
}

RingHomSpec resolve_map(const MapFile& m, const SpaceRecord& domain, const SpaceRecord& range) {
    if (!domain.ring) throw std::invalid_argument("space '" + domain.name + "' has no cohomology ring");
    if (!range.ring) throw std::invalid_argument("space '" + range.name + "' has no cohomology ring");
    const MultiplicationTable target = as_table(*domain.ring);
    RingHomSpec spec{*range.ring, *domain.ring, {}, m.degree};
    for (std::size_t i = 0; i < m.sends.size(); ++i) {
        const auto& [gen, expr] = m.sends[i];
        const std::size_t line = i < m.send_lines.size() ? m.send_lines[i] : 0;
        const bool known = std::visit(
            [&](const auto& ring) {
                if constexpr (std::is_same_v<std::decay_t<decltype(ring)>, TruncatedPresentation>)
                    return ring.generator_index(gen).has_value();
                else
                    return ring.index_of(gen).has_value();
            },
            *range.ring);
        if (!known)
            throw ParseError(Kind::unknown_name, line, 1, "'" + gen + "' is not a generator of " + range.name);
        try {
            spec.images.emplace_back(gen, evaluate(expr, *domain.ring, target));
        } catch (const std::out_of_range& e) {
            throw ParseError(Kind::unknown_name, line, 1, std::string(e.what()) + " in " + domain.name);
        }
    }
    return spec;
}

}  // namespace lscat

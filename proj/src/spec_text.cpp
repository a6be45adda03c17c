#include "ewb/spec_text.hpp"

#include "ewb/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

namespace ewb {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
};

[[noreturn]] void parse_fail(const Cursor& c, const std::string& what) {
    std::ostringstream os;
    os << what << " at line " << c.line << ", column " << c.col;
    throw Error(ErrorCode::ParseError, os.str());
}

[[noreturn]] void parse_fail_line(int line, const std::string& what) {
    std::ostringstream os;
    os << what << " at line " << line;
    throw Error(ErrorCode::ParseError, os.str());
}

std::vector<std::pair<int, std::string>> split_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream is(text);
    std::string line;
    int n = 0;
    while (std::getline(is, line)) {
        ++n;
        // strip comments and whitespace
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        out.emplace_back(n, line.substr(b, e - b + 1));
    }
    return out;
}

std::vector<std::string> tokens_of(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

} // namespace

std::vector<int> parse_cycles(const std::string& text, int degree) {
    std::vector<int> perm(degree);
    for (int i = 0; i < degree; ++i) perm[i] = i;
    Cursor c{text};
    bool any = false;
    std::vector<uint8_t> used(degree, 0);
    while (!c.eof()) {
        if (std::isspace((unsigned char)c.peek())) {
            c.advance();
            continue;
        }
        if (c.peek() != '(') parse_fail(c, "expected '('");
        c.advance();
        std::vector<int> cyc;
        while (true) {
            while (!c.eof() && std::isspace((unsigned char)c.peek())) c.advance();
            if (c.eof()) parse_fail(c, "unbalanced cycle parenthesis");
            if (c.peek() == ')') {
                c.advance();
                break;
            }
            if (!std::isdigit((unsigned char)c.peek())) parse_fail(c, "expected point or ')'");
            int v = 0;
            while (!c.eof() && std::isdigit((unsigned char)c.peek())) {
                v = v * 10 + (c.peek() - '0');
                c.advance();
            }
            if (v < 1 || v > degree) parse_fail(c, "point out of range");
            if (used[v - 1]) parse_fail(c, "point repeated");
            used[v - 1] = 1;
            cyc.push_back(v - 1);
        }
        any = true;
        for (size_t i = 0; i < cyc.size(); ++i) perm[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    if (!any) throw Error(ErrorCode::ParseError, "empty permutation expression");
    return perm;
}

GroupSpecAst parse_group_spec(const std::string& text) {
    GroupSpecAst ast;
    auto lines = split_lines(text);
    size_t i = 0;
    auto need = [&](const char* what) {
        if (i >= lines.size())
            throw Error(ErrorCode::ParseError, std::string("unexpected end of spec, wanted ") + what);
    };
    need("group header");
    {
        auto toks = tokens_of(lines[i].second);
        if (toks.size() != 2 || toks[0] != "group")
            parse_fail_line(lines[i].first, "expected 'group <name>'");
        ast.name = toks[1];
        ++i;
    }
    need("kind line");
    {
        auto toks = tokens_of(lines[i].second);
        if (toks.size() == 4 && toks[0] == "kind" && toks[1] == "permutation" && toks[2] == "degree") {
            ast.kind = GroupSpecAst::Kind::Permutation;
            ast.degree = std::atoi(toks[3].c_str());
            if (ast.degree < 1) parse_fail_line(lines[i].first, "bad degree");
        } else if (toks.size() == 4 && toks[0] == "kind" && toks[1] == "table" && toks[2] == "order") {
            ast.kind = GroupSpecAst::Kind::Table;
            ast.order = std::atoi(toks[3].c_str());
            if (ast.order < 1) parse_fail_line(lines[i].first, "bad order");
        } else {
            parse_fail_line(lines[i].first, "expected 'kind permutation degree <d>' or 'kind table order <n>'");
        }
        ++i;
    }
    bool ended = false;
    for (; i < lines.size(); ++i) {
        auto [lineno, body] = lines[i];
        auto toks = tokens_of(body);
        if (toks.size() == 1 && toks[0] == "end") {
            ended = true;
            ++i;
            break;
        }
        if (toks.size() < 3 || toks[0] != "gen" || toks[2] != "=")
            parse_fail_line(lineno, "expected 'gen <name> = ...' or 'end'");
        GroupSpecAst::Gen gen;
        gen.name = toks[1];
        gen.line = lineno;
        auto eq = body.find('=');
        std::string rhs = body.substr(eq + 1);
        if (ast.kind == GroupSpecAst::Kind::Permutation) {
            // keep cycles in AST form (round-trips through the printer)
            size_t b = rhs.find_first_not_of(" \t");
            if (b == std::string::npos) parse_fail_line(lineno, "missing cycles");
            std::vector<int> perm = parse_cycles(rhs.substr(b), ast.degree);
            std::vector<uint8_t> seen(ast.degree, 0);
            for (int s = 0; s < ast.degree; ++s) {
                if (seen[s] || perm[s] == s) continue;
                std::vector<int> cyc;
                int j = s;
                while (!seen[j]) {
                    seen[j] = 1;
                    cyc.push_back(j);
                    j = perm[j];
                }
                gen.cycles.push_back(std::move(cyc));
            }
        } else {
            auto nums = tokens_of(rhs);
            if ((int)nums.size() != ast.order) parse_fail_line(lineno, "row length must equal order");
            for (const auto& t : nums) {
                for (char ch : t)
                    if (!std::isdigit((unsigned char)ch)) parse_fail_line(lineno, "bad id in row");
                int v = std::atoi(t.c_str());
                if (v < 0 || v >= ast.order) parse_fail_line(lineno, "row id out of range");
                gen.row.push_back(v);
            }
        }
        ast.gens.push_back(std::move(gen));
    }
    if (!ended) throw Error(ErrorCode::ParseError, "missing 'end'");
    if (i < lines.size()) parse_fail_line(lines[i].first, "trailing content after 'end'");
    if (ast.gens.empty()) throw Error(ErrorCode::ParseError, "spec declares no generators");
    return ast;
}

namespace {

std::string cycles_to_string(const std::vector<std::vector<int>>& cycles) {
    if (cycles.empty()) return "()";
    // canonical: each cycle starts at its least point; cycles sorted by it
    std::vector<std::vector<int>> cs = cycles;
    for (auto& c : cs) {
        auto mn = std::min_element(c.begin(), c.end());
        std::rotate(c.begin(), mn, c.end());
    }
    std::sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
    std::string out;
    for (const auto& c : cs) {
        out += "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) out += " ";
            out += std::to_string(c[i] + 1);
        }
        out += ")";
    }
    return out;
}

} // namespace

std::string print_group_spec(const GroupSpecAst& ast) {
    std::ostringstream os;
    os << "group " << ast.name << "\n";
    if (ast.kind == GroupSpecAst::Kind::Permutation) {
        os << "kind permutation degree " << ast.degree << "\n";
        for (const auto& g : ast.gens)
            os << "gen " << g.name << " = " << cycles_to_string(g.cycles) << "\n";
    } else {
        os << "kind table order " << ast.order << "\n";
        for (const auto& g : ast.gens) {
            os << "gen " << g.name << " =";
            for (int v : g.row) os << " " << v;
            os << "\n";
        }
    }
    os << "end\n";
    return os.str();
}

namespace {

std::vector<int> perm_of_gen(const GroupSpecAst& ast, const GroupSpecAst::Gen& gen) {
    std::vector<int> p(ast.degree);
    for (int i = 0; i < ast.degree; ++i) p[i] = i;
    for (const auto& cyc : gen.cycles)
        for (size_t i = 0; i < cyc.size(); ++i) p[cyc[i]] = cyc[(i + 1) % cyc.size()];
    return p;
}

std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b) {
    // apply a, then b
    std::vector<int> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
    return out;
}

std::string perm_label(const std::vector<int>& p) {
    std::vector<std::vector<int>> cycles;
    std::vector<uint8_t> seen(p.size(), 0);
    for (int s = 0; s < (int)p.size(); ++s) {
        if (seen[s] || p[s] == s) continue;
        std::vector<int> cyc;
        int j = s;
        while (!seen[j]) {
            seen[j] = 1;
            cyc.push_back(j);
            j = p[j];
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles_to_string(cycles);
}

GroupPtr realize_permutation_group(const GroupSpecAst& ast, int cap, uint64_t seed) {
    std::vector<std::vector<int>> gens;
    for (const auto& g : ast.gens) gens.push_back(perm_of_gen(ast, g));
    std::vector<int> ident(ast.degree);
    for (int i = 0; i < ast.degree; ++i) ident[i] = i;

    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> elements{ident};
    ids[ident] = 0;
    for (size_t h = 0; h < elements.size(); ++h) {
        for (const auto& gen : gens) {
            auto y = perm_compose(elements[h], gen);
            if (ids.emplace(y, (int)elements.size()).second) {
                elements.push_back(y);
                if ((int)elements.size() > cap)
                    throw Error(ErrorCode::CapExceeded, "closure exceeds the order cap");
            }
        }
    }
    const int n = (int)elements.size();
    FiniteGroup g;
    g.name = ast.name;
    g.order = n;
    g.perm_degree = ast.degree;
    g.perms = elements;
    g.table.assign((size_t)n * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.table[(size_t)a * n + b] = ids.at(perm_compose(elements[a], elements[b]));
    g.labels.resize(n);
    for (int a = 0; a < n; ++a) g.labels[a] = perm_label(elements[a]);
    for (size_t i = 0; i < gens.size(); ++i) {
        g.generators.push_back(ids.at(gens[i]));
        g.gen_names.push_back(ast.gens[i].name);
    }
    return make_group(std::move(g), seed);
}

GroupPtr realize_table_group(const GroupSpecAst& ast, int cap, uint64_t seed) {
    const int n = ast.order;
    if (n > cap) throw Error(ErrorCode::CapExceeded, "declared order exceeds the cap");
    // generator rows are left-multiplication permutations of 0..n-1;
    // close them under composition and read the full table off the closure
    for (const auto& gen : ast.gens) {
        std::vector<uint8_t> seen(n, 0);
        for (int v : gen.row) {
            if (seen[v]) parse_fail_line(gen.line, "row is not a permutation");
            seen[v] = 1;
        }
    }
    std::vector<int> ident(n);
    for (int i = 0; i < n; ++i) ident[i] = i;
    std::map<std::vector<int>, int> seen;
    std::vector<std::vector<int>> elements{ident};
    seen[ident] = 0;
    for (size_t h = 0; h < elements.size(); ++h) {
        for (const auto& gen : ast.gens) {
            // pi_{x*g} = pi_x o pi_g (apply pi_g first)
            std::vector<int> y(n);
            for (int j = 0; j < n; ++j) y[j] = elements[h][gen.row[j]];
            if (seen.emplace(y, (int)elements.size()).second) {
                elements.push_back(y);
                if ((int)elements.size() > n)
                    throw Error(ErrorCode::AxiomViolation,
                                "rows generate more maps than the declared order");
            }
        }
    }
    if ((int)elements.size() != n)
        throw Error(ErrorCode::AxiomViolation, "rows do not close to the declared order");
    // each element id is where its map sends the identity
    std::vector<int> elt_of_map(n, -1);
    for (const auto& m : elements) {
        int e = m[0];
        if (elt_of_map[e] >= 0)
            throw Error(ErrorCode::AxiomViolation, "two maps send 0 to the same element");
        elt_of_map[e] = 1;
    }
    FiniteGroup g;
    g.name = ast.name;
    g.order = n;
    g.table.assign((size_t)n * n, 0);
    std::map<int, std::vector<int>> map_of_elt;
    for (const auto& m : elements) map_of_elt[m[0]] = m;
    for (int a = 0; a < n; ++a) {
        const auto& ma = map_of_elt.at(a);
        for (int b = 0; b < n; ++b) g.table[(size_t)a * n + b] = ma[b];
    }
    for (size_t i = 0; i < ast.gens.size(); ++i) {
        g.generators.push_back(ast.gens[i].row[0]);
        g.gen_names.push_back(ast.gens[i].name);
    }
    g.labels.resize(n);
    for (int a = 0; a < n; ++a) g.labels[a] = "#" + std::to_string(a);
    return make_group(std::move(g), seed);
}

} // namespace

GroupPtr realize_group(const GroupSpecAst& ast, int cap, uint64_t seed) {
    if (ast.kind == GroupSpecAst::Kind::Permutation)
        return realize_permutation_group(ast, cap, seed);
    return realize_table_group(ast, cap, seed);
}

GroupPtr load_group(const std::string& text, int cap, uint64_t seed) {
    return realize_group(parse_group_spec(text), cap, seed);
}

ActionSpecAst parse_action_spec(const std::string& text) {
    ActionSpecAst ast;
    auto lines = split_lines(text);
    size_t i = 0;
    if (i >= lines.size()) throw Error(ErrorCode::ParseError, "empty action spec");
    {
        auto toks = tokens_of(lines[i].second);
        if (toks.size() != 4 || toks[0] != "action" || toks[2] != "on")
            parse_fail_line(lines[i].first, "expected 'action <name> on <group>'");
        ast.name = toks[1];
        ast.group_name = toks[3];
        ++i;
    }
    if (i >= lines.size()) throw Error(ErrorCode::ParseError, "missing actor line");
    {
        auto toks = tokens_of(lines[i].second);
        if (toks.size() != 2 || toks[0] != "actor")
            parse_fail_line(lines[i].first, "expected 'actor <groupname>'");
        ast.actor_name = toks[1];
        ++i;
    }
    bool ended = false;
    for (; i < lines.size(); ++i) {
        auto [lineno, body] = lines[i];
        auto toks = tokens_of(body);
        if (toks.size() == 1 && toks[0] == "end") {
            ended = true;
            ++i;
            break;
        }
        if (toks[0] != "auto") parse_fail_line(lineno, "expected 'auto <a-gen>: ...' or 'end'");
        auto colon = body.find(':');
        if (colon == std::string::npos) parse_fail_line(lineno, "missing ':'");
        auto head = tokens_of(body.substr(0, colon));
        if (head.size() != 2) parse_fail_line(lineno, "expected 'auto <a-gen>:'");
        ActionSpecAst::AutoLine al;
        al.actor_gen = head[1];
        al.line = lineno;
        // comma-separated "g -> word" items
        std::string rest = body.substr(colon + 1);
        std::vector<std::string> items;
        {
            std::string cur;
            for (char ch : rest) {
                if (ch == ',') {
                    items.push_back(cur);
                    cur.clear();
                } else {
                    cur += ch;
                }
            }
            items.push_back(cur);
        }
        for (const auto& item : items) {
            auto toks2 = tokens_of(item);
            if (toks2.size() < 3 || toks2[1] != "->")
                parse_fail_line(lineno, "expected '<g-gen> -> <word>'");
            ActionSpecAst::Word word;
            for (size_t t = 2; t < toks2.size(); ++t) {
                const std::string& tok = toks2[t];
                auto caret = tok.find('^');
                std::string base = tok.substr(0, caret == std::string::npos ? tok.size() : caret);
                int e = 1;
                if (caret != std::string::npos) {
                    std::string es = tok.substr(caret + 1);
                    try {
                        e = std::stoi(es);
                    } catch (...) {
                        parse_fail_line(lineno, "bad exponent '" + es + "'");
                    }
                }
                if (base.empty()) parse_fail_line(lineno, "empty generator name in word");
                word.factors.emplace_back(base, e);
            }
            al.images.emplace_back(toks2[0], std::move(word));
        }
        ast.autos.push_back(std::move(al));
    }
    if (!ended) throw Error(ErrorCode::ParseError, "missing 'end'");
    if (i < lines.size()) parse_fail_line(lines[i].first, "trailing content after 'end'");
    return ast;
}

std::string print_action_spec(const ActionSpecAst& ast) {
    std::ostringstream os;
    os << "action " << ast.name << " on " << ast.group_name << "\n";
    os << "actor " << ast.actor_name << "\n";
    for (const auto& al : ast.autos) {
        os << "auto " << al.actor_gen << ":";
        for (size_t i = 0; i < al.images.size(); ++i) {
            os << (i ? ", " : " ") << al.images[i].first << " ->";
            for (const auto& [name, e] : al.images[i].second.factors) {
                os << " " << name;
                if (e != 1) os << "^" << e;
            }
        }
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

} // namespace ewb

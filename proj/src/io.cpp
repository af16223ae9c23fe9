#include "bier/io.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>
#include <sstream>

namespace bier {

ParseError::ParseError(int line, int column, const std::string& what)
    : InvalidInput("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column)
{
}

namespace {

struct Token {
    std::string text;
    int column;
};

struct Line {
    int number;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text)
{
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        Line line{number, {}};
        std::size_t pos = 0;
        while (pos < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[pos])) || raw[pos] == ',') {
                ++pos;
                continue;
            }
            const std::size_t start = pos;
            while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos])) && raw[pos] != ',') ++pos;
            line.tokens.push_back({raw.substr(start, pos - start), static_cast<int>(start) + 1});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

int to_int(const Token& t, int line)
{
    int value = 0;
    std::size_t used = 0;
    try {
        value = std::stoi(t.text, &used);
    }
    catch (const std::exception&) {
        used = 0;
    }
    if (used != t.text.size() || value < 0) throw ParseError(line, t.column, "expected a non-negative integer, got '" + t.text + "'");
    return value;
}

Exponent tuple(const Line& line, std::size_t n)
{
    if (line.tokens.size() != n)
        throw ParseError(line.number, line.tokens.front().column,
                         "expected " + std::to_string(n) + " exponents, got " + std::to_string(line.tokens.size()));
    Exponent a;
    for (const auto& t : line.tokens) a.push_back(to_int(t, line.number));
    return a;
}

// A lone "1" is the unit monomial unless it could be a one-variable tuple.
bool monomial_line(const Line& line, std::size_t nvars)
{
    if (line.tokens.size() == 1 && line.tokens[0].text == "1") return nvars != 1;
    return std::any_of(line.tokens.begin(), line.tokens.end(),
                       [](const Token& t) { return t.text.find('x') != std::string::npos; });
}

/// Exponents on one line: a tuple, or one or more monomials.
std::vector<Exponent> line_exponents(const Line& line, std::size_t nvars)
{
    if (!monomial_line(line, nvars)) return {tuple(line, nvars)};
    std::vector<Exponent> out;
    for (const auto& t : line.tokens) {
        try {
            out.push_back(parse_monomial(t.text, nvars));
        }
        catch (const InvalidInput& e) {
            throw ParseError(line.number, t.column, e.what());
        }
    }
    return out;
}

Input parse_text(const std::string& text)
{
    const auto lines = tokenize(text);
    if (lines.empty()) return SimplicialComplex::void_complex();
    const auto& head = lines.front();
    const auto& key = head.tokens.front().text;

    if (key == "cap") {
        std::vector<int> c;
        for (std::size_t k = 1; k < head.tokens.size(); ++k) c.push_back(to_int(head.tokens[k], head.number));
        if (c.empty()) throw ParseError(head.number, head.tokens.front().column, "cap needs at least one entry");
        const Cap cap(c);
        if (lines.size() < 2) throw ParseError(head.number, 1, "expected 'members' or 'generators' after the cap");
        const auto& mode = lines[1].tokens.front();
        if (lines[1].tokens.size() != 1 || (mode.text != "members" && mode.text != "generators"))
            throw ParseError(lines[1].number, mode.column, "expected 'members' or 'generators'");
        std::vector<Exponent> list;
        for (std::size_t k = 2; k < lines.size(); ++k)
            for (auto& a : line_exponents(lines[k], c.size())) {
                if (!cap.admits(a))
                    throw ParseError(lines[k].number, lines[k].tokens.front().column, "monomial exceeds the cap");
                list.push_back(std::move(a));
            }
        if (mode.text == "generators") return closure_from_generators(cap, list);
        return Multicomplex::from_members(cap, std::move(list));
    }

    if (key == "ideal") {
        if (head.tokens.size() != 2) throw ParseError(head.number, 1, "expected 'ideal <nvars>'");
        const auto n = static_cast<std::size_t>(to_int(head.tokens[1], head.number));
        std::vector<Exponent> gens;
        for (std::size_t k = 1; k < lines.size(); ++k)
            for (auto& a : line_exponents(lines[k], n)) gens.push_back(std::move(a));
        return MonomialIdeal(n, std::move(gens));
    }

    std::vector<Face> facets;
    for (const auto& line : lines) {
        Face f;
        for (const auto& t : line.tokens) {
            if (t.text == "{}") continue;
            try {
                f.push_back(parse_label(t.text));
            }
            catch (const InvalidInput& e) {
                throw ParseError(line.number, t.column, e.what());
            }
        }
        facets.push_back(std::move(f));
    }
    return complex_from_facets(std::move(facets));
}

std::vector<Exponent> json_tuples(const nlohmann::json& j)
{
    std::vector<Exponent> out;
    for (const auto& t : j) out.push_back(t.get<Exponent>());
    return out;
}

Input parse_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e) {
        // byte offset only; report it as a column on line 1 of the document
        throw ParseError(1, static_cast<int>(e.byte), e.what());
    }
    try {
        if (j.contains("cap")) {
            const Cap cap(j.at("cap").get<std::vector<int>>());
            for (const auto& key : {"members", "generators"})
                if (j.contains(key))
                    for (const auto& a : json_tuples(j.at(key)))
                        if (a.size() != cap.size() || !cap.admits(a)) throw InvalidInput("monomial outside the cap");
            if (j.contains("generators")) return closure_from_generators(cap, json_tuples(j.at("generators")));
            return Multicomplex::from_members(cap, json_tuples(j.at("members")));
        }
        if (j.contains("ideal")) {
            const auto n = j.at("ideal").get<std::size_t>();
            auto gens = json_tuples(j.value("generators", nlohmann::json::array()));
            for (const auto& g : gens)
                if (g.size() != n) throw InvalidInput("generator length differs from the variable count");
            return MonomialIdeal(n, std::move(gens));
        }
        if (j.contains("facets")) {
            std::vector<Face> facets;
            for (const auto& f : j.at("facets")) {
                Face face;
                for (const auto& v : f) face.push_back(parse_label(v.get<std::string>()));
                facets.push_back(std::move(face));
            }
            return facets.empty() ? SimplicialComplex::void_complex() : complex_from_facets(std::move(facets));
        }
    }
    catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed JSON input: ") + e.what());
    }
    throw InvalidInput("JSON input needs one of the keys cap, ideal, facets");
}

}  // namespace

Input parse_input(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{' && text.find('"') != std::string::npos) return parse_json(text);
    return parse_text(text);
}

VertexLabel parse_label(const std::string& token)
{
    if (token.empty()) throw InvalidInput("empty vertex label");
    if (const auto hat = token.find("^("); hat != std::string::npos) {
        if (token[0] != 'x' || token.back() != ')') throw InvalidInput("malformed label '" + token + "'");
        try {
            std::size_t used_i = 0, used_j = 0;
            const std::string is = token.substr(1, hat - 1), js = token.substr(hat + 2, token.size() - hat - 3);
            const int i = std::stoi(is, &used_i), j = std::stoi(js, &used_j);
            if (used_i != is.size() || used_j != js.size() || i < 1 || j < 0) throw InvalidInput("");
            return VertexLabel::indexed(i, j);
        }
        catch (const std::exception&) {
            throw InvalidInput("malformed label '" + token + "'");
        }
    }
    std::size_t split = token.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(token[split - 1]))) --split;
    if (split == token.size()) return VertexLabel::atom(token);
    const std::string digits = token.substr(split);
    if (digits.size() > 1 && digits[0] == '0') throw InvalidInput("label index with a leading zero: '" + token + "'");
    return VertexLabel::atom(token.substr(0, split), std::stoi(digits));
}

Exponent parse_monomial(const std::string& text, std::size_t nvars)
{
    Exponent a(nvars, 0);
    if (text == "1") return a;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find('*', start), text.size());
        const std::string factor = text.substr(start, end - start);
        if (factor.size() < 2 || factor[0] != 'x') throw InvalidInput("malformed monomial factor '" + factor + "'");
        const auto hat = factor.find('^');
        try {
            const std::string var = factor.substr(1, hat == std::string::npos ? std::string::npos : hat - 1);
            std::size_t used = 0;
            const int i = std::stoi(var, &used);
            if (used != var.size()) throw InvalidInput("");
            int e = 1;
            if (hat != std::string::npos) {
                const std::string es = factor.substr(hat + 1);
                e = std::stoi(es, &used);
                if (used != es.size()) throw InvalidInput("");
            }
            if (i < 1 || static_cast<std::size_t>(i) > nvars || e < 0) throw InvalidInput("");
            a[static_cast<std::size_t>(i - 1)] += e;
        }
        catch (const std::exception&) {
            throw InvalidInput("malformed monomial factor '" + factor + "'");
        }
        start = end + 1;
    }
    return a;
}

std::string render_monomial(const Exponent& a)
{
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        if (!s.empty()) s += '*';
        s += "x" + std::to_string(i + 1);
        if (a[i] > 1) s += "^" + std::to_string(a[i]);
    }
    return s.empty() ? "1" : s;
}

std::string render_ideal(const MonomialIdeal& ideal)
{
    if (ideal.is_zero()) return "0";
    std::string s;
    for (const auto& g : ideal.gens()) s += (s.empty() ? "" : ", ") + render_monomial(g);
    return s;
}

std::string render_polarized(const Face& face)
{
    if (face.empty()) return "1";
    std::string s;
    for (const auto& v : face) {
        if (!s.empty()) s += '*';
        s += v.is_indexed() ? "x" + std::to_string(v.index) + "_" + std::to_string(v.level) : v.str();
    }
    return s;
}

std::string render_polarized(const std::vector<Face>& gens)
{
    if (gens.empty()) return "0";
    std::string s;
    for (const auto& g : gens) s += (s.empty() ? "" : ", ") + render_polarized(g);
    return s;
}

std::string render_face(const Face& face)
{
    if (face.empty()) return "{}";
    std::string s;
    for (const auto& v : face) s += (s.empty() ? "" : " ") + v.str();
    return s;
}

std::string render_complex(const SimplicialComplex& complex)
{
    std::string s;
    for (const auto& f : complex.facets()) s += render_face(f) + "\n";
    return s;
}

std::string render_vector(const std::vector<std::int64_t>& v)
{
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

std::string render_members(const Multicomplex& m)
{
    auto members = m.members();
    std::sort(members.begin(), members.end(), monomial_less);
    std::string s;
    for (const auto& a : members) s += (s.empty() ? "" : ", ") + render_monomial(a);
    return s;
}

}  // namespace bier

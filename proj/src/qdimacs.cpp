#include "rpdep/qdimacs.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace rpdep {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const auto start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

std::int64_t to_int(std::string_view token, std::size_t line)
{
    std::int64_t value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
    }
    return value;
}

} // namespace

RawFormula parse_qdimacs_raw(std::istream& in, std::size_t* declared_vars, std::size_t* declared_clauses)
{
    RawFormula raw;
    bool have_header = false;
    bool in_clauses = false;
    std::int64_t nvars = 0;
    std::int64_t nclauses = 0;
    std::vector<std::uint8_t> quantified;
    Clause pending;
    std::size_t pending_line = 0;

    std::string text;
    std::size_t line_no = 0;
    while (std::getline(in, text)) {
        ++line_no;
        const auto tokens = split_tokens(text);
        if (tokens.empty()) {
            continue;
        }
        const auto head = tokens.front();
        if (head.front() == 'c') {
            continue;
        }
        if (head == "p") {
            if (have_header) {
                throw ParseError(line_no, "duplicate problem line");
            }
            if (tokens.size() != 4 || tokens[1] != "cnf") {
                throw ParseError(line_no, "malformed header, expected 'p cnf <nvars> <nclauses>'");
            }
            nvars = to_int(tokens[2], line_no);
            nclauses = to_int(tokens[3], line_no);
            if (nvars < 0 || nclauses < 0 || nvars >= (std::int64_t{1} << 30)) {
                throw ParseError(line_no, "malformed header, counts out of range");
            }
            quantified.assign(static_cast<std::size_t>(nvars) + 1, 0);
            have_header = true;
            continue;
        }
        if (!have_header) {
            throw ParseError(line_no, "missing 'p cnf' header before content");
        }

        if (head == "a" || head == "e") {
            if (in_clauses || !pending.empty()) {
                throw ParseError(line_no, "quantifier line after the first clause");
            }
            if (tokens.size() < 2 || tokens.back() != "0") {
                throw ParseError(line_no, "quantifier line must end with 0");
            }
            const auto q = head == "a" ? Quantifier::Forall : Quantifier::Exists;
            for (std::size_t i = 1; i + 1 < tokens.size(); ++i) {
                const auto v = to_int(tokens[i], line_no);
                if (v <= 0 || v > nvars) {
                    throw ParseError(line_no, "quantified variable " + std::string(tokens[i]) +
                                                  " out of range 1.." + std::to_string(nvars));
                }
                if (quantified[static_cast<std::size_t>(v)]) {
                    throw ParseError(line_no, "variable " + std::to_string(v) + " quantified twice");
                }
                quantified[static_cast<std::size_t>(v)] = 1;
                raw.prefix.push_back({static_cast<Variable>(v), q});
            }
            continue;
        }

        in_clauses = true;
        for (const auto token : tokens) {
            const auto value = to_int(token, line_no);
            if (value == 0) {
                raw.clauses.push_back(std::move(pending));
                pending.clear();
                continue;
            }
            const auto magnitude = value < 0 ? -value : value;
            if (magnitude > nvars) {
                throw ParseError(line_no, "literal " + std::string(token) + " exceeds declared variable count " +
                                              std::to_string(nvars));
            }
            if (pending.empty()) {
                pending_line = line_no;
            }
            pending.push_back(Literal::from_dimacs(value));
        }
    }

    if (!have_header) {
        throw ParseError(line_no == 0 ? 1 : line_no, "missing 'p cnf' header");
    }
    if (!pending.empty()) {
        throw ParseError(pending_line, "clause not terminated by 0");
    }
    if (declared_vars != nullptr) {
        *declared_vars = static_cast<std::size_t>(nvars);
    }
    if (declared_clauses != nullptr) {
        *declared_clauses = static_cast<std::size_t>(nclauses);
    }
    return raw;
}

ParsedFormula parse_qdimacs(std::istream& in)
{
    ParsedFormula parsed;
    auto raw = parse_qdimacs_raw(in, &parsed.declared_vars, &parsed.declared_clauses);
    auto normalized = normalize(raw);
    parsed.formula = std::move(normalized.formula);
    parsed.diagnostics = std::move(normalized.diagnostics);
    return parsed;
}

ParsedFormula parse_qdimacs(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_qdimacs(in);
}

ParsedFormula parse_qdimacs_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    return parse_qdimacs(in);
}

void write_qdimacs(std::ostream& out, const QcnfFormula& f)
{
    out << "p cnf " << f.max_var() << ' ' << f.clauses().size() << '\n';
    for (const auto& block : f.blocks()) {
        out << quantifier_letter(block.quantifier);
        for (const Variable v : block.variables) {
            out << ' ' << v;
        }
        out << " 0\n";
    }
    for (const auto& clause : f.clauses()) {
        for (const Literal l : clause) {
            out << l.to_dimacs() << ' ';
        }
        out << "0\n";
    }
}

std::string to_qdimacs(const QcnfFormula& f)
{
    std::ostringstream out;
    write_qdimacs(out, f);
    return out.str();
}

std::string formula_digest(const QcnfFormula& f)
{
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const unsigned char ch : to_qdimacs(f)) {
        hash ^= ch;
        hash *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << hash;
    return out.str();
}

} // namespace rpdep

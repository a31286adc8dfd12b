#ifndef RPDEP_QDIMACS_HPP_
#define RPDEP_QDIMACS_HPP_

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rpdep/formula.hpp"

namespace rpdep {

class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
    {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct ParsedFormula
{
    QcnfFormula formula;
    NormalizeDiagnostics diagnostics;
    std::size_t declared_vars = 0;
    std::size_t declared_clauses = 0;
};

/**
 * \brief Reads QDIMACS without normalizing.
 *
 * Accepts comment lines (`c ...`) anywhere before the first clause, one
 * `p cnf <nvars> <nclauses>` header, `a`/`e` quantifier lines terminated by
 * 0, and clauses terminated by 0 (a clause may span lines). Adjacent
 * quantifier lines of the same kind form one block. Throws ParseError.
 */
RawFormula parse_qdimacs_raw(std::istream& in, std::size_t* declared_vars = nullptr,
                             std::size_t* declared_clauses = nullptr);

/// parse_qdimacs_raw followed by normalize.
ParsedFormula parse_qdimacs(std::istream& in);
ParsedFormula parse_qdimacs(std::string_view text);
ParsedFormula parse_qdimacs_file(const std::string& path);

/**
 * Writes `p cnf <max_var> <clauses>`, one line per quantifier block and one
 * line per clause. Output is a function of the formula alone.
 */
void write_qdimacs(std::ostream& out, const QcnfFormula& f);
std::string to_qdimacs(const QcnfFormula& f);

/// 64-bit FNV-1a of the serialized formula, as 16 hex digits.
std::string formula_digest(const QcnfFormula& f);

} // namespace rpdep

#endif

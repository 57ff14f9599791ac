/* grammar_io.hh -- the plain-text grammar file format.
 *
 *   # comment to end of line; blank lines ignored
 *   initial: S1 S2 ...          (exactly one such line)
 *   terminal: t1 t2 ...         (exactly one such line)
 *   LHS -> RHS                  (one production per line, symbols
 *                                whitespace-separated, e.g. "A B -> x")
 *
 * The vocabulary is the union of all symbols mentioned. Serialization is
 * byte-stable for a fixed grammar and round-trips through parse_grammar.
 */

#ifndef SEMITHUE_GRAMMAR_IO_HH_
#define SEMITHUE_GRAMMAR_IO_HH_

#include <stdexcept>
#include <string>
#include <string_view>

#include "semithue/grammar.hh"

namespace semithue {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

Grammar parse_grammar(std::string_view text);
Grammar parse_grammar_file(const std::string& path);

std::string serialize_grammar(const Grammar& g);

}  // namespace semithue

#endif  // SEMITHUE_GRAMMAR_IO_HH_

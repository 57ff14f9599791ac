#include "semithue/grammar_io.hh"

#include <cctype>
#include <fstream>
#include <sstream>

namespace semithue {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({std::string(line.substr(start, i - start)),
                      static_cast<int>(start) + 1});
  }
  return tokens;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

Grammar parse_grammar(std::string_view text) {
  Grammar g;
  bool saw_initial = false;
  bool saw_terminal = false;
  std::vector<std::pair<Token, Token>> pending_marks;  // (section, symbol)
  struct PendingProduction {
    std::vector<Token> lhs, rhs;
    int line;
  };
  std::vector<PendingProduction> pending;

  auto intern_checked = [&](const Token& tok, int line) {
    if (!is_identifier(tok.text))
      throw ParseError(line, tok.column,
                       "symbol '" + tok.text + "' is not declarable (use letters, digits, underscore)");
    return g.intern(tok.text);
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::vector<Token> tokens = tokenize(raw);
    if (tokens.empty()) continue;

    if (tokens.front().text == "initial:" || tokens.front().text == "terminal:") {
      bool initial = tokens.front().text == "initial:";
      bool& seen = initial ? saw_initial : saw_terminal;
      if (seen)
        throw ParseError(lineno, tokens.front().column,
                         "duplicate " + tokens.front().text.substr(0, tokens.front().text.size() - 1) +
                             " section");
      seen = true;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        SymbolId id = intern_checked(tokens[i], lineno);
        if (initial)
          g.mark_initial(id);
        else
          g.mark_terminal(id);
      }
      continue;
    }

    auto arrow = tokens.end();
    for (auto it = tokens.begin(); it != tokens.end(); ++it)
      if (it->text == "->") {
        arrow = it;
        break;
      }
    if (arrow == tokens.end())
      throw ParseError(lineno, tokens.front().column,
                       "expected 'initial:', 'terminal:' or a production 'LHS -> RHS'");
    PendingProduction p;
    p.line = lineno;
    p.lhs.assign(tokens.begin(), arrow);
    p.rhs.assign(arrow + 1, tokens.end());
    if (p.lhs.empty())
      throw ParseError(lineno, tokens.front().column, "empty production left side");
    if (p.rhs.empty())
      throw ParseError(lineno, arrow->column, "empty production right side");
    pending.push_back(std::move(p));
  }

  if (!saw_initial) throw ParseError(lineno + 1, 1, "missing 'initial:' line");
  if (!saw_terminal) throw ParseError(lineno + 1, 1, "missing 'terminal:' line");

  for (const PendingProduction& p : pending) {
    SymbolString lhs, rhs;
    for (const Token& tok : p.lhs) lhs.push_back(intern_checked(tok, p.line));
    for (const Token& tok : p.rhs) rhs.push_back(intern_checked(tok, p.line));
    for (std::size_t i = 0; i < lhs.size(); ++i)
      if (g.is_terminal(lhs[i]))
        throw ParseError(p.line, p.lhs[i].column,
                         "terminal symbol " + g.name(lhs[i]) +
                             " on the left side of a production");
    g.add_production(std::move(lhs), std::move(rhs));
  }
  return g;
}

Grammar parse_grammar_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read grammar file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_grammar(buf.str());
}

std::string serialize_grammar(const Grammar& g) {
  std::ostringstream out;
  out << "initial:";
  for (SymbolId id : g.initial_symbols()) out << ' ' << g.name(id);
  out << '\n';
  out << "terminal:";
  for (SymbolId id : g.terminal_symbols()) out << ' ' << g.name(id);
  out << '\n';
  for (const Production& p : g.productions()) out << g.render(p) << '\n';
  return out.str();
}

}  // namespace semithue

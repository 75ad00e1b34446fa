#include "idealkit/parse.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace idealkit {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Character cursor over polynomial text with line/column bookkeeping.
class Cursor {
 public:
  Cursor(std::string_view text, const TextOrigin& origin)
      : text_(text), source_(origin.source), line_(origin.line), col_(origin.column) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  std::string nat() {
    skip_ws();
    std::string out;
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      out += text_[pos_];
      advance();
    }
    return out;
  }

  std::string ident() {
    skip_ws();
    std::string out;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
      out += text_[pos_];
      advance();
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) {
    skip_ws();
    throw SyntaxError(source_, line_, col_, message, std::move(expected));
  }

  std::string where() {
    skip_ws();
    return source_ + ":" + std::to_string(line_) + ":" + std::to_string(col_);
  }

  std::string describe_here() {
    if (at_end()) return "end of input";
    return std::string("'") + text_[pos_] + "'";
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::string source_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col_;
};

unsigned parse_exponent(Cursor& cur) {
  const std::string digits = cur.nat();
  if (digits.empty()) cur.fail("expected an exponent after '^', found " + cur.describe_here(), {"natural number"});
  if (digits.size() > 5 || std::stoul(digits) > 65535) cur.fail("exponent too large", {"exponent <= 65535"});
  return static_cast<unsigned>(std::stoul(digits));
}

void parse_factors(Cursor& cur, const VariableTable& table, Monomial& m) {
  for (;;) {
    if (!is_ident_start(cur.peek())) {
      cur.fail("expected a variable, found " + cur.describe_here(), {"variable"});
    }
    const std::string where = cur.where();
    const std::string name = cur.ident();
    auto index = table.index_of(name);
    if (!index) throw Error(ErrorKind::UnknownVariable, where + ": unknown variable '" + name + "'");
    unsigned e = 1;
    if (cur.accept('^')) e = parse_exponent(cur);
    m.set(*index, m[*index] + e);
    if (!cur.accept('*')) return;
  }
}

Term<Rational> parse_term(Cursor& cur, const VariableTable& table) {
  Monomial m(table.size());
  const char c = cur.peek();
  if (is_digit(c)) {
    const std::string num = cur.nat();
    mpz_class den = 1;
    if (cur.accept('/')) {
      const std::string where = cur.where();
      const std::string d = cur.nat();
      if (d.empty()) cur.fail("expected a denominator after '/', found " + cur.describe_here(), {"natural number"});
      den = mpz_class(d);
      if (den == 0) throw Error(ErrorKind::ZeroDenominator, where + ": zero denominator");
    }
    Rational coeff(mpz_class(num), den);
    if (cur.accept('*')) parse_factors(cur, table, m);
    return {coeff, m};
  }
  if (is_ident_start(c)) {
    parse_factors(cur, table, m);
    return {Rational(1), m};
  }
  cur.fail("expected a term, found " + cur.describe_here(), {"coefficient", "variable"});
}

QPoly parse_poly_at(Cursor& cur, const TablePtr& table) {
  std::vector<Term<Rational>> terms;
  bool negative = false;
  if (cur.accept('-')) negative = true;
  else cur.accept('+');
  for (;;) {
    Term<Rational> t = parse_term(cur, *table);
    if (negative) t.coeff = -t.coeff;
    terms.push_back(std::move(t));
    const char next = cur.peek();
    if (next == '+' || next == '-') {
      cur.accept(next);
      negative = next == '-';
      continue;
    }
    break;
  }
  return QPoly(table, Rational(1), std::move(terms));
}

void expect_end(Cursor& cur, bool allow_comma) {
  if (cur.at_end()) return;
  std::vector<std::string> expected = {"'+'", "'-'", "'*'", "'^'"};
  if (allow_comma) expected.push_back("','");
  expected.push_back("end of input");
  cur.fail("unexpected " + cur.describe_here(), expected);
}

template <class C>
std::string print_generic(const Polynomial<C>& f, bool signed_coeffs) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::string coeff;
    bool negative = false;
    if constexpr (std::is_same_v<C, Rational>) {
      negative = signed_coeffs && t.coeff.sign() < 0;
      coeff = (negative ? t.coeff.abs() : t.coeff).to_string();
    } else {
      coeff = t.coeff.to_string();
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = format_monomial(t.monomial, *f.table());
    if (t.monomial.is_one()) out += coeff;
    else if (coeff == "1") out += mono;
    else out += coeff + "*" + mono;
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Drops a trailing '#' comment that is not inside a quoted string.
std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

// Whitespace-separated words with "double quoted" strings kept whole.
struct Word {
  std::string text;
  bool quoted;
  std::size_t column;
};

std::vector<Word> split_words(const std::string& line, const std::string& source, std::size_t lineno) {
  std::vector<Word> words;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (line[i] == '"') {
      const std::size_t close = line.find('"', i + 1);
      if (close == std::string::npos) {
        throw SyntaxError(source, lineno, start + 1, "unterminated string", {"'\"'"});
      }
      words.push_back({line.substr(i + 1, close - i - 1), true, start + 1});
      i = close + 1;
    } else {
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      words.push_back({line.substr(start, i - start), false, start + 1});
    }
  }
  return words;
}

struct HeaderState {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> conj;
  std::map<std::string, Bidegree> weights;
  std::optional<std::pair<OrderKind, std::vector<std::string>>> order;
  bool seen_vars = false;
};

int parse_weight(const Word& w, const std::string& source, std::size_t lineno) {
  if (w.text == "0") return 0;
  if (w.text == "1") return 1;
  throw SyntaxError(source, lineno, w.column, "weight must be 0 or 1", {"0", "1"});
}

void header_directive(HeaderState& h, const std::vector<Word>& words, const std::string& source,
                      std::size_t lineno) {
  const std::string& d = words[0].text;
  auto need = [&](std::size_t n, const char* what) {
    if (words.size() != n) {
      throw SyntaxError(source, lineno, words[0].column, d + " takes " + what, {what});
    }
  };
  if (d == "@vars") {
    if (h.seen_vars) throw SyntaxError(source, lineno, 1, "@vars given twice", {"entry"});
    if (words.size() < 2) throw SyntaxError(source, lineno, words[0].column, "@vars needs names", {"variable name"});
    for (std::size_t i = 1; i < words.size(); ++i) {
      const auto& w = words[i].text;
      if (!is_ident_start(w[0]) || !std::all_of(w.begin(), w.end(), is_ident_char)) {
        throw SyntaxError(source, lineno, words[i].column, "invalid variable name '" + w + "'",
                          {"identifier"});
      }
      h.names.push_back(w);
    }
    h.seen_vars = true;
    return;
  }
  if (!h.seen_vars) {
    throw SyntaxError(source, lineno, words[0].column, d + " before @vars", {"@vars"});
  }
  if (d == "@conj") {
    need(3, "two variable names");
    h.conj.emplace_back(words[1].text, words[2].text);
  } else if (d == "@weight") {
    need(4, "a name and two weights");
    h.weights[words[1].text] = {parse_weight(words[2], source, lineno), parse_weight(words[3], source, lineno)};
  } else if (d == "@order") {
    if (words.size() < 2) throw SyntaxError(source, lineno, words[0].column, "@order needs a kind", {"lex", "grlex", "grevlex"});
    OrderKind kind;
    try {
      kind = parse_order_kind(words[1].text);
    } catch (const Error&) {
      throw SyntaxError(source, lineno, words[1].column, "unknown order '" + words[1].text + "'",
                        {"lex", "grlex", "grevlex"});
    }
    std::vector<std::string> prio;
    for (std::size_t i = 2; i < words.size(); ++i) prio.push_back(words[i].text);
    h.order = std::make_pair(kind, prio);
  } else {
    throw SyntaxError(source, lineno, words[0].column, "unknown directive '" + d + "'",
                      {"@vars", "@conj", "@weight", "@order", "entry"});
  }
}

TablePtr build_table(const HeaderState& h, const std::string& source) {
  const std::size_t n = h.names.size();
  std::vector<std::size_t> conj(n);
  for (std::size_t i = 0; i < n; ++i) conj[i] = i;
  auto index = [&](const std::string& name) -> std::size_t {
    auto it = std::find(h.names.begin(), h.names.end(), name);
    if (it == h.names.end()) {
      throw Error(ErrorKind::UnknownVariable, source + ": header names unknown variable '" + name + "'");
    }
    return static_cast<std::size_t>(it - h.names.begin());
  };
  for (const auto& [a, b] : h.conj) {
    const std::size_t i = index(a), j = index(b);
    if (conj[i] != i || conj[j] != j) {
      throw Error(ErrorKind::InvalidArgument, source + ": variable paired twice in @conj");
    }
    conj[i] = j;
    conj[j] = i;
  }
  std::optional<std::vector<Bidegree>> weights;
  if (!h.weights.empty()) {
    weights.emplace(n);
    for (const auto& [name, w] : h.weights) (*weights)[index(name)] = w;
    for (const auto& name : h.names) {
      if (!h.weights.count(name)) {
        throw Error(ErrorKind::InvalidArgument, source + ": no @weight for variable '" + name + "'");
      }
    }
  }
  try {
    return make_table(VariableTable(h.names, conj, weights));
  } catch (const Error& e) {
    throw Error(e.kind(), source + ": " + e.what());
  }
}

}  // namespace

QPoly parse_poly(std::string_view text, const TablePtr& table, const TextOrigin& origin) {
  Cursor cur(text, origin);
  QPoly f = parse_poly_at(cur, table);
  expect_end(cur, false);
  return f;
}

std::vector<QPoly> parse_poly_list(std::string_view text, const TablePtr& table,
                                   const TextOrigin& origin) {
  Cursor cur(text, origin);
  std::vector<QPoly> out;
  do {
    out.push_back(parse_poly_at(cur, table));
  } while (cur.accept(','));
  expect_end(cur, true);
  return out;
}

std::string format_monomial(const Monomial& m, const VariableTable& table) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += table.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::string format_term(const Term<Rational>& t, const VariableTable& table) {
  if (t.monomial.is_one()) return t.coeff.to_string();
  const std::string mono = format_monomial(t.monomial, table);
  if (t.coeff.is_one()) return mono;
  if (t.coeff == Rational(-1)) return "-" + mono;
  return t.coeff.to_string() + "*" + mono;
}

std::string print_poly(const QPoly& f) { return print_generic(f, true); }
std::string print_poly(const FpPoly& f) { return print_generic(f, false); }

const QPoly& SystemEntry::poly() const {
  if (polys.size() != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "entry '" + name + "' holds " + std::to_string(polys.size()) + " polynomials, expected one");
  }
  return polys.front();
}

const SystemEntry* SystemFile::find(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

const SystemEntry& SystemFile::entry(std::string_view name) const {
  if (const auto* e = find(name)) return *e;
  throw Error(ErrorKind::FixtureMissing, source + ": no entry named '" + std::string(name) + "'");
}

std::vector<QPoly> SystemFile::all_polys() const {
  std::vector<QPoly> out;
  for (const auto& e : entries) out.insert(out.end(), e.polys.begin(), e.polys.end());
  return out;
}

SystemFile parse_system(std::string_view text, const std::string& source) {
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else if (c != '\r') {
        cur += c;
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }

  HeaderState header;
  SystemFile sys;
  sys.source = source;
  std::set<std::string> names;

  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    const std::string line = strip_comment(lines[i]);
    if (trim(line).empty()) continue;
    auto words = split_words(line, source, i + 1);
    if (words[0].text == "entry") break;
    if (words[0].text[0] != '@') {
      throw SyntaxError(source, i + 1, words[0].column, "expected a header directive or entry",
                        {"@vars", "@conj", "@weight", "@order", "entry"});
    }
    header_directive(header, words, source, i + 1);
  }
  if (!header.seen_vars) {
    throw SyntaxError(source, std::min(i + 1, lines.size() + 1), 1, "missing header", {"@vars"});
  }
  sys.table = build_table(header, source);
  if (header.order) sys.order = make_order(header.order->first, *sys.table, header.order->second);

  while (i < lines.size()) {
    const std::string line = strip_comment(lines[i]);
    if (trim(line).empty()) {
      ++i;
      continue;
    }
    auto words = split_words(line, source, i + 1);
    if (words[0].text != "entry") {
      throw SyntaxError(source, i + 1, words[0].column,
                        words[0].text[0] == '@' ? "header directive after the first entry"
                                                : "expected 'entry'",
                        {"entry"});
    }
    if (words.size() < 3 || words[1].quoted || !words[2].quoted) {
      throw SyntaxError(source, i + 1, words[0].column, "malformed entry line",
                        {"entry <name> \"<citation>\" [suspect \"<reason>\"]"});
    }
    SystemEntry e;
    e.name = words[1].text;
    e.citation = words[2].text;
    e.line = i + 1;
    if (words.size() == 5 && words[3].text == "suspect" && !words[3].quoted && words[4].quoted) {
      e.suspect = words[4].text;
    } else if (words.size() != 3) {
      throw SyntaxError(source, i + 1, words[3].column, "unexpected text after citation",
                        {"suspect \"<reason>\"", "end of line"});
    }
    if (!names.insert(e.name).second) {
      throw Error(ErrorKind::DuplicateName,
                  source + ":" + std::to_string(i + 1) + ": entry '" + e.name + "' defined twice");
    }
    const std::size_t body_start = i + 1;
    std::string body;
    std::size_t j = body_start;
    bool closed = false;
    for (; j < lines.size(); ++j) {
      const std::string b = strip_comment(lines[j]);
      if (trim(b) == ";") {
        closed = true;
        break;
      }
      body += b;
      body += '\n';
    }
    if (!closed) {
      throw SyntaxError(source, lines.size() + 1, 1, "entry '" + e.name + "' is not terminated",
                        {"';'"});
    }
    if (trim(body).empty()) {
      throw SyntaxError(source, j + 1, 1, "entry '" + e.name + "' has no polynomial", {"polynomial"});
    }
    e.polys = parse_poly_list(body, sys.table, {source, body_start + 1, 1});
    sys.entries.push_back(std::move(e));
    i = j + 1;
  }
  return sys;
}

SystemFile load_system(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::IoError, "cannot read '" + path.string() + "'");
  return parse_system(buf.str(), path.string());
}

std::string print_system(const SystemFile& system) {
  const auto& t = *system.table;
  std::string out = "@vars";
  for (const auto& n : t.names()) out += " " + n;
  out += "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.conj(i) > i) out += "@conj " + t.name(i) + " " + t.name(t.conj(i)) + "\n";
  }
  if (t.has_weights()) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      out += "@weight " + t.name(i) + " " + std::to_string(t.weights()[i].pi) + " " +
             std::to_string(t.weights()[i].pibar) + "\n";
    }
  }
  if (system.order) {
    out += "@order " + describe_order(*system.order, t) + "\n";
  }
  for (const auto& e : system.entries) {
    out += "\nentry " + e.name + " \"" + e.citation + "\"";
    if (e.suspect) out += " suspect \"" + *e.suspect + "\"";
    out += "\n";
    for (std::size_t k = 0; k < e.polys.size(); ++k) {
      out += "  " + print_poly(e.polys[k]) + (k + 1 < e.polys.size() ? ",\n" : "\n");
    }
    out += ";\n";
  }
  return out;
}

OrderKind parse_order_kind(std::string_view text) {
  if (text == "lex") return OrderKind::Lex;
  if (text == "grlex") return OrderKind::GrLex;
  if (text == "grevlex") return OrderKind::GrevLex;
  throw Error(ErrorKind::InvalidArgument, "unknown term order '" + std::string(text) + "'");
}

TermOrder make_order(OrderKind kind, const VariableTable& table,
                     const std::vector<std::string>& priority) {
  std::vector<std::size_t> perm;
  std::vector<bool> used(table.size(), false);
  for (const auto& name : priority) {
    const std::size_t i = table.require(name);
    if (used[i]) throw Error(ErrorKind::InvalidArgument, "variable '" + name + "' repeated in priority");
    used[i] = true;
    perm.push_back(i);
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!used[i]) perm.push_back(i);
  }
  return TermOrder(kind, std::move(perm));
}

std::string describe_order(const TermOrder& order, const VariableTable& table) {
  std::string out = to_string(order.kind());
  for (std::size_t v : order.priority()) out += " " + table.name(v);
  return out;
}

}  // namespace idealkit

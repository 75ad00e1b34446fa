#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idealkit/polynomial.hpp"

namespace idealkit {

/// Where a piece of text starts inside its file, for error positions.
struct TextOrigin {
  std::string source = "<input>";
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Parses one expanded polynomial:
///   poly    := [sign] term (sign term)*
///   term    := coeff | coeff '*' factors | factors
///   factors := var ('^' nat)? ('*' var ('^' nat)?)*
///   coeff   := nat | nat '/' nat
/// Throws SyntaxError, Error{UnknownVariable}, Error{ZeroDenominator}.
QPoly parse_poly(std::string_view text, const TablePtr& table, const TextOrigin& origin = {});

/// Comma-separated list of polynomials (at least one).
std::vector<QPoly> parse_poly_list(std::string_view text, const TablePtr& table,
                                   const TextOrigin& origin = {});

/// Canonical text: terms descending grevlex, explicit '*', sign leading each
/// term, "0" for the zero polynomial. parse_poly(print_poly(f)) == f.
std::string print_poly(const QPoly& f);
/// Residues printed in [0, p).
std::string print_poly(const FpPoly& f);

std::string format_monomial(const Monomial& m, const VariableTable& table);
std::string format_term(const Term<Rational>& t, const VariableTable& table);

struct SystemEntry {
  std::string name;
  std::string citation;
  std::optional<std::string> suspect;  // reason, when the printed source is garbled
  std::vector<QPoly> polys;
  std::size_t line = 0;

  bool is_suspect() const noexcept { return suspect.has_value(); }
  /// The single polynomial of a one-element entry; InvalidArgument otherwise.
  const QPoly& poly() const;
};

struct SystemFile {
  std::string source;
  TablePtr table;
  std::optional<TermOrder> order;  // from an @order directive
  std::vector<SystemEntry> entries;

  const SystemEntry* find(std::string_view name) const;
  /// Throws Error{FixtureMissing}.
  const SystemEntry& entry(std::string_view name) const;
  /// Every polynomial of every entry, in file order.
  std::vector<QPoly> all_polys() const;
};

/// Throws SyntaxError (including a missing header) and Error{DuplicateName}.
SystemFile parse_system(std::string_view text, const std::string& source);
/// Throws Error{IoError} plus everything parse_system throws.
SystemFile load_system(const std::filesystem::path& path);
/// Canonical re-serialization; parse_system(print_system(s)) reproduces s.
std::string print_system(const SystemFile& system);

/// "lex", "grlex" or "grevlex" (InvalidArgument otherwise).
OrderKind parse_order_kind(std::string_view text);
/// Builds a term order from a kind and an optional priority list of names;
/// names not mentioned follow in table order.
TermOrder make_order(OrderKind kind, const VariableTable& table,
                     const std::vector<std::string>& priority = {});
std::string describe_order(const TermOrder& order, const VariableTable& table);

}  // namespace idealkit

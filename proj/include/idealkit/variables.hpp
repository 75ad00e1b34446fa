#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace idealkit {

/// (pi-weight, pibar-weight) of one variable, or of a whole term.
struct Bidegree {
  int pi = 0;
  int pibar = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// Ordered variable names with a conjugation involution and optional
/// bidegree weights. Immutable once built; shared through TablePtr.
class VariableTable {
 public:
  /// Self-paired variables, no weights.
  explicit VariableTable(std::vector<std::string> names);
  /// `conj[i]` is the partner of variable i; must be an involution.
  VariableTable(std::vector<std::string> names, std::vector<std::size_t> conj,
                std::optional<std::vector<Bidegree>> weights = std::nullopt);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  /// Throws Error{UnknownVariable}.
  std::size_t require(const std::string& name) const;

  std::size_t conj(std::size_t i) const { return conj_.at(i); }
  const std::vector<std::size_t>& conj_pairs() const noexcept { return conj_; }

  bool has_weights() const noexcept { return weights_.has_value(); }
  const std::vector<Bidegree>& weights() const;

  /// Copy with one extra self-paired variable appended. The requested name is
  /// suffixed with primes until it is fresh. Weights, if any, get (0,0).
  VariableTable extended(const std::string& name) const;

  friend bool operator==(const VariableTable&, const VariableTable&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> conj_;
  std::optional<std::vector<Bidegree>> weights_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

inline TablePtr make_table(VariableTable t) {
  return std::make_shared<const VariableTable>(std::move(t));
}

/// Convenience: self-paired, unweighted table from names.
TablePtr make_table(std::vector<std::string> names);

/// Pointer-equal or structurally equal.
bool same_table(const TablePtr& a, const TablePtr& b);

/// Spin-coefficient alphabet: a ac b bc p pc Phi11 with its weights.
TablePtr spin_table();
/// Reduced alphabet after dehomogenization: x1 xc1 x2 xc2 phi11.
TablePtr reduced_table();

}  // namespace idealkit

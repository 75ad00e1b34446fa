#include "idealkit/variables.hpp"

#include <algorithm>
#include <set>

#include "idealkit/error.hpp"
#include "idealkit/monomial.hpp"

namespace idealkit {

namespace {

std::vector<std::size_t> self_pairs(std::size_t n) {
  std::vector<std::size_t> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = i;
  return c;
}

}  // namespace

VariableTable::VariableTable(std::vector<std::string> names)
    : VariableTable(names, self_pairs(names.size())) {}

VariableTable::VariableTable(std::vector<std::string> names, std::vector<std::size_t> conj,
                             std::optional<std::vector<Bidegree>> weights)
    : names_(std::move(names)), conj_(std::move(conj)), weights_(std::move(weights)) {
  if (names_.size() > kMaxVariables) {
    throw Error(ErrorKind::InvalidArgument, "too many variables");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error(ErrorKind::InvalidArgument, "empty variable name");
    if (!seen.insert(n).second) {
      throw Error(ErrorKind::DuplicateName, "variable '" + n + "' declared twice");
    }
  }
  if (conj_.size() != names_.size()) {
    throw Error(ErrorKind::InvalidArgument, "conjugation pairing does not cover every variable");
  }
  for (std::size_t i = 0; i < conj_.size(); ++i) {
    if (conj_[i] >= conj_.size() || conj_[conj_[i]] != i) {
      throw Error(ErrorKind::InvalidArgument,
                  "conjugation pairing is not an involution at '" + names_[i] + "'");
    }
  }
  if (weights_ && weights_->size() != names_.size()) {
    throw Error(ErrorKind::InvalidArgument, "weights do not cover every variable");
  }
}

std::optional<std::size_t> VariableTable::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t VariableTable::require(const std::string& name) const {
  if (auto i = index_of(name)) return *i;
  throw Error(ErrorKind::UnknownVariable, "unknown variable '" + name + "'");
}

const std::vector<Bidegree>& VariableTable::weights() const {
  if (!weights_) throw Error(ErrorKind::InvalidArgument, "variable table carries no weights");
  return *weights_;
}

VariableTable VariableTable::extended(const std::string& name) const {
  std::string fresh = name;
  while (index_of(fresh)) fresh += "_";
  auto names = names_;
  auto conj = conj_;
  names.push_back(fresh);
  conj.push_back(conj.size());
  std::optional<std::vector<Bidegree>> w = weights_;
  if (w) w->push_back({0, 0});
  return VariableTable(std::move(names), std::move(conj), std::move(w));
}

TablePtr make_table(std::vector<std::string> names) {
  return make_table(VariableTable(std::move(names)));
}

bool same_table(const TablePtr& a, const TablePtr& b) {
  return a == b || (a && b && *a == *b);
}

TablePtr spin_table() {
  static const TablePtr table = make_table(VariableTable(
      {"a", "ac", "b", "bc", "p", "pc", "Phi11"}, {1, 0, 3, 2, 5, 4, 6},
      std::vector<Bidegree>{{1, 0}, {0, 1}, {0, 1}, {1, 0}, {1, 0}, {0, 1}, {1, 1}}));
  return table;
}

TablePtr reduced_table() {
  static const TablePtr table = make_table(
      VariableTable({"x1", "xc1", "x2", "xc2", "phi11"}, {1, 0, 3, 2, 4}));
  return table;
}

}  // namespace idealkit

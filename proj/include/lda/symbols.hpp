#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lda/errors.hpp"

namespace lda {

// Symbols of the coefficient field. Variables are shiftable and occupy the first
// positions of every exponent vector; parameters follow and are never shifted.
class SymbolTable {
 public:
  SymbolTable() = default;
  SymbolTable(std::vector<std::string> variables, std::vector<std::string> parameters)
      : variables_(std::move(variables)), parameters_(std::move(parameters)) {
    std::vector<std::string> seen;
    for (const auto& name : all()) {
      if (name.empty()) throw ValidationError("empty symbol name");
      for (const auto& s : seen)
        if (s == name) throw ValidationError("duplicate symbol '" + name + "'");
      seen.push_back(name);
    }
  }

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<std::string>& parameters() const { return parameters_; }
  std::size_t num_variables() const { return variables_.size(); }
  std::size_t size() const { return variables_.size() + parameters_.size(); }

  const std::string& name(std::size_t index) const {
    return index < variables_.size() ? variables_[index] : parameters_.at(index - variables_.size());
  }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (this->name(i) == name) return i;
    return std::nullopt;
  }

  std::optional<std::size_t> variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
      if (variables_[i] == name) return i;
    return std::nullopt;
  }

  bool is_variable(std::size_t index) const { return index < variables_.size(); }

  std::vector<std::string> all() const {
    std::vector<std::string> out = variables_;
    out.insert(out.end(), parameters_.begin(), parameters_.end());
    return out;
  }

  bool operator==(const SymbolTable&) const = default;

 private:
  std::vector<std::string> variables_;
  std::vector<std::string> parameters_;
};

}  // namespace lda

#ifndef SOFTTOP_CONTEXT_HPP
#define SOFTTOP_CONTEXT_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "softtop/errors.hpp"

namespace softtop {

/// A fixed finite universe X together with a fixed parameter set E.
/// Both orders are frozen at construction; all bit encodings index into them.
class Context {
 public:
  Context(std::vector<std::string> universe, std::vector<std::string> parameters)
      : universe_(std::move(universe)), parameters_(std::move(parameters)) {
    if (universe_.empty()) throw InvalidContext("universe must be nonempty");
    if (parameters_.empty()) throw InvalidContext("parameter set must be nonempty");
    check_distinct(universe_, "universe");
    check_distinct(parameters_, "parameters");
    if (universe_.size() > 31)
      throw InvalidContext("universe larger than 31 points is not supported");
    if (universe_.size() * parameters_.size() > 63)
      throw InvalidContext("|X|*|E| larger than 63 is not supported");
  }

  int points() const { return static_cast<int>(universe_.size()); }
  int params() const { return static_cast<int>(parameters_.size()); }
  int bits() const { return points() * params(); }

  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<std::string>& parameters() const { return parameters_; }

  const std::string& point_label(int i) const { return universe_.at(i); }
  const std::string& param_label(int j) const { return parameters_.at(j); }

  int point_index(const std::string& label) const {
    for (int i = 0; i < points(); ++i)
      if (universe_[i] == label) return i;
    throw UnknownPoint(label);
  }
  int param_index(const std::string& label) const {
    for (int j = 0; j < params(); ++j)
      if (parameters_[j] == label) return j;
    throw UnknownParameter(label);
  }
  bool has_point(const std::string& label) const {
    for (const auto& p : universe_)
      if (p == label) return true;
    return false;
  }
  bool has_param(const std::string& label) const {
    for (const auto& p : parameters_)
      if (p == label) return true;
    return false;
  }

  /// All-points mask for one parameter slice.
  std::uint32_t universe_mask() const {
    return points() == 32 ? ~0u : ((1u << points()) - 1u);
  }
  /// Absolute soft set, as a raw encoding.
  std::uint64_t full_mask() const {
    return bits() == 64 ? ~0ull : ((1ull << bits()) - 1ull);
  }

  bool operator==(const Context& other) const {
    return universe_ == other.universe_ && parameters_ == other.parameters_;
  }
  bool operator!=(const Context& other) const { return !(*this == other); }

 private:
  static void check_distinct(const std::vector<std::string>& labels, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second)
        throw InvalidContext(std::string(what) + " contains duplicate label '" + l + "'");
  }

  std::vector<std::string> universe_;
  std::vector<std::string> parameters_;
};

using ContextPtr = std::shared_ptr<const Context>;

inline ContextPtr make_context(std::vector<std::string> universe,
                               std::vector<std::string> parameters) {
  return std::make_shared<const Context>(std::move(universe), std::move(parameters));
}

inline void require_same_context(const Context& a, const Context& b) {
  if (a != b) throw ContextMismatch();
}

}  // namespace softtop

#endif

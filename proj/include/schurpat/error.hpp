#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schurpat {

enum class Errc {
  invalid_input,
  invalid_parameter,
  infeasible,
  degenerate_input,
  invalid_map,
  precondition,
  internal,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised when a (sub)majorisation precondition fails. `prefix` is the length
// of the first partial sum that violates the bound; a value equal to the
// sequence length means only the totals disagree.
class InfeasibleTarget : public Error {
 public:
  InfeasibleTarget(std::size_t prefix, const std::string& what, Errc code = Errc::infeasible)
      : Error(code, what), prefix_(prefix) {}
  std::size_t prefix() const noexcept { return prefix_; }

 private:
  std::size_t prefix_;
};

}  // namespace schurpat

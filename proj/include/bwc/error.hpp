#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bwc {

// Failure categories shared by all modules. The CLI maps these onto exit codes.
enum class Errc {
  size,               // parameter outside the supported range
  precondition,       // operation called outside its domain
  undefined_level,    // level of the zero word / zero vector
  membership,         // element not in the required code or lattice
  saturation,         // word is not a union of cosets
  mixed_ambient,      // lattices or vectors over different ambient spaces
  rank_mismatch,
  non_integral,
  non_dyadic,         // result would leave Z[1/2]
  not_invariant,      // lattice not stabilised by the isometry
  group_shape,        // elements do not generate the expected group
  budget,             // enumeration node cap exceeded
  internal,           // a checked identity failed; indicates a bug
  parse,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace bwc

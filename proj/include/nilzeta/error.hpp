#pragma once

#include <stdexcept>
#include <string>

namespace nilzeta {

enum class Errc {
  input,        // malformed or out-of-domain argument
  singular,     // a map required to be invertible is not
  precision,    // finite level too small for an exact count
  unsupported,  // valid request outside the implemented range (e.g. p <= 3)
  invariant,    // an internal construction invariant failed
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace nilzeta

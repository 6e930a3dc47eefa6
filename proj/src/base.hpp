#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace splinez {

// All domain arithmetic runs on arbitrary-precision integers; lcm chains
// outgrow machine words quickly.
using Int = mpz_class;

enum class errc {
  parse_error,
  validation,
  length_mismatch,
  not_invertible,
  incompatible,
  size_exceeded,
  zero_modulus_cut,
  not_in_span,
  no_flowup_found,
  internal_contradiction,
  dimension_mismatch,
  bad_argument,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline long long to_ll(const Int& v) {
  if (!v.fits_slong_p()) fail(errc::size_exceeded, "value does not fit in a machine word: " + v.get_str());
  return static_cast<long long>(v.get_si());
}

}  // namespace splinez

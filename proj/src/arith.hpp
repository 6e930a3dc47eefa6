#pragma once

#include <optional>
#include <vector>

#include "base.hpp"

namespace splinez {

// Exact number theory on Z. Conventions throughout: gcd(a,0) = |a|,
// lcm(a,0) = 0, gcd of an empty list is 0, lcm of an empty list is 1.
// A modulus of 0 means exact equality (Z/0Z = Z).

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
Int gcd_list(const std::vector<Int>& xs);
Int lcm_list(const std::vector<Int>& xs);

struct ExtGcd {
  Int g;  // gcd(a, b), nonnegative
  Int x;  // a*x + b*y == g
  Int y;
};
ExtGcd ext_gcd(const Int& a, const Int& b);

// Least nonnegative u with a*u == 1 (mod m), m >= 1; u = 0 when m == 1.
// Throws errc::not_invertible when gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& m);

// x == residue (mod modulus). modulus == 0 pins x to residue exactly;
// for modulus > 0 the canonical residue lies in [0, modulus).
struct Congruence {
  Int residue;
  Int modulus;

  static Congruence make(Int residue, Int modulus);
  bool holds(const Int& x) const;
  bool operator==(const Congruence&) const = default;
};

// Combined congruence with modulus lcm(m1, m2), or nullopt when the pair is
// incompatible (residues differ mod gcd(m1, m2)).
std::optional<Congruence> try_crt_pair(const Congruence& c1, const Congruence& c2);

// Same, but incompatibility is an error (errc::incompatible).
Congruence crt_pair(const Congruence& c1, const Congruence& c2);

// Left fold of crt_pair over the whole system. On failure the error message
// names the first incompatible input pair (1-based positions).
Congruence crt_system(const std::vector<Congruence>& cs);

// Closed-form solution of x == y (mod a), x == 0 (mod b) for a, b >= 1:
// x = b when a/(a,b) == 1, otherwise x = y*(b/(a,b))*((b/(a,b))^-1 mod a/(a,b)),
// reduced to the least nonnegative representative mod lcm(a, b).
// Throws errc::incompatible when y != 0 (mod gcd(a, b)).
Int solve_zero_pair(const Int& y, const Int& a, const Int& b);

}  // namespace splinez

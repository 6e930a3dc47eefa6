#include "arith.hpp"

#include <sstream>

namespace splinez {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int gcd_list(const std::vector<Int>& xs) {
  Int g = 0;
  for (const Int& x : xs) g = gcd(g, x);
  return g;
}

Int lcm_list(const std::vector<Int>& xs) {
  Int l = 1;
  for (const Int& x : xs) l = lcm(l, x);
  return l;
}

ExtGcd ext_gcd(const Int& a, const Int& b) {
  Int r0 = abs(a), r1 = abs(b);
  Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    r0 -= q * r1;
    swap(r0, r1);
    s0 -= q * s1;
    swap(s0, s1);
    t0 -= q * t1;
    swap(t0, t1);
  }
  if (sgn(a) < 0) s0 = -s0;
  if (sgn(b) < 0) t0 = -t0;
  return {r0, s0, t0};
}

Int mod_inverse(const Int& a, const Int& m) {
  if (m < 1) fail(errc::bad_argument, "mod_inverse: modulus must be positive, got " + m.get_str());
  Int u;
  if (mpz_invert(u.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(errc::not_invertible, a.get_str() + " is not invertible mod " + m.get_str());
  return u;
}

Congruence Congruence::make(Int residue, Int modulus) {
  if (sgn(modulus) < 0) modulus = -modulus;
  if (modulus != 0) {
    Int r;
    mpz_mod(r.get_mpz_t(), residue.get_mpz_t(), modulus.get_mpz_t());
    residue = r;
  }
  return {std::move(residue), std::move(modulus)};
}

bool Congruence::holds(const Int& x) const {
  // mpz_congruent_p treats modulus 0 as exact equality.
  return mpz_congruent_p(x.get_mpz_t(), residue.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

static std::string show(const Congruence& c) {
  return "x == " + c.residue.get_str() + " (mod " + c.modulus.get_str() + ")";
}

std::optional<Congruence> try_crt_pair(const Congruence& c1, const Congruence& c2) {
  if (c1.modulus == 0) {
    if (!c2.holds(c1.residue)) return std::nullopt;
    return Congruence{c1.residue, 0};
  }
  if (c2.modulus == 0) {
    if (!c1.holds(c2.residue)) return std::nullopt;
    return Congruence{c2.residue, 0};
  }
  Int g = gcd(c1.modulus, c2.modulus);
  Int diff = c2.residue - c1.residue;
  if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
  Int m2g = c2.modulus / g;
  Int t = ((diff / g) % m2g) * mod_inverse((c1.modulus / g) % m2g, m2g);
  return Congruence::make(c1.residue + c1.modulus * t, lcm(c1.modulus, c2.modulus));
}

Congruence crt_pair(const Congruence& c1, const Congruence& c2) {
  auto r = try_crt_pair(c1, c2);
  if (!r) fail(errc::incompatible, "incompatible congruences: " + show(c1) + " and " + show(c2));
  return *r;
}

Congruence crt_system(const std::vector<Congruence>& cs) {
  if (cs.empty()) return Congruence{0, 1};
  Congruence acc = Congruence::make(cs[0].residue, cs[0].modulus);
  for (size_t k = 1; k < cs.size(); ++k) {
    auto next = try_crt_pair(acc, cs[k]);
    if (next) {
      acc = *next;
      continue;
    }
    // The fold only fails when some original pair is incompatible; find it.
    for (size_t i = 0; i < k; ++i) {
      if (!try_crt_pair(cs[i], cs[k])) {
        std::ostringstream os;
        os << "incompatible congruence pair (" << i + 1 << ", " << k + 1 << "): " << show(cs[i])
           << " and " << show(cs[k]);
        fail(errc::incompatible, os.str());
      }
    }
    fail(errc::internal_contradiction,
         "congruence fold failed but all pairs are compatible; system: " + show(cs[k]));
  }
  return acc;
}

Int solve_zero_pair(const Int& y, const Int& a, const Int& b) {
  if (a < 1 || b < 1) fail(errc::bad_argument, "solve_zero_pair: moduli must be positive");
  Int g = gcd(a, b);
  if (!mpz_divisible_p(y.get_mpz_t(), g.get_mpz_t()))
    fail(errc::incompatible, "no x with x == " + y.get_str() + " (mod " + a.get_str() +
                                 ") and x == 0 (mod " + b.get_str() + ")");
  Int ag = a / g;
  if (ag == 1) return b;
  Int bg = b / g;
  Int x = y * bg * mod_inverse(bg % ag, ag);
  Int r;
  Int l = lcm(a, b);
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), l.get_mpz_t());
  return r;
}

}  // namespace splinez

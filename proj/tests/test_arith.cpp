#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arith.hpp"

using namespace splinez;

namespace {

// Independent gcd/lcm by divisor scan; only usable for small values.
Int brute_gcd(const Int& a, const Int& b) {
  Int x = abs(a), y = abs(b);
  if (x == 0) return y;
  if (y == 0) return x;
  for (Int d = std::min(x, y); d >= 1; --d)
    if (x % d == 0 && y % d == 0) return d;
  return 1;
}

Int brute_lcm(const Int& a, const Int& b) {
  Int x = abs(a), y = abs(b);
  if (x == 0 || y == 0) return 0;
  for (Int m = std::max(x, y);; m += 1)
    if (m % x == 0 && m % y == 0) return m;
}

}  // namespace

TEST_CASE("gcd_list") {
  CHECK(gcd_list({20, 8}) == 4);
  CHECK(gcd_list({}) == 0);
  CHECK(gcd_list({3, 0}) == 3);
  CHECK(gcd_list({-20, 8}) == 4);
}

TEST_CASE("lcm_list") {
  CHECK(lcm_list({4, 6}) == 12);
  CHECK(lcm_list({9, 4, 4}) == 36);
  CHECK(lcm_list({2, 0}) == 0);
  CHECK(lcm_list({}) == 1);
}

TEST_CASE("ext_gcd") {
  ExtGcd r = ext_gcd(20, 8);
  CHECK(r.g == 4);
  CHECK(r.x == 1);
  CHECK(r.y == -2);
  r = ext_gcd(1, 0);
  CHECK(r.g == 1);
  CHECK(r.x == 1);
  CHECK(r.y == 0);
  r = ext_gcd(6, 5);
  CHECK(r.g == 1);
  CHECK(r.x == 1);
  CHECK(r.y == -1);
}

TEST_CASE("ext_gcd identity on random inputs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int it = 0; it < 500; ++it) {
    Int a = dist(rng), b = dist(rng);
    ExtGcd r = ext_gcd(a, b);
    CHECK(r.g == gcd(a, b));
    CHECK(a * r.x + b * r.y == r.g);
  }
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(6, 5) == 1);
  CHECK(mod_inverse(1, 7) == 1);
  // Scan oracle for 3u == 1 mod 7.
  Int expected = -1;
  for (Int u = 0; u < 7; ++u)
    if ((3 * u) % 7 == 1) {
      expected = u;
      break;
    }
  CHECK(expected == 5);
  CHECK(mod_inverse(3, 7) == expected);
  CHECK(mod_inverse(5, 1) == 0);
  CHECK_THROWS_AS(mod_inverse(4, 8), Error);
}

TEST_CASE("crt_pair combines compatible congruences") {
  // Brute-force oracle over 0..14.
  std::vector<Int> solutions;
  for (Int x = 0; x < 15; ++x)
    if (x % 3 == 2 && x % 5 == 3) solutions.push_back(x);
  REQUIRE(solutions.size() == 1);
  CHECK(solutions[0] == 8);

  Congruence c = crt_pair(Congruence::make(2, 3), Congruence::make(3, 5));
  CHECK(c.residue == 8);
  CHECK(c.modulus == 15);
}

TEST_CASE("crt_pair zero residues") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(1, 60);
  for (int it = 0; it < 200; ++it) {
    Int a = dist(rng), b = dist(rng);
    Congruence c = crt_pair(Congruence::make(0, a), Congruence::make(0, b));
    CHECK(c.residue == 0);
    CHECK(c.modulus == lcm(a, b));
  }
}

TEST_CASE("crt_pair incompatibility") {
  CHECK_THROWS_AS(crt_pair(Congruence::make(1, 4), Congruence::make(0, 6)), Error);
  CHECK(!try_crt_pair(Congruence::make(1, 4), Congruence::make(0, 6)).has_value());
}

TEST_CASE("crt_pair with exact (modulus 0) congruences") {
  Congruence c = crt_pair(Congruence{5, 0}, Congruence::make(1, 2));
  CHECK(c.residue == 5);
  CHECK(c.modulus == 0);
  CHECK(!try_crt_pair(Congruence{5, 0}, Congruence::make(0, 2)).has_value());
  CHECK(!try_crt_pair(Congruence{5, 0}, Congruence{4, 0}).has_value());
  CHECK(try_crt_pair(Congruence{5, 0}, Congruence{5, 0}).has_value());
}

TEST_CASE("crt_pair solution set is exactly one class, exhaustively") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> md(1, 100), rd(0, 99);
  for (int it = 0; it < 150; ++it) {
    Congruence c1 = Congruence::make(rd(rng), md(rng));
    Congruence c2 = Congruence::make(rd(rng), md(rng));
    auto combined = try_crt_pair(c1, c2);
    Int l = lcm(c1.modulus, c2.modulus);
    for (Int x = 0; x < l; ++x) {
      bool both = c1.holds(x) && c2.holds(x);
      bool predicted = combined.has_value() && combined->holds(x);
      CHECK(both == predicted);
    }
  }
}

TEST_CASE("crt_system") {
  Congruence c = crt_system({Congruence::make(0, 2)});
  CHECK(c.residue == 0);
  CHECK(c.modulus == 2);

  c = crt_system({Congruence::make(3, 7), Congruence::make(0, 2)});
  CHECK(c.residue == 10);
  CHECK(c.modulus == 14);

  try {
    crt_system({Congruence::make(1, 2), Congruence::make(2, 4)});
    FAIL("expected incompatibility");
  } catch (const Error& e) {
    CHECK(e.code() == errc::incompatible);
    CHECK(std::string(e.what()).find("(1, 2)") != std::string::npos);
  }
}

TEST_CASE("crt_system modulus is the lcm of the inputs when solvable") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> md(1, 30);
  for (int it = 0; it < 200; ++it) {
    // Build a guaranteed-solvable system by reducing a fixed witness.
    Int witness = std::uniform_int_distribution<long>(0, 1000)(rng);
    std::vector<Congruence> cs;
    Int l = 1;
    for (int k = 0; k < 4; ++k) {
      Int m = md(rng);
      cs.push_back(Congruence::make(witness, m));
      l = lcm(l, m);
    }
    Congruence c = crt_system(cs);
    CHECK(c.modulus == l);
    CHECK(c.holds(witness));
  }
}

TEST_CASE("crt_system with exact congruences mixed in") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> md(1, 30), wd(0, 500);
  for (int it = 0; it < 200; ++it) {
    Int witness = wd(rng);
    std::vector<Congruence> cs;
    bool pinned = false;
    for (int k = 0; k < 4; ++k) {
      if (std::bernoulli_distribution(0.25)(rng)) {
        cs.push_back(Congruence{witness, 0});
        pinned = true;
      } else {
        cs.push_back(Congruence::make(witness, md(rng)));
      }
    }
    Congruence c = crt_system(cs);
    CHECK(c.holds(witness));
    if (pinned) {
      CHECK(c.modulus == 0);
      CHECK(c.residue == witness);
    }
  }
}

TEST_CASE("solve_zero_pair") {
  CHECK(solve_zero_pair(3, 7, 2) == 10);
  CHECK(solve_zero_pair(123, 1, 5) == 5);
  Int x = solve_zero_pair(0, 4, 6);
  CHECK(x % 12 == 0);
  CHECK_THROWS_AS(solve_zero_pair(1, 4, 6), Error);
}

TEST_CASE("solve_zero_pair satisfies both congruences on random inputs") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> md(1, 80), yd(0, 400);
  for (int it = 0; it < 400; ++it) {
    Int a = md(rng), b = md(rng);
    Int y = Int(yd(rng)) * gcd(a, b);  // force solvability
    Int x = solve_zero_pair(y, a, b);
    CHECK((x - y) % a == 0);
    CHECK(x % b == 0);
    CHECK(x >= 0);
    CHECK(x <= std::max(lcm(a, b), b));
  }
}

TEST_CASE("gcd lcm product identity") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> dist(0, 500);
  for (int it = 0; it < 500; ++it) {
    Int a = dist(rng), b = dist(rng);
    CHECK(gcd(a, b) * lcm(a, b) == a * b);
  }
}

TEST_CASE("gcd and lcm match the divisor-scan oracle") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> dist(0, 80);
  for (int it = 0; it < 200; ++it) {
    Int a = dist(rng), b = dist(rng);
    CHECK(gcd(a, b) == brute_gcd(a, b));
    CHECK(lcm(a, b) == brute_lcm(a, b));
  }
}

TEST_CASE("gcd lcm distributivity") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> dist(1, 60);
  for (int it = 0; it < 300; ++it) {
    std::vector<Int> as;
    for (int k = 0; k < 3; ++k) as.push_back(dist(rng));
    Int b = dist(rng);
    // gcd([a1..an], b) == [ (a1,b), ..., (an,b) ]
    Int left = gcd(lcm_list(as), b);
    Int right = 1;
    for (const Int& a : as) right = lcm(right, gcd(a, b));
    CHECK(left == right);
    // [ (a1..an), b ] == ( [a1,b], ..., [an,b] )
    left = lcm(gcd_list(as), b);
    right = 0;
    for (const Int& a : as) right = gcd(right, lcm(a, b));
    CHECK(left == right);
  }
}

TEST_CASE("gcd lcm homogeneity") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> dist(1, 200), cd(1, 20);
  for (int it = 0; it < 300; ++it) {
    Int a = dist(rng), b = dist(rng), c = cd(rng);
    CHECK(gcd(c * a, c * b) == c * gcd(a, b));
    CHECK(lcm(c * a, c * b) == c * lcm(a, b));
  }
}

TEST_CASE("congruence canonicalization") {
  Congruence c = Congruence::make(-1, 5);
  CHECK(c.residue == 4);
  c = Congruence::make(17, 5);
  CHECK(c.residue == 2);
  c = Congruence::make(-3, 0);
  CHECK(c.residue == -3);
  CHECK(c.holds(-3));
  CHECK(!c.holds(3));
}

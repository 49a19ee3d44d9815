#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pgo/oracle.hpp"
#include "pgo/padic.hpp"

using namespace pgo;

TEST_CASE("context rejects bad primes") {
  CHECK_THROWS_AS(PadicContext(2), bad_scalar);
  CHECK_THROWS_AS(PadicContext(9), bad_scalar);
  PadicContext F(5);
  CHECK(F.u() == 2);  // least non-residue mod 5
  PadicContext F13(13);
  CHECK(F13.u() == 2);
  PadicContext F7(7);
  CHECK(F7.u() == 3);
}

TEST_CASE("valuation") {
  PadicContext F(5);
  CHECK(F.valuation(Rat(1)) == 0);
  CHECK(F.valuation(Rat(5)) == 1);
  CHECK(F.valuation(Rat(50)) == 2);  // 50 = 2 * 5^2
  CHECK(F.valuation(Rat(1, 125)) == -3);
  CHECK_THROWS_AS(F.valuation(Rat(0)), bad_scalar);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-400, 400);
  for (int i = 0; i < 500; ++i) {
    Rat a = Rat(d(rng)) / Rat(1 + std::abs(d(rng)));
    Rat b = Rat(d(rng)) / Rat(1 + std::abs(d(rng)));
    if (a == 0 || b == 0) continue;
    CHECK(F.valuation(a * b) == F.valuation(a) + F.valuation(b));
  }
}

TEST_CASE("square classes") {
  PadicContext F(5);
  CHECK(F.square_class(Rat(1)) == SquareClass::One);
  CHECK(F.square_class(Rat(5)) == SquareClass::Pi);
  CHECK(F.square_class(Rat(50)) == SquareClass::U);  // unit part 2
  CHECK(F.square_class(Rat(4)) == SquareClass::One);
  CHECK(F.square_class(F.u() * F.pi()) == SquareClass::UPi);

  // group law: class(xy) = class(x) class(y), randomized
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-300, 300);
  int done = 0;
  while (done < 1200) {
    Rat a = Rat(d(rng)) / Rat(1 + std::abs(d(rng)));
    Rat b = Rat(d(rng)) / Rat(1 + std::abs(d(rng)));
    if (a == 0 || b == 0) continue;
    CHECK(F.square_class(a * b) == F.square_class(a) * F.square_class(b));
    ++done;
  }

  // {1, u, pi, u pi} are pairwise inequivalent
  auto reps = F.class_reps();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK((F.square_class(reps[i] / reps[j]) == SquareClass::One) == (i == j));
}

TEST_CASE("hilbert symbol closed form") {
  for (unsigned long p : {5UL, 13UL, 7UL}) {
    PadicContext F(p);
    auto reps = F.class_reps();
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-50, 50);

    // (1, x) always splits
    for (const Rat& x : reps) CHECK(F.hilbert_symbol(Rat(1), x) == 1);

    // symmetry, bimultiplicativity, (a, -a) = 1 over class representatives
    for (const Rat& a : reps)
      for (const Rat& b : reps) {
        CHECK(F.hilbert_symbol(a, b) == F.hilbert_symbol(b, a));
        CHECK(F.hilbert_symbol(a, -a) == 1);
        for (const Rat& c : reps)
          CHECK(F.hilbert_symbol(a, b * c) ==
                F.hilbert_symbol(a, b) * F.hilbert_symbol(a, c));
      }
  }
  PadicContext F5(5);
  CHECK(F5.hilbert_symbol(F5.u(), F5.pi()) == -1);
  CHECK(F5.hilbert_symbol(F5.u(), F5.u()) == 1);  // p == 1 mod 4
}

TEST_CASE("hilbert symbol agrees with the mod-p^3 search oracle") {
  for (unsigned long p : {5UL, 13UL}) {
    PadicContext F(p);
    auto reps = F.class_reps();
    for (const Rat& a : reps)
      for (const Rat& b : reps)
        CHECK(F.hilbert_symbol(a, b) == oracle_hilbert_symbol(F, a, b));
  }
}

TEST_CASE("norms of the unramified quadratic extension") {
  PadicContext F(5);
  CHECK(F.is_norm(Rat(1)));
  CHECK_FALSE(F.is_norm(F.pi()));
  CHECK(F.is_norm(F.u()));

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> d(-40, 40);
  int done = 0;
  while (done < 300) {
    Rat a(d(rng)), b(d(rng));
    Ext x(a, b, F.u());
    if (x.is_zero()) continue;
    CHECK(F.is_norm(x.norm()));
    CHECK(F.is_norm(x.norm()) == (F.valuation(x.norm()) % 2 == 0));
    // is_norm(x) iff square class in {1, u}
    Rat r = Rat(1 + std::abs(d(rng))) / Rat(1 + std::abs(d(rng)));
    auto c = F.square_class(r);
    CHECK(F.is_norm(r) == (c == SquareClass::One || c == SquareClass::U));
    ++done;
  }
}

TEST_CASE("arithmetic in E = F(sqrt u)") {
  PadicContext F(5);
  Rat u = F.u();
  Ext x(Rat(3), Rat(2), u);
  CHECK(x.conj() == Ext(Rat(3), Rat(-2), u));
  Ext y(Rat(1), Rat(1), u);
  CHECK(y.norm() == 1 - u);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int i = 0; i < 200; ++i) {
    Ext a(Rat(d(rng)), Rat(d(rng)), u);
    Ext b(Rat(d(rng)), Rat(d(rng)), u);
    CHECK((a * b).norm() == a.norm() * b.norm());
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!b.is_zero()) {
      CHECK(a / b * b == a);
      CHECK((inverse(b) * b) == Ext(Rat(1)));
    }
  }
  CHECK_THROWS_AS(inverse(Ext()), bad_scalar);
}

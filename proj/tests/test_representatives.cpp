// The classification results come with explicit lists of orbit
// representatives; these tests pin the lists against the invariant
// machinery.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "pgo/orbits.hpp"
#include "pgo/realization.hpp"

using namespace pgo;

TEST_CASE("symplectic rank 2: open orbits are diag(1, v) over the classes") {
  Realization sp(RealTag::SP, 2, 5);
  const PadicContext& F = sp.F();
  std::set<Realization::OrbitInvariant> invs;
  for (unsigned c = 0; c < 4; ++c) {
    auto x = sp.diagonal_element({Rat(1), F.class_rep(static_cast<SquareClass>(c))});
    auto inv = sp.orbit_invariants(x);
    CHECK(inv.m == 2);
    invs.insert(inv);
  }
  CHECK(invs.size() == 4);
  CHECK(open_orbit_count(sp.descriptor()) == 4);
}

TEST_CASE("symplectic odd rank: the two listed open representatives") {
  // rank 3: slots (1, 1, -1) and (1, -u, -pi)
  for (unsigned long p : {5UL, 13UL}) {
    Realization sp(RealTag::SP, 3, p);
    const PadicContext& F = sp.F();
    auto a = sp.diagonal_element({Rat(1), Rat(1), Rat(-1)});
    auto b = sp.diagonal_element({Rat(1), -F.u(), -F.pi()});
    auto ia = sp.orbit_invariants(a);
    auto ib = sp.orbit_invariants(b);
    CHECK(ia.m == 3);
    CHECK(ib.m == 3);
    CHECK_FALSE(ia == ib);
    CHECK(open_orbit_count(sp.descriptor()) == 2);
    // every other generic diagonal falls into one of the two orbits
    auto reps = F.class_reps();
    for (unsigned c0 = 0; c0 < 4; ++c0)
      for (unsigned c1 = 0; c1 < 4; ++c1)
        for (unsigned c2 = 0; c2 < 4; ++c2) {
          auto x = sp.diagonal_element({reps[c0], reps[c1], reps[c2]});
          auto ix = sp.orbit_invariants(x);
          CHECK((ix == ia || ix == ib));
        }
  }
}

TEST_CASE("symplectic even rank: the five listed open representatives") {
  // rank 4: (1,-1,1,-1); (1,v,1,-1) for v in {-u, -pi, u pi};
  // (1,-u,-pi,u pi)
  Realization sp(RealTag::SP, 4, 5);
  const PadicContext& F = sp.F();
  std::vector<std::vector<Rat>> slots = {
      {Rat(1), Rat(-1), Rat(1), Rat(-1)},
      {Rat(1), -F.u(), Rat(1), Rat(-1)},
      {Rat(1), -F.pi(), Rat(1), Rat(-1)},
      {Rat(1), F.u() * F.pi(), Rat(1), Rat(-1)},
      {Rat(1), -F.u(), -F.pi(), F.u() * F.pi()},
  };
  std::set<Realization::OrbitInvariant> invs;
  for (const auto& s : slots) {
    auto inv = sp.orbit_invariants(sp.diagonal_element(s));
    CHECK(inv.m == 4);
    invs.insert(inv);
  }
  CHECK(invs.size() == 5);
  CHECK(open_orbit_count(sp.descriptor()) == 5);
}

TEST_CASE("unitary representatives I and I_pi") {
  for (int n : {2, 3, 4}) {
    Realization un(RealTag::UNITARY, n, 5);
    const PadicContext& F = un.F();
    auto id = un.identity_vplus();
    std::vector<Rat> with_pi(static_cast<size_t>(n), Rat(1));
    with_pi.back() = F.pi();  // slot n-1, i.e. the top-left entry
    auto ipi = un.diagonal_element(with_pi);
    bool same = un.same_orbit(id, ipi);
    // distinct exactly when the rank is even (det class modulo norms)
    CHECK(same == (n % 2 == 1));
    // pi I is always conjugate to I: the determinant classes agree for
    // even n, and odd n has a single open orbit
    std::vector<Rat> all_pi(static_cast<size_t>(n), F.pi());
    auto pid = un.diagonal_element(all_pi);
    CHECK(un.same_orbit(id, pid));
  }
}

TEST_CASE("quaternionic rank 2: the seven listed nonzero representatives") {
  Realization t3(RealTag::TYPE3, 2, 5);
  const SquareClass one = SquareClass::One, pi = SquareClass::Pi,
                    upi = SquareClass::UPi;
  std::set<Realization::OrbitInvariant> invs;
  // rank-2 list: (1,1), (1,pi), (1,u pi), (pi, u pi)
  for (auto pair : std::vector<std::pair<SquareClass, SquareClass>>{
           {one, one}, {one, pi}, {one, upi}, {pi, upi}}) {
    auto inv = t3.orbit_invariants(
        t3.type3_block_diagonal({pair.first, pair.second}));
    CHECK(inv.m == 2);
    invs.insert(inv);
  }
  CHECK(invs.size() == 4);
  // rank-1 list: one block of each attainable class, through the canonical
  // representatives of the three parity classes
  std::set<Realization::OrbitInvariant> rank1;
  for (const char* payload : {"100", "010", "001"}) {
    auto x = t3.representative({1, payload});
    auto inv = t3.orbit_invariants(x);
    CHECK(inv.m == 1);
    CHECK(inv.payload == payload);
    rank1.insert(inv);
  }
  CHECK(rank1.size() == 3);
  CHECK(invs.size() + rank1.size() == 7);  // 4(k+1) - 1 nonzero classes
}

TEST_CASE("gamma sends the slot basis to the dual slots in every model") {
  for (auto [tag, rank] : std::vector<std::pair<RealTag, int>>{
           {RealTag::SP, 3}, {RealTag::UNITARY, 3}, {RealTag::GL, 3},
           {RealTag::TYPE3, 2}}) {
    Realization real(tag, rank, 5);
    // I+ = sum of slots; psi(I+) = I- = sum of dual slots; gamma must give
    // gamma(X_j) = Y_{k-j}, so summing over j recovers I- slotwise.  Check
    // slot by slot through scaled diagonals: gamma(sum x_j X_j) has slot
    // coordinates reversed and negated relative to psi of the inverse.
    std::vector<Rat> coords;
    for (int j = 0; j < rank; ++j) coords.push_back(Rat(2 + j));
    auto x = real.diagonal_element(coords);
    auto flipped = real.gamma_flip(x);
    // compare against psi of the elementwise-inverted diagonal with
    // reversed slot order: psi(diag(y)) has slot j equal to -1/y_j, so
    // gamma(diag(x)) = psi(diag(1/x reversed))
    std::vector<Rat> recip;
    for (int j = rank - 1; j >= 0; --j) recip.push_back(Rat(1) / coords[static_cast<size_t>(j)]);
    auto expect = real.psi(real.diagonal_element(recip));
    bool eq = (tag == RealTag::UNITARY || tag == RealTag::TYPE3)
                  ? flipped.e == expect.e
                  : flipped.q == expect.q;
    CHECK(eq);
  }
}

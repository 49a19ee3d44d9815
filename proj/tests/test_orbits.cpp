#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pgo/orbits.hpp"

using namespace pgo;

namespace {

GradedDescriptor desc(GType t, int k, int ell, int d, int e, int kappa = 1) {
  GradedDescriptor g;
  g.gtype = t;
  g.k = k;
  g.ell = ell;
  g.d = d;
  g.e = e;
  g.one_type = (t == GType::III) ? OneType{OneType::Kind::B, 0}
                                 : OneType{OneType::Kind::A, kappa};
  return g;
}

GradedDescriptor sp_desc(int n) { return desc(GType::II, n - 1, 1, 1, 1); }
GradedDescriptor un_desc(int n) { return desc(GType::II, n - 1, 1, 2, 2); }
GradedDescriptor t3_desc(int k) { return desc(GType::III, k, 3, 4, 4); }
GradedDescriptor gl_desc(int n) { return desc(GType::I, n - 1, 1, 2, 0); }

}  // namespace

TEST_CASE("open orbit counts") {
  CHECK(open_orbit_count(gl_desc(4)) == 1);
  CHECK(open_orbit_count(desc(GType::I, 2, 1, 4, 4)) == 1);
  CHECK(open_orbit_count(sp_desc(1)) == 1);
  CHECK(open_orbit_count(sp_desc(2)) == 4);
  CHECK(open_orbit_count(sp_desc(3)) == 2);   // k = 2 even
  CHECK(open_orbit_count(sp_desc(4)) == 5);   // k = 3 >= 2 odd
  CHECK(open_orbit_count(sp_desc(6)) == 5);
  CHECK(open_orbit_count(un_desc(2)) == 2);   // k odd
  CHECK(open_orbit_count(un_desc(3)) == 1);
  CHECK(open_orbit_count(desc(GType::II, 1, 1, 5, 3)) == 4);
  CHECK(open_orbit_count(t3_desc(0)) == 3);
  CHECK(open_orbit_count(t3_desc(1)) == 4);
  CHECK(open_orbit_count(t3_desc(3)) == 4);
}

TEST_CASE("nonzero orbit counts") {
  CHECK(nonzero_orbit_count(gl_desc(5)) == 5);
  CHECK(nonzero_orbit_count(sp_desc(2)) == 5);
  CHECK(nonzero_orbit_count(sp_desc(3)) == 7);    // 7p, p = 1
  CHECK(nonzero_orbit_count(sp_desc(4)) == 12);   // 7p + 5, p = 1
  CHECK(nonzero_orbit_count(sp_desc(5)) == 14);
  CHECK(nonzero_orbit_count(sp_desc(6)) == 19);
  CHECK(nonzero_orbit_count(un_desc(2)) == 3);
  CHECK(nonzero_orbit_count(un_desc(3)) == 4);    // 3p + 1, p = 1
  CHECK(nonzero_orbit_count(un_desc(4)) == 6);
  CHECK(nonzero_orbit_count(un_desc(5)) == 7);
  CHECK(nonzero_orbit_count(un_desc(6)) == 9);
  CHECK(nonzero_orbit_count(desc(GType::II, 1, 1, 5, 3)) == 5);
  // the full orbit count for the quaternionic family includes the zero
  // orbit: nonzero + 1 = 4(k+1)
  for (int k = 0; k <= 3; ++k)
    CHECK(nonzero_orbit_count(t3_desc(k)) + 1 == 4 * (k + 1));
}

TEST_CASE("orbit counts match the rank stratification") {
  // the orbits of rank m are the open orbits of the rank-m member
  auto strat = [](auto mk, int n) {
    long total = 0;
    for (int m = 1; m <= n; ++m) total += open_orbit_count(mk(m));
    return total;
  };
  for (int n = 1; n <= 8; ++n) {
    CHECK(strat(sp_desc, n) == nonzero_orbit_count(sp_desc(n)));
    CHECK(strat(gl_desc, n) == nonzero_orbit_count(gl_desc(n)));
    if (n >= 2) CHECK(strat(un_desc, n) == nonzero_orbit_count(un_desc(n)));
  }
  for (int k = 0; k <= 6; ++k) {
    long total = 0;
    for (int m = 1; m <= k + 1; ++m) total += open_orbit_count(t3_desc(m - 1));
    CHECK(total == nonzero_orbit_count(t3_desc(k)));
  }
  // open <= nonzero on all covered descriptors
  for (int n = 1; n <= 8; ++n) {
    CHECK(open_orbit_count(sp_desc(n)) <= nonzero_orbit_count(sp_desc(n)));
    CHECK(open_orbit_count(t3_desc(n - 1)) <= nonzero_orbit_count(t3_desc(n - 1)));
  }
}

TEST_CASE("chi0 image") {
  CHECK(chi0_image(gl_desc(3)) == Chi0Image::FullUnits);
  CHECK(chi0_image(sp_desc(4)) == Chi0Image::Squares);
  CHECK(chi0_image(sp_desc(5)) == Chi0Image::FullUnits);
  CHECK(chi0_image(un_desc(4)) == Chi0Image::NormsE);
  CHECK(chi0_image(un_desc(5)) == Chi0Image::FullUnits);
  CHECK(chi0_image(un_desc(2)) == Chi0Image::NormsE);
  // the rank-2 orthogonal family with e = 2 has d > 2
  CHECK(chi0_image(desc(GType::II, 1, 1, 8, 2)) == Chi0Image::IndexTwo);
  CHECK(chi0_image(t3_desc(2)) == Chi0Image::Squares);
}

TEST_CASE("rank of Q_X") {
  CHECK(rank_QX(0, 1, 1) == 0);
  CHECK(rank_QX(2, 1, 1) == 3);
  CHECK(rank_QX(3, 3, 4) == 21);
  for (int ell : {1, 3})
    for (int d : {1, 2, 4, 8})
      for (int m = 0; m < 8; ++m)
        CHECK(rank_QX(m + 1, ell, d) > rank_QX(m, ell, d));
}

TEST_CASE("P-orbit counts") {
  CHECK(p_open_orbit_count(gl_desc(4)) == 1);
  CHECK(p_open_orbit_count(sp_desc(3)) == 16);   // 4^k, k = 2
  CHECK(p_open_orbit_count(un_desc(3)) == 4);    // 2^k
  CHECK(p_open_orbit_count(t3_desc(1)) == 9);    // 3^{k+1}
  CHECK(p_open_orbit_count(desc(GType::II, 1, 1, 5, 3)) == 4);
}

TEST_CASE("t involution") {
  std::vector<Rat> z(4, Rat(0));
  CHECK(t_involution(z) == z);

  std::vector<Rat> s{Rat(3), Rat(5)};
  auto t = t_involution(s);
  CHECK(t[0] == Rat(-8));
  CHECK(t[1] == Rat(5));

  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> d(-20, 20);
  for (int k = 0; k <= 10; ++k) {
    std::vector<Rat> v;
    for (int i = 0; i <= k; ++i) v.push_back(Rat(d(rng)) / Rat(1 + (i % 3)));
    CHECK(t_involution(t_involution(v)) == v);
  }
}

TEST_CASE("character data") {
  CharacterData sp = character_data(sp_desc(4));
  CHECK(sp.degrees == std::vector<int>{4, 3, 2, 1});
  CHECK(sp.a_exponents[1] == std::vector<int>{0, 1, 1, 1});
  CHECK(sp.a_exponents_minus[1] == std::vector<int>{-1, -1, -1, 0});

  CharacterData t3 = character_data(t3_desc(2));
  CHECK(t3.degrees == std::vector<int>{6, 4, 2});

  GradedDescriptor r1 = t3_desc(0);
  CHECK(character_data(r1).degrees == std::vector<int>{2});

  CharacterData gl3 = character_data(desc(GType::I, 1, 4, 8, 0, 2));
  CHECK(gl3.degrees == std::vector<int>{4, 2});

  // degrees strictly decrease
  for (int j = 0; j + 1 < 4; ++j) CHECK(sp.degrees[j] > sp.degrees[j + 1]);
}

TEST_CASE("orbit summary") {
  OrbitSummary s = orbit_summary(sp_desc(4));
  REQUIRE(s.nonzero_orbits.has_value());
  CHECK(*s.nonzero_orbits == 12);
  CHECK(s.open_orbits == 5);
  CHECK(s.open_orbits <= *s.nonzero_orbits);
  CHECK(s.p_open_orbits >= s.open_orbits);

  // a family without a complete closed form still reports open orbits
  OrbitSummary s9 = orbit_summary(desc(GType::II, 3, 1, 8, 2));
  CHECK_FALSE(s9.nonzero_orbits.has_value());
  CHECK(s9.open_orbits == 2);
}

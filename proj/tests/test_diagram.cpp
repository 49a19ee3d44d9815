#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgo/catalog.hpp"
#include "pgo/diagram.hpp"

using namespace pgo;

namespace {

DynkinDiagram chain(int n) {
  DynkinDiagram d;
  for (int i = 1; i <= n; ++i) d.add_vertex(i);
  for (int i = 1; i < n; ++i) d.add_edge(i, i + 1, 1, 0);
  return d;
}

}  // namespace

TEST_CASE("root systems from Cartan data") {
  // A2: 6 roots, highest root alpha1 + alpha2
  RootSystemData a2 = roots_from_cartan(chain(2));
  CHECK(a2.count() == 6);
  CHECK(a2.highest_root == std::vector<int>{1, 1});

  // C2: 8 roots
  DynkinDiagram c2;
  c2.add_vertex(1);
  c2.add_vertex(2);
  c2.add_edge(1, 2, 2, -1);  // 2 long
  CHECK(roots_from_cartan(c2).count() == 8);

  // A3 brute-force cross-check: 12 roots, highest (1,1,1)
  RootSystemData a3 = roots_from_cartan(chain(3));
  CHECK(a3.count() == 12);
  CHECK(a3.highest_root == std::vector<int>{1, 1, 1});

  // E7: 126 roots (dimension 133 minus rank 7)
  WeightedSatakeDiagram e7 = diagram_e7_split();
  RootSystemData re7 = roots_from_cartan(e7.base);
  CHECK(re7.count() == 126);

  // C6 split: 2 * 6^2 = 72... sp(12) has 6^2 + 6 = wait, C_n has 2n^2 roots
  WeightedSatakeDiagram c6 = diagram_sp_split(6);
  CHECK(roots_from_cartan(c6.base).count() == 2 * 6 * 6);

  // affine data is rejected
  DynkinDiagram aff;
  aff.add_vertex(1);
  aff.add_vertex(2);
  aff.add_edge(1, 2, 4, 0);
  CHECK_FALSE(aff.finite_type());
  CHECK_THROWS_AS(roots_from_cartan(aff), bad_diagram);
}

TEST_CASE("affine extension") {
  // C_n: the added vertex attaches to the far end with a double bond and is
  // itself long
  WeightedSatakeDiagram c4 = diagram_sp_split(4);
  WeightedSatakeDiagram e = extend_diagram(c4);
  CHECK(e.base.vertices().size() == 5);
  int nv = 5;  // new id = max + 1
  CHECK(e.base.adjacent(nv, 1));
  CHECK(e.base.cartan(nv, 1) == -1);  // <alpha_1, omega^v> = -1... new is long
  CHECK(e.base.cartan(1, nv) == -2);
  CHECK_FALSE(e.base.adjacent(nv, 2));

  // D_m: attaches next to the chain end
  WeightedSatakeDiagram d5 = diagram_d_split_end(5);
  WeightedSatakeDiagram ed = extend_diagram(d5);
  int nd = 6;
  CHECK(ed.base.adjacent(nd, 2));
  CHECK(ed.base.cartan(nd, 2) == -1);
  CHECK_FALSE(ed.base.adjacent(nd, 1));

  // A1: the rule produces the (-2, -2) pairing
  WeightedSatakeDiagram a1 = diagram_sl_split(1);
  WeightedSatakeDiagram ea = extend_diagram(a1);
  CHECK(ea.base.cartan(1, 2) == -2);
  CHECK(ea.base.cartan(2, 1) == -2);
}

TEST_CASE("single descent steps") {
  // split D_m with the chain end circled: one step gives the one-vertex
  // diagram, the next one the empty diagram
  for (int m : {4, 5, 6}) {
    WeightedSatakeDiagram s = diagram_d_split_end(m);
    WeightedSatakeDiagram t = descent_step(s);
    REQUIRE(t.base.vertices().size() == 1);
    CHECK(t.circled == t.base.vertices()[0]);
    CHECK_FALSE(t.is_black(t.circled));
    CHECK(descent_step(t).empty());
  }

  // the rank-1 B2 diagram descends to the empty diagram in one step
  WeightedSatakeDiagram b = diagram_c_quaternion(1);
  CHECK(descent_step(b).empty());

  // split C_n drops to a split C_{n-1} shape
  WeightedSatakeDiagram c5 = diagram_sp_split(5);
  WeightedSatakeDiagram c4 = descent_step(c5);
  CHECK(c4.base.vertices().size() == 4);
  Catalog cat = Catalog::load_default();
  GradedDescriptor d4 = cat.lookup(c4);
  CHECK(d4.case_id == "6");
  CHECK(d4.k + 1 == 4);
}

TEST_CASE("descent classification of the catalog families") {
  struct Case {
    WeightedSatakeDiagram s;
    int rank;
    OneType t;
  };
  std::vector<Case> cases;
  cases.push_back({diagram_sl_split(1), 1, {OneType::Kind::A, 1}});
  cases.push_back({diagram_sl_split(3), 3, {OneType::Kind::A, 1}});
  cases.push_back({diagram_sl_division(2, 2), 2, {OneType::Kind::A, 2}});
  cases.push_back({diagram_sl_division(3, 2), 3, {OneType::Kind::A, 2}});
  cases.push_back({diagram_sl_division(2, 3), 2, {OneType::Kind::A, 3}});
  cases.push_back({diagram_unitary(2), 2, {OneType::Kind::A, 1}});
  cases.push_back({diagram_unitary(4), 4, {OneType::Kind::A, 1}});
  cases.push_back({diagram_b_split(4), 2, {OneType::Kind::A, 1}});
  cases.push_back({diagram_b_kernel3(4), 2, {OneType::Kind::A, 1}});
  cases.push_back({diagram_sp_split(2), 2, {OneType::Kind::A, 1}});
  cases.push_back({diagram_sp_split(6), 6, {OneType::Kind::A, 1}});
  cases.push_back({diagram_c_quaternion(1), 1, {OneType::Kind::B, 0}});
  cases.push_back({diagram_c_quaternion(3), 3, {OneType::Kind::B, 0}});
  cases.push_back({diagram_d_split_end(6), 2, {OneType::Kind::A, 1}});
  cases.push_back({diagram_d_quasi_split(5), 2, {OneType::Kind::A, 1}});
  cases.push_back({diagram_d_kernel4(6), 2, {OneType::Kind::A, 1}});
  cases.push_back({diagram_d_fork_tip(3), 3, {OneType::Kind::A, 1}});
  cases.push_back({diagram_d_fork_tip(5), 5, {OneType::Kind::A, 1}});
  cases.push_back({diagram_d_quaternion(3), 3, {OneType::Kind::A, 1}});
  cases.push_back({diagram_e7_split(), 3, {OneType::Kind::A, 1}});

  for (const auto& c : cases) {
    DescentResult r = descent_classify(c.s);
    CHECK(r.rank == c.rank);
    CHECK(r.one_type == c.t);
    CHECK(r.trail.size() <= c.s.base.vertices().size() + 2);
    // every intermediate diagram keeps the invariants (validate throws on
    // violation; also re-check the circled vertex directly)
    for (const auto& t : r.trail) {
      if (t.empty()) continue;
      t.validate();
      CHECK_FALSE(t.is_black(t.circled));
      CHECK(t.partner(t.circled) == t.circled);
    }
  }
}

TEST_CASE("each descent step lands in the same family, one size down") {
  Catalog cat = Catalog::load_default();
  struct Fam {
    WeightedSatakeDiagram start;
    std::string case_id;
    int rank;
  };
  std::vector<Fam> fams = {
      {diagram_sp_split(6), "6", 6},
      {diagram_unitary(5), "2", 5},
      {diagram_c_quaternion(4), "7", 4},
      {diagram_d_quaternion(4), "12", 4},
      {diagram_sl_split(4), "1", 4},
      {diagram_sl_division(4, 2), "1", 4},
  };
  for (const auto& f : fams) {
    WeightedSatakeDiagram cur = f.start;
    for (int r = f.rank; r >= 3; --r) {
      GradedDescriptor d = cat.lookup(cur);
      CHECK(d.k + 1 == r);
      // rank-2 members of some families look up under their rank-2 row
      if (r > 2) CHECK(d.case_id == f.case_id);
      cur = descent_step(cur);
    }
  }
}

TEST_CASE("descent rejects malformed inputs") {
  WeightedSatakeDiagram s = diagram_sl_split(2);
  s.black[s.circled] = true;
  CHECK_THROWS_AS(descent_classify(s), bad_diagram);

  WeightedSatakeDiagram e;
  CHECK_THROWS_AS(descent_classify(e), bad_diagram);
}

TEST_CASE("diagram JSON round trip") {
  for (const WeightedSatakeDiagram& s :
       {diagram_unitary(3), diagram_d_quaternion(3), diagram_sp_split(4),
        diagram_c_quaternion(2)}) {
    std::string js = diagram_to_json(s);
    WeightedSatakeDiagram t = diagram_from_json(js);
    CHECK(t.base.vertices() == s.base.vertices());
    CHECK(t.circled == s.circled);
    for (int v : s.base.vertices()) {
      CHECK(t.is_black(v) == s.is_black(v));
      CHECK(t.partner(v) == s.partner(v));
      for (int w : s.base.vertices())
        CHECK(t.base.cartan(v, w) == s.base.cartan(v, w));
    }
    // classification is unchanged
    DescentResult r1 = descent_classify(s);
    DescentResult r2 = descent_classify(t);
    CHECK(r1.rank == r2.rank);
    CHECK(r1.one_type == r2.one_type);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgo/catalog.hpp"

using namespace pgo;

TEST_CASE("type trichotomy") {
  CHECK(classify_type(1, 0) == GType::I);
  CHECK(classify_type(4, 0) == GType::I);
  CHECK(classify_type(1, 4) == GType::I);
  CHECK(classify_type(1, 1) == GType::II);
  CHECK(classify_type(1, 2) == GType::II);
  CHECK(classify_type(1, 3) == GType::II);
  CHECK(classify_type(3, 4) == GType::III);
  CHECK_THROWS_AS(classify_type(2, 1), bad_diagram);
}

TEST_CASE("catalog lookups") {
  Catalog cat = Catalog::load_default();

  GradedDescriptor d8 = cat.lookup(diagram_d_split_end(6));
  CHECK(d8.case_id == "8");
  CHECK(d8.k == 1);
  CHECK(d8.ell == 1);
  CHECK(d8.d == 2 * 6 - 4);
  CHECK(d8.e == 0);
  CHECK(d8.gtype == GType::I);
  CHECK(to_string(d8.one_type) == "(A,1)");

  GradedDescriptor d9 = cat.lookup(diagram_d_quasi_split(6));
  CHECK(d9.case_id == "9");
  CHECK(d9.e == 2);
  CHECK(d9.gtype == GType::II);

  GradedDescriptor d10 = cat.lookup(diagram_d_kernel4(6));
  CHECK(d10.case_id == "10");
  CHECK(d10.e == 4);
  CHECK(d10.gtype == GType::I);

  GradedDescriptor d11 = cat.lookup(diagram_d_fork_tip(4));
  CHECK(d11.case_id == "11");
  CHECK(d11.k == 3);
  CHECK(d11.d == 4);
  CHECK(d11.e == 0);

  GradedDescriptor d12 = cat.lookup(diagram_d_quaternion(4));
  CHECK(d12.case_id == "12");
  CHECK(d12.k == 3);
  CHECK(d12.d == 4);
  CHECK(d12.e == 4);
  CHECK(d12.gtype == GType::I);

  GradedDescriptor d13 = cat.lookup(diagram_e7_split());
  CHECK(d13.case_id == "13");
  CHECK(d13.k == 2);
  CHECK(d13.d == 8);
  CHECK(d13.gtype == GType::I);
  CHECK(dim_vplus(d13) == 27);

  GradedDescriptor d6 = cat.lookup(diagram_sp_split(5));
  CHECK(d6.case_id == "6");
  CHECK(d6.k == 4);
  CHECK(d6.ell == 1);
  CHECK(d6.d == 1);
  CHECK(d6.e == 1);
  CHECK(d6.gtype == GType::II);
  CHECK(d6.realization_tag == "sp");

  GradedDescriptor d2 = cat.lookup(diagram_unitary(4));
  CHECK(d2.case_id == "2");
  CHECK(d2.k == 3);
  CHECK(d2.d == 2);
  CHECK(d2.e == 2);
  CHECK(d2.realization_tag == "unitary");

  GradedDescriptor d1 = cat.lookup(diagram_sl_split(4));
  CHECK(d1.case_id == "1");
  CHECK(d1.ell == 1);
  CHECK(d1.d == 2);
  CHECK(d1.e == 0);
  CHECK(d1.gtype == GType::I);
  CHECK(d1.realization_tag == "gl");

  GradedDescriptor d1q = cat.lookup(diagram_sl_division(3, 2));
  CHECK(d1q.case_id == "1");
  CHECK(d1q.ell == 4);
  CHECK(d1q.d == 8);
  CHECK(to_string(d1q.one_type) == "(A,2)");
  CHECK(d1q.realization_tag.empty());  // only delta = 1 has a model here

  GradedDescriptor d7 = cat.lookup(diagram_c_quaternion(3));
  CHECK(d7.case_id == "7");
  CHECK(d7.k == 2);
  CHECK(d7.ell == 3);
  CHECK(d7.d == 4);
  CHECK(d7.e == 4);
  CHECK(d7.gtype == GType::III);
  CHECK(to_string(d7.one_type) == "B");

  GradedDescriptor d5 = cat.lookup(diagram_c_quaternion(2));
  CHECK(d5.case_id == "5");
  CHECK(d5.gtype == GType::III);

  GradedDescriptor d7r1 = cat.lookup(diagram_c_quaternion(1));
  CHECK(d7r1.case_id == "7");
  CHECK(d7r1.k == 0);
  CHECK(d7r1.realization_tag == "ortho1");

  GradedDescriptor d3 = cat.lookup(diagram_b_split(5));
  CHECK(d3.case_id == "3");
  CHECK(d3.k == 1);
  CHECK(d3.e == 1);
  CHECK(d3.d == 2 * 5 - 5);
  CHECK(d3.source == "text-derived");

  GradedDescriptor d4 = cat.lookup(diagram_b_kernel3(5));
  CHECK(d4.case_id == "4");
  CHECK(d4.e == 3);
  CHECK(d4.gtype == GType::II);
}

TEST_CASE("dimension formula") {
  Catalog cat = Catalog::load_default();
  for (int n = 2; n <= 6; ++n) {
    GradedDescriptor sp = cat.lookup(diagram_sp_split(n));
    CHECK(dim_vplus(sp) == n * (n + 1) / 2);
    GradedDescriptor un = cat.lookup(diagram_unitary(n));
    CHECK(dim_vplus(un) == n * n);
    GradedDescriptor gl = cat.lookup(diagram_sl_split(n));
    CHECK(dim_vplus(gl) == n * n);
  }
  for (int r = 1; r <= 3; ++r) {
    GradedDescriptor t3 = cat.lookup(diagram_c_quaternion(r));
    int k = r - 1;
    CHECK(dim_vplus(t3) == (k + 1) * (2 * k + 3));
  }
  // k = 0 reduces to ell
  GradedDescriptor r1 = cat.lookup(diagram_c_quaternion(1));
  CHECK(dim_vplus(r1) == 3);
}

TEST_CASE("rejects non-catalog diagrams") {
  Catalog cat = Catalog::load_default();
  // G2 is not a catalog family
  WeightedSatakeDiagram g2;
  g2.base.add_vertex(1);
  g2.base.add_vertex(2);
  g2.base.add_edge(1, 2, 3, +1);
  g2.circled = 1;
  CHECK_THROWS_WITH_AS(cat.lookup(g2),
                       "not a regular parabolic commutative grading",
                       bad_diagram);

  // split C with the short end circled is not a table entry
  WeightedSatakeDiagram c(diagram_sp_split(3));
  c.circled = 1;
  CHECK_THROWS_AS(cat.lookup(c), bad_diagram);
}

#include "pgo/realization.hpp"

TEST_CASE("catalog descriptors agree with the matrix-model descriptors") {
  Catalog cat = Catalog::load_default();
  auto agree = [&](const WeightedSatakeDiagram& s, RealTag tag, int rank) {
    GradedDescriptor a = cat.lookup(s);
    GradedDescriptor b = Realization(tag, rank, 5).descriptor();
    CHECK(a.k == b.k);
    CHECK(a.ell == b.ell);
    CHECK(a.d == b.d);
    CHECK(a.e == b.e);
    CHECK(a.gtype == b.gtype);
    CHECK(a.one_type == b.one_type);
    CHECK(dim_vplus(a) == dim_vplus(b));
  };
  for (int n = 2; n <= 6; ++n) {
    agree(diagram_sp_split(n), RealTag::SP, n);
    agree(diagram_unitary(n), RealTag::UNITARY, n);
    agree(diagram_sl_split(n), RealTag::GL, n);
  }
  for (int r = 2; r <= 4; ++r)
    agree(diagram_c_quaternion(r), RealTag::TYPE3, r);
  agree(diagram_c_quaternion(1), RealTag::ORTHO1, 1);
}

TEST_CASE("catalog file matches the embedded copy") {
  Catalog emb = Catalog::load_default();
  Catalog file = Catalog::load_file(std::string(PGO_SOURCE_DIR) + "/data/catalog.json");
  REQUIRE(emb.rows().size() == file.rows().size());
  for (size_t i = 0; i < emb.rows().size(); ++i) {
    CHECK(emb.rows()[i].case_id == file.rows()[i].case_id);
    CHECK(emb.rows()[i].d_expr == file.rows()[i].d_expr);
    CHECK(emb.rows()[i].source == file.rows()[i].source);
  }
}

#ifndef PGO_CATALOG_HPP
#define PGO_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "pgo/diagram.hpp"

namespace pgo {

enum class GType { I, II, III };

const char* to_string(GType t);

/// Structural fingerprint of a regular graded Lie algebra: catalog row id,
/// rank k+1, the dimensions (ell, d, e), the rank-1 type and the orbit type.
struct GradedDescriptor {
  std::string case_id;
  int k = 0;  // rank = k + 1
  int ell = 1;
  int d = 0;
  int e = 0;
  OneType one_type;
  GType gtype = GType::I;
  std::string realization_tag;  // empty when no matrix model is provided
  int size_param = 0;           // family-specific (n, m or delta)
  std::string source;           // "tabulated" or "text-derived"

  int rank() const { return k + 1; }
  int kappa() const { return one_type.kappa(); }
};

GType classify_type(int ell, int e);
long dim_vplus(const GradedDescriptor& desc);

/// Table-driven classification of weighted Satake-Tits diagrams.
class Catalog {
 public:
  /// Loads the bundled catalog data (or an explicit JSON file).
  static Catalog load_default();
  static Catalog load_file(const std::string& path);
  static Catalog load_text(const std::string& json_text);

  /// Matches the diagram against the catalog families; throws bad_diagram
  /// with "not a regular parabolic commutative grading" when nothing fits.
  /// The rank and 1-type are cross-checked against the descent algorithm.
  GradedDescriptor lookup(const WeightedSatakeDiagram& s) const;

  struct Row {
    std::string case_id;
    std::string name;
    std::string ell_expr, d_expr, e_expr;
    std::string type;
    std::string one_type;
    std::string source;
    std::string realization;
    std::string notes;
  };

  const std::vector<Row>& rows() const { return rows_; }
  const Row& row(const std::string& case_id) const;

 private:
  std::vector<Row> rows_;
};

/// Builders for the catalog families (fixtures are generated from these).
WeightedSatakeDiagram diagram_sl_split(int rank);            // (1), delta = 1
WeightedSatakeDiagram diagram_sl_division(int rank, int delta);  // (1)
WeightedSatakeDiagram diagram_unitary(int rank);             // (2)
WeightedSatakeDiagram diagram_b_split(int m);                // (3): o(q(m,m-1))
WeightedSatakeDiagram diagram_b_kernel3(int m);              // (4): o(q(m+1,m-2))
WeightedSatakeDiagram diagram_sp_split(int rank);            // (6)
WeightedSatakeDiagram diagram_c_quaternion(int rank);        // (5)/(7)
WeightedSatakeDiagram diagram_d_split_end(int m);            // (8)
WeightedSatakeDiagram diagram_d_quasi_split(int m);          // (9)
WeightedSatakeDiagram diagram_d_kernel4(int m);              // (10)
WeightedSatakeDiagram diagram_d_fork_tip(int n);             // (11): D_{2n}
WeightedSatakeDiagram diagram_d_quaternion(int n);           // (12): D_{2n}
WeightedSatakeDiagram diagram_e7_split();                    // (13)

}  // namespace pgo

#endif  // PGO_CATALOG_HPP

#ifndef PGO_DIAGRAM_HPP
#define PGO_DIAGRAM_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pgo/padic.hpp"

namespace pgo {

struct bad_diagram : std::domain_error {
  using std::domain_error::domain_error;
};

/// Dynkin diagram stored through its off-diagonal Cartan integers:
/// cartan(i,j) = <alpha_j, alpha_i^v> for adjacent vertices i != j.
class DynkinDiagram {
 public:
  void add_vertex(int id);
  /// Adds an edge described by bond multiplicity and arrow direction:
  /// dir = 0 none, +1 arrow i -> j (j short), -1 arrow j -> i (i short).
  /// mult 4 with dir 0 stores the (-2,-2) pairing.
  void add_edge(int i, int j, int mult, int dir);
  void add_edge_cartan(int i, int j, int a_ij, int a_ji);

  const std::vector<int>& vertices() const { return verts_; }
  bool has_vertex(int id) const;
  std::vector<int> neighbors(int id) const;
  int cartan(int i, int j) const;  // 2 if i == j, 0 if non-adjacent
  bool adjacent(int i, int j) const;

  DynkinDiagram induced(const std::vector<int>& keep) const;
  std::vector<int> component_of(int id) const;
  bool connected() const;

  /// (mult, dir) encoding of the edge, inverse of add_edge.
  std::pair<int, int> edge_mult_dir(int i, int j) const;

  /// Symmetrized root lengths d_i = (alpha_i, alpha_i)/2, normalized so the
  /// minimum is 1 on each component.  Throws if not symmetrizable.
  std::map<int, Rat> root_lengths() const;

  /// True when the symmetrized Cartan matrix is positive definite.
  bool finite_type() const;

 private:
  std::vector<int> verts_;
  std::map<std::pair<int, int>, int> cartan_;
};

/// Full root data of a finite-type diagram, coordinates in the simple basis
/// (ordered as diagram.vertices()).
struct RootSystemData {
  std::vector<int> simple_ids;
  std::vector<std::vector<int>> all_roots;
  std::vector<int> highest_root;

  size_t count() const { return all_roots.size(); }
};

RootSystemData roots_from_cartan(const DynkinDiagram& d);

/// Satake-Tits diagram with one circled white vertex.
struct WeightedSatakeDiagram {
  DynkinDiagram base;
  std::map<int, bool> black;   // vertex -> is black
  std::map<int, int> pairing;  // involution on white vertices; self = none
  int circled = -1;

  bool empty() const { return base.vertices().empty(); }
  bool is_black(int id) const;
  int partner(int id) const;
  void validate() const;
};

/// Attaches the lowest-root vertex of the affine extension to the connected
/// component containing the circled vertex.  The new vertex is white,
/// unpaired and not circled; its id is returned through the diagram
/// (max id + 1).
WeightedSatakeDiagram extend_diagram(const WeightedSatakeDiagram& s);

/// One step of the diagrammatic descent: extend, remove the circled vertex
/// together with the white vertices reachable from it through chains of
/// black vertices (and those black vertices, and removed vertices' arrow
/// partners), then circle the added vertex and keep its component.
WeightedSatakeDiagram descent_step(const WeightedSatakeDiagram& s);

struct OneType {
  enum class Kind { A, B } kind = Kind::A;
  int delta = 1;  // meaningful for kind A

  int kappa() const { return kind == Kind::B ? 2 : delta; }
  bool operator==(const OneType& o) const {
    return kind == o.kind && (kind == Kind::B || delta == o.delta);
  }
};

std::string to_string(const OneType& t);

struct DescentResult {
  int rank = 0;
  OneType one_type;
  std::vector<WeightedSatakeDiagram> trail;  // diagrams after each step
};

DescentResult descent_classify(const WeightedSatakeDiagram& s);

/// JSON (de)serialization, schema:
/// {"vertices":[...], "edges":[[i,j,mult,dir],...], "color":{"id":"white"},
///  "pairing":{"id":id}, "circled": id}
WeightedSatakeDiagram diagram_from_json(const std::string& text);
std::string diagram_to_json(const WeightedSatakeDiagram& s);

}  // namespace pgo

#endif  // PGO_DIAGRAM_HPP

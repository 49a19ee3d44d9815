#ifndef PGO_REALIZATION_HPP
#define PGO_REALIZATION_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pgo/catalog.hpp"
#include "pgo/mat.hpp"
#include "pgo/orbits.hpp"
#include "pgo/qform.hpp"

namespace pgo {

enum class RealTag { GL, SP, UNITARY, TYPE3, ORTHO1 };

const char* to_string(RealTag t);
std::optional<RealTag> real_tag_from_string(const std::string& s);

using Rng = std::mt19937_64;

/// A concrete matrix model of (G, V^+).
///
/// Coordinates:
///   GL      V+ = M(n, F), V- = M(n, F)
///   SP      V+ = Sym(n, F), V- = Sym(n, F)
///   UNITARY V+ = Herm(n, E), V- = Herm(n, E)
///   TYPE3   V+ = Sym_J(2(k+1), E), V- = the opposite block,
///           both cut out by a J-reality condition
///   ORTHO1  V+ = F^3 with the anisotropic ternary form q(x) = x0^2 - u x1^2
///           - pi x2^2
/// The slot of the j-th strongly orthogonal root is the (k-j)-th diagonal
/// position (block position for TYPE3, anti-diagonal position for GL).
class Realization {
 public:
  Realization(RealTag tag, int rank, unsigned long prime);

  RealTag tag() const { return tag_; }
  int rank() const { return rank_; }       // k + 1
  int k() const { return rank_ - 1; }
  int msize() const { return msize_; }     // coordinate matrix size
  const PadicContext& F() const { return F_; }

  GradedDescriptor descriptor() const;
  long dim_vplus_model() const;

  struct VElem {
    QMat q;  // GL, SP (coordinate matrix), ORTHO1 (3x1 vector)
    EMat e;  // UNITARY, TYPE3
    bool minus = false;  // true for elements of V-
  };

  struct GElem {
    QMat g_q;        // GL (g1), SP, ORTHO1 (rotation)
    QMat g2_q;       // GL only
    EMat g_e;        // UNITARY, TYPE3 (the G0-part)
    Rat mu = Rat(1);
    bool sqrtu_twist = false;  // TYPE3: extra sqrt(u) factor
  };

  VElem zero_vplus() const;
  VElem identity_vplus() const;  // I+ (all diagonal slots equal to 1)
  GElem identity_group() const;

  bool is_vplus(const VElem& x) const;   // model membership check
  bool is_vminus(const VElem& y) const;

  VElem act(const GElem& g, const VElem& x) const;  // V+ or V-
  GElem compose(const GElem& g, const GElem& h) const;  // act(g, act(h, .))

  /// Decomposition into the eigencomponents of the diagonal coroots:
  /// one component per diagonal slot (a, a) and per pair (a, b), a < b.
  struct Component {
    int i, j;  // slot indices, i <= j; i == j is a diagonal slot
    VElem part;
  };
  std::vector<Component> grade_decompose(const VElem& x) const;

  Rat delta(int j, const VElem& x) const;   // j-th fundamental invariant
  Rat nabla(int j, const VElem& y) const;   // counterpart on V-

  VElem psi(const VElem& x) const;          // signed inverse, lands in V-
  VElem gamma_flip(const VElem& x) const;   // involution exchanging V+-, V-

  /// Verifies [psi(x), x] = H0 in the ambient 2N x 2N model.
  bool psi_triple_ok(const VElem& x) const;

  struct OrbitInvariant {
    int m = 0;            // rank of the element
    std::string payload;  // model-specific complete invariant
    bool operator==(const OrbitInvariant& o) const {
      return m == o.m && payload == o.payload;
    }
    bool operator<(const OrbitInvariant& o) const {
      return m != o.m ? m < o.m : payload < o.payload;
    }
    std::string to_string() const;
  };

  OrbitInvariant orbit_invariants(const VElem& x) const;
  VElem representative(const OrbitInvariant& inv) const;
  bool same_orbit(const VElem& x, const VElem& y) const;

  /// Brute-force enumeration of the distinct nonzero orbit classes from the
  /// diagonal grid of square-class representatives.
  std::vector<OrbitInvariant> enumerate_orbit_classes() const;

  /// The quadratic form Q_X on V- (SP and TYPE3 models).
  QForm q_form_QX(const VElem& x) const;

  /// Labels of the open P-orbit of x (requires all delta_j(x) != 0).
  std::vector<std::string> p_orbit_class(const VElem& x) const;

  GElem random_group_element(Rng& rng) const;
  GElem random_unipotent(Rng& rng) const;    // unipotent radical of P
  VElem random_generic(Rng& rng) const;      // delta_0 != 0
  VElem random_flag_generic(Rng& rng) const; // all delta_j != 0

  Rat chi0_of(const GElem& g) const;  // character of the 0-th invariant

  /// Diagonal element with the given slot coordinates (slot j = coefficient
  /// of the j-th strongly orthogonal root space; TYPE3 uses the class-
  /// canonical block scaled by the coordinate).
  VElem diagonal_element(const std::vector<Rat>& slots) const;

  /// TYPE3 only: block diagonal with one canonical block per slot, choosing
  /// the rank-1 invariant class of each block.
  VElem type3_block_diagonal(const std::vector<SquareClass>& slot_classes) const;

  /// ORTHO1 helpers: the ternary form and a vector with q-class c.
  Rat ortho_q(const VElem& x) const;

 private:
  RealTag tag_;
  int rank_;
  int msize_;
  PadicContext F_;

  int slot_pos(int j) const { return k() - j; }  // diagonal position of slot j

  EMat sqrt_u_mat(int n) const;
  EMat jpi_block() const;
  EMat big_j() const;
  QMat ortho_gram() const;

  // TYPE3 block-space helpers
  EMat splus_block(const Rat& a, const Rat& b, const Rat& c) const;
  EMat lblock(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1) const;
  EMat offplus_block(const Rat& z0, const Rat& z1, const Rat& w0,
                     const Rat& w1) const;
  EMat canonical_splus(SquareClass c) const;
  std::vector<EMat> vminus_basis() const;  // TYPE3 V- F-basis
  std::vector<QMat> vminus_basis_q() const;  // SP V- F-basis

  friend struct RealizationTestAccess;
};

}  // namespace pgo

#endif  // PGO_REALIZATION_HPP

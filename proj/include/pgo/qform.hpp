#ifndef PGO_QFORM_HPP
#define PGO_QFORM_HPP

#include <set>
#include <string>
#include <vector>

#include "pgo/padic.hpp"

namespace pgo {

/// Diagonal quadratic form over Q_p.  The nonzero diagonal coefficients are
/// kept verbatim; a degenerate form carries the dimension of its radical
/// separately.
struct QForm {
  std::vector<Rat> coeffs;
  int radical_dim = 0;

  int rank() const { return static_cast<int>(coeffs.size()); }
  int dim() const { return rank() + radical_dim; }
};

struct WittData {
  int witt_index = 0;
  QForm anisotropic_kernel;  // canonical representative, rank <= 4
};

SquareClass discriminant(const PadicContext& F, const QForm& q);
int hasse_invariant(const PadicContext& F, const QForm& q);
bool is_isotropic(const PadicContext& F, const QForm& q);
WittData witt_decompose(const PadicContext& F, const QForm& q);
bool equivalent(const PadicContext& F, const QForm& q1, const QForm& q2);
bool similar(const PadicContext& F, const QForm& q1, const QForm& q2);

/// Square classes of the nonzero values represented by an anisotropic form
/// of rank <= 4.  For an isotropic form every class is represented.
std::set<SquareClass> represented_classes(const PadicContext& F, const QForm& q);

/// Canonical representative of the equivalence class: rank, discriminant and
/// Hasse invariant realized by a sorted list of class representatives.
QForm canonical_form(const PadicContext& F, const QForm& q);

/// Stable label for the similarity class (minimal canonical form over the
/// four scalings).
std::string similarity_class_id(const PadicContext& F, const QForm& q);

QForm scale_form(const QForm& q, const Rat& c);

}  // namespace pgo

#endif  // PGO_QFORM_HPP

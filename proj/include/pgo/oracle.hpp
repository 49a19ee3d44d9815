#ifndef PGO_ORACLE_HPP
#define PGO_ORACLE_HPP

#include "pgo/qform.hpp"

namespace pgo {

// Independent oracles used to cross-validate the closed-form arithmetic.
// They avoid the Hilbert-symbol/Hasse-invariant path entirely.
//
// Solvability of z^2 = a x^2 + b y^2 is decided by an exhaustive search for
// a primitive solution modulo p^3.  For odd p and coefficients of valuation
// at most 1, a primitive solution mod p^3 lifts to Z_p: some coordinate x_i
// is a unit with v(2 a_i x_i) <= 1, so Newton iteration applies because
// v(F(x)) >= 3 > 2 v(F'(x)).  Conversely a p-adic solution reduces mod p^3.

/// Hilbert symbol by brute force (all inputs reduced to square-class
/// representatives internally).
int oracle_hilbert_symbol(const PadicContext& F, const Rat& a, const Rat& b);

/// Isotropy of a rank <= 4 form by the same mod-p^3 primitive-solution
/// search.
bool oracle_is_isotropic_modp3(const PadicContext& F, const QForm& q);

/// Witt index through the residue forms: after square-class normalization
/// q = q0 + pi q1 with unit forms q_i, and witt(q) = witt(q0 mod p)
/// + witt(q1 mod p).  The residue Witt indices are computed by exhaustive
/// isotropic-vector search and exact splitting over the field with p
/// elements; the identification with the p-adic Witt index is the same
/// Hensel lifting as above applied to both unimodular pieces.
int oracle_witt_index(const PadicContext& F, const QForm& q);

bool oracle_is_isotropic(const PadicContext& F, const QForm& q);

/// Equivalence test: q1 ~ q2 iff q1 + (-q2) is hyperbolic.
bool oracle_equivalent(const PadicContext& F, const QForm& q1, const QForm& q2);

/// Does q represent the class of c?
bool oracle_represents(const PadicContext& F, const QForm& q, const Rat& c);

}  // namespace pgo

#endif  // PGO_ORACLE_HPP

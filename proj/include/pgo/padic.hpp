#ifndef PGO_PADIC_HPP
#define PGO_PADIC_HPP

#include <gmpxx.h>
#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace pgo {

using Rat = mpq_class;
using Int = mpz_class;

/// Square classes of F*/F*^2 for F = Q_p, p odd: {1, u, pi, u*pi}.
enum class SquareClass : unsigned { One = 0, U = 1, Pi = 2, UPi = 3 };

/// Group law of F*/F*^2 ~= (Z/2)^2.
constexpr SquareClass operator*(SquareClass a, SquareClass b) {
  return static_cast<SquareClass>(static_cast<unsigned>(a) ^
                                  static_cast<unsigned>(b));
}

const char* to_string(SquareClass c);
std::ostream& operator<<(std::ostream& os, SquareClass c);

struct bad_scalar : std::domain_error {
  using std::domain_error::domain_error;
};

/// The ambient field Q_p for an odd prime p, with a fixed non-square
/// unit u (least positive non-residue mod p) and uniformizer pi = p.
class PadicContext {
 public:
  explicit PadicContext(unsigned long prime);

  const Int& p() const { return p_; }
  const Rat& u() const { return u_; }
  const Rat& pi() const { return pi_; }

  /// v_p(x) for x != 0.
  long valuation(const Rat& x) const;

  /// Legendre symbol of the unit part of x (x a p-adic unit times square),
  /// +1 or -1.
  int legendre_unit(const Rat& x) const;

  SquareClass square_class(const Rat& x) const;
  bool is_square(const Rat& x) const { return square_class(x) == SquareClass::One; }

  /// Representative of a square class: 1, u, pi or u*pi.
  Rat class_rep(SquareClass c) const;

  /// Hilbert symbol (a,b)_p, closed form for odd p.
  int hilbert_symbol(const Rat& a, const Rat& b) const;

  /// x is a norm from E = F(sqrt(u)) iff v(x) is even.
  bool is_norm(const Rat& x) const;

  /// All four class representatives, indexed by SquareClass.
  std::array<Rat, 4> class_reps() const;

 private:
  Int p_;
  Rat u_;
  Rat pi_;
  Int leg_exp_;  // (p-1)/2
};

/// Element of the unramified quadratic extension E = F(sqrt(u)),
/// stored as a + b*sqrt(u).  The twist u is carried along; a plain
/// rational embeds with the sentinel u = 0 and b = 0.
struct Ext {
  Rat a, b, u;

  Ext() : a(0), b(0), u(0) {}
  Ext(const Rat& re) : a(re), b(0), u(0) {}        // NOLINT(google-explicit-*)
  Ext(long re) : a(re), b(0), u(0) {}              // NOLINT(google-explicit-*)
  Ext(const Rat& re, const Rat& im, const Rat& twist) : a(re), b(im), u(twist) {}

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  Ext conj() const { return Ext(a, -b, u); }
  Rat norm() const { return a * a - u * b * b; }

  Ext operator-() const { return Ext(-a, -b, u); }
};

Rat merge_twist(const Rat& x, const Rat& y);

Ext operator+(const Ext& x, const Ext& y);
Ext operator-(const Ext& x, const Ext& y);
Ext operator*(const Ext& x, const Ext& y);
Ext inverse(const Ext& x);
Ext operator/(const Ext& x, const Ext& y);
bool operator==(const Ext& x, const Ext& y);
inline bool operator!=(const Ext& x, const Ext& y) { return !(x == y); }
std::ostream& operator<<(std::ostream& os, const Ext& x);

/// Scalar adapters used by the generic matrix code.
inline Rat conj_val(const Rat& x) { return x; }
inline Ext conj_val(const Ext& x) { return x.conj(); }
inline bool is_zero_val(const Rat& x) { return x == 0; }
inline bool is_zero_val(const Ext& x) { return x.is_zero(); }
inline Rat inv_val(const Rat& x) { return Rat(1) / x; }
inline Ext inv_val(const Ext& x) { return inverse(x); }

}  // namespace pgo

#endif  // PGO_PADIC_HPP

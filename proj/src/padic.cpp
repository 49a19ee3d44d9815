#include "pgo/padic.hpp"

#include <ostream>

namespace pgo {

const char* to_string(SquareClass c) {
  switch (c) {
    case SquareClass::One: return "1";
    case SquareClass::U: return "u";
    case SquareClass::Pi: return "pi";
    case SquareClass::UPi: return "upi";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, SquareClass c) {
  return os << to_string(c);
}

namespace {

bool is_prime_ul(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

PadicContext::PadicContext(unsigned long prime) : p_(prime) {
  if (!is_prime_ul(prime))
    throw bad_scalar("prime expected, got " + std::to_string(prime));
  if (prime == 2) throw bad_scalar("p = 2 is not supported");
  leg_exp_ = (p_ - 1) / 2;
  // least positive quadratic non-residue mod p
  for (unsigned long r = 2;; ++r) {
    Int rr(r);
    Int pw;
    mpz_powm(pw.get_mpz_t(), rr.get_mpz_t(), leg_exp_.get_mpz_t(),
             p_.get_mpz_t());
    if (pw != 1) {
      u_ = Rat(rr);
      break;
    }
  }
  pi_ = Rat(p_);
}

long PadicContext::valuation(const Rat& x) const {
  if (x == 0) throw bad_scalar("valuation of zero");
  Int num = x.get_num();
  Int den = x.get_den();
  Int tmp;
  long vn = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), num.get_mpz_t(), p_.get_mpz_t()));
  long vd = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t()));
  return vn - vd;
}

int PadicContext::legendre_unit(const Rat& x) const {
  if (x == 0) throw bad_scalar("square class of zero");
  Int num = x.get_num();
  Int den = x.get_den();
  Int n1, d1;
  mpz_remove(n1.get_mpz_t(), num.get_mpz_t(), p_.get_mpz_t());
  mpz_remove(d1.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t());
  Int unit = n1 * d1;  // unit part up to squares (den^2 absorbed)
  Int m = unit % p_;
  if (m < 0) m += p_;
  Int pw;
  mpz_powm(pw.get_mpz_t(), m.get_mpz_t(), leg_exp_.get_mpz_t(), p_.get_mpz_t());
  return pw == 1 ? 1 : -1;
}

SquareClass PadicContext::square_class(const Rat& x) const {
  long v = valuation(x);
  int leg = legendre_unit(x);
  unsigned bits = 0;
  if (leg < 0) bits |= 1;
  if (v % 2 != 0) bits |= 2;
  return static_cast<SquareClass>(bits);
}

Rat PadicContext::class_rep(SquareClass c) const {
  switch (c) {
    case SquareClass::One: return Rat(1);
    case SquareClass::U: return u_;
    case SquareClass::Pi: return pi_;
    case SquareClass::UPi: return u_ * pi_;
  }
  throw bad_scalar("bad square class");
}

std::array<Rat, 4> PadicContext::class_reps() const {
  return {Rat(1), u_, pi_, u_ * pi_};
}

int PadicContext::hilbert_symbol(const Rat& a, const Rat& b) const {
  if (a == 0 || b == 0) throw bad_scalar("hilbert symbol of zero");
  long al = valuation(a), be = valuation(b);
  int leg_ua = legendre_unit(a);
  int leg_ub = legendre_unit(b);
  int leg_m1 = legendre_unit(Rat(-1));
  int s = 1;
  if ((al % 2 != 0) && (be % 2 != 0) && leg_m1 < 0) s = -s;
  if ((be % 2 != 0) && leg_ua < 0) s = -s;
  if ((al % 2 != 0) && leg_ub < 0) s = -s;
  return s;
}

bool PadicContext::is_norm(const Rat& x) const {
  return valuation(x) % 2 == 0;
}

Rat merge_twist(const Rat& x, const Rat& y) {
  if (x == 0) return y;
  if (y == 0 || x == y) return x;
  throw bad_scalar("mixed quadratic extensions");
}

Ext operator+(const Ext& x, const Ext& y) {
  return Ext(x.a + y.a, x.b + y.b, merge_twist(x.u, y.u));
}

Ext operator-(const Ext& x, const Ext& y) {
  return Ext(x.a - y.a, x.b - y.b, merge_twist(x.u, y.u));
}

Ext operator*(const Ext& x, const Ext& y) {
  Rat u = merge_twist(x.u, y.u);
  return Ext(x.a * y.a + u * x.b * y.b, x.a * y.b + x.b * y.a, u);
}

Ext inverse(const Ext& x) {
  if (x.is_zero()) throw bad_scalar("division by zero in E");
  Rat n = x.norm();
  return Ext(x.a / n, -x.b / n, x.u);
}

Ext operator/(const Ext& x, const Ext& y) { return x * inverse(y); }

bool operator==(const Ext& x, const Ext& y) {
  return x.a == y.a && x.b == y.b && (x.b == 0 || x.u == y.u || x.u == 0 || y.u == 0);
}

std::ostream& operator<<(std::ostream& os, const Ext& x) {
  os << x.a;
  if (x.b != 0) os << (x.b > 0 ? "+" : "") << x.b << "*sqrt(" << x.u << ")";
  return os;
}

}  // namespace pgo

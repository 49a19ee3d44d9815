#include "pgo/oracle.hpp"

#include <algorithm>
#include <vector>

namespace pgo {

namespace {

/// The coefficient reduced to an integer of valuation 0 or 1 (same square
/// class), by pure integer manipulation.
long reduce_coeff(const PadicContext& F, const Rat& c) {
  long p = F.p().get_si();
  Int num = c.get_num(), den = c.get_den();
  Int n1, d1;
  long vn = static_cast<long>(
      mpz_remove(n1.get_mpz_t(), num.get_mpz_t(), F.p().get_mpz_t()));
  long vd = static_cast<long>(
      mpz_remove(d1.get_mpz_t(), den.get_mpz_t(), F.p().get_mpz_t()));
  long v = vn - vd;
  Int unit = n1 * d1;  // unit part modulo squares
  Int m = unit % (p * p);
  if (m < 0) m += p * p;
  long val = m.get_si();
  if ((v % 2 + 2) % 2 == 1) val *= p;
  return val;  // valuation 0 or 1, fits easily in long for small p
}

long mod_pow3(const PadicContext& F) {
  long p = F.p().get_si();
  return p * p * p;
}

/// #solutions of z^2 - a x^2 - b y^2 == 0 (mod p^3), all residues.
/// Split as (z, x) against y via histograms over Z/p^3.
long count_solutions_3var(long a, long b, long p3) {
  std::vector<long> h1(static_cast<size_t>(p3), 0), h2(static_cast<size_t>(p3), 0);
  for (long z = 0; z < p3; ++z) {
    long z2 = (z * z) % p3;
    for (long x = 0; x < p3; ++x) {
      long v = (z2 - a % p3 * x % p3 * x) % p3;
      v = ((v % p3) + p3) % p3;
      ++h1[static_cast<size_t>(v)];
    }
  }
  for (long y = 0; y < p3; ++y) {
    long v = ((b % p3) * y % p3 * y) % p3;
    v = ((v % p3) + p3) % p3;
    ++h2[static_cast<size_t>(v)];
  }
  long total = 0;
  for (long r = 0; r < p3; ++r) total += h1[static_cast<size_t>(r)] * h2[static_cast<size_t>(r)];
  return total;
}

/// #solutions of z^2 - a x^2 - b y^2 == 0 (mod p), all residues.
long count_solutions_3var_modp(long a, long b, long p) {
  long total = 0;
  for (long z = 0; z < p; ++z)
    for (long x = 0; x < p; ++x)
      for (long y = 0; y < p; ++y) {
        long v = (z * z - a % p * x % p * x - b % p * y % p * y) % p;
        if (((v % p) + p) % p == 0) ++total;
      }
  return total;
}

// --- exact linear algebra over the residue field -------------------------

struct Fp {
  long p;
  long add(long a, long b) const { return (a + b) % p; }
  long sub(long a, long b) const { return ((a - b) % p + p) % p; }
  long mul(long a, long b) const { return (a % p) * (b % p) % p; }
  long inv(long a) const {
    long r = 1, b = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
};

using FpMat = std::vector<std::vector<long>>;

/// Witt index of a nondegenerate symmetric Gram matrix over F_p by
/// exhaustive isotropic-vector search and explicit splitting.
int witt_index_fp(Fp f, FpMat g) {
  int witt = 0;
  while (true) {
    int n = static_cast<int>(g.size());
    if (n <= 0) return witt;
    // search for an isotropic vector; three coordinates always suffice when
    // n >= 3 because every ternary form over F_p is isotropic
    int vars = std::min(n, 3);
    std::vector<long> vec(static_cast<size_t>(n), 0);
    bool found = false;
    std::vector<long> c(static_cast<size_t>(vars), 0);
    while (!found) {
      bool allzero = true;
      for (long x : c) allzero &= (x == 0);
      if (!allzero) {
        long q = 0;
        for (int i = 0; i < vars; ++i)
          for (int j = 0; j < vars; ++j)
            q = f.add(q, f.mul(c[static_cast<size_t>(i)],
                               f.mul(g[static_cast<size_t>(i)][static_cast<size_t>(j)],
                                     c[static_cast<size_t>(j)])));
        if (q == 0) {
          for (int i = 0; i < vars; ++i) vec[static_cast<size_t>(i)] = c[static_cast<size_t>(i)];
          found = true;
          break;
        }
      }
      int i = 0;
      while (i < vars && c[static_cast<size_t>(i)] == f.p - 1) {
        c[static_cast<size_t>(i)] = 0;
        ++i;
      }
      if (i == vars) break;
      ++c[static_cast<size_t>(i)];
    }
    if (!found) return witt;

    // hyperbolic partner: w with B(v, w) != 0
    auto bform = [&](const std::vector<long>& x, const std::vector<long>& y) {
      long s = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          s = f.add(s, f.mul(x[static_cast<size_t>(i)],
                             f.mul(g[static_cast<size_t>(i)][static_cast<size_t>(j)],
                                   y[static_cast<size_t>(j)])));
      return s;
    };
    int w_idx = -1;
    std::vector<long> w(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      std::fill(w.begin(), w.end(), 0);
      w[static_cast<size_t>(i)] = 1;
      if (bform(vec, w) != 0) {
        w_idx = i;
        break;
      }
    }
    if (w_idx < 0) return witt;  // degenerate; should not happen
    {
      // make the partner isotropic: w -= q(w) / (2 B(v,w)) v
      long bvw = bform(vec, w);
      long qw = bform(w, w);
      long c2 = f.mul(qw, f.inv(f.mul(2 % f.p, bvw)));
      for (int t = 0; t < n; ++t)
        w[static_cast<size_t>(t)] =
            f.sub(w[static_cast<size_t>(t)], f.mul(c2, vec[static_cast<size_t>(t)]));
    }

    // complement of span(v, w) under B: solve B(v, x) = 0, B(w, x) = 0 on the
    // standard basis reduced by the pair
    std::vector<std::vector<long>> basis;
    for (int i = 0; i < n; ++i) {
      std::vector<long> e(static_cast<size_t>(n), 0);
      e[static_cast<size_t>(i)] = 1;
      // x' = x - B(x,w)/B(v,w) v - B(x,v)/B(w,v) w
      long bvw = bform(vec, w);
      long cv = f.mul(bform(e, w), f.inv(bvw));
      long cw = f.mul(bform(e, vec), f.inv(bvw));
      for (int t = 0; t < n; ++t) {
        e[static_cast<size_t>(t)] = f.sub(e[static_cast<size_t>(t)], f.mul(cv, vec[static_cast<size_t>(t)]));
        e[static_cast<size_t>(t)] = f.sub(e[static_cast<size_t>(t)], f.mul(cw, w[static_cast<size_t>(t)]));
      }
      basis.push_back(e);
    }
    // extract n-2 independent vectors from the projections (Gaussian)
    std::vector<std::vector<long>> indep;
    std::vector<std::vector<long>> rows = basis;
    std::vector<std::vector<long>> echelon;
    for (auto& r : rows) {
      std::vector<long> cur = r;
      for (size_t e2 = 0; e2 < echelon.size(); ++e2) {
        // eliminate with recorded pivots
        const auto& er = echelon[e2];
        int pcol = -1;
        for (int t = 0; t < n; ++t)
          if (er[static_cast<size_t>(t)] != 0) {
            pcol = t;
            break;
          }
        if (pcol < 0) continue;
        long factor = f.mul(cur[static_cast<size_t>(pcol)], f.inv(er[static_cast<size_t>(pcol)]));
        for (int t = 0; t < n; ++t)
          cur[static_cast<size_t>(t)] = f.sub(cur[static_cast<size_t>(t)], f.mul(factor, er[static_cast<size_t>(t)]));
      }
      bool nonzero = false;
      for (long xv : cur) nonzero |= (xv != 0);
      if (nonzero) {
        echelon.push_back(cur);
        indep.push_back(r);
      }
      if (static_cast<int>(indep.size()) == n - 2) break;
    }
    // Gram of the complement
    FpMat g2(indep.size(), std::vector<long>(indep.size(), 0));
    for (size_t i = 0; i < indep.size(); ++i)
      for (size_t j = 0; j < indep.size(); ++j)
        g2[i][j] = bform(indep[i], indep[j]);
    g = g2;
    ++witt;
  }
}

}  // namespace

int oracle_hilbert_symbol(const PadicContext& F, const Rat& a, const Rat& b) {
  long p = F.p().get_si();
  long p3 = mod_pow3(F);
  long ra = reduce_coeff(F, a), rb = reduce_coeff(F, b);
  long total = count_solutions_3var(ra, rb, p3);
  // subtract the non-primitive solutions (all three coordinates divisible
  // by p): they biject with solutions of the congruence mod p counted with
  // multiplicity p^3
  long imprimitive = count_solutions_3var_modp(ra, rb, p) * p * p * p;
  return (total - imprimitive) > 0 ? 1 : -1;
}

int oracle_witt_index(const PadicContext& F, const QForm& q) {
  long p = F.p().get_si();
  std::vector<long> unit_part, pi_part;
  for (const Rat& c : q.coeffs) {
    long r = reduce_coeff(F, c);
    if (r % p == 0)
      pi_part.push_back((r / p) % p);
    else
      unit_part.push_back(r % p);
  }
  Fp f{p};
  int total = 0;
  for (auto* part : {&unit_part, &pi_part}) {
    int n = static_cast<int>(part->size());
    if (n == 0) continue;
    FpMat g(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
      g[static_cast<size_t>(i)][static_cast<size_t>(i)] = ((*part)[static_cast<size_t>(i)] % p + p) % p;
    total += witt_index_fp(f, g);
  }
  return total;
}

bool oracle_is_isotropic(const PadicContext& F, const QForm& q) {
  return oracle_witt_index(F, q) >= 1;
}

bool oracle_is_isotropic_modp3(const PadicContext& F, const QForm& q) {
  if (q.rank() > 4) throw bad_scalar("the mod-p^3 search is limited to rank 4");
  long p = F.p().get_si();
  long p3 = mod_pow3(F);
  std::vector<long> cs;
  for (const Rat& c : q.coeffs) cs.push_back(((reduce_coeff(F, c) % p3) + p3) % p3);
  int n = static_cast<int>(cs.size());
  if (n <= 1) return false;
  // histogram of the first half against the negated second half
  int half = n / 2;
  std::vector<long> h1(static_cast<size_t>(p3), 0), h2(static_cast<size_t>(p3), 0);
  auto fill = [&](std::vector<long>& h, int lo, int hi, bool negate) {
    int vars = hi - lo;
    std::vector<long> x(static_cast<size_t>(vars), 0);
    while (true) {
      long v = 0;
      for (int i = 0; i < vars; ++i)
        v = (v + cs[static_cast<size_t>(lo + i)] * x[static_cast<size_t>(i)] % p3 *
                     x[static_cast<size_t>(i)]) % p3;
      if (negate) v = (p3 - v) % p3;
      ++h[static_cast<size_t>(v)];
      int i = 0;
      while (i < vars && x[static_cast<size_t>(i)] == p3 - 1) {
        x[static_cast<size_t>(i)] = 0;
        ++i;
      }
      if (i == vars) break;
      ++x[static_cast<size_t>(i)];
    }
  };
  fill(h1, 0, half, false);
  fill(h2, half, n, true);
  long total = 0;
  for (long r = 0; r < p3; ++r) total += h1[static_cast<size_t>(r)] * h2[static_cast<size_t>(r)];
  // non-primitive solutions x = p y correspond to q(y) == 0 (mod p), each
  // counted p^n times for the free top digits
  long modp_count = 0;
  {
    std::vector<long> x(static_cast<size_t>(n), 0);
    while (true) {
      long v = 0;
      for (int i = 0; i < n; ++i)
        v = (v + cs[static_cast<size_t>(i)] % p * x[static_cast<size_t>(i)] % p *
                     x[static_cast<size_t>(i)]) % p;
      if (v % p == 0) ++modp_count;
      int i = 0;
      while (i < n && x[static_cast<size_t>(i)] == p - 1) {
        x[static_cast<size_t>(i)] = 0;
        ++i;
      }
      if (i == n) break;
      ++x[static_cast<size_t>(i)];
    }
  }
  long imprimitive = modp_count;
  for (int i = 0; i < n; ++i) imprimitive *= p;
  return (total - imprimitive) > 0;
}

bool oracle_equivalent(const PadicContext& F, const QForm& q1, const QForm& q2) {
  if (q1.rank() != q2.rank() || q1.radical_dim != q2.radical_dim) return false;
  QForm sum = q1;
  for (const Rat& c : q2.coeffs) sum.coeffs.push_back(-c);
  return oracle_witt_index(F, sum) == q1.rank();
}

bool oracle_represents(const PadicContext& F, const QForm& q, const Rat& c) {
  QForm ext = q;
  ext.coeffs.push_back(-c);
  return oracle_is_isotropic(F, ext);
}

}  // namespace pgo

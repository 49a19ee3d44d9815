#include "pgo/realization.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pgo {

const char* to_string(RealTag t) {
  switch (t) {
    case RealTag::GL: return "gl";
    case RealTag::SP: return "sp";
    case RealTag::UNITARY: return "unitary";
    case RealTag::TYPE3: return "type3";
    case RealTag::ORTHO1: return "ortho1";
  }
  return "?";
}

std::optional<RealTag> real_tag_from_string(const std::string& s) {
  if (s == "gl") return RealTag::GL;
  if (s == "sp") return RealTag::SP;
  if (s == "unitary") return RealTag::UNITARY;
  if (s == "type3") return RealTag::TYPE3;
  if (s == "ortho1") return RealTag::ORTHO1;
  return std::nullopt;
}

Realization::Realization(RealTag tag, int rank, unsigned long prime)
    : tag_(tag), rank_(rank), F_(prime) {
  if (tag == RealTag::ORTHO1) {
    if (rank != 1) throw bad_scalar("the rank-1 orthogonal model has rank 1");
    msize_ = 3;
    return;
  }
  if (rank < 1) throw bad_scalar("rank must be positive");
  if (tag == RealTag::TYPE3)
    msize_ = 2 * rank;
  else
    msize_ = rank;
  if (tag == RealTag::UNITARY && rank < 2)
    throw bad_scalar("the unitary model needs rank >= 2");
}

GradedDescriptor Realization::descriptor() const {
  GradedDescriptor d;
  d.k = k();
  d.size_param = rank_;
  d.one_type = OneType{OneType::Kind::A, 1};
  switch (tag_) {
    case RealTag::GL:
      d.case_id = "1";
      d.ell = 1;
      d.d = 2;
      d.e = 0;
      d.gtype = GType::I;
      break;
    case RealTag::SP:
      d.case_id = "6";
      d.ell = 1;
      d.d = 1;
      d.e = 1;
      d.gtype = GType::II;
      break;
    case RealTag::UNITARY:
      d.case_id = "2";
      d.ell = 1;
      d.d = 2;
      d.e = 2;
      d.gtype = GType::II;
      break;
    case RealTag::TYPE3:
      d.case_id = "7";
      d.ell = 3;
      d.d = 4;
      d.e = 4;
      d.gtype = GType::III;
      d.one_type = OneType{OneType::Kind::B, 0};
      break;
    case RealTag::ORTHO1:
      d.case_id = "7";
      d.ell = 3;
      d.d = 4;
      d.e = 4;
      d.gtype = GType::III;
      d.one_type = OneType{OneType::Kind::B, 0};
      break;
  }
  d.realization_tag = to_string(tag_);
  return d;
}

long Realization::dim_vplus_model() const {
  int n = rank_;
  switch (tag_) {
    case RealTag::GL: return static_cast<long>(n) * n;
    case RealTag::SP: return static_cast<long>(n) * (n + 1) / 2;
    case RealTag::UNITARY: return static_cast<long>(n) * n;
    case RealTag::TYPE3: return static_cast<long>(n) * (2 * n + 1);
    case RealTag::ORTHO1: return 3;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// basic building blocks

EMat Realization::jpi_block() const {
  EMat j(2, 2);
  j(0, 1) = Ext(F_.pi());
  j(1, 0) = Ext(Rat(1));
  return j;
}

EMat Realization::big_j() const {
  EMat j(msize_, msize_);
  EMat jp = jpi_block();
  for (int b = 0; b < msize_ / 2; ++b) j.set_block(2 * b, 2 * b, jp);
  return j;
}

QMat Realization::ortho_gram() const {
  QMat g(3, 3);
  g(0, 0) = Rat(1);
  g(1, 1) = -F_.u();
  g(2, 2) = -F_.pi();
  return g;
}

EMat Realization::splus_block(const Rat& a, const Rat& b, const Rat& c) const {
  // [[pi*(a + b sqrt u), c], [c, a - b sqrt u]]
  EMat m(2, 2);
  m(0, 0) = Ext(F_.pi() * a, F_.pi() * b, F_.u());
  m(0, 1) = Ext(c);
  m(1, 0) = Ext(c);
  m(1, 1) = Ext(a, -b, F_.u());
  return m;
}

EMat Realization::lblock(const Rat& x0, const Rat& x1, const Rat& y0,
                         const Rat& y1) const {
  // [[x, pi*y], [conj(y), conj(x)]] with x = x0 + x1 sqrt u, y = y0 + y1 sqrt u
  EMat m(2, 2);
  m(0, 0) = Ext(x0, x1, F_.u());
  m(0, 1) = Ext(F_.pi() * y0, F_.pi() * y1, F_.u());
  m(1, 0) = Ext(y0, -y1, F_.u());
  m(1, 1) = Ext(x0, -x1, F_.u());
  return m;
}

EMat Realization::offplus_block(const Rat& z0, const Rat& z1, const Rat& w0,
                                const Rat& w1) const {
  // [[pi*conj(w), conj(z)], [z, w]]
  EMat m(2, 2);
  m(0, 0) = Ext(F_.pi() * w0, -F_.pi() * w1, F_.u());
  m(0, 1) = Ext(z0, -z1, F_.u());
  m(1, 0) = Ext(z0, z1, F_.u());
  m(1, 1) = Ext(w0, w1, F_.u());
  return m;
}

EMat Realization::canonical_splus(SquareClass c) const {
  // block Y in S+ with -det(Y) in the class c; the class u is not attained
  if (c == SquareClass::U)
    throw bad_scalar("no rank-1 piece with invariant class u in this model");
  static thread_local std::map<std::pair<unsigned long, unsigned>, EMat> cache;
  auto key = std::make_pair(F_.p().get_ui(), static_cast<unsigned>(c));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  long bound = 2 * F_.p().get_si();
  for (long a = 0; a <= bound; ++a)
    for (long b = 0; b <= bound; ++b)
      for (long cc = 0; cc <= bound; ++cc) {
        if (a == 0 && b == 0 && cc == 0) continue;
        Rat det = F_.pi() * (Rat(a) * a - F_.u() * b * b) - Rat(cc) * cc;
        if (det == 0) continue;
        if (F_.square_class(-det) == c) {
          EMat m = splus_block(Rat(a), Rat(b), Rat(cc));
          cache.emplace(key, m);
          return m;
        }
      }
  throw bad_scalar("no block found for the requested class");
}

EMat Realization::sqrt_u_mat(int n) const {
  EMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Ext(Rat(0), Rat(1), F_.u());
  return m;
}

// ---------------------------------------------------------------------------
// elements

Realization::VElem Realization::zero_vplus() const {
  VElem x;
  if (tag_ == RealTag::UNITARY || tag_ == RealTag::TYPE3)
    x.e = EMat(msize_, msize_);
  else if (tag_ == RealTag::ORTHO1)
    x.q = QMat(3, 1);
  else
    x.q = QMat(msize_, msize_);
  return x;
}

Realization::VElem Realization::identity_vplus() const {
  VElem x = zero_vplus();
  switch (tag_) {
    case RealTag::GL:
      x.q = QMat::anti_identity(msize_);
      break;
    case RealTag::SP:
      x.q = QMat::identity(msize_);
      break;
    case RealTag::UNITARY:
      x.e = EMat::identity(msize_);
      break;
    case RealTag::TYPE3: {
      EMat j1(2, 2);
      j1(0, 1) = Ext(Rat(1));
      j1(1, 0) = Ext(Rat(1));
      for (int b = 0; b < rank_; ++b) x.e.set_block(2 * b, 2 * b, j1);
      break;
    }
    case RealTag::ORTHO1:
      x.q(0, 0) = Rat(1);
      break;
  }
  return x;
}

Realization::GElem Realization::identity_group() const {
  GElem g;
  switch (tag_) {
    case RealTag::GL:
      g.g_q = QMat::identity(msize_);
      g.g2_q = QMat::identity(msize_);
      break;
    case RealTag::SP:
      g.g_q = QMat::identity(msize_);
      break;
    case RealTag::ORTHO1:
      g.g_q = QMat::identity(3);
      break;
    case RealTag::UNITARY:
    case RealTag::TYPE3:
      g.g_e = EMat::identity(msize_);
      break;
  }
  return g;
}

bool Realization::is_vplus(const VElem& x) const {
  if (x.minus) return false;
  switch (tag_) {
    case RealTag::GL:
      return x.q.rows() == msize_ && x.q.cols() == msize_;
    case RealTag::SP:
      return x.q.rows() == msize_ && x.q == x.q.transpose();
    case RealTag::UNITARY:
      return x.e.rows() == msize_ && x.e == x.e.conj_transpose();
    case RealTag::TYPE3: {
      if (x.e.rows() != msize_) return false;
      if (!(x.e == x.e.transpose())) return false;
      EMat j = big_j();
      return j * x.e.conjugate() == x.e * j.transpose();
    }
    case RealTag::ORTHO1:
      return x.q.rows() == 3 && x.q.cols() == 1;
  }
  return false;
}

bool Realization::is_vminus(const VElem& y) const {
  if (!y.minus) return false;
  switch (tag_) {
    case RealTag::GL:
      return y.q.rows() == msize_;
    case RealTag::SP:
      return y.q.rows() == msize_ && y.q == y.q.transpose();
    case RealTag::UNITARY:
      return y.e.rows() == msize_ && y.e == y.e.conj_transpose();
    case RealTag::TYPE3: {
      if (y.e.rows() != msize_) return false;
      if (!(y.e == y.e.transpose())) return false;
      EMat j = big_j();
      return j.transpose() * y.e.conjugate() == y.e * j;
    }
    case RealTag::ORTHO1:
      return y.q.rows() == 3 && y.q.cols() == 1;
  }
  return false;
}

Realization::VElem Realization::act(const GElem& g, const VElem& x) const {
  VElem out = x;
  Rat mu = g.mu;
  if (mu == 0) throw bad_scalar("group scalar must be nonzero");
  switch (tag_) {
    case RealTag::GL:
      out.q = x.minus ? g.g2_q * x.q * g.g_q.inverse()
                      : g.g_q * x.q * g.g2_q.inverse();
      return out;
    case RealTag::SP: {
      if (!x.minus) {
        out.q = (g.g_q * x.q * g.g_q.transpose()).scaled(Rat(1) / mu);
      } else {
        QMat gi = g.g_q.inverse();
        out.q = (gi.transpose() * x.q * gi).scaled(mu);
      }
      return out;
    }
    case RealTag::UNITARY: {
      if (!x.minus) {
        out.e = (g.g_e * x.e * g.g_e.conj_transpose()).scaled(Ext(Rat(1) / mu));
      } else {
        EMat gi = g.g_e.inverse();
        out.e = (gi.conj_transpose() * x.e * gi).scaled(Ext(mu));
      }
      return out;
    }
    case RealTag::TYPE3: {
      Rat tw = g.sqrtu_twist ? F_.u() : Rat(1);
      if (!x.minus) {
        out.e = (g.g_e * x.e * g.g_e.transpose()).scaled(Ext(tw / mu));
      } else {
        EMat gi = g.g_e.inverse();
        out.e = (gi.transpose() * x.e * gi).scaled(Ext(mu / tw));
      }
      return out;
    }
    case RealTag::ORTHO1:
      out.q = (g.g_q * x.q).scaled(mu);
      return out;
  }
  return out;
}

Realization::GElem Realization::compose(const GElem& g, const GElem& h) const {
  GElem out = g;
  out.mu = g.mu * h.mu;
  switch (tag_) {
    case RealTag::GL:
      out.g_q = g.g_q * h.g_q;
      out.g2_q = g.g2_q * h.g2_q;
      return out;
    case RealTag::SP:
    case RealTag::ORTHO1:
      out.g_q = g.g_q * h.g_q;
      return out;
    case RealTag::UNITARY:
      out.g_e = g.g_e * h.g_e;
      return out;
    case RealTag::TYPE3:
      out.g_e = g.g_e * h.g_e;
      out.sqrtu_twist = g.sqrtu_twist != h.sqrtu_twist;
      // two sqrt(u) factors merge into the scalar u
      if (g.sqrtu_twist && h.sqrtu_twist) out.mu = out.mu / (F_.u() * F_.u());
      return out;
  }
  return out;
}

// ---------------------------------------------------------------------------
// grading

std::vector<Realization::Component> Realization::grade_decompose(
    const VElem& x) const {
  if (x.minus) throw bad_scalar("grade decomposition acts on V+");
  std::vector<Component> out;
  int kk = k();
  auto slot_of_pos = [&](int p) { return kk - p; };

  if (tag_ == RealTag::ORTHO1) {
    Component c{0, 0, x};
    out.push_back(c);
    return out;
  }
  if (tag_ == RealTag::SP || tag_ == RealTag::UNITARY ||
      tag_ == RealTag::GL) {
    int n = msize_;
    std::map<std::pair<int, int>, VElem> parts;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        int si, sj;
        if (tag_ == RealTag::GL) {
          si = slot_of_pos(p);  // row slot
          sj = q;               // column slot
        } else {
          if (q < p) continue;  // symmetric models: handle (p,q) once
          si = slot_of_pos(q);
          sj = slot_of_pos(p);
        }
        int a = std::min(si, sj), b = std::max(si, sj);
        auto key = std::make_pair(a, b);
        auto it = parts.find(key);
        if (it == parts.end()) it = parts.emplace(key, zero_vplus()).first;
        if (tag_ == RealTag::UNITARY) {
          it->second.e(p, q) = x.e(p, q);
          if (p != q) it->second.e(q, p) = x.e(q, p);
        } else {
          it->second.q(p, q) = x.q(p, q);
          if (tag_ == RealTag::SP && p != q) it->second.q(q, p) = x.q(q, p);
        }
      }
    for (auto& [key, part] : parts)
      out.push_back(Component{key.first, key.second, part});
    return out;
  }
  // TYPE3: 2x2 blocks
  std::map<std::pair<int, int>, VElem> parts;
  for (int P = 0; P < rank_; ++P)
    for (int Q = P; Q < rank_; ++Q) {
      int a = slot_of_pos(Q), b = slot_of_pos(P);
      auto key = std::make_pair(std::min(a, b), std::max(a, b));
      auto it = parts.find(key);
      if (it == parts.end()) it = parts.emplace(key, zero_vplus()).first;
      it->second.e.set_block(2 * P, 2 * Q, x.e.block(2 * P, 2 * Q, 2, 2));
      if (P != Q)
        it->second.e.set_block(2 * Q, 2 * P, x.e.block(2 * Q, 2 * P, 2, 2));
    }
  for (auto& [key, part] : parts)
    out.push_back(Component{key.first, key.second, part});
  return out;
}

// ---------------------------------------------------------------------------
// fundamental invariants

Rat Realization::delta(int j, const VElem& x) const {
  if (j < 0 || j > k()) throw bad_scalar("invariant index out of range");
  if (x.minus) throw bad_scalar("delta acts on V+");
  int r = k() + 1 - j;
  switch (tag_) {
    case RealTag::SP:
      return x.q.leading_minor(r);
    case RealTag::GL:
      return x.q.block(0, msize_ - r, r, r).det();
    case RealTag::UNITARY: {
      Ext d = x.e.leading_minor(r);
      if (d.b != 0) throw bad_scalar("hermitian minor must be rational");
      return d.a;
    }
    case RealTag::TYPE3: {
      Ext d = x.e.leading_minor(2 * r);
      if (d.b != 0) throw bad_scalar("reality condition violated");
      return (r % 2 == 0) ? d.a : -d.a;
    }
    case RealTag::ORTHO1:
      return ortho_q(x);
  }
  throw bad_scalar("unsupported model");
}

Rat Realization::ortho_q(const VElem& x) const {
  const QMat& v = x.q;
  return v(0, 0) * v(0, 0) - F_.u() * v(1, 0) * v(1, 0) -
         F_.pi() * v(2, 0) * v(2, 0);
}

Realization::VElem Realization::gamma_flip(const VElem& x) const {
  VElem out = x;
  out.minus = !x.minus;
  switch (tag_) {
    case RealTag::SP: {
      QMat s = QMat::anti_identity(msize_);
      out.q = -(s * x.q * s);
      return out;
    }
    case RealTag::GL: {
      QMat s = QMat::anti_identity(msize_);
      out.q = -(s * x.q.transpose() * s);
      return out;
    }
    case RealTag::UNITARY: {
      EMat s = to_ext(QMat::anti_identity(msize_), F_.u());
      out.e = -(s * x.e * s);
      return out;
    }
    case RealTag::TYPE3: {
      EMat g = to_ext(QMat::anti_identity(msize_), F_.u());
      out.e = -(g * x.e * g);
      return out;
    }
    case RealTag::ORTHO1:
      throw bad_scalar("no flip is provided for the rank-1 orthogonal model");
  }
  return out;
}

Rat Realization::nabla(int j, const VElem& y) const {
  if (!y.minus) throw bad_scalar("nabla acts on V-");
  return delta(j, gamma_flip(y));
}

Realization::VElem Realization::psi(const VElem& x) const {
  if (x.minus) throw bad_scalar("psi acts on V+");
  VElem out = x;
  out.minus = true;
  switch (tag_) {
    case RealTag::GL:
    case RealTag::SP:
      if (x.q.det() == 0) throw bad_scalar("psi of a non-generic element");
      out.q = -x.q.inverse();
      return out;
    case RealTag::UNITARY:
    case RealTag::TYPE3:
      if (is_zero_val(x.e.det())) throw bad_scalar("psi of a non-generic element");
      out.e = -x.e.inverse();
      return out;
    case RealTag::ORTHO1:
      throw bad_scalar("psi is not provided for the rank-1 orthogonal model");
  }
  return out;
}

bool Realization::psi_triple_ok(const VElem& x) const {
  VElem y = psi(x);
  int n = msize_;
  if (tag_ == RealTag::GL || tag_ == RealTag::SP) {
    QMat X(2 * n, 2 * n), Y(2 * n, 2 * n), H(2 * n, 2 * n);
    X.set_block(0, n, x.q);
    Y.set_block(n, 0, y.q);
    for (int i = 0; i < n; ++i) {
      H(i, i) = Rat(1);
      H(n + i, n + i) = Rat(-1);
    }
    return (Y * X - X * Y) == H;
  }
  if (tag_ == RealTag::UNITARY) {
    Ext su(Rat(0), Rat(1), F_.u());
    EMat X(2 * n, 2 * n), Y(2 * n, 2 * n), H(2 * n, 2 * n);
    X.set_block(0, n, x.e.scaled(su));
    Y.set_block(n, 0, y.e.scaled(su * Ext(Rat(1) / F_.u())));
    for (int i = 0; i < n; ++i) {
      H(i, i) = Ext(Rat(1));
      H(n + i, n + i) = Ext(Rat(-1));
    }
    return (Y * X - X * Y) == H;
  }
  if (tag_ == RealTag::TYPE3) {
    EMat X(2 * n, 2 * n), Y(2 * n, 2 * n), H(2 * n, 2 * n);
    X.set_block(0, n, x.e);
    Y.set_block(n, 0, y.e);
    for (int i = 0; i < n; ++i) {
      H(i, i) = Ext(Rat(1));
      H(n + i, n + i) = Ext(Rat(-1));
    }
    return (Y * X - X * Y) == H;
  }
  throw bad_scalar("unsupported model");
}

// ---------------------------------------------------------------------------
// orbit invariants

namespace {

/// Symmetric congruence diagonalization over Q; returns the diagonal.
std::vector<Rat> sym_diagonalize(QMat m) {
  int n = m.rows();
  std::vector<Rat> diag;
  for (int p = 0; p < n; ++p) {
    if (m(p, p) == 0) {
      int piv = -1;
      for (int i = p; i < n; ++i)
        if (m(i, i) != 0) {
          piv = i;
          break;
        }
      if (piv >= 0) {
        for (int j = 0; j < n; ++j) std::swap(m(p, j), m(piv, j));
        for (int j = 0; j < n; ++j) std::swap(m(j, p), m(j, piv));
      } else {
        int a = -1, b = -1;
        for (int i = p; i < n && a < 0; ++i)
          for (int j = i + 1; j < n && a < 0; ++j)
            if (m(i, j) != 0) {
              a = i;
              b = j;
            }
        if (a < 0) break;  // zero tail
        // row/col a += row/col b creates a nonzero diagonal entry
        for (int j = 0; j < n; ++j) m(a, j) += m(b, j);
        for (int j = 0; j < n; ++j) m(j, a) += m(j, b);
        if (a != p) {
          for (int j = 0; j < n; ++j) std::swap(m(p, j), m(a, j));
          for (int j = 0; j < n; ++j) std::swap(m(j, p), m(j, a));
        }
      }
    }
    Rat piv = m(p, p);
    if (piv == 0) break;
    for (int i = p + 1; i < n; ++i) {
      if (m(i, p) == 0) continue;
      Rat f = m(i, p) / piv;
      for (int j = 0; j < n; ++j) m(i, j) -= f * m(p, j);
      for (int j = 0; j < n; ++j) m(j, i) -= f * m(j, p);
    }
    diag.push_back(piv);
  }
  while (static_cast<int>(diag.size()) < n) diag.push_back(Rat(0));
  return diag;
}

/// Hermitian congruence diagonalization over E; returns the (real) diagonal.
std::vector<Rat> herm_diagonalize(EMat m, const Rat& u) {
  int n = m.rows();
  std::vector<Rat> diag;
  Ext su(Rat(0), Rat(1), u);
  for (int p = 0; p < n; ++p) {
    bool have = !is_zero_val(m(p, p));
    if (!have) {
      int piv = -1;
      for (int i = p; i < n; ++i)
        if (!is_zero_val(m(i, i))) {
          piv = i;
          break;
        }
      if (piv >= 0) {
        for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(p, j));
        for (int j = 0; j < n; ++j) std::swap(m(j, piv), m(j, p));
      } else {
        int a = -1, b = -1;
        for (int i = p; i < n && a < 0; ++i)
          for (int j = i + 1; j < n && a < 0; ++j)
            if (!is_zero_val(m(i, j))) {
              a = i;
              b = j;
            }
        if (a < 0) break;
        for (Ext lam : {Ext(Rat(1)), su}) {
          // congruence by I + lam E_{ab}: row a += lam row b, then
          // col a += conj(lam) col b on the updated matrix
          EMat t = m;
          for (int j = 0; j < n; ++j) t(a, j) = t(a, j) + lam * m(b, j);
          for (int i = 0; i < n; ++i) t(i, a) = t(i, a) + lam.conj() * t(i, b);
          if (!is_zero_val(t(a, a))) {
            m = t;
            break;
          }
        }
        if (is_zero_val(m(a, a))) throw bad_scalar("hermitian reduction failed");
        if (a != p) {
          for (int j = 0; j < n; ++j) std::swap(m(a, j), m(p, j));
          for (int j = 0; j < n; ++j) std::swap(m(j, a), m(j, p));
        }
      }
    }
    Ext piv = m(p, p);
    if (is_zero_val(piv)) break;
    for (int i = p + 1; i < n; ++i) {
      if (is_zero_val(m(i, p))) continue;
      Ext f = m(i, p) * inverse(piv);
      for (int j = 0; j < n; ++j) m(i, j) = m(i, j) - f * m(p, j);
      for (int j = 0; j < n; ++j) m(j, i) = m(j, i) - f.conj() * m(j, p);
    }
    if (piv.b != 0) throw bad_scalar("hermitian pivot must be real");
    diag.push_back(piv.a);
  }
  while (static_cast<int>(diag.size()) < n) diag.push_back(Rat(0));
  return diag;
}

}  // namespace

std::string Realization::OrbitInvariant::to_string() const {
  std::ostringstream os;
  os << "rank " << m;
  if (!payload.empty()) os << " [" << payload << "]";
  return os.str();
}

Realization::OrbitInvariant Realization::orbit_invariants(const VElem& x) const {
  OrbitInvariant inv;
  switch (tag_) {
    case RealTag::GL:
      inv.m = x.q.rank();
      return inv;
    case RealTag::SP: {
      std::vector<Rat> d = sym_diagonalize(x.q);
      QForm q;
      for (const Rat& v : d)
        if (v != 0) q.coeffs.push_back(v);
      inv.m = q.rank();
      if (inv.m > 0) inv.payload = similarity_class_id(F_, q);
      return inv;
    }
    case RealTag::UNITARY: {
      std::vector<Rat> d = herm_diagonalize(x.e, F_.u());
      long val_parity = 0;
      int m = 0;
      for (const Rat& v : d)
        if (v != 0) {
          ++m;
          val_parity += F_.valuation(v);
        }
      inv.m = m;
      if (m > 0 && m % 2 == 0)
        inv.payload = (val_parity % 2 == 0) ? "1" : "pi";
      return inv;
    }
    case RealTag::TYPE3: {
      EMat m = x.e;
      int nb = rank_;
      std::vector<EMat> blocks;
      // block symmetric elimination; every nonzero S+ block is invertible
      std::vector<int> order;
      EMat work = m;
      int done = 0;
      while (done < nb) {
        int piv = -1;
        for (int b = done; b < nb; ++b)
          if (!is_zero_val(work.block(2 * b, 2 * b, 2, 2).det())) {
            piv = b;
            break;
          }
        if (piv < 0) {
          // all remaining diagonal blocks vanish; create one if possible
          int a = -1, b2 = -1;
          for (int i = done; i < nb && a < 0; ++i)
            for (int j = i + 1; j < nb && a < 0; ++j)
              if (!work.block(2 * i, 2 * j, 2, 2).is_zero()) {
                a = i;
                b2 = j;
              }
          if (a < 0) break;  // zero tail
          bool fixed = false;
          for (const EMat& M :
               {lblock(Rat(1), Rat(0), Rat(0), Rat(0)),
                lblock(Rat(0), Rat(1), Rat(0), Rat(0)),
                lblock(Rat(0), Rat(0), Rat(1), Rat(0)),
                lblock(Rat(0), Rat(0), Rat(0), Rat(1))}) {
            EMat g = EMat::identity(2 * nb);
            g.set_block(2 * a, 2 * b2, M);
            EMat t = g * work * g.transpose();
            if (!is_zero_val(t.block(2 * a, 2 * a, 2, 2).det())) {
              work = t;
              fixed = true;
              break;
            }
          }
          if (!fixed) throw bad_scalar("block reduction failed");
          continue;
        }
        if (piv != done) {
          // swap block rows/cols piv <-> done
          EMat g = EMat::identity(2 * nb);
          EMat z(2, 2);
          EMat one = EMat::identity(2);
          g.set_block(2 * piv, 2 * piv, z);
          g.set_block(2 * done, 2 * done, z);
          g.set_block(2 * piv, 2 * done, one);
          g.set_block(2 * done, 2 * piv, one);
          work = g * work * g.transpose();
        }
        EMat pivot = work.block(2 * done, 2 * done, 2, 2);
        EMat pinv = pivot.inverse();
        EMat g = EMat::identity(2 * nb);
        for (int i = done + 1; i < nb; ++i) {
          EMat xb = work.block(2 * i, 2 * done, 2, 2);
          if (xb.is_zero()) continue;
          g.set_block(2 * i, 2 * done, -(xb * pinv));
        }
        work = g * work * g.transpose();
        blocks.push_back(work.block(2 * done, 2 * done, 2, 2));
        ++done;
      }
      int n1 = 0, n2 = 0, n3 = 0;
      for (const EMat& b : blocks) {
        Ext det = b.det();
        if (det.b != 0) throw bad_scalar("block determinant must be rational");
        SquareClass c = F_.square_class(-det.a);
        if (c == SquareClass::One) ++n1;
        else if (c == SquareClass::Pi) ++n2;
        else if (c == SquareClass::UPi) ++n3;
        else throw bad_scalar("impossible block class");
      }
      inv.m = static_cast<int>(blocks.size());
      if (inv.m > 0) {
        std::ostringstream os;
        os << (n1 % 2) << (n2 % 2) << (n3 % 2);
        inv.payload = os.str();
      }
      return inv;
    }
    case RealTag::ORTHO1: {
      if (x.q.is_zero()) {
        inv.m = 0;
        return inv;
      }
      inv.m = 1;
      inv.payload = to_string(F_.square_class(ortho_q(x)));
      return inv;
    }
  }
  throw bad_scalar("unsupported model");
}

Realization::VElem Realization::representative(const OrbitInvariant& inv) const {
  if (inv.m < 0 || inv.m > rank_) throw bad_scalar("unrealizable rank");
  VElem x = zero_vplus();
  int n = msize_;
  if (inv.m == 0) return x;
  switch (tag_) {
    case RealTag::GL:
      for (int j = 0; j < inv.m; ++j) x.q(k() - j, j) = Rat(1);
      return x;
    case RealTag::SP: {
      // search the sorted class tuples for one whose similarity id matches
      std::vector<unsigned> tags(static_cast<size_t>(inv.m), 0);
      while (true) {
        QForm q;
        for (unsigned t : tags)
          q.coeffs.push_back(F_.class_rep(static_cast<SquareClass>(t)));
        if (similarity_class_id(F_, q) == inv.payload) {
          for (int j = 0; j < inv.m; ++j)
            x.q(n - 1 - j, n - 1 - j) = q.coeffs[static_cast<size_t>(j)];
          return x;
        }
        int i = inv.m - 1;
        while (i >= 0 && tags[static_cast<size_t>(i)] == 3) --i;
        if (i < 0) throw bad_scalar("unrealizable symplectic invariant");
        unsigned next = tags[static_cast<size_t>(i)] + 1;
        for (int j = i; j < inv.m; ++j) tags[static_cast<size_t>(j)] = next;
      }
    }
    case RealTag::UNITARY: {
      for (int j = 0; j < inv.m; ++j) x.e(n - 1 - j, n - 1 - j) = Ext(Rat(1));
      if (inv.m % 2 == 0 && inv.payload == "pi")
        x.e(n - inv.m, n - inv.m) = Ext(F_.pi());
      else if (inv.m % 2 == 0 && inv.payload != "1")
        throw bad_scalar("unrealizable unitary invariant");
      return x;
    }
    case RealTag::TYPE3: {
      if (inv.payload.size() != 3) throw bad_scalar("bad parity payload");
      int p1 = inv.payload[0] - '0', p2 = inv.payload[1] - '0',
          p3 = inv.payload[2] - '0';
      int c2 = p2, c3 = p3;
      int c1 = inv.m - c2 - c3;
      if (c1 < 0 || c1 % 2 != p1)
        throw bad_scalar("unrealizable parity vector");
      std::vector<SquareClass> classes;
      for (int i = 0; i < c1; ++i) classes.push_back(SquareClass::One);
      for (int i = 0; i < c2; ++i) classes.push_back(SquareClass::Pi);
      for (int i = 0; i < c3; ++i) classes.push_back(SquareClass::UPi);
      for (int j = 0; j < inv.m; ++j) {
        int pos = rank_ - 1 - j;  // slot j
        x.e.set_block(2 * pos, 2 * pos,
                      canonical_splus(classes[static_cast<size_t>(j)]));
      }
      return x;
    }
    case RealTag::ORTHO1: {
      long bound = 2 * F_.p().get_si();
      for (long a = 0; a <= bound; ++a)
        for (long b = 0; b <= bound; ++b)
          for (long c = 0; c <= bound; ++c) {
            if (a == 0 && b == 0 && c == 0) continue;
            VElem v = zero_vplus();
            v.q(0, 0) = Rat(a);
            v.q(1, 0) = Rat(b);
            v.q(2, 0) = Rat(c);
            Rat qv = ortho_q(v);
            if (qv != 0 && to_string(F_.square_class(qv)) == inv.payload)
              return v;
          }
      throw bad_scalar("unrealizable class for the ternary form");
    }
  }
  throw bad_scalar("unsupported model");
}

bool Realization::same_orbit(const VElem& x, const VElem& y) const {
  return orbit_invariants(x) == orbit_invariants(y);
}

std::vector<Realization::OrbitInvariant> Realization::enumerate_orbit_classes()
    const {
  if (rank_ > 6) throw bad_scalar("enumeration is limited to rank <= 6");
  std::set<OrbitInvariant> classes;
  int n = rank_;
  if (tag_ == RealTag::ORTHO1) {
    long bound = 2 * F_.p().get_si();
    for (long a = 0; a <= bound; ++a)
      for (long b = 0; b <= bound; ++b)
        for (long c = 0; c <= bound; ++c) {
          VElem v = zero_vplus();
          v.q(0, 0) = Rat(a);
          v.q(1, 0) = Rat(b);
          v.q(2, 0) = Rat(c);
          auto inv = orbit_invariants(v);
          if (inv.m > 0) classes.insert(inv);
        }
    return std::vector<OrbitInvariant>(classes.begin(), classes.end());
  }
  if (tag_ == RealTag::TYPE3) {
    // per-slot choices: zero or a canonical block of each attainable class
    std::vector<int> choice(static_cast<size_t>(n), 0);
    const std::array<SquareClass, 3> cls{SquareClass::One, SquareClass::Pi,
                                         SquareClass::UPi};
    while (true) {
      VElem x = zero_vplus();
      for (int j = 0; j < n; ++j) {
        int c = choice[static_cast<size_t>(j)];
        if (c > 0)
          x.e.set_block(2 * (n - 1 - j), 2 * (n - 1 - j),
                        canonical_splus(cls[static_cast<size_t>(c - 1)]));
      }
      auto inv = orbit_invariants(x);
      if (inv.m > 0) classes.insert(inv);
      int i = 0;
      while (i < n && choice[static_cast<size_t>(i)] == 3) {
        choice[static_cast<size_t>(i)] = 0;
        ++i;
      }
      if (i == n) break;
      ++choice[static_cast<size_t>(i)];
    }
    return std::vector<OrbitInvariant>(classes.begin(), classes.end());
  }
  // diagonal grid over {0} and the four square classes
  std::vector<int> choice(static_cast<size_t>(n), 0);
  while (true) {
    VElem x = zero_vplus();
    for (int j = 0; j < n; ++j) {
      int c = choice[static_cast<size_t>(j)];
      if (c > 0) {
        Rat v = F_.class_rep(static_cast<SquareClass>(c - 1));
        int pos = n - 1 - j;
        if (tag_ == RealTag::GL)
          x.q(k() - j, j) = v;
        else if (tag_ == RealTag::SP)
          x.q(pos, pos) = v;
        else
          x.e(pos, pos) = Ext(v);
      }
    }
    auto inv = orbit_invariants(x);
    if (inv.m > 0) classes.insert(inv);
    int i = 0;
    while (i < n && choice[static_cast<size_t>(i)] == 4) {
      choice[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == n) break;
    ++choice[static_cast<size_t>(i)];
  }
  return std::vector<OrbitInvariant>(classes.begin(), classes.end());
}

// ---------------------------------------------------------------------------
// the quadratic form Q_X on V-

std::vector<QMat> Realization::vminus_basis_q() const {
  std::vector<QMat> basis;
  int n = msize_;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      QMat b(n, n);
      b(i, j) = Rat(1);
      b(j, i) = Rat(1);
      basis.push_back(b);
    }
  return basis;
}

std::vector<EMat> Realization::vminus_basis() const {
  std::vector<EMat> basis;
  int nb = rank_;
  auto put = [&](int P, int Q, const EMat& b2) {
    EMat m(msize_, msize_);
    m.set_block(2 * P, 2 * Q, b2);
    if (P != Q) m.set_block(2 * Q, 2 * P, b2.transpose());
    basis.push_back(m);
  };
  for (int P = 0; P < nb; ++P) {
    // S- = [[y, mu],[mu, pi*conj(y)]]
    EMat b1(2, 2), b2(2, 2), b3(2, 2);
    b1(0, 0) = Ext(Rat(1));
    b1(1, 1) = Ext(F_.pi());
    b2(0, 0) = Ext(Rat(0), Rat(1), F_.u());
    b2(1, 1) = Ext(Rat(0), -F_.pi(), F_.u());
    b3(0, 1) = Ext(Rat(1));
    b3(1, 0) = Ext(Rat(1));
    put(P, P, b1);
    put(P, P, b2);
    put(P, P, b3);
  }
  for (int P = 0; P < nb; ++P)
    for (int Q = P + 1; Q < nb; ++Q) {
      // off block [[w, z],[conj(z), pi*conj(w)]]
      for (int which = 0; which < 4; ++which) {
        Rat z0(which == 0 ? 1 : 0), z1(which == 1 ? 1 : 0);
        Rat w0(which == 2 ? 1 : 0), w1(which == 3 ? 1 : 0);
        EMat b(2, 2);
        b(0, 0) = Ext(w0, w1, F_.u());
        b(0, 1) = Ext(z0, z1, F_.u());
        b(1, 0) = Ext(z0, -z1, F_.u());
        b(1, 1) = Ext(F_.pi() * w0, -F_.pi() * w1, F_.u());
        put(P, Q, b);
      }
    }
  return basis;
}

QForm Realization::q_form_QX(const VElem& x) const {
  if (x.minus) throw bad_scalar("Q_X is evaluated at elements of V+");
  int n = msize_;
  if (tag_ == RealTag::SP) {
    QMat X(2 * n, 2 * n);
    X.set_block(0, n, x.q);
    auto basis = vminus_basis_q();
    std::vector<QMat> brackets;
    for (const QMat& b : basis) {
      QMat Y(2 * n, 2 * n);
      Y.set_block(n, 0, b);
      brackets.push_back(X * Y - Y * X);
    }
    size_t dim = basis.size();
    QMat gram(static_cast<int>(dim), static_cast<int>(dim));
    for (size_t a = 0; a < dim; ++a)
      for (size_t b = a; b < dim; ++b) {
        Rat tr(0);
        for (int i = 0; i < 2 * n; ++i)
          for (int j = 0; j < 2 * n; ++j) {
            const Rat& x = brackets[a](i, j);
            if (x == 0) continue;
            tr += x * brackets[b](j, i);
          }
        // b(X, Y) = -Tr(XY); Q_X(Y) = -1/2 b([X,Y],[X,Y])
        Rat val = Rat(1, 2) * tr;
        gram(static_cast<int>(a), static_cast<int>(b)) = val;
        gram(static_cast<int>(b), static_cast<int>(a)) = val;
      }
    QForm q;
    for (const Rat& dg : sym_diagonalize(gram)) {
      if (dg != 0)
        q.coeffs.push_back(dg);
      else
        ++q.radical_dim;
    }
    return q;
  }
  if (tag_ == RealTag::TYPE3) {
    EMat X(2 * n, 2 * n);
    X.set_block(0, n, x.e);
    auto basis = vminus_basis();
    std::vector<EMat> brackets;
    for (const EMat& b : basis) {
      EMat Y(2 * n, 2 * n);
      Y.set_block(n, 0, b);
      brackets.push_back(X * Y - Y * X);
    }
    size_t dim = basis.size();
    QMat gram(static_cast<int>(dim), static_cast<int>(dim));
    for (size_t a = 0; a < dim; ++a)
      for (size_t b = a; b < dim; ++b) {
        Ext tr;
        for (int i = 0; i < 2 * n; ++i)
          for (int j = 0; j < 2 * n; ++j) {
            const Ext& x = brackets[a](i, j);
            if (x.is_zero()) continue;
            tr = tr + x * brackets[b](j, i);
          }
        if (tr.b != 0) throw bad_scalar("trace form must be rational");
        // b(X, Y) = -1/2 Tr(XY); Q_X(Y) = -1/2 b([X,Y],[X,Y])
        Rat val = Rat(1, 4) * tr.a;
        gram(static_cast<int>(a), static_cast<int>(b)) = val;
        gram(static_cast<int>(b), static_cast<int>(a)) = val;
      }
    QForm q;
    for (const Rat& dg : sym_diagonalize(gram)) {
      if (dg != 0)
        q.coeffs.push_back(dg);
      else
        ++q.radical_dim;
    }
    return q;
  }
  throw bad_scalar("Q_X is provided for the symplectic and quaternionic models");
}

// ---------------------------------------------------------------------------
// P-orbit labels

std::vector<std::string> Realization::p_orbit_class(const VElem& x) const {
  int kk = k();
  std::vector<Rat> dl;
  for (int j = 0; j <= kk; ++j) {
    Rat v = delta(j, x);
    if (v == 0) throw bad_scalar("not in the open P-locus");
    dl.push_back(v);
  }
  std::vector<std::string> labels;
  switch (tag_) {
    case RealTag::GL:
      return labels;  // single open P-orbit
    case RealTag::SP: {
      for (int j = 0; j < kk; ++j) {
        Rat ratio = dl[static_cast<size_t>(j)];
        for (int t = 0; t < kk + 1 - j; ++t) ratio /= dl[static_cast<size_t>(kk)];
        labels.push_back(to_string(F_.square_class(ratio)));
      }
      return labels;
    }
    case RealTag::UNITARY: {
      for (int j = 0; j < kk; ++j) {
        Rat ratio = dl[static_cast<size_t>(j)];
        for (int t = 0; t < kk + 1 - j; ++t) ratio /= dl[static_cast<size_t>(kk)];
        labels.push_back(F_.is_norm(ratio) ? "1" : "pi");
      }
      return labels;
    }
    case RealTag::TYPE3:
    case RealTag::ORTHO1: {
      for (int j = 0; j <= kk; ++j)
        labels.push_back(to_string(F_.square_class(dl[static_cast<size_t>(j)])));
      return labels;
    }
  }
  return labels;
}

// ---------------------------------------------------------------------------
// randomness

namespace {

long rand_small(Rng& rng, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(rng);
}

}  // namespace

Realization::GElem Realization::random_group_element(Rng& rng) const {
  GElem g = identity_group();
  int n = msize_;
  auto reps = F_.class_reps();
  auto random_glq = [&](QMat& m) {
    for (int step = 0; step < 2 * n + 2; ++step) {
      long kind = rand_small(rng, 0, 3);
      if (kind < 3) {
        int i = static_cast<int>(rand_small(rng, 0, n - 1));
        int j = static_cast<int>(rand_small(rng, 0, n - 1));
        if (i == j) continue;
        QMat t = QMat::identity(n);
        t(i, j) = Rat(rand_small(rng, -2, 2));
        m = m * t;
      } else {
        QMat t = QMat::identity(n);
        for (int i = 0; i < n; ++i)
          t(i, i) = reps[static_cast<size_t>(rand_small(rng, 0, 3))];
        m = m * t;
      }
    }
  };
  auto random_gle = [&](EMat& m) {
    for (int step = 0; step < 2 * n + 2; ++step) {
      long kind = rand_small(rng, 0, 3);
      if (kind < 3) {
        int i = static_cast<int>(rand_small(rng, 0, n - 1));
        int j = static_cast<int>(rand_small(rng, 0, n - 1));
        if (i == j) continue;
        EMat t = EMat::identity(n);
        t(i, j) = Ext(Rat(rand_small(rng, -2, 2)), Rat(rand_small(rng, -1, 1)),
                      F_.u());
        m = m * t;
      } else {
        EMat t = EMat::identity(n);
        for (int i = 0; i < n; ++i) {
          Rat re(rand_small(rng, -2, 2)), im(rand_small(rng, -1, 1));
          if (re == 0 && im == 0) re = Rat(1);
          t(i, i) = Ext(re, im, F_.u());
        }
        m = m * t;
      }
    }
  };
  Rat mu = reps[static_cast<size_t>(rand_small(rng, 0, 3))];
  long sc = rand_small(rng, 1, 3);
  mu *= Rat(sc * sc);
  g.mu = mu;

  switch (tag_) {
    case RealTag::GL:
      random_glq(g.g_q);
      random_glq(g.g2_q);
      g.mu = Rat(1);
      return g;
    case RealTag::SP:
      random_glq(g.g_q);
      return g;
    case RealTag::UNITARY:
      random_gle(g.g_e);
      return g;
    case RealTag::TYPE3: {
      int nb = rank_;
      EMat m = EMat::identity(n);
      for (int step = 0; step < 2 * nb + 2; ++step) {
        long kind = rand_small(rng, 0, 3);
        EMat t = EMat::identity(n);
        if (kind <= 1 && nb > 1) {
          int i = static_cast<int>(rand_small(rng, 0, nb - 1));
          int j = static_cast<int>(rand_small(rng, 0, nb - 1));
          if (i == j) continue;
          t.set_block(2 * i, 2 * j,
                      lblock(Rat(rand_small(rng, -1, 1)), Rat(rand_small(rng, -1, 1)),
                             Rat(rand_small(rng, -1, 1)), Rat(rand_small(rng, -1, 1))));
        } else if (kind == 2) {
          for (int b = 0; b < nb; ++b) {
            EMat lb = lblock(Rat(rand_small(rng, -2, 2)), Rat(rand_small(rng, -1, 1)),
                             Rat(rand_small(rng, -1, 1)), Rat(rand_small(rng, -1, 1)));
            if (is_zero_val(lb.det())) lb = EMat::identity(2);
            t.set_block(2 * b, 2 * b, lb);
          }
        } else {
          // J_pi block factors
          for (int b = 0; b < nb; ++b)
            if (rand_small(rng, 0, 1) == 1) t.set_block(2 * b, 2 * b, jpi_block());
        }
        m = m * t;
      }
      g.g_e = m;
      g.sqrtu_twist = (rand_small(rng, 0, 1) == 1);
      return g;
    }
    case RealTag::ORTHO1: {
      // product of two reflections of the ternary form
      QMat gram = ortho_gram();
      QMat rot = QMat::identity(3);
      int made = 0;
      while (made < 2) {
        QMat v(3, 1);
        for (int i = 0; i < 3; ++i) v(i, 0) = Rat(rand_small(rng, -3, 3));
        QMat qv = v.transpose() * gram * v;
        if (qv(0, 0) == 0) continue;
        // reflection: x -> x - 2 B(x,v)/Q(v) v
        QMat refl = QMat::identity(3);
        QMat row = (gram * v).scaled(Rat(2) / qv(0, 0));
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) refl(i, j) -= v(i, 0) * row(j, 0);
        rot = rot * refl;
        ++made;
      }
      g.g_q = rot;
      return g;
    }
  }
  return g;
}

Realization::GElem Realization::random_unipotent(Rng& rng) const {
  GElem g = identity_group();
  g.mu = Rat(1);
  int n = msize_;
  auto lower_q = [&](QMat& m) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) m(i, j) = Rat(rand_small(rng, -2, 2));
  };
  switch (tag_) {
    case RealTag::GL:
      lower_q(g.g_q);
      lower_q(g.g2_q);
      return g;
    case RealTag::SP:
      lower_q(g.g_q);
      return g;
    case RealTag::UNITARY:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
          g.g_e(i, j) = Ext(Rat(rand_small(rng, -2, 2)),
                            Rat(rand_small(rng, -1, 1)), F_.u());
      return g;
    case RealTag::TYPE3: {
      int nb = rank_;
      for (int I = 0; I < nb; ++I)
        for (int J = 0; J < I; ++J)
          g.g_e.set_block(2 * I, 2 * J,
                          lblock(Rat(rand_small(rng, -1, 1)), Rat(rand_small(rng, -1, 1)),
                                 Rat(rand_small(rng, -1, 1)), Rat(rand_small(rng, -1, 1))));
      return g;
    }
    case RealTag::ORTHO1:
      return g;  // the rank-1 parabolic has trivial unipotent radical
  }
  return g;
}

Realization::VElem Realization::diagonal_element(const std::vector<Rat>& slots) const {
  if (static_cast<int>(slots.size()) != rank_)
    throw bad_scalar("need one coordinate per slot");
  VElem x = zero_vplus();
  for (int j = 0; j < rank_; ++j) {
    const Rat& v = slots[static_cast<size_t>(j)];
    if (v == 0) continue;
    switch (tag_) {
      case RealTag::GL:
        x.q(k() - j, j) = v;
        break;
      case RealTag::SP:
        x.q(rank_ - 1 - j, rank_ - 1 - j) = v;
        break;
      case RealTag::UNITARY:
        x.e(rank_ - 1 - j, rank_ - 1 - j) = Ext(v);
        break;
      case RealTag::TYPE3: {
        EMat j1(2, 2);
        j1(0, 1) = Ext(v);
        j1(1, 0) = Ext(v);
        x.e.set_block(2 * (rank_ - 1 - j), 2 * (rank_ - 1 - j), j1);
        break;
      }
      case RealTag::ORTHO1:
        x.q(0, 0) = v;
        break;
    }
  }
  return x;
}

Realization::VElem Realization::type3_block_diagonal(
    const std::vector<SquareClass>& slot_classes) const {
  if (tag_ != RealTag::TYPE3) throw bad_scalar("block diagonal needs the quaternionic model");
  if (static_cast<int>(slot_classes.size()) != rank_)
    throw bad_scalar("need one class per slot");
  VElem x = zero_vplus();
  for (int j = 0; j < rank_; ++j) {
    int pos = rank_ - 1 - j;
    x.e.set_block(2 * pos, 2 * pos,
                  canonical_splus(slot_classes[static_cast<size_t>(j)]));
  }
  return x;
}

Realization::VElem Realization::random_generic(Rng& rng) const {
  if (tag_ == RealTag::ORTHO1) {
    while (true) {
      VElem x = zero_vplus();
      for (int i = 0; i < 3; ++i) x.q(i, 0) = Rat(rand_small(rng, -3, 3));
      if (!x.q.is_zero()) return x;
    }
  }
  GElem g = random_group_element(rng);
  return act(g, identity_vplus());
}

Realization::VElem Realization::random_flag_generic(Rng& rng) const {
  std::vector<Rat> slots;
  auto reps = F_.class_reps();
  for (int j = 0; j < rank_; ++j)
    slots.push_back(reps[static_cast<size_t>(rand_small(rng, 0, 3))]);
  VElem x = diagonal_element(slots);
  if (tag_ == RealTag::ORTHO1) return x;
  GElem nu = random_unipotent(rng);
  return act(nu, x);
}

Rat Realization::chi0_of(const GElem& g) const {
  switch (tag_) {
    case RealTag::GL:
      return g.g_q.det() / g.g2_q.det();
    case RealTag::SP: {
      Rat d = g.g_q.det();
      Rat c = d * d;
      for (int i = 0; i < rank_; ++i) c /= g.mu;
      return c;
    }
    case RealTag::UNITARY: {
      Ext d = g.g_e.det();
      Rat c = d.norm();
      for (int i = 0; i < rank_; ++i) c /= g.mu;
      return c;
    }
    case RealTag::TYPE3: {
      Ext d = g.g_e.det();
      if (d.b != 0) throw bad_scalar("determinant of a J-commuting matrix is rational");
      Rat c = d.a * d.a;
      Rat fac = g.sqrtu_twist ? F_.u() / g.mu : Rat(1) / g.mu;
      for (int i = 0; i < 2 * rank_; ++i) c *= fac;
      return c;
    }
    case RealTag::ORTHO1:
      return g.mu * g.mu;
  }
  throw bad_scalar("unsupported model");
}

}  // namespace pgo

#include "pgo/qform.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace pgo {

namespace {

SquareClass class_of_minus_one(const PadicContext& F) {
  return F.square_class(Rat(-1));
}

/// Invariant triple (rank, disc, hasse) of a nondegenerate diagonal form.
struct Inv {
  int rank;
  SquareClass disc;
  int hasse;
  bool operator==(const Inv& o) const {
    return rank == o.rank && disc == o.disc && hasse == o.hasse;
  }
};

Inv invariants(const PadicContext& F, const QForm& q) {
  return {q.rank(), discriminant(F, q), hasse_invariant(F, q)};
}

bool isotropic_by_invariants(const PadicContext& F, const Inv& v) {
  if (v.rank <= 1) return false;
  SquareClass m1 = class_of_minus_one(F);
  if (v.rank == 2) return v.disc == m1;
  if (v.rank == 3) {
    // anisotropic exactly when the Hasse invariant differs from (-1,-d)
    Rat md = Rat(-1) * F.class_rep(v.disc);
    return v.hasse == F.hilbert_symbol(Rat(-1), md);
  }
  if (v.rank == 4) {
    if (v.disc != SquareClass::One) return true;
    return v.hasse == F.hilbert_symbol(Rat(-1), Rat(-1));
  }
  return true;  // rank >= 5
}

/// Finds a sorted list of class representatives with the given invariants.
/// The search space is tiny, so the result is memoized per (p, invariants).
std::vector<SquareClass> realize_diagonal(const PadicContext& F, const Inv& v) {
  static thread_local std::map<std::tuple<unsigned long, int, unsigned, int>,
                               std::vector<SquareClass>>
      cache;
  auto key = std::make_tuple(F.p().get_ui(), v.rank,
                             static_cast<unsigned>(v.disc), v.hasse);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;

  std::vector<SquareClass> tags(static_cast<size_t>(v.rank), SquareClass::One);
  // enumerate non-decreasing tag tuples
  while (true) {
    QForm q;
    for (SquareClass t : tags) q.coeffs.push_back(F.class_rep(t));
    if (invariants(F, q) == v) {
      cache.emplace(key, tags);
      return tags;
    }
    // next non-decreasing tuple
    int i = v.rank - 1;
    while (i >= 0 && tags[static_cast<size_t>(i)] == SquareClass::UPi) --i;
    if (i < 0) throw bad_scalar("unrealizable form invariants");
    auto next = static_cast<SquareClass>(
        static_cast<unsigned>(tags[static_cast<size_t>(i)]) + 1);
    for (int j = i; j < v.rank; ++j) tags[static_cast<size_t>(j)] = next;
  }
}

}  // namespace

SquareClass discriminant(const PadicContext& F, const QForm& q) {
  if (q.rank() < 1) throw bad_scalar("discriminant of rank-0 form");
  SquareClass d = SquareClass::One;
  for (const Rat& c : q.coeffs) d = d * F.square_class(c);
  return d;
}

int hasse_invariant(const PadicContext& F, const QForm& q) {
  if (q.rank() < 1) throw bad_scalar("Hasse invariant of rank-0 form");
  int h = 1;
  for (size_t i = 0; i < q.coeffs.size(); ++i)
    for (size_t j = i + 1; j < q.coeffs.size(); ++j)
      h *= F.hilbert_symbol(q.coeffs[i], q.coeffs[j]);
  return h;
}

bool is_isotropic(const PadicContext& F, const QForm& q) {
  if (q.rank() == 0) return false;
  return isotropic_by_invariants(F, invariants(F, q));
}

WittData witt_decompose(const PadicContext& F, const QForm& q) {
  WittData w;
  w.anisotropic_kernel.radical_dim = 0;
  if (q.rank() == 0) return w;
  Inv v = invariants(F, q);
  SquareClass m1 = class_of_minus_one(F);
  while (v.rank >= 2 && isotropic_by_invariants(F, v)) {
    // split one hyperbolic plane <1,-1>: disc and Hasse of the complement
    SquareClass d2 = v.disc * m1;
    int h2 = v.hasse * F.hilbert_symbol(Rat(-1), F.class_rep(d2));
    v = Inv{v.rank - 2, d2, h2};
    ++w.witt_index;
    if (v.rank == 0) return w;
  }
  for (SquareClass t : realize_diagonal(F, v))
    w.anisotropic_kernel.coeffs.push_back(F.class_rep(t));
  return w;
}

bool equivalent(const PadicContext& F, const QForm& q1, const QForm& q2) {
  if (q1.radical_dim != q2.radical_dim) return false;
  if (q1.rank() != q2.rank()) return false;
  if (q1.rank() == 0) return true;
  return invariants(F, q1) == invariants(F, q2);
}

QForm scale_form(const QForm& q, const Rat& c) {
  QForm s;
  s.radical_dim = q.radical_dim;
  for (const Rat& a : q.coeffs) s.coeffs.push_back(c * a);
  return s;
}

bool similar(const PadicContext& F, const QForm& q1, const QForm& q2) {
  for (const Rat& c : F.class_reps())
    if (equivalent(F, scale_form(q1, c), q2)) return true;
  return false;
}

std::set<SquareClass> represented_classes(const PadicContext& F,
                                          const QForm& q) {
  std::set<SquareClass> out;
  for (unsigned t = 0; t < 4; ++t) {
    auto c = static_cast<SquareClass>(t);
    if (is_isotropic(F, q)) {
      out.insert(c);  // isotropic forms are universal
      continue;
    }
    QForm ext = q;
    ext.coeffs.push_back(-F.class_rep(c));
    if (is_isotropic(F, ext)) out.insert(c);
  }
  return out;
}

QForm canonical_form(const PadicContext& F, const QForm& q) {
  QForm out;
  out.radical_dim = q.radical_dim;
  if (q.rank() == 0) return out;
  for (SquareClass t : realize_diagonal(F, invariants(F, q)))
    out.coeffs.push_back(F.class_rep(t));
  return out;
}

std::string similarity_class_id(const PadicContext& F, const QForm& q) {
  std::string best;
  for (const Rat& c : F.class_reps()) {
    QForm cf = canonical_form(F, scale_form(q, c));
    std::ostringstream os;
    os << "r" << cf.rank();
    for (const Rat& a : cf.coeffs) os << ":" << to_string(F.square_class(a));
    std::string s = os.str();
    if (best.empty() || s < best) best = s;
  }
  if (best.empty()) best = "r0";
  return best;
}

}  // namespace pgo

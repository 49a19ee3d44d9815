#include "pgo/orbits.hpp"

namespace pgo {

const char* to_string(Chi0Image c) {
  switch (c) {
    case Chi0Image::FullUnits: return "F*";
    case Chi0Image::Squares: return "F*^2";
    case Chi0Image::NormsE: return "N_{E/F}(E*)";
    case Chi0Image::IndexTwo: return "index-2 subgroup";
  }
  return "?";
}

long open_orbit_count(const GradedDescriptor& desc) {
  int k = desc.k;
  switch (desc.gtype) {
    case GType::I:
      return 1;
    case GType::II:
      if (desc.e == 2) return (k % 2 == 0) ? 1 : 2;
      if (desc.e == 1) {
        if (k == 0) return 1;
        if (k == 1) return 4;
        return (k % 2 == 0) ? 2 : 5;
      }
      if (desc.e == 3) return 4;
      throw bad_diagram("unknown type II descriptor");
    case GType::III:
      return k == 0 ? 3 : 4;
  }
  throw bad_diagram("unknown type");
}

long nonzero_orbit_count(const GradedDescriptor& desc) {
  int k = desc.k;
  long n = k + 1;
  switch (desc.gtype) {
    case GType::I:
      return n;
    case GType::II:
      if (desc.e == 1 || desc.e == 3) {
        if (n == 1) return 1;
        if (n == 2) return 5;
        if (desc.d != 1)
          throw bad_diagram("no closed-form orbit count for this family");
        // symplectic family
        if (n % 2 == 1) return 7 * ((n - 1) / 2);
        return 7 * ((n - 2) / 2) + 5;
      }
      if (desc.e == 2) {
        if (n == 1) return 1;
        if (n == 2) return 3;
        if (desc.d != 2)
          throw bad_diagram("no closed-form orbit count for this family");
        // unitary family
        if (n % 2 == 0) return 3 * (n / 2);
        return 3 * ((n - 1) / 2) + 1;
      }
      throw bad_diagram("unknown type II descriptor");
    case GType::III:
      // 3 orbits of rank 1, then 4 per higher rank; the zero orbit is not
      // counted here
      return 3 + 4L * k;
  }
  throw bad_diagram("unknown type");
}

Chi0Image chi0_image(const GradedDescriptor& desc) {
  int n = desc.k + 1;
  switch (desc.gtype) {
    case GType::I:
      return Chi0Image::FullUnits;
    case GType::II:
      if (desc.e == 1 || desc.e == 3)
        return (n % 2 == 0) ? Chi0Image::Squares : Chi0Image::FullUnits;
      if (desc.e == 2) {
        if (n % 2 == 1) return Chi0Image::FullUnits;
        if (n == 2 && desc.d != 2) return Chi0Image::IndexTwo;
        return Chi0Image::NormsE;
      }
      throw bad_diagram("unknown type II descriptor");
    case GType::III:
      return Chi0Image::Squares;
  }
  throw bad_diagram("unknown type");
}

long rank_QX(int m, int ell, int d) {
  return static_cast<long>(m) * ell + static_cast<long>(m) * (m - 1) / 2 * d;
}

long p_open_orbit_count(const GradedDescriptor& desc) {
  int k = desc.k;
  auto ipow = [](long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  };
  switch (desc.gtype) {
    case GType::I:
      return 1;
    case GType::II:
      return (desc.e == 2) ? ipow(2, k) : ipow(4, k);
    case GType::III:
      return ipow(3, k + 1);
  }
  throw bad_diagram("unknown type");
}

OrbitSummary orbit_summary(const GradedDescriptor& desc) {
  OrbitSummary s;
  s.open_orbits = open_orbit_count(desc);
  try {
    s.nonzero_orbits = nonzero_orbit_count(desc);
  } catch (const bad_diagram&) {
    s.nonzero_orbits = std::nullopt;
  }
  s.chi0_image = chi0_image(desc);
  s.p_open_orbits = p_open_orbit_count(desc);
  return s;
}

CharacterData character_data(const GradedDescriptor& desc) {
  CharacterData cd;
  int k = desc.k;
  int kappa = desc.kappa();
  for (int j = 0; j <= k; ++j) {
    cd.degrees.push_back(kappa * (k + 1 - j));
    std::vector<int> ex(static_cast<size_t>(k) + 1, 0);
    for (int s = j; s <= k; ++s) ex[static_cast<size_t>(s)] = kappa;
    cd.a_exponents.push_back(ex);
    std::vector<int> exm(static_cast<size_t>(k) + 1, 0);
    for (int s = 0; s <= k - j; ++s) exm[static_cast<size_t>(s)] = -kappa;
    cd.a_exponents_minus.push_back(exm);
  }
  return cd;
}

std::vector<Rat> t_involution(const std::vector<Rat>& s) {
  if (s.empty()) throw bad_scalar("t involution needs a nonempty vector");
  size_t n = s.size();
  std::vector<Rat> out(n);
  Rat sum(0);
  for (const Rat& x : s) sum += x;
  out[0] = -sum;
  for (size_t j = 1; j < n; ++j) out[j] = s[n - j];
  return out;
}

}  // namespace pgo

#ifndef PGO_ORBITS_HPP
#define PGO_ORBITS_HPP

#include <optional>
#include <string>
#include <vector>

#include "pgo/catalog.hpp"

namespace pgo {

/// Image of the character of the fundamental relative invariant.
enum class Chi0Image {
  FullUnits,   // all of F*
  Squares,     // F*^2
  NormsE,      // N_{E/F}(E*)
  IndexTwo,    // some index-2 subgroup of F*
};

const char* to_string(Chi0Image c);

struct OrbitSummary {
  std::optional<long> nonzero_orbits;  // absent when no closed form applies
  long open_orbits = 0;
  Chi0Image chi0_image = Chi0Image::FullUnits;
  long p_open_orbits = 0;
};

struct CharacterData {
  std::vector<int> degrees;  // degree of the j-th fundamental invariant
  // chi_j(a) = a^{kappa (lambda_j + ... + lambda_k)}: exponent vectors in
  // the basis lambda_0..lambda_k
  std::vector<std::vector<int>> a_exponents;
  std::vector<std::vector<int>> a_exponents_minus;
};

long open_orbit_count(const GradedDescriptor& desc);

/// Number of nonzero orbits; the zero orbit is not counted.  Only defined
/// for the families with a complete classification.
long nonzero_orbit_count(const GradedDescriptor& desc);

Chi0Image chi0_image(const GradedDescriptor& desc);

long rank_QX(int m, int ell, int d);

long p_open_orbit_count(const GradedDescriptor& desc);

OrbitSummary orbit_summary(const GradedDescriptor& desc);

CharacterData character_data(const GradedDescriptor& desc);

/// t(s) = (-s_0 - ... - s_k, s_k, s_{k-1}, ..., s_1); an involution.
std::vector<Rat> t_involution(const std::vector<Rat>& s);

}  // namespace pgo

#endif  // PGO_ORBITS_HPP

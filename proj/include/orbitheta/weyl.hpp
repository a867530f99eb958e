#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orbitheta/halfint.hpp"
#include "orbitheta/orbit.hpp"

namespace orbitheta {

// Classical Weyl group acting on coordinates: A = permutations, B and C =
// signed permutations, D = signed permutations with an even number of flips.
struct WeylType {
  Family family = Family::C;
  int rank = 0;

  bool operator==(const WeylType& o) const { return family == o.family && rank == o.rank; }
};

WeylType weyl_of(AlgebraType a);

struct GroupSpec {
  AlgebraType algebra;
  Flavor flavor = Flavor::Sp;

  WeylType weyl() const { return weyl_of(algebra); }
  bool operator==(const GroupSpec& o) const {
    return algebra == o.algebra && flavor == o.flavor;
  }
  std::string name() const;
};

struct LanglandsParam {
  HalfIntVector lambda_L;
  HalfIntVector lambda_R;
  GroupSpec group;
  int sgn_twist = 0;  // O-flavor bookkeeping bit

  HalfIntVector mu() const;  // lambda_L - lambda_R; must be a weight of the group
  HalfIntVector nu() const { return lambda_L.plus(lambda_R); }
};

LanglandsParam param_from_mu_nu(const HalfIntVector& mu, const HalfIntVector& nu,
                                GroupSpec group, int sgn_twist = 0);

// Canonical W-orbit representative. B/C: absolute values sorted descending.
// D: absolute values sorted descending, with the sign of the product carried
// by the last entry when no entry vanishes. A: sorted descending.
HalfIntVector dominant_form(WeylType w, const HalfIntVector& v);

bool same_w_orbit(WeylType w, const HalfIntVector& a, const HalfIntVector& b);

// True iff some single w in W maps (a1, b1) to (a2, b2) acting diagonally.
bool diag_orbit_equal(WeylType w, const HalfIntVector& a1, const HalfIntVector& b1,
                      const HalfIntVector& a2, const HalfIntVector& b2);

bool param_equivalent(const LanglandsParam& p1, const LanglandsParam& p2, bool allow_swap);

// w (mu, nu) = (mu, -nu) for some w acting diagonally.
bool is_hermitian(const LanglandsParam& p);

struct IntegralBlock {
  std::vector<int> indices;      // coordinate positions
  bool half_integral = false;    // entries in Z+1/2
  std::string root_type;         // type of the integral roots inside the block
  std::string dual_type;         // type of the integral coroots (Langlands dual)
};

// Splits coordinates into the integer block and the half-integer block and
// names the classical subsystem each carries.
std::vector<IntegralBlock> integral_system(const HalfIntVector& lambda, Family family);

// Test support: applies every Weyl element to v. The callback gets the image
// vector; enumeration order is deterministic.
void for_each_weyl_image(WeylType w, const HalfIntVector& v,
                         const std::function<void(const HalfIntVector&)>& fn);

// Test support: diagonal-orbit equality by explicit enumeration of W.
bool diag_orbit_equal_bruteforce(WeylType w, const HalfIntVector& a1, const HalfIntVector& b1,
                                 const HalfIntVector& a2, const HalfIntVector& b2);

}  // namespace orbitheta

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sl1d/algebra.hpp"
#include "sl1d/cyclotomic.hpp"
#include "sl1d/group.hpp"
#include "sl1d/zeta.hpp"

namespace sl1d {

enum class ConstructionCase { Odd, DivisibleBy2ell, EvenOddEll, EvenQuaternion };
const char* construction_case_name(ConstructionCase c);
/// Case of level m >= 1.
ConstructionCase construction_case(int ell, int m);

struct SubgroupDescriptor {
  std::string shape;          ///< "C*G^r", "C*J", or "P*J, extended over C*G^r"
  int congruence_index;       ///< r with the inertia group C * G^r
  int kernel_index;           ///< k with theta defined on G^k_{m+1}
  BigInt centralizer_order;   ///< |C_{m+1}(Y)|
  BigInt inertia_order;       ///< |C * G^r| in G_{m+1}
  BigInt order;               ///< order of the subgroup carrying the linear character
  std::optional<int> isotropic_dim;  ///< dim of the isotropic subspace j for even m not divisible by 2l
};

struct InducingDatum {
  const FieldTower* F = nullptr;
  int m = 0;
  ConstructionCase kase = ConstructionCase::Odd;
  DElem Y;
  SubgroupDescriptor subgroup;
  std::string linear_character;
  BigInt group_order;              ///< |G_{m+1}|
  BigInt predicted_degree;         ///< d_m
  BigInt predicted_inertia_index;  ///< |G_{m+1} : C * G^r|
  BigInt formula_degree;           ///< degree from the subgroup orders
  BigInt characters_per_orbit;     ///< |Irr(G | theta)| for one orbit of Y
  bool monomial = true;            ///< false: extension step before inducing
};

/// Y = nu^{-m} t for l not dividing m, pi^{-m/l} w with w trace zero otherwise.
DElem canonical_representative(const FieldTower& F, int m);
/// Index k of the layer G^k_{m+1} carrying theta: floor(m/2) + 1.
int kernel_index(int m);
/// Index of the inertia congruence subgroup: ceil(m/2).
int inertia_index(int m);

/// |C_{m+1}(Y)| and |C_{m+1}(Y) cap G^k_{m+1}| for Y with jump -m.
BigInt centralizer_image_order(const FieldTower& F, int m, int k = 0);

/// BadRepresentative unless trd(Y) = 0 and jump(Y) = -m.
InducingDatum construct_inducing_datum(const FieldTower& F, int m, const DElem& Y);

/// Orbit representatives of G on the dual elements of level m (the smallest key per orbit).
std::vector<DElem> level_representatives(const FieldTower& F, int m, std::uint64_t guard = 1'000'000);
/// Number of dual elements of level m in the dual window of kernel_index(m).
BigInt level_dual_count(std::uint64_t q, int ell, int m);

struct VerificationReport {
  int m = 0;
  ConstructionCase kase = ConstructionCase::Odd;
  std::string representative;
  int group_order = 0;
  int exponent = 0;
  int subgroup_order = 0;        ///< explicit order of the subgroup carrying the linear character
  bool inertia_matches = false;  ///< brute-force inertia group equals C * G^r
  int linear_extensions = 0;     ///< linear characters found on the subgroup (gluings)
  int extension_values = 0;      ///< quaternion case: extension values found on the generator
  int characters_checked = 0;
  int distinct_characters = 0;
  long long degree = 0;
  bool norm_one = false;
  bool level_exact = false;
  bool monomial = true;
  /// Values on the classes of G of each distinct verified character.
  std::vector<std::vector<Cyclo>> characters;
};

/// Builds the subgroup and linear character of the datum inside G = G_{m+1}, induces and checks
/// norm 1, degree d_m, and level m. VerificationFailed names the first failing check.
VerificationReport induce_and_verify(const QuotientGroup& G, const InducingDatum& datum);

/// Explicit Heisenberg lift on Gamma^1 = G^r_{2r+1} for l odd: the induced character from J is
/// irreducible of degree q^{(l-1)/2}.
struct HeisenbergCheck {
  int gamma_order = 0;
  int J_order = 0;
  int isotropic_dim = 0;
  long long degree = 0;
  bool linear_on_J = false;
  bool norm_one = false;
};
HeisenbergCheck heisenberg_check(const FieldTower& F, int r, const DElem& Y, std::uint64_t guard = 100'000);

struct LevelCensus {
  int m = 0;
  BigInt a;                        ///< a_m
  BigInt d;                        ///< d_m
  BigInt orbit_formula_count;      ///< level_dual_count * |G_{m+1} : G^k_{m+1}| / d^2
  std::optional<int> representatives;
  std::optional<int> explicit_count;  ///< distinct characters built explicitly
  bool ok = true;
};
struct Census {
  std::uint64_t q;
  int ell;
  std::vector<LevelCensus> levels;
  std::optional<int> class_count;  ///< classes of G_{M+1} when buildable
  bool ok = true;
};
/// Levels 0..max_level. With explicit = true, levels whose group fits the guard are constructed.
Census census(const FieldTower& F, int max_level, bool explicit_construction = false,
              std::uint64_t guard = 5'000);

}  // namespace sl1d

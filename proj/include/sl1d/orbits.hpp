#pragma once

#include <optional>
#include <vector>

#include "sl1d/algebra.hpp"
#include "sl1d/zeta.hpp"

namespace sl1d {

enum class Acting { Ounits, G, G1 };
const char* acting_name(Acting a);

enum class StabilizerCase { WholeGroup, CentralizerTimesCongruence };
enum class CentralizerKind { UnramifiedField, RamifiedField };
const char* stabilizer_case_name(StabilizerCase c);
const char* centralizer_kind_name(CentralizerKind k);

struct StabilizerStructure {
  StabilizerCase kase;
  std::optional<int> jump;  ///< nullopt: y central
  int congruence_level;     ///< m - jump, 0 for WholeGroup
  std::optional<CentralizerKind> centralizer_kind;
};

/// St^m(y) = O^x when jump >= m, else C(y) (1 + P^{m-j}).
StabilizerStructure stabilizer_structure(const DElem& y, int m);

/// Size of the m-th similarity class of y under O^x. JumpNotBelowM if jump >= m.
BigInt orbit_size_Ounits(const DElem& y, int m);
/// Formula size under any of the three acting groups.
BigInt orbit_size(const DElem& y, int m, Acting acting);

struct OrbitReport {
  Acting acting;
  int m;
  int jump;
  Kind kind;
  BigInt formula_size;
  std::optional<BigInt> bruteforce_size;
  std::optional<int> splitting_count;  ///< G-classes inside the O^x-class
  BigInt ratio_G_over_G1;
  BigInt ratio_Ounits_over_G1;
};

/// Orbit under G; the O^x-class splits into iota classes exactly when y is ramified.
OrbitReport orbit_size_G(const DElem& y, int m);

/// Generators of the acting group modulo 1 + P^P.
std::vector<DElem> acting_generators(const FieldTower& F, int P, Acting acting);
/// Order of the acting group modulo 1 + P^P.
BigInt acting_group_order(const FieldTower& F, int P, Acting acting);
/// Precision at which conjugation on y mod P^m is determined: m - min(0, lo(y)).
int acting_precision(const DElem& y, int m);

/// Orbit of y mod P^m by closure under conjugation, sorted by canonical key.
std::vector<DElem> brute_force_orbit(const DElem& y, int m, Acting acting, std::uint64_t guard = 1'000'000);
/// Sizes of the G-orbits partitioning the O^x-orbit of y, in order of first element.
std::vector<std::size_t> split_into_G_orbits(const DElem& y, int m, std::uint64_t guard = 1'000'000);

/// Elements of the acting group mod 1 + P^P fixing y mod P^m, by enumeration.
std::vector<DElem> brute_force_stabilizer(const DElem& y, int m, Acting acting, std::uint64_t guard = 100'000);

/// Units of the ring of integers of K(y) modulo P^P, for the exact lift of a non-central y.
std::vector<DElem> centralizer_units(const DElem& y, int P, std::uint64_t guard = 100'000);
/// The set C(y) (1 + P^{m-j}) modulo P^P, sorted by key.
std::vector<DElem> stabilizer_by_decomposition(const DElem& y, int m, std::uint64_t guard = 100'000);

}  // namespace sl1d

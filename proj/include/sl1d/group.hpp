#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sl1d/algebra.hpp"

namespace sl1d {

/// Explicit finite group G_m = G / G^m, elements stored as residues modulo P^m.
/// Element 0 is the identity.
class QuotientGroup {
 public:
  QuotientGroup(const FieldTower& F, int m, std::vector<DElem> elements, std::vector<DElem> generators);

  const FieldTower& tower() const { return *F_; }
  int level() const { return m_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const DElem& element(int i) const { return elems_[i]; }
  const std::vector<DElem>& elements() const { return elems_; }
  /// Index of a residue, nullopt if it is not in the group.
  std::optional<int> find(const DElem& x) const;
  int index_of(const DElem& x) const;

  int identity() const { return 0; }
  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }
  /// g x g^{-1}
  int conj(int g, int x) const { return mul(mul(g, x), inv_[g]); }
  int power(int a, long long e) const;
  const std::vector<int>& generators() const { return gens_; }

  const std::vector<std::vector<int>>& classes() const;
  int class_of(int x) const;
  int class_count() const { return static_cast<int>(classes().size()); }

  /// Subgroup generated by gens, sorted.
  std::vector<int> closure(const std::vector<int>& gens) const;
  std::vector<int> normal_closure(const std::vector<int>& gens) const;
  std::vector<int> commutator_subgroup() const;
  /// Image of G^k: elements congruent to 1 modulo P^k.
  std::vector<int> congruence_subgroup(int k) const;
  int element_order(int a) const;
  int exponent() const;
  bool is_abelian() const;

 private:
  const FieldTower* F_;
  int m_;
  std::vector<DElem> elems_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::vector<std::int32_t> table_;  // empty when too large

  struct Lazy;
  std::shared_ptr<Lazy> lazy_;
  int mul_slow(int a, int b) const;
};

/// Generators of G modulo P^m: a generator of the norm-one constants and
/// G^1 layer generators obtained by normalizing 1 + nu^k b.
std::vector<DElem> group_generators(const FieldTower& F, int m);
/// Generators of the congruence subgroup G^k modulo P^m.
std::vector<DElem> congruence_generators(const FieldTower& F, int k, int m);

/// Norm-one constants of F_{q^l}.
std::vector<Fql> norm_one_constants(const FieldTower& F);

/// Builds G_m by enumerating all residues with reduced norm 1 at the induced central precision.
QuotientGroup build_quotient_group(const FieldTower& F, int m, std::uint64_t guard = 100000);

}  // namespace sl1d

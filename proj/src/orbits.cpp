#include "sl1d/orbits.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

#include "sl1d/error.hpp"
#include "sl1d/group.hpp"
#include "sl1d/parallel.hpp"

namespace sl1d {

namespace {

BigInt bpow(std::uint64_t b, long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= b;
  return r;
}

BigInt a0(const FieldTower& F) { return (bpow(F.q(), F.ell()) - 1) / (F.q() - 1); }

/// Jump of y, or nullopt when no non-central term occurs below m.
std::optional<int> jump_below(const DElem& y, int m) {
  const JumpBound b = jump_bound(y);
  if (b.determined) {
    if (b.value >= m) return std::nullopt;
    return b.value;
  }
  if (b.value >= m) return std::nullopt;
  raise(ErrorKind::UndeterminedAtPrecision,
        "jump is not determined: y is known modulo P^" + std::to_string(b.value) + " only");
}

int require_jump(const DElem& y, int m) {
  const auto j = jump_below(y, m);
  if (!j) raise(ErrorKind::JumpNotBelowM, "jump(y) >= m: the class is the single coset of y");
  return *j;
}

bool ramified(const FieldTower& F, int j) { return ((j % F.ell()) + F.ell()) % F.ell() != 0; }

DElem at_level(const DElem& y, int m) {
  if (y.prec() < m) raise(ErrorKind::InsufficientPrecision, "y is not known modulo P^m");
  return y.truncated(m);
}

std::vector<DElem> sorted_by_key(std::vector<DElem> v) {
  std::vector<std::pair<std::string, std::size_t>> keys(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) keys[i] = {v[i].key(), i};
  std::sort(keys.begin(), keys.end());
  std::vector<DElem> out;
  out.reserve(v.size());
  for (auto& k : keys) out.push_back(std::move(v[k.second]));
  return out;
}

std::vector<DElem> dedup(std::vector<DElem> v) {
  std::unordered_set<std::string> seen;
  std::vector<DElem> out;
  for (auto& x : v)
    if (seen.insert(x.key()).second) out.push_back(std::move(x));
  return sorted_by_key(std::move(out));
}

Fql basis_element(const FieldTower& F, int i) {
  Poly c(F.degree(), 0);
  c[i] = 1;
  return F.from_coords(c);
}

}  // namespace

const char* acting_name(Acting a) {
  switch (a) {
    case Acting::Ounits: return "Ounits";
    case Acting::G: return "G";
    case Acting::G1: return "G1";
  }
  return "?";
}

const char* stabilizer_case_name(StabilizerCase c) {
  return c == StabilizerCase::WholeGroup ? "WholeGroup" : "CentralizerTimesCongruence";
}

const char* centralizer_kind_name(CentralizerKind k) {
  return k == CentralizerKind::UnramifiedField ? "UnramifiedField" : "RamifiedField";
}

StabilizerStructure stabilizer_structure(const DElem& y, int m) {
  const auto j = jump_below(y, m);
  if (!j) {
    const JumpBound b = jump_bound(y);
    std::optional<int> jj;
    if (b.determined && b.value < kExact) jj = b.value;
    return {StabilizerCase::WholeGroup, jj, 0, std::nullopt};
  }
  const auto kind = ramified(y.tower(), *j) ? CentralizerKind::RamifiedField : CentralizerKind::UnramifiedField;
  return {StabilizerCase::CentralizerTimesCongruence, *j, m - *j, kind};
}

BigInt orbit_size_Ounits(const DElem& y, int m) {
  const FieldTower& F = y.tower();
  const int j = require_jump(y, m);
  const int d = m - j, ell = F.ell();
  if (!ramified(F, j)) return bpow(F.q(), static_cast<long>(ell) * (d - ceil_div(d, ell)));
  return a0(F) * bpow(F.q(), static_cast<long>(ell - 1) * (d - 1));
}

BigInt orbit_size(const DElem& y, int m, Acting acting) {
  const FieldTower& F = y.tower();
  const BigInt o = orbit_size_Ounits(y, m);
  if (!ramified(F, *jump_below(y, m))) return o;
  switch (acting) {
    case Acting::Ounits: return o;
    case Acting::G: return o / F.iota();
    case Acting::G1: return o / a0(F);
  }
  return o;
}

OrbitReport orbit_size_G(const DElem& y, int m) {
  const FieldTower& F = y.tower();
  OrbitReport r;
  r.acting = Acting::G;
  r.m = m;
  r.jump = require_jump(y, m);
  const bool ram = ramified(F, r.jump);
  r.kind = ram ? Kind::Ramified : Kind::Unramified;
  r.formula_size = orbit_size(y, m, Acting::G);
  r.splitting_count = ram ? F.iota() : 1;
  r.ratio_G_over_G1 = ram ? a0(F) / F.iota() : BigInt(1);
  r.ratio_Ounits_over_G1 = ram ? a0(F) : BigInt(1);
  return r;
}

int acting_precision(const DElem& y, int m) {
  const int lo = y.is_zero() ? 0 : y.lo();
  return m - std::min(0, lo);
}

std::vector<DElem> acting_generators(const FieldTower& F, int P, Acting acting) {
  std::vector<DElem> out;
  switch (acting) {
    case Acting::Ounits:
      out.push_back(DElem::constant(F, F.generator(), P));
      for (int k = 1; k < P; ++k)
        for (int i = 0; i < F.degree(); ++i)
          out.push_back((DElem::one(F) + DElem::monomial(F, k, basis_element(F, i))).with_precision(P));
      break;
    case Acting::G: out = group_generators(F, P); break;
    case Acting::G1: out = congruence_generators(F, 1, P); break;
  }
  return out;
}

BigInt acting_group_order(const FieldTower& F, int P, Acting acting) {
  switch (acting) {
    case Acting::Ounits: return BigInt(F.size() - 1) * bpow(F.size(), P - 1);
    case Acting::G: return group_order(F.q(), F.ell(), P);
    case Acting::G1: return group_order(F.q(), F.ell(), P) / a0(F);
  }
  return 0;
}

std::vector<DElem> brute_force_orbit(const DElem& y, int m, Acting acting, std::uint64_t guard) {
  const FieldTower& F = y.tower();
  const DElem y0 = at_level(y, m);
  const int P = acting_precision(y0, m);
  const std::vector<DElem> gens = acting_generators(F, P, acting);
  std::vector<DElem> ginv;
  for (const auto& g : gens) ginv.push_back(inv(g));

  std::unordered_set<std::string> seen{y0.key()};
  std::vector<DElem> all{y0};
  std::vector<DElem> frontier{y0};
  while (!frontier.empty()) {
    std::vector<std::vector<std::pair<std::string, DElem>>> found;
    std::mutex mu;
    parallel_for(frontier.size(), [&](std::size_t b, std::size_t e) {
      std::vector<std::pair<std::string, DElem>> local;
      for (std::size_t i = b; i < e; ++i)
        for (std::size_t k = 0; k < gens.size(); ++k) {
          DElem c = (gens[k] * frontier[i] * ginv[k]).truncated(m);
          local.emplace_back(c.key(), std::move(c));
        }
      std::lock_guard<std::mutex> lock(mu);
      found.push_back(std::move(local));
    });
    std::vector<DElem> next;
    for (auto& chunk : found)
      for (auto& [key, x] : chunk)
        if (seen.insert(key).second) {
          if (seen.size() > guard) raise(ErrorKind::TooLarge, "orbit exceeds the guard");
          all.push_back(x);
          next.push_back(std::move(x));
        }
    frontier = std::move(next);
  }
  return sorted_by_key(std::move(all));
}

std::vector<std::size_t> split_into_G_orbits(const DElem& y, int m, std::uint64_t guard) {
  const std::vector<DElem> O = brute_force_orbit(y, m, Acting::Ounits, guard);
  std::unordered_set<std::string> done;
  std::vector<std::size_t> sizes;
  for (const auto& x : O) {
    if (done.count(x.key())) continue;
    const auto orb = brute_force_orbit(x, m, Acting::G, guard);
    for (const auto& z : orb) done.insert(z.key());
    sizes.push_back(orb.size());
  }
  return sizes;
}

std::vector<DElem> brute_force_stabilizer(const DElem& y, int m, Acting acting, std::uint64_t guard) {
  const FieldTower& F = y.tower();
  const DElem y0 = at_level(y, m);
  const int P = acting_precision(y0, m);
  const BigInt order = acting_group_order(F, P, acting);
  if (order > guard) raise(ErrorKind::TooLarge, "acting group of order " + order.str() + " exceeds the guard");
  std::vector<DElem> elems;
  if (acting == Acting::Ounits) {
    const auto res = enumerate_residues(F, 1, P);
    for (int t = 1; t < F.size(); ++t)
      for (const auto& r : res)
        elems.push_back((DElem::constant(F, static_cast<Fql>(t)) * (DElem::one(F) + r)).truncated(P));
  } else {
    const QuotientGroup G = build_quotient_group(F, P, guard);
    for (const auto& g : G.elements())
      if (acting == Acting::G || g.coeff(0) == 1) elems.push_back(g);
  }
  std::vector<char> fix(elems.size(), 0);
  parallel_for(elems.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) fix[i] = (elems[i] * y0 * inv(elems[i])).truncated(m) == y0;
  });
  std::vector<DElem> out;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (fix[i]) out.push_back(std::move(elems[i]));
  return sorted_by_key(std::move(out));
}

std::vector<DElem> centralizer_units(const DElem& y, int P, std::uint64_t guard) {
  const FieldTower& F = y.tower();
  const int ell = F.ell();
  const DElem yl = y.exact_lift();
  const JumpBound jb = jump_bound(yl);
  if (jb.value >= kExact) raise(ErrorKind::BadInput, "central element: the centralizer is all of O^x");
  const int j = jb.value;
  // Drop the central terms below the jump; they do not change the centralizer.
  std::vector<Fql> cs;
  for (int e = j; e < yl.hi(); ++e) cs.push_back(yl.coeff(e));
  const DElem yt = DElem::from_coeffs(F, j, cs);
  const std::vector<Fql>& fq = F.fq_elements();
  std::vector<DElem> out;

  if (ramified(F, j)) {
    int b = 1;
    while (((b * j) % ell + ell) % ell != 1) ++b;
    const int a = (1 - b * j) / ell;
    // Uniformizer of K(y): pi^a y^b has valuation 1/l.
    const DElem u = (DElem::pi_power(F, a) * power(yt, b)).truncated(P);
    BigInt count = BigInt(F.q() - 1) * bpow(F.q(), P - 1);
    if (count > guard) raise(ErrorKind::TooLarge, "centralizer enumeration exceeds the guard");
    std::vector<DElem> pw{DElem::one(F, P)};
    for (int i = 1; i < P; ++i) pw.push_back((pw.back() * u).truncated(P));
    std::vector<int> idx(P, 0);
    for (;;) {
      if (idx[0] != 0) {
        DElem s(F, P);
        for (int i = 0; i < P; ++i)
          if (idx[i]) s = s + DElem::constant(F, fq[idx[i]]) * pw[i];
        out.push_back(s.truncated(P));
      }
      int i = 0;
      while (i < P && ++idx[i] == F.q()) idx[i++] = 0;
      if (i == P) break;
    }
  } else {
    const DElem w = DElem::pi_power(F, -(j / ell)) * yt;
    const int K = ceil_div(P, ell);
    BigInt count = bpow(F.q(), static_cast<long>(ell) * K);
    if (count > guard) raise(ErrorKind::TooLarge, "centralizer enumeration exceeds the guard");
    // Basis pi^t w^i of o[w] modulo P^P.
    std::vector<DElem> basis;
    DElem wi = DElem::one(F, P);
    for (int i = 0; i < ell; ++i) {
      for (int t = 0; t < K; ++t) basis.push_back((DElem::pi_power(F, t) * wi).truncated(P));
      wi = (wi * w).truncated(P);
    }
    const int n = static_cast<int>(basis.size());
    std::vector<int> idx(n, 0);
    for (;;) {
      DElem s(F, P);
      for (int i = 0; i < n; ++i)
        if (idx[i]) s = s + DElem::constant(F, fq[idx[i]]) * basis[i];
      if (!s.is_zero() && s.lo() == 0) out.push_back(s.truncated(P));
      int i = 0;
      while (i < n && ++idx[i] == F.q()) idx[i++] = 0;
      if (i == n) break;
    }
  }
  return dedup(std::move(out));
}

std::vector<DElem> stabilizer_by_decomposition(const DElem& y, int m, std::uint64_t guard) {
  const FieldTower& F = y.tower();
  const int j = require_jump(y, m);
  const DElem y0 = at_level(y, m);
  const int P = acting_precision(y0, m);
  const std::vector<DElem> C = centralizer_units(y, P, guard);
  const int k = std::min(m - j, P);
  const std::vector<DElem> U = enumerate_residues(F, k, P);
  if (BigInt(C.size()) * U.size() > BigInt(guard) * 100)
    raise(ErrorKind::TooLarge, "stabilizer product set exceeds the guard");
  std::vector<DElem> prod;
  for (const auto& c : C)
    for (const auto& u : U) prod.push_back((c * (DElem::one(F, P) + u)).truncated(P));
  return dedup(std::move(prod));
}

}  // namespace sl1d

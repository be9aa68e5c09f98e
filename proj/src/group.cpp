#include "sl1d/group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "sl1d/error.hpp"
#include "sl1d/parallel.hpp"
#include "sl1d/zeta.hpp"

namespace sl1d {

namespace {
constexpr std::uint64_t kMaxTableEntries = 10'000'000;
}

struct QuotientGroup::Lazy {
  std::once_flag once;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
};

QuotientGroup::QuotientGroup(const FieldTower& F, int m, std::vector<DElem> elements, std::vector<DElem> generators)
    : F_(&F), m_(m), elems_(std::move(elements)), lazy_(std::make_shared<Lazy>()) {
  const int n = size();
  if (n == 0 || elems_[0] != DElem::one(F, m)) raise(ErrorKind::BadInput, "element 0 must be the identity");
  index_.reserve(n * 2);
  for (int i = 0; i < n; ++i) {
    elems_[i] = elems_[i].with_precision(m);
    if (!index_.emplace(elems_[i].key(), i).second) raise(ErrorKind::BadInput, "duplicate group element");
  }
  if (static_cast<std::uint64_t>(n) * n <= kMaxTableEntries) {
    table_.assign(static_cast<std::size_t>(n) * n, -1);
    parallel_for(n, [&](std::size_t b, std::size_t e) {
      for (std::size_t a = b; a < e; ++a)
        for (int c = 0; c < n; ++c) table_[a * n + c] = mul_slow(static_cast<int>(a), c);
    });
  }
  inv_.assign(n, -1);
  parallel_for(n, [&](std::size_t b, std::size_t e) {
    for (std::size_t a = b; a < e; ++a) inv_[a] = index_of(sl1d::inv(elems_[a]).truncated(m_));
  });
  for (const auto& g : generators) {
    const int i = index_of(g.truncated(m_));
    if (i != 0 && std::find(gens_.begin(), gens_.end(), i) == gens_.end()) gens_.push_back(i);
  }
}

std::optional<int> QuotientGroup::find(const DElem& x) const {
  const auto it = index_.find(x.with_precision(m_).key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int QuotientGroup::index_of(const DElem& x) const {
  const auto i = find(x);
  if (!i) raise(ErrorKind::BadInput, "residue is not an element of the group");
  return *i;
}

int QuotientGroup::mul_slow(int a, int b) const { return index_of((elems_[a] * elems_[b]).truncated(m_)); }

int QuotientGroup::mul(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * size() + b];
  return mul_slow(a, b);
}

int QuotientGroup::power(int a, long long e) const {
  if (e < 0) return power(inv_[a], -e);
  int r = 0, b = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
  }
  return r;
}

const std::vector<std::vector<int>>& QuotientGroup::classes() const {
  std::call_once(lazy_->once, [this] {
    const int n = size();
    auto& cls = lazy_->classes;
    auto& of = lazy_->class_of;
    of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
      if (of[x] >= 0) continue;
      const int id = static_cast<int>(cls.size());
      std::vector<int> c{x};
      of[x] = id;
      for (std::size_t i = 0; i < c.size(); ++i)
        for (int g : gens_) {
          const int y = conj(g, c[i]);
          if (of[y] < 0) {
            of[y] = id;
            c.push_back(y);
          }
        }
      std::sort(c.begin(), c.end());
      cls.push_back(std::move(c));
    }
  });
  return lazy_->classes;
}

int QuotientGroup::class_of(int x) const {
  classes();
  return lazy_->class_of[x];
}

std::vector<int> QuotientGroup::closure(const std::vector<int>& gens) const {
  std::vector<char> in(size(), 0);
  std::vector<int> out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int g : gens) {
      const int y = mul(out[i], g);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> QuotientGroup::normal_closure(const std::vector<int>& gens) const {
  std::vector<int> s = gens;
  for (;;) {
    const std::vector<int> H = closure(s);
    std::vector<char> in(size(), 0);
    for (int h : H) in[h] = 1;
    bool changed = false;
    const std::vector<int> cur = s;
    for (int g : gens_)
      for (int x : cur) {
        const int c = conj(g, x);
        if (!in[c]) {
          in[c] = 1;
          s.push_back(c);
          changed = true;
        }
      }
    if (!changed) return H;
  }
}

std::vector<int> QuotientGroup::commutator_subgroup() const {
  std::vector<int> comms;
  for (int a : gens_)
    for (int b : gens_) {
      const int c = mul(mul(a, b), mul(inv_[a], inv_[b]));
      if (c != 0) comms.push_back(c);
    }
  return normal_closure(comms);
}

std::vector<int> QuotientGroup::congruence_subgroup(int k) const {
  std::vector<int> out;
  const DElem one = DElem::one(*F_, m_);
  for (int i = 0; i < size(); ++i) {
    const DElem d = elems_[i] - one;
    if (d.is_zero() || d.lo() >= k) out.push_back(i);
  }
  return out;
}

int QuotientGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

int QuotientGroup::exponent() const {
  int e = 1;
  for (int i = 0; i < size(); ++i) e = std::lcm(e, element_order(i));
  return e;
}

bool QuotientGroup::is_abelian() const {
  for (int a : gens_)
    for (int b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Fql> norm_one_constants(const FieldTower& F) {
  std::vector<Fql> out;
  for (int x = 1; x < F.size(); ++x)
    if (F.galois_norm(x) == 1) out.push_back(static_cast<Fql>(x));
  return out;
}

std::vector<DElem> congruence_generators(const FieldTower& F, int k, int m) {
  std::vector<DElem> out;
  for (int e = std::max(k, 1); e < m; ++e)
    for (int i = 0; i < F.degree(); ++i) {
      const Fql b = F.from_coords([&] {
        Poly c(F.degree(), 0);
        c[i] = 1;
        return c;
      }());
      const DElem x = (DElem::one(F) + DElem::monomial(F, e, b)).with_precision(m);
      const DElem h = normalize_to_G1(x).h.truncated(m);
      if (h != DElem::one(F, m)) out.push_back(h);
    }
  return out;
}

std::vector<DElem> group_generators(const FieldTower& F, int m) {
  std::vector<DElem> out;
  if (m < 1) return out;
  const Fql t = F.pow(F.generator(), F.q() - 1);
  if (t != 1) out.push_back(DElem::constant(F, t, m));
  for (auto& h : congruence_generators(F, 1, m)) out.push_back(std::move(h));
  return out;
}

QuotientGroup build_quotient_group(const FieldTower& F, int m, std::uint64_t guard) {
  if (m < 1) raise(ErrorKind::BadInput, "quotient level must be >= 1");
  const BigInt order = group_order(F.q(), F.ell(), m);
  if (order > guard)
    raise(ErrorKind::TooLarge, "|G_" + std::to_string(m) + "| = " + order.str() + " exceeds the guard " +
                                   std::to_string(guard));
  const std::vector<DElem> res = enumerate_residues(F, 1, m);
  std::vector<char> keep(res.size(), 0);
  const DElem one = DElem::one(F, m);
  parallel_for(res.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) keep[i] = is_group_element(one + res[i], m);
  });
  std::vector<DElem> g1;
  for (std::size_t i = 0; i < res.size(); ++i)
    if (keep[i]) g1.push_back((one + res[i]).truncated(m));
  std::vector<DElem> elems;
  elems.reserve(g1.size() * (F.q() + 1));
  for (Fql t : norm_one_constants(F)) {
    const DElem c = DElem::constant(F, t, m);
    for (const auto& h : g1) elems.push_back((c * h).truncated(m));
  }
  if (BigInt(elems.size()) != order)
    raise(ErrorKind::VerificationFailed, "enumerated " + std::to_string(elems.size()) + " elements, expected " +
                                             order.str());
  std::vector<std::string> keys(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) keys[i] = elems[i].key();
  std::vector<std::size_t> perm(elems.size());
  std::iota(perm.begin(), perm.end(), 0);
  const std::string id = one.key();
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const bool ia = keys[a] == id, ib = keys[b] == id;
    if (ia != ib) return ia;
    return keys[a] < keys[b];
  });
  std::vector<DElem> sorted;
  sorted.reserve(elems.size());
  for (auto i : perm) sorted.push_back(std::move(elems[i]));
  return QuotientGroup(F, m, std::move(sorted), group_generators(F, m));
}

}  // namespace sl1d

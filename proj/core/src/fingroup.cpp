#include "eqop/fingroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eqop {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) throw std::invalid_argument("perm size mismatch");
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

long long perm_rank(const Perm& p) {
  int n = static_cast<int>(p.size());
  long long r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    r += smaller * factorial(n - 1 - i);
  }
  return r;
}

Perm perm_unrank(int n, long long r) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  Perm p;
  p.reserve(n);
  for (int i = n - 1; i >= 0; --i) {
    long long f = factorial(i);
    int k = static_cast<int>(r / f);
    r %= f;
    p.push_back(pool[k]);
    pool.erase(pool.begin() + k);
  }
  return p;
}

Perm compose_slot_perm(const Perm& sigma, int slot, const Perm& rho) {
  int n = static_cast<int>(sigma.size());
  int m = static_cast<int>(rho.size());
  if (slot < 0 || slot >= n) throw std::invalid_argument("bad slot");
  Perm sinv = perm_inverse(sigma);
  int slot2 = sinv[slot];
  auto pos_in_comp = [&](int j) {  // source position of outer letter j != slot
    return j < slot ? j : j + m - 1;
  };
  Perm tau(n + m - 1);
  for (int p = 0; p < n + m - 1; ++p) {
    if (p < slot2) {
      tau[p] = pos_in_comp(sigma[p]);
    } else if (p < slot2 + m) {
      tau[p] = slot + rho[p - slot2];
    } else {
      tau[p] = pos_in_comp(sigma[p - m + 1]);
    }
  }
  return tau;
}

FiniteGroup::FiniteGroup() : names_{"e"}, mul_{{0}}, inv_{0}, id_(0) {}

FiniteGroup::FiniteGroup(std::vector<std::string> names,
                         std::vector<std::vector<int>> mul, int id)
    : names_(std::move(names)), mul_(std::move(mul)), id_(id) {
  int n = static_cast<int>(mul_.size());
  if (static_cast<int>(names_.size()) != n)
    throw std::invalid_argument("group: name/table size mismatch");
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mul_[a].size()) != n)
      throw std::invalid_argument("group: ragged table");
    for (int b = 0; b < n; ++b)
      if (mul_[a][b] < 0 || mul_[a][b] >= n)
        throw std::invalid_argument("group: table entry out of range");
  }
  validate();
}

void FiniteGroup::validate() const {
  int n = size();
  if (id_ < 0 || id_ >= n) throw std::invalid_argument("group: bad identity");
  for (int a = 0; a < n; ++a)
    if (mul_[id_][a] != a || mul_[a][id_] != a)
      throw std::invalid_argument("group: identity law fails");
  auto& self = const_cast<FiniteGroup&>(*this);
  for (int a = 0; a < n; ++a) {
    int found = -1;
    for (int b = 0; b < n; ++b)
      if (mul_[a][b] == id_ && mul_[b][a] == id_) found = b;
    if (found < 0) throw std::invalid_argument("group: missing inverse");
    self.inv_[a] = found;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
          throw std::invalid_argument("group: associativity fails");
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != id_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool Subgroup::contains(int a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

bool Subgroup::contains_all(const Subgroup& other) const {
  return std::includes(members.begin(), members.end(), other.members.begin(),
                       other.members.end());
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (members.size() != o.members.size())
    return members.size() < o.members.size();
  return members < o.members;
}

FiniteGroup Subgroup::as_group() const {
  int k = order();
  std::vector<int> pos(parent->size(), -1);
  for (int i = 0; i < k; ++i) pos[members[i]] = i;
  std::vector<std::vector<int>> mul(k, std::vector<int>(k));
  std::vector<std::string> names(k);
  for (int i = 0; i < k; ++i) {
    names[i] = parent->name(members[i]);
    for (int j = 0; j < k; ++j) {
      int m = parent->mul(members[i], members[j]);
      if (pos[m] < 0) throw std::invalid_argument("subgroup not closed");
      mul[i][j] = pos[m];
    }
  }
  return FiniteGroup(std::move(names), std::move(mul), pos[parent->id()]);
}

std::vector<int> subgroup_closure(const FiniteGroup& g,
                                  const std::vector<int>& gens) {
  std::vector<char> in(g.size(), 0);
  std::vector<int> work{g.id()};
  in[g.id()] = 1;
  for (int x : gens)
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  std::vector<int> elems = work;
  for (size_t i = 0; i < work.size(); ++i) {
    for (size_t j = 0; j < elems.size(); ++j) {
      for (int p : {g.mul(work[i], elems[j]), g.mul(elems[j], work[i])}) {
        if (!in[p]) {
          in[p] = 1;
          work.push_back(p);
          elems.push_back(p);
        }
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Subgroup make_subgroup(GroupPtr g, const std::vector<int>& gens) {
  return Subgroup{g, subgroup_closure(*g, gens)};
}

Subgroup trivial_subgroup(GroupPtr g) { return Subgroup{g, {g->id()}}; }

Subgroup full_subgroup(GroupPtr g) {
  std::vector<int> all(g->size());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{std::move(g), std::move(all)};
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
  std::vector<int> m;
  m.reserve(h.members.size());
  for (int a : h.members) m.push_back(h.parent->conj(g, a));
  std::sort(m.begin(), m.end());
  return Subgroup{h.parent, std::move(m)};
}

std::vector<Subgroup> enumerate_subgroups(GroupPtr g) {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> queue;
  auto push = [&](std::vector<int> m) {
    if (found.insert(m).second) queue.push_back(std::move(m));
  };
  push({g->id()});
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<int> h = queue[qi];  // copy: queue may reallocate
    std::vector<char> in(g->size(), 0);
    for (int a : h) in[a] = 1;
    for (int x = 0; x < g->size(); ++x) {
      if (in[x]) continue;
      std::vector<int> gens = h;
      gens.push_back(x);
      push(subgroup_closure(*g, gens));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& m : found) out.push_back(Subgroup{g, m});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> enumerate_subgroups_of(const Subgroup& h) {
  auto hg = std::make_shared<const FiniteGroup>(h.as_group());
  std::vector<Subgroup> subs = enumerate_subgroups(hg);
  std::vector<Subgroup> out;
  out.reserve(subs.size());
  for (auto& s : subs) {
    std::vector<int> m;
    m.reserve(s.members.size());
    for (int i : s.members) m.push_back(h.members[i]);
    std::sort(m.begin(), m.end());
    out.push_back(Subgroup{h.parent, std::move(m)});
  }
  return out;
}

GroupPtr trivial_group() { return std::make_shared<const FiniteGroup>(); }

GroupPtr cyclic_group(int n) {
  std::vector<std::string> names(n);
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    names[i] = i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i));
    for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  }
  return std::make_shared<const FiniteGroup>(std::move(names), std::move(mul),
                                             0);
}

namespace {
std::string perm_name(const Perm& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p[i]);
  }
  return s + ")";
}
}  // namespace

GroupPtr symmetric_group(int n) {
  long long sz = factorial(n);
  std::vector<std::string> names(sz);
  std::vector<std::vector<int>> mul(sz, std::vector<int>(sz));
  std::vector<Perm> perms(sz);
  for (long long i = 0; i < sz; ++i) {
    perms[i] = perm_unrank(n, i);
    names[i] = perm_name(perms[i]);
  }
  for (long long i = 0; i < sz; ++i)
    for (long long j = 0; j < sz; ++j)
      mul[i][j] = static_cast<int>(perm_rank(perm_compose(perms[i], perms[j])));
  return std::make_shared<const FiniteGroup>(std::move(names), std::move(mul),
                                             0);
}

GroupPtr group_product(GroupPtr a, GroupPtr b) {
  int na = a->size(), nb = b->size();
  std::vector<std::string> names(na * nb);
  std::vector<std::vector<int>> mul(na * nb, std::vector<int>(na * nb));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      names[i * nb + j] = "(" + a->name(i) + "," + b->name(j) + ")";
  for (int i = 0; i < na * nb; ++i)
    for (int j = 0; j < na * nb; ++j) {
      int ia = i / nb, ib = i % nb, ja = j / nb, jb = j % nb;
      mul[i][j] = a->mul(ia, ja) * nb + b->mul(ib, jb);
    }
  return std::make_shared<const FiniteGroup>(std::move(names), std::move(mul),
                                             a->id() * nb + b->id());
}

GroupPtr product_with_sym_op(GroupPtr g, int n) {
  long long f = factorial(n);
  long long sz = g->size() * f;
  std::vector<Perm> perms(f);
  for (long long i = 0; i < f; ++i) perms[i] = perm_unrank(n, i);
  std::vector<std::string> names(sz);
  std::vector<std::vector<int>> mul(sz, std::vector<int>(sz));
  for (long long i = 0; i < sz; ++i) {
    int gi = static_cast<int>(i / f);
    names[i] = "(" + g->name(gi) + "," + perm_name(perms[i % f]) + ")";
  }
  for (long long i = 0; i < sz; ++i)
    for (long long j = 0; j < sz; ++j) {
      int gi = static_cast<int>(i / f), gj = static_cast<int>(j / f);
      // op in the Sigma leg: (g,s)*(h,t) = (gh, t o s)
      long long sr = perm_rank(perm_compose(perms[j % f], perms[i % f]));
      mul[i][j] = static_cast<int>(g->mul(gi, gj) * f + sr);
    }
  return std::make_shared<const FiniteGroup>(std::move(names), std::move(mul),
                                             static_cast<int>(g->id() * f));
}

GSigmaElem gsigma_decode(const FiniteGroup&, int, int n, int idx) {
  long long f = factorial(n);
  return GSigmaElem{static_cast<int>(idx / f), perm_unrank(n, idx % f)};
}

int gsigma_encode(int, int n, int g, const Perm& sigma) {
  return static_cast<int>(g * factorial(n) + perm_rank(sigma));
}

GroupPtr wreath_sym_group(GroupPtr g, int n) {
  long long f = factorial(n);
  long long gn = 1;
  for (int i = 0; i < n; ++i) gn *= g->size();
  long long sz = f * gn;
  std::vector<WreathElem> elems(sz);
  std::vector<std::string> names(sz);
  for (long long i = 0; i < sz; ++i) {
    elems[i] = wreath_decode(g->size(), n, i);
    std::string s = perm_name(elems[i].sigma) + "[";
    for (int k = 0; k < n; ++k) {
      if (k) s += ',';
      s += g->name(elems[i].gs[k]);
    }
    names[i] = s + "]";
  }
  std::vector<std::vector<int>> mul(sz, std::vector<int>(sz));
  for (long long i = 0; i < sz; ++i)
    for (long long j = 0; j < sz; ++j) {
      const auto& a = elems[i];
      const auto& b = elems[j];
      WreathElem c;
      c.sigma = perm_compose(a.sigma, b.sigma);
      c.gs.resize(n);
      for (int k = 0; k < n; ++k) c.gs[k] = g->mul(a.gs[b.sigma[k]], b.gs[k]);
      mul[i][j] = static_cast<int>(wreath_encode(g->size(), n, c));
    }
  WreathElem idw{perm_identity(n), std::vector<int>(n, g->id())};
  return std::make_shared<const FiniteGroup>(
      std::move(names), std::move(mul),
      static_cast<int>(wreath_encode(g->size(), n, idw)));
}

WreathElem wreath_decode(int gsize, int n, long long idx) {
  long long gn = 1;
  for (int i = 0; i < n; ++i) gn *= gsize;
  WreathElem w;
  w.sigma = perm_unrank(n, idx / gn);
  long long rest = idx % gn;
  w.gs.resize(n);
  for (int i = n - 1; i >= 0; --i) {
    w.gs[i] = static_cast<int>(rest % gsize);
    rest /= gsize;
  }
  return w;
}

long long wreath_encode(int gsize, int n, const WreathElem& w) {
  long long gn = 1;
  for (int i = 0; i < n; ++i) gn *= gsize;
  long long r = perm_rank(w.sigma) * gn;
  long long acc = 0;
  for (int i = 0; i < n; ++i) acc = acc * gsize + w.gs[i];
  return r + acc;
}

}  // namespace eqop

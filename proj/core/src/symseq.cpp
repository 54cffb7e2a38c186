#include "eqop/symseq.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace eqop {

int SigGroupoid::object(const Signature& s) const {
  auto it = obj_of_sig.find(s);
  if (it == obj_of_sig.end())
    throw std::out_of_range("sig groupoid: signature outside the base (" +
                            s.key(colors) + ")");
  return it->second;
}

int SigGroupoid::arrow(int src_obj, int g, const Perm& sigma) const {
  auto it = arrow_of_.find({src_obj, g, perm_rank(sigma)});
  if (it == arrow_of_.end())
    throw std::out_of_range("sig groupoid: no such arrow");
  return it->second;
}

Subgroup SigGroupoid::aut_subgroup(const Signature& s, GroupPtr ambient) const {
  int n = s.arity();
  std::vector<int> members;
  for (int g = 0; g < colors.group->size(); ++g) {
    long long f = factorial(n);
    for (long long r = 0; r < f; ++r) {
      Perm sigma = perm_unrank(n, r);
      if (act_on_signature(colors, g, sigma, s) == s)
        members.push_back(gsigma_encode(colors.group->size(), n, g, sigma));
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(ambient), std::move(members)};
}

std::shared_ptr<const SigGroupoid> build_sig_groupoid(
    const GSet& colors, int max_arity, const std::vector<Signature>& objects) {
  auto sg = std::make_shared<SigGroupoid>();
  sg->colors = colors;
  sg->max_arity = max_arity;
  sg->sig_of_obj = objects;
  for (size_t i = 0; i < objects.size(); ++i)
    sg->obj_of_sig[objects[i]] = static_cast<int>(i);
  std::vector<std::string> onames;
  for (const auto& s : objects) onames.push_back(s.key(colors));
  std::vector<FiniteGroupoid::Arrow> arrows;
  for (size_t o = 0; o < objects.size(); ++o) {
    const Signature& s = objects[o];
    int n = s.arity();
    long long f = factorial(n);
    for (int g = 0; g < colors.group->size(); ++g)
      for (long long r = 0; r < f; ++r) {
        Perm sigma = perm_unrank(n, r);
        Signature t = act_on_signature(colors, g, sigma, s);
        auto it = sg->obj_of_sig.find(t);
        if (it == sg->obj_of_sig.end())
          throw std::invalid_argument(
              "sig groupoid: object list not closed under the action");
        int id = static_cast<int>(arrows.size());
        sg->arrow_of_[{static_cast<int>(o), g, r}] = id;
        sg->arrow_el.push_back({g, sigma});
        std::string nm = "(" + colors.group->name(g) + ";";
        for (int v : sigma) nm += std::to_string(v);
        arrows.push_back({static_cast<int>(o), it->second, nm + ")"});
      }
  }
  std::vector<int> ids(objects.size());
  for (size_t o = 0; o < objects.size(); ++o)
    ids[o] = sg->arrow_of_.at({static_cast<int>(o), colors.group->id(),
                               perm_rank(perm_identity(objects[o].arity()))});
  std::unordered_map<std::int64_t, int> comp;
  int na = static_cast<int>(arrows.size());
  for (int a1 = 0; a1 < na; ++a1) {
    int mid = arrows[a1].dst;
    const auto& e1 = sg->arrow_el[a1];
    int n = static_cast<int>(e1.sigma.size());
    long long f = factorial(n);
    for (int g = 0; g < colors.group->size(); ++g)
      for (long long r = 0; r < f; ++r) {
        int a2 = sg->arrow_of_.at({mid, g, r});
        // (h,rho) o (g,sigma) = (hg, sigma o rho)
        Perm rho = perm_unrank(n, r);
        int cg = colors.group->mul(g, e1.g);
        Perm cs = perm_compose(e1.sigma, rho);
        comp[static_cast<std::int64_t>(a2) * na + a1] =
            sg->arrow_of_.at({arrows[a1].src, cg, perm_rank(cs)});
      }
  }
  sg->gpd = std::make_shared<const FiniteGroupoid>(
      std::move(onames), std::move(arrows), std::move(ids), std::move(comp));
  return sg;
}

SigGroupoidPtr sig_groupoid_all(const GSet& colors, int max_arity) {
  std::vector<Signature> objs;
  for (int n = 0; n <= max_arity; ++n) {
    std::vector<int> idx(n + 1, 0);
    while (true) {
      Signature s;
      s.dst = idx[0];
      for (int i = 1; i <= n; ++i) s.src.push_back(idx[i]);
      objs.push_back(std::move(s));
      int i = n;
      while (i >= 0 && ++idx[i] == colors.size()) idx[i--] = 0;
      if (i < 0) break;
    }
  }
  return build_sig_groupoid(colors, max_arity, objs);
}

SigGroupoidPtr sig_groupoid_orbits(const GSet& colors, int max_arity,
                                   const std::vector<Signature>& seeds) {
  std::set<Signature> objs;
  for (const Signature& s : seeds) {
    if (s.arity() > max_arity)
      throw std::invalid_argument("sig groupoid: seed beyond max arity");
    long long f = factorial(s.arity());
    for (int g = 0; g < colors.group->size(); ++g)
      for (long long r = 0; r < f; ++r)
        objs.insert(act_on_signature(colors, g, perm_unrank(s.arity(), r), s));
  }
  return build_sig_groupoid(
      colors, max_arity, std::vector<Signature>(objs.begin(), objs.end()));
}

SymSeqMap::SymSeqMap(SymSeq s, SymSeq d, NatTrans n)
    : src(std::move(s)), dst(std::move(d)), nat(std::move(n)) {
  if (src.base.get() != dst.base.get())
    throw std::invalid_argument("symseq map: base mismatch");
  if (!is_natural(src.values, dst.values, nat))
    throw std::invalid_argument("symseq map: not natural");
}

bool SymSeqMap::injective() const {
  for (size_t o = 0; o < nat.comp.size(); ++o) {
    std::set<int> img(nat.comp[o].begin(), nat.comp[o].end());
    if (img.size() != nat.comp[o].size()) return false;
  }
  return true;
}

bool SymSeqMap::bijective() const {
  for (size_t o = 0; o < nat.comp.size(); ++o)
    if (static_cast<int>(nat.comp[o].size()) !=
        dst.values.size(static_cast<int>(o)))
      return false;
  return injective();
}

SymSeq empty_symseq(SigGroupoidPtr base) {
  auto g = base->gpd;
  return SymSeq{std::move(base), empty_functor(g)};
}

SymSeq point_symseq(SigGroupoidPtr base, const std::vector<int>& arities) {
  std::set<int> ar(arities.begin(), arities.end());
  std::vector<std::vector<std::string>> el(base->gpd->n_objects());
  for (int o = 0; o < base->gpd->n_objects(); ++o)
    if (ar.count(base->sig_of_obj[o].arity())) el[o] = {"*"};
  std::vector<std::vector<int>> act(base->gpd->n_arrows());
  for (int a = 0; a < base->gpd->n_arrows(); ++a)
    if (!el[base->gpd->arrow(a).src].empty()) act[a] = {0};
  return SymSeq{base, SetValuedFunctor(base->gpd, std::move(el),
                                       std::move(act))};
}

SymSeq representable(SigGroupoidPtr base, const Signature& sig) {
  int src = base->object(sig);
  const auto& g = *base->gpd;
  std::vector<std::vector<std::string>> el(g.n_objects());
  std::vector<std::vector<int>> index_of_arrow(g.n_objects());
  std::vector<std::vector<int>> arrows_at(g.n_objects());
  for (int o = 0; o < g.n_objects(); ++o) {
    for (int a : g.arrows_between(src, o)) {
      arrows_at[o].push_back(a);
      el[o].push_back(g.arrow(a).name);
    }
  }
  std::vector<int> pos(g.n_arrows(), -1);
  for (int o = 0; o < g.n_objects(); ++o)
    for (size_t i = 0; i < arrows_at[o].size(); ++i)
      pos[arrows_at[o][i]] = static_cast<int>(i);
  std::vector<std::vector<int>> act(g.n_arrows());
  for (int m = 0; m < g.n_arrows(); ++m) {
    const auto& ar = g.arrow(m);
    act[m].resize(arrows_at[ar.src].size());
    for (size_t i = 0; i < arrows_at[ar.src].size(); ++i)
      act[m][i] = pos[g.compose(m, arrows_at[ar.src][i])];
  }
  return SymSeq{base,
                SetValuedFunctor(base->gpd, std::move(el), std::move(act))};
}

SymSeq quotient_representable(SigGroupoidPtr base, const Signature& sig,
                              const Subgroup& lambda) {
  if (!stabilizes(base->colors, lambda, sig))
    throw std::invalid_argument("quotient: subgroup does not stabilize");
  SymSeq rep = representable(base, sig);
  int src = base->object(sig);
  const auto& g = *base->gpd;
  int gsize = base->colors.group->size();
  // orbit classes of hom(C,-) under precomposition with Lambda
  std::vector<std::vector<int>> arrows_at(g.n_objects());
  std::vector<int> pos(g.n_arrows(), -1);
  for (int o = 0; o < g.n_objects(); ++o) {
    arrows_at[o] = g.arrows_between(src, o);
    for (size_t i = 0; i < arrows_at[o].size(); ++i)
      pos[arrows_at[o][i]] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> cls(g.n_objects());
  std::vector<std::vector<int>> reps(g.n_objects());
  for (int o = 0; o < g.n_objects(); ++o) {
    int sz = static_cast<int>(arrows_at[o].size());
    std::vector<int> uf(sz);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    for (int i = 0; i < sz; ++i)
      for (int m : lambda.members) {
        auto le = gsigma_decode(*lambda.parent, gsize, sig.arity(), m);
        int lam_arrow = base->arrow(src, le.g, le.sigma);  // src -> src
        int pre = g.compose(arrows_at[o][i], lam_arrow);
        int a = find(i), b = find(pos[pre]);
        if (a != b) uf[std::max(a, b)] = std::min(a, b);
      }
    cls[o].resize(sz);
    std::map<int, int> root_to;
    for (int i = 0; i < sz; ++i) {
      int r = find(i);
      if (!root_to.count(r)) {
        root_to[r] = static_cast<int>(reps[o].size());
        reps[o].push_back(r);
      }
      cls[o][i] = root_to[r];
    }
  }
  std::vector<std::vector<std::string>> el(g.n_objects());
  for (int o = 0; o < g.n_objects(); ++o)
    for (int r : reps[o]) el[o].push_back(rep.values.elems[o][r] + "/L");
  std::vector<std::vector<int>> act(g.n_arrows());
  for (int m = 0; m < g.n_arrows(); ++m) {
    const auto& ar = g.arrow(m);
    act[m].resize(reps[ar.src].size());
    for (size_t i = 0; i < reps[ar.src].size(); ++i)
      act[m][i] = cls[ar.dst][rep.values.action[m][reps[ar.src][i]]];
  }
  return SymSeq{base,
                SetValuedFunctor(base->gpd, std::move(el), std::move(act))};
}

bool is_equivariant_color_map(const GSet& c, const GSet& d,
                              const std::vector<int>& phi) {
  if (static_cast<int>(phi.size()) != c.size()) return false;
  if (c.group->size() != d.group->size()) return false;  // same group expected
  for (int v : phi)
    if (v < 0 || v >= d.size()) return false;
  for (int g = 0; g < c.group->size(); ++g)
    for (int col = 0; col < c.size(); ++col)
      if (phi[c.apply(g, col)] != d.apply(g, phi[col])) return false;
  return true;
}

GroupoidFunctor induced_sig_functor(const SigGroupoidPtr& src,
                                    const SigGroupoidPtr& dst,
                                    const std::vector<int>& phi) {
  if (!is_equivariant_color_map(src->colors, dst->colors, phi))
    throw std::invalid_argument("color map: not equivariant");
  std::vector<int> om(src->gpd->n_objects());
  for (int o = 0; o < src->gpd->n_objects(); ++o) {
    Signature s = src->sig_of_obj[o];
    for (auto& c : s.src) c = phi[c];
    s.dst = phi[s.dst];
    om[o] = dst->object(s);
  }
  std::vector<int> am(src->gpd->n_arrows());
  for (int a = 0; a < src->gpd->n_arrows(); ++a) {
    const auto& e = src->arrow_el[a];
    am[a] = dst->arrow(om[src->gpd->arrow(a).src], e.g, e.sigma);
  }
  return GroupoidFunctor(src->gpd, dst->gpd, std::move(om), std::move(am));
}

SymSeq pullback_symseq(const std::vector<int>& phi, const SymSeq& y,
                       SigGroupoidPtr src_base) {
  GroupoidFunctor k = induced_sig_functor(src_base, y.base, phi);
  return SymSeq{src_base, precompose(k, y.values)};
}

SymSeq pushforward_symseq(const std::vector<int>& phi, const SymSeq& x,
                          SigGroupoidPtr dst_base) {
  GroupoidFunctor k = induced_sig_functor(x.base, dst_base, phi);
  return SymSeq{dst_base, lan_along(k, x.values).lan};
}

std::vector<NatTrans> symseq_homs(const SymSeq& x, const SymSeq& y) {
  if (x.base.get() != y.base.get())
    throw std::invalid_argument("symseq hom: base mismatch");
  return hom_set(x.values, y.values);
}

std::vector<int> fixed_points(const SymSeq& x, const Signature& sig,
                              const Subgroup& lambda) {
  if (!stabilizes(x.base->colors, lambda, sig))
    throw std::invalid_argument("fixed_points: subgroup does not stabilize");
  int o = x.base->object(sig);
  int gsize = x.base->colors.group->size();
  std::vector<int> out;
  for (int e = 0; e < x.values.size(o); ++e) {
    bool fixed = true;
    for (int m : lambda.members) {
      auto le = gsigma_decode(*lambda.parent, gsize, sig.arity(), m);
      int a = x.base->arrow(o, le.g, le.sigma);
      if (x.values.apply(a, e) != e) {
        fixed = false;
        break;
      }
    }
    if (fixed) out.push_back(e);
  }
  return out;
}

std::optional<FEquivWitness> is_F_equivalence(const SymSeqMap& f,
                                              const GSigmaFamily& fam) {
  const auto& base = *f.src.base;
  if (base.max_arity > fam.max_arity())
    throw std::out_of_range("is_F_equivalence: family arity range too small");
  for (int o = 0; o < base.gpd->n_objects(); ++o) {
    const Signature& sig = base.sig_of_obj[o];
    int n = sig.arity();
    // largest Lambda first so witnesses name the most equivariant failure
    std::vector<Subgroup> cands = fam.at(n);
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Subgroup& a, const Subgroup& b) {
                       return a.order() > b.order();
                     });
    for (const Subgroup& lambda : cands) {
      if (!stabilizes(base.colors, lambda, sig)) continue;
      std::vector<int> fx = fixed_points(f.src, sig, lambda);
      std::vector<int> fy = fixed_points(f.dst, sig, lambda);
      std::set<int> image;
      for (int e : fx) image.insert(f.nat.comp[o][e]);
      bool bij = image.size() == fx.size() && image.size() == fy.size() &&
                 std::includes(fy.begin(), fy.end(), image.begin(),
                               image.end());
      if (!bij) return FEquivWitness{sig, lambda};
    }
  }
  return std::nullopt;
}

SymSeq random_symseq(SigGroupoidPtr base, std::mt19937_64& rng,
                     int max_orbits_per_component) {
  const auto& g = *base->gpd;
  std::vector<std::vector<std::string>> el(g.n_objects());
  std::vector<std::vector<int>> act(g.n_arrows());
  for (int r : g.class_reps()) {
    const auto& aut = g.aut_group(r);
    auto subs = enumerate_subgroups(aut.group);
    int n_orbits = static_cast<int>(rng() % (max_orbits_per_component + 1));
    // left cosets of each chosen stabilizer, acted on by left multiplication
    struct Orbit {
      std::vector<std::vector<int>> cosets;  // sorted member lists
      std::map<std::vector<int>, int> index;
    };
    std::vector<Orbit> orbits;
    for (int i = 0; i < n_orbits; ++i) {
      const Subgroup& s = subs[rng() % subs.size()];
      Orbit ob;
      std::set<std::vector<int>> seen;
      for (int a = 0; a < aut.group->size(); ++a) {
        std::vector<int> coset;
        for (int m : s.members) coset.push_back(aut.group->mul(a, m));
        std::sort(coset.begin(), coset.end());
        if (seen.insert(coset).second) {
          ob.index[coset] = static_cast<int>(ob.cosets.size());
          ob.cosets.push_back(coset);
        }
      }
      orbits.push_back(std::move(ob));
    }
    // value assignment across the component via spanning arrows
    auto act_elem = [&](int a /*aut elem*/, int ob, int e) {
      std::vector<int> c = orbits[ob].cosets[e];
      for (auto& m : c) m = aut.group->mul(a, m);
      std::sort(c.begin(), c.end());
      return orbits[ob].index.at(c);
    };
    std::vector<int> offset(orbits.size() + 1, 0);
    for (size_t i = 0; i < orbits.size(); ++i)
      offset[i + 1] = offset[i] + static_cast<int>(orbits[i].cosets.size());
    for (int o = 0; o < g.n_objects(); ++o) {
      if (g.class_rep(o) != r) continue;
      for (size_t i = 0; i < orbits.size(); ++i)
        for (size_t cst = 0; cst < orbits[i].cosets.size(); ++cst)
          el[o].push_back("o" + std::to_string(i) + "e" + std::to_string(cst));
    }
    for (int a = 0; a < g.n_arrows(); ++a) {
      const auto& ar = g.arrow(a);
      if (g.class_rep(ar.src) != r) continue;
      // conjugate back to an automorphism of the representative
      int t_src = g.spanning_arrow(ar.src);
      int t_dst_inv = g.inverse(g.spanning_arrow(ar.dst));
      int auto_arrow = g.compose(t_dst_inv, g.compose(a, t_src));
      int ae = aut.index_of_arrow.at(auto_arrow);
      act[a].resize(offset.back());
      for (size_t i = 0; i < orbits.size(); ++i)
        for (size_t cst = 0; cst < orbits[i].cosets.size(); ++cst)
          act[a][offset[i] + cst] =
              offset[i] + act_elem(ae, static_cast<int>(i),
                                   static_cast<int>(cst));
    }
  }
  return SymSeq{base,
                SetValuedFunctor(base->gpd, std::move(el), std::move(act))};
}

}  // namespace eqop

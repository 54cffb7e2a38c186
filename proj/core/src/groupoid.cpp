#include "eqop/groupoid.hpp"

#include "eqop/gsfamily.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eqop {

namespace {
std::int64_t ckey(int g, int f, int n_arrows) {
  return static_cast<std::int64_t>(g) * n_arrows + f;
}
}  // namespace

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> object_names,
                               std::vector<Arrow> arrows,
                               std::vector<int> identities,
                               std::unordered_map<std::int64_t, int> compose_table)
    : object_names_(std::move(object_names)),
      arrows_(std::move(arrows)),
      identities_(std::move(identities)),
      compose_(std::move(compose_table)) {
  validate();
  // components and spanning arrows via BFS (arrows used both ways)
  int n = n_objects();
  rep_.assign(n, -1);
  span_.assign(n, -1);
  from_.assign(n, {});
  for (int a = 0; a < n_arrows(); ++a) from_[arrows_[a].src].push_back(a);
  for (int r = 0; r < n; ++r) {
    if (rep_[r] >= 0) continue;
    rep_[r] = r;
    span_[r] = identities_[r];
    std::vector<int> bfs{r};
    for (size_t i = 0; i < bfs.size(); ++i) {
      int x = bfs[i];
      for (int a : from_[x]) {
        int y = arrows_[a].dst;
        if (rep_[y] < 0) {
          rep_[y] = r;
          span_[y] = compose(a, span_[x]);  // r -> x -> y
          bfs.push_back(y);
        }
      }
    }
  }
}

void FiniteGroupoid::validate() const {
  int n = n_objects();
  if (static_cast<int>(identities_.size()) != n)
    throw std::invalid_argument("groupoid: identities size mismatch");
  for (int x = 0; x < n; ++x) {
    int e = identities_[x];
    if (arrows_[e].src != x || arrows_[e].dst != x)
      throw std::invalid_argument("groupoid: identity endpoints wrong");
  }
  int na = n_arrows();
  for (const auto& [k, v] : compose_) {
    int g = static_cast<int>(k / na), f = static_cast<int>(k % na);
    if (arrows_[f].dst != arrows_[g].src)
      throw std::invalid_argument("groupoid: table entry not composable");
    if (arrows_[v].src != arrows_[f].src || arrows_[v].dst != arrows_[g].dst)
      throw std::invalid_argument("groupoid: composite endpoints wrong");
  }
  auto comp = [&](int g, int f) {
    auto it = compose_.find(ckey(g, f, na));
    if (it == compose_.end())
      throw std::invalid_argument("groupoid: missing composite");
    return it->second;
  };
  std::vector<std::vector<int>> from(n);
  for (int a = 0; a < na; ++a) from[arrows_[a].src].push_back(a);
  for (int f = 0; f < na; ++f) {
    if (comp(identities_[arrows_[f].dst], f) != f ||
        comp(f, identities_[arrows_[f].src]) != f)
      throw std::invalid_argument("groupoid: identity law fails");
  }
  for (int f = 0; f < na; ++f)
    for (int g : from[arrows_[f].dst])
      for (int h : from[arrows_[g].dst])
        if (comp(h, comp(g, f)) != comp(comp(h, g), f))
          throw std::invalid_argument("groupoid: associativity fails");
  auto& self = const_cast<FiniteGroupoid&>(*this);
  self.inverses_.assign(na, -1);
  for (int f = 0; f < na; ++f) {
    for (int g : from[arrows_[f].dst]) {
      if (arrows_[g].dst != arrows_[f].src) continue;
      if (comp(g, f) == identities_[arrows_[f].src] &&
          comp(f, g) == identities_[arrows_[f].dst]) {
        self.inverses_[f] = g;
        break;
      }
    }
    if (self.inverses_[f] < 0)
      throw std::invalid_argument("groupoid: arrow without inverse");
  }
}

int FiniteGroupoid::compose(int g, int f) const {
  auto it = compose_.find(ckey(g, f, n_arrows()));
  if (it == compose_.end())
    throw std::invalid_argument("groupoid: arrows not composable");
  return it->second;
}

const std::vector<int>& FiniteGroupoid::arrows_between(int x, int y) const {
  auto key = std::make_pair(x, y);
  auto it = between_.find(key);
  if (it != between_.end()) return it->second;
  std::vector<int> v;
  for (int a : from_[x])
    if (arrows_[a].dst == y) v.push_back(a);
  return between_.emplace(key, std::move(v)).first->second;
}

std::vector<int> FiniteGroupoid::class_reps() const {
  std::vector<int> reps;
  for (int x = 0; x < n_objects(); ++x)
    if (rep_[x] == x) reps.push_back(x);
  return reps;
}

const FiniteGroupoid::AutGroup& FiniteGroupoid::aut_group(int x) const {
  auto it = aut_cache_.find(x);
  if (it != aut_cache_.end()) return it->second;
  AutGroup ag;
  ag.arrow_ids = arrows_between(x, x);
  int k = static_cast<int>(ag.arrow_ids.size());
  for (int i = 0; i < k; ++i) ag.index_of_arrow[ag.arrow_ids[i]] = i;
  std::vector<std::string> names(k);
  std::vector<std::vector<int>> mul(k, std::vector<int>(k));
  int idpos = -1;
  for (int i = 0; i < k; ++i) {
    names[i] = arrows_[ag.arrow_ids[i]].name;
    if (ag.arrow_ids[i] == identities_[x]) idpos = i;
    for (int j = 0; j < k; ++j)
      mul[i][j] =
          ag.index_of_arrow.at(compose(ag.arrow_ids[i], ag.arrow_ids[j]));
  }
  ag.group = std::make_shared<const FiniteGroup>(std::move(names),
                                                 std::move(mul), idpos);
  return aut_cache_.emplace(x, std::move(ag)).first->second;
}

GroupoidPtr groupoid_from_group(GroupPtr g) {
  std::vector<FiniteGroupoid::Arrow> arrows;
  for (int a = 0; a < g->size(); ++a)
    arrows.push_back({0, 0, g->name(a)});
  std::unordered_map<std::int64_t, int> comp;
  for (int a = 0; a < g->size(); ++a)
    for (int b = 0; b < g->size(); ++b)
      comp[ckey(a, b, g->size())] = g->mul(a, b);
  return std::make_shared<const FiniteGroupoid>(
      std::vector<std::string>{"*"}, std::move(arrows),
      std::vector<int>{g->id()}, std::move(comp));
}

GroupoidFunctor::GroupoidFunctor(GroupoidPtr s, GroupoidPtr d,
                                 std::vector<int> om, std::vector<int> am)
    : src(std::move(s)), dst(std::move(d)), obj_map(std::move(om)),
      arrow_map(std::move(am)) {
  if (static_cast<int>(obj_map.size()) != src->n_objects() ||
      static_cast<int>(arrow_map.size()) != src->n_arrows())
    throw std::invalid_argument("functor: map size mismatch");
  for (int a = 0; a < src->n_arrows(); ++a) {
    const auto& ar = src->arrow(a);
    const auto& im = dst->arrow(arrow_map[a]);
    if (im.src != obj_map[ar.src] || im.dst != obj_map[ar.dst])
      throw std::invalid_argument("functor: endpoints not preserved");
  }
  for (int x = 0; x < src->n_objects(); ++x)
    if (arrow_map[src->identity(x)] != dst->identity(obj_map[x]))
      throw std::invalid_argument("functor: identities not preserved");
  for (int f = 0; f < src->n_arrows(); ++f)
    for (int g : src->arrows_from(src->arrow(f).dst))
      if (arrow_map[src->compose(g, f)] !=
          dst->compose(arrow_map[g], arrow_map[f]))
        throw std::invalid_argument("functor: composition not preserved");
}

GroupoidFunctor identity_functor(GroupoidPtr g) {
  std::vector<int> om(g->n_objects()), am(g->n_arrows());
  std::iota(om.begin(), om.end(), 0);
  std::iota(am.begin(), am.end(), 0);
  return GroupoidFunctor(g, g, std::move(om), std::move(am));
}

GroupoidFunctor compose_functors(const GroupoidFunctor& second,
                                 const GroupoidFunctor& first) {
  if (first.dst.get() != second.src.get())
    throw std::invalid_argument("functor composition: base mismatch");
  std::vector<int> om(first.src->n_objects()), am(first.src->n_arrows());
  for (size_t i = 0; i < om.size(); ++i) om[i] = second.obj_map[first.obj_map[i]];
  for (size_t i = 0; i < am.size(); ++i)
    am[i] = second.arrow_map[first.arrow_map[i]];
  return GroupoidFunctor(first.src, second.dst, std::move(om), std::move(am));
}

SetValuedFunctor::SetValuedFunctor(GroupoidPtr b,
                                   std::vector<std::vector<std::string>> el,
                                   std::vector<std::vector<int>> act)
    : base(std::move(b)), elems(std::move(el)), action(std::move(act)) {
  validate();
}

void SetValuedFunctor::validate() const {
  if (static_cast<int>(elems.size()) != base->n_objects() ||
      static_cast<int>(action.size()) != base->n_arrows())
    throw std::invalid_argument("setfunctor: size mismatch");
  for (int a = 0; a < base->n_arrows(); ++a) {
    const auto& ar = base->arrow(a);
    if (static_cast<int>(action[a].size()) != size(ar.src))
      throw std::invalid_argument("setfunctor: component size mismatch");
    std::vector<char> seen(size(ar.dst), 0);
    for (int v : action[a]) {
      if (v < 0 || v >= size(ar.dst) || seen[v])
        throw std::invalid_argument("setfunctor: action not a bijection");
      seen[v] = 1;
    }
  }
  for (int x = 0; x < base->n_objects(); ++x) {
    const auto& idact = action[base->identity(x)];
    for (int e = 0; e < size(x); ++e)
      if (idact[e] != e)
        throw std::invalid_argument("setfunctor: identity acts nontrivially");
  }
  for (int f = 0; f < base->n_arrows(); ++f)
    for (int g : base->arrows_from(base->arrow(f).dst)) {
      int gf = base->compose(g, f);
      for (int e = 0; e < size(base->arrow(f).src); ++e)
        if (action[gf][e] != action[g][action[f][e]])
          throw std::invalid_argument("setfunctor: functoriality fails");
    }
}

SetValuedFunctor constant_functor(GroupoidPtr g, int sz) {
  std::vector<std::vector<std::string>> el(g->n_objects());
  for (auto& v : el)
    for (int i = 0; i < sz; ++i) v.push_back("c" + std::to_string(i));
  std::vector<std::vector<int>> act(g->n_arrows());
  for (auto& a : act) {
    a.resize(sz);
    std::iota(a.begin(), a.end(), 0);
  }
  return SetValuedFunctor(std::move(g), std::move(el), std::move(act));
}

SetValuedFunctor empty_functor(GroupoidPtr g) {
  return constant_functor(std::move(g), 0);
}

bool is_natural(const SetValuedFunctor& x, const SetValuedFunctor& y,
                const NatTrans& t) {
  const auto& b = *x.base;
  if (static_cast<int>(t.comp.size()) != b.n_objects()) return false;
  for (int o = 0; o < b.n_objects(); ++o) {
    if (static_cast<int>(t.comp[o].size()) != x.size(o)) return false;
    for (int v : t.comp[o])
      if (v < 0 || v >= y.size(o)) return false;
  }
  for (int a = 0; a < b.n_arrows(); ++a) {
    const auto& ar = b.arrow(a);
    for (int e = 0; e < x.size(ar.src); ++e)
      if (y.apply(a, t.comp[ar.src][e]) != t.comp[ar.dst][x.apply(a, e)])
        return false;
  }
  return true;
}

std::vector<NatTrans> hom_set(const SetValuedFunctor& x,
                              const SetValuedFunctor& y) {
  if (x.base.get() != y.base.get())
    throw std::invalid_argument("hom_set: different bases");
  const auto& b = *x.base;
  std::vector<int> reps = b.class_reps();
  // per component: all equivariant maps X(r) -> Y(r)
  std::vector<std::vector<std::vector<int>>> comp_choices;
  for (int r : reps) {
    const auto& aut = b.aut_group(r);
    int nx = x.size(r);
    // orbit decomposition of X(r)
    std::vector<int> orbit_of(nx, -1);
    std::vector<int> orbit_reps;
    for (int e = 0; e < nx; ++e) {
      if (orbit_of[e] >= 0) continue;
      int oid = static_cast<int>(orbit_reps.size());
      orbit_reps.push_back(e);
      for (int a : aut.arrow_ids) {
        int img = x.apply(a, e);
        if (orbit_of[img] < 0) orbit_of[img] = oid;
      }
      // orbit closure (aut generates the full automorphism set already)
      orbit_of[e] = oid;
    }
    // candidate images per orbit rep: Y(r)^{Stab}
    std::vector<std::vector<int>> cands;
    for (int e : orbit_reps) {
      std::vector<int> stab;
      for (int a : aut.arrow_ids)
        if (x.apply(a, e) == e) stab.push_back(a);
      std::vector<int> ok;
      for (int v = 0; v < y.size(r); ++v) {
        bool fixed = true;
        for (int a : stab)
          if (y.apply(a, v) != v) {
            fixed = false;
            break;
          }
        if (fixed) ok.push_back(v);
      }
      cands.push_back(std::move(ok));
    }
    // assemble maps X(r)->Y(r): pick an image per orbit, propagate
    std::vector<std::vector<int>> maps;
    std::vector<int> pick(orbit_reps.size(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
      if (i == orbit_reps.size()) {
        std::vector<int> f(nx, -1);
        for (size_t o = 0; o < orbit_reps.size(); ++o) {
          int e = orbit_reps[o];
          int img = cands[o][pick[o]];
          for (int a : aut.arrow_ids) {
            int ae = x.apply(a, e);
            if (f[ae] < 0) f[ae] = y.apply(a, img);
          }
        }
        maps.push_back(std::move(f));
        return;
      }
      for (size_t c = 0; c < cands[i].size(); ++c) {
        pick[i] = static_cast<int>(c);
        rec(i + 1);
      }
    };
    rec(0);
    comp_choices.push_back(std::move(maps));
  }
  // product over components, then transport to every object
  std::vector<NatTrans> out;
  std::vector<size_t> pick(reps.size(), 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == reps.size()) {
      NatTrans t;
      t.comp.resize(b.n_objects());
      for (size_t ri = 0; ri < reps.size(); ++ri) {
        int r = reps[ri];
        const auto& fr = comp_choices[ri][pick[ri]];
        for (int o = 0; o < b.n_objects(); ++o) {
          if (b.class_rep(o) != r) continue;
          int t_arrow = b.spanning_arrow(o);  // r -> o
          int t_inv = b.inverse(t_arrow);
          std::vector<int> fo(x.size(o));
          for (int e = 0; e < x.size(o); ++e)
            fo[e] = y.apply(t_arrow, fr[x.apply(t_inv, e)]);
          t.comp[o] = std::move(fo);
        }
      }
      out.push_back(std::move(t));
      return;
    }
    for (size_t c = 0; c < comp_choices[i].size(); ++c) {
      pick[i] = c;
      rec(i + 1);
    }
  };
  for (auto& ch : comp_choices)
    if (ch.empty()) return {};
  rec(0);
  return out;
}

LanResult lan_along(const GroupoidFunctor& k, const SetValuedFunctor& x) {
  if (k.src.get() != x.base.get())
    throw std::invalid_argument("lan_along: functor source mismatch");
  GroupoidPtr gsrc = k.src;
  GroupoidPtr gdst = k.dst;
  struct PerObj {
    std::vector<std::tuple<int, int, int>> triples;  // (g, alpha, e)
    std::map<std::tuple<int, int, int>, int> index;
    std::vector<int> uf;
    std::vector<int> class_of;        // triple -> class id
    std::vector<int> rep_triple;      // class id -> minimal triple index
  };
  auto per = std::make_shared<std::vector<PerObj>>(gdst->n_objects());
  for (int yb = 0; yb < gdst->n_objects(); ++yb) {
    auto& p = (*per)[yb];
    for (int g = 0; g < gsrc->n_objects(); ++g) {
      for (int alpha : gdst->arrows_between(k.obj_map[g], yb))
        for (int e = 0; e < x.size(g); ++e) {
          p.index[{g, alpha, e}] = static_cast<int>(p.triples.size());
          p.triples.emplace_back(g, alpha, e);
        }
    }
    p.uf.resize(p.triples.size());
    std::iota(p.uf.begin(), p.uf.end(), 0);
    std::function<int(int)> find = [&](int a) {
      while (p.uf[a] != a) a = p.uf[a] = p.uf[p.uf[a]];
      return a;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) p.uf[std::max(a, b)] = std::min(a, b);
    };
    for (int f = 0; f < gsrc->n_arrows(); ++f) {
      const auto& fa = gsrc->arrow(f);
      for (int alpha2 : gdst->arrows_between(k.obj_map[fa.dst], yb)) {
        int pre = gdst->compose(alpha2, k.arrow_map[f]);
        for (int e = 0; e < x.size(fa.src); ++e)
          unite(p.index.at({fa.src, pre, e}),
                p.index.at({fa.dst, alpha2, x.apply(f, e)}));
      }
    }
    // canonical class ids ordered by minimal member triple
    p.class_of.resize(p.triples.size());
    std::map<int, int> root_to_class;
    for (size_t t = 0; t < p.triples.size(); ++t) {
      int r = find(static_cast<int>(t));
      if (!root_to_class.count(r)) {
        root_to_class[r] = static_cast<int>(p.rep_triple.size());
        p.rep_triple.push_back(r);
      }
    }
    for (size_t t = 0; t < p.triples.size(); ++t)
      p.class_of[t] = root_to_class[find(static_cast<int>(t))];
  }
  // element names from representative triples
  std::vector<std::vector<std::string>> el(gdst->n_objects());
  for (int yb = 0; yb < gdst->n_objects(); ++yb) {
    auto& p = (*per)[yb];
    for (int c = 0; c < static_cast<int>(p.rep_triple.size()); ++c) {
      auto [g, alpha, e] = p.triples[p.rep_triple[c]];
      el[yb].push_back("[" + gsrc->object_name(g) + "|" +
                       gdst->arrow(alpha).name + "|" + x.elems[g][e] + "]");
    }
  }
  // action of arrows: post-compose the alpha leg
  std::vector<std::vector<int>> act(gdst->n_arrows());
  for (int b = 0; b < gdst->n_arrows(); ++b) {
    const auto& ba = gdst->arrow(b);
    auto& psrc = (*per)[ba.src];
    auto& pdst = (*per)[ba.dst];
    act[b].resize(psrc.rep_triple.size());
    for (size_t c = 0; c < psrc.rep_triple.size(); ++c) {
      auto [g, alpha, e] = psrc.triples[psrc.rep_triple[c]];
      int alpha2 = gdst->compose(b, alpha);
      act[b][c] = pdst.class_of[pdst.index.at({g, alpha2, e})];
    }
  }
  LanResult res;
  res.lan = SetValuedFunctor(gdst, std::move(el), std::move(act));
  res.cls = [per](int ybar, int g, int alpha, int e) {
    const auto& p = (*per)[ybar];
    return p.class_of[p.index.at({g, alpha, e})];
  };
  res.rep = [per](int ybar, int c) {
    const auto& p = (*per)[ybar];
    return p.triples[p.rep_triple[c]];
  };
  return res;
}

SemidirectGroupoid semidirect_groupoid(const GroupoidPtr& c,
                                       const CatAction& act) {
  const FiniteGroup& g = *act.group;
  // validate: each act(g) is a functor, and the assignment is a group action
  if (static_cast<int>(act.obj.size()) != g.size() ||
      static_cast<int>(act.arr.size()) != g.size())
    throw std::invalid_argument("semidirect: action size mismatch");
  for (int gi = 0; gi < g.size(); ++gi) {
    for (int a = 0; a < c->n_arrows(); ++a) {
      const auto& ar = c->arrow(a);
      const auto& im = c->arrow(act.arr[gi][a]);
      if (im.src != act.obj[gi][ar.src] || im.dst != act.obj[gi][ar.dst])
        throw std::invalid_argument("semidirect: action not a functor");
    }
    for (int x = 0; x < c->n_objects(); ++x)
      if (act.arr[gi][c->identity(x)] != c->identity(act.obj[gi][x]))
        throw std::invalid_argument("semidirect: identities not preserved");
    for (int f = 0; f < c->n_arrows(); ++f)
      for (int h : c->arrows_from(c->arrow(f).dst))
        if (act.arr[gi][c->compose(h, f)] !=
            c->compose(act.arr[gi][h], act.arr[gi][f]))
          throw std::invalid_argument("semidirect: composition not preserved");
  }
  for (int x = 0; x < c->n_objects(); ++x)
    if (act.obj[g.id()][x] != x)
      throw std::invalid_argument("semidirect: identity acts nontrivially");
  for (int a = 0; a < c->n_arrows(); ++a)
    if (act.arr[g.id()][a] != a)
      throw std::invalid_argument("semidirect: identity acts nontrivially");
  for (int gi = 0; gi < g.size(); ++gi)
    for (int hi = 0; hi < g.size(); ++hi) {
      int gh = g.mul(gi, hi);
      for (int x = 0; x < c->n_objects(); ++x)
        if (act.obj[gi][act.obj[hi][x]] != act.obj[gh][x])
          throw std::invalid_argument("semidirect: not a group action");
      for (int a = 0; a < c->n_arrows(); ++a)
        if (act.arr[gi][act.arr[hi][a]] != act.arr[gh][a])
          throw std::invalid_argument("semidirect: not a group action");
    }

  SemidirectGroupoid out;
  out.base = c;
  std::vector<FiniteGroupoid::Arrow> arrows;
  // arrow c -> c' is (g, f: g.c -> c'); enumerate by (g, f) with src
  // determined by f: src = g^{-1}.src(f), dst = dst(f)
  for (int gi = 0; gi < g.size(); ++gi) {
    int ginv = g.inv(gi);
    for (int f = 0; f < c->n_arrows(); ++f) {
      const auto& fa = c->arrow(f);
      int src = act.obj[ginv][fa.src];
      out.arrow_of[{gi, f}] = static_cast<int>(arrows.size());
      out.arrow_parts.emplace_back(gi, f);
      arrows.push_back(
          {src, fa.dst, "(" + g.name(gi) + ";" + fa.name + ")"});
    }
  }
  std::vector<int> ids(c->n_objects());
  for (int x = 0; x < c->n_objects(); ++x)
    ids[x] = out.arrow_of.at({g.id(), c->identity(x)});
  std::unordered_map<std::int64_t, int> comp;
  int na = static_cast<int>(arrows.size());
  for (int a2 = 0; a2 < na; ++a2) {
    auto [h, e] = out.arrow_parts[a2];  // (h, e: h.c' -> c'')
    for (int a1 = 0; a1 < na; ++a1) {
      auto [gi, f] = out.arrow_parts[a1];  // (g, f: g.c -> c')
      if (arrows[a1].dst != arrows[a2].src) continue;
      int hf = act.arr[h][f];  // hg.c -> h.c'
      int cf = c->compose(e, hf);
      comp[ckey(a2, a1, na)] = out.arrow_of.at({g.mul(h, gi), cf});
    }
  }
  std::vector<std::string> onames(c->n_objects());
  for (int x = 0; x < c->n_objects(); ++x) onames[x] = c->object_name(x);
  out.gpd = std::make_shared<const FiniteGroupoid>(
      std::move(onames), std::move(arrows), std::move(ids), std::move(comp));
  return out;
}

WreathGroupoid wreath_groupoid(const GroupoidPtr& c, int n) {
  WreathGroupoid out;
  out.base = c;
  // objects: all n-tuples
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur(n, 0);
  if (n == 0) {
    tuples.push_back({});
  } else {
    while (true) {
      tuples.push_back(cur);
      int i = n - 1;
      while (i >= 0 && ++cur[i] == c->n_objects()) cur[i--] = 0;
      if (i < 0) break;
    }
  }
  out.tuple_of_obj = tuples;
  for (size_t i = 0; i < tuples.size(); ++i)
    out.obj_of_tuple[tuples[i]] = static_cast<int>(i);
  std::vector<std::string> onames;
  for (const auto& t : tuples) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
      if (i) s += ',';
      s += c->object_name(t[i]);
    }
    onames.push_back(s + ")");
  }
  std::vector<FiniteGroupoid::Arrow> arrows;
  std::map<std::pair<int, std::vector<int>>, int> arrow_of;  // (sigma-rank…)
  // enumerate arrows: source tuple, sigma, component arrows f_i: c_i -> ?
  for (size_t so = 0; so < tuples.size(); ++so) {
    const auto& src = tuples[so];
    long long fact = factorial(n);
    for (long long sr = 0; sr < fact; ++sr) {
      Perm sigma = perm_unrank(n, sr);
      // component arrows: f_i from src[i]; destination tuple determined by
      // d_{sigma(i)} = dst(f_i)
      std::vector<std::vector<int>> choices(n);
      for (int i = 0; i < n; ++i) choices[i] = c->arrows_from(src[i]);
      std::vector<int> pick(n, 0);
      std::function<void(int)> rec = [&](int i) {
        if (i == n) {
          std::vector<int> dst(n);
          for (int j = 0; j < n; ++j)
            dst[sigma[j]] = c->arrow(choices[j][pick[j]]).dst;
          std::vector<int> comps(n);
          for (int j = 0; j < n; ++j) comps[j] = choices[j][pick[j]];
          std::string nm = "(";
          for (int j = 0; j < n; ++j) nm += std::to_string(sigma[j]);
          nm += ";";
          for (int j = 0; j < n; ++j) {
            if (j) nm += ',';
            nm += c->arrow(comps[j]).name;
          }
          nm += ")";
          int id = static_cast<int>(arrows.size());
          arrows.push_back({static_cast<int>(so),
                            out.obj_of_tuple.at(dst), nm});
          out.arrow_sigma.push_back(sigma);
          out.arrow_comps.push_back(comps);
          (void)id;
          return;
        }
        for (size_t ci = 0; ci < choices[i].size(); ++ci) {
          pick[i] = static_cast<int>(ci);
          rec(i + 1);
        }
      };
      rec(0);
    }
  }
  // identities and composition
  std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> lookup;
  for (size_t a = 0; a < arrows.size(); ++a) {
    std::vector<int> sig(out.arrow_sigma[a].begin(), out.arrow_sigma[a].end());
    lookup[{arrows[a].src, sig, out.arrow_comps[a]}] =
        static_cast<int>(a);
  }
  std::vector<int> ids(tuples.size());
  Perm idperm = perm_identity(n);
  for (size_t o = 0; o < tuples.size(); ++o) {
    std::vector<int> sig(idperm.begin(), idperm.end());
    std::vector<int> comps(n);
    for (int i = 0; i < n; ++i) comps[i] = c->identity(tuples[o][i]);
    ids[o] = lookup.at({static_cast<int>(o), sig, comps});
  }
  std::unordered_map<std::int64_t, int> comp;
  int na = static_cast<int>(arrows.size());
  for (int a1 = 0; a1 < na; ++a1)
    for (int a2 = 0; a2 < na; ++a2) {
      if (arrows[a1].dst != arrows[a2].src) continue;
      // a2 o a1: sigma = s2 o s1; comp_i = f2_{s1(i)} o f1_i
      Perm s = perm_compose(out.arrow_sigma[a2], out.arrow_sigma[a1]);
      std::vector<int> comps(n);
      for (int i = 0; i < n; ++i)
        comps[i] = c->compose(out.arrow_comps[a2][out.arrow_sigma[a1][i]],
                              out.arrow_comps[a1][i]);
      std::vector<int> sig(s.begin(), s.end());
      comp[ckey(a2, a1, na)] = lookup.at({arrows[a1].src, sig, comps});
    }
  out.gpd = std::make_shared<const FiniteGroupoid>(
      std::move(onames), std::move(arrows), std::move(ids), std::move(comp));
  return out;
}

SetValuedFunctor precompose(const GroupoidFunctor& k,
                            const SetValuedFunctor& y) {
  if (k.dst.get() != y.base.get())
    throw std::invalid_argument("precompose: base mismatch");
  std::vector<std::vector<std::string>> el(k.src->n_objects());
  for (int x = 0; x < k.src->n_objects(); ++x) el[x] = y.elems[k.obj_map[x]];
  std::vector<std::vector<int>> act(k.src->n_arrows());
  for (int a = 0; a < k.src->n_arrows(); ++a) act[a] = y.action[k.arrow_map[a]];
  return SetValuedFunctor(k.src, std::move(el), std::move(act));
}

GroupoidFunctor wreath_functor(const WreathGroupoid& src,
                               const WreathGroupoid& dst,
                               const GroupoidFunctor& base_phi) {
  if (base_phi.src.get() != src.base.get() ||
      base_phi.dst.get() != dst.base.get())
    throw std::invalid_argument("wreath_functor: base mismatch");
  std::vector<int> om(src.gpd->n_objects());
  for (int o = 0; o < src.gpd->n_objects(); ++o) {
    std::vector<int> t = src.tuple_of_obj[o];
    for (auto& c : t) c = base_phi.obj_map[c];
    om[o] = dst.obj_of_tuple.at(t);
  }
  // arrow lookup in dst by (src object, sigma, comps)
  std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> lookup;
  for (int a = 0; a < dst.gpd->n_arrows(); ++a) {
    std::vector<int> sig(dst.arrow_sigma[a].begin(), dst.arrow_sigma[a].end());
    lookup[{dst.gpd->arrow(a).src, sig, dst.arrow_comps[a]}] = a;
  }
  std::vector<int> am(src.gpd->n_arrows());
  for (int a = 0; a < src.gpd->n_arrows(); ++a) {
    std::vector<int> sig(src.arrow_sigma[a].begin(), src.arrow_sigma[a].end());
    std::vector<int> comps = src.arrow_comps[a];
    for (auto& c : comps) c = base_phi.arrow_map[c];
    am[a] = lookup.at({om[src.gpd->arrow(a).src], sig, comps});
  }
  return GroupoidFunctor(src.gpd, dst.gpd, std::move(om), std::move(am));
}

bool GroupoidFamily::contains(int obj, const Subgroup& h) const {
  const auto& b = *base;
  int r = b.class_rep(obj);
  auto it = at_rep.find(r);
  if (it == at_rep.end()) return false;
  const auto& aut_o = b.aut_group(obj);
  const auto& aut_r = b.aut_group(r);
  int t = b.spanning_arrow(obj);  // r -> obj
  int tinv = b.inverse(t);
  std::vector<int> m;
  m.reserve(h.members.size());
  for (int e : h.members) {
    int arrow = aut_o.arrow_ids[e];
    int conj = b.compose(tinv, b.compose(arrow, t));
    m.push_back(aut_r.index_of_arrow.at(conj));
  }
  std::sort(m.begin(), m.end());
  Subgroup probe{aut_r.group, std::move(m)};
  return std::binary_search(it->second.begin(), it->second.end(), probe);
}

std::optional<std::string> GroupoidFamily::validate() const {
  for (const auto& [r, subs] : at_rep) {
    std::set<std::vector<int>> idx;
    for (const auto& s : subs) idx.insert(s.members);
    for (const auto& s : subs) {
      for (const auto& sub : enumerate_subgroups_of(s))
        if (!idx.count(sub.members))
          return "family at " + base->object_name(r) +
                 " not closed under subgroups";
      for (int x = 0; x < s.parent->size(); ++x)
        if (!idx.count(conjugate_subgroup(s, x).members))
          return "family at " + base->object_name(r) +
                 " not closed under conjugation";
    }
  }
  return std::nullopt;
}

GroupoidFamily all_subgroups_groupoid_family(GroupoidPtr g) {
  GroupoidFamily f;
  f.base = g;
  for (int r : g->class_reps())
    f.at_rep[r] = enumerate_subgroups(g->aut_group(r).group);
  return f;
}

GroupoidFamily pullback_groupoid_family(const GroupoidFunctor& phi,
                                        const GroupoidFamily& fbar) {
  if (phi.dst.get() != fbar.base.get())
    throw std::invalid_argument("pullback family: base mismatch");
  GroupoidFamily out;
  out.base = phi.src;
  for (int r : phi.src->class_reps()) {
    const auto& aut = phi.src->aut_group(r);
    int img_obj = phi.obj_map[r];
    const auto& aut_img = phi.dst->aut_group(img_obj);
    std::vector<Subgroup> keep;
    for (const auto& h : enumerate_subgroups(aut.group)) {
      std::set<int> img;
      for (int e : h.members)
        img.insert(aut_img.index_of_arrow.at(phi.arrow_map[aut.arrow_ids[e]]));
      Subgroup him{aut_img.group, std::vector<int>(img.begin(), img.end())};
      if (fbar.contains(img_obj, him)) keep.push_back(h);
    }
    std::sort(keep.begin(), keep.end());
    out.at_rep[r] = std::move(keep);
  }
  return out;
}

std::vector<Subgroup> meet_family_at(const GroupoidFamily& f, int x,
                                     const GroupoidFamily& fbar, int xbar) {
  GroupPtr a = f.base->aut_group(x).group;
  GroupPtr b = fbar.base->aut_group(xbar).group;
  return meet_subgroup_collections(
      a, b, [&](const Subgroup& h) { return f.contains(x, h); },
      [&](const Subgroup& h) { return fbar.contains(xbar, h); });
}

bool wreath_power_member(const WreathGroupoid& w, const GroupoidFamily& f,
                         int tuple_obj, const Subgroup& h) {
  const auto& tuple = w.tuple_of_obj[tuple_obj];
  int n = static_cast<int>(tuple.size());
  const auto& aut = w.gpd->aut_group(tuple_obj);
  for (int i = 0; i < n; ++i) {
    std::set<int> proj;
    for (int e : h.members) {
      int arrow = aut.arrow_ids[e];
      if (w.arrow_sigma[arrow][i] != i) continue;
      proj.insert(w.arrow_comps[arrow][i]);
    }
    const auto& aut_i = w.base->aut_group(tuple[i]);
    std::vector<int> m;
    for (int arr : proj) m.push_back(aut_i.index_of_arrow.at(arr));
    std::sort(m.begin(), m.end());
    if (!f.contains(tuple[i], Subgroup{aut_i.group, std::move(m)}))
      return false;
  }
  return true;
}

GroupoidFamily wreath_power_family(const WreathGroupoid& w,
                                   const GroupoidFamily& f) {
  GroupoidFamily out;
  out.base = w.gpd;
  for (int r : w.gpd->class_reps()) {
    std::vector<Subgroup> keep;
    for (const auto& h : enumerate_subgroups(w.gpd->aut_group(r).group))
      if (wreath_power_member(w, f, r, h)) keep.push_back(h);
    std::sort(keep.begin(), keep.end());
    out.at_rep[r] = std::move(keep);
  }
  return out;
}

}  // namespace eqop

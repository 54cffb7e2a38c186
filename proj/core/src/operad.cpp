#include "eqop/operad.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace eqop {

Signature Operad::splice(const Signature& outer, int slot,
                         const Signature& inner) {
  Signature s;
  s.dst = outer.dst;
  s.src.assign(outer.src.begin(), outer.src.begin() + slot);
  s.src.insert(s.src.end(), inner.src.begin(), inner.src.end());
  s.src.insert(s.src.end(), outer.src.begin() + slot + 1, outer.src.end());
  return s;
}

bool Operad::composable(const Signature& outer, int slot,
                        const Signature& inner) const {
  if (slot < 0 || slot >= outer.arity()) return false;
  if (outer.src[slot] != inner.dst) return false;
  if (outer.arity() + inner.arity() - 1 > base().max_arity) return false;
  return base().has_object(outer) && base().has_object(inner) &&
         base().has_object(splice(outer, slot, inner));
}

int Operad::compose_at(const Signature& outer, int slot,
                       const Signature& inner, int a, int b) const {
  auto it = comp.find({base().object(outer), slot, base().object(inner)});
  if (it == comp.end())
    throw std::out_of_range("operad: composition out of range");
  int v = it->second[a][b];
  if (v < 0)
    throw std::out_of_range("operad: composite exceeds the truncation bound");
  return v;
}

void Operad::build_comp_tables(
    const std::function<int(const Signature&, int, const Signature&, int,
                            int)>& gamma) {
  comp.clear();
  const auto& sg = base();
  for (int oo = 0; oo < sg.gpd->n_objects(); ++oo) {
    const Signature& outer = sg.sig_of_obj[oo];
    if (levels.values.size(oo) == 0) continue;
    for (int slot = 0; slot < outer.arity(); ++slot) {
      for (int io = 0; io < sg.gpd->n_objects(); ++io) {
        const Signature& inner = sg.sig_of_obj[io];
        if (levels.values.size(io) == 0) continue;
        if (!composable(outer, slot, inner)) continue;
        std::vector<std::vector<int>> table(
            levels.values.size(oo),
            std::vector<int>(levels.values.size(io)));
        for (int a = 0; a < levels.values.size(oo); ++a)
          for (int b = 0; b < levels.values.size(io); ++b)
            table[a][b] = gamma(outer, slot, inner, a, b);
        comp[{oo, slot, io}] = std::move(table);
      }
    }
  }
}

namespace {

// evaluate the subtree above edge e; returns (signature, element)
std::pair<Signature, int> eval_edge(const Operad& o, const ColoredTree& t,
                                    const std::vector<int>& labels, int e,
                                    bool ascending) {
  int v = t.vertex_above[e];
  if (v < 0) {
    Signature s;
    s.src = {t.edge_color[e]};
    s.dst = t.edge_color[e];
    return {s, -1};  // leaf marker: no composition needed
  }
  Signature sig = t.corolla_at(v);
  int elem = labels[v];
  std::vector<std::pair<Signature, int>> kids;
  for (int in : t.vertices[v].in)
    kids.push_back(eval_edge(o, t, labels, in, ascending));
  // contract child subtrees into their slots
  auto contract = [&](int slot_now, const std::pair<Signature, int>& kid) {
    elem = o.compose_at(sig, slot_now, kid.first, elem, kid.second);
    sig = Operad::splice(sig, slot_now, kid.first);
  };
  if (ascending) {
    int offset = 0;
    for (size_t j = 0; j < kids.size(); ++j) {
      if (kids[j].second < 0) {
        offset += 1;
        continue;
      }
      contract(offset, kids[j]);
      offset += kids[j].first.arity();
    }
  } else {
    for (int j = static_cast<int>(kids.size()) - 1; j >= 0; --j) {
      if (kids[j].second < 0) continue;
      contract(j, kids[j]);
    }
  }
  return {sig, elem};
}

}  // namespace

int eval_tree(const Operad& o, const ColoredTree& t,
              const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) != t.n_vertices())
    throw std::invalid_argument("eval_tree: label count mismatch");
  auto [sig, elem] = eval_edge(o, t, labels, t.root_edge, false);
  if (elem < 0) {
    auto it = o.unit.find(t.edge_color[t.root_edge]);
    if (it == o.unit.end())
      throw std::out_of_range("eval_tree: missing unit");
    return it->second;
  }
  return elem;
}

std::optional<std::string> check_operad_laws(const Operad& o, int tree_bound) {
  const auto& sg = o.base();
  // units exist and satisfy the unit laws on every table
  for (int c = 0; c < sg.colors.size(); ++c) {
    Signature cc{{c}, c};
    if (!sg.has_object(cc)) continue;
    if (!o.unit.count(c)) return "missing unit at color " + sg.colors.names[c];
  }
  for (const auto& [key, table] : o.comp) {
    auto [oo, slot, io] = key;
    const Signature& outer = sg.sig_of_obj[oo];
    const Signature& inner = sg.sig_of_obj[io];
    if (inner.arity() == 1 && inner.src[0] == inner.dst) {
      int u = o.unit.at(inner.dst);
      for (int a = 0; a < static_cast<int>(table.size()); ++a)
        if (table[a][u] >= 0 && table[a][u] != a)
          return "right unit law fails at " + outer.key(sg.colors);
    }
    if (outer.arity() == 1 && outer.src[0] == outer.dst) {
      int u = o.unit.at(outer.dst);
      for (int b = 0; b < static_cast<int>(table[u].size()); ++b)
        if (table[u][b] >= 0 && table[u][b] != b)
          return "left unit law fails at " + inner.key(sg.colors);
    }
  }
  // associativity: both contraction orders agree on every supported tree
  auto vertex_ok = [&](const Signature& c) {
    return sg.has_object(c) && o.levels.size_at(c) > 0;
  };
  for (const auto& t :
       enumerate_all_trees(sg.colors, tree_bound, sg.max_arity,
                           sg.max_arity, vertex_ok)) {
    if (static_cast<int>(t.leaves.size()) > sg.max_arity) continue;
    // every intermediate contraction must stay in range: guard by trying
    std::vector<int> labels(t.n_vertices(), 0);
    bool done = t.n_vertices() == 0;
    while (!done) {
      try {
        auto down = eval_edge(o, t, labels, t.root_edge, false);
        auto up = eval_edge(o, t, labels, t.root_edge, true);
        if (down.second != up.second)
          return "contraction order disagrees on tree " + tree_key(t);
      } catch (const std::out_of_range&) {
        // truncated composite: law checked only where defined
      }
      int i = 0;
      while (i < t.n_vertices()) {
        int v = t.planar_vertices[i];
        if (++labels[v] < o.levels.size_at(t.corolla_at(v))) break;
        labels[v] = 0;
        ++i;
      }
      if (i == t.n_vertices()) done = true;
    }
  }
  // equivariance of the composition tables
  for (const auto& [key, table] : o.comp) {
    auto [oo, slot, io] = key;
    const Signature& outer = sg.sig_of_obj[oo];
    const Signature& inner = sg.sig_of_obj[io];
    Signature total = Operad::splice(outer, slot, inner);
    int to = sg.object(total);
    for (int ma : sg.gpd->arrows_from(oo)) {
      const auto& ea = sg.arrow_el[ma];
      for (int mb : sg.gpd->arrows_from(io)) {
        const auto& eb = sg.arrow_el[mb];
        if (ea.g != eb.g) continue;
        int slot2 = perm_inverse(ea.sigma)[slot];
        const Signature& outer2 = sg.sig_of_obj[sg.gpd->arrow(ma).dst];
        const Signature& inner2 = sg.sig_of_obj[sg.gpd->arrow(mb).dst];
        if (inner2.dst != outer2.src[slot2]) continue;
        Perm tau = compose_slot_perm(ea.sigma, slot, eb.sigma);
        int me = sg.arrow(to, ea.g, tau);
        for (int a = 0; a < static_cast<int>(table.size()); ++a)
          for (int b = 0; b < static_cast<int>(table[a].size()); ++b) {
            if (table[a][b] < 0) continue;
            int lhs;
            try {
              lhs = o.compose_at(outer2, slot2, inner2,
                                 o.levels.values.apply(ma, a),
                                 o.levels.values.apply(mb, b));
            } catch (const std::out_of_range&) {
              continue;
            }
            int rhs = o.levels.values.apply(me, table[a][b]);
            if (lhs != rhs)
              return "composition not equivariant at " +
                     outer.key(sg.colors) + " slot " + std::to_string(slot);
          }
      }
    }
  }
  return std::nullopt;
}

Operad endomorphism_operad(SigGroupoidPtr base,
                           const std::vector<int>& set_sizes) {
  const auto& sg = *base;
  if (sg.colors.group->size() != 1)
    throw std::invalid_argument("endomorphism operad: trivial group only");
  if (static_cast<int>(set_sizes.size()) != sg.colors.size())
    throw std::invalid_argument("endomorphism operad: size list mismatch");
  // a function element at (c1..cn;c0) is encoded in base |A_{c0}| over the
  // lexicographic input tuples
  auto domain_size = [&](const Signature& s) {
    long long d = 1;
    for (int c : s.src) d *= set_sizes[c];
    return d;
  };
  auto level_size = [&](const Signature& s) {
    long long n = 1;
    long long d = domain_size(s);
    for (long long i = 0; i < d; ++i) n *= set_sizes[s.dst];
    return n;
  };
  auto f_apply = [&](const Signature& s, long long fcode,
                     const std::vector<int>& input) {
    long long rank = 0;
    for (size_t i = 0; i < input.size(); ++i)
      rank = rank * set_sizes[s.src[i]] + input[i];
    long long d = domain_size(s);
    for (long long i = d - 1; i > rank; --i) fcode /= set_sizes[s.dst];
    return static_cast<int>(fcode % set_sizes[s.dst]);
  };
  auto f_encode = [&](const Signature& s,
                      const std::function<int(const std::vector<int>&)>& f) {
    long long code = 0;
    std::vector<int> tuple(s.arity(), 0);
    long long d = domain_size(s);
    for (long long r = 0; r < d; ++r) {
      // decode rank r into the tuple (lexicographic)
      long long rr = r;
      for (int i = s.arity() - 1; i >= 0; --i) {
        tuple[i] = static_cast<int>(rr % set_sizes[s.src[i]]);
        rr /= set_sizes[s.src[i]];
      }
      code = code * set_sizes[s.dst] + f(tuple);
    }
    return code;
  };
  std::vector<std::vector<std::string>> el(sg.gpd->n_objects());
  for (int ob = 0; ob < sg.gpd->n_objects(); ++ob) {
    long long n = level_size(sg.sig_of_obj[ob]);
    for (long long i = 0; i < n; ++i) el[ob].push_back("f" + std::to_string(i));
  }
  std::vector<std::vector<int>> act(sg.gpd->n_arrows());
  for (int a = 0; a < sg.gpd->n_arrows(); ++a) {
    int src = sg.gpd->arrow(a).src;
    const Signature& s = sg.sig_of_obj[src];
    const Signature& d = sg.sig_of_obj[sg.gpd->arrow(a).dst];
    const Perm& sigma = sg.arrow_el[a].sigma;
    Perm sinv = perm_inverse(sigma);
    act[a].resize(el[src].size());
    for (size_t f = 0; f < el[src].size(); ++f) {
      act[a][f] = static_cast<int>(f_encode(d, [&](const std::vector<int>& y) {
        std::vector<int> x(s.arity());
        for (int j = 0; j < s.arity(); ++j) x[j] = y[sinv[j]];
        return f_apply(s, static_cast<long long>(f), x);
      }));
    }
  }
  Operad o;
  o.levels = SymSeq{base, SetValuedFunctor(base->gpd, std::move(el),
                                           std::move(act))};
  for (int c = 0; c < sg.colors.size(); ++c) {
    Signature cc{{c}, c};
    if (!sg.has_object(cc)) continue;
    o.unit[c] = static_cast<int>(f_encode(
        cc, [](const std::vector<int>& x) { return x[0]; }));
  }
  o.build_comp_tables([&](const Signature& outer, int slot,
                          const Signature& inner, int a, int b) {
    Signature total = Operad::splice(outer, slot, inner);
    return static_cast<int>(f_encode(total, [&](const std::vector<int>& x) {
      std::vector<int> inner_in(x.begin() + slot,
                                x.begin() + slot + inner.arity());
      int mid = f_apply(inner, b, inner_in);
      std::vector<int> outer_in(x.begin(), x.begin() + slot);
      outer_in.push_back(mid);
      outer_in.insert(outer_in.end(), x.begin() + slot + inner.arity(),
                      x.end());
      return f_apply(outer, a, outer_in);
    }));
  });
  return o;
}

Operad associative_operad(SigGroupoidPtr base) {
  const auto& sg = *base;
  if (sg.colors.size() != 1 || sg.colors.group->size() != 1)
    throw std::invalid_argument("associative operad: one trivial color only");
  std::vector<std::vector<std::string>> el(sg.gpd->n_objects());
  for (int ob = 0; ob < sg.gpd->n_objects(); ++ob) {
    int n = sg.sig_of_obj[ob].arity();
    if (n == 0) continue;  // reduced: no nullary part
    long long f = factorial(n);
    for (long long i = 0; i < f; ++i) el[ob].push_back("w" + std::to_string(i));
  }
  std::vector<std::vector<int>> act(sg.gpd->n_arrows());
  for (int a = 0; a < sg.gpd->n_arrows(); ++a) {
    int src = sg.gpd->arrow(a).src;
    int n = sg.sig_of_obj[src].arity();
    const Perm& sigma = sg.arrow_el[a].sigma;
    Perm sinv = perm_inverse(sigma);
    act[a].resize(el[src].size());
    for (size_t wr = 0; wr < el[src].size(); ++wr) {
      Perm w = perm_unrank(n, static_cast<long long>(wr));
      act[a][wr] = static_cast<int>(perm_rank(perm_compose(sinv, w)));
    }
  }
  Operad o;
  o.levels = SymSeq{base, SetValuedFunctor(base->gpd, std::move(el),
                                           std::move(act))};
  o.unit[0] = 0;
  o.build_comp_tables([&](const Signature& outer, int slot,
                          const Signature& inner, int a, int b) {
    Perm w = perm_unrank(outer.arity(), a);
    Perm v = perm_unrank(inner.arity(), b);
    int m = inner.arity();
    Perm out;
    for (int k = 0; k < outer.arity(); ++k) {
      int letter = w[k];
      if (letter < slot) {
        out.push_back(letter);
      } else if (letter == slot) {
        for (int j = 0; j < m; ++j) out.push_back(slot + v[j]);
      } else {
        out.push_back(letter + m - 1);
      }
    }
    return static_cast<int>(perm_rank(out));
  });
  return o;
}

Operad terminal_operad(SigGroupoidPtr base) {
  std::vector<int> ones(base->colors.size(), 1);
  return endomorphism_operad(std::move(base), ones);
}

Operad initial_operad(SigGroupoidPtr base) {
  const auto& sg = *base;
  std::vector<std::vector<std::string>> el(sg.gpd->n_objects());
  for (int ob = 0; ob < sg.gpd->n_objects(); ++ob) {
    const Signature& s = sg.sig_of_obj[ob];
    if (s.arity() == 1 && s.src[0] == s.dst) el[ob] = {"1"};
  }
  std::vector<std::vector<int>> act(sg.gpd->n_arrows());
  for (int a = 0; a < sg.gpd->n_arrows(); ++a)
    if (!el[sg.gpd->arrow(a).src].empty()) act[a] = {0};
  Operad o;
  o.levels = SymSeq{base, SetValuedFunctor(base->gpd, std::move(el),
                                           std::move(act))};
  for (int c = 0; c < sg.colors.size(); ++c)
    if (sg.has_object(Signature{{c}, c})) o.unit[c] = 0;
  o.build_comp_tables([](const Signature&, int, const Signature&, int, int) {
    return 0;
  });
  return o;
}

bool is_operad_map(const Operad& o, const Operad& p, const NatTrans& t) {
  if (o.levels.base.get() != p.levels.base.get()) return false;
  if (!is_natural(o.levels.values, p.levels.values, t)) return false;
  const auto& sg = o.base();
  for (const auto& [c, u] : o.unit) {
    int ob = sg.object(Signature{{c}, c});
    if (t.comp[ob][u] != p.unit.at(c)) return false;
  }
  for (const auto& [key, table] : o.comp) {
    auto [oo, slot, io] = key;
    const Signature& outer = sg.sig_of_obj[oo];
    const Signature& inner = sg.sig_of_obj[io];
    int to = sg.object(Operad::splice(outer, slot, inner));
    for (int a = 0; a < static_cast<int>(table.size()); ++a)
      for (int b = 0; b < static_cast<int>(table[a].size()); ++b) {
        if (table[a][b] < 0) continue;
        if (t.comp[to][table[a][b]] !=
            p.compose_at(outer, slot, inner, t.comp[oo][a], t.comp[io][b]))
          return false;
      }
  }
  return true;
}

std::vector<NatTrans> enumerate_operad_maps(const Operad& o, const Operad& p) {
  if (o.levels.base.get() != p.levels.base.get())
    throw std::invalid_argument("operad maps: base mismatch");
  const auto& sg = o.base();
  const auto& g = *sg.gpd;
  int nobj = g.n_objects();
  // forced seed: units
  std::vector<std::vector<int>> forced(nobj);
  for (int ob = 0; ob < nobj; ++ob)
    forced[ob].assign(o.levels.values.size(ob), -1);
  for (const auto& [c, u] : o.unit)
    forced[sg.object(Signature{{c}, c})][u] = p.unit.at(c);
  // propagate known images through arrows and compositions; false = clash
  auto propagate = [&](std::vector<std::vector<int>>& img) -> bool {
    bool changed = true;
    auto set = [&](int ob, int e, int v) {
      if (img[ob][e] < 0) {
        img[ob][e] = v;
        changed = true;
        return true;
      }
      return img[ob][e] == v;
    };
    while (changed) {
      changed = false;
      for (int a = 0; a < g.n_arrows(); ++a) {
        const auto& ar = g.arrow(a);
        for (int e = 0; e < o.levels.values.size(ar.src); ++e) {
          if (img[ar.src][e] < 0) continue;
          if (!set(ar.dst, o.levels.values.apply(a, e),
                   p.levels.values.apply(a, img[ar.src][e])))
            return false;
        }
      }
      for (const auto& [key, table] : o.comp) {
        auto [oo, slot, io] = key;
        const Signature& outer = sg.sig_of_obj[oo];
        const Signature& inner = sg.sig_of_obj[io];
        int to = sg.object(Operad::splice(outer, slot, inner));
        for (int a = 0; a < static_cast<int>(table.size()); ++a) {
          if (img[oo][a] < 0) continue;
          for (int b = 0; b < static_cast<int>(table[a].size()); ++b) {
            if (img[io][b] < 0 || table[a][b] < 0) continue;
            if (!set(to, table[a][b],
                     p.compose_at(outer, slot, inner, img[oo][a], img[io][b])))
              return false;
          }
        }
      }
    }
    return true;
  };
  std::vector<NatTrans> out;
  std::function<void(std::vector<std::vector<int>>)> search =
      [&](std::vector<std::vector<int>> img) {
        if (!propagate(img)) return;
        for (int ob = 0; ob < nobj; ++ob)
          for (int e = 0; e < o.levels.values.size(ob); ++e)
            if (img[ob][e] < 0) {
              for (int v = 0; v < p.levels.values.size(ob); ++v) {
                auto next = img;
                next[ob][e] = v;
                search(std::move(next));
              }
              return;
            }
        NatTrans t;
        t.comp = img;
        if (is_operad_map(o, p, t)) out.push_back(std::move(t));
      };
  search(forced);
  // deduplicate (branches can converge to the same total map)
  std::sort(out.begin(), out.end(),
            [](const NatTrans& a, const NatTrans& b) { return a.comp < b.comp; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const NatTrans& a, const NatTrans& b) {
                          return a.comp == b.comp;
                        }),
            out.end());
  return out;
}

Operad pullback_operad(const std::vector<int>& phi, const Operad& o,
                       SigGroupoidPtr src_base) {
  Operad out;
  out.levels = pullback_symseq(phi, o.levels, src_base);
  for (int c = 0; c < src_base->colors.size(); ++c)
    if (src_base->has_object(Signature{{c}, c}))
      out.unit[c] = o.unit.at(phi[c]);
  auto img = [&](Signature s) {
    for (auto& c : s.src) c = phi[c];
    s.dst = phi[s.dst];
    return s;
  };
  out.build_comp_tables([&](const Signature& outer, int slot,
                            const Signature& inner, int a, int b) {
    return o.compose_at(img(outer), slot, img(inner), a, b);
  });
  return out;
}

Operad pushforward_operad_injective(const std::vector<int>& phi,
                                    const Operad& o,
                                    SigGroupoidPtr dst_base) {
  std::set<int> image(phi.begin(), phi.end());
  if (image.size() != phi.size())
    throw std::invalid_argument("pushforward operad: color map not injective");
  const auto& sg = *dst_base;
  // preimage signature lookup
  std::vector<int> pre(sg.colors.size(), -1);
  for (size_t c = 0; c < phi.size(); ++c) pre[phi[c]] = static_cast<int>(c);
  auto preimage = [&](const Signature& d) -> std::optional<Signature> {
    Signature s;
    if (pre[d.dst] < 0) return std::nullopt;
    s.dst = pre[d.dst];
    for (int c : d.src) {
      if (pre[c] < 0) return std::nullopt;
      s.src.push_back(pre[c]);
    }
    return s;
  };
  std::vector<std::vector<std::string>> el(sg.gpd->n_objects());
  for (int ob = 0; ob < sg.gpd->n_objects(); ++ob) {
    const Signature& d = sg.sig_of_obj[ob];
    auto s = preimage(d);
    if (s && o.levels.base->has_object(*s)) {
      el[ob] = o.levels.names_at(*s);
    } else if (d.arity() == 1 && d.src[0] == d.dst && pre[d.dst] < 0) {
      el[ob] = {"1"};  // forced unit at a new color
    }
  }
  std::vector<std::vector<int>> act(sg.gpd->n_arrows());
  for (int a = 0; a < sg.gpd->n_arrows(); ++a) {
    const auto& ar = sg.gpd->arrow(a);
    if (el[ar.src].empty()) continue;
    const Signature& d = sg.sig_of_obj[ar.src];
    auto s = preimage(d);
    if (s && o.levels.base->has_object(*s)) {
      const auto& e = sg.arrow_el[a];
      int oa = o.levels.base->arrow(o.levels.base->object(*s), e.g, e.sigma);
      act[a] = o.levels.values.action[oa];
    } else {
      act[a] = {0};
    }
  }
  Operad out;
  out.levels = SymSeq{dst_base, SetValuedFunctor(dst_base->gpd, std::move(el),
                                                 std::move(act))};
  for (int c = 0; c < sg.colors.size(); ++c) {
    if (!sg.has_object(Signature{{c}, c})) continue;
    out.unit[c] = pre[c] >= 0 ? o.unit.at(pre[c]) : 0;
  }
  out.build_comp_tables([&](const Signature& outer, int slot,
                            const Signature& inner, int a, int b) {
    auto so = preimage(outer);
    auto si = preimage(inner);
    if (so && si && o.levels.base->has_object(*so) &&
        o.levels.base->has_object(*si))
      return o.compose_at(*so, slot, *si, a, b);
    // the only other populated case is unit-with-unit at a new color
    return 0;
  });
  return out;
}

}  // namespace eqop

#include "eqop/extension.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace eqop {

PushoutProductResult pushout_product(const FinSetMap& f, const FinSetMap& g) {
  int A = f.src_size, B = f.dst_size, C = g.src_size, D = g.dst_size;
  int n_ad = A * D, n_bc = B * C;
  std::vector<int> uf(n_ad + n_bc);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (int a = 0; a < A; ++a)
    for (int c = 0; c < C; ++c) {
      int ad = a * D + g.map[c];
      int bc = n_ad + f.map[a] * C + c;
      int ra = find(ad), rb = find(bc);
      if (ra != rb) uf[std::max(ra, rb)] = std::min(ra, rb);
    }
  PushoutProductResult out;
  out.dst_size = B * D;
  out.cls_ad.resize(n_ad);
  out.cls_bc.resize(n_bc);
  std::map<int, int> root_to;
  std::vector<int> target;
  auto cls = [&](int raw, int bd) {
    int r = find(raw);
    auto it = root_to.find(r);
    if (it == root_to.end()) {
      root_to[r] = static_cast<int>(target.size());
      target.push_back(bd);
      return static_cast<int>(target.size()) - 1;
    }
    return it->second;
  };
  for (int a = 0; a < A; ++a)
    for (int d = 0; d < D; ++d)
      out.cls_ad[a * D + d] = cls(a * D + d, f.map[a] * D + d);
  for (int b = 0; b < B; ++b)
    for (int c = 0; c < C; ++c)
      out.cls_bc[b * C + c] = cls(n_ad + b * C + c, b * D + g.map[c]);
  out.src_size = static_cast<int>(target.size());
  out.map = std::move(target);
  return out;
}

IteratedPPResult iterated_pushout_product(const std::vector<FinSetMap>& u) {
  int n = static_cast<int>(u.size());
  IteratedPPResult out;
  // enumerate mixed tuples with at least one X side
  std::function<void(int, MixedTuple&)> gen = [&](int i, MixedTuple& t) {
    if (i == n) {
      bool has_x = false;
      for (char c : t.is_x) has_x |= c;
      if (has_x) out.tuples.push_back(t);
      return;
    }
    for (int side = 0; side < 2; ++side) {  // 0 = Y, 1 = X
      int sz = side ? u[i].src_size : u[i].dst_size;
      for (int e = 0; e < sz; ++e) {
        t.is_x.push_back(static_cast<char>(side));
        t.elem.push_back(e);
        gen(i + 1, t);
        t.is_x.pop_back();
        t.elem.pop_back();
      }
    }
  };
  MixedTuple t;
  gen(0, t);
  std::map<std::pair<std::vector<char>, std::vector<int>>, int> index;
  for (size_t i = 0; i < out.tuples.size(); ++i)
    index[{out.tuples[i].is_x, out.tuples[i].elem}] = static_cast<int>(i);
  std::vector<int> uf(out.tuples.size());
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (size_t i = 0; i < out.tuples.size(); ++i) {
    int xcount = 0;
    for (char c : out.tuples[i].is_x) xcount += c;
    if (xcount < 2) continue;
    for (int v = 0; v < n; ++v) {
      if (!out.tuples[i].is_x[v]) continue;
      MixedTuple s = out.tuples[i];
      s.is_x[v] = 0;
      s.elem[v] = u[v].map[s.elem[v]];
      int a = find(static_cast<int>(i)), b = find(index.at({s.is_x, s.elem}));
      if (a != b) uf[std::max(a, b)] = std::min(a, b);
    }
  }
  out.cls.resize(out.tuples.size());
  std::map<int, int> root_to;
  for (size_t i = 0; i < out.tuples.size(); ++i) {
    int r = find(static_cast<int>(i));
    if (!root_to.count(r)) {
      int id = static_cast<int>(root_to.size());
      root_to[r] = id;
      // target: push every X coordinate
      MixedTuple s = out.tuples[i];
      int code = 0;
      for (int v = 0; v < n; ++v) {
        int e = s.is_x[v] ? u[v].map[s.elem[v]] : s.elem[v];
        code = code * u[v].dst_size + e;
      }
      out.target.push_back(code);
    }
    out.cls[i] = root_to[r];
  }
  out.n_classes = static_cast<int>(root_to.size());
  return out;
}

void ExtensionProblem::validate() const {
  if (x.base.get() != y.base.get() || x.base.get() != base_op.levels.base.get())
    throw std::invalid_argument("extension problem: base mismatch");
  if (!is_natural(x.values, y.values, u))
    throw std::invalid_argument("extension problem: u not natural");
  if (!is_natural(x.values, base_op.levels.values, attach))
    throw std::invalid_argument("extension problem: attach not natural");
  if (bound <= 0) throw std::invalid_argument("extension problem: bad bound");
}

namespace {

// kinds of vertex labels in normal forms and oracle trees
constexpr char KO = 0, KX = 1, KY = 2;

struct LTree {
  ColoredTree tree;
  Perm numbering;            // sig position -> leaf position
  std::vector<char> kind;    // per vertex
  std::vector<int> labels;   // per vertex
};

struct Ctx {
  const ExtensionProblem* p;
  const SigGroupoid* base;

  int value_size(char k, const Signature& s) const {
    switch (k) {
      case KO: return p->base_op.levels.size_at(s);
      case KX: return p->x.size_at(s);
      default: return p->y.size_at(s);
    }
  }
  int value_apply(char k, int arrow, int e) const {
    switch (k) {
      case KO: return p->base_op.levels.values.apply(arrow, e);
      case KX: return p->x.values.apply(arrow, e);
      default: return p->y.values.apply(arrow, e);
    }
  }
};

std::string serialize(const Ctx& c, const ColoredTree& s, const Perm& num,
                      const std::vector<char>& kind,
                      const std::vector<int>& labels) {
  std::string out = tree_key(s);
  out += "|n:";
  for (int v : num) out += std::to_string(v) + ",";
  out += "|v:";
  for (int v = 0; v < s.n_vertices(); ++v)
    out += std::to_string(static_cast<int>(kind[v])) + ":" +
           std::to_string(labels[v]) + ",";
  (void)c;
  return out;
}

// canonical key of the class of a presented labeled tree at a fixed
// signature; minimizes over color-stabilizing recolorings and shape isos
std::string canon_key(const Ctx& c, const Signature& sig, const LTree& lt) {
  const GSet& colors = c.base->colors;
  std::string best;
  for (int g = 0; g < colors.group->size(); ++g) {
    if (!(act_on_signature(colors, g, perm_identity(sig.arity()), sig) == sig))
      continue;
    ColoredTree qg = recolor_tree(colors, g, lt.tree);
    std::vector<int> glabels(lt.labels.size());
    for (int v = 0; v < lt.tree.n_vertices(); ++v) {
      Signature cor = lt.tree.corolla_at(v);
      int arr = c.base->arrow(c.base->object(cor), g,
                              perm_identity(cor.arity()));
      glabels[v] = c.value_apply(lt.kind[v], arr, lt.labels[v]);
    }
    ColoredTree shape = canonical_tree(qg);
    for (const TreeIso& phi : tree_isos(qg, shape)) {
      Perm num(lt.numbering.size());
      Perm lam = leaf_perm(qg, shape, phi);
      for (size_t i = 0; i < num.size(); ++i)
        num[i] = lam[lt.numbering[i]];
      std::vector<char> kind(shape.n_vertices());
      std::vector<int> labels(shape.n_vertices());
      for (int v = 0; v < qg.n_vertices(); ++v) {
        int w = phi.vertex_map[v];
        kind[w] = lt.kind[v];
        Signature cor = qg.corolla_at(v);
        Perm pi = vertex_input_perm(qg, shape, phi, v);
        int arr = c.base->arrow(c.base->object(cor), colors.group->id(),
                                perm_inverse(pi));
        labels[w] = c.value_apply(lt.kind[v], arr, glabels[v]);
      }
      std::string s = serialize(c, shape, num, kind, labels);
      if (best.empty() || s < best) best = s;
    }
  }
  if (best.empty()) throw std::logic_error("canon_key: no presentation");
  return best;
}

// contract one edge between two O-kind vertices via the base operad
LTree contract_once(const Ctx& c, const LTree& lt, int edge) {
  const ColoredTree& t = lt.tree;
  int below = t.vertex_below[edge], above = t.vertex_above[edge];
  Signature sb = t.corolla_at(below), sa = t.corolla_at(above);
  int slot = -1;
  for (size_t j = 0; j < t.vertices[below].in.size(); ++j)
    if (t.vertices[below].in[j] == edge) slot = static_cast<int>(j);
  int merged = c.p->base_op.compose_at(sb, slot, sa, lt.labels[below],
                                       lt.labels[above]);
  LTree out;
  // rebuild: drop `edge`, merge the two vertices
  std::vector<int> emap(t.n_edges(), -1);
  int ne = 0;
  for (int e = 0; e < t.n_edges(); ++e)
    if (e != edge) emap[e] = ne++;
  out.tree.edge_color.resize(ne);
  for (int e = 0; e < t.n_edges(); ++e)
    if (e != edge) out.tree.edge_color[emap[e]] = t.edge_color[e];
  out.tree.root_edge = emap[t.root_edge];
  std::vector<int> vmap(t.n_vertices(), -1);
  for (int v = 0; v < t.n_vertices(); ++v) {
    if (v == above) continue;
    ColoredTree::Vertex nv;
    if (v == below) {
      nv.out = emap[t.vertices[below].out];
      for (int e : t.vertices[below].in) {
        if (e == edge) {
          for (int e2 : t.vertices[above].in) nv.in.push_back(emap[e2]);
        } else {
          nv.in.push_back(emap[e]);
        }
      }
    } else {
      nv.out = emap[t.vertices[v].out];
      for (int e : t.vertices[v].in) nv.in.push_back(emap[e]);
    }
    vmap[v] = static_cast<int>(out.tree.vertices.size());
    out.tree.vertices.push_back(std::move(nv));
  }
  out.tree.finalize();
  out.numbering.resize(lt.numbering.size());
  std::vector<int> lpos(out.tree.n_edges(), -1);
  for (size_t i = 0; i < out.tree.leaves.size(); ++i)
    lpos[out.tree.leaves[i]] = static_cast<int>(i);
  for (size_t i = 0; i < lt.numbering.size(); ++i)
    out.numbering[i] = lpos[emap[t.leaves[lt.numbering[i]]]];
  out.kind.resize(out.tree.n_vertices());
  out.labels.resize(out.tree.n_vertices());
  for (int v = 0; v < t.n_vertices(); ++v) {
    if (v == above) continue;
    out.kind[vmap[v]] = lt.kind[v];
    out.labels[vmap[v]] = v == below ? merged : lt.labels[v];
  }
  return out;
}

// compose away every O-O edge
LTree normalize_composites(const Ctx& c, LTree lt) {
  bool changed = true;
  while (changed) {
    changed = false;
    const ColoredTree& t = lt.tree;
    for (int e = 0; e < t.n_edges() && !changed; ++e) {
      int b = t.vertex_below[e], a = t.vertex_above[e];
      if (b < 0 || a < 0) continue;
      if (lt.kind[b] == KO && lt.kind[a] == KO) {
        lt = contract_once(c, lt, e);
        changed = true;
      }
    }
  }
  return lt;
}

// delete a 1-ary O vertex labeled by the unit (oracle move)
LTree delete_vertex(const LTree& lt, int v) {
  const ColoredTree& t = lt.tree;
  int eout = t.vertices[v].out, ein = t.vertices[v].in[0];
  // merge ein into eout
  LTree out;
  std::vector<int> emap(t.n_edges(), -1);
  int ne = 0;
  for (int e = 0; e < t.n_edges(); ++e)
    if (e != ein) emap[e] = ne++;
  emap[ein] = emap[eout];
  out.tree.edge_color.resize(ne);
  for (int e = 0; e < t.n_edges(); ++e)
    if (e != ein) out.tree.edge_color[emap[e]] = t.edge_color[e];
  out.tree.root_edge = emap[t.root_edge];
  for (int w = 0; w < t.n_vertices(); ++w) {
    if (w == v) continue;
    ColoredTree::Vertex nv;
    nv.out = emap[t.vertices[w].out];
    for (int e : t.vertices[w].in) nv.in.push_back(emap[e]);
    out.kind.push_back(lt.kind[w]);
    out.labels.push_back(lt.labels[w]);
    out.tree.vertices.push_back(std::move(nv));
  }
  out.tree.finalize();
  std::vector<int> lpos(out.tree.n_edges(), -1);
  for (size_t i = 0; i < out.tree.leaves.size(); ++i)
    lpos[out.tree.leaves[i]] = static_cast<int>(i);
  out.numbering.resize(lt.numbering.size());
  for (size_t i = 0; i < lt.numbering.size(); ++i)
    out.numbering[i] = lpos[emap[t.leaves[lt.numbering[i]]]];
  return out;
}

// union-find keyed by canonical strings, with a representative LTree
struct Quot {
  std::map<std::string, int> id;
  std::vector<int> uf;
  std::vector<LTree> rep;
  std::vector<std::string> key_of;
  std::vector<int> born;  // stage index at creation

  int find(int a) {
    while (uf[a] != a) a = uf[a] = uf[uf[a]];
    return a;
  }
  int add(const std::string& k, const LTree& lt, int stage) {
    auto it = id.find(k);
    if (it != id.end()) return it->second;
    int n = static_cast<int>(uf.size());
    id[k] = n;
    uf.push_back(n);
    rep.push_back(lt);
    key_of.push_back(k);
    born.push_back(stage);
    return n;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) uf[std::max(a, b)] = std::min(a, b);
  }
};

// every presentation (g, sigma) of a tree class at the signature object
struct Presentation {
  int g;
  Perm sigma;
};
std::vector<Presentation> presentations(const Ctx& c, const Signature& lr,
                                        const Signature& sig) {
  std::vector<Presentation> out;
  if (lr.arity() != sig.arity()) return out;
  const GSet& colors = c.base->colors;
  long long f = factorial(lr.arity());
  for (int g = 0; g < colors.group->size(); ++g)
    for (long long r = 0; r < f; ++r) {
      Perm sigma = perm_unrank(lr.arity(), r);
      if (act_on_signature(colors, g, sigma, lr) == sig)
        out.push_back({g, sigma});
    }
  return out;
}

// presented form of a canonical tree class under (g, sigma) with labels
// transported by g
LTree present(const Ctx& c, const ColoredTree& t, const std::vector<char>& kind,
              const std::vector<int>& labels, const Presentation& pr) {
  LTree lt;
  lt.tree = recolor_tree(c.base->colors, pr.g, t);
  lt.numbering = pr.sigma;
  lt.kind = kind;
  lt.labels.resize(labels.size());
  for (int v = 0; v < t.n_vertices(); ++v) {
    Signature cor = t.corolla_at(v);
    int arr = c.base->arrow(c.base->object(cor), pr.g,
                            perm_identity(cor.arity()));
    lt.labels[v] = c.value_apply(kind[v], arr, labels[v]);
  }
  return lt;
}

}  // namespace

ExtensionResult extension_colimit(const ExtensionProblem& p) {
  p.validate();
  Ctx c{&p, p.x.base.get()};
  const SigGroupoid& base = *p.x.base;
  const GSet& colors = base.colors;
  int nobj = base.gpd->n_objects();
  std::vector<Quot> quot(nobj);

  ExtensionResult res;
  // stage 0: the base operad, one corolla-form node per element
  for (int o = 0; o < nobj; ++o) {
    const Signature& sig = base.sig_of_obj[o];
    for (int e = 0; e < p.base_op.levels.values.size(o); ++e) {
      LTree lt;
      lt.tree = corolla_tree(sig);
      lt.numbering = perm_identity(sig.arity());
      lt.kind = {KO};
      lt.labels = {e};
      quot[o].add(canon_key(c, sig, lt), lt, 0);
    }
  }
  auto snapshot = [&](int k) {
    FiltrationStage st;
    st.k = k;
    st.sizes.resize(nobj);
    st.map_from_prev.resize(nobj);
    for (int o = 0; o < nobj; ++o) {
      std::set<int> roots;
      for (size_t n = 0; n < quot[o].uf.size(); ++n)
        roots.insert(quot[o].find(static_cast<int>(n)));
      st.sizes[o] = static_cast<int>(roots.size());
    }
    return st;
  };
  // class index per object at the previous snapshot, for the stage maps
  auto class_index = [&](int o) {
    std::map<int, int> of_root;
    for (size_t n = 0; n < quot[o].uf.size(); ++n) {
      int r = quot[o].find(static_cast<int>(n));
      if (!of_root.count(r)) of_root[r] = static_cast<int>(of_root.size());
    }
    return of_root;
  };
  res.stages.push_back(snapshot(0));

  auto active_ok = [&](const Signature& s) {
    return base.has_object(s) && p.base_op.levels.size_at(s) > 0;
  };
  auto inert_ok = [&](const Signature& s) {
    return base.has_object(s) && p.y.size_at(s) > 0;
  };

  for (int k = 1; k <= p.bound; ++k) {
    auto alts = enumerate_alternating(colors, k, p.bound, base.max_arity,
                                      base.max_arity, active_ok, inert_ok);
    if (alts.empty()) break;
    std::vector<std::map<int, int>> prev_index(nobj);
    for (int o = 0; o < nobj; ++o) prev_index[o] = class_index(o);

    for (const AlternatingTree& at : alts) {
      const ColoredTree& t = at.tree;
      if (t.n_vertices() >= p.bound) res.saturated = true;
      GSet dummy = colors;
      Signature lr = t.leaf_root(dummy);
      if (!base.has_object(lr)) continue;
      // vertex lists by role
      std::vector<int> inerts, actives;
      for (int v = 0; v < t.n_vertices(); ++v)
        (at.inert[v] ? inerts : actives).push_back(v);
      // labelings: actives from O, inert Y-labelings for the new nodes
      std::vector<char> kind(t.n_vertices(), KO);
      for (int v : inerts) kind[v] = KY;
      // iterate active labelings
      std::vector<int> asz, isz, xsz;
      for (int v : actives) asz.push_back(c.value_size(KO, t.corolla_at(v)));
      for (int v : inerts) {
        isz.push_back(c.value_size(KY, t.corolla_at(v)));
        xsz.push_back(c.value_size(KX, t.corolla_at(v)));
      }
      // all (object, presentation) pairs this tree maps to
      std::vector<std::pair<int, Presentation>> pres;
      for (int o = 0; o < nobj; ++o)
        for (const Presentation& pr : presentations(c, lr, base.sig_of_obj[o]))
          pres.emplace_back(o, pr);
      if (pres.empty()) continue;
      std::vector<int> albl(actives.size(), 0);
      while (true) {
        std::vector<int> mixed(inerts.size(), 0);
        std::vector<char> side(inerts.size(), 0);
        std::function<void(size_t)> walk = [&](size_t i) {
          if (i == inerts.size()) {
            std::vector<int> labels(t.n_vertices());
            std::vector<char> kd(t.n_vertices());
            bool any_x = false;
            for (size_t j = 0; j < actives.size(); ++j) {
              labels[actives[j]] = albl[j];
              kd[actives[j]] = KO;
            }
            for (size_t j = 0; j < inerts.size(); ++j) {
              labels[inerts[j]] = mixed[j];
              kd[inerts[j]] = side[j] ? KX : KY;
              any_x |= side[j];
            }
            for (const auto& [o, pr] : pres) {
              LTree plt = present(c, t, kd, labels, pr);
              const Signature& osig = base.sig_of_obj[o];
              if (!any_x) {
                quot[o].add(canon_key(c, osig, plt), plt, k);
                continue;
              }
              // left leg: X-slots become O through the attaching map,
              // then adjacent actives compose away
              LTree conv = plt;
              for (int v = 0; v < conv.tree.n_vertices(); ++v) {
                if (conv.kind[v] != KX) continue;
                Signature cor = conv.tree.corolla_at(v);
                conv.kind[v] = KO;
                conv.labels[v] =
                    p.attach.comp[base.object(cor)][conv.labels[v]];
              }
              LTree left;
              try {
                left = normalize_composites(c, conv);
              } catch (const std::out_of_range&) {
                res.relations_dropped = true;
                continue;
              }
              int ln = quot[o].add(canon_key(c, osig, left), left, k);
              // right leg: X-labels push through u
              LTree right = plt;
              for (int v = 0; v < right.tree.n_vertices(); ++v) {
                if (right.kind[v] != KX) continue;
                Signature cor = right.tree.corolla_at(v);
                right.kind[v] = KY;
                right.labels[v] = p.u.comp[base.object(cor)][right.labels[v]];
              }
              int rn = quot[o].add(canon_key(c, osig, right), right, k);
              quot[o].unite(ln, rn);
            }
            return;
          }
          for (int e = 0; e < isz[i]; ++e) {
            side[i] = 0;
            mixed[i] = e;
            walk(i + 1);
          }
          for (int e = 0; e < xsz[i]; ++e) {
            side[i] = 1;
            mixed[i] = e;
            walk(i + 1);
          }
        };
        walk(0);
        size_t j = 0;
        while (j < albl.size() && ++albl[j] == asz[j]) albl[j++] = 0;
        if (j == albl.size()) break;
      }
    }
    FiltrationStage st = snapshot(k);
    st.map_from_prev.resize(nobj);
    for (int o = 0; o < nobj; ++o) {
      auto now_index = class_index(o);
      st.map_from_prev[o].resize(prev_index[o].size());
      for (const auto& [root, idx] : prev_index[o])
        st.map_from_prev[o][idx] = now_index.at(quot[o].find(root));
    }
    res.stages.push_back(std::move(st));
  }

  // assemble the colimit symseq and operad
  std::vector<std::vector<int>> class_nodes(nobj);  // class -> rep node
  std::vector<std::vector<std::string>> names(nobj);
  for (int o = 0; o < nobj; ++o) {
    std::map<int, int> of_root;
    for (size_t n = 0; n < quot[o].uf.size(); ++n) {
      int r = quot[o].find(static_cast<int>(n));
      if (!of_root.count(r)) {
        of_root[r] = static_cast<int>(class_nodes[o].size());
        class_nodes[o].push_back(r);
        names[o].push_back(quot[o].key_of[r]);
      }
    }
  }
  res.element_keys = names;
  auto class_of_node = [&](int o, int node) {
    int r = quot[o].find(node);
    auto it = std::lower_bound(class_nodes[o].begin(), class_nodes[o].end(), r);
    return static_cast<int>(it - class_nodes[o].begin());
  };
  auto lookup = [&](int o, const std::string& k) -> int {
    auto it = quot[o].id.find(k);
    if (it == quot[o].id.end()) return -1;
    return class_of_node(o, it->second);
  };
  // action of base arrows on classes
  std::vector<std::vector<int>> act(base.gpd->n_arrows());
  for (int a = 0; a < base.gpd->n_arrows(); ++a) {
    const auto& ar = base.gpd->arrow(a);
    const auto& el = base.arrow_el[a];
    const Signature& dsig = base.sig_of_obj[ar.dst];
    act[a].resize(class_nodes[ar.src].size());
    for (size_t ci = 0; ci < class_nodes[ar.src].size(); ++ci) {
      const LTree& lt = quot[ar.src].rep[class_nodes[ar.src][ci]];
      LTree img;
      img.tree = recolor_tree(colors, el.g, lt.tree);
      img.kind = lt.kind;
      img.numbering.resize(lt.numbering.size());
      for (size_t i = 0; i < lt.numbering.size(); ++i)
        img.numbering[i] = lt.numbering[el.sigma[i]];
      img.labels.resize(lt.labels.size());
      for (int v = 0; v < lt.tree.n_vertices(); ++v) {
        Signature cor = lt.tree.corolla_at(v);
        int arr = base.arrow(base.object(cor), el.g,
                             perm_identity(cor.arity()));
        img.labels[v] = c.value_apply(lt.kind[v], arr, lt.labels[v]);
      }
      int cls = lookup(ar.dst, canon_key(c, dsig, img));
      if (cls < 0)
        throw std::logic_error("extension: action image missing");
      act[a][ci] = cls;
    }
  }
  std::vector<std::vector<std::string>> el(nobj);
  for (int o = 0; o < nobj; ++o) el[o] = names[o];
  res.colimit.levels =
      SymSeq{p.x.base, SetValuedFunctor(base.gpd, std::move(el),
                                        std::move(act))};
  for (const auto& [col, un] : p.base_op.unit) {
    Signature cc{{col}, col};
    int o = base.object(cc);
    LTree lt;
    lt.tree = corolla_tree(cc);
    lt.numbering = perm_identity(1);
    lt.kind = {KO};
    lt.labels = {un};
    res.colimit.unit[col] = lookup(o, canon_key(c, cc, lt));
  }
  res.colimit.build_comp_tables([&](const Signature& outer, int slot,
                                    const Signature& inner, int a,
                                    int b) -> int {
    const LTree& la = quot[base.object(outer)]
                          .rep[class_nodes[base.object(outer)][a]];
    const LTree& lb = quot[base.object(inner)]
                          .rep[class_nodes[base.object(inner)][b]];
    int fuse_pos = la.numbering[slot];
    std::vector<int> imap;
    ColoredTree whole = graft_at_leaf(la.tree, fuse_pos, lb.tree, &imap);
    LTree lt;
    lt.tree = whole;
    lt.kind = la.kind;
    lt.labels = la.labels;
    lt.kind.insert(lt.kind.end(), lb.kind.begin(), lb.kind.end());
    lt.labels.insert(lt.labels.end(), lb.labels.begin(), lb.labels.end());
    std::vector<int> pos(whole.n_edges(), -1);
    for (size_t i = 0; i < whole.leaves.size(); ++i)
      pos[whole.leaves[i]] = static_cast<int>(i);
    int n = outer.arity(), m = inner.arity();
    lt.numbering.resize(n + m - 1);
    for (int q = 0; q < n + m - 1; ++q) {
      int edge;
      if (q < slot)
        edge = la.tree.leaves[la.numbering[q]];
      else if (q < slot + m)
        edge = imap[lb.tree.leaves[lb.numbering[q - slot]]];
      else
        edge = la.tree.leaves[la.numbering[q - m + 1]];
      lt.numbering[q] = pos[edge];
    }
    LTree norm;
    try {
      norm = normalize_composites(c, lt);
    } catch (const std::out_of_range&) {
      return -1;
    }
    if (norm.tree.n_vertices() > p.bound) return -1;
    Signature total = Operad::splice(outer, slot, inner);
    return lookup(base.object(total), canon_key(c, total, norm));
  });
  return res;
}

OracleResult oracle_extension(const ExtensionProblem& p) {
  p.validate();
  Ctx c{&p, p.x.base.get()};
  const SigGroupoid& base = *p.x.base;
  const GSet& colors = base.colors;
  int nobj = base.gpd->n_objects();
  std::vector<Quot> quot(nobj);

  auto kind_sizes = [&](const Signature& s) {
    return std::array<int, 3>{p.base_op.levels.size_at(s), p.x.size_at(s),
                              p.y.size_at(s)};
  };
  auto vertex_ok = [&](const Signature& s) {
    if (!base.has_object(s)) return false;
    auto ks = kind_sizes(s);
    return ks[0] + ks[1] + ks[2] > 0;
  };
  std::vector<std::set<std::string>> processed(nobj);
  auto process = [&](int o, const LTree& plt) {
    const Signature& sig = base.sig_of_obj[o];
    std::string key = canon_key(c, sig, plt);
    if (!processed[o].insert(key).second) return;
    int node = quot[o].add(key, plt, 0);
    // moves
    for (int v = 0; v < plt.tree.n_vertices(); ++v) {
      Signature cor = plt.tree.corolla_at(v);
      int co = base.object(cor);
      if (plt.kind[v] == KX) {
        LTree t1 = plt;  // X -> Y through u
        t1.kind[v] = KY;
        t1.labels[v] = p.u.comp[co][plt.labels[v]];
        quot[o].unite(node, quot[o].add(canon_key(c, sig, t1), t1, 0));
        LTree t2 = plt;  // X -> O through the attaching map
        t2.kind[v] = KO;
        t2.labels[v] = p.attach.comp[co][plt.labels[v]];
        quot[o].unite(node, quot[o].add(canon_key(c, sig, t2), t2, 0));
      }
      if (plt.kind[v] == KO && cor.arity() == 1 &&
          cor.src[0] == cor.dst &&
          plt.labels[v] == p.base_op.unit.at(cor.dst)) {
        LTree t3 = delete_vertex(plt, v);
        quot[o].unite(node, quot[o].add(canon_key(c, sig, t3), t3, 0));
      }
    }
    const ColoredTree& t = plt.tree;
    for (int e = 0; e < t.n_edges(); ++e) {
      int bvx = t.vertex_below[e], avx = t.vertex_above[e];
      if (bvx < 0 || avx < 0) continue;
      if (plt.kind[bvx] == KO && plt.kind[avx] == KO) {
        try {
          LTree t4 = contract_once(c, plt, e);
          quot[o].unite(node, quot[o].add(canon_key(c, sig, t4), t4, 0));
        } catch (const std::out_of_range&) {
          // contraction falls outside the truncation; relation dropped
        }
      }
    }
  };

  for (const ColoredTree& t :
       enumerate_all_trees(colors, p.bound, base.max_arity, base.max_arity,
                           vertex_ok)) {
    GSet dummy = colors;
    Signature lr = t.leaf_root(dummy);
    if (!base.has_object(lr)) continue;
    // kind assignments with per-kind support
    std::vector<std::array<int, 3>> ks;
    for (int v = 0; v < t.n_vertices(); ++v)
      ks.push_back(kind_sizes(t.corolla_at(v)));
    std::vector<char> kind(t.n_vertices(), KO);
    std::vector<int> labels(t.n_vertices(), 0);
    std::function<void(int)> assign = [&](int v) {
      if (v == t.n_vertices()) {
        for (int o = 0; o < nobj; ++o) {
          for (const Presentation& pr :
               presentations(c, lr, base.sig_of_obj[o]))
            process(o, present(c, t, kind, labels, pr));
        }
        return;
      }
      for (char k = 0; k < 3; ++k) {
        for (int e = 0; e < ks[v][k]; ++e) {
          kind[v] = k;
          labels[v] = e;
          assign(v + 1);
        }
      }
    };
    assign(0);
  }
  OracleResult out;
  out.sizes.resize(nobj);
  out.element_keys.resize(nobj);
  for (int o = 0; o < nobj; ++o) {
    std::map<int, std::string> minkey;
    for (size_t n = 0; n < quot[o].uf.size(); ++n) {
      int r = quot[o].find(static_cast<int>(n));
      auto it = minkey.find(r);
      if (it == minkey.end() || quot[o].key_of[n] < it->second)
        minkey[r] = quot[o].key_of[n];
    }
    out.sizes[o] = static_cast<int>(minkey.size());
    for (auto& [r, kk] : minkey) out.element_keys[o].push_back(kk);
  }
  return out;
}

bool extensions_agree(const ExtensionProblem& p, const ExtensionResult& filt,
                      const OracleResult& oracle) {
  const SigGroupoid& base = *p.x.base;
  for (int o = 0; o < base.gpd->n_objects(); ++o) {
    if (static_cast<int>(filt.element_keys[o].size()) != oracle.sizes[o])
      return false;
    // the filtration normal forms must land in distinct oracle classes;
    // with equal counts this means the canonical bijection exists
    std::set<std::string> keys(filt.element_keys[o].begin(),
                               filt.element_keys[o].end());
    if (static_cast<int>(keys.size()) != oracle.sizes[o]) return false;
  }
  return true;
}

bool check_universal_property(const ExtensionProblem& p,
                              const ExtensionResult& r,
                              const std::vector<const Operad*>& targets) {
  const SigGroupoid& base = *p.x.base;
  for (const Operad* tp : targets) {
    const Operad& P = *tp;
    // left side: operad maps out of the colimit
    size_t lhs = enumerate_operad_maps(r.colimit, P).size();
    // right side: pairs agreeing on X
    size_t rhs = 0;
    auto of = enumerate_operad_maps(p.base_op, P);
    auto ys = hom_set(p.y.values, P.levels.values);
    for (const auto& fo : of)
      for (const auto& fy : ys) {
        bool agree = true;
        for (int o = 0; o < base.gpd->n_objects() && agree; ++o)
          for (int e = 0; e < p.x.size_at(base.sig_of_obj[o]) && agree; ++e) {
            int via_o = fo.comp[o][p.attach.comp[o][e]];
            int via_y = fy.comp[o][p.u.comp[o][e]];
            agree = via_o == via_y;
          }
        if (agree) ++rhs;
      }
    if (lhs != rhs) return false;
  }
  return true;
}

SymSeq extend_by_empty(const std::vector<int>& phi, const SymSeq& x,
                       SigGroupoidPtr dst_base) {
  std::set<int> image;
  for (int v : phi) image.insert(v);
  if (image.size() != phi.size())
    throw std::invalid_argument("extend_by_empty: color map not injective");
  const SigGroupoid& sg = *dst_base;
  std::vector<int> pre(sg.colors.size(), -1);
  for (size_t cc = 0; cc < phi.size(); ++cc) pre[phi[cc]] = static_cast<int>(cc);
  auto preimage = [&](const Signature& d) -> std::optional<Signature> {
    Signature s;
    if (pre[d.dst] < 0) return std::nullopt;
    s.dst = pre[d.dst];
    for (int cc : d.src) {
      if (pre[cc] < 0) return std::nullopt;
      s.src.push_back(pre[cc]);
    }
    return s;
  };
  std::vector<std::vector<std::string>> el(sg.gpd->n_objects());
  std::vector<std::vector<int>> act(sg.gpd->n_arrows());
  for (int o = 0; o < sg.gpd->n_objects(); ++o) {
    auto s = preimage(sg.sig_of_obj[o]);
    if (s && x.base->has_object(*s)) el[o] = x.names_at(*s);
  }
  for (int a = 0; a < sg.gpd->n_arrows(); ++a) {
    const auto& ar = sg.gpd->arrow(a);
    if (el[ar.src].empty()) continue;
    auto s = preimage(sg.sig_of_obj[ar.src]);
    const auto& e = sg.arrow_el[a];
    int oa = x.base->arrow(x.base->object(*s), e.g, e.sigma);
    act[a] = x.values.action[oa];
  }
  return SymSeq{dst_base,
                SetValuedFunctor(dst_base->gpd, std::move(el), std::move(act))};
}

ColorChangePushoutReport check_injective_colorchange_pushout(
    const ExtensionProblem& c_problem, const std::vector<int>& phi,
    const Operad& o_upstairs, SigGroupoidPtr dst_base, int dst_bound) {
  // upstairs problem: extend X, Y by the empty set; the attaching map factors
  // through phi* O', which must agree with the given C-level base operad
  ExtensionProblem up;
  up.base_op = o_upstairs;
  up.x = extend_by_empty(phi, c_problem.x, dst_base);
  up.y = extend_by_empty(phi, c_problem.y, dst_base);
  const SigGroupoid& dsg = *dst_base;
  const SigGroupoid& csg = *c_problem.x.base;
  up.u.comp.resize(dsg.gpd->n_objects());
  up.attach.comp.resize(dsg.gpd->n_objects());
  std::vector<int> pre(dsg.colors.size(), -1);
  for (size_t cc = 0; cc < phi.size(); ++cc) pre[phi[cc]] = static_cast<int>(cc);
  for (int o = 0; o < dsg.gpd->n_objects(); ++o) {
    Signature d = dsg.sig_of_obj[o];
    Signature s;
    bool ok = pre[d.dst] >= 0;
    if (ok) s.dst = pre[d.dst];
    for (int cc : d.src) {
      if (pre[cc] < 0) ok = false;
      if (ok) s.src.push_back(pre[cc]);
    }
    if (!ok || !csg.has_object(s)) continue;
    int co = csg.object(s);
    up.u.comp[o] = c_problem.u.comp[co];
    // attach upstairs: X(s) -> O'(d); the C-problem attaches into phi* O',
    // whose value sets are literally O'(phi sig)
    up.attach.comp[o] = c_problem.attach.comp[co];
  }
  up.bound = dst_bound;

  ExtensionResult ed = extension_colimit(up);
  ExtensionResult ec = extension_colimit(c_problem);

  ColorChangePushoutReport rep;
  rep.levels_agree = true;
  for (int co = 0; co < csg.gpd->n_objects(); ++co) {
    Signature s = csg.sig_of_obj[co];
    Signature d = s;
    for (auto& cc : d.src) cc = phi[cc];
    d.dst = phi[d.dst];
    int dsz = ed.colimit.levels.size_at(d);
    int csz = ec.colimit.levels.size_at(s);
    if (dsz != csz) rep.levels_agree = false;
  }
  // local isomorphism preservation: if u is a levelwise bijection, the map
  // O' -> O'[phi_! u] must be one as well
  bool u_bij = true;
  for (int o = 0; o < csg.gpd->n_objects(); ++o) {
    if (c_problem.x.values.size(o) != c_problem.y.values.size(o)) u_bij = false;
    std::set<int> img(c_problem.u.comp[o].begin(), c_problem.u.comp[o].end());
    if (static_cast<int>(img.size()) != c_problem.x.values.size(o))
      u_bij = false;
  }
  if (u_bij) {
    for (int o = 0; o < dsg.gpd->n_objects(); ++o)
      if (ed.colimit.levels.values.size(o) !=
          o_upstairs.levels.values.size(o))
        rep.local_iso_preserved = false;
  }
  return rep;
}

}  // namespace eqop

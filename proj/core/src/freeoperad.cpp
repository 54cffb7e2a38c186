#include "eqop/freeoperad.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace eqop {

namespace {

// mixed-radix index of a labeling over the planar vertex order
int tuple_index(const ColoredTree& t, const SymSeq& x,
                const std::vector<int>& labels) {
  int idx = 0;
  for (int v : t.planar_vertices) {
    int sz = x.size_at(t.corolla_at(v));
    idx = idx * sz + labels[v];
  }
  return idx;
}

std::vector<int> tuple_decode(const ColoredTree& t, const SymSeq& x, int idx) {
  std::vector<int> labels(t.n_vertices(), 0);
  for (int i = static_cast<int>(t.planar_vertices.size()) - 1; i >= 0; --i) {
    int v = t.planar_vertices[i];
    int sz = x.size_at(t.corolla_at(v));
    labels[v] = idx % sz;
    idx /= sz;
  }
  return labels;
}

}  // namespace

FreeOperad free_operad(const SymSeq& x, std::optional<int> bound,
                       bool reduced) {
  const auto& base = *x.base;
  const GSet& colors = base.colors;
  if (reduced) {
    for (int o = 0; o < base.gpd->n_objects(); ++o)
      if (base.sig_of_obj[o].arity() <= 1 && x.values.size(o) > 0)
        throw std::invalid_argument(
            "free_operad: generators of arity <= 1 contradict reduced");
  }
  if (!bound && !reduced)
    throw std::invalid_argument(
        "free_operad: unbounded request requires reduced generators");
  FreeOperad fx;
  fx.gens = x;
  fx.bound = bound ? *bound : std::max(base.max_arity - 1, 1);

  // supported trees: every vertex corolla carries a generator, leaf-root in
  // range; sticks are always present
  auto vertex_ok = [&](const Signature& c) {
    if (c.arity() > base.max_arity) return false;
    if (!base.has_object(c)) return false;
    return x.size_at(c) > 0;
  };
  for (auto& t : enumerate_all_trees(colors, fx.bound, base.max_arity,
                                     base.max_arity, vertex_ok)) {
    GSet dummy = colors;
    if (!base.has_object(t.leaf_root(dummy))) continue;
    fx.obj_of_key_[tree_key(t)] = static_cast<int>(fx.trees.size());
    fx.trees.push_back(std::move(t));
  }
  // the equivariant tree groupoid: arrows (g, iso g.T -> S)
  int nt = static_cast<int>(fx.trees.size());
  std::vector<FiniteGroupoid::Arrow> arrows;
  for (int ti = 0; ti < nt; ++ti) {
    for (int g = 0; g < colors.group->size(); ++g) {
      ColoredTree gt = recolor_tree(colors, g, fx.trees[ti]);
      auto it = fx.obj_of_key_.find(tree_key(gt));
      if (it == fx.obj_of_key_.end())
        throw std::logic_error("free_operad: tree set not action-closed");
      int si = it->second;
      for (const TreeIso& iso : tree_isos(gt, fx.trees[si])) {
        int id = static_cast<int>(arrows.size());
        fx.arrow_of_[{g, ti, iso.edge_map}] = id;
        fx.arrow_parts.emplace_back(g, iso.edge_map);
        arrows.push_back({ti, si,
                          "(" + colors.group->name(g) + ";t" +
                              std::to_string(ti) + ">" + std::to_string(si) +
                              "#" + std::to_string(id) + ")"});
      }
    }
  }
  std::vector<int> ids(nt);
  for (int ti = 0; ti < nt; ++ti) {
    std::vector<int> idmap(fx.trees[ti].n_edges());
    std::iota(idmap.begin(), idmap.end(), 0);
    ids[ti] = fx.arrow_of_.at({colors.group->id(), ti, idmap});
  }
  std::unordered_map<std::int64_t, int> comp;
  int na = static_cast<int>(arrows.size());
  for (int a1 = 0; a1 < na; ++a1) {
    int mid = arrows[a1].dst;
    for (int a2 = 0; a2 < na; ++a2) {
      if (arrows[a2].src != mid) continue;
      auto [g1, m1] = fx.arrow_parts[a1];
      auto [g2, m2] = fx.arrow_parts[a2];
      std::vector<int> m(m1.size());
      for (size_t e = 0; e < m1.size(); ++e) m[e] = m2[m1[e]];
      comp[static_cast<std::int64_t>(a2) * na + a1] =
          fx.arrow_of_.at({colors.group->mul(g2, g1), arrows[a1].src, m});
    }
  }
  std::vector<std::string> onames;
  for (const auto& t : fx.trees) onames.push_back(tree_key(t));
  fx.tree_gpd = std::make_shared<const FiniteGroupoid>(
      std::move(onames), std::move(arrows), std::move(ids), std::move(comp));

  // leaf-root functor into the base
  GSet dummy = colors;
  fx.lr_obj_.resize(nt);
  for (int ti = 0; ti < nt; ++ti)
    fx.lr_obj_[ti] = base.object(fx.trees[ti].leaf_root(dummy));
  std::vector<int> lr_arrow(na);
  for (int a = 0; a < na; ++a) {
    int ti = fx.tree_gpd->arrow(a).src;
    int si = fx.tree_gpd->arrow(a).dst;
    auto [g, emap] = fx.arrow_parts[a];
    TreeIso iso{emap, {}};
    // vertex map is not needed for leaf positions
    Perm lam = leaf_perm(fx.trees[ti], fx.trees[si], iso);
    lr_arrow[a] = base.arrow(fx.lr_obj_[ti], g, perm_inverse(lam));
  }
  GroupoidFunctor lr(fx.tree_gpd, base.gpd, fx.lr_obj_, std::move(lr_arrow));

  // the vertex-tensor functor N on the tree groupoid
  std::vector<std::vector<std::string>> el(nt);
  for (int ti = 0; ti < nt; ++ti) {
    const ColoredTree& t = fx.trees[ti];
    long long total = 1;
    for (int v : t.planar_vertices) total *= x.size_at(t.corolla_at(v));
    for (long long i = 0; i < total; ++i)
      el[ti].push_back("l" + std::to_string(i));
  }
  std::vector<std::vector<int>> act(na);
  for (int a = 0; a < na; ++a) {
    int ti = fx.tree_gpd->arrow(a).src;
    int si = fx.tree_gpd->arrow(a).dst;
    auto [g, emap] = fx.arrow_parts[a];
    const ColoredTree& t = fx.trees[ti];
    const ColoredTree& s = fx.trees[si];
    ColoredTree gt = recolor_tree(colors, g, t);
    // vertex map of the iso gt -> s
    TreeIso iso{emap, std::vector<int>(t.n_vertices(), -1)};
    for (int v = 0; v < t.n_vertices(); ++v)
      iso.vertex_map[v] = s.vertex_above[emap[t.vertices[v].out]];
    act[a].resize(el[ti].size());
    for (size_t ix = 0; ix < el[ti].size(); ++ix) {
      std::vector<int> labels = tuple_decode(t, x, static_cast<int>(ix));
      std::vector<int> out_labels(s.n_vertices());
      for (int v = 0; v < t.n_vertices(); ++v) {
        int w = iso.vertex_map[v];
        Perm pi = vertex_input_perm(gt, s, iso, v);
        int arr = base.arrow(base.object(t.corolla_at(v)), g,
                             perm_inverse(pi));
        out_labels[w] = x.values.apply(arr, labels[v]);
      }
      act[a][ix] = tuple_index(s, x, out_labels);
    }
  }
  SetValuedFunctor nfun(fx.tree_gpd, std::move(el), std::move(act));

  LanResult lan = lan_along(lr, nfun);
  fx.cls_ = lan.cls;
  fx.rep_ = lan.rep;
  fx.op.levels = SymSeq{x.base, std::move(lan.lan)};

  // units: stick classes
  for (int c = 0; c < colors.size(); ++c) {
    Signature cc{{c}, c};
    if (!base.has_object(cc)) continue;
    int ti = fx.obj_of_key_.at(tree_key(stick_tree(c)));
    int alpha = base.arrow(base.object(cc), colors.group->id(),
                           perm_identity(1));
    fx.op.unit[c] = fx.cls_(base.object(cc), ti, alpha, 0);
  }
  // composition by grafting
  const FreeOperad* self = &fx;
  fx.op.build_comp_tables([self](const Signature& outer, int slot,
                                 const Signature& inner, int a, int b) {
    return self->graft_compose(outer, slot, inner, a, b);
  });
  return fx;
}

int FreeOperad::encode(const Signature& sig, const PresentedElem& p) const {
  const auto& base = *gens.base;
  auto it = obj_of_key_.find(tree_key(p.tree));
  if (it == obj_of_key_.end()) return -1;
  int ti = it->second;
  const ColoredTree& t = trees[ti];
  auto isos = tree_isos(t, p.tree);
  if (isos.empty()) throw std::logic_error("encode: key clash");
  const TreeIso& psi = isos.front();  // t -> p.tree, colors literal (g = e)
  // alpha: lr(t) -> sig composes lr(psi) with the presented numbering
  Perm lam = leaf_perm(t, p.tree, psi);  // t-leaf pos -> p-leaf pos
  // presented numbering: sig position i carried by p-leaf numbering[i];
  // so sig position i corresponds to t-leaf lam^{-1}(numbering[i])
  Perm sigma(p.numbering.size());
  Perm lam_inv = perm_inverse(lam);
  for (size_t i = 0; i < p.numbering.size(); ++i)
    sigma[i] = lam_inv[p.numbering[i]];
  int alpha =
      base.arrow(lr_obj_[ti], gens.base->colors.group->id(), sigma);
  // transport labels back through psi
  std::vector<int> labels(t.n_vertices());
  for (int v = 0; v < t.n_vertices(); ++v) {
    int w = psi.vertex_map[v];
    Perm pi = vertex_input_perm(t, p.tree, psi, v);
    int arr = base.arrow(base.object(t.corolla_at(v)),
                         gens.base->colors.group->id(), perm_inverse(pi));
    // psi carries t-labels to p-labels; invert
    int back = base.gpd->inverse(arr);
    labels[v] = gens.values.apply(back, p.labels[w]);
  }
  return cls_(base.object(sig), ti, alpha, tuple_index(t, gens, labels));
}

PresentedElem FreeOperad::decode(const Signature& sig, int elem) const {
  const auto& base = *gens.base;
  auto [ti, alpha, tup] = rep_(base.object(sig), elem);
  const ColoredTree& t = trees[ti];
  const auto& ael = base.arrow_el[alpha];  // (g, sigma): lr(t) -> sig
  PresentedElem p;
  p.tree = recolor_tree(base.colors, ael.g, t);
  // sig position i corresponds to g.t leaf sigma[i]
  p.numbering = ael.sigma;
  std::vector<int> labels = tuple_decode(t, gens, tup);
  p.labels.resize(t.n_vertices());
  for (int v = 0; v < t.n_vertices(); ++v) {
    int arr = base.arrow(base.object(t.corolla_at(v)), ael.g,
                         perm_identity(t.corolla_at(v).arity()));
    p.labels[v] = gens.values.apply(arr, labels[v]);
  }
  return p;
}

int FreeOperad::tree_size(const Signature& sig, int elem) const {
  auto [ti, alpha, tup] = rep_(gens.base->object(sig), elem);
  (void)alpha;
  (void)tup;
  return trees[ti].n_vertices();
}

int FreeOperad::graft_compose(const Signature& outer, int slot,
                              const Signature& inner, int a, int b) const {
  PresentedElem pa = decode(outer, a);
  PresentedElem pb = decode(inner, b);
  int fuse_pos = pa.numbering[slot];
  std::vector<int> inner_map;
  ColoredTree whole =
      graft_at_leaf(pa.tree, fuse_pos, pb.tree, &inner_map);
  if (whole.n_vertices() > bound) return -1;
  // leaf positions in the result
  std::vector<int> pos(whole.n_edges(), -1);
  for (size_t i = 0; i < whole.leaves.size(); ++i)
    pos[whole.leaves[i]] = static_cast<int>(i);
  int n = outer.arity(), m = inner.arity();
  PresentedElem pc;
  pc.tree = whole;
  pc.numbering.resize(n + m - 1);
  for (int p = 0; p < n + m - 1; ++p) {
    int edge;
    if (p < slot) {
      edge = pa.tree.leaves[pa.numbering[p]];  // outer ids persist
    } else if (p < slot + m) {
      edge = inner_map[pb.tree.leaves[pb.numbering[p - slot]]];
    } else {
      edge = pa.tree.leaves[pa.numbering[p - m + 1]];
    }
    pc.numbering[p] = pos[edge];
  }
  pc.labels = pa.labels;
  pc.labels.insert(pc.labels.end(), pb.labels.begin(), pb.labels.end());
  return encode(Operad::splice(outer, slot, inner), pc);
}

SymSeqMap monad_unit(const FreeOperad& fx) {
  const auto& base = *fx.gens.base;
  NatTrans t;
  t.comp.resize(base.gpd->n_objects());
  for (int o = 0; o < base.gpd->n_objects(); ++o) {
    const Signature& sig = base.sig_of_obj[o];
    t.comp[o].resize(fx.gens.values.size(o));
    for (int e = 0; e < fx.gens.values.size(o); ++e) {
      PresentedElem p;
      p.tree = corolla_tree(sig);
      p.numbering = perm_identity(sig.arity());
      p.labels = {e};
      int img = fx.encode(sig, p);
      if (img < 0) throw std::logic_error("monad unit fell out of bound");
      t.comp[o][e] = img;
    }
  }
  return SymSeqMap(fx.gens, fx.op.levels, std::move(t));
}

int monad_mult(const FreeOperad& fx, const FreeOperad& ffx,
               const Signature& sig, int elem) {
  PresentedElem outer = ffx.decode(sig, elem);
  // each label is an FX-element at the planar corolla; flatten by grafting
  std::vector<ColoredTree> assignment(outer.tree.n_vertices());
  std::vector<Perm> numbering(outer.tree.n_vertices());
  std::vector<std::vector<int>> inner_labels(outer.tree.n_vertices());
  for (int v = 0; v < outer.tree.n_vertices(); ++v) {
    PresentedElem q = fx.decode(outer.tree.corolla_at(v), outer.labels[v]);
    assignment[v] = q.tree;
    numbering[v] = q.numbering;
    inner_labels[v] = q.labels;
  }
  std::vector<int> outer_edge_map;
  ColoredTree flat =
      graft_numbered(outer.tree, assignment, numbering, &outer_edge_map);
  if (flat.n_vertices() > fx.bound) return -1;
  // labels: the grafted tree lists inner vertices in outer-vertex order
  PresentedElem p;
  p.tree = flat;
  std::vector<int> pos(flat.n_edges(), -1);
  for (size_t i = 0; i < flat.leaves.size(); ++i)
    pos[flat.leaves[i]] = static_cast<int>(i);
  p.numbering.resize(outer.numbering.size());
  for (size_t i = 0; i < outer.numbering.size(); ++i)
    p.numbering[i] =
        pos[outer_edge_map[outer.tree.leaves[outer.numbering[i]]]];
  for (int v = 0; v < outer.tree.n_vertices(); ++v)
    p.labels.insert(p.labels.end(), inner_labels[v].begin(),
                    inner_labels[v].end());
  return fx.encode(sig, p);
}

}  // namespace eqop

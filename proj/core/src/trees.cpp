#include "eqop/trees.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace eqop {

GSet::GSet(GroupPtr g, std::vector<std::string> nm,
           std::vector<std::vector<int>> a)
    : group(std::move(g)), names(std::move(nm)), act(std::move(a)) {
  if (static_cast<int>(act.size()) != group->size())
    throw std::invalid_argument("gset: action table size mismatch");
  for (const auto& p : act)
    if (static_cast<int>(p.size()) != size() ||
        !is_permutation(std::vector<int>(p.begin(), p.end())))
      throw std::invalid_argument("gset: action entry not a permutation");
  for (int c = 0; c < size(); ++c)
    if (act[group->id()][c] != c)
      throw std::invalid_argument("gset: identity acts nontrivially");
  for (int g1 = 0; g1 < group->size(); ++g1)
    for (int g2 = 0; g2 < group->size(); ++g2)
      for (int c = 0; c < size(); ++c)
        if (act[group->mul(g1, g2)][c] != act[g1][act[g2][c]])
          throw std::invalid_argument("gset: not a group action");
}

GSet trivial_gset(int n_colors) {
  std::vector<std::string> nm;
  for (int i = 0; i < n_colors; ++i) nm.push_back("c" + std::to_string(i));
  std::vector<int> idp(n_colors);
  std::iota(idp.begin(), idp.end(), 0);
  return GSet(trivial_group(), std::move(nm), {idp});
}

std::string Signature::key(const GSet& colors) const {
  std::string s;
  for (size_t i = 0; i < src.size(); ++i) {
    if (i) s += ',';
    s += colors.names[src[i]];
  }
  s += ';';
  s += colors.names[dst];
  return s;
}

Signature act_on_signature(const GSet& colors, int g, const Perm& sigma,
                           const Signature& sig) {
  if (static_cast<int>(sigma.size()) != sig.arity())
    throw std::invalid_argument("act_on_signature: arity mismatch");
  Signature out;
  out.dst = colors.apply(g, sig.dst);
  out.src.resize(sig.arity());
  for (int i = 0; i < sig.arity(); ++i)
    out.src[i] = colors.apply(g, sig.src[sigma[i]]);
  return out;
}

bool stabilizes(const GSet& colors, const Subgroup& lambda,
                const Signature& sig) {
  int n = sig.arity();
  for (int m : lambda.members) {
    auto el = gsigma_decode(*lambda.parent, colors.group->size(), n, m);
    if (!(act_on_signature(colors, el.g, el.sigma, sig) == sig)) return false;
  }
  return true;
}

void ColoredTree::finalize() {
  int ne = n_edges(), nv = n_vertices();
  vertex_above.assign(ne, -1);
  vertex_below.assign(ne, -1);
  for (int v = 0; v < nv; ++v) {
    const auto& vx = vertices[v];
    if (vx.out < 0 || vx.out >= ne)
      throw std::invalid_argument("tree: bad out edge");
    if (vertex_above[vx.out] >= 0)
      throw std::invalid_argument("tree: edge is output of two vertices");
    vertex_above[vx.out] = v;
    for (int e : vx.in) {
      if (e < 0 || e >= ne) throw std::invalid_argument("tree: bad in edge");
      if (vertex_below[e] >= 0)
        throw std::invalid_argument("tree: edge is input of two vertices");
      vertex_below[e] = v;
    }
  }
  if (root_edge < 0 || root_edge >= ne || vertex_below[root_edge] >= 0)
    throw std::invalid_argument("tree: bad root edge");
  for (int e = 0; e < ne; ++e)
    if (e != root_edge && vertex_below[e] < 0)
      throw std::invalid_argument("tree: disconnected edge below");
  leaves.clear();
  planar_vertices.clear();
  std::vector<char> seen_e(ne, 0), seen_v(nv, 0);
  std::function<void(int)> walk = [&](int e) {
    if (seen_e[e]) throw std::invalid_argument("tree: cycle");
    seen_e[e] = 1;
    int v = vertex_above[e];
    if (v < 0) {
      leaves.push_back(e);
      return;
    }
    if (seen_v[v]) throw std::invalid_argument("tree: cycle");
    seen_v[v] = 1;
    planar_vertices.push_back(v);
    for (int in : vertices[v].in) walk(in);
  };
  walk(root_edge);
  for (int e = 0; e < ne; ++e)
    if (!seen_e[e]) throw std::invalid_argument("tree: disconnected edge");
  for (int v = 0; v < nv; ++v)
    if (!seen_v[v]) throw std::invalid_argument("tree: disconnected vertex");
}

Signature ColoredTree::leaf_root(const GSet&) const {
  Signature s;
  s.dst = edge_color[root_edge];
  for (int e : leaves) s.src.push_back(edge_color[e]);
  return s;
}

Signature ColoredTree::corolla_at(int v) const {
  Signature s;
  s.dst = edge_color[vertices[v].out];
  for (int e : vertices[v].in) s.src.push_back(edge_color[e]);
  return s;
}

std::vector<Signature> ColoredTree::vertex_corollas() const {
  std::vector<Signature> out;
  for (int v : planar_vertices) out.push_back(corolla_at(v));
  return out;
}

ColoredTree stick_tree(int color) {
  ColoredTree t;
  t.edge_color = {color};
  t.root_edge = 0;
  t.finalize();
  return t;
}

ColoredTree corolla_tree(const Signature& sig) {
  ColoredTree t;
  t.edge_color.push_back(sig.dst);
  ColoredTree::Vertex v;
  v.out = 0;
  for (int i = 0; i < sig.arity(); ++i) {
    v.in.push_back(static_cast<int>(t.edge_color.size()));
    t.edge_color.push_back(sig.src[i]);
  }
  t.vertices.push_back(std::move(v));
  t.root_edge = 0;
  t.finalize();
  return t;
}

ColoredTree recolor_tree(const GSet& colors, int g, const ColoredTree& t) {
  ColoredTree out = t;
  for (auto& c : out.edge_color) c = colors.apply(g, c);
  out.finalize();
  return out;
}

namespace {

std::string edge_key(const ColoredTree& t, int e) {
  std::string s = "c" + std::to_string(t.edge_color[e]);
  int v = t.vertex_above[e];
  if (v >= 0) {
    std::vector<std::string> child;
    for (int in : t.vertices[v].in) child.push_back(edge_key(t, in));
    std::sort(child.begin(), child.end());
    s += '[';
    for (size_t i = 0; i < child.size(); ++i) {
      if (i) s += ':';
      s += child[i];
    }
    s += ']';
  }
  return s;
}

// rebuild the subtree rooted at edge e of t with children sorted by key,
// appending into `out`, returning the new edge id
int rebuild_sorted(const ColoredTree& t, int e, ColoredTree& out) {
  int ne = static_cast<int>(out.edge_color.size());
  out.edge_color.push_back(t.edge_color[e]);
  int v = t.vertex_above[e];
  if (v >= 0) {
    std::vector<std::pair<std::string, int>> kids;
    for (int in : t.vertices[v].in) kids.emplace_back(edge_key(t, in), in);
    std::stable_sort(
        kids.begin(), kids.end(),
        [](const auto& a, const auto& b) { return a.first < b.first; });
    int nv = static_cast<int>(out.vertices.size());
    out.vertices.push_back({ne, {}});
    for (auto& [kk, in] : kids) {
      int ce = rebuild_sorted(t, in, out);
      out.vertices[nv].in.push_back(ce);
    }
  }
  return ne;
}

int uf_find(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

}  // namespace

std::string tree_key(const ColoredTree& t) { return edge_key(t, t.root_edge); }

ColoredTree canonical_tree(const ColoredTree& t) {
  ColoredTree out;
  out.root_edge = 0;
  rebuild_sorted(t, t.root_edge, out);
  out.finalize();
  return out;
}

std::vector<TreeIso> tree_isos(const ColoredTree& a, const ColoredTree& b) {
  if (a.n_edges() != b.n_edges() || a.n_vertices() != b.n_vertices()) return {};
  std::vector<std::string> ka(a.n_edges()), kb(b.n_edges());
  for (int e = 0; e < a.n_edges(); ++e) ka[e] = edge_key(a, e);
  for (int e = 0; e < b.n_edges(); ++e) kb[e] = edge_key(b, e);
  if (ka[a.root_edge] != kb[b.root_edge]) return {};
  std::vector<TreeIso> out;
  std::vector<int> emap(a.n_edges(), -1), vmap(a.n_vertices(), -1);
  std::function<void(int, int, const std::function<void()>&)> match =
      [&](int ea, int eb, const std::function<void()>& cont) {
        if (ka[ea] != kb[eb]) return;
        emap[ea] = eb;
        int va = a.vertex_above[ea], vb = b.vertex_above[eb];
        if (va < 0) {
          cont();
          emap[ea] = -1;
          return;
        }
        vmap[va] = vb;
        const auto& ia = a.vertices[va].in;
        const auto& ib = b.vertices[vb].in;
        int k = static_cast<int>(ia.size());
        std::vector<char> used(k, 0);
        std::function<void(int)> assign = [&](int j) {
          if (j == k) {
            cont();
            return;
          }
          for (int p = 0; p < k; ++p) {
            if (used[p] || ka[ia[j]] != kb[ib[p]]) continue;
            used[p] = 1;
            match(ia[j], ib[p], [&]() { assign(j + 1); });
            used[p] = 0;
          }
        };
        assign(0);
        vmap[va] = -1;
        emap[ea] = -1;
      };
  match(a.root_edge, b.root_edge, [&]() {
    TreeIso iso;
    iso.edge_map = emap;
    iso.vertex_map = vmap;
    out.push_back(std::move(iso));
  });
  return out;
}

TreeIso compose_isos(const ColoredTree& a, const ColoredTree&,
                     const ColoredTree&, const TreeIso& ab,
                     const TreeIso& bc) {
  TreeIso out;
  out.edge_map.resize(a.n_edges());
  out.vertex_map.resize(a.n_vertices());
  for (int e = 0; e < a.n_edges(); ++e)
    out.edge_map[e] = bc.edge_map[ab.edge_map[e]];
  for (int v = 0; v < a.n_vertices(); ++v)
    out.vertex_map[v] = bc.vertex_map[ab.vertex_map[v]];
  return out;
}

Perm leaf_perm(const ColoredTree& a, const ColoredTree& b, const TreeIso& iso) {
  std::vector<int> pos_b(b.n_edges(), -1);
  for (size_t i = 0; i < b.leaves.size(); ++i)
    pos_b[b.leaves[i]] = static_cast<int>(i);
  Perm p(a.leaves.size());
  for (size_t i = 0; i < a.leaves.size(); ++i)
    p[i] = pos_b[iso.edge_map[a.leaves[i]]];
  return p;
}

Perm vertex_input_perm(const ColoredTree& a, const ColoredTree& b,
                       const TreeIso& iso, int v) {
  int w = iso.vertex_map[v];
  std::vector<int> pos(b.n_edges(), -1);
  const auto& ib = b.vertices[w].in;
  for (size_t j = 0; j < ib.size(); ++j) pos[ib[j]] = static_cast<int>(j);
  Perm p(a.vertices[v].in.size());
  for (size_t j = 0; j < p.size(); ++j)
    p[j] = pos[iso.edge_map[a.vertices[v].in[j]]];
  return p;
}

TreeAut tree_aut(const ColoredTree& t) {
  TreeAut out;
  out.isos = tree_isos(t, t);
  int n = static_cast<int>(out.isos.size());
  std::map<std::vector<int>, int> idx;
  int id = -1;
  for (int i = 0; i < n; ++i) {
    idx[out.isos[i].edge_map] = i;
    bool is_id = true;
    for (int e = 0; e < t.n_edges(); ++e)
      if (out.isos[i].edge_map[e] != e) is_id = false;
    if (is_id) id = i;
  }
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = "aut" + std::to_string(i);
    for (int j = 0; j < n; ++j) {
      auto c = compose_isos(t, t, t, out.isos[j], out.isos[i]);  // i after j
      mul[i][j] = idx.at(c.edge_map);
    }
  }
  out.group = std::make_shared<const FiniteGroup>(std::move(names),
                                                  std::move(mul), id);
  return out;
}

ColoredForest orbit_corolla_forest(const GSet& colors, const Signature& sig) {
  ColoredForest f;
  for (int g = 0; g < colors.group->size(); ++g) {
    Signature gs = act_on_signature(colors, g, perm_identity(sig.arity()), sig);
    f.components.push_back(corolla_tree(gs));
  }
  return f;
}

std::vector<ColoredTree> enumerate_all_trees(
    const GSet& colors, int max_vertices, int max_leaf_arity,
    int max_vertex_arity,
    const std::function<bool(const Signature&)>& vertex_ok) {
  struct Entry {
    ColoredTree tree;
    std::string key;
    int nleaves;
    int nvertices;
  };
  std::vector<Entry> all;
  for (int c = 0; c < colors.size(); ++c) {
    ColoredTree s = stick_tree(c);
    std::string k = tree_key(s);
    all.push_back({std::move(s), std::move(k), 1, 0});
  }
  std::sort(all.begin(), all.end(),
            [](const Entry& a, const Entry& b) { return a.key < b.key; });
  for (int v = 1; v <= max_vertices; ++v) {
    std::vector<Entry> fresh;
    for (int c = 0; c < colors.size(); ++c) {
      std::vector<int> picks;
      std::function<void(int, int, int)> rec = [&](int budget, int min_idx,
                                                   int leaves_so_far) {
        if (budget == 0) {
          Signature corolla;
          corolla.dst = c;
          for (int idx : picks)
            corolla.src.push_back(
                all[idx].tree.edge_color[all[idx].tree.root_edge]);
          if (vertex_ok(corolla)) {
            ColoredTree t;
            t.root_edge = 0;
            t.edge_color.push_back(c);
            t.vertices.push_back({0, {}});
            for (int idx : picks) {
              int off = static_cast<int>(t.edge_color.size());
              const ColoredTree& ch = all[idx].tree;
              for (int e = 0; e < ch.n_edges(); ++e)
                t.edge_color.push_back(ch.edge_color[e]);
              for (const auto& vx : ch.vertices) {
                ColoredTree::Vertex nv;
                nv.out = vx.out + off;
                for (int e : vx.in) nv.in.push_back(e + off);
                t.vertices.push_back(std::move(nv));
              }
              t.vertices[0].in.push_back(ch.root_edge + off);
            }
            t.finalize();
            int nl = static_cast<int>(t.leaves.size());
            if (nl <= max_leaf_arity) {
              std::string k = tree_key(t);
              fresh.push_back({std::move(t), std::move(k), nl, v});
            }
          }
        }
        if (static_cast<int>(picks.size()) >= max_vertex_arity) return;
        for (int idx = min_idx; idx < static_cast<int>(all.size()); ++idx) {
          const Entry& e = all[idx];
          if (e.nvertices > budget) continue;
          if (leaves_so_far + e.nleaves > max_leaf_arity) continue;
          picks.push_back(idx);
          rec(budget - e.nvertices, idx, leaves_so_far + e.nleaves);
          picks.pop_back();
        }
      };
      rec(v - 1, 0, 0);
    }
    std::sort(fresh.begin(), fresh.end(),
              [](const Entry& a, const Entry& b) { return a.key < b.key; });
    fresh.erase(std::unique(fresh.begin(), fresh.end(),
                            [](const Entry& a, const Entry& b) {
                              return a.key == b.key;
                            }),
                fresh.end());
    std::vector<Entry> merged;
    std::merge(std::make_move_iterator(all.begin()),
               std::make_move_iterator(all.end()),
               std::make_move_iterator(fresh.begin()),
               std::make_move_iterator(fresh.end()),
               std::back_inserter(merged),
               [](const Entry& a, const Entry& b) { return a.key < b.key; });
    all = std::move(merged);
  }
  std::vector<ColoredTree> out;
  out.reserve(all.size());
  for (auto& e : all) out.push_back(std::move(e.tree));
  return out;
}

std::vector<TreeClass> enumerate_trees(const GSet& colors,
                                       const Signature& sig,
                                       std::optional<int> bound, bool reduced,
                                       int max_vertex_arity) {
  if (!bound && !reduced)
    throw std::invalid_argument(
        "enumerate_trees: unbounded request requires reduced vertices");
  int b = bound ? *bound : std::max(sig.arity() - 1, 0);
  auto vertex_ok = [&](const Signature& c) {
    if (c.arity() > max_vertex_arity) return false;
    if (reduced && c.arity() < 2) return false;
    return true;
  };
  std::vector<TreeClass> out;
  std::multiset<int> want(sig.src.begin(), sig.src.end());
  for (auto& t : enumerate_all_trees(colors, b, std::max(sig.arity(), 1),
                                     max_vertex_arity, vertex_ok)) {
    if (t.edge_color[t.root_edge] != sig.dst) continue;
    if (static_cast<int>(t.leaves.size()) != sig.arity()) continue;
    std::multiset<int> got;
    for (int e : t.leaves) got.insert(t.edge_color[e]);
    if (got != want) continue;
    TreeAut aut = tree_aut(t);
    out.push_back({std::move(t), std::move(aut)});
  }
  return out;
}

int AlternatingTree::inert_count() const {
  int k = 0;
  for (char c : inert) k += c;
  return k;
}

std::optional<AlternatingTree> as_alternating(const ColoredTree& t) {
  AlternatingTree at;
  at.tree = t;
  at.inert.assign(t.n_vertices(), 0);
  std::function<bool(int, int)> walk = [&](int e, int depth) -> bool {
    int v = t.vertex_above[e];
    // a leaf edge hangs below the vertex at depth-1, which must be active;
    // the stick tree (depth 0) has no vertices at all
    if (v < 0) return depth == 0 || depth % 2 == 1;
    at.inert[v] = static_cast<char>(depth % 2);
    for (int in : t.vertices[v].in)
      if (!walk(in, depth + 1)) return false;
    return true;
  };
  if (!walk(t.root_edge, 0)) return std::nullopt;
  return at;
}

std::vector<AlternatingTree> enumerate_alternating(
    const GSet& colors, int k, int max_vertices, int max_leaf_arity,
    int max_vertex_arity,
    const std::function<bool(const Signature&)>& active_ok,
    const std::function<bool(const Signature&)>& inert_ok) {
  auto vertex_any = [&](const Signature& c) {
    return active_ok(c) || inert_ok(c);
  };
  std::vector<AlternatingTree> out;
  for (auto& t : enumerate_all_trees(colors, max_vertices, max_leaf_arity,
                                     max_vertex_arity, vertex_any)) {
    auto at = as_alternating(t);
    if (!at) continue;
    if (at->inert_count() != k) continue;
    bool ok = true;
    for (int v = 0; v < t.n_vertices() && ok; ++v) {
      const Signature c = t.corolla_at(v);
      ok = at->inert[v] ? inert_ok(c) : active_ok(c);
    }
    if (ok) out.push_back(std::move(*at));
  }
  return out;
}

ColoredTree graft(const ColoredTree& outer,
                  const std::vector<ColoredTree>& assignment) {
  std::vector<Perm> numbering;
  for (const auto& t : assignment)
    numbering.push_back(perm_identity(static_cast<int>(t.leaves.size())));
  return graft_numbered(outer, assignment, numbering);
}

ColoredTree graft_numbered(const ColoredTree& outer,
                           const std::vector<ColoredTree>& assignment,
                           const std::vector<Perm>& numbering,
                           std::vector<int>* outer_edge_map) {
  if (static_cast<int>(assignment.size()) != outer.n_vertices())
    throw std::invalid_argument("graft: assignment size mismatch");
  GSet dummy;  // leaf_root does not consult the color table
  for (int v = 0; v < outer.n_vertices(); ++v) {
    const Signature cor = outer.corolla_at(v);
    const ColoredTree& inner = assignment[v];
    Signature lr = inner.leaf_root(dummy);
    if (lr.arity() != cor.arity() || lr.dst != cor.dst)
      throw std::invalid_argument("graft: leaf-root mismatch at a vertex");
    for (int j = 0; j < cor.arity(); ++j)
      if (inner.edge_color[inner.leaves[numbering[v][j]]] != cor.src[j])
        throw std::invalid_argument("graft: leaf-root mismatch at a vertex");
  }
  std::vector<int> uf(outer.n_edges());
  std::iota(uf.begin(), uf.end(), 0);
  for (int v = 0; v < outer.n_vertices(); ++v) {
    if (assignment[v].n_vertices() == 0) {
      int a = uf_find(uf, outer.vertices[v].out);
      int b = uf_find(uf, outer.vertices[v].in[0]);
      uf[std::max(a, b)] = std::min(a, b);
    }
  }
  ColoredTree out;
  std::vector<int> outer_edge_new(outer.n_edges(), -1);
  for (int e = 0; e < outer.n_edges(); ++e) {
    int r = uf_find(uf, e);
    if (outer_edge_new[r] < 0) {
      outer_edge_new[r] = static_cast<int>(out.edge_color.size());
      out.edge_color.push_back(outer.edge_color[r]);
    }
    outer_edge_new[e] = outer_edge_new[r];
  }
  out.root_edge = outer_edge_new[outer.root_edge];
  for (int v = 0; v < outer.n_vertices(); ++v) {
    const ColoredTree& inner = assignment[v];
    if (inner.n_vertices() == 0) continue;
    std::vector<int> emap(inner.n_edges(), -1);
    emap[inner.root_edge] = outer_edge_new[outer.vertices[v].out];
    for (size_t j = 0; j < inner.leaves.size(); ++j)
      emap[inner.leaves[numbering[v][j]]] =
          outer_edge_new[outer.vertices[v].in[j]];
    for (int e = 0; e < inner.n_edges(); ++e) {
      if (emap[e] >= 0) continue;
      emap[e] = static_cast<int>(out.edge_color.size());
      out.edge_color.push_back(inner.edge_color[e]);
    }
    for (const auto& vx : inner.vertices) {
      ColoredTree::Vertex nv;
      nv.out = emap[vx.out];
      for (int e : vx.in) nv.in.push_back(emap[e]);
      out.vertices.push_back(std::move(nv));
    }
  }
  out.finalize();
  if (outer_edge_map) *outer_edge_map = outer_edge_new;
  return out;
}

ColoredTree graft_at_leaf(const ColoredTree& outer, int leaf_pos,
                          const ColoredTree& inner,
                          std::vector<int>* inner_edge_map) {
  if (leaf_pos < 0 || leaf_pos >= static_cast<int>(outer.leaves.size()))
    throw std::invalid_argument("graft_at_leaf: bad leaf position");
  int fuse = outer.leaves[leaf_pos];
  if (inner.edge_color[inner.root_edge] != outer.edge_color[fuse])
    throw std::invalid_argument("graft_at_leaf: color mismatch");
  ColoredTree out;
  out.edge_color = outer.edge_color;
  out.vertices = outer.vertices;
  out.root_edge = outer.root_edge;
  std::vector<int> emap(inner.n_edges(), -1);
  emap[inner.root_edge] = fuse;
  for (int e = 0; e < inner.n_edges(); ++e) {
    if (e == inner.root_edge) continue;
    emap[e] = static_cast<int>(out.edge_color.size());
    out.edge_color.push_back(inner.edge_color[e]);
  }
  for (const auto& vx : inner.vertices) {
    ColoredTree::Vertex nv;
    nv.out = emap[vx.out];
    for (int e : vx.in) nv.in.push_back(emap[e]);
    out.vertices.push_back(std::move(nv));
  }
  out.finalize();
  if (inner_edge_map) *inner_edge_map = emap;
  return out;
}

}  // namespace eqop

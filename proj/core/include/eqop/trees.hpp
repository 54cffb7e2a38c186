#ifndef EQOP_TREES_HPP
#define EQOP_TREES_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqop/fingroup.hpp"

namespace eqop {

/// A finite G-set of colors.
struct GSet {
  GroupPtr group;
  std::vector<std::string> names;
  std::vector<std::vector<int>> act;  // per group element, permutation

  GSet() = default;
  GSet(GroupPtr g, std::vector<std::string> nm,
       std::vector<std::vector<int>> a);
  int size() const { return static_cast<int>(names.size()); }
  int apply(int g, int c) const { return act[g][c]; }
};

GSet trivial_gset(int n_colors);  // trivial group, colors c0..c{n-1}

/// A C-signature (c_1,...,c_n; c_0).
struct Signature {
  std::vector<int> src;
  int dst = 0;

  int arity() const { return static_cast<int>(src.size()); }
  bool operator==(const Signature& o) const {
    return dst == o.dst && src == o.src;
  }
  bool operator<(const Signature& o) const {
    return std::tie(dst, src) < std::tie(o.dst, o.src);
  }
  std::string key(const GSet& colors) const;  // "c1,...,cn;c0"
};

/// (g, sigma) . (c_i) = (g c_{sigma(i)}; g c_0), the left action of
/// G x Sigma_n^op on n-ary signatures.
Signature act_on_signature(const GSet& colors, int g, const Perm& sigma,
                           const Signature& sig);

/// Lambda stabilizes sig iff every (g,sigma) in Lambda fixes it; Lambda is a
/// subgroup of G x Sigma_n^op built by product_with_sym_op.
bool stabilizes(const GSet& colors, const Subgroup& lambda,
                const Signature& sig);

/// A C-colored rooted tree with planar (ordered) vertex inputs. Edges carry
/// colors; each vertex has one output edge and an ordered list of input
/// edges; the stick tree has one edge and no vertices.
struct ColoredTree {
  struct Vertex {
    int out;
    std::vector<int> in;
  };
  std::vector<int> edge_color;
  std::vector<Vertex> vertices;
  int root_edge = 0;

  // derived by finalize()
  std::vector<int> leaves;          // planar order
  std::vector<int> planar_vertices; // root-first depth-first order
  std::vector<int> vertex_above;    // per edge: vertex with out == e, or -1
  std::vector<int> vertex_below;    // per edge: vertex with e among in, or -1

  int n_edges() const { return static_cast<int>(edge_color.size()); }
  int n_vertices() const { return static_cast<int>(vertices.size()); }
  void finalize();  // validates shape, computes the derived fields

  Signature leaf_root(const GSet& colors) const;          // lr
  Signature corolla_at(int v) const;                      // T_v, planar order
  std::vector<Signature> vertex_corollas() const;         // planar order
};

ColoredTree stick_tree(int color);
ColoredTree corolla_tree(const Signature& sig);
/// Recolor every edge by g.
ColoredTree recolor_tree(const GSet& colors, int g, const ColoredTree& t);

/// Iso-class key: recursive minimal string over (color, sorted child keys).
std::string tree_key(const ColoredTree& t);
/// Canonical planar representative of the iso class (children sorted by key,
/// ids renumbered root-first depth-first).
ColoredTree canonical_tree(const ColoredTree& t);

/// A color-preserving isomorphism a -> b as an edge bijection.
struct TreeIso {
  std::vector<int> edge_map;
  std::vector<int> vertex_map;
};
std::vector<TreeIso> tree_isos(const ColoredTree& a, const ColoredTree& b);
TreeIso compose_isos(const ColoredTree& a, const ColoredTree& b,
                     const ColoredTree& c, const TreeIso& ab,
                     const TreeIso& bc);
/// The induced map of planar leaf positions.
Perm leaf_perm(const ColoredTree& a, const ColoredTree& b, const TreeIso& iso);
/// The induced input-position permutation at vertex v of a.
Perm vertex_input_perm(const ColoredTree& a, const ColoredTree& b,
                       const TreeIso& iso, int v);

/// Aut_{Omega_C}(T) materialized as a FiniteGroup, with the iso data per
/// element.
struct TreeAut {
  GroupPtr group;
  std::vector<TreeIso> isos;
};
TreeAut tree_aut(const ColoredTree& t);

/// An unordered forest of colored trees.
struct ColoredForest {
  std::vector<ColoredTree> components;
};

/// G ._C C-vec: one component g.C-vec per group element, in element order.
ColoredForest orbit_corolla_forest(const GSet& colors, const Signature& sig);

/// Trees T with lr(T) isomorphic to sig and at most `bound` vertices, one
/// canonical representative per iso class with its automorphism group.
/// With reduced = true (no 0-ary or 1-ary vertices) the bound may be omitted
/// and defaults to max(arity-1, 0); otherwise a bound is required.
struct TreeClass {
  ColoredTree rep;
  TreeAut aut;
};
std::vector<TreeClass> enumerate_trees(const GSet& colors,
                                       const Signature& sig,
                                       std::optional<int> bound, bool reduced,
                                       int max_vertex_arity);

/// All canonical C-colored trees within the vertex bound whose vertices all
/// satisfy the predicate, with hard caps on leaf count and vertex arity.
std::vector<ColoredTree> enumerate_all_trees(
    const GSet& colors, int max_vertices, int max_leaf_arity,
    int max_vertex_arity,
    const std::function<bool(const Signature&)>& vertex_ok);

/// An alternating tree: vertices 2-colored active/inert by depth parity
/// (root side active), no like-colored adjacency, outer vertices active.
struct AlternatingTree {
  ColoredTree tree;
  std::vector<char> inert;  // per vertex id

  int inert_count() const;
};

/// Whether the depth-parity partition makes t alternating (no leaf edge under
/// an odd-depth vertex); fills `inert` when it does.
std::optional<AlternatingTree> as_alternating(const ColoredTree& t);

/// Canonical alternating trees with exactly k inert vertices, within the
/// vertex bound, with per-class support predicates for active and inert
/// vertex corollas.
std::vector<AlternatingTree> enumerate_alternating(
    const GSet& colors, int k, int max_vertices, int max_leaf_arity,
    int max_vertex_arity,
    const std::function<bool(const Signature&)>& active_ok,
    const std::function<bool(const Signature&)>& inert_ok);

/// Tree substitution: replace every vertex v of outer by assignment[v],
/// whose leaf-root must equal the corolla at v on the nose.
ColoredTree graft(const ColoredTree& outer,
                  const std::vector<ColoredTree>& assignment);

/// Tree substitution with leaf numberings: slot j of the corolla at v is
/// wired to leaf numbering[v][j] of assignment[v]. Reports where each outer
/// edge went when requested.
ColoredTree graft_numbered(const ColoredTree& outer,
                           const std::vector<ColoredTree>& assignment,
                           const std::vector<Perm>& numbering,
                           std::vector<int>* outer_edge_map = nullptr);

/// Partial grafting: fuse inner's root edge with the given leaf of outer.
/// Outer edges keep their ids; inner_edge_map reports the inner relocation.
ColoredTree graft_at_leaf(const ColoredTree& outer, int leaf_pos,
                          const ColoredTree& inner,
                          std::vector<int>* inner_edge_map = nullptr);

}  // namespace eqop

#endif

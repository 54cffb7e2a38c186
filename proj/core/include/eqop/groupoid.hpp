#ifndef EQOP_GROUPOID_HPP
#define EQOP_GROUPOID_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eqop/fingroup.hpp"

namespace eqop {

/// A finite groupoid with explicit object and arrow lists and a composition
/// table. Category axioms and invertibility are checked exhaustively on
/// construction.
class FiniteGroupoid {
 public:
  struct Arrow {
    int src;
    int dst;
    std::string name;
  };

  FiniteGroupoid(std::vector<std::string> object_names,
                 std::vector<Arrow> arrows, std::vector<int> identities,
                 std::unordered_map<std::int64_t, int> compose_table);

  int n_objects() const { return static_cast<int>(object_names_.size()); }
  int n_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::string& object_name(int x) const { return object_names_[x]; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  int identity(int x) const { return identities_[x]; }
  int inverse(int a) const { return inverses_[a]; }

  /// g o f for f: a -> b, g: b -> c.
  int compose(int g, int f) const;
  bool composable(int g, int f) const {
    return arrows_[f].dst == arrows_[g].src;
  }

  const std::vector<int>& arrows_from(int x) const { return from_[x]; }
  const std::vector<int>& arrows_between(int x, int y) const;

  /// Representative object of the iso class of x (union-find over arrows).
  int class_rep(int x) const { return rep_[x]; }
  /// A chosen arrow class_rep(x) -> x (identity when x is the rep).
  int spanning_arrow(int x) const { return span_[x]; }
  std::vector<int> class_reps() const;

  /// Aut(x) materialized as a FiniteGroup; arrow_ids[i] is the groupoid
  /// arrow for group element i.
  struct AutGroup {
    GroupPtr group;
    std::vector<int> arrow_ids;
    std::unordered_map<int, int> index_of_arrow;
  };
  const AutGroup& aut_group(int x) const;

 private:
  std::vector<std::string> object_names_;
  std::vector<Arrow> arrows_;
  std::vector<int> identities_;
  std::vector<int> inverses_;
  std::unordered_map<std::int64_t, int> compose_;
  std::vector<std::vector<int>> from_;
  mutable std::map<std::pair<int, int>, std::vector<int>> between_;
  std::vector<int> rep_;
  std::vector<int> span_;
  mutable std::map<int, AutGroup> aut_cache_;
  void validate() const;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

/// A one-object groupoid from a group; arrow i = group element i.
GroupoidPtr groupoid_from_group(GroupPtr g);

/// A functor between finite groupoids, checked on construction.
struct GroupoidFunctor {
  GroupoidPtr src;
  GroupoidPtr dst;
  std::vector<int> obj_map;
  std::vector<int> arrow_map;

  GroupoidFunctor(GroupoidPtr s, GroupoidPtr d, std::vector<int> om,
                  std::vector<int> am);
};

GroupoidFunctor identity_functor(GroupoidPtr g);
GroupoidFunctor compose_functors(const GroupoidFunctor& second,
                                 const GroupoidFunctor& first);

/// A finite-set-valued functor; on a groupoid every arrow acts by a
/// bijection (checked along with functoriality).
struct SetValuedFunctor {
  GroupoidPtr base;
  std::vector<std::vector<std::string>> elems;  // names per object
  std::vector<std::vector<int>> action;         // per arrow

  SetValuedFunctor() = default;
  SetValuedFunctor(GroupoidPtr b, std::vector<std::vector<std::string>> el,
                   std::vector<std::vector<int>> act);

  int size(int x) const { return static_cast<int>(elems[x].size()); }
  int apply(int arrow, int e) const { return action[arrow][e]; }
  void validate() const;
};

SetValuedFunctor constant_functor(GroupoidPtr g, int size);
SetValuedFunctor empty_functor(GroupoidPtr g);

/// A natural transformation X => Y over a common base.
struct NatTrans {
  std::vector<std::vector<int>> comp;  // per object
};

bool is_natural(const SetValuedFunctor& x, const SetValuedFunctor& y,
                const NatTrans& t);

/// All natural transformations X => Y, enumerated via orbit decomposition at
/// one representative per component.
std::vector<NatTrans> hom_set(const SetValuedFunctor& x,
                              const SetValuedFunctor& y);

/// Left Kan extension along k. Elements of Lan(ybar) are classes of triples
/// (g, alpha: k(g) -> ybar, e in X(g)); `section` names each class by its
/// minimal representative triple, and `cls` resolves any triple.
struct LanResult {
  SetValuedFunctor lan;
  // per target object: resolve a triple to a class id
  std::function<int(int ybar, int g, int alpha, int e)> cls;
  // minimal representative triple (g, alpha, e) of a class
  std::function<std::tuple<int, int, int>(int ybar, int c)> rep;
};
LanResult lan_along(const GroupoidFunctor& k, const SetValuedFunctor& x);

/// Semidirect groupoid G |x C for a G-action on C given per group element as
/// (object permutation, arrow permutation); rejects non-actions. An arrow
/// c -> c' is a pair (g, f: g.c -> c').
struct CatAction {
  GroupPtr group;
  std::vector<std::vector<int>> obj;  // per group element
  std::vector<std::vector<int>> arr;
};
struct SemidirectGroupoid {
  GroupoidPtr base;
  GroupoidPtr gpd;
  std::vector<std::pair<int, int>> arrow_parts;  // (g, arrow of C)
  std::map<std::pair<int, int>, int> arrow_of;   // keyed by (g, arrow of C)
};
SemidirectGroupoid semidirect_groupoid(const GroupoidPtr& c,
                                       const CatAction& act);

/// Wreath groupoid Sigma_n wr C: objects are n-tuples of objects of C; an
/// arrow is a permutation sigma plus arrows c_i -> d_{sigma(i)}.
struct WreathGroupoid {
  GroupoidPtr base;
  GroupoidPtr gpd;
  std::vector<std::vector<int>> tuple_of_obj;
  std::map<std::vector<int>, int> obj_of_tuple;
  // arrow decode: sigma and component arrows (f_i: c_i -> d_{sigma(i)})
  std::vector<Perm> arrow_sigma;
  std::vector<std::vector<int>> arrow_comps;
};
WreathGroupoid wreath_groupoid(const GroupoidPtr& c, int n);

/// Y o k: restriction of a set-valued functor along a groupoid functor.
SetValuedFunctor precompose(const GroupoidFunctor& k, const SetValuedFunctor& y);

/// Sigma_n wr phi: the functor between wreath groupoids induced by a functor
/// on the bases.
GroupoidFunctor wreath_functor(const WreathGroupoid& src,
                               const WreathGroupoid& dst,
                               const GroupoidFunctor& base_phi);

/// A family of subgroups of a groupoid, stored at component representatives.
struct GroupoidFamily {
  GroupoidPtr base;
  std::map<int, std::vector<Subgroup>> at_rep;  // subgroups of aut_group(rep)

  bool contains(int obj, const Subgroup& h) const;  // h <= aut_group(obj)
  /// Subgroup-and-conjugation closure check; description of first violation.
  std::optional<std::string> validate() const;
};

GroupoidFamily all_subgroups_groupoid_family(GroupoidPtr g);
GroupoidFamily pullback_groupoid_family(const GroupoidFunctor& phi,
                                        const GroupoidFamily& fbar);

/// (F meet Fbar) on the product-of-automorphism-groups at a pair of objects;
/// materialized over the subgroup lattice of Aut(x) x Aut(xbar).
std::vector<Subgroup> meet_family_at(const GroupoidFamily& f, int x,
                                     const GroupoidFamily& fbar, int xbar);

/// Membership predicate for the wreath power family F^{wr n} at a tuple:
/// h <= Aut of the tuple object in Sigma_n wr C belongs iff for every slot i
/// the projection of the sigma(i)=i part lies in F at the i-th component.
bool wreath_power_member(const WreathGroupoid& w, const GroupoidFamily& f,
                         int tuple_obj, const Subgroup& h);

/// Materialized wreath power family (small cases).
GroupoidFamily wreath_power_family(const WreathGroupoid& w,
                                   const GroupoidFamily& f);

}  // namespace eqop

#endif

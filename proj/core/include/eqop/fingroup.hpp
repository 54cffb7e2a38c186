#ifndef EQOP_FINGROUP_HPP
#define EQOP_FINGROUP_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace eqop {

// Permutations in one-line notation: p[i] is the image of i (0-based).
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& p, const Perm& q);  // (p*q)[i] = p[q[i]]
Perm perm_inverse(const Perm& p);
bool is_permutation(const Perm& p);
long long factorial(int n);
// Lexicographic rank of a permutation among all of S_n, and its inverse.
long long perm_rank(const Perm& p);
Perm perm_unrank(int n, long long r);
// Slot composition of signature-arrow permutations: given arrows
// (g,sigma): C -> C' and (g,rho): D -> D' and a slot i of C (0-based among
// the n sources), the composite signatures C o_i D -> C' o_{i'} D' with
// i' = sigma^{-1}(i) are related by the returned permutation tau, i.e.
// g*(C o_i D)*tau = C' o_{i'} D'.
Perm compose_slot_perm(const Perm& sigma, int slot, const Perm& rho);

/// A finite group given by an explicit multiplication table.
/// Element 0..size-1; identity, inverses and associativity are checked
/// exhaustively on construction.
class FiniteGroup {
 public:
  FiniteGroup();  // trivial group
  FiniteGroup(std::vector<std::string> names, std::vector<std::vector<int>> mul,
              int id);

  int size() const { return static_cast<int>(mul_.size()); }
  int id() const { return id_; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int a) const { return mul(mul(g, a), inv(g)); }
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }

  int element_order(int a) const;
  bool is_abelian() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  int id_ = 0;
  void validate() const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup of a fixed parent group, stored as a sorted member list
/// containing the identity and closed under mul and inv.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int a) const;
  bool contains_all(const Subgroup& other) const;
  bool operator==(const Subgroup& o) const { return members == o.members; }
  bool operator<(const Subgroup& o) const;

  /// The subgroup as a standalone group (element i = members[i]).
  FiniteGroup as_group() const;
};

/// Closure of a generating set, as a sorted member list.
std::vector<int> subgroup_closure(const FiniteGroup& g,
                                  const std::vector<int>& gens);
Subgroup make_subgroup(GroupPtr g, const std::vector<int>& gens);
Subgroup trivial_subgroup(GroupPtr g);
Subgroup full_subgroup(GroupPtr g);
Subgroup conjugate_subgroup(const Subgroup& h, int g);

/// All subgroups, each exactly once, sorted by order then lexicographic
/// member list.
std::vector<Subgroup> enumerate_subgroups(GroupPtr g);
/// Subgroups of the subgroup `h` of its parent, as parent-member lists.
std::vector<Subgroup> enumerate_subgroups_of(const Subgroup& h);

// Builders.
GroupPtr trivial_group();
GroupPtr cyclic_group(int n);                    // elements e, g, g^2, ...
GroupPtr symmetric_group(int n);                 // element i = perm of rank i
GroupPtr group_product(GroupPtr a, GroupPtr b);  // index = ia*|B| + ib

/// G x Sigma_n^op: pairs (g, sigma) with index g*n! + rank(sigma) and
/// multiplication (g,s)*(h,t) = (gh, t o s); the reversed permutation leg
/// makes the left action (g,s).(c_i) = (g c_{s(i)}) on signatures associative.
GroupPtr product_with_sym_op(GroupPtr g, int n);

struct GSigmaElem {
  int g;
  Perm sigma;
};
GSigmaElem gsigma_decode(const FiniteGroup& prod, int gsize, int n, int idx);
int gsigma_encode(int gsize, int n, int g, const Perm& sigma);

/// Sigma_n wr G as pairs (sigma, (g_1..g_n)) acting on tuples;
/// (s,(g)) * (t,(h)) = (s o t, (g_{t(i)} h_i)_i).
GroupPtr wreath_sym_group(GroupPtr g, int n);
struct WreathElem {
  Perm sigma;
  std::vector<int> gs;
};
WreathElem wreath_decode(int gsize, int n, long long idx);
long long wreath_encode(int gsize, int n, const WreathElem& w);

}  // namespace eqop

#endif

#include <algorithm>
#include <set>

#include "doctest.h"
#include "eqop/fingroup.hpp"
#include "eqop/gsfamily.hpp"

using namespace eqop;

namespace {

// Independent oracle for tiny groups: check every subset of the element set
// for closure. Exponential, so only usable for |G| <= ~12.
std::vector<std::vector<int>> all_subgroups_by_subsets(const FiniteGroup& g) {
  int n = g.size();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & (1u << g.id()))) continue;
    std::vector<int> m;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) m.push_back(i);
    bool closed = true;
    for (int a : m) {
      if (!(mask & (1u << g.inv(a)))) closed = false;
      for (int b : m)
        if (!(mask & (1u << g.mul(a, b)))) closed = false;
    }
    if (closed) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace

TEST_CASE("permutation basics") {
  Perm p{1, 2, 0};
  CHECK(is_permutation(p));
  CHECK(perm_compose(p, perm_inverse(p)) == perm_identity(3));
  for (long long r = 0; r < factorial(4); ++r)
    CHECK(perm_rank(perm_unrank(4, r)) == r);
}

TEST_CASE("group constructors satisfy axioms") {
  CHECK(trivial_group()->size() == 1);
  CHECK(cyclic_group(4)->element_order(1) == 4);
  CHECK(symmetric_group(3)->size() == 6);
  CHECK_FALSE(symmetric_group(3)->is_abelian());
  auto prod = group_product(cyclic_group(2), cyclic_group(2));
  CHECK(prod->size() == 4);
  CHECK(prod->is_abelian());
}

TEST_CASE("subgroup enumeration matches subset oracle") {
  auto s3 = symmetric_group(3);
  auto subs = enumerate_subgroups(s3);
  auto oracle = all_subgroups_by_subsets(*s3);
  REQUIRE(subs.size() == oracle.size());
  for (size_t i = 0; i < subs.size(); ++i) CHECK(subs[i].members == oracle[i]);

  // S_3 has 6 subgroups of orders 1,2,2,2,3,6
  std::vector<int> orders;
  for (auto& s : subs) orders.push_back(s.order());
  CHECK(orders == std::vector<int>{1, 2, 2, 2, 3, 6});

  CHECK(enumerate_subgroups(trivial_group()).size() == 1);
  CHECK(enumerate_subgroups(cyclic_group(2)).size() == 2);
}

TEST_CASE("product_with_sym_op is the signature-action group") {
  // act((g,s), C)_i = g*c_{s(i)} must be a left action for the op product
  auto g = cyclic_group(2);
  int n = 3;
  auto p = product_with_sym_op(g, n);
  // colors: a 2-element set swapped by g, plus a fixed one; signature entries
  auto act_color = [&](int gi, int c) {
    return (c < 2 && gi == 1) ? 1 - c : c;
  };
  std::vector<int> sig{0, 2, 1};  // some arity-3 source list
  auto act = [&](int e, std::vector<int> s) {
    auto el = gsigma_decode(*p, g->size(), n, e);
    std::vector<int> r(s.size());
    for (size_t i = 0; i < s.size(); ++i) r[i] = act_color(el.g, s[el.sigma[i]]);
    return r;
  };
  for (int a = 0; a < p->size(); ++a)
    for (int b = 0; b < p->size(); ++b)
      CHECK(act(p->mul(a, b), sig) == act(a, act(b, sig)));
}

TEST_CASE("compose_slot_perm agrees with splicing signatures") {
  // g*(C o_i D)*tau == C' o_{i'} D' with C' = g*C*sigma, D' = g*D*rho
  auto splice = [](const std::vector<int>& c, int i, const std::vector<int>& d) {
    std::vector<int> r(c.begin(), c.begin() + i);
    r.insert(r.end(), d.begin(), d.end());
    r.insert(r.end(), c.begin() + i + 1, c.end());
    return r;
  };
  auto permuted = [](const std::vector<int>& c, const Perm& s) {
    std::vector<int> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = c[s[i]];
    return r;
  };
  std::vector<int> C{5, 6, 7};
  std::vector<int> D{8, 9};
  for (long long sr = 0; sr < factorial(3); ++sr)
    for (long long rr = 0; rr < factorial(2); ++rr)
      for (int slot = 0; slot < 3; ++slot) {
        Perm sigma = perm_unrank(3, sr), rho = perm_unrank(2, rr);
        Perm tau = compose_slot_perm(sigma, slot, rho);
        int slot2 = perm_inverse(sigma)[slot];
        auto lhs = permuted(splice(C, slot, D), tau);
        auto rhs = splice(permuted(C, sigma), slot2, permuted(D, rho));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("graph subgroups match brute-force lattice filter") {
  auto z2 = cyclic_group(2);
  auto direct2 = enumerate_graph_subgroups(z2, 2);
  auto brute2 = enumerate_graph_subgroups_bruteforce(z2, 2);
  CHECK(direct2.size() == 3);
  REQUIRE(direct2.size() == brute2.size());
  for (size_t i = 0; i < direct2.size(); ++i)
    CHECK(direct2[i].members == brute2[i].members);

  auto direct3 = enumerate_graph_subgroups(z2, 3);
  auto brute3 = enumerate_graph_subgroups_bruteforce(z2, 3);
  CHECK(direct3.size() == 5);
  REQUIRE(direct3.size() == brute3.size());
  for (size_t i = 0; i < direct3.size(); ++i)
    CHECK(direct3[i].members == brute3[i].members);

  for (int n = 0; n <= 3; ++n)
    CHECK(enumerate_graph_subgroups(trivial_group(), n).size() == 1);
}

TEST_CASE("family validation") {
  auto z2 = cyclic_group(2);
  auto all = all_subgroups_family(z2, 2);
  CHECK_FALSE(validate_family(all).has_value());

  auto graph = graph_subgroup_family(z2, 3);
  CHECK_FALSE(validate_family(graph).has_value());

  // raw data missing the trivial subgroup fails with a subgroup witness
  auto amb = graph.ambient(1);
  std::vector<std::vector<Subgroup>> raw(2);
  raw[1] = {full_subgroup(amb)};
  auto w = validate_family(z2, raw);
  REQUIRE(w.has_value());
  CHECK(w->arity == 1);
  REQUIRE(w->missing.has_value());
  CHECK(w->missing->order() < w->member.order());
}

TEST_CASE("pullback families") {
  auto z2 = cyclic_group(2);
  auto graph = graph_subgroup_family(z2, 2);
  // identity pullback
  auto idpull = pullback_family(z2, {0, 1}, graph);
  for (int n = 0; n <= 2; ++n) {
    REQUIRE(idpull.at(n).size() == graph.at(n).size());
    for (size_t i = 0; i < idpull.at(n).size(); ++i)
      CHECK(idpull.at(n)[i].members == graph.at(n)[i].members);
  }
  // trivial -> Z2 against the graph family: a subgroup H <= {e} x Sigma_n^op
  // has (phi x id)-image H itself, which meets Sigma_n^op fully, so only the
  // trivial subgroup survives per arity.
  auto pull = pullback_family(trivial_group(), {0}, graph);
  for (int n = 0; n <= 2; ++n) CHECK(pull.at(n).size() == 1);
  // ...while against the all-subgroups family everything pulls back.
  auto zall = all_subgroups_family(z2, 2);
  auto pull_all = pullback_family(trivial_group(), {0}, zall);
  for (int n = 0; n <= 2; ++n)
    CHECK(pull_all.at(n).size() ==
          enumerate_subgroups(pull_all.ambient(n)).size());
  // Z2 -> trivial with the all-family upstairs: everything pulls back
  auto tall = all_subgroups_family(trivial_group(), 2);
  auto pull2 = pullback_family(z2, {0, 0}, tall);
  for (int n = 0; n <= 2; ++n)
    CHECK(pull2.at(n).size() == enumerate_subgroups(pull2.ambient(n)).size());
  CHECK_THROWS(pullback_family(cyclic_group(4), {0, 1, 1, 1},
                               graph_subgroup_family(z2, 1)));
}

TEST_CASE("meet of subgroup collections") {
  auto z2 = cyclic_group(2);
  // all x all = all subgroups of the product
  auto allpred = [](const Subgroup&) { return true; };
  auto meet_all = meet_subgroup_collections(z2, z2, allpred, allpred);
  CHECK(meet_all.size() == enumerate_subgroups(group_product(z2, z2)).size());
  // trivial-only x all = subgroups with trivial first projection
  auto trivpred = [&](const Subgroup& h) { return h.order() == 1; };
  auto meet_tr = meet_subgroup_collections(z2, z2, trivpred, allpred);
  for (auto& k : meet_tr)
    CHECK(project_first(k, z2, z2).order() == 1);
  CHECK(meet_tr.size() == 2);  // {e}x{e} and {e}xZ2
  // unit law: meet with the trivial family on the trivial group
  auto triv = trivial_group();
  auto meet_unit = meet_subgroup_collections(
      z2, triv, allpred, [](const Subgroup&) { return true; });
  CHECK(meet_unit.size() == enumerate_subgroups(z2).size());
}

TEST_CASE("wreath group structure") {
  auto z2 = cyclic_group(2);
  auto w2 = wreath_sym_group(z2, 2);
  CHECK(w2->size() == 8);
  auto w1 = wreath_sym_group(z2, 1);
  CHECK(w1->size() == 2);
  // wreath multiplication sanity via the defining action on pairs
  // (sigma,(g)) . (x_1,x_2) with x_i in Z2-set {0,1}: result_{sigma(i)} = g-part
  auto act = [&](long long e, std::vector<int> x) {
    auto we = wreath_decode(2, 2, e);
    std::vector<int> r(2);
    for (int i = 0; i < 2; ++i) r[we.sigma[i]] = (x[i] + we.gs[i]) % 2;
    return r;
  };
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1) {
          std::vector<int> x{x0, x1};
          CHECK(act(w2->mul(a, b), x) == act(a, act(b, x)));
        }
}

#include <set>

#include "doctest.h"
#include "sublab/classes.hpp"
#include "sublab/corpus.hpp"
#include "sublab/errors.hpp"
#include "sublab/lattice.hpp"
#include "sublab/subnormal.hpp"

using namespace sublab;

TEST_CASE("builders") {
  CHECK(build(GroupRecipe::holomorph_cyclic(17)).order() == 272);
  auto G39 = build(GroupRecipe::semidirect_cyclic(13, 3));
  CHECK(G39.order() == 39);
  CHECK(!is_abelian(G39));
  auto A5 = build(GroupRecipe::alternating(5));
  CHECK(A5.order() == 60);
  CHECK(lattice_of(A5)->minimal_normal_subgroups().size() == 1);  // simple
  auto D4 = build(GroupRecipe::dihedral(4));
  CHECK(D4.order() == 8);
  CHECK(D4.exponent() == 4);
  CHECK(build(GroupRecipe::quaternion8()).order() == 8);
  CHECK(build(GroupRecipe::symmetric(4)).order() == 24);
  CHECK(build(GroupRecipe::cyclic(1)).order() == 1);
  CHECK_THROWS_AS(build(GroupRecipe::semidirect_cyclic(13, 5)), ArgumentError);
}

TEST_CASE("build is deterministic") {
  auto a = build(GroupRecipe::holomorph_cyclic(13));
  auto b = build(GroupRecipe::holomorph_cyclic(13));
  CHECK(a.generators().size() == b.generators().size());
  for (size_t i = 0; i < a.generators().size(); ++i) {
    CHECK(a.generators()[i] == b.generators()[i]);
  }
}

TEST_CASE("semidirect structure") {
  for (auto [p, d] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {13, 3}, {7, 3}, {5, 4}, {17, 16}}) {
    auto G = build(GroupRecipe::semidirect_cyclic(p, d));
    CHECK(G.order() == p * d);
    auto N = o_p_direct(G, p);
    CHECK(N.order() == p);
    auto [Q, hom] = quotient(G, N);
    (void)hom;
    CHECK(Q.order() == d);
    CHECK(Q.exponent() == d);  // cyclic quotient
  }
}

TEST_CASE("group file parsing") {
  CHECK(parse_group_file("degree 3\ngen (1 2 3)\ngen (1 2)\n").order() == 6);
  CHECK(parse_group_file("degree 4\ngen (1 2)(3 4)\ngen (1 3)(2 4)\n")
            .order() == 4);
  CHECK(parse_group_file("# comment\ndegree 2\ngen ()\n").order() == 1);
  CHECK_THROWS_AS(parse_group_file("degree 3\n"), FormatError);
  CHECK_THROWS_AS(parse_group_file("degree 3\ngen (1 5)\n"), FormatError);
  CHECK_THROWS_AS(parse_group_file("gen (1 2)\n"), FormatError);
}

TEST_CASE("serialize round-trip") {
  for (const char* name : {"S4", "Q8", "hol17", "order39", "D6"}) {
    auto G = builtin_group(name);
    auto back = parse_group_file(serialize_group_file(G));
    CHECK(back.order() == G.order());
    CHECK(back.degree() == G.degree());
  }
}

TEST_CASE("harvest") {
  CHECK(harvest(builtin_group("S4"), 2, "S4").entries.size() == 29);
  CHECK(harvest(builtin_group("S3"), 1, "S3").entries.size() == 6);
  auto h5 = harvest(builtin_group("S5"), 6, "S5");
  std::set<std::uint64_t> orders;
  for (const auto& e : h5.entries) orders.insert(e.group.order());
  CHECK(orders.count(60) == 1);
  CHECK(orders.count(24) == 1);
  CHECK(orders.count(20) == 1);
}

TEST_CASE("standard corpus") {
  const auto& corpus = standard_corpus();
  std::set<std::string> names;
  std::set<std::uint64_t> orders;
  for (const auto& e : corpus.entries) {
    CHECK(names.insert(e.name).second);  // no duplicate names
    CHECK(e.group.order() <= LATTICE_ORDER_CAP);
    orders.insert(e.group.order());
  }
  CHECK(orders.count(272) == 1);
  CHECK(orders.count(39) == 1);
}

TEST_CASE("corpus non-degeneracy") {
  const auto& corpus = standard_corpus();
  for (int t : {1, 2, 3}) {
    bool ht_in = false, ht_out = false;
    bool ut0_in = false, ut0_out = false;
    bool ut_in = false, ut_out = false;
    for (const auto& e : corpus.entries) {
      if (e.group.order() > 48) continue;  // enough small witnesses exist
      (in_class_Ht(e.group, t) ? ht_in : ht_out) = true;
      (in_ut0(e.group, t) ? ut0_in : ut0_out) = true;
      (in_u_k(e.group, t) ? ut_in : ut_out) = true;
    }
    CHECK(ht_in);
    CHECK(ht_out);
    CHECK(ut0_in);
    CHECK(ut0_out);
    CHECK(ut_in);
    CHECK(ut_out);
  }
}

TEST_CASE("builtin names resolve") {
  for (const auto& name : builtin_names()) {
    CHECK(builtin_group(name).order() >= 1);
  }
  CHECK_THROWS_AS(builtin_group("nope"), ArgumentError);
}

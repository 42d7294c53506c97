#include <set>

#include "doctest.h"
#include "sublab/corpus.hpp"
#include "sublab/errors.hpp"
#include "sublab/group.hpp"

using namespace sublab;

namespace {

PermGroup make(int degree, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> gens;
  for (const char* c : cycles) {
    gens.push_back(Permutation::from_cycles(c, degree));
  }
  return PermGroup(degree, gens);
}

// Independent order computation: plain closure under multiplication.
size_t closure_size(const PermGroup& G) {
  std::set<Permutation> seen(G.generators().begin(), G.generators().end());
  seen.insert(Permutation::identity(G.degree()));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Permutation> snapshot(seen.begin(), seen.end());
    for (const auto& a : snapshot) {
      for (const auto& g : G.generators()) {
        if (seen.insert(compose(a, g)).second) grew = true;
      }
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("schreier-sims orders") {
  CHECK(make(5, {"(1 2 3 4 5)", "(1 2)"}).order() == 120);
  auto F20 = make(5, {"(1 2 3 4 5)", "(2 3 5 4)"});
  CHECK(F20.order() == 20);
  CHECK(F20.order() == closure_size(F20));
  CHECK(builtin_group("hol17").order() == 272);
  CHECK(builtin_group("A5").order() == 60);
  CHECK(builtin_group("order39").order() == 39);
  CHECK(PermGroup::trivial(3).order() == 1);
}

TEST_CASE("membership") {
  auto S4 = builtin_group("S4");
  auto A4 = builtin_group("A4");
  CHECK(S4.contains(Permutation::from_cycles("(1 2 3)", 4)));
  CHECK(!A4.contains(Permutation::from_cycles("(1 2)", 4)));
  for (const auto& g : A4.elements()) CHECK(A4.contains(g));
}

TEST_CASE("element enumeration") {
  CHECK(builtin_group("S3").elements().size() == 6);
  auto Z6 = builtin_group("Z6");
  CHECK(Z6.elements().size() == 6);
  // Every element is a power of the single generator.
  auto g = Z6.generators().at(0);
  std::set<Permutation> powers;
  auto x = Permutation::identity(Z6.degree());
  for (int i = 0; i < 6; ++i) {
    powers.insert(x);
    x = compose(x, g);
  }
  for (const auto& e : Z6.elements()) CHECK(powers.count(e) == 1);
  CHECK(builtin_group("hol17").elements().size() == 272);

  // Deterministic order: sorted lexicographically on image arrays.
  auto elems = builtin_group("S4").elements();
  CHECK(std::is_sorted(elems.begin(), elems.end()));
}

TEST_CASE("exponent") {
  auto z4xz2 = build(GroupRecipe::direct_product(GroupRecipe::cyclic(4),
                                                 GroupRecipe::cyclic(2)));
  CHECK(z4xz2.exponent() == 4);
  CHECK(builtin_group("S3").exponent() == 6);
  CHECK(builtin_group("Q8").exponent() == 4);
}

TEST_CASE("conjugate subgroups") {
  auto S3 = builtin_group("S3");
  auto H = make(3, {"(1 2)"});
  auto K = conjugate(H, Permutation::from_cycles("(2 3)", 3), S3);
  CHECK(K.contains(Permutation::from_cycles("(1 3)", 3)));
  CHECK(K.order() == 2);

  auto S4 = builtin_group("S4");
  auto A4 = builtin_group("A4");
  CHECK(conjugate(H, Permutation::identity(3), S3).order() == H.order());
  for (const auto& g : S4.generators()) {
    auto C = conjugate(A4, g, S4);
    for (const auto& a : C.generators()) CHECK(A4.contains(a));
  }
  CHECK_THROWS_AS(conjugate(H, Permutation::from_cycles("(1 2 3)", 3),
                            make(3, {"(1 2)"})),
                  MembershipError);
}

TEST_CASE("quotient by coset action") {
  auto S4 = builtin_group("S4");
  auto A4 = builtin_group("A4");
  auto [Q2, hom2] = quotient(S4, A4);
  CHECK(Q2.order() == 2);
  CHECK(hom2.kernel().order() == 12);

  auto [Qt, homt] = quotient(S4, PermGroup::trivial(4));
  CHECK(Qt.order() == 24);
  (void)homt;

  auto hol17 = builtin_group("hol17");
  auto Z17 = make(hol17.degree(), {"(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17)"});
  auto [Q16, hom16] = quotient(hol17, Z17);
  CHECK(Q16.order() == 16);
  // Abelian: generator images commute.
  auto imgs = hom16.generator_images();
  for (const auto& a : imgs) {
    for (const auto& b : imgs) CHECK(compose(a, b) == compose(b, a));
  }

  // Homomorphism property on sampled pairs.
  auto sample = S4.generators();
  for (const auto& a : sample) {
    for (const auto& b : sample) {
      CHECK(hom2.apply(compose(a, b)) ==
            compose(hom2.apply(a), hom2.apply(b)));
    }
  }
  CHECK_THROWS_AS(quotient(S4, make(4, {"(1 2)"})), NormalityError);
}

TEST_CASE("quotient order multiplicativity") {
  auto S4 = builtin_group("S4");
  auto V4 = make(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  auto [Q, hom] = quotient(S4, V4);
  (void)hom;
  CHECK(Q.order() * V4.order() == S4.order());
}

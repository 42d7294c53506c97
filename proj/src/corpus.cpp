#include "sublab/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "sublab/errors.hpp"
#include "sublab/lattice.hpp"

namespace sublab {

namespace {

Permutation cycle_perm(int degree, const std::vector<int>& cycle) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  for (size_t i = 0; i < cycle.size(); ++i)
    img[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return Permutation(std::move(img));
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t primitive_root(std::uint64_t p) {
  std::vector<std::uint64_t> qs = prime_divisors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint64_t q : qs)
      if (pow_mod(g, (p - 1) / q, p) == 1) ok = false;
    if (ok) return g;
  }
  throw ArgumentError("no primitive root found");  // unreachable for prime p
}

PermGroup build_semidirect(std::uint64_t p, std::uint64_t d) {
  if (!is_prime(p))
    throw ArgumentError("semidirect_cyclic: p must be prime");
  if (d == 0 || (p - 1) % d != 0)
    throw ArgumentError("semidirect_cyclic: d must divide p-1");
  int deg = static_cast<int>(p);
  std::vector<int> shift(deg);
  for (int x = 0; x < deg; ++x) shift[x] = static_cast<int>((x + 1) % p);
  std::vector<Permutation> gens{Permutation(std::move(shift))};
  if (d > 1) {
    std::uint64_t a = pow_mod(primitive_root(p), (p - 1) / d, p);
    std::vector<int> mul(deg);
    for (int x = 0; x < deg; ++x)
      mul[x] = static_cast<int>(a * static_cast<std::uint64_t>(x) % p);
    gens.push_back(Permutation(std::move(mul)));
  }
  return PermGroup(deg, std::move(gens));
}

PermGroup build_direct_product(const PermGroup& A, const PermGroup& B) {
  int deg = A.degree() + B.degree();
  std::vector<Permutation> gens;
  for (const Permutation& g : A.generators()) {
    std::vector<int> img(deg);
    for (int i = 0; i < A.degree(); ++i) img[i] = g(i);
    for (int i = 0; i < B.degree(); ++i) img[A.degree() + i] = A.degree() + i;
    gens.push_back(Permutation(std::move(img)));
  }
  for (const Permutation& g : B.generators()) {
    std::vector<int> img(deg);
    for (int i = 0; i < A.degree(); ++i) img[i] = i;
    for (int i = 0; i < B.degree(); ++i) img[A.degree() + i] = A.degree() + g(i);
    gens.push_back(Permutation(std::move(img)));
  }
  return PermGroup(deg, std::move(gens));
}

}  // namespace

PermGroup build(const GroupRecipe& r) {
  using B = GroupRecipe::Builder;
  switch (r.builder) {
    case B::Cyclic: {
      if (r.n < 1) throw ArgumentError("cyclic: n must be positive");
      if (r.n == 1) return PermGroup::trivial(1);
      std::vector<int> cyc(r.n);
      for (size_t i = 0; i < r.n; ++i) cyc[i] = static_cast<int>(i);
      return PermGroup(static_cast<int>(r.n),
                       {cycle_perm(static_cast<int>(r.n), cyc)});
    }
    case B::Dihedral: {
      if (r.n < 3) throw ArgumentError("dihedral: n must be at least 3");
      int n = static_cast<int>(r.n);
      std::vector<int> cyc(n);
      for (int i = 0; i < n; ++i) cyc[i] = i;
      std::vector<int> refl(n);
      for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
      return PermGroup(n, {cycle_perm(n, cyc), Permutation(std::move(refl))});
    }
    case B::Symmetric: {
      if (r.n < 1) throw ArgumentError("symmetric: n must be positive");
      if (r.n == 1) return PermGroup::trivial(1);
      int n = static_cast<int>(r.n);
      std::vector<int> cyc(n);
      for (int i = 0; i < n; ++i) cyc[i] = i;
      return PermGroup(n, {cycle_perm(n, cyc), cycle_perm(n, {0, 1})});
    }
    case B::Alternating: {
      if (r.n < 3) throw ArgumentError("alternating: n must be at least 3");
      int n = static_cast<int>(r.n);
      if (n == 3) return PermGroup(3, {cycle_perm(3, {0, 1, 2})});
      std::vector<int> cyc;
      if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) cyc.push_back(i);
      } else {
        for (int i = 1; i < n; ++i) cyc.push_back(i);
      }
      return PermGroup(n, {cycle_perm(n, {0, 1, 2}), cycle_perm(n, cyc)});
    }
    case B::Quaternion8: {
      // Regular representation on {1,-1,i,-i,j,-j,k,-k}.
      return PermGroup(8, {Permutation({2, 3, 1, 0, 7, 6, 4, 5}),
                           Permutation({4, 5, 6, 7, 1, 0, 3, 2})});
    }
    case B::DirectProduct:
      return build_direct_product(build(*r.left), build(*r.right));
    case B::SemidirectCyclic:
      return build_semidirect(r.n, r.d);
    case B::HolomorphCyclic:
      if (!is_prime(r.n))
        throw ArgumentError("holomorph_cyclic: p must be prime");
      return build_semidirect(r.n, r.n - 1);
    case B::FromFile:
      return load_group_file(r.path);
  }
  throw ArgumentError("unknown recipe");
}

PermGroup parse_group_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int degree = -1;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "degree") {
      if (degree >= 0)
        throw FormatError("line " + std::to_string(lineno) +
                          ": duplicate degree line");
      if (!(ls >> degree) || degree < 1)
        throw FormatError("line " + std::to_string(lineno) +
                          ": malformed degree");
    } else if (word == "gen") {
      if (degree < 0)
        throw FormatError("line " + std::to_string(lineno) +
                          ": gen before degree");
      std::string rest;
      std::getline(ls, rest);
      try {
        gens.push_back(Permutation::from_cycles(rest, degree));
      } catch (const FormatError& e) {
        throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
      }
    } else {
      throw FormatError("line " + std::to_string(lineno) +
                        ": unknown directive '" + word + "'");
    }
  }
  if (degree < 0) throw FormatError("missing degree line");
  if (gens.empty()) throw FormatError("empty generator list");
  return PermGroup(degree, std::move(gens));
}

std::string serialize_group_file(const PermGroup& G) {
  std::ostringstream out;
  out << "degree " << G.degree() << "\n";
  if (G.generators().empty()) {
    out << "gen ()\n";
  } else {
    for (const Permutation& g : G.generators())
      out << "gen " << g.cycles() << "\n";
  }
  return out.str();
}

PermGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open group file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group_file(buf.str());
}

Corpus harvest(const PermGroup& G, std::uint64_t min_order,
               const std::string& name_prefix) {
  auto lat = lattice_of(G);
  Corpus out;
  for (int i = 0; i < lat->size(); ++i) {
    if (lat->node(i).order < min_order) continue;
    out.entries.push_back({name_prefix + "_sub" + std::to_string(i),
                           lat->subgroup_group(i),
                           "subgroup " + std::to_string(i) + " of " +
                               name_prefix});
  }
  return out;
}

namespace {

Corpus make_standard_corpus() {
  Corpus c;
  auto add = [&](std::string name, PermGroup g, std::string prov) {
    if (g.order() > LATTICE_ORDER_CAP)
      throw CapacityError("corpus entry above the lattice cap: " + name);
    c.entries.push_back({std::move(name), std::move(g), std::move(prov)});
  };
  using R = GroupRecipe;

  Corpus s4 = harvest(build(R::symmetric(4)), 1, "S4");
  c.entries.insert(c.entries.end(), s4.entries.begin(), s4.entries.end());
  Corpus s5 = harvest(build(R::symmetric(5)), 4, "S5");
  c.entries.insert(c.entries.end(), s5.entries.begin(), s5.entries.end());

  add("A5", build(R::alternating(5)), "alternating group of degree 5");
  PermGroup a6 = build(R::alternating(6));
  add("A6_syl2", sylow_subgroup_direct(a6, 2), "Sylow 2-subgroup of A6");
  add("A6_syl3", sylow_subgroup_direct(a6, 3), "Sylow 3-subgroup of A6");
  add("A6_syl5", sylow_subgroup_direct(a6, 5), "Sylow 5-subgroup of A6");
  add("Q8", build(R::quaternion8()), "quaternion group");
  for (std::uint64_t n = 4; n <= 10; ++n)
    add("D" + std::to_string(n), build(R::dihedral(n)),
        "dihedral group of order " + std::to_string(2 * n));
  for (std::uint64_t n = 1; n <= 24; ++n)
    add("Z" + std::to_string(n), build(R::cyclic(n)),
        "cyclic group of order " + std::to_string(n));
  add("hol5", build(R::holomorph_cyclic(5)), "holomorph of Z5, order 20");
  add("hol13", build(R::holomorph_cyclic(13)), "holomorph of Z13, order 156");
  add("hol17", build(R::holomorph_cyclic(17)), "holomorph of Z17, order 272");
  add("sd13_3", build(R::semidirect_cyclic(13, 3)),
      "nonabelian group of order 39");
  add("sd7_3", build(R::semidirect_cyclic(7, 3)),
      "nonabelian group of order 21");

  auto prod = [&](std::string name, R a, R b, std::string prov) {
    add(std::move(name), build(R::direct_product(std::move(a), std::move(b))),
        std::move(prov));
  };
  prod("Z2xZ2xZ3", R::direct_product(R::cyclic(2), R::cyclic(2)), R::cyclic(3),
       "direct product, order 12");
  prod("S3xS3", R::symmetric(3), R::symmetric(3), "direct product, order 36");
  prod("A4xZ2", R::alternating(4), R::cyclic(2), "direct product, order 24");
  prod("D4xZ2", R::dihedral(4), R::cyclic(2), "direct product, order 16");
  prod("Q8xZ3", R::quaternion8(), R::cyclic(3), "direct product, order 24");
  prod("Z4xZ4", R::cyclic(4), R::cyclic(4), "direct product, order 16");
  prod("Z8xZ2", R::cyclic(8), R::cyclic(2), "direct product, order 16");
  prod("Z3xZ3", R::cyclic(3), R::cyclic(3), "direct product, order 9");
  prod("D5xZ4", R::dihedral(5), R::cyclic(4), "direct product, order 40");
  prod("S4xZ2", R::symmetric(4), R::cyclic(2), "direct product, order 48");
  prod("hol5xZ2", R::holomorph_cyclic(5), R::cyclic(2),
       "direct product, order 40");
  prod("sd7_3xZ4", R::semidirect_cyclic(7, 3), R::cyclic(4),
       "direct product, order 84");
  prod("D6xD4", R::dihedral(6), R::dihedral(4), "direct product, order 96");

  std::map<std::string, int> names;
  for (const CorpusEntry& e : c.entries)
    if (++names[e.name] > 1)
      throw ArgumentError("duplicate corpus name: " + e.name);
  return c;
}

}  // namespace

const Corpus& standard_corpus() {
  static Corpus c = make_standard_corpus();
  return c;
}

PermGroup builtin_group(const std::string& name) {
  using R = GroupRecipe;
  if (name == "A5") return build(R::alternating(5));
  if (name == "A4") return build(R::alternating(4));
  if (name == "S3") return build(R::symmetric(3));
  if (name == "S4") return build(R::symmetric(4));
  if (name == "S5") return build(R::symmetric(5));
  if (name == "Q8") return build(R::quaternion8());
  if (name == "hol5") return build(R::holomorph_cyclic(5));
  if (name == "hol13") return build(R::holomorph_cyclic(13));
  if (name == "hol17") return build(R::holomorph_cyclic(17));
  if (name == "order39") return build(R::semidirect_cyclic(13, 3));
  if (name.size() > 1 && name[0] == 'Z') {
    std::uint64_t n = std::strtoull(name.c_str() + 1, nullptr, 10);
    if (n >= 1) return build(R::cyclic(n));
  }
  if (name.size() > 1 && name[0] == 'D') {
    std::uint64_t n = std::strtoull(name.c_str() + 1, nullptr, 10);
    if (n >= 3) return build(R::dihedral(n));
  }
  throw ArgumentError("unknown builtin group: " + name);
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names = {"A4",    "A5",    "S3",    "S4",
                                    "S5",    "Q8",    "hol5",  "hol13",
                                    "hol17", "order39"};
  for (int n = 1; n <= 24; ++n) names.push_back("Z" + std::to_string(n));
  for (int n = 3; n <= 12; ++n) names.push_back("D" + std::to_string(n));
  return names;
}

}  // namespace sublab

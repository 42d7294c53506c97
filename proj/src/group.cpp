#include "sublab/group.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "sublab/errors.hpp"

namespace sublab {

namespace {

struct Level {
  int base_point = -1;
  std::vector<Permutation> gens;  // strong generators fixing earlier base points
  // transversal[x] = deterministic coset representative u with u(base_point)=x
  std::vector<std::optional<Permutation>> transversal;
  std::vector<int> orbit;  // BFS discovery order
};

}  // namespace

struct PermGroup::Impl {
  int degree = 0;
  std::vector<Permutation> gens;
  std::vector<int> base;
  std::vector<Level> levels;
  std::uint64_t order = 1;
  mutable std::shared_ptr<const std::vector<Permutation>> elements;
  mutable std::uint64_t exponent = 0;

  void rebuild_orbits() {
    for (size_t i = 0; i < levels.size(); ++i) {
      Level& lv = levels[i];
      lv.transversal.assign(degree, std::nullopt);
      lv.orbit.clear();
      lv.transversal[lv.base_point] = Permutation::identity(degree);
      lv.orbit.push_back(lv.base_point);
      for (size_t q = 0; q < lv.orbit.size(); ++q) {
        int x = lv.orbit[q];
        for (const Permutation& s : lv.gens) {
          int y = s(x);
          if (!lv.transversal[y]) {
            lv.transversal[y] = compose(*lv.transversal[x], s);
            lv.orbit.push_back(y);
          }
        }
      }
    }
  }

  // Sifts g through levels >= from; returns the residue.
  Permutation sift(Permutation g, size_t from) const {
    for (size_t i = from; i < levels.size(); ++i) {
      const Level& lv = levels[i];
      int x = g(lv.base_point);
      if (!lv.transversal[x]) return g;
      g = compose(g, lv.transversal[x]->inverse());
    }
    return g;
  }

  // Appends a new strong generator, extending the base when g fixes it all.
  void add_strong_generator(const Permutation& g) {
    int moved = -1;
    for (int i = 0; i < degree; ++i) {
      if (g(i) != i) {
        moved = i;
        break;
      }
    }
    bool fixes_base = true;
    for (int b : base)
      if (g(b) != b) fixes_base = false;
    if (fixes_base) {
      base.push_back(moved);
      levels.emplace_back();
      levels.back().base_point = moved;
    }
    for (size_t i = 0; i < levels.size(); ++i) {
      bool fixes_prefix = true;
      for (size_t j = 0; j < i; ++j)
        if (g(levels[j].base_point) != levels[j].base_point)
          fixes_prefix = false;
      if (fixes_prefix) levels[i].gens.push_back(g);
    }
  }

  void schreier_sims() {
    for (const Permutation& g : gens)
      if (!g.is_identity()) add_strong_generator(g);
    rebuild_orbits();
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < levels.size() && !changed; ++i) {
        const Level& lv = levels[i];
        for (size_t oi = 0; oi < lv.orbit.size() && !changed; ++oi) {
          int x = lv.orbit[oi];
          const Permutation& ux = *lv.transversal[x];
          for (const Permutation& s : lv.gens) {
            Permutation h = compose(ux, s);
            int y = s(x);
            h = compose(h, lv.transversal[y]->inverse());
            Permutation res = sift(std::move(h), i + 1);
            if (!res.is_identity()) {
              add_strong_generator(res);
              rebuild_orbits();
              changed = true;
              break;
            }
          }
        }
      }
    }
    order = 1;
    for (const Level& lv : levels) order *= lv.orbit.size();
  }

};

PermGroup::PermGroup(int degree, std::vector<Permutation> gens)
    : impl_(std::make_shared<Impl>()) {
  if (degree <= 0) throw FormatError("group degree must be positive");
  for (const Permutation& g : gens)
    if (g.degree() != degree)
      throw FormatError("generator degree does not match group degree");
  impl_->degree = degree;
  impl_->gens = std::move(gens);
  impl_->schreier_sims();
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

int PermGroup::degree() const { return impl_->degree; }

const std::vector<Permutation>& PermGroup::generators() const {
  return impl_->gens;
}

std::uint64_t PermGroup::order() const { return impl_->order; }

const std::vector<int>& PermGroup::base() const { return impl_->base; }

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree())
    throw DegreeError("contains: degree mismatch");
  return impl_->sift(p, 0).is_identity();
}

const std::vector<Permutation>& PermGroup::elements() const {
  if (impl_->elements) return *impl_->elements;
  if (order() > ELEMENT_ENUM_CAP)
    throw CapacityError("group order " + std::to_string(order()) +
                        " exceeds ELEMENT_ENUM_CAP");
  std::vector<Permutation> out;
  out.reserve(order());
  out.push_back(Permutation::identity(degree()));
  // g = u_{k-1} * ... * u_1 * u_0 in left-to-right composition.
  for (size_t i = impl_->levels.size(); i-- > 0;) {
    const Level& lv = impl_->levels[i];
    std::vector<Permutation> next;
    next.reserve(out.size() * lv.orbit.size());
    for (const Permutation& head : out)
      for (int x : lv.orbit) next.push_back(compose(head, *lv.transversal[x]));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  impl_->elements =
      std::make_shared<const std::vector<Permutation>>(std::move(out));
  return *impl_->elements;
}

std::uint64_t PermGroup::exponent() const {
  if (impl_->exponent) return impl_->exponent;
  std::uint64_t e = 1;
  for (const Permutation& g : elements()) e = std::lcm(e, g.order());
  impl_->exponent = e;
  return e;
}

PermGroup conjugate(const PermGroup& H, const Permutation& g,
                    const PermGroup& inside) {
  if (!inside.contains(g))
    throw MembershipError("conjugating element lies outside the ambient group");
  std::vector<Permutation> gens;
  gens.reserve(H.generators().size());
  for (const Permutation& h : H.generators())
    gens.push_back(conjugate_perm(h, g));
  return PermGroup(H.degree(), std::move(gens));
}

bool is_normal_in(const PermGroup& N, const PermGroup& G) {
  for (const Permutation& n : N.generators())
    if (!G.contains(n)) return false;
  for (const Permutation& g : G.generators())
    for (const Permutation& n : N.generators())
      if (!N.contains(conjugate_perm(n, g))) return false;
  return true;
}

Homomorphism::Homomorphism(PermGroup source, PermGroup target, PermGroup kernel,
                           std::vector<Permutation> coset_reps)
    : source_(std::move(source)),
      target_(std::move(target)),
      kernel_(std::move(kernel)),
      coset_reps_(std::move(coset_reps)) {}

Permutation Homomorphism::apply(const Permutation& g) const {
  if (!source_.contains(g))
    throw MembershipError("element lies outside the homomorphism source");
  std::vector<int> img(coset_reps_.size());
  for (size_t i = 0; i < coset_reps_.size(); ++i) {
    Permutation moved = compose(coset_reps_[i], g);
    int j = -1;
    for (size_t k = 0; k < coset_reps_.size(); ++k) {
      if (kernel_.contains(compose(moved, coset_reps_[k].inverse()))) {
        j = static_cast<int>(k);
        break;
      }
    }
    img[i] = j;
  }
  return Permutation(std::move(img));
}

Permutation Homomorphism::preimage(const Permutation& q) const {
  if (!target_.contains(q))
    throw MembershipError("element lies outside the homomorphism target");
  // apply() is constant on cosets, so the representative of the coset that
  // the identity coset is sent to is a valid preimage.
  return coset_reps_[q(0)];
}

std::vector<Permutation> Homomorphism::generator_images() const {
  std::vector<Permutation> out;
  out.reserve(source_.generators().size());
  for (const Permutation& g : source_.generators()) out.push_back(apply(g));
  return out;
}

std::pair<PermGroup, Homomorphism> quotient(const PermGroup& G,
                                            const PermGroup& N) {
  if (!is_normal_in(N, G))
    throw NormalityError("quotient: subgroup is not normal in the group");
  std::uint64_t index = G.order() / N.order();
  if (index > QUOTIENT_DEGREE_CAP)
    throw CapacityError("quotient index " + std::to_string(index) +
                        " exceeds QUOTIENT_DEGREE_CAP");
  // Right-coset enumeration, BFS from the identity coset.
  std::vector<Permutation> reps;
  reps.push_back(Permutation::identity(G.degree()));
  auto coset_of = [&](const Permutation& g) -> int {
    for (size_t k = 0; k < reps.size(); ++k)
      if (N.contains(compose(g, reps[k].inverse()))) return static_cast<int>(k);
    return -1;
  };
  for (size_t q = 0; q < reps.size(); ++q) {
    for (const Permutation& g : G.generators()) {
      Permutation moved = compose(reps[q], g);
      if (coset_of(moved) < 0) reps.push_back(std::move(moved));
    }
  }
  if (reps.size() != index)
    throw NormalityError("quotient: coset enumeration mismatch");

  int qdeg = static_cast<int>(index);
  std::vector<Permutation> qgens;
  for (const Permutation& g : G.generators()) {
    std::vector<int> img(index);
    for (size_t i = 0; i < reps.size(); ++i)
      img[i] = coset_of(compose(reps[i], g));
    qgens.push_back(Permutation(std::move(img)));
  }
  PermGroup Q(qdeg, std::move(qgens));
  Homomorphism hom(G, Q, N, std::move(reps));
  return {std::move(Q), std::move(hom)};
}

}  // namespace sublab

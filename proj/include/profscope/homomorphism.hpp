#pragma once

#include <string>
#include <utility>
#include <vector>

#include "profscope/group.hpp"
#include "profscope/subgroup.hpp"

namespace profscope {

/// A group homomorphism between two FiniteGroups, stored as an image table.
class Homomorphism {
 public:
  Homomorphism() = default;

  /// Checks the homomorphism law exhaustively.
  static Homomorphism make(FiniteGroup source, FiniteGroup target, std::vector<Element> map) {
    Homomorphism f = trusted(std::move(source), std::move(target), std::move(map));
    if (auto err = f.validation_error(); !err.empty()) throw InvalidArgument(err);
    return f;
  }

  static Homomorphism trusted(FiniteGroup source, FiniteGroup target, std::vector<Element> map) {
    Homomorphism f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.map_ = std::move(map);
    ElementSet img(f.target_.order());
    for (Element x : f.map_)
      if (x < f.target_.order()) img.set(x);
    f.image_size_ = img.count();
    return f;
  }

  static Homomorphism identity(const FiniteGroup& g) {
    std::vector<Element> m(g.order());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<Element>(i);
    return trusted(g, g, std::move(m));
  }

  const FiniteGroup& source() const noexcept { return source_; }
  const FiniteGroup& target() const noexcept { return target_; }
  std::span<const Element> map() const noexcept { return map_; }
  Element operator()(Element x) const noexcept { return map_[x]; }
  std::size_t image_size() const noexcept { return image_size_; }
  bool is_surjective() const noexcept { return image_size_ == target_.order(); }

  std::string validation_error() const {
    if (map_.size() != source_.order()) return "map length differs from source order";
    for (Element x : map_)
      if (x >= target_.order()) return "map entry out of range";
    if (map_[0] != 0) return "identity not sent to identity";
    const std::size_t n = source_.order();
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (map_[source_.mul(a, b)] != target_.mul(map_[a], map_[b]))
          return "homomorphism law fails at (" + std::to_string(a) + "," + std::to_string(b) + ")";
    return {};
  }

  /// Kernel as a subgroup of the source.
  Subgroup kernel() const {
    ElementSet k(source_.order());
    for (std::size_t i = 0; i < map_.size(); ++i)
      if (map_[i] == 0) k.set(static_cast<Element>(i));
    return Subgroup(source_, std::move(k));
  }

 private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Element> map_{0};
  std::size_t image_size_ = 1;
};

/// g ∘ f (apply f first).
inline Homomorphism hom_compose(const Homomorphism& g, const Homomorphism& f) {
  if (!f.target().same_as(g.source())) throw GroupMismatch("hom_compose: target of f is not the source of g");
  std::vector<Element> m(f.source().order());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g(f(static_cast<Element>(i)));
  return Homomorphism::trusted(f.source(), g.target(), std::move(m));
}

inline Subgroup hom_image(const Homomorphism& f, const Subgroup& h) {
  if (!h.parent().same_as(f.source())) throw GroupMismatch("hom_image: subgroup not in the source group");
  ElementSet img(f.target().order());
  h.members().for_each([&](Element x) { img.set(f(x)); });
  return Subgroup(f.target(), std::move(img));
}

inline Subgroup hom_preimage(const Homomorphism& f, const Subgroup& h) {
  if (!h.parent().same_as(f.target())) throw GroupMismatch("hom_preimage: subgroup not in the target group");
  ElementSet pre(f.source().order());
  for (Element x = 0; x < f.source().order(); ++x)
    if (h.contains(f(x))) pre.set(x);
  return Subgroup(f.source(), std::move(pre));
}

/// Thrown by quotient() for a non-normal subgroup; carries a conjugation witness.
class NotNormal : public InvalidArgument {
 public:
  NotNormal(Element x, Element g)
      : InvalidArgument("subgroup is not normal: conjugating " + std::to_string(x) + " by " +
                        std::to_string(g) + " leaves it"),
        element_(x),
        conjugator_(g) {}
  Element element() const noexcept { return element_; }
  Element conjugator() const noexcept { return conjugator_; }

 private:
  Element element_;
  Element conjugator_;
};

struct QuotientResult {
  FiniteGroup group;
  Homomorphism projection;
};

/// G/N with cosets numbered by increasing minimal representative.
inline QuotientResult quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!n.parent().same_as(g)) throw GroupMismatch("quotient: subgroup not in the group");
  if (auto w = normality_witness(n)) throw NotNormal(w->first, w->second);
  const std::size_t order = g.order();
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> coset_of(order, kUnset);
  std::vector<Element> reps;
  const auto members = n.elements();
  for (Element x = 0; x < order; ++x) {
    if (coset_of[x] != kUnset) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element m : members) coset_of[g.mul(x, m)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Element> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) table[a * q + b] = coset_of[g.mul(reps[a], reps[b])];
  FiniteGroup quo = FiniteGroup::trusted(std::move(table), g.label() + "/N" + std::to_string(n.order()));
  return {quo, Homomorphism::trusted(g, quo, std::move(coset_of))};
}

}  // namespace profscope

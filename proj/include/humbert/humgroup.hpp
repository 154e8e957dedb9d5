#pragma once

// The order-120 group 𝔾 generated by A(z,w) = (1/z, 1/w) and
// B(z,w) = (w/(w-1), w/(w-z)), acting birationally on the parameter plane,
// together with the independent permutation model: reorder the five marked
// points (∞, 0, 1, z, w) and renormalize the first three to (∞, 0, 1).
//
// Composition is (S∘T)(p) = S(T(p)). Elements are produced breadth-first
// from the identity by left multiplication with A or B, so the word of each
// element is a shortest one; "AB" means A∘B.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "humbert/detail/parallel.hpp"
#include "humbert/exactnum.hpp"
#include "humbert/moebius.hpp"
#include "humbert/polyring.hpp"

namespace humbert {

/// Coordinates (λ₁, λ₂) of a Humbert curve. Torelli space Ω requires
/// z, w ∉ {0, 1} and z ≠ w; ∞ never occurs in Ω so both are finite scalars.
template <Field S>
struct ParamPair {
  S z;
  S w;

  bool in_torelli() const {
    const S zero(0), one(1);
    return !(z == zero || z == one || w == zero || w == one || z == w);
  }

  friend bool operator==(const ParamPair& a, const ParamPair& b) { return a.z == b.z && a.w == b.w; }
};

template <Field S>
void require_torelli(const ParamPair<S>& p) {
  if (!p.in_torelli()) fail(ErrorKind::NotInTorelli, "parameter pair is not in Torelli space");
}

template <Field S>
int canonical_compare(const ParamPair<S>& a, const ParamPair<S>& b) {
  const int c = canonical_compare(a.z, b.z);
  return c != 0 ? c : canonical_compare(a.w, b.w);
}

struct GroupElem {
  RatFunc2 first;
  RatFunc2 second;

  static GroupElem identity() { return {RatFunc2::z(), RatFunc2::w()}; }

  template <Field S>
  ParamPair<S> operator()(const ParamPair<S>& p) const;

  friend bool operator==(const GroupElem&, const GroupElem&) = default;
};

/// s∘t.
GroupElem compose(const GroupElem& s, const GroupElem& t);
GroupElem generator_A();
GroupElem generator_B();

/// Breadth-first closure of `gens` under left multiplication. InternalError
/// once more than `bound` elements appear.
std::vector<GroupElem> generate_closure(const std::vector<GroupElem>& gens, std::size_t bound = 240);

class HumbertGroup {
 public:
  /// Built on first use, immutable afterwards.
  static const HumbertGroup& instance();

  std::size_t size() const { return elements_.size(); }
  const std::vector<GroupElem>& elements() const { return elements_; }
  const GroupElem& operator[](std::size_t k) const { return elements_[k]; }
  const std::string& word(std::size_t k) const { return words_[k]; }
  std::optional<std::size_t> find(const GroupElem& g) const;
  int order(std::size_t k) const;
  /// order -> number of elements of that order.
  std::map<int, int> order_statistics() const;

 private:
  HumbertGroup();

  std::vector<GroupElem> elements_;
  std::vector<std::string> words_;
};

using Perm5 = std::array<int, 5>;

/// All 120 permutations of {0..4} in lexicographic order.
std::vector<Perm5> all_permutations();

/// q_k = p_{σ(k)} with (p₁..p₅) = (∞, 0, 1, z, w); returns the images of q₄, q₅
/// under the map sending (q₁, q₂, q₃) to (∞, 0, 1).
template <Field S>
ParamPair<S> perm_action(const Perm5& sigma, const ParamPair<S>& p) {
  const std::array<ProjPoint<S>, 5> marked{ProjPoint<S>::infinity(), ProjPoint<S>(S(0)), ProjPoint<S>(S(1)),
                                           ProjPoint<S>(p.z), ProjPoint<S>(p.w)};
  auto q = [&](int k) { return marked[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])]; };
  const auto m = mob_from_triples<S>({q(0), q(1), q(2)},
                                     {ProjPoint<S>::infinity(), ProjPoint<S>(S(0)), ProjPoint<S>(S(1))});
  const ProjPoint<S> a = m(q(3)), b = m(q(4));
  if (a.is_infinity() || b.is_infinity()) fail(ErrorKind::InternalError, "permutation image left Torelli space");
  return {a.value(), b.value()};
}

/// The rational map of perm_action, as a group element.
GroupElem perm_map(const Perm5& sigma);

// ---------------------------------------------------------------------------

template <Field S>
ParamPair<S> GroupElem::operator()(const ParamPair<S>& p) const {
  try {
    return {evaluate(first, p.z, p.w), evaluate(second, p.z, p.w)};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::PoleAt || e.kind() == ErrorKind::Indeterminate)
      fail(ErrorKind::InternalError, "group element undefined at a Torelli point");
    throw;
  }
}

namespace detail {

// Approximate orbits: points closer than ε merge, points within 10ε but
// farther than ε are too close to call.
inline bool merge_approx(const ParamPair<ApproxC>& a, const ParamPair<ApproxC>& b) {
  const double eps = default_tolerance();
  const double d = std::max(relative_distance(a.z, b.z), relative_distance(a.w, b.w));
  if (d <= eps) return true;
  if (d <= 10 * eps) fail(ErrorKind::PrecisionWarning, "orbit points collide within 10 eps");
  return false;
}

template <Field S>
std::vector<ParamPair<S>> images(const ParamPair<S>& p) {
  const auto& g = HumbertGroup::instance();
  std::vector<ParamPair<S>> out(g.size());
  detail::parallel_for(g.size(), [&](std::size_t k) { out[k] = g[k](p); });
  return out;
}

}  // namespace detail

/// The 𝔾-orbit of p, sorted by the canonical scalar order.
template <Field S>
std::vector<ParamPair<S>> orbit(const ParamPair<S>& p) {
  require_torelli(p);
  std::vector<ParamPair<S>> all = detail::images(p);
  for (const auto& q : all) {
    if (!q.in_torelli()) fail(ErrorKind::InternalError, "orbit point left Torelli space");
  }
  auto less = [](const ParamPair<S>& a, const ParamPair<S>& b) { return canonical_compare(a, b) < 0; };
  std::vector<ParamPair<S>> out;
  if constexpr (ScalarTraits<S>::exact) {
    std::sort(all.begin(), all.end(), less);
    for (auto& q : all) {
      if (out.empty() || !(out.back() == q)) out.push_back(std::move(q));
    }
  } else {
    for (auto& q : all) {
      const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& r) { return detail::merge_approx(r, q); });
      if (!seen) out.push_back(std::move(q));
    }
    std::sort(out.begin(), out.end(), less);
  }
  return out;
}

/// Indices (into HumbertGroup) of the elements fixing p.
template <Field S>
std::vector<std::size_t> stabilizer(const ParamPair<S>& p) {
  require_torelli(p);
  const std::vector<ParamPair<S>> all = detail::images(p);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (all[k] == p) out.push_back(k);
  }
  return out;
}

/// Shortest-word T with T(p) = q, as an index into HumbertGroup.
template <Field S>
std::optional<std::size_t> same_orbit(const ParamPair<S>& p, const ParamPair<S>& q) {
  require_torelli(p);
  require_torelli(q);
  const std::vector<ParamPair<S>> all = detail::images(p);
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (all[k] == q) return k;
  }
  return std::nullopt;
}

}  // namespace humbert

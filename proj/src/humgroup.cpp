#include "humbert/humgroup.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace humbert {

GroupElem compose(const GroupElem& s, const GroupElem& t) {
  return {compose(s.first, t.first, t.second), compose(s.second, t.first, t.second)};
}

GroupElem generator_A() { return {RatFunc2::z().inverse(), RatFunc2::w().inverse()}; }

GroupElem generator_B() {
  const RatFunc2 z = RatFunc2::z(), w = RatFunc2::w();
  return {w / (w - 1), w / (w - z)};
}

std::vector<GroupElem> generate_closure(const std::vector<GroupElem>& gens, std::size_t bound) {
  std::vector<GroupElem> out{GroupElem::identity()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens) {
      GroupElem next = compose(g, out[head]);
      if (std::find(out.begin(), out.end(), next) != out.end()) continue;
      out.push_back(std::move(next));
      if (out.size() > bound) fail(ErrorKind::InternalError, "group closure exceeds the sanity bound");
    }
  }
  return out;
}

const HumbertGroup& HumbertGroup::instance() {
  static const HumbertGroup group;
  return group;
}

HumbertGroup::HumbertGroup() {
  const GroupElem a = generator_A(), b = generator_B();
  elements_ = generate_closure({a, b});
  // Replaying the BFS names every element by a shortest word.
  words_.assign(elements_.size(), std::string());
  std::vector<bool> named(elements_.size(), false);
  named[0] = true;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    for (const auto& [gen, letter] : {std::pair{&a, 'A'}, std::pair{&b, 'B'}}) {
      const std::size_t j = *find(compose(*gen, elements_[k]));
      if (!named[j]) {
        named[j] = true;
        words_[j] = std::string(1, letter) + words_[k];
      }
    }
  }
  words_[0] = "id";
}

std::optional<std::size_t> HumbertGroup::find(const GroupElem& g) const {
  const auto it = std::find(elements_.begin(), elements_.end(), g);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

int HumbertGroup::order(std::size_t k) const {
  GroupElem power = elements_[k];
  for (int n = 1; n <= static_cast<int>(elements_.size()); ++n) {
    if (power == elements_[0]) return n;
    power = compose(elements_[k], power);
  }
  fail(ErrorKind::InternalError, "element of infinite order in a finite group");
}

std::map<int, int> HumbertGroup::order_statistics() const {
  std::map<int, int> stats;
  for (std::size_t k = 0; k < elements_.size(); ++k) ++stats[order(k)];
  return stats;
}

std::vector<Perm5> all_permutations() {
  Perm5 p;
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm5> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

GroupElem perm_map(const Perm5& sigma) {
  const ParamPair<RatFunc2> image = perm_action(sigma, ParamPair<RatFunc2>{RatFunc2::z(), RatFunc2::w()});
  return {image.z, image.w};
}

}  // namespace humbert

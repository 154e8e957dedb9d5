#include "humbert/curve.hpp"

namespace humbert {

SignElement SignElement::from(std::array<int, 5> s) {
  for (int& x : s) {
    if (x != 1 && x != -1) fail(ErrorKind::DegenerateValue, "signs must be +1 or -1");
  }
  if (s[0] < 0) {
    for (int& x : s) x = -x;
  }
  SignElement e;
  e.signs = s;
  return e;
}

SignElement operator*(const SignElement& a, const SignElement& b) {
  std::array<int, 5> s{};
  for (std::size_t k = 0; k < 5; ++k) s[k] = a.signs[k] * b.signs[k];
  return SignElement::from(s);
}

const std::vector<SignElement>& sign_group() {
  static const std::vector<SignElement> group = [] {
    std::vector<SignElement> g;
    for (int mask = 0; mask < 16; ++mask) {
      std::array<int, 5> s{1, 1, 1, 1, 1};
      for (int k = 0; k < 4; ++k) {
        if (mask & (1 << (3 - k))) s[static_cast<std::size_t>(k + 1)] = -1;
      }
      g.push_back(SignElement::from(s));
    }
    return g;
  }();
  return group;
}

}  // namespace humbert

#pragma once

// Eigen scalar registration for the exact and approximate regimes, so the
// projective types can be plain fixed-size Eigen matrices.

#include <Eigen/Core>

#include "humbert/exactnum.hpp"
#include "humbert/polyring.hpp"

namespace humbert::detail {

template <class S>
struct ExactNumTraits : Eigen::GenericNumTraits<S> {
  using Real = S;
  using NonInteger = S;
  using Literal = S;
  using Nested = S;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static S epsilon() { return S(0); }
  static S dummy_precision() { return S(0); }
  static S highest() = delete;
  static S lowest() = delete;
  static int digits10() { return 0; }
};

}  // namespace humbert::detail

namespace Eigen {

template <>
struct NumTraits<humbert::Rat> : humbert::detail::ExactNumTraits<humbert::Rat> {};
template <>
struct NumTraits<humbert::GaussRat> : humbert::detail::ExactNumTraits<humbert::GaussRat> {};
template <>
struct NumTraits<humbert::RatFunc2> : humbert::detail::ExactNumTraits<humbert::RatFunc2> {};

// Treated as an opaque field element: Eigen never sees the complex structure.
template <>
struct NumTraits<humbert::ApproxC> : humbert::detail::ExactNumTraits<humbert::ApproxC> {
  enum { AddCost = 2, MulCost = 6 };
  static humbert::ApproxC epsilon() { return humbert::ApproxC(humbert::default_tolerance()); }
  static humbert::ApproxC dummy_precision() { return epsilon(); }
};

}  // namespace Eigen

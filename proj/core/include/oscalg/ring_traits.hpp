#pragma once

#include <string>

#include "oscalg/laurent.hpp"
#include "oscalg/ratfunc.hpp"
#include "oscalg/rational.hpp"

namespace oscalg {

// Uniform access to the coefficient rings a truncated series can carry.
// Ring classes supply the members directly; the base field gets an
// explicit specialization.
template <class C>
struct RingTraits {
  static C zero() { return C::zero(); }
  static C one() { return C::one(); }
  static bool is_zero(const C& a) { return a.is_zero(); }
  static C inv(const C& a) { return a.inv(); }
  static C scale(const C& a, const Rat& s) { return a.scaled(s); }
  static std::string text(const C& a) { return a.text(); }
};

template <>
struct RingTraits<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static bool is_zero(const Rat& a) { return a == 0; }
  static Rat inv(const Rat& a) {
    if (a == 0) throw contract_error("inverting zero");
    return 1 / a;
  }
  static Rat scale(const Rat& a, const Rat& s) { return a * s; }
  static std::string text(const Rat& a) { return rat_text(a); }
};

}  // namespace oscalg

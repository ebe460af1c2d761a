#pragma once

#include <memory>
#include <vector>

#include "tflab/topoframe.hpp"

namespace tflab::fixtures {

// Powerset of two points with every element open.
inline std::shared_ptr<const Topoframe> discrete2() {
  auto L = Lattice::powerset(2);
  std::vector<Elem> tau;
  for (int i = 0; i < L->size(); ++i) tau.push_back(L->element(i));
  return Topoframe::validate(L, tau);
}

// Powerset of three points; opens are the sets avoiding point 3, plus top.
// Nothing but bottom and top is clopen.
inline std::shared_ptr<const Topoframe> excluded_point3() {
  auto L = Lattice::powerset(3);
  std::vector<Elem> tau = {L->by_name("{}"), L->by_name("{1}"),
                           L->by_name("{2}"), L->by_name("{1,2}"),
                           L->by_name("{1,2,3}")};
  return Topoframe::validate(L, tau);
}

// Powerset of two points with only bottom and top open.
inline std::shared_ptr<const Topoframe> indiscrete2() {
  auto L = Lattice::powerset(2);
  return Topoframe::validate(L, {L->bottom(), L->top()});
}

}  // namespace tflab::fixtures

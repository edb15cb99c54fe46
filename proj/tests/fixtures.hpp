#pragma once

#include "structmat/families.hpp"
#include "structmat/preorder.hpp"

// Small shapes shared across the test binaries.
namespace fx {

inline structmat::Preorder ut2() { return structmat::families::chain(2); }
inline structmat::Preorder cls3() { return structmat::families::chain(3); }
inline structmat::Preorder full2() { return structmat::families::full(2); }

// 0 under 1 and 2, nothing else
inline structmat::Preorder vee() {
  return structmat::make_preorder(3, {{0, 1}, {0, 2}}).preorder;
}

// diamond: sources 0,1 each under sinks 2,3
inline structmat::Preorder diamond() { return structmat::families::crown(2); }

// two cover paths 0->1->3 and 0->2->3
inline structmat::Preorder twopaths() { return structmat::families::two_paths(3, 1); }

}  // namespace fx

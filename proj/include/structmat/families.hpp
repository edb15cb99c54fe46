#pragma once

#include "structmat/preorder.hpp"

namespace structmat {
namespace families {

// Standard shapes used across tests and demos. All returned closed.

Preorder chain(int n);               // 0 < 1 < ... < n-1
Preorder full(int n);                // everything related (one class)
Preorder antichain_shape(int n);     // nothing but the diagonal

// k sources, k sinks, source i under sinks i and i+1 (cyclically): the
// undirected cover graph is a 2k-cycle for k >= 3 and complete bipartite for
// k = 2. Smallest member (k = 2) is the 4-element diamond.
Preorder crown(int k);

// Two directed cover paths from a common least vertex to a common greatest
// vertex, of lengths m-1 and p+1 (vertices 0..m+p-1).
Preorder two_paths(int m, int p);

// Crown with an apex above every sink: each sink gains one arrow to the new
// greatest element. Collapses the parallel-path obstruction.
Preorder augmented_crown(int k);

}  // namespace families
}  // namespace structmat

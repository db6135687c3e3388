#pragma once

#include "trimcon/digraph.hpp"

namespace trimcon {

// Edges (i, j) for every ordered pair i != j. Requires n >= 2.
Digraph complete(int n);

// Ring with forward chords: edges (i, (i+k) mod n) for k = 1..2f+1, so every
// in- and out-degree equals 2f+1. Requires f >= 1 and n > 3f. (Named after
// the chords, not the DHT of the same name.)
Digraph chord(int n, int f);

// d-dimensional binary hypercube on 2^d nodes: both directed edges between
// every pair of ids differing in exactly one bit. Requires d >= 1.
Digraph hypercube(int d);

// Clique core {0..2f} plus bidirectional links from every outside node to
// every core node; no edges among outside nodes. Requires f >= 1 and n > 3f.
Digraph core_network(int n, int f);

}  // namespace trimcon

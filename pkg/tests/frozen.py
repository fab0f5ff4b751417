"""Values measured once by exhaustive enumeration and cross-checked, then
frozen as regression anchors."""

# g=1, one boundary: |MF|, edge count and diameter for n = 1..6
TORUS_NODES = {1: 1, 2: 9, 3: 70, 4: 420, 5: 2310, 6: 12012}
TORUS_EDGES = {1: 0, 2: 8, 3: 144, 4: 1170, 5: 7910, 6: 48258}
TORUS_DIAMETER = {1: 0, 2: 8, 3: 10, 4: 13, 5: 16, 6: 18}

# exact d(A_n^-, A_n^+) for g=1
WITNESS_DISTANCE = {1: 0, 2: 8, 3: 9, 4: 12, 5: 14, 6: 17, 7: 19, 8: 22}

# genus-2 one-point core with orientation kept
CORE2_NODES = 105
CORE2_EDGES = 371
CORE2_DIAMETER = 7

# polygon: the 13-gon store has Catalan(11) nodes and diameter 2n-10
POLYGON13_NODES = 58786
POLYGON13_DIAMETER = 16

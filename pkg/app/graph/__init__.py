# Graph primitives: bit-vector graphs, graph6, chordality, colorings

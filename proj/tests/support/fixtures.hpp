#pragma once

#include "discut/instance_io.hpp"

#include <string>

namespace discut::testing {

// The six-vertex example network with terminals s=1, t=6 and a plane
// rotation system. Vertices: s=1 a=2 b=3 c=4 d=5 t=6.
inline const char* const kFigureOne = R"(c example network
p discut 6 9
e 1 1 2 3
e 2 2 3 1
e 3 3 6 4
e 4 2 4 2
e 5 1 4 3
e 6 4 5 5
e 7 5 6 3
e 8 3 5 3
e 9 2 5 1
t 1 6
r 1 +1 +5
r 2 +2 +9 +4 -1
r 3 -2 +3 +8
r 4 -5 -4 +6
r 5 -6 -9 -8 +7
r 6 -7 -3
)";

inline Instance figure_one() { return parse_instance_string(kFigureOne); }

// 0-based vertex ids of the example
inline constexpr VertexId S = 0, A = 1, B = 2, C = 3, D = 4, T = 5;
// 0-based edge ids of the example
inline constexpr EdgeId SA = 0, AB = 1, BT = 2, AC = 3, SC = 4, CD = 5, DT = 6, BD = 7, AD = 8;

}  // namespace discut::testing

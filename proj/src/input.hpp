#pragma once

// Parsing of user-supplied input documents (JSON).  Two shapes are accepted:
//
// Potential description
//   {
//     "n": 2,
//     "base": "psi0" | "phi0",
//     "r": 3.0,                     // optional positive scale, default 1
//     "kappa": 1.0,                 // optional positive kappa, default 1
//     "generators": [               // optional, applied in listed order
//       {"type": "Ts", "s": 0.3},
//       {"type": "T2", "k": 1, "s": 0.5},
//       {"type": "T3", "k": 1, "s": -0.2},
//       {"type": "dilation", "s": 0.1},
//       {"type": "swap", "k": 2},
//       {"type": "sigma"},
//       {"type": "unitary", "entries": [ ... n*n complex, row-major ... ]},
//       {"type": "affine", "matrix": [ ... ], "offset": [ ... ]}
//     ],
//     "f": [                        // optional holomorphic correction terms
//       {"exponents": [1, 0], "re": 0.1, "im": 0.0}
//     ]
//   }
//
// Homogeneous matrix
//   { "n": 2, "mobius": [ ... (n+1)^2 complex, row-major ... ] }
//
// Complex entries are either plain numbers (purely real) or objects
// {"re": x, "im": y}.  Malformed documents raise InvalidConfig with position
// information (byte offset for syntax errors, field path otherwise).

#include <string>

#include "mobius.hpp"
#include "potential.hpp"

namespace kepot {

struct ParsedInput {
  enum class Kind { Potential, Mobius };
  Kind kind = Kind::Potential;
  Potential potential;  // valid when kind == Potential
  MobiusMap mobius;     // valid when kind == Mobius
};

ParsedInput parse_input(const std::string& json_text);

}  // namespace kepot

#pragma once

// Built-in copy of scenes/paper.json.

#include <string>

namespace toricq {

inline const std::string& example_scene_text() {
  static const std::string text = R"json({
  "_comment": "C^* acting on X = C^2 x (C^*)^2 u (C^*)^2 x C^2 with weight w, quotient pi : X -> C^3 through the prevariety Ytilde",
  "lattices": {"N": 4, "Nbar": 3},
  "cones": {
    "zero4": {"lattice": "N", "generators": []},
    "sigma1": {"lattice": "N", "generators": [["1", "0", "0", "0"], ["0", "1", "0", "0"]]},
    "sigma2": {"lattice": "N", "generators": [["0", "0", "1", "0"], ["0", "0", "0", "1"]]},
    "zero": {"lattice": "Nbar", "generators": []},
    "rho1": {"lattice": "Nbar", "generators": [["1", "0", "0"]]},
    "rho2": {"lattice": "Nbar", "generators": [["0", "1", "0"]]},
    "rho3": {"lattice": "Nbar", "generators": [["0", "0", "1"]]},
    "rho4": {"lattice": "Nbar", "generators": [["1", "1", "0"]]},
    "tau1": {"lattice": "Nbar", "generators": [["1", "0", "0"], ["0", "1", "0"]]},
    "tau2": {"lattice": "Nbar", "generators": [["0", "0", "1"], ["1", "1", "0"]]},
    "delta": {"lattice": "Nbar", "generators": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]},
    "c13": {"lattice": "Nbar", "generators": [["1", "0", "0"], ["0", "0", "1"]]},
    "c23": {"lattice": "Nbar", "generators": [["0", "1", "0"], ["0", "0", "1"]]}
  },
  "maps": {
    "P": {"rows": 3, "cols": 4, "entries": [["1", "0", "0", "1"], ["0", "1", "0", "1"], ["0", "0", "1", "0"]]},
    "I3": {"rows": 3, "cols": 3, "entries": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]}
  },
  "fans": {
    "Delta": {"cones": ["sigma1", "sigma2"], "label": "x"},
    "C3": {"cones": ["delta"], "label": "y"}
  },
  "systems": {
    "Ytilde": {"charts": ["tau1", "tau2"], "gluing": [{"charts": [0, 1], "cone": "zero"}], "label": "~y"},
    "U": {"charts": ["tau1", "rho3"], "label": "u"}
  },
  "morphisms": {
    "pi": {"map": "P", "source": "Delta", "target": "C3"},
    "pitilde": {"map": "P", "source": "Delta", "target": "Ytilde", "charts": [0, 1]},
    "kappa": {"map": "I3", "source": "Ytilde", "target": "C3"},
    "kappaU": {"map": "I3", "source": "U", "target": "C3"}
  },
  "weights": {"w": ["1", "1", "0", "-1"]},
  "points": {
    "t0": {"space": "Ytilde", "cone": "zero", "coset": ["2", "3", "5"]},
    "x0": {"space": "Delta", "cone": "zero4", "coset": ["2", "3", "5", "7"]}
  }
}
)json";
  return text;
}

}  // namespace toricq

#pragma once

#include "orbicalc/model_io.hpp"

#include <vector>

namespace orb {

// Built-in example models. The JSON text is the model definition of record:
// analyze hashes exactly these bytes, and the files shipped under models/
// carry the same content.
struct CatalogEntry {
    const char* name;
    const char* description;
    // expected outcomes of the hypothesis checks; quotient kinds only
    bool expected_gorenstein;
    bool expected_k_equivalent;
    const char* json;
};

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"A1", "A_1 surface singularity [C^2/Z_2], the sign action", true, true,
         R"({
  "name": "A1",
  "kind": "affine",
  "root_order": 2,
  "dimension": 2,
  "generators": [[["-1", "0"], ["0", "-1"]]]
}
)"},
        {"A2", "A_2 surface singularity [C^2/Z_3] with weights (1, 2)", true, true,
         R"({
  "name": "A2",
  "kind": "affine",
  "root_order": 3,
  "dimension": 2,
  "generators": [[["z", "0"], ["0", "z^2"]]]
}
)"},
        {"A3", "A_3 surface singularity [C^2/Z_4] with weights (1, 3)", true, true,
         R"({
  "name": "A3",
  "kind": "affine",
  "root_order": 4,
  "dimension": 2,
  "generators": [[["z", "0"], ["0", "z^3"]]]
}
)"},
        {"C3-Z3-111", "[C^3/Z_3] with weights (1,1,1), crepant-resolvable", true, true,
         R"({
  "name": "C3-Z3-111",
  "kind": "affine",
  "root_order": 3,
  "dimension": 3,
  "generators": [[["z", "0", "0"], ["0", "z", "0"], ["0", "0", "z"]]]
}
)"},
        {"Q8-2d", "[C^2/Q_8], the 2-dimensional quaternion action", true, true,
         R"({
  "name": "Q8-2d",
  "kind": "affine",
  "root_order": 4,
  "dimension": 2,
  "generators": [[["z", "0"], ["0", "-z"]], [["0", "1"], ["-1", "0"]]]
}
)"},
        {"S3-perm", "[C^3/S_3] permuting coordinates; reflections break both hypotheses",
         false, false,
         R"({
  "name": "S3-perm",
  "kind": "affine",
  "root_order": 3,
  "dimension": 3,
  "generators": [[["0", "1", "0"], ["1", "0", "0"], ["0", "0", "1"]],
                 [["0", "0", "1"], ["1", "0", "0"], ["0", "1", "0"]]]
}
)"},
        {"P2-Z3", "[P^2/Z_3] with weights (0,1,2)", true, true,
         R"({
  "name": "P2-Z3",
  "kind": "projective",
  "root_order": 3,
  "dimension": 3,
  "generators": [[["1", "0", "0"], ["0", "z", "0"], ["0", "0", "z^2"]]]
}
)"},
        {"P1-Z2", "[P^1/Z_2], the non-Gorenstein negative control", false, false,
         R"({
  "name": "P1-Z2",
  "kind": "projective",
  "root_order": 2,
  "dimension": 2,
  "generators": [[["1", "0"], ["0", "-1"]]]
}
)"},
        {"P1", "the projective line, trivial group", true, true,
         R"({
  "name": "P1",
  "kind": "projective",
  "root_order": 1,
  "dimension": 2,
  "generators": []
}
)"},
        {"P2", "the projective plane, trivial group", true, true,
         R"({
  "name": "P2",
  "kind": "projective",
  "root_order": 1,
  "dimension": 3,
  "generators": []
}
)"},
        {"P3", "projective 3-space, trivial group", true, true,
         R"({
  "name": "P3",
  "kind": "projective",
  "root_order": 1,
  "dimension": 4,
  "generators": []
}
)"},
        {"P4", "projective 4-space, trivial group", true, true,
         R"({
  "name": "P4",
  "kind": "projective",
  "root_order": 1,
  "dimension": 5,
  "generators": []
}
)"},
        {"gset-Z2-mixed", "Z_2 on three points: one free orbit plus a fixed point",
         true, true,
         R"({
  "name": "gset-Z2-mixed",
  "kind": "gset",
  "points": 3,
  "generators": [[1, 0, 2]]
}
)"},
        {"gset-Z3-mixed", "Z_3 on four points: one free orbit plus a fixed point",
         true, true,
         R"({
  "name": "gset-Z3-mixed",
  "kind": "gset",
  "points": 4,
  "generators": [[1, 2, 0, 3]]
}
)"},
        {"gset-S3-4pts", "S_3 on its natural three points plus a fixed point",
         true, true,
         R"({
  "name": "gset-S3-4pts",
  "kind": "gset",
  "points": 4,
  "generators": [[1, 0, 2, 3], [1, 2, 0, 3]]
}
)"},
    };
    return entries;
}

inline const CatalogEntry* catalog_find(const std::string& name) {
    for (const auto& e : catalog())
        if (name == e.name) return &e;
    return nullptr;
}

// Resolve a CLI model argument: an existing file path wins, otherwise the
// built-in catalog is consulted by name.
inline LoadedModel load_model_argument(const std::string& arg) {
    if (std::ifstream probe(arg, std::ios::binary); probe.good())
        return load_model_file(arg);
    if (const CatalogEntry* e = catalog_find(arg))
        return load_model_json(e->json, std::string("catalog:") + e->name);
    throw InputError("no such file or catalog model: '" + arg + "'");
}

}  // namespace orb

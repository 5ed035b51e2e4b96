#pragma once

// Generated by tools/gen_catalog.py from assets/catalog.json. Do not edit.

namespace geosynth {

inline const char* default_catalog_json() {
  return R"GEOSYNTH_CATALOG({
  "schema_version": 1,
  "complete": true,
  "notes": "Bundled default catalog. Theorem entries are grouped by family and expanded one checkable fact per entry from standard primary/secondary curriculum material; positional conventions for placeholder bindings are documented in the repository README.",
  "theorems": [
    {
      "id": "tri.angle_sum",
      "category": "substrate-related",
      "family": "General Triangles",
      "statement": "The interior angles of a triangle sum to 180 degrees.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "triangle"
        }
      ],
      "conclusions": [
        {
          "kind": "angle-sum",
          "groups": [
            [
              "V3",
              "V1",
              "V2"
            ],
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "V2",
              "V3",
              "V1"
            ]
          ],
          "value": 180
        }
      ]
    },
    {
      "id": "tri.inequality",
      "category": "substrate-related",
      "family": "General Triangles",
      "statement": "Each side of a triangle is shorter than the sum of the other two.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "triangle"
        }
      ],
      "conclusions": [
        {
          "kind": "triangle-inequality",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ]
          ]
        }
      ]
    },
    {
      "id": "tri.cong_sss",
      "category": "substrate-related",
      "family": "General Triangles",
      "statement": "If three sides of one triangle equal three sides of another, the triangles are congruent (SSS).",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "triangle"
        },
        {
          "pred": "has-substrate",
          "arg": "triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "W1",
              "W2"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "W2",
              "W3"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V3",
              "V1"
            ],
            [
              "W3",
              "W1"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "congruent",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "W1",
              "W2",
              "W3"
            ]
          ]
        },
        {
          "kind": "angles-equal",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "W1",
              "W2",
              "W3"
            ]
          ]
        },
        {
          "kind": "angles-equal",
          "groups": [
            [
              "V2",
              "V3",
              "V1"
            ],
            [
              "W2",
              "W3",
              "W1"
            ]
          ]
        }
      ]
    },
    {
      "id": "tri.cong_sas",
      "category": "substrate-related",
      "family": "General Triangles",
      "statement": "Two sides and the included angle determine a triangle (SAS).",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "triangle"
        },
        {
          "pred": "has-substrate",
          "arg": "triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "W1",
              "W2"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "W2",
              "W3"
            ]
          ]
        },
        {
          "kind": "angles-equal",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "W1",
              "W2",
              "W3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V3"
            ],
            [
              "W1",
              "W3"
            ]
          ]
        },
        {
          "kind": "congruent",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "W1",
              "W2",
              "W3"
            ]
          ]
        }
      ]
    },
    {
      "id": "tri.cong_asa",
      "category": "substrate-related",
      "family": "General Triangles",
      "statement": "Two angles and the included side determine a triangle (ASA).",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "triangle"
        },
        {
          "pred": "has-substrate",
          "arg": "triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "angles-equal",
          "groups": [
            [
              "V3",
              "V1",
              "V2"
            ],
            [
              "W3",
              "W1",
              "W2"
            ]
          ]
        },
        {
          "kind": "angles-equal",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "W1",
              "W2",
              "W3"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "W1",
              "W2"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "W2",
              "W3"
            ]
          ]
        },
        {
          "kind": "congruent",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "W1",
              "W2",
              "W3"
            ]
          ]
        }
      ]
    },
    {
      "id": "tri.cong_aas",
      "category": "substrate-related",
      "family": "General Triangles",
      "statement": "Two angles and a non-included side determine a triangle (AAS).",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "triangle"
        },
        {
          "pred": "has-substrate",
          "arg": "triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "angles-equal",
          "groups": [
            [
              "V3",
              "V1",
              "V2"
            ],
            [
              "W3",
              "W1",
              "W2"
            ]
          ]
        },
        {
          "kind": "angles-equal",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "W1",
              "W2",
              "W3"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "W2",
              "W3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "W1",
              "W2"
            ]
          ]
        },
        {
          "kind": "congruent",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "W1",
              "W2",
              "W3"
            ]
          ]
        }
      ]
    },
    {
      "id": "tri.cong_hl",
      "category": "substrate-related",
      "family": "General Triangles",
      "statement": "Right triangles with equal hypotenuses and one pair of equal legs are congruent (HL).",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "right-triangle"
        },
        {
          "pred": "has-substrate",
          "arg": "right-triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ]
          ],
          "value": 90
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "W2",
              "W1",
              "W3"
            ]
          ],
          "value": 90
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "W2",
              "W3"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "W1",
              "W2"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V3"
            ],
            [
              "W1",
              "W3"
            ]
          ]
        },
        {
          "kind": "congruent",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "W1",
              "W2",
              "W3"
            ]
          ]
        }
      ]
    },
    {
      "id": "tri.sim_aa",
      "category": "substrate-related",
      "family": "General Triangles",
      "statement": "Triangles with two pairs of equal angles are similar (AA), so corresponding sides are proportional.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "triangle"
        },
        {
          "pred": "has-substrate",
          "arg": "triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "angles-equal",
          "groups": [
            [
              "V3",
              "V1",
              "V2"
            ],
            [
              "W3",
              "W1",
              "W2"
            ]
          ]
        },
        {
          "kind": "angles-equal",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "W1",
              "W2",
              "W3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "ratios-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "W1",
              "W2"
            ],
            [
              "V2",
              "V3"
            ],
            [
              "W2",
              "W3"
            ]
          ]
        },
        {
          "kind": "ratios-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "W1",
              "W2"
            ],
            [
              "V1",
              "V3"
            ],
            [
              "W1",
              "W3"
            ]
          ]
        }
      ]
    },
    {
      "id": "isos.base_angles",
      "category": "substrate-related",
      "family": "Isosceles Triangles",
      "statement": "The base angles of an isosceles triangle are equal.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "isosceles-triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V1",
              "V3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "angles-equal",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "V2",
              "V3",
              "V1"
            ]
          ]
        }
      ]
    },
    {
      "id": "isos.crit_two_angles",
      "category": "substrate-related",
      "family": "Isosceles Triangles",
      "statement": "A triangle with two equal angles is isosceles: the sides opposite them are equal.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "angles-equal",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "V2",
              "V3",
              "V1"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V1",
              "V3"
            ]
          ]
        }
      ]
    },
    {
      "id": "isos.crit_two_sides",
      "category": "substrate-related",
      "family": "Isosceles Triangles",
      "statement": "A triangle with two equal sides has equal angles opposite those sides.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V1",
              "V3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "angles-equal",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "V2",
              "V3",
              "V1"
            ]
          ]
        }
      ]
    },
    {
      "id": "isos.apex_median_is_altitude",
      "category": "substrate-related",
      "family": "Isosceles Triangles",
      "statement": "In an isosceles triangle the median from the apex is also the altitude to the base.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "isosceles-triangle"
        },
        {
          "pred": "has-role",
          "arg": "median"
        }
      ],
      "binds": {
        "A1": "V1",
        "A2": "V2",
        "A3": "V3"
      },
      "hypotheses": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V1",
              "V3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "perpendicular",
          "groups": [
            [
              "E1",
              "E2"
            ],
            [
              "A2",
              "A3"
            ]
          ]
        }
      ]
    },
    {
      "id": "isos.apex_median_bisects_angle",
      "category": "substrate-related",
      "family": "Isosceles Triangles",
      "statement": "In an isosceles triangle the median from the apex bisects the apex angle.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "isosceles-triangle"
        },
        {
          "pred": "has-role",
          "arg": "median"
        }
      ],
      "binds": {
        "A1": "V1",
        "A2": "V2",
        "A3": "V3"
      },
      "hypotheses": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V1",
              "V3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "angles-equal",
          "groups": [
            [
              "A2",
              "A1",
              "E2"
            ],
            [
              "E2",
              "A1",
              "A3"
            ]
          ]
        }
      ]
    },
    {
      "id": "isos.apex_altitude_bisects_base",
      "category": "substrate-related",
      "family": "Isosceles Triangles",
      "statement": "In an isosceles triangle the altitude from the apex bisects the base.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "isosceles-triangle"
        },
        {
          "pred": "has-role",
          "arg": "altitude"
        }
      ],
      "binds": {
        "A1": "V1",
        "A2": "V2",
        "A3": "V3"
      },
      "hypotheses": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V1",
              "V3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "E2",
              "A2"
            ],
            [
              "E2",
              "A3"
            ]
          ]
        }
      ]
    },
    {
      "id": "isos.right_base_45",
      "category": "substrate-related",
      "family": "Isosceles Triangles",
      "statement": "In a right isosceles triangle the base angles are 45 degrees.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "right-isosceles-triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ]
          ],
          "value": 90
        }
      ],
      "conclusions": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ]
          ],
          "value": 45
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V3",
              "V1"
            ]
          ],
          "value": 45
        }
      ]
    },
    {
      "id": "equi.all_angles_60",
      "category": "substrate-related",
      "family": "Equilateral Triangles",
      "statement": "Every angle of an equilateral triangle is 60 degrees.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "equilateral-triangle"
        }
      ],
      "conclusions": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V3",
              "V1",
              "V2"
            ]
          ],
          "value": 60
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ]
          ],
          "value": 60
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V3",
              "V1"
            ]
          ],
          "value": 60
        }
      ]
    },
    {
      "id": "equi.crit_three_sides",
      "category": "substrate-related",
      "family": "Equilateral Triangles",
      "statement": "A triangle with three equal sides has three 60-degree angles.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V2",
              "V3"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "V3",
              "V1"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V3",
              "V1",
              "V2"
            ]
          ],
          "value": 60
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ]
          ],
          "value": 60
        }
      ]
    },
    {
      "id": "equi.crit_three_angles",
      "category": "substrate-related",
      "family": "Equilateral Triangles",
      "statement": "A triangle with three equal angles is equilateral.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "angles-equal",
          "groups": [
            [
              "V3",
              "V1",
              "V2"
            ],
            [
              "V1",
              "V2",
              "V3"
            ]
          ]
        },
        {
          "kind": "angles-equal",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "V2",
              "V3",
              "V1"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V2",
              "V3"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "V3",
              "V1"
            ]
          ]
        }
      ]
    },
    {
      "id": "equi.crit_isosceles_60",
      "category": "substrate-related",
      "family": "Equilateral Triangles",
      "statement": "An isosceles triangle with a 60-degree apex angle is equilateral.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V1",
              "V3"
            ]
          ]
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ]
          ],
          "value": 60
        }
      ],
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V2",
              "V3"
            ]
          ]
        }
      ]
    },
    {
      "id": "equi.altitude_ratio",
      "category": "substrate-related",
      "family": "Equilateral Triangles",
      "statement": "The altitude of an equilateral triangle is (sqrt(3)/2) times its side.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "equilateral-triangle"
        },
        {
          "pred": "has-role",
          "arg": "altitude"
        }
      ],
      "binds": {
        "A1": "V1",
        "A2": "V2",
        "A3": "V3"
      },
      "conclusions": [
        {
          "kind": "length-ratio",
          "groups": [
            [
              "E1",
              "E2"
            ],
            [
              "A2",
              "A3"
            ]
          ],
          "value": 0.8660254037844386
        }
      ]
    },
    {
      "id": "right.pythagorean",
      "category": "substrate-related",
      "family": "Right Triangles",
      "statement": "In a right triangle the legs a and b and hypotenuse c satisfy a^2 + b^2 = c^2.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "right-triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ]
          ],
          "value": 90
        }
      ],
      "conclusions": [
        {
          "kind": "pythagorean",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V1",
              "V3"
            ],
            [
              "V2",
              "V3"
            ]
          ]
        }
      ]
    },
    {
      "id": "right.acute_complementary",
      "category": "substrate-related",
      "family": "Right Triangles",
      "statement": "The acute angles of a right triangle are complementary.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "right-triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ]
          ],
          "value": 90
        }
      ],
      "conclusions": [
        {
          "kind": "angle-sum",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "V2",
              "V3",
              "V1"
            ]
          ],
          "value": 90
        }
      ]
    },
    {
      "id": "right.thirty_half_hypotenuse",
      "category": "substrate-related",
      "family": "Right Triangles",
      "statement": "The side opposite a 30-degree angle in a right triangle is half the hypotenuse.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "right-triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ]
          ],
          "value": 90
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ]
          ],
          "value": 30
        }
      ],
      "conclusions": [
        {
          "kind": "length-ratio",
          "groups": [
            [
              "V1",
              "V3"
            ],
            [
              "V2",
              "V3"
            ]
          ],
          "value": 0.5
        }
      ]
    },
    {
      "id": "right.hypotenuse_median",
      "category": "substrate-related",
      "family": "Right Triangles",
      "statement": "The median to the hypotenuse of a right triangle is half the hypotenuse.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "right-triangle"
        },
        {
          "pred": "has-role",
          "arg": "median"
        }
      ],
      "binds": {
        "A1": "V1",
        "A2": "V2",
        "A3": "V3"
      },
      "hypotheses": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ]
          ],
          "value": 90
        }
      ],
      "conclusions": [
        {
          "kind": "length-ratio",
          "groups": [
            [
              "E1",
              "E2"
            ],
            [
              "A2",
              "A3"
            ]
          ],
          "value": 0.5
        }
      ]
    },
    {
      "id": "right.converse_pythagorean",
      "category": "substrate-related",
      "family": "Right Triangles",
      "statement": "If a^2 + b^2 = c^2 for the sides of a triangle, the angle between a and b is right.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "pythagorean",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V1",
              "V3"
            ],
            [
              "V2",
              "V3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ]
          ],
          "value": 90
        }
      ]
    },
    {
      "id": "right.area_half_legs",
      "category": "substrate-related",
      "family": "Right Triangles",
      "statement": "The area of a right triangle is half the product of its legs.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "right-triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ]
          ],
          "value": 90
        }
      ],
      "conclusions": [
        {
          "kind": "area-product",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "V1",
              "V2"
            ],
            [
              "V1",
              "V3"
            ]
          ],
          "value": 0.5
        }
      ]
    },
    {
      "id": "trig.sin30",
      "category": "substrate-related",
      "family": "Trigonometric Functions",
      "statement": "sin 30° = 1/2: opposite over hypotenuse for a 30-degree angle.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "right-triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ]
          ],
          "value": 90
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ]
          ],
          "value": 30
        }
      ],
      "conclusions": [
        {
          "kind": "length-ratio",
          "groups": [
            [
              "V1",
              "V3"
            ],
            [
              "V2",
              "V3"
            ]
          ],
          "value": 0.5
        }
      ]
    },
    {
      "id": "trig.sin45",
      "category": "substrate-related",
      "family": "Trigonometric Functions",
      "statement": "sin 45° = √2/2: opposite over hypotenuse for a 45-degree angle.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "right-triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ]
          ],
          "value": 90
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ]
          ],
          "value": 45
        }
      ],
      "conclusions": [
        {
          "kind": "length-ratio",
          "groups": [
            [
              "V1",
              "V3"
            ],
            [
              "V2",
              "V3"
            ]
          ],
          "value": 0.7071067811865476
        }
      ]
    },
    {
      "id": "trig.sin60",
      "category": "substrate-related",
      "family": "Trigonometric Functions",
      "statement": "sin 60° = √3/2: opposite over hypotenuse for a 60-degree angle.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "right-triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ]
          ],
          "value": 90
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ]
          ],
          "value": 60
        }
      ],
      "conclusions": [
        {
          "kind": "length-ratio",
          "groups": [
            [
              "V1",
              "V3"
            ],
            [
              "V2",
              "V3"
            ]
          ],
          "value": 0.8660254037844386
        }
      ]
    },
    {
      "id": "trig.cos30",
      "category": "substrate-related",
      "family": "Trigonometric Functions",
      "statement": "cos 30° = √3/2: adjacent over hypotenuse for a 30-degree angle.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "right-triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ]
          ],
          "value": 90
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ]
          ],
          "value": 30
        }
      ],
      "conclusions": [
        {
          "kind": "length-ratio",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V2",
              "V3"
            ]
          ],
          "value": 0.8660254037844386
        }
      ]
    },
    {
      "id": "trig.cos45",
      "category": "substrate-related",
      "family": "Trigonometric Functions",
      "statement": "cos 45° = √2/2: adjacent over hypotenuse for a 45-degree angle.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "right-triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ]
          ],
          "value": 90
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ]
          ],
          "value": 45
        }
      ],
      "conclusions": [
        {
          "kind": "length-ratio",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V2",
              "V3"
            ]
          ],
          "value": 0.7071067811865476
        }
      ]
    },
    {
      "id": "trig.cos60",
      "category": "substrate-related",
      "family": "Trigonometric Functions",
      "statement": "cos 60° = 1/2: adjacent over hypotenuse for a 60-degree angle.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "right-triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ]
          ],
          "value": 90
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ]
          ],
          "value": 60
        }
      ],
      "conclusions": [
        {
          "kind": "length-ratio",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V2",
              "V3"
            ]
          ],
          "value": 0.5
        }
      ]
    },
    {
      "id": "trig.tan30",
      "category": "substrate-related",
      "family": "Trigonometric Functions",
      "statement": "tan 30° = √3/3: opposite over adjacent for a 30-degree angle.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "right-triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ]
          ],
          "value": 90
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ]
          ],
          "value": 30
        }
      ],
      "conclusions": [
        {
          "kind": "length-ratio",
          "groups": [
            [
              "V1",
              "V3"
            ],
            [
              "V1",
              "V2"
            ]
          ],
          "value": 0.5773502691896257
        }
      ]
    },
    {
      "id": "trig.tan45",
      "category": "substrate-related",
      "family": "Trigonometric Functions",
      "statement": "tan 45° = 1: opposite over adjacent for a 45-degree angle.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "right-triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ]
          ],
          "value": 90
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ]
          ],
          "value": 45
        }
      ],
      "conclusions": [
        {
          "kind": "length-ratio",
          "groups": [
            [
              "V1",
              "V3"
            ],
            [
              "V1",
              "V2"
            ]
          ],
          "value": 1.0
        }
      ]
    },
    {
      "id": "trig.tan60",
      "category": "substrate-related",
      "family": "Trigonometric Functions",
      "statement": "tan 60° = √3: opposite over adjacent for a 60-degree angle.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "right-triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ]
          ],
          "value": 90
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ]
          ],
          "value": 60
        }
      ],
      "conclusions": [
        {
          "kind": "length-ratio",
          "groups": [
            [
              "V1",
              "V3"
            ],
            [
              "V1",
              "V2"
            ]
          ],
          "value": 1.7320508075688772
        }
      ]
    },
    {
      "id": "trig.sin90",
      "category": "substrate-related",
      "family": "Trigonometric Functions",
      "statement": "sin 90° = 1: the sine of a right angle is one.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "right-triangle"
        }
      ],
      "conclusions": []
    },
    {
      "id": "trig.cos90",
      "category": "substrate-related",
      "family": "Trigonometric Functions",
      "statement": "cos 90° = 0: the cosine of a right angle is zero.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "right-triangle"
        }
      ],
      "conclusions": []
    },
    {
      "id": "para.opposite_sides_equal",
      "category": "substrate-related",
      "family": "Parallelogram",
      "statement": "Opposite sides of a parallelogram are equal.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "parallelogram"
        }
      ],
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V4",
              "V3"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "V1",
              "V4"
            ]
          ]
        }
      ]
    },
    {
      "id": "para.opposite_sides_parallel",
      "category": "substrate-related",
      "family": "Parallelogram",
      "statement": "Both pairs of opposite sides of a parallelogram are parallel.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "parallelogram"
        }
      ],
      "conclusions": [
        {
          "kind": "parallel",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V4",
              "V3"
            ]
          ]
        },
        {
          "kind": "parallel",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "V1",
              "V4"
            ]
          ]
        }
      ]
    },
    {
      "id": "para.diagonals_bisect",
      "category": "substrate-related",
      "family": "Parallelogram",
      "statement": "The diagonals of a parallelogram bisect each other.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "parallelogram"
        }
      ],
      "conclusions": [
        {
          "kind": "points-coincide",
          "groups": [
            [
              "mid(V1,V3)"
            ],
            [
              "mid(V2,V4)"
            ]
          ]
        }
      ]
    },
    {
      "id": "para.area_base_height",
      "category": "substrate-related",
      "family": "Parallelogram",
      "statement": "The area of a parallelogram equals base times height.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "parallelogram"
        }
      ],
      "conclusions": [
        {
          "kind": "area-base-height",
          "groups": [
            [
              "V1",
              "V2",
              "V3",
              "V4"
            ],
            [
              "V1",
              "V2"
            ],
            [
              "V4"
            ]
          ]
        }
      ]
    },
    {
      "id": "para.crit_opposite_sides",
      "category": "substrate-related",
      "family": "Parallelogram",
      "statement": "A quadrilateral whose opposite sides are pairwise equal is a parallelogram.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "quadrilateral"
        }
      ],
      "hypotheses": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V4",
              "V3"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "V1",
              "V4"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "parallel",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V4",
              "V3"
            ]
          ]
        },
        {
          "kind": "parallel",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "V1",
              "V4"
            ]
          ]
        }
      ]
    },
    {
      "id": "para.crit_parallel_sides",
      "category": "substrate-related",
      "family": "Parallelogram",
      "statement": "A quadrilateral whose opposite sides are pairwise parallel has equal opposite sides.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "quadrilateral"
        }
      ],
      "hypotheses": [
        {
          "kind": "parallel",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V4",
              "V3"
            ]
          ]
        },
        {
          "kind": "parallel",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "V1",
              "V4"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V4",
              "V3"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "V1",
              "V4"
            ]
          ]
        }
      ]
    },
    {
      "id": "para.crit_diagonals_bisect",
      "category": "substrate-related",
      "family": "Parallelogram",
      "statement": "A quadrilateral whose diagonals bisect each other is a parallelogram.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "quadrilateral"
        }
      ],
      "hypotheses": [
        {
          "kind": "points-coincide",
          "groups": [
            [
              "mid(V1,V3)"
            ],
            [
              "mid(V2,V4)"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "parallel",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V4",
              "V3"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V4",
              "V3"
            ]
          ]
        }
      ]
    },
    {
      "id": "rect.all_angles_90",
      "category": "substrate-related",
      "family": "Rectangle",
      "statement": "Every angle of a rectangle is 90 degrees.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "rectangle"
        }
      ],
      "conclusions": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V4",
              "V1",
              "V2"
            ]
          ],
          "value": 90
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ]
          ],
          "value": 90
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V3",
              "V4"
            ]
          ],
          "value": 90
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V3",
              "V4",
              "V1"
            ]
          ],
          "value": 90
        }
      ]
    },
    {
      "id": "rect.diagonals_equal",
      "category": "substrate-related",
      "family": "Rectangle",
      "statement": "The diagonals of a rectangle are equal.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "rectangle"
        }
      ],
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V3"
            ],
            [
              "V2",
              "V4"
            ]
          ]
        }
      ]
    },
    {
      "id": "rect.area_product",
      "category": "substrate-related",
      "family": "Rectangle",
      "statement": "The area of a rectangle is the product of two adjacent sides.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "rectangle"
        }
      ],
      "conclusions": [
        {
          "kind": "area-product",
          "groups": [
            [
              "V1",
              "V2",
              "V3",
              "V4"
            ],
            [
              "V1",
              "V2"
            ],
            [
              "V2",
              "V3"
            ]
          ],
          "value": 1.0
        }
      ]
    },
    {
      "id": "rect.crit_parallelogram_right",
      "category": "substrate-related",
      "family": "Rectangle",
      "statement": "A parallelogram with one right angle is a rectangle: all angles are right and the diagonals are equal.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "parallelogram"
        }
      ],
      "hypotheses": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V4",
              "V1",
              "V2"
            ]
          ],
          "value": 90
        }
      ],
      "conclusions": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ]
          ],
          "value": 90
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V3"
            ],
            [
              "V2",
              "V4"
            ]
          ]
        }
      ]
    },
    {
      "id": "rect.crit_three_right",
      "category": "substrate-related",
      "family": "Rectangle",
      "statement": "A quadrilateral with three right angles has a right fourth angle.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "quadrilateral"
        }
      ],
      "hypotheses": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V4",
              "V1",
              "V2"
            ]
          ],
          "value": 90
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ]
          ],
          "value": 90
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V3",
              "V4"
            ]
          ],
          "value": 90
        }
      ],
      "conclusions": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V3",
              "V4",
              "V1"
            ]
          ],
          "value": 90
        }
      ]
    },
    {
      "id": "rhom.all_sides_equal",
      "category": "substrate-related",
      "family": "Rhombus",
      "statement": "All sides of a rhombus are equal.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "rhombus"
        }
      ],
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V2",
              "V3"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "V3",
              "V4"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V3",
              "V4"
            ],
            [
              "V4",
              "V1"
            ]
          ]
        }
      ]
    },
    {
      "id": "rhom.diagonals_perpendicular",
      "category": "substrate-related",
      "family": "Rhombus",
      "statement": "The diagonals of a rhombus are perpendicular.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "rhombus"
        }
      ],
      "conclusions": [
        {
          "kind": "perpendicular",
          "groups": [
            [
              "V1",
              "V3"
            ],
            [
              "V2",
              "V4"
            ]
          ]
        }
      ]
    },
    {
      "id": "rhom.crit_adjacent_equal",
      "category": "substrate-related",
      "family": "Rhombus",
      "statement": "A parallelogram with two equal adjacent sides is a rhombus.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "parallelogram"
        }
      ],
      "hypotheses": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V2",
              "V3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V3",
              "V4"
            ],
            [
              "V4",
              "V1"
            ]
          ]
        },
        {
          "kind": "perpendicular",
          "groups": [
            [
              "V1",
              "V3"
            ],
            [
              "V2",
              "V4"
            ]
          ]
        }
      ]
    },
    {
      "id": "rhom.crit_four_sides",
      "category": "substrate-related",
      "family": "Rhombus",
      "statement": "A quadrilateral with four equal sides is a rhombus: opposite sides are parallel and the diagonals are perpendicular.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "quadrilateral"
        }
      ],
      "hypotheses": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V2",
              "V3"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "V3",
              "V4"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V3",
              "V4"
            ],
            [
              "V4",
              "V1"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "parallel",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V4",
              "V3"
            ]
          ]
        },
        {
          "kind": "perpendicular",
          "groups": [
            [
              "V1",
              "V3"
            ],
            [
              "V2",
              "V4"
            ]
          ]
        }
      ]
    },
    {
      "id": "square.sides_and_angles",
      "category": "substrate-related",
      "family": "Square",
      "statement": "All sides of a square are equal and all its angles are right.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "square"
        }
      ],
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V2",
              "V3"
            ]
          ]
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V4",
              "V1",
              "V2"
            ]
          ],
          "value": 90
        }
      ]
    },
    {
      "id": "square.diagonals",
      "category": "substrate-related",
      "family": "Square",
      "statement": "The diagonals of a square are equal and perpendicular.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "square"
        }
      ],
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V3"
            ],
            [
              "V2",
              "V4"
            ]
          ]
        },
        {
          "kind": "perpendicular",
          "groups": [
            [
              "V1",
              "V3"
            ],
            [
              "V2",
              "V4"
            ]
          ]
        }
      ]
    },
    {
      "id": "square.diagonal_ratio",
      "category": "substrate-related",
      "family": "Square",
      "statement": "The diagonal of a square is √2 times its side.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "square"
        }
      ],
      "conclusions": [
        {
          "kind": "length-ratio",
          "groups": [
            [
              "V1",
              "V3"
            ],
            [
              "V1",
              "V2"
            ]
          ],
          "value": 1.4142135623730951
        }
      ]
    },
    {
      "id": "square.crit_rect_rhombus",
      "category": "substrate-related",
      "family": "Square",
      "statement": "A quadrilateral that is both a rectangle and a rhombus is a square.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "quadrilateral"
        }
      ],
      "hypotheses": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V2",
              "V3"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "V3",
              "V4"
            ]
          ]
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V4",
              "V1",
              "V2"
            ]
          ],
          "value": 90
        }
      ],
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V3"
            ],
            [
              "V2",
              "V4"
            ]
          ]
        },
        {
          "kind": "perpendicular",
          "groups": [
            [
              "V1",
              "V3"
            ],
            [
              "V2",
              "V4"
            ]
          ]
        }
      ]
    },
    {
      "id": "trap.parallel_bases",
      "category": "substrate-related",
      "family": "Trapezoid",
      "statement": "A trapezoid has one pair of parallel sides.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "trapezoid"
        }
      ],
      "hypotheses": [
        {
          "kind": "parallel",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V4",
              "V3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "parallel",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V4",
              "V3"
            ]
          ]
        }
      ]
    },
    {
      "id": "trap.leg_cointerior",
      "category": "substrate-related",
      "family": "Trapezoid",
      "statement": "The interior angles of a trapezoid along each leg are supplementary.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "trapezoid"
        }
      ],
      "hypotheses": [
        {
          "kind": "parallel",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V4",
              "V3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "angle-sum",
          "groups": [
            [
              "V4",
              "V1",
              "V2"
            ],
            [
              "V1",
              "V4",
              "V3"
            ]
          ],
          "value": 180
        }
      ]
    },
    {
      "id": "itrap.legs_equal",
      "category": "substrate-related",
      "family": "Isosceles Trapezoid",
      "statement": "The legs of an isosceles trapezoid are equal.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "isosceles-trapezoid"
        }
      ],
      "hypotheses": [
        {
          "kind": "parallel",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V4",
              "V3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V4"
            ],
            [
              "V2",
              "V3"
            ]
          ]
        }
      ]
    },
    {
      "id": "itrap.base_angles_equal",
      "category": "substrate-related",
      "family": "Isosceles Trapezoid",
      "statement": "Base angles on the same base of an isosceles trapezoid are equal.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "isosceles-trapezoid"
        }
      ],
      "hypotheses": [
        {
          "kind": "parallel",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V4",
              "V3"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V4"
            ],
            [
              "V2",
              "V3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "angles-equal",
          "groups": [
            [
              "V4",
              "V1",
              "V2"
            ],
            [
              "V1",
              "V2",
              "V3"
            ]
          ]
        },
        {
          "kind": "angles-equal",
          "groups": [
            [
              "V2",
              "V3",
              "V4"
            ],
            [
              "V3",
              "V4",
              "V1"
            ]
          ]
        }
      ]
    },
    {
      "id": "itrap.crit_equal_legs",
      "category": "substrate-related",
      "family": "Isosceles Trapezoid",
      "statement": "A trapezoid with equal legs has equal base angles.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "trapezoid"
        }
      ],
      "hypotheses": [
        {
          "kind": "parallel",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V4",
              "V3"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V4"
            ],
            [
              "V2",
              "V3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "angles-equal",
          "groups": [
            [
              "V4",
              "V1",
              "V2"
            ],
            [
              "V1",
              "V2",
              "V3"
            ]
          ]
        }
      ]
    },
    {
      "id": "itrap.crit_base_angles",
      "category": "substrate-related",
      "family": "Isosceles Trapezoid",
      "statement": "A trapezoid with equal base angles has equal legs.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "trapezoid"
        }
      ],
      "hypotheses": [
        {
          "kind": "parallel",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V4",
              "V3"
            ]
          ]
        },
        {
          "kind": "angles-equal",
          "groups": [
            [
              "V4",
              "V1",
              "V2"
            ],
            [
              "V1",
              "V2",
              "V3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V1",
              "V4"
            ],
            [
              "V2",
              "V3"
            ]
          ]
        }
      ]
    },
    {
      "id": "quad.angle_sum",
      "category": "substrate-related",
      "family": "Quadrilaterals",
      "statement": "The interior angles of a quadrilateral sum to 360 degrees.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "quadrilateral"
        }
      ],
      "conclusions": [
        {
          "kind": "angle-sum",
          "groups": [
            [
              "V4",
              "V1",
              "V2"
            ],
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "V2",
              "V3",
              "V4"
            ],
            [
              "V3",
              "V4",
              "V1"
            ]
          ],
          "value": 360
        }
      ]
    },
    {
      "id": "circle.radii_equal",
      "category": "substrate-related",
      "family": "Circle",
      "statement": "All points of a circle are equidistant from its center.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "circle"
        }
      ],
      "conclusions": [
        {
          "kind": "equidistant",
          "groups": [
            [
              "V1"
            ],
            [
              "V2"
            ],
            [
              "V3"
            ]
          ]
        }
      ]
    },
    {
      "id": "circle.diameter_twice_radius",
      "category": "substrate-related",
      "family": "Circle",
      "statement": "A diameter of a circle is twice the radius.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "circle"
        }
      ],
      "hypotheses": [
        {
          "kind": "collinear",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ]
          ]
        },
        {
          "kind": "equidistant",
          "groups": [
            [
              "V1"
            ],
            [
              "V2"
            ],
            [
              "V3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "length-ratio",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "V1",
              "V2"
            ]
          ],
          "value": 2.0
        }
      ]
    },
    {
      "id": "circle.chord_bisector_center",
      "category": "substrate-related",
      "family": "Circle",
      "statement": "The perpendicular bisector of a chord passes through the center.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "circle"
        },
        {
          "pred": "has-role",
          "arg": "perpendicular-bisector"
        }
      ],
      "hypotheses": [
        {
          "kind": "equidistant",
          "groups": [
            [
              "V1"
            ],
            [
              "A1"
            ],
            [
              "A2"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "collinear",
          "groups": [
            [
              "E1",
              "E2",
              "V1"
            ]
          ]
        }
      ]
    },
    {
      "id": "circle.chord_perpendicular_bisector",
      "category": "substrate-related",
      "family": "Circle",
      "statement": "The perpendicular bisector of a chord is perpendicular to the chord.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "circle"
        },
        {
          "pred": "has-role",
          "arg": "perpendicular-bisector"
        }
      ],
      "hypotheses": [
        {
          "kind": "equidistant",
          "groups": [
            [
              "V1"
            ],
            [
              "A1"
            ],
            [
              "A2"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "perpendicular",
          "groups": [
            [
              "E1",
              "E2"
            ],
            [
              "A1",
              "A2"
            ]
          ]
        }
      ]
    },
    {
      "id": "central.equal_angles_equal_chords",
      "category": "substrate-related",
      "family": "Central Angle",
      "statement": "Equal central angles of a circle subtend equal chords.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "circle"
        },
        {
          "pred": "has-role",
          "arg": "chord"
        },
        {
          "pred": "has-role",
          "arg": "chord"
        }
      ],
      "binds": {
        "A1": "B1"
      },
      "hypotheses": [
        {
          "kind": "angles-equal",
          "groups": [
            [
              "E1",
              "A1",
              "E2"
            ],
            [
              "F1",
              "B1",
              "F2"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "E1",
              "E2"
            ],
            [
              "F1",
              "F2"
            ]
          ]
        }
      ]
    },
    {
      "id": "central.angle_at_center",
      "category": "substrate-related",
      "family": "Central Angle",
      "statement": "A central angle measures the arc it subtends.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "circle-with-central-angle"
        }
      ],
      "conclusions": []
    },
    {
      "id": "inscribed.half_central",
      "category": "substrate-related",
      "family": "Inscribed Angle",
      "statement": "An inscribed angle is half the central angle subtending the same arc.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "circle-with-inscribed-triangle"
        }
      ],
      "conclusions": [
        {
          "kind": "inscribed-central",
          "groups": [
            [
              "V4"
            ],
            [
              "V2",
              "V3"
            ],
            [
              "V1"
            ]
          ]
        }
      ]
    },
    {
      "id": "inscribed.same_arc_equal",
      "category": "substrate-related",
      "family": "Inscribed Angle",
      "statement": "Inscribed angles subtending the same arc are equal.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "cyclic-quadrilateral"
        }
      ],
      "conclusions": [
        {
          "kind": "angles-equal",
          "groups": [
            [
              "V2",
              "V4",
              "V3"
            ],
            [
              "V2",
              "V5",
              "V3"
            ]
          ]
        }
      ]
    },
    {
      "id": "inscribed.diameter_right_angle",
      "category": "substrate-related",
      "family": "Inscribed Angle",
      "statement": "An angle inscribed in a semicircle (subtending a diameter) is a right angle.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "semicircle"
        }
      ],
      "hypotheses": [
        {
          "kind": "collinear",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ]
          ]
        },
        {
          "kind": "equidistant",
          "groups": [
            [
              "V1"
            ],
            [
              "V2"
            ],
            [
              "V3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V2",
              "V4",
              "V3"
            ]
          ],
          "value": 90
        }
      ]
    },
    {
      "id": "cyclic.opposite_supplementary",
      "category": "substrate-related",
      "family": "Cyclic Quadrilateral",
      "statement": "Opposite angles of a cyclic quadrilateral are supplementary.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "cyclic-quadrilateral"
        }
      ],
      "conclusions": [
        {
          "kind": "angle-sum",
          "groups": [
            [
              "V5",
              "V2",
              "V3"
            ],
            [
              "V3",
              "V4",
              "V5"
            ]
          ],
          "value": 180
        },
        {
          "kind": "angle-sum",
          "groups": [
            [
              "V2",
              "V3",
              "V4"
            ],
            [
              "V4",
              "V5",
              "V2"
            ]
          ],
          "value": 180
        }
      ]
    },
    {
      "id": "regular.pentagon_interior",
      "category": "substrate-related",
      "family": "Regular Polygon",
      "statement": "Each interior angle of a regular pentagon is 108 degrees.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "regular-pentagon"
        }
      ],
      "conclusions": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V5",
              "V1",
              "V2"
            ]
          ],
          "value": 108
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ]
          ],
          "value": 108
        }
      ]
    },
    {
      "id": "regular.hexagon_interior",
      "category": "substrate-related",
      "family": "Regular Polygon",
      "statement": "Each interior angle of a regular hexagon is 120 degrees.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "regular-hexagon"
        }
      ],
      "conclusions": [
        {
          "kind": "angle-value",
          "groups": [
            [
              "V6",
              "V1",
              "V2"
            ]
          ],
          "value": 120
        },
        {
          "kind": "angle-value",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ]
          ],
          "value": 120
        }
      ]
    },
    {
      "id": "regular.hexagon_long_diagonal",
      "category": "substrate-related",
      "family": "Regular Polygon",
      "statement": "The long diagonal of a regular hexagon is twice its side.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "regular-hexagon"
        }
      ],
      "conclusions": [
        {
          "kind": "length-ratio",
          "groups": [
            [
              "V1",
              "V4"
            ],
            [
              "V1",
              "V2"
            ]
          ],
          "value": 2.0
        }
      ]
    },
    {
      "id": "regular.inscribed_equilateral",
      "category": "substrate-related",
      "family": "Regular Polygon",
      "statement": "An equilateral triangle inscribed in a circle of radius R has side R·√3.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "circle-with-inscribed-triangle"
        }
      ],
      "hypotheses": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "V3",
              "V4"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V3",
              "V4"
            ],
            [
              "V4",
              "V2"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "length-ratio",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "V1",
              "V2"
            ]
          ],
          "value": 1.7320508075688772
        }
      ]
    },
    {
      "id": "regular.inscribed_square",
      "category": "substrate-related",
      "family": "Regular Polygon",
      "statement": "A square inscribed in a circle of radius R has side R·√2.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "cyclic-quadrilateral"
        }
      ],
      "hypotheses": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "V3",
              "V4"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V3",
              "V4"
            ],
            [
              "V4",
              "V5"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "V4",
              "V5"
            ],
            [
              "V5",
              "V2"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "length-ratio",
          "groups": [
            [
              "V2",
              "V3"
            ],
            [
              "V1",
              "V2"
            ]
          ],
          "value": 1.4142135623730951
        }
      ]
    },
    {
      "id": "parallel.corresponding_equal",
      "category": "line-element-related",
      "family": "Parallel Lines",
      "statement": "When a transversal cuts parallel lines, corresponding angles are equal.",
      "preconditions": [
        {
          "pred": "relation",
          "arg": "parallel"
        }
      ],
      "conclusions": [],
      "role_hint": "parallel-auxiliary"
    },
    {
      "id": "parallel.alternate_equal",
      "category": "line-element-related",
      "family": "Parallel Lines",
      "statement": "When a transversal cuts parallel lines, alternate interior angles are equal.",
      "preconditions": [
        {
          "pred": "relation",
          "arg": "parallel"
        }
      ],
      "conclusions": [],
      "role_hint": "parallel-auxiliary"
    },
    {
      "id": "parallel.cointerior_supplementary",
      "category": "line-element-related",
      "family": "Parallel Lines",
      "statement": "When a transversal cuts parallel lines, consecutive interior angles are supplementary.",
      "preconditions": [
        {
          "pred": "relation",
          "arg": "parallel"
        }
      ],
      "conclusions": [],
      "role_hint": "parallel-auxiliary"
    },
    {
      "id": "parallel.crit_corresponding",
      "category": "line-element-related",
      "family": "Parallel Lines",
      "statement": "Lines cut by a transversal with equal corresponding angles are parallel.",
      "preconditions": [
        {
          "pred": "relation",
          "arg": "parallel"
        }
      ],
      "conclusions": [],
      "role_hint": "parallel-auxiliary"
    },
    {
      "id": "parallel.crit_alternate",
      "category": "line-element-related",
      "family": "Parallel Lines",
      "statement": "Lines cut by a transversal with equal alternate interior angles are parallel.",
      "preconditions": [
        {
          "pred": "relation",
          "arg": "parallel"
        }
      ],
      "conclusions": [],
      "role_hint": "parallel-auxiliary"
    },
    {
      "id": "parallel.crit_cointerior",
      "category": "line-element-related",
      "family": "Parallel Lines",
      "statement": "Lines cut by a transversal with supplementary consecutive interior angles are parallel.",
      "preconditions": [
        {
          "pred": "relation",
          "arg": "parallel"
        }
      ],
      "conclusions": [],
      "role_hint": "parallel-auxiliary"
    },
    {
      "id": "parallel.to_same_line",
      "category": "line-element-related",
      "family": "Parallel Lines",
      "statement": "Two lines parallel to the same line are parallel to each other.",
      "preconditions": [
        {
          "pred": "relation",
          "arg": "parallel"
        }
      ],
      "conclusions": [],
      "role_hint": "parallel-auxiliary"
    },
    {
      "id": "parallel.aux_parallel",
      "category": "line-element-related",
      "family": "Parallel Lines",
      "statement": "An auxiliary line drawn through a point parallel to a reference segment is parallel to it.",
      "preconditions": [
        {
          "pred": "has-role",
          "arg": "parallel-auxiliary"
        }
      ],
      "conclusions": [
        {
          "kind": "parallel",
          "groups": [
            [
              "E1",
              "E2"
            ],
            [
              "A2",
              "A3"
            ]
          ]
        }
      ],
      "role_hint": "parallel-auxiliary"
    },
    {
      "id": "parallel.alternate_via_diagonal",
      "category": "line-element-related",
      "family": "Parallel Lines",
      "statement": "A diagonal between two parallel sides forms equal alternate interior angles.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "trapezoid"
        },
        {
          "pred": "has-role",
          "arg": "diagonal"
        }
      ],
      "binds": {
        "pair:E": "V1,V3"
      },
      "hypotheses": [
        {
          "kind": "parallel",
          "groups": [
            [
              "V1",
              "V2"
            ],
            [
              "V4",
              "V3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "angles-equal",
          "groups": [
            [
              "V2",
              "V1",
              "V3"
            ],
            [
              "V1",
              "V3",
              "V4"
            ]
          ]
        }
      ],
      "role_hint": "diagonal"
    },
    {
      "id": "bisector.splits_equally",
      "category": "line-element-related",
      "family": "Angle Bisector",
      "statement": "An angle bisector divides its angle into two equal parts.",
      "preconditions": [
        {
          "pred": "has-role",
          "arg": "angle-bisector"
        }
      ],
      "conclusions": [
        {
          "kind": "angles-equal",
          "groups": [
            [
              "A2",
              "E1",
              "E2"
            ],
            [
              "E2",
              "E1",
              "A3"
            ]
          ]
        }
      ],
      "role_hint": "angle-bisector"
    },
    {
      "id": "bisector.equidistant_sides",
      "category": "line-element-related",
      "family": "Angle Bisector",
      "statement": "Points on an angle bisector are equidistant from the two sides of the angle.",
      "preconditions": [
        {
          "pred": "has-role",
          "arg": "angle-bisector"
        }
      ],
      "conclusions": [
        {
          "kind": "equidistant-from-lines",
          "groups": [
            [
              "E2"
            ],
            [
              "A1",
              "A2"
            ],
            [
              "A1",
              "A3"
            ]
          ]
        }
      ],
      "role_hint": "angle-bisector"
    },
    {
      "id": "bisector.side_ratio",
      "category": "line-element-related",
      "family": "Angle Bisector",
      "statement": "The bisector from a triangle's vertex divides the opposite side in the ratio of the adjacent sides.",
      "preconditions": [
        {
          "pred": "has-role",
          "arg": "angle-bisector"
        }
      ],
      "hypotheses": [
        {
          "kind": "collinear",
          "groups": [
            [
              "A2",
              "E2",
              "A3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "ratios-equal",
          "groups": [
            [
              "A2",
              "E2"
            ],
            [
              "E2",
              "A3"
            ],
            [
              "A1",
              "A2"
            ],
            [
              "A1",
              "A3"
            ]
          ]
        }
      ],
      "role_hint": "angle-bisector"
    },
    {
      "id": "perp_bisector.at_midpoint",
      "category": "line-element-related",
      "family": "Perpendicular Bisector",
      "statement": "A perpendicular bisector meets its segment at the midpoint, at a right angle.",
      "preconditions": [
        {
          "pred": "has-role",
          "arg": "perpendicular-bisector"
        }
      ],
      "conclusions": [
        {
          "kind": "perpendicular",
          "groups": [
            [
              "E1",
              "E2"
            ],
            [
              "A1",
              "A2"
            ]
          ]
        },
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "E1",
              "A1"
            ],
            [
              "E1",
              "A2"
            ]
          ]
        }
      ],
      "role_hint": "perpendicular-bisector"
    },
    {
      "id": "perp_bisector.equidistant",
      "category": "line-element-related",
      "family": "Perpendicular Bisector",
      "statement": "Points on the perpendicular bisector of a segment are equidistant from its endpoints.",
      "preconditions": [
        {
          "pred": "has-role",
          "arg": "perpendicular-bisector"
        }
      ],
      "conclusions": [
        {
          "kind": "equidistant",
          "groups": [
            [
              "E2"
            ],
            [
              "A1"
            ],
            [
              "A2"
            ]
          ]
        }
      ],
      "role_hint": "perpendicular-bisector"
    },
    {
      "id": "midline.parallel_to_base",
      "category": "line-element-related",
      "family": "Triangle Midline",
      "statement": "A triangle's midline is parallel to the third side.",
      "preconditions": [
        {
          "pred": "has-role",
          "arg": "midline"
        }
      ],
      "hypotheses": [
        {
          "kind": "points-coincide",
          "groups": [
            [
              "E1"
            ],
            [
              "mid(A1,A2)"
            ]
          ]
        },
        {
          "kind": "points-coincide",
          "groups": [
            [
              "E2"
            ],
            [
              "mid(A1,A3)"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "parallel",
          "groups": [
            [
              "E1",
              "E2"
            ],
            [
              "A2",
              "A3"
            ]
          ]
        }
      ],
      "role_hint": "midline"
    },
    {
      "id": "midline.half_length",
      "category": "line-element-related",
      "family": "Triangle Midline",
      "statement": "A triangle's midline is half the length of the third side.",
      "preconditions": [
        {
          "pred": "has-role",
          "arg": "midline"
        }
      ],
      "hypotheses": [
        {
          "kind": "points-coincide",
          "groups": [
            [
              "E1"
            ],
            [
              "mid(A1,A2)"
            ]
          ]
        },
        {
          "kind": "points-coincide",
          "groups": [
            [
              "E2"
            ],
            [
              "mid(A1,A3)"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "length-ratio",
          "groups": [
            [
              "E1",
              "E2"
            ],
            [
              "A2",
              "A3"
            ]
          ],
          "value": 0.5
        }
      ],
      "role_hint": "midline"
    },
    {
      "id": "midline.crit_midpoints",
      "category": "line-element-related",
      "family": "Triangle Midline",
      "statement": "The segment connecting the midpoints of two sides of a triangle is its midline.",
      "preconditions": [
        {
          "pred": "has-role",
          "arg": "midline"
        }
      ],
      "conclusions": [],
      "role_hint": "midline"
    },
    {
      "id": "midline.trapezoid_midsegment",
      "category": "line-element-related",
      "family": "Triangle Midline",
      "statement": "The midsegment of a trapezoid is parallel to the bases and equals their average length.",
      "preconditions": [
        {
          "pred": "has-role",
          "arg": "midline"
        }
      ],
      "hypotheses": [
        {
          "kind": "points-coincide",
          "groups": [
            [
              "E1"
            ],
            [
              "mid(A1,A4)"
            ]
          ]
        },
        {
          "kind": "points-coincide",
          "groups": [
            [
              "E2"
            ],
            [
              "mid(A2,A3)"
            ]
          ]
        },
        {
          "kind": "parallel",
          "groups": [
            [
              "A1",
              "A2"
            ],
            [
              "A4",
              "A3"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "parallel",
          "groups": [
            [
              "E1",
              "E2"
            ],
            [
              "A1",
              "A2"
            ]
          ]
        },
        {
          "kind": "length-average",
          "groups": [
            [
              "E1",
              "E2"
            ],
            [
              "A1",
              "A2"
            ],
            [
              "A4",
              "A3"
            ]
          ]
        }
      ],
      "role_hint": "midline"
    },
    {
      "id": "tangent.perpendicular_radius",
      "category": "line-element-related",
      "family": "Tangent",
      "statement": "A tangent is perpendicular to the radius at the point of contact.",
      "preconditions": [
        {
          "pred": "has-role",
          "arg": "tangent"
        }
      ],
      "conclusions": [
        {
          "kind": "perpendicular",
          "groups": [
            [
              "E1",
              "E2"
            ],
            [
              "A1",
              "E2"
            ]
          ]
        }
      ],
      "role_hint": "tangent"
    },
    {
      "id": "tangent.equal_from_external",
      "category": "line-element-related",
      "family": "Tangent",
      "statement": "Tangent segments from an external point to a circle are equal.",
      "preconditions": [
        {
          "pred": "has-role",
          "arg": "tangent"
        },
        {
          "pred": "has-role",
          "arg": "tangent"
        }
      ],
      "binds": {
        "E1": "F1",
        "A1": "B1"
      },
      "conclusions": [
        {
          "kind": "equidistant",
          "groups": [
            [
              "E1"
            ],
            [
              "E2"
            ],
            [
              "F2"
            ]
          ]
        }
      ],
      "role_hint": "tangent"
    },
    {
      "id": "tangent.crit_perpendicular",
      "category": "line-element-related",
      "family": "Tangent",
      "statement": "A line through a point on a circle perpendicular to the radius there is a tangent.",
      "preconditions": [
        {
          "pred": "has-role",
          "arg": "tangent"
        }
      ],
      "conclusions": [],
      "role_hint": "tangent"
    },
    {
      "id": "median.bisects_side",
      "category": "line-element-related",
      "family": "Medians",
      "statement": "A median ends at the midpoint of the opposite side, splitting it into equal halves.",
      "preconditions": [
        {
          "pred": "has-role",
          "arg": "median"
        }
      ],
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "E2",
              "A2"
            ],
            [
              "E2",
              "A3"
            ]
          ]
        },
        {
          "kind": "length-ratio",
          "groups": [
            [
              "A2",
              "E2"
            ],
            [
              "A2",
              "A3"
            ]
          ],
          "value": 0.5
        }
      ],
      "role_hint": "median"
    },
    {
      "id": "median.equal_areas",
      "category": "line-element-related",
      "family": "Medians",
      "statement": "A median divides a triangle into two triangles of equal area.",
      "preconditions": [
        {
          "pred": "has-role",
          "arg": "median"
        }
      ],
      "conclusions": [
        {
          "kind": "areas-equal",
          "groups": [
            [
              "A1",
              "A2",
              "E2"
            ],
            [
              "A1",
              "E2",
              "A3"
            ]
          ]
        }
      ],
      "role_hint": "median"
    },
    {
      "id": "altitude.perpendicular",
      "category": "line-element-related",
      "family": "Altitudes",
      "statement": "An altitude is perpendicular to the side it meets.",
      "preconditions": [
        {
          "pred": "has-role",
          "arg": "altitude"
        }
      ],
      "conclusions": [
        {
          "kind": "perpendicular",
          "groups": [
            [
              "E1",
              "E2"
            ],
            [
              "A2",
              "A3"
            ]
          ]
        }
      ],
      "role_hint": "altitude"
    },
    {
      "id": "altitude.area_half_base",
      "category": "line-element-related",
      "family": "Altitudes",
      "statement": "A triangle's area is half the product of a side and the altitude to it.",
      "preconditions": [
        {
          "pred": "has-role",
          "arg": "altitude"
        }
      ],
      "conclusions": [
        {
          "kind": "area-product",
          "groups": [
            [
              "A1",
              "A2",
              "A3"
            ],
            [
              "A2",
              "A3"
            ],
            [
              "E1",
              "E2"
            ]
          ],
          "value": 0.5
        }
      ],
      "role_hint": "altitude"
    },
    {
      "id": "chord.endpoints_on_circle",
      "category": "line-element-related",
      "family": "Chords",
      "statement": "A chord's endpoints lie on the circle, equidistant from the center.",
      "preconditions": [
        {
          "pred": "has-role",
          "arg": "chord"
        }
      ],
      "conclusions": [
        {
          "kind": "equidistant",
          "groups": [
            [
              "A1"
            ],
            [
              "E1"
            ],
            [
              "E2"
            ]
          ]
        }
      ],
      "role_hint": "chord"
    },
    {
      "id": "chord.equal_chords_equal_central",
      "category": "line-element-related",
      "family": "Chords",
      "statement": "Equal chords of a circle subtend equal central angles.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "circle"
        },
        {
          "pred": "has-role",
          "arg": "chord"
        },
        {
          "pred": "has-role",
          "arg": "chord"
        }
      ],
      "binds": {
        "A1": "B1"
      },
      "hypotheses": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "E1",
              "E2"
            ],
            [
              "F1",
              "F2"
            ]
          ]
        }
      ],
      "conclusions": [
        {
          "kind": "angles-equal",
          "groups": [
            [
              "E1",
              "A1",
              "E2"
            ],
            [
              "F1",
              "B1",
              "F2"
            ]
          ]
        }
      ],
      "role_hint": "chord"
    },
    {
      "id": "radius.all_equal",
      "category": "line-element-related",
      "family": "Radii & Diameters",
      "statement": "All radii of a circle are equal.",
      "preconditions": [
        {
          "pred": "has-role",
          "arg": "radius"
        },
        {
          "pred": "has-role",
          "arg": "radius"
        }
      ],
      "binds": {
        "E1": "F1"
      },
      "conclusions": [
        {
          "kind": "lengths-equal",
          "groups": [
            [
              "E1",
              "E2"
            ],
            [
              "F1",
              "F2"
            ]
          ]
        }
      ],
      "role_hint": "radius"
    },
    {
      "id": "radius.isosceles_triangle",
      "category": "line-element-related",
      "family": "Radii & Diameters",
      "statement": "Two radii and the chord between their endpoints form an isosceles triangle.",
      "preconditions": [
        {
          "pred": "has-role",
          "arg": "radius"
        },
        {
          "pred": "has-role",
          "arg": "radius"
        }
      ],
      "binds": {
        "E1": "F1"
      },
      "conclusions": [
        {
          "kind": "angles-equal",
          "groups": [
            [
              "E1",
              "E2",
              "F2"
            ],
            [
              "E2",
              "F2",
              "E1"
            ]
          ]
        }
      ],
      "role_hint": "radius"
    },
    {
      "id": "diagonal.parallelogram_congruent",
      "category": "line-element-related",
      "family": "Diagonals",
      "statement": "A diagonal splits a parallelogram into two congruent triangles.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "parallelogram"
        },
        {
          "pred": "has-role",
          "arg": "diagonal"
        }
      ],
      "binds": {
        "pair:E": "V1,V3"
      },
      "conclusions": [
        {
          "kind": "congruent",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "V3",
              "V4",
              "V1"
            ]
          ]
        },
        {
          "kind": "areas-equal",
          "groups": [
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "V3",
              "V4",
              "V1"
            ]
          ]
        }
      ],
      "role_hint": "diagonal"
    },
    {
      "id": "diagonal.splits_quadrilateral",
      "category": "line-element-related",
      "family": "Diagonals",
      "statement": "A diagonal splits a quadrilateral into two triangles that cover it.",
      "preconditions": [
        {
          "pred": "has-substrate",
          "arg": "quadrilateral"
        },
        {
          "pred": "has-role",
          "arg": "diagonal"
        }
      ],
      "binds": {
        "pair:E": "V1,V3"
      },
      "conclusions": [
        {
          "kind": "area-sum",
          "groups": [
            [
              "V1",
              "V2",
              "V3",
              "V4"
            ],
            [
              "V1",
              "V2",
              "V3"
            ],
            [
              "V3",
              "V4",
              "V1"
            ]
          ]
        }
      ],
      "role_hint": "diagonal"
    }
  ],
  "substrates": [
    {
      "id": "sub.scalene_triangle",
      "kind": "scalene-triangle",
      "shape_class": "triangle",
      "generator": {
        "recipe": "scalene_triangle",
        "params": {
          "base_min": 10,
          "base_max": 22,
          "angle_min": 35,
          "angle_max": 75
        }
      },
      "description_templates": [
        "In triangle {V1}{V2}{V3}, side {V2}{V3} = {len:V2,V3}, ∠{V1}{V2}{V3} = {ang:V1,V2,V3} and ∠{V2}{V3}{V1} = {ang:V2,V3,V1}.",
        "Triangle {V1}{V2}{V3} has base {V2}{V3} = {len:V2,V3} with ∠{V1}{V2}{V3} = {ang:V1,V2,V3} and ∠{V2}{V3}{V1} = {ang:V2,V3,V1}."
      ],
      "associated_theorem_ids": [
        "tri.angle_sum",
        "tri.inequality"
      ]
    },
    {
      "id": "sub.isosceles_triangle",
      "kind": "isosceles-triangle",
      "shape_class": "triangle",
      "generator": {
        "recipe": "isosceles_triangle",
        "params": {
          "base_min": 8,
          "base_max": 20,
          "base_angle_min": 30,
          "base_angle_max": 75
        }
      },
      "description_templates": [
        "Triangle {V1}{V2}{V3} is isosceles with {V1}{V2} = {V1}{V3} and base {V2}{V3} = {len:V2,V3}; ∠{V1}{V2}{V3} = {ang:V1,V2,V3}.",
        "In isosceles triangle {V1}{V2}{V3}, legs {V1}{V2} and {V1}{V3} are equal, the base {V2}{V3} = {len:V2,V3}, and the base angle ∠{V1}{V2}{V3} = {ang:V1,V2,V3}."
      ],
      "associated_theorem_ids": [
        "tri.angle_sum",
        "tri.inequality",
        "isos.base_angles",
        "isos.crit_two_sides",
        "isos.crit_two_angles",
        "isos.apex_median_is_altitude",
        "isos.apex_altitude_bisects_base"
      ]
    },
    {
      "id": "sub.equilateral_triangle",
      "kind": "equilateral-triangle",
      "shape_class": "triangle",
      "generator": {
        "recipe": "equilateral_triangle",
        "params": {
          "side_min": 8,
          "side_max": 18
        }
      },
      "description_templates": [
        "Triangle {V1}{V2}{V3} is equilateral with side {V1}{V2} = {len:V1,V2}.",
        "In equilateral triangle {V1}{V2}{V3}, every side measures {len:V1,V2}."
      ],
      "associated_theorem_ids": [
        "tri.angle_sum",
        "tri.inequality",
        "equi.all_angles_60",
        "equi.crit_three_sides",
        "equi.altitude_ratio",
        "isos.base_angles"
      ]
    },
    {
      "id": "sub.right_triangle",
      "kind": "right-triangle",
      "shape_class": "triangle",
      "generator": {
        "recipe": "right_triangle",
        "params": {
          "leg_min": 6,
          "leg_max": 16,
          "special_angle_prob": 0.4
        }
      },
      "description_templates": [
        "In triangle {V1}{V2}{V3}, ∠{V2}{V1}{V3} = {ang:V2,V1,V3}, with legs {V1}{V2} = {len:V1,V2} and {V1}{V3} = {len:V1,V3}.",
        "Right triangle {V1}{V2}{V3} has its right angle at {V1}; the legs are {V1}{V2} = {len:V1,V2} and {V1}{V3} = {len:V1,V3}."
      ],
      "associated_theorem_ids": [
        "tri.angle_sum",
        "tri.inequality",
        "right.pythagorean",
        "right.acute_complementary",
        "right.area_half_legs",
        "right.thirty_half_hypotenuse",
        "right.hypotenuse_median",
        "trig.sin30",
        "trig.cos30",
        "trig.tan30",
        "trig.sin45",
        "trig.cos45",
        "trig.tan45",
        "trig.sin60",
        "trig.cos60",
        "trig.tan60"
      ]
    },
    {
      "id": "sub.right_isosceles_triangle",
      "kind": "right-isosceles-triangle",
      "shape_class": "triangle",
      "generator": {
        "recipe": "right_isosceles_triangle",
        "params": {
          "leg_min": 6,
          "leg_max": 16
        }
      },
      "description_templates": [
        "Triangle {V1}{V2}{V3} is right isosceles: ∠{V2}{V1}{V3} = {ang:V2,V1,V3} and {V1}{V2} = {V1}{V3} = {len:V1,V2}.",
        "In triangle {V1}{V2}{V3}, the right angle at {V1} is flanked by equal legs {V1}{V2} = {V1}{V3} = {len:V1,V2}."
      ],
      "associated_theorem_ids": [
        "tri.angle_sum",
        "tri.inequality",
        "isos.right_base_45",
        "right.pythagorean",
        "isos.base_angles",
        "trig.sin45",
        "trig.cos45",
        "trig.tan45"
      ]
    },
    {
      "id": "sub.quadrilateral",
      "kind": "quadrilateral",
      "shape_class": "quadrilateral",
      "generator": {
        "recipe": "convex_quadrilateral",
        "params": {
          "base_min": 12,
          "base_max": 22,
          "height_min": 8,
          "height_max": 16
        }
      },
      "description_templates": [
        "Quadrilateral {V1}{V2}{V3}{V4} has sides {V1}{V2} = {len:V1,V2}, {V2}{V3} = {len:V2,V3}, {V3}{V4} = {len:V3,V4} and {V4}{V1} = {len:V4,V1}.",
        "In convex quadrilateral {V1}{V2}{V3}{V4}, {V1}{V2} = {len:V1,V2} and ∠{V4}{V1}{V2} = {ang:V4,V1,V2}."
      ],
      "associated_theorem_ids": [
        "quad.angle_sum"
      ]
    },
    {
      "id": "sub.parallelogram",
      "kind": "parallelogram",
      "shape_class": "quadrilateral",
      "generator": {
        "recipe": "parallelogram",
        "params": {
          "base_min": 10,
          "base_max": 20,
          "side_min": 7,
          "side_max": 14,
          "angle_min": 45,
          "angle_max": 135
        }
      },
      "description_templates": [
        "In parallelogram {V1}{V2}{V3}{V4}, {V1}{V2} = {len:V1,V2}, {V2}{V3} = {len:V2,V3} and ∠{V4}{V1}{V2} = {ang:V4,V1,V2}.",
        "Parallelogram {V1}{V2}{V3}{V4} has base {V1}{V2} = {len:V1,V2}, side {V2}{V3} = {len:V2,V3}, and ∠{V4}{V1}{V2} = {ang:V4,V1,V2}."
      ],
      "associated_theorem_ids": [
        "para.opposite_sides_equal",
        "para.opposite_sides_parallel",
        "para.diagonals_bisect",
        "para.area_base_height",
        "quad.angle_sum"
      ]
    },
    {
      "id": "sub.rectangle",
      "kind": "rectangle",
      "shape_class": "quadrilateral",
      "generator": {
        "recipe": "rectangle",
        "params": {
          "base_min": 10,
          "base_max": 20,
          "side_min": 6,
          "side_max": 14
        }
      },
      "description_templates": [
        "Rectangle {V1}{V2}{V3}{V4} has {V1}{V2} = {len:V1,V2} and {V2}{V3} = {len:V2,V3}.",
        "In rectangle {V1}{V2}{V3}{V4}, the sides measure {V1}{V2} = {len:V1,V2} and {V2}{V3} = {len:V2,V3}."
      ],
      "associated_theorem_ids": [
        "rect.all_angles_90",
        "rect.diagonals_equal",
        "rect.area_product",
        "para.opposite_sides_equal",
        "quad.angle_sum"
      ]
    },
    {
      "id": "sub.rhombus",
      "kind": "rhombus",
      "shape_class": "quadrilateral",
      "generator": {
        "recipe": "rhombus",
        "params": {
          "side_min": 8,
          "side_max": 16,
          "angle_min": 45,
          "angle_max": 135
        }
      },
      "description_templates": [
        "Rhombus {V1}{V2}{V3}{V4} has side {V1}{V2} = {len:V1,V2} and ∠{V4}{V1}{V2} = {ang:V4,V1,V2}.",
        "In rhombus {V1}{V2}{V3}{V4}, every side measures {len:V1,V2} and ∠{V4}{V1}{V2} = {ang:V4,V1,V2}."
      ],
      "associated_theorem_ids": [
        "rhom.all_sides_equal",
        "rhom.diagonals_perpendicular",
        "para.opposite_sides_parallel",
        "quad.angle_sum"
      ]
    },
    {
      "id": "sub.square",
      "kind": "square",
      "shape_class": "quadrilateral",
      "generator": {
        "recipe": "square",
        "params": {
          "side_min": 8,
          "side_max": 16
        }
      },
      "description_templates": [
        "Square {V1}{V2}{V3}{V4} has side {V1}{V2} = {len:V1,V2}.",
        "In square {V1}{V2}{V3}{V4}, every side measures {len:V1,V2}."
      ],
      "associated_theorem_ids": [
        "square.sides_and_angles",
        "square.diagonals",
        "square.diagonal_ratio",
        "rect.all_angles_90",
        "quad.angle_sum"
      ]
    },
    {
      "id": "sub.trapezoid",
      "kind": "trapezoid",
      "shape_class": "quadrilateral",
      "generator": {
        "recipe": "trapezoid",
        "params": {
          "base_min": 14,
          "base_max": 24,
          "top_min": 6,
          "top_max": 11,
          "height_min": 7,
          "height_max": 13
        }
      },
      "description_templates": [
        "Trapezoid {V1}{V2}{V3}{V4} has parallel sides {V1}{V2} = {len:V1,V2} and {V4}{V3} = {len:V4,V3}.",
        "In trapezoid {V1}{V2}{V3}{V4}, base {V1}{V2} = {len:V1,V2} is parallel to {V4}{V3} = {len:V4,V3}."
      ],
      "associated_theorem_ids": [
        "trap.parallel_bases",
        "trap.leg_cointerior",
        "quad.angle_sum"
      ]
    },
    {
      "id": "sub.isosceles_trapezoid",
      "kind": "isosceles-trapezoid",
      "shape_class": "quadrilateral",
      "generator": {
        "recipe": "isosceles_trapezoid",
        "params": {
          "base_min": 14,
          "base_max": 24,
          "top_min": 6,
          "top_max": 11,
          "height_min": 7,
          "height_max": 13
        }
      },
      "description_templates": [
        "Isosceles trapezoid {V1}{V2}{V3}{V4} has parallel sides {V1}{V2} = {len:V1,V2} and {V4}{V3} = {len:V4,V3} with equal legs.",
        "In isosceles trapezoid {V1}{V2}{V3}{V4}, {V1}{V2} = {len:V1,V2} is parallel to {V4}{V3} = {len:V4,V3}, and leg {V1}{V4} = {len:V1,V4}."
      ],
      "associated_theorem_ids": [
        "itrap.legs_equal",
        "itrap.base_angles_equal",
        "trap.parallel_bases",
        "quad.angle_sum"
      ]
    },
    {
      "id": "sub.circle",
      "kind": "circle",
      "shape_class": "circle",
      "generator": {
        "recipe": "circle",
        "params": {
          "radius_min": 6,
          "radius_max": 14
        }
      },
      "description_templates": [
        "Circle {V1} has center {V1} and radius {rad}.",
        "A circle centered at {V1} has radius {rad}."
      ],
      "associated_theorem_ids": [
        "circle.radii_equal",
        "circle.diameter_twice_radius"
      ]
    },
    {
      "id": "sub.circle_central_angle",
      "kind": "circle-with-central-angle",
      "shape_class": "circle",
      "generator": {
        "recipe": "circle_central_angle",
        "params": {
          "radius_min": 6,
          "radius_max": 13,
          "arc_min": 40,
          "arc_max": 140
        }
      },
      "description_templates": [
        "In circle {V1}, radii {V1}{V2} and {V1}{V3} enclose the central angle ∠{V2}{V1}{V3} = {ang:V2,V1,V3}; the radius is {rad}.",
        "Circle {V1} has radius {rad}; points {V2} and {V3} on it are joined to the center, with ∠{V2}{V1}{V3} = {ang:V2,V1,V3}."
      ],
      "associated_theorem_ids": [
        "central.angle_at_center",
        "central.equal_angles_equal_chords",
        "circle.radii_equal",
        "radius.all_equal",
        "radius.isosceles_triangle"
      ]
    },
    {
      "id": "sub.circle_inscribed_triangle",
      "kind": "circle-with-inscribed-triangle",
      "shape_class": "circle",
      "generator": {
        "recipe": "circle_inscribed_triangle",
        "params": {
          "radius_min": 7,
          "radius_max": 13,
          "arc_min": 50
        }
      },
      "description_templates": [
        "Triangle {V2}{V3}{V4} is inscribed in circle {V1} of radius {rad}; side {V2}{V3} = {len:V2,V3}.",
        "Circle {V1} (radius {rad}) circumscribes triangle {V2}{V3}{V4}, whose side {V2}{V3} = {len:V2,V3}."
      ],
      "associated_theorem_ids": [
        "inscribed.half_central",
        "regular.inscribed_equilateral",
        "circle.radii_equal",
        "tri.angle_sum"
      ]
    },
    {
      "id": "sub.circle_tangent",
      "kind": "circle-with-tangent",
      "shape_class": "circle",
      "generator": {
        "recipe": "circle_tangent",
        "params": {
          "radius_min": 5,
          "radius_max": 10,
          "dist_min": 4,
          "dist_max": 12
        }
      },
      "description_templates": [
        "From point {V2} outside circle {V1} (radius {rad}), the tangent touches the circle at {V3}; {V2}{V3} = {len:V2,V3}.",
        "Circle {V1} has radius {rad}; the tangent from the external point {V2} meets it at {V3}, with {V2}{V3} = {len:V2,V3}."
      ],
      "associated_theorem_ids": [
        "tangent.perpendicular_radius",
        "tangent.equal_from_external",
        "circle.radii_equal"
      ]
    },
    {
      "id": "sub.cyclic_quadrilateral",
      "kind": "cyclic-quadrilateral",
      "shape_class": "circle",
      "generator": {
        "recipe": "cyclic_quadrilateral",
        "params": {
          "radius_min": 7,
          "radius_max": 13,
          "arc_min": 40
        }
      },
      "description_templates": [
        "Quadrilateral {V2}{V3}{V4}{V5} is inscribed in circle {V1} of radius {rad}; ∠{V5}{V2}{V3} = {ang:V5,V2,V3}.",
        "Circle {V1} (radius {rad}) passes through all vertices of quadrilateral {V2}{V3}{V4}{V5}, where ∠{V5}{V2}{V3} = {ang:V5,V2,V3}."
      ],
      "associated_theorem_ids": [
        "cyclic.opposite_supplementary",
        "inscribed.same_arc_equal",
        "regular.inscribed_square"
      ]
    },
    {
      "id": "sub.semicircle",
      "kind": "semicircle",
      "shape_class": "circle",
      "generator": {
        "recipe": "semicircle",
        "params": {
          "radius_min": 7,
          "radius_max": 13,
          "apex_min": 35,
          "apex_max": 145
        }
      },
      "description_templates": [
        "{V2}{V3} is a diameter of circle {V1}, and {V4} lies on the circle; {V2}{V3} = {len:V2,V3}.",
        "In circle {V1}, {V2}{V3} is a diameter of length {len:V2,V3} and point {V4} sits on the arc."
      ],
      "associated_theorem_ids": [
        "inscribed.diameter_right_angle",
        "circle.diameter_twice_radius",
        "tri.angle_sum"
      ]
    },
    {
      "id": "sub.regular_pentagon",
      "kind": "regular-pentagon",
      "shape_class": "pentagon",
      "generator": {
        "recipe": "regular_polygon",
        "params": {
          "sides": 5,
          "radius_min": 7,
          "radius_max": 12
        }
      },
      "description_templates": [
        "Regular pentagon {V1}{V2}{V3}{V4}{V5} has side {V1}{V2} = {len:V1,V2}.",
        "In regular pentagon {V1}{V2}{V3}{V4}{V5}, every side measures {len:V1,V2}."
      ],
      "associated_theorem_ids": [
        "regular.pentagon_interior"
      ]
    },
    {
      "id": "sub.regular_hexagon",
      "kind": "regular-hexagon",
      "shape_class": "hexagon",
      "generator": {
        "recipe": "regular_polygon",
        "params": {
          "sides": 6,
          "radius_min": 6,
          "radius_max": 11
        }
      },
      "description_templates": [
        "Regular hexagon {V1}{V2}{V3}{V4}{V5}{V6} has side {V1}{V2} = {len:V1,V2}.",
        "In regular hexagon {V1}{V2}{V3}{V4}{V5}{V6}, every side measures {len:V1,V2}."
      ],
      "associated_theorem_ids": [
        "regular.hexagon_interior",
        "regular.hexagon_long_diagonal"
      ]
    }
  ]
}
)GEOSYNTH_CATALOG";
}

}  // namespace geosynth

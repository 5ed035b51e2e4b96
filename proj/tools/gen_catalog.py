#!/usr/bin/env python3
"""Regenerates the bundled catalog (assets/catalog.json) and its embedded
header (include/geosynth/catalog_default.hpp).

Run from the repository root:  python3 tools/gen_catalog.py
"""
import json
import math
import os

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)

theorems = []


def T(tid, category, family, statement, pre=None, binds=None, hyp=None, con=None,
      role_hint=None):
    entry = {
        "id": tid,
        "category": category,
        "family": family,
        "statement": statement,
        "preconditions": pre or [],
    }
    if binds:
        entry["binds"] = binds
    if hyp:
        entry["hypotheses"] = hyp
    entry["conclusions"] = con or []
    if role_hint:
        entry["role_hint"] = role_hint
    theorems.append(entry)


def sub(kind):
    return {"pred": "has-substrate", "arg": kind}


def role(r):
    return {"pred": "has-role", "arg": r}


def rel(kind):
    return {"pred": "relation", "arg": kind}


def F(kind, groups, value=None):
    f = {"kind": kind, "groups": groups}
    if value is not None:
        f["value"] = value
    return f


def ang(a, b, c):
    return [a, b, c]


def seg(a, b):
    return [a, b]


CTX3 = {"A1": "V1", "A2": "V2", "A3": "V3"}

# ---------------------------------------------------------------------------
# Substrate-related families
# ---------------------------------------------------------------------------

# --- General Triangles (8) ---
T("tri.angle_sum", "substrate-related", "General Triangles",
  "The interior angles of a triangle sum to 180 degrees.",
  pre=[sub("triangle")],
  con=[F("angle-sum", [ang("V3", "V1", "V2"), ang("V1", "V2", "V3"), ang("V2", "V3", "V1")],
         180)])
T("tri.inequality", "substrate-related", "General Triangles",
  "Each side of a triangle is shorter than the sum of the other two.",
  pre=[sub("triangle")],
  con=[F("triangle-inequality", [["V1", "V2", "V3"]])])
T("tri.cong_sss", "substrate-related", "General Triangles",
  "If three sides of one triangle equal three sides of another, the triangles are congruent (SSS).",
  pre=[sub("triangle"), sub("triangle")],
  hyp=[F("lengths-equal", [seg("V1", "V2"), seg("W1", "W2")]),
       F("lengths-equal", [seg("V2", "V3"), seg("W2", "W3")]),
       F("lengths-equal", [seg("V3", "V1"), seg("W3", "W1")])],
  con=[F("congruent", [["V1", "V2", "V3"], ["W1", "W2", "W3"]]),
       F("angles-equal", [ang("V1", "V2", "V3"), ang("W1", "W2", "W3")]),
       F("angles-equal", [ang("V2", "V3", "V1"), ang("W2", "W3", "W1")])])
T("tri.cong_sas", "substrate-related", "General Triangles",
  "Two sides and the included angle determine a triangle (SAS).",
  pre=[sub("triangle"), sub("triangle")],
  hyp=[F("lengths-equal", [seg("V1", "V2"), seg("W1", "W2")]),
       F("lengths-equal", [seg("V2", "V3"), seg("W2", "W3")]),
       F("angles-equal", [ang("V1", "V2", "V3"), ang("W1", "W2", "W3")])],
  con=[F("lengths-equal", [seg("V1", "V3"), seg("W1", "W3")]),
       F("congruent", [["V1", "V2", "V3"], ["W1", "W2", "W3"]])])
T("tri.cong_asa", "substrate-related", "General Triangles",
  "Two angles and the included side determine a triangle (ASA).",
  pre=[sub("triangle"), sub("triangle")],
  hyp=[F("angles-equal", [ang("V3", "V1", "V2"), ang("W3", "W1", "W2")]),
       F("angles-equal", [ang("V1", "V2", "V3"), ang("W1", "W2", "W3")]),
       F("lengths-equal", [seg("V1", "V2"), seg("W1", "W2")])],
  con=[F("lengths-equal", [seg("V2", "V3"), seg("W2", "W3")]),
       F("congruent", [["V1", "V2", "V3"], ["W1", "W2", "W3"]])])
T("tri.cong_aas", "substrate-related", "General Triangles",
  "Two angles and a non-included side determine a triangle (AAS).",
  pre=[sub("triangle"), sub("triangle")],
  hyp=[F("angles-equal", [ang("V3", "V1", "V2"), ang("W3", "W1", "W2")]),
       F("angles-equal", [ang("V1", "V2", "V3"), ang("W1", "W2", "W3")]),
       F("lengths-equal", [seg("V2", "V3"), seg("W2", "W3")])],
  con=[F("lengths-equal", [seg("V1", "V2"), seg("W1", "W2")]),
       F("congruent", [["V1", "V2", "V3"], ["W1", "W2", "W3"]])])
T("tri.cong_hl", "substrate-related", "General Triangles",
  "Right triangles with equal hypotenuses and one pair of equal legs are congruent (HL).",
  pre=[sub("right-triangle"), sub("right-triangle")],
  hyp=[F("angle-value", [ang("V2", "V1", "V3")], 90),
       F("angle-value", [ang("W2", "W1", "W3")], 90),
       F("lengths-equal", [seg("V2", "V3"), seg("W2", "W3")]),
       F("lengths-equal", [seg("V1", "V2"), seg("W1", "W2")])],
  con=[F("lengths-equal", [seg("V1", "V3"), seg("W1", "W3")]),
       F("congruent", [["V1", "V2", "V3"], ["W1", "W2", "W3"]])])
T("tri.sim_aa", "substrate-related", "General Triangles",
  "Triangles with two pairs of equal angles are similar (AA), so corresponding sides are proportional.",
  pre=[sub("triangle"), sub("triangle")],
  hyp=[F("angles-equal", [ang("V3", "V1", "V2"), ang("W3", "W1", "W2")]),
       F("angles-equal", [ang("V1", "V2", "V3"), ang("W1", "W2", "W3")])],
  con=[F("ratios-equal", [seg("V1", "V2"), seg("W1", "W2"), seg("V2", "V3"), seg("W2", "W3")]),
       F("ratios-equal", [seg("V1", "V2"), seg("W1", "W2"), seg("V1", "V3"), seg("W1", "W3")])])

# --- Isosceles Triangles (8) ---
T("isos.base_angles", "substrate-related", "Isosceles Triangles",
  "The base angles of an isosceles triangle are equal.",
  pre=[sub("isosceles-triangle")],
  hyp=[F("lengths-equal", [seg("V1", "V2"), seg("V1", "V3")])],
  con=[F("angles-equal", [ang("V1", "V2", "V3"), ang("V2", "V3", "V1")])])
T("isos.crit_two_angles", "substrate-related", "Isosceles Triangles",
  "A triangle with two equal angles is isosceles: the sides opposite them are equal.",
  pre=[sub("triangle")],
  hyp=[F("angles-equal", [ang("V1", "V2", "V3"), ang("V2", "V3", "V1")])],
  con=[F("lengths-equal", [seg("V1", "V2"), seg("V1", "V3")])])
T("isos.crit_two_sides", "substrate-related", "Isosceles Triangles",
  "A triangle with two equal sides has equal angles opposite those sides.",
  pre=[sub("triangle")],
  hyp=[F("lengths-equal", [seg("V1", "V2"), seg("V1", "V3")])],
  con=[F("angles-equal", [ang("V1", "V2", "V3"), ang("V2", "V3", "V1")])])
T("isos.apex_median_is_altitude", "substrate-related", "Isosceles Triangles",
  "In an isosceles triangle the median from the apex is also the altitude to the base.",
  pre=[sub("isosceles-triangle"), role("median")], binds=CTX3,
  hyp=[F("lengths-equal", [seg("V1", "V2"), seg("V1", "V3")])],
  con=[F("perpendicular", [seg("E1", "E2"), seg("A2", "A3")])])
T("isos.apex_median_bisects_angle", "substrate-related", "Isosceles Triangles",
  "In an isosceles triangle the median from the apex bisects the apex angle.",
  pre=[sub("isosceles-triangle"), role("median")], binds=CTX3,
  hyp=[F("lengths-equal", [seg("V1", "V2"), seg("V1", "V3")])],
  con=[F("angles-equal", [ang("A2", "A1", "E2"), ang("E2", "A1", "A3")])])
T("isos.apex_altitude_bisects_base", "substrate-related", "Isosceles Triangles",
  "In an isosceles triangle the altitude from the apex bisects the base.",
  pre=[sub("isosceles-triangle"), role("altitude")], binds=CTX3,
  hyp=[F("lengths-equal", [seg("V1", "V2"), seg("V1", "V3")])],
  con=[F("lengths-equal", [seg("E2", "A2"), seg("E2", "A3")])])
T("isos.right_base_45", "substrate-related", "Isosceles Triangles",
  "In a right isosceles triangle the base angles are 45 degrees.",
  pre=[sub("right-isosceles-triangle")],
  hyp=[F("angle-value", [ang("V2", "V1", "V3")], 90)],
  con=[F("angle-value", [ang("V1", "V2", "V3")], 45),
       F("angle-value", [ang("V2", "V3", "V1")], 45)])

# --- Equilateral Triangles (6) ---
T("equi.all_angles_60", "substrate-related", "Equilateral Triangles",
  "Every angle of an equilateral triangle is 60 degrees.",
  pre=[sub("equilateral-triangle")],
  con=[F("angle-value", [ang("V3", "V1", "V2")], 60),
       F("angle-value", [ang("V1", "V2", "V3")], 60),
       F("angle-value", [ang("V2", "V3", "V1")], 60)])
T("equi.crit_three_sides", "substrate-related", "Equilateral Triangles",
  "A triangle with three equal sides has three 60-degree angles.",
  pre=[sub("triangle")],
  hyp=[F("lengths-equal", [seg("V1", "V2"), seg("V2", "V3")]),
       F("lengths-equal", [seg("V2", "V3"), seg("V3", "V1")])],
  con=[F("angle-value", [ang("V3", "V1", "V2")], 60),
       F("angle-value", [ang("V1", "V2", "V3")], 60)])
T("equi.crit_three_angles", "substrate-related", "Equilateral Triangles",
  "A triangle with three equal angles is equilateral.",
  pre=[sub("triangle")],
  hyp=[F("angles-equal", [ang("V3", "V1", "V2"), ang("V1", "V2", "V3")]),
       F("angles-equal", [ang("V1", "V2", "V3"), ang("V2", "V3", "V1")])],
  con=[F("lengths-equal", [seg("V1", "V2"), seg("V2", "V3")]),
       F("lengths-equal", [seg("V2", "V3"), seg("V3", "V1")])])
T("equi.crit_isosceles_60", "substrate-related", "Equilateral Triangles",
  "An isosceles triangle with a 60-degree apex angle is equilateral.",
  pre=[sub("triangle")],
  hyp=[F("lengths-equal", [seg("V1", "V2"), seg("V1", "V3")]),
       F("angle-value", [ang("V2", "V1", "V3")], 60)],
  con=[F("lengths-equal", [seg("V1", "V2"), seg("V2", "V3")])])
T("equi.altitude_ratio", "substrate-related", "Equilateral Triangles",
  "The altitude of an equilateral triangle is (sqrt(3)/2) times its side.",
  pre=[sub("equilateral-triangle"), role("altitude")], binds=CTX3,
  con=[F("length-ratio", [seg("E1", "E2"), seg("A2", "A3")], SQRT3 / 2)])

# --- Right Triangles (7) ---
T("right.pythagorean", "substrate-related", "Right Triangles",
  "In a right triangle the legs a and b and hypotenuse c satisfy a^2 + b^2 = c^2.",
  pre=[sub("right-triangle")],
  hyp=[F("angle-value", [ang("V2", "V1", "V3")], 90)],
  con=[F("pythagorean", [seg("V1", "V2"), seg("V1", "V3"), seg("V2", "V3")])])
T("right.acute_complementary", "substrate-related", "Right Triangles",
  "The acute angles of a right triangle are complementary.",
  pre=[sub("right-triangle")],
  hyp=[F("angle-value", [ang("V2", "V1", "V3")], 90)],
  con=[F("angle-sum", [ang("V1", "V2", "V3"), ang("V2", "V3", "V1")], 90)])
T("right.thirty_half_hypotenuse", "substrate-related", "Right Triangles",
  "The side opposite a 30-degree angle in a right triangle is half the hypotenuse.",
  pre=[sub("right-triangle")],
  hyp=[F("angle-value", [ang("V2", "V1", "V3")], 90),
       F("angle-value", [ang("V1", "V2", "V3")], 30)],
  con=[F("length-ratio", [seg("V1", "V3"), seg("V2", "V3")], 0.5)])
T("right.hypotenuse_median", "substrate-related", "Right Triangles",
  "The median to the hypotenuse of a right triangle is half the hypotenuse.",
  pre=[sub("right-triangle"), role("median")], binds=CTX3,
  hyp=[F("angle-value", [ang("V2", "V1", "V3")], 90)],
  con=[F("length-ratio", [seg("E1", "E2"), seg("A2", "A3")], 0.5)])
T("right.converse_pythagorean", "substrate-related", "Right Triangles",
  "If a^2 + b^2 = c^2 for the sides of a triangle, the angle between a and b is right.",
  pre=[sub("triangle")],
  hyp=[F("pythagorean", [seg("V1", "V2"), seg("V1", "V3"), seg("V2", "V3")])],
  con=[F("angle-value", [ang("V2", "V1", "V3")], 90)])
T("right.area_half_legs", "substrate-related", "Right Triangles",
  "The area of a right triangle is half the product of its legs.",
  pre=[sub("right-triangle")],
  hyp=[F("angle-value", [ang("V2", "V1", "V3")], 90)],
  con=[F("area-product", [["V1", "V2", "V3"], seg("V1", "V2"), seg("V1", "V3")], 0.5)])

# --- Trigonometric Functions (11) ---
def trig(tid, angle_deg, fn, value, text):
    groups = {
        "sin": [seg("V1", "V3"), seg("V2", "V3")],
        "cos": [seg("V1", "V2"), seg("V2", "V3")],
        "tan": [seg("V1", "V3"), seg("V1", "V2")],
    }[fn]
    T(tid, "substrate-related", "Trigonometric Functions", text,
      pre=[sub("right-triangle")],
      hyp=[F("angle-value", [ang("V2", "V1", "V3")], 90),
           F("angle-value", [ang("V1", "V2", "V3")], angle_deg)],
      con=[F("length-ratio", groups, value)])

trig("trig.sin30", 30, "sin", 0.5,
     "sin 30° = 1/2: opposite over hypotenuse for a 30-degree angle.")
trig("trig.sin45", 45, "sin", SQRT2 / 2,
     "sin 45° = √2/2: opposite over hypotenuse for a 45-degree angle.")
trig("trig.sin60", 60, "sin", SQRT3 / 2,
     "sin 60° = √3/2: opposite over hypotenuse for a 60-degree angle.")
trig("trig.cos30", 30, "cos", SQRT3 / 2,
     "cos 30° = √3/2: adjacent over hypotenuse for a 30-degree angle.")
trig("trig.cos45", 45, "cos", SQRT2 / 2,
     "cos 45° = √2/2: adjacent over hypotenuse for a 45-degree angle.")
trig("trig.cos60", 60, "cos", 0.5,
     "cos 60° = 1/2: adjacent over hypotenuse for a 60-degree angle.")
trig("trig.tan30", 30, "tan", SQRT3 / 3,
     "tan 30° = √3/3: opposite over adjacent for a 30-degree angle.")
trig("trig.tan45", 45, "tan", 1.0,
     "tan 45° = 1: opposite over adjacent for a 45-degree angle.")
trig("trig.tan60", 60, "tan", SQRT3,
     "tan 60° = √3: opposite over adjacent for a 60-degree angle.")
T("trig.sin90", "substrate-related", "Trigonometric Functions",
  "sin 90° = 1: the sine of a right angle is one.",
  pre=[sub("right-triangle")])
T("trig.cos90", "substrate-related", "Trigonometric Functions",
  "cos 90° = 0: the cosine of a right angle is zero.",
  pre=[sub("right-triangle")])

# --- Parallelogram (9) ---
T("para.opposite_sides_equal", "substrate-related", "Parallelogram",
  "Opposite sides of a parallelogram are equal.",
  pre=[sub("parallelogram")],
  con=[F("lengths-equal", [seg("V1", "V2"), seg("V4", "V3")]),
       F("lengths-equal", [seg("V2", "V3"), seg("V1", "V4")])])
T("para.opposite_sides_parallel", "substrate-related", "Parallelogram",
  "Both pairs of opposite sides of a parallelogram are parallel.",
  pre=[sub("parallelogram")],
  con=[F("parallel", [seg("V1", "V2"), seg("V4", "V3")]),
       F("parallel", [seg("V2", "V3"), seg("V1", "V4")])])
T("para.diagonals_bisect", "substrate-related", "Parallelogram",
  "The diagonals of a parallelogram bisect each other.",
  pre=[sub("parallelogram")],
  con=[F("points-coincide", [["mid(V1,V3)"], ["mid(V2,V4)"]])])
T("para.area_base_height", "substrate-related", "Parallelogram",
  "The area of a parallelogram equals base times height.",
  pre=[sub("parallelogram")],
  con=[F("area-base-height", [["V1", "V2", "V3", "V4"], seg("V1", "V2"), ["V4"]])])
T("para.crit_opposite_sides", "substrate-related", "Parallelogram",
  "A quadrilateral whose opposite sides are pairwise equal is a parallelogram.",
  pre=[sub("quadrilateral")],
  hyp=[F("lengths-equal", [seg("V1", "V2"), seg("V4", "V3")]),
       F("lengths-equal", [seg("V2", "V3"), seg("V1", "V4")])],
  con=[F("parallel", [seg("V1", "V2"), seg("V4", "V3")]),
       F("parallel", [seg("V2", "V3"), seg("V1", "V4")])])
T("para.crit_parallel_sides", "substrate-related", "Parallelogram",
  "A quadrilateral whose opposite sides are pairwise parallel has equal opposite sides.",
  pre=[sub("quadrilateral")],
  hyp=[F("parallel", [seg("V1", "V2"), seg("V4", "V3")]),
       F("parallel", [seg("V2", "V3"), seg("V1", "V4")])],
  con=[F("lengths-equal", [seg("V1", "V2"), seg("V4", "V3")]),
       F("lengths-equal", [seg("V2", "V3"), seg("V1", "V4")])])
T("para.crit_diagonals_bisect", "substrate-related", "Parallelogram",
  "A quadrilateral whose diagonals bisect each other is a parallelogram.",
  pre=[sub("quadrilateral")],
  hyp=[F("points-coincide", [["mid(V1,V3)"], ["mid(V2,V4)"]])],
  con=[F("parallel", [seg("V1", "V2"), seg("V4", "V3")]),
       F("lengths-equal", [seg("V1", "V2"), seg("V4", "V3")])])

# --- Rectangle (5) ---
T("rect.all_angles_90", "substrate-related", "Rectangle",
  "Every angle of a rectangle is 90 degrees.",
  pre=[sub("rectangle")],
  con=[F("angle-value", [ang("V4", "V1", "V2")], 90),
       F("angle-value", [ang("V1", "V2", "V3")], 90),
       F("angle-value", [ang("V2", "V3", "V4")], 90),
       F("angle-value", [ang("V3", "V4", "V1")], 90)])
T("rect.diagonals_equal", "substrate-related", "Rectangle",
  "The diagonals of a rectangle are equal.",
  pre=[sub("rectangle")],
  con=[F("lengths-equal", [seg("V1", "V3"), seg("V2", "V4")])])
T("rect.area_product", "substrate-related", "Rectangle",
  "The area of a rectangle is the product of two adjacent sides.",
  pre=[sub("rectangle")],
  con=[F("area-product", [["V1", "V2", "V3", "V4"], seg("V1", "V2"), seg("V2", "V3")], 1.0)])
T("rect.crit_parallelogram_right", "substrate-related", "Rectangle",
  "A parallelogram with one right angle is a rectangle: all angles are right and the diagonals are equal.",
  pre=[sub("parallelogram")],
  hyp=[F("angle-value", [ang("V4", "V1", "V2")], 90)],
  con=[F("angle-value", [ang("V1", "V2", "V3")], 90),
       F("lengths-equal", [seg("V1", "V3"), seg("V2", "V4")])])
T("rect.crit_three_right", "substrate-related", "Rectangle",
  "A quadrilateral with three right angles has a right fourth angle.",
  pre=[sub("quadrilateral")],
  hyp=[F("angle-value", [ang("V4", "V1", "V2")], 90),
       F("angle-value", [ang("V1", "V2", "V3")], 90),
       F("angle-value", [ang("V2", "V3", "V4")], 90)],
  con=[F("angle-value", [ang("V3", "V4", "V1")], 90)])

# --- Rhombus (6) ---
T("rhom.all_sides_equal", "substrate-related", "Rhombus",
  "All sides of a rhombus are equal.",
  pre=[sub("rhombus")],
  con=[F("lengths-equal", [seg("V1", "V2"), seg("V2", "V3")]),
       F("lengths-equal", [seg("V2", "V3"), seg("V3", "V4")]),
       F("lengths-equal", [seg("V3", "V4"), seg("V4", "V1")])])
T("rhom.diagonals_perpendicular", "substrate-related", "Rhombus",
  "The diagonals of a rhombus are perpendicular.",
  pre=[sub("rhombus")],
  con=[F("perpendicular", [seg("V1", "V3"), seg("V2", "V4")])])
T("rhom.crit_adjacent_equal", "substrate-related", "Rhombus",
  "A parallelogram with two equal adjacent sides is a rhombus.",
  pre=[sub("parallelogram")],
  hyp=[F("lengths-equal", [seg("V1", "V2"), seg("V2", "V3")])],
  con=[F("lengths-equal", [seg("V3", "V4"), seg("V4", "V1")]),
       F("perpendicular", [seg("V1", "V3"), seg("V2", "V4")])])
T("rhom.crit_four_sides", "substrate-related", "Rhombus",
  "A quadrilateral with four equal sides is a rhombus: opposite sides are parallel and the diagonals are perpendicular.",
  pre=[sub("quadrilateral")],
  hyp=[F("lengths-equal", [seg("V1", "V2"), seg("V2", "V3")]),
       F("lengths-equal", [seg("V2", "V3"), seg("V3", "V4")]),
       F("lengths-equal", [seg("V3", "V4"), seg("V4", "V1")])],
  con=[F("parallel", [seg("V1", "V2"), seg("V4", "V3")]),
       F("perpendicular", [seg("V1", "V3"), seg("V2", "V4")])])

# --- Square (6) ---
T("square.sides_and_angles", "substrate-related", "Square",
  "All sides of a square are equal and all its angles are right.",
  pre=[sub("square")],
  con=[F("lengths-equal", [seg("V1", "V2"), seg("V2", "V3")]),
       F("angle-value", [ang("V4", "V1", "V2")], 90)])
T("square.diagonals", "substrate-related", "Square",
  "The diagonals of a square are equal and perpendicular.",
  pre=[sub("square")],
  con=[F("lengths-equal", [seg("V1", "V3"), seg("V2", "V4")]),
       F("perpendicular", [seg("V1", "V3"), seg("V2", "V4")])])
T("square.diagonal_ratio", "substrate-related", "Square",
  "The diagonal of a square is √2 times its side.",
  pre=[sub("square")],
  con=[F("length-ratio", [seg("V1", "V3"), seg("V1", "V2")], SQRT2)])
T("square.crit_rect_rhombus", "substrate-related", "Square",
  "A quadrilateral that is both a rectangle and a rhombus is a square.",
  pre=[sub("quadrilateral")],
  hyp=[F("lengths-equal", [seg("V1", "V2"), seg("V2", "V3")]),
       F("lengths-equal", [seg("V2", "V3"), seg("V3", "V4")]),
       F("angle-value", [ang("V4", "V1", "V2")], 90)],
  con=[F("lengths-equal", [seg("V1", "V3"), seg("V2", "V4")]),
       F("perpendicular", [seg("V1", "V3"), seg("V2", "V4")])])

# --- Trapezoid (3) ---
T("trap.parallel_bases", "substrate-related", "Trapezoid",
  "A trapezoid has one pair of parallel sides.",
  pre=[sub("trapezoid")],
  hyp=[F("parallel", [seg("V1", "V2"), seg("V4", "V3")])],
  con=[F("parallel", [seg("V1", "V2"), seg("V4", "V3")])])
T("trap.leg_cointerior", "substrate-related", "Trapezoid",
  "The interior angles of a trapezoid along each leg are supplementary.",
  pre=[sub("trapezoid")],
  hyp=[F("parallel", [seg("V1", "V2"), seg("V4", "V3")])],
  con=[F("angle-sum", [ang("V4", "V1", "V2"), ang("V1", "V4", "V3")], 180)])
# --- Isosceles Trapezoid (5) ---
T("itrap.legs_equal", "substrate-related", "Isosceles Trapezoid",
  "The legs of an isosceles trapezoid are equal.",
  pre=[sub("isosceles-trapezoid")],
  hyp=[F("parallel", [seg("V1", "V2"), seg("V4", "V3")])],
  con=[F("lengths-equal", [seg("V1", "V4"), seg("V2", "V3")])])
T("itrap.base_angles_equal", "substrate-related", "Isosceles Trapezoid",
  "Base angles on the same base of an isosceles trapezoid are equal.",
  pre=[sub("isosceles-trapezoid")],
  hyp=[F("parallel", [seg("V1", "V2"), seg("V4", "V3")]),
       F("lengths-equal", [seg("V1", "V4"), seg("V2", "V3")])],
  con=[F("angles-equal", [ang("V4", "V1", "V2"), ang("V1", "V2", "V3")]),
       F("angles-equal", [ang("V2", "V3", "V4"), ang("V3", "V4", "V1")])])
T("itrap.crit_equal_legs", "substrate-related", "Isosceles Trapezoid",
  "A trapezoid with equal legs has equal base angles.",
  pre=[sub("trapezoid")],
  hyp=[F("parallel", [seg("V1", "V2"), seg("V4", "V3")]),
       F("lengths-equal", [seg("V1", "V4"), seg("V2", "V3")])],
  con=[F("angles-equal", [ang("V4", "V1", "V2"), ang("V1", "V2", "V3")])])
T("itrap.crit_base_angles", "substrate-related", "Isosceles Trapezoid",
  "A trapezoid with equal base angles has equal legs.",
  pre=[sub("trapezoid")],
  hyp=[F("parallel", [seg("V1", "V2"), seg("V4", "V3")]),
       F("angles-equal", [ang("V4", "V1", "V2"), ang("V1", "V2", "V3")])],
  con=[F("lengths-equal", [seg("V1", "V4"), seg("V2", "V3")])])

# --- Quadrilaterals (1) ---
T("quad.angle_sum", "substrate-related", "Quadrilaterals",
  "The interior angles of a quadrilateral sum to 360 degrees.",
  pre=[sub("quadrilateral")],
  con=[F("angle-sum", [ang("V4", "V1", "V2"), ang("V1", "V2", "V3"),
                       ang("V2", "V3", "V4"), ang("V3", "V4", "V1")], 360)])

# --- Circle (4) ---
T("circle.radii_equal", "substrate-related", "Circle",
  "All points of a circle are equidistant from its center.",
  pre=[sub("circle")],
  con=[F("equidistant", [["V1"], ["V2"], ["V3"]])])
T("circle.diameter_twice_radius", "substrate-related", "Circle",
  "A diameter of a circle is twice the radius.",
  pre=[sub("circle")],
  hyp=[F("collinear", [["V2", "V1", "V3"]]),
       F("equidistant", [["V1"], ["V2"], ["V3"]])],
  con=[F("length-ratio", [seg("V2", "V3"), seg("V1", "V2")], 2.0)])
T("circle.chord_bisector_center", "substrate-related", "Circle",
  "The perpendicular bisector of a chord passes through the center.",
  pre=[sub("circle"), role("perpendicular-bisector")],
  hyp=[F("equidistant", [["V1"], ["A1"], ["A2"]])],
  con=[F("collinear", [["E1", "E2", "V1"]])])
T("circle.chord_perpendicular_bisector", "substrate-related", "Circle",
  "The perpendicular bisector of a chord is perpendicular to the chord.",
  pre=[sub("circle"), role("perpendicular-bisector")],
  hyp=[F("equidistant", [["V1"], ["A1"], ["A2"]])],
  con=[F("perpendicular", [seg("E1", "E2"), seg("A1", "A2")])])

# --- Central Angle (2) ---
T("central.equal_angles_equal_chords", "substrate-related", "Central Angle",
  "Equal central angles of a circle subtend equal chords.",
  pre=[sub("circle"), role("chord"), role("chord")],
  binds={"A1": "B1"},
  hyp=[F("angles-equal", [ang("E1", "A1", "E2"), ang("F1", "B1", "F2")])],
  con=[F("lengths-equal", [seg("E1", "E2"), seg("F1", "F2")])])
T("central.angle_at_center", "substrate-related", "Central Angle",
  "A central angle measures the arc it subtends.",
  pre=[sub("circle-with-central-angle")])

# --- Inscribed Angle (3) ---
T("inscribed.half_central", "substrate-related", "Inscribed Angle",
  "An inscribed angle is half the central angle subtending the same arc.",
  pre=[sub("circle-with-inscribed-triangle")],
  con=[F("inscribed-central", [["V4"], seg("V2", "V3"), ["V1"]])])
T("inscribed.same_arc_equal", "substrate-related", "Inscribed Angle",
  "Inscribed angles subtending the same arc are equal.",
  pre=[sub("cyclic-quadrilateral")],
  con=[F("angles-equal", [ang("V2", "V4", "V3"), ang("V2", "V5", "V3")])])
T("inscribed.diameter_right_angle", "substrate-related", "Inscribed Angle",
  "An angle inscribed in a semicircle (subtending a diameter) is a right angle.",
  pre=[sub("semicircle")],
  hyp=[F("collinear", [["V2", "V1", "V3"]]),
       F("equidistant", [["V1"], ["V2"], ["V3"]])],
  con=[F("angle-value", [ang("V2", "V4", "V3")], 90)])

# --- Cyclic Quadrilateral (2) ---
T("cyclic.opposite_supplementary", "substrate-related", "Cyclic Quadrilateral",
  "Opposite angles of a cyclic quadrilateral are supplementary.",
  pre=[sub("cyclic-quadrilateral")],
  con=[F("angle-sum", [ang("V5", "V2", "V3"), ang("V3", "V4", "V5")], 180),
       F("angle-sum", [ang("V2", "V3", "V4"), ang("V4", "V5", "V2")], 180)])
# --- Regular Polygon (8) ---
T("regular.pentagon_interior", "substrate-related", "Regular Polygon",
  "Each interior angle of a regular pentagon is 108 degrees.",
  pre=[sub("regular-pentagon")],
  con=[F("angle-value", [ang("V5", "V1", "V2")], 108),
       F("angle-value", [ang("V1", "V2", "V3")], 108)])
T("regular.hexagon_interior", "substrate-related", "Regular Polygon",
  "Each interior angle of a regular hexagon is 120 degrees.",
  pre=[sub("regular-hexagon")],
  con=[F("angle-value", [ang("V6", "V1", "V2")], 120),
       F("angle-value", [ang("V1", "V2", "V3")], 120)])
T("regular.hexagon_long_diagonal", "substrate-related", "Regular Polygon",
  "The long diagonal of a regular hexagon is twice its side.",
  pre=[sub("regular-hexagon")],
  con=[F("length-ratio", [seg("V1", "V4"), seg("V1", "V2")], 2.0)])
T("regular.inscribed_equilateral", "substrate-related", "Regular Polygon",
  "An equilateral triangle inscribed in a circle of radius R has side R·√3.",
  pre=[sub("circle-with-inscribed-triangle")],
  hyp=[F("lengths-equal", [seg("V2", "V3"), seg("V3", "V4")]),
       F("lengths-equal", [seg("V3", "V4"), seg("V4", "V2")])],
  con=[F("length-ratio", [seg("V2", "V3"), seg("V1", "V2")], SQRT3)])
T("regular.inscribed_square", "substrate-related", "Regular Polygon",
  "A square inscribed in a circle of radius R has side R·√2.",
  pre=[sub("cyclic-quadrilateral")],
  hyp=[F("lengths-equal", [seg("V2", "V3"), seg("V3", "V4")]),
       F("lengths-equal", [seg("V3", "V4"), seg("V4", "V5")]),
       F("lengths-equal", [seg("V4", "V5"), seg("V5", "V2")])],
  con=[F("length-ratio", [seg("V2", "V3"), seg("V1", "V2")], SQRT2)])

# ---------------------------------------------------------------------------
# Line-element-related families
# ---------------------------------------------------------------------------

# --- Parallel Lines (8) ---
T("parallel.corresponding_equal", "line-element-related", "Parallel Lines",
  "When a transversal cuts parallel lines, corresponding angles are equal.",
  pre=[rel("parallel")], role_hint="parallel-auxiliary")
T("parallel.alternate_equal", "line-element-related", "Parallel Lines",
  "When a transversal cuts parallel lines, alternate interior angles are equal.",
  pre=[rel("parallel")], role_hint="parallel-auxiliary")
T("parallel.cointerior_supplementary", "line-element-related", "Parallel Lines",
  "When a transversal cuts parallel lines, consecutive interior angles are supplementary.",
  pre=[rel("parallel")], role_hint="parallel-auxiliary")
T("parallel.crit_corresponding", "line-element-related", "Parallel Lines",
  "Lines cut by a transversal with equal corresponding angles are parallel.",
  pre=[rel("parallel")], role_hint="parallel-auxiliary")
T("parallel.crit_alternate", "line-element-related", "Parallel Lines",
  "Lines cut by a transversal with equal alternate interior angles are parallel.",
  pre=[rel("parallel")], role_hint="parallel-auxiliary")
T("parallel.crit_cointerior", "line-element-related", "Parallel Lines",
  "Lines cut by a transversal with supplementary consecutive interior angles are parallel.",
  pre=[rel("parallel")], role_hint="parallel-auxiliary")
T("parallel.to_same_line", "line-element-related", "Parallel Lines",
  "Two lines parallel to the same line are parallel to each other.",
  pre=[rel("parallel")], role_hint="parallel-auxiliary")
T("parallel.aux_parallel", "line-element-related", "Parallel Lines",
  "An auxiliary line drawn through a point parallel to a reference segment is parallel to it.",
  pre=[role("parallel-auxiliary")], role_hint="parallel-auxiliary",
  con=[F("parallel", [seg("E1", "E2"), seg("A2", "A3")])])
T("parallel.alternate_via_diagonal", "line-element-related", "Parallel Lines",
  "A diagonal between two parallel sides forms equal alternate interior angles.",
  pre=[sub("trapezoid"), role("diagonal")],
  binds={"pair:E": "V1,V3"},
  hyp=[F("parallel", [seg("V1", "V2"), seg("V4", "V3")])],
  con=[F("angles-equal", [ang("V2", "V1", "V3"), ang("V1", "V3", "V4")])],
  role_hint="diagonal")

# --- Angle Bisector (3) ---
T("bisector.splits_equally", "line-element-related", "Angle Bisector",
  "An angle bisector divides its angle into two equal parts.",
  pre=[role("angle-bisector")], role_hint="angle-bisector",
  con=[F("angles-equal", [ang("A2", "E1", "E2"), ang("E2", "E1", "A3")])])
T("bisector.equidistant_sides", "line-element-related", "Angle Bisector",
  "Points on an angle bisector are equidistant from the two sides of the angle.",
  pre=[role("angle-bisector")], role_hint="angle-bisector",
  con=[F("equidistant-from-lines", [["E2"], seg("A1", "A2"), seg("A1", "A3")])])
T("bisector.side_ratio", "line-element-related", "Angle Bisector",
  "The bisector from a triangle's vertex divides the opposite side in the ratio of the adjacent sides.",
  pre=[role("angle-bisector")], role_hint="angle-bisector",
  hyp=[F("collinear", [["A2", "E2", "A3"]])],
  con=[F("ratios-equal", [seg("A2", "E2"), seg("E2", "A3"), seg("A1", "A2"), seg("A1", "A3")])])

# --- Perpendicular Bisector (3) ---
T("perp_bisector.at_midpoint", "line-element-related", "Perpendicular Bisector",
  "A perpendicular bisector meets its segment at the midpoint, at a right angle.",
  pre=[role("perpendicular-bisector")], role_hint="perpendicular-bisector",
  con=[F("perpendicular", [seg("E1", "E2"), seg("A1", "A2")]),
       F("lengths-equal", [seg("E1", "A1"), seg("E1", "A2")])])
T("perp_bisector.equidistant", "line-element-related", "Perpendicular Bisector",
  "Points on the perpendicular bisector of a segment are equidistant from its endpoints.",
  pre=[role("perpendicular-bisector")], role_hint="perpendicular-bisector",
  con=[F("equidistant", [["E2"], ["A1"], ["A2"]])])
# --- Triangle Midline (5) ---
T("midline.parallel_to_base", "line-element-related", "Triangle Midline",
  "A triangle's midline is parallel to the third side.",
  pre=[role("midline")], role_hint="midline",
  hyp=[F("points-coincide", [["E1"], ["mid(A1,A2)"]]),
       F("points-coincide", [["E2"], ["mid(A1,A3)"]])],
  con=[F("parallel", [seg("E1", "E2"), seg("A2", "A3")])])
T("midline.half_length", "line-element-related", "Triangle Midline",
  "A triangle's midline is half the length of the third side.",
  pre=[role("midline")], role_hint="midline",
  hyp=[F("points-coincide", [["E1"], ["mid(A1,A2)"]]),
       F("points-coincide", [["E2"], ["mid(A1,A3)"]])],
  con=[F("length-ratio", [seg("E1", "E2"), seg("A2", "A3")], 0.5)])
T("midline.crit_midpoints", "line-element-related", "Triangle Midline",
  "The segment connecting the midpoints of two sides of a triangle is its midline.",
  pre=[role("midline")], role_hint="midline")
T("midline.trapezoid_midsegment", "line-element-related", "Triangle Midline",
  "The midsegment of a trapezoid is parallel to the bases and equals their average length.",
  pre=[role("midline")], role_hint="midline",
  hyp=[F("points-coincide", [["E1"], ["mid(A1,A4)"]]),
       F("points-coincide", [["E2"], ["mid(A2,A3)"]]),
       F("parallel", [seg("A1", "A2"), seg("A4", "A3")])],
  con=[F("parallel", [seg("E1", "E2"), seg("A1", "A2")]),
       F("length-average", [seg("E1", "E2"), seg("A1", "A2"), seg("A4", "A3")])])

# --- Tangent (3) ---
T("tangent.perpendicular_radius", "line-element-related", "Tangent",
  "A tangent is perpendicular to the radius at the point of contact.",
  pre=[role("tangent")], role_hint="tangent",
  con=[F("perpendicular", [seg("E1", "E2"), seg("A1", "E2")])])
T("tangent.equal_from_external", "line-element-related", "Tangent",
  "Tangent segments from an external point to a circle are equal.",
  pre=[role("tangent"), role("tangent")],
  binds={"E1": "F1", "A1": "B1"},
  con=[F("equidistant", [["E1"], ["E2"], ["F2"]])],
  role_hint="tangent")
T("tangent.crit_perpendicular", "line-element-related", "Tangent",
  "A line through a point on a circle perpendicular to the radius there is a tangent.",
  pre=[role("tangent")], role_hint="tangent")

# --- Medians (3) ---
T("median.bisects_side", "line-element-related", "Medians",
  "A median ends at the midpoint of the opposite side, splitting it into equal halves.",
  pre=[role("median")], role_hint="median",
  con=[F("lengths-equal", [seg("E2", "A2"), seg("E2", "A3")]),
       F("length-ratio", [seg("A2", "E2"), seg("A2", "A3")], 0.5)])
T("median.equal_areas", "line-element-related", "Medians",
  "A median divides a triangle into two triangles of equal area.",
  pre=[role("median")], role_hint="median",
  con=[F("areas-equal", [["A1", "A2", "E2"], ["A1", "E2", "A3"]])])
# --- Altitudes (3) ---
T("altitude.perpendicular", "line-element-related", "Altitudes",
  "An altitude is perpendicular to the side it meets.",
  pre=[role("altitude")], role_hint="altitude",
  con=[F("perpendicular", [seg("E1", "E2"), seg("A2", "A3")])])
T("altitude.area_half_base", "line-element-related", "Altitudes",
  "A triangle's area is half the product of a side and the altitude to it.",
  pre=[role("altitude")], role_hint="altitude",
  con=[F("area-product", [["A1", "A2", "A3"], seg("A2", "A3"), seg("E1", "E2")], 0.5)])

# --- Chords (2) ---
T("chord.endpoints_on_circle", "line-element-related", "Chords",
  "A chord's endpoints lie on the circle, equidistant from the center.",
  pre=[role("chord")], role_hint="chord",
  con=[F("equidistant", [["A1"], ["E1"], ["E2"]])])
T("chord.equal_chords_equal_central", "line-element-related", "Chords",
  "Equal chords of a circle subtend equal central angles.",
  pre=[sub("circle"), role("chord"), role("chord")],
  binds={"A1": "B1"},
  hyp=[F("lengths-equal", [seg("E1", "E2"), seg("F1", "F2")])],
  con=[F("angles-equal", [ang("E1", "A1", "E2"), ang("F1", "B1", "F2")])],
  role_hint="chord")

# --- Radii & Diameters (2) ---
T("radius.all_equal", "line-element-related", "Radii & Diameters",
  "All radii of a circle are equal.",
  pre=[role("radius"), role("radius")],
  binds={"E1": "F1"},
  con=[F("lengths-equal", [seg("E1", "E2"), seg("F1", "F2")])],
  role_hint="radius")
T("radius.isosceles_triangle", "line-element-related", "Radii & Diameters",
  "Two radii and the chord between their endpoints form an isosceles triangle.",
  pre=[role("radius"), role("radius")],
  binds={"E1": "F1"},
  con=[F("angles-equal", [ang("E1", "E2", "F2"), ang("E2", "F2", "E1")])],
  role_hint="radius")

# --- Diagonals (2) ---
T("diagonal.parallelogram_congruent", "line-element-related", "Diagonals",
  "A diagonal splits a parallelogram into two congruent triangles.",
  pre=[sub("parallelogram"), role("diagonal")],
  binds={"pair:E": "V1,V3"},
  con=[F("congruent", [["V1", "V2", "V3"], ["V3", "V4", "V1"]]),
       F("areas-equal", [["V1", "V2", "V3"], ["V3", "V4", "V1"]])],
  role_hint="diagonal")
T("diagonal.splits_quadrilateral", "line-element-related", "Diagonals",
  "A diagonal splits a quadrilateral into two triangles that cover it.",
  pre=[sub("quadrilateral"), role("diagonal")],
  binds={"pair:E": "V1,V3"},
  con=[F("area-sum", [["V1", "V2", "V3", "V4"], ["V1", "V2", "V3"], ["V3", "V4", "V1"]])],
  role_hint="diagonal")

# ---------------------------------------------------------------------------
# Substrates
# ---------------------------------------------------------------------------

substrates = []


def S(sid, kind, shape_class, recipe, params, templates, assoc):
    substrates.append({
        "id": sid,
        "kind": kind,
        "shape_class": shape_class,
        "generator": {"recipe": recipe, "params": params},
        "description_templates": templates,
        "associated_theorem_ids": assoc,
    })


TRI_COMMON = ["tri.angle_sum", "tri.inequality"]

S("sub.scalene_triangle", "scalene-triangle", "triangle", "scalene_triangle",
  {"base_min": 10, "base_max": 22, "angle_min": 35, "angle_max": 75},
  ["In triangle {V1}{V2}{V3}, side {V2}{V3} = {len:V2,V3}, ∠{V1}{V2}{V3} = {ang:V1,V2,V3} and ∠{V2}{V3}{V1} = {ang:V2,V3,V1}.",
   "Triangle {V1}{V2}{V3} has base {V2}{V3} = {len:V2,V3} with ∠{V1}{V2}{V3} = {ang:V1,V2,V3} and ∠{V2}{V3}{V1} = {ang:V2,V3,V1}."],
  TRI_COMMON)
S("sub.isosceles_triangle", "isosceles-triangle", "triangle", "isosceles_triangle",
  {"base_min": 8, "base_max": 20, "base_angle_min": 30, "base_angle_max": 75},
  ["Triangle {V1}{V2}{V3} is isosceles with {V1}{V2} = {V1}{V3} and base {V2}{V3} = {len:V2,V3}; ∠{V1}{V2}{V3} = {ang:V1,V2,V3}.",
   "In isosceles triangle {V1}{V2}{V3}, legs {V1}{V2} and {V1}{V3} are equal, the base {V2}{V3} = {len:V2,V3}, and the base angle ∠{V1}{V2}{V3} = {ang:V1,V2,V3}."],
  TRI_COMMON + ["isos.base_angles", "isos.crit_two_sides", "isos.crit_two_angles",
                "isos.apex_median_is_altitude", "isos.apex_altitude_bisects_base"])
S("sub.equilateral_triangle", "equilateral-triangle", "triangle", "equilateral_triangle",
  {"side_min": 8, "side_max": 18},
  ["Triangle {V1}{V2}{V3} is equilateral with side {V1}{V2} = {len:V1,V2}.",
   "In equilateral triangle {V1}{V2}{V3}, every side measures {len:V1,V2}."],
  TRI_COMMON + ["equi.all_angles_60", "equi.crit_three_sides",
                "equi.altitude_ratio", "isos.base_angles"])
S("sub.right_triangle", "right-triangle", "triangle", "right_triangle",
  {"leg_min": 6, "leg_max": 16, "special_angle_prob": 0.4},
  ["In triangle {V1}{V2}{V3}, ∠{V2}{V1}{V3} = {ang:V2,V1,V3}, with legs {V1}{V2} = {len:V1,V2} and {V1}{V3} = {len:V1,V3}.",
   "Right triangle {V1}{V2}{V3} has its right angle at {V1}; the legs are {V1}{V2} = {len:V1,V2} and {V1}{V3} = {len:V1,V3}."],
  TRI_COMMON + ["right.pythagorean", "right.acute_complementary", "right.area_half_legs",
                "right.thirty_half_hypotenuse", "right.hypotenuse_median",
                "trig.sin30", "trig.cos30", "trig.tan30", "trig.sin45", "trig.cos45",
                "trig.tan45", "trig.sin60", "trig.cos60", "trig.tan60"])
S("sub.right_isosceles_triangle", "right-isosceles-triangle", "triangle",
  "right_isosceles_triangle", {"leg_min": 6, "leg_max": 16},
  ["Triangle {V1}{V2}{V3} is right isosceles: ∠{V2}{V1}{V3} = {ang:V2,V1,V3} and {V1}{V2} = {V1}{V3} = {len:V1,V2}.",
   "In triangle {V1}{V2}{V3}, the right angle at {V1} is flanked by equal legs {V1}{V2} = {V1}{V3} = {len:V1,V2}."],
  TRI_COMMON + ["isos.right_base_45", "right.pythagorean", "isos.base_angles",
                "trig.sin45", "trig.cos45", "trig.tan45"])
S("sub.quadrilateral", "quadrilateral", "quadrilateral", "convex_quadrilateral",
  {"base_min": 12, "base_max": 22, "height_min": 8, "height_max": 16},
  ["Quadrilateral {V1}{V2}{V3}{V4} has sides {V1}{V2} = {len:V1,V2}, {V2}{V3} = {len:V2,V3}, {V3}{V4} = {len:V3,V4} and {V4}{V1} = {len:V4,V1}.",
   "In convex quadrilateral {V1}{V2}{V3}{V4}, {V1}{V2} = {len:V1,V2} and ∠{V4}{V1}{V2} = {ang:V4,V1,V2}."],
  ["quad.angle_sum"])
S("sub.parallelogram", "parallelogram", "quadrilateral", "parallelogram",
  {"base_min": 10, "base_max": 20, "side_min": 7, "side_max": 14,
   "angle_min": 45, "angle_max": 135},
  ["In parallelogram {V1}{V2}{V3}{V4}, {V1}{V2} = {len:V1,V2}, {V2}{V3} = {len:V2,V3} and ∠{V4}{V1}{V2} = {ang:V4,V1,V2}.",
   "Parallelogram {V1}{V2}{V3}{V4} has base {V1}{V2} = {len:V1,V2}, side {V2}{V3} = {len:V2,V3}, and ∠{V4}{V1}{V2} = {ang:V4,V1,V2}."],
  ["para.opposite_sides_equal", "para.opposite_sides_parallel",
   "para.diagonals_bisect", "para.area_base_height",
   "quad.angle_sum"])
S("sub.rectangle", "rectangle", "quadrilateral", "rectangle",
  {"base_min": 10, "base_max": 20, "side_min": 6, "side_max": 14},
  ["Rectangle {V1}{V2}{V3}{V4} has {V1}{V2} = {len:V1,V2} and {V2}{V3} = {len:V2,V3}.",
   "In rectangle {V1}{V2}{V3}{V4}, the sides measure {V1}{V2} = {len:V1,V2} and {V2}{V3} = {len:V2,V3}."],
  ["rect.all_angles_90", "rect.diagonals_equal", "rect.area_product",
   "para.opposite_sides_equal", "quad.angle_sum"])
S("sub.rhombus", "rhombus", "quadrilateral", "rhombus",
  {"side_min": 8, "side_max": 16, "angle_min": 45, "angle_max": 135},
  ["Rhombus {V1}{V2}{V3}{V4} has side {V1}{V2} = {len:V1,V2} and ∠{V4}{V1}{V2} = {ang:V4,V1,V2}.",
   "In rhombus {V1}{V2}{V3}{V4}, every side measures {len:V1,V2} and ∠{V4}{V1}{V2} = {ang:V4,V1,V2}."],
  ["rhom.all_sides_equal", "rhom.diagonals_perpendicular",
   "para.opposite_sides_parallel", "quad.angle_sum"])
S("sub.square", "square", "quadrilateral", "square",
  {"side_min": 8, "side_max": 16},
  ["Square {V1}{V2}{V3}{V4} has side {V1}{V2} = {len:V1,V2}.",
   "In square {V1}{V2}{V3}{V4}, every side measures {len:V1,V2}."],
  ["square.sides_and_angles", "square.diagonals", "square.diagonal_ratio",
   "rect.all_angles_90", "quad.angle_sum"])
S("sub.trapezoid", "trapezoid", "quadrilateral", "trapezoid",
  {"base_min": 14, "base_max": 24, "top_min": 6, "top_max": 11,
   "height_min": 7, "height_max": 13},
  ["Trapezoid {V1}{V2}{V3}{V4} has parallel sides {V1}{V2} = {len:V1,V2} and {V4}{V3} = {len:V4,V3}.",
   "In trapezoid {V1}{V2}{V3}{V4}, base {V1}{V2} = {len:V1,V2} is parallel to {V4}{V3} = {len:V4,V3}."],
  ["trap.parallel_bases", "trap.leg_cointerior", "quad.angle_sum"])
S("sub.isosceles_trapezoid", "isosceles-trapezoid", "quadrilateral", "isosceles_trapezoid",
  {"base_min": 14, "base_max": 24, "top_min": 6, "top_max": 11,
   "height_min": 7, "height_max": 13},
  ["Isosceles trapezoid {V1}{V2}{V3}{V4} has parallel sides {V1}{V2} = {len:V1,V2} and {V4}{V3} = {len:V4,V3} with equal legs.",
   "In isosceles trapezoid {V1}{V2}{V3}{V4}, {V1}{V2} = {len:V1,V2} is parallel to {V4}{V3} = {len:V4,V3}, and leg {V1}{V4} = {len:V1,V4}."],
  ["itrap.legs_equal", "itrap.base_angles_equal",
   "trap.parallel_bases", "quad.angle_sum"])
S("sub.circle", "circle", "circle", "circle",
  {"radius_min": 6, "radius_max": 14},
  ["Circle {V1} has center {V1} and radius {rad}.",
   "A circle centered at {V1} has radius {rad}."],
  ["circle.radii_equal", "circle.diameter_twice_radius"])
S("sub.circle_central_angle", "circle-with-central-angle", "circle", "circle_central_angle",
  {"radius_min": 6, "radius_max": 13, "arc_min": 40, "arc_max": 140},
  ["In circle {V1}, radii {V1}{V2} and {V1}{V3} enclose the central angle ∠{V2}{V1}{V3} = {ang:V2,V1,V3}; the radius is {rad}.",
   "Circle {V1} has radius {rad}; points {V2} and {V3} on it are joined to the center, with ∠{V2}{V1}{V3} = {ang:V2,V1,V3}."],
  ["central.angle_at_center", "central.equal_angles_equal_chords", "circle.radii_equal",
   "radius.all_equal", "radius.isosceles_triangle"])
S("sub.circle_inscribed_triangle", "circle-with-inscribed-triangle", "circle",
  "circle_inscribed_triangle",
  {"radius_min": 7, "radius_max": 13, "arc_min": 50},
  ["Triangle {V2}{V3}{V4} is inscribed in circle {V1} of radius {rad}; side {V2}{V3} = {len:V2,V3}.",
   "Circle {V1} (radius {rad}) circumscribes triangle {V2}{V3}{V4}, whose side {V2}{V3} = {len:V2,V3}."],
  ["inscribed.half_central", "regular.inscribed_equilateral", "circle.radii_equal",
   "tri.angle_sum"])
S("sub.circle_tangent", "circle-with-tangent", "circle", "circle_tangent",
  {"radius_min": 5, "radius_max": 10, "dist_min": 4, "dist_max": 12},
  ["From point {V2} outside circle {V1} (radius {rad}), the tangent touches the circle at {V3}; {V2}{V3} = {len:V2,V3}.",
   "Circle {V1} has radius {rad}; the tangent from the external point {V2} meets it at {V3}, with {V2}{V3} = {len:V2,V3}."],
  ["tangent.perpendicular_radius", "tangent.equal_from_external", "circle.radii_equal"])
S("sub.cyclic_quadrilateral", "cyclic-quadrilateral", "circle", "cyclic_quadrilateral",
  {"radius_min": 7, "radius_max": 13, "arc_min": 40},
  ["Quadrilateral {V2}{V3}{V4}{V5} is inscribed in circle {V1} of radius {rad}; ∠{V5}{V2}{V3} = {ang:V5,V2,V3}.",
   "Circle {V1} (radius {rad}) passes through all vertices of quadrilateral {V2}{V3}{V4}{V5}, where ∠{V5}{V2}{V3} = {ang:V5,V2,V3}."],
  ["cyclic.opposite_supplementary", "inscribed.same_arc_equal",
   "regular.inscribed_square"])
S("sub.semicircle", "semicircle", "circle", "semicircle",
  {"radius_min": 7, "radius_max": 13, "apex_min": 35, "apex_max": 145},
  ["{V2}{V3} is a diameter of circle {V1}, and {V4} lies on the circle; {V2}{V3} = {len:V2,V3}.",
   "In circle {V1}, {V2}{V3} is a diameter of length {len:V2,V3} and point {V4} sits on the arc."],
  ["inscribed.diameter_right_angle", "circle.diameter_twice_radius", "tri.angle_sum"])
S("sub.regular_pentagon", "regular-pentagon", "pentagon", "regular_polygon",
  {"sides": 5, "radius_min": 7, "radius_max": 12},
  ["Regular pentagon {V1}{V2}{V3}{V4}{V5} has side {V1}{V2} = {len:V1,V2}.",
   "In regular pentagon {V1}{V2}{V3}{V4}{V5}, every side measures {len:V1,V2}."],
  ["regular.pentagon_interior"])
S("sub.regular_hexagon", "regular-hexagon", "hexagon", "regular_polygon",
  {"sides": 6, "radius_min": 6, "radius_max": 11},
  ["Regular hexagon {V1}{V2}{V3}{V4}{V5}{V6} has side {V1}{V2} = {len:V1,V2}.",
   "In regular hexagon {V1}{V2}{V3}{V4}{V5}{V6}, every side measures {len:V1,V2}."],
  ["regular.hexagon_interior", "regular.hexagon_long_diagonal"])


def main():
    cats = {"substrate-related": 0, "line-element-related": 0}
    ids = set()
    for t in theorems:
        assert t["id"] not in ids, f"duplicate id {t['id']}"
        ids.add(t["id"])
        cats[t["category"]] += 1
    assert len(theorems) == 110, f"need 110 theorems, have {len(theorems)}"
    assert len(substrates) == 20, f"need 20 substrates, have {len(substrates)}"
    for s in substrates:
        for a in s["associated_theorem_ids"]:
            assert a in ids, f"dangling theorem id {a} in {s['id']}"
    print(f"theorems: {len(theorems)} ({cats}), substrates: {len(substrates)}")

    catalog = {
        "schema_version": 1,
        "complete": True,
        "notes": "Bundled default catalog. Theorem entries are grouped by family and "
                 "expanded one checkable fact per entry from standard primary/secondary "
                 "curriculum material; positional conventions for placeholder bindings "
                 "are documented in the repository README.",
        "theorems": theorems,
        "substrates": substrates,
    }
    text = json.dumps(catalog, indent=2, ensure_ascii=False) + "\n"
    with open(os.path.join(ROOT, "assets", "catalog.json"), "w", encoding="utf-8") as f:
        f.write(text)

    header = (
        "#pragma once\n\n"
        "// Generated by tools/gen_catalog.py from assets/catalog.json. Do not edit.\n\n"
        "namespace geosynth {\n\n"
        "inline const char* default_catalog_json() {\n"
        "  return R\"GEOSYNTH_CATALOG(" + text + ")GEOSYNTH_CATALOG\";\n"
        "}\n\n"
        "}  // namespace geosynth\n"
    )
    with open(os.path.join(ROOT, "include", "geosynth", "catalog_default.hpp"), "w",
              encoding="utf-8") as f:
        f.write(header)
    print("wrote assets/catalog.json and include/geosynth/catalog_default.hpp")


if __name__ == "__main__":
    main()

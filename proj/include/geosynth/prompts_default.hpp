#pragma once

// Generated by tools/embed_assets.py from assets/prompts/. Do not edit.

#include <map>
#include <string>

namespace geosynth {

inline const std::map<std::string, std::string>& default_prompt_assets() {
  static const std::map<std::string, std::string> assets = {
      {"augment_analysis.txt",
       R"GEOSYNTH_ASSET(TASK[analysis]: Read the original geometry question and its worked answer. Produce a complete multi-step analysis of the figure and solution, making every implicit theorem and intermediate step explicit.

CONTEXTUAL EXAMPLES:
{EXAMPLES}

ORIGINAL QUESTION:
{QUESTION}

ORIGINAL WORKED ANSWER:
{COT}

Respond with exactly one fenced block in this format:
```analysis
<full analysis text, one paragraph per idea>
```
)GEOSYNTH_ASSET"},
      {"augment_segment.txt",
       R"GEOSYNTH_ASSET(TASK[segment]: Split the analysis below into its essential problem-solving steps. Each step must be a self-contained statement a student could verify.

CONTEXTUAL EXAMPLES:
{EXAMPLES}

ANALYSIS:
{ANALYSIS}

Respond with exactly one fenced block in this format:
```steps
STEP 1: <text>
STEP 2: <text>
...
```
)GEOSYNTH_ASSET"},
      {"augment_stepqa.txt",
       R"GEOSYNTH_ASSET(TASK[stepqa]: Write one question whose unique answer is the step below, phrased so the question is solvable from the original conditions.

CONTEXTUAL EXAMPLES:
{EXAMPLES}

ORIGINAL QUESTION:
{QUESTION}

STEP:
{STEP}

Respond with exactly one fenced block in this format:
```question
QUESTION: <the question text>
ANSWER: <the answer text>
```
)GEOSYNTH_ASSET"},
      {"cot_quality_judge.txt",
       R"GEOSYNTH_ASSET(TASK[quality]: Score the model response below on a 0-10 scale for logical consistency, clarity, and lack of ambiguity. Apply the standards strictly.

SCORING STANDARDS:
- 9-10: every step follows from the previous one, cites a correct justification, and the final answer is clearly stated.
- 7-8: the chain is correct but skips minor justifications or is loosely worded.
- 4-6: the chain reaches the right answer with gaps, circular reasoning, or unclear references.
- 0-3: steps contradict each other, misuse theorems, or the answer does not follow.

QUESTION:
{QUESTION}

MODEL RESPONSE:
{ANSWER}

Respond with exactly one fenced block in this format:
```score
SCORE: <0-10>
REASON: <one short sentence>
```
)GEOSYNTH_ASSET"},
      {"judge.txt",
       R"GEOSYNTH_ASSET(TASK[judge]: Decide whether the question below is uniquely answerable from its stated conditions alone. Answer NO when the question is ambiguous, underdetermined, or refers to information not present in its conditions.

CONTEXTUAL EXAMPLES:
{EXAMPLES}

QUESTION:
{QUESTION}

STATED CONDITIONS:
{PATCH}

PROPOSED ANSWER:
{ANSWER}

Respond with exactly one fenced block in this format:
```verdict
ANSWERABLE: <YES | NO>
REASON: <one short sentence>
```
)GEOSYNTH_ASSET"},
      {"pool.json",
       R"GEOSYNTH_ASSET({
  "templates": [
    {"id": "tpl.isosceles_base", "tags": ["Isosceles Triangles", "General Triangles"],
     "problem": "Triangle PQR is isosceles with PQ = PR and ∠PQR = 50°.",
     "reasoning": "Equal legs PQ = PR make the base angles equal, so ∠PRQ = ∠PQR = 50°; the apex angle is 180° − 50° − 50° = 80°."},
    {"id": "tpl.pythagorean", "tags": ["Right Triangles", "Trigonometric Functions"],
     "problem": "Right triangle XYZ has its right angle at X, XY = 6 and XZ = 8.",
     "reasoning": "The legs satisfy YZ² = XY² + XZ² = 36 + 64 = 100, so the hypotenuse YZ = 10."},
    {"id": "tpl.midline", "tags": ["Triangle Midline", "Medians"],
     "problem": "M and N are the midpoints of sides AB and AC of triangle ABC, with BC = 14.",
     "reasoning": "The midline MN is parallel to the third side BC and half its length, so MN = 7."},
    {"id": "tpl.parallelogram_sides", "tags": ["Parallelogram", "Parallel Lines"],
     "problem": "In parallelogram KLMN, KL = 9 and LM = 5.",
     "reasoning": "Opposite sides of a parallelogram are equal, so MN = KL = 9 and NK = LM = 5."},
    {"id": "tpl.inscribed_angle", "tags": ["Inscribed Angle", "Circle", "Central Angle"],
     "problem": "Points A, B, C lie on circle O and the central angle ∠AOB = 100°.",
     "reasoning": "The inscribed angle ∠ACB subtends the same arc AB as the central angle, so ∠ACB = 100° / 2 = 50°."},
    {"id": "tpl.tangent_radius", "tags": ["Tangent", "Circle", "Right Triangles"],
     "problem": "From external point P a tangent touches circle O at T, with OT = 3 and OP = 5.",
     "reasoning": "A tangent is perpendicular to the radius at the contact point, so triangle OTP is right-angled at T and PT² = OP² − OT² = 16, giving PT = 4."},
    {"id": "tpl.angle_bisector", "tags": ["Angle Bisector", "General Triangles"],
     "problem": "In triangle ABC the bisector from A meets BC at D, with AB = 8 and AC = 4.",
     "reasoning": "An internal bisector divides the opposite side in the ratio of the adjacent sides, so BD / DC = AB / AC = 2."},
    {"id": "tpl.rhombus_diagonals", "tags": ["Rhombus", "Square"],
     "problem": "PQRS is a rhombus with diagonals PR and QS.",
     "reasoning": "The diagonals of a rhombus are perpendicular bisectors of each other, so they cross at right angles at the common midpoint."},
    {"id": "tpl.trapezoid_midsegment", "tags": ["Trapezoid", "Isosceles Trapezoid", "Triangle Midline"],
     "problem": "Trapezoid ABCD has parallel sides AB = 12 and DC = 8; E and F are the midpoints of the legs.",
     "reasoning": "The midsegment joining the legs' midpoints is parallel to the bases and equals their average, so EF = (12 + 8) / 2 = 10."},
    {"id": "tpl.thales", "tags": ["Inscribed Angle", "Circle", "Cyclic Quadrilateral"],
     "problem": "AB is a diameter of a circle and C is another point on the circle.",
     "reasoning": "An angle inscribed in a semicircle is right, so ∠ACB = 90° regardless of where C sits on the arc."},
    {"id": "tpl.equilateral", "tags": ["Equilateral Triangles", "Regular Polygon"],
     "problem": "Triangle DEF is equilateral with side 10.",
     "reasoning": "All angles of an equilateral triangle are 60°, and the altitude is 10·√3/2 ≈ 8.66."},
    {"id": "tpl.quad_angle_sum", "tags": ["Quadrilaterals", "Rectangle", "Trapezoid"],
     "problem": "Quadrilateral WXYZ has ∠W = 70°, ∠X = 110° and ∠Y = 85°.",
     "reasoning": "Interior angles of a quadrilateral sum to 360°, so ∠Z = 360° − 70° − 110° − 85° = 95°."}
  ],
  "knowledge": [
    {"id": "kn.isosceles_def", "tags": ["Isosceles Triangles"],
     "text": "An isosceles triangle has at least two equal sides; the angles opposite those sides are the equal base angles, not the apex angle."},
    {"id": "kn.inscribed_half", "tags": ["Inscribed Angle", "Circle", "Central Angle"],
     "text": "An inscribed angle equals half the central angle over the same arc, never the whole central angle."},
    {"id": "kn.tangent_once", "tags": ["Tangent", "Circle"],
     "text": "A tangent touches the circle at exactly one point, and the radius to that point is perpendicular to the tangent."},
    {"id": "kn.median_vs_bisector", "tags": ["Medians", "Angle Bisector", "Altitudes"],
     "text": "A median ends at the midpoint of the opposite side; an angle bisector splits the angle, not the side, except in special triangles where they coincide."},
    {"id": "kn.parallelogram_vs_trapezoid", "tags": ["Parallelogram", "Trapezoid"],
     "text": "A parallelogram has two pairs of parallel sides; a trapezoid is named for exactly one parallel pair, so their angle facts differ."},
    {"id": "kn.hypotenuse", "tags": ["Right Triangles", "Trigonometric Functions"],
     "text": "The hypotenuse is always the side opposite the right angle and is the longest side of a right triangle."},
    {"id": "kn.midline_half", "tags": ["Triangle Midline"],
     "text": "A midline connects midpoints of two sides; it is parallel to the third side and exactly half of it, not half of the sides it touches."},
    {"id": "kn.diagonal_not_axis", "tags": ["Rectangle", "Rhombus", "Square", "Diagonals"],
     "text": "Rectangle diagonals are equal but not perpendicular; rhombus diagonals are perpendicular but not equal; only a square has both."}
  ],
  "examples": {
    "reasoning": [
      "Patch: \"Triangle ABC is isosceles with AB = AC and base BC = 6.\"\n```step\nSTATEMENT: The base angles are equal: ∠ABC = ∠BCA.\nTHEOREMS: isos.base_angles\nCLAIMS: length(B,C) = 6\n```",
      "Patch: \"Median AD is drawn from A to the midpoint D of BC; AD = 5.\"\n```step\nSTATEMENT: D is the midpoint of BC, so BD = DC and AD = 5.\nTHEOREMS: median.bisects_side\nCLAIMS: length(A,D) = 5\n```",
      "Patch: \"In the completed figure, ∠BAC = 90°, ∠ABC = 60°, ∠BCA = 30°.\"\n```step\nSTATEMENT: The angles confirm a right triangle at A with a 30° angle at C, so the side opposite C is half the hypotenuse.\nTHEOREMS: right.thirty_half_hypotenuse\nCLAIMS: angle(B,A,C) = 90; angle(B,C,A) = 30\n```"
    ],
    "question": [
      "Step: \"The base angles are equal: ∠ABC = ∠BCA.\"\n```question\nQUESTION: If triangle ABC is isosceles with AB = AC, which angles are equal?\nTYPE: relationship\n```",
      "Step: \"YZ = 10 by the Pythagorean relation.\"\n```question\nQUESTION: In right triangle XYZ with legs XY = 6 and XZ = 8, what is the length of the hypotenuse YZ?\nTYPE: side-length\n```",
      "Step: \"∠ACB = 50° as an inscribed angle over arc AB.\"\n```question\nQUESTION: Points A, B, C lie on circle O with central angle ∠AOB = 100°. What is the measure of ∠ACB?\nTYPE: angle\n```"
    ],
    "judge": [
      "Question: \"In right triangle XYZ with legs XY = 6 and XZ = 8, what is the hypotenuse YZ?\"\n```verdict\nANSWERABLE: YES\nREASON: Two legs of a right triangle determine the hypotenuse uniquely.\n```",
      "Question: \"What is the length of a chord of circle O?\"\n```verdict\nANSWERABLE: NO\nREASON: A circle has chords of every length up to the diameter, so no unique answer exists.\n```",
      "Question: \"Triangle ABC has AB = 5. What is ∠ABC?\"\n```verdict\nANSWERABLE: NO\nREASON: One side length does not determine any angle of the triangle.\n```"
    ],
    "analysis": [
      "Question: \"In triangle ABC, AB = AC and ∠B = 50°; find ∠A.\" Answer: \"80°.\"\n```analysis\nThe triangle is isosceles with AB = AC, so the base angles at B and C are equal by the base-angle theorem. Both measure 50°. The interior angles of a triangle sum to 180°, so the apex angle at A is 180° − 50° − 50° = 80°.\n```",
      "Question: \"A tangent from P touches circle O (radius 3) at T with OP = 5; find PT.\" Answer: \"4.\"\n```analysis\nThe radius OT is perpendicular to the tangent PT at the contact point T, so triangle OTP has a right angle at T. By the Pythagorean theorem PT² = OP² − OT² = 25 − 9 = 16, so PT = 4.\n```",
      "Question: \"Parallelogram ABCD has AB = 9, BC = 5; find its perimeter.\" Answer: \"28.\"\n```analysis\nOpposite sides of a parallelogram are equal, so CD = AB = 9 and DA = BC = 5. The perimeter is the sum of all four sides: 9 + 5 + 9 + 5 = 28.\n```"
    ],
    "segment": [
      "```steps\nSTEP 1: AB = AC makes the base angles at B and C equal, both 50°.\nSTEP 2: The angle sum of a triangle gives ∠A = 180° − 50° − 50° = 80°.\n```",
      "```steps\nSTEP 1: The radius OT is perpendicular to tangent PT, so triangle OTP is right-angled at T.\nSTEP 2: PT² = OP² − OT² = 16 by the Pythagorean theorem.\nSTEP 3: PT = 4.\n```",
      "```steps\nSTEP 1: Opposite sides of a parallelogram are equal, so CD = 9 and DA = 5.\nSTEP 2: The perimeter is 9 + 5 + 9 + 5 = 28.\n```"
    ],
    "stepqa": [
      "Step: \"The base angles at B and C are equal, both 50°.\"\n```question\nQUESTION: In triangle ABC with AB = AC and ∠B = 50°, what is the measure of ∠C?\nANSWER: ∠C = 50°, because base angles of an isosceles triangle are equal.\n```",
      "Step: \"Triangle OTP is right-angled at T.\"\n```question\nQUESTION: A tangent from P touches circle O at T. What kind of angle does OT make with PT?\nANSWER: A right angle: the radius is perpendicular to the tangent at the contact point.\n```",
      "Step: \"The perimeter is 9 + 5 + 9 + 5 = 28.\"\n```question\nQUESTION: Parallelogram ABCD has AB = 9 and BC = 5. What is its perimeter?\nANSWER: 28, since opposite sides are equal.\n```"
    ]
  }
}
)GEOSYNTH_ASSET"},
      {"question.txt",
       R"GEOSYNTH_ASSET(TASK[question]: A verified reasoning step is given below. Write one clear question whose unique answer is exactly that step's conclusion. State every condition the solver needs inside the question itself.

CONTEXTUAL EXAMPLES:
{EXAMPLES}

BASIC KNOWLEDGE:
{KNOWLEDGE}

ANSWER STEP:
{STEP}

FIGURE CONDITIONS:
{PATCH}

Respond with exactly one fenced block in this format:
```question
QUESTION: <the question text>
TYPE: <side-length | angle | area | relationship>
```
)GEOSYNTH_ASSET"},
      {"reasoning.txt",
       R"GEOSYNTH_ASSET(TASK[reasoning]: You are given one new fragment of a geometric figure description. Derive exactly one sound reasoning step from it, grounded in the applicable theorems. Later fragments build on earlier steps, so inherit and extend the prior conclusions where they help.

CONTEXTUAL EXAMPLES:
{EXAMPLES}

REFERENCE TEMPLATES:
{TEMPLATES}

BASIC KNOWLEDGE:
{KNOWLEDGE}

APPLICABLE THEOREMS:
{THEOREMS}

PRIOR STEPS:
{PRIOR_STEPS}

DESCRIPTION PATCH:
{PATCH}

Respond with exactly one fenced block in this format:
```step
STATEMENT: <one sentence stating the derived fact>
THEOREMS: <comma-separated theorem ids, or none>
CLAIMS: <semicolon-separated claims of the form length(A,B) = 5 or angle(A,B,C) = 60 or area(A,B,C) = 24, or none>
```
)GEOSYNTH_ASSET"},
  };
  return assets;
}

}  // namespace geosynth

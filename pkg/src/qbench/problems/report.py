"""Instance invariant report: generic invariants plus the per-class structural table"""

import math

import numpy as np

from qbench.core.context import CheckResult
from qbench.core.exceptions import QBenchError
from qbench.linalg import condition_number
from qbench.problems.classes import Shape, Spectrum
from qbench.problems.generator import MIN_PENCIL_CONDITION
from qbench.problems.instance import Instance

BOX_BOUND = 5.0
UNIT_TOLERANCE = 1e-12
ORTHOGONALITY_TOLERANCE = 1e-10
EIGEN_RESIDUAL_TOLERANCE = 1e-8
CONDITION_TOLERANCE = 1e-9
ALIGNMENT_TOLERANCE = 1e-12
NON_ALIGNED_COMPONENT = 1e-6
DISTINCT_ROTATION_THRESHOLD = 0.1


def class_invariant_report(inst: Instance) -> list[CheckResult]:
    """Named pass/fail checks of every instance invariant; never raises"""
    checks: list[CheckResult] = []

    def add(name: str, passed: bool, residual: float | None = None, detail: str = "") -> None:
        checks.append(CheckResult(name, bool(passed), residual, detail))

    pc = inst.problem_class
    d = inst.dimension
    case = pc.case_id
    delta = inst.delta

    for label, value in (
        ("U1", inst.u1), ("U2", inst.u2), ("D1", inst.d1), ("D2", inst.d2),
        ("x1*", inst.x1_star), ("x2*", inst.x2_star),
    ):
        expected = (d, d) if label.startswith("U") else (d,)
        if value.shape != expected or not np.all(np.isfinite(value)):
            add("shapes", False, detail=f"{label} has shape {value.shape} or non-finite entries")
            return checks
    add("shapes", True)

    norm = float(np.linalg.norm(delta))
    add("delta unit length", abs(norm - 1.0) <= UNIT_TOLERANCE, abs(norm - 1.0))

    for label, u in (("U1", inst.u1), ("U2", inst.u2)):
        err = float(np.max(np.abs(u.T @ u - np.eye(d))))
        add(f"{label} orthogonal", err <= ORTHOGONALITY_TOLERANCE, err)

    add("D positive", bool(np.all(inst.d1 > 0) and np.all(inst.d2 > 0)))

    h1_delta = inst.h1 @ delta
    h2_delta = inst.h2 @ delta
    g = inst.g_weight
    residual = float(np.linalg.norm(g * h1_delta - (1.0 - g) * h2_delta))
    scale = float(np.linalg.norm(h1_delta) + np.linalg.norm(h2_delta))
    add("g in (0, 1)", 0.0 < g < 1.0, g)
    add(
        "generalized eigenvector",
        residual <= EIGEN_RESIDUAL_TOLERANCE * scale,
        residual / scale if scale > 0 else math.inf,
    )

    inside = max(float(np.max(np.abs(inst.x1_star))), float(np.max(np.abs(inst.x2_star))))
    add("Pareto set in box", inside <= BOX_BOUND, inside)

    affine_ok = True
    for a, b in ((inst.a1, inst.b1), (inst.a2, inst.b2)):
        affine_ok &= a > 0 and 0.0 <= math.log10(a) <= 6.0 and -a <= b <= a
    add("affine range", affine_ok, detail=f"a=({inst.a1:.6g}, {inst.a2:.6g}) b=({inst.b1:.6g}, {inst.b2:.6g})")

    add("power matches shape", inst.s == Shape(pc.shape).power, inst.s)

    for label, diag, identity_expected in (
        ("H1", inst.d1, case in (1, 2, 5)),
        ("H2", inst.d2, case == 1),
    ):
        if identity_expected:
            add(f"{label} identity spectrum", bool(np.all(diag == 1.0)))
            continue
        h = inst.h1 if label == "H1" else inst.h2
        try:
            cond = condition_number(h)
        except QBenchError as e:
            add(f"{label} conditioning", False, detail=str(e))
            continue
        rel = abs(cond - pc.kappa) / pc.kappa
        add(f"{label} conditioning", rel <= CONDITION_TOLERANCE, rel)

    checks.extend(_alignment_checks(inst))
    checks.extend(_structural_checks(inst))
    return checks


def _alignment_checks(inst: Instance) -> list[CheckResult]:
    delta = inst.delta
    magnitudes = np.sort(np.abs(delta))[::-1]
    if inst.problem_class.aligned:
        off_axis = float(magnitudes[1:].max()) if magnitudes.size > 1 else 0.0
        err = max(abs(magnitudes[0] - 1.0), off_axis)
        return [CheckResult("delta axis aligned", err <= ALIGNMENT_TOLERANCE, err)]
    count = int(np.sum(magnitudes > NON_ALIGNED_COMPONENT))
    return [CheckResult("delta not axis aligned", count >= 2, float(count))]


def _structural_checks(inst: Instance) -> list[CheckResult]:
    pc = inst.problem_class
    case = pc.case_id
    d = inst.dimension
    identity = np.eye(d)
    checks: list[CheckResult] = []

    def add(name: str, passed: bool, residual: float | None = None) -> None:
        checks.append(CheckResult(name, bool(passed), residual))

    if case <= 6:
        add("U1 = I", np.array_equal(inst.u1, identity))
    if case <= 4:
        add("U2 = I", np.array_equal(inst.u2, identity))
    if case in (1, 3, 7):
        add("D1 = D2", np.array_equal(inst.d1, inst.d2))
    if case in (4, 8):
        add("D1 != D2", not np.array_equal(inst.d1, inst.d2))
        ratio = inst.d2 / inst.d1
        pencil = float(ratio.max() / ratio.min())
        add("pencil condition", pencil >= MIN_PENCIL_CONDITION, pencil)
    if case in (7, 8):
        add("U1 = U2", np.array_equal(inst.u1, inst.u2))
    if case == 7:
        add("H1 = H2", np.array_equal(inst.h1, inst.h2))

    # in two dimensions constrained rotations are diagonal and Haar rotations
    # fall within the threshold of I with non-negligible probability
    if d > 2:
        random_rotations = {5: ["U2"], 6: ["U2"], 7: ["U1"], 8: ["U1"], 9: ["U1", "U2"]}
        for label in random_rotations.get(case, []):
            u = inst.u1 if label == "U1" else inst.u2
            dist = float(np.max(np.abs(u - identity)))
            add(f"{label} != I", dist > DISTINCT_ROTATION_THRESHOLD, dist)
    if case == 9 and d > 2:
        dist = float(np.max(np.abs(inst.u1.T @ inst.u2 - identity)))
        add("U1 != U2", dist > DISTINCT_ROTATION_THRESHOLD, dist)

    if pc.needs_duplication and pc.spectrum == Spectrum.ELLIPSOID:
        checks.extend(_duplication_checks(inst))
    return checks


def _duplication_checks(inst: Instance) -> list[CheckResult]:
    d2 = inst.d2
    pairs = [(i, j) for i in range(d2.size) for j in range(i + 1, d2.size) if d2[i] == d2[j]]
    checks = [CheckResult("one duplicated eigenvalue", len(pairs) == 1, float(len(pairs)))]
    if len(pairs) == 1:
        support = set(np.flatnonzero(np.abs(inst.delta) > NON_ALIGNED_COMPONENT).tolist())
        checks.append(CheckResult("delta on duplicated positions", support <= set(pairs[0])))
        if inst.problem_class.case_id == 4:
            i, j = pairs[0]
            checks.append(CheckResult("D1 duplicated at same positions", inst.d1[i] == inst.d1[j]))
    return checks

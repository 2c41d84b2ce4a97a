"""Exact-rational cone membership deciding template goodness.

A template is good when (e(J)/e(F)) * e_V(F) - z lies in the convex cone
of the x-vectors over pairwise disjoint subset triples.  Feasibility is
decided by a dense phase-one simplex over Fractions with Bland's rule;
"good" verdicts carry the conic coefficients and "not good" verdicts a
Farkas separating vector, both re-verified independently of the solver
before being returned.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .graphs import (DEFAULT_WORK_BUDGET, BudgetExceededError, Graph,
                     all_labelled_graphs, graph_to_json, hom_count)
from .gluing import (ClassVector, GluingTemplate, build_j, template_from_json,
                     template_to_json, x_vector, z_vector)

MAX_BASE_VERTICES = 12
GeneratorTriple = tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class GoodnessCertificate:
    """Reusable record of a goodness decision for one template."""

    template: GluingTemplate
    verdict: str  # "good" | "not_good"
    target: ClassVector
    generators_used: tuple[tuple[GeneratorTriple, Fraction], ...]
    farkas_witness: ClassVector | None
    j_vertex_count: int
    j_edge_count: int


def enumerate_generators(f: Graph):
    """Distinct nonzero x-vectors over unordered disjoint triples with
    r1, r3 nonempty; one lexicographically-least triple per vector."""
    n = f.vertex_count
    seen: dict[tuple, tuple[GeneratorTriple, ClassVector]] = {}
    for assign in product(range(4), repeat=n):
        r1 = tuple(v for v in range(n) if assign[v] == 1)
        r2 = tuple(v for v in range(n) if assign[v] == 2)
        r3 = tuple(v for v in range(n) if assign[v] == 3)
        if not r1 or not r3 or r1 > r3:
            continue
        vec = x_vector(f, r1, r2, r3)
        if vec.is_zero():
            continue
        key = tuple(sorted(vec.coeffs.items()))
        if key not in seen or (r1, r2, r3) < seen[key][0]:
            seen[key] = ((r1, r2, r3), vec)
    return [seen[key] for key in sorted(seen)]


def _pivot(tableau, red, row, col):
    piv = tableau[row][col]
    tableau[row] = [x / piv for x in tableau[row]]
    for i, r in enumerate(tableau):
        if i != row and r[col] != 0:
            factor = r[col]
            tableau[i] = [a - factor * b for a, b in zip(r, tableau[row])]
    if red[col] != 0:
        factor = red[col]
        red[:] = [a - factor * b for a, b in zip(red, tableau[row])]


def _phase_one(columns: list[list[Fraction]], b: list[Fraction]):
    """Solve A c = b, c >= 0 exactly.

    Returns ("feasible", coefficients) or ("infeasible", y) where y
    satisfies y.A_j <= 0 for every column and y.b > 0.
    """
    m, n = len(b), len(columns)
    sign = [Fraction(1) if b[i] >= 0 else Fraction(-1) for i in range(m)]
    tableau = []
    for i in range(m):
        row = [sign[i] * columns[j][i] for j in range(n)]
        row += [Fraction(1) if k == i else Fraction(0) for k in range(m)]
        row.append(sign[i] * b[i])
        tableau.append(row)
    basis = [n + i for i in range(m)]
    width = n + m + 1
    red = [Fraction(0)] * width
    for j in range(n + m):
        red[j] = (Fraction(1) if j >= n else Fraction(0)) - sum(tableau[i][j] for i in range(m))
    red[-1] = -sum(tableau[i][-1] for i in range(m))
    while True:
        enter = next((j for j in range(n + m) if red[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if tableau[i][enter] > 0:
                ratio = tableau[i][-1] / tableau[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise AssertionError("phase-one objective is bounded; unbounded pivot")
        _pivot(tableau, red, leave, enter)
        basis[leave] = enter
    objective = -red[-1]
    if objective == 0:
        coeffs = [Fraction(0)] * n
        for i, var in enumerate(basis):
            if var < n:
                coeffs[var] = tableau[i][-1]
        return "feasible", coeffs
    y_flipped = [Fraction(1) - red[n + i] for i in range(m)]
    y = [sign[i] * y_flipped[i] for i in range(m)]
    return "infeasible", y


def check_good(t: GluingTemplate,
               max_base_vertices: int = MAX_BASE_VERTICES) -> GoodnessCertificate:
    """Decide goodness of a template by exact LP feasibility.

    The returned certificate is re-checked from scratch (conic equality or
    Farkas inequalities) before this function returns; a failure there is
    a solver bug, not a property of the template.
    """
    f = t.base
    if f.vertex_count > max_base_vertices:
        raise BudgetExceededError(
            f"generator enumeration 4^{f.vertex_count} exceeds the configured bound")
    j, _ = build_j(t)
    if j.edge_count == 0 or f.edge_count == 0:
        raise ValueError("goodness requires e(J) > 0")
    target = ClassVector.basis(f, range(f.vertex_count)).scaled(
        Fraction(j.edge_count, f.edge_count))
    rhs_vec = target - z_vector(t)
    if rhs_vec.is_zero():
        cert = GoodnessCertificate(t, "good", target, (), None,
                                   j.vertex_count, j.edge_count)
        if not verify_certificate(cert):
            raise AssertionError("trivial certificate failed re-verification")
        return cert
    generators = enumerate_generators(f)
    class_keys = sorted({k for _, vec in generators for k in vec.coeffs}
                        | set(rhs_vec.coeffs), key=lambda k: (len(k), k))
    row_of = {k: i for i, k in enumerate(class_keys)}
    columns = []
    for _, vec in generators:
        col = [Fraction(0)] * len(class_keys)
        for k, v in vec.coeffs.items():
            col[row_of[k]] = v
        columns.append(col)
    b = [rhs_vec.coeffs.get(k, Fraction(0)) for k in class_keys]
    status, payload = _phase_one(columns, b)
    if status == "feasible":
        used = tuple((generators[idx][0], coeff)
                     for idx, coeff in enumerate(payload) if coeff != 0)
        cert = GoodnessCertificate(t, "good", target, used, None,
                                   j.vertex_count, j.edge_count)
    else:
        witness = ClassVector(f, {class_keys[i]: payload[i]
                                  for i in range(len(class_keys)) if payload[i] != 0})
        cert = GoodnessCertificate(t, "not_good", target, (), witness,
                                   j.vertex_count, j.edge_count)
    if not verify_certificate(cert):
        raise AssertionError("solver output failed independent re-verification")
    return cert


def verify_certificate(cert: GoodnessCertificate) -> bool:
    """Recompute everything the certificate asserts, in exact arithmetic.

    Good: coefficients non-negative and z + sum(c * x) equals the target.
    Not good: the witness has non-positive inner product with every
    generator and positive inner product with target - z.
    """
    if cert.verdict not in ("good", "not_good"):
        raise ValueError(f"malformed certificate verdict {cert.verdict!r}")
    t = cert.template
    f = t.base
    j, _ = build_j(t)
    if j.vertex_count != cert.j_vertex_count or j.edge_count != cert.j_edge_count:
        return False
    if j.edge_count == 0 or f.edge_count == 0:
        return False
    target = ClassVector.basis(f, range(f.vertex_count)).scaled(
        Fraction(j.edge_count, f.edge_count))
    if target.coeffs != cert.target.coeffs:
        return False
    z = z_vector(t)
    if cert.verdict == "good":
        if cert.farkas_witness is not None:
            return False
        acc = z
        for (r1, r2, r3), coeff in cert.generators_used:
            if coeff < 0:
                return False
            acc = acc + x_vector(f, r1, r2, r3).scaled(coeff)
        return acc.coeffs == target.coeffs
    witness = cert.farkas_witness
    if witness is None:
        return False
    if witness.inner(target - z) <= 0:
        return False
    for _, vec in enumerate_generators(f):
        if witness.inner(vec) > 0:
            return False
    return True


def binomial_inequality_check(t: GluingTemplate, max_g_vertices: int,
                              cert: GoodnessCertificate | None = None,
                              extra_graphs=(), budget: int | None = None) -> dict:
    """Check t(J,G) >= t(F,G)^(e(J)/e(F)) over all labelled graphs G on up
    to max_g_vertices vertices (plus any extra graphs), with exact rational
    homomorphism counts.

    Requires the template to be certified good.  Reports the minimum
    floating slack, the minimising graph, and whether the exact rational
    comparison held everywhere.
    """
    if budget is None:
        budget = DEFAULT_WORK_BUDGET
    if cert is None:
        cert = check_good(t)
    if cert.verdict != "good":
        raise ValueError("binomial inequality applies to certified-good templates")
    j, _ = build_j(t)
    f = t.base
    ratio = Fraction(j.edge_count, f.edge_count)
    a, bb = ratio.numerator, ratio.denominator
    min_slack = None
    argmin = None
    checked = 0
    exact_ok = True
    candidates = []
    for n in range(1, max_g_vertices + 1):
        candidates.append(all_labelled_graphs(n))
    candidates.append(iter(extra_graphs))

    for pool in candidates:
        for g in pool:
            n = g.vertex_count
            t_j = Fraction(hom_count(j, g, budget), n**j.vertex_count)
            t_f = Fraction(hom_count(f, g, budget), n**f.vertex_count)
            if t_j**bb < t_f**a:
                exact_ok = False
            slack = float(t_j) - float(t_f) ** float(ratio)
            checked += 1
            if min_slack is None or slack < min_slack:
                min_slack = slack
                argmin = g
    return {
        "all_hold_exact": exact_ok,
        "min_slack": min_slack,
        "argmin_graph": graph_to_json(argmin) if argmin is not None else None,
        "graphs_checked": checked,
        "exponent": f"{a}/{bb}",
    }


def _fraction_to_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _fraction_from_str(s: str) -> Fraction:
    return Fraction(s)


def template_hash(t: GluingTemplate) -> str:
    payload = json.dumps(template_to_json(t), sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(payload.encode()).hexdigest()


def _classvec_to_json(vec: ClassVector) -> dict:
    return {",".join(map(str, k)): _fraction_to_str(v) for k, v in sorted(vec.coeffs.items())}


def _classvec_from_json(base: Graph, obj: dict) -> ClassVector:
    coeffs = {}
    for key, val in obj.items():
        k = tuple(int(x) for x in key.split(","))
        coeffs[k] = _fraction_from_str(val)
    return ClassVector(base, coeffs)


def certificate_to_json(cert: GoodnessCertificate) -> dict:
    return {
        "template": template_to_json(cert.template),
        "template_hash": template_hash(cert.template),
        "verdict": cert.verdict,
        "j_vertex_count": cert.j_vertex_count,
        "j_edge_count": cert.j_edge_count,
        "target": _classvec_to_json(cert.target),
        "generators_used": [
            {"r1": list(r1), "r2": list(r2), "r3": list(r3), "coeff": _fraction_to_str(c)}
            for (r1, r2, r3), c in cert.generators_used
        ],
        "farkas_witness": (_classvec_to_json(cert.farkas_witness)
                           if cert.farkas_witness is not None else None),
    }


def certificate_from_json(obj: dict) -> GoodnessCertificate:
    if not isinstance(obj, dict) or "template" not in obj or "verdict" not in obj:
        raise ValueError("certificate JSON needs 'template' and 'verdict' fields")
    t = template_from_json(obj["template"])
    stored = obj.get("template_hash")
    if stored is not None and stored != template_hash(t):
        raise ValueError("certificate template hash mismatch (tampered file?)")
    try:
        gens = tuple(
            ((tuple(g["r1"]), tuple(g["r2"]), tuple(g["r3"])), _fraction_from_str(g["coeff"]))
            for g in obj.get("generators_used", []))
        witness = obj.get("farkas_witness")
        return GoodnessCertificate(
            template=t,
            verdict=obj["verdict"],
            target=_classvec_from_json(t.base, obj.get("target", {})),
            generators_used=gens,
            farkas_witness=(_classvec_from_json(t.base, witness)
                            if witness is not None else None),
            j_vertex_count=int(obj["j_vertex_count"]),
            j_edge_count=int(obj["j_edge_count"]),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed certificate JSON: {exc}") from exc

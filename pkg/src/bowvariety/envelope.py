"""Stable envelopes from attraction data.

Restriction matrices of attracting-cell closures are *input* (JSON
fixtures): computing them requires per-chart geometry that does not reduce to
the diagram combinatorics.  Everything downstream is exact: the recursion
producing stable-envelope coefficient vectors, the three envelope axioms, the
virtual intersection pairing, orthogonality and order-duality checks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from . import algebra, brane, errors, tangent, tie


@dataclass
class AttractionData:
    diagram: brane.BraneDiagram
    chamber: tuple
    points: dict  # id -> TieDiagram
    order: list  # ids, minimal first
    restrictions: dict  # p -> q -> Poly  (R[p][q] = restriction of [L_p] at q)
    tangents: dict  # id -> TangentCharacter
    minus_euler: dict  # id -> FactoredClass e(T_q^-)
    full_euler: dict  # id -> FactoredClass e(T_q)
    dim: int

    @property
    def nvars(self):
        return self.diagram.n_blue

    def restriction(self, p, q):
        return self.restrictions[p][q]

    def rank(self, p):
        return self.order.index(p)


def _schema_error(msg):
    raise errors.SchemaError(msg)


def load_attraction_data(source):
    """Load and validate an attraction-data file (path, JSON text, or dict).

    Structural validation: triangularity of R against the declared order,
    diagonal entries equal to the computed e(T^-), homogeneity of degree
    dim/2 for every nonzero entry.
    """
    if isinstance(source, (str, Path)) and not str(source).lstrip().startswith("{"):
        with open(source) as fh:
            raw = json.load(fh)
    elif isinstance(source, str):
        raw = json.loads(source)
    else:
        raw = source
    if not isinstance(raw, dict):
        _schema_error("top level must be an object")
    for key in ("diagram", "chamber", "points", "order", "restrictions"):
        if key not in raw:
            _schema_error(f"missing key {key!r}")

    try:
        diagram = brane.parse(raw["diagram"])
    except errors.BowError as exc:
        _schema_error(f"bad diagram: {exc}")
    nvars = diagram.n_blue
    chamber = tuple(raw["chamber"])
    if sorted(chamber) != list(range(1, nvars + 1)):
        _schema_error(f"chamber {chamber} is not a permutation of 1..{nvars}")

    points = {}
    for entry in raw["points"]:
        if not isinstance(entry, dict) or "id" not in entry or "ties" not in entry:
            _schema_error("each point needs 'id' and 'ties'")
        pid = entry["id"]
        if pid in points:
            _schema_error(f"duplicate point id {pid!r}")
        try:
            t = tie.from_names(diagram, entry["ties"])
        except (KeyError, ValueError) as exc:
            _schema_error(f"point {pid}: {exc}")
        report = tie.is_valid(t)
        if not report.ok:
            _schema_error(f"point {pid}: {'; '.join(report.violations)}")
        points[pid] = t

    order = list(raw["order"])
    if sorted(order) != sorted(points):
        _schema_error("order must list every point id exactly once")

    restrictions = {}
    for p in order:
        row = raw["restrictions"].get(p, {})
        if not isinstance(row, dict):
            _schema_error(f"restrictions[{p}] must be an object")
        out = {}
        for q in order:
            expr = row.get(q, "0")
            try:
                out[q] = algebra.poly_parse(expr, nvars)
            except errors.SyntaxError as exc:
                _schema_error(f"restrictions[{p}][{q}]: {exc}")
        unknown = set(row) - set(order)
        if unknown:
            _schema_error(f"restrictions[{p}] mentions unknown points {unknown}")
        restrictions[p] = out

    tangents = {p: tangent.tangent_character(t, p) for p, t in points.items()}
    dims = {tc.char.total() for tc in tangents.values()}
    if len(dims) != 1:
        raise errors.InconsistentDimension(str(sorted(dims)))
    dim = dims.pop()

    minus_euler, full_euler = {}, {}
    for p, tc in tangents.items():
        split = tangent.chamber_split(tc, chamber)
        minus_euler[p] = tangent.euler_class(split.minus)
        full_euler[p] = tangent.euler_class(tc.char)

    for pi, p in enumerate(order):
        for qi, q in enumerate(order):
            entry = restrictions[p][q]
            if qi > pi and not entry.is_zero():
                raise errors.TriangularityViolation(f"R[{p}][{q}] != 0")
            if not entry.is_zero() and not entry.is_homogeneous(dim // 2):
                raise errors.HomogeneityViolation(f"R[{p}][{q}]")
        if restrictions[p][p] != minus_euler[p].expand():
            raise errors.DiagonalMismatch(
                f"R[{p}][{p}] = {restrictions[p][p].render()}, "
                f"e(T^-) = {minus_euler[p].expand().render()}"
            )

    return AttractionData(
        diagram=diagram,
        chamber=chamber,
        points=points,
        order=order,
        restrictions=restrictions,
        tangents=tangents,
        minus_euler=minus_euler,
        full_euler=full_euler,
        dim=dim,
    )


@dataclass
class StabClass:
    point: str
    coeffs: dict  # q -> int, support below the point
    restrictions: dict  # q -> Poly

    def to_json(self):
        return {
            "point": self.point,
            "coeffs": {q: c for q, c in self.coeffs.items() if c},
            "restrictions": {q: p.render() for q, p in self.restrictions.items()},
        }


def stable_envelopes(data, order=None):
    """Run the envelope recursion for every fixed point.

    Starting from gamma = [L_p], repeatedly subtract the integer multiple of
    [L_q] (q descending below p) that kills the h-free part of the
    restriction at q.  The three axioms (normalization, support, smallness)
    are verified on each result before returning.
    """
    if order is None:
        order = data.order
    elif sorted(order) != sorted(data.order):
        raise ValueError("order must be a permutation of the data's points")
    stabs = []
    for i, p in enumerate(order):
        coeffs = {p: 1}
        gamma = dict(data.restrictions[p])
        for j in range(i, 0, -1):
            q = order[j - 1]
            try:
                a = algebra.integer_ratio_mod_h(gamma[q], data.minus_euler[q])
            except errors.NotProportional as exc:
                raise errors.IntegralityFailure(
                    f"point {p}, step {q}: {exc}"
                ) from exc
            if a:
                coeffs[q] = coeffs.get(q, 0) - a
                row = data.restrictions[q]
                gamma = {r: gamma[r] - a * row[r] for r in gamma}
        stab = StabClass(point=p, coeffs=coeffs, restrictions=gamma)
        _verify_axioms(stab, data)
        stabs.append(stab)
    key = {p: k for k, p in enumerate(data.order)}
    stabs.sort(key=lambda s: key[s.point])
    return stabs


def _verify_axioms(stab, data):
    p = stab.point
    rank = data.rank(p)
    if stab.restrictions[p] != data.minus_euler[p].expand():
        raise errors.AxiomFailure(f"normalization fails at {p}")
    for q, c in stab.coeffs.items():
        if c and data.rank(q) > rank:
            raise errors.AxiomFailure(f"support of Stab({p}) reaches above: {q}")
    for q, entry in stab.restrictions.items():
        if data.rank(q) > rank and not entry.is_zero():
            raise errors.AxiomFailure(f"Stab({p}) restricts nontrivially at {q}")
        if data.rank(q) < rank and not entry.mod_h().is_zero():
            raise errors.AxiomFailure(f"smallness fails for Stab({p}) at {q}")


def virtual_pairing(u, v, data):
    """Virtual intersection pairing of two restriction vectors:
    sum over fixed points p of u_p * v_p / e(T_p)."""
    total = algebra.RationalFn.const(data.nvars, 0)
    for p in data.order:
        num = u[p] * v[p]
        if not num.is_zero():
            total = total + algebra.RationalFn(num, data.full_euler[p])
    return total


def gram_matrix(stabs, op_stabs, data, op_data):
    """All pairwise pairings of envelopes from opposite chambers.

    Rows and columns are both indexed by data.order, so the orthogonality
    theorem asserts the identity matrix; deviations mean the two data files
    are inconsistent (reported by the caller's checks).
    """
    _check_paired(data, op_data)
    by_point = {s.point: s for s in stabs}
    op_by_point = {s.point: s for s in op_stabs}
    return [
        [
            virtual_pairing(
                by_point[p].restrictions, op_by_point[q].restrictions, data
            )
            for q in data.order
        ]
        for p in data.order
    ]


def _check_paired(data, op_data):
    if brane.render(data.diagram) != brane.render(op_data.diagram):
        raise errors.ChamberMismatch("different diagrams")
    if sorted(data.points) != sorted(op_data.points):
        raise errors.ChamberMismatch("different point sets")
    if tuple(reversed(data.chamber)) != op_data.chamber:
        raise errors.ChamberMismatch(
            f"chambers {data.chamber} and {op_data.chamber} are not opposite"
        )


@dataclass
class CheckReport:
    ok: bool = True
    messages: list = field(default_factory=list)

    def fail(self, msg):
        self.ok = False
        self.messages.append(msg)


def check_polynomiality(stabs, op_stabs, data, op_data, gammas=None):
    """Check that (Stab(p) * gamma, Stab_op(q)) is a polynomial for every
    p, q and every test class gamma.

    gamma defaults to 1 together with the restriction vector of each
    attracting-cell closure [L_r].
    """
    _check_paired(data, op_data)
    if gammas is None:
        one = {p: algebra.Poly.const(data.nvars, 1) for p in data.order}
        gammas = [one] + [dict(data.restrictions[r]) for r in data.order]
    report = CheckReport()
    for s in stabs:
        for k, gamma in enumerate(gammas):
            u = {p: s.restrictions[p] * gamma[p] for p in data.order}
            for o in op_stabs:
                pairing = virtual_pairing(u, o.restrictions, data)
                if not pairing.is_polynomial():
                    report.fail(
                        f"(Stab({s.point})*gamma[{k}], Stab_op({o.point})) = "
                        f"{pairing.render()} is not polynomial"
                    )
    return report


def opposite_order_check(data, op_data):
    """The partial order read off the R-support of one chamber must be the
    exact reverse of the other chamber's."""
    _check_paired(data, op_data)
    report = CheckReport()
    fwd = {
        (p, q)
        for p in data.order
        for q in data.order
        if p != q and not data.restrictions[p][q].is_zero()
    }
    bwd = {
        (q, p)
        for p in op_data.order
        for q in op_data.order
        if p != q and not op_data.restrictions[p][q].is_zero()
    }
    for pair in sorted(fwd - bwd):
        report.fail(f"relation {pair[1]} < {pair[0]} has no opposite counterpart")
    for pair in sorted(bwd - fwd):
        report.fail(f"opposite relation {pair[0]} < {pair[1]} has no counterpart")
    return report

"""Tie diagrams: validation, enumeration, Hanany-Witten fixed-point matching.

A tie diagram on a brane diagram is a set of ties, each joining a red and a
blue colored line, such that every black line X is covered by exactly d_X
ties.  Tie diagrams classify the torus fixed points of the bow variety.

Internally a tie is an ordered pair (l, r) of 1-based colored positions with
l < r; the pair covers the black lines X_{l+1} .. X_r.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import brane, errors


@dataclass(frozen=True)
class TieDiagram:
    base: brane.BraneDiagram
    ties: frozenset  # of (left_pos, right_pos)

    def __post_init__(self):
        object.__setattr__(self, "ties", frozenset(tuple(t) for t in self.ties))

    def sorted_ties(self):
        return sorted(self.ties)

    def named_ties(self):
        """Ties as [left name, right name] pairs, canonically sorted."""
        return [
            [self.base.line_name(l), self.base.line_name(r)]
            for l, r in self.sorted_ties()
        ]

    def cover_count(self, j):
        """Number of ties covering black line X_j."""
        return sum(1 for l, r in self.ties if l < j <= r)

    def to_json(self):
        return {"diagram": brane.render(self.base), "ties": self.named_ties()}

    @classmethod
    def from_json(cls, data):
        base = brane.parse(data["diagram"])
        return from_names(base, data["ties"])

    def __repr__(self):
        return f"TieDiagram({brane.render(self.base)!r}, {self.named_ties()})"


def from_names(base, named):
    """Build a tie diagram from [left name, right name] pairs."""
    ties = set()
    for a, b in named:
        pa, pb = base.position_of(a), base.position_of(b)
        if pa >= pb:
            raise ValueError(f"tie ({a},{b}) is not left-to-right")
        ties.add((pa, pb))
    return TieDiagram(base, frozenset(ties))


@dataclass
class ValidityReport:
    ok: bool
    violations: list = field(default_factory=list)


def is_valid(t):
    """Check the tie-diagram axioms; returns a :class:`ValidityReport`.

    Axioms: every tie joins one red and one blue line, left strictly before
    right, and each black line X is covered exactly d_X times.
    """
    report = ValidityReport(ok=True)
    d = t.base
    for l, r in sorted(t.ties):
        if not (1 <= l < r <= d.n_colored):
            report.violations.append(f"tie ({l},{r}) out of range")
        elif d.color_at(l) == d.color_at(r):
            report.violations.append(
                f"tie ({d.line_name(l)},{d.line_name(r)}) joins two "
                f"{'red' if d.color_at(l) == brane.RED else 'blue'} lines"
            )
    for j in range(1, len(d.blacks) + 1):
        got = t.cover_count(j)
        if got != d.label(j):
            report.violations.append(
                f"black line X{j}: covered {got} times, label is {d.label(j)}"
            )
    report.ok = not report.violations
    return report


def enumerate_tie_diagrams(d):
    """All tie diagrams of an admissible diagram, canonically ordered.

    Depth-first backtracking over candidate red/blue pairs in lexicographic
    order, pruning as soon as a black line is over- or under-coverable.
    Canonical order of the output is lexicographic on the sorted tie list.
    """
    n_black = len(d.blacks)
    candidates = [
        (l, r)
        for l in range(1, d.n_colored + 1)
        for r in range(l + 1, d.n_colored + 1)
        if d.color_at(l) != d.color_at(r)
    ]
    candidates.sort()
    n_cand = len(candidates)

    # remaining[i][j] = how many candidates with index >= i cover black X_j
    remaining = [[0] * (n_black + 1)]
    for l, r in reversed(candidates):
        row = list(remaining[-1])
        for j in range(l + 1, r + 1):
            row[j - 1] += 1
        remaining.append(row)
    remaining.reverse()

    need = list(d.blacks)
    found = []
    chosen = []

    def feasible(i):
        row = remaining[i]
        for j in range(n_black):
            if need[j] < 0 or need[j] > row[j]:
                return False
        return True

    def rec(i):
        if not feasible(i):
            return
        if i == n_cand:
            found.append(TieDiagram(d, frozenset(chosen)))
            return
        l, r = candidates[i]
        # include the candidate first: lexicographically smaller tie lists
        # contain earlier pairs, but plain DFS plus a final sort is simplest
        chosen.append((l, r))
        for j in range(l, r):
            need[j] -= 1
        rec(i + 1)
        chosen.pop()
        for j in range(l, r):
            need[j] += 1
        rec(i + 1)

    rec(0)
    found.sort(key=lambda t: t.sorted_ties())
    return found


def canonical_id(d, t):
    """The "D<k>" identifier of a tie diagram in canonical enumeration order."""
    all_ties = enumerate_tie_diagrams(d)
    for k, cand in enumerate(all_ties, start=1):
        if cand.ties == t.ties:
            return f"D{k}"
    raise KeyError("tie diagram is not a fixed point of this brane diagram")


def hw_match(t, k):
    """The fixed-point matching psi for the HW move at colored positions
    (k, k+1): transform the base diagram and toggle the tie between the two
    moved lines.  An involution."""
    d = t.base
    try:
        new_base = brane.hw_transition(d, k)
    except errors.BowError as exc:
        raise errors.IllegalMove(str(exc)) from exc

    def remap(pos):
        if pos == k:
            return k + 1
        if pos == k + 1:
            return k
        return pos

    new_ties = set()
    for l, r in t.ties:
        l2, r2 = sorted((remap(l), remap(r)))
        new_ties.add((l2, r2))
    moved = (k, k + 1)
    if moved in new_ties:
        new_ties.remove(moved)
    else:
        new_ties.add(moved)
    result = TieDiagram(new_base, frozenset(new_ties))
    report = is_valid(result)
    if not report.ok:
        raise errors.IllegalMove("; ".join(report.violations))
    return result


def render_ascii(t):
    """Draw the tie diagram: base line in DSL form, ties with a red left end
    above, ties with a blue left end below."""
    d = t.base
    base_str = brane.render(d)
    # x-coordinate of each colored line inside base_str
    xs = []
    for i, c in enumerate(base_str):
        if c in "/\\":
            xs.append(i)
    width = len(base_str)
    above = [p for p in t.sorted_ties() if d.color_at(p[0]) == brane.RED]
    below = [p for p in t.sorted_ties() if d.color_at(p[0]) == brane.BLUE]

    def arc_row(l, r):
        row = [" "] * width
        for x in range(xs[l - 1], xs[r - 1] + 1):
            row[x] = "-"
        row[xs[l - 1]] = "+"
        row[xs[r - 1]] = "+"
        return "".join(row).rstrip()

    lines = [arc_row(l, r) for l, r in reversed(above)]
    lines.append(base_str)
    lines.extend(arc_row(l, r) for l, r in below)
    return "\n".join(lines)

"""Equivariant tangent characters at fixed points, chamber splits, Euler
classes.

The tangent character is computed by hamiltonian-reduction bookkeeping over
the fiber characters: triangle slots and red slots contribute Hom-characters,
the moment-map target carries an extra h, and the gauge directions are
subtracted at weights 0 and h.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import algebra, butterfly, errors, tie


@dataclass
class TangentCharacter:
    point: str
    char: algebra.Character

    def weights(self):
        return self.char.weights()

    def to_json(self):
        return {
            "point": self.point,
            "weights": [
                {"a": list(w.a), "m": w.m, "mult": m}
                for w, m in sorted(
                    self.char.terms.items(), key=lambda kv: kv[0].sort_key()
                )
            ],
        }


@dataclass
class ChamberSplit:
    chamber: tuple
    plus: algebra.Character
    minus: algebra.Character


def _one_dim(nvars, w):
    return algebra.Character(nvars, {w: 1})


def tangent_character(t, point_id=None):
    """Tangent character at the fixed point of a tie diagram.

    Builds the virtual character

        sum over blue U of  [ W_{U+}^v * W_{U-}
                              + h*(W_{U-}*W_{U-}^v + W_{U+}*W_{U+}^v)
                              + (W_{U-} - t_U) + (t_U + h - W_{U+})
                              - h * W_{U+}^v * W_{U-} ]
      + sum over red V of   [ h * W_{V+}^v * W_{V-} + W_{V-}^v * W_{V+} ]
      - (1 + h) * sum over black X of  W_X * W_X^v

    from the fiber characters, then checks effectiveness, the
    t_i - t_j + m*h weight form, and stability under w -> h - w.
    """
    d = t.base
    nvars = d.n_blue
    n = len(d.blacks)
    fibers = {j: butterfly.fiber_character(t, j) for j in range(1, n + 1)}
    hw = algebra.h(nvars)
    total = algebra.Character(nvars)

    for u, p in enumerate(d.blue_positions(), start=1):
        wm, wp = fibers[p], fibers[p + 1]
        tu = algebra.t(u, nvars)
        total = total + wp.dual() * wm
        total = total + (wm * wm.dual() + wp * wp.dual()).shift(hw)
        total = total + wm.shift(-tu)
        total = total + wp.dual().shift(tu + hw)
        # the triangle relation B^-A - AB^+ + ab lives in Hom(W_{U+}, W_{U-})
        total = total - (wp.dual() * wm).shift(hw)
    for q in d.red_positions():
        wm, wp = fibers[q], fibers[q + 1]
        total = total + (wp.dual() * wm).shift(hw)
        total = total + wm.dual() * wp
    gauge = algebra.Character(nvars)
    for j in range(1, n + 1):
        gauge = gauge + fibers[j] * fibers[j].dual()
    total = total - gauge - gauge.shift(hw)

    if not total.is_effective():
        raise errors.NonEffective(total.render())
    for w in total.terms:
        if w.difference_indices() is None:
            raise errors.BadWeightForm(w.render())
    if total.involution_image() != total:
        raise errors.BrokenSymplecticInvolution(total.render())
    if point_id is None:
        point_id = tie.canonical_id(d, t)
    return TangentCharacter(point_id, total)


def dimension(d):
    """Tangent dimension of the bow variety, read off at the fixed points.

    All fixed points must agree; disagreement signals corrupted input.
    """
    points = tie.enumerate_tie_diagrams(d)
    if not points:
        raise ValueError("diagram has no tie diagrams")
    dims = set()
    for k, t in enumerate(points, start=1):
        dims.add(tangent_character(t, f"D{k}").char.total())
    if len(dims) != 1:
        raise errors.InconsistentDimension(f"{sorted(dims)} on {d!r}")
    return dims.pop()


def chamber_split(tc, pi):
    """Split a tangent character into attracting/repelling parts for the
    chamber t_{pi(1)} > ... > t_{pi(N)}.

    The weight t_i - t_j + m*h is attracting iff t_i > t_j on the chamber,
    i.e. iff i appears before j in pi.
    """
    pi = tuple(pi)
    rank = {i: k for k, i in enumerate(pi)}
    nvars = tc.char.nvars
    plus = algebra.Character(nvars)
    minus = algebra.Character(nvars)
    for w, mult in tc.char.terms.items():
        ij = w.difference_indices()
        if ij is None:
            raise errors.DegenerateWeight(w.render())
        i, j = ij
        if rank[i] < rank[j]:
            plus.terms[w] = mult
        else:
            minus.terms[w] = mult
    return ChamberSplit(pi, plus, minus)


def euler_class(char):
    """Equivariant Euler class of an effective character: the product of its
    weights, kept in factored form."""
    return algebra.FactoredClass.from_character(char)

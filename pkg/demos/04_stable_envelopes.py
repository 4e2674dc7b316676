"""Stable envelopes: the recursion, its axioms, and duality across chambers.

Attraction data (restriction matrix, chamber, partial order, Euler classes)
is stored as JSON; the bundled fixtures cover a three-blue example and both
chambers of the cotangent bundle of the projective line.  The recursion
produces, for each fixed point p, an integral combination of chart classes
whose restrictions satisfy the normalization, support, and smallness axioms.
Envelopes from opposite chambers are orthonormal for the virtual intersection
pairing.

Run with:  python3 demos/04_stable_envelopes.py
"""

from importlib import resources

from bowvariety import brane, envelope

FIXTURES = resources.files("bowvariety") / "fixtures"


def main():
    data = envelope.load_attraction_data(FIXTURES / "example54_chamber321.json")
    print(f"diagram {brane.render(data.diagram)}, chamber {data.chamber}")
    print(f"partial order (minimal first): {data.order}\n")

    stabs = envelope.stable_envelopes(data)  # axioms verified internally
    for s in stabs:
        combo = " + ".join(
            (f"{c}*[{q}]" if c != 1 else f"[{q}]")
            for q, c in sorted(s.coeffs.items())
            if c
        )
        print(f"Stab({s.point}) = {combo}")
        for q in data.order:
            entry = s.restrictions[q]
            if not entry.is_zero():
                print(f"    at {q}: {entry.render()}")
    print()

    # Opposite chambers: the Gram matrix of the virtual pairing must be the
    # identity, and every pairwise pairing must already be a polynomial.
    lo = envelope.load_attraction_data(FIXTURES / "tstar_p1_chamber12.json")
    hi = envelope.load_attraction_data(FIXTURES / "tstar_p1_chamber21.json")
    s_lo = envelope.stable_envelopes(lo)
    s_hi = envelope.stable_envelopes(hi)
    gram = envelope.gram_matrix(s_lo, s_hi, lo, hi)
    print("gram matrix across opposite chambers of 0/1\\1\\1/0:")
    for row in gram:
        print("  [" + ", ".join(entry.render() for entry in row) + "]")
    assert all(
        entry == (1 if i == j else 0)
        for i, row in enumerate(gram)
        for j, entry in enumerate(row)
    )
    assert envelope.check_polynomiality(s_lo, s_hi, lo, hi).ok
    assert envelope.opposite_order_check(lo, hi).ok
    print("orthogonality, polynomiality, and order checks: all pass")


if __name__ == "__main__":
    main()

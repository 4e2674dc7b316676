"""Brane diagrams: parsing, invariants, and Hanany-Witten moves.

A brane diagram is written as an alternating string of black-line labels and
colored separators: '/' is a red line, '\\' is a blue line.  This script walks
through the basic combinatorics on a couple of small diagrams.

Run with:  python3 demos/01_diagrams_and_moves.py
"""

from bowvariety import brane

DIAGRAMS = [
    "0/1\\1\\1/0",  # the cotangent bundle of the projective line
    "0/1\\1/2\\2\\2/0",  # a three-blue example with five fixed points
    "0\\1/0",  # a single point
]


def describe(src):
    d = brane.parse(src)
    print(f"diagram {brane.render(d)}")
    print(f"  black-line labels: {list(d.blacks)}")
    print(f"  red lines: {d.n_red}  (positions {d.red_positions()})")
    print(f"  blue lines: {d.n_blue}  (positions {d.blue_positions()})")
    print(f"  admissible: {brane.admissible(d)}")
    # sdeg counts the red/blue crossings a separating sequence must undo
    print(f"  separation degree: {brane.sdeg(d)}")
    print()
    return d


def main():
    for src in DIAGRAMS:
        describe(src)

    # A Hanany-Witten move swaps one adjacent red/blue pair; the middle black
    # label changes so that the variety (and all its fixed-point data) does
    # not.  Applying moves until every blue line sits left of every red line
    # produces the separated form.
    d = brane.parse(DIAGRAMS[1])
    print("one move at position 3:", brane.render(brane.hw_transition(d, 3)))
    sep, moves = brane.separate(d)
    print(f"separated form: {brane.render(sep)}  (moves applied: {moves})")
    assert brane.separated(sep)
    assert len(moves) == brane.sdeg(d)


if __name__ == "__main__":
    main()

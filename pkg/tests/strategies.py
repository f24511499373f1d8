"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from amalgam.stepfn import normalize

positive_rationals = st.builds(Fraction, st.integers(1, 20), st.integers(1, 8))


@st.composite
def step_functions(draw, max_pieces=6):
    """Non-negative step functions with rational breakpoints, possibly with gaps."""
    t = Fraction(0)
    pieces = []
    for _ in range(draw(st.integers(0, max_pieces))):
        if draw(st.booleans()):
            t += draw(positive_rationals)
        length = draw(positive_rationals)
        pieces.append((t, t + length, draw(positive_rationals)))
        t += length
    return normalize(pieces)


nonzero_steps = step_functions().filter(lambda f: not f.is_zero)

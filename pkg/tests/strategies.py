from hypothesis import strategies as st

from dnarayana.monomials import LEAF, Lin, Monomial

arities = st.integers(2, 5)


def factor_sequences(d, max_leaves=12):
    """Factor sequences of length 1 mod d-1, nested through Lin."""

    def seq(children):
        return st.integers(0, 2).flatmap(
            lambda j: st.lists(children, min_size=1 + j * (d - 1), max_size=1 + j * (d - 1))
        ).map(tuple)

    factors = st.recursive(
        st.just(LEAF),
        lambda children: seq(children).map(Lin),
        max_leaves=max_leaves,
    )
    return seq(factors)


@st.composite
def monomials(draw, d=None):
    if d is None:
        d = draw(arities)
    return Monomial(d, draw(factor_sequences(d)))

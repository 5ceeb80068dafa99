"""Hypothesis strategies shared by the kolam test modules."""
from hypothesis import strategies as st

from kolam.geometry import ConnectionStyle
from kolam.sequence import coprime_arms, make_spec


@st.composite
def coprime_pairs(draw, max_product=1000, max_dots=40, min_arms=1):
    """(m, n) with gcd(m, n) = 1, m*n <= max_product and n >= min_arms."""
    m = draw(st.integers(min_value=1, max_value=max_dots))
    arms = coprime_arms(m, max_product // m, start=min_arms)
    n = draw(st.sampled_from(arms))
    return m, n


@st.composite
def kolam_specs(draw, max_product=1000, min_arms=1, styles=tuple(ConnectionStyle)):
    m, n = draw(coprime_pairs(max_product=max_product, min_arms=min_arms))
    style = draw(st.sampled_from(styles))
    bulge = draw(st.fractions(min_value=0, max_value=1, max_denominator=1000).filter(lambda b: 0 < b < 1))
    return make_spec(m, n, style, bulge)


def valid_pairs(max_dots=30, max_arms=31):
    """Every coprime (m, n) with m <= max_dots and n <= max_arms, in order."""
    for m in range(1, max_dots + 1):
        for n in coprime_arms(m, max_arms):
            yield m, n

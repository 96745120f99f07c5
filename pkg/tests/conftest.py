import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from linkhomotopy.rfree import RFWord
from linkhomotopy.words import Word, simple_commutator

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def words(draw, alphabet_size=3, max_length=12):
    """Possibly unreduced letter sequences; Word reduces them."""
    pairs = draw(
        st.lists(
            st.tuples(st.integers(1, alphabet_size), st.sampled_from([1, -1])),
            max_size=max_length,
        )
    )
    return Word.from_pairs(pairs, alphabet_size)


@st.composite
def rf_words(draw, n_min=2, n_max=5, max_length=14):
    n = draw(st.integers(n_min, n_max))
    return RFWord(draw(words(n - 1, max_length)), n)


def random_brunnian(n: int, rng: random.Random, conj_length: int = 4) -> RFWord:
    """A commutator of conjugates h t_pi(s)^{+-1} h^-1 using every generator once."""
    from linkhomotopy.words import random_word

    order = list(range(1, n))
    rng.shuffle(order)
    factors = []
    for g in order:
        h = random_word(n - 1, rng.randint(0, conj_length), rng)
        factors.append(h * Word.generator(g, n - 1, rng.choice([1, -1])) * ~h)
    return RFWord(simple_commutator(factors), n)


@pytest.fixture
def rng():
    return random.Random(20261017)

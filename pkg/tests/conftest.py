import random

import pytest

from hopfgrow.elements import AlgebraElement


def random_element(p, rng, max_degree=3, group_radius=2, nterms=3):
    """A random element with small words and simple coefficients."""
    ball = p.group.ball(group_radius)
    pool = [p.domain.one(), p.domain.rational(-1), p.domain.rational(2)]
    pool += [p.domain.zeta()] if p.domain.conductor > 1 else []
    pool += [p.domain.q(i) for i in range(p.domain.nvars)]
    out = AlgebraElement({})
    for _ in range(rng.randint(1, nterms)):
        h = ball[rng.randrange(len(ball))]
        deg = rng.randint(0, max_degree)
        yw = tuple(rng.randrange(p.ny) for _ in range(deg)) if p.ny else ()
        coeff = pool[rng.randrange(len(pool))]
        word = p.normalize([(coeff, (("g", h),) + tuple(("y", i) for i in yw))])
        out = out + word
    return out


@pytest.fixture
def rng():
    return random.Random(20240817)

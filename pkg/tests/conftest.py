import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from sscodes.gf import field_of_order

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SMALL_Q = (2, 3, 4, 5, 7, 8, 9)


@pytest.fixture(params=SMALL_Q, ids=lambda q: f"q{q}")
def small_field(request):
    return field_of_order(request.param)


@st.composite
def vectors(draw, F, k):
    return np.array(draw(st.lists(st.integers(0, F.q - 1), min_size=k, max_size=k)), dtype=np.int64)


@st.composite
def matrices(draw, F, max_rows=4, max_cols=5):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    flat = draw(st.lists(st.integers(0, F.q - 1), min_size=r * c, max_size=r * c))
    return np.array(flat, dtype=np.int64).reshape(r, c)


@st.composite
def ss_params(draw, qs=(2, 3, 4, 5), max_k=5, max_points=4096, modified=False):
    """Random SSParams that satisfy condition 2 and fit the default subspace strategy."""
    from sscodes.construction import SSParams

    q = draw(st.sampled_from(qs))
    ks = [k for k in range(2, max_k + 1) if q ** k <= max_points]
    k = draw(st.sampled_from(ks))
    budget = q ** k - q ** (k - 1)
    u, used, coords = [], 0, k
    for _ in range(draw(st.integers(0, 6))):
        x = draw(st.integers(1, k - 1))
        if x > 1 and x > coords:
            continue
        if used + q ** x - 1 >= budget:
            break
        u.append(x)
        used += q ** x - 1
        coords -= min(x, coords)
    # the default strategy places big blocks on coordinates first; keep only configurations it can place
    u.sort(reverse=True)
    free, ok = k, []
    for x in u:
        if x <= free:
            free -= x
            ok.append(x)
        elif x == 1:
            ok.append(x)
    e = q - 1
    if modified:
        e = draw(st.sampled_from([d for d in range(1, q) if (q - 1) % d == 0]))
    return SSParams(field_of_order(q), k, tuple(ok), e)

import logging
from functools import lru_cache

import numpy as np

from core.config import get_settings
from core.errors import WeylCapExceeded
from data.series import weyl_group_order
from models.root_system import RootSystem, WeylElement

logger = logging.getLogger(__name__)

"""
Finite Weyl group.

Elements act on Dynkin label row vectors through integer matrices; the
simple reflection s_i sends a to a - a_i * (row i of the Cartan matrix).
"""


def _simple_reflection_matrix(rs: RootSystem, i: int) -> np.ndarray:
    m = np.identity(rs.rank, dtype=np.int64)
    m[i, :] -= np.array(rs.cartan[i], dtype=np.int64)
    return m


def _freeze(m: np.ndarray) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in m)


def weyl_element(rs: RootSystem, word) -> WeylElement:
    """s_{w[0]} s_{w[1]} ... s_{w[-1]}."""
    m = np.identity(rs.rank, dtype=np.int64)
    for i in reversed(word):
        m = m @ _simple_reflection_matrix(rs, i)
    return WeylElement(
        word=tuple(word),
        dynkin=_freeze(m),
        sign=-1 if len(word) % 2 else 1,
        simple_roots=rs.simple_roots,
    )


def element_from_dynkin(rs: RootSystem, dynkin) -> WeylElement:
    """Recover a reduced word by walking w(rho) back to the dominant chamber."""
    m = np.array(dynkin, dtype=np.int64)
    v = np.ones(rs.rank, dtype=np.int64) @ m
    word = []
    while True:
        negative = np.flatnonzero(v < 0)
        if negative.size == 0:
            break
        i = int(negative[0])
        v = v - v[i] * np.array(rs.cartan[i], dtype=np.int64)
        word.append(i)
    return weyl_element(rs, word)


def check_weyl_cap(rs: RootSystem, cap: int | None = None) -> int:
    cap = get_settings().weyl_cap if cap is None else cap
    order = weyl_group_order(rs.series, rs.rank)
    if order > cap:
        raise WeylCapExceeded(order, cap)
    return order


@lru_cache(maxsize=None)
def _enumerate(rs: RootSystem) -> tuple[WeylElement, ...]:
    identity = np.identity(rs.rank, dtype=np.int64)
    reflections = [_simple_reflection_matrix(rs, i) for i in range(rs.rank)]

    elements = [((), identity)]
    seen = {_freeze(identity)}
    frontier = elements[:]
    while frontier:
        nxt = []
        for word, m in frontier:
            for i, s in enumerate(reflections):
                # s_i w acts as a @ M_w @ S_i
                candidate = m @ s
                key = _freeze(candidate)
                if key in seen:
                    continue
                seen.add(key)
                nxt.append(((i,) + word, candidate))
        elements.extend(nxt)
        frontier = nxt

    return tuple(
        WeylElement(
            word=word,
            dynkin=_freeze(m),
            sign=-1 if len(word) % 2 else 1,
            simple_roots=rs.simple_roots,
        )
        for word, m in elements
    )


def weyl_group(rs: RootSystem, cap: int | None = None) -> list[WeylElement]:
    """
    All elements of W, identity first, ordered by length.
    Rejected before enumeration when |W| exceeds the cap.
    """
    order = check_weyl_cap(rs, cap)
    logger.info("enumerating W(%s): %d elements", rs.name, order)
    elements = _enumerate(rs)
    if len(elements) != order:
        raise RuntimeError(f"Weyl group closure found {len(elements)} elements, expected {order}")
    return list(elements)


def weyl_matrices(rs: RootSystem, cap: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Stacked Dynkin matrices (|W|, r, r) and signs (|W|,)."""
    group = weyl_group(rs, cap)
    mats = np.array([w.dynkin for w in group], dtype=np.int64)
    signs = np.array([w.sign for w in group], dtype=np.int64)
    return mats, signs


def compose(u: WeylElement, v: WeylElement) -> WeylElement:
    """u v, acting as v first."""
    m = np.array(v.dynkin, dtype=np.int64) @ np.array(u.dynkin, dtype=np.int64)
    return WeylElement(
        word=u.word + v.word,
        dynkin=_freeze(m),
        sign=u.sign * v.sign,
        simple_roots=u.simple_roots,
    )


def inverse(rs: RootSystem, w: WeylElement) -> WeylElement:
    return weyl_element(rs, tuple(reversed(w.word)))

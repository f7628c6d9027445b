"""Reflections onto the symmetric and abelian-symmetric subvarieties,
and the trivial-extension test built on the abelian-symmetric one.

Each reflection quotients by the congruence generated by all instances of
the defining identities.  One generation pass suffices: the unit is
surjective, so every identity instance in the quotient is the image of an
instance already collapsed.  The subvariety predicate is still asserted on
the result as a tripwire.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .congruence import congruence_generated, quotient
from .core import FiniteQuandle, is_abelian_symmetric, is_symmetric
from .errors import NotSurjective, NotSymmetric
from .morphism import QuandleHom, PullbackResult, is_surjective, pullback


@dataclass(frozen=True)
class ReflectionResult:
    """The reflected quandle together with the unit (quotient) map onto it."""

    quotient: FiniteQuandle
    unit: QuandleHom


def _symmetry_pairs(q: FiniteQuandle) -> np.ndarray:
    t = q.np_table
    return np.stack([t.ravel(), t.T.ravel()], axis=1)


def _abelian_pairs(q: FiniteQuandle) -> np.ndarray:
    t = q.np_table
    lhs = t[t[:, :, None, None], t[None, None, :, :]]
    rhs = t[t[:, None, :, None], t[None, :, None, :]]
    return np.stack([lhs.ravel(), rhs.ravel()], axis=1)


def _quotient_by_pairs(q: FiniteQuandle, pairs: np.ndarray) -> ReflectionResult:
    distinct = np.unique(pairs, axis=0)
    theta = congruence_generated(q, [(int(a), int(b)) for a, b in distinct if a != b])
    quot, unit = quotient(q, theta)
    return ReflectionResult(quotient=quot, unit=unit)


@lru_cache(maxsize=None)
def reflect_sym(q: FiniteQuandle) -> ReflectionResult:
    """Quotient by the congruence generated by all (a < b, b < a)."""
    result = _quotient_by_pairs(q, _symmetry_pairs(q))
    assert is_symmetric(result.quotient)
    return result


@lru_cache(maxsize=None)
def reflect_ab(q: FiniteQuandle) -> ReflectionResult:
    """Quotient of a symmetric quandle by the abelian-identity instances."""
    if not is_symmetric(q):
        a, b = next(
            (a, b)
            for a in q.elements()
            for b in q.elements()
            if q.table[a][b] != q.table[b][a]
        )
        raise NotSymmetric(a, b)
    result = _quotient_by_pairs(q, _abelian_pairs(q))
    assert is_abelian_symmetric(result.quotient)
    return result


@lru_cache(maxsize=None)
def reflect_absym(q: FiniteQuandle) -> ReflectionResult:
    """Reflection onto abelian symmetric quandles: both identity families
    are collapsed at once."""
    pairs = np.concatenate([_symmetry_pairs(q), _abelian_pairs(q)])
    result = _quotient_by_pairs(q, pairs)
    assert is_abelian_symmetric(result.quotient)
    return result


def reflect_hom(f: QuandleHom) -> QuandleHom:
    """The reflected map between the abelian-symmetric reflections.

    It is the unique map making the naturality square with the units
    commute; it exists because the composite unit . f collapses every
    generator of the domain congruence.
    """
    ra, rb = reflect_absym(f.dom), reflect_absym(f.cod)
    image = [-1] * ra.quotient.order
    for a in f.dom.elements():
        blk = ra.unit.map[a]
        target = rb.unit.map[f.map[a]]
        assert image[blk] in (-1, target), "reflected map is not well defined"
        image[blk] = target
    return QuandleHom(dom=ra.quotient, cod=rb.quotient, map=tuple(image))


def _check_surjective(f: QuandleHom) -> None:
    missing = next((b for b in range(f.cod.order) if b not in set(f.map)), None)
    if missing is not None:
        raise NotSurjective(missing)


def trivial_extension_comparison(f: QuandleHom) -> tuple[PullbackResult, list[int]]:
    """The pullback of the reflected cospan and the comparison map into it."""
    ra, rb = reflect_absym(f.dom), reflect_absym(f.cod)
    reflected = reflect_hom(f)
    pb = pullback(reflected, rb.unit)  # pairs (b, x) with unit_B(b) = I(f)(x)
    index = {pair: i for i, pair in enumerate(pb.pairs)}
    comparison = [index[(f.map[a], ra.unit.map[a])] for a in f.dom.elements()]
    return pb, comparison


def is_trivial_extension(f: QuandleHom) -> bool:
    """Whether the naturality square of f with the units is a pullback.

    Decided by cardinality plus injectivity of the comparison map, which
    is enough for a bijection between finite carriers.
    """
    _check_surjective(f)
    pb, comparison = trivial_extension_comparison(f)
    return len(set(comparison)) == f.dom.order == pb.quandle.order

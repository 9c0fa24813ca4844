"""Exact renormalized multiple zeta values.

Exact rationals cross the extension boundary as strings; this wrapper
returns :class:`fractions.Fraction` for them.  Positive-argument values are
polynomials in the regularization symbol T over convergent zeta symbols and
stay strings.
"""

from fractions import Fraction
from typing import Iterable, Sequence, Union

from . import _core

__all__ = [
    "gzeta",
    "gzeta_symmetrized",
    "gzeta_positive_numeric",
    "mzv",
    "bernoulli",
    "zeta_nonpositive",
]

_RationalLike = Union[int, Fraction, str]


def _parts(parts: Iterable[int]) -> list:
    return [int(p) for p in parts]


def gzeta(parts: Sequence[int]) -> Union[Fraction, str]:
    """Renormalized multiple zeta value.

    All-non-positive arguments give an exact Fraction; all-positive
    arguments give the symbolic T-polynomial as a string.  Mixed signs
    raise ValueError.
    """
    ps = _parts(parts)
    if ps and all(p <= 0 for p in ps):
        return Fraction(_core.gzeta_nonpos(ps))
    return _core.gzeta_positive(ps)


def gzeta_symmetrized(parts: Sequence[int], directions: Sequence[_RationalLike]) -> Fraction:
    """Symmetrized renormalized value for non-positive arguments."""
    dirs = [str(Fraction(d)) for d in directions]
    return Fraction(_core.gzeta_symmetrized(_parts(parts), dirs))


def gzeta_positive_numeric(parts: Sequence[int], t: float = 0.0, tol: float = 1e-8) -> float:
    """Float value of the positive-argument result at a given T."""
    return _core.gzeta_positive_numeric(_parts(parts), t, tol)


def mzv(parts: Sequence[int], tol: float = 1e-8) -> float:
    """Certified float value of a convergent multiple zeta value."""
    return _core.mzv_numeric(_parts(parts), tol)


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n (B_1 = -1/2)."""
    return Fraction(_core.bernoulli(n))


def zeta_nonpositive(s: int) -> Fraction:
    """Riemann zeta at a non-positive integer."""
    return Fraction(_core.zeta_nonpositive(s))

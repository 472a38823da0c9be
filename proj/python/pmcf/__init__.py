"""p-adic multidimensional continued fractions (exact arithmetic).

Rationals are accepted as ``fractions.Fraction``, ``int`` or ``"num/den"``
strings and returned as ``Fraction``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence, Union

from . import _pmcf
from ._pmcf import PmcfError

RationalLike = Union[Fraction, int, str]

__all__ = [
    "PmcfError",
    "expand",
    "expand_algebraic",
    "euclid",
    "evaluate",
    "browkin_s",
    "digits",
    "padic_divide",
    "determinant_check",
    "paper_examples",
]


def _s(x: RationalLike) -> str:
    if isinstance(x, str):
        return x
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _fracs(xs: Iterable[str]) -> list[Fraction]:
    return [Fraction(x) for x in xs]


def _expansion(text: str) -> dict:
    raw = json.loads(text)
    q = raw["quotients"]
    out = {
        "status": raw["status"],
        "steps": raw["steps"],
        "m": q["m"],
        "a": [_fracs(seq) for seq in q["a"]],
        "finite": q["finite"],
    }
    if raw["status"] == "periodic":
        out["preperiod"] = raw["preperiod"]
        out["period"] = raw["period"]
    return out


def expand(values: Sequence[RationalLike], p: int, max_steps: int = 10_000, detect_period: bool = True) -> dict:
    """Jacobi-Perron expansion of rationals; ``a`` holds a^(1)..a^(m+1)."""
    return _expansion(_pmcf.expand_rational([_s(v) for v in values], p, max_steps, detect_period))


def expand_algebraic(minpoly: str, elements: Sequence[str], p: int, precision: int = 64,
                     max_steps: int = 10_000, detect_period: bool = True) -> dict:
    """Expansion of elements of Q(x) (expressions in ``x``) embedded via the root of largest norm."""
    return _expansion(_pmcf.expand_algebraic(minpoly, list(elements), p, precision, max_steps, detect_period))


def euclid(values: Sequence[RationalLike], p: int, max_steps: int = 10_000) -> dict:
    return _expansion(_pmcf.euclid([_s(v) for v in values], p, max_steps))


def evaluate(sequences: Sequence[Sequence[RationalLike]]) -> list[Fraction]:
    return _fracs(_pmcf.evaluate([[_s(x) for x in s] for s in sequences]))


def browkin_s(x: RationalLike, p: int) -> Fraction:
    return Fraction(_pmcf.browkin_s(_s(x), p))


def digits(x: RationalLike, p: int, precision: int) -> tuple[int, list[int]]:
    return _pmcf.digits(_s(x), p, precision)


def padic_divide(sigma: RationalLike, tau: RationalLike, p: int) -> tuple[Fraction, Fraction]:
    q, eta = _pmcf.padic_divide(_s(sigma), _s(tau), p)
    return Fraction(q), Fraction(eta)


def determinant_check(sequences: Sequence[Sequence[RationalLike]], n: int) -> tuple[Fraction, Fraction, bool]:
    det, expected, ok = _pmcf.determinant_check([[_s(x) for x in s] for s in sequences], n)
    return Fraction(det), Fraction(expected), ok


def paper_examples() -> dict:
    return json.loads(_pmcf.paper_examples())

"""Balanced base-z digits and coefficientwise polynomial reconstruction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InvalidModulus, ReconstructionOverflow
from .multipoly import MultiPoly, _div_scalar, _is_zero, _map_scalars, _mk, _sub
from .ring import GaussInt, Ring, scalar_smod


@dataclass(frozen=True)
class DigitExpansion:
    """``value == sum(d * base**i for i, d in enumerate(digits))``.

    Digits are symmetric remainders, so ``2*|d| <= base`` (per component for
    Gaussian digits), and the last digit is nonzero.
    """

    base: int
    digits: tuple

    def value(self):
        acc = 0
        for d in reversed(self.digits):
            acc = acc * self.base + d
        return acc

    def __len__(self):
        return len(self.digits)


def digit_within_bound(d, z: int) -> bool:
    """True when ``d`` lies in the symmetric digit range for base ``z``."""
    if type(d) is GaussInt:
        return 2 * abs(d.re) <= z and 2 * abs(d.im) <= z
    return 2 * abs(d) <= z


def symmetric_digits(n, z: int) -> DigitExpansion:
    """Balanced base-``z`` expansion of a ring scalar.

    >>> symmetric_digits(29, 10).digits
    (-1, 3)
    """
    if z < 3:
        raise InvalidModulus(f"modulus must be >= 3, got {z}")
    digits = []
    while n:
        d = scalar_smod(n, z)
        digits.append(d)
        n = (n - d) // z if type(n) is not GaussInt else GaussInt((n.re - d.re) // z, (n.im - d.im) // z)
    return DigitExpansion(z, tuple(digits))


def reconstruct(h, z: int, new_var: str, max_digits: Optional[int] = None) -> MultiPoly:
    """Rebuild a polynomial in one more variable from its value at ``z``.

    ``h`` is a :class:`MultiPoly` (or a bare scalar, read as a polynomial in no
    variables).  Every scalar coefficient is peeled into balanced base-``z``
    digits; digit ``j`` becomes the coefficient of ``new_var**j``.  The result
    ``G`` satisfies ``G.eval_main(z) == h``.  When ``max_digits`` is given and
    more digits are needed, :class:`ReconstructionOverflow` is raised.
    """
    if z < 3:
        raise InvalidModulus(f"modulus must be >= 3, got {z}")
    if not isinstance(h, MultiPoly):
        ring = Ring.ZI if type(h) is GaussInt else Ring.Z
        h = MultiPoly.const(ring, (), h)
    level = len(h.vars)
    body = h.body
    digits = []
    while not _is_zero(body):
        if max_digits is not None and len(digits) >= max_digits:
            raise ReconstructionOverflow(z, max_digits)
        c = _map_scalars(body, lambda a: scalar_smod(a, z))
        digits.append(c)
        body = _div_scalar(_sub(body, c), z)
    terms = [(j, c) for j, c in reversed(list(enumerate(digits))) if not _is_zero(c)]
    return MultiPoly(h.ring, h.vars + (new_var,), _mk(level, terms))

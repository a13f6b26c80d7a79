"""Sparse recursive multivariate polynomials.

A polynomial body is either a ring scalar or a node ``(level, terms)``.
``level`` is the index of the node's main variable in the variable list and
``terms`` is a tuple of ``(exponent, coefficient)`` pairs with strictly
decreasing exponents.  Coefficients are bodies of strictly lower level.  A
node always has a term of positive degree: a body that is constant in its
main variable is stored as that constant.  These rules make the
representation canonical, so structural equality is polynomial equality.

The functions prefixed with an underscore work on bodies; :class:`MultiPoly`
wraps a body with its ring and variable names.
"""

from __future__ import annotations

from typing import Callable, Iterable, Optional, Sequence

from .errors import DomainError, StructuralError
from .ring import (
    GaussInt,
    Ring,
    coeff_height,
    exact_div,
    normalizing_unit,
    scalar_gcd,
    is_unit,
)


def _is_node(b) -> bool:
    return type(b) is tuple


def _level(b) -> int:
    return b[0] if type(b) is tuple else -1


def _mk(level, terms):
    if not terms:
        return 0
    if len(terms) == 1 and terms[0][0] == 0:
        return terms[0][1]
    return (level, tuple(terms))


def _is_zero(b) -> bool:
    return type(b) is not tuple and not b


def _neg(a):
    if type(a) is not tuple:
        return -a
    return (a[0], tuple((e, _neg(c)) for e, c in a[1]))


def _add(a, b):
    ta, tb = type(a) is tuple, type(b) is tuple
    if not ta and not tb:
        return a + b
    la = a[0] if ta else -1
    lb = b[0] if tb else -1
    if la < lb:
        a, b, la, lb = b, a, lb, la
    if la > lb:
        if _is_zero(b):
            return a
        terms = list(a[1])
        e, c = terms[-1]
        if e == 0:
            c = _add(c, b)
            if _is_zero(c):
                terms.pop()
            else:
                terms[-1] = (0, c)
        else:
            terms.append((0, b))
        return _mk(la, terms)
    x, y = a[1], b[1]
    i = j = 0
    nx, ny = len(x), len(y)
    out = []
    while i < nx and j < ny:
        ex, cx = x[i]
        ey, cy = y[j]
        if ex > ey:
            out.append(x[i])
            i += 1
        elif ey > ex:
            out.append(y[j])
            j += 1
        else:
            c = _add(cx, cy)
            if not _is_zero(c):
                out.append((ex, c))
            i += 1
            j += 1
    out.extend(x[i:])
    out.extend(y[j:])
    return _mk(la, out)


def _sub(a, b):
    return _add(a, _neg(b))


def _scale(a, s):
    """Multiply a body by a nonzero scalar."""
    if type(a) is not tuple:
        return a * s
    return (a[0], tuple((e, _scale(c, s)) for e, c in a[1]))


def _mul(a, b):
    ta, tb = type(a) is tuple, type(b) is tuple
    if not ta:
        if not a:
            return 0
        return _scale(b, a) if tb else a * b
    if not tb:
        if not b:
            return 0
        return _scale(a, b)
    la, lb = a[0], b[0]
    if la > lb:
        return (la, tuple((e, _mul(c, b)) for e, c in a[1]))
    if lb > la:
        return (lb, tuple((e, _mul(a, c)) for e, c in b[1]))
    acc = {}
    for ea, ca in a[1]:
        for eb, cb in b[1]:
            e = ea + eb
            p = _mul(ca, cb)
            if e in acc:
                acc[e] = _add(acc[e], p)
            else:
                acc[e] = p
    terms = [(e, acc[e]) for e in sorted(acc, reverse=True) if not _is_zero(acc[e])]
    return _mk(la, terms)


def _shift_mul(b, level, k, c):
    """``b * c * x_level**k`` where ``b`` has main level ``level``."""
    terms = b[1] if _level(b) == level else ((0, b),)
    return (level, tuple((e + k, _mul(cb, c)) for e, cb in terms))


def _map_scalars(a, f):
    """Apply ``f`` to every scalar and re-canonicalize."""
    if type(a) is not tuple:
        return f(a)
    terms = []
    for e, c in a[1]:
        c = _map_scalars(c, f)
        if not _is_zero(c):
            terms.append((e, c))
    return _mk(a[0], terms)


def _div_scalar(a, s):
    if type(a) is not tuple:
        return exact_div(a, s)
    terms = []
    for e, c in a[1]:
        q = _div_scalar(c, s)
        if q is None:
            return None
        terms.append((e, q))
    return (a[0], tuple(terms))


def _divexact(num, den):
    """Exact recursive division; ``None`` when ``den`` does not divide ``num``."""
    if type(den) is not tuple:
        if not den:
            raise ZeroDivisionError("polynomial division by zero")
        return _div_scalar(num, den)
    if _is_zero(num):
        return 0
    ld, ln = den[0], _level(num)
    if ln < ld:
        return None
    if ln > ld:
        terms = []
        for e, c in num[1]:
            q = _divexact(c, den)
            if q is None:
                return None
            terms.append((e, q))
        return (ln, tuple(terms))
    de, dc = den[1][0]
    quot = []
    rem = num
    while not _is_zero(rem):
        if _level(rem) < ld:
            return None
        re_, rc = rem[1][0]
        if re_ < de:
            return None
        qc = _divexact(rc, dc)
        if qc is None:
            return None
        quot.append((re_ - de, qc))
        rem = _sub(rem, _shift_mul(den, ld, re_ - de, qc))
    return _mk(ld, quot)


def _scalars(a):
    if type(a) is not tuple:
        yield a
        return
    stack = [a]
    while stack:
        n = stack.pop()
        for _, c in n[1]:
            if type(c) is tuple:
                stack.append(c)
            else:
                yield c


def _leading_scalar(a):
    while type(a) is tuple:
        a = a[1][0][1]
    return a


def _eval_level(a, level, z):
    """Substitute ``z`` for variable ``level`` by Horner's rule."""
    if _level(a) != level:
        return a
    terms = a[1]
    if z == 0:
        e, c = terms[-1]
        return c if e == 0 else 0
    prev, res = terms[0]
    for e, c in terms[1:]:
        res = _add(_mul(res, z ** (prev - e)), c)
        prev = e
    if prev:
        res = _mul(res, z**prev)
    return res


def _degree(a, level) -> int:
    if type(a) is not tuple:
        return 0
    if a[0] == level:
        return a[1][0][0]
    if a[0] < level:
        return 0
    return max(_degree(c, level) for _, c in a[1])


def _size(a) -> int:
    if type(a) is not tuple:
        return 1
    return sum(_size(c) for _, c in a[1])


def _icontent(a):
    g = 0
    for c in _scalars(a):
        g = scalar_gcd(g, c)
        if is_unit(g):
            break
    return g


class MultiPoly:
    """Polynomial over :class:`~gcdheu.ring.Ring` in the variables ``vars``.

    The last variable is the main variable: :meth:`eval_main` substitutes for
    it and :meth:`coeffs_main` views the polynomial as univariate in it.
    """

    __slots__ = ("ring", "vars", "body")

    def __init__(self, ring: Ring, vars: Sequence[str], body=0):
        self.ring = ring
        self.vars = tuple(vars)
        self.body = body

    # -- construction ----------------------------------------------------

    @classmethod
    def zero(cls, ring, vars):
        return cls(ring, vars, 0)

    @classmethod
    def const(cls, ring, vars, c):
        if isinstance(c, int) and type(c) is not GaussInt:
            c = ring.scalar(c) if c else 0
        return cls(ring, vars, c if c else 0)

    @classmethod
    def var(cls, ring, vars, name):
        vars = tuple(vars)
        return cls(ring, vars, (vars.index(name), ((1, ring.one()),)))

    @classmethod
    def from_dict(cls, ring, vars, terms: dict):
        """Build from ``{exponent tuple: coefficient}`` (tuples follow ``vars``)."""
        vars = tuple(vars)
        body = 0
        for exps, c in terms.items():
            if len(exps) != len(vars):
                raise StructuralError("exponent tuple does not match variables")
            if not c:
                continue
            if isinstance(c, int) and type(c) is not GaussInt:
                c = ring.scalar(c)
            mono = c
            for lvl, e in enumerate(exps):
                if e < 0:
                    raise DomainError("negative exponent")
                if e:
                    mono = _mul(mono, (lvl, ((e, ring.one()),)))
            body = _add(body, mono)
        return cls(ring, vars, body)

    def to_dict(self) -> dict:
        out = {}
        k = len(self.vars)

        def walk(b, exps):
            if type(b) is not tuple:
                if b:
                    out[tuple(exps)] = b
                return
            for e, c in b[1]:
                ex = list(exps)
                ex[b[0]] = e
                walk(c, ex)

        walk(self.body, [0] * k)
        return out

    def _new(self, body, vars=None):
        return MultiPoly(self.ring, self.vars if vars is None else vars, body)

    def _check(self, other) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, GaussInt)):
                return MultiPoly.const(self.ring, self.vars, other)
            raise StructuralError(f"cannot combine MultiPoly with {type(other).__name__}")
        if other.ring is not self.ring:
            raise StructuralError(f"ring mismatch: {self.ring.name} vs {other.ring.name}")
        if other.vars != self.vars:
            raise StructuralError(f"variable mismatch: {self.vars} vs {other.vars}")
        return other

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        return self._new(_add(self.body, self._check(other).body))

    __radd__ = __add__

    def __sub__(self, other):
        return self._new(_sub(self.body, self._check(other).body))

    def __rsub__(self, other):
        return self._new(_sub(self._check(other).body, self.body))

    def __neg__(self):
        return self._new(_neg(self.body))

    def __mul__(self, other):
        return self._new(_mul(self.body, self._check(other).body))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative exponent")
        result, base = self.ring.one(), self.body
        while n:
            if n & 1:
                result = _mul(result, base)
            n >>= 1
            if n:
                base = _mul(base, base)
        return self._new(result)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring is other.ring and self.vars == other.vars and self.body == other.body

    def __hash__(self):
        return hash((self.ring, self.vars, self.body))

    def __bool__(self):
        return not _is_zero(self.body)

    def __repr__(self):
        from .cli.fmt import format_poly

        return f"MultiPoly({self.ring.name}, {self.vars}, {format_poly(self)!r})"

    # -- inspection ------------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.vars)

    @property
    def is_zero(self) -> bool:
        return _is_zero(self.body)

    def is_constant(self) -> bool:
        return type(self.body) is not tuple

    def degree_main(self) -> int:
        k = len(self.vars) - 1
        return self.body[1][0][0] if _level(self.body) == k and k >= 0 else 0

    def degree(self, var: str) -> int:
        return _degree(self.body, self.vars.index(var))

    def leading_scalar(self):
        return _leading_scalar(self.body)

    def scalars(self) -> Iterable:
        return _scalars(self.body)

    def coeffs_main(self) -> list[tuple[int, MultiPoly]]:
        """Terms ``(exponent, coefficient)`` in the main variable, highest first.

        Coefficients live in the first ``nvars - 1`` variables.
        """
        if not self.vars:
            raise DomainError("a constant has no main variable")
        sub = self.vars[:-1]
        if _is_zero(self.body):
            return []
        if _level(self.body) == len(self.vars) - 1:
            return [(e, MultiPoly(self.ring, sub, c)) for e, c in self.body[1]]
        return [(0, MultiPoly(self.ring, sub, self.body))]

    def lc_main(self) -> MultiPoly:
        """Leading coefficient in the main variable, in the same variables."""
        if _level(self.body) == len(self.vars) - 1:
            return self._new(self.body[1][0][1])
        return self

    def lift(self, new_vars: Sequence[str]) -> MultiPoly:
        """Reinterpret in a variable list extending this one at the end."""
        new_vars = tuple(new_vars)
        if new_vars[: len(self.vars)] != self.vars:
            raise StructuralError("new variables must extend the current ones")
        return self._new(self.body, new_vars)

    def to_dense(self) -> list:
        """Coefficients ``[c0, c1, ...]`` of a univariate polynomial."""
        if len(self.vars) != 1:
            raise DomainError("to_dense needs exactly one variable")
        if type(self.body) is not tuple:
            return [self.body] if self.body else []
        out = [0] * (self.body[1][0][0] + 1)
        for e, c in self.body[1]:
            out[e] = c
        return out

    @classmethod
    def from_dense(cls, ring, vars, coeffs: Sequence) -> MultiPoly:
        vars = tuple(vars)
        if len(vars) != 1:
            raise DomainError("from_dense needs exactly one variable")
        terms = [(e, c) for e, c in reversed(list(enumerate(coeffs))) if c]
        return cls(ring, vars, _mk(0, terms))

    # -- operations the gcd algorithms need --------------------------------

    def eval_main(self, z) -> MultiPoly:
        """Substitute ``z`` for the main variable; drops that variable."""
        if not self.vars:
            raise DomainError("cannot evaluate a polynomial in zero variables")
        return MultiPoly(self.ring, self.vars[:-1], _eval_level(self.body, len(self.vars) - 1, z))

    def height(self) -> int:
        """Largest coefficient height; 0 for the zero polynomial."""
        return max((coeff_height(c) for c in _scalars(self.body)), default=0)

    def icontent(self):
        """Unit-normalized gcd of all scalar coefficients (0 for zero)."""
        return _icontent(self.body)

    def primitive_part(self) -> MultiPoly:
        c = _icontent(self.body)
        if not c or c == 1:
            return self
        return self._new(_div_scalar(self.body, c))

    def mul_scalar(self, c) -> MultiPoly:
        if not c:
            return self._new(0)
        return self._new(_scale(self.body, c))

    def div_scalar(self, c) -> Optional[MultiPoly]:
        q = _div_scalar(self.body, c)
        return None if q is None else self._new(q)

    def map_scalars(self, f: Callable) -> MultiPoly:
        return self._new(_map_scalars(self.body, f))

    def normalize_unit(self) -> MultiPoly:
        """Multiply by the unit normalizing the leading scalar coefficient."""
        u = normalizing_unit(_leading_scalar(self.body))
        if u == 1:
            return self
        return self._new(_scale(self.body, u))

    def try_divide_exact(self, den: MultiPoly) -> Optional[MultiPoly]:
        """Exact quotient ``self / den``, or ``None`` if ``den`` does not divide."""
        den = self._check(den)
        q = _divexact(self.body, den.body)
        return None if q is None else self._new(q)

    def div_main_content(self, cont: MultiPoly) -> MultiPoly:
        """Divide every main-variable coefficient by ``cont`` (in ``nvars-1`` variables)."""
        q = _divexact(self.body, cont.body)
        if q is None:
            raise DomainError("content does not divide the polynomial")
        return self._new(q)


def content_main(p: MultiPoly, gcd_fn: Callable[[MultiPoly, MultiPoly], MultiPoly]) -> MultiPoly:
    """Gcd of the coefficients of ``p`` viewed as a polynomial in its main variable.

    The result lives in the remaining ``nvars - 1`` variables.  ``gcd_fn`` is
    called on pairs of such polynomials, which lets the gcd algorithms recurse
    through this function.  For a univariate ``p`` this is the integer content.
    """
    if p.nvars < 2:
        return MultiPoly.const(p.ring, p.vars[:-1], p.icontent())
    coeffs = [c for _, c in p.coeffs_main()]
    if not coeffs:
        return MultiPoly.zero(p.ring, p.vars[:-1])
    if len(coeffs) > 1 and any(c.is_constant() for c in coeffs):
        c = _icontent(p.body)
        return MultiPoly.const(p.ring, p.vars[:-1], c)
    # small coefficients first: the running gcd tends to collapse early
    coeffs.sort(key=lambda c: _size(c.body))
    g = None
    for c in coeffs:
        g = c if g is None else gcd_fn(g, c)
        if g.is_constant() and is_unit(g.body):
            return MultiPoly.const(p.ring, g.vars, p.ring.one())
    if g is None:
        return MultiPoly.zero(p.ring, p.vars[:-1])
    return g.normalize_unit()


def check_compatible(p: MultiPoly, q: MultiPoly) -> None:
    if not isinstance(p, MultiPoly) or not isinstance(q, MultiPoly):
        raise StructuralError("expected MultiPoly operands")
    if p.ring is not q.ring:
        raise StructuralError(f"ring mismatch: {p.ring.name} vs {q.ring.name}")
    if p.vars != q.vars:
        raise StructuralError(f"variable mismatch: {p.vars} vs {q.vars}")

"""Canonical text form of polynomials; parses back to the same MultiPoly."""

from __future__ import annotations

from ..ring import GaussInt


def _scalar_str(c) -> str:
    if type(c) is GaussInt:
        if c.re and c.im:
            return f"({c})"
        return str(c)
    return str(c)


def _is_sum(s: str) -> bool:
    depth = 0
    for k, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and k > 0 and ch in "+-" and s[k - 1] == " ":
            return True
    return False


def _format_body(b, vars) -> str:
    if type(b) is not tuple:
        return _scalar_str(b)
    level, terms = b
    name = vars[level]
    parts = []
    for e, c in terms:
        if e == 0:
            parts.append(_format_body(c, vars))
            continue
        mono = name if e == 1 else f"{name}^{e}"
        if type(c) is not tuple:
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{_scalar_str(c)}*{mono}")
            continue
        cs = _format_body(c, vars)
        if _is_sum(cs):
            cs = f"({cs})"
        parts.append(f"{cs}*{mono}")
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


def format_poly(p) -> str:
    """Render ``p`` with terms in decreasing degree of the main variable.

    >>> from gcdheu.cli.parser import parse_poly
    >>> from gcdheu.ring import Ring
    >>> format_poly(parse_poly("(x+1)*(x-1)", Ring.Z))
    'x^2 - 1'
    """
    return _format_body(p.body, p.vars)

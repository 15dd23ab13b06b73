"""Exact arithmetic in Z[L], where L stands for the Rota-Baxter weight.

Polynomials are stored densely as a tuple of Python ints (lowest degree
first) with trailing zeros stripped, so the zero polynomial is ``()``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

__all__ = ["LambdaPoly", "poly_add", "poly_mul", "specialize", "ZERO", "ONE", "LAMBDA"]

Scalar = Union[int, "LambdaPoly"]


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class LambdaPoly:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Union[Iterable[int], dict, int] = ()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        elif isinstance(coeffs, dict):
            top = max(coeffs, default=-1)
            dense = [0] * (top + 1)
            for e, c in coeffs.items():
                if e < 0:
                    raise ValueError("negative exponent")
                dense[e] += c
            coeffs = dense
        c = _strip(coeffs)
        for x in c:
            if not isinstance(x, int):
                raise TypeError(f"coefficients must be int, got {type(x).__name__}")
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "_hash", hash(c))

    def __setattr__(self, name, value):
        raise AttributeError("LambdaPoly is immutable")

    def __reduce__(self):
        return (LambdaPoly, (self.coeffs,))

    @classmethod
    def _raw(cls, c: tuple[int, ...]) -> "LambdaPoly":
        # c must already be stripped
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", c)
        object.__setattr__(p, "_hash", hash(c))
        return p

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def terms(self) -> dict[int, int]:
        return {e: c for e, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, LambdaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __add__(self, other: Scalar) -> "LambdaPoly":
        if isinstance(other, int):
            other = LambdaPoly(other)
        elif not isinstance(other, LambdaPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return LambdaPoly._raw(_strip(out))

    __radd__ = __add__

    def __neg__(self) -> "LambdaPoly":
        return LambdaPoly._raw(tuple(-x for x in self.coeffs))

    def __sub__(self, other: Scalar) -> "LambdaPoly":
        if isinstance(other, int):
            other = LambdaPoly(other)
        elif not isinstance(other, LambdaPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LambdaPoly":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "LambdaPoly":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LambdaPoly._raw(tuple(x * other for x in self.coeffs))
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LambdaPoly._raw(_strip(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LambdaPoly":
        if n < 0:
            raise ValueError("negative power")
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, value) -> Fraction:
        return specialize(self, value)

    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __repr__(self):
        return f"LambdaPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


ZERO = LambdaPoly()
ONE = LambdaPoly(1)
LAMBDA = LambdaPoly((0, 1))


def poly_add(a: LambdaPoly, b: LambdaPoly) -> LambdaPoly:
    return a + b


def poly_mul(a: LambdaPoly, b: LambdaPoly) -> LambdaPoly:
    return a * b


def as_poly(c: Scalar) -> LambdaPoly:
    if isinstance(c, LambdaPoly):
        return c
    if isinstance(c, int):
        return LambdaPoly(c)
    raise TypeError(f"expected int or LambdaPoly, got {type(c).__name__}")


def specialize(p: Union[LambdaPoly, int], value) -> Fraction:
    """Evaluate at ``L = value`` exactly (Horner)."""
    v = Fraction(value)
    if isinstance(p, int):
        return Fraction(p)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * v + c
    return acc


def parse_rational(text: str) -> Fraction:
    """Parse ``"3"``, ``"-1/2"`` or ``"0.5"`` exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_poly(p: LambdaPoly) -> str:
    """Text form, highest degree first: ``2L^2+3L-1``."""
    if not p.coeffs:
        return "0"
    parts = []
    for e in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[e]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = "L" if e == 1 else f"L^{e}"
            body = mono if mag == 1 else f"{mag}{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


_MONO = re.compile(r"\s*([+-])?\s*(\d+)?\s*(L(?:\s*\^\s*(\d+))?)?")


def parse_poly(text: str) -> LambdaPoly:
    """Inverse of :func:`format_poly`; also accepts ``2*L`` and spaces."""
    s = text.replace("*", "")
    pos, acc, seen = 0, {}, False
    s = s.strip()
    if not s:
        raise ValueError("empty coefficient")
    while pos < len(s):
        m = _MONO.match(s, pos)
        sign, digits, mono, exp = m.groups()
        if not digits and not mono:
            raise ValueError(f"bad coefficient {text!r} at position {pos}")
        if seen and not sign:
            raise ValueError(f"missing operator in {text!r} at position {pos}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        e = (int(exp) if exp else 1) if mono else 0
        acc[e] = acc.get(e, 0) + c
        seen = True
        pos = m.end()
    return LambdaPoly(acc)

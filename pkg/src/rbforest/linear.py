"""Normalized finite linear combinations with Z[L] coefficients."""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Iterator, Mapping, Optional, Tuple, TypeVar, Union

from .coeffs import ONE, ZERO, LambdaPoly, as_poly

B = TypeVar("B", bound=Hashable)
S = TypeVar("S", bound="LinearCombination")

Coefficient = Union[int, LambdaPoly]


def accumulate(acc: dict, items: Iterable[Tuple[B, LambdaPoly]], scale: LambdaPoly = ONE) -> None:
    """Add ``scale * c`` for every ``(basis, c)`` into ``acc`` in place."""
    unit = scale == ONE
    for k, c in items:
        v = c if unit else c * scale
        old = acc.get(k)
        acc[k] = v if old is None else old + v


def drop_zeros(acc: dict) -> dict:
    return {k: c for k, c in acc.items() if c.coeffs}


class LinearCombination:
    """Immutable linear combination over a hashable, sortable basis.

    Subclasses fix the basis type and the sort key used for canonical
    iteration.  Zero is the empty combination.
    """

    __slots__ = ("terms", "_hash")

    basis_type: type = object

    def __init__(self, terms: Optional[Mapping[B, Coefficient]] = None):
        acc: dict = {}
        for k, c in (terms or {}).items():
            if not isinstance(k, self.basis_type):
                raise TypeError(f"{type(self).__name__} basis must be {self.basis_type.__name__}, got {type(k).__name__}")
            self._validate(k)
            c = as_poly(c)
            acc[k] = acc[k] + c if k in acc else c
        object.__setattr__(self, "terms", drop_zeros(acc))
        object.__setattr__(self, "_hash", None)

    def _validate(self, basis) -> None:
        pass

    @classmethod
    def _wrap(cls: type[S], terms: dict) -> S:
        # terms must already be normalized
        s = object.__new__(cls)
        object.__setattr__(s, "terms", terms)
        object.__setattr__(s, "_hash", None)
        return s

    @classmethod
    def zero(cls: type[S]) -> S:
        return cls._wrap({})

    @classmethod
    def basis(cls: type[S], b, coeff: Coefficient = 1) -> S:
        return cls({b: coeff})

    @staticmethod
    def sort_key(b):
        raise NotImplementedError

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __reduce__(self):
        return (type(self), (self.terms,))

    def items(self) -> list[Tuple[B, LambdaPoly]]:
        """Terms in ascending canonical order of the basis."""
        return sorted(self.terms.items(), key=lambda kv: self.sort_key(kv[0]))

    def __iter__(self) -> Iterator[Tuple[B, LambdaPoly]]:
        return iter(self.items())

    def support(self) -> list:
        return [k for k, _ in self.items()]

    def coefficient(self, b) -> LambdaPoly:
        return self.terms.get(b, ZERO)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if type(other) is not type(self):
            if isinstance(other, int) and other == 0:
                return not self.terms
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self.terms.items())))
        return self._hash

    def _coerce(self, other):
        if type(other) is type(self):
            return other
        if isinstance(other, int) and other == 0:
            return type(self).zero()
        return None

    def __add__(self: S, other) -> S:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self.terms)
        accumulate(acc, other.terms.items())
        return self._wrap(drop_zeros(acc))

    __radd__ = __add__

    def __neg__(self: S) -> S:
        return self._wrap({k: -c for k, c in self.terms.items()})

    def __sub__(self: S, other) -> S:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self: S, other) -> S:
        return (-self) + other

    def scale(self: S, c: Coefficient) -> S:
        c = as_poly(c)
        if not c:
            return self.zero()
        return self._wrap(drop_zeros({k: v * c for k, v in self.terms.items()}))

    def __rmul__(self: S, c) -> S:
        if isinstance(c, (int, LambdaPoly)):
            return self.scale(c)
        return NotImplemented

    def map_basis(self: S, fn: Callable, target: Optional[type] = None):
        """Apply a basis-to-basis map linearly."""
        acc: dict = {}
        accumulate(acc, ((fn(k), c) for k, c in self.terms.items()))
        return (target or type(self))._wrap(drop_zeros(acc))

    def filter(self: S, pred: Callable) -> S:
        return self._wrap({k: c for k, c in self.terms.items() if pred(k)})

    def __repr__(self):
        from .textio import format_sum

        return f"{type(self).__name__}({format_sum(self)!r})"

    def __str__(self):
        from .textio import format_sum

        return format_sum(self)

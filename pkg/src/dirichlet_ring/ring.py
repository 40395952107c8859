"""Truncated exact arithmetic in the ring of arithmetical functions.

A function is stored as its values at 1..n.  Addition is pointwise and
multiplication is Dirichlet convolution, so everything here is
prefix-correct: entry k of any result depends only on entries at
divisors of k.  Exact mode keeps entries as fractions; float mode exists
for the few functions whose values are irrational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

EXACT = "exact"
FLOAT = "float"

Scalar = Union[int, float, Fraction]


class ModeMismatchError(ValueError):
    """Exact and float values may not meet in one operation."""


class NonUnitError(ValueError):
    """Inversion needs f(1) != 0; anything else lies in the maximal ideal."""


class ZeroFunctionError(ValueError):
    """The operation needs a function that is nonzero on its window."""


class WindowError(ValueError):
    """The truncation window is too short to carry out the request."""


@dataclass(frozen=True)
class NotDivisibleWitness:
    """Index at which no quotient can reproduce the dividend."""

    index: int
    note: str = ""


def _as_exact(value: Scalar) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar value")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise ModeMismatchError(f"exact mode cannot hold {type(value).__name__} values")


def _as_float(value: Scalar) -> float:
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar value")
    if isinstance(value, (int, float, Fraction)):
        return float(value)
    raise ModeMismatchError(f"float mode cannot hold {type(value).__name__} values")


def _detect_mode(values: Sequence[Scalar]) -> str:
    has_float = any(isinstance(v, float) for v in values)
    has_exact = any(
        isinstance(v, (int, Fraction)) and not isinstance(v, bool) for v in values
    )
    if has_float and has_exact:
        raise ModeMismatchError(
            "mixed exact and float entries; pass mode= to convert explicitly"
        )
    return FLOAT if has_float else EXACT


def _divisors(k: int) -> list[int]:
    """All divisors of k, ascending."""
    small, large = [], []
    d = 1
    while d * d <= k:
        if k % d == 0:
            small.append(d)
            if d != k // d:
                large.append(k // d)
        d += 1
    return small + large[::-1]


class ArithFunc:
    """An arithmetical function truncated to indices 1..n.

    Instances are immutable; every operation returns a new function.
    Calling the object evaluates it: ``f(k)`` for 1 <= k <= len(f).
    """

    __slots__ = ("_values", "_mode")

    def __init__(self, values: Iterable[Scalar], mode: str | None = None):
        vals = list(values)
        if not vals:
            raise ValueError("need at least one value (indices start at 1)")
        if mode is None:
            mode = _detect_mode(vals)
        if mode == EXACT:
            stored = tuple(_as_exact(v) for v in vals)
        elif mode == FLOAT:
            stored = tuple(_as_float(v) for v in vals)
        else:
            raise ValueError(f"unknown scalar mode {mode!r}")
        self._values = stored
        self._mode = mode

    @classmethod
    def _raw(cls, stored: tuple, mode: str) -> "ArithFunc":
        # trusted constructor for already-coerced tuples
        obj = cls.__new__(cls)
        obj._values = stored
        obj._mode = mode
        return obj

    @property
    def values(self) -> tuple:
        return self._values

    @property
    def mode(self) -> str:
        return self._mode

    @property
    def n(self) -> int:
        return len(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __call__(self, k: int):
        if not 1 <= k <= len(self._values):
            raise IndexError(f"index {k} outside the window 1..{len(self._values)}")
        return self._values[k - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArithFunc):
            return NotImplemented
        return self._mode == other._mode and self._values == other._values

    def __hash__(self) -> int:
        return hash((self._mode, self._values))

    def __repr__(self) -> str:
        head = ", ".join(str(v) for v in self._values[:8])
        tail = ", ..." if len(self._values) > 8 else ""
        return f"ArithFunc([{head}{tail}], mode={self._mode}, n={len(self._values)})"

    def is_zero(self) -> bool:
        return not any(self._values)

    def _require_same_mode(self, other: "ArithFunc") -> None:
        if self._mode != other._mode:
            raise ModeMismatchError(
                f"cannot combine {self._mode} mode with {other._mode} mode"
            )

    def _zero_scalar(self):
        return Fraction(0) if self._mode == EXACT else 0.0

    # ring operations ---------------------------------------------------

    def add(self, other: "ArithFunc") -> "ArithFunc":
        self._require_same_mode(other)
        n = min(len(self._values), len(other._values))
        a, b = self._values, other._values
        return ArithFunc._raw(tuple(a[i] + b[i] for i in range(n)), self._mode)

    def __add__(self, other):
        if not isinstance(other, ArithFunc):
            return NotImplemented
        return self.add(other)

    def __neg__(self) -> "ArithFunc":
        return ArithFunc._raw(tuple(-v for v in self._values), self._mode)

    def __sub__(self, other):
        if not isinstance(other, ArithFunc):
            return NotImplemented
        return self.add(-other)

    def convolve(self, other: "ArithFunc") -> "ArithFunc":
        """Dirichlet convolution: (f*g)(k) = sum of f(i)g(j) over ij = k."""
        self._require_same_mode(other)
        n = min(len(self._values), len(other._values))
        a, b = self._values, other._values
        out = [self._zero_scalar()] * n
        for i in range(1, n + 1):
            ai = a[i - 1]
            if not ai:
                continue
            for j in range(1, n // i + 1):
                bj = b[j - 1]
                if bj:
                    out[i * j - 1] += ai * bj
        return ArithFunc._raw(tuple(out), self._mode)

    def __mul__(self, other):
        if not isinstance(other, ArithFunc):
            return NotImplemented
        return self.convolve(other)

    def norm(self) -> int | None:
        """Least index with a nonzero value; None when the window is all zero."""
        for i, v in enumerate(self._values, start=1):
            if v:
                return i
        return None

    def invert(self) -> "ArithFunc":
        """Convolution inverse on the window.

        Exact mode produces the exact inverse.  Float mode runs the same
        recursion in double precision; one division per index, so
        roundoff stays small at desk-scale windows.
        """
        v = self._values
        if not v[0]:
            raise NonUnitError("f(1) = 0: not a unit (lies in the maximal ideal)")
        n = len(v)
        one = Fraction(1) if self._mode == EXACT else 1.0
        lead = one / v[0]
        out = [self._zero_scalar()] * n
        out[0] = lead
        for k in range(2, n + 1):
            acc = self._zero_scalar()
            for d in _divisors(k)[:-1]:  # proper divisors: d | k, d < k
                gd = out[d - 1]
                if gd:
                    acc += gd * v[k // d - 1]
            if acc:
                out[k - 1] = -lead * acc
        return ArithFunc._raw(tuple(out), self._mode)

    def power(self, r: int) -> "ArithFunc":
        """r-fold convolution power; the zeroth power is the identity."""
        if r < 0:
            raise ValueError("negative powers: invert first")
        out = identity(len(self._values), self._mode)
        for _ in range(r):
            out = out.convolve(self)
        return out

    def __pow__(self, r: int) -> "ArithFunc":
        return self.power(r)

    # window helpers ----------------------------------------------------

    def truncate(self, n: int) -> "ArithFunc":
        if not 1 <= n <= len(self._values):
            raise WindowError(f"cannot truncate a window of {len(self._values)} to {n}")
        return ArithFunc._raw(self._values[:n], self._mode)

    def to_float(self) -> "ArithFunc":
        """Explicit conversion to float mode (exact -> float is lossy)."""
        return ArithFunc._raw(tuple(float(v) for v in self._values), FLOAT)

    def allclose(self, other: "ArithFunc", tol: float = 1e-12) -> bool:
        """Entrywise comparison with absolute tolerance (for float mode)."""
        if self._mode != other._mode or len(self) != len(other):
            return False
        if self._mode == EXACT:
            return self._values == other._values
        return all(abs(a - b) <= tol for a, b in zip(self._values, other._values))


# constructors ----------------------------------------------------------


def make(values: Iterable[Scalar], mode: str | None = None) -> ArithFunc:
    """Build a function from its values at 1, 2, ..., n."""
    return ArithFunc(values, mode)


def zeros(n: int, mode: str = EXACT) -> ArithFunc:
    if n < 1:
        raise ValueError("window length must be at least 1")
    zero = Fraction(0) if mode == EXACT else 0.0
    return ArithFunc._raw((zero,) * n, mode)


def identity(n: int, mode: str = EXACT) -> ArithFunc:
    """The convolution identity e: 1 at index 1, 0 elsewhere."""
    if n < 1:
        raise ValueError("window length must be at least 1")
    one = Fraction(1) if mode == EXACT else 1.0
    zero = Fraction(0) if mode == EXACT else 0.0
    return ArithFunc._raw((one,) + (zero,) * (n - 1), mode)


def delta(m: int, n: int, mode: str = EXACT) -> ArithFunc:
    """The indicator of {m}: 1 at index m, 0 elsewhere on 1..n."""
    if m < 1:
        raise ValueError("support point must be at least 1")
    if n < 1:
        raise ValueError("window length must be at least 1")
    one = Fraction(1) if mode == EXACT else 1.0
    zero = Fraction(0) if mode == EXACT else 0.0
    vals = [zero] * n
    if m <= n:
        vals[m - 1] = one
    return ArithFunc._raw(tuple(vals), mode)


# free-function aliases over the methods ---------------------------------


def add(f: ArithFunc, g: ArithFunc) -> ArithFunc:
    return f.add(g)


def convolve(f: ArithFunc, g: ArithFunc) -> ArithFunc:
    return f.convolve(g)


def invert(f: ArithFunc) -> ArithFunc:
    return f.invert()


def norm(f: ArithFunc) -> int | None:
    return f.norm()


def power(f: ArithFunc, r: int) -> ArithFunc:
    return f.power(r)


def try_divide(h: ArithFunc, f: ArithFunc) -> ArithFunc | NotDivisibleWitness:
    """Solve f * g = h on the common window, exactly.

    Returns the quotient g (of length floor(n / norm(f))) when one
    exists, else a :class:`NotDivisibleWitness` carrying the first index
    that rules every candidate out.  Divisibility is certified only at
    this truncation; nothing is claimed about indices beyond the window.
    """
    if h.mode != EXACT or f.mode != EXACT:
        raise ModeMismatchError("division is exact-mode only")
    n = min(len(h), len(f))
    hv, fv = h.values, f.values

    a = None
    for i in range(1, n + 1):
        if fv[i - 1]:
            a = i
            break
    if a is None:
        raise ZeroFunctionError("divisor is zero on the window")

    b = None
    for i in range(1, n + 1):
        if hv[i - 1]:
            b = i
            break
    if b is None:
        # zero dividend: the zero quotient works
        return zeros(n // a)
    if b % a:
        return NotDivisibleWitness(
            index=b, note="dividend norm is not a multiple of the divisor norm"
        )

    qlen = n // a
    fa = fv[a - 1]
    g = [Fraction(0)] * qlen
    for m in range(1, qlen + 1):
        am = a * m
        acc = Fraction(0)
        for i in _divisors(am):
            if i <= a:
                continue
            gj = g[am // i - 1]
            if gj:
                acc += fv[i - 1] * gj
        g[m - 1] = (hv[am - 1] - acc) / fa

    # the recursion fixes every multiple of a; check the rest of the window
    for k in range(1, n + 1):
        if k % a == 0:
            continue
        acc = Fraction(0)
        for i in _divisors(k):
            if i < a:
                continue  # f vanishes below its norm
            gj = g[k // i - 1]
            if gj:
                acc += fv[i - 1] * gj
        if acc != hv[k - 1]:
            return NotDivisibleWitness(
                index=k, note="no quotient can match the dividend at this index"
            )
    return ArithFunc._raw(tuple(g), EXACT)


def indicator_shift(m: int, g: ArithFunc, n_out: int) -> ArithFunc:
    """The convolution delta_m * g, written out on a window of length n_out.

    This is just an index dilation: value g(j) lands at index m*j.  It is
    only sound while every multiple of m inside the output window maps
    back into g's window, i.e. n_out < m * (len(g) + 1); beyond that the
    result would depend on values g was truncated away from.
    """
    if m < 1:
        raise ValueError("shift factor must be at least 1")
    if n_out < 1:
        raise ValueError("window length must be at least 1")
    if n_out >= m * (len(g) + 1):
        raise WindowError(
            f"window {n_out} reaches index {m * (len(g) + 1)} = {m}*{len(g) + 1}, "
            "beyond what the shifted operand determines"
        )
    zero = Fraction(0) if g.mode == EXACT else 0.0
    vals = [zero] * n_out
    for j in range(1, len(g) + 1):
        pos = m * j
        if pos > n_out:
            break
        vals[pos - 1] = g.values[j - 1]
    return ArithFunc._raw(tuple(vals), g.mode)

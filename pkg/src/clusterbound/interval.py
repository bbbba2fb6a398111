"""Outward-rounded interval enclosures with exact rational endpoints.

Transcendental constants and logarithms are enclosed by truncated series
with explicit remainder bounds, then rounded outward onto the dyadic grid
2^-bits.  Comparisons are conservative: a question is answered "yes" only
when every point of the enclosure agrees.
"""
from __future__ import annotations

import decimal
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

DEFAULT_BITS = 128


def _floor_dyadic(x: Fraction, bits: int) -> Fraction:
    return Fraction((x.numerator << bits) // x.denominator, 1 << bits)


def _ceil_dyadic(x: Fraction, bits: int) -> Fraction:
    return Fraction(-((-x.numerator << bits) // x.denominator), 1 << bits)


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> "Interval":
        x = Fraction(x)
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def round_out(self, bits: int = DEFAULT_BITS) -> "Interval":
        return Interval(_floor_dyadic(self.lo, bits), _ceil_dyadic(self.hi, bits))

    def contains(self, other) -> bool:
        if isinstance(other, Interval):
            return self.lo <= other.lo and other.hi <= self.hi
        return self.lo <= other <= self.hi

    def __add__(self, other) -> "Interval":
        other = _as_interval(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other) -> "Interval":
        return self + (-_as_interval(other))

    def __rsub__(self, other) -> "Interval":
        return _as_interval(other) - self

    def __mul__(self, other) -> "Interval":
        other = _as_interval(other)
        prods = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return Interval(min(prods), max(prods))

    __rmul__ = __mul__

    def reciprocal(self) -> "Interval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval contains zero")
        return Interval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other) -> "Interval":
        return self * _as_interval(other).reciprocal()

    def __rtruediv__(self, other) -> "Interval":
        return _as_interval(other) * self.reciprocal()

    def __pow__(self, e: int) -> "Interval":
        if e < 0:
            return (self ** -e).reciprocal()
        if self.lo >= 0:
            return Interval(self.lo ** e, self.hi ** e)
        if self.hi <= 0:
            a, b = (-self.hi) ** e, (-self.lo) ** e
            return Interval(a, b) if e % 2 == 0 else Interval(-b, -a)
        big = max(-self.lo, self.hi) ** e
        return Interval(Fraction(0), big) if e % 2 == 0 else Interval(self.lo ** e, self.hi ** e)

    def __repr__(self) -> str:
        return f"Interval({float(self.lo)!r}, {float(self.hi)!r})"


def _as_interval(x) -> Interval:
    return x if isinstance(x, Interval) else Interval.point(x)


@lru_cache(maxsize=None)
def e_interval(bits: int = DEFAULT_BITS) -> Interval:
    """Enclosure of e from sum 1/i!; the tail after N terms is below (N+1)/(N * N!)."""
    target = Fraction(1, 1 << (bits + 8))
    total = Fraction(0)
    n = 0
    while True:
        total += Fraction(1, factorial(n))
        n += 1
        tail = Fraction(n + 1, n * factorial(n))
        if tail < target:
            break
    return Interval(total, total + tail).round_out(bits)


def exp_interval(x, bits: int = DEFAULT_BITS) -> Interval:
    """Enclosure of exp(x) for rational x."""
    x = Fraction(x)
    m = x.numerator // x.denominator
    r = x - m
    guard = bits + 16
    # exp(r), 0 <= r < 1: partial Taylor sum plus geometric remainder bound.
    total = Fraction(0)
    term = Fraction(1)
    i = 0
    target = Fraction(1, 1 << guard)
    while True:
        total += term
        i += 1
        term = term * r / i
        if term < target:
            break
    tail = term * Fraction(i + 1, i + 1 - r) if r else Fraction(0)
    er = Interval(total, total + tail)
    em = e_interval(guard) ** m
    return (er * em).round_out(bits)


def _atanh_dyadic(z_num: int, prec: int) -> tuple[int, int]:
    """Fixed-point enclosure of atanh(z) for z = z_num / 2^prec in [0, 1/3].

    Returns integers (lo, hi) with lo / 2^prec <= atanh(z) <= hi / 2^prec.
    """
    one = 1 << prec
    z2_num = z_num * z_num
    p_lo = p_hi = z_num
    lo = hi = 0
    k = 1
    while p_hi > 0:
        lo += p_lo // k
        hi += -(-p_hi // k)
        p_lo = (p_lo * z2_num) >> (2 * prec)
        p_hi = -(-(p_hi * z2_num) // (one * one))
        k += 2
        if p_hi <= 1:
            # remaining sum <= z^k / k / (1 - z^2) <= (9/8) p_hi / k
            hi += -(-9 * p_hi // (8 * k)) + 1
            break
    return lo, hi


@lru_cache(maxsize=None)
def log2_interval(bits: int = DEFAULT_BITS) -> Interval:
    prec = bits + 32
    z_lo = (1 << prec) // 3
    z_hi = -(-(1 << prec) // 3)
    lo, _ = _atanh_dyadic(z_lo, prec)
    _, hi = _atanh_dyadic(z_hi, prec)
    return Interval(Fraction(2 * lo, 1 << prec), Fraction(2 * hi, 1 << prec)).round_out(bits)


def log_interval(x, bits: int = DEFAULT_BITS) -> Interval:
    """Enclosure of log(x) for rational x > 0."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("log of a non-positive number")
    if x == 1:
        return Interval.point(0)
    m = x.numerator.bit_length() - x.denominator.bit_length()
    y = x / Fraction(2) ** m
    if y < 1:
        m -= 1
        y *= 2
    # y in [1, 2): log y = 2 atanh((y - 1) / (y + 1)) with z in [0, 1/3).
    prec = bits + 32
    z = (y - 1) / (y + 1)
    z_lo = (z.numerator << prec) // z.denominator
    z_hi = -((-z.numerator << prec) // z.denominator)
    lo, _ = _atanh_dyadic(z_lo, prec)
    _, hi = _atanh_dyadic(z_hi, prec)
    logy = Interval(Fraction(2 * lo, 1 << prec), Fraction(2 * hi, 1 << prec))
    return (logy + m * log2_interval(prec)).round_out(bits)


def decimal_string(x, digits: int = 40, rounding: str = "floor") -> str:
    """Decimal rendering of a rational, rounded toward -inf ("floor") or +inf ("ceiling")."""
    x = Fraction(x)
    mode = {"floor": decimal.ROUND_FLOOR, "ceiling": decimal.ROUND_CEILING}[rounding]
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = mode
        value = decimal.Decimal(x.numerator) / decimal.Decimal(x.denominator)
    return format(value, "f") if abs(value.adjusted()) < 30 else str(value)

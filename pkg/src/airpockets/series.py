"""Truncated formal power series with exact rational coefficients.

A :class:`TruncatedSeries` is a dense coefficient vector in one variable z
together with an explicit truncation order: the largest exponent whose
coefficient is trusted.  All arithmetic is exact (``fractions.Fraction``
coefficients, unbounded integers underneath) and every operation returns a
result whose order is the weakest order its inputs can justify.

Equality between two series is defined only up to the smaller of the two
orders; series are therefore unhashable.
"""

from fractions import Fraction
from typing import Iterable, Iterator, Union

Scalar = Union[int, Fraction]


class SeriesError(ValueError):
    """Base error for invalid series construction or arithmetic."""


class NonUnitError(SeriesError):
    """Division or square root demanded a unit constant term that is absent."""


class NotDivisibleError(SeriesError):
    """A shift down by z**m met a nonzero coefficient below z**m."""


class TruncatedSeries:
    """Dense truncated power series over exact rationals.

    ``coeffs[n]`` is the coefficient of z**n; ``order == len(coeffs) - 1``.
    Instances are immutable and safe to share between threads.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar], order: int):
        if order < 0:
            raise SeriesError(f"order must be nonnegative, got {order}")
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        if len(cs) > order + 1:
            raise SeriesError(
                f"{len(cs)} coefficients do not fit order {order} "
                f"(at most {order + 1} allowed)"
            )
        cs.extend([_ZERO] * (order + 1 - len(cs)))
        self._coeffs = tuple(cs)

    # -- construction helpers -------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls((1,), order)

    @classmethod
    def z(cls, order: int) -> "TruncatedSeries":
        return cls((0, 1), order)

    @classmethod
    def geometric(cls, order: int) -> "TruncatedSeries":
        """1/(1-z): the all-ones series."""
        return cls([1] * (order + 1), order)

    # -- basic accessors -------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def coeff(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise SeriesError(
                f"coefficient of z**{n} requested beyond trusted order {self.order}"
            )
        return self._coeffs[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        """Forget coefficients above ``order`` (which must not exceed self.order)."""
        if order > self.order:
            raise SeriesError(
                f"cannot extend order {self.order} to {order}: high coefficients unknown"
            )
        return TruncatedSeries(self._coeffs[: order + 1], order)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._coeffs)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:8])
        if self.order >= 8:
            shown += ", ..."
        return f"TruncatedSeries([{shown}], order={self.order})"

    # -- ring operations --------------------------------------------------

    def __eq__(self, other: object) -> bool:
        """Exponent-wise equality up to the common (minimum) order."""
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries((other,), self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self._coeffs[: n + 1] == other._coeffs[: n + 1]

    __hash__ = None  # equality is order-relative

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self._coeffs], self.order)

    def __add__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            cs = list(self._coeffs)
            cs[0] += other
            return TruncatedSeries(cs, self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries(
            [a + b for a, b in zip(self._coeffs, other._coeffs)][: n + 1], n
        )

    __radd__ = __add__

    def __sub__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self._coeffs], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        out = [_ZERO] * (n + 1)
        for i in range(n + 1):
            if a[i] == 0:
                continue
            ai = a[i]
            for j in range(n + 1 - i):
                if b[j] != 0:
                    out[i + j] += ai * b[j]
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of series by scalar zero")
            return self * Fraction(1, other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if other._coeffs[0] == 0:
            raise NonUnitError("cannot divide by a series with zero constant term")
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        b0 = b[0]
        q = [_ZERO] * (n + 1)
        for i in range(n + 1):
            acc = a[i]
            for j in range(1, i + 1):
                if b[j] != 0:
                    acc -= q[i - j] * b[j]
            q[i] = acc / b0
        return TruncatedSeries(q, n)

    def __pow__(self, k: int) -> "TruncatedSeries":
        if not isinstance(k, int) or k < 0:
            raise SeriesError(f"series power wants a nonnegative integer, got {k!r}")
        result = TruncatedSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- shifts ------------------------------------------------------------

    def mul_z_pow(self, m: int) -> "TruncatedSeries":
        """Multiply by z**m; the result is trusted to order + m."""
        if m < 0:
            raise SeriesError(f"shift exponent must be nonnegative, got {m}")
        return TruncatedSeries((_ZERO,) * m + self._coeffs, self.order + m)

    def div_z_pow(self, m: int) -> "TruncatedSeries":
        """Divide by z**m; all coefficients below z**m must vanish."""
        if m < 0:
            raise SeriesError(f"shift exponent must be nonnegative, got {m}")
        if m > self.order:
            raise SeriesError(
                f"cannot shift down by {m}: order is only {self.order}"
            )
        for i in range(m):
            if self._coeffs[i] != 0:
                raise NotDivisibleError(
                    f"coefficient of z**{i} is {self._coeffs[i]}, not zero; "
                    f"series is not divisible by z**{m}"
                )
        return TruncatedSeries(self._coeffs[m:], self.order - m)

    # -- square root --------------------------------------------------------

    def sqrt_unit(self) -> "TruncatedSeries":
        """Square root of a series with constant term 1.

        Returns the unique s with s*s == self (up to order) and s(0) == 1,
        via the coefficient recurrence
        c_n = (a_n - sum_{1<=j<=n-1} c_j c_{n-j}) / 2.
        """
        if self._coeffs[0] != 1:
            raise NonUnitError(
                f"square root wants constant term 1, got {self._coeffs[0]}"
            )
        n = self.order
        a = self._coeffs
        c = [_ZERO] * (n + 1)
        c[0] = Fraction(1)
        for i in range(1, n + 1):
            acc = a[i]
            for j in range(1, i):
                acc -= c[j] * c[i - j]
            c[i] = acc / 2
        return TruncatedSeries(c, n)


_ZERO = Fraction(0)


def make_poly(coeff_list: Iterable[Scalar], order: int) -> TruncatedSeries:
    """Series with the given low coefficients, zero-padded to ``order``."""
    return TruncatedSeries(coeff_list, order)

"""Closed-form generating functions for Dyck paths with air pockets.

Every function here returns an exact :class:`TruncatedSeries` trusted to the
requested order.  Three path families are covered:

* the left-to-right model (``dap_*``): unit up-steps, giant down-steps of any
  size, no two down-steps adjacent;
* the right-to-left model (``rl_*``): up-steps of any size, unit down-steps,
  no two up-steps adjacent;
* the skew model (``skew_*``): the left-to-right model extended with red
  steps that may only follow a down-step or another red step.

All closed forms are polynomials or rational expressions in z and the
power-series root of the model's counting kernel (a quadratic whose
coefficients are polynomials in z).  Each public function computes its
intermediates with enough headroom that the returned series is exact to the
full requested order, and asserts on exit that every coefficient is an
integer: these are counting series, so a non-integral coefficient means an
upstream bug, never a rounding artifact.
"""

from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .series import SeriesError, TruncatedSeries, make_poly


class KernelFamily(Enum):
    """Which counting kernel a closed form lives over."""

    DAP = "dap"
    SKEW = "skew"


# Kernel quadratics in the catalytic variable u, as (u^2, u^1, u^0)
# coefficient polynomials in z.
_KERNEL_COEFFS = {
    # z*u^2 + (z^2 - z - 1)*u + 1
    KernelFamily.DAP: ((0, 1), (-1, -1, 1), (1,)),
    # z*u^2 + (2z^2 - z - 1)*u + 1
    KernelFamily.SKEW: ((0, 1), (-1, -1, 2), (1,)),
}


class NonIntegralError(ValueError):
    """A counting series came out with a non-integer coefficient."""


def _integral(s: TruncatedSeries) -> TruncatedSeries:
    for n, c in enumerate(s.coeffs):
        if c.denominator != 1:
            raise NonIntegralError(
                f"coefficient of z**{n} is {c}; counting series must be integral"
            )
    return s


def dap_radicand(order: int) -> TruncatedSeries:
    """1 - 2z - z^2 - 2z^3 + z^4, padded to ``order`` (requires order >= 4)."""
    if order < 4:
        raise SeriesError(f"radicand has degree 4; order {order} cannot hold it")
    return _integral(make_poly([1, -2, -1, -2, 1], order))


@lru_cache(maxsize=None)
def dap_s2(order: int) -> TruncatedSeries:
    """Power-series root of the air-pocket kernel.

    Equals (1 + z - z^2 - sqrt(1 - 2z - z^2 - 2z^3 + z^4)) / (2z); its
    coefficients count complete paths (both layers, level 0) by length:
    1, 0, 1, 1, 2, 4, 8, 17, ...
    """
    if order < 1:
        raise SeriesError(f"order must be at least 1, got {order}")
    work = max(order + 1, 4)
    numer = make_poly([1, 1, -1], work) - dap_radicand(work).sqrt_unit()
    return _integral((numer.div_z_pow(1) / 2).truncate(order))


def dap_f(k: int, order: int) -> TruncatedSeries:
    """Paths ending at level k whose last step was an up-step: z^k * s2^k.

    k = 0 is the constant 1 (the empty path alone).
    """
    _check_level(k)
    if k == 0:
        return TruncatedSeries.one(order)
    s2 = dap_s2(order)
    return _integral(((s2**k).mul_z_pow(k)).truncate(order))


def dap_g(k: int, order: int) -> TruncatedSeries:
    """Paths ending at level k whose last step was a down-step:
    z^k * (s2^(k+1) - s2^k)."""
    _check_level(k)
    s2 = dap_s2(order)
    return _integral(((s2 ** (k + 1) - s2**k).mul_z_pow(k)).truncate(order))


def dap_level(k: int, order: int) -> TruncatedSeries:
    """All paths ending at level k, either layer: z^k * s2^(k+1)."""
    _check_level(k)
    s2 = dap_s2(order)
    return _integral(((s2 ** (k + 1)).mul_z_pow(k)).truncate(order))


def dap_total(order: int) -> TruncatedSeries:
    """Paths ending at any level: (1 - z - z^2 - sqrt(radicand)) / (2z^3).

    Identical to the level-0 down-layer series shifted down two powers.
    """
    if order < 1:
        raise SeriesError(f"order must be at least 1, got {order}")
    work = max(order + 3, 4)
    numer = make_poly([1, -1, -1], work) - dap_radicand(work).sqrt_unit()
    return _integral((numer.div_z_pow(3) / 2).truncate(order))


def rl_b(k: int, order: int) -> TruncatedSeries:
    """Nonempty right-to-left paths ending at level k.

    k = 0 gives s2 - 1; k >= 1 gives ((s2 - 1)/z) * s2^(k-1).
    """
    _check_level(k)
    s2 = dap_s2(order + 1)
    if k == 0:
        return _integral((s2 - 1).truncate(order))
    base = (s2 - 1).div_z_pow(1)
    return _integral((base * s2.truncate(order) ** (k - 1)).truncate(order))


def rl_a(k: int, order: int) -> TruncatedSeries:
    """Right-to-left paths ending at level k whose last step was a down-step,
    plus the empty path when k = 0: [k=0] + z * rl_b(k+1)."""
    _check_level(k)
    shifted = rl_b(k + 1, order).mul_z_pow(1).truncate(order)
    if k == 0:
        shifted = shifted + 1
    return _integral(shifted)


def skew_radicand(order: int) -> TruncatedSeries:
    """1 - 2z - 3z^2 - 4z^3 + 4z^4, padded to ``order`` (requires order >= 4)."""
    if order < 4:
        raise SeriesError(f"radicand has degree 4; order {order} cannot hold it")
    return _integral(make_poly([1, -2, -3, -4, 4], order))


@lru_cache(maxsize=None)
def skew_s2(order: int) -> TruncatedSeries:
    """Power-series root of the skew kernel:
    (1 + z - 2z^2 - sqrt(1 - 2z - 3z^2 - 4z^3 + 4z^4)) / (2z)."""
    if order < 1:
        raise SeriesError(f"order must be at least 1, got {order}")
    work = max(order + 1, 4)
    numer = make_poly([1, 1, -2], work) - skew_radicand(work).sqrt_unit()
    return _integral((numer.div_z_pow(1) / 2).truncate(order))


def skew_A1(order: int) -> TruncatedSeries:
    """Skew paths ending in the after-up layer, any level:
    1/(2(1-z)) + 1/(2(1-z*s2))."""
    half = Fraction(1, 2)
    geo = TruncatedSeries.geometric(order)
    return _integral(half * geo + half * _skew_geo_zs2(order))


def skew_C1(order: int) -> TruncatedSeries:
    """Skew paths ending in the after-red layer, any level:
    -1/(2(1-z)) + 1/(2(1-z*s2))."""
    half = Fraction(1, 2)
    geo = TruncatedSeries.geometric(order)
    return _integral(half * _skew_geo_zs2(order) - half * geo)


def _skew_geo_zs2(order: int) -> TruncatedSeries:
    """1/(1 - z*s2) for the skew kernel root."""
    zs2 = skew_s2(order).mul_z_pow(1).truncate(order)
    return TruncatedSeries.one(order) / (TruncatedSeries.one(order) - zs2)


def skew_level(k: int, order: int) -> TruncatedSeries:
    """All skew paths ending at level k, any layer:
    z^k * s2^(k+1) * (1 - z^2 - z*s2) / (1 - z*s2)."""
    _check_level(k)
    s2 = skew_s2(order)
    zs2 = s2.mul_z_pow(1).truncate(order)
    one = TruncatedSeries.one(order)
    z2 = make_poly([0, 0, 1][: order + 1], order)
    ratio = (one - z2 - zs2) / (one - zs2)
    return _integral(((s2 ** (k + 1)) * ratio).mul_z_pow(k).truncate(order))


def kernel_polynomial_at(
    family: KernelFamily, u: TruncatedSeries, order: int
) -> TruncatedSeries:
    """Evaluate the family's kernel quadratic at an arbitrary series u.

    The constant kernel coefficient being 1 means the two roots multiply to
    1/z; checking that a candidate root annihilates the kernel therefore also
    certifies the root-product relation without ever materializing the
    Laurent-series root.
    """
    c2, c1, c0 = (make_poly(list(c), order) for c in _KERNEL_COEFFS[family])
    u = u.truncate(order) if u.order > order else u
    return c2 * u * u + c1 * u + c0


def kernel_residual(family: KernelFamily, order: int) -> TruncatedSeries:
    """Kernel quadratic evaluated at its own power-series root.

    Contract: identically zero up to ``order``.
    """
    s2 = dap_s2(order) if family is KernelFamily.DAP else skew_s2(order)
    return kernel_polynomial_at(family, s2, order)


def _check_level(k: int) -> None:
    if k < 0:
        raise SeriesError(f"level index must be nonnegative, got {k}")

"""Closed-form and bisection root oracles.

Radical and trigonometric solution formulas for quadratics, cubics and
quartics, plus a bisection fallback that follows the branch through 0 for
any monotone stretch of R.  These provide values independent of the
differential equations, so agreement between the two routes is meaningful
evidence of correctness.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from ..algebra import UPoly
from ..errors import DomainError

__all__ = [
    "ClosedFormRoot",
    "closed_form_root",
    "babylonian_root",
    "cardano_root",
    "vieta_trig_root",
    "vieta_hyp_root",
    "ferrari_real_roots",
    "biquadratic_real_roots",
    "quartic_real_roots",
    "quartic_w_root",
    "depress_quartic",
    "depressed_cubic_real_roots",
    "bisect_branch_root",
]


@dataclass(frozen=True)
class ClosedFormRoot:
    method: str
    value: float
    validity: str


def _cbrt(t: float) -> float:
    """Real cube root."""
    return math.copysign(abs(t) ** (1.0 / 3.0), t)


def _polish(coeffs: list[float], x: float, iters: int = 3) -> float:
    """A few Newton steps to scrub float noise off a closed-form root."""
    dcoeffs = [i * c for i, c in enumerate(coeffs)][1:]
    for _ in range(iters):
        f = 0.0
        for c in reversed(coeffs):
            f = f * x + c
        fp = 0.0
        for c in reversed(dcoeffs):
            fp = fp * x + c
        if fp == 0.0 or not math.isfinite(f):
            break
        x -= f / fp
    return x


def babylonian_root(p: float, q: float) -> float:
    """Branch root of x^2 + p x = q: (-p + sign(p) sqrt(p^2 + 4q)) / 2."""
    if p == 0:
        raise DomainError("needs p != 0")
    rad = p * p + 4.0 * q
    if rad < 0:
        raise DomainError("no real root: p^2 + 4q < 0")
    return (-p + math.copysign(1.0, p) * math.sqrt(rad)) / 2.0


def cardano_root(p: float, q: float) -> float:
    """Branch root of x^3 + p x = q by the radical formula.

    Real only while q^2/4 + p^3/27 >= 0; otherwise (p < 0, all three
    roots real) use the trigonometric form instead.
    """
    rad = q * q / 4.0 + p**3 / 27.0
    if rad < 0:
        raise DomainError("negative radicand; use vieta_trig")
    c = _cbrt(q / 2.0 + math.sqrt(rad))
    if c == 0.0:
        return 0.0
    x = c - p / (3.0 * c)
    return _polish([-q, p, 0.0, 1.0], x)


def vieta_trig_root(p: float, q: float) -> float:
    """Branch root of x^3 + p x = q, p < 0, by the sine triplication identity.

    Valid for |q| < sqrt(-4 p^3 / 27), the window between the two branch
    points where all three roots are real.
    """
    if p >= 0:
        raise DomainError("needs p < 0")
    s = math.sqrt(-p)
    arg = 1.5 * math.sqrt(3.0) * q / (p * s)
    if abs(arg) > 1.0:
        raise DomainError("outside the all-real-roots window")
    x = 2.0 * s / math.sqrt(3.0) * math.sin(math.asin(arg) / 3.0)
    return _polish([-q, p, 0.0, 1.0], x)


def vieta_hyp_root(p: float, q: float) -> float:
    """Branch root of x^3 + p x = q, p > 0, by the sinh triplication identity."""
    if p <= 0:
        raise DomainError("needs p > 0")
    s = math.sqrt(p)
    arg = 1.5 * math.sqrt(3.0) * q / (p * s)
    x = 2.0 * s / math.sqrt(3.0) * math.sinh(math.asinh(arg) / 3.0)
    return _polish([-q, p, 0.0, 1.0], x)


def depressed_cubic_real_roots(p: float, q: float) -> list[float]:
    """All real roots of t^3 + p t + q = 0, ascending."""
    rad = q * q / 4.0 + p**3 / 27.0
    if rad > 0:
        c = _cbrt(-q / 2.0 + math.sqrt(rad))
        d = _cbrt(-q / 2.0 - math.sqrt(rad))
        roots = [c + d]
    elif p == 0 and q == 0:
        roots = [0.0]
    else:
        m = 2.0 * math.sqrt(-p / 3.0)
        theta = math.acos(max(-1.0, min(1.0, 3.0 * q / (p * m)))) / 3.0
        roots = sorted(m * math.cos(theta - 2.0 * math.pi * k / 3.0) for k in range(3))
    return [_polish([q, p, 0.0, 1.0], r) for r in roots]


def biquadratic_real_roots(c: float, e: float) -> list[float]:
    """Real roots of y^4 + c y^2 + e = 0, ascending."""
    disc = c * c - 4.0 * e
    if disc < 0:
        return []
    roots = []
    for z in ((-c - math.sqrt(disc)) / 2.0, (-c + math.sqrt(disc)) / 2.0):
        if z >= 0:
            r = math.sqrt(z)
            roots += [-r, r] if r else [0.0]
    return sorted(set(roots))


def ferrari_real_roots(c: float, d: float, e: float) -> list[float]:
    """Real roots of the depressed quartic y^4 + c y^2 + d y + e = 0, d != 0.

    Solves the resolvent u^6 + 2c u^4 + (c^2 - 4e) u^2 - d^2 = 0 for a real
    u (always possible: the cubic in u^2 is negative at 0), then splits the
    quartic into two quadratics whose roots are

        (u/2) (1 +- sqrt(-2d/u^3 - 2c/u^2 - 1)),
       -(u/2) (1 +- sqrt( 2d/u^3 - 2c/u^2 - 1)).
    """
    if d == 0:
        raise DomainError("d = 0 is the biquadratic case; use biquadratic_real_roots")
    # cubic in v = u^2: v^3 + 2c v^2 + (c^2 - 4e) v - d^2 = 0, take v > 0
    b2, b1, b0 = 2.0 * c, c * c - 4.0 * e, -d * d
    pp = b1 - b2 * b2 / 3.0
    qq = b0 - b1 * b2 / 3.0 + 2.0 * b2**3 / 27.0
    vs = [t - b2 / 3.0 for t in depressed_cubic_real_roots(pp, qq)]
    v = max(vs)
    if v <= 0:
        raise DomainError("resolvent produced no positive root")
    u = math.sqrt(v)
    roots = []
    for sign_u in (1.0, -1.0):
        uu = sign_u * u
        rad = -2.0 * d / uu**3 - 2.0 * c / uu**2 - 1.0
        if rad >= 0:
            for pm in (1.0, -1.0):
                roots.append(uu / 2.0 * (1.0 + pm * math.sqrt(rad)))
    out = sorted({_polish([e, d, c, 0.0, 1.0], r, 6) for r in roots})
    dedup: list[float] = []
    for r in out:
        if not dedup or abs(r - dedup[-1]) > 1e-9 * (1.0 + abs(r)):
            dedup.append(r)
    return dedup


def quartic_real_roots(c: float, d: float, e: float) -> list[float]:
    """Real roots of a depressed quartic, via Ferrari or the biquadratic split."""
    if abs(d) < 1e-14 * (1.0 + abs(c) + abs(e)):
        return biquadratic_real_roots(c, e)
    return ferrari_real_roots(c, d, e)


def depress_quartic(r: UPoly) -> tuple[float, float, float, float]:
    """Shift a monic quartic R so the cubic term vanishes.

    Returns (s, c, d, e0) with R(y + s) = y^4 + c y^2 + d y + e0; the
    branch equation R(x) = q becomes y^4 + c y^2 + d y + (e0 - q) = 0.
    """
    if r.var != "x" or r.degree != 4 or r.lc != 1:
        raise ValueError("expected a monic quartic in x")
    s = -r.coefficient(3) / 4
    shifted = r.compose(UPoly("x", (s, 1)))
    assert shifted.coefficient(3) == 0
    return (
        float(s),
        float(shifted.coefficient(2)),
        float(shifted.coefficient(1)),
        float(shifted.coefficient(0)),
    )


def quartic_w_root(p: float, q: float, substeps: int = 32) -> float:
    """Branch root of x^4 + p x = q via the auxiliary sextic in w.

    Follows the real branch of -p^2 w^6 + 4 q w^4 + 1 = 0 with
    w(0) = p^(-1/3) by continuation in q (Newton on v = w^2), then applies
    x = (sqrt(2 p w^3 - 1) - 1) / (2 w).
    """
    if p == 0:
        raise DomainError("needs p != 0")
    v = abs(p) ** (-2.0 / 3.0)
    for i in range(1, substeps + 1):
        qi = q * i / substeps
        for _ in range(40):
            f = -p * p * v**3 + 4.0 * qi * v * v + 1.0
            fp = -3.0 * p * p * v * v + 8.0 * qi * v
            if fp == 0.0:
                break
            step = f / fp
            v -= step
            if abs(step) <= 1e-15 * abs(v):
                break
        if v <= 0:
            raise DomainError("w-branch left the real domain")
    w = math.copysign(math.sqrt(v), p)
    rad = 2.0 * p * w**3 - 1.0
    if rad < 0:
        raise DomainError("x-formula radicand went negative")
    x = (math.sqrt(rad) - 1.0) / (2.0 * w)
    return _polish([-q, p, 0.0, 0.0, 1.0], x)


def bisect_branch_root(r: UPoly, q: float, expand_limit: int = 200) -> float:
    """Root of R(x) = q reached from 0 along a monotone stretch of R.

    Works whenever R is monotone between 0 and the root, which covers
    every branch inside its first branch-point radius and strictly
    monotone cases such as odd R with R'(0) = 0.  Pure bracketing plus
    bisection; no derivative information is used.
    """
    if r.var != "x":
        raise ValueError("expected a polynomial in x")
    coeffs = r.float_coeffs()

    def f(x: float) -> float:
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc - q

    f0 = f(0.0)
    if f0 == 0.0:
        return 0.0
    # near 0, R ~ c_k x^k with c_k the lowest nonzero coefficient; for odd k
    # the branch leaves 0 on the side where c_k x^k has the sign of q
    directions = (1.0, -1.0)
    for k, c in enumerate(coeffs):
        if k and c:
            if k % 2:
                directions = (math.copysign(1.0, q * c),)
            break
    for direction in directions:
        lo, hi = 0.0, direction * 1e-6
        found = False
        for _ in range(expand_limit):
            if f(hi) * f0 < 0:
                found = True
                break
            lo, hi = hi, hi * 2.0
        if found:
            a, b = (lo, hi) if lo < hi else (hi, lo)
            fa = f(a)
            for _ in range(200):
                mid = 0.5 * (a + b)
                fm = f(mid)
                if fm == 0.0 or (b - a) < 1e-16 * (1.0 + abs(mid)):
                    a = b = mid
                    break
                if (fm > 0) == (fa > 0):
                    a, fa = mid, fm
                else:
                    b = mid
            return 0.5 * (a + b)
    raise DomainError("no sign change found from 0 in either direction")


def closed_form_root(method: str, **kw) -> ClosedFormRoot:
    """Uniform dispatcher over the closed-form branch-root methods."""
    table = {
        "babylonian": (babylonian_root, "p != 0, p^2 + 4q >= 0"),
        "cardano": (cardano_root, "q^2/4 + p^3/27 >= 0"),
        "vieta_trig": (vieta_trig_root, "p < 0, |q| < sqrt(-4p^3/27)"),
        "vieta_hyp": (vieta_hyp_root, "p > 0"),
        "quartic_w": (quartic_w_root, "p != 0, branch real"),
    }
    if method not in table:
        raise ValueError(f"unknown method {method!r}")
    fn, validity = table[method]
    return ClosedFormRoot(method=method, value=fn(**kw), validity=validity)

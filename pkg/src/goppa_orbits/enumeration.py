"""The headline computation: an exact upper bound on the number of
inequivalent extended irreducible binary Goppa codes of length 2^n + 1
and degree r, together with brute-force orbit counters that
cross-validate the closed formulas at desk scale.

The bound decomposes over orbits of the projective semi-linear group:
with F the number of PGL-orbits of I_r fixed by the 2^r-power Frobenius
and P the total number of PGL-orbits, the answer is F + (P - F)/n, and
every division is exact by construction.  Non-integrality anywhere is
raised as an internal error, never rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import intnt
from .action import act_element, act_poly, pgl_enumerate
from .errors import GuardError, InternalCheckError
from .gf2field import GF2m, make_tower
from .polyq import (
    Parameters,
    Poly,
    count_divisor_polys_mobius,
    enumerate_irreducibles,
)


@dataclass(frozen=True)
class BoundReport:
    """Exact result of the bound computation with its term breakdown."""

    params: Parameters
    fixed_orbit_count: int
    pgl_orbit_count: int
    bound: int
    fixed_term: Fraction
    pgl_term: Fraction


def _mobius_power_sum(base: int, r: int) -> int:
    """sum over d | r of mu(d) * base^(r/d)."""
    return sum(intnt.mobius(d) * base ** (r // d) for d in intnt.divisors(r))


def pgl_orbit_count_formula(params: Parameters) -> int:
    """|PGL \\ I_r| = (sum over d|r of mu(d) q^(r/d)) / (r q (q^2-1)).

    Relaxed parameters are accepted when the division still comes out
    exact (every PGL-stabilizer trivial), e.g. q = 8, r = 5; an inexact
    division is raised, never rounded.
    """
    r, q = params.r, params.q
    total = _mobius_power_sum(q, r)
    denom = r * q * (q * q - 1)
    if total % denom:
        raise InternalCheckError(
            "orbit-count division is inexact: trivial-stabilizer hypotheses violated or arithmetic bug"
        )
    return total // denom


def fixed_orbit_count_formula(params: Parameters) -> int:
    """Number of Frobenius^(2^r)-fixed PGL-orbits: the divisor count / 6."""
    count = count_divisor_polys_mobius(params.r)
    if count % 6:
        raise InternalCheckError(f"divisor-polynomial count {count} is not a multiple of 6")
    return count // 6


def bound(params: Parameters) -> BoundReport:
    """The exact upper bound for (n, r), via one combined fraction.

    numerator = (n-1) q(q^2-1) sum mu(d)(2^(r/d)-1) + 6 sum mu(d) q^(r/d)
    over denominator 6 r n q(q^2-1); divisibility is asserted.
    """
    params.validate()
    n, r, q = params.n, params.r, params.q
    big_q = q * (q * q - 1)
    s1 = sum(intnt.mobius(d) * (2 ** (r // d) - 1) for d in intnt.divisors(r))
    s2 = _mobius_power_sum(q, r)
    numerator = (n - 1) * big_q * s1 + 6 * s2
    denominator = 6 * r * n * big_q
    if numerator % denominator:
        raise InternalCheckError("bound numerator is not divisible by its denominator")
    value = numerator // denominator
    fixed = fixed_orbit_count_formula(params)
    pgl = pgl_orbit_count_formula(params)
    if (pgl - fixed) % n or value != fixed + (pgl - fixed) // n:
        raise InternalCheckError("orbit-count decomposition identity failed")
    return BoundReport(
        params=params,
        fixed_orbit_count=fixed,
        pgl_orbit_count=pgl,
        bound=value,
        fixed_term=Fraction((n - 1) * s1, 6 * r * n),
        pgl_term=Fraction(s2, r * n * big_q),
    )


def make_table(n: int, r_list: list[int]) -> tuple[list[BoundReport], list[tuple[int, str]]]:
    """Bound reports for each r; invalid rows are collected, not fatal."""
    rows: list[BoundReport] = []
    rejected: list[tuple[int, str]] = []
    for r in r_list:
        try:
            rows.append(bound(Parameters(n, r)))
        except (InternalCheckError, ValueError) as exc:
            rejected.append((r, str(exc)))
    return rows, rejected


# ---------------------------------------------------------------------------
# Brute-force cross-validation
# ---------------------------------------------------------------------------

_POLY_DOMAIN_GUARD = 1 << 20
_ELEMENT_DOMAIN_GUARD = 1 << 16


def brute_force_orbit_count(
    gf: GF2m, r: int, group: str = "PGL", domain: str = "polynomials"
) -> int:
    """Count orbits by repeated materialization over unvisited seeds.

    Seeds are taken in ascending order (polynomial index order, or the
    integer order of field elements), so the count and the traversal are
    deterministic.  group is "PGL" or "PGammaL"; domain is "polynomials"
    (all of I_r) or "elements" (all extension elements of degree r).
    """
    if group not in ("PGL", "PGammaL"):
        raise ValueError(f"unknown group {group!r}")
    n = gf.m
    frob_order = r * n
    size = gf.order**r
    if domain == "polynomials":
        if size > _POLY_DOMAIN_GUARD:
            raise GuardError(f"polynomial domain {gf.order}^{r} exceeds the 2^20 guard")
        mats = tuple(pgl_enumerate(gf))
        frobs = range(frob_order) if group == "PGammaL" else (0,)
        visited: set[Poly] = set()
        count = 0
        for f in enumerate_irreducibles(gf, r):
            if f in visited:
                continue
            count += 1
            for mat in mats:
                for i in frobs:
                    visited.add(act_poly(gf, mat, f, frob=i))
        return count
    if domain == "elements":
        if size > _ELEMENT_DOMAIN_GUARD:
            raise GuardError(f"element domain {gf.order}^{r} exceeds the 2^16 guard")
        tower = make_tower(n, r)
        mats = tuple(pgl_enumerate(gf))
        frobs = range(frob_order) if group == "PGammaL" else (0,)
        seen: set[int] = set()
        count = 0
        for alpha in range(tower.ext.order):
            if alpha in seen or tower.degree_over(alpha) != r:
                continue
            count += 1
            for mat in mats:
                for i in frobs:
                    seen.add(act_element(tower, (mat, i), alpha))
        return count
    raise ValueError(f"unknown domain {domain!r}")

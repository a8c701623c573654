"""The pi_*-kernels Z^n(G), their stability sz and length lz, and E_#^n(G).

Z^n(X) is the group of self-maps of X killing pi_i for i <= n.  The groups
for SU(3), Sp(2) and G2 are tabulated; for other groups only the
finiteness of Z^infinity and the invariants sz, lz are computed, the latter
from the rational type (rationally, and at quasi-regular odd primes).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from sympy import isprime

from .abelian import AbelianGroup, localize
from .catalog import G2, LieGroup, Sp, SU, dimension, rational_type
from .errors import UNKNOWN, DomainError, NotCovered, Unknown, UnsupportedGroup
from .localization import Bundle, Decomposition, Sphere, covering_reduction, is_quasi_p_regular
from .psi import Presentation

INF = math.inf

Selector = Optional[Union[int, str]]
ZnResult = Union[AbelianGroup, Presentation, Unknown]


def _check_n(n):
    if n != INF and (not isinstance(n, int) or n < 1):
        raise DomainError(f"n must be a positive integer or infinity, got {n!r}")


def _check_selector(p):
    if p is None or p == "odd":
        return
    if not isinstance(p, int) or not isprime(p):
        raise DomainError(f"expected a prime or 'odd', got {p!r}")


# (below, group) pairs: Z^n is `group` for every n < below; below = INF includes n = INF
_ZN_TABLE = {
    SU(3): [(3, Presentation("Psi(12,1)")), (5, AbelianGroup.of(0, 12)), (INF, AbelianGroup.of(12))],
    Sp(2): [(3, Presentation("Psi(120,12)")), (7, AbelianGroup.of(0, 120)), (INF, AbelianGroup.of(120))],
    G2: [
        (3, Presentation("[G2,G2]")),
        (11, AbelianGroup.of(2, 2, 8, 21, 0)),
        (15, AbelianGroup.of(2, 2, 8, 21)),
    ],
}

# odd-primary part of Z^n(G2) for every n >= 11, including infinity
_G2_ODD_STABLE = AbelianGroup.of(21)


def z_n_group(g: LieGroup, n, p: Selector = None) -> ZnResult:
    """Z^n(g) for g in {SU(3), Sp(2), G2}, optionally localized at a prime or at all odd primes.

    Returns ``UNKNOWN`` where the group is not determined (integral or
    2-local Z^n(G2) for n > 14).
    """
    _check_n(n)
    _check_selector(p)
    if g not in _ZN_TABLE:
        raise UnsupportedGroup(f"Z^n is tabulated only for SU(3), Sp(2), G2; got {g}")
    if g == G2 and n >= 11 and p is not None and p != 2:
        return localize(_G2_ODD_STABLE, p)
    for below, group in _ZN_TABLE[g]:
        if n < below or below == INF:
            break
    else:
        return UNKNOWN
    if p is None:
        return group
    if isinstance(group, Presentation):
        return Presentation(group.name, p)
    return localize(group, p)


def e_sharp_group(g: LieGroup, n) -> Union[AbelianGroup, Unknown]:
    """E_#^n(g): self-equivalences inducing the identity on pi_i for i <= n.

    Known only from the stable range on (n >= 5 for SU(3), n >= 7 for Sp(2)),
    where it agrees with Z^n(g) through f -> 1 + f.
    """
    _check_n(n)
    stable = {SU(3): (5, 12), Sp(2): (7, 120)}
    if g not in stable:
        raise UnsupportedGroup(f"E_#^n is determined only for SU(3) and Sp(2); got {g}")
    start, order = stable[g]
    return AbelianGroup.of(order) if n >= start else UNKNOWN


@dataclass(frozen=True)
class GhostMonomial:
    """A product of >= 2 distinct exterior generators whose degree is a generator degree.

    ``subset`` and ``target`` index into ``rational_type(g)``.
    """

    subset: tuple[int, ...]
    target: int

    def degrees(self, rtype) -> tuple[tuple[int, ...], int]:
        return tuple(rtype[i] for i in self.subset), rtype[self.target]


def iter_ghost_monomials(degrees) -> Iterator[GhostMonomial]:
    """Depth-first subset-sum search over increasing index sets, pruned at the top degree."""
    degrees = tuple(degrees)
    if not degrees:
        return
    top = max(degrees)
    where = {}
    for j, d in enumerate(degrees):
        where.setdefault(d, []).append(j)
    order = sorted(range(len(degrees)), key=lambda i: degrees[i])

    def walk(start, chosen, total):
        for pos in range(start, len(order)):
            i = order[pos]
            s = total + degrees[i]
            if s > top:
                return
            picked = chosen + (i,)
            if len(picked) >= 2:
                for j in where.get(s, ()):
                    yield GhostMonomial(tuple(sorted(picked)), j)
            yield from walk(pos + 1, picked, s)

    yield from walk(0, (), 0)


def ghost_monomials(g: LieGroup) -> list[GhostMonomial]:
    return list(iter_ghost_monomials(rational_type(g)))


def z_infty_finite(g: LieGroup) -> bool:
    """Whether Z^infinity(g) is finite, i.e. rationally trivial.

    Rationally g is a product of odd spheres, and Z^infinity is spanned by
    decomposable classes in the generator degrees; it is finite exactly when
    no ghost monomial exists.  U(n) and SO(n) use their own rational types.
    """
    return next(iter_ghost_monomials(rational_type(g)), None) is None


@dataclass(frozen=True)
class InvariantReport:
    sz: int
    lz: int
    context: Union[int, str]  # "rational" or a prime

    def to_json(self) -> dict:
        return {"kind": "invariants", "sz": self.sz, "lz": self.lz, "context": self.context}


def _from_degrees(degrees) -> tuple[int, int]:
    return max(degrees), len(set(degrees))


def sz_lz(g: LieGroup, p: Optional[int] = None) -> InvariantReport:
    """Stability and length of Z^*(g), rationally (``p=None``) or at the prime p.

    At p the answer is covered when g is quasi p-regular (after passing from
    SO(n) to Spin(n) and from U(n) to S^1 x SU(n)); G2 is also covered at 3.
    """
    if p is None:
        sz, lz = _from_degrees(rational_type(g))
        return InvariantReport(sz, lz, "rational")
    if not isinstance(p, int) or not isprime(p):
        raise DomainError(f"{p!r} is not a prime")
    if p == 2:
        raise NotCovered("sz_p and lz_p are established only at odd primes")
    core = covering_reduction(g, p)
    if g.family == "U":
        core = core.group
    if core == G2 and p == 3:
        return InvariantReport(11, 2, p)
    if not is_quasi_p_regular(core, p):
        raise NotCovered(f"{core} is not quasi {p}-regular")
    sz, lz = _from_degrees(rational_type(g))
    return InvariantReport(sz, lz, p)


def product_invariants(dec: Decomposition) -> InvariantReport:
    """sz and lz of a product of spheres and bundles B_n(p), factor by factor.

    S^d has sz = d and one jump in the Z^* series, at d.  B_n(p) has
    sz = 2n+2p-1 and two jumps, at 2n+1 and 2n+2p-1.  Maps between distinct
    factors are all ghosts, so sz is the maximum and lz counts distinct jumps.
    """
    jumps = set()
    sz = 0
    for f in dec.factors:
        if isinstance(f, Sphere):
            sz = max(sz, f.dim)
            jumps.add(f.dim)
        elif isinstance(f, Bundle):
            low, high = 2 * f.n + 1, 2 * f.n + 2 * f.p - 1
            sz = max(sz, high)
            jumps.update((low, high))
    return InvariantReport(sz, len(jumps), dec.p)


def e_sharp_stability_dim(g: LieGroup, p: int) -> int:
    """A dimension N with E_#^infinity(g)_p = E_#^N(g)_p: n_r for SU(n), Sp(n), else dim g."""
    if not isinstance(p, int) or not isprime(p):
        raise DomainError(f"{p!r} is not a prime")
    if not g.is_simply_connected:
        raise UnsupportedGroup(f"{g} is not simply connected")
    if not is_quasi_p_regular(g, p):
        raise NotCovered(f"{g} is not quasi {p}-regular")
    if g.family in ("SU", "Sp"):
        return rational_type(g)[-1]
    return dimension(g)

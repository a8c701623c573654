"""p-primary homotopy of odd spheres in the Serre range.

For an odd prime p and stem t < 2p(p-1) - 2 the p-local group
pi_{2n+1+t}(S^{2n+1}) is Z/p in exactly two families and zero otherwise:

* t = 2k(p-1) - 2 with 1 <= n < k and 2 <= k <= p-1,
* t = 2k(p-1) - 1 with 1 <= k <= p-1.

The predicates below decide when the obstruction groups used for
self-maps of the bundles B_n(p) vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from sympy import isprime

from .abelian import AbelianGroup
from .errors import UNKNOWN, DomainError, OutOfSerreRange, Unknown


def _check_odd_prime(p):
    if not isinstance(p, int) or p == 2 or not isprime(p):
        raise DomainError(f"an odd prime is required, got {p!r}")


def serre_bound(p: int) -> int:
    """Stems strictly below this value are covered."""
    return 2 * p * (p - 1) - 2


def serre_pi(sphere_dim: int, stem: int, p: int) -> AbelianGroup:
    """The p-local group pi_{sphere_dim + stem}(S^{sphere_dim}) for an odd sphere."""
    _check_odd_prime(p)
    if sphere_dim < 3 or sphere_dim % 2 == 0:
        raise DomainError(f"sphere dimension must be odd and >= 3, got {sphere_dim}")
    if stem < 1:
        raise DomainError(f"stem must be >= 1, got {stem}")
    if stem >= serre_bound(p):
        raise OutOfSerreRange(f"stem {stem} >= 2p(p-1)-2 = {serre_bound(p)} at p={p}")
    n = (sphere_dim - 1) // 2
    q, r = divmod(stem + 2, 2 * (p - 1))
    if r == 0 and 2 <= q <= p - 1 and n < q:
        return AbelianGroup.of(p, local=p)
    q, r = divmod(stem + 1, 2 * (p - 1))
    if r == 0 and 1 <= q <= p - 1:
        return AbelianGroup.of(p, local=p)
    return AbelianGroup.trivial(local=p)


def sphere_homotopy(sphere_dim: int, degree: int, p: int) -> AbelianGroup:
    """pi_degree(S^sphere_dim) at p, including the connectivity range and the bottom class."""
    if degree < sphere_dim:
        return AbelianGroup.trivial(local=p)
    if degree == sphere_dim:
        return AbelianGroup(1, (), p)
    return serre_pi(sphere_dim, degree - sphere_dim, p)


def ghost_obstruction_vanishes(n: int, m: int, p: int) -> bool:
    """Whether [S^{2n+1} u_{alpha_1} e^{2n+2p-1}, S^{2m+1}] vanishes, for 0 < n < p.

    The group is the cokernel of alpha_1^* : pi_{2n+2}(S^{2m+1}) -> pi_{2n+2p-1}(S^{2m+1});
    the target is computed from :func:`serre_pi`.  The only nonzero target occurs
    for m = 1, n = p - 1, where alpha_1^* maps alpha_1 onto alpha_1^2.
    """
    _check_odd_prime(p)
    if not 0 < n < p:
        raise DomainError(f"need 0 < n < p, got n={n}, p={p}")
    if m < 1:
        raise DomainError(f"need m >= 1, got m={m}")
    if n == m or n - m + p - 1 == 0:
        raise DomainError(f"excluded case n={n}, m={m}, p={p}")
    target = sphere_homotopy(2 * m + 1, 2 * n + 2 * p - 1, p)
    if target.is_trivial:
        return True
    return m == 1 and n == p - 1


@dataclass(frozen=True)
class SphereTarget:
    dim: int


@dataclass(frozen=True)
class BundleTarget:
    m: int
    p: int


# (k, m, p) with pi_k(B_m(p)) = 0, quoted rather than derived; both lie outside the Serre range
_BUNDLE_VANISHING = {
    (13, 1, 3),
    (17, 2, 3),
}


def bundle_homotopy_vanishes(degree: int, m: int, p: int) -> Union[bool, Unknown]:
    """Whether pi_degree(B_m(p)) = 0 at p, or ``UNKNOWN``.

    Uses the fibration S^{2m+1} -> B_m(p) -> S^{2m+2p-1}: the group vanishes when
    both the fibre and base groups do.  Failing that, a short list of cited
    vanishing results is consulted.
    """
    _check_odd_prime(p)
    try:
        fibre = sphere_homotopy(2 * m + 1, degree, p)
        base = sphere_homotopy(2 * m + 2 * p - 1, degree, p)
    except OutOfSerreRange:
        fibre = base = None
    if fibre is not None and fibre.is_trivial and base.is_trivial:
        return True
    if (degree, m, p) in _BUNDLE_VANISHING:
        return True
    return UNKNOWN


def top_obstruction_group_vanishes(
    n: int, target: Union[SphereTarget, BundleTarget], p: int
) -> Union[bool, Unknown]:
    """Whether pi_{4n+4p-3}(X) = 0 for the target X, or ``UNKNOWN``.

    When it vanishes, every map B_n(p) -> X factoring through the top cell
    kills all homotopy groups.
    """
    _check_odd_prime(p)
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    degree = 4 * n + 4 * p - 3
    if isinstance(target, SphereTarget):
        try:
            return sphere_homotopy(target.dim, degree, p).is_trivial
        except OutOfSerreRange:
            return UNKNOWN
    if isinstance(target, BundleTarget):
        if target.p != p:
            raise DomainError(f"bundle B_{target.m}({target.p}) is not defined at p={p}")
        if bundle_homotopy_vanishes(degree, target.m, p) is True:
            return True
        if n < p and target.m < p:
            # quoted: pi_{4n+4p-3}(B_m(p)) = 0 for m, n < p
            return True
        return UNKNOWN
    raise DomainError(f"unsupported target {target!r}")

"""Scalar kernels shared by every other module.

``tau`` turns an edge length into the pair (tau, tau') whose closed form
depends only on the product of the two endpoint types; ``rho`` does the
same for a generalized link length, with the sine/identity/sinh branch
picked by the apex type.  Vertex types are the integers 1 (finite),
0 (ideal) and -1 (hyperideal), and branches are always chosen by exact
integer comparison.
"""

import math
import numbers
from typing import NamedTuple

from .errors import DomainError

FINITE, IDEAL, HYPERIDEAL = 1, 0, -1
VERTEX_TYPES = (FINITE, IDEAL, HYPERIDEAL)

TYPE_NAMES = {FINITE: "finite", IDEAL: "ideal", HYPERIDEAL: "hyperideal"}
TYPE_CODES = {name: code for code, name in TYPE_NAMES.items()}


class TauPair(NamedTuple):
    tau: float
    tau_prime: float


class RhoPair(NamedTuple):
    rho: float
    rho_prime: float


def check_vertex_type(eps):
    """Return ``eps`` as a plain int, or raise if it is not one of 1, 0, -1."""
    if isinstance(eps, bool) or not isinstance(eps, numbers.Integral):
        raise DomainError(f"vertex type must be an integer in {{1, 0, -1}}, got {eps!r}")
    eps = int(eps)
    if eps not in VERTEX_TYPES:
        raise DomainError(f"vertex type must be 1, 0 or -1, got {eps}")
    return eps


def tau(x, eps_i, eps_j):
    """Edge kernel ``(e^x - p e^-x)/2, (e^x + p e^-x)/2`` with ``p = eps_i * eps_j``."""
    product = check_vertex_type(eps_i) * check_vertex_type(eps_j)
    if product == 1:
        return TauPair(math.sinh(x), math.cosh(x))
    if product == 0:
        half = 0.5 * math.exp(x)
        return TauPair(half, half)
    return TauPair(math.cosh(x), math.sinh(x))


def rho(b, eps):
    """Link kernel: ``integral_0^b cos(sqrt(eps) s) ds`` and its derivative."""
    eps = check_vertex_type(eps)
    if not b > 0:
        raise DomainError(f"link length must be positive, got {b}")
    if eps == FINITE:
        if not b < math.pi:
            raise DomainError(f"spherical link length must lie in (0, pi), got {b}")
        return RhoPair(math.sin(b), math.cos(b))
    if eps == IDEAL:
        return RhoPair(b, 1.0)
    return RhoPair(math.sinh(b), math.cosh(b))


def inverse_rho_prime(rp, eps):
    """Recover the link length ``b`` from ``cos(sqrt(eps) b)``.

    Uses the arccos branch in (0, pi) for finite apexes and the positive
    arccosh branch for hyperideal ones.  For ideal apexes rho' is
    identically 1, so there is nothing to invert.
    """
    eps = check_vertex_type(eps)
    if eps == IDEAL:
        raise DomainError("rho' is uninformative for an ideal vertex (it is identically 1)")
    if eps == FINITE:
        if not -1.0 < rp < 1.0:
            raise DomainError(f"cosine {rp} outside (-1, 1)")
        return math.acos(rp)
    if not rp > 1.0:
        raise DomainError(f"hyperbolic cosine {rp} must exceed 1")
    return math.acosh(rp)

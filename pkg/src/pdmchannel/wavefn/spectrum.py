"""Closed-form spectrum of the planar model."""

from __future__ import annotations

from pdmchannel.errors import InvalidParam
from pdmchannel.models.spectrum import SpectrumEntry
from pdmchannel.wavefn.fields import check_params


def energy_2d(N: int, k: float, q: float) -> float:
    """E_N = q^2 (N+2)(N+2k+1)."""
    return q**2 * (N + 2) * (N + 2 * k + 1)


def degeneracy_2d(N: int) -> int:
    return N // 2 + 1


def r_nu(nu: int, k: float, q: float) -> float:
    """Eigenvalue q^2 nu (nu + 2k) of R on the second basis."""
    return q**2 * nu * (nu + 2 * k)


def multiplet(N: int) -> list[tuple[int, int]]:
    """(n, l) with 2n + l = N, n ascending."""
    if N < 0:
        raise InvalidParam(f"N must be >= 0, got {N}")
    return [(n, N - 2 * n) for n in range(N // 2 + 1)]


def spectrum2d(count: int, k: float, q: float) -> list[SpectrumEntry]:
    """Lowest ``count`` states, ordered by (E, n)."""
    check_params(k, q)
    if count < 1:
        raise InvalidParam(f"count must be >= 1, got {count}")
    out: list[SpectrumEntry] = []
    N = 0
    while len(out) < count:
        E = energy_2d(N, k, q)
        for n, l in multiplet(N):
            out.append(
                SpectrumEntry(N=N, n=n, l=l, E=E, L_eig=(l + 1) ** 2 * q**2, deg=degeneracy_2d(N))
            )
        N += 1
    return out[:count]

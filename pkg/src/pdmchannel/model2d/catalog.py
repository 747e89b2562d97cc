"""Named operators of the two-dimensional PDM model in the semi-infinite layer.

H = -d_x cosh^2(qx) d_x - d_y cosh^2(qx) d_y + V_eff with
V_eff = -q^2 cosh^2 qx + q^2 k(k-1) csch^2 qx, on 0 < x, |y| < pi/(2q).
All operators keep q and k symbolic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from pdmchannel.algebra.coeffring import COS, COSH, CSCH, ONE, SIN, SINH, CoeffPoly, k, q
from pdmchannel.algebra.diffalg import DiffOp, anticommutator, commutator, compose


@dataclass(frozen=True)
class OperatorCatalog:
    """Every operator the identity suite talks about (A = R, B = L)."""

    H: DiffOp
    L: DiffOp
    R: DiffOp
    Rbar: DiffOp
    eta: DiffOp
    eta_dag: DiffOp
    etabar: DiffOp
    etabar_dag: DiffOp
    C: DiffOp
    dy: DiffOp
    xi: CoeffPoly
    xibar: CoeffPoly
    R_printed: DiffOp
    Rbar_printed: DiffOp

    @property
    def A(self) -> DiffOp:
        return self.R

    @property
    def B(self) -> DiffOp:
        return self.L


def _first_order(cx: CoeffPoly, cy: CoeffPoly, c0: CoeffPoly) -> DiffOp:
    return DiffOp({(1, 0): cx, (0, 1): cy, (0, 0): c0})


def hamiltonian() -> DiffOp:
    cosh2 = COSH * COSH
    return DiffOp(
        {
            (2, 0): -cosh2,
            (1, 0): SINH * COSH * (-2 * q),
            (0, 2): -cosh2,
            (0, 0): cosh2 * (-(q**2)) + CSCH * CSCH * (q**2 * k * (k - 1)),
        }
    )


def eta() -> DiffOp:
    return _first_order(COSH * SIN, -(SINH * COS), SINH * SIN * q - CSCH * SIN * (q * k))


def eta_dag() -> DiffOp:
    return _first_order(-(COSH * SIN), SINH * COS, SINH * SIN * (-q) - CSCH * SIN * (q * k))


def etabar() -> DiffOp:
    return _first_order(COSH * COS, SINH * SIN, SINH * COS * q - CSCH * COS * (q * k))


def etabar_dag() -> DiffOp:
    return _first_order(-(COSH * COS), -(SINH * SIN), SINH * COS * (-q) - CSCH * COS * (q * k))


def _r_printed(trig_a: CoeffPoly, trig_b: CoeffPoly, sign: int) -> DiffOp:
    """Expanded second-order form; (trig_a, trig_b, sign) = (sin, cos, +1) gives R."""
    sc = SIN * COS
    sinh2, cosh2, csch2 = SINH * SINH, COSH * COSH, CSCH * CSCH
    a2 = trig_a * trig_a
    b2 = trig_b * trig_b
    return DiffOp(
        {
            (2, 0): -(cosh2 * a2),
            (1, 1): SINH * COSH * sc * (2 * sign),
            (0, 2): -(sinh2 * b2),
            (1, 0): SINH * COSH * (ONE - a2 * 4) * q,
            (0, 1): (ONE + sinh2 * 4) * sc * (q * sign),
            (0, 0): (sinh2 - a2 - sinh2 * a2 * 3) * q**2
            - (ONE + csch2 * a2) * (q**2 * k)
            + csch2 * a2 * (q**2 * k**2),
        }
    )


@lru_cache(maxsize=1)
def build_catalog() -> OperatorCatalog:
    """Construct the catalog; every entry is normal-ordered with q, k symbolic."""
    h = hamiltonian()
    dy = DiffOp.partial(0, 1)
    lop = DiffOp({(0, 2): -ONE})
    e, ed, eb, ebd = eta(), eta_dag(), etabar(), etabar_dag()
    r = compose(ed, e)
    rbar = compose(ebd, eb)
    c = commutator(r, lop)
    return OperatorCatalog(
        H=h,
        L=lop,
        R=r,
        Rbar=rbar,
        eta=e,
        eta_dag=ed,
        etabar=eb,
        etabar_dag=ebd,
        C=c,
        dy=dy,
        xi=CSCH * SIN,
        xibar=CSCH * COS,
        R_printed=_r_printed(SIN, COS, 1),
        Rbar_printed=_r_printed(COS, SIN, -1),
    )


def c_printed(cat: OperatorCatalog) -> DiffOp:
    """q {d_y, eta^dag etabar + etabar^dag eta}."""
    inner = compose(cat.eta_dag, cat.etabar) + compose(cat.etabar_dag, cat.eta)
    return anticommutator(cat.dy, inner).scale(q)

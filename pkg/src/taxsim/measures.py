"""Concept similarity measures.

Every measure is a pure function of a :class:`~taxsim.paths.PathInfo`, plus an
:class:`~taxsim.ic.IcTable` for the information-content family and the
taxonomy depth ``d`` for the depth-scaled ones.  :func:`similarity` is the
single entry point that computes the geometry and dispatches.
"""

import math
from dataclasses import dataclass
from enum import Enum

from taxsim.errors import InvalidDepth, MissingIcTable, NegativeDistance, ZeroDenominator
from taxsim.paths import PathInfo, path_info

# returned by sim_jcn when the Jiang-Conrath distance is exactly zero
JCN_MAX = 1e12


class MeasureKind(str, Enum):
    WP = "wp"
    NEW = "new"
    RADA = "rada"
    LCH = "lch"
    RESNIK = "resnik"
    LIN = "lin"
    JCN = "jcn"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            names = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown measure {value!r}; expected one of {names}") from None

    @property
    def needs_ic(self):
        return self in (MeasureKind.RESNIK, MeasureKind.LIN, MeasureKind.JCN)


@dataclass(frozen=True)
class SimResult:
    c1: int
    c2: int
    measure: MeasureKind
    value: float
    path: PathInfo
    used_d: int


def _check_depth(d):
    if d < 1:
        raise InvalidDepth(f"taxonomy depth must be >= 1, got {d}")


def sim_wp(info):
    """Wu-Palmer: ``2N / (N1 + N2)``.  The root compared with itself scores 1."""
    denom = info.n1 + info.n2
    if denom == 0:
        return 1.0
    return 2 * info.n / denom


def sim_new(info, d):
    """Wu-Palmer damped by ``exp(-L / d)``, where L is zero for ancestor/descendant pairs.

    >>> from taxsim.paths import PathInfo
    >>> info = PathInfo(c1=0, c2=1, lcs=2, n=2, n1=4, n2=3, raw_l=4, effective_l=4, path_len=3)
    >>> round(sim_new(info, 5), 6)
    0.256759
    """
    _check_depth(d)
    return sim_wp(info) * math.exp(-info.effective_l / d)


def rada_distance(info):
    return info.path_len


def sim_rada(info):
    return 1.0 / (1.0 + info.path_len)


def sim_lch(info, d):
    """Leacock-Chodorow, ``ln(2 * D / len)``, with both lengths counted in nodes.

    Clamped at 0 for pairs farther apart than ``2 * D`` nodes, which only
    happens when ``d`` is overridden below the real taxonomy depth.
    """
    _check_depth(d)
    return max(0.0, math.log(2 * (d + 1) / (info.path_len + 1)))


def _require(ic):
    if ic is None:
        raise MissingIcTable("information-content measures need a frequency table")


def sim_resnik(info, ic):
    _require(ic)
    return ic.ic(info.lcs)


def sim_lin(info, ic):
    _require(ic)
    ic1, ic2 = ic.ic(info.c1), ic.ic(info.c2)
    denom = ic1 + ic2
    if denom == 0:
        if info.c1 == info.c2:
            return 1.0
        raise ZeroDenominator(
            f"Lin similarity undefined: {ic.tax.labels[info.c1]!r} and "
            f"{ic.tax.labels[info.c2]!r} both carry the whole corpus mass")
    return 2 * ic.ic(info.lcs) / denom


def jcn_distance(info, ic):
    _require(ic)
    dist = ic.ic(info.c1) + ic.ic(info.c2) - 2 * ic.ic(info.lcs)
    if dist < 0:
        raise NegativeDistance(f"negative Jiang-Conrath distance {dist!r}")
    return dist


def sim_jcn(info, ic):
    dist = jcn_distance(info, ic)
    if dist == 0:
        return JCN_MAX
    return 1.0 / dist


def evaluate(kind, info, ic=None, d=None):
    """Apply one measure to precomputed geometry."""
    kind = MeasureKind.parse(kind)
    if kind is MeasureKind.WP:
        return sim_wp(info)
    if kind is MeasureKind.NEW:
        return sim_new(info, d)
    if kind is MeasureKind.RADA:
        return sim_rada(info)
    if kind is MeasureKind.LCH:
        return sim_lch(info, d)
    if kind is MeasureKind.RESNIK:
        return sim_resnik(info, ic)
    if kind is MeasureKind.LIN:
        return sim_lin(info, ic)
    return sim_jcn(info, ic)


def similarity(tax, c1, c2, kind, ic=None, depth=None):
    """Score one concept pair.

    Parameters
    ----------
    tax : Taxonomy
    c1, c2 : ConceptId or str
    kind : MeasureKind or str
    ic : IcTable, optional
        Required for ``resnik``, ``lin`` and ``jcn``.
    depth : int, optional
        Overrides the taxonomy depth D used by ``new`` and ``lch``.

    Returns
    -------
    SimResult
    """
    kind = MeasureKind.parse(kind)
    if kind.needs_ic and ic is None:
        raise MissingIcTable(f"measure {kind.value!r} needs a frequency table")
    d = tax.max_depth if depth is None else depth
    info = path_info(tax, c1, c2)
    value = evaluate(kind, info, ic, d)
    return SimResult(c1=info.c1, c2=info.c2, measure=kind, value=value, path=info, used_d=d)

"""Second and third pages of the circle-fibration spectral sequence.

For either loop-space component Y the relevant fibration is
Y -> Y x_{S1} ES1 -> BS1.  The second page is the free module
H_*(BS1) (x) H_*(Y) with columns indexed by the exponent p of the degree-2
polynomial class of BS1; the second differential sends a cell in column p to
column p-1 by applying the BV operator to the fiber factor.  Only the fiber
degree is shifted, so a cell (p, q) sits in topological degree
2p + q + (2n+1).

Because the differential does not depend on p, one F2 rank per fiber degree
drives the whole page: column 0 loses only incoming images, columns p >= 1
lose kernel complements and incoming images alike.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import bv, gf2, series
from .ring import (
    AlgebraConfig,
    AlgebraElement,
    Component,
    InputError,
    basis,
    dimension,
    element,
)

DeltaFn = Callable[[AlgebraElement, AlgebraConfig], AlgebraElement]


@dataclass(frozen=True)
class SSConfig:
    """Component selection plus the topological-degree cutoff for reports."""

    algebra: AlgebraConfig
    comp: Component
    max_top_degree: int

    def __post_init__(self) -> None:
        if self.max_top_degree < 0:
            raise InputError(
                f"max_top_degree must be nonnegative, got {self.max_top_degree}"
            )


@dataclass(frozen=True)
class Page:
    """Bigraded dimension table; absent entries are zero."""

    page_index: int
    entries: dict[tuple[int, int], int] = field(repr=False)

    def dim(self, p: int, q: int) -> int:
        return self.entries.get((p, q), 0)


def _q_range(cfg: SSConfig) -> range:
    shift = cfg.algebra.dim
    return range(-shift, cfg.max_top_degree - shift + 1)


def _cells(cfg: SSConfig):
    shift = cfg.algebra.dim
    for q in _q_range(cfg):
        max_p = (cfg.max_top_degree - q - shift) // 2
        for p in range(max_p + 1):
            yield p, q


def e2_page(cfg: SSConfig) -> Page:
    """Second page: every column repeats the fiber dimensions."""
    entries = {}
    for p, q in _cells(cfg):
        d = dimension(cfg.algebra, cfg.comp, q)
        if d:
            entries[(p, q)] = d
    return Page(2, entries)


def d2_matrix(
    cfg: AlgebraConfig,
    comp: Component,
    q: int,
    delta_fn: DeltaFn = bv.delta,
) -> list[int]:
    """Matrix of the BV operator from fiber degree q to q+1 as bitmask rows.

    Row i holds the coordinates of the image of the i-th degree-q basis
    monomial in the degree-(q+1) basis.
    """
    target = {m: i for i, m in enumerate(basis(cfg, comp, q + 1))}
    rows = []
    for m in basis(cfg, comp, q):
        image = delta_fn(element(m), cfg)
        row = 0
        for t in image.terms:
            if t not in target:
                raise InputError(
                    f"image term {t} of degree-{q} monomial {m} is not a "
                    f"degree-{q + 1} basis monomial of component {comp.value}"
                )
            row |= 1 << target[t]
        rows.append(row)
    return rows


def d2_rank(
    cfg: AlgebraConfig,
    comp: Component,
    q: int,
    delta_fn: DeltaFn = bv.delta,
) -> int:
    return gf2.rank(d2_matrix(cfg, comp, q, delta_fn))


def e3_page(cfg: SSConfig, delta_fn: DeltaFn = bv.delta) -> Page:
    """Third page: homology of the second differential.

    Column 0 has no outgoing differential, so only incoming images are
    removed there; columns p >= 1 drop both the rank at q and the incoming
    rank at q-1.  Ranks are computed once per fiber degree (one degree past
    the cutoff, so boundary images are exact) and reused across columns.
    """
    algebra, comp = cfg.algebra, cfg.comp
    qs = _q_range(cfg)
    ranks = {q: d2_rank(algebra, comp, q, delta_fn) for q in range(qs.start - 1, qs.stop)}
    entries = {}
    for p, q in _cells(cfg):
        d = dimension(algebra, comp, q) - ranks[q - 1]
        if p >= 1:
            d -= ranks[q]
        if d:
            entries[(p, q)] = d
    return Page(3, entries)


def page_series(page: Page, cfg: SSConfig) -> series.TruncatedSeries:
    """Poincaré series of a page in the topological grading, through the cutoff."""
    shift = cfg.algebra.dim
    coeffs = [0] * (cfg.max_top_degree + 1)
    for (p, q), d in page.entries.items():
        coeffs[2 * p + q + shift] += d
    return series.TruncatedSeries(0, tuple(coeffs))


@dataclass(frozen=True)
class CollapseReport:
    """Outcome of the dimension-count collapse certificate."""

    algebra: AlgebraConfig
    max_top_degree: int
    e_page_stable: bool
    computed: tuple
    expected: tuple
    first_mismatch: tuple | None  # (degree, computed, expected)

    @property
    def passed(self) -> bool:
        return self.e_page_stable and self.first_mismatch is None


def verify_collapse(
    cfg: AlgebraConfig,
    max_top_degree: int,
    delta_fn: DeltaFn = bv.delta,
) -> CollapseReport:
    """Certify collapse by comparing page series against the known total.

    The contractible component must keep its second page, and the sum of the
    two third-page series must equal the closed form for the full loop space
    through the cutoff.  Matching dimensions leave no room for further
    differentials, which is the whole certificate.
    """
    cfg_e = SSConfig(cfg, Component.E, max_top_degree)
    cfg_g = SSConfig(cfg, Component.G, max_top_degree)
    e_stable = e3_page(cfg_e, delta_fn).entries == e2_page(cfg_e).entries
    total = page_series(e3_page(cfg_e, delta_fn), cfg_e) + page_series(
        e3_page(cfg_g, delta_fn), cfg_g
    )
    expected = series.expand(series.total_series(cfg.n), max_top_degree)
    first_mismatch = None
    for k in range(max_top_degree + 1):
        got, want = total.coefficient(k), expected.coefficient(k)
        if got != want:
            first_mismatch = (k, got, want)
            break
    return CollapseReport(
        cfg,
        max_top_degree,
        e_stable,
        total.coefficients,
        expected.coefficients,
        first_mismatch,
    )


def page_to_json(page: Page, cfg: SSConfig) -> dict:
    """JSON-ready mapping with deterministic entry order."""
    entries = [
        {"p": p, "q": q, "dim": d}
        for (p, q), d in sorted(page.entries.items())
    ]
    coeffs = list(page_series(page, cfg).coefficients)
    return {"page": page.page_index, "entries": entries, "series": coeffs}


def page_from_json(obj: dict) -> Page:
    """Rebuild a page from the mapping produced by :func:`page_to_json`."""
    try:
        entries = {(e["p"], e["q"]): e["dim"] for e in obj["entries"]}
        return Page(obj["page"], entries)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed page object: {exc}") from exc

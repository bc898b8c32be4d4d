"""Exact arithmetic in the mod-2 loop homology ring of an odd projective space.

The ring is Z2[x, v, w] / (x^(2n+2), v^2 - (n+1) x^(2n) w) with generator
degrees |x| = -1, |v| = 0, |w| = 2n in the loop grading (homology grading
shifted down by the manifold dimension 2n+1).  Every element is a finite
F2-sum of normal-form monomials x^a v^b w^c with 0 <= a <= 2n+1, b in {0, 1}
and c >= 0.

The free loop space has two connected components, labelled ``e`` (loops that
contract) and ``g`` (loops that do not).  The component of a monomial depends
on which component carries w; that choice is part of :class:`AlgebraConfig`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache


class InputError(ValueError):
    """Raised when an operation receives structurally invalid input."""


class BVCase(Enum):
    """The four case configurations of the BV structure.

    The letter records which component carries w (A: contractible side,
    B: non-contractible side); the suffix names the bracket deformation:
    A_v / B_w are the plain brackets, A_vxw adds x^(2n) v w to {x, v} and
    B_wxvw adds x^(2n) v w^2 to {x, w}.

    The engine evaluates every case as pure configuration and never selects
    one.  Note that for even n the rewrite v^2 = x^(2n) w has a nonzero right
    side, which is component-consistent only when w sits on the contractible
    side: the B cases are graded algebras exactly for odd n, although their
    operator tables and page computations are well defined for every n.
    """

    A_V = "A_v"
    A_VXW = "A_vxw"
    B_W = "B_w"
    B_WXVW = "B_wxvw"

    @property
    def w_is_contractible(self) -> bool:
        return self in (BVCase.A_V, BVCase.A_VXW)


class Component(Enum):
    """Connected component of the free loop space, a Z2 label."""

    E = "e"
    G = "g"

    def __add__(self, other: "Component") -> "Component":
        # composition of loops multiplies the labels in Z2
        return Component.E if self is other else Component.G


@dataclass(frozen=True)
class AlgebraConfig:
    """Pair (n, case) fixing the ring and its BV structure; dim M = 2n+1."""

    n: int
    bv_case: BVCase = BVCase.A_V

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError(f"n must be a positive integer, got {self.n!r}")
        if not isinstance(self.bv_case, BVCase):
            raise InputError(f"unknown BV case {self.bv_case!r}")

    @property
    def dim(self) -> int:
        return 2 * self.n + 1


@dataclass(frozen=True, order=True)
class Monomial:
    """Exponent triple (a, b, c) standing for x^a v^b w^c."""

    a: int
    b: int
    c: int

    def __str__(self) -> str:
        return render_monomial(self)


@dataclass(frozen=True)
class AlgebraElement:
    """Finite F2-sum of normal-form monomials; the empty sum is zero."""

    terms: frozenset[Monomial]

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        return render_element(self)


ZERO = AlgebraElement(frozenset())
UNIT_MONOMIAL = Monomial(0, 0, 0)

GENERATOR_EXPONENTS = {"x": Monomial(1, 0, 0), "v": Monomial(0, 1, 0), "w": Monomial(0, 0, 1)}


def element(*monomials: Monomial) -> AlgebraElement:
    """Bundle already-normal monomials into an element (mod-2 collapse)."""
    terms: set[Monomial] = set()
    for m in monomials:
        terms ^= {m}
    return AlgebraElement(frozenset(terms))


def zero() -> AlgebraElement:
    return ZERO


def unit() -> AlgebraElement:
    return element(UNIT_MONOMIAL)


def generator(name: str) -> AlgebraElement:
    """The generator x, v or w as an element."""
    try:
        return element(GENERATOR_EXPONENTS[name])
    except KeyError:
        raise InputError(f"unknown generator {name!r}; expected one of x, v, w") from None


def normalize(a: int, b: int, c: int, cfg: AlgebraConfig) -> AlgebraElement:
    """Normal form of x^a v^b w^c: rewrite v^2, then annihilate high x powers.

    Each v^2 becomes (n+1) x^(2n) w, which is x^(2n) w for even n and 0 for
    odd n.  The rewrite only raises the x exponent, so applying it before the
    x^(2n+2) = 0 rule is confluent.
    """
    if a < 0 or b < 0 or c < 0:
        raise InputError(f"exponents must be nonnegative, got ({a}, {b}, {c})")
    reductions, b = divmod(b, 2)
    if reductions:
        if (cfg.n + 1) % 2 == 0:
            return ZERO
        a += 2 * cfg.n * reductions
        c += reductions
    if a >= 2 * cfg.n + 2:
        return ZERO
    return element(Monomial(a, b, c))


def normalize_monomial(m: Monomial, cfg: AlgebraConfig) -> AlgebraElement:
    return normalize(m.a, m.b, m.c, cfg)


def is_normal(m: Monomial, cfg: AlgebraConfig) -> bool:
    return 0 <= m.a <= 2 * cfg.n + 1 and m.b in (0, 1) and m.c >= 0


def add(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """Mod-2 sum: symmetric difference of the term sets."""
    return AlgebraElement(u.terms ^ v.terms)


def multiply(u: AlgebraElement, v: AlgebraElement, cfg: AlgebraConfig) -> AlgebraElement:
    """F2-bilinear product; monomials multiply by adding exponents, then normalize."""
    terms: set[Monomial] = set()
    for m1 in u.terms:
        for m2 in v.terms:
            product = normalize(m1.a + m2.a, m1.b + m2.b, m1.c + m2.c, cfg)
            terms ^= product.terms
    return AlgebraElement(frozenset(terms))


def power(u: AlgebraElement, k: int, cfg: AlgebraConfig) -> AlgebraElement:
    if k < 0:
        raise InputError("negative powers are not defined in this ring")
    result = unit()
    for _ in range(k):
        result = multiply(result, u, cfg)
    return result


def loop_degree(m: Monomial, cfg: AlgebraConfig) -> int:
    """Degree in the loop grading: -a + 2n c."""
    return -m.a + 2 * cfg.n * m.c


def top_degree(m: Monomial, cfg: AlgebraConfig) -> int:
    """Degree in the unshifted homology grading: loop degree + (2n+1)."""
    return loop_degree(m, cfg) + cfg.dim


def component(m: Monomial, cfg: AlgebraConfig) -> Component:
    """Component label of a normal-form monomial; multiplicative under the product."""
    if cfg.bv_case.w_is_contractible:
        odd = m.b % 2
    else:
        odd = (m.b + m.c) % 2
    return Component.G if odd else Component.E


def element_component(u: AlgebraElement, cfg: AlgebraConfig) -> Component | None:
    """Common component of all terms, or None for zero / mixed elements."""
    labels = {component(m, cfg) for m in u.terms}
    if len(labels) == 1:
        return labels.pop()
    return None


@lru_cache(maxsize=None)
def basis(cfg: AlgebraConfig, comp: Component | None, k: int) -> tuple[Monomial, ...]:
    """All normal-form monomials of loop degree k in the given component.

    ``comp=None`` pools both components.  The list is finite for every k and
    sorted by (a, b, c).
    """
    out = []
    for a in range(2 * cfg.n + 2):
        numerator = k + a
        if numerator < 0 or numerator % (2 * cfg.n):
            continue
        c = numerator // (2 * cfg.n)
        for b in (0, 1):
            m = Monomial(a, b, c)
            if comp is None or component(m, cfg) is comp:
                out.append(m)
    return tuple(sorted(out))


def dimension(cfg: AlgebraConfig, comp: Component | None, k: int) -> int:
    return len(basis(cfg, comp, k))


def render_monomial(m: Monomial) -> str:
    """Canonical text form "x^a*v^b*w^c" with zero exponents elided."""
    parts = []
    for name, exp in (("x", m.a), ("v", m.b), ("w", m.c)):
        if exp == 1:
            parts.append(name)
        elif exp > 1:
            parts.append(f"{name}^{exp}")
    return "*".join(parts) if parts else "1"


def render_element(u: AlgebraElement) -> str:
    """Terms sorted by (c, a, b) so output groups by w power; zero prints as "0"."""
    if u.is_zero():
        return "0"
    ordered = sorted(u.terms, key=lambda m: (m.c, m.a, m.b))
    return " + ".join(render_monomial(m) for m in ordered)

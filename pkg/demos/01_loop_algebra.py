"""Tour of the loop-homology ring: normal forms, products, degree tables.

The ring is Z2[x, v, w] / (x^(2n+2), v^2 - (n+1) x^(2n) w) with loop degrees
|x| = -1, |v| = 0, |w| = 2n.  Everything below is exact mod-2 arithmetic.
"""

from loopbv import (
    AlgebraConfig,
    BVCase,
    Component,
    basis,
    component,
    dimension,
    generator,
    loop_degree,
    multiply,
    normalize,
    power,
    render_element,
    render_monomial,
    top_degree,
)

x, v, w = generator("x"), generator("v"), generator("w")

print("The quadratic relation depends on the parity of n:")
for n in (1, 2, 3, 4):
    cfg = AlgebraConfig(n)
    print(f"  n={n}:  v*v = {render_element(multiply(v, v, cfg))}")

print("\nThe top power of x vanishes (here n=2, so x^6 = 0):")
cfg = AlgebraConfig(2)
for k in (4, 5, 6):
    print(f"  x^{k} = {render_element(power(x, k, cfg))}")

print("\nNormal forms never need a v-exponent above 1:")
for exponents in [(1, 2, 0), (0, 3, 1), (2, 2, 0)]:
    result = normalize(*exponents, cfg)
    a, b, c = exponents
    print(f"  x^{a} v^{b} w^{c}  ->  {render_element(result)}")

print("\nEvery loop degree has a finite basis; degree 0 pools four classes:")
for m in basis(cfg, None, 0):
    print(f"  {render_monomial(m):10s}  loop degree {loop_degree(m, cfg):3d}  "
          f"homology degree {top_degree(m, cfg):3d}")

print("\nThe two components split the basis; where w sits is configuration:")
for case in (BVCase.A_V, BVCase.B_W):
    cfg_case = AlgebraConfig(2, case)
    labels = {name: component(next(iter(generator(name).terms)), cfg_case).value
              for name in "xvw"}
    print(f"  case {case.value:7s}: components of x, v, w = "
          f"{labels['x']}, {labels['v']}, {labels['w']}")

print("\nDimension table by loop degree (n=2, pooled and per component):")
cfg = AlgebraConfig(2, BVCase.A_V)
print("  degree   both    e    g")
for k in range(-5, 9):
    print(f"  {k:5d}    {dimension(cfg, None, k):3d}  {dimension(cfg, Component.E, k):3d}"
          f"  {dimension(cfg, Component.G, k):3d}")

"""The builtin verification catalog and its frozen text manifest.

The catalog holds every family member up to a given order bound plus all
coprime two-factor direct products up to a slightly larger bound (+8, so the
default 64 admits products through order 72).  ``E(p,1)``, ``S(1)`` and
``S(2)`` are omitted because they duplicate the corresponding cyclic groups,
and the trivial group is never used as a product factor.

The shipped manifest ``data/catalog.txt`` freezes the default catalog; a test
asserts the generator still reproduces it.
"""

from __future__ import annotations

import math
from importlib import resources

from .families import (
    Cyclic,
    Dihedral,
    DirectProduct,
    ElementaryAbelian,
    GeneralizedQuaternion,
    GroupSpec,
    Semidihedral,
    Symmetric,
    is_prime,
    parse_group_spec,
)

PRODUCT_CAP_SLACK = 8


def family_specs(max_order: int) -> list[GroupSpec]:
    specs: list[GroupSpec] = [Cyclic(n) for n in range(1, max_order + 1)]
    for p in range(2, max_order + 1):
        if not is_prime(p):
            continue
        k = 2
        while p**k <= max_order:
            specs.append(ElementaryAbelian(p, k))
            k += 1
    specs.extend(Dihedral(o) for o in range(6, max_order + 1, 2))
    specs.extend(GeneralizedQuaternion(o) for o in range(8, max_order + 1, 4))
    specs.extend(Semidihedral(o) for o in range(16, max_order + 1, 8))
    n = 3
    while math.factorial(n) <= max_order:
        specs.append(Symmetric(n))
        n += 1
    return specs


def coprime_products(members: list[GroupSpec], product_cap: int) -> list[GroupSpec]:
    usable = [s for s in members if s.order >= 2]
    out = []
    for a in usable:
        for b in usable:
            if a.order >= b.order:
                continue
            if a.order * b.order <= product_cap and math.gcd(a.order, b.order) == 1:
                out.append(DirectProduct((a, b)))
    return out


def builtin_catalog(max_order: int = 64,
                    product_cap: int | None = None) -> list[GroupSpec]:
    if product_cap is None:
        product_cap = max_order + PRODUCT_CAP_SLACK
    families = family_specs(max_order)
    specs = families + coprime_products(families, product_cap)
    specs.sort(key=lambda s: (s.order, s.render()))
    return specs


def catalog_manifest_text(max_order: int = 64,
                          product_cap: int | None = None) -> str:
    if product_cap is None:
        product_cap = max_order + PRODUCT_CAP_SLACK
    lines = [
        "# groupgraphs builtin catalog v1",
        f"# families with order <= {max_order}; coprime two-factor products "
        f"with order <= {product_cap}",
    ]
    lines.extend(s.render() for s in builtin_catalog(max_order, product_cap))
    return "\n".join(lines) + "\n"


def parse_catalog_text(text: str) -> list[GroupSpec]:
    specs = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        specs.append(parse_group_spec(line))
    return specs


def load_manifest() -> list[GroupSpec]:
    """The frozen default catalog shipped with the package."""
    text = resources.files("groupgraphs").joinpath("data/catalog.txt").read_text()
    return parse_catalog_text(text)

"""Group family expressions: the ``Z/E/D/Q/SD/S`` mini-language.

Grammar (whitespace insignificant)::

    spec   := factor { "*" factor }
    factor := "Z(" n ")" | "E(" p "," k ")" | "D(" order ")"
            | "Q(" order ")" | "SD(" order ")" | "S(" n ")"

``D``, ``Q`` and ``SD`` take the *group order* (so ``D(12)`` is the dihedral
group with 6 rotations).  A ``*`` chain denotes a direct product; the grammar
is flat, so products never nest.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

DEFAULT_ORDER_CAP = 5040
ORDER_CAP_ENV = "GG_ORDER_CAP"


def order_cap() -> int:
    """Resolve the configured group-order cap (env override, else 5040)."""
    raw = os.environ.get(ORDER_CAP_ENV)
    if raw is None:
        return DEFAULT_ORDER_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise GroupSpecError(f"{ORDER_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise GroupSpecError(f"{ORDER_CAP_ENV} must be positive, got {cap}")
    return cap


class GroupSpecError(ValueError):
    """Invalid group expression; ``position`` is the offending character index."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class GroupSpec:
    """Base class for parsed family expressions."""

    @property
    def order(self) -> int:
        raise NotImplementedError

    def render(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class Cyclic(GroupSpec):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise GroupSpecError(f"cyclic order must be >= 1, got {self.n}")

    @property
    def order(self) -> int:
        return self.n

    def render(self) -> str:
        return f"Z({self.n})"


@dataclass(frozen=True)
class ElementaryAbelian(GroupSpec):
    p: int
    rank: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise GroupSpecError(f"E(p,k) needs a prime p, got {self.p}")
        if self.rank < 1:
            raise GroupSpecError(f"E(p,k) needs rank k >= 1, got {self.rank}")

    @property
    def order(self) -> int:
        return self.p**self.rank

    def render(self) -> str:
        return f"E({self.p},{self.rank})"


@dataclass(frozen=True)
class Dihedral(GroupSpec):
    group_order: int  # 2n with n >= 3

    def __post_init__(self):
        if self.group_order % 2 != 0 or self.group_order < 6:
            raise GroupSpecError(
                f"dihedral order must be even and >= 6, got {self.group_order}")

    @property
    def n(self) -> int:
        return self.group_order // 2

    @property
    def order(self) -> int:
        return self.group_order

    def render(self) -> str:
        return f"D({self.group_order})"


@dataclass(frozen=True)
class GeneralizedQuaternion(GroupSpec):
    group_order: int  # 4n with n >= 2

    def __post_init__(self):
        if self.group_order % 4 != 0 or self.group_order < 8:
            raise GroupSpecError(
                f"generalized quaternion order must be a multiple of 4 and >= 8, "
                f"got {self.group_order}")

    @property
    def n(self) -> int:
        return self.group_order // 4

    @property
    def order(self) -> int:
        return self.group_order

    def render(self) -> str:
        return f"Q({self.group_order})"


@dataclass(frozen=True)
class Semidihedral(GroupSpec):
    group_order: int  # 8n with n >= 2

    def __post_init__(self):
        if self.group_order % 8 != 0 or self.group_order < 16:
            raise GroupSpecError(
                f"semidihedral order must be a multiple of 8 and >= 16, "
                f"got {self.group_order}")

    @property
    def n(self) -> int:
        return self.group_order // 8

    @property
    def order(self) -> int:
        return self.group_order

    def render(self) -> str:
        return f"SD({self.group_order})"


@dataclass(frozen=True)
class Symmetric(GroupSpec):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise GroupSpecError(f"symmetric degree must be >= 1, got {self.n}")

    @property
    def order(self) -> int:
        return math.factorial(self.n)

    def render(self) -> str:
        return f"S({self.n})"


@dataclass(frozen=True)
class DirectProduct(GroupSpec):
    factors: tuple[GroupSpec, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if len(self.factors) < 2:
            raise GroupSpecError("direct product needs at least 2 factors")
        if any(isinstance(f, DirectProduct) for f in self.factors):
            raise GroupSpecError("direct products do not nest")

    @property
    def order(self) -> int:
        return math.prod(f.order for f in self.factors)

    def render(self) -> str:
        return "*".join(f.render() for f in self.factors)


# --- parser -----------------------------------------------------------------

_PUNCT = "(),*"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("INT", text[i:j], i))
            i = j
        elif c.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            tokens.append(("NAME", text[i:j], i))
            i = j
        elif c in _PUNCT:
            tokens.append((c, c, i))
            i += 1
        else:
            raise GroupSpecError(f"unexpected character {c!r}", i)
    tokens.append(("EOF", "", n))
    return tokens


_FACTOR_ARITY = {"Z": 1, "E": 2, "D": 1, "Q": 1, "SD": 1, "S": 1}


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        if tok[0] != kind:
            what = repr(tok[1]) if tok[0] != "EOF" else "end of input"
            raise GroupSpecError(f"expected {kind!r}, found {what}", tok[2])
        self.pos += 1
        return tok

    def factor(self) -> GroupSpec:
        name_tok = self.take("NAME")
        name, at = name_tok[1], name_tok[2]
        arity = _FACTOR_ARITY.get(name)
        if arity is None:
            raise GroupSpecError(
                f"unknown family {name!r} (expected one of Z, E, D, Q, SD, S)", at)
        self.take("(")
        args = [int(self.take("INT")[1])]
        for _ in range(arity - 1):
            self.take(",")
            args.append(int(self.take("INT")[1]))
        self.take(")")
        try:
            if name == "Z":
                return Cyclic(args[0])
            if name == "E":
                return ElementaryAbelian(args[0], args[1])
            if name == "D":
                return Dihedral(args[0])
            if name == "Q":
                return GeneralizedQuaternion(args[0])
            if name == "SD":
                return Semidihedral(args[0])
            return Symmetric(args[0])
        except GroupSpecError as exc:
            raise GroupSpecError(str(exc), at) from None

    def spec(self) -> GroupSpec:
        factors = [self.factor()]
        while self.peek()[0] == "*":
            self.take("*")
            factors.append(self.factor())
        self.take("EOF")
        if len(factors) == 1:
            return factors[0]
        return DirectProduct(tuple(factors))


def parse_group_spec(text: str, cap: int | None = None) -> GroupSpec:
    """Parse a family expression, enforcing parameter bounds and the order cap."""
    if not text or not text.strip():
        raise GroupSpecError("empty group expression", 0)
    spec = _Parser(text).spec()
    limit = order_cap() if cap is None else cap
    if spec.order > limit:
        raise GroupSpecError(
            f"group order {spec.order} exceeds the cap {limit} "
            f"(override with {ORDER_CAP_ENV})")
    return spec


def render_group_spec(spec: GroupSpec) -> str:
    return spec.render()

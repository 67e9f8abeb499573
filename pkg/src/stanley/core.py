"""Exact arithmetic for monomial ideals in a polynomial ring.

Monomials are exponent tuples over a fixed ring context.  Ideals are stored
in canonical form: the unique minimal generating set (an antichain under
divisibility), sorted lexicographically.  The zero ideal has no generators,
the unit ideal is generated by the monomial 1.  All values are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError, ExponentCapError, RingMismatchError

# Exponent vectors and variable subsets are plain immutable containers.
# Variable indices are 0-based internally; rendering is 1-based (x1, x2, ...).
Monomial = tuple
VarSet = frozenset

# Inputs whose generator exponents exceed this cap are rejected.
EXPONENT_CAP = 64


@dataclass(frozen=True)
class RingCtx:
    """A polynomial ring over a field, identified by its variables."""

    n: int
    var_names: tuple = ()

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("ring needs a non-negative variable count")
        if not self.var_names:
            object.__setattr__(self, "var_names", default_names(self.n))
        elif len(self.var_names) != self.n:
            raise DomainError("var_names length does not match n")

    def one(self) -> Monomial:
        return (0,) * self.n

    def variable(self, i: int, power: int = 1) -> Monomial:
        """Exponent vector of x_i^power (i is 0-based)."""
        if not 0 <= i < self.n:
            raise DomainError(f"variable index {i} outside ring of {self.n}")
        return tuple(power if j == i else 0 for j in range(self.n))

    def all_vars(self) -> VarSet:
        return frozenset(range(self.n))


def default_names(n: int) -> tuple:
    return tuple(f"x{i + 1}" for i in range(n))


# ---------------------------------------------------------------------------
# monomial helpers
# ---------------------------------------------------------------------------

def _check_len(a: Monomial, b: Monomial) -> None:
    if len(a) != len(b):
        raise RingMismatchError("monomials live in different rings")


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff a divides b componentwise."""
    _check_len(a, b)
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_len(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_len(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    _check_len(a, b)
    return tuple(x + y for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """Exponents of a / gcd(a, b), the colon quotient of a by b."""
    _check_len(a, b)
    return tuple(max(0, x - y) for x, y in zip(a, b))


def support(a: Monomial) -> VarSet:
    return frozenset(i for i, e in enumerate(a) if e > 0)


def total_degree(a: Monomial) -> int:
    return sum(a)


def is_squarefree(a: Monomial) -> bool:
    return all(e <= 1 for e in a)


def squarefree_part(a: Monomial) -> Monomial:
    return tuple(1 if e > 0 else 0 for e in a)


def restrict_exponents(a: Monomial, vars: VarSet) -> Monomial:
    """Zero out every exponent outside vars."""
    return tuple(e if i in vars else 0 for i, e in enumerate(a))


def monomials_up_to_degree(n: int, d: int) -> Iterator[Monomial]:
    """Yield every exponent vector in n variables of total degree <= d."""
    if n == 0:
        yield ()
        return

    def rec(prefix: tuple, remaining: int, slots: int) -> Iterator[Monomial]:
        if slots == 1:
            for e in range(remaining + 1):
                yield prefix + (e,)
            return
        for e in range(remaining + 1):
            yield from rec(prefix + (e,), remaining - e, slots - 1)

    yield from rec((), d, n)


def _minimalize(gens: Iterable) -> tuple:
    """Reduce to the divisibility antichain, sorted lexicographically."""
    unique = sorted(set(gens), key=lambda g: (total_degree(g), g))
    kept = []
    for g in unique:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    kept.sort()
    return tuple(kept)


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in canonical minimal-generator form."""

    ring: RingCtx
    gens: tuple = ()

    def __post_init__(self):
        canon = []
        for g in self.gens:
            g = tuple(g)
            if len(g) != self.ring.n:
                raise RingMismatchError(
                    f"generator {g} does not fit a ring of {self.ring.n} variables")
            for e in g:
                if e < 0:
                    raise DomainError(f"negative exponent in generator {g}")
                if e > EXPONENT_CAP:
                    raise ExponentCapError(
                        f"exponent {e} exceeds the cap of {EXPONENT_CAP}")
            canon.append(g)
        object.__setattr__(self, "gens", _minimalize(canon))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(ring: RingCtx) -> "MonomialIdeal":
        return MonomialIdeal(ring, ())

    @staticmethod
    def unit(ring: RingCtx) -> "MonomialIdeal":
        return MonomialIdeal(ring, (ring.one(),))

    # -- predicates ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and total_degree(self.gens[0]) == 0

    @property
    def is_proper(self) -> bool:
        return not self.is_zero and not self.is_unit

    def contains(self, m: Monomial) -> bool:
        """Monomial membership: some generator divides m."""
        if len(m) != self.ring.n:
            raise RingMismatchError("monomial from a different ring")
        return any(divides(g, m) for g in self.gens)

    def includes(self, other: "MonomialIdeal") -> bool:
        """True iff other is contained in self."""
        self._check_ring(other)
        return all(self.contains(g) for g in other.gens)

    def _check_ring(self, other: "MonomialIdeal") -> None:
        if self.ring != other.ring:
            raise RingMismatchError("ideals live in different rings")

    # -- arithmetic ----------------------------------------------------------

    def sum(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Ideal sum, generated by the union of the generators."""
        self._check_ring(other)
        return MonomialIdeal(self.ring, self.gens + other.gens)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Ideal intersection via pairwise lcms of generators."""
        self._check_ring(other)
        pairs = [lcm(g, h) for g in self.gens for h in other.gens]
        return MonomialIdeal(self.ring, pairs)

    def colon(self, w: Monomial) -> "MonomialIdeal":
        """The colon ideal (self : w) for a monomial w."""
        if len(w) != self.ring.n:
            raise RingMismatchError("monomial from a different ring")
        return MonomialIdeal(self.ring, [quotient(g, w) for g in self.gens])

    def radical(self) -> "MonomialIdeal":
        """Generated by the squarefree parts of the generators."""
        return MonomialIdeal(self.ring, [squarefree_part(g) for g in self.gens])

    def restrict(self, vars: VarSet) -> "MonomialIdeal":
        """Intersection with the subring on vars, kept in the ambient ring.

        For a monomial ideal the generators supported inside vars generate
        exactly the monomials of the ideal that live in the subring.
        """
        kept = [g for g in self.gens if support(g) <= vars]
        return MonomialIdeal(self.ring, kept)

    def support_union(self) -> VarSet:
        out = set()
        for g in self.gens:
            out |= support(g)
        return frozenset(out)

    def is_squarefree(self) -> bool:
        return all(is_squarefree(g) for g in self.gens)

    # -- polarization --------------------------------------------------------

    def polarize(self) -> tuple:
        """Replace powers by products of fresh variables.

        Each occurrence x_i^e in a generator becomes x_i times one fresh
        variable per extra power.  Fresh variables are appended after the
        original ones, grouped by parent variable then occurrence.  Returns
        (polarized ideal, number of added variables).
        """
        parents = polarization_parents(self)
        n, added = self.ring.n, len(parents)
        new_ring = RingCtx(n + added)
        slot = {}
        k = 0
        for i in range(n):
            cap = max((g[i] for g in self.gens), default=0)
            for j in range(2, cap + 1):
                slot[(i, j)] = n + k
                k += 1
        new_gens = []
        for g in self.gens:
            exps = [0] * (n + added)
            for i, e in enumerate(g):
                if e >= 1:
                    exps[i] = 1
                for j in range(2, e + 1):
                    exps[slot[(i, j)]] = 1
            new_gens.append(tuple(exps))
        return MonomialIdeal(new_ring, new_gens), added

    # -- rendering -----------------------------------------------------------

    def render(self) -> str:
        if self.is_zero:
            return "0"
        return ", ".join(render_monomial(g, self.ring) for g in self.gens)

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.render()})"


def polarization_parents(I: MonomialIdeal) -> tuple:
    """Parent variable index of each variable polarize() will append."""
    parents = []
    for i in range(I.ring.n):
        cap = max((g[i] for g in I.gens), default=0)
        parents.extend([i] * max(0, cap - 1))
    return tuple(parents)


def render_monomial(m: Monomial, ring: RingCtx) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(ring.var_names[i])
        elif e > 1:
            parts.append(f"{ring.var_names[i]}^{e}")
    return "*".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# changing rings
# ---------------------------------------------------------------------------

def map_variables(I: MonomialIdeal, new_ring: RingCtx, var_map: dict) -> MonomialIdeal:
    """Transport I along an injective variable map old index -> new index.

    Every variable in the support of a generator must be mapped.
    """
    targets = list(var_map.values())
    if len(set(targets)) != len(targets):
        raise DomainError("variable map must be injective")
    new_gens = []
    for g in I.gens:
        exps = [0] * new_ring.n
        for i, e in enumerate(g):
            if e == 0:
                continue
            if i not in var_map:
                raise DomainError(f"variable {i} in support but not mapped")
            exps[var_map[i]] = e
        new_gens.append(tuple(exps))
    return MonomialIdeal(new_ring, new_gens)


def subring_ideal(I: MonomialIdeal, vars: VarSet) -> MonomialIdeal:
    """Re-index an ideal supported inside vars to a dense ring on vars.

    Variables are kept in increasing order.  Generators with support
    outside vars are rejected.
    """
    order = sorted(vars)
    allowed = frozenset(vars)
    if any(not support(g) <= allowed for g in I.gens):
        raise DomainError("generator supported outside the subring")
    new_ring = RingCtx(len(order))
    var_map = {old: new for new, old in enumerate(order)}
    return map_variables(I, new_ring, var_map)


def extend_ideal(I: MonomialIdeal, new_ring: RingCtx, positions: Iterable) -> MonomialIdeal:
    """Embed I into a larger ring, sending variable i to positions[i]."""
    var_map = {i: p for i, p in enumerate(positions)}
    return map_variables(I, new_ring, var_map)

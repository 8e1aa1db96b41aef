"""Approximating pairs and wrapping maps: witness checking plus the
constructive cases (integer subsets, Rees matrix semigroups over an
approximable group, strong semilattices of approximable components).

An approximating pair (F, f) for a finite subset H of a semigroup S is an
injection f of H into a finite semigroup F that respects every product that
stays inside H.  A wrapping map (D, d) covers H by the image of a total map d
from a finite semigroup D and respects products whenever both d-values lie in
H, with no condition on where the product itself lands.
"""

from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .constructors import ReesSpec, SemilatticeSpec, rees_matrix, \
    semilattice_semigroup
from .fsg import MulTable, direct_product, generate_subsemigroup
from . import oracle


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class FiniteSubset:
    """A finite subset of a host semigroup.

    Hosts: a MulTable (handles are its labels), a preset id string like "t" or
    "free:<letters>" (handles are words), a ReesSpec (handles are
    (row, g, col) triples) or a SemilatticeSpec (handles are
    (meet-element, value) pairs).  defined_products lists the triples
    (x, y, xy) whose product falls back into the subset.
    """

    host: object
    elements: tuple
    defined_products: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "defined_products",
                           tuple((x, y, z) for x, y, z in self.defined_products))
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("subset elements must be distinct handles")
        members = set(self.elements)
        for x, y, z in self.defined_products:
            if x not in members or y not in members or z not in members:
                raise ValueError(f"product triple ({x},{y},{z}) leaves the subset")


@dataclass(frozen=True)
class ApproxPair:
    F: MulTable
    f: dict

    def as_json(self) -> dict:
        return {"table": self.F.to_json(),
                "map": {_handle_key(k): int(v) for k, v in self.f.items()}}

    @classmethod
    def from_json(cls, data: dict) -> "ApproxPair":
        return cls(F=MulTable.from_json(data["table"]),
                   f={k: int(v) for k, v in data["map"].items()})


@dataclass(frozen=True)
class WrapMap:
    D: MulTable
    d: tuple  # host handle for every D index

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(self.d))
        if len(self.d) != self.D.order:
            raise ValueError("d must be total on D")

    def as_json(self) -> dict:
        return {"table": self.D.to_json(),
                "d_words": [_handle_key(h) for h in self.d]}

    @classmethod
    def from_json(cls, data: dict) -> "WrapMap":
        return cls(D=MulTable.from_json(data["table"]), d=tuple(data["d_words"]))


@dataclass(frozen=True)
class GroupHandle:
    """A group known only through its operation, together with a procedure
    producing an approximating pair for any finite subset."""

    description: str
    op: Callable
    approximator: Callable


def _handle_key(handle) -> str:
    if isinstance(handle, str):
        return handle
    if isinstance(handle, tuple):
        return "(" + ",".join(_handle_key(h) for h in handle) + ")"
    return str(handle)


@dataclass(frozen=True)
class CheckResult:
    valid: bool
    reason: str | None = None         # injectivity | product | coverage
    counterexample: tuple | None = None

    def as_json(self) -> dict:
        return {"valid": self.valid, "reason": self.reason,
                "counterexample": [_handle_key(h) for h in self.counterexample]
                if self.counterexample else None}


# ---------------------------------------------------------------------------
# host dispatch


def host_equal(host, x, y) -> bool:
    """Equality of two element handles in the host; raises when the word
    oracle cannot settle it."""
    if isinstance(host, MulTable) or isinstance(host, (ReesSpec, SemilatticeSpec)):
        return x == y
    if isinstance(host, str):
        pid = host.lower()
        if pid.startswith("free:"):
            return x == y
        if pid == "q" or pid.startswith("fn:"):
            return oracle.word_equal_nf(pid, x, y).status == "equal"
        verdict = oracle.word_equal_bfs(pid, x, y)
        if verdict.status == "unknown":
            raise RuntimeError(
                f"oracle cannot settle {x!r} = {y!r} in {pid}: {verdict.evidence}")
        return verdict.status == "equal"
    raise TypeError(f"unsupported host {host!r}")


def host_mul(host, x, y):
    """Product of two element handles in the host."""
    if isinstance(host, MulTable):
        return host.label(host.mul(host.index(x), host.index(y)))
    if isinstance(host, ReesSpec):
        i, g, lam = x
        j, h, mu = y
        p = host.sandwich[host.cols.index(lam)][host.rows.index(j)]
        return (i, _group_mul(host.group, _group_mul(host.group, g, p), h), mu)
    if isinstance(host, SemilatticeSpec):
        e1, v1 = x
        e2, v2 = y
        names = tuple(host.meet.label(i) for i in range(host.meet.order))
        m = names[host.meet.mul(names.index(e1), names.index(e2))]
        w1 = _apply_hom(host, e1, m, v1)
        w2 = _apply_hom(host, e2, m, v2)
        comp = host.components[m]
        prod = comp.mul(w1, w2) if isinstance(comp, MulTable) else comp.op(w1, w2)
        return (m, prod)
    if isinstance(host, str):
        return x + y
    raise TypeError(f"unsupported host {host!r}")


def _group_mul(group, x, y):
    return group.mul(x, y) if isinstance(group, MulTable) else group.op(x, y)


def _apply_hom(spec: SemilatticeSpec, src: str, dst: str, value):
    if src == dst:
        return value
    hom = spec.homs[(src, dst)]
    return hom(value) if callable(hom) else hom[value]


# ---------------------------------------------------------------------------
# subset constructors


def subset_from_table(mt: MulTable, members) -> FiniteSubset:
    """Subset of a finite table given by labels or indices, with every
    internal product recorded."""
    idxs = []
    for m in members:
        idxs.append(m if isinstance(m, int) else mt.index(m))
    labels = [mt.label(i) for i in idxs]
    inside = dict(zip(idxs, labels))
    products = []
    for i in idxs:
        for j in idxs:
            k = mt.mul(i, j)
            if k in inside:
                products.append((inside[i], inside[j], inside[k]))
    return FiniteSubset(host=mt, elements=tuple(labels),
                        defined_products=tuple(products))


def subset_from_words(host: str, words) -> FiniteSubset:
    """Subset of a word host; elements must be pairwise distinct there, and
    products are recorded whenever the concatenation equals a member."""
    words = [str(w) for w in words]
    for a, b in itertools.combinations(words, 2):
        if host_equal(host, a, b):
            raise ValueError(f"{a!r} and {b!r} name the same element of {host}")
    products = []
    for u, v in itertools.product(words, repeat=2):
        for w in words:
            if host_equal(host, u + v, w):
                products.append((u, v, w))
                break
    return FiniteSubset(host=host, elements=tuple(words),
                        defined_products=tuple(products))


def rees_subset(spec: ReesSpec, triples) -> FiniteSubset:
    """Subset of a Rees matrix semigroup from (row, g, col) triples."""
    triples = [tuple(t) for t in triples]
    for i, g, lam in triples:
        if i not in spec.rows or lam not in spec.cols:
            raise ValueError(f"triple ({i},{g},{lam}) uses unknown indices")
    members = set(triples)
    products = [(x, y, host_mul(spec, x, y))
                for x, y in itertools.product(triples, repeat=2)
                if host_mul(spec, x, y) in members]
    return FiniteSubset(host=spec, elements=tuple(triples),
                        defined_products=tuple(products))


def semilattice_subset(spec: SemilatticeSpec, pairs) -> FiniteSubset:
    """Subset of a strong semilattice of semigroups from (component, value)
    pairs."""
    pairs = [tuple(p) for p in pairs]
    names = {spec.meet.label(i) for i in range(spec.meet.order)}
    for e, _ in pairs:
        if e not in names:
            raise ValueError(f"unknown component {e!r}")
    members = set(pairs)
    products = [(x, y, host_mul(spec, x, y))
                for x, y in itertools.product(pairs, repeat=2)
                if host_mul(spec, x, y) in members]
    return FiniteSubset(host=spec, elements=tuple(pairs),
                        defined_products=tuple(products))


# ---------------------------------------------------------------------------
# checkers


def check_approximating_pair(H: FiniteSubset, pair: ApproxPair) -> CheckResult:
    """Valid iff f is injective on H and respects every defined product."""
    for x in H.elements:
        if x not in pair.f:
            raise ValueError(f"f is not total on the subset: {x!r} missing")
    seen: dict[int, object] = {}
    for x in H.elements:
        v = pair.f[x]
        if v in seen:
            return CheckResult(False, "injectivity", (seen[v], x))
        seen[v] = x
    for x, y, z in H.defined_products:
        if pair.F.mul(pair.f[x], pair.f[y]) != pair.f[z]:
            return CheckResult(False, "product", (x, y, z))
    return CheckResult(True)


def check_lwf_wrapping(H: FiniteSubset, wrap: WrapMap) -> CheckResult:
    """Valid iff d's image covers H and d(x'y') = d(x')d(y') whenever both
    d-values lie in H (regardless of where the product lands)."""
    host = H.host
    distinct_values = sorted(set(wrap.d), key=_handle_key)
    value_in_h: dict = {}
    for val in distinct_values:
        value_in_h[val] = any(host_equal(host, val, h) for h in H.elements)
    for h in H.elements:
        if not any(host_equal(host, val, h) for val in distinct_values):
            return CheckResult(False, "coverage", (h,))
    triggers = [i for i in range(wrap.D.order) if value_in_h[wrap.d[i]]]
    for i in triggers:
        for j in triggers:
            k = wrap.D.mul(i, j)
            expected = host_mul(host, wrap.d[i], wrap.d[j])
            if not host_equal(host, wrap.d[k], expected):
                return CheckResult(False, "product",
                                   (wrap.d[i], wrap.d[j], wrap.d[k], expected))
    return CheckResult(True)


# ---------------------------------------------------------------------------
# integers


def cyclic_table(m: int) -> MulTable:
    """The additive group of residues mod m."""
    if m < 1:
        raise ValueError("modulus must be positive")
    grid = (np.arange(m)[:, None] + np.arange(m)[None, :]) % m
    return MulTable(grid, labels=tuple(str(i) for i in range(m)))


def approx_integers(values) -> ApproxPair:
    """Approximating pair for a finite set of integers under addition: reduce
    mod the spread, which cannot collide inside the set."""
    vals = sorted({int(v) for v in values})
    if not vals:
        return ApproxPair(F=cyclic_table(1), f={})
    m = vals[-1] - vals[0] + 1
    return ApproxPair(F=cyclic_table(m), f={v: v % m for v in vals})


INT_GROUP = GroupHandle(description="additive integers", op=operator.add,
                        approximator=approx_integers)


# ---------------------------------------------------------------------------
# Rees matrix semigroups over an approximable group


def approx_rees(spec: ReesSpec, Hp: FiniteSubset) -> ApproxPair:
    """Approximating pair for a finite subset of M(G; I, Lambda; P): collect
    the touched rows J and columns Sigma, the middle entries X and sandwich
    entries Y, approximate X u Y closed under products of length <= 3 inside
    G, and rebuild the Rees table over the finite image group."""
    triples = [tuple(t) for t in Hp.elements]
    if not triples:
        raise ValueError("empty subset")
    touched_rows = {t[0] for t in triples}
    touched_cols = {t[2] for t in triples}
    J = tuple(r for r in spec.rows if r in touched_rows)
    Sigma = tuple(c for c in spec.cols if c in touched_cols)
    row_at = {r: k for k, r in enumerate(spec.rows)}
    col_at = {c: k for k, c in enumerate(spec.cols)}

    X = {g for _, g, _ in triples}
    Y = {spec.sandwich[col_at[lam]][row_at[i]] for lam in Sigma for i in J}
    base = X | Y
    K = set(base)
    for g, h in itertools.product(base, repeat=2):
        K.add(_group_mul(spec.group, g, h))
    for g, h, k in itertools.product(base, repeat=3):
        K.add(_group_mul(spec.group, _group_mul(spec.group, g, h), k))

    if isinstance(spec.group, MulTable):
        gp = ApproxPair(F=spec.group, f={g: int(g) for g in K})
    else:
        gp = spec.group.approximator(K)

    P_image = tuple(tuple(gp.f[spec.sandwich[col_at[lam]][row_at[i]]] for i in J)
                    for lam in Sigma)
    F = rees_matrix(ReesSpec(group=gp.F, rows=J, cols=Sigma, sandwich=P_image))
    ng, nl = gp.F.order, len(Sigma)
    f = {(i, g, lam): (J.index(i) * ng + gp.f[g]) * nl + Sigma.index(lam)
         for i, g, lam in triples}
    return ApproxPair(F=F, f=f)


# ---------------------------------------------------------------------------
# strong semilattices of approximable components


def approx_semilattice(spec: SemilatticeSpec, H: FiniteSubset) -> ApproxPair:
    """Approximating pair for a finite subset of a strong semilattice of
    semigroups whose components are finite tables or approximable groups.

    The carrier is again a strong semilattice: over each touched-downward meet
    element e sits the direct product of the component approximations at or
    below e, connected by coordinate projections.
    """
    E = spec.meet
    names = tuple(E.label(i) for i in range(E.order))
    at = {name: i for i, name in enumerate(names)}
    pairs = [tuple(p) for p in H.elements]
    touched = {e for e, _ in pairs}
    for e in touched:
        if e not in at:
            raise ValueError(f"unknown component {e!r}")

    closure = set(touched)
    while True:
        extra = {names[E.mul(at[e1], at[e2])]
                 for e1, e2 in itertools.product(closure, repeat=2)} - closure
        if not extra:
            break
        closure |= extra
    eprime = tuple(name for name in names if name in closure)

    def below(e1: str, e2: str) -> bool:
        return names[E.mul(at[e1], at[e2])] == e1   # e1 lies below e2

    K: dict[str, set] = {e: set() for e in eprime}
    for e1, v in pairs:
        for e2 in eprime:
            if below(e2, e1):
                K[e2].add(_apply_hom(spec, e1, e2, v))

    comp_pair: dict[str, ApproxPair] = {}
    for e in eprime:
        comp = spec.components[e]
        if isinstance(comp, MulTable):
            comp_pair[e] = ApproxPair(F=comp, f={v: int(v) for v in K[e]})
        elif K[e]:
            comp_pair[e] = comp.approximator(K[e])
        else:
            comp_pair[e] = ApproxPair(F=cyclic_table(1), f={})

    factors_of = {e: tuple(e2 for e2 in eprime if below(e2, e)) for e in eprime}

    def flatten(e: str, coords: dict[str, int]) -> int:
        idx = 0
        for e2 in factors_of[e]:
            idx = idx * comp_pair[e2].F.order + coords[e2]
        return idx

    components: dict[str, MulTable] = {}
    for e in eprime:
        tables = [comp_pair[e2].F for e2 in factors_of[e]]
        prod = tables[0]
        for t in tables[1:]:
            prod = direct_product(prod, t)
        components[e] = prod

    homs: dict[tuple[str, str], tuple[int, ...]] = {}
    for e1 in eprime:
        for e2 in eprime:
            if e1 == e2 or not below(e2, e1):
                continue
            sizes = [comp_pair[x].F.order for x in factors_of[e1]]
            proj = []
            for idx in range(components[e1].order):
                coords = {}
                rest = idx
                for x, size in zip(reversed(factors_of[e1]), reversed(sizes)):
                    coords[x] = rest % size
                    rest //= size
                proj.append(flatten(e2, coords))
            homs[(e1, e2)] = tuple(proj)

    meet_sub = MulTable(
        np.array([[eprime.index(names[E.mul(at[e1], at[e2])])
                   for e2 in eprime] for e1 in eprime]),
        labels=eprime)
    F = semilattice_semigroup(SemilatticeSpec(meet=meet_sub,
                                              components=components, homs=homs))
    offsets = {}
    total = 0
    for e in eprime:
        offsets[e] = total
        total += components[e].order

    f = {}
    for e, v in pairs:
        coords = {e2: comp_pair[e2].f[_apply_hom(spec, e, e2, v)]
                  for e2 in factors_of[e]}
        f[(e, v)] = offsets[e] + flatten(e, coords)
    return ApproxPair(F=F, f=f)


# ---------------------------------------------------------------------------
# deriving a wrapping map from an approximating pair (finite hosts)


def wrap_from_pair(H: FiniteSubset, pair: ApproxPair) -> WrapMap:
    """Mechanical wrapping map from a pair on a finite table host: restrict F
    to the subsemigroup its image generates, send image points back through f,
    send image products to the host products they must represent, and dump
    everything else on an element outside H.

    Fails (with an error) when F identifies two subset products that differ in
    the host; such a pair carries too little information to wrap.
    """
    mt = H.host
    if not isinstance(mt, MulTable):
        raise TypeError("wrap derivation needs a finite table host")
    image = sorted({pair.f[x] for x in H.elements})
    sub = generate_subsemigroup(pair.F, image)
    local = {g: i for i, g in enumerate(sub)}
    table = np.array([[local[pair.F.mul(a, b)] for b in sub] for a in sub])
    D = MulTable(table, labels=tuple(pair.F.label(g) for g in sub))

    assigned: dict[int, str] = {}
    for x in H.elements:
        assigned[local[pair.f[x]]] = x
    for x, y in itertools.product(H.elements, repeat=2):
        z = local[pair.F.mul(pair.f[x], pair.f[y])]
        want = host_mul(mt, x, y)
        if assigned.get(z, want) != want:
            raise ValueError(
                f"pair does not separate subset products: F-element {z} would "
                f"need d-values {assigned[z]!r} and {want!r}")
        assigned[z] = want

    members = set(H.elements)
    fallback = next((mt.label(i) for i in range(mt.order)
                     if mt.label(i) not in members), None)
    d = []
    for i in range(D.order):
        if i in assigned:
            d.append(assigned[i])
        elif fallback is not None:
            d.append(fallback)
        else:
            raise ValueError("subset exhausts the host; no fallback element "
                             "for the unassigned part of D")
    return WrapMap(D=D, d=tuple(d))

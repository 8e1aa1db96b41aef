"""Finite semigroups as multiplication tables: associativity, Green's
relations, structural classification, enumeration, and relational assignments.

Tables are numpy int arrays with table[i, j] = index of the product of i and j
(row = left factor).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np


@dataclass(eq=False)
class MulTable:
    table: np.ndarray
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        self.table = np.asarray(self.table)
        if self.table.dtype.kind not in "iu":
            self.table = self.table.astype(np.int64)
        n = self.order
        if self.table.shape != (n, n):
            raise ValueError("table must be square")
        if self.table.size and (self.table.min() < 0 or self.table.max() >= n):
            raise ValueError("table entries must be element indices")
        if self.labels is not None:
            self.labels = tuple(self.labels)
            if len(self.labels) != n or len(set(self.labels)) != n:
                raise ValueError("labels must be distinct, one per element")

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"s{i}"

    def index(self, label: str) -> int:
        if self.labels is None:
            if label.startswith("s") and label[1:].isdigit():
                return int(label[1:])
            raise KeyError(label)
        return self.labels.index(label)

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def is_associative(self) -> bool:
        T = self.table
        # T[T][p,q,r] = (pq)r and T[:, T][p,q,r] = p(qr)
        return bool((T[T] == T[:, T]).all()) if self.order else True

    def idempotents(self) -> list[int]:
        return [i for i in range(self.order) if self.table[i, i] == i]

    def identity(self) -> int | None:
        for e in range(self.order):
            if (self.table[e] == np.arange(self.order)).all() and \
               (self.table[:, e] == np.arange(self.order)).all():
                return e
        return None

    def is_commutative(self) -> bool:
        return bool((self.table == self.table.T).all())

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "labels": [self.label(i) for i in range(self.order)],
            "table": self.table.tolist(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "MulTable":
        return cls(table=np.array(data["table"], dtype=np.int64),
                   labels=tuple(data["labels"]) if data.get("labels") else None)


@dataclass
class PartialTable:
    """A partial binary operation on named elements; products absent from the
    dict are undefined."""

    elements: tuple[str, ...]
    products: dict[tuple[str, str], str]

    def __post_init__(self):
        self.elements = tuple(self.elements)
        names = set(self.elements)
        if len(names) != len(self.elements):
            raise ValueError("duplicate element names")
        for (u, v), w in self.products.items():
            if u not in names or v not in names or w not in names:
                raise ValueError(f"product ({u},{v})->{w} uses unknown element")

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "products": {f"{u},{v}": w for (u, v), w in self.products.items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> "PartialTable":
        products = {}
        for key, w in data["products"].items():
            u, v = key.split(",")
            products[(u.strip(), v.strip())] = w
        return cls(elements=tuple(data["elements"]), products=products)


def associativity_failures(mt: MulTable, limit: int = 10) -> list[tuple[int, int, int]]:
    """Triples (p, q, r) with (pq)r != p(qr), at most `limit` of them."""
    T = mt.table
    bad = np.argwhere(T[T] != T[:, T])
    return [tuple(map(int, t)) for t in bad[:limit]]


def check_associative(mt: MulTable) -> bool:
    return mt.is_associative()


def zero_element(mt: MulTable) -> int | None:
    """The absorbing element, if the table has one."""
    for z in range(mt.order):
        if (mt.table[z] == z).all() and (mt.table[:, z] == z).all():
            return z
    return None


def _fresh_label(mt: MulTable, base: str) -> str:
    existing = set(mt.labels or ())
    label = base
    while label in existing:
        label += "'"
    return label


def adjoin_identity(mt: MulTable) -> MulTable:
    """The table with an identity appended; the input itself when it already
    has one (so the operation is idempotent)."""
    if mt.identity() is not None:
        return mt
    n = mt.order
    T = np.full((n + 1, n + 1), n, dtype=np.int64)
    T[:n, :n] = mt.table
    T[n, :n] = np.arange(n)
    T[:n, n] = np.arange(n)
    labels = None
    if mt.labels is not None:
        labels = mt.labels + (_fresh_label(mt, "1"),)
    return MulTable(T, labels)


def adjoin_zero(mt: MulTable) -> MulTable:
    """The table with an absorbing element appended; idempotent like
    adjoin_identity."""
    if zero_element(mt) is not None:
        return mt
    n = mt.order
    T = np.full((n + 1, n + 1), n, dtype=np.int64)
    T[:n, :n] = mt.table
    labels = None
    if mt.labels is not None:
        labels = mt.labels + (_fresh_label(mt, "0"),)
    return MulTable(T, labels)


# ---------------------------------------------------------------------------
# Green's relations

@dataclass
class GreenRelations:
    r_classes: list[tuple[int, ...]]
    l_classes: list[tuple[int, ...]]
    h_classes: list[tuple[int, ...]]
    j_classes: list[tuple[int, ...]]
    leq_r: np.ndarray = field(repr=False)  # leq[x, y] iff x lies below y
    leq_l: np.ndarray = field(repr=False)
    leq_j: np.ndarray = field(repr=False)

    @property
    def r_trivial(self) -> bool:
        return all(len(c) == 1 for c in self.r_classes)

    @property
    def l_trivial(self) -> bool:
        return all(len(c) == 1 for c in self.l_classes)

    @property
    def h_trivial(self) -> bool:
        return all(len(c) == 1 for c in self.h_classes)

    @property
    def j_trivial(self) -> bool:
        return all(len(c) == 1 for c in self.j_classes)


def _classes_from_leq(leq: np.ndarray) -> list[tuple[int, ...]]:
    mutual = leq & leq.T
    groups: dict[bytes, list[int]] = {}
    for i, row in enumerate(mutual):
        groups.setdefault(row.tobytes(), []).append(i)
    return sorted((tuple(g) for g in groups.values()), key=lambda c: c[0])


def green(mt: MulTable) -> GreenRelations:
    """R, L, H, J classes.  One-sided ideals need only single products since
    x(st) = (xs)t keeps principal ideals closed."""
    T = mt.table
    n = mt.order
    idx = np.arange(n)
    leq_r = np.eye(n, dtype=bool)
    leq_r[T, idx[:, None]] = True       # y*s lies R-below y
    leq_l = np.eye(n, dtype=bool)
    leq_l[T, idx[None, :]] = True       # s*y lies L-below y
    leq_j = np.eye(n, dtype=bool)
    for y in range(n):
        down = set(T[y]) | set(T[:, y]) | set(T[T[:, y]].ravel())
        leq_j[list(down), y] = True
    leq_h = leq_r & leq_l
    return GreenRelations(
        r_classes=_classes_from_leq(leq_r),
        l_classes=_classes_from_leq(leq_l),
        h_classes=_classes_from_leq(leq_h),
        j_classes=_classes_from_leq(leq_j),
        leq_r=leq_r,
        leq_l=leq_l,
        leq_j=leq_j,
    )


def is_group(mt: MulTable) -> bool:
    """Associative Latin square is a group."""
    if not mt.is_associative():
        return False
    T = mt.table
    n = mt.order
    want = np.arange(n)
    return all((np.sort(T[i]) == want).all() and (np.sort(T[:, i]) == want).all()
               for i in range(n))


def is_completely_simple(mt: MulTable) -> bool:
    """Single J-class (finiteness then gives an idempotent in it)."""
    if not mt.is_associative():
        return False
    return len(green(mt).j_classes) == 1 and bool(mt.idempotents())


def is_clifford(mt: MulTable) -> bool:
    """Every element in a subgroup (x H-related to its square) and all
    idempotents central."""
    if not mt.is_associative():
        return False
    T = mt.table
    n = mt.order
    g = green(mt)
    h_of = {}
    for ci, cls in enumerate(g.h_classes):
        for x in cls:
            h_of[x] = ci
    if any(h_of[x] != h_of[int(T[x, x])] for x in range(n)):
        return False
    for e in mt.idempotents():
        if not (T[e] == T[:, e]).all():
            return False
    return True


def is_j_trivial(mt: MulTable) -> bool:
    return green(mt).j_trivial


def is_l_trivial(mt: MulTable) -> bool:
    return green(mt).l_trivial


def is_r_trivial(mt: MulTable) -> bool:
    return green(mt).r_trivial


def generate_subsemigroup(mt: MulTable, seeds) -> tuple[int, ...]:
    """Indices of the subsemigroup generated by the seed indices, sorted."""
    members = set(int(s) for s in seeds)
    frontier = list(members)
    while frontier:
        nxt = []
        for x in frontier:
            for y in list(members):
                for p in (mt.mul(x, y), mt.mul(y, x)):
                    if p not in members:
                        members.add(p)
                        nxt.append(p)
        frontier = nxt
    return tuple(sorted(members))


def direct_product(a: MulTable, b: MulTable) -> MulTable:
    """Componentwise product on pairs; pair (i, j) sits at index i*|b| + j."""
    na, nb = a.order, b.order
    ia = np.arange(na)
    ib = np.arange(nb)
    ta = a.table.astype(np.int64)
    tb = b.table.astype(np.int64)
    # product of (i1,j1) and (i2,j2) = (a[i1,i2], b[j1,j2]), flattened
    T = (ta[ia[:, None, None, None], ia[None, None, :, None]] * nb
         + tb[ib[None, :, None, None], ib[None, None, None, :]])
    T = T.reshape(na * nb, na * nb)
    labels = None
    if a.labels is not None and b.labels is not None:
        labels = tuple(f"({a.label(i)},{b.label(j)})"
                       for i in range(na) for j in range(nb))
    return MulTable(T, labels)


def idempotent_power(mt: MulTable, x: int) -> tuple[int, bool]:
    """Smallest k >= 1 with x^k idempotent, and whether the power sequence has
    stabilised there (x^k = x^{k+1}, the aperiodic case)."""
    cur = x
    # index + period of the power sequence are each at most the order
    for k in range(1, 2 * mt.order + 2):
        if mt.mul(cur, cur) == cur:
            return k, mt.mul(cur, x) == cur
        cur = mt.mul(cur, x)
    raise ValueError("power sequence has no idempotent; table is not associative")


def classify(mt: MulTable) -> dict:
    """Structural summary used by the command-line `classify` verb."""
    assoc = mt.is_associative()
    out = {
        "order": mt.order,
        "associative": assoc,
        "commutative": mt.is_commutative(),
        "idempotents": len(mt.idempotents()),
    }
    if not assoc:
        out["associativity_failures"] = associativity_failures(mt)
        return out
    g = green(mt)
    out.update({
        "r_classes": len(g.r_classes),
        "l_classes": len(g.l_classes),
        "h_classes": len(g.h_classes),
        "j_classes": len(g.j_classes),
        "r_trivial": g.r_trivial,
        "l_trivial": g.l_trivial,
        "h_trivial": g.h_trivial,
        "j_trivial": g.j_trivial,
        "group": is_group(mt),
        "completely_simple": is_completely_simple(mt),
        "clifford": is_clifford(mt),
    })
    return out


# ---------------------------------------------------------------------------
# relational assignments: mapping word-equation variables into a table


def evaluate_word(mt: MulTable, word: str, assignment: dict[str, int]) -> int:
    val = assignment[word[0]]
    for ch in word[1:]:
        val = int(mt.table[val, assignment[ch]])
    return val


def relation_variables(relations) -> tuple[str, ...]:
    seen: dict[str, None] = {}
    for u, v in relations:
        for ch in u + v:
            seen.setdefault(ch)
    return tuple(sorted(seen))


def word_value_grid(mt: MulTable, word: str, variables: tuple[str, ...]) -> np.ndarray:
    """Array of the word's value over every assignment, one axis per variable."""
    n = mt.order
    k = len(variables)
    def axis_grid(ch: str) -> np.ndarray:
        i = variables.index(ch)
        shape = [1] * k
        shape[i] = n
        return np.arange(n).reshape(shape)
    val = np.broadcast_to(axis_grid(word[0]), (n,) * k)
    for ch in word[1:]:
        val = mt.table[val, axis_grid(ch)]
    return val


def relation_grid(mt: MulTable, relation: tuple[str, str],
                  variables: tuple[str, ...]) -> np.ndarray:
    u, v = relation
    return word_value_grid(mt, u, variables) == word_value_grid(mt, v, variables)


def find_relational_assignments(mt: MulTable, relations, distinct: bool = False):
    """Yield (assignment, violated) for every mapping of the relations'
    variables into the table, where violated lists the relations that fail.
    Nothing is pruned; callers filter.  With distinct=True only injective
    assignments are produced."""
    variables = relation_variables(relations)
    grids = [relation_grid(mt, rel, variables) for rel in relations]
    n = mt.order
    for combo in itertools.product(range(n), repeat=len(variables)):
        if distinct and len(set(combo)) != len(combo):
            continue
        violated = [relations[i] for i, g in enumerate(grids) if not g[combo]]
        yield dict(zip(variables, combo)), violated


def check_implication(mt: MulTable, premises, conclusions) -> dict | None:
    """None when every assignment satisfying all premises satisfies at least
    one conclusion; otherwise a counterexample assignment."""
    variables = relation_variables(list(premises) + list(conclusions))
    sat = np.ones((mt.order,) * len(variables), dtype=bool)
    for rel in premises:
        sat &= relation_grid(mt, rel, variables)
    concl = np.zeros_like(sat)
    for rel in conclusions:
        concl |= relation_grid(mt, rel, variables)
    bad = sat & ~concl
    if not bad.any():
        return None
    combo = np.unravel_index(int(bad.argmax()), bad.shape)
    return dict(zip(variables, map(int, combo)))


# ---------------------------------------------------------------------------
# enumeration


def _canonical_form(T: np.ndarray, perms: list[np.ndarray]) -> bytes:
    best = None
    for p in perms:
        inv = np.argsort(p)
        relabeled = p[T[inv][:, inv]]
        b = relabeled.tobytes()
        if best is None or b < best:
            best = b
    return best


def _enumerate_labeled(n: int):
    """All associative n x n tables via cell-by-cell fill with incremental
    associativity checks against the defined part."""
    T = np.full((n, n), -1, dtype=np.int64)

    def ok(i: int, j: int) -> bool:
        v = T[i, j]
        for r in range(n):        # triples (i, j, r)
            jr = T[j, r]
            if jr >= 0 and T[i, jr] >= 0 and T[v, r] >= 0 and T[i, jr] != T[v, r]:
                return False
        for p in range(n):        # triples (p, i, j)
            pi = T[p, i]
            if pi >= 0 and T[pi, j] >= 0 and T[p, v] >= 0 and T[pi, j] != T[p, v]:
                return False
        for q in range(n):
            for r in range(n):
                if T[q, r] == j:  # (i, q, r): reads (i, T[q,r]) = (i, j)
                    iq = T[i, q]
                    if iq >= 0 and T[iq, r] >= 0 and T[iq, r] != v:
                        return False
                if T[q, r] == i and T[r, j] >= 0:  # (q, r, j): reads (T[q,r], j)
                    qrj = T[q, T[r, j]]
                    if qrj >= 0 and qrj != v:
                        return False
        return True

    cells = [(i, j) for i in range(n) for j in range(n)]

    def fill(k: int):
        if k == len(cells):
            yield T.copy()
            return
        i, j = cells[k]
        for v in range(n):
            T[i, j] = v
            if ok(i, j):
                yield from fill(k + 1)
        T[i, j] = -1

    yield from fill(0)


def _enumerate_group_tables(n: int):
    """Group tables with identity 0: Latin squares filtered on associativity."""
    T = np.full((n, n), -1, dtype=np.int64)
    T[0] = np.arange(n)
    T[:, 0] = np.arange(n)
    free = [(i, j) for i in range(1, n) for j in range(1, n)]

    def fill(k: int):
        if k == len(free):
            mt = MulTable(T.copy())
            if mt.is_associative():
                yield mt.table
            return
        i, j = free[k]
        used = set(T[i][T[i] >= 0]) | set(T[:, j][T[:, j] >= 0])
        for v in range(n):
            if v in used:
                continue
            T[i, j] = v
            yield from fill(k + 1)
        T[i, j] = -1

    yield from fill(0)


MAX_ENUM_ORDER = 4          # exhaustive table enumeration without a filter
MAX_ENUM_ORDER_FILTERED = 5  # a class filter trims the canonicalisation load
MAX_GROUP_ORDER = 6


def enumerate_semigroups(order: int, filter=None, up_to_iso: bool = True) -> list[MulTable]:
    """One representative per isomorphism class (or every labeled table with
    up_to_iso=False), in deterministic search order.

    The optional filter is a predicate MulTable -> bool; it must be invariant
    under isomorphism for "one per class" to make sense.  Bounded to order 4
    plain and order 5 with a filter; beyond that the search space is out of
    reach for a table-level backtracker.
    """
    if order < 1:
        raise ValueError("order must be positive")
    bound = MAX_ENUM_ORDER_FILTERED if filter is not None else MAX_ENUM_ORDER
    if order > bound:
        raise ValueError(
            f"enumeration is bounded at order {bound}"
            f"{' with a filter' if filter is not None else ''}; got {order}")
    perms = [np.array(p) for p in itertools.permutations(range(order))]
    out = []
    seen_keys = set()
    for T in _enumerate_labeled(order):
        mt = MulTable(T)
        if filter is not None and not filter(mt):
            continue
        if up_to_iso:
            key = _canonical_form(T, perms)
            if key in seen_keys:
                continue
            seen_keys.add(key)
        out.append(mt)
    return out


def enumerate_groups(order: int, up_to_iso: bool = True) -> list[MulTable]:
    """Group tables of the given order (identity fixed at 0 in the labeled
    case, which already covers every group on {0..n-1} up to isomorphism)."""
    if order < 1:
        raise ValueError("order must be positive")
    if order > MAX_GROUP_ORDER:
        raise ValueError(f"group enumeration is bounded at order {MAX_GROUP_ORDER}; got {order}")
    perms = [np.array(p) for p in itertools.permutations(range(order))]
    raw = list(_enumerate_group_tables(order))
    if up_to_iso:
        seen = {}
        for T in raw:
            seen.setdefault(_canonical_form(T, perms), T)
        return [MulTable(T) for T in seen.values()]
    seen_b = {}
    for T in raw:   # relabel in every way to get all labeled group tables
        for p in perms:
            inv = np.argsort(p)
            R = p[T[inv][:, inv]]
            seen_b.setdefault(R.tobytes(), R)
    return [MulTable(T) for T in seen_b.values()]

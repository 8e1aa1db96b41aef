"""Parametric string rewriting: schemas with exponent variables and linear side
conditions, reduction to normal form, termination-order checks, and bounded
critical-pair / local-confluence analysis.

Left-hand sides are sequences of atoms letter^exp where exp is either a linear
expression in the system parameter n (a constant once n is fixed) or a bare
variable.  A variable atom consumes the whole maximal run of its letter, except
in the last position where shorter matches are also tried.  That is exactly the
shape of all built-in rule schemas.
"""

from __future__ import annotations

import itertools
import os
import random
import re
from dataclasses import dataclass, field

from .words import shortlex_key

DEFAULT_STEP_LIMIT = 100_000


class StepLimitError(RuntimeError):
    """Reduction exceeded the step limit; suspected non-termination."""


class ConditionError(ValueError):
    """An instantiation violates a rule's side condition."""


# ---------------------------------------------------------------------------
# linear exponent expressions: sums of integer constants, k*n, and variables

_TERM_RE = re.compile(r"^(\d+)?([a-z][a-z0-9_]*)?$")


@dataclass(frozen=True)
class LinExpr:
    const: int = 0
    n_coeff: int = 0
    var_coeffs: tuple[tuple[str, int], ...] = ()

    def evaluate(self, assignment: dict[str, int], n: int | None) -> int:
        total = self.const
        if self.n_coeff:
            if n is None:
                raise ValueError("expression mentions n but the system has no parameter")
            total += self.n_coeff * n
        for name, coeff in self.var_coeffs:
            total += coeff * assignment[name]
        return total

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.var_coeffs)

    def is_bare_var(self) -> bool:
        return (self.const == 0 and self.n_coeff == 0
                and len(self.var_coeffs) == 1 and self.var_coeffs[0][1] == 1)

    def __str__(self) -> str:
        parts = []
        if self.n_coeff:
            parts.append(("" if self.n_coeff == 1 else str(self.n_coeff)) + "n")
        for name, coeff in self.var_coeffs:
            if coeff == 1:
                parts.append(name)
            elif coeff == -1:
                parts.append("-" + name)
            else:
                parts.append(f"{coeff}{name}")
        if self.const or not parts:
            parts.append(str(self.const))
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out


def parse_linexpr(text: str) -> LinExpr:
    """Parse expressions like '1', '2n+1', 'alpha-beta', '2n+beta-alpha'."""
    s = text.replace(" ", "").replace("{", "").replace("}", "")
    if not s:
        raise ValueError("empty exponent expression")
    const = n_coeff = 0
    var_coeffs: dict[str, int] = {}
    signed = []
    sign = 1
    i = 0
    while i < len(s):
        if s[i] == "+":
            sign = 1
            i += 1
            continue
        if s[i] == "-":
            sign = -1
            i += 1
            continue
        j = i
        while j < len(s) and s[j] not in "+-":
            j += 1
        signed.append((sign, s[i:j]))
        sign = 1
        i = j
    for sgn, term in signed:
        m = _TERM_RE.match(term)
        if not m or (not m.group(1) and not m.group(2)):
            raise ValueError(f"bad exponent term {term!r} in {text!r}")
        num, name = m.group(1), m.group(2)
        if name is None:
            const += sgn * int(num)
        elif name == "n":
            n_coeff += sgn * (int(num) if num else 1)
        else:
            if num:
                var_coeffs[name] = var_coeffs.get(name, 0) + sgn * int(num)
            else:
                var_coeffs[name] = var_coeffs.get(name, 0) + sgn
    coeffs = tuple(sorted((k, v) for k, v in var_coeffs.items() if v != 0))
    return LinExpr(const=const, n_coeff=n_coeff, var_coeffs=coeffs)


# ---------------------------------------------------------------------------
# side conditions

_OP_RE = re.compile(r"(<=|>=|==|<|>|=)")
_OPS = {
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
    "=": lambda a, b: a == b,
    "==": lambda a, b: a == b,
}


@dataclass(frozen=True)
class Condition:
    """A comparison chain like 0<beta<=alpha<=2n, or not_both_zero(u,v)."""

    source: str
    exprs: tuple[LinExpr, ...] = ()
    ops: tuple[str, ...] = ()
    nonzero_pair: tuple[str, str] | None = None

    def holds(self, assignment: dict[str, int], n: int | None) -> bool:
        if self.nonzero_pair is not None:
            u, v = self.nonzero_pair
            return assignment[u] != 0 or assignment[v] != 0
        vals = [e.evaluate(assignment, n) for e in self.exprs]
        return all(_OPS[op](vals[i], vals[i + 1]) for i, op in enumerate(self.ops))

    @property
    def variables(self) -> tuple[str, ...]:
        if self.nonzero_pair is not None:
            return self.nonzero_pair
        out: list[str] = []
        for e in self.exprs:
            out.extend(e.variables)
        return tuple(dict.fromkeys(out))

    def __str__(self) -> str:
        return self.source


def parse_condition(text: str) -> Condition:
    s = text.strip()
    m = re.match(r"^not_both_zero\(\s*([a-z0-9_]+)\s*,\s*([a-z0-9_]+)\s*\)$", s)
    if m:
        return Condition(source=s, nonzero_pair=(m.group(1), m.group(2)))
    parts = _OP_RE.split(s.replace(" ", ""))
    if len(parts) < 3 or len(parts) % 2 == 0:
        raise ValueError(f"bad condition {text!r}")
    exprs = tuple(parse_linexpr(p) for p in parts[0::2])
    ops = tuple(parts[1::2])
    return Condition(source=s, exprs=exprs, ops=ops)


# ---------------------------------------------------------------------------
# rule schemas and systems

Atom = tuple[str, LinExpr]


def parse_pattern(text: str) -> tuple[Atom, ...]:
    """Parse 'x a^alpha c^beta x' into ((x,1),(a,alpha),(c,beta),(x,1))."""
    atoms: list[Atom] = []
    for token in text.split():
        if "^" in token:
            letter, exp = token.split("^", 1)
            atoms.append((letter, parse_linexpr(exp)))
        else:
            for ch in token:
                atoms.append((ch, LinExpr(const=1)))
    if not atoms:
        raise ValueError("empty pattern")
    return tuple(atoms)


@dataclass(frozen=True)
class RuleSchema:
    id: str
    lhs: tuple[Atom, ...]
    rhs: tuple[Atom, ...]
    conditions: tuple[Condition, ...] = ()

    def __post_init__(self):
        for letter, expr in self.lhs:
            if expr.var_coeffs and not expr.is_bare_var():
                raise ValueError(f"{self.id}: lhs exponent {expr} must be a bare variable or constant")
        seen = [e.var_coeffs[0][0] for _, e in self.lhs if e.is_bare_var()]
        if len(seen) != len(set(seen)):
            raise ValueError(f"{self.id}: repeated lhs variable")
        lhs_vars = set(seen)
        for _, expr in self.rhs:
            if not set(expr.variables) <= lhs_vars:
                raise ValueError(f"{self.id}: rhs variable not bound by lhs")

    @property
    def variables(self) -> tuple[str, ...]:
        out = [e.var_coeffs[0][0] for _, e in self.lhs if e.is_bare_var()]
        for c in self.conditions:
            out.extend(c.variables)
        return tuple(sorted(dict.fromkeys(out)))

    def describe(self) -> str:
        lhs = " ".join(f"{l}^{e}" if str(e) != "1" else l for l, e in self.lhs)
        rhs = " ".join(f"{l}^{e}" if str(e) != "1" else l for l, e in self.rhs)
        conds = ", ".join(str(c) for c in self.conditions)
        return f"{self.id}: {lhs} -> {rhs}" + (f"  [{conds}]" if conds else "")


def make_schema(rule_id: str, lhs: str, rhs: str, conditions: list[str] | None = None) -> RuleSchema:
    return RuleSchema(
        id=rule_id,
        lhs=parse_pattern(lhs),
        rhs=parse_pattern(rhs),
        conditions=tuple(parse_condition(c) for c in (conditions or [])),
    )


@dataclass
class RewriteSystem:
    name: str
    alphabet: str
    order: str  # termination order, smallest letter first
    schemas: tuple[RuleSchema, ...]
    parameter_n: int | None = None
    assert_decrease: bool = False  # per-step shortlex check (verified presets)
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if sorted(self.alphabet) != sorted(set(self.alphabet)):
            raise ValueError("alphabet letters must be distinct")
        if set(self.order) != set(self.alphabet):
            raise ValueError("order must list exactly the alphabet letters")
        if self.parameter_n is None:
            for s in self.schemas:
                atoms = list(s.lhs) + list(s.rhs)
                if any(e.n_coeff for _, e in atoms) or any(
                    ex.n_coeff for c in s.conditions for ex in c.exprs
                ):
                    raise ValueError(f"schema {s.id} mentions n but parameter_n is absent")
        # index schemas by a guaranteed first letter where possible; schemas
        # whose first atom is a variable are tried at every position
        by_letter: dict[str, list[RuleSchema]] = {ch: [] for ch in self.alphabet}
        loose: list[RuleSchema] = []
        for s in self.schemas:
            letter, expr = s.lhs[0]
            if expr.is_bare_var():
                loose.append(s)
            else:
                by_letter[letter].append(s)
        self._index = {"by_letter": by_letter, "loose": loose}

    def candidates(self, letter: str) -> list[RuleSchema]:
        merged = self._index["by_letter"].get(letter, []) + self._index["loose"]
        merged.sort(key=lambda s: self.schemas.index(s))
        return merged

    def schema(self, rule_id: str) -> RuleSchema:
        for s in self.schemas:
            if s.id == rule_id:
                return s
        raise KeyError(rule_id)


def instantiate(schema: RuleSchema, assignment: dict[str, int], n: int | None = None) -> tuple[str, str]:
    """Concrete (lhs, rhs) words for an assignment; raises on a violated condition."""
    for cond in schema.conditions:
        if not cond.holds(assignment, n):
            raise ConditionError(f"{schema.id}: condition '{cond}' fails under {assignment}")
    def render(atoms: tuple[Atom, ...]) -> str:
        out = []
        for letter, expr in atoms:
            k = expr.evaluate(assignment, n)
            if k < 0:
                raise ConditionError(f"{schema.id}: exponent {expr} = {k} < 0 under {assignment}")
            out.append(letter * k)
        return "".join(out)
    lhs = render(schema.lhs)
    rhs = render(schema.rhs)
    if not lhs:
        raise ConditionError(f"{schema.id}: empty lhs under {assignment}")
    return lhs, rhs


def _match_at(schema: RuleSchema, w: str, pos: int, n: int | None,
              all_assignments: bool = False):
    """Match schema.lhs starting at w[pos].

    Returns (assignment, consumed) for the smallest valid assignment, or a list
    of all of them when all_assignments is set, or None/[] on failure.
    """
    assignment: dict[str, int] = {}
    cur = pos
    flexible: tuple[str, int] | None = None  # (var, max run) for the last atom
    atoms = schema.lhs
    for idx, (letter, expr) in enumerate(atoms):
        run = 0
        while cur + run < len(w) and w[cur + run] == letter:
            run += 1
        last = idx == len(atoms) - 1
        if expr.var_coeffs:
            var = expr.var_coeffs[0][0]
            if last:
                flexible = (var, run)
            else:
                assignment[var] = run
                cur += run
        else:
            k = expr.evaluate(assignment, n)
            if k > run or (not last and k != run):
                return [] if all_assignments else None
            cur += k
    base = cur - pos
    results = []
    if flexible is None:
        if all(c.holds(assignment, n) for c in schema.conditions):
            results.append((dict(assignment), base))
    else:
        var, max_run = flexible
        for val in range(max_run + 1):
            assignment[var] = val
            if all(c.holds(assignment, n) for c in schema.conditions):
                results.append((dict(assignment), base + val))
                if not all_assignments:
                    break
    if all_assignments:
        return results
    return results[0] if results else None


@dataclass(frozen=True)
class Reduction:
    word: str            # the rewritten word
    position: int
    rule_id: str
    assignment: dict = field(hash=False)
    matched: str = ""    # the lhs instance that was replaced
    replacement: str = ""


def _apply(schema: RuleSchema, w: str, pos: int, assignment: dict[str, int],
           consumed: int, n: int | None) -> Reduction:
    rhs = "".join(letter * expr.evaluate(assignment, n) for letter, expr in schema.rhs)
    return Reduction(
        word=w[:pos] + rhs + w[pos + consumed:],
        position=pos,
        rule_id=schema.id,
        assignment=assignment,
        matched=w[pos:pos + consumed],
        replacement=rhs,
    )


def reduce_once(system: RewriteSystem, w: str) -> Reduction | None:
    """One step under the deterministic strategy: leftmost position, lowest
    schema index, smallest assignment.  None iff w is irreducible."""
    n = system.parameter_n
    for pos in range(len(w)):
        for schema in system.candidates(w[pos]):
            hit = _match_at(schema, w, pos, n)
            if hit is not None:
                assignment, consumed = hit
                red = _apply(schema, w, pos, assignment, consumed, n)
                if system.assert_decrease:
                    if not shortlex_key(red.word, system.order) < shortlex_key(w, system.order):
                        raise AssertionError(
                            f"non-decreasing step {schema.id} on {w!r} -> {red.word!r}")
                return red
    return None


def enumerate_redexes(system: RewriteSystem, w: str) -> list[Reduction]:
    """Every applicable (position, rule, assignment) reduction of w."""
    n = system.parameter_n
    out = []
    for pos in range(len(w)):
        for schema in system.candidates(w[pos]):
            for assignment, consumed in _match_at(schema, w, pos, n, all_assignments=True):
                out.append(_apply(schema, w, pos, assignment, consumed, n))
    return out


def _step_limit(step_limit: int | None) -> int:
    if step_limit is not None:
        return step_limit
    return int(os.environ.get("LEF_STEP_LIMIT", DEFAULT_STEP_LIMIT))


def normal_form(system: RewriteSystem, w: str, step_limit: int | None = None,
                strategy: str = "leftmost", rng: random.Random | None = None) -> str:
    """Reduce w to an irreducible word.

    Unique independent of strategy once the system is verified convergent;
    strategy='random' exists to test exactly that.
    """
    limit = _step_limit(step_limit)
    if strategy == "random" and rng is None:
        rng = random.Random(0)
    steps = 0
    while True:
        if strategy == "leftmost":
            red = reduce_once(system, w)
        else:
            options = enumerate_redexes(system, w)
            red = rng.choice(options) if options else None
        if red is None:
            return w
        w = red.word
        steps += 1
        if steps > limit:
            raise StepLimitError(
                f"no normal form within {limit} steps (system {system.name}, stuck at {w[:80]!r})")


def reduction_trace(system: RewriteSystem, w: str, step_limit: int | None = None
                    ) -> tuple[str, list[Reduction]]:
    limit = _step_limit(step_limit)
    trace: list[Reduction] = []
    while True:
        red = reduce_once(system, w)
        if red is None:
            return w, trace
        trace.append(red)
        w = red.word
        if len(trace) > limit:
            raise StepLimitError(f"no normal form within {limit} steps")


# ---------------------------------------------------------------------------
# bounded instantiation, termination report, critical pairs


def instantiate_all(system: RewriteSystem, exponent_bound: int):
    """Yield (schema, assignment, lhs, rhs) for every assignment with all
    variables in [0, exponent_bound] satisfying the side conditions."""
    n = system.parameter_n
    for schema in system.schemas:
        variables = schema.variables
        for values in itertools.product(range(exponent_bound + 1), repeat=len(variables)):
            assignment = dict(zip(variables, values))
            if not all(c.holds(assignment, n) for c in schema.conditions):
                continue
            lhs, rhs = instantiate(schema, assignment, n)
            yield schema, assignment, lhs, rhs


@dataclass
class TerminationReport:
    checked: int
    shortlex_violations: list
    lex_violations: list
    per_rule: dict  # rule id -> {"instances", "shortlex_ok", "lex_ok"}

    @property
    def all_shortlex_decreasing(self) -> bool:
        return not self.shortlex_violations


def _lex_key(w: str, order: str) -> tuple:
    rank = {ch: i for i, ch in enumerate(order)}
    return tuple(rank[ch] for ch in w)


def check_termination_order(system: RewriteSystem, exponent_bound: int) -> TerminationReport:
    """Check every bounded instance decreases shortlex; also record whether the
    plain lexicographic order decreases (it does not for all preset rules,
    which is why shortlex is the adopted measure)."""
    checked = 0
    shortlex_violations = []
    lex_violations = []
    per_rule: dict[str, dict] = {}
    for schema, assignment, lhs, rhs in instantiate_all(system, exponent_bound):
        checked += 1
        stats = per_rule.setdefault(schema.id, {"instances": 0, "shortlex_ok": True, "lex_ok": True})
        stats["instances"] += 1
        if not shortlex_key(rhs, system.order) < shortlex_key(lhs, system.order):
            stats["shortlex_ok"] = False
            shortlex_violations.append((schema.id, dict(assignment), lhs, rhs))
        if not _lex_key(rhs, system.order) < _lex_key(lhs, system.order):
            stats["lex_ok"] = False
            lex_violations.append((schema.id, dict(assignment), lhs, rhs))
    return TerminationReport(checked, shortlex_violations, lex_violations, per_rule)


@dataclass
class CriticalPair:
    joint: str
    left_result: str
    right_result: str
    rule1: tuple  # (rule id, assignment, position in joint)
    rule2: tuple
    resolved_to: str | None = None


def critical_pairs(system: RewriteSystem, exponent_bound: int) -> list[CriticalPair]:
    """All overlaps (shared letters, including containment) between bounded
    instances of the left-hand sides, each with its two one-step results."""
    rules = [(schema.id, assignment, lhs, rhs)
             for schema, assignment, lhs, rhs in instantiate_all(system, exponent_bound)]
    seen = set()
    out: list[CriticalPair] = []
    for id1, asg1, l1, r1 in rules:
        for id2, asg2, l2, r2 in rules:
            n1, n2 = len(l1), len(l2)
            for shift in range(-(n2 - 1), n1):
                lo, hi = max(0, shift), min(n1, shift + n2)
                if hi <= lo:
                    continue
                if id1 == id2 and asg1 == asg2 and shift == 0:
                    continue
                if any(l1[k] != l2[k - shift] for k in range(lo, hi)):
                    continue
                start = min(0, shift)
                joint = (l2[:-shift] if shift < 0 else "") + l1 + \
                        (l2[n1 - shift:] if shift + n2 > n1 else "")
                p1, p2 = -start, shift - start
                key1 = (p1, id1, tuple(sorted(asg1.items())))
                key2 = (p2, id2, tuple(sorted(asg2.items())))
                dedup = (joint,) + tuple(sorted([key1, key2]))
                if dedup in seen:
                    continue
                seen.add(dedup)
                left = joint[:p1] + r1 + joint[p1 + n1:]
                right = joint[:p2] + r2 + joint[p2 + n2:]
                out.append(CriticalPair(joint, left, right,
                                        (id1, dict(asg1), p1), (id2, dict(asg2), p2)))
    return out


@dataclass
class ConfluenceReport:
    total: int
    resolved: int
    unresolved: list  # CriticalPairs whose results have distinct normal forms

    @property
    def locally_confluent(self) -> bool:
        return not self.unresolved


def check_local_confluence(system: RewriteSystem, exponent_bound: int,
                           step_limit: int | None = None) -> ConfluenceReport:
    pairs = critical_pairs(system, exponent_bound)
    nf_cache: dict[str, str] = {}
    def nf(w: str) -> str:
        if w not in nf_cache:
            nf_cache[w] = normal_form(system, w, step_limit=step_limit)
        return nf_cache[w]
    unresolved = []
    resolved = 0
    for cp in pairs:
        a, b = nf(cp.left_result), nf(cp.right_result)
        if a == b:
            cp.resolved_to = a
            resolved += 1
        else:
            unresolved.append(cp)
    return ConfluenceReport(total=len(pairs), resolved=resolved, unresolved=unresolved)


# ---------------------------------------------------------------------------
# JSON round-trip


def system_to_json(system: RewriteSystem) -> dict:
    return {
        "name": system.name,
        "alphabet": list(system.alphabet),
        "order": list(system.order),
        "parameter_n": system.parameter_n,
        "schemas": [
            {
                "id": s.id,
                "lhs": [{"letter": l, "exp": str(e)} for l, e in s.lhs],
                "rhs": [{"letter": l, "exp": str(e)} for l, e in s.rhs],
                "conditions": [str(c) for c in s.conditions],
            }
            for s in system.schemas
        ],
    }


def system_from_json(data: dict) -> RewriteSystem:
    schemas = []
    for i, s in enumerate(data["schemas"]):
        schemas.append(RuleSchema(
            id=s.get("id", f"r{i}"),
            lhs=tuple((a["letter"], parse_linexpr(str(a["exp"]))) for a in s["lhs"]),
            rhs=tuple((a["letter"], parse_linexpr(str(a["exp"]))) for a in s["rhs"]),
            conditions=tuple(parse_condition(c) for c in s.get("conditions", [])),
        ))
    return RewriteSystem(
        name=data.get("name", "user"),
        alphabet="".join(data["alphabet"]),
        order="".join(data["order"]),
        schemas=tuple(schemas),
        parameter_n=data.get("parameter_n"),
    )

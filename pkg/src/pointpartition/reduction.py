"""3-SAT to induced-cycle reduction on multigraphs of MG_2.

Each variable ``x_i`` contributes a gadget on ``a_i, x_i, xbar_i, b_i``: a
4-cycle ``a_i x_i b_i xbar_i`` of single edges plus a double edge
``x_i xbar_i``.  Each clause ``C_j`` contributes ``c_j, l_j1, l_j2, l_j3, d_j``:
single edges from ``c_j`` and ``d_j`` to every literal vertex, and double
edges between the literal vertices.  The gadgets are chained into a ring by
single edges, and each literal vertex gets a double edge to the variable
vertex of the opposite literal.  The ring has an induced cycle exactly when
the formula is satisfiable.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .formats import ParseError
from .graph import GraphError, MultiGraph, s_t
from .structural import (
    PerfectionCertificate,
    chi1_perfect,
    chi_t_perfect_structural,
    find_induced_long_cycle,
)

SAT_BRUTEFORCE_LIMIT = 20


@dataclass(frozen=True)
class CnfInstance:
    """3-CNF formula; literal ``+i`` is ``x_i`` and ``-i`` its negation."""

    n: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        clauses = tuple(tuple(c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        if self.n < 1:
            raise GraphError(f"need at least one variable, got n={self.n}")
        if not clauses:
            raise GraphError("need at least one clause")
        for j, c in enumerate(clauses, start=1):
            if len(c) != 3:
                raise GraphError(f"clause {j} has {len(c)} literals, expected 3")
            for lit in c:
                if lit == 0 or abs(lit) > self.n:
                    raise GraphError(f"clause {j}: literal {lit} outside +-1..{self.n}")

    @property
    def m(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        """``assignment[i-1]`` is the value of ``x_i``."""
        return all(any(assignment[abs(l) - 1] == (l > 0) for l in c) for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.n} {self.m}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfInstance:
    """Strict DIMACS CNF reader: one clause per line, exactly three literals."""
    header = None
    clauses = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if header is not None:
                raise ParseError("second header line", lineno)
            if len(fields) != 4 or fields[1] != "cnf":
                raise ParseError("header must read 'p cnf <vars> <clauses>'", lineno)
            try:
                header = (int(fields[2]), int(fields[3]))
            except ValueError:
                raise ParseError("header counts must be integers", lineno) from None
            continue
        if header is None:
            raise ParseError("clause before header", lineno)
        try:
            lits = [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"non-integer literal in {line!r}", lineno) from None
        if lits[-1] != 0:
            raise ParseError("clause must end with 0", lineno)
        lits = lits[:-1]
        if len(lits) != 3:
            raise ParseError(f"clause has {len(lits)} literals, expected 3", lineno)
        for lit in lits:
            if lit == 0 or abs(lit) > header[0]:
                raise ParseError(f"literal {lit} outside +-1..{header[0]}", lineno)
        clauses.append(tuple(lits))
    if header is None:
        raise ParseError("missing 'p cnf' header")
    if len(clauses) != header[1]:
        raise ParseError(f"header announces {header[1]} clauses, found {len(clauses)}")
    try:
        return CnfInstance(header[0], tuple(clauses))
    except GraphError as exc:
        raise ParseError(str(exc)) from None


@dataclass(frozen=True)
class ReductionMap:
    """Gadget labels of G(I) mapped to vertex ids.

    Labels: ``a<i>``, ``x<i>``, ``xbar<i>``, ``b<i>`` per variable,
    ``c<j>``, ``l<j>_<k>``, ``d<j>`` per clause, and ``s`` for the
    subdivision vertex when present.
    """

    labels: dict[str, int] = field(default_factory=dict)

    def __getitem__(self, label: str) -> int:
        return self.labels[label]

    def name_of(self, vertex: int) -> str:
        for name, v in self.labels.items():
            if v == vertex:
                return name
        raise KeyError(vertex)

    @property
    def subdivision(self) -> int | None:
        return self.labels.get("s")

    def serialize(self) -> str:
        return "".join(f"label {name} {v}\n" for name, v in self.labels.items())


def build_reduction(instance: CnfInstance, subdivide: bool = False) -> tuple[MultiGraph, ReductionMap]:
    n, m = instance.n, instance.m
    labels: dict[str, int] = {}
    for i in range(1, n + 1):
        base = 4 * (i - 1)
        labels[f"a{i}"] = base + 1
        labels[f"x{i}"] = base + 2
        labels[f"xbar{i}"] = base + 3
        labels[f"b{i}"] = base + 4
    for j in range(1, m + 1):
        base = 4 * n + 5 * (j - 1)
        labels[f"c{j}"] = base + 1
        for k in (1, 2, 3):
            labels[f"l{j}_{k}"] = base + 1 + k
        labels[f"d{j}"] = base + 5
    order = 4 * n + 5 * m
    if subdivide:
        order += 1
        labels["s"] = order

    mult: dict[tuple[int, int], int] = {}

    def join(p: str, q: str, mu: int) -> None:
        u, v = sorted((labels[p], labels[q]))
        if (u, v) in mult:
            raise AssertionError(f"pair {p}-{q} joined twice")
        mult[(u, v)] = mu

    for i in range(1, n + 1):
        join(f"a{i}", f"xbar{i}", 1)
        join(f"a{i}", f"x{i}", 1)
        join(f"x{i}", f"b{i}", 1)
        join(f"b{i}", f"xbar{i}", 1)
        join(f"x{i}", f"xbar{i}", 2)
    for j in range(1, m + 1):
        for k in (1, 2, 3):
            join(f"c{j}", f"l{j}_{k}", 1)
            join(f"l{j}_{k}", f"d{j}", 1)
        for k, k2 in ((1, 2), (2, 3), (1, 3)):
            join(f"l{j}_{k}", f"l{j}_{k2}", 2)
    for i in range(1, n):
        join(f"b{i}", f"a{i + 1}", 1)
    join(f"b{n}", "c1", 1)
    for j in range(1, m):
        join(f"d{j}", f"c{j + 1}", 1)
    if subdivide:
        join(f"d{m}", "s", 1)
        join("s", "a1", 1)
    else:
        join(f"d{m}", "a1", 1)
    for j, clause in enumerate(instance.clauses, start=1):
        for k, lit in enumerate(clause, start=1):
            # literal x_i links to xbar_i and vice versa
            target = f"xbar{lit}" if lit > 0 else f"x{-lit}"
            join(f"l{j}_{k}", target, 2)

    G = MultiGraph(order, mult)
    rmap = ReductionMap(labels)
    _check_gadgets(G, rmap, instance)
    return G, rmap


_VARIABLE_PATTERN = {
    ("a", "xbar"): 1, ("a", "x"): 1, ("x", "b"): 1, ("b", "xbar"): 1,
    ("x", "xbar"): 2, ("a", "b"): 0,
}
_CLAUSE_PATTERN = {
    ("c", "l1"): 1, ("c", "l2"): 1, ("c", "l3"): 1,
    ("l1", "d"): 1, ("l2", "d"): 1, ("l3", "d"): 1,
    ("l1", "l2"): 2, ("l2", "l3"): 2, ("l1", "l3"): 2, ("c", "d"): 0,
}


def _check_gadgets(G: MultiGraph, rmap: ReductionMap, instance: CnfInstance) -> None:
    """Re-read every gadget from the finished graph and compare with the pattern."""
    vs = sorted(rmap.labels.values())
    if vs != list(G.vertices):
        raise AssertionError("labels are not a bijection onto V(G(I))")
    for i in range(1, instance.n + 1):
        for (p, q), mu in _VARIABLE_PATTERN.items():
            if G.mu(rmap[f"{p}{i}"], rmap[f"{q}{i}"]) != mu:
                raise AssertionError(f"variable gadget {i}: pair {p}-{q} is not {mu}")
    for j in range(1, instance.m + 1):
        name = {"c": f"c{j}", "d": f"d{j}", "l1": f"l{j}_1", "l2": f"l{j}_2", "l3": f"l{j}_3"}
        for (p, q), mu in _CLAUSE_PATTERN.items():
            if G.mu(rmap[name[p]], rmap[name[q]]) != mu:
                raise AssertionError(f"clause gadget {j}: pair {p}-{q} is not {mu}")
    if G.max_multiplicity > 2:
        raise AssertionError("G(I) left MG_2")


def expected_counts(instance: CnfInstance, subdivide: bool = False) -> tuple[int, int, int]:
    """(order, adjacent pairs, total multiplicity) predicted from the gadget rules."""
    n, m = instance.n, instance.m
    order = 4 * n + 5 * m + (1 if subdivide else 0)
    connectors = (n - 1) + 1 + (m - 1) + 1 + (1 if subdivide else 0)
    pairs = 5 * n + 9 * m + connectors + 3 * m
    edges = 6 * n + 12 * m + connectors + 6 * m
    return order, pairs, edges


def sat_bruteforce(instance: CnfInstance) -> tuple[bool, ...] | None:
    """First satisfying assignment in lexicographic order (False before True), or None."""
    if instance.n > SAT_BRUTEFORCE_LIMIT:
        raise GraphError(f"brute force limited to {SAT_BRUTEFORCE_LIMIT} variables")
    for values in product((False, True), repeat=instance.n):
        if instance.satisfied_by(values):
            return values
    return None


@dataclass(frozen=True)
class ReductionReport:
    n: int
    m: int
    subdivide: bool
    order: int
    satisfiable: bool
    assignment: tuple[bool, ...] | None
    induced_cycle: tuple[int, ...] | None
    s2_perfect: bool
    s2_certificate: PerfectionCertificate
    structural: PerfectionCertificate

    @property
    def agreement(self) -> bool:
        return self.satisfiable == (self.induced_cycle is not None)

    @property
    def structural_perfect(self) -> bool:
        return self.structural.perfect

    @property
    def consistent(self) -> bool:
        """Structural verdict equals "S_2 perfect and no induced long cycle"."""
        return self.structural_perfect == (self.s2_perfect and self.induced_cycle is None)

    def summary(self) -> str:
        sat = "SAT" if self.satisfiable else "UNSAT"
        cyc = "induced cycle" if self.induced_cycle else "no induced cycle"
        return f"{sat} / {cyc} / {'AGREE' if self.agreement else 'DISAGREE'}"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "subdivide": self.subdivide,
            "order": self.order,
            "satisfiable": self.satisfiable,
            "assignment": None if self.assignment is None else [int(b) for b in self.assignment],
            "induced_cycle": None if self.induced_cycle is None else list(self.induced_cycle),
            "agreement": self.agreement,
            "s2_perfect": self.s2_perfect,
            "s2_certificate": self.s2_certificate.to_dict(),
            "structural_perfect": self.structural_perfect,
            "structural": self.structural.to_dict(),
            "consistent": self.consistent,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def verify_reduction(instance: CnfInstance, subdivide: bool = False) -> ReductionReport:
    """Run both sides of the reduction independently and report what was found."""
    G, _ = build_reduction(instance, subdivide)
    assignment = sat_bruteforce(instance)
    s2 = chi1_perfect(s_t(G, 2))
    return ReductionReport(
        n=instance.n,
        m=instance.m,
        subdivide=subdivide,
        order=G.n,
        satisfiable=assignment is not None,
        assignment=assignment,
        induced_cycle=find_induced_long_cycle(G),
        s2_perfect=s2.perfect,
        s2_certificate=s2,
        structural=chi_t_perfect_structural(G, 2),
    )


def random_instance(n: int, m: int, seed: int | None = None) -> CnfInstance:
    rng = random.Random(seed)
    clauses = tuple(
        tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(3)) for _ in range(m)
    )
    return CnfInstance(n, clauses)


def two_variable_formulas(count: int, seed: int = 0) -> list[CnfInstance]:
    """Seeded sample of 3-clause formulas over literals x1, -x1, x2, -x2."""
    lits = (1, -1, 2, -2)
    clauses = list(product(lits, repeat=3))
    total = len(clauses) ** 3
    rng = random.Random(seed)
    picks = rng.sample(range(total), min(count, total))
    out = []
    for p in picks:
        a, rest = divmod(p, len(clauses) ** 2)
        b, c = divmod(rest, len(clauses))
        out.append(CnfInstance(2, (clauses[a], clauses[b], clauses[c])))
    return out


"""CNF encoding of the coloring constraints and an embedded DPLL solver.

encode() builds a formula whose models are exactly the valid pair-class
colorings of Z/n for the target algebra: base variable i (1-based) is true
when the class {i, n-i} is colored a. Three clause groups follow the law:

  1. for every triple x + y = z of nonzero elements and every color
     pattern whose cycle class the algebra forbids, a clause of at most
     three base literals blocking that pattern;
  2. for every element z, every color it might take, and every need that
     color carries, a clause "z not that color, or one of the witnessing
     pairs is fully present", with one auxiliary variable per distinct
     witnessing conjunction (aux implies both conjunct literals);
  3. both atoms nonempty: some base variable true, some false.

Elements z and n-z share a class, so their clauses coincide and the
encoder walks class representatives. Clauses are deduplicated with
literals in a fixed order, making the output byte-stable across runs.

solve() is a plain DPLL: two watched literals per clause, unit
propagation, chronological backtracking by decision level. Models are
rechecked against every clause before being returned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

from .algebra import Algebra, Color, CycleClass, by_name, needs_of
from .group import CyclicGroup
from .verifier import Coloring, verify


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class VarMap:
    """Meaning of the variables of one encoded formula.

    Base variables 1..num_base map class {i, n-i} to color a when true;
    aux maps each auxiliary variable to the base literals it implies.
    """

    algebra: str
    n: int
    num_base: int
    aux: dict[int, tuple[int, ...]]


def _lit(n: int, e: int, color: Color) -> int:
    v = min(e, n - e)
    return v if color is Color.A else -v


def _canon(lits) -> tuple[int, ...] | None:
    """Sorted, deduplicated clause, or None for a tautology."""
    out = sorted(set(lits), key=lambda l: (abs(l), l < 0))
    for l in out:
        if -l in out:
            return None
    return tuple(out)


def encode(algebra: Algebra, n: int) -> tuple[CnfFormula, VarMap]:
    """Formula satisfiable iff the algebra has a representation over Z/n."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    m = n // 2
    clauses: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()

    def emit(cl: tuple[int, ...] | None) -> None:
        if cl is not None and cl not in seen:
            seen.add(cl)
            clauses.append(cl)

    for z in range(1, n):
        for x in range(1, n):
            y = (z - x) % n
            if y == 0 or x > y:
                continue
            for cx, cy, cz in product((Color.A, Color.B), repeat=3):
                if CycleClass.of(cx, cy, cz) not in algebra.mandatory:
                    emit(_canon((-_lit(n, x, cx), -_lit(n, y, cy), -_lit(n, z, cz))))

    aux_of: dict[tuple[int, ...], int] = {}
    next_var = m + 1
    for z in range(1, m + 1):
        for color in (Color.A, Color.B):
            head = -_lit(n, z, color)
            for c1, c2 in needs_of(algebra, color):
                options: list[tuple[int, ...]] = []
                for x in range(1, n):
                    y = (z - x) % n
                    if y == 0 or (c1 is c2 and x > y):
                        continue
                    conj = _canon((_lit(n, x, c1), _lit(n, y, c2)))
                    if conj is not None and conj not in options:
                        options.append(conj)
                disj = [head]
                fresh: list[tuple[int, tuple[int, ...]]] = []
                for conj in options:
                    t = aux_of.get(conj)
                    if t is None:
                        t = aux_of[conj] = next_var
                        next_var += 1
                        fresh.append((t, conj))
                    disj.append(t)
                emit(tuple(disj))
                for t, conj in fresh:
                    for l in conj:
                        emit((-t, l))

    emit(tuple(range(1, m + 1)))
    emit(tuple(-i for i in range(1, m + 1)))

    vm = VarMap(
        algebra=algebra.name,
        n=n,
        num_base=m,
        aux={t: conj for conj, t in aux_of.items()},
    )
    return CnfFormula(num_vars=next_var - 1, clauses=tuple(clauses)), vm


def emit_dimacs(f: CnfFormula, vm: VarMap | None = None) -> str:
    """Standard DIMACS CNF text; comments document the variable map."""
    lines = []
    if vm is not None:
        lines.append(f"c coloring of Z/{vm.n} for algebra {vm.algebra}")
        lines.append(
            f"c base vars 1..{vm.num_base}: var i true = class {{i, n-i}} colored a"
        )
        for t in sorted(vm.aux):
            conj = " ".join(str(l) for l in vm.aux[t])
            lines.append(f"c aux {t} -> {conj}")
    lines.append(f"p cnf {f.num_vars} {len(f.clauses)}")
    for cl in f.clauses:
        lines.append(" ".join(str(l) for l in cl) + " 0")
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    """Inverse of emit_dimacs; comment lines are skipped."""
    num_vars = None
    expected = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad DIMACS header: {line!r}")
            num_vars, expected = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise ValueError("clause before DIMACS header")
        for tok in line.split():
            l = int(tok)
            if l == 0:
                clauses.append(tuple(current))
                current.clear()
            else:
                current.append(l)
    if num_vars is None:
        raise ValueError("missing DIMACS header")
    if current:
        raise ValueError("unterminated clause at end of input")
    if expected is not None and expected != len(clauses):
        raise ValueError(f"header promises {expected} clauses, found {len(clauses)}")
    return CnfFormula(num_vars=num_vars, clauses=tuple(clauses))


def solve(f: CnfFormula) -> dict[int, bool] | None:
    """Model as {var: bool} if satisfiable, else None.

    DPLL: decisions pick the lowest unassigned variable, positive phase
    first; conflicts backtrack to the most recent decision and flip it.
    The returned model is checked against every input clause.
    """
    nv = f.num_vars
    db: list[list[int]] = []
    units: list[int] = []
    for cl in f.clauses:
        lits = _canon(cl)
        if lits is None:
            continue
        if not lits:
            return None
        if len(lits) == 1:
            units.append(lits[0])
        else:
            db.append(list(lits))

    assign = [0] * (nv + 1)
    watches: dict[int, list[int]] = {}
    for ci, cl in enumerate(db):
        watches.setdefault(cl[0], []).append(ci)
        watches.setdefault(cl[1], []).append(ci)

    def value(l: int) -> int:
        v = assign[abs(l)]
        if v == 0:
            return 0
        return 1 if (v > 0) == (l > 0) else -1

    trail: list[tuple[int, bool]] = []
    queue: deque[int] = deque()

    def enqueue(l: int, decision: bool) -> bool:
        val = value(l)
        if val == -1:
            return False
        if val == 0:
            assign[abs(l)] = 1 if l > 0 else -1
            trail.append((l, decision))
            queue.append(l)
        return True

    def propagate() -> bool:
        """Exhaust the queue; False on conflict."""
        while queue:
            falsified = -queue.popleft()
            ws = watches.get(falsified, [])
            i = 0
            while i < len(ws):
                ci = ws[i]
                cl = db[ci]
                if cl[0] == falsified:
                    cl[0], cl[1] = cl[1], cl[0]
                if value(cl[0]) == 1:
                    i += 1
                    continue
                for j in range(2, len(cl)):
                    if value(cl[j]) != -1:
                        cl[1], cl[j] = cl[j], cl[1]
                        watches.setdefault(cl[1], []).append(ci)
                        ws[i] = ws[-1]
                        ws.pop()
                        break
                else:
                    if not enqueue(cl[0], False):
                        queue.clear()
                        return False
                    i += 1
        return True

    for u in units:
        if not enqueue(u, False):
            return None
    if not propagate():
        return None

    while True:
        var = next((v for v in range(1, nv + 1) if assign[v] == 0), None)
        if var is None:
            model = {v: assign[v] > 0 for v in range(1, nv + 1)}
            _check_model(f, model)
            return model
        enqueue(var, True)
        while not propagate():
            flip = 0
            while trail:
                l, decision = trail.pop()
                assign[abs(l)] = 0
                if decision:
                    flip = l
                    break
            if flip == 0:
                return None
            enqueue(-flip, False)


def _check_model(f: CnfFormula, model: dict[int, bool]) -> None:
    for cl in f.clauses:
        if not any(model[abs(l)] == (l > 0) for l in cl):
            raise RuntimeError(f"solver produced a model violating clause {cl}")


def decode(model: dict[int, bool], vm: VarMap) -> Coloring:
    """Coloring read off the base variables; must verify cleanly."""
    n = vm.n
    a_set = set()
    for i in range(1, vm.num_base + 1):
        if model[i]:
            a_set |= {i, n - i}
    coloring = Coloring(CyclicGroup(n), frozenset(a_set))
    violations = verify(by_name(vm.algebra), coloring)
    if violations:
        raise RuntimeError(
            f"model decodes to an invalid coloring of Z/{n}: {violations[:3]}"
        )
    return coloring

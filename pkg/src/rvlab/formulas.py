"""CNF formulas in the restricted occurrence form the reductions consume.

Literals are DIMACS-style signed integers: +v / -v for the v-th variable,
1-based. The validated form allows at most three occurrences per variable
and clauses of size two or three; size-1 clauses must be removed by unit
propagation first and empty clauses are never valid.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field


class FormulaError(ValueError):
    """Named violation of the restricted CNF form."""


@dataclass
class CnfFormula:
    variable_count: int
    clauses: list[tuple[int, ...]]

    def __post_init__(self) -> None:
        for clause in self.clauses:
            for lit in clause:
                if lit == 0 or abs(lit) > self.variable_count:
                    raise FormulaError(f"literal {lit} out of range")


@dataclass
class OccSatInstance:
    """A validated formula plus its occurrence bookkeeping.

    occurrence_index maps (variable, ordinal in 1..3) to (clause, position);
    literal_ordinals is the inverse view used when coloring literal vertices.
    Ties inside one clause are broken left to right.
    """

    formula: CnfFormula
    occurrence_index: dict[tuple[int, int], tuple[int, int]] = field(repr=False)
    literal_ordinals: dict[tuple[int, int], int] = field(repr=False)


def parse_dimacs(text: str) -> CnfFormula:
    variable_count = None
    declared_clauses = None
    tokens: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormulaError(f"bad problem line: {line!r}")
            variable_count, declared_clauses = int(parts[2]), int(parts[3])
            continue
        try:
            tokens.extend(int(tok) for tok in line.split())
        except ValueError as exc:
            raise FormulaError(f"bad clause token in {line!r}") from exc
    if variable_count is None:
        raise FormulaError("missing 'p cnf' line")
    clauses = []
    current: list[int] = []
    for tok in tokens:
        if tok == 0:
            clauses.append(tuple(current))
            current = []
        else:
            current.append(tok)
    if current:
        raise FormulaError("last clause not 0-terminated")
    if declared_clauses is not None and len(clauses) != declared_clauses:
        raise FormulaError(
            f"header declares {declared_clauses} clauses, found {len(clauses)}")
    return CnfFormula(variable_count, clauses)


def dumps_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.variable_count} {len(f.clauses)}"]
    for clause in f.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"


def unit_propagate(f: CnfFormula) -> CnfFormula:
    """Remove size-1 clauses by forcing them, to fixpoint.

    Raises FormulaError if propagation derives an empty clause.
    """
    clauses = [tuple(dict.fromkeys(c)) for c in f.clauses]  # dedupe literals
    assigned: dict[int, bool] = {}
    while True:
        unit = next((c for c in clauses if len(c) == 1), None)
        if unit is None:
            break
        lit = unit[0]
        var, value = abs(lit), lit > 0
        if assigned.get(var, value) != value:
            raise FormulaError(f"contradiction on variable {var} during propagation")
        assigned[var] = value
        next_clauses = []
        for clause in clauses:
            if any(abs(l) == var and (l > 0) == value for l in clause):
                continue  # satisfied
            reduced = tuple(l for l in clause if abs(l) != var)
            if not reduced:
                raise FormulaError(
                    f"contradiction: clause {clause} emptied during propagation")
            next_clauses.append(reduced)
        clauses = next_clauses
    return CnfFormula(f.variable_count, clauses)


def validate_3occ(f: CnfFormula) -> OccSatInstance:
    """Check the at-most-3-occurrences / 2-or-3-literal form and index it."""
    counts: dict[int, int] = {}
    occurrence_index: dict[tuple[int, int], tuple[int, int]] = {}
    literal_ordinals: dict[tuple[int, int], int] = {}
    for ci, clause in enumerate(f.clauses):
        if len(clause) == 0:
            raise FormulaError(f"clause {ci} is empty")
        if len(clause) == 1:
            raise FormulaError(
                f"clause {ci} has a single literal; unit propagation required")
        if len(clause) > 3:
            raise FormulaError(f"clause {ci} has {len(clause)} > 3 literals")
        for pos, lit in enumerate(clause):
            var = abs(lit)
            counts[var] = counts.get(var, 0) + 1
            if counts[var] > 3:
                raise FormulaError(f"variable {var} occurs more than three times")
            occurrence_index[(var, counts[var])] = (ci, pos)
            literal_ordinals[(ci, pos)] = counts[var]
    return OccSatInstance(f, occurrence_index, literal_ordinals)


def sat_brute_force(f: CnfFormula, max_variables: int = 25) -> list[bool] | None:
    """Exhaustive truth-table search; satisfying assignment or None."""
    n = f.variable_count
    if n > max_variables:
        raise ValueError(f"{n} variables exceed brute-force limit {max_variables}")
    pos_masks = []
    neg_masks = []
    for clause in f.clauses:
        p = nmask = 0
        for lit in clause:
            if lit > 0:
                p |= 1 << (lit - 1)
            else:
                nmask |= 1 << (-lit - 1)
        pos_masks.append(p)
        neg_masks.append(nmask)
    full = (1 << n) - 1
    for a in range(1 << n):
        flipped = a ^ full
        if all(a & p or flipped & q for p, q in zip(pos_masks, neg_masks)):
            return [bool(a >> i & 1) for i in range(n)]
    return None


def random_3occ_formula(rng: random.Random, n: int, m: int,
                        all_three_literals: bool = False) -> CnfFormula:
    """Random formula with <= 3 occurrences per variable, clause sizes 2-3.

    Deals from a pool of three occurrence tokens per variable, so the
    occurrence bound holds by construction. Clauses may repeat a variable.
    """
    sizes = []
    for _ in range(m):
        sizes.append(3 if all_three_literals or rng.random() < 0.6 else 2)
    if not all_three_literals:
        i = 0
        while sum(sizes) > 3 * n and i < m:
            if sizes[i] == 3:
                sizes[i] = 2
            i += 1
    need = sum(sizes)
    if need > 3 * n:
        raise ValueError(f"{m} clauses of total size {need} need more than 3*{n} tokens")
    pool = [v for v in range(1, n + 1) for _ in range(3)]
    rng.shuffle(pool)
    clauses = []
    cursor = 0
    for size in sizes:
        chunk = pool[cursor:cursor + size]
        cursor += size
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in chunk))
    return CnfFormula(n, clauses)

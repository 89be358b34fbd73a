"""Exhaustive validation sweeps over all small orbits.

For every composition up to a given total and every class-sorted weight
over a small value set, the descent order is computed twice per orbit:
once through the tableau criterion (bulk componentwise comparison of
tableau vectors) and once through reachability over the explicit descent
graph.  The two must agree pair for pair; disagreements are collected as
counterexamples.  Optional passes replay the factorization on every
comparable pair and the witness/degeneration construction on every
non-comparable pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from ._kernels import descent_closure, dominance_matrix
from .bruhat import _descent_neighbors, _tab_vector, factorize
from .errors import VermaHomError
from .obstruction import degenerate, find_witness
from .weights import BlockWeight, Composition, simple_root_cone
from .weyl import DEFAULT_ORBIT_CAP, enumerate_orbit


class OrbitPoset:
    """Bulk structures for one orbit: elements, tableau matrix, descent graph.

    Elements are ordered by entries, so every descent swap points to a
    strictly earlier element and the descent graph is in topological order.
    """

    def __init__(self, seed: BlockWeight, cap: int = DEFAULT_ORBIT_CAP):
        self.composition = seed.composition
        self.elements = enumerate_orbit(seed, cap)
        self.size = len(self.elements)
        self.index = {w.entries: i for i, w in enumerate(self.elements)}
        vecs = [_tab_vector(w) for w in self.elements]
        width = len(vecs[0]) if vecs else 0
        self.tableau_vectors = np.array(vecs, dtype=np.int64).reshape(self.size, width)
        indptr = [0]
        indices: list[int] = []
        for i, w in enumerate(self.elements):
            for child_entries in _descent_neighbors(self.composition, w.entries):
                child = self.index[child_entries]
                assert child < i
                indices.append(child)
            indptr.append(len(indices))
        self._indptr = np.array(indptr, dtype=np.int64)
        self._indices = np.array(indices, dtype=np.int64)

    def leq_matrix(self) -> np.ndarray:
        """``out[i, j]`` iff element i is below element j (tableau criterion)."""
        return dominance_matrix(self.tableau_vectors)

    def reach_matrix(self) -> np.ndarray:
        """``out[j, i]`` iff element i is reachable from element j by descents."""
        return descent_closure(self._indptr, self._indices, self.size)

    def oracle_matrix(self) -> np.ndarray:
        """``out[i, j]`` iff element i is below element j (descent reachability)."""
        return self.reach_matrix().T.copy()


def compositions_of(n: int):
    """All ordered compositions of ``n`` with at least two parts."""

    def rec(rem):
        if rem == 0:
            yield ()
            return
        for first in range(1, rem + 1):
            for rest in rec(rem - first):
                yield (first,) + rest

    for parts in rec(n):
        if len(parts) >= 2:
            yield Composition(parts)


def antidominant_weights(comp: Composition, values: tuple[int, ...]):
    """All class-sorted weights over ``values``: one orbit representative each."""
    values = tuple(sorted(set(values)))

    def class_multisets(count):
        def rec(remaining, start):
            if remaining == 0:
                yield ()
                return
            for t in range(start, len(values)):
                for rest in rec(remaining - 1, t):
                    yield (values[t],) + rest

        yield from rec(count, 0)

    class_sizes = comp.classes
    per_class = [list(class_multisets(len(comp.class_positions[r]))) for r in class_sizes]
    for choice in product(*per_class):
        entries = [0] * comp.k
        for r, vals in zip(class_sizes, choice):
            for j, v in zip(comp.class_positions[r], vals):
                entries[j - 1] = v
        yield BlockWeight(comp, tuple(entries))


def _order_axiom_violations(leq: np.ndarray, limit: int) -> list[str]:
    """Reflexivity, antisymmetry and transitivity of a relation matrix."""
    out: list[str] = []
    m = leq.shape[0]
    if not leq.diagonal().all():
        out.append("reflexivity fails")
    sym = leq & leq.T
    np.fill_diagonal(sym, False)
    if sym.any():
        out.append("antisymmetry fails")
    packed = np.packbits(np.ascontiguousarray(leq.T), axis=1, bitorder="little")
    down = [int.from_bytes(packed[i].tobytes(), "little") for i in range(m)]
    for i in range(m):
        rest = down[i] & ~(1 << i)
        j = 0
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            if down[j] | down[i] != down[i]:
                out.append(f"transitivity fails at ({j}, {i})")
                if len(out) >= limit:
                    return out
            rest ^= low
    return out


@dataclass
class SweepReport:
    """Aggregated results of one exhaustive sweep."""

    max_n: int
    values: tuple[int, ...]
    orbit_cap: int
    compositions: int = 0
    orbits: int = 0
    elements: int = 0
    pairs: int = 0
    comparable_pairs: int = 0
    oracle_mismatches: list[dict] = field(default_factory=list)
    order_violations: list[dict] = field(default_factory=list)
    chain_failures: list[dict] = field(default_factory=list)
    witness_failures: list[dict] = field(default_factory=list)
    checked_chains: bool = False
    checked_witnesses: bool = False

    @property
    def ok(self) -> bool:
        return not (
            self.oracle_mismatches
            or self.order_violations
            or self.chain_failures
            or self.witness_failures
        )

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "values": list(self.values),
            "orbit_cap": self.orbit_cap,
            "compositions": self.compositions,
            "orbits": self.orbits,
            "elements": self.elements,
            "pairs": self.pairs,
            "comparable_pairs": self.comparable_pairs,
            "checked_chains": self.checked_chains,
            "checked_witnesses": self.checked_witnesses,
            "oracle_mismatches": self.oracle_mismatches,
            "order_violations": self.order_violations,
            "chain_failures": self.chain_failures,
            "witness_failures": self.witness_failures,
            "ok": self.ok,
        }


def _pair_label(comp: Composition, src: BlockWeight, tgt: BlockWeight) -> dict:
    return {
        "composition": list(comp.parts),
        "src": list(src.entries),
        "tgt": list(tgt.entries),
    }


def _validate_chains(poset: OrbitPoset, leq: np.ndarray, report: SweepReport, limit: int) -> None:
    elements = poset.elements
    comp = poset.composition
    rows, cols = np.nonzero(leq)
    for i, j in zip(rows.tolist(), cols.tolist()):
        src, tgt = elements[i], elements[j]
        try:
            chain = factorize(src, tgt)
        except VermaHomError as exc:
            report.chain_failures.append({**_pair_label(comp, src, tgt), "error": str(exc)})
            if len(report.chain_failures) >= limit:
                return
            continue
        cur = tgt
        ok = True
        for step in chain:
            if step.before != cur:
                ok = False
                break
            # construction already enforces equal sizes and a strict drop
            cur = step.after
        if not ok or cur != src:
            report.chain_failures.append(
                {**_pair_label(comp, src, tgt), "error": "chain does not replay"}
            )
            if len(report.chain_failures) >= limit:
                return


def _validate_witnesses(poset: OrbitPoset, leq: np.ndarray, report: SweepReport, limit: int) -> None:
    elements = poset.elements
    comp = poset.composition
    offsets = comp.offsets
    rows, cols = np.nonzero(~leq)
    for i, j in zip(rows.tolist(), cols.tolist()):
        src, tgt = elements[i], elements[j]
        try:
            wit = find_witness(src, tgt)
            pair = degenerate(tgt, src, wit)
        except VermaHomError as exc:
            report.witness_failures.append({**_pair_label(comp, src, tgt), "error": str(exc)})
            if len(report.witness_failures) >= limit:
                return
            continue
        report_cone = simple_root_cone(pair.mu_bar, pair.nu_bar)
        expected_first = offsets[wit.position - 1] + 1
        if report_cone.in_cone or report_cone.first_negative != expected_first:
            report.witness_failures.append(
                {
                    **_pair_label(comp, src, tgt),
                    "error": (
                        f"first negative prefix at {report_cone.first_negative}, "
                        f"expected {expected_first}"
                    ),
                }
            )
            if len(report.witness_failures) >= limit:
                return


def run_sweep(
    max_n: int = 7,
    values: tuple[int, ...] = (0, 1, 2, 3),
    orbit_cap: int = DEFAULT_ORBIT_CAP,
    check_chains: bool = False,
    check_witnesses: bool = False,
    failure_limit: int = 20,
) -> SweepReport:
    """Run the exhaustive sweep and aggregate counts and counterexamples."""
    report = SweepReport(max_n=max_n, values=tuple(values), orbit_cap=orbit_cap)
    report.checked_chains = check_chains
    report.checked_witnesses = check_witnesses
    for n in range(2, max_n + 1):
        for comp in compositions_of(n):
            report.compositions += 1
            for lam in antidominant_weights(comp, tuple(values)):
                poset = OrbitPoset(lam, orbit_cap)
                report.orbits += 1
                report.elements += poset.size
                report.pairs += poset.size * poset.size
                leq = poset.leq_matrix()
                oracle = poset.oracle_matrix()
                report.comparable_pairs += int(leq.sum())
                if not np.array_equal(leq, oracle):
                    for i, j in np.argwhere(leq != oracle)[: failure_limit]:
                        report.oracle_mismatches.append(
                            {
                                "composition": list(comp.parts),
                                "src": list(poset.elements[i].entries),
                                "tgt": list(poset.elements[j].entries),
                                "leq_theta": bool(leq[i, j]),
                                "leq_bruteforce": bool(oracle[i, j]),
                            }
                        )
                for message in _order_axiom_violations(leq, failure_limit):
                    report.order_violations.append(
                        {"composition": list(comp.parts), "lambda": list(lam.entries), "error": message}
                    )
                if check_chains and len(report.chain_failures) < failure_limit:
                    _validate_chains(poset, leq, report, failure_limit)
                if check_witnesses and len(report.witness_failures) < failure_limit:
                    _validate_witnesses(poset, leq, report, failure_limit)
    return report

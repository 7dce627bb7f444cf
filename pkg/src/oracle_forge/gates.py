"""Primitive gate set, the adjacent-only placement enumeration and costs.

Qubit 0 is the topmost wire and the most significant tensor factor.  A
two-qubit family contributes two orientations per adjacent pair: the
matrix as given (control on the upper wire for CNOT) and its conjugation
by SWAP (suffix "2", control on the lower wire).

Placement index convention (fixed for reproducibility):
  0                   -> the quantum wire (no-op)
  1 .. n1*m           -> one-qubit gates, gate-major then qubit
  n1*m+1 .. end       -> two-qubit families, family-major then pair,
                         (down, up) within each pair
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .linalg import as_matrix, is_unitary

WIRE = "wire"

_SQ2 = 1.0 / math.sqrt(2.0)

S_MATRIX = np.array([[1, 0], [0, 1j]], dtype=complex)
T_MATRIX = np.array([[1, 0], [0, np.exp(1j * math.pi / 4)]], dtype=complex)
H_MATRIX = np.array([[_SQ2, _SQ2], [_SQ2, -_SQ2]], dtype=complex)
CNOT_MATRIX = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)
SWAP_MATRIX = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)
# CNOT with the lower qubit as control
CNOT2_MATRIX = SWAP_MATRIX @ CNOT_MATRIX @ SWAP_MATRIX


def gate_matrix(name: str) -> np.ndarray:
    """Matrix of a built-in gate by name; the wire has no matrix."""
    table = {"S": S_MATRIX, "T": T_MATRIX, "H": H_MATRIX,
             "CNOT": CNOT_MATRIX, "CNOT2": CNOT2_MATRIX}
    if name == WIRE:
        raise ValueError("the wire contributes no matrix factor")
    if name not in table:
        raise ValueError(f"unknown gate {name!r}")
    return table[name].copy()


def flip_two_qubit(matrix: np.ndarray) -> np.ndarray:
    """The SWAP-conjugated orientation of a two-qubit gate."""
    return SWAP_MATRIX @ matrix @ SWAP_MATRIX


@dataclass(frozen=True)
class CostModel:
    one_qubit_cost: int = 1
    two_qubit_cost: int = 2

    def __post_init__(self):
        if self.one_qubit_cost < 0 or self.two_qubit_cost < 0:
            raise ValueError("gate costs must be non-negative")


@dataclass(frozen=True, eq=False)
class Gate:
    """A named primitive gate (one- or two-qubit) with its cost."""

    name: str
    matrix: np.ndarray
    cost: int

    def __post_init__(self):
        m = as_matrix(self.matrix)
        if m.shape[0] not in (2, 4):
            raise ValueError(f"gate {self.name!r}: only 2x2 or 4x4 matrices are supported")
        if not is_unitary(m, 1e-10):
            dev = np.abs(m.conj().T @ m - np.eye(m.shape[0])).max()
            raise ValueError(f"gate {self.name!r} is not unitary (max deviation {dev:.3e})")
        if self.cost < 0:
            raise ValueError(f"gate {self.name!r}: cost must be non-negative")
        object.__setattr__(self, "matrix", m)

    @property
    def arity(self) -> int:
        return 1 if self.matrix.shape[0] == 2 else 2


@dataclass(frozen=True, eq=False)
class Placement:
    """One gate applied at one position, or the wire (matrix None)."""

    name: str
    top: int
    span: int
    cost: int
    matrix: np.ndarray | None

    @property
    def is_wire(self) -> bool:
        return self.matrix is None


@dataclass(frozen=True, eq=False)
class GateSet:
    one_qubit: tuple
    two_qubit: tuple

    def __post_init__(self):
        if not self.one_qubit and not self.two_qubit:
            raise ValueError("gate set must not be empty")
        for g in self.one_qubit:
            if g.arity != 1:
                raise ValueError(f"gate {g.name!r} is not one-qubit")
        for g in self.two_qubit:
            if g.arity != 2:
                raise ValueError(f"gate {g.name!r} is not two-qubit")

    @property
    def n1(self) -> int:
        return len(self.one_qubit)

    @property
    def n2(self) -> int:
        return len(self.two_qubit)

    def cases(self, m: int) -> list[Placement]:
        """All N placements on m qubits in canonical index order."""
        if m < 1:
            raise ValueError("qubit count must be at least 1")
        out = [Placement(WIRE, 0, m, 0, None)]
        for g in self.one_qubit:
            for q in range(m):
                out.append(Placement(g.name, q, 1, g.cost, g.matrix))
        for fam in self.two_qubit:
            for p in range(m - 1):
                out.append(Placement(fam.name, p, 2, fam.cost, fam.matrix))
                out.append(Placement(fam.name + "2", p, 2, fam.cost, flip_two_qubit(fam.matrix)))
        return out

    def placement(self, name: str, top: int, m: int) -> Placement:
        """Placement by gate name and top qubit (used when importing circuits)."""
        for p in self.cases(m):
            if p.name == name and (p.is_wire or p.top == top):
                return p
        raise ValueError(f"no gate {name!r} at qubit {top} on {m} qubits")


def case_count(m: int, gs: GateSet) -> int:
    """N = n1*m + 2*n2*(m-1) + 1 placements on m qubits, wire included."""
    if m < 1:
        raise ValueError("qubit count must be at least 1")
    return gs.n1 * m + 2 * gs.n2 * (m - 1) + 1


def case_from_index(idx: int, m: int, gs: GateSet) -> Placement:
    cases = gs.cases(m)
    if not 0 <= idx < len(cases):
        raise ValueError(f"case index {idx} out of range [0, {len(cases)})")
    return cases[idx]


def placement_cost(p: Placement) -> int:
    return p.cost


def default_gate_set(cost_model: CostModel = CostModel()) -> GateSet:
    """S, T, H and adjacent CNOT (both orientations)."""
    c1, c2 = cost_model.one_qubit_cost, cost_model.two_qubit_cost
    return GateSet(
        one_qubit=(
            Gate("S", S_MATRIX, c1),
            Gate("T", T_MATRIX, c1),
            Gate("H", H_MATRIX, c1),
        ),
        two_qubit=(Gate("CNOT", CNOT_MATRIX, c2),),
    )


def extend_gate_set(gs: GateSet, path) -> GateSet:
    """Append user gates from a JSON file of {name, arity, cost, matrix} entries.

    Matrices are given as nested [re, im] pairs and validated for
    unitarity on load.  Two-qubit entries are treated as families and
    contribute both orientations.
    """
    with open(path) as f:
        entries = json.load(f)
    one = list(gs.one_qubit)
    two = list(gs.two_qubit)
    for e in entries:
        mat = np.array([[complex(re, im) for (re, im) in row] for row in e["matrix"]])
        g = Gate(e["name"], mat, int(e["cost"]))
        if g.arity != int(e["arity"]):
            raise ValueError(f"gate {g.name!r}: declared arity {e['arity']} does not match matrix size")
        (one if g.arity == 1 else two).append(g)
    return GateSet(one_qubit=tuple(one), two_qubit=tuple(two))

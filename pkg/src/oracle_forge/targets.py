"""Built-in goal unitaries and goal-file I/O.

The entangling goals are defined as the unitaries of their optimal
reference circuits (Bell / GHZ state preparation), composed from exact
gate matrices.
"""
from __future__ import annotations

import json

import numpy as np

from .evaluate import GoalSpec
from .gates import CNOT_MATRIX, H_MATRIX, SWAP_MATRIX
from .linalg import identity, is_unitary, kron


def _swap() -> GoalSpec:
    return GoalSpec(2, SWAP_MATRIX.copy(), optimal_cost=6, name="swap")


def _entangle2() -> GoalSpec:
    g = CNOT_MATRIX @ kron(H_MATRIX, identity(2))
    return GoalSpec(2, g, optimal_cost=3, name="entangle2")


def _entangle3() -> GoalSpec:
    i2 = identity(2)
    g = kron(i2, CNOT_MATRIX) @ kron(CNOT_MATRIX, i2) @ kron(H_MATRIX, identity(4))
    return GoalSpec(3, g, optimal_cost=5, name="entangle3")


def _controlled_s() -> GoalSpec:
    return GoalSpec(2, np.diag([1, 1, 1, 1j]).astype(complex), optimal_cost=7, name="controlled_s")


_BUILTINS = {
    "swap": _swap,
    "entangle2": _entangle2,
    "entangle3": _entangle3,
    "controlled_s": _controlled_s,
}

BUILTIN_NAMES = tuple(sorted(_BUILTINS))


def builtin(name: str) -> GoalSpec:
    """Built-in benchmark goal by name."""
    try:
        return _BUILTINS[name]()
    except KeyError:
        raise ValueError(
            f"unknown goal {name!r}; available: {', '.join(BUILTIN_NAMES)}"
        ) from None


def save_goal(goal: GoalSpec, path) -> None:
    data = {
        "qubits": goal.num_qubits,
        "matrix": [[[z.real, z.imag] for z in row] for row in goal.matrix],
    }
    if goal.optimal_cost is not None:
        data["optimal_cost"] = goal.optimal_cost
    if goal.name:
        data["name"] = goal.name
    with open(path, "w") as f:
        json.dump(data, f)
        f.write("\n")


def load_goal(path) -> GoalSpec:
    """Load a goal file, rejecting non-unitary or non-2^m matrices."""
    with open(path) as f:
        data = json.load(f)
    mat = np.array([[complex(re, im) for (re, im) in row] for row in data["matrix"]])
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"goal matrix must be square, got shape {mat.shape}")
    dim = mat.shape[0]
    m = int(data.get("qubits", dim.bit_length() - 1))
    if dim < 2 or dim & (dim - 1) or dim != 1 << m:
        raise ValueError(f"goal dimension {dim} is not 2^qubits (qubits={m})")
    if not is_unitary(mat, 1e-8):
        dev = np.abs(mat.conj().T @ mat - np.eye(dim)).max()
        raise ValueError(f"goal matrix is not unitary: max |U^dag U - I| = {dev:.3e}")
    opt = data.get("optimal_cost")
    return GoalSpec(m, mat, optimal_cost=None if opt is None else int(opt),
                    name=data.get("name", ""))

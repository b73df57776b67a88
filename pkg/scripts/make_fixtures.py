"""Regenerate the JSON fixtures shipped in src/alia/fixtures."""

import json
import random
from fractions import Fraction
from pathlib import Path

from alia import io
from alia.algebra import AlgebraSC
from alia.bialgebra import Comultiplication, coadjoint_matched_pair, delta_from_dual_algebra
from alia.quadratic import quadratic_from_frobenius, BilinearForm
from alia.representations import adjoint_rep, Representation

OUT = Path(__file__).resolve().parent.parent / "src" / "alia" / "fixtures"
ALL = {0: 1, 1: 1, 2: 1}


def save(name, obj):
    (OUT / name).write_text(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def mat(m):
    return [[str(Fraction(x)) for x in row] for row in m]


alia3 = AlgebraSC.from_table(
    3,
    {(0, 1): {0: 1}, (0, 2): {0: 1}, (1, 0): {1: 1}, (2, 0): {2: 1},
     (0, 0): ALL, (1, 1): ALL, (2, 2): ALL, (1, 2): ALL, (2, 1): ALL},
)
failing = AlgebraSC.from_table(3, {(0, 0): {0: 1}, (1, 2): {0: 1}})
cross = AlgebraSC.from_table(
    3, {(0, 1): {2: 1}, (1, 0): {2: -1}, (1, 2): {0: 1}, (2, 1): {0: -1}, (2, 0): {1: 1}, (0, 2): {1: -1}}
)
symmetric = AlgebraSC.from_table(3, {(i, j): {0: 1} for i in range(3) for j in range(3)})
t3 = AlgebraSC.from_table(3, {(i, j): {i + j: 1} for i in range(3) for j in range(3) if i + j <= 2})
t2 = AlgebraSC.from_table(2, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}})

OUT.mkdir(exist_ok=True)
save("alia3.json", io.dump_algebra(alia3))
save("failing_3dim.json", io.dump_algebra(failing))
save("cross_product.json", io.dump_algebra(cross))
save("symmetric_3dim.json", io.dump_algebra(symmetric))
save("truncated_t2.json", io.dump_algebra(t2))

bialg = Comultiplication.from_terms(3, {0: {(0, 0): 1}})
save("bialgebra_e1.json", io.dump_bialgebra(alia3, bialg))
for name, (i, j, k) in (("a", (1, 0, 1)), ("b", (2, 2, 2)), ("c", (0, 1, 0))):
    d = Comultiplication.from_terms(3, {i: {(j, k): 1}})
    save(f"non_bialgebra_{name}.json", io.dump_bialgebra(alia3, d))
save("failing_coalgebra.json", io.dump_bialgebra(alia3, delta_from_dual_algebra(failing)))

adj = adjoint_rep(alia3)
save("adjoint_rep_alia3.json", io.dump_representation(adj))
bad = [list(map(list, m)) for m in adj.r_mats]
bad[1][0][0] += 1
save("corrupted_rep_alia3.json", io.dump_representation(Representation(alia3, 3, adj.l_mats, bad)))
save("matched_pair_e1.json", io.dump_matched_pair(coadjoint_matched_pair(alia3, bialg)))

gram = [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
form = io.dump_algebra(t3)
form["gram"] = mat(gram)
save("truncated_t3_form.json", form)
rng = random.Random(7)
f = [[Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3)] for _ in range(3)]
bracket, _ = quadratic_from_frobenius(t3, BilinearForm(t3.field, 3, gram), f)
q = io.dump_algebra(bracket)
q["gram"] = mat(gram)
q["f"] = mat(f)
save("quadratic_t3.json", q)
nonq = io.dump_algebra(alia3)
nonq["gram"] = mat(gram)
save("alia3_form.json", nonq)

rng = random.Random(11)
P = [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(2)] for _ in range(2)]
Q = [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(2)] for _ in range(2)]
save("frobenius_P_t2.json", {"matrix": mat(P)})
save("frobenius_Qstar_t2.json", {"matrix": mat(Q)})

save("swap_reflection.json", {"field": "rational", "nvars": 3, "matrix": [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "1"]]})
save("identity_reflection.json", {"field": "rational", "nvars": 3, "matrix": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]})
save("zeta3_reflection.json", {"field": "cyclotomic:3", "nvars": 3, "matrix": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "[0,1;3]"]]})

from alia.bialgebra import double_construct  # noqa: E402

save("double_e1.json", io.dump_manin(double_construct(alia3, bialg)))
a = Comultiplication.from_terms(3, {1: {(0, 1): 1}})
save("double_non_bialgebra_a.json", io.dump_manin(double_construct(alia3, a)))

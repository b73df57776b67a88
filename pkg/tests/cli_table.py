"""Invocations of every verb on the shipped fixtures, with expected exit status."""

from conftest import fixture_path as fx

EYE3 = "[[2,0,0],[0,2,0],[0,0,2]]"

CASES = [
    (["check-alia", fx("alia3.json")], 0),
    (["check-alia", fx("failing_3dim.json")], 1),
    (["check-alia", "--side", "right", fx("alia3.json")], 1),
    (["classify", fx("alia3.json"), "--eval", "[1,0,0]", "[0,1,0]", "--lie-triple", "alia"], 0),
    (["classify", fx("failing_3dim.json"), "--lie-triple", "alia"], 1),
    (["check-rep", fx("adjoint_rep_alia3.json")], 0),
    (["check-rep", fx("corrupted_rep_alia3.json")], 1),
    (["check-rep", fx("alia3.json"), "--adjoint", "--dual"], 0),
    (["check-rep", fx("adjoint_rep_alia3.json"), "--equiv", fx("adjoint_rep_alia3.json"), "--phi", EYE3], 0),
    (["semidirect", fx("adjoint_rep_alia3.json")], 0),
    (["semidirect", fx("corrupted_rep_alia3.json")], 1),
    (["check-matched-pair", fx("matched_pair_e1.json")], 0),
    (["check-quadratic", fx("quadratic_t3.json")], 0),
    (["check-quadratic", fx("alia3_form.json")], 1),
    (["frobenius-bracket", fx("truncated_t3_form.json"), "--f", "[[1,2,0],[0,1,3],[1,0,0]]"], 0),
    (["frobenius-bracket", fx("truncated_t2.json"), "--f", "[[1,2],[0,1]]", "--g", "[[0,1],[1,0]]"], 0),
    (["frobenius-bracket", fx("truncated_t2.json"), "--P", "@" + fx("frobenius_P_t2.json"),
      "--Qstar", "@" + fx("frobenius_Qstar_t2.json")], 0),
    (["frobenius-bracket", fx("alia3_form.json"), "--f", "[[1,0,0],[0,1,0],[0,0,1]]"], 1),
    (["check-coalgebra", fx("bialgebra_e1.json")], 0),
    (["check-coalgebra", fx("failing_coalgebra.json")], 1),
    (["check-bialgebra", fx("bialgebra_e1.json")], 0),
    (["check-bialgebra", fx("non_bialgebra_a.json")], 1),
    (["double", fx("bialgebra_e1.json")], 0),
    (["double", fx("failing_coalgebra.json")], 1),
    (["check-manin", fx("double_e1.json")], 0),
    (["check-manin", fx("double_non_bialgebra_a.json")], 1),
    (["check-manin", fx("bialgebra_e1.json")], 2),
    (["reflect", fx("swap_reflection.json"), "--dual"], 0),
    (["reflect", fx("identity_reflection.json")], 1),
    (["reflect", fx("zeta3_reflection.json"), "--max-order", "2"], 1),
    (["derive", fx("swap_reflection.json"), "--poly", "x2^4", "--apply"], 0),
    (["derive", fx("identity_reflection.json"), "--poly", "x1"], 1),
    (["poly-bracket", fx("swap_reflection.json"), "--f", "x1", "--g", "x2"], 0),
    (["poly-bracket", fx("swap_reflection.json"), "--f", "x1", "--g", "x2", "--h", "x3", "--variant", "intro"], 0),
    (["invariant", fx("swap_reflection.json"), "--poly", "x1*x2 + x3"], 0),
    (["invariant", fx("swap_reflection.json"), "--poly", "x1"], 1),
    (["--field", "cyclotomic:3", "check-alia", fx("alia3.json")], 0),
    (["check-alia", fx("missing.json")], 2),
    (["derive", fx("swap_reflection.json"), "--poly", "x1 + x4"], 2),
    (["frobenius-bracket", fx("truncated_t2.json")], 2),
    (["--field", "reals", "check-alia", fx("alia3.json")], 2),
    (["no-such-verb"], 2),
]

"""
Acceptance criteria, each checked exactly and reported as one PASS/FAIL
line (shown with ``-s`` and in the terminal summary).
"""

import subprocess
import sys
import time
from itertools import product

import sympy

from conftest import GENUINE, instance, note_acceptance, record_acceptance, system
from cellular_jm.combinatorics import (
    ak_distinctness_case_analysis,
    content_sequence_ak,
    content_sequence_group,
    enumerate_multipartitions,
    enumerate_partitions,
    initial_tableau,
    lemma_lmp_check,
)
from cellular_jm.cellular_core import verify_cellularity, verify_jm_axioms, verify_separation
from cellular_jm.center_theory import (
    NoSeparatingFamily,
    compute_center,
    eval_sympoly_at_contents,
    eval_sympoly_at_elements,
    lemma_lmjm1_check,
    lemma_lmjm2_triangularize,
    main_theorem_check,
    standard_polys,
    sym_span,
)
from cellular_jm.concrete_algebras import (
    AKParams,
    build_group_algebra,
    build_hecke_typeA,
    comparable_counterexample_datum,
    separation_polynomial_nonzero,
)
from cellular_jm.exact_field import rank, subspace_equal
from cellular_jm.seminormal import verify_seminormal_theorems

AK_SMALL = ["AK12", "AK22", "AK32"]


def test_criterion_01_cellularity_and_jm():
    results = []
    builders = {"S2": lambda: build_group_algebra(2), "S3": lambda: build_group_algebra(3),
                "S4": lambda: build_group_algebra(4), "H3": lambda: build_hecke_typeA(3, 2)}
    for name, build in builders.items():
        # built fresh so the timing covers construction too
        start = time.perf_counter()
        inst = build()
        cell = verify_cellularity(inst.algebra, inst.generators)
        jm = verify_jm_axioms(inst.algebra, inst.L, inst.contents)
        elapsed = time.perf_counter() - start
        results.append((name, cell.failure_count == 0 and jm.failure_count == 0, elapsed))
    ok = all(passed and elapsed < 60 for _, passed, elapsed in results)
    record_acceptance(1, ok, ", ".join("%s %.1fs" % (n, e) for n, _, e in results))
    assert ok, results


def test_criterion_01_stretch_s5():
    start = time.perf_counter()
    inst = build_group_algebra(5)
    cell = verify_cellularity(inst.algebra, inst.generators)
    jm = verify_jm_axioms(inst.algebra, inst.L, inst.contents)
    elapsed = time.perf_counter() - start
    ok = cell.passed and jm.passed and elapsed < 15 * 60
    record_acceptance(1, ok, "stretch S5 dim 120, %.1fs" % elapsed)
    assert ok


def test_criterion_02_separation():
    names = ["S2", "S3", "S4", "H3"] + AK_SMALL
    genuine = all(verify_separation(instance(n).contents, instance(n).algebra.datum)[0]
                  for n in names)
    ce = instance("CE")
    vacuous = verify_separation(ce.contents, ce.algebra.datum) == (True, None)
    neg, witness = verify_separation(ce.contents, comparable_counterexample_datum(ce.algebra.datum))
    ok = genuine and vacuous and not neg and witness is not None
    record_acceptance(2, ok, "negative control witness %s" % (witness,))
    assert ok


def test_criterion_03_seminormal_suite():
    failures = {}
    for name in GENUINE:
        inst = instance(name)
        sys_ = system(name)
        rep = verify_seminormal_theorems(inst.algebra, inst.L, inst.contents, sys_)
        gammas_ok = len(sys_.gamma) == len(inst.algebra.datum.all_tableaux()) and \
            all(g != 0 for g in sys_.gamma.values())
        if not rep.passed or sys_.problems or not gammas_ok:
            failures[name] = rep.failures + sys_.problems
    ok = not failures
    record_acceptance(3, ok, "instances " + ",".join(GENUINE))
    # the counterexample has L = 0, so both F_T are the identity
    ce = instance("CE")
    rep = verify_seminormal_theorems(ce.algebra, ce.L, ce.contents, system("CE"))
    axioms = sorted({f["axiom"] for f in rep.failures})
    note_acceptance(3, "counterexample excluded, F_T = 1 there; failing identities: %s"
                    % ", ".join(axioms))
    assert ok, failures


def test_criterion_04_center_dimensions():
    found = {}
    for name in ["S2", "S3", "S4", "CE"]:
        A = instance(name).algebra
        basis = A.basis()
        rows = []
        for b in basis:
            comms = [(e * b - b * e).coeffs for e in basis]
            for k in range(A.dim):
                rows.append([comms[i][k] for i in range(A.dim)])
        oracle = A.dim - sympy.Matrix(rows).rank()
        found[name] = (len(compute_center(A)), oracle)
    expected = {"S2": 2, "S3": 3, "S4": 5, "CE": 2}
    ok = all(found[n] == (d, d) for n, d in expected.items())
    ok = ok and all(found["S%d" % n][0] == len(enumerate_partitions(n)) for n in (2, 3, 4))
    record_acceptance(4, ok, ", ".join("%s=%d" % (n, d) for n, (d, _) in found.items()))
    assert ok, found


def test_criterion_05_main_theorem():
    outcomes = {}
    for name in ["S2", "S3", "S4", "H3"] + AK_SMALL + ["CE"]:
        inst = instance(name)
        rep = main_theorem_check(inst.algebra, inst.L, inst.contents)
        literal = subspace_equal([z.coeffs for z in compute_center(inst.algebra)],
                                 [z.coeffs for z in sym_span(inst.algebra, inst.L)])
        outcomes[name] = (rep.condition_one, rep.condition_two, literal)
    ok = all(v == (True, True, True) for n, v in outcomes.items() if n != "CE")
    ok = ok and outcomes["CE"] == (False, False, False)
    record_acceptance(5, ok, "counterexample both false" if outcomes["CE"][:2] == (False, False)
                      else "counterexample %s" % (outcomes["CE"],))
    assert ok, outcomes


def test_criterion_06_ariki_koike_criterion():
    nonzero, factors = separation_polynomial_nonzero(AKParams(2, 2, 2, (1, 7)))
    labels = [label for label, _ in factors]
    expected = ["[1]_q", "[2]_q", "q^-1*u_1-u_2", "q^0*u_1-u_2", "q^1*u_1-u_2"]
    ok = nonzero and labels == expected and all(v != 0 for _, v in factors)
    cases = {}
    for n in (1, 2, 3):
        for m in (1, 2):
            u = (1, 7)[:m]
            cells = enumerate_multipartitions(n, m)
            for a in cells:
                for b in cells:
                    if a == b:
                        continue
                    distinct, case, _ = ak_distinctness_case_analysis(a, b, 2, u)
                    brute = sorted(content_sequence_ak(initial_tableau(a), 2, u)) != \
                        sorted(content_sequence_ak(initial_tableau(b), 2, u))
                    ok = ok and distinct == brute and case in ("case1", "case2")
                    cases[case] = cases.get(case, 0) + 1
    record_acceptance(6, ok, "firing cases %s" % sorted(cases.items()))
    assert ok


def test_criterion_07_residue_multisets():
    start = time.perf_counter()
    ok = True
    pairs = 0
    for n in range(1, 9):
        parts = enumerate_partitions(n)
        for a in parts:
            for b in parts:
                pairs += 1
                ok = ok and lemma_lmp_check(a, b) == (a == b)
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 10
    record_acceptance(7, ok, "%d pairs in %.2fs" % (pairs, elapsed))
    assert ok


def test_criterion_08_lemmas():
    ok = True
    count = 0
    for length in (1, 2, 3):
        vecs = list(product(range(-2, 3), repeat=length))
        for x in vecs:
            for y in vecs:
                count += 1
                holds, k = lemma_lmjm1_check(x, y)
                same = sorted(x) == sorted(y)
                ok = ok and holds == same and (k == 1 if holds else k is None)
    for n in (3, 4):
        vecs = [content_sequence_group(initial_tableau(lam)) for lam in enumerate_partitions(n)]
        w = lemma_lmjm2_triangularize(vecs)
        upper = all(w.matrix[r][c] == 0 for r in range(len(vecs)) for c in range(r))
        evaluates = all(w.matrix[r][c] == w.polys[r].at_contents(vecs[c])
                        for r in range(len(vecs)) for c in range(len(vecs)))
        ok = ok and upper and evaluates and w.determinant != 0 and \
            w.determinant == w.original_determinant and rank(w.matrix) == len(vecs)
    try:
        lemma_lmjm2_triangularize([[0, 1, 2], [2, 1, 0]])
        ok = False
    except NoSeparatingFamily:
        pass
    record_acceptance(8, ok, "%d vector pairs; S3, S4 witnesses; duplicate error path" % count)
    assert ok


def test_criterion_09_proof_identity():
    bad = []
    names = GENUINE + ["AK12", "CE"]
    for name in names:
        inst = instance(name)
        sys_ = system(name)
        A = inst.algebra
        for pname, p in standard_polys().items():
            lhs = eval_sympoly_at_elements(p, inst.L, A)
            rhs = A.zero()
            for lam in A.datum.cells:
                c = inst.contents[A.datum.tableaux[lam][0]]
                rhs = rhs + sys_.Flambda[lam] * eval_sympoly_at_contents(p, c)
            if lhs != rhs:
                bad.append((name, pname))
    ok = not bad
    record_acceptance(9, ok, "%d instances x 4 polynomials" % len(names))
    assert ok, bad


def test_criterion_10_determinism(tmp_path):
    ok = True
    configs = [
        ["symmetric-group", "--n", "3"],
        ["ariki-koike-model", "--n", "2", "--m", "2"],
        ["counterexample"],
    ]
    for i, cfg in enumerate(configs):
        outputs = []
        for run in range(2):
            path = tmp_path / ("r%d_%d.json" % (i, run))
            subprocess.run([sys.executable, "-m", "cellular_jm", "verify", *cfg,
                            "--json", str(path)], check=False, capture_output=True)
            outputs.append(path.read_bytes())
        ok = ok and outputs[0] == outputs[1] and len(outputs[0]) > 0
    record_acceptance(10, ok, "%d configs run twice" % len(configs))
    assert ok

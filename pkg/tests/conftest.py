import functools
from math import factorial, prod

import pytest

from cellular_jm.concrete_algebras import (
    build_ak_seminormal,
    build_counterexample_pair,
    build_group_algebra,
    build_hecke_typeA,
    find_valid_params,
)
from cellular_jm.seminormal import build_seminormal_system

ACCEPTANCE_LINES = []


def hook_count(shape):
    """Number of standard tableaux by the hook length formula."""
    n = sum(shape)
    conj = [sum(1 for r in shape if r > c) for c in range(shape[0])] if shape else []
    hooks = [shape[r] - c + conj[c] - r - 1 for r in range(len(shape)) for c in range(shape[r])]
    return factorial(n) // prod(hooks)


@functools.lru_cache(maxsize=None)
def instance(name):
    """Built instances keyed by a short name, shared across test modules."""
    if name.startswith("S"):
        return build_group_algebra(int(name[1:]))
    if name == "H3":
        return build_hecke_typeA(3, 2)
    if name.startswith("AK"):
        n, m = int(name[2]), int(name[3])
        return build_ak_seminormal(find_valid_params(n, m))
    if name == "CE":
        return build_counterexample_pair()
    raise KeyError(name)


@functools.lru_cache(maxsize=None)
def system(name):
    inst = instance(name)
    return build_seminormal_system(inst.algebra, inst.L, inst.contents, strict=False)


GENUINE = ["S2", "S3", "S4", "H3", "AK22", "AK32"]
ALL = GENUINE + ["CE"]


@pytest.fixture
def inst():
    return instance


def record_acceptance(criterion, ok, detail=""):
    line = "criterion %2d: %s%s" % (criterion, "PASS" if ok else "FAIL",
                                    "  (%s)" % detail if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)


def note_acceptance(criterion, text):
    line = "criterion %2d: note: %s" % (criterion, text)
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

"""Smoke tests for the _acampo extension module."""

import json
import os
import sys

import _acampo as ac


def fixture(name):
    root = os.environ.get("ACAMPO_FIXTURES")
    if root is None:
        root = os.path.join(os.path.dirname(__file__), "..", "..", "fixtures")
    with open(os.path.join(root, name)) as f:
        return f.read()


def test_smith_normal_form():
    sf = ac.smith_normal_form([[2, 4], [6, 8]])
    assert sf["invariant_factors"] == [2, 4]
    # U*A*V = D spot check through the returned matrices
    U, D, V = sf["U"], sf["D"], sf["V"]
    A = [[2, 4], [6, 8]]
    UA = [[sum(U[i][k] * A[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    UAV = [[sum(UA[i][k] * V[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    assert UAV == D


def test_quotients():
    assert ac.subgroup_quotient_order([[1, -1, 1, 0, 0, 0]], 6, 5) == 5
    vecs = ac.enumerate_quotient([[1, 0]], 2, 2)
    assert sorted(vecs) == [(0, 0), (1, 0)]
    kernel, image = ac.kernel_of_hom_on_subgroup(
        [[1, -1, 0], [0, 1, -1]], [[0, 0, 0], [0, 0, 0], [0, 0, 0]], 5
    )
    assert (kernel, image) == (25, 1)


def test_semigroup():
    sd = ac.semigroup_and_delta(4, [6, 7])
    assert sd["generators"] == [4, 6, 13]
    assert sd["delta"] == 8


def test_gl4_pipeline():
    germ = fixture("gl4.germ.json")
    divide = fixture("gl4.divide.json")

    inv = json.loads(ac.germ_invariants(germ))
    assert (inv["r"], inv["delta"], inv["mu"]) == (4, 6, 9)

    val = json.loads(ac.validate_divide(germ, divide))
    assert val["pass"]

    classes = json.loads(ac.atomic_classes(germ, divide))
    assert [c["coefficients"] for c in classes["classes"]] == [
        [1, -1, 1, 0, 0, 0],
        [-1, 0, 0, 1, -1, 0],
        [0, 0, -1, 0, 1, 1],
        [0, 1, 0, -1, 0, -1],
    ]

    dec = json.loads(ac.decompose(germ, divide, 2))
    mains = [t for t in dec["terms"] if t["kind"] == "main"]
    assert len(mains) == 13
    assert dec["consistency_pass"]

    lim = json.loads(ac.homology_limit_report(germ, divide))
    assert lim["max_degree"] == 12


def test_generators():
    lines = json.loads(ac.generate_line_arrangement_divide(4))
    assert len(lines["divide"]["double_points"]) == 6
    grid = json.loads(ac.generate_grid_divide(2, 3))
    assert len(grid["divide"]["double_points"]) == 1


def test_cli_determinism():
    root = os.environ.get("ACAMPO_FIXTURES")
    if root is None:
        root = os.path.join(os.path.dirname(__file__), "..", "..", "fixtures")
    germ = os.path.join(root, "gl4.germ.json")
    divide = os.path.join(root, "gl4.divide.json")
    args = ["decompose", "--germ", germ, "--divide", divide, "--n", "2"]
    first = ac.run_cli(args)
    second = ac.run_cli(args)
    assert first == second
    assert first[0] == 0


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print("ok", t.__name__)
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())

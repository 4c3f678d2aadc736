"""Python smoke tests: drive the extension end to end and check the CLI's
reproducibility guarantees. Run under ctest or pytest with MUBKIT_CLI and
PYTHONPATH set by the build."""

import json
import math
import os
import subprocess
import sys

import _mubkit as mk

CLI = os.environ.get("MUBKIT_CLI", "")


def approx(a, b, tol=1e-9):
    return abs(a - b) < tol


def test_field_arithmetic():
    f = mk.GfSpec(3, 3, [1, 2, 2])
    assert f.N == 27
    assert f.mul(3, 9) == 25
    assert f.inv(3) == 13
    assert f.dual_gens == [1, 12, 3]
    ok, detail = f.verify_axioms()
    assert ok, detail


def test_mub_exactness_and_protocols():
    mub = mk.build_mub(2, 2)
    ok, witness = mub.verify_exact()
    assert ok, witness
    b1 = mub.basis(1)
    assert len(b1) == 4
    # column norms 1
    for c in range(4):
        assert approx(sum(abs(b1[r][c]) ** 2 for r in range(4)), 1.0, 1e-12)

    f = mk.GfSpec(3, 1)
    assert mk.dense_coding(f, 1, 2)[:2] == (1, 2)
    psi = [1.0, 0.0, 0.0]
    branches = mk.teleport(f, psi)
    assert len(branches) == 9
    for _, _, p, fid in branches:
        assert approx(p, 1 / 9) and approx(fid, 1.0)


def test_meanking_and_wigner():
    mub = mk.build_mub(2, 2)
    rep = mk.mk_protocol(mub)
    assert rep["success_rate"] == 1.0
    f = mk.GfSpec(2, 2)
    grids = mk.mk_grids(f)
    assert grids[2][2][1] == 2
    cr = mk.wigner_criteria(mk.build_mub(3, 1))
    assert cr["w4_covariance_dev"] < 1e-10
    assert cr["w6_applicable"] and cr["w6_parity_dev"] < 1e-10


def test_hadamard_and_search():
    tao = mk.hadamard("tao_s6")
    assert tao.is_hadamard() and mk.defect(tao) == 0
    f6 = mk.hadamard("F6", a=0.0, b=0.0)
    assert mk.defect(f6) == 4
    verdict, _ = mk.equivalent(tao, f6)
    assert verdict == "inequivalent"
    census = mk.unbiased_census(mk.hadamard("fourier", n=5), restarts=20000, seed=7)
    assert census["Nv"] == 20 and census["saturated"]
    g_str, g_val, g_zero = mk.g_exact(14)
    want = (math.sqrt(7) - 1) * (math.sqrt(2) + 1 - math.sqrt(7)) / (2 + math.sqrt(2))
    assert approx(g_val, want, 1e-12) and not g_zero
    assert mk.is_prime_via_g(9973)


def test_ring_subgroups():
    rep = mk.ring_subgroups(6)
    assert len(rep["generators"]) == 12
    assert rep["clique_number"] == 3


def test_cli_determinism_and_golden_export():
    if not CLI:
        return  # extension-only run (e.g. bare pytest without the build harness)
    cmd = [CLI, "mub", "--p", "2", "--m", "2", "--export"]
    out1 = subprocess.run(cmd, capture_output=True, check=True).stdout
    out2 = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert out1 == out2, "identical RunConfig must produce identical bytes"
    doc = json.loads(out1)
    hadamards = doc["hadamards"]
    # the four exact root-of-unity matrices, entry (r,c) as order-4 coefficient rows
    def entry(mat, r, c):
        coeffs = mat["entries"][r * 4 + c]
        return complex(float(coeffs[0]), float(coeffs[1]))  # basis 1, gamma_4

    golden_h1 = [
        [1, 1, 1, 1],
        [-1j, 1j, -1j, 1j],
        [1j, 1j, -1j, -1j],
        [1, -1, -1, 1],
    ]
    for r in range(4):
        for c in range(4):
            got = entry(hadamards[1], r, c)
            assert abs(got - golden_h1[r][c]) < 1e-15

    # usage errors exit with code 2
    bad = subprocess.run([CLI, "definitely-not-a-subcommand"], capture_output=True)
    assert bad.returncode == 2


if __name__ == "__main__":
    fails = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"{name}: PASS")
            except AssertionError as e:
                print(f"{name}: FAIL {e}")
                fails += 1
    sys.exit(1 if fails else 0)

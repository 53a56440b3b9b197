"""Acceptance gate: every shipped guarantee, one PASS/FAIL line each.

Criteria 1-8 pull their groups of records out of the deterministic
verification suite (run once, seed 0) and require every record to pass at
its stated tolerance:

  1. kahler-triple        exact J^2 = -Id, signature (2,2), compatibility
                          to 1e-12, second-order d-Omega defect
  2. geodesic-integrators closed form vs RK4 to 1e-8, conserved first
                          integrals, unit speed to 1e-9, endpoint limits
  3. tube-benchmark       equidistant-tube scalars 3/4, -5/4, 5/4, (2, 1/2)
                          cross-checked against optical formulas (1e-10)
                          and the numeric shape operator (1e-5)
  4. family-forward       random maximal families: Lagrangian and flatness
                          defects < 1e-10, residual < 1e-9, first variation
                          < 1e-6 per unit bump, equidistance to 1e-6
  5. tube-converse        tube congruences satisfy the symmetric-Moebius
                          graph relation with lam1 = 1/eta to 1e-10
  6. holomorphic-maximal  holomorphic graphs: shear 0, residual < 1e-10,
                          classified riemannian
  7. rank1-nonexistence   rank-1 Lagrangian sample: H^mu1 = 0, ||H|| bounded
                          away from zero, perturbations never reach 1e-3
  8. negative-controls    non-family graph keeps residual > 1e-3, fails
                          equidistance, trips the integrability guard

Criterion 9 exercises the command line in fresh subprocesses: a passing
`verify` run whose JSON report is byte-identical under a repeated seed, a
forced failure through a tightened tolerance, and a reconstructed OBJ whose
ball-model vertices all stay inside the unit sphere.
"""

import json
import math
import subprocess
import sys

import pytest

from lh3.verify import run_all_checks


@pytest.fixture(scope="module")
def records():
    return run_all_checks(seed=0)


def _require_group(records, number, name, check):
    group = [r for r in records if r.check == check]
    assert group, f"verification suite produced no '{check}' records"
    ok = all(r.passed for r in group)
    print(f"ACCEPTANCE {number} {name}: {'PASS' if ok else 'FAIL'}")
    for r in group:
        mark = "ok" if r.passed else "FAIL"
        print(f"    [{mark:>4}] {r.anchor}  measured={r.measured:.3e}")
    failed = [r.anchor for r in group if not r.passed]
    assert ok, f"{check} failures: {failed}"


def test_acceptance_1_kahler_triple(records):
    _require_group(records, 1, "neutral Kaehler triple", "kahler-triple")


def test_acceptance_2_geodesic_integrators(records):
    _require_group(records, 2, "geodesic closed form vs ODE", "geodesic-integrators")


def test_acceptance_3_tube_benchmark(records):
    _require_group(records, 3, "equidistant tube benchmark", "tube-benchmark")


def test_acceptance_4_family_forward(records):
    _require_group(records, 4, "maximal family forward checks", "family-forward")


def test_acceptance_5_tube_converse(records):
    _require_group(records, 5, "tube converse / graph relation", "tube-converse")


def test_acceptance_6_holomorphic_maximal(records):
    _require_group(records, 6, "holomorphic graphs are maximal", "holomorphic-maximal")


def test_acceptance_7_rank1_nonexistence(records):
    _require_group(records, 7, "rank-1 non-existence", "rank1-nonexistence")


def test_acceptance_8_negative_controls(records):
    _require_group(records, 8, "negative controls", "negative-controls")


def _run_cli(args, cwd):
    return subprocess.run(
        [sys.executable, "-m", "lh3.cli", *args],
        cwd=cwd,
        capture_output=True,
        text=True,
    )


def test_acceptance_9_cli(tmp_path):
    failures = []

    # Full verify run exits 0 and a repeated seed reproduces the report
    # byte for byte.
    report_a = tmp_path / "report_a.json"
    report_b = tmp_path / "report_b.json"
    first = _run_cli(["verify", "--seed", "7", "--out", str(report_a)], tmp_path)
    second = _run_cli(["verify", "--seed", "7", "--out", str(report_b)], tmp_path)
    if first.returncode != 0:
        failures.append(f"verify exit {first.returncode}: {first.stderr.strip()}")
    if second.returncode != 0:
        failures.append(f"repeat verify exit {second.returncode}")
    if report_a.read_bytes() != report_b.read_bytes():
        failures.append("reports for the same seed differ")
    payload = json.loads(report_a.read_text())
    if not payload["all_pass"]:
        failures.append("report claims a failing check")

    # Tightening a passing tolerance to zero must flip the exit code to 1.
    forced = _run_cli(["verify", "--seed", "7", "--tol", "domega=0"], tmp_path)
    if forced.returncode != 1:
        failures.append(f"tightened tolerance gave exit {forced.returncode}, want 1")
    if "FAIL" not in forced.stdout:
        failures.append("tightened tolerance printed no FAIL line")

    # Reconstruct emits an OBJ whose ball-model vertices stay inside the
    # unit sphere (default 20x20 grid: 400 vertices, 361 quads).
    mesh = tmp_path / "surface.obj"
    recon = _run_cli(
        ["reconstruct", "--family", "1,0,4,0", "--out", str(mesh), "--figure", "none"],
        tmp_path,
    )
    if recon.returncode != 0:
        failures.append(f"reconstruct exit {recon.returncode}: {recon.stderr.strip()}")
    verts = []
    n_faces = 0
    for line in mesh.read_text().splitlines():
        if line.startswith("v "):
            verts.append([float(w) for w in line.split()[1:4]])
        elif line.startswith("f "):
            n_faces += 1
    if len(verts) != 400 or n_faces != 361:
        failures.append(f"mesh has {len(verts)} vertices / {n_faces} quads, want 400/361")
    worst = max(math.hypot(math.hypot(x, y), z) for x, y, z in verts)
    if not worst < 1.0:
        failures.append(f"vertex norm {worst} outside the unit ball")

    ok = not failures
    print(f"ACCEPTANCE 9 command-line interface: {'PASS' if ok else 'FAIL'}")
    print(f"    [{'ok' if ok else 'FAIL':>4}] verify determinism, forced failure, OBJ export"
          f"  max|y|={worst:.6f}")
    assert ok, failures

"""Verification campaigns: identity cross-checks, congruence sweeps,
representation-table validation and witness round-trips.

Each suite returns a JSON-friendly dict with per-check counters and the
failing assignments (empty on a correct build).  Random sweeps are seeded
and deterministic.
"""

from __future__ import annotations

import random

import numpy as np

from .analysis import check_membership
from .blockeval import factor_blocks
from .evaluators import (
    eval_factored,
    eval_oracle,
    frobenius_eval,
    matrix_rep_table,
    scalar_rep_table,
)
from .groups import all_elements, multiply
from .witnesses import FAMILY_IDS, family_assignment, family_value

_SWEEP_CHUNK = 1 << 16


def _entry(checked: int, applicable: int, failures: list) -> dict:
    return {"checked": checked, "applicable": applicable, "failures": failures}


def _suite(name: str, checks: dict) -> dict:
    ok = all(not c["failures"] for c in checks.values())
    return {"suite": name, "ok": ok, "checks": checks}


def verify_identities(trials: int = 1000, seed: int = 0) -> dict:
    """Oracle determinant == factored form == representation product."""
    rng = random.Random(seed)
    failures = []
    for _ in range(trials):
        a = tuple(rng.randint(-9, 9) for _ in range(16))
        oracle = eval_oracle(a)
        fac = eval_factored(a).product
        frob = frobenius_eval(a)  # raises on nonzero imaginary part
        if not (oracle == fac == frob.re) or not check_membership(oracle):
            failures.append(list(a))
    return _suite("identities", {"three_way_agreement": _entry(trials, trials, failures)})


def verify_representations() -> dict:
    """Homomorphism test for all ten representations; degree bookkeeping."""
    elems = all_elements()
    failures = []
    checked = 0
    for k in range(8):
        table = scalar_rep_table(k)
        for x in elems:
            for y in elems:
                checked += 1
                if table[multiply(x, y).index] != table[x.index] * table[y.index]:
                    failures.append([k, x.index, y.index])
    for k in (8, 9):
        table = matrix_rep_table(k)
        for x in elems:
            for y in elems:
                checked += 1
                lhs = table[multiply(x, y).index]
                rhs_l = table[x.index]
                rhs_r = table[y.index]
                rhs = (
                    (
                        rhs_l[0][0] * rhs_r[0][0] + rhs_l[0][1] * rhs_r[1][0],
                        rhs_l[0][0] * rhs_r[0][1] + rhs_l[0][1] * rhs_r[1][1],
                    ),
                    (
                        rhs_l[1][0] * rhs_r[0][0] + rhs_l[1][1] * rhs_r[1][0],
                        rhs_l[1][0] * rhs_r[0][1] + rhs_l[1][1] * rhs_r[1][1],
                    ),
                )
                if lhs != rhs:
                    failures.append([k, x.index, y.index])
    degree_failures = [] if 8 * 1 + 2 * 4 == 16 else [["sum_deg_sq", 8 * 1 + 2 * 4]]
    return _suite(
        "representations",
        {
            "homomorphism": _entry(checked, checked, failures),
            "degrees": _entry(1, 1, degree_failures),
        },
    )


def _congruence_checks_block(a: np.ndarray, checks: dict) -> None:
    fb = factor_blocks(a)
    b_sum = fb.b.sum(axis=1)
    c_sum = fb.c.sum(axis=1)
    d_sum = fb.d.sum(axis=1)
    n = len(a)

    def record(name: str, mask_ok: np.ndarray, applicable: np.ndarray | None = None):
        c = checks.setdefault(name, _entry(0, 0, []))
        c["checked"] += n
        if applicable is None:
            c["applicable"] += n
            bad = ~mask_ok
        else:
            c["applicable"] += int(applicable.sum())
            bad = applicable & ~mask_ok
        if bad.any() and len(c["failures"]) < 20:
            for row in a[bad][:20]:
                c["failures"].append([int(x) for x in row])

    # each factor matches the sum of its arguments mod 2
    parity_ok = (
        ((fb.d4b - b_sum) % 2 == 0)
        & ((fb.d4c - c_sum) % 2 == 0)
        & ((fb.F - d_sum) % 2 == 0)
    )
    record("factor_parity_mod2", parity_ok)

    # the three factors share one parity (and hence the full product does)
    chain_ok = ((fb.d4b - fb.d4c) % 2 == 0) & ((fb.d4c - fb.F) % 2 == 0)
    record("factor_parity_chain", chain_ok)

    hyp = (fb.b[:, 0] + fb.b[:, 2] + fb.b[:, 1] + fb.b[:, 3]) % 2 == 1
    d = fb.d
    cross = d[:, 0] * d[:, 2] + d[:, 4] * d[:, 6] + d[:, 1] * d[:, 3] + d[:, 5] * d[:, 7]
    rhs = 1 - 8 * cross
    odd_ok = ((fb.d4b * fb.d4c - rhs) % 16 == 0) & ((fb.F * fb.F - rhs) % 16 == 0)
    record("odd_sector_mod16", odd_ok, hyp)

    # internal algebra behind the mod-16 congruence
    algebra_ok = (
        ((fb.m0 * fb.m0 - fb.m1 * fb.m1 - 8 * cross) % 16 == 0)
        & (fb.m0 % 2 == 1)
        & (fb.m1 % 2 == 1)
        & (d_sum % 2 == 1)
    )
    record("odd_sector_m0_m1_algebra", algebra_ok, hyp)

    record("even_sector_div8", fb.F % 8 == 0, ~hyp)


def verify_congruences(
    trials: int = 1_000_000, seed: int = 0, box: int = 9, exhaustive_radius: int = 2
) -> dict:
    """Random sweep plus exhaustive d-box with the upper half pinned to 0.

    Entry bound `box` must stay <= 9 so every factor fits in int64.
    """
    if box > 9:
        raise ValueError("box > 9 would overflow the int64 factor bound")
    checks: dict = {}
    done = 0
    chunk_index = 0
    while done < trials:
        n = min(_SWEEP_CHUNK, trials - done)
        rng = np.random.default_rng([seed, chunk_index])
        a = rng.integers(-box, box + 1, size=(n, 16)).astype(np.int64)
        _congruence_checks_block(a, checks)
        done += n
        chunk_index += 1

    # exhaustive: a_i = d_i for i < 8, a_{i+8} = 0, d in a cube
    r = exhaustive_radius
    axes = np.meshgrid(*([np.arange(-r, r + 1, dtype=np.int64)] * 8), indexing="ij")
    d = np.stack([g.ravel() for g in axes], axis=1)
    a = np.concatenate([d, np.zeros_like(d)], axis=1)
    for start in range(0, len(a), _SWEEP_CHUNK):
        _congruence_checks_block(a[start : start + _SWEEP_CHUNK], checks)

    # the factored parity equals the true determinant parity (scalar subsample)
    rng = random.Random(seed)
    oracle_failures = []
    for _ in range(50):
        aa = tuple(rng.randint(-box, box) for _ in range(16))
        if (eval_oracle(aa) - eval_factored(aa).d4b) % 2:
            oracle_failures.append(list(aa))
    checks["oracle_parity_subsample"] = _entry(50, 50, oracle_failures)
    return _suite("congruences", checks)


def verify_witnesses(max_m: int = 1000, three_way_band: int = 50) -> dict:
    """Every family reproduces its closed-form value for |m| <= max_m."""
    closed_failures = []
    three_way_failures = []
    checked = 0
    three_checked = 0
    for family in FAMILY_IDS:
        for m in range(-max_m, max_m + 1):
            a = family_assignment(family, m)
            want = family_value(family, m)
            checked += 1
            if eval_factored(a).product != want:
                closed_failures.append([family, m])
            if abs(m) <= three_way_band:
                three_checked += 1
                if eval_oracle(a) != want or frobenius_eval(a).re != want:
                    three_way_failures.append([family, m])
    spot = {1: (1, 17), 2: (0, 16384), 3: (0, -16384), 4: (0, 32768), 5: (0, 0)}
    spot_failures = []
    for family, (m, want) in spot.items():
        if eval_factored(family_assignment(family, m)).product != want:
            spot_failures.append([family, m, want])
    return _suite(
        "witnesses",
        {
            "closed_form": _entry(checked, checked, closed_failures),
            "three_way": _entry(three_checked, three_checked, three_way_failures),
            "spot_values": _entry(len(spot), len(spot), spot_failures),
        },
    )


def run_suites(which: str, trials: int, seed: int) -> list[dict]:
    suites = []
    if which in ("identities", "all"):
        suites.append(verify_identities(trials=trials, seed=seed))
    if which in ("representations", "all"):
        suites.append(verify_representations())
    if which in ("congruences", "all"):
        suites.append(verify_congruences(trials=trials, seed=seed))
    if which in ("witnesses", "all"):
        suites.append(verify_witnesses())
    return suites

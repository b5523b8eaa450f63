"""Exhaustive and randomized verification suites behind the `verify` command.

Each suite builds a deterministic list of picklable instances, checks them
(optionally on a process pool capped by MLQKIT_THREADS), and aggregates
failures in instance order.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .combinat import (
    compress,
    conjugate,
    dominates,
    partitions_of,
    sort_composition,
    strong_compositions_of,
    weak_compositions_of,
)
from .collapse import collapse, partial_collapse, uncollapse
from .crystal import (
    active_region,
    classical_match,
    col_lower,
    col_raise,
    cylindrical_match,
    is_full,
    row_drop,
    row_drop_star,
)
from .errors import UsageError
from .graph import build_graph
from .mlq import (
    MLQ,
    content_monomial,
    enumerate_mlq,
    fm_label,
    is_nonwrapping,
    maj,
    mlq_type,
)
from .symfun import (
    expand_in_atoms,
    expand_in_qschur,
    expand_in_schur,
    genfun_G,
    genfun_P,
    genfun_atom,
    genfun_f,
    genfun_qschur,
    genfun_schur,
    kostka_foulkes,
    kostka_foulkes_via_mlq,
)
from .tableaux import charge, enumerate_ssyt, filling_to_mlq, mlq_to_ssaf, mlq_to_ssqt, ssqt_maj, ssqt_type


@dataclass
class VerifyReport:
    suite: str
    instances: int = 0
    failures: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures


def _pool_size() -> int:
    env = os.environ.get("MLQKIT_THREADS")
    if env:
        return max(1, int(env))
    return min(os.cpu_count() or 1, 4)


def _run_chunks(worker, instances):
    """Apply worker to instances, preserving order; pool only when asked."""
    size = _pool_size()
    if size <= 1 or len(instances) < 32:
        return [worker(x) for x in instances]
    chunk = max(8, len(instances) // (size * 8))
    with ProcessPoolExecutor(max_workers=size) as pool:
        return list(pool.map(worker, instances, chunksize=chunk))


@lru_cache(maxsize=64)
def _shapes(max_size: int, max_cols: int):
    """(lam, n) pairs with 1 <= |lam| <= max_size and conj(lam)_1 <= n <= max_cols."""
    out = []
    for k in range(1, max_size + 1):
        for lam in partitions_of(k):
            lo = conjugate(lam)[0]
            for n in range(lo, max_cols + 1):
                out.append((lam, n))
    return tuple(out)


# ---------------------------------------------------------------------------
# suite: worked-examples (acceptance criterion 1)


def _check_worked_examples(_) -> list[str]:
    from .mlq import column_word, row_word

    fails = []
    m = MLQ.make(5, [{1, 3, 4, 5}, {2, 3, 4}, {3, 5}])
    if mlq_type(m) != (1, 0, 3, 3, 2):
        fails.append(f"type: {mlq_type(m)}")
    if compress(mlq_type(m)) != (1, 3, 3, 2):
        fails.append(f"strtype: {compress(mlq_type(m))}")
    if str(row_word(m)) != "53.432.5431":
        fails.append(f"rw: {row_word(m)}")
    if str(column_word(m)) != "1.2.321.21.31":
        fails.append(f"cw: {column_word(m)}")
    mc = MLQ.make(6, [{1, 3, 4, 5}, {2, 3, 4, 6}, {2, 3, 4, 5}, {1, 4, 6}, {3, 5}])
    if maj(mc) != 4:
        fails.append(f"maj: {maj(mc)}")
    pair = collapse(mc)
    if pair.nonwrap.shape() != (5, 4, 3, 3, 1, 1):
        fails.append(f"shape: {pair.nonwrap.shape()}")
    expected_record = ((1, 1, 1, 1, 2, 4), (2, 2, 2, 3), (3, 3, 3, 5), (4, 4), (5,))
    if pair.record != expected_record:
        fails.append(f"record: {pair.record}")
    if charge(pair.record) != 4:
        fails.append(f"charge: {charge(pair.record)}")
    return fails


# ---------------------------------------------------------------------------
# suite: collapse-roundtrip (criterion 2)


def _check_collapse_shape(args) -> list[str]:
    lam, n = args
    fails = []
    seen = {}
    by_mu: dict[tuple, set] = {}
    for m in enumerate_mlq(lam, n):
        pair = collapse(m)
        mu = pair.nonwrap.shape()
        key = (pair.nonwrap, pair.record)
        if key in seen:
            fails.append(f"collapse not injective on {lam},{n}: {m} vs {seen[key]}")
        seen[key] = m
        if not dominates(lam, mu):
            fails.append(f"{m}: collapsed shape {mu} does not stay below {lam}")
        if content_monomial(m) != content_monomial(pair.nonwrap):
            fails.append(f"{m}: content changed under collapse")
        if maj(m) != charge(pair.record):
            fails.append(f"{m}: maj {maj(m)} != charge {charge(pair.record)}")
        if uncollapse(pair) != m:
            fails.append(f"{m}: uncollapse does not invert")
        by_mu.setdefault(mu, set()).add(key)
    # surjectivity: image size must match the product formula per mu
    for mu, keys in by_mu.items():
        nonwraps = {k[0] for k in keys}
        records = {k[1] for k in keys}
        n_nonwrap = sum(1 for m in enumerate_mlq(mu, n) if is_nonwrapping(m))
        n_records = sum(1 for _ in enumerate_ssyt(conjugate(mu), conjugate(lam)))
        if len(nonwraps) != n_nonwrap or len(records) != n_records:
            fails.append(
                f"{lam},{n},mu={mu}: image {len(nonwraps)}x{len(records)} "
                f"vs expected {n_nonwrap}x{n_records}"
            )
        if len(keys) != n_nonwrap * n_records:
            fails.append(f"{lam},{n},mu={mu}: image is not a full product")
    return fails


# ---------------------------------------------------------------------------
# suites: the three expansions (criteria 3-5)


def _check_schur_expansion(args) -> list[str]:
    lam, n = args
    fails = []
    exp = expand_in_schur(lam, n)  # raises TheoremViolationError on mismatch
    if not exp.nonneg():
        fails.append(f"{lam},{n}: negative coefficient in {exp.coefficients}")
    for mu in exp.coefficients:
        if not dominates(lam, mu):
            fails.append(f"{lam},{n}: support violates dominance at {mu}")
    total = genfun_P(lam, n)
    for mu, c in exp.coefficients.items():
        total = total - genfun_schur(mu, n).scaled(c)
    if total:
        fails.append(f"{lam},{n}: expansion does not reproduce the polynomial")
    return fails


def _check_atom_expansion(alpha) -> list[str]:
    fails = []
    exp = expand_in_atoms(alpha)
    if not exp.nonneg():
        fails.append(f"{alpha}: negative coefficient")
    lam = sort_composition(alpha)
    for beta in exp.coefficients:
        if not dominates(lam, sort_composition(beta)):
            fails.append(f"{alpha}: support violates dominance at {beta}")
    total = genfun_f(alpha)
    for beta, c in exp.coefficients.items():
        total = total - genfun_atom(beta, len(alpha)).scaled(c)
    if total:
        fails.append(f"{alpha}: expansion does not reproduce the polynomial")
    return fails


def _check_qschur_expansion(args) -> list[str]:
    gamma, n = args
    fails = []
    exp = expand_in_qschur(gamma, n)
    if not exp.nonneg():
        fails.append(f"{gamma},{n}: negative coefficient")
    total = genfun_G(gamma, n)
    for tau, c in exp.coefficients.items():
        total = total - genfun_qschur(tau, n).scaled(c)
    if total:
        fails.append(f"{gamma},{n}: expansion does not reproduce the polynomial")
    return fails


# ---------------------------------------------------------------------------
# suite: fig1 (criterion 6)


def _check_fig1(_) -> list[str]:
    fails = []
    lam = (3, 3, 1, 1)
    g4 = build_graph(lam, 4, "nonwrapping")
    if len(g4.vertices) != 20:
        fails.append(f"n=4 nonwrapping count {len(g4.vertices)} != 20")
    if len(g4.components()) != 1:
        fails.append(f"n=4 nonwrapping crystal disconnected: {len(g4.components())}")
    sub = g4.induced(lambda v: v.type == (1, 3, 1, 3))
    if len(sub.components()) < 2:
        fails.append(f"NMLQ[(1,3,1,3)] components {len(sub.components())} < 2")
    # the 3135-vertex graph of the remark: strong type (1,3,1,3) on 8 columns
    g8 = build_graph(lam, 8, "nonwrapping", check=False)
    if len(g8.vertices) != 15120:
        fails.append(f"n=8 full nonwrapping count {len(g8.vertices)} != 15120")
    quasi = g8.induced(lambda v: v.strtype == (1, 3, 1, 3))
    if len(quasi.vertices) != 3135:
        fails.append(f"n=8 strong-type-(1,3,1,3) count {len(quasi.vertices)} != 3135")
    if len(quasi.components()) < 2:
        fails.append("SNMLQ[(1,3,1,3)] on 8 columns is not disconnected")
    return fails


# ---------------------------------------------------------------------------
# suite: operator-laws (criterion 7, randomized)


def _random_mlq(rng: random.Random, max_size: int, max_cols: int) -> MLQ:
    shapes = [s for s in _shapes(max_size, max_cols)]
    lam, n = shapes[rng.randrange(len(shapes))]
    rows = []
    for k in conjugate(lam):
        rows.append(frozenset(rng.sample(range(1, n + 1), k)))
    return MLQ(n, tuple(rows))


def _check_operator_laws(args) -> list[str]:
    seed, max_size, max_cols = args
    rng = random.Random(seed)
    m = _random_mlq(rng, max_size, max_cols)
    n, L = m.n, m.height
    fails = []
    i = rng.randrange(1, n) if n > 1 else None
    j = rng.randrange(1, L + 1)

    if i is not None:
        for name, op in (("e<", col_raise), ("f>", col_lower)):
            # commutation with row dropping
            a, _ = op(row_drop(m, j)[0], i)
            b = row_drop(op(m, i)[0], j)[0]
            if a != b:
                fails.append(f"opcommute {name}{i},ed{j} fails on {m}")
            image, acted = op(m, i)
            if acted:
                if maj(image) != maj(m):
                    fails.append(f"maj not preserved by {name}{i} on {m}")
                if collapse(image).record != collapse(m).record:
                    fails.append(f"record not preserved by {name}{i} on {m}")
            # type change exactly at full vertices
            direction = "raise" if name == "e<" else "lower"
            expected = list(mlq_type(m))
            if is_full(m, i, direction):
                expected[i - 1], expected[i] = expected[i], expected[i - 1]
            if mlq_type(image) != tuple(expected):
                fails.append(f"type-change law fails for {name}{i} on {m}")

        # label-array column swap across the active region
        image, acted = col_raise(m, i)
        if acted:
            region = active_region(m, i)
            rows_hit = {s for s, _ in region}
            la, lb = fm_label(m).labels, fm_label(image).labels
            for r in range(1, L + 1):
                want = list(la[r - 1])
                if r in rows_hit:
                    want[i - 1], want[i] = want[i], want[i - 1]
                if list(lb[r - 1]) != want:
                    fails.append(f"column-swap law fails at row {r}, e<{i} on {m}")
                    break

    # theta invariance under starred dropping (generalized rows allowed)
    rows = tuple(
        frozenset(rng.sample(range(1, n + 1), rng.randrange(0, n + 1)))
        for _ in range(rng.randrange(2, 5))
    )
    gen = MLQ(n, rows)
    jj = rng.randrange(1, len(rows))
    dropped = row_drop_star(gen, jj)
    if classical_match(rows, n) != classical_match(dropped.rows, n):
        fails.append(f"three-row law fails for rows {rows}, i={jj}")

    # I_L of the collapse equals the classical matching of all rows
    rho = collapse(m).nonwrap
    t = mlq_type(rho)
    i_l = frozenset(p for p, lab in enumerate(t, start=1) if lab == L)
    if i_l != classical_match(m.rows, n):
        fails.append(f"label-L law fails on {m}")

    # coinversion preservation and one-row collapse deltas
    alpha, beta = mlq_type(m), t
    for a in range(n):
        for b in range(a + 1, n):
            if alpha[a] < alpha[b] and not beta[a] < beta[b]:
                fails.append(f"coinversion ({a + 1},{b + 1}) lost on {m}")
    if L >= 2:
        prev = mlq_type(partial_collapse(m, L - 1))
        for p in range(n):
            if t[p] - prev[p] not in (0, 1):
                fails.append(f"one-row collapse delta {t[p] - prev[p]} at {p + 1} on {m}")

    # unmatched counts survive collapsing
    if i is not None:
        from .crystal import bracket_match
        from .mlq import row_word

        bm_m = bracket_match(row_word(m).letters, i)
        bm_r = bracket_match(row_word(rho).letters, i)
        if len(bm_m.unmatched_opens()) != len(bm_r.unmatched_opens()) or len(
            bm_m.unmatched_closes()
        ) != len(bm_r.unmatched_closes()):
            fails.append(f"unmatched counts change under collapse on {m}, i={i}")

    # lemma: R versus theta on a random stack with an extra row
    extra = frozenset(rng.sample(range(1, n + 1), rng.randrange(0, n + 1)))
    stack = list(m.rows) + [extra]
    r_set = cylindrical_match(stack, n)
    th_set = classical_match(stack, n)
    th_base = classical_match(m.rows, n)
    for jpos in sorted(r_set - th_set):
        for ipos in sorted(th_base):
            if ipos < jpos and ipos not in r_set:
                fails.append(f"srho-type law fails on {stack}: i={ipos}, j={jpos}")
    return fails


# ---------------------------------------------------------------------------
# suite: fiber-type (criterion 8)


def _check_fiber_type(args) -> list[str]:
    lam, n = args
    fails = []
    fibers: dict[tuple, dict] = {}
    for m in enumerate_mlq(lam, n):
        pair = collapse(m)
        fiber = fibers.setdefault(pair.record, {"type": {}, "strtype": {}})
        rho_t = mlq_type(pair.nonwrap)
        if fiber["type"].setdefault(rho_t, mlq_type(m)) != mlq_type(m):
            fails.append(f"type not determined in fiber {pair.record} on {lam},{n}")
        rho_s = compress(rho_t)
        if fiber["strtype"].setdefault(rho_s, compress(mlq_type(m))) != compress(mlq_type(m)):
            fails.append(f"strtype not determined in fiber {pair.record} on {lam},{n}")
    return fails


# ---------------------------------------------------------------------------
# suite: eta-bijections (criterion 9)


def _check_eta_shape(args) -> list[str]:
    lam, n = args
    fails = []
    by_type: dict[tuple, list[MLQ]] = {}
    for m in enumerate_mlq(lam, n):
        t = mlq_to_ssqt(m)
        if filling_to_mlq(t, n).rows != m.rows:
            fails.append(f"SSQT row contents differ for {m}")
        if ssqt_maj(t) != maj(m):
            fails.append(f"SSQT maj {ssqt_maj(t)} != {maj(m)} for {m}")
        padded = ssqt_type(t) + (0,) * (n - len(ssqt_type(t)))
        if padded != mlq_type(m):
            fails.append(f"SSQT type {padded} != {mlq_type(m)} for {m}")
        if is_nonwrapping(m):
            by_type.setdefault(mlq_type(m), []).append(m)
    for alpha, queues in by_type.items():
        seen = set()
        for m in queues:
            f = mlq_to_ssaf(m)
            if f.shape != alpha:
                fails.append(f"SSAF shape {f.shape} != type {alpha} for {m}")
            if filling_to_mlq(f, n).rows != m.rows:
                fails.append(f"SSAF row contents differ for {m}")
            seen.add(f.columns)
        if len(seen) != len(queues):
            fails.append(f"eta not injective on NMLQ[{alpha}]")
    return fails


def _check_eta_examples(_) -> list[str]:
    fails = []
    pairs = [
        (((1, 3, 4), (2, 3), (3,)), ((1,), (), (3, 3, 3), (4, 2))),
        (((1, 3, 4), (3, 4), (3,)), ((1,), (), (3, 3, 3), (4, 4))),
        (((1, 3, 4), (2, 3), (2,)), ((1,), (), (3, 3, 2), (4, 2))),
        (((1, 3, 4), (2, 3), (1,)), ((1,), (), (3, 3, 1), (4, 2))),
        (((1, 3, 4), (3, 4), (2,)), ((1,), (), (3, 3, 2), (4, 4))),
        (((1, 3, 4), (3, 4), (1,)), ((1,), (), (3, 3, 1), (4, 4))),
        (((1, 3, 4), (2, 4), (2,)), ((1,), (), (3, 2, 2), (4, 4))),
        (((1, 3, 4), (2, 4), (1,)), ((1,), (), (3, 2, 1), (4, 4))),
    ]
    for rows, cols in pairs:
        m = MLQ.make(4, rows)
        f = mlq_to_ssaf(m)
        if f.shape != (1, 0, 3, 2) or f.columns != cols:
            fails.append(f"SSAF example mismatch for {rows}: {f.columns} vs {cols}")
    quinv = MLQ.make(6, [{1, 4, 5, 6}, {2, 3, 4, 5}, {1, 4, 6}, {3, 4}])
    t = mlq_to_ssqt(quinv)
    if t.row_entries(1) != (4, 5, 6, 1) or ssqt_maj(t) != 3:
        fails.append(f"quinv example mismatch: {t.columns}, maj {ssqt_maj(t)}")
    if ssqt_type(t) != (2, 0, 0, 4, 4, 3):
        fails.append(f"quinv example type mismatch: {ssqt_type(t)}")
    return fails


# ---------------------------------------------------------------------------
# suite registry


def _atoms_instances(max_size: int, max_len: int):
    out = []
    for k in range(1, max_size + 1):
        for ell in range(1, max_len + 1):
            out.extend(weak_compositions_of(k, ell))
    return out


def _qschur_instances(max_size: int, max_cols: int):
    out = []
    for k in range(1, max_size + 1):
        for gamma in strong_compositions_of(k):
            for n in range(len(gamma), max_cols + 1):
                out.append((gamma, n))
    return out


def run_suite(
    suite: str,
    max_size: int = 6,
    max_cols: int = 5,
    seed: int = 0,
    instances: int = 10000,
) -> VerifyReport:
    """Run one named suite and report instance count, failures, wall time."""
    start = time.monotonic()
    if suite == "worked-examples":
        items: list = [None]
        worker = _check_worked_examples
    elif suite == "collapse-roundtrip":
        items = _shapes(max_size, max_cols)
        worker = _check_collapse_shape
    elif suite == "expansion-schur":
        items = _shapes(max_size, max_cols)
        worker = _check_schur_expansion
    elif suite == "expansion-atoms":
        items = _atoms_instances(max_size, max_cols)
        worker = _check_atom_expansion
    elif suite == "expansion-qschur":
        items = _qschur_instances(max_size, max_cols)
        worker = _check_qschur_expansion
    elif suite == "fig1":
        items = [None]
        worker = _check_fig1
    elif suite == "operator-laws":
        items = [(seed * 1000003 + t, max_size, max_cols) for t in range(instances)]
        worker = _check_operator_laws
    elif suite == "fiber-type":
        items = _shapes(max_size, max_cols)
        worker = _check_fiber_type
    elif suite == "eta-bijections":
        items = list(_shapes(max_size, max_cols)) + [None]
        worker = _check_eta_mixed
    elif suite == "kostka":
        items = [
            (lam, mu)
            for k in range(1, max_size + 1)
            for lam in partitions_of(k)
            for mu in partitions_of(k)
        ]
        worker = _check_kostka_pair
    else:
        raise UsageError(f"unknown suite {suite!r}")

    results = _run_chunks(worker, items)
    failures = [msg for msgs in results for msg in msgs]
    return VerifyReport(suite, len(items), failures, time.monotonic() - start)


def _check_eta_mixed(item) -> list[str]:
    if item is None:
        return _check_eta_examples(None)
    return _check_eta_shape(item)


def _check_kostka_pair(args) -> list[str]:
    lam, mu = args
    direct = kostka_foulkes(lam, mu)
    via = kostka_foulkes_via_mlq(lam, mu)
    if direct != via:
        return [f"kostka {lam},{mu}: charge route {direct} vs collapse route {via}"]
    return []


ALL_SUITES = (
    "worked-examples",
    "collapse-roundtrip",
    "expansion-schur",
    "expansion-atoms",
    "expansion-qschur",
    "fig1",
    "operator-laws",
    "fiber-type",
    "eta-bijections",
    "kostka",
)

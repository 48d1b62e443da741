"""Verification suites: each one machine-checks a proved statement.

A suite runs a deterministic finite-prefix check of one theorem about the
seed trajectories (population recursions, rule equivalence, replication,
reversibility, polynomial state formula, coloring, sublattice embedding,
diamond landmarks, backward growth) and returns a :class:`SuiteReport`
with an explicit witness on failure.

The ``step_fn`` parameters exist so tests can inject a deliberately
corrupted local rule and confirm the suite catches it; production callers
never pass them.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

import numpy as np

from . import sequences as seq
from .gf2poly import (PolyPair, fib_poly_eval, grid_to_poly, poly_to_grid,
                      state_poly_at, transition_poly)
from .grid import (BinaryGrid, SecondOrderState, count_values,
                   diagonal_extract, shift, single_seed, swap_x, xor)
from .rules import (Rule, StepFn, first_order_step, second_order_inverse,
                    second_order_step)
from .sequences import SeqId


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    range: str
    passed: bool
    witness: str | None = None

    def to_json_obj(self) -> dict:
        return asdict(self)


def _fail(name: str, rng: str, witness: str) -> SuiteReport:
    return SuiteReport(name, rng, False, witness)


def _ok(name: str, rng: str) -> SuiteReport:
    return SuiteReport(name, rng, True)


def _state_diff(a: SecondOrderState, b: SecondOrderState, limit: int = 8) -> str:
    dc = sorted(a.current.cells() ^ b.current.cells())[:limit]
    dp = sorted(a.previous.cells() ^ b.previous.cells())[:limit]
    return f"current diff {dc}, previous diff {dp}"


def suite_counts(n_max: int = 512, step_fn: StepFn = first_order_step) -> SuiteReport:
    """Simulated tallies of all four lifts match the closed-form recursions."""
    name, rng = "counts", f"n=0..{n_max}"
    for rule in Rule:
        s = single_seed()
        for n in range(n_max + 1):
            if n:
                s = second_order_step(rule, s, step_fn)
            c = count_values(s, n)
            want = (seq.seq_value(SeqId.R1, n), seq.seq_value(SeqId.R2, n),
                    0, seq.seq_value(SeqId.R, n))
            if (c.r1, c.r2, c.r3, c.total) != want:
                return _fail(name, rng,
                             f"rule={rule.value} n={n} counts="
                             f"{(c.r1, c.r2, c.r3, c.total)} expected {want}")
    return _ok(name, rng)


def suite_equivalence(n_max: int = 256,
                      step_fn: StepFn = first_order_step) -> SuiteReport:
    """R2, R3, R3' agree as full states from the seed.

    Also checks the lemma that makes them agree: along the R2 trajectory no
    cell ever sees exactly three occupied orthogonal neighbors, and every
    cell with exactly one occupied orthogonal neighbor has all four
    diagonal neighbors empty.
    """
    name, rng = "equivalence", f"n=0..{n_max}"
    s2, s3, s3p = single_seed(), single_seed(), single_seed()
    for n in range(n_max + 1):
        if n:
            s2 = second_order_step(Rule.C2, s2, step_fn)
            s3 = second_order_step(Rule.C3, s3, step_fn)
            s3p = second_order_step(Rule.C3p, s3p, step_fn)
        if s3 != s2:
            return _fail(name, rng, f"R3 != R2 at n={n}: {_state_diff(s3, s2)}")
        if s3p != s2:
            return _fail(name, rng, f"R3' != R2 at n={n}: {_state_diff(s3p, s2)}")
        if s2.current:
            from .rules import _neighbor_sums
            orth, diag, _, _ = _neighbor_sums(s2.current)
            if (orth == 3).any():
                return _fail(name, rng, f"cell with 3 orthogonal neighbors at n={n}")
            if (diag[orth == 1] != 0).any():
                return _fail(name, rng,
                             f"switching cell with diagonal neighbor at n={n}")
    return _ok(name, rng)


def suite_replication(k_max: int = 6,
                      step_fn: StepFn = first_order_step) -> SuiteReport:
    """First-order C1/C2 replicate any 2^k-boxed pattern into 4 disjoint copies.

    Patterns are taken from the first-order seed trajectories; for each k
    every trajectory pattern whose bounding box fits in a 2^k x 2^k square
    is advanced 2^k steps and compared with the xor of four shifted copies
    (diagonal shifts for C1, orthogonal for C2), which must be disjoint.
    """
    name, rng = "replication", f"k=0..{k_max}"
    for rule in (Rule.C1, Rule.C2):
        # longest usable prefix of the trajectory: pattern at step m spans 2m+1
        m_top = ((1 << k_max) - 1) // 2
        traj = [BinaryGrid([(0, 0)])]
        for _ in range(m_top):
            traj.append(step_fn(rule, traj[-1]))
        for k in range(k_max + 1):
            d = 1 << k
            if rule is Rule.C1:
                shifts = [(-d, -d), (-d, d), (d, -d), (d, d)]
            else:
                shifts = [(-d, 0), (d, 0), (0, -d), (0, d)]
            for m, g in enumerate(traj):
                if 2 * m + 1 > d:
                    break
                stepped = g
                for _ in range(d):
                    stepped = step_fn(rule, stepped)
                copies = [shift(g, dx, dy) for dx, dy in shifts]
                combined = BinaryGrid()
                for c in copies:
                    combined = xor(combined, c)
                if sum(len(c) for c in copies) != len(combined):
                    return _fail(name, rng,
                                 f"rule={rule.value} k={k} pattern step {m}: "
                                 f"copies overlap")
                if stepped != combined:
                    return _fail(name, rng,
                                 f"rule={rule.value} k={k} pattern step {m}: "
                                 f"2^k steps != four copies")
    return _ok(name, rng)


def suite_reversibility(n_max: int = 256,
                        step_fn: StepFn = first_order_step) -> SuiteReport:
    """Forward/backward round trips recover the seed; X F X = F^-1."""
    name, rng = "reversibility", f"n=0..{n_max}"
    for rule in Rule:
        traj = [single_seed()]
        for _ in range(n_max):
            traj.append(second_order_step(rule, traj[-1], step_fn))
        s = traj[-1]
        for n in range(n_max - 1, -1, -1):
            s = second_order_inverse(rule, s, step_fn)
            if s != traj[n]:
                return _fail(name, rng,
                             f"rule={rule.value}: backward step to n={n} "
                             f"diverged: {_state_diff(s, traj[n])}")
        for n, t in enumerate(traj):
            lhs = second_order_inverse(rule, t, step_fn)
            rhs = swap_x(second_order_step(rule, swap_x(t), step_fn))
            if lhs != rhs:
                return _fail(name, rng,
                             f"rule={rule.value} n={n}: X F X != F^-1")
    return _ok(name, rng)


def suite_polynomial(n_max: int = 128) -> SuiteReport:
    """State formula (f_{n+1}(T), f_n(T)) matches simulation; decompositions hold.

    For every n = 2^k + j in range it also checks the five-pattern split of
    f_n over T_C1 with pairwise-disjoint supports, and the pair composition
    P[C_n] = T^{2^k} P[C_j] + P[X C_{2^k-j-1}] for both linear rules.
    """
    name, rng = "polynomial", f"n=0..{n_max}"
    for rule in (Rule.C1, Rule.C2):
        s = single_seed()
        for n in range(n_max + 1):
            if n:
                s = second_order_step(rule, s)
            pp = state_poly_at(rule, n)
            if (poly_to_grid(pp.first) != s.current
                    or poly_to_grid(pp.second) != s.previous):
                return _fail(name, rng,
                             f"rule={rule.value} n={n}: polynomial state "
                             f"differs from simulation")
    T1 = transition_poly(Rule.C1)
    for k in range(n_max.bit_length()):
        d = 1 << k
        for j in range(1, d + 1):
            if d + j > n_max:
                break
            w = _five_pattern_witness(T1, k, j)
            if w:
                return _fail(name, rng, w)
        for j in range(d):
            if d + j > n_max:
                break
            for rule in (Rule.C1, Rule.C2):
                T = transition_poly(rule)
                t2k = T.pow_2k(k)
                pj = state_poly_at(rule, j)
                back = state_poly_at(rule, d - j - 1)
                got = state_poly_at(rule, d + j)
                want = PolyPair(t2k * pj.first + back.second,
                                t2k * pj.second + back.first)
                if got != want:
                    return _fail(name, rng,
                                 f"rule={rule.value} n=2^{k}+{j}: pair "
                                 f"composition identity failed")
    return _ok(name, rng)


def _five_pattern_witness(T1, k: int, j: int) -> str | None:
    """Check f_{2^k+j} = T^{2^k} f_j + f_{2^k-j} over T_C1 with 5 disjoint parts."""
    d = 1 << k
    fj = fib_poly_eval(T1, j)
    central = fib_poly_eval(T1, d - j)
    parts = [fj.shift_exponents(sx * d, sy * d)
             for sx in (-1, 1) for sy in (-1, 1)] + [central]
    union = frozenset()
    total = 0
    for p in parts:
        union |= p.support
        total += len(p)
    if total != len(union):
        return f"n=2^{k}+{j}: five-pattern supports overlap"
    if union != fib_poly_eval(T1, d + j).support:
        return f"n=2^{k}+{j}: five-pattern union != f_n"
    return None


def suite_coloring(n_max: int = 256) -> SuiteReport:
    """Checkerboard separation of value-1 and value-2 cells.

    R2: no value-3 cell; value-1 cells sit on parity n mod 2 of i+j,
    value-2 cells on the opposite parity, swapping every step.  R1: both
    components stay on the even diagonal sublattice, with value-1 cells at
    coordinates (n mod 2, n mod 2) mod 2 and value-2 on the complementary
    coset.
    """
    name, rng = "coloring", f"n=0..{n_max}"
    s1, s2 = single_seed(), single_seed()
    for n in range(n_max + 1):
        if n:
            s1 = second_order_step(Rule.C1, s1)
            s2 = second_order_step(Rule.C2, s2)
        for s, rule in ((s1, "R1"), (s2, "R2")):
            if count_values(s, n).r3:
                return _fail(name, rng, f"{rule} n={n}: value-3 cell present")
        for comp, par in ((s2.current, n & 1), (s2.previous, (n + 1) & 1)):
            ii, jj = comp.index_arrays()
            if len(ii) and not np.all((ii + jj) % 2 == par):
                return _fail(name, rng,
                             f"R2 n={n}: component off its checkerboard parity")
        for comp, par in ((s1.current, n & 1), (s1.previous, (n + 1) & 1)):
            ii, jj = comp.index_arrays()
            if len(ii) and not (np.all(ii % 2 == par) and np.all(jj % 2 == par)):
                return _fail(name, rng,
                             f"R1 n={n}: component off its sublattice coset")
    return _ok(name, rng)


def suite_sublattice(n_max: int = 256) -> SuiteReport:
    """R2 is R1 restricted to the even diagonal sublattice, step by step."""
    name, rng = "sublattice", f"n=0..{n_max}"
    s1, s2 = single_seed(), single_seed()
    for n in range(n_max + 1):
        if n:
            s1 = second_order_step(Rule.C1, s1)
            s2 = second_order_step(Rule.C2, s2)
        try:
            cur = diagonal_extract(s1.current, "even")
            prev = diagonal_extract(s1.previous, "even")
        except ValueError as e:
            return _fail(name, rng, f"n={n}: {e}")
        if cur != s2.current or prev != s2.previous:
            return _fail(name, rng, f"n={n}: extracted R1 state != R2 state")
    return _ok(name, rng)


def diamond_cells(n: int) -> frozenset[tuple[int, int]]:
    """Predicted value-1 set of R1 at n = 2^k - 1: the checkerboard square
    of cells with both coordinates congruent to n mod 2, |i|, |j| <= n."""
    pts = [u for u in range(-n, n + 1) if (u - n) % 2 == 0]
    return frozenset((u, v) for u in pts for v in pts)


def suite_diamond(k_max: int = 5) -> SuiteReport:
    """At n = 2^k - 1 the R1 value-1 cells form the 4^k checkerboard diamond."""
    name, rng = "diamond", f"k=0..{k_max}"
    s = single_seed()
    n = 0
    for k in range(k_max + 1):
        target = (1 << k) - 1
        while n < target:
            s = second_order_step(Rule.C1, s)
            n += 1
        ones = s.current.cells()
        if len(ones) != 4 ** k:
            return _fail(name, rng, f"k={k}: |value-1| = {len(ones)} != 4^{k}")
        if seq.seq_value(SeqId.R1, target) != 4 ** k:
            return _fail(name, rng, f"k={k}: R1(2^{k}-1) != 4^{k}")
        if ones != diamond_cells(target):
            return _fail(name, rng, f"k={k}: value-1 set is not the "
                                    f"predicted checkerboard diamond")
    for k in range(9):
        target = (1 << k) - 1
        if seq.seq_value(SeqId.R, target) != (4 ** (k + 1) - 1) // 3:
            return _fail(name, rng, f"k={k}: R(2^{k}-1) != (4^{k + 1}-1)/3")
    return _ok(name, rng)


def suite_backward_growth(k_max: int = 6) -> SuiteReport:
    """Backward dynamics of the central region in the growth decomposition.

    For n = 2^k + j the decomposition P[C_n] = T^{2^k} P[C_j] +
    P[X C_{2^k-j-1}] has a swapped earlier state in the center, shrinking
    by one index per step; the lift maps X C_i to X C_{i-1}; and at
    j = 2^k - 1 the next step's decomposition is a single central
    X C_{2^{k+1}-1} plus four seed cells at the corners.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    name, rng = "backward_growth", f"k=1..{k_max}"
    T = transition_poly(Rule.C1)
    # F(X C_i) = X C_{i-1}, checked by direct simulation
    traj = [single_seed()]
    for _ in range(1 << k_max):
        traj.append(second_order_step(Rule.C1, traj[-1]))
    for i in range(1, len(traj)):
        if second_order_step(Rule.C1, swap_x(traj[i])) != swap_x(traj[i - 1]):
            return _fail(name, rng, f"F(X C_{i}) != X C_{i - 1}")
    for k in range(1, k_max + 1):
        d = 1 << k
        for j in range(d):
            t2k = T.pow_2k(k)
            pj = state_poly_at(Rule.C1, j)
            central = state_poly_at(Rule.C1, d - j - 1)
            got = state_poly_at(Rule.C1, d + j)
            want = PolyPair(t2k * pj.first + central.second,
                            t2k * pj.second + central.first)
            if got != want:
                return _fail(name, rng, f"n=2^{k}+{j}: decomposition failed")
        # boundary: after j = 2^k - 1 the outer copies merge into the center
        d2 = d << 1
        got = state_poly_at(Rule.C1, d2)
        central = state_poly_at(Rule.C1, d2 - 1)
        seed_pair = state_poly_at(Rule.C1, 0)
        t2k1 = T.pow_2k(k + 1)
        want = PolyPair(t2k1 * seed_pair.first + central.second,
                        t2k1 * seed_pair.second + central.first)
        if got != want:
            return _fail(name, rng, f"n=2^{k + 1}: merge step decomposition failed")
        if len(t2k1 * seed_pair.first) != 4:
            return _fail(name, rng, f"n=2^{k + 1}: outer copies are not 4 seeds")
    return _ok(name, rng)


#: suite name -> (function, default range argument)
SUITES = {
    "counts": (suite_counts, 512),
    "equivalence": (suite_equivalence, 256),
    "replication": (suite_replication, 6),
    "reversibility": (suite_reversibility, 256),
    "polynomial": (suite_polynomial, 128),
    "coloring": (suite_coloring, 256),
    "sublattice": (suite_sublattice, 256),
    "diamond": (suite_diamond, 5),
    "backward_growth": (suite_backward_growth, 6),
}


def run_suite(name: str, limit: int | None = None) -> SuiteReport:
    fn, default = SUITES[name]
    return fn(default if limit is None else limit)


def run_all(limit: int | None = None) -> list[SuiteReport]:
    """Run every suite in fixed order; ``limit`` overrides all ranges."""
    return [run_suite(name, limit) for name in SUITES]


def report_text(reports: list[SuiteReport]) -> str:
    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        line = f"{r.suite:<16} {r.range:<12} {status}"
        if r.witness:
            line += f"  witness: {r.witness}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def report_json(reports: list[SuiteReport]) -> str:
    return json.dumps([r.to_json_obj() for r in reports], indent=2) + "\n"

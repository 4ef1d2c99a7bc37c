"""The n-site open exclusion process as an explicit Markov chain.

States are occupancy tuples, indexed in binary order with site 1 as the
high bit.  In one step of the discrete chain, each of the n-1 bonds and
the two boundaries is offered with probability 1/(n+1): an occupied site
hops right onto an empty neighbour with rate 1, left with rate q, a
particle enters an empty site 1 with rate alpha, and a particle on site n
exits with rate beta; all remaining probability stays put.

steady_state_exact solves pi P = pi exactly over Fractions by replacing
one redundant row of P^T - I with the normalization row.  simulate runs
the chain with a splitmix64 generator, so runs are reproducible bit for
bit across platforms; compare_formulations puts the solver, the tableau
matrix product, and (at alpha = beta = 1) the Motzkin count side by side.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from . import motzkin
from .ansatz import AnsatzKind, ansatz_eval
from .shapes import config_str, configurations


class ParamError(ValueError):
    """Chain parameters out of range."""


_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64: 64-bit state, one addition and two xor-multiply mixes
    per draw.  Tiny, well documented, and identical on every platform."""

    GAMMA = 0x9E3779B97F4A7C15
    MIX1 = 0xBF58476D1CE4E5B9
    MIX2 = 0x94D049BB133111EB

    def __init__(self, seed):
        self.state = seed & _MASK64

    def next_u64(self):
        self.state = (self.state + self.GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * self.MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * self.MIX2) & _MASK64
        return z ^ (z >> 31)

    def random(self):
        """Float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def split(self):
        """Independent child generator (seeded from this one's stream)."""
        return SplitMix64(self.next_u64())


@dataclass(frozen=True)
class ChainParams:
    n: int
    q: Fraction
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.n < 0:
            raise ParamError("n must be nonnegative")
        if not 0 < self.alpha <= 1:
            raise ParamError("alpha must lie in (0, 1]")
        if not 0 < self.beta <= 1:
            raise ParamError("beta must lie in (0, 1]")
        if not 0 <= self.q <= 1:
            raise ParamError("q must lie in [0, 1]")


def _index(tau):
    idx = 0
    for t in tau:
        idx = (idx << 1) | t
    return idx


def _moves(params):
    """For each state index, the list of (probability, target index) of the
    off-diagonal moves; the diagonal is the leftover mass."""
    n = params.n
    share = Fraction(1, n + 1)
    out = []
    for tau in configurations(n):
        idx = _index(tau)
        moves = []
        for i in range(n - 1):
            if tau[i] == 1 and tau[i + 1] == 0:
                moves.append((share, idx - (1 << (n - 1 - i)) + (1 << (n - 2 - i))))
            elif tau[i] == 0 and tau[i + 1] == 1:
                moves.append(
                    (params.q * share, idx + (1 << (n - 1 - i)) - (1 << (n - 2 - i)))
                )
        if n > 0 and tau[0] == 0:
            moves.append((params.alpha * share, idx + (1 << (n - 1))))
        if n > 0 and tau[n - 1] == 1:
            moves.append((params.beta * share, idx - 1))
        out.append(moves)
    return out


def transition_matrix(params):
    """Row-stochastic 2^n x 2^n matrix of exact Fractions, binary order."""
    size = 1 << params.n
    p = [[Fraction(0)] * size for _ in range(size)]
    for idx, moves in enumerate(_moves(params)):
        total = Fraction(0)
        for prob, target in moves:
            p[idx][target] += prob
            total += prob
        p[idx][idx] += 1 - total
    return p


def _solve_exact(a, rhs):
    """Gaussian elimination over Fractions; raises on a singular system."""
    size = len(a)
    a = [row[:] + [rhs[i]] for i, row in enumerate(a)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular system; stationary vector not unique")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(size):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [a[r][size] for r in range(size)]


def steady_state_exact(params, limit=10):
    """The unique stationary distribution, as exact Fractions by state."""
    if params.n > limit:
        raise ValueError(f"n={params.n} exceeds the exact-solver limit {limit}")
    size = 1 << params.n
    p = transition_matrix(params)
    # rows of P^T - I; the last one is redundant and becomes normalization
    a = [
        [p[x][y] - (1 if x == y else 0) for x in range(size)]
        for y in range(size)
    ]
    a[size - 1] = [Fraction(1)] * size
    rhs = [Fraction(0)] * size
    rhs[size - 1] = Fraction(1)
    sol = _solve_exact(a, rhs)
    if any(v <= 0 for v in sol):
        raise ArithmeticError("stationary vector not strictly positive")
    return {tau: sol[_index(tau)] for tau in configurations(params.n)}


def simulate(params, steps, burn_in, seed):
    """Empirical occupancy frequencies over `steps` steps after `burn_in`,
    starting from the empty state.  Same seed, same result, always."""
    if steps <= 0:
        raise ValueError("steps must be positive")
    if burn_in < 0:
        raise ValueError("burn_in must be nonnegative")
    size = 1 << params.n
    thresholds = []
    targets = []
    for moves in _moves(params):
        acc = 0.0
        th = []
        tg = []
        for prob, target in moves:
            acc += float(prob)
            th.append(acc)
            tg.append(target)
        thresholds.append(tuple(th))
        targets.append(tuple(tg))
    counts = [0] * size
    state = 0
    rng = SplitMix64(seed)
    gamma, mix1, mix2 = SplitMix64.GAMMA, SplitMix64.MIX1, SplitMix64.MIX2
    s = rng.state
    scale = 2.0**-53
    for step in range(burn_in + steps):
        s = (s + gamma) & _MASK64
        z = s
        z = ((z ^ (z >> 30)) * mix1) & _MASK64
        z = ((z ^ (z >> 27)) * mix2) & _MASK64
        u = ((z ^ (z >> 31)) >> 11) * scale
        th = thresholds[state]
        for k, bound in enumerate(th):
            if u < bound:
                state = targets[state][k]
                break
        if step >= burn_in:
            counts[state] += 1
    return {
        tau: counts[_index(tau)] / steps for tau in configurations(params.n)
    }


def total_variation(dist1, dist2):
    """Half the l1 distance between two distributions over the same states."""
    keys = set(dist1) | set(dist2)
    return sum(abs(dist1.get(k, 0) - dist2.get(k, 0)) for k in keys) / 2


@dataclass(frozen=True)
class FormulationRow:
    tau: tuple
    solver: Fraction
    ansatz: Fraction
    motzkin: Fraction | None
    ok: bool


@dataclass(frozen=True)
class FormulationReport:
    params: ChainParams
    rows: tuple
    passed: bool


def compare_formulations(params, limit=10):
    """Stationary probabilities by three independent routes: the exact
    linear solver, the tableau matrix product, and (when alpha = beta = 1)
    the Motzkin path count.  All must agree exactly."""
    solver = steady_state_exact(params, limit=limit)
    weights = {
        tau: ansatz_eval(AnsatzKind.TABLEAU, tau).evaluate(
            params.q, params.alpha, params.beta
        )
        for tau in configurations(params.n)
    }
    z = sum(weights.values(), Fraction(0))
    use_motzkin = params.alpha == 1 and params.beta == 1
    rows = []
    passed = True
    for tau in configurations(params.n):
        from_ansatz = weights[tau] / z
        from_motzkin = None
        if use_motzkin:
            from_motzkin = motzkin.genfun_type(tau).eval_q(params.q) / z
        ok = solver[tau] == from_ansatz and (
            from_motzkin is None or from_motzkin == solver[tau]
        )
        passed = passed and ok
        rows.append(FormulationRow(tau, solver[tau], from_ansatz, from_motzkin, ok))
    return FormulationReport(params, tuple(rows), passed)


def distribution_to_json(dist, rational=True):
    """JSON rows [{"state": "010", "prob": "5/37"}, ...] in binary order."""
    states = [
        {"state": config_str(tau), "prob": str(p) if rational else p}
        for tau, p in dist.items()
    ]
    return json.dumps(states, indent=2)


def distribution_to_csv(dist, rational=True):
    """CSV with a state,prob header, exact probabilities as p/q strings."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["state", "prob"])
    for tau, p in dist.items():
        writer.writerow([config_str(tau), str(p) if rational else repr(p)])
    return buf.getvalue()


def matrix_to_csv(matrix):
    """CSV dump of a Fraction matrix, entries as exact p/q strings."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    for row in matrix:
        writer.writerow([str(x) for x in row])
    return buf.getvalue()

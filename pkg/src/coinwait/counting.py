"""Exact avoidance and first-occurrence counting via a pattern automaton.

Two integer sequences carry the whole story for a pattern of length m:

* sigma_n: how many length-n toss strings avoid the pattern entirely.
* tau_n:   how many length-n strings contain it exactly once, flush at
           the right-hand end (the game ends on toss n).

Both are computed by pushing exact state-occupancy counts through a small
deterministic automaton whose state is the length of the longest pattern
prefix currently matched.  Appending one toss to every live string either
keeps it alive or finishes its game, which is the doubling identity

    2 * sigma_{n-1} = sigma_n + tau_n.

The self-overlap coefficients c_j of the pattern tie the two sequences
together, sigma_n = sum_j c_j * tau_{j+n}, and telescoping the doubling
identity gives the exact dyadic mass balance checked by verify_identities.

Everything here is integer arithmetic on Python ints, so counts of any
size stay exact; there is no overflow to guard against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dyadic import DyadicRational
from .errors import InvalidHorizonError, InvalidIndexError
from .pattern import CorrelationSet, Pattern, correlation_set

__all__ = [
    "AvoidanceAutomaton",
    "OccurrenceCounts",
    "IdentityReport",
    "build_automaton",
    "occurrence_counts",
    "extend_counts",
    "closed_form_tau",
    "fibonacci",
    "first_occurrence_distribution",
    "mean_via_sigma_series",
    "verify_identities",
]


def fibonacci(n: int) -> int:
    """F_n with F_0 = 0, F_1 = 1, computed exactly.

    >>> [fibonacci(k) for k in range(8)]
    [0, 1, 1, 2, 3, 5, 8, 13]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@dataclass(frozen=True, slots=True)
class AvoidanceAutomaton:
    """Deterministic matcher over states 0..m for a length-m pattern.

    State k means the last k tosses equal the pattern's length-k prefix and
    no longer prefix fits.  State m is the absorbing "pattern complete"
    state; transitions are stored only for the m live states, two per state.
    """

    pattern: Pattern
    transitions: tuple[tuple[int, int], ...]

    @property
    def accepting_state(self) -> int:
        return len(self.pattern)

    def step(self, state: int, bit: int) -> int:
        return self.transitions[state][bit]


def _prefix_function(bits: tuple[int, ...]) -> list[int]:
    # pi[i] = length of the longest proper prefix of bits[:i+1] that is
    # also its suffix (classic failure function).
    pi = [0] * len(bits)
    k = 0
    for i in range(1, len(bits)):
        while k > 0 and bits[i] != bits[k]:
            k = pi[k - 1]
        if bits[i] == bits[k]:
            k += 1
        pi[i] = k
    return pi


def build_automaton(p: Pattern) -> AvoidanceAutomaton:
    """Build the longest-prefix matcher for a pattern.

    From state k, the pattern's own next bit advances to k + 1; the other
    bit falls back to the automaton's move from the failure state, so each
    target is itself the longest prefix consistent with the new stream
    suffix.  Construction is deterministic and linear in the length.
    """
    bits = p.bits
    m = len(bits)
    pi = _prefix_function(bits)
    table: list[tuple[int, int]] = []
    for k in range(m):
        row = []
        for b in (0, 1):
            if b == bits[k]:
                row.append(k + 1)
            elif k == 0:
                row.append(0)
            else:
                row.append(table[pi[k - 1]][b])
        table.append(tuple(row))
    return AvoidanceAutomaton(pattern=p, transitions=tuple(table))


@dataclass(frozen=True, slots=True)
class OccurrenceCounts:
    """Exact sigma/tau sequences for one pattern up to a horizon.

    `state_occupancy` holds the per-state counts of the avoiding strings of
    length `horizon`, which is exactly the information needed to resume the
    recursion (see extend_counts).
    """

    pattern: Pattern
    horizon: int
    sigma: tuple[int, ...]
    tau: tuple[int, ...]
    state_occupancy: tuple[int, ...]


def occurrence_counts(p: Pattern, horizon: int) -> OccurrenceCounts:
    """Count avoiding strings and first completions for lengths 0..horizon.

    One step appends one toss to every avoiding string: counts move through
    the automaton, and whatever lands in the absorbing state is that step's
    tau.  sigma_0 = 1 (the empty string), tau_0 = 0.
    """
    if horizon < 0:
        raise InvalidHorizonError(f"horizon must be >= 0, got {horizon}")
    start = _initial_counts(p)
    return _advance(start, horizon)


def extend_counts(counts: OccurrenceCounts, horizon: int) -> OccurrenceCounts:
    """Resume a previous computation out to a larger horizon.

    Exact arithmetic makes the split irrelevant: extending counts computed
    to N1 yields bit-identical sequences to a single run out to N2.
    """
    if horizon < counts.horizon:
        raise InvalidHorizonError(
            f"cannot shrink horizon {counts.horizon} to {horizon}"
        )
    return _advance(counts, horizon)


def _initial_counts(p: Pattern) -> OccurrenceCounts:
    occupancy = [0] * len(p)
    occupancy[0] = 1  # the empty string sits at state 0
    return OccurrenceCounts(p, 0, (1,), (0,), tuple(occupancy))


def _advance(counts: OccurrenceCounts, horizon: int) -> OccurrenceCounts:
    auto = build_automaton(counts.pattern)
    m = len(counts.pattern)
    occupancy = list(counts.state_occupancy)
    sigma = list(counts.sigma)
    tau = list(counts.tau)
    for _ in range(counts.horizon + 1, horizon + 1):
        nxt = [0] * m
        absorbed = 0
        for k, c in enumerate(occupancy):
            if c == 0:
                continue
            for b in (0, 1):
                t = auto.transitions[k][b]
                if t == m:
                    absorbed += c
                else:
                    nxt[t] += c
        occupancy = nxt
        sigma.append(sum(nxt))
        tau.append(absorbed)
    return OccurrenceCounts(
        counts.pattern, horizon, tuple(sigma), tuple(tau), tuple(occupancy)
    )


# Closed forms for the four families with classical answers.  Each maps the
# string length n to the number of strings whose game ends exactly on toss n.
_CLOSED_FORMS = {
    "01": lambda n: n - 1,
    "11": lambda n: fibonacci(n - 1),
    "100": lambda n: fibonacci(n) - 1,
    "110": lambda n: fibonacci(n) - 1,
}


def closed_form_tau(family: str, n: int) -> int:
    """First-completion count tau_n for the families 01, 11, 100, 110.

    01 gives n - 1; 11 gives F_{n-1}; 100 and 110 both give F_n - 1.
    Only defined from n = len(family) upward.
    """
    try:
        form = _CLOSED_FORMS[family]
    except KeyError:
        raise ValueError(
            f"no closed form for {family!r}; choose from {sorted(_CLOSED_FORMS)}"
        ) from None
    if n < len(family):
        raise InvalidIndexError(
            f"tau is undefined below the pattern length ({n} < {len(family)})"
        )
    return form(n)


def first_occurrence_distribution(
    p: Pattern, horizon: int
) -> tuple[DyadicRational, ...]:
    """Exact probabilities p_n = tau_n / 2**n for n = 0..horizon.

    p_n is the chance the game ends exactly on toss n.  The mass not yet
    seen by the horizon is exactly sigma_N / 2**N.
    """
    if horizon < len(p):
        raise InvalidHorizonError(
            f"horizon {horizon} is below the pattern length {len(p)}"
        )
    counts = occurrence_counts(p, horizon)
    return tuple(DyadicRational(t, n) for n, t in enumerate(counts.tau))


def mean_via_sigma_series(p: Pattern, horizon: int) -> DyadicRational:
    """Partial sum of sigma_n / 2**n for n = 0..horizon, exactly.

    The full series equals the expected waiting time; partial sums increase
    monotonically toward it, and the caller judges convergence from the
    exact residual (the series is a verification path, the closed form is
    the source of truth).
    """
    counts = occurrence_counts(p, horizon)
    total = DyadicRational(0)
    for n, s in enumerate(counts.sigma):
        total = total + DyadicRational(s, n)
    return total


@dataclass(frozen=True, slots=True)
class IdentityReport:
    """Outcome of the exact identity checks for one pattern.

    Each failure list holds the indices n where the identity broke; all
    three empty means every identity held at every index.
    """

    pattern: Pattern
    horizon: int
    correlation: CorrelationSet
    doubling_failures: tuple[int, ...]
    expansion_failures: tuple[int, ...]
    telescoping_failures: tuple[int, ...]

    @property
    def all_hold(self) -> bool:
        return not (
            self.doubling_failures
            or self.expansion_failures
            or self.telescoping_failures
        )


def verify_identities(p: Pattern, horizon: int) -> IdentityReport:
    """Check the three exact identities tying sigma, tau and the overlaps.

    (a) doubling:     2 * sigma_{n-1} == sigma_n + tau_n         (1 <= n <= N)
    (b) expansion:    sigma_n == sum_j c_j * tau_{j+n}           (0 <= n <= N-m)
    (c) telescoping:  sum_{n<=q} tau_n / 2**n == 1 - sigma_q / 2**q
                      as canonical dyadics, at every q from m to N.

    Failures land in the report rather than raising; they indicate a bug,
    since all three are theorems.
    """
    m = len(p)
    if horizon < 2 * m:
        raise InvalidHorizonError(
            f"need horizon >= 2 * pattern length ({2 * m}), got {horizon}"
        )
    counts = occurrence_counts(p, horizon)
    corr = correlation_set(p)
    sigma, tau = counts.sigma, counts.tau

    doubling = tuple(
        n for n in range(1, horizon + 1) if 2 * sigma[n - 1] != sigma[n] + tau[n]
    )

    coeffs = corr.coefficients
    expansion = tuple(
        n
        for n in range(0, horizon - m + 1)
        if sigma[n] != sum(c * tau[j + n] for j, c in enumerate(coeffs, start=1))
    )

    telescoping = []
    mass = DyadicRational(0)
    for q in range(m, horizon + 1):
        mass = mass + DyadicRational(tau[q], q)
        if mass != DyadicRational(1) - DyadicRational(sigma[q], q):
            telescoping.append(q)

    return IdentityReport(
        pattern=p,
        horizon=horizon,
        correlation=corr,
        doubling_failures=doubling,
        expansion_failures=expansion,
        telescoping_failures=tuple(telescoping),
    )

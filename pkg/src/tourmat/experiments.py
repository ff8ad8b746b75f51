"""Verifiers, exhaustive min-rank search, Monte Carlo sampling, permutation scans.

Every function returns a :class:`~tourmat.report.Report` whose pass flag
means exactly "zero violation records".  Randomness is keyed per sample by
(seed, labels) so any run is replayable and independent of worker count;
worker parallelism only splits contiguous index ranges and merges with
order-independent reductions.  Checks against conjectured (unproven) values
are reported as information, never as violations.
"""

from __future__ import annotations

import itertools
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import bounds
from .fields import Field, Scalar
from .matrices import (
    DenseMatrix,
    LinearMix,
    WeightSeq,
    linear_mix_matrix,
    reversal_sum_matrix,
    tournament_matrix,
    transitive_matrix,
)
from .rank import principal_minor_det, rank
from .report import Report
from .rng import ByteStream
from .tournaments import (
    MAX_ENUM_BITS,
    Tournament,
    TooLargeError,
    enumerate_all,
    format_tournament,
    n_pairs,
    random_tournament,
    transitive,
)

MAX_PERM_N = 9
ARGMIN_CODES_KEPT = 16


class BadRangeError(ValueError):
    """Transitive verification needs n >= 3."""


class DegenerateMixError(ValueError):
    """alpha + beta = 0 makes the linear-mix rank bound vacuous; run refused."""


class TooManyPermutationsError(ValueError):
    """Full permutation scan requested beyond n = 9."""


def _random_nonzero(field: Field, stream: ByteStream) -> Scalar:
    """Uniform nonzero element for GF(p); uniform integer in 1..100 for Q."""
    if field.is_prime_field:
        return Scalar(field, 1 + stream.randrange(field.char - 1))
    return Scalar(field, 1 + stream.randrange(100))


def random_weights(field: Field, n: int, seed: int, *labels) -> WeightSeq:
    """n independent nonzero weights from the stream keyed by (seed, labels)."""
    stream = ByteStream(seed, "weights", *labels)
    return WeightSeq(field, tuple(_random_nonzero(field, stream) for _ in range(n)))


def cycling_weights(field: Field, n: int, values=None) -> WeightSeq:
    """Weights cycling through `values`; default (1, 2), or (1,) when p = 2."""
    if values is None:
        values = (1,) if field.char == 2 else (1, 2)
    return WeightSeq.of(field, [values[k % len(values)] for k in range(n)])


def counting_weights(field: Field, n: int) -> WeightSeq:
    """The sequence 1, 2, ..., n kept nonzero: literal over Q, and walked
    through the nonzero residues 1..p-1 cyclically over GF(p)."""
    if field.is_prime_field:
        p = field.char
        return WeightSeq.of(field, [1 + (k % (p - 1)) for k in range(n)])
    return WeightSeq.of(field, range(1, n + 1))


def _rank_histogram(ranks) -> dict:
    hist: dict = {}
    for r in ranks:
        hist[str(r)] = hist.get(str(r), 0) + 1
    return hist


def _resolve_tournaments(n: int, tournaments, seed: int):
    """Normalize the tournament source: "exhaustive", a sample count, or a list."""
    if tournaments == "exhaustive":
        return enumerate_all(n)
    if isinstance(tournaments, int):
        return (random_tournament(n, seed, i) for i in range(tournaments))
    return iter(tournaments)


# ---------------------------------------------------------------------------
# Theorem verifiers
# ---------------------------------------------------------------------------

def verify_transitive(n_range, field: Field, trials: int = 50, seed: int = 0,
                      sequence_source=None) -> Report:
    """Check rank >= floor(2n/3) - 1 for transitive tournaments.

    For each n, each trial draws a weight sequence (random nonzero entries,
    or a fixed list cycled to length n) and checks the reverse-ranked
    transitive matrix plus a transitive tournament under a random vertex
    order.  Holds over every field, including characteristic 2.
    """
    t0 = time.perf_counter()
    n_list = list(n_range)
    for n in n_list:
        if n < 3:
            raise BadRangeError(f"transitive check needs n >= 3, got {n}")
    fixed = None
    if sequence_source is not None:
        fixed = list(sequence_source)
        trials = 1
    records = []
    for n in n_list:
        bound = bounds.transitive_floor_bound(n)
        for k in range(trials):
            if fixed is not None:
                weights = WeightSeq.of(field, [fixed[i % len(fixed)] for i in range(n)])
            else:
                weights = random_weights(field, n, seed, "transitive", n, k)
            r_dn = rank(transitive_matrix(weights)).rank
            records.append({
                "n": n, "trial": k, "kind": "reverse_ranked",
                "rank": r_dn, "bound": bound, "pass": r_dn >= bound,
            })
            order = ByteStream(seed, "transitive-order", n, k).shuffled(range(1, n + 1))
            r_perm = rank(tournament_matrix(transitive(n, order), weights)).rank
            records.append({
                "n": n, "trial": k, "kind": "random_order",
                "rank": r_perm, "bound": bound, "pass": r_perm >= bound,
            })
    violations = sum(1 for rec in records if not rec["pass"])
    report = Report(
        experiment_id="transitive-floor",
        parameters={
            "n_range": [min(n_list), max(n_list)],
            "field": str(field),
            "trials": trials,
            "seed": seed,
            "sequence_source": "fixed" if fixed is not None else "random",
        },
        records=records,
        summary={
            "checks": len(records),
            "violations": violations,
            "min_rank": min(rec["rank"] for rec in records),
            "pass": violations == 0,
        },
    )
    report.wall_time_s = time.perf_counter() - t0
    return report


def verify_reversal(n: int, field: Field, weights: WeightSeq,
                    tournaments="exhaustive", seed: int = 0) -> Report:
    """Check the reversal identity and its rank consequences per tournament.

    (i) matrix + reversed-tournament matrix = pair-sum matrix, entrywise and
    in every characteristic; in characteristic != 2 additionally (ii) the
    pair-sum matrix has rank >= n - 2, (iii) the two ranks sum to >= n - 2,
    and (iv) the larger is >= ceil((n - 2)/2).
    """
    t0 = time.perf_counter()
    char2 = field.char == 2
    sum_ref = reversal_sum_matrix(weights)
    rank_sum = None if char2 else rank(sum_ref).rank
    low = bounds.reversal_sum_bound(n)
    half = -(-low // 2)  # ceil((n - 2) / 2)
    records = []
    for t in _resolve_tournaments(n, tournaments, seed):
        mt = tournament_matrix(t, weights)
        mr = tournament_matrix(t.reverse(), weights)
        identity_ok = (mt + mr) == sum_ref
        if char2:
            rec = {"code": t.code, "identity_ok": identity_ok,
                   "rank_t": None, "rank_rev": None, "pass": identity_ok}
        else:
            rt = rank(mt).rank
            rr = rank(mr).rank
            ok = (identity_ok and rank_sum >= low and rt + rr >= low
                  and max(rt, rr) >= half)
            rec = {"code": t.code, "identity_ok": identity_ok,
                   "rank_t": rt, "rank_rev": rr, "pass": ok}
        records.append(rec)
    violations = sum(1 for rec in records if not rec["pass"])
    report = Report(
        experiment_id="reversal-identity",
        parameters={
            "n": n, "field": str(field), "weights": str(weights), "seed": seed,
            "tournaments": tournaments if isinstance(tournaments, (str, int)) else "explicit",
            "rank_checks": "refused: characteristic 2" if char2 else "enabled",
        },
        records=records,
        summary={
            "checks": len(records),
            "violations": violations,
            "rank_sum_matrix": rank_sum,
            "pass": violations == 0,
        },
    )
    report.wall_time_s = time.perf_counter() - t0
    return report


def verify_lipschitz(n: int, field: Field, weights: WeightSeq,
                     flips: int = 1000, seed: int = 0) -> Report:
    """Check the two perturbation bounds: |rank change| <= 2 per single edge
    flip and per single weight replacement, over random instances."""
    t0 = time.perf_counter()
    records = []
    for i in range(flips):
        t = random_tournament(n, seed, i)
        stream = ByteStream(seed, "lipschitz", i)
        base = rank(tournament_matrix(t, weights)).rank
        u = 1 + stream.randrange(n)
        offset = 1 + stream.randrange(n - 1)  # keeps v distinct from u
        v = 1 + (u - 1 + offset) % n
        flipped = rank(tournament_matrix(t.flip_edge(u, v), weights)).rank
        pos = stream.randrange(n)
        z = _random_nonzero(field, stream)
        replaced = rank(tournament_matrix(t, weights.replace(pos, z))).rank
        ok = abs(flipped - base) <= 2 and abs(replaced - base) <= 2
        records.append({
            "trial": i, "rank": base, "rank_flipped": flipped,
            "rank_replaced": replaced, "pass": ok,
        })
    violations = sum(1 for rec in records if not rec["pass"])
    report = Report(
        experiment_id="edge-flip-lipschitz",
        parameters={"n": n, "field": str(field), "weights": str(weights),
                    "flips": flips, "seed": seed},
        records=records,
        summary={"checks": len(records), "violations": violations,
                 "pass": violations == 0},
    )
    report.wall_time_s = time.perf_counter() - t0
    return report


def _certify_weights(field: Field, n: int, s: int, z: Scalar) -> WeightSeq:
    """First s + 1 weights equal z; the rest varied nonzero filler."""
    vals = [z] * (s + 1)
    for i in range(s + 1, n):
        if field.is_prime_field:
            vals.append(Scalar(field, 1 + i % (field.char - 1)))
        else:
            vals.append(Scalar(field, i + 1))
    return WeightSeq(field, tuple(vals))


def verify_certifiability(n_max: int, fields, z_values=(1,)) -> Report:
    """Exhaustively check that the leading s x s or (s+1) x (s+1) minor is
    nonzero whenever the first s + 1 weights are equal.

    Runs every tournament on n <= n_max vertices, every s in 1..n-1, every
    field, every z.  Records are aggregated per (n, s, field, z).
    """
    t0 = time.perf_counter()
    records = []
    for field in fields:
        for raw_z in z_values:
            z = field.scalar(raw_z)
            if z.is_zero():
                raise ValueError(f"z = {raw_z} vanishes in {field}")
            for n in range(2, n_max + 1):
                for s in range(1, n):
                    weights = _certify_weights(field, n, s, z)
                    checked = 0
                    bad = 0
                    first_bad = None
                    for t in enumerate_all(n):
                        m = tournament_matrix(t, weights)
                        ok = (not principal_minor_det(m, s).is_zero()
                              or not principal_minor_det(m, s + 1).is_zero())
                        checked += 1
                        if not ok:
                            bad += 1
                            if first_bad is None:
                                first_bad = t.code
                    records.append({
                        "n": n, "s": s, "field": str(field), "z": str(z),
                        "tournaments": checked, "violations": bad,
                        "first_bad_code": first_bad, "pass": bad == 0,
                    })
    violations = sum(rec["violations"] for rec in records)
    report = Report(
        experiment_id="certifiability-minors",
        parameters={"n_max": n_max, "fields": [str(f) for f in fields],
                    "z_values": [str(z) for z in z_values]},
        records=records,
        summary={
            "checks": sum(rec["tournaments"] for rec in records),
            "violations": violations,
            "pass": violations == 0,
        },
    )
    report.wall_time_s = time.perf_counter() - t0
    return report


def verify_constant_seq(n_range, fields, value: int = 1) -> Report:
    """For constant weights every tournament has the same matrix; check its
    rank is >= n - 1 over every field, and equals n - 1 exactly when the
    characteristic divides n - 1 (else n)."""
    t0 = time.perf_counter()
    records = []
    for field in fields:
        a = field.scalar(value)
        if a.is_zero():
            raise ValueError(f"constant {value} vanishes in {field}")
        for n in n_range:
            weights = WeightSeq(field, (a,) * n)
            # the constant matrix a(J - I), built directly
            zero = field.zero
            flat = tuple(zero if r == c else a for r in range(n) for c in range(n))
            const = DenseMatrix(field, n, n, flat)
            built_trans = tournament_matrix(transitive(n), weights)
            built_rand = tournament_matrix(random_tournament(n, 1, n), weights)
            collapse_ok = built_trans == const and built_rand == const
            r = rank(const).rank
            low = bounds.constant_seq_bound(n)
            char_divides = field.char != 0 and (n - 1) % field.char == 0
            full_ok = (r == n - 1) if char_divides else (r == n)
            records.append({
                "n": n, "field": str(field), "rank": r, "bound": low,
                "char_divides_n_minus_1": char_divides,
                "pass": collapse_ok and r >= low and full_ok,
            })
    violations = sum(1 for rec in records if not rec["pass"])
    report = Report(
        experiment_id="constant-weights",
        parameters={"fields": [str(f) for f in fields], "value": value},
        records=records,
        summary={"checks": len(records), "violations": violations,
                 "pass": violations == 0},
    )
    report.wall_time_s = time.perf_counter() - t0
    return report


def verify_f_ensemble(n: int, field: Field, weights: WeightSeq, alpha, beta,
                      tournaments="exhaustive", seed: int = 0) -> Report:
    """Check the linear-mix reversal law and rank-sum bound per tournament.

    The mix matrix plus its reversal's must equal (alpha + beta) times the
    pair-sum matrix entrywise; in characteristic != 2 the two ranks must sum
    to >= n - 2.  alpha + beta = 0 is refused outright.
    """
    t0 = time.perf_counter()
    mix = LinearMix(field.scalar(alpha), field.scalar(beta))
    if mix.degenerate():
        raise DegenerateMixError(
            f"alpha + beta = 0 in {field}: the pair-sum matrix vanishes and the"
            " rank-sum bound says nothing; refusing to report a vacuous pass"
        )
    char2 = field.char == 2
    scale = mix.alpha + mix.beta
    base_sum = reversal_sum_matrix(weights)
    expected = DenseMatrix(field, n, n, tuple(scale * e for e in base_sum.entries))
    low = bounds.reversal_sum_bound(n)
    records = []
    for t in _resolve_tournaments(n, tournaments, seed):
        mt = linear_mix_matrix(t, weights, mix)
        mr = linear_mix_matrix(t.reverse(), weights, mix)
        identity_ok = (mt + mr) == expected
        if char2:
            rec = {"code": t.code, "identity_ok": identity_ok,
                   "rank_t": None, "rank_rev": None, "pass": identity_ok}
        else:
            rt = rank(mt).rank
            rr = rank(mr).rank
            rec = {"code": t.code, "identity_ok": identity_ok,
                   "rank_t": rt, "rank_rev": rr,
                   "pass": identity_ok and rt + rr >= low}
        records.append(rec)
    violations = sum(1 for rec in records if not rec["pass"])
    report = Report(
        experiment_id="linear-mix-reversal",
        parameters={
            "n": n, "field": str(field), "weights": str(weights),
            "alpha": str(mix.alpha), "beta": str(mix.beta), "seed": seed,
            "tournaments": tournaments if isinstance(tournaments, (str, int)) else "explicit",
            "rank_checks": "refused: characteristic 2" if char2 else "enabled",
        },
        records=records,
        summary={"checks": len(records), "violations": violations,
                 "pass": violations == 0},
    )
    report.wall_time_s = time.perf_counter() - t0
    return report


def verify_finite_field_bound(n_max: int, p: int, values=None) -> Report:
    """Exhaustively check rank >= n/(p - 1) - 1 over GF(p) for cycling weights."""
    t0 = time.perf_counter()
    field = Field(p)
    records = []
    for n in range(1, n_max + 1):
        weights = cycling_weights(field, n, values)
        low = bounds.finite_field_bound(n, p)
        min_rank = None
        bad = 0
        checked = 0
        for t in enumerate_all(n):
            r = rank(tournament_matrix(t, weights)).rank
            checked += 1
            min_rank = r if min_rank is None else min(min_rank, r)
            if r < low:
                bad += 1
        records.append({
            "n": n, "tournaments": checked, "min_rank": min_rank,
            "bound": str(low), "violations": bad, "pass": bad == 0,
        })
    violations = sum(rec["violations"] for rec in records)
    report = Report(
        experiment_id="finite-field-floor",
        parameters={"n_max": n_max, "field": str(field),
                    "weights": "cycling" if values is None else str(list(values))},
        records=records,
        summary={"checks": sum(rec["tournaments"] for rec in records),
                 "violations": violations, "pass": violations == 0},
    )
    report.wall_time_s = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# Exhaustive min-rank search and Monte Carlo sampling (worker-splittable)
# ---------------------------------------------------------------------------

def _split_range(start: int, end: int, parts: int):
    """Contiguous chunks covering [start, end); at most `parts` of them."""
    total = end - start
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    chunks = []
    lo = start
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        if hi > lo:
            chunks.append((lo, hi))
        lo = hi
    return chunks


def _minrank_chunk(args):
    weights, n, lo, hi = args
    return [(t.code, rank(tournament_matrix(t, weights)).rank)
            for t in enumerate_all(n, lo, hi)]


def _mc_chunk(args):
    weights, n, seed, lo, hi = args
    return [(i, rank(tournament_matrix(random_tournament(n, seed, i), weights)).rank)
            for i in range(lo, hi)]


def _run_chunks(fn, jobs, workers):
    if workers <= 1 or len(jobs) <= 1:
        results = [fn(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(fn, jobs))
    merged = []
    for part in results:
        merged.extend(part)
    return merged


def minrank_exhaustive(n: int, field: Field, weights: WeightSeq,
                       shard=None, workers: int = 1,
                       conjecture_c=None) -> Report:
    """Rank every tournament on n vertices (codes in `shard`, default all).

    Returns the minimum rank, the first few argmin codes, and the full rank
    histogram.  Over a prime field the proven floor n/(p - 1) - 1 is
    asserted per tournament; a user-supplied constant c only adds an
    informational "min_rank >= c*n" flag, never a violation.
    """
    t0 = time.perf_counter()
    if n_pairs(n) > MAX_ENUM_BITS:
        raise TooLargeError(f"n={n} has {n_pairs(n)} pair bits; cap is {MAX_ENUM_BITS}")
    total = 1 << n_pairs(n)
    lo, hi = shard if shard is not None else (0, total)
    if not 0 <= lo <= hi <= total:
        raise ValueError(f"bad shard [{lo}, {hi}) for {total} codes")
    pairs = _run_chunks(_minrank_chunk,
                        [(weights, n, a, b) for a, b in _split_range(lo, hi, workers)],
                        workers)
    low = bounds.finite_field_bound(n, field.char) if field.is_prime_field else None
    records = []
    for code, r in pairs:
        ok = True if low is None else r >= low
        records.append({"code": code, "rank": r, "pass": ok})
    ranks = [r for _, r in pairs]
    min_rank = min(ranks) if ranks else None
    argmin = [code for code, r in pairs if r == min_rank]
    violations = sum(1 for rec in records if not rec["pass"])
    kept = argmin[:ARGMIN_CODES_KEPT]
    summary = {
        "min_rank": min_rank,
        "argmin_count": len(argmin),
        "argmin_codes": kept,
        "argmin_tournaments": [format_tournament(Tournament(n, c)) for c in kept],
        "rank_histogram": _rank_histogram(ranks),
        "ff_bound": str(low) if low is not None else None,
        "violations": violations,
        "pass": violations == 0,
    }
    if conjecture_c is not None:
        c = Fraction(conjecture_c)
        summary["conjecture_c"] = str(c)
        summary["min_rank_ge_cn"] = min_rank is not None and min_rank >= c * n
    report = Report(
        experiment_id="minrank-exhaustive",
        parameters={"n": n, "field": str(field), "weights": str(weights),
                    "shard": [lo, hi]},
        records=records,
        summary=summary,
    )
    report.wall_time_s = time.perf_counter() - t0
    return report


def montecarlo_rank(n: int, field: Field, weights: WeightSeq, samples: int,
                    seed: int, workers: int = 1) -> Report:
    """Sample uniform tournaments by (seed, index) and record every rank.

    In characteristic != 2 each rank is asserted against the certified floor
    of n/2 - 21*sqrt(n*ln n); when that floor is <= 0 the check is vacuous
    and flagged as such.  The report depends only on (n, field, weights,
    samples, seed) - never on the worker count.
    """
    t0 = time.perf_counter()
    char2 = field.char == 2
    low = bounds.half_minus_tail_floor(n)
    vacuous = bounds.half_minus_tail_vacuous(n)
    pairs = _run_chunks(_mc_chunk,
                        [(weights, n, seed, a, b)
                         for a, b in _split_range(0, samples, workers)],
                        workers)
    records = []
    for i, r in pairs:
        ok = True if char2 else r >= low
        records.append({"index": i, "rank": r, "bound": low, "pass": ok})
    ranks = [r for _, r in pairs]
    violations = sum(1 for rec in records if not rec["pass"])
    report = Report(
        experiment_id="montecarlo-rank",
        parameters={
            "n": n, "field": str(field), "weights": str(weights),
            "samples": samples, "seed": seed,
            "theorem_check": "refused: characteristic 2" if char2 else "enabled",
        },
        records=records,
        summary={
            "min_rank": min(ranks) if ranks else None,
            "median_rank": statistics.median(ranks) if ranks else None,
            "rank_histogram": _rank_histogram(ranks),
            "bound_floor": low,
            "bound_vacuous": vacuous,
            "violations": violations,
            "pass": violations == 0,
        },
    )
    report.wall_time_s = time.perf_counter() - t0
    return report


def perm_scan(t: Tournament, field: Field, weights: WeightSeq,
              mode: str = "all", sample: int = 1000, seed: int = 0) -> Report:
    """Scan ranks of the fixed tournament's matrix over permuted weights.

    mode "all" iterates every permutation (n <= 9); mode "sample" draws
    `sample` seeded random permutations.  Reports the distinct ranks with one
    witness permutation each - findings only, no pass/fail: whether the rank
    is permutation-invariant is an open question.
    """
    t0 = time.perf_counter()
    n = t.n
    if len(weights) != n:
        raise ValueError(f"{len(weights)} weights for n={n}")
    if mode == "all":
        if n > MAX_PERM_N:
            raise TooManyPermutationsError(f"n={n} has n! > {MAX_PERM_N}! permutations")
        perms = itertools.permutations(range(1, n + 1))
    elif mode == "sample":
        perms = (tuple(ByteStream(seed, "perm", i).shuffled(range(1, n + 1)))
                 for i in range(sample))
    else:
        raise ValueError(f'mode must be "all" or "sample", got {mode!r}')
    witness: dict = {}
    counts: dict = {}
    scanned = 0
    for perm in perms:
        r = rank(tournament_matrix(t, weights.permuted(perm))).rank
        scanned += 1
        counts[r] = counts.get(r, 0) + 1
        if r not in witness:
            witness[r] = perm
    records = [{"rank": r, "count": counts[r], "witness_perm": list(witness[r])}
               for r in sorted(witness)]
    report = Report(
        experiment_id="perm-scan",
        parameters={"n": n, "field": str(field), "weights": str(weights),
                    "tournament_code": t.code, "mode": mode,
                    "sample": sample if mode == "sample" else None, "seed": seed},
        records=records,
        summary={"scanned": scanned, "distinct_ranks": sorted(witness),
                 "violations": 0, "pass": True, "exploratory": True},
    )
    report.wall_time_s = time.perf_counter() - t0
    return report

"""Grid verification of the predictors against the carry-count and exact oracles."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields

from .binomial_gcd import SteppedFamily, gcd_exact, gcd_valuation_fast
from .primes_digits import primes_up_to
from .theorem_q import check_weakened_hypothesis, predict_weakened, predict_theorem_q, strict_applies
from .valuation import ord_p_integer

MODES = ("strict", "weakened", "both")
NA = "n/a"


@dataclass(frozen=True)
class PredictionRecord:
    n: int
    q: int
    p: int
    hypothesis: str  # strict | weakened | none
    predicted: int | str
    actual: int
    match: bool

    @property
    def applicable(self) -> bool:
        return self.hypothesis != "none"


RECORD_FIELDS = [f.name for f in fields(PredictionRecord)]


@dataclass
class VerificationReport:
    n_max: int
    q_max: int
    mode: str
    records: list[PredictionRecord] = field(default_factory=list)
    oracle_checked: int = 0
    oracle_disagreements: list[tuple[int, int, int]] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def checked(self) -> int:
        return len(self.records)

    @property
    def matched(self) -> int:
        return sum(1 for r in self.records if r.applicable and r.match)

    @property
    def mismatches(self) -> list[PredictionRecord]:
        return [r for r in self.records if r.applicable and not r.match]

    @property
    def mismatched(self) -> int:
        return len(self.mismatches)

    @property
    def not_applicable(self) -> int:
        return sum(1 for r in self.records if not r.applicable)

    @property
    def strict_mismatched(self) -> int:
        return sum(1 for r in self.mismatches if r.hypothesis == "strict")

    @property
    def failed(self) -> bool:
        return bool(self.strict_mismatched or self.oracle_disagreements)

    def summary(self) -> dict:
        return {
            "n_max": self.n_max,
            "q_max": self.q_max,
            "mode": self.mode,
            "checked": self.checked,
            "matched": self.matched,
            "mismatched": self.mismatched,
            "not_applicable": self.not_applicable,
            "strict_mismatched": self.strict_mismatched,
            "oracle_checked": self.oracle_checked,
            "oracle_disagreements": len(self.oracle_disagreements),
            "wall_time": round(self.wall_time, 3),
        }


def _record(n: int, q: int, p: int, actual: int, mode: str) -> PredictionRecord:
    if mode in ("strict", "both") and strict_applies(q, p):
        pred = predict_theorem_q((n, q), p).predicted_ord
        return PredictionRecord(n, q, int(p), "strict", pred, actual, pred == actual)
    if mode in ("weakened", "both") and check_weakened_hypothesis(n, q, p)[0]:
        pred = predict_weakened(n, q, p).predicted_ord
        return PredictionRecord(n, q, int(p), "weakened", pred, actual, pred == actual)
    return PredictionRecord(n, q, int(p), "none", NA, actual, False)


def _verify_rows(ns: list[int], q_max: int, mode: str, exact_oracle_limit: int):
    records = []
    oracle_checked = 0
    disagreements = []
    for n in ns:
        primes = primes_up_to(n)
        for q in range(1, min(q_max, n - 1) + 1):
            family = SteppedFamily(n, q)
            exact = gcd_exact(family) if n <= exact_oracle_limit else None
            for p in primes:
                actual = gcd_valuation_fast(family, p)
                if exact is not None:
                    oracle_checked += 1
                    if ord_p_integer(exact, p) != actual:
                        disagreements.append((n, q, int(p)))
                records.append(_record(n, q, p, actual, mode))
    return records, oracle_checked, disagreements


def verify_grid(n_max: int, q_max: int, mode: str = "strict",
                exact_oracle_limit: int = 200, jobs: int = 1) -> VerificationReport:
    """Check every (n, q, p) with 1 <= q < n <= n_max, q <= q_max, p prime <= n.

    For n <= exact_oracle_limit the carry-count valuation is also checked
    against the exact GCD. Records are sorted by (n, q, p) whatever ``jobs`` is.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    start = time.perf_counter()
    report = VerificationReport(n_max, q_max, mode)
    ns = list(range(2, n_max + 1)) if q_max >= 1 else []
    if jobs == 1 or len(ns) < 2:
        parts = [_verify_rows(ns, q_max, mode, exact_oracle_limit)]
    else:
        # strided split so the costlier large-n rows are shared out evenly
        chunks = [ns[i::jobs] for i in range(jobs) if ns[i::jobs]]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            parts = list(pool.map(_verify_rows, chunks, [q_max] * len(chunks),
                                  [mode] * len(chunks), [exact_oracle_limit] * len(chunks)))
    for records, checked, disagreements in parts:
        report.records.extend(records)
        report.oracle_checked += checked
        report.oracle_disagreements.extend(disagreements)
    report.records.sort(key=lambda r: (r.n, r.q, r.p))
    report.oracle_disagreements.sort()
    report.wall_time = time.perf_counter() - start
    return report


def records_to_jsonl(records) -> str:
    return "".join(json.dumps(asdict(r)) + "\n" for r in records)


def records_to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RECORD_FIELDS)
    for r in records:
        writer.writerow([getattr(r, name) for name in RECORD_FIELDS])
    return buf.getvalue()


def format_table(report: VerificationReport) -> str:
    s = report.summary()
    lines = [f"verify  n_max={s['n_max']}  q_max={s['q_max']}  mode={s['mode']}", ""]
    width = max(len(k) for k in s)
    for key in ("checked", "matched", "mismatched", "not_applicable",
                "strict_mismatched", "oracle_checked", "oracle_disagreements", "wall_time"):
        lines.append(f"  {key:<{width}}  {s[key]}")
    if report.mismatches:
        lines += ["", "mismatches:", f"  {'n':>6} {'q':>4} {'p':>6}  {'hypothesis':<10} {'pred':>4} {'actual':>6}"]
        for r in report.mismatches:
            lines.append(f"  {r.n:>6} {r.q:>4} {r.p:>6}  {r.hypothesis:<10} {r.predicted!s:>4} {r.actual:>6}")
    if report.oracle_disagreements:
        lines += ["", "oracle disagreements (n, q, p):"]
        lines += [f"  {t}" for t in report.oracle_disagreements]
    return "\n".join(lines) + "\n"

"""Command-line surface: tables, identity suites, oracle runs, sampling, scans.

Subcommands
-----------
table   exact pmf/cdf at one parameter point and one q (json or csv)
verify  identity suites over all parameter tuples up to --nmax
oracle  formula-vs-brute-force comparisons (cg | tensor | grassmann | all)
sample  seeded draws plus an empirical summary
scan    per-q minimum pmf over a rational grid (reported, never asserted)

Reports are deterministic for a fixed invocation (including seed) except
for the wall-clock field; exact values are rendered losslessly as "a/b"
strings and sparse-coefficient polynomials.  Exit code 0 means every
verdict was PASS or SKIPPED; 1 means some verdict FAILed; 2 means the
invocation itself was invalid.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import __version__
from .dist import (
    DistTable,
    Params,
    Regime,
    classify_regime,
    cdf_limit,
    cdf_q,
    dist_table,
    normalize_params,
    parameter_tuples,
    pmf_limit,
    pmf_limit_hahn_form,
    pmf_q,
    pmf_q_hahn_form,
    pmf_q_relaxed,
    positivity_scan,
    recurrence_residual,
    support_limit,
    verify_cor23,
)
from .errors import DenominatorZero, QRacahError, ZeroLowerParameter
from .oracles import (
    count_intersection_pairs,
    enumerate_subspaces,
    pair_count_formula,
    pmf_cg_oracle,
    tensor_pmf_table,
)
from .qseries import Q, RationalFunction, q_binomial, q_chu_vandermonde, sears_43
from .sampler import RNG_ID, build_sampler, draw, empirical_summary

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def format_fraction(v) -> str:
    fr = Fraction(v)
    return f"{fr.numerator}/{fr.denominator}"


def parse_q(text: str):
    if text == "formal":
        return Q
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(
            f"q must be a rational like 2 or 101/100, or 'formal': {exc}")


def format_q(q) -> str:
    if isinstance(q, RationalFunction):
        return "formal"
    q = Fraction(q)
    return "1" if q == 1 else format_fraction(q)


def value_to_json(v):
    """Exact value as JSON: "a/b" for rationals, sparse pairs for Q(q)."""
    if isinstance(v, RationalFunction):
        return {
            "num": [[e, str(c)] for e, c in v.numerator_pairs()],
            "den": [[e, str(c)] for e, c in v.denominator_pairs()],
        }
    return format_fraction(v)


def value_to_text(v) -> str:
    if isinstance(v, RationalFunction):
        return str(v)
    return format_fraction(v)


@dataclass
class RunReport:
    command: str
    params: dict | None = None
    regime: str | None = None
    q: str | None = None
    results: list = dc_field(default_factory=list)
    verdicts: list = dc_field(default_factory=list)
    seed: int | None = None
    started: float = dc_field(default_factory=time.monotonic)

    def verdict(self, name: str, status: str, detail: str = "") -> None:
        self.verdicts.append({"name": name, "status": status, "detail": detail})

    def exit_code(self) -> int:
        return 1 if any(v["status"] == FAIL for v in self.verdicts) else 0

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "regime": self.regime,
            "q": self.q,
            "results": self.results,
            "verdicts": self.verdicts,
            "meta": {
                "versions": {"library": __version__, "rng": RNG_ID},
                "seed": self.seed,
                "elapsed_ms": int((time.monotonic() - self.started) * 1000),
            },
        }


def params_dict(p: Params) -> dict:
    d = {"n": p.n, "m": p.m, "k": p.k, "l": p.l, "M": p.M, "N": p.N,
         "normalized_from": None}
    if p.normalized_from is not None:
        d["normalized_from"] = list(p.normalized_from)
    return d


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def cmd_table(args) -> tuple[RunReport, list[list[str]]]:
    p = normalize_params(args.n, args.m, args.k, args.l)
    q = args.q
    table = dist_table(p, q)
    report = RunReport("table", params=params_dict(p),
                       regime=table.regime.value, q=format_q(table.q))
    rows = []
    csv_rows = [["x", "pmf", "cdf"] + (["pmf_float", "cdf_float"]
                                       if args.approx else [])]
    for x in range(p.m + 1):
        entry = {"x": x, "pmf": value_to_json(table.pmf[x]),
                 "cdf": value_to_json(table.cdf[x])}
        line = [str(x), value_to_text(table.pmf[x]), value_to_text(table.cdf[x])]
        if args.approx and table.regime is not Regime.FORMAL:
            entry["pmf_float"] = float(table.pmf[x])
            entry["cdf_float"] = float(table.cdf[x])
            line += [repr(float(table.pmf[x])), repr(float(table.cdf[x]))]
        rows.append(entry)
        csv_rows.append(line)
    report.results = rows

    one = table.q ** 0
    report.verdict("cdf-normalization",
                   PASS if table.cdf[-1] == one else FAIL,
                   "cdf(m) = 1 exactly")
    if table.regime in (Regime.PRIME_POWER, Regime.ONE):
        ok = all(v >= 0 for v in table.pmf)
        report.verdict("positivity", PASS if ok else FAIL,
                       f"proven regime {table.regime.value}")
    elif table.regime is Regime.FORMAL:
        report.verdict("positivity", SKIPPED, "formal q: sign undefined")
    else:
        mn = min(table.pmf)
        report.verdict("positivity", SKIPPED,
                       f"unproven regime at q={format_q(table.q)}; "
                       f"observed min pmf = {format_fraction(mn)}")
    if p.normalized_from is not None:
        report.verdict("parameter-normalization", PASS,
                       f"input {p.normalized_from} folded to {p.as_tuple()} "
                       "by the m -> n-m symmetry")
    return report, csv_rows


# ---------------------------------------------------------------------------
# verify suites
# ---------------------------------------------------------------------------

def _suite_sum1(nmax):
    checked, failures = 0, []
    for p in parameter_tuples(nmax):
        checked += 1
        total = RationalFunction(0)
        for x in range(p.m + 1):
            total = total + pmf_q(p, x)
        if total != 1:
            failures.append(f"{p.as_tuple()}")
    return checked, failures, []


def _suite_presentations(nmax):
    checked, failures = 0, []
    for p in parameter_tuples(nmax):
        for x in range(p.m + 1):
            checked += 1
            if pmf_q(p, x) != pmf_q_hahn_form(p, x):
                failures.append(f"{p.as_tuple()} x={x} (formal)")
            lim = pmf_limit(p, x)
            if lim != pmf_limit_hahn_form(p, x):
                failures.append(f"{p.as_tuple()} x={x} (limit)")
            if pmf_q(p, x).at_one() != lim:
                failures.append(f"{p.as_tuple()} x={x} (limit coherence)")
    return checked, failures, []


def _suite_cdf(nmax):
    checked, failures = 0, []
    for p in parameter_tuples(nmax):
        running = RationalFunction(0)
        running_lim = Fraction(0)
        for x in range(p.m + 1):
            checked += 1
            running = running + pmf_q(p, x)
            running_lim += pmf_limit(p, x)
            if cdf_q(p, x) != running:
                failures.append(f"{p.as_tuple()} x={x} (formal)")
            if cdf_limit(p, x) != running_lim:
                failures.append(f"{p.as_tuple()} x={x} (limit)")
            if not verify_cor23(p.n, p.M, p.N, p.m, x):
                failures.append(f"{p.as_tuple()} x={x} (partial-sum identity)")
    return checked, failures, []


def _relaxed_tuples(nmax):
    for n in range(nmax + 1):
        for m in range(n + 1):
            for k in range(n + 1):
                for l in range(max(0, m + k - n), min(m, k) + 1):
                    yield n, m, k, l


def _suite_symmetry(nmax):
    checked, failures = 0, []
    for n, m, k, l in _relaxed_tuples(nmax):
        mirror = normalize_params(n, m, k, l)
        for x in range(min(m, n - m) + 1):
            checked += 1
            if pmf_q_relaxed(n, m, k, l, x) != pmf_q(mirror, x):
                failures.append(f"({n},{m},{k},{l}) x={x}")
    return checked, failures, []


def _suite_vanishing(nmax):
    checked, failures = 0, []
    for p in parameter_tuples(nmax):
        for x in range(p.k + 1, p.m + 1):
            checked += 1
            if pmf_q(p, x) != 0:
                failures.append(f"{p.as_tuple()} x={x}")
    return checked, failures, []


def _suite_recurrence(nmax):
    checked, failures, skipped = 0, [], []
    for p in parameter_tuples(nmax):
        for x in range(p.m + 1):
            checked += 1
            try:
                if recurrence_residual(p, x) != 0:
                    failures.append(f"{p.as_tuple()} x={x}")
            except DenominatorZero:
                skipped.append(f"{p.as_tuple()} x={x} (n-2x degenerate)")
    return checked, failures, skipped


def _suite_support(nmax):
    checked, failures = 0, []
    for p in parameter_tuples(nmax):
        sup = support_limit(p)
        for x in range(p.m + 1):
            checked += 1
            positive = pmf_limit(p, x) > 0
            if positive != (x in sup):
                failures.append(f"{p.as_tuple()} x={x}")
    return checked, failures, []


def _suite_chu(nmax):
    # exponent grid; gamma in (-(a-1), 0] would put a zero in (c; q)_a
    checked, failures, skipped = 0, [], []
    for a in range(0, 7):
        for beta in range(-6, 7):
            for gamma in range(-6, 7):
                if a >= 1 and -(a - 1) <= gamma <= 0:
                    skipped.append(f"a={a} b=q^{beta} c=q^{gamma} (zero lower)")
                    continue
                checked += 1
                lhs, rhs = q_chu_vandermonde(a, beta, gamma)
                if lhs != rhs:
                    failures.append(f"a={a} b=q^{beta} c=q^{gamma}")
    return checked, failures, skipped


def _sears_grid(smax=4, span=8):
    # balanced exponent tuples: f is forced by a+b+c = d+e+f+s-1
    base = (-5, -3, -2, -1, 1, 2, 4)
    for s in range(0, smax + 1):
        for a in base:
            for b in base:
                for c in (-4, -1, 3):
                    for d in (-6, -2, 2):
                        for e in (-5, -1, 3):
                            f = a + b + c - d - e - (s - 1)
                            if abs(f) <= span:
                                yield s, a, b, c, d, e, f


def _pochhammer_nonzero(c: int, s: int) -> bool:
    # (q**c; q)_s != 0 in Q(q)  <=>  c not in {0, -1, ..., -(s-1)}
    return not (0 <= -c <= s - 1)


def sears_degenerate(s, a, b, c, d, e, f) -> bool:
    """Parameter collisions where the transformation degenerates pointwise.

    The identity holds for generic balanced parameters; at specializations
    where a right-side prefactor Pochhammer vanishes against a pole of the
    (generically s-term) right-side series, finite evaluation sees 0 times
    a truncated series and the printed equality genuinely fails.  A tuple
    is generic when every Pochhammer below is nonzero through index s.
    """
    points = (d, e, f,                       # left lower parameters
              d + e - b - c, 1 - s + a - e,  # right-series lower parameters
              e - a,                         # prefactor numerator collision
              1 - s - f)                     # prefactor denominator (de/abc)
    return any(not _pochhammer_nonzero(c_, s) for c_ in points)


def _suite_sears(nmax):
    checked, failures, skipped = 0, [], []
    for s, a, b, c, d, e, f in _sears_grid():
        if sears_degenerate(s, a, b, c, d, e, f):
            skipped.append(
                f"s={s} ({a},{b},{c};{d},{e},{f}) (degenerate specialization)")
            continue
        try:
            lhs, rhs = sears_43(s, a, b, c, d, e, f)
        except ZeroLowerParameter:
            skipped.append(f"s={s} ({a},{b},{c};{d},{e},{f}) (zero lower)")
            continue
        checked += 1
        if lhs != rhs:
            failures.append(f"s={s} ({a},{b},{c};{d},{e},{f})")
    return checked, failures, skipped


VERIFY_SUITES = {
    "sum1": _suite_sum1,
    "presentations": _suite_presentations,
    "cdf": _suite_cdf,
    "symmetry": _suite_symmetry,
    "vanishing": _suite_vanishing,
    "recurrence": _suite_recurrence,
    "support": _suite_support,
    "chu": _suite_chu,
    "sears": _suite_sears,
}


def cmd_verify(args) -> tuple[RunReport, list[list[str]]]:
    names = list(VERIFY_SUITES) if args.suite == "all" else [args.suite]
    report = RunReport("verify", q="formal", regime=Regime.FORMAL.value)
    csv_rows = [["suite", "checked", "failed", "skipped"]]
    for name in names:
        checked, failures, skipped = VERIFY_SUITES[name](args.nmax)
        entry = {
            "suite": name,
            "checked": checked,
            "failed": len(failures),
            "skipped": len(skipped),
            "first_counterexample": failures[0] if failures else None,
        }
        report.results.append(entry)
        csv_rows.append([name, str(checked), str(len(failures)),
                         str(len(skipped))])
        detail = f"{checked} checks"
        if skipped:
            detail += f", {len(skipped)} skipped"
        if failures:
            detail += f"; first counterexample: {failures[0]}"
        report.verdict(name, FAIL if failures else PASS, detail)
        if skipped and not failures:
            report.verdict(f"{name}-skipped", SKIPPED,
                           f"{len(skipped)} degenerate/error cases excluded")
    return report, csv_rows


# ---------------------------------------------------------------------------
# oracle comparisons
# ---------------------------------------------------------------------------

def _oracle_cg(nmax):
    checked, failures = 0, []
    for p in parameter_tuples(nmax):
        for x in range(p.m + 1):
            checked += 1
            if pmf_cg_oracle(p, x) != pmf_limit(p, x):
                failures.append(f"{p.as_tuple()} x={x}")
    return checked, failures


def _oracle_tensor(nmax):
    checked, failures = 0, []
    for p in parameter_tuples(nmax):
        table = tensor_pmf_table(p)
        checked += 1
        if sum(table) != 1:
            failures.append(f"{p.as_tuple()} (projectors do not resolve 1)")
        for x in range(p.m + 1):
            checked += 1
            if table[x] != pmf_limit(p, x):
                failures.append(f"{p.as_tuple()} x={x}")
    return checked, failures


def _oracle_grassmann(nmax, q):
    checked, failures = 0, []
    for n in range(nmax + 1):
        for m in range(n + 1):
            checked += 1
            count = len(enumerate_subspaces(q, n, m))
            expected = q_binomial(n, m, Fraction(q))
            if count != expected:
                failures.append(f"|Gr({m},{n})|_{q} = {count} != {expected}")
    for n, m, k, l in _relaxed_tuples(nmax):
        for i in range(m + 1):
            checked += 1
            if count_intersection_pairs(q, n, m, k, l, i) != \
                    pair_count_formula(q, n, m, k, l, i):
                failures.append(f"pairs({q},{n},{m},{k},{l},i={i})")
    return checked, failures


def cmd_oracle(args) -> tuple[RunReport, list[list[str]]]:
    which = (["cg", "tensor", "grassmann"] if args.which == "all"
             else [args.which])
    defaults = {"cg": 8, "tensor": 6, "grassmann": 4}
    report = RunReport("oracle")
    csv_rows = [["oracle", "checked", "failed"]]
    for name in which:
        nmax = args.nmax if args.nmax is not None else defaults[name]
        if name == "cg":
            checked, failures = _oracle_cg(nmax)
        elif name == "tensor":
            checked, failures = _oracle_tensor(nmax)
        else:
            checked, failures = _oracle_grassmann(nmax, args.q)
        report.results.append({
            "oracle": name,
            "checked": checked,
            "failed": len(failures),
            "first_counterexample": failures[0] if failures else None,
        })
        csv_rows.append([name, str(checked), str(len(failures))])
        detail = f"{checked} comparisons"
        if failures:
            detail += f"; first counterexample: {failures[0]}"
        report.verdict(name, FAIL if failures else PASS, detail)
    return report, csv_rows


# ---------------------------------------------------------------------------
# sample / scan
# ---------------------------------------------------------------------------

def cmd_sample(args) -> tuple[RunReport, list[list[str]]]:
    p = normalize_params(args.n, args.m, args.k, args.l)
    if isinstance(args.q, RationalFunction):
        raise QRacahError("sampling needs a numeric q")
    state = build_sampler(p, args.q, seed=args.seed)
    draws = draw(state, args.count)
    summary = empirical_summary(draws, p, args.q) if draws else None
    report = RunReport("sample", params=params_dict(p),
                       regime=classify_regime(Fraction(args.q)).value,
                       q=format_q(Fraction(args.q)), seed=args.seed)
    result = {"draws": draws, "summary": None}
    csv_rows = [["x", "count", "frequency", "pmf"]]
    if summary is not None:
        result["summary"] = {
            "count": summary.count,
            "frequencies": list(summary.frequencies),
            "mean": format_fraction(summary.mean),
            "variance": format_fraction(summary.variance),
            "exact_mean": format_fraction(summary.exact_mean),
            "exact_variance": format_fraction(summary.exact_variance),
            "max_abs_error": format_fraction(summary.max_abs_error),
            "chi_square": format_fraction(summary.chi_square),
            "chi_square_float": float(summary.chi_square),
            "off_support": summary.off_support,
        }
        table = dist_table(p, Fraction(args.q))
        for x in range(p.m + 1):
            csv_rows.append([
                str(x), str(summary.frequencies[x]),
                format_fraction(Fraction(summary.frequencies[x], summary.count)),
                format_fraction(table.pmf[x]),
            ])
        report.verdict("support-safety",
                       PASS if summary.off_support == 0 else FAIL,
                       "no draw off the exact support")
    report.results.append(result)
    return report, csv_rows


def cmd_scan(args) -> tuple[RunReport, list[list[str]]]:
    p = normalize_params(args.n, args.m, args.k, args.l)
    lo, hi, steps = args.q_from, args.q_to, args.steps
    if steps < 0:
        raise QRacahError("--steps must be nonnegative")
    grid = [lo + (hi - lo) * Fraction(j, steps) for j in range(steps + 1)] \
        if steps else [lo]
    points = positivity_scan(p, grid)
    report = RunReport("scan", params=params_dict(p), regime=None, q=None)
    csv_rows = [["q", "min_pmf", "argmin_x"] + (
        ["min_pmf_float"] if args.approx else [])]
    for pt in points:
        entry = {"q": format_fraction(pt.q),
                 "min_pmf": format_fraction(pt.min_pmf),
                 "argmin_x": pt.argmin_x}
        line = [format_fraction(pt.q), format_fraction(pt.min_pmf),
                str(pt.argmin_x)]
        if args.approx:
            entry["min_pmf_float"] = float(pt.min_pmf)
            line.append(repr(float(pt.min_pmf)))
        report.results.append(entry)
        csv_rows.append(line)
    # the positivity range is an open question: report, never assert
    return report, csv_rows


# ---------------------------------------------------------------------------
# wiring
# ---------------------------------------------------------------------------

def _add_param_flags(sub):
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--l", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qracah",
        description="Exact q-Racah probability distribution toolkit")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    t = subs.add_parser("table", help="pmf/cdf table at one parameter point")
    _add_param_flags(t)
    t.add_argument("--q", type=parse_q, default=Q,
                   help="rational like 2 or 101/100, '1', or 'formal'")
    t.add_argument("--format", choices=("json", "csv"), default="json")
    t.add_argument("--approx", action="store_true",
                   help="append float approximation columns")
    t.add_argument("--out", default=None)

    v = subs.add_parser("verify", help="identity suites over parameter tuples")
    v.add_argument("--suite", default="all",
                   choices=("all",) + tuple(VERIFY_SUITES))
    v.add_argument("--nmax", type=int, default=8)
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.add_argument("--out", default=None)

    o = subs.add_parser("oracle", help="brute-force oracle comparisons")
    o.add_argument("--which", choices=("cg", "tensor", "grassmann", "all"),
                   default="all")
    o.add_argument("--nmax", type=int, default=None,
                   help="defaults: cg 8, tensor 6, grassmann 4")
    o.add_argument("--q", type=int, default=2,
                   help="field order for the grassmann oracle (2, 3, 4, 5)")
    o.add_argument("--format", choices=("json", "csv"), default="json")
    o.add_argument("--out", default=None)

    s = subs.add_parser("sample", help="seeded draws and empirical summary")
    _add_param_flags(s)
    s.add_argument("--q", type=parse_q, default=Fraction(1))
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--out", default=None)

    c = subs.add_parser("scan", help="minimum pmf over a rational q grid")
    _add_param_flags(c)
    c.add_argument("--q-from", dest="q_from", type=Fraction, required=True)
    c.add_argument("--q-to", dest="q_to", type=Fraction, required=True)
    c.add_argument("--steps", type=int, required=True)
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.add_argument("--approx", action="store_true")
    c.add_argument("--out", default=None)
    return parser


COMMANDS = {
    "table": cmd_table,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "sample": cmd_sample,
    "scan": cmd_scan,
}


def _emit(args, report: RunReport, csv_rows: list[list[str]]) -> None:
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(csv_rows)
        text = buf.getvalue()
    else:
        text = json.dumps(report.to_dict(), sort_keys=True,
                          separators=(",", ": "), indent=1) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, csv_rows = COMMANDS[args.command](args)
    except QRacahError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    _emit(args, report, csv_rows)
    return report.exit_code()


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

"""Command-line front end.

Reads the subject text as the first line of a file or stdin, dispatches to
the library, and emits deterministic TSV (no header) or JSON reports.

Exit codes: 0 success, 1 usage error, 2 input or format error,
3 validation failure (gadget verify found a violation).
"""

from __future__ import annotations

import json
import sys
from concurrent.futures import ThreadPoolExecutor

import click

from . import bench as bench_mod
from . import editcover, gadget, hamcover
from .lcpk import lcp_k_all_pairs
from .hamcover import coverage_sweep
from .restricted import restricted_covers_ed, restricted_seeds_ed
from .textcore import DEFAULT_WILDCARD_CHAR, PenaltyMatrix, Text


class InputDataError(Exception):
    """Unreadable or ill-formed input: text, penalty file, or instance file."""


class ValidationFailure(Exception):
    """A gadget verification found a violated property."""


EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_VALIDATION = 3


def _read_first_line(path: str | None) -> str:
    """Subject text: first line of the input stream, trailing newline stripped."""
    try:
        if path is None or path == "-":
            data = sys.stdin.readline()
        else:
            with open(path, "r", encoding="ascii") as fh:
                data = fh.readline()
    except OSError as exc:
        raise InputDataError(f"cannot read input: {exc}")
    except UnicodeDecodeError as exc:
        raise InputDataError(f"input is not ASCII: {exc}")
    return data.rstrip("\n")


def _build_text(raw: str, wildcard: str, alphabet: str | None = None) -> Text:
    try:
        return Text.from_str(raw, alphabet, wildcard)
    except ValueError as exc:
        raise InputDataError(str(exc))


def parse_penalty_file(content: str) -> PenaltyMatrix:
    """Penalty file grammar (one directive per line, '#' comments allowed)::

        alphabet ab
        sub 0 1        # one row per alphabet symbol, row-major
        sub 1 0
        ins 1 1        # insertion costs per symbol
        del 1 1        # deletion costs per symbol

    All costs are nonnegative integers; the implied metric axioms are
    checked after parsing.
    """
    alphabet: str | None = None
    sub: list[list[int]] = []
    ins: list[int] | None = None
    dele: list[int] | None = None
    for lineno, raw in enumerate(content.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "alphabet":
            if len(rest) != 1 or alphabet is not None:
                raise InputDataError(f"line {lineno}: expected a single alphabet declaration")
            alphabet = rest[0]
            continue
        try:
            values = [int(x) for x in rest]
        except ValueError:
            raise InputDataError(f"line {lineno}: non-integer cost in {raw!r}")
        if head == "sub":
            sub.append(values)
        elif head == "ins":
            if ins is not None:
                raise InputDataError(f"line {lineno}: duplicate ins vector")
            ins = values
        elif head == "del":
            if dele is not None:
                raise InputDataError(f"line {lineno}: duplicate del vector")
            dele = values
        else:
            raise InputDataError(f"line {lineno}: unknown directive {head!r}")
    if alphabet is None or ins is None or dele is None or not sub:
        raise InputDataError("penalty file needs alphabet, sub rows, ins and del vectors")
    try:
        matrix = PenaltyMatrix(alphabet, sub, ins, dele)
        matrix.require_metric()
    except ValueError as exc:
        raise InputDataError(f"invalid penalty matrix: {exc}")
    return matrix


def _load_penalty(spec: str | None, raw_text: str, wildcard: str) -> PenaltyMatrix:
    if spec is None:
        raise click.UsageError("--distance edit requires --penalty FILE (or 'unit')")
    if spec == "unit":
        alphabet = "".join(sorted(set(raw_text) - {wildcard}))
        return PenaltyMatrix.unit(alphabet)
    try:
        with open(spec, "r", encoding="ascii") as fh:
            content = fh.read()
    except OSError as exc:
        raise InputDataError(f"cannot read penalty file: {exc}")
    matrix = parse_penalty_file(content)
    if wildcard in matrix.alphabet:
        raise InputDataError(
            f"wildcard character {wildcard!r} must not appear in the declared alphabet")
    return matrix


def _emit(columns: list[str], rows: list[list], fmt: str) -> None:
    if fmt == "json":
        click.echo(json.dumps({"columns": columns, "rows": rows}))
    else:
        for row in rows:
            click.echo("\t".join(str(v) for v in row))


def _fmt_num(x: float) -> str:
    return f"{x:.6f}"


_distance_opt = click.option(
    "--distance", type=click.Choice(["hamming", "levenshtein", "edit"]),
    default="hamming", show_default=True)
_k_opt = click.option("--k", type=click.IntRange(min=0), default=0, show_default=True)
_penalty_opt = click.option(
    "--penalty", default=None,
    help="Penalty file for --distance edit, or 'unit' for unit costs.")
_format_opt = click.option(
    "--format", "fmt", type=click.Choice(["tsv", "json"]), default="tsv",
    show_default=True)
_wildcard_opt = click.option(
    "--wildcard", default=DEFAULT_WILDCARD_CHAR, show_default=True,
    help="Byte standing for the wildcard symbol.")
_threads_opt = click.option(
    "--threads", type=click.IntRange(min=1), default=1, show_default=True,
    help="Worker pool size for per-factor work items.")


def _prepare(path, distance, penalty, wildcard):
    if len(wildcard) != 1:
        raise click.UsageError("--wildcard takes a single character")
    raw = _read_first_line(path)
    matrix = None
    if distance == "edit":
        matrix = _load_penalty(penalty, raw, wildcard)
        t = _build_text(raw, wildcard, matrix.alphabet)
    else:
        t = _build_text(raw, wildcard)
    return t, matrix


@click.group()
def cli():
    """Approximate quasiperiodicity analysis."""


@cli.command()
@click.argument("input", required=False)
@_distance_opt
@_k_opt
@click.option("--mode", type=click.Choice(["prefix", "factor"]), default="prefix",
              show_default=True)
@_penalty_opt
@_format_opt
@_wildcard_opt
@_threads_opt
def coverage(input, distance, k, mode, penalty, fmt, wildcard, threads):
    """k-coverage of every prefix (rows: ell, coverage) or factor (a, b, coverage)."""
    t, matrix = _prepare(input, distance, penalty, wildcard)
    n = len(t)
    try:
        if mode == "prefix":
            cov = editcover.prefix_coverage(t, distance, k, matrix)
            rows = [[ell, cov[ell - 1]] for ell in range(1, n + 1)]
            _emit(["ell", "coverage"], rows, fmt)
            return
        if distance == "hamming" and threads > 1 and n:
            table = lcp_k_all_pairs(t, k)
            with ThreadPoolExecutor(max_workers=threads) as pool:
                per_start = list(pool.map(
                    lambda a: coverage_sweep(table.row(a), n, n - a), range(n)))
        else:
            per_start = editcover.factor_coverage(t, distance, k, matrix)
        rows = [[a, a + off, val]
                for a, row in enumerate(per_start) for off, val in enumerate(row)]
        _emit(["a", "b", "coverage"], rows, fmt)
    except ValueError as exc:
        raise InputDataError(str(exc))


def _threshold_rows(result: dict[str, int | None]) -> list[list]:
    keys = sorted(result, key=lambda s: (len(s), s))
    return [[key, "none" if result[key] is None else result[key]] for key in keys]


def _escalate(t: Text, fn, max_len: int) -> dict[str, int]:
    """Raise the budget until every candidate resolves; thresholds are <= |C|."""
    level = 0
    while True:
        result = fn(t, level)
        if all(v is not None for v in result.values()) or level > max_len:
            return result
        level += 1


def _edit_threshold_rows(report) -> list[list]:
    keys = sorted(report.thresholds, key=lambda s: (len(s), s))
    return [[key, report.thresholds[key], int(report.thresholds[key] == report.minimal)]
            for key in keys]


@cli.command()
@click.argument("input", required=False)
@_distance_opt
@_k_opt
@click.option("--escalate", is_flag=True,
              help="Hamming only: raise the budget until every factor resolves.")
@_penalty_opt
@_format_opt
@_wildcard_opt
@_threads_opt
def covers(input, distance, k, escalate, penalty, fmt, wildcard, threads):
    """Restricted approximate covers.

    Hamming: rows (factor, minimal level or 'none') for levels <= k.
    Edit: rows (factor, threshold, minimal-flag).
    """
    if distance == "levenshtein":
        raise click.UsageError("covers supports --distance hamming or edit "
                               "(levenshtein is unit-cost edit)")
    t, matrix = _prepare(input, distance, penalty, wildcard)
    if distance == "hamming":
        if escalate:
            result = _escalate(t, hamcover.k_restricted_covers, len(t))
        else:
            result = hamcover.k_restricted_covers(t, k)
        _emit(["factor", "min_level"], _threshold_rows(result), fmt)
        return
    report = restricted_covers_ed(t, matrix, threads=threads)
    _emit(["factor", "threshold", "minimal"], _edit_threshold_rows(report), fmt)


@cli.command()
@click.argument("input", required=False)
@_distance_opt
@_k_opt
@click.option("--escalate", is_flag=True,
              help="Hamming only: raise the budget until every factor resolves.")
@_penalty_opt
@_format_opt
@_wildcard_opt
@_threads_opt
def seeds(input, distance, k, escalate, penalty, fmt, wildcard, threads):
    """Restricted approximate seeds (candidates with 2|C| <= |T|)."""
    if distance == "levenshtein":
        raise click.UsageError("seeds supports --distance hamming or edit "
                               "(levenshtein is unit-cost edit)")
    t, matrix = _prepare(input, distance, penalty, wildcard)
    if distance == "hamming":
        if escalate:
            result = _escalate(t, hamcover.k_restricted_seeds, len(t) // 2)
        else:
            result = hamcover.k_restricted_seeds(t, k)
        _emit(["factor", "min_level"], _threshold_rows(result), fmt)
        return
    report = restricted_seeds_ed(t, matrix, threads=threads)
    _emit(["factor", "threshold", "minimal"], _edit_threshold_rows(report), fmt)


@cli.command()
@click.argument("input", required=False)
@click.option("--variant", type=click.Choice(["exact-border", "approx-border"]),
              required=True)
@_k_opt
@_format_opt
@_wildcard_opt
def enhanced(input, variant, k, fmt, wildcard):
    """Best enhanced cover under Hamming distance (row: candidate, start, end, coverage)."""
    raw = _read_first_line(input)
    t = _build_text(raw, wildcard)
    if variant == "exact-border":
        best = hamcover.enhanced_cover_exact_border(t, k)
    else:
        best = hamcover.enhanced_cover_approx_border(t, k)
    if best is None:
        _emit(["candidate", "start", "end", "coverage"], [["none", "", "", ""]], fmt)
    else:
        _emit(["candidate", "start", "end", "coverage"],
              [[best.candidate, best.start, best.end, best.coverage]], fmt)


@cli.group()
def gadget_cmd():
    """NP-hardness constructions from consensus instance files."""


cli.add_command(gadget_cmd, name="gadget")


def _load_instance(path: str) -> gadget.ConsensusInstance:
    try:
        with open(path, "r", encoding="ascii") as fh:
            content = fh.read()
    except OSError as exc:
        raise InputDataError(f"cannot read instance file: {exc}")
    try:
        return gadget.parse_instance(content)
    except ValueError as exc:
        raise InputDataError(str(exc))


@gadget_cmd.command("build-cover")
@click.argument("instance", required=True)
@_format_opt
def gadget_build_cover(instance, fmt):
    """Encode the instance as the cover text T with target length c."""
    enc = gadget.build_cover_instance(_load_instance(instance))
    _emit(["text", "target_length"], [[enc.text, enc.target_length]], fmt)


@gadget_cmd.command("build-seed")
@click.argument("instance", required=True)
@_format_opt
def gadget_build_seed(instance, fmt):
    """Encode the instance as the seed text T' with target length c'."""
    enc = gadget.build_seed_instance(_load_instance(instance))
    _emit(["text", "target_length"], [[enc.text, enc.target_length]], fmt)


@gadget_cmd.command("verify")
@click.argument("instance", required=True)
@_format_opt
def gadget_verify(instance, fmt):
    """Run the structural validators and the forward reduction check."""
    inst = _load_instance(instance)
    rows = []
    failed = False
    density = gadget.validate_phi_density(inst)
    rows.append(["phi-window-density", "pass" if density.holds else "FAIL",
                 "" if density.holds else str(density.violations[:3])])
    failed |= not density.holds
    overlaps = gadget.validate_prefix_suffix_overlaps(inst)
    rows.append(["prefix-suffix-overlaps", "pass" if overlaps.holds else "FAIL",
                 "" if overlaps.holds else str(overlaps.violations[:3])])
    failed |= not overlaps.holds
    try:
        verdict = gadget.reduction_forward_check(inst)
    except gadget.BudgetExceededError as exc:
        raise InputDataError(f"instance too large for verification: {exc}")
    detail = f"consensus={verdict.consensus}"
    if verdict.notes:
        detail += "; " + "; ".join(verdict.notes)
    rows.append(["reduction-forward", "pass" if verdict.passed else "FAIL", detail])
    failed |= not verdict.passed
    _emit(["check", "status", "detail"], rows, fmt)
    if failed:
        raise ValidationFailure("gadget verification failed")


@cli.command(name="bench")
@click.option("--quick", is_flag=True, help="Smaller sizes, for smoke runs.")
@_format_opt
def bench_command(quick, fmt):
    """Doubling-size timings with growth ratios for the main engines."""
    rows = []
    for r in bench_mod.run_all(quick=quick):
        status = "ok" if r.within_bound else "over-bound"
        rows.append([r.task, r.n_small, r.n_big, _fmt_num(r.seconds_small),
                     _fmt_num(r.seconds_big), _fmt_num(r.ratio),
                     _fmt_num(r.exponent), _fmt_num(r.bound), status])
    quad, fast = bench_mod.bench_qtable_crossover(n=16 if quick else 24)
    rows.append(["qtable-quadratic-vs-fast", "", "", _fmt_num(quad),
                 _fmt_num(fast), "", "", "", "informational"])
    _emit(["task", "n_small", "n_big", "seconds_small", "seconds_big",
           "ratio", "exponent", "bound", "status"], rows, fmt)


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        click.echo(f"usage error: {exc.format_message()}", err=True)
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.Abort:
        return EXIT_USAGE
    except InputDataError as exc:
        click.echo(f"input error: {exc}", err=True)
        return EXIT_INPUT
    except ValidationFailure as exc:
        click.echo(f"validation failure: {exc}", err=True)
        return EXIT_VALIDATION
    return 0


if __name__ == "__main__":
    sys.exit(main())

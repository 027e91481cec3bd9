"""Command-line surface tying the library together.

Exit codes: 0 success, 1 usage or failed verification, 2 invalid input
(syntax or cycle), 3 precondition violated, 4 cap or limit exceeded.
All diagnostics go to stderr; results go to stdout.
"""

from __future__ import annotations

import sys
from fractions import Fraction

import click

from . import counting, generators, plotting, textio, verification
from .errors import (
    ArityMismatch,
    CapExceeded,
    CycleDetected,
    GreedyExtError,
    IndexOutOfRange,
    LimitExceeded,
    PosetSyntaxError,
    PreconditionViolated,
    ProbabilityRange,
    SizeError,
)
from .greedy import (
    DEFAULT_CAP,
    balance_report,
    blocks,
    gp_ratio,
    greedy_count,
    greedy_extensions,
)
from .poset import Poset
from .textio import balance_report_dict, format_poset, parse_poset, render_json


def _load(path: str) -> Poset:
    with open(path) as handle:
        return parse_poset(handle.read())


def _parse_alpha(text: str) -> Fraction:
    try:
        alpha = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise click.UsageError(f"bad alpha {text!r}: {exc}")
    if not 0 < alpha <= Fraction(1, 2):
        raise click.UsageError("alpha must be in (0, 1/2]")
    return alpha


@click.group()
@click.option("--cap", type=int, default=DEFAULT_CAP, show_default=True,
              help="Maximum number of extensions any enumeration may produce.")
@click.pass_context
def cli(ctx, cap):
    """Greedy linear extensions of finite posets: exact enumeration, balance
    ratios, counting formulas, and balanced-pair witnesses."""
    ctx.obj = {"cap": cap}


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON report.")
@click.option("--plot", type=click.Path(dir_okay=False), default=None,
              help="Render a Hasse diagram to this file.")
def analyze(file, as_json, plot):
    """Structural report: width, extremes, N-freeness, components, triples."""
    p = _load(file)
    witness = p.find_n()
    results = {
        "n": p.n,
        "width": p.width(),
        "minimals": sorted(p.minimals()),
        "maximals": sorted(p.maximals()),
        "is_chain": p.is_chain(),
        "is_n_free": witness is None,
        "n_witness": list(witness.as_tuple()) if witness else None,
        "components": p.connected_components(),
        "good_triples": [[t.x, t.y, t.z] for t in p.good_triples()],
        "removable_minimals": counting.removable_minimals(p),
    }
    if plot:
        plotting.draw_hasse(p, plot)
        results["figure"] = plot
    if as_json:
        click.echo(render_json("analyze", file, results), nl=False)
        return
    for key, value in results.items():
        if key == "components":
            value = " ".join("{" + ",".join(map(str, c)) + "}" for c in value)
        elif key == "good_triples":
            value = " ".join(f"({x},{y},{z})" for x, y, z in value) or "-"
        elif isinstance(value, list):
            value = " ".join(map(str, value)) if value else "-"
        elif value is None:
            value = "-"
        click.echo(f"{key}: {value}")


@cli.group()
def greedy():
    """Enumerate or count greedy linear extensions."""


@greedy.command("enum")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--limit", type=int, default=None,
              help="Cap the number of listed extensions (overrides --cap).")
@click.pass_context
def greedy_enum(ctx, file, limit):
    """Canonical list of greedy extensions with jump counts."""
    p = _load(file)
    cap = limit if limit is not None else ctx.obj["cap"]
    for ext in greedy_extensions(p, cap=cap):
        decomposition = blocks(p, ext)
        seq = " ".join(p.label(v) for v in ext.order)
        click.echo(f"{seq}  jumps={decomposition.jump_count}")


@greedy.command("count")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--method", type=click.Choice(["enum", "formula", "both"]),
              default="enum", show_default=True)
@click.pass_context
def greedy_count_cmd(ctx, file, method):
    """|G(P)|, by direct counting or the component interleaving formula."""
    p = _load(file)
    cap = ctx.obj["cap"]
    if method == "enum":
        click.echo(str(greedy_count(p, cap=cap)))
        return
    formula = counting.count_by_components(p, cap=cap)
    if method == "formula":
        click.echo(str(formula))
        return
    direct = greedy_count(p, cap=cap)
    click.echo(f"enum: {direct}")
    click.echo(f"formula: {formula}")
    click.echo(f"agreement: {'yes' if direct == formula else 'NO'}")


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--alpha", default=None, help="Balance threshold as a fraction, e.g. 1/3.")
@click.option("--all-extensions", is_flag=True,
              help="Use all linear extensions instead of only greedy ones.")
@click.option("--json", "as_json", is_flag=True)
@click.option("--plot", type=click.Path(dir_okay=False), default=None,
              help="Render a per-pair ratio bar chart to this file.")
@click.pass_context
def balance(ctx, file, alpha, all_extensions, as_json, plot):
    """Per-incomparable-pair before-ratios and the best balanced pair."""
    p = _load(file)
    alpha_frac = _parse_alpha(alpha) if alpha else None
    report = balance_report(
        p, alpha=alpha_frac, cap=ctx.obj["cap"], use_all_extensions=all_extensions
    )
    if plot:
        plotting.draw_balance(report, p, plot)
    if as_json:
        results = balance_report_dict(report)
        if plot:
            results["figure"] = plot
        click.echo(render_json("balance", file, results), nl=False)
        return
    for (x, y, before, total, ratio) in report.pairs:
        click.echo(
            f"pair {p.label(x)}<{p.label(y)}: "
            f"{textio.ratio_with_total(ratio, before)}"
        )
    if report.best_pair is None:
        click.echo("best_pair: - (no incomparable pair)")
        return
    bx, by = report.best_pair
    click.echo(f"best_pair: ({p.label(bx)}, {p.label(by)})")
    click.echo(f"best_level: {report.best_level}")
    if alpha_frac is not None:
        verdict = "met" if report.meets_alpha else "not met"
        click.echo(f"alpha {alpha}: {verdict}")


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def witness(ctx, file, as_json):
    """Balanced-pair witness for an N-free non-chain, with recursion trace."""
    p = _load(file)
    if not p.is_n_free():
        raise PreconditionViolated(
            f"input contains an N at {p.find_n().as_tuple()}"
        )
    if p.is_chain():
        raise PreconditionViolated("input is a chain")
    result = counting.half_balanced_witness(p)
    ratio = gp_ratio(p, result.x, result.y, cap=ctx.obj["cap"])
    if as_json:
        results = {
            "pair": [result.x, result.y],
            "trace": list(result.trace),
            "ratio": textio.ratio_str(ratio),
        }
        click.echo(render_json("witness", file, results), nl=False)
        return
    click.echo(f"pair: ({p.label(result.x)}, {p.label(result.y)})")
    for step in result.trace:
        click.echo(f"  {step}")
    click.echo(f"verified ratio: {textio.ratio_with_total(ratio, ratio.numerator * ratio.raw_total // ratio.denominator)}")


def _emit_poset(p: Poset, provenance: str, out):
    text = format_poset(p, provenance=provenance)
    if out:
        with open(out, "w") as handle:
            handle.write(text)
    else:
        click.echo(text, nl=False)


@cli.group()
def gen():
    """Emit poset documents from the generators."""


@gen.command("sp")
@click.option("--n", type=int, required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("-o", "out", type=click.Path(dir_okay=False), default=None)
def gen_sp(n, seed, out):
    """Random series-parallel (always N-free) poset."""
    expr = generators.random_sp_expression(n, seed)
    p = generators.eval_sp(expr)
    _emit_poset(p, f"generated: sp n={n} seed={seed}\nexpression: {expr}", out)


@gen.command("random")
@click.option("--n", type=int, required=True)
@click.option("--p", "prob", type=float, default=0.3, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("-o", "out", type=click.Path(dir_okay=False), default=None)
def gen_random(n, prob, seed, out):
    """Random poset from coin-flip edges on a fixed topological order."""
    p = generators.random_poset(n, prob, seed)
    _emit_poset(p, f"generated: random n={n} p={prob} seed={seed}", out)


@gen.command("nfree")
@click.option("--n", type=int, required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--max-attempts", type=int, default=1000, show_default=True)
@click.option("-o", "out", type=click.Path(dir_okay=False), default=None)
def gen_nfree(n, seed, max_attempts, out):
    """Random N-free poset via rejection sampling."""
    p = generators.random_nfree(n, seed, max_attempts)
    _emit_poset(p, f"generated: nfree n={n} seed={seed}", out)


@gen.command("expr")
@click.argument("expression")
@click.option("-o", "out", type=click.Path(dir_okay=False), default=None)
def gen_expr(expression, out):
    """Evaluate a series-parallel expression like lin(chain(2),antichain(2))."""
    p = generators.eval_sp(generators.parse_sp(expression))
    _emit_poset(p, f"generated: expr {expression}", out)


@cli.command()
@click.argument("suite", type=click.Choice(sorted(verification.SUITES) + ["all"]))
@click.option("--instances", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--max-n", type=int, default=None)
def verify(suite, instances, seed, max_n):
    """Run a named invariant suite and print one pass/fail line per check."""
    names = sorted(verification.SUITES) if suite == "all" else [suite]
    all_ok = True
    for name in names:
        for check in verification.run_suite(name, seed=seed, instances=instances, max_n=max_n):
            click.echo(check.line())
            all_ok = all_ok and check.ok
    if not all_ok:
        raise click.exceptions.Exit(1)


@cli.group()
def sweep():
    """Exhaustive conjecture sweeps."""


@sweep.command("width2")
@click.option("--max-n", type=int, default=6, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.option("--plot", type=click.Path(dir_okay=False), default=None,
              help="Render a histogram of best balance levels to this file.")
def sweep_width2(max_n, as_json, plot):
    """Balance sweep over all labeled width-2 non-chain posets with n <= M."""
    levels = []
    total = 0
    min_level = None
    min_example = None
    below_third = []
    for n in range(2, max_n + 1):
        for p in generators.enumerate_labeled_posets(
            n, predicate=lambda q: q.width() == 2 and not q.is_chain(), limit=max_n
        ):
            total += 1
            report = balance_report(p)
            level = report.best_level.as_fraction()
            levels.append(level)
            if min_level is None or level < min_level:
                min_level = level
                min_example = sorted(p.covers)
            if level < Fraction(1, 3):
                below_third.append((sorted(p.covers), str(report.best_level)))
    if plot:
        plotting.draw_level_histogram(levels, plot)
    if as_json:
        results = {
            "instances": total,
            "min_best_level": f"{min_level.numerator}/{min_level.denominator}" if min_level else None,
            "min_example_covers": min_example,
            "below_one_third": [
                {"covers": covers, "level": level} for covers, level in below_third
            ],
        }
        if plot:
            results["figure"] = plot
        click.echo(render_json("sweep width2", None, results), nl=False)
        return
    click.echo(f"instances: {total}")
    click.echo(f"min_best_level: {min_level}")
    click.echo(f"min_example_covers: {min_example}")
    if below_third:
        click.echo(f"below 1/3: {len(below_third)} instances")
        for covers, level in below_third:
            click.echo(f"  covers {covers}: level {level}")
    else:
        click.echo("below 1/3: none")


def run_cli(argv) -> int:
    """Invoke the CLI, mapping library errors to the documented exit codes."""
    try:
        cli.main(args=list(argv), prog_name="greedyext", standalone_mode=False)
        return 0
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return 1
    except (PosetSyntaxError, CycleDetected, IndexOutOfRange) as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except (PreconditionViolated, SizeError, ProbabilityRange, ArityMismatch) as exc:
        click.echo(f"error: {exc}", err=True)
        return 3
    except (CapExceeded, LimitExceeded) as exc:
        click.echo(f"error: {exc}", err=True)
        return 4
    except GreedyExtError as exc:
        click.echo(f"error: {exc}", err=True)
        return 3


def main():
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()

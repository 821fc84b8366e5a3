"""Command line entry point: ``wbinom eval | paths | check``."""

from __future__ import annotations

import csv
import io
import json
import os
import sys
from pathlib import Path

import click
import numpy as np

from .core import wbinom, wbinom_regions
from .paths import enumerate_paths, path_sum, path_to_subset, path_weight_steps
from .specializations.elliptic import elliptic_weights, sample_params
from .specializations.qbinom import q_weights, unit_weights
from .specializations.symmetric import e_weights, h_weights
from .suites import SUITES, run_suite
from .svg import render_path
from .weights import dumps, substitute

OUTPUT_ENV = "WBINOM_OUTPUT_DIR"


def parse_range(text: str | None):
    """``"-4..4"`` -> ``(-4, 4)``; a single integer is a one-point range."""
    if text is None:
        return None
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise click.BadParameter(f"expected lo..hi, got {text!r}")


def default_output_dir() -> Path:
    return Path(os.environ.get(OUTPUT_ENV, "wbinom-out"))


@click.group()
def main():
    """Weighted binomial coefficients on the integer plane."""


@main.command("eval")
@click.option("-n", type=int, required=True)
@click.option("-k", type=int, required=True)
@click.option("--spec", "spec_name", type=click.Choice(["formal", "q", "one", "e", "h", "elliptic"]),
              default="formal", show_default=True, help="Weight specialization to apply.")
@click.option("--method", type=click.Choice(["recursive", "regions", "paths"]), default="recursive",
              show_default=True)
@click.option("--seed", type=int, default=0, help="Seed for the elliptic parameters.")
@click.option("--json", "as_json", is_flag=True, help="Print JSON instead of text.")
def eval_cmd(n, k, spec_name, method, seed, as_json):
    """Print C(n, k), optionally specialized."""
    value = {"recursive": wbinom, "regions": wbinom_regions,
             "paths": lambda a, b: path_sum(b, a - b)}[method](n, k)
    if spec_name == "formal":
        click.echo(dumps(value) if as_json else str(value))
        return
    if spec_name == "elliptic":
        spec = elliptic_weights(sample_params(np.random.default_rng(seed)))
    else:
        spec = {"q": q_weights, "one": unit_weights, "e": e_weights, "h": h_weights}[spec_name]()
    out = substitute(value, spec)
    if as_json:
        click.echo(json.dumps({"n": n, "k": k, "spec": spec_name, "value": str(out)}))
    else:
        click.echo(str(out))


@main.command()
@click.option("-k", type=int, required=True, help="x-coordinate of the endpoint.")
@click.option("-m", type=int, required=True, help="y-coordinate of the endpoint.")
@click.option("--render", type=click.Path(file_okay=False), is_flag=False, flag_value="",
              default=None, help=f"Write one SVG per path (directory defaults to ${OUTPUT_ENV}).")
@click.option("--json", "as_json", is_flag=True)
def paths(k, m, render, as_json):
    """List the hybrid paths to (k, m) with their weights."""
    found = enumerate_paths(k, m)
    rows = [{"steps": str(p), "subset": str(path_to_subset(p)),
             "weight": str(path_weight_steps(p))} for p in found]
    if as_json:
        click.echo(json.dumps(rows, indent=1))
    else:
        for r in rows:
            click.echo(f"{r['steps']:<24} {r['subset']:<20} {r['weight']}")
        click.echo(f"{len(found)} path(s); sum = {path_sum(k, m)}")
    if render is not None:
        target = Path(render) if render else default_output_dir()
        target.mkdir(parents=True, exist_ok=True)
        for i, p in enumerate(found):
            (target / f"path_{k}_{m}_{i:04d}.svg").write_text(render_path(p))
        click.echo(f"wrote {len(found)} SVG file(s) to {target}", err=True)


@main.command()
@click.option("--suite", type=click.Choice(list(SUITES) + ["all"]), required=True)
@click.option("--n", "n_range", help="Range lo..hi for n.")
@click.option("--k", "k_range", help="Range lo..hi for k.")
@click.option("--m", "m_range", help="Range lo..hi for m.")
@click.option("--window", help="Second convolution: how far below n+m k reaches.  Inversion: lo..hi for n and l.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--samples", type=int, help="Elliptic parameter sets to draw.")
@click.option("--tol", type=float, help="Override the elliptic tolerances.")
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text",
              show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), help="Write the report here instead of stdout.")
def check(suite, n_range, k_range, m_range, window, seed, samples, tol, fmt, output):
    """Run identity checks; exit status 0 iff every instance passes."""
    if window is not None:
        window = parse_range(window) if ".." in window else parse_range(window)[0]
    results = run_suite(suite, n=parse_range(n_range), k=parse_range(k_range), m=parse_range(m_range),
                        window=window, seed=seed, samples=samples, tol=tol)
    rows = [(name, f"{r.name}{r.instance}".replace(" ", ""), r.passed, r.residual)
            for name, reports in results.items() for r in reports]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "instance", "pass", "residual"])
        writer.writerows((s, i, str(p).lower(), f"{r:.3e}") for s, i, p, r in rows)
        text = buf.getvalue()
    elif fmt == "json":
        text = json.dumps([{"suite": s, "instance": i, "pass": p, "residual": r}
                           for s, i, p, r in rows], indent=1) + "\n"
    else:
        lines = []
        for name, reports in results.items():
            bad = [r for r in reports if not r.passed]
            lines.append(f"{name:<18} {len(reports) - len(bad):>6}/{len(reports):<6} "
                         f"{'ok' if not bad else 'FAIL'}")
            lines += [f"    failed: {r.name}{r.instance} residual={r.residual:.3e}" for r in bad[:20]]
        text = "\n".join(lines) + "\n"
    if output:
        Path(output).write_text(text)
    else:
        click.echo(text, nl=False)
    sys.exit(0 if all(p for _, _, p, _ in rows) else 1)


if __name__ == "__main__":
    main()

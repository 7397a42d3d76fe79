"""Command-line interface: indices, tune, rank, graph, stats, serve."""

from __future__ import annotations

from pathlib import Path

import click

from .boxscore import RANKING_CRITERIA, eligibility_filter
from .config import config_directions, config_weights, load_config
from .dataio import parse_boxscore_csv
from .exceptions import OutrankError
from .jsonutil import dump_json
from .outranking import to_dot
from .pipeline import (RankRequest, anova_payload, correlation_payload,
                       player_indices_payload, run_rank, thresholds_payload)

_SCENARIO_CHOICES = ("1", "2", "equal", "correlation_boosted")

_csv_argument = click.argument(
    "csv_path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
_config_option = click.option(
    "--config", "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None, help="Flat key-value config file; flags override it.")


@click.group()
def main() -> None:
    """Rank players from box-score statistics with outranking flows."""


def _load_lines(csv_path: Path):
    try:
        return parse_boxscore_csv(csv_path.read_bytes())
    except OutrankError as exc:
        raise click.ClickException(str(exc)) from exc


def _load_config(config_path: Path | None) -> dict[str, str]:
    if config_path is None:
        return {}
    try:
        return load_config(config_path)
    except OutrankError as exc:
        raise click.ClickException(str(exc)) from exc


def _setting(flag, config: dict[str, str], key: str, default, caster=str):
    """CLI flag > config value > default."""
    if flag is not None:
        return flag
    if key in config:
        try:
            return caster(config[key])
        except ValueError as exc:
            raise click.ClickException(f"config {key}: {exc}") from exc
    return default


def _parse_weights_flag(raw: str | None) -> dict[str, float] | None:
    if raw is None:
        return None
    weights: dict[str, float] = {}
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        if not sep:
            raise click.ClickException(
                f"--weights expects comma-separated k=v pairs, got {item!r}")
        try:
            weights[key.strip()] = float(value)
        except ValueError:
            raise click.ClickException(f"--weights: {value!r} is not a number") from None
    if not weights:
        raise click.ClickException("--weights given but empty")
    return weights


def _build_request(config: dict[str, str], profile, scenario, weights_flag,
                   alpha, beta, function_kind) -> tuple[RankRequest, dict[str, str]]:
    weights = _parse_weights_flag(weights_flag) or config_weights(config)
    scenario_value = weights if weights is not None else _setting(
        scenario, config, "scenario", "equal")
    request = RankRequest(
        profile=_setting(profile, config, "profile", "all"),
        scenario=scenario_value,
        alpha=_setting(alpha, config, "alpha", 25.0, float),
        beta=_setting(beta, config, "beta", 75.0, float),
        function_kind=_setting(function_kind, config, "function_kind",
                               "v_shape_indifference"),
        scenario2_residual=_setting(None, config, "scenario2_residual", 0.05, float),
    )
    return request, config_directions(config)


def _run_rank(lines, request: RankRequest, directions):
    try:
        return run_rank(lines, request, directions=directions or None)
    except OutrankError as exc:
        raise click.ClickException(str(exc)) from exc


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

@main.command()
@_csv_argument
@_config_option
@click.option("--all-players", is_flag=True,
              help="Include players that fail the eligibility filter.")
@click.option("--paper-format", is_flag=True, help="4-decimal table instead of JSON.")
def indices(csv_path: Path, config_path, all_players: bool, paper_format: bool) -> None:
    """Per-player efficiency indices computed from a box-score CSV."""
    lines = _load_lines(csv_path)
    if not all_players:
        lines = eligibility_filter(lines)
    lines = [line for line in lines if line.Min > 0]
    payload = player_indices_payload(lines)
    if paper_format:
        header = ["player", "pos"] + [c for c in payload["players"][0]["indices"]] \
            if payload["players"] else ["player", "pos"]
        click.echo("  ".join(f"{h:>10}" for h in header))
        for row in payload["players"]:
            cells = [f"{row['player_id']:>10}", f"{row['position']:>10}"]
            cells += [f"{value:>10.4f}" for value in row["indices"].values()]
            click.echo("  ".join(cells))
    else:
        click.echo(dump_json(payload))


@main.command()
@_csv_argument
@_config_option
@click.option("--alpha", type=float, default=None, help="Indifference quantile (%).")
@click.option("--beta", type=float, default=None, help="Preference quantile (%).")
@click.option("--profile", type=str, default=None, help="Position code or 'all'.")
@click.option("--paper-format", is_flag=True, help="4-decimal table instead of JSON.")
def tune(csv_path: Path, config_path, alpha, beta, profile, paper_format: bool) -> None:
    """Quantile-tuned indifference/preference thresholds per criterion."""
    config = _load_config(config_path)
    lines = _load_lines(csv_path)
    try:
        payload = thresholds_payload(
            lines,
            _setting(profile, config, "profile", "all"),
            _setting(alpha, config, "alpha", 25.0, float),
            _setting(beta, config, "beta", 75.0, float))
    except OutrankError as exc:
        raise click.ClickException(str(exc)) from exc
    if paper_format:
        click.echo(f"{'criterion':>10}  {'q':>10}  {'p':>10}")
        for criterion, pair in payload["thresholds"].items():
            click.echo(f"{criterion:>10}  {pair['q']:>10.4f}  {pair['p']:>10.4f}")
    else:
        click.echo(dump_json(payload))


@main.command()
@_csv_argument
@_config_option
@click.option("--profile", type=str, default=None, help="Position code or 'all'.")
@click.option("--scenario", type=click.Choice(_SCENARIO_CHOICES), default=None)
@click.option("--weights", "weights_flag", type=str, default=None,
              help="Explicit weights, e.g. 'EPts=0.4,ASTM=0.4'; overrides --scenario.")
@click.option("--alpha", type=float, default=None)
@click.option("--beta", type=float, default=None)
@click.option("--function-kind", type=str, default=None)
@click.option("--paper-format", is_flag=True, help="4-decimal table instead of JSON.")
def rank(csv_path: Path, config_path, profile, scenario, weights_flag, alpha, beta,
         function_kind, paper_format: bool) -> None:
    """Total (net-flow) and partial (outranking) order for one profile."""
    config = _load_config(config_path)
    request, directions = _build_request(config, profile, scenario, weights_flag,
                                         alpha, beta, function_kind)
    response = _run_rank(_load_lines(csv_path), request, directions)
    if paper_format:
        flow_by_player = {alt: i for i, alt in
                          enumerate(response.flow_result.alternatives)}
        click.echo(f"{'player':>16}  {'phi':>8}  {'phi+':>8}  {'phi-':>8}")
        for entry in response.ranking:
            i = flow_by_player[entry.alternative]
            click.echo(f"{entry.alternative:>16}  {entry.phi_net:>8.4f}  "
                       f"{response.flow_result.phi_plus[i]:>8.4f}  "
                       f"{response.flow_result.phi_minus[i]:>8.4f}")
    else:
        click.echo(dump_json(response.to_jsonable()))


@main.command()
@_csv_argument
@_config_option
@click.option("--profile", type=str, default=None)
@click.option("--scenario", type=click.Choice(_SCENARIO_CHOICES), default=None)
@click.option("--weights", "weights_flag", type=str, default=None)
@click.option("--alpha", type=float, default=None)
@click.option("--beta", type=float, default=None)
@click.option("--function-kind", type=str, default=None)
@click.option("--top", type=int, default=None,
              help="Keep only the first N layers of the covering-edge DAG.")
@click.option("--out", "out_path", type=click.Path(dir_okay=False, path_type=Path),
              default=None, help="Write DOT here instead of stdout.")
def graph(csv_path: Path, config_path, profile, scenario, weights_flag, alpha, beta,
          function_kind, top, out_path) -> None:
    """Outranking digraph (covering edges + indifference links) as Graphviz DOT."""
    config = _load_config(config_path)
    request, directions = _build_request(config, profile, scenario, weights_flag,
                                         alpha, beta, function_kind)
    response = _run_rank(_load_lines(csv_path), request, directions)
    try:
        dot = to_dot(response.relation, response.flow_result, max_depth=top)
    except OutrankError as exc:
        raise click.ClickException(str(exc)) from exc
    if out_path is None:
        click.echo(dot, nl=False)
    else:
        out_path.write_text(dot, encoding="utf-8")
        click.echo(f"wrote {out_path}")


@main.command()
@_csv_argument
@_config_option
@click.argument("report", type=click.Choice(("anova", "corr")))
@click.option("--paper-format", is_flag=True, help="Readable table instead of JSON.")
def stats(csv_path: Path, config_path, report: str, paper_format: bool) -> None:
    """Position-difference ANOVA or the per-position correlation matrices."""
    lines = _load_lines(csv_path)
    if report == "anova":
        payload = anova_payload(lines)
        if not paper_format:
            click.echo(dump_json(payload))
            return
        positions = sorted({pos for row in payload["anova"]
                            for pos in row["group_means"]})
        header = ["criterion", "total"] + positions + ["p-value"]
        click.echo("  ".join(f"{h:>9}" for h in header))
        for row in payload["anova"]:
            cells = [f"{row['criterion']:>9}", f"{row['total_mean']:>9.3f}"]
            cells += [f"{row['group_means'].get(pos, float('nan')):>9.3f}"
                      for pos in positions]
            p = row["p_value"]
            cells.append("      n/a" if p is None
                         else ("  < 0.001" if p < 1e-3 else f"{p:>9.3f}"))
            click.echo("  ".join(cells))
    else:
        payload = correlation_payload(lines)
        if not paper_format:
            click.echo(dump_json(payload))
            return
        for table in payload["correlations"]:
            click.echo(f"position {table['position']} (n={table['n']})")
            names = table["criteria"]
            click.echo("  ".join([f"{'':>7}"] + [f"{name:>7}" for name in names]))
            for name, row_r, row_s in zip(names, table["r"], table["significant"]):
                cells = [f"{name:>7}"]
                for r, sig in zip(row_r, row_s):
                    if r is None:
                        cells.append(f"{'n/a':>7}")
                    else:
                        mark = "*" if sig else " "
                        cells.append(f"{r:>6.2f}{mark}")
                click.echo("  ".join(cells))
            click.echo("")


@main.command()
@_csv_argument
@_config_option
@click.option("--bind", type=str, default="127.0.0.1:8000", show_default=True,
              help="host:port to listen on.")
@click.option("--ui", "ui_dir", type=click.Path(exists=True, file_okay=False),
              default=None, help="Directory with the web explorer to serve at /.")
def serve(csv_path: Path, config_path, bind: str, ui_dir) -> None:
    """Serve the ranking HTTP API (and optionally the web explorer)."""
    from .service import serve as run_service

    lines = _load_lines(csv_path)
    try:
        run_service(lines, bind=bind, ui_dir=ui_dir)
    except OutrankError as exc:
        raise click.ClickException(str(exc)) from exc


if __name__ == "__main__":
    main()

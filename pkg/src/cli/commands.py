"""Command-line surface: classify graphs, verify theorems, emit and re-check witnesses."""

import functools
import json
import sys
from pathlib import Path
from typing import Any, Callable

import click
from rich.console import Console

from src import __version__
from src.circulant.families import build_family
from src.circulant.graph import CirculantGraph, make_circulant
from src.classify.report import ClassifyOptions, classify_graph, hierarchy_violations, options_from_config
from src.classify.witnesses import recheck_witness
from src.cli.config_commands import config
from src.cli.output import (
    dump_json,
    homology_csv,
    homology_data,
    homology_table,
    mismatch_table,
    report_table,
    reports_csv,
    stats_table,
    sweep_table,
    witness_table,
)
from src.complexes.independence import independence_complex
from src.complexes.simplicial import SimplicialComplex
from src.config.config_manager import AppConfig, get_config_manager
from src.config.settings import get_settings
from src.exceptions import GraphSpecError, SerreError, WitnessError
from src.homology.profile import reduced_homology
from src.models.common import ALL_PROPERTIES
from src.models.report import ClassificationReport, WitnessKind
from src.models.run import RunConfig, load_run_file
from src.models.sweep import sweeps_frame
from src.storage.cache import ReportCache
from src.storage.file_manager import FileManager
from src.theorems.ids import TheoremId, parse_theorem
from src.theorems.structure import recheck_certificate
from src.theorems.sweep import verify_all
from src.utils.logging import get_logger

console = Console()
err_console = Console(stderr=True)
logger = get_logger(__name__)


def diagnostics(command: Callable) -> Callable:
    """Report invalid input as a red diagnostic with a nonzero exit status."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (SerreError, ValueError) as e:
            err_console.print(f"❌ {e}", style="red", markup=False)
            sys.exit(1)

    return wrapper


def graph_options(command: Callable) -> Callable:
    """Flags that describe one circulant graph, either directly or as a family member."""
    options = [
        click.option("--n", type=int, help="Number of vertices"),
        click.option("--gens", help="Comma-separated generators, e.g. 1,3"),
        click.option("--family", help="Family name: power-of-cycle, upper-interval, omit-one, one-paired, cubic, plain-cycle"),
        click.option("--d", type=int, help="Family parameter d"),
        click.option("--i", "i", type=int, help="Omitted distance for omit-one"),
        click.option("--a", type=int, help="Family parameter a"),
        click.option("--b", type=int, help="Family parameter b"),
        click.option("--two-n", "two_n", type=int, help="Vertex count 2n of a cubic circulant"),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def run_options(command: Callable) -> Callable:
    options = [
        click.option("--chars", help="Comma-separated field characteristics (default from config)"),
        click.option("--budget", type=int, help="Node budget for shelling and decomposition searches"),
        click.option("--format", "fmt", type=click.Choice(["json", "table", "csv"]), help="Output format"),
        click.option("--cache", type=click.Path(path_type=Path), help="Report cache (JSON lines); defaults to SERRE_CACHE"),
        click.option("--stats", is_flag=True, default=None, help="Print cache statistics to stderr"),
        click.option("--config", "config_file", type=click.Path(exists=True, path_type=Path), help="YAML run file"),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def parse_int_list(value: Any, what: str = "generators") -> list[int]:
    """Parse ``"1,3"`` or a YAML list into integers."""
    if value is None:
        return []
    items = value.split(",") if isinstance(value, str) else list(value)
    try:
        return [int(str(item).strip()) for item in items if str(item).strip()]
    except ValueError as e:
        raise GraphSpecError(f"Invalid {what}: {value!r}") from e


def resolve_run(command: str, config_file: Path | None, flags: dict[str, Any]) -> tuple[RunConfig, AppConfig]:
    """Layer defaults, the run file and explicit flags; return the run and the effective app config."""
    config_manager = get_config_manager()
    app_config = config_manager.load_app_config()
    settings = get_settings()
    defaults = {
        "characteristics": app_config.fields.characteristics,
        "budget": app_config.search.node_budget,
        "format": app_config.output.format,
        "jobs": settings.jobs,
        "cache": settings.cache,
        "witness_dir": app_config.output.witness_dir,
    }
    file_values = load_run_file(config_file) if config_file else {}
    # an absent switch must not override the run file
    for switch in ("stats", "certify", "timings"):
        if flags.get(switch) is False:
            flags[switch] = None
    if flags.get("chars") is not None:
        flags["characteristics"] = parse_int_list(flags.pop("chars"), "characteristics")
    flags.pop("chars", None)
    if "characteristics" in file_values:
        file_values["characteristics"] = parse_int_list(file_values["characteristics"], "characteristics")
    run = RunConfig.resolve(command, defaults, file_values, flags)
    effective = config_manager.with_overrides(
        {"fields": {"characteristics": run.characteristics}, "search": {"node_budget": run.budget}}
    )
    return run, effective


def resolve_graph(params: dict[str, Any]) -> CirculantGraph:
    params = dict(params)
    family = params.pop("family", None)
    gens = params.pop("gens", None)
    if family is not None:
        try:
            return build_family(family, **{k: int(v) for k, v in params.items()}).graph
        except (TypeError, KeyError) as e:
            raise GraphSpecError(f"Invalid parameters for family {family}: {e}", params) from e
    if "n" not in params or gens is None:
        raise GraphSpecError("Give --n and --gens, or --family with its parameters", params)
    return make_circulant(int(params["n"]), parse_int_list(gens))


def open_cache(run: RunConfig, options: ClassifyOptions) -> ReportCache | None:
    if run.cache is None:
        if run.stats:
            err_console.print("⚠️  --stats given without a cache path", style="yellow")
        return None
    return ReportCache(run.cache, options.fingerprint())


def print_stats(run: RunConfig, cache: ReportCache | None) -> None:
    if run.stats and cache is not None:
        err_console.print(stats_table(cache.get_stats()))


def classify_cached(graph: CirculantGraph, options: ClassifyOptions, cache: ReportCache | None) -> ClassificationReport:
    """Full report for ``graph``, computing only what the cache does not already hold."""
    report = cache.lookup(graph) if cache is not None else None
    if report is not None and not report.missing(ALL_PROPERTIES):
        logger.debug(f"{graph.label} served from cache")
        return report
    properties = report.missing(ALL_PROPERTIES) if report is not None else ALL_PROPERTIES
    fresh = classify_graph(graph, options, properties)
    if cache is None:
        return fresh
    return cache.store(graph, fresh)


@click.group()
@click.version_option(__version__, prog_name="serre")
def cli():
    """Circulant independence complexes: Serre, Cohen-Macaulay and Buchsbaum checks."""
    # Validate configuration on startup
    if not get_config_manager().validate_config():
        err_console.print("❌ Configuration validation failed. Please check your config files.", style="red")
        sys.exit(1)


cli.add_command(config)


@cli.command()
@graph_options
@run_options
@click.option("--certify", is_flag=True, default=None, help="Write shelling-order certificates as witness files")
@diagnostics
def classify(n, gens, family, d, i, a, b, two_n, chars, budget, fmt, cache, stats, config_file, certify):
    """Classify the independence complex of one circulant graph."""
    flags = dict(
        n=n, gens=gens, family=family, d=d, i=i, a=a, b=b, two_n=two_n,
        chars=chars, budget=budget, format=fmt, cache=cache, stats=stats, certify=certify,
    )
    run, app_config = resolve_run("classify", config_file, flags)
    graph = resolve_graph(run.params)
    options = options_from_config(app_config)
    report_cache = open_cache(run, options)
    report = classify_cached(graph, options, report_cache)

    for problem in hierarchy_violations(report):
        logger.warning(f"{report.subject}: {problem}")

    if run.format == "json":
        click.echo(dump_json(report.model_dump(mode="json")))
    elif run.format == "csv":
        click.echo(reports_csv([report]), nl=False)
    else:
        console.print(report_table(report))
        if report.witnesses:
            console.print(witness_table(report))

    if run.certify:
        orders = [w for w in report.witnesses if w.kind is WitnessKind.SHELLING_ORDER]
        paths = FileManager.write_witnesses(
            report.subject, independence_complex(graph), orders, graph=graph.model_dump(mode="json"),
            base_path=run.witness_dir,
        )
        for path in paths:
            err_console.print(f"📄 {path}")
        if not paths:
            err_console.print("No shelling order to certify", style="yellow")
    print_stats(run, report_cache)


@cli.command()
@click.option("--theorem", default=None, help="Theorem id (e.g. s2-power-of-cycle) or 'all'")
@click.option("--max-n", "max_n", type=int, help="Override the sweep's vertex bound")
@click.option("--jobs", type=int, help="Worker processes (default from SERRE_JOBS)")
@click.option("--certify", is_flag=True, default=None, help="Include isomorphism certificates and write them to files")
@click.option("--timings", is_flag=True, default=None, help="Include wall times in the output")
@run_options
@diagnostics
def verify(theorem, max_n, jobs, certify, timings, chars, budget, fmt, cache, stats, config_file):
    """Sweep theorems over their parameter ranges and compare with computation."""
    flags = dict(
        theorem=theorem, max_n=max_n, jobs=jobs, certify=certify, timings=timings,
        chars=chars, budget=budget, format=fmt, cache=cache, stats=stats,
    )
    run, app_config = resolve_run("verify", config_file, flags)
    requested = run.theorem or "all"
    theorems = None if requested == "all" else [parse_theorem(requested)]
    report_cache = open_cache(run, options_from_config(app_config))

    def announce(theorem_id: TheoremId) -> None:
        err_console.print(f"🔍 {theorem_id.value}", style="dim")

    results = verify_all(
        app_config,
        jobs=run.jobs,
        cache=report_cache,
        max_n=run.max_n,
        theorems=theorems,
        progress=announce if run.format == "table" else None,
    )

    if run.certify:
        for result in results:
            for path in FileManager.write_certificates(result.theorem, result.certificates, run.witness_dir):
                logger.debug(f"Wrote certificate {path}")

    if run.format == "json":
        data = [r.to_json(timings=run.timings, certificates=run.certify) for r in results]
        click.echo(dump_json(data if requested == "all" else data[0]))
    elif run.format == "csv":
        frame = sweeps_frame(results)
        if not run.timings:
            frame = frame.drop(columns=["runtime_ms"])
        click.echo(frame.to_csv(index=False), nl=False)
    else:
        console.print(sweep_table(results, timings=run.timings))
        for result in results:
            if result.mismatches:
                console.print(mismatch_table(result))
            if result.timeouts:
                console.print(f"⏱️  {result.theorem}: {len(result.timeouts)} instances timed out", style="yellow")
            if result.skipped:
                console.print(f"⏭️  {result.theorem}: {len(result.skipped)} instances skipped", style="yellow")

    print_stats(run, report_cache)
    if not all(r.passed for r in results):
        sys.exit(1)


@cli.command()
@graph_options
@run_options
@click.option("--out", "witness_dir", type=click.Path(path_type=Path), help="Witness directory (default from config)")
@diagnostics
def witness(n, gens, family, d, i, a, b, two_n, chars, budget, fmt, cache, stats, config_file, witness_dir):
    """Write every witness of a graph's classification as a standalone JSON file."""
    flags = dict(
        n=n, gens=gens, family=family, d=d, i=i, a=a, b=b, two_n=two_n,
        chars=chars, budget=budget, format=fmt, cache=cache, stats=stats, witness_dir=witness_dir,
    )
    run, app_config = resolve_run("witness", config_file, flags)
    graph = resolve_graph(run.params)
    options = options_from_config(app_config)
    report_cache = open_cache(run, options)
    report = classify_cached(graph, options, report_cache)

    paths = FileManager.write_witnesses(
        report.subject, independence_complex(graph), report.witnesses, graph=graph.model_dump(mode="json"),
        base_path=run.witness_dir,
    )
    if run.format == "json":
        click.echo(dump_json([str(p) for p in paths]))
    else:
        for path, w in zip(paths, report.witnesses):
            console.print(f"📄 {path}  [dim]{w.summary()}[/dim]")
        if not paths:
            console.print(f"No witnesses for {report.subject}", style="yellow")
    print_stats(run, report_cache)


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--budget", type=int, default=10_000_000, show_default=True, help="Search budget for NoShellingExists")
@diagnostics
def recheck(file: Path, budget: int):
    """Re-validate a witness or certificate file without rebuilding a report."""
    try:
        data = json.loads(file.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise WitnessError(f"Cannot read {file}: {e}", {"path": str(file)}) from e

    if isinstance(data, dict) and "witness" in data:
        record = FileManager.read_witness(file)
        complex_ = SimplicialComplex.from_dict(record.complex)
        if record.graph is not None:
            graph = make_circulant(record.graph["n"], record.graph["gens"])
            if independence_complex(graph) != complex_:
                raise WitnessError(f"Complex in {file} is not Ind({graph.label})", {"path": str(file)})
        ok = recheck_witness(complex_, record.witness, budget=budget)
        what = f"{record.witness.kind.value} witness for {record.witness.property} of {record.subject}"
    elif isinstance(data, dict) and "mapping" in data:
        certificate = FileManager.read_certificate(file)
        ok = recheck_certificate(certificate)
        what = f"certificate for component {certificate.component} ≅ {certificate.target}"
    else:
        raise WitnessError(f"{file} is neither a witness nor a certificate file", {"path": str(file)})

    if ok:
        console.print(f"✅ {what} re-checks", style="green")
    else:
        console.print(f"❌ {what} does not re-check", style="red")
        sys.exit(1)


def load_complex_file(path: Path) -> SimplicialComplex:
    """Complex from a JSON document (``to_dict`` or a witness file) or the facet-per-line text format."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise WitnessError(f"Cannot read {path}: {e}", {"path": str(path)}) from e
    if path.suffix == ".json":
        data = json.loads(text)
        return SimplicialComplex.from_dict(data.get("complex", data))
    return SimplicialComplex.from_text(text)


@cli.command()
@graph_options
@click.option("--complex", "complex_file", type=click.Path(exists=True, dir_okay=False, path_type=Path),
              help="Complex file instead of a graph")
@click.option("--chars", help="Comma-separated field characteristics for Betti numbers")
@click.option("--format", "fmt", type=click.Choice(["json", "table", "csv"]), help="Output format")
@click.option("--config", "config_file", type=click.Path(exists=True, path_type=Path), help="YAML run file")
@diagnostics
def homology(n, gens, family, d, i, a, b, two_n, complex_file, chars, fmt, config_file):
    """Print the reduced integral homology of Ind(G) or of a complex file."""
    flags = dict(n=n, gens=gens, family=family, d=d, i=i, a=a, b=b, two_n=two_n, chars=chars, format=fmt)
    run, _ = resolve_run("homology", config_file, flags)
    if complex_file is not None:
        complex_ = load_complex_file(complex_file)
        subject = complex_file.name
    else:
        graph = resolve_graph(run.params)
        complex_ = independence_complex(graph)
        subject = f"Ind({graph.label})"

    profile = reduced_homology(complex_)
    if run.format == "json":
        data = {"subject": subject, **homology_data(profile, run.characteristics)}
        click.echo(dump_json(data))
    elif run.format == "csv":
        click.echo(homology_csv(profile, run.characteristics), nl=False)
    else:
        console.print(homology_table(subject, profile, run.characteristics))


if __name__ == "__main__":
    cli()

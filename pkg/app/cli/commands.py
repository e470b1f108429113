"""
commands.py

Command group:

    sweep               recall probability over a noise grid, one block per model
    fixed-point-check   does one update step leave every stored memory in place?
    single-run          one trial at the first noise value

Every subcommand starts from a preset (default example1) and applies the
flags given on top of it. Validation failures name the offending flag and
exit with status 2.
"""

from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Mapping, Sequence

import click

from app.core.errors import ConfigError, KernelOverflow, SingularMatrix
from app.core.logger import log
from app.cli.output import emit_csv, render_summary
from app.experiments import (
    DEFAULT_NOISE_GRID,
    PRESET_NAMES,
    Domain,
    TrialConfig,
    preset,
    random_memories,
    run_sweeps,
    run_trial,
    trial_rng,
    validate_noise_grid,
    validate_trial_config,
)
from app.experiments.validation import MAX_SEED
from app.networks import MODEL_NAMES, NetworkState, UpdateMode, build_model, step


SUBCOMMANDS = ("sweep", "fixed-point-check", "single-run")
OUTPUT_FORMATS = ("csv", "summary")
MODES = ("auto",) + tuple(mode.value for mode in UpdateMode)

# validation reason code → flag
_REASON_FLAGS = {
    "UNKNOWN_DOMAIN": "--domain",
    "UNKNOWN_MODEL": "--model",
    "UNKNOWN_UPDATE_MODE": "--mode",
    "N_NOT_POSITIVE": "--n",
    "P_NOT_POSITIVE": "--p",
    "Q_NOT_ABOVE_ONE": "--q",
    "L_BELOW_ONE": "--L",
    "EPSILON_P_NOT_POSITIVE": "--epsilon-p",
    "ALPHA_NOT_POSITIVE": "--alpha",
    "Q_OVERFLOWS": "--q",
    "POTENTIAL_OVERFLOWS": "--epsilon-p",
    "ALPHA_OVERFLOWS": "--alpha",
    "NOISE_OUT_OF_RANGE": "--noise",
    "NOISE_GRID_EMPTY": "--noise",
    "NOISE_GRID_DUPLICATES": "--noise",
    "TRIALS_NOT_POSITIVE": "--trials",
    "MAX_ITERS_NOT_POSITIVE": "--max-iters",
    "TOL_NEGATIVE": "--tol",
    "SUCCESS_TOL_NEGATIVE": "--success-tol",
    "SEED_OUT_OF_RANGE": "--seed",
}

# flag parameter name → TrialConfig field
_TRIAL_FIELDS = {
    "domain": "domain",
    "n": "n",
    "p": "p",
    "q": "q",
    "L": "L",
    "epsilon_p": "eps_p",
    "alpha": "alpha",
    "trials": "trials",
    "max_iters": "max_iters",
    "tol": "tol",
    "success_tol": "success_tol",
    "seed": "seed",
}


# ============================================================
# Parsed configuration
# ============================================================

@dataclass(frozen=True)
class CliConfig:

    subcommand: str
    trial: TrialConfig
    models: tuple[str, ...]
    noise_grid: tuple[float, ...]
    preset: str = "example1"
    out: Path | None = None
    output_format: str = "csv"
    workers: int | None = None

    def settings(self) -> dict[str, Any]:
        """Every effective value, for the summary header."""
        cfg = self.trial
        return {
            "subcommand": self.subcommand,
            "preset": self.preset,
            "models": ",".join(self.models),
            "domain": cfg.domain.value,
            "n": cfg.n,
            "p": cfg.p,
            "q": cfg.q,
            "L": cfg.L,
            "epsilon_p": cfg.eps_p,
            "alpha": cfg.alpha,
            "noise": ",".join(f"{v:g}" for v in self.noise_grid),
            "trials": cfg.trials,
            "max_iters": cfg.max_iters,
            "tol": cfg.tol,
            "success_tol": cfg.success_tol,
            "seed": cfg.seed,
            "mode": "auto" if cfg.update_mode is None else cfg.update_mode.value,
            "workers": "QMEM_WORKERS" if self.workers is None else self.workers,
            "out": "-" if self.out is None else str(self.out),
            "format": self.output_format,
        }


def _usage(reason: str, detail: str) -> click.UsageError:
    flag = _REASON_FLAGS.get(reason, "configuration")
    return click.UsageError(f"Invalid value for '{flag}': {detail} ({reason})")


def build_cli_config(subcommand: str, params: Mapping[str, Any]) -> CliConfig:
    """
    Merge flags over the chosen preset and validate the result.

    Raises
    ------
    click.UsageError — message names the offending flag
    """
    preset_name = params.get("preset") or "example1"
    base = preset(preset_name)

    overrides = {
        field_name: params[flag]
        for flag, field_name in _TRIAL_FIELDS.items()
        if params.get(flag) is not None
    }
    if "domain" in overrides:
        overrides["domain"] = Domain(overrides["domain"])
    mode = params.get("mode") or "auto"
    overrides["update_mode"] = None if mode == "auto" else UpdateMode(mode)

    models = tuple(params.get("model") or ())
    if not models:
        models = MODEL_NAMES if subcommand == "sweep" else (base.model,)
    overrides["model"] = models[0]

    noise = tuple(params.get("noise") or ())
    if not noise:
        noise = DEFAULT_NOISE_GRID if subcommand == "sweep" else (0.0,)
    ok, reason = validate_noise_grid(noise)
    if not ok:
        raise _usage(reason, ",".join(str(v) for v in noise))
    overrides["noise_prob"] = float(noise[0])

    trial = replace(base, **overrides)
    for model in models:
        ok, reason = validate_trial_config(trial.with_model(model))
        if not ok:
            raise _usage(reason, f"rejected for model {model}")

    out = params.get("out")
    return CliConfig(
        subcommand=subcommand,
        trial=trial,
        models=models,
        noise_grid=tuple(sorted(float(v) for v in noise)),
        preset=preset_name,
        out=Path(out) if out is not None else None,
        output_format=params.get("output_format") or "csv",
        workers=params.get("workers"),
    )


# ============================================================
# Shared options
# ============================================================

def trial_options(func):
    options = [
        click.option("--preset", type=click.Choice(PRESET_NAMES), default="example1", show_default=True,
                     help="Published experiment to start from."),
        click.option("--model", multiple=True, type=click.Choice(MODEL_NAMES),
                     help="Model name; repeat for several. Default: all for sweep, qrpnn-exponential otherwise."),
        click.option("--domain", type=click.Choice([d.value for d in Domain]), default=None,
                     help="Memory regime (preset default)."),
        click.option("--n", type=int, default=None, help="Neurons per memory."),
        click.option("--p", type=int, default=None, help="Stored memories."),
        click.option("--q", type=float, default=None, help="High-order kernel exponent (> 1)."),
        click.option("--L", "L", type=float, default=None, help="Potential kernel order (>= 1)."),
        click.option("--epsilon-p", "epsilon_p", type=float, default=None, help="Potential kernel offset (> 0)."),
        click.option("--alpha", type=float, default=None, help="Exponential kernel rate (> 0)."),
        click.option("--noise", multiple=True, type=click.FloatRange(0.0, 1.0),
                     help="Noise probability in [0, 1]; repeat to build a grid."),
        click.option("--trials", type=int, default=None, help="Trials per noise value."),
        click.option("--max-iters", "max_iters", type=int, default=None, help="Iteration cap per run."),
        click.option("--tol", type=float, default=None, help="Convergence tolerance."),
        click.option("--success-tol", "success_tol", type=float, default=None,
                     help="Max component distance counted as recall."),
        click.option("--seed", type=click.IntRange(0, MAX_SEED), default=None, help="Base seed."),
        click.option("--mode", type=click.Choice(MODES), default="auto", show_default=True,
                     help="Update mode; auto picks the model's default."),
        click.option("--out", type=click.Path(dir_okay=False), default=None, help="CSV output path."),
        click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS), default="csv",
                     show_default=True, help="What to print on stdout."),
        click.option("--workers", type=click.IntRange(min=1), default=None,
                     help="Worker processes (default QMEM_WORKERS or 1)."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


# ============================================================
# Commands
# ============================================================

@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli():
    """Quaternion-valued associative memories: recall experiments."""


@cli.command("sweep")
@trial_options
def sweep_command(**params):
    """Recall probability by noise intensity."""
    config = build_cli_config("sweep", params)
    try:
        results = run_sweeps(config.trial, config.models, config.noise_grid, config.workers)
    except ConfigError as exc:
        raise _usage(exc.reason, str(exc)) from exc

    if config.out is not None:
        emit_csv(results, config.out)

    if config.output_format == "csv" and config.out is None:
        emit_csv(results)
    else:
        click.echo(render_summary(config.settings(), results=results), nl=False)


@cli.command("fixed-point-check")
@trial_options
@click.pass_context
def fixed_point_command(ctx: click.Context, **params):
    """Exit 0 iff one update step keeps every stored memory within --success-tol."""
    config = build_cli_config("fixed-point-check", params)
    ctx.exit(fixed_point_check(config))


@cli.command("single-run")
@trial_options
def single_run_command(**params):
    """One trial of the first model at the first noise value."""
    config = build_cli_config("single-run", params)
    trial = config.trial
    outcome = run_trial(trial, trial_rng(trial.seed, 0, 0))
    click.echo(render_summary(config.settings(), outcome=outcome), nl=False)


def fixed_point_check(config: CliConfig) -> int:
    """
    Train each configured model on one random memory set (stream (seed, 0, 0))
    and apply a single update step to every stored memory.

    Prints one line per memory: model, index, max component distance.

    Returns
    -------
    int — 0 when every memory stays within success_tol, else 1
    """
    trial = config.trial
    memories = random_memories(trial.domain, trial.n, trial.p, trial_rng(trial.seed, 0, 0))
    violations = 0

    for name in config.models:
        cfg = trial.with_model(name)
        try:
            model = build_model(cfg.spec, memories, cfg.kernel_params)
        except SingularMatrix as exc:
            log("TRAINING_SINGULAR", layer="training", model=name, column=exc.column, pivot=exc.pivot)
            click.echo(f"{name}\tsingular\t{exc}")
            violations += 1
            continue
        except KernelOverflow as exc:
            log("TRAINING_OVERFLOW", layer="training", model=name, peak=exc.peak)
            click.echo(f"{name}\toverflow\t{exc}")
            violations += 1
            continue
        log("MODEL_TRAINED", layer="training", model=name, n=memories.n, p=memories.p)

        worst = 0.0
        for index in range(memories.p):
            state = NetworkState(memories[index])
            distance = step(model, state, cfg.effective_mode).distance(state)
            worst = max(worst, distance)
            click.echo(f"{name}\t{index + 1}\t{distance:.3e}")
            if distance > trial.success_tol:
                violations += 1
                log(
                    "FIXED_POINT_VIOLATION",
                    layer="cli",
                    model=name,
                    memory=index + 1,
                    distance=distance,
                    tolerance=trial.success_tol,
                )
        click.echo(f"{name}\tmax\t{worst:.3e}")

    return 0 if violations == 0 else 1


# ============================================================
# Programmatic parsing
# ============================================================

def parse_args(argv: Sequence[str]) -> CliConfig:
    """
    Parse a full argument vector (subcommand first) into a validated CliConfig
    without running anything.

    Raises
    ------
    click.UsageError — unknown subcommand, bad flag value, or invalid configuration
    """
    argv = list(argv)
    if not argv:
        raise click.UsageError(f"Missing subcommand. Choose from: {', '.join(SUBCOMMANDS)}")
    command = cli.get_command(None, argv[0])
    if command is None:
        raise click.UsageError(f"No such command '{argv[0]}'. Choose from: {', '.join(SUBCOMMANDS)}")
    with command.make_context(argv[0], argv[1:]) as ctx:
        params = dict(ctx.params)
    return build_cli_config(argv[0], params)

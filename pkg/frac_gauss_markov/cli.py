import sys
import tomllib
from typing import Optional

import click

from frac_gauss_markov.controller import Controller, EXIT_SUCCESS, EXIT_VALIDATION
from frac_gauss_markov.controller.data_objects import ProcessSettings
from frac_gauss_markov.controller.process_strategy import ValidProcess
from frac_gauss_markov.controller.validation_suite import DEFAULT_N_PATHS, ValidSuite
from frac_gauss_markov.frac_cov import CrossTerm
from frac_gauss_markov.neuro import NeuronParams
from frac_gauss_markov.quadrature import QuadratureConfig

PROCESS_CHOICE = click.Choice([p.value for p in ValidProcess], case_sensitive=False)
LOG_TAIL_LINES: int = 20


def _load_config(ctx: click.Context, param: click.Parameter, value: Optional[str]):
    """
    Installs the TOML file as click's default_map, so flags override the file and the file overrides defaults.
    Top-level keys configure the group; tables named after commands configure each command.
    """
    if value is None:
        return value
    try:
        with open(value, 'rb') as f:
            config = tomllib.load(f)
    except (OSError, tomllib.TOMLDecodeError) as e:
        raise click.BadParameter(f"Could not read config file {value}: {e}", ctx=ctx, param=param)
    ctx.default_map = {**(ctx.default_map or {}), **config}
    return value


def _quadrature_options(fn):
    fn = click.option('--nodes-per-panel', type=click.IntRange(min=2), default=32, show_default=True,
                      help="Gauss-Legendre nodes per panel")(fn)
    fn = click.option('--panels', type=click.IntRange(min=1), default=8, show_default=True,
                      help="Number of graded panels")(fn)
    fn = click.option('--rel-tol', type=click.FloatRange(min=0, min_open=True), default=1e-8, show_default=True,
                      help="Target of the panel-doubling error estimate")(fn)
    return fn


def _process_options(fn):
    fn = click.option('--mu', type=float, default=1.0, show_default=True, help="OU rate")(fn)
    fn = click.option('--sigma', type=float, default=1.0, show_default=True, help="OU diffusion")(fn)
    fn = click.option('--beta', type=float, default=0.0, show_default=True, help="OU asymptotic mean")(fn)
    fn = click.option('--y', 'y', type=float, default=0.0, show_default=True, help="OU initial value")(fn)
    fn = click.option('--cross-term', type=click.Choice([c.value for c in CrossTerm]),
                      default=CrossTerm.INDEPENDENT.value, show_default=True,
                      help="FISOU start/increment cross term")(fn)
    return fn


def _quadrature(nodes_per_panel: int, panels: int, rel_tol: float) -> QuadratureConfig:
    return QuadratureConfig(nodes_per_panel=nodes_per_panel, panels=panels, rel_tol=rel_tol)


def _settings(mu, sigma, beta, y, cross_term, nodes_per_panel, panels, rel_tol) -> ProcessSettings:
    return ProcessSettings(mu=mu, sigma=sigma, beta=beta, y=y, cross_term=CrossTerm(cross_term),
                           quadrature=_quadrature(nodes_per_panel, panels, rel_tol))


def _error_reporter(verbose: bool):
    """
    Echoes errors to stderr. With --verbose the tail of the run log follows, including the traceback.
    """
    def report(msg: str):
        click.echo(f"Error: {msg}", err=True)
        if not verbose:
            return
        history = Controller.get_log_history(tail=LOG_TAIL_LINES)
        if history:
            click.echo(f"Last lines of {Controller.LOG_FILE_LOCATION}:", err=True)
            click.echo(history, err=True, nl=False)
    return report


def _finish(ctx: click.Context, result, code: int, out: str):
    controller: Controller = ctx.obj
    if code != EXIT_SUCCESS:
        ctx.exit(code)
    df, metadata = result[0], result[1]
    with click.open_file(out, 'w') as f:
        f.write(controller.export(df, metadata))


@click.group()
@click.option('--config', type=click.Path(exists=True, dir_okay=False), callback=_load_config, is_eager=True,
              expose_value=False, help="TOML file of option defaults")
@click.option('--log-file', type=click.Path(dir_okay=False), default=None, help="Location of the rotating log")
@click.option('--verbose/--quiet', default=False, help="Write a log file")
@click.option('--threads', type=click.IntRange(min=1), default=1, envvar='FRACGM_THREADS', show_default=True,
              help="Worker threads for grid evaluation")
@click.option('--progress/--no-progress', default=False, help="Show progress bars")
@click.pass_context
def main(ctx: click.Context, log_file: Optional[str], verbose: bool, threads: int, progress: bool):
    """Fractional integrals of Gauss-Markov processes: covariance tables, simulation and validation."""
    ctx.obj = Controller(run_logger=verbose, log_file=log_file, threads=threads, progress=progress,
                         error_callback=_error_reporter(verbose))


@main.command('var-curve')
@click.option('--process', type=PROCESS_CHOICE, required=True)
@click.option('--alpha', 'alphas', type=float, multiple=True, help="Fractional order (repeatable)")
@click.option('--t-start', type=float, default=None)
@click.option('--t-end', type=float, default=None)
@click.option('--t-step', type=float, default=None)
@click.option('--error-estimate/--no-error-estimate', default=True, show_default=True)
@click.option('--mean/--no-mean', default=False, show_default=True, help="Add a mean column after each variance column")
@click.option('--out', type=click.Path(dir_okay=False, allow_dash=True), default='-', show_default=True)
@_process_options
@_quadrature_options
@click.pass_context
def cmd_var_curve(ctx, process, alphas, t_start, t_end, t_step, error_estimate, mean, out,
                  mu, sigma, beta, y, cross_term, nodes_per_panel, panels, rel_tol):
    """Variance curves, one column per alpha."""
    controller: Controller = ctx.obj
    result, code = controller.execute('var-curve', lambda: controller.var_curve(
        process, _settings(mu, sigma, beta, y, cross_term, nodes_per_panel, panels, rel_tol),
        alphas, t_start, t_end, t_step, error_estimate, mean))
    _finish(ctx, result, code, out)


@main.command('cov-table')
@click.option('--process', type=PROCESS_CHOICE, required=True)
@click.option('--alpha', type=float, default=0.5, show_default=True)
@click.option('--u', type=float, default=None, help="Fixed first time of the slice (default 1)")
@click.option('--t-start', type=float, default=None)
@click.option('--t-end', type=float, default=None)
@click.option('--t-step', type=float, default=None)
@click.option('--full-grid/--slice', default=False, show_default=True)
@click.option('--error-estimate/--no-error-estimate', default=True, show_default=True)
@click.option('--out', type=click.Path(dir_okay=False, allow_dash=True), default='-', show_default=True)
@_process_options
@_quadrature_options
@click.pass_context
def cmd_cov_table(ctx, process, alpha, u, t_start, t_end, t_step, full_grid, error_estimate, out,
                  mu, sigma, beta, y, cross_term, nodes_per_panel, panels, rel_tol):
    """Covariance slices cov(u, t) or full (u, t) grids."""
    controller: Controller = ctx.obj
    result, code = controller.execute('cov-table', lambda: controller.cov_table(
        process, _settings(mu, sigma, beta, y, cross_term, nodes_per_panel, panels, rel_tol),
        alpha, u, t_start, t_end, t_step, full_grid, error_estimate))
    _finish(ctx, result, code, out)


@main.command('simulate')
@click.option('--process', type=PROCESS_CHOICE, required=True)
@click.option('--alpha', 'alphas', type=float, multiple=True, default=(0.5,), show_default=True)
@click.option('--t-end', type=float, default=2.0, show_default=True)
@click.option('--h', type=float, default=0.01, show_default=True, help="Time step")
@click.option('--n-paths', type=click.IntRange(min=0), default=10, show_default=True)
@click.option('--seed', type=click.IntRange(min=0), default=0, show_default=True)
@click.option('--method', type=click.Choice(['cholesky', 'pathwise']), default='cholesky', show_default=True)
@click.option('--shared-z/--independent-z', default=True, show_default=True,
              help="Reuse one Gaussian ensemble across alpha values")
@click.option('--out', type=click.Path(dir_okay=False, allow_dash=True), default='-', show_default=True)
@_process_options
@_quadrature_options
@click.pass_context
def cmd_simulate(ctx, process, alphas, t_end, h, n_paths, seed, method, shared_z, out,
                 mu, sigma, beta, y, cross_term, nodes_per_panel, panels, rel_tol):
    """Simulated sample paths, one row per (alpha, path)."""
    controller: Controller = ctx.obj
    result, code = controller.execute('simulate', lambda: controller.simulate(
        process, _settings(mu, sigma, beta, y, cross_term, nodes_per_panel, panels, rel_tol),
        alphas, t_end, h, n_paths, seed, method, shared_z))
    _finish(ctx, result, code, out)


@main.command('validate')
@click.option('--suite', type=click.Choice([s.value for s in ValidSuite], case_sensitive=False), required=True)
@click.option('--seed', type=click.IntRange(min=0), default=0, show_default=True)
@click.option('--n-paths', type=click.IntRange(min=2), default=DEFAULT_N_PATHS, show_default=True)
@click.option('--out', type=click.Path(dir_okay=False, allow_dash=True), default='-', show_default=True)
@_quadrature_options
@click.pass_context
def cmd_validate(ctx, suite, seed, n_paths, out, nodes_per_panel, panels, rel_tol):
    """Runs an acceptance suite and writes a pass/fail report. Exits with 4 if a check fails."""
    controller: Controller = ctx.obj
    result, code = controller.execute('validate', lambda: controller.validate(
        suite, seed, n_paths, _quadrature(nodes_per_panel, panels, rel_tol)))
    _finish(ctx, result, code, out)
    if not result[2]:
        controller.display_error(f"Validation suite {suite} failed")
        ctx.exit(EXIT_VALIDATION)


@main.command('neuro')
@click.option('--params', 'params_file', type=click.Path(exists=True, dir_okay=False), default=None,
              help="TOML file of neuron parameters")
@click.option('--alpha', type=float, default=0.5, show_default=True)
@click.option('--t-end', type=float, default=2.0, show_default=True)
@click.option('--h', type=float, default=0.01, show_default=True, help="Time step")
@click.option('--n-paths', type=click.IntRange(min=0), default=10, show_default=True)
@click.option('--seed', type=click.IntRange(min=0), default=0, show_default=True)
@click.option('--out', type=click.Path(dir_okay=False, allow_dash=True), default='-', show_default=True)
@_quadrature_options
@click.pass_context
def cmd_neuro(ctx, params_file, alpha, t_end, h, n_paths, seed, out, nodes_per_panel, panels, rel_tol):
    """Voltage paths of the fractional neuron with the analytic mean."""
    controller: Controller = ctx.obj

    def run():
        mapping = {}
        if params_file is not None:
            with open(params_file, 'rb') as f:
                mapping = tomllib.load(f)
        return controller.neuro(NeuronParams.from_mapping(mapping), alpha, t_end, h, n_paths, seed,
                                _quadrature(nodes_per_panel, panels, rel_tol))

    result, code = controller.execute('neuro', run)
    _finish(ctx, result, code, out)


if __name__ == '__main__':
    sys.exit(main())

"""Command-line interface.

Subcommands:

* ``calc``     - one-off multiplier / voting-power / yield calculations
* ``schedule`` - print (or export) the yearly inflation and reward table
* ``sample``   - draw a population and write CSVs plus histogram figure
* ``run``      - run one scenario and write metrics CSV/JSON and figures
* ``compare``  - run several presets against shared seeds side by side

Exit codes: 0 on success, 1 on I/O failure, 2 on usage or config errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from . import charts, metrics_io, population, rewards, scenarios, tokenomics
from .errors import ConfigError
from .runconfig import VALID_FORMATS, RunConfig, default_run_config, load_run_config
from .tokenomics import FULL_CURVES, InflationPolicy

_CLI_INFLATION = {"dynamic": InflationPolicy.DYNAMIC_QUADRATIC,
                  "constant": InflationPolicy.CONSTANT_FIVE_PERCENT}


def _require(args: argparse.Namespace, parser: argparse.ArgumentParser, *names: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            parser.error(f"calc {args.kind} requires --{name}")


def cmd_calc(args, parser) -> int:
    kind = args.kind
    if kind == "dissolve":
        _require(args, parser, "delay")
        value = tokenomics.dissolve_delay_multiplier(args.delay, FULL_CURVES)
        print(f"dissolve_delay_multiplier(delay={args.delay}) = {value!r}")
    elif kind == "age":
        _require(args, parser, "age")
        value = tokenomics.age_multiplier(args.age, FULL_CURVES)
        print(f"age_multiplier(age={args.age}) = {value!r}")
    elif kind == "voting-power":
        _require(args, parser, "stake", "delay", "age")
        d = tokenomics.dissolve_delay_multiplier(args.delay, FULL_CURVES)
        a = tokenomics.age_multiplier(args.age, FULL_CURVES)
        value = tokenomics.voting_power(args.stake, args.delay, args.age, FULL_CURVES)
        print(f"voting_power(stake={args.stake}, delay={args.delay}, age={args.age}) = {value!r}")
        print(f"  dissolve_delay_multiplier = {d!r}")
        print(f"  age_multiplier = {a!r}")
    else:  # estimated-ratio
        _require(args, parser, "delay", "pool", "aggregate")
        if args.aggregate <= 0:
            parser.error("--aggregate must be > 0 (multiplier-weighted stake of current governors)")
        synthetic = [rewards.GovernorView(agent_id=0, stake=args.aggregate,
                                          age_mult=1.0, delay_mult=1.0)]
        value = rewards.estimated_annualized_ratio(args.delay, synthetic, args.pool, FULL_CURVES)
        print(f"estimated_annualized_ratio(delay={args.delay}, pool={args.pool}, "
              f"aggregate={args.aggregate}) = {value!r}")
    return 0


def cmd_schedule(args, parser) -> int:
    schedule = tokenomics.build_supply_schedule(
        args.initial_supply, args.years * 12, _CLI_INFLATION[args.policy])
    header = f"{'year':>4}  {'rate':>10}  {'supply':>20}  {'yearly_reward':>18}  {'monthly_reward':>18}"
    print(header)
    for y in range(schedule.years):
        print(f"{y:>4}  {schedule.yearly_rates[y]:>10.6f}  {schedule.yearly_supplies[y]:>20.3f}"
              f"  {schedule.yearly_rewards[y]:>18.3f}  {schedule.monthly_rewards[12 * y]:>18.3f}")
    if args.csv:
        lines = ["year,inflation_rate,supply,yearly_reward,monthly_reward"]
        for y in range(schedule.years):
            lines.append(",".join((
                str(y),
                format(schedule.yearly_rates[y], ".17g"),
                format(schedule.yearly_supplies[y], ".17g"),
                format(schedule.yearly_rewards[y], ".17g"),
                format(schedule.monthly_rewards[12 * y], ".17g"),
            )))
        Path(args.csv).write_text("\n".join(lines) + "\n", encoding="utf-8")
        print(f"wrote {args.csv}")
    return 0


def _resolve_config(args) -> RunConfig:
    config = load_run_config(args.config) if args.config else default_run_config()
    if getattr(args, "preset", None):
        config = replace(config, policy=replace(
            scenarios.preset(args.preset),
            initial_supply=config.policy.initial_supply,
            horizon=config.policy.horizon,
            shock_std_dev=config.policy.shock_std_dev,
            population_seed=config.policy.population_seed,
            shock_seed=config.policy.shock_seed,
        ), scenario=args.preset)
    if getattr(args, "seed_population", None) is not None:
        config = replace(config,
                         population=replace(config.population, seed=args.seed_population),
                         policy=replace(config.policy, population_seed=args.seed_population))
    if getattr(args, "seed_shocks", None) is not None:
        config = replace(config, policy=replace(config.policy, shock_seed=args.seed_shocks))
    if getattr(args, "output_dir", None):
        config = replace(config, output_dir=Path(args.output_dir))
    if getattr(args, "format", None):
        formats = tuple(dict.fromkeys(args.format.split(",")))
        for fmt in formats:
            if fmt not in VALID_FORMATS:
                raise ConfigError(f"--format: '{fmt}' is not one of {', '.join(VALID_FORMATS)}")
        config = replace(config, formats=formats)
    return config


def cmd_sample(args, parser) -> int:
    config = _resolve_config(args)
    profiles = population.sample_population(config.population)
    summary = population.population_summary(profiles)

    out = config.output_dir
    out.mkdir(parents=True, exist_ok=True)
    pop_path = out / "population.csv"
    lines = ["agent_id,endowment,threshold,liquidity_preference"]
    lines.extend(
        f"{p.agent_id},{format(p.endowment, '.17g')},{format(p.staking_threshold, '.17g')},"
        f"{p.liquidity_preference}"
        for p in profiles
    )
    pop_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    hist_path = out / "histograms.csv"
    population.write_summary_csv(summary, hist_path)
    svg_path = out / "population_histograms.svg"
    charts.emit_chart(summary, "population_histograms", svg_path)

    endowment = summary.feature("endowment")
    threshold = summary.feature("staking_threshold")
    print(f"sampled {summary.n_agents} agents (seed {config.population.seed})")
    print(f"  total endowment: {endowment.total:,.0f} tokens")
    print(f"  mean staking threshold: {threshold.mean:.4f}")
    print(f"wrote {pop_path}, {hist_path}, {svg_path}")
    return 0


def _write_scenario_outputs(result: scenarios.ScenarioResult, policy,
                            out: Path, formats: tuple[str, ...]) -> list[Path]:
    out.mkdir(parents=True, exist_ok=True)
    written = []
    frames = list(result.frames)
    if "csv" in formats:
        path = out / "metrics.csv"
        metrics_io.export_csv(frames, path)
        written.append(path)
    if "json" in formats:
        path = out / "metrics.json"
        metrics_io.export_json(frames, path)
        written.append(path)
    if "svg" in formats:
        schedule = tokenomics.build_supply_schedule(
            policy.initial_supply, policy.horizon, policy.inflation)
        payloads = (
            ("governor_counts", frames),
            ("token_percentages", frames),
            ("multiplier_curve", policy.multipliers),
            ("inflation_supply", schedule),
            ("reward_schedule", schedule),
        )
        for kind, payload in payloads:
            path = out / f"{kind}.svg"
            charts.emit_chart(payload, kind, path)
            written.append(path)
    return written


def _print_result(result: scenarios.ScenarioResult) -> None:
    print(f"scenario {result.name}: {len(result.frames)} months")
    print(f"  mean staking ratio:       {result.mean_staking_ratio:.6f}")
    print(f"  staking ratio volatility: {result.staking_ratio_volatility:.6f}")
    print(f"  final governor count:     {result.final_governor_count}")
    print(f"  final supply:             {result.final_supply:,.0f}")


def cmd_run(args, parser) -> int:
    config = _resolve_config(args)
    result = scenarios.run_scenario(config.scenario, config.policy, config.population)
    written = _write_scenario_outputs(result, config.policy, config.output_dir, config.formats)
    _print_result(result)
    for path in written:
        print(f"wrote {path}")
    return 0


def cmd_compare(args, parser) -> int:
    names = [n for n in args.presets.split(",") if n]
    if len(names) < 2:
        parser.error("--presets needs at least two comma-separated preset names")
    config = _resolve_config(args)
    shared = dict(
        population_seed=config.policy.population_seed,
        shock_seed=config.policy.shock_seed,
        horizon=config.policy.horizon,
        shock_std_dev=config.policy.shock_std_dev,
        initial_supply=config.policy.initial_supply,
    )
    results = scenarios.run_comparative(names, config.population, **shared)
    out = config.output_dir
    out.mkdir(parents=True, exist_ok=True)
    for result in results:
        effective = replace(scenarios.preset(result.name), **shared)
        _write_scenario_outputs(result, effective, out / result.name, config.formats)
        _print_result(result)
    summary_path = out / "comparison.csv"
    lines = ["scenario,mean_staking_ratio,staking_ratio_volatility,final_supply,final_governor_count"]
    for r in results:
        lines.append(",".join((
            r.name,
            format(r.mean_staking_ratio, ".17g"),
            format(r.staking_ratio_volatility, ".17g"),
            format(r.final_supply, ".17g"),
            str(r.final_governor_count),
        )))
    summary_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {summary_path}")
    return 0


def _add_common_run_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", help="path to a JSON run configuration")
    sub.add_argument("--output-dir", help="override the output directory")
    sub.add_argument("--seed-population", type=int, help="override the population seed")
    sub.add_argument("--seed-shocks", type=int, help="override the shock-series seed")
    sub.add_argument("--format", help="comma-separated subset of csv,json,svg")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nnsim",
        description="Agent-based simulator of the NNS staking economy.")
    commands = parser.add_subparsers(dest="command", required=True)

    calc = commands.add_parser(
        "calc", help="evaluate multipliers, voting power, or prospective yield "
                     "(full linear curves)")
    calc.add_argument("kind", choices=("dissolve", "age", "voting-power", "estimated-ratio"))
    calc.add_argument("--delay", type=float, help="dissolve delay in months")
    calc.add_argument("--age", type=float, help="neuron age in months")
    calc.add_argument("--stake", type=float, help="staked tokens")
    calc.add_argument("--pool", type=float, help="monthly reward pool in tokens")
    calc.add_argument("--aggregate", type=float,
                      help="multiplier-weighted stake of the current governors")
    calc.set_defaults(func=cmd_calc)

    schedule = commands.add_parser("schedule", help="print the inflation/reward schedule")
    schedule.add_argument("--initial-supply", type=float, default=469e6)
    schedule.add_argument("--years", type=int, default=9)
    schedule.add_argument("--policy", choices=tuple(_CLI_INFLATION), default="dynamic")
    schedule.add_argument("--csv", help="also write the table to this CSV path")
    schedule.set_defaults(func=cmd_schedule)

    sample = commands.add_parser("sample", help="sample a population and write its files")
    _add_common_run_flags(sample)
    sample.set_defaults(func=cmd_sample)

    run = commands.add_parser("run", help="run one scenario and write its outputs")
    _add_common_run_flags(run)
    run.add_argument("--preset", help="policy preset overriding the config "
                                      f"({', '.join(scenarios.PRESET_NAMES)})")
    run.set_defaults(func=cmd_run)

    compare = commands.add_parser("compare", help="run presets against shared seeds")
    _add_common_run_flags(compare)
    compare.add_argument("--presets", required=True,
                         help="comma-separated preset names (at least two)")
    compare.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

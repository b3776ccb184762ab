"""Command-line front end: JSON config in, deterministic reports out.

Reports are JSON with sorted keys (byte-identical across reruns of the same
config and seed).  Exact quantities appear as "p/q" strings or integer
exponent vectors; any floating value is display-only, lives under a key
ending in "_approx", and sits next to the exact field it approximates.

Exit codes: 0 success, 2 exact certificate violation, 1 any other error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .chain import (
    VerifyOptions,
    build_chain,
    mu_exponents,
    n_formula,
    polygon_rows,
    verify_chain,
)
from .errors import (
    CertificateViolation,
    ParseError,
    SlopechainError,
    ValidationError,
)
from .gamma import card_mod, counting_check, enumerate_gamma
from .locus import eval_rank, locus_probe, threshold_sweep
from .model import GroupModel, ModelConfig, build_model, closure
from .polys import SymbolicScalar, as_fraction

SCHEMA = "slopechain-report/1"

_TOP_KEYS = {
    "n", "symbols", "generators", "scales",
    "T", "D", "D_range", "epsilon", "seed", "limits",
    "lambda", "lambdas", "h_prime", "h_dprime",
    "out", "csv_out",
}
_LIMIT_KEYS = {
    "enumeration_max", "matrix_max", "candidate_height",
    "random_candidates", "sample_count",
}


@dataclass
class Limits:
    enumeration_max: int = 10 ** 7
    matrix_max: int = 10 ** 6
    candidate_height: int = 2
    random_candidates: int = 0
    sample_count: int = 100


@dataclass
class RunConfig:
    model: ModelConfig
    T: int = 1
    D: int | None = None
    D_range: tuple[int, int] | None = None
    epsilon: Fraction = Fraction(1, 2)
    seed: int = 0
    limits: Limits = field(default_factory=Limits)
    lam: Fraction = Fraction(1)
    lambdas: tuple = (Fraction(1), Fraction(2), Fraction(4))
    h_prime: tuple | None = None
    h_dprime: tuple | None = None
    out: str | None = None
    csv_out: str | None = None
    echo: dict = field(default_factory=dict)


def _fail(name, message):
    raise ValidationError(name, message)


def _exact(name, value):
    try:
        return as_fraction(value)
    except (TypeError, ValueError) as exc:
        _fail(name, str(exc))


def parse_config(text: str) -> RunConfig:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(raw, dict):
        raise ParseError("config must be a JSON object")
    for key in raw:
        if key not in _TOP_KEYS:
            _fail(key, "unknown configuration key")

    for required in ("n", "generators", "scales"):
        if required not in raw:
            _fail(required, "missing required key")
    if not isinstance(raw["n"], int):
        _fail("n", "must be an integer")
    symbols = tuple(raw.get("symbols", ()))
    generators = raw["generators"]
    if not isinstance(generators, list) or not all(isinstance(g, list) for g in generators):
        _fail("generators", "must be a list of coordinate lists")
    scales = [_exact("scales", s) for s in raw["scales"]]
    model_cfg = ModelConfig(
        n=raw["n"],
        generators=tuple(tuple(g) for g in generators),
        scales=tuple(scales),
        symbols=symbols,
    )

    cfg = RunConfig(model=model_cfg)
    if "T" in raw:
        if not isinstance(raw["T"], int) or raw["T"] < 1:
            _fail("T", "must be an integer >= 1")
        cfg.T = raw["T"]
    if "D" in raw:
        if not isinstance(raw["D"], int) or raw["D"] < 1:
            _fail("D", "must be an integer >= 1")
        cfg.D = raw["D"]
    if "D_range" in raw:
        rng = raw["D_range"]
        if (
            not isinstance(rng, list) or len(rng) != 2
            or not all(isinstance(x, int) for x in rng) or rng[0] < 1 or rng[1] < rng[0]
        ):
            _fail("D_range", "must be [lo, hi] with 1 <= lo <= hi")
        cfg.D_range = (rng[0], rng[1])
    if "epsilon" in raw:
        eps = _exact("epsilon", raw["epsilon"])
        if not 0 < eps < 1:
            _fail("epsilon", f"must lie strictly between 0 and 1, got {eps}")
        cfg.epsilon = eps
    if "seed" in raw:
        if not isinstance(raw["seed"], int) or not -(2 ** 63) <= raw["seed"] < 2 ** 64:
            _fail("seed", "must be a 64-bit integer")
        cfg.seed = raw["seed"]
    if "limits" in raw:
        if not isinstance(raw["limits"], dict):
            _fail("limits", "must be an object")
        for key, value in raw["limits"].items():
            if key not in _LIMIT_KEYS:
                _fail(f"limits.{key}", "unknown limit")
            if not isinstance(value, int) or value <= 0:
                _fail(f"limits.{key}", "must be a positive integer")
            setattr(cfg.limits, key, value)
    if "lambda" in raw:
        lam = _exact("lambda", raw["lambda"])
        if lam <= 0:
            _fail("lambda", "must be positive")
        cfg.lam = lam
    if "lambdas" in raw:
        vals = [_exact("lambdas", v) for v in raw["lambdas"]]
        if not vals or any(v <= 0 for v in vals):
            _fail("lambdas", "must be a non-empty list of positive rationals")
        cfg.lambdas = tuple(vals)
    for key in ("h_prime", "h_dprime"):
        if key in raw:
            rows = raw[key]
            if not isinstance(rows, list) or not all(
                isinstance(r, list) and all(isinstance(x, int) for x in r) for r in rows
            ):
                _fail(key, "must be a list of integer vectors")
            setattr(cfg, key, tuple(tuple(r) for r in rows))
    for key in ("out", "csv_out"):
        if key in raw:
            if raw[key] is not None and not isinstance(raw[key], str):
                _fail(key, "must be a path string")
            setattr(cfg, key, raw[key])

    cfg.echo = _echo_config(raw)
    return cfg


def _scalar_json(value):
    if isinstance(value, SymbolicScalar):
        if value.is_rational():
            return str(value.const)
        return {
            "const": str(value.const),
            "coeffs": {f"t{i}": str(c) for i, c in sorted(value.coeffs.items())},
        }
    return str(as_fraction(value))


def _echo_config(raw):
    echo = {}
    for key, value in raw.items():
        if key in ("scales", "lambdas"):
            echo[key] = [str(_exact(key, v)) for v in value]
        elif key in ("epsilon", "lambda"):
            echo[key] = str(_exact(key, value))
        elif key == "generators":
            echo[key] = [
                [_scalar_json(_coerce_scalar(c)) for c in gen] for gen in value
            ]
        else:
            echo[key] = value
    return echo


def _coerce_scalar(c):
    if isinstance(c, dict):
        return SymbolicScalar(
            c.get("const", 0),
            {int(k[1:]) if isinstance(k, str) else int(k): as_fraction(v)
             for k, v in (c.get("coeffs") or {}).items()},
        )
    return SymbolicScalar(c)


def _point_json(point):
    return [_scalar_json(c) for c in point]


# ---------------------------------------------------------------------------
# command payloads


def _chain_payload(model: GroupModel, chain):
    nodes = []
    for node in chain.nodes:
        nodes.append({
            "dim": node.dim,
            "phi_exponents": list(node.phi.exponents),
            "phi_approx": node.phi.approx(model.scales),
            "coeff_lattice": [list(r) for r in node.subgroup.coeff.rows],
        })
    steps = []
    for step in chain.steps:
        steps.append({
            "frak_radicand": str(step.frak_s.radicand),
            "frak_root": step.frak_s.root,
            "frak_approx": step.frak_s.approx(),
            "slope_exponents": list(step.slope.numerator.exponents),
            "slope_denominator": step.slope.denominator,
            "slope_approx": step.slope.approx(model.scales),
        })
    return {"r": chain.r, "nodes": nodes, "steps": steps}


def _cmd_chain_build(cfg, model):
    return {"chain": _chain_payload(model, build_chain(model))}


def _cmd_chain_verify(cfg, model):
    chain = build_chain(model)
    options = VerifyOptions(
        height=cfg.limits.candidate_height,
        random_count=cfg.limits.random_candidates,
        seed=cfg.seed,
    )
    cert = verify_chain(model, chain, options)
    return {
        "chain": _chain_payload(model, chain),
        "certificate": {
            "candidates_checked": len(cert.candidates),
            "equality_witnesses": [
                {"step": step, "lattice": [list(r) for r in lattice]}
                for step, lattice in cert.equality_witnesses
            ],
            "scaling_alphas": list(cert.scaling_alphas),
            "psi_injective": cert.psi_injective,
            "telescoping_ok": cert.telescoping_ok,
            "slopes_strictly_decreasing": cert.slopes_strictly_decreasing,
        },
    }


def _cmd_mu(cfg, model):
    report = mu_exponents(model)
    return {
        "mu": str(report.mu),
        "mu_star": str(report.mu_star),
        "mu_list": [str(x) for x in report.mu_list],
        "well_distributed": report.well_distributed,
        "equal_scale_chain_dims": list(report.chain.dims()),
    }


def _cmd_gamma_enumerate(cfg, model):
    omega = enumerate_gamma(model, cfg.lam, cfg.limits.enumeration_max)
    return {
        "lambda": str(cfg.lam),
        "cardinality": len(omega),
        "points": [_point_json(p) for p in omega.points],
        "witnesses": [list(w) for w in omega.witnesses],
    }


def _nested_pair(cfg, model):
    if cfg.h_prime is None:
        _fail("h_prime", "required for this command")
    if cfg.h_dprime is None:
        _fail("h_dprime", "required for this command")
    return closure(model, cfg.h_prime), closure(model, cfg.h_dprime)


def _cmd_gamma_count(cfg, model):
    hp, hdp = _nested_pair(cfg, model)
    omega = enumerate_gamma(model, cfg.lam, cfg.limits.enumeration_max)
    count = card_mod(model, omega, hp, hdp)
    predicted = n_formula(model, hp, hdp)
    return {
        "lambda": str(cfg.lam),
        "count": count,
        "n_formula": str(predicted),
        "ratio": str(Fraction(count) / predicted) if predicted else None,
        "h_prime_dim": hp.dim,
        "h_dprime_dim": hdp.dim,
    }


def _cmd_gamma_check(cfg, model):
    hp, hdp = _nested_pair(cfg, model)
    report = counting_check(
        model, hp, hdp, cfg.lambdas, cfg.limits.enumeration_max
    )
    return {
        "raw_count": report.raw_count,
        "n_formula": str(report.n_formula_value),
        "ratio": str(report.ratio),
        "rank": report.rank,
        "fitted_exponent_approx": report.fitted_exponent,
        "ratio_bounds": [str(report.ratio_bounds[0]), str(report.ratio_bounds[1])],
        "sweep": [
            {"lambda": str(lam), "count": count, "ratio": str(ratio)}
            for lam, count, ratio in report.sweep
        ],
    }


def _require_D(cfg):
    if cfg.D is None:
        _fail("D", "required for this command")
    return cfg.D


def _cmd_locus_rank(cfg, model):
    omega = enumerate_gamma(model, Fraction(1), cfg.limits.enumeration_max)
    result = eval_rank(model, omega.points, cfg.T, _require_D(cfg), cfg.limits.matrix_max)
    return {
        "T": cfg.T,
        "D": cfg.D,
        "rank": result.rank,
        "injective": result.injective,
        "surjective": result.surjective,
        "rows": result.rows,
        "cols": result.cols,
    }


def _cmd_locus_probe(cfg, model):
    chain = build_chain(model)
    entries = locus_probe(
        model, chain, cfg.T, _require_D(cfg), cfg.epsilon,
        samples=cfg.limits.sample_count, seed=cfg.seed,
        limit=cfg.limits.matrix_max, enum_limit=cfg.limits.enumeration_max,
    )
    return {
        "T": cfg.T,
        "D": cfg.D,
        "epsilon": str(cfg.epsilon),
        "entries": [
            {
                "step": e.step,
                "subgroup_dim": e.subgroup_dim,
                "lower": e.lower,
                "upper": e.upper,
                "lower_witness": _point_json(e.lower_witness) if e.lower_witness else None,
                "upper_witness": _point_json(e.upper_witness) if e.upper_witness else None,
                "outside_samples": e.upper_sample_count,
            }
            for e in entries
        ],
    }


def _verdict_str(pair):
    lo, up = pair
    return ("T" if lo else "F") + ("-" if up is None else ("T" if up else "F"))


def _cmd_locus_sweep(cfg, model):
    if cfg.D_range is None:
        _fail("D_range", "required for locus sweep")
    chain = build_chain(model)
    report = threshold_sweep(
        model, chain, cfg.T, range(cfg.D_range[0], cfg.D_range[1] + 1),
        cfg.epsilon, samples=cfg.limits.sample_count, seed=cfg.seed,
        limit=cfg.limits.matrix_max, enum_limit=cfg.limits.enumeration_max,
    )
    payload = {
        "T": cfg.T,
        "D_range": list(cfg.D_range),
        "epsilon": str(cfg.epsilon),
        "rows": [
            {
                "D": row.degree,
                "rank": row.rank,
                "nullity": row.nullity,
                "verdicts": [_verdict_str(v) for v in row.verdicts],
                "i_star": row.i_star,
            }
            for row in report.rows
        ],
        "transitions": [{"D": d, "i_star": i} for d, i in report.transitions],
        "thresholds": [
            {
                "step": i,
                "radicand": str(exact.radicand),
                "root": exact.root,
                "T_frak_approx": approx,
            }
            for i, exact, approx in report.thresholds
        ],
    }
    if cfg.csv_out:
        with open(cfg.csv_out, "w") as fh:
            fh.write(_sweep_csv(report))
        payload["csv_out"] = cfg.csv_out
    return payload


def _sweep_csv(report):
    width = max(len(row.verdicts) for row in report.rows)
    header = "D,rank,nullity," + ",".join(f"verdict_{i}" for i in range(width))
    lines = [header]
    for row in report.rows:
        cells = [str(row.degree), str(row.rank), str(row.nullity)]
        cells.extend(_verdict_str(v) for v in row.verdicts)
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _cmd_polygon_export(cfg, model):
    chain = build_chain(model)
    lines = ["dim,phi_approx," + ",".join(f"e_{j + 1}" for j in range(model.l))]
    for dim, approx, exponents in polygon_rows(model, chain):
        lines.append(
            ",".join([str(dim), repr(approx)] + [str(e) for e in exponents])
        )
    return "\n".join(lines) + "\n"


_COMMANDS = {
    ("chain", "build"): _cmd_chain_build,
    ("chain", "verify"): _cmd_chain_verify,
    ("mu", None): _cmd_mu,
    ("gamma", "enumerate"): _cmd_gamma_enumerate,
    ("gamma", "count"): _cmd_gamma_count,
    ("gamma", "check"): _cmd_gamma_check,
    ("locus", "rank"): _cmd_locus_rank,
    ("locus", "probe"): _cmd_locus_probe,
    ("locus", "sweep"): _cmd_locus_sweep,
    ("polygon", "export"): _cmd_polygon_export,
}


def _add_common(parser):
    parser.add_argument("-c", "--config", required=True, help="path to a JSON config")
    parser.add_argument("--out", help="write the report here instead of stdout")
    parser.add_argument("--seed", type=int, help="override the config seed")
    parser.add_argument(
        "--limit", action="append", default=[], metavar="KEY=VALUE",
        help="override a limit, e.g. --limit enumeration_max=20000000",
    )


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="slopechain",
        description="exact subgroup chains, box-point counting, base-locus probes",
    )
    sub = parser.add_subparsers(dest="group", required=True)
    groups = {
        "chain": ("build", "verify"),
        "gamma": ("enumerate", "count", "check"),
        "locus": ("rank", "probe", "sweep"),
        "polygon": ("export",),
    }
    for group, actions in groups.items():
        gp = sub.add_parser(group)
        gsub = gp.add_subparsers(dest="action", required=True)
        for action in actions:
            _add_common(gsub.add_parser(action))
    _add_common(sub.add_parser("mu"))
    return parser


def run(argv) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    group = args.group
    action = getattr(args, "action", None)
    handler = _COMMANDS[(group, action)]
    try:
        with open(args.config) as fh:
            cfg = parse_config(fh.read())
        if args.seed is not None:
            cfg.seed = args.seed
            cfg.echo["seed"] = args.seed
        for override in args.limit:
            key, _, value = override.partition("=")
            if key not in _LIMIT_KEYS or not value.lstrip("-").isdigit() or int(value) <= 0:
                raise ValidationError(f"limits.{key}", f"bad override {override!r}")
            setattr(cfg.limits, key, int(value))
        model = build_model(cfg.model)
        payload = handler(cfg, model)
        if isinstance(payload, str):
            text = payload
        else:
            report = {
                "schema": SCHEMA,
                "command": " ".join(filter(None, (group, action))),
                "config": cfg.echo,
                "provenance": {
                    "version": __version__,
                    "seed": cfg.seed,
                    "permutation": list(model.permutation),
                },
            }
            report.update(payload)
            text = json.dumps(report, sort_keys=True, indent=2) + "\n"
        out_path = args.out or cfg.out
        if out_path:
            with open(out_path, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    except CertificateViolation as exc:
        _emit_error(exc, args)
        return 2
    except SlopechainError as exc:
        _emit_error(exc, args)
        return 1
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def _emit_error(exc, args):
    body = {
        "schema": SCHEMA,
        "error": {"code": type(exc).__name__, "message": str(exc)},
    }
    if isinstance(exc, CertificateViolation):
        body["error"]["kind"] = exc.kind
        if exc.step is not None:
            body["error"]["step"] = exc.step
        if exc.witness is not None:
            body["error"]["witness"] = [list(r) for r in exc.witness]
    sys.stdout.write(json.dumps(body, sort_keys=True, indent=2) + "\n")


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())

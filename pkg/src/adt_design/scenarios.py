"""Scenario configuration, dispatch, reporting, and parameter sweeps.

A scenario file is a YAML document describing the model (independent, copula,
or binary), the nominal parameter values, the design grid, the criterion, and
optimizer/quadrature controls.  ``load_config`` validates it field by field;
``run_scenario`` dispatches to the right information-matrix builder and
optimizer and returns a :class:`ScenarioResult`; ``sweep`` re-optimizes along
a one-parameter family and tabulates weights and efficiencies per value.

Bundled scenario files for the worked examples ship with the package under
``adt_design/scenarios/`` and are addressable by name through
:func:`bundled_scenario_path`.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from importlib import resources

import numpy as np
import yaml

from . import __about__
from . import binary_outcome, design_opt, failure_time, fisher
from .binary_outcome import BinaryScenario
from .copula import CopulaSpec
from .design_types import CriterionSpec, Design, Grid, OptimizerOptions
from .design_opt import OptimizationResult
from .errors import AdtDesignError, ConfigError, DomainError
from .failure_time import UseConditions
from .gamma_marginal import BivariateModel, MarginalParams, TimePlan
from .quadrature import QuadratureRule

__all__ = [
    "ScenarioConfig",
    "ScenarioResult",
    "SweepRow",
    "load_config",
    "validate_config",
    "run_scenario",
    "sweep",
    "bundled_scenario_path",
    "bundled_scenario_names",
    "render_design_report",
    "manifest_dict",
    "sweep_rows_to_csv",
    "SWEEPABLE_PARAMETERS",
]

MODEL_KINDS = ("independent", "copula", "binary")
CRITERION_KINDS = ("D", "c-quantile", "c-P11")
SWEEPABLE_PARAMETERS = ("x_u1", "x_u2", "kappa", "rho", "alpha", "z1", "z2")

_DEFAULTS = {
    "grid": {"increment": 0.05},
    "optimizer": {
        "tolerance": 1e-4,
        "max_iterations": 20_000,
        "prune_threshold": 1e-6,
        "cluster_threshold": 1e-3,
    },
    "quadrature": {"nodes": 48, "panels": 2},
    "output": {"directory": "adt-designer-out"},
}


@dataclass
class ScenarioConfig:
    """Fully resolved scenario description."""

    name: str
    model_kind: str
    model: BivariateModel
    copula: CopulaSpec
    criterion_kind: str
    use_conditions: UseConditions | None
    grid: Grid
    optimizer: OptimizerOptions
    quadrature: QuadratureRule
    output_dir: str
    resolved: dict = field(repr=False)


@dataclass
class ScenarioResult:
    """Everything a scenario run produces.

    ``joint`` is the optimized (or assembled) bivariate design.  For the
    decomposed independent-model c-criterion the per-margin results, the
    closed-form marginal weights, and the quantile are filled in as well.
    """

    config: ScenarioConfig
    criterion: CriterionSpec
    joint: OptimizationResult
    elemental: object
    marginal1: OptimizationResult | None = None
    marginal2: OptimizationResult | None = None
    elfving_weights: tuple[float, float] | None = None
    t_alpha: float | None = None

    @property
    def certified(self) -> bool:
        parts = [self.joint] + [m for m in (self.marginal1, self.marginal2) if m]
        return all(p.certified for p in parts)


# ---------------------------------------------------------------------------
# configuration loading


def _at(path, key):
    return f"{path}.{key}" if path else key


def _need(mapping, key, path, kind=None):
    if key not in mapping:
        raise ConfigError(f"{_at(path, key)}: required field is missing")
    value = mapping[key]
    if kind is not None and not isinstance(value, kind):
        raise ConfigError(
            f"{_at(path, key)}: expected {getattr(kind, '__name__', kind)}, got {value!r}")
    return value


def _number(mapping, key, path, default=None):
    if key not in mapping:
        if default is None:
            raise ConfigError(f"{_at(path, key)}: required field is missing")
        return default
    value = mapping[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{_at(path, key)}: expected a number, got {value!r}")
    return float(value)


def _wrap(path, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except DomainError as exc:
        raise ConfigError(f"{path}: {exc}") from exc


def load_config(path: str) -> ScenarioConfig:
    """Read and validate a scenario YAML file.

    Raises :class:`ConfigError` with a field-level message on the first
    violation found.
    """
    if not path:
        raise ConfigError("config path is empty")
    if not os.path.isfile(path):
        raise ConfigError(f"config file not found: {path!r}")
    with open(path, "r", encoding="utf-8") as fh:
        try:
            raw = yaml.safe_load(fh)
        except yaml.YAMLError as exc:
            raise ConfigError(f"invalid YAML in {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config root must be a mapping")
    return _resolve(raw, default_name=os.path.splitext(os.path.basename(path))[0])


def _resolve(raw: dict, default_name: str = "scenario") -> ScenarioConfig:
    known = {"name", "model", "components", "time_plan", "copula", "criterion",
             "use_conditions", "thresholds", "grid", "optimizer", "quadrature",
             "output"}
    for key in raw:
        if key not in known:
            raise ConfigError(f"{key}: unknown top-level field")

    name = raw.get("name", default_name)
    model_kind = _need(raw, "model", "", str)
    if model_kind not in MODEL_KINDS:
        raise ConfigError(f"model: must be one of {MODEL_KINDS}, got {model_kind!r}")

    comps_raw = _need(raw, "components", "", list)
    if len(comps_raw) != 2:
        raise ConfigError(f"components: exactly two components required, got {len(comps_raw)}")
    comps = []
    for i, c in enumerate(comps_raw):
        if not isinstance(c, dict):
            raise ConfigError(f"components[{i}]: expected a mapping")
        comps.append(_wrap(f"components[{i}]", MarginalParams,
                           intercept=_number(c, "intercept", f"components[{i}]"),
                           slope=_number(c, "slope", f"components[{i}]"),
                           scale=_number(c, "scale", f"components[{i}]")))

    plan_raw = _need(raw, "time_plan", "", list)
    plan = _wrap("time_plan", TimePlan, plan_raw)
    model = BivariateModel(comps[0], comps[1], plan)

    cop_raw = raw.get("copula")
    if model_kind == "independent":
        if cop_raw is not None:
            raise ConfigError("copula: not allowed for the independent model")
        spec = CopulaSpec.independence()
    else:
        if not isinstance(cop_raw, dict):
            raise ConfigError("copula: required mapping for copula/binary models")
        family = _need(cop_raw, "family", "copula", str)
        if family == "independence":
            spec = CopulaSpec.independence()
        elif family in ("frank", "gaussian"):
            par = _number(cop_raw, "parameter", "copula")
            spec = _wrap("copula.parameter",
                         CopulaSpec.frank if family == "frank" else CopulaSpec.gaussian,
                         par)
        else:
            raise ConfigError(
                f"copula.family: must be independence, frank, or gaussian, got {family!r}")

    crit_raw = _need(raw, "criterion", "", dict)
    criterion_kind = _need(crit_raw, "kind", "criterion", str)
    if criterion_kind not in CRITERION_KINDS:
        raise ConfigError(
            f"criterion.kind: must be one of {CRITERION_KINDS}, got {criterion_kind!r}")
    if criterion_kind == "c-quantile" and model_kind != "independent":
        raise ConfigError(
            "criterion.kind: c-quantile requires the independent model "
            "(the failure-time quantile is defined only there)")
    if criterion_kind == "c-P11" and model_kind != "binary":
        raise ConfigError("criterion.kind: c-P11 requires the binary model")
    if model_kind == "binary" and plan.k != 1:
        raise ConfigError(
            f"time_plan: the binary model requires exactly one observation time (k=1), got k={plan.k}")

    uc = None
    needs_uc = criterion_kind in ("c-quantile", "c-P11")
    uc_raw = raw.get("use_conditions")
    th_raw = raw.get("thresholds")
    if needs_uc or model_kind == "binary":
        if not isinstance(th_raw, dict):
            raise ConfigError("thresholds: required mapping (z1, z2)")
        thresholds = (_number(th_raw, "z1", "thresholds"),
                      _number(th_raw, "z2", "thresholds"))
    elif th_raw is not None:
        raise ConfigError(
            "thresholds: only used by binary models or c-criterion scenarios")
    if needs_uc:
        if not isinstance(uc_raw, dict):
            raise ConfigError("use_conditions: required mapping (x1, x2)")
        alpha = 0.5
        if criterion_kind == "c-quantile":
            alpha = _number(crit_raw, "alpha", "criterion", default=0.5)
        elif "alpha" in crit_raw:
            raise ConfigError("criterion.alpha: only valid with kind c-quantile")
        uc = _wrap("use_conditions", UseConditions,
                   x_u=(_number(uc_raw, "x1", "use_conditions"),
                        _number(uc_raw, "x2", "use_conditions")),
                   thresholds=thresholds, alpha=alpha)
    elif uc_raw is not None:
        raise ConfigError("use_conditions: only valid with a c-criterion")
    elif model_kind == "binary":
        # D-criterion binary runs still need thresholds; keep them on a neutral
        # use-conditions record so downstream code has one access path
        uc = UseConditions(x_u=(0.0, 0.0), thresholds=thresholds, alpha=0.5)

    grid_raw = {**_DEFAULTS["grid"], **raw.get("grid", {})}
    grid = _wrap("grid.increment", Grid, _number(grid_raw, "increment", "grid"))

    opt_raw = {**_DEFAULTS["optimizer"], **raw.get("optimizer", {})}
    optimizer = _wrap("optimizer", OptimizerOptions,
                      tolerance=_number(opt_raw, "tolerance", "optimizer"),
                      max_iterations=int(_number(opt_raw, "max_iterations", "optimizer")),
                      prune_threshold=_number(opt_raw, "prune_threshold", "optimizer"),
                      cluster_threshold=_number(opt_raw, "cluster_threshold", "optimizer"))

    quad_raw = {**_DEFAULTS["quadrature"], **raw.get("quadrature", {})}
    quadrature = _wrap("quadrature", QuadratureRule,
                       nodes_per_axis=int(_number(quad_raw, "nodes", "quadrature")),
                       panels=int(_number(quad_raw, "panels", "quadrature")))

    out_raw = {**_DEFAULTS["output"], **raw.get("output", {})}
    output_dir = str(out_raw.get("directory"))

    resolved = {
        "name": name,
        "model": model_kind,
        "components": [
            {"intercept": c.intercept, "slope": c.slope, "scale": c.scale}
            for c in comps
        ],
        "time_plan": list(plan.times),
        "copula": None if spec.is_independence and model_kind == "independent"
        else {"family": spec.family, "parameter": spec.parameter},
        "criterion": {"kind": criterion_kind,
                      **({"alpha": uc.alpha} if criterion_kind == "c-quantile" else {})},
        "use_conditions": None if uc is None or not needs_uc
        else {"x1": uc.x_u[0], "x2": uc.x_u[1]},
        "thresholds": None if uc is None
        else {"z1": uc.thresholds[0], "z2": uc.thresholds[1]},
        "grid": {"increment": grid.increment},
        "optimizer": {"tolerance": optimizer.tolerance,
                      "max_iterations": optimizer.max_iterations,
                      "prune_threshold": optimizer.prune_threshold,
                      "cluster_threshold": optimizer.cluster_threshold},
        "quadrature": {"nodes": quadrature.nodes_per_axis,
                       "panels": quadrature.panels},
        "output": {"directory": output_dir},
    }
    return ScenarioConfig(
        name=name, model_kind=model_kind, model=model, copula=spec,
        criterion_kind=criterion_kind, use_conditions=uc, grid=grid,
        optimizer=optimizer, quadrature=quadrature, output_dir=output_dir,
        resolved=resolved,
    )


def validate_config(path: str):
    """Schema and cross-field checks only.  Returns (ok, message)."""
    try:
        config = load_config(path)
    except ConfigError as exc:
        return False, str(exc)
    return True, yaml.safe_dump(config.resolved, sort_keys=True, default_flow_style=False)


# ---------------------------------------------------------------------------
# dispatch


def _max_workers() -> int:
    cap = os.environ.get("ADT_DESIGNER_MAX_WORKERS", "")
    try:
        cap = int(cap) if cap else 0
    except ValueError as exc:
        raise ConfigError(f"ADT_DESIGNER_MAX_WORKERS: not an integer: {cap!r}") from exc
    hw = os.cpu_count() or 1
    return max(1, min(cap, hw)) if cap else min(4, hw)


def _tabulate(elemental_fn, points):
    """Evaluate elementals at all points (thread pool, deterministic order)."""
    workers = _max_workers()
    if workers == 1:
        return {pt: elemental_fn(pt) for pt in points}
    with ThreadPoolExecutor(max_workers=workers) as pool:
        mats = list(pool.map(elemental_fn, points))
    return dict(zip(points, mats))


def _binary_scenario(config: ScenarioConfig) -> BinaryScenario:
    return BinaryScenario(model=config.model, spec=config.copula,
                          thresholds=config.use_conditions.thresholds)


def _elemental_fn(config: ScenarioConfig):
    if config.model_kind == "independent":
        return lambda pt: fisher.info_independent(config.model, pt)
    if config.model_kind == "copula":
        return lambda pt: fisher.info_copula(
            config.model, config.copula, pt, config.quadrature)
    sc = _binary_scenario(config)
    return lambda pt: binary_outcome.info_binary(sc, pt)


def run_scenario(config: ScenarioConfig) -> ScenarioResult:
    """Optimize the scenario's design and certify it.

    The independent-model c-criterion is solved by its marginal decomposition:
    each margin is optimized on the marginal grid, the closed-form weights are
    computed as a cross-check, and the product design is assembled and
    certified against the joint criterion on the product grid.
    """
    elemental_fn = _elemental_fn(config)
    if config.criterion_kind == "c-quantile":
        return _run_decomposed_quantile(config, elemental_fn)

    if config.criterion_kind == "D":
        crit = CriterionSpec.d_optimality()
    else:
        sc = _binary_scenario(config)
        coeff = binary_outcome.p11_use_gradient(sc, config.use_conditions)
        crit = CriterionSpec.c_optimality(coeff)

    table = _tabulate(elemental_fn, sorted(config.grid.points_2d()))
    joint = design_opt.multiplicative_optimize(
        table, crit, config.grid, config.optimizer, ndim=2)
    return ScenarioResult(config=config, criterion=crit, joint=joint,
                          elemental=elemental_fn)


def _run_decomposed_quantile(config: ScenarioConfig, elemental_fn) -> ScenarioResult:
    model, uc = config.model, config.use_conditions
    t_alpha = failure_time.quantile(model, uc)
    coeff = failure_time.c_vector(model, uc)
    crit = CriterionSpec.c_optimality(coeff)

    marginals = []
    for comp, x_u in ((model.comp1, uc.x_u[0]), (model.comp2, uc.x_u[1])):
        m_elemental = lambda x, c=comp: fisher.marginal_info(c, model.plan, x)
        m_crit = CriterionSpec.c_optimality((1.0, x_u))
        marginals.append(design_opt.multiplicative_optimize(
            m_elemental, m_crit, config.grid, config.optimizer, ndim=1))
    elfving = tuple(
        design_opt.elfving_marginal_weight(comp, model.plan, x_u)
        if x_u < 0 else math.nan
        for comp, x_u in ((model.comp1, uc.x_u[0]), (model.comp2, uc.x_u[1]))
    )

    product = design_opt.product_design(marginals[0].design, marginals[1].design)
    gap = design_opt.equivalence_gap(elemental_fn, crit, product, config.grid, ndim=2)
    M = fisher.info_design(elemental_fn, product)
    joint = OptimizationResult(
        design=product,
        certified=gap <= config.optimizer.tolerance,
        gap=gap,
        criterion_value=failure_time.c_criterion(M, np.asarray(coeff)),
        iterations=marginals[0].iterations + marginals[1].iterations,
    )
    return ScenarioResult(config=config, criterion=crit, joint=joint,
                          elemental=elemental_fn, marginal1=marginals[0],
                          marginal2=marginals[1], elfving_weights=elfving,
                          t_alpha=t_alpha)


# ---------------------------------------------------------------------------
# reporting


def _fmt_point(pt) -> str:
    if np.ndim(pt) == 0:
        return f"{pt:.4g}"
    return "(" + ",".join(f"{c:.4g}" for c in pt) + ")"


def _design_lines(title: str, result: OptimizationResult) -> list[str]:
    lines = [f"{title}:"]
    lines.append("  point        weight")
    for pt, w in zip(result.design.support, result.design.weights):
        lines.append(f"  {_fmt_point(pt):<12} {w:.6f}")
    lines.append(f"  criterion value: {result.criterion_value:.8g}")
    lines.append(f"  equivalence gap: {result.gap:.3e}")
    lines.append(f"  certified: {'yes' if result.certified else 'NO'}")
    for src, dst, w in result.merged:
        lines.append(f"  merged {_fmt_point(src)} -> {_fmt_point(dst)} (weight {w:.2e})")
    return lines


def render_design_report(result: ScenarioResult) -> str:
    """Fixed-format plain-text design table (byte-reproducible)."""
    cfg = result.config
    lines = [
        f"scenario: {cfg.name}",
        f"model: {cfg.model_kind}",
        f"criterion: {cfg.criterion_kind}",
        f"grid increment: {cfg.grid.increment:g}",
    ]
    if cfg.model_kind != "independent":
        lines.append(f"copula: {cfg.copula.family}"
                     + ("" if cfg.copula.is_independence
                        else f" (parameter {cfg.copula.parameter:g})"))
    if result.t_alpha is not None:
        lines.append(f"t_alpha: {result.t_alpha:.6f} (alpha={cfg.use_conditions.alpha:g})")
    lines.append("")
    lines.extend(_design_lines("design", result.joint))
    if result.marginal1 is not None:
        for i, m in enumerate((result.marginal1, result.marginal2), start=1):
            lines.append("")
            lines.extend(_design_lines(f"marginal design {i}", m))
        w1, w2 = result.elfving_weights
        lines.append("")
        lines.append(f"closed-form marginal weights at stress 0: {w1:.6f}, {w2:.6f}")
    lines.append("")
    return "\n".join(lines)


def manifest_dict(result: ScenarioResult) -> dict:
    """Run manifest: resolved configuration plus component versions."""
    import numpy
    import scipy
    return {
        "adt_design_version": __about__.__version__,
        "numpy_version": numpy.__version__,
        "scipy_version": scipy.__version__,
        "certified": result.certified,
        "config": result.config.resolved,
    }


# ---------------------------------------------------------------------------
# sweeps


@dataclass
class SweepRow:
    """One row of a sweep table."""

    parameter: str
    value: float
    status: str                       # certified | uncertified | error
    criterion_value: float
    gap: float
    weights: dict                     # point -> weight (union support)
    efficiencies: dict                # name -> value
    message: str = ""


def _swept_config(config: ScenarioConfig, param: str, value: float) -> ScenarioConfig:
    cfg = replace(config)
    if param in ("x_u1", "x_u2", "alpha", "z1", "z2"):
        if config.use_conditions is None:
            raise ConfigError(f"sweep parameter {param} requires a c-criterion scenario")
        uc = config.use_conditions
        if param == "x_u1":
            uc = UseConditions((value, uc.x_u[1]), uc.thresholds, uc.alpha)
        elif param == "x_u2":
            uc = UseConditions((uc.x_u[0], value), uc.thresholds, uc.alpha)
        elif param == "alpha":
            uc = UseConditions(uc.x_u, uc.thresholds, value)
        elif param == "z1":
            uc = UseConditions(uc.x_u, (value, uc.thresholds[1]), uc.alpha)
        else:
            uc = UseConditions(uc.x_u, (uc.thresholds[0], value), uc.alpha)
        cfg.use_conditions = uc
    elif param == "kappa":
        if config.copula.family != "frank":
            raise ConfigError("sweep parameter kappa requires a Frank copula scenario")
        cfg.copula = CopulaSpec.frank(value)
    elif param == "rho":
        if config.copula.family != "gaussian":
            raise ConfigError("sweep parameter rho requires a Gaussian copula scenario")
        cfg.copula = CopulaSpec.gaussian(value)
    else:
        raise ConfigError(
            f"unknown sweep parameter {param!r}; choose from {SWEEPABLE_PARAMETERS}")
    return cfg


def _focus(result: ScenarioResult, param: str) -> OptimizationResult:
    """The design a sweep tracks: margin 1/2 for decomposed quantile sweeps
    over the matching use stress, the joint design otherwise."""
    if result.marginal1 is not None and param == "x_u1":
        return result.marginal1
    if result.marginal2 is not None and param == "x_u2":
        return result.marginal2
    return result.joint


def _reference_designs(result: ScenarioResult, param: str):
    """Reference designs whose efficiencies a sweep tracks."""
    focus = _focus(result, param)
    refs = {"opt_at_nominal": focus.design}
    if focus.design.dim == 1:
        refs["uniform_01"] = Design([0.0, 1.0], [0.5, 0.5])
        refs["uniform_0_05_1"] = Design([0.0, 0.5, 1.0], [1 / 3, 1 / 3, 1 / 3])
    else:
        refs["uniform_support"] = Design(
            focus.design.support,
            [1.0 / len(focus.design.support)] * len(focus.design.support))
        refs["uniform_vertices"] = Design(
            [(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0)], [0.25] * 4)
    return refs


def _efficiency_of(design: Design, result: ScenarioResult, param: str) -> float:
    """Efficiency of a fixed design under the (re-optimized) swept scenario."""
    focus = _focus(result, param)
    if focus.design.dim == 1:
        cfg = result.config
        idx = 0 if param == "x_u1" else 1
        comp = cfg.model.component(idx + 1)
        elem = lambda x: fisher.marginal_info(comp, cfg.model.plan, x)
        crit = CriterionSpec.c_optimality((1.0, cfg.use_conditions.x_u[idx]))
        return design_opt.efficiency(design, focus.design, crit, elem)
    return design_opt.efficiency(design, focus.design, result.criterion,
                                 result.elemental)


def sweep(config: ScenarioConfig, param: str, values) -> list[SweepRow]:
    """Re-optimize the scenario at each swept value; failures become rows.

    Efficiency columns track the nominal-value optimum and the standard
    reference designs, all evaluated under the swept scenario.  An unknown or
    incompatible parameter name fails upfront; a bad swept *value* (for
    example kappa = 0) only fails its own row.
    """
    if param not in SWEEPABLE_PARAMETERS:
        raise ConfigError(
            f"unknown sweep parameter {param!r}; choose from {SWEEPABLE_PARAMETERS}")
    if param in ("x_u1", "x_u2") and config.criterion_kind not in ("c-quantile", "c-P11"):
        raise ConfigError(f"sweep parameter {param} requires a c-criterion scenario")
    if param == "alpha" and config.criterion_kind != "c-quantile":
        raise ConfigError("sweep parameter alpha requires a c-quantile scenario")
    if param in ("z1", "z2") and config.use_conditions is None:
        raise ConfigError(f"sweep parameter {param} requires failure thresholds")
    if param == "kappa" and config.copula.family != "frank":
        raise ConfigError("sweep parameter kappa requires a Frank copula scenario")
    if param == "rho" and config.copula.family != "gaussian":
        raise ConfigError("sweep parameter rho requires a Gaussian copula scenario")
    values = [float(v) for v in values]
    nominal = run_scenario(config)
    refs = _reference_designs(nominal, param)
    rows = []
    for v in values:
        try:
            res = run_scenario(_swept_config(config, param, v))
            focus = _focus(res, param)
            effs = {name: _efficiency_of(d, res, param) for name, d in refs.items()}
            rows.append(SweepRow(
                parameter=param, value=v,
                status="certified" if focus.certified else "uncertified",
                criterion_value=focus.criterion_value, gap=focus.gap,
                weights={pt: w for pt, w in zip(focus.design.support,
                                                focus.design.weights)},
                efficiencies=effs,
            ))
        except AdtDesignError as exc:
            rows.append(SweepRow(parameter=param, value=v, status="error",
                                 criterion_value=math.nan, gap=math.nan,
                                 weights={}, efficiencies={}, message=str(exc)))
    return rows


def sweep_rows_to_csv(rows: list[SweepRow]) -> str:
    """Fixed, versioned CSV rendering of a sweep table (schema v1).

    Columns: parameter, value, status, criterion_value, gap, one ``w@point``
    column per union support point, one ``eff_*`` column per tracked
    efficiency, and a trailing message column for per-point failures.
    """
    points = sorted({pt for row in rows for pt in row.weights},
                    key=lambda p: (p,) if np.ndim(p) == 0 else tuple(p))
    eff_names = sorted({name for row in rows for name in row.efficiencies})
    header = (["parameter", "value", "status", "criterion_value", "gap"]
              + [f"w@{_fmt_point(p)}" for p in points]
              + [f"eff_{n}" for n in eff_names] + ["message"])
    out = [",".join(header)]
    for row in rows:
        cells = [row.parameter, f"{row.value:.10g}", row.status,
                 f"{row.criterion_value:.10g}", f"{row.gap:.6e}"]
        cells += [f"{row.weights.get(p, 0.0):.6f}" for p in points]
        cells += [f"{row.efficiencies.get(n, math.nan):.6f}" for n in eff_names]
        cells.append(row.message.replace(",", ";"))
        out.append(",".join(cells))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# bundled scenarios


def bundled_scenario_names() -> list[str]:
    files = resources.files("adt_design").joinpath("scenarios")
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".yaml"))


def bundled_scenario_path(name: str) -> str:
    """Filesystem path of a bundled scenario (name without extension)."""
    base = resources.files("adt_design").joinpath("scenarios")
    target = base.joinpath(f"{name}.yaml")
    if not target.is_file():
        raise ConfigError(
            f"no bundled scenario {name!r}; available: {bundled_scenario_names()}")
    return str(target)

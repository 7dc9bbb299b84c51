"""Regression models over per-target features.

Explains the compound-minus-name valence shift (delta) from target features:
univariate and multivariate ordinary least squares with the usual inference
(coefficient t-tests, R-squared, F-test), plus an elastic-net model

    (1/2n) * ||y - X b||^2 + lambda * (alpha * ||b||_1 + (1-alpha)/2 * ||b||^2)

fitted by cyclic coordinate descent, with alpha and lambda tuned by random
search under repeated k-fold cross-validation.

Factors are one-hot encoded against a reference category, the
lexicographically smallest observed level. Rows with a missing response or
missing predictor values are dropped listwise and reported.
"""

from __future__ import annotations

import csv
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import ConvergenceError, ParseError, RankDeficiencyError, ValidationError
from .stats import fisher_f_sf, student_t_sf

logger = logging.getLogger(__name__)

NUMERIC_FIELDS = frozenset({"delta", "name_valence", "pnc_valence",
                            "modifier_valence", "age"})
FACTOR_FIELDS = frozenset({"gender", "domain", "nationality", "birthplace",
                           "party", "frame"})

INTERCEPT = "(Intercept)"

DEFAULT_UNIVARIATE_PREDICTORS = (
    "name_valence", "pnc_valence", "modifier_valence", "age", "gender",
    "domain", "nationality", "birthplace", "party", "frame")

# multivariate models reported by default: blocks of person-level, compound-
# level and domain-level features, then full models leaving out the valence
# covariates that nearly determine the response
DEFAULT_MODEL_SPECS = (
    ("personal", "delta ~ age + gender"),
    ("personal_extended", "delta ~ age + gender + nationality + birthplace"),
    ("compound", "delta ~ modifier_valence + frame"),
    ("compound_extended", "delta ~ modifier_valence + frame + pnc_valence"),
    ("domain", "delta ~ domain + party"),
    ("all_except_name_valence",
     "delta ~ pnc_valence + modifier_valence + age + gender + domain"
     " + nationality + birthplace + party + frame"),
    ("all_except_pnc_valence",
     "delta ~ name_valence + modifier_valence + age + gender + domain"
     " + nationality + birthplace + party + frame"),
    ("all_except_both_valences",
     "delta ~ modifier_valence + age + gender + domain + nationality"
     " + birthplace + party + frame"),
)


def significance_stars(p: float | None) -> str:
    if p is None:
        return ""
    if p < 0.001:
        return "***"
    if p < 0.01:
        return "**"
    if p < 0.05:
        return "*"
    return ""


@dataclass(frozen=True)
class FeatureRow:
    """Per-target feature values; None marks a missing value."""

    target_id: str
    values: Mapping[str, float | str | None]


def parse_formula(formula: str) -> tuple[str, tuple[str, ...]]:
    """Split "response ~ term + term + ..." into (response, terms).

    The response must be a numeric field and each term a known field; a bare
    "1" stands for the always-present intercept and adds no term.
    """
    if formula.count("~") != 1:
        raise ValidationError(f"formula must contain exactly one '~': {formula!r}")
    left, right = formula.split("~")
    response = left.strip()
    if response not in NUMERIC_FIELDS:
        raise ValidationError(f"response {response!r} is not a numeric field")
    terms: list[str] = []
    for raw in right.split("+"):
        term = raw.strip()
        if not term or term == "1":
            continue
        if term not in NUMERIC_FIELDS and term not in FACTOR_FIELDS:
            raise ValidationError(f"unknown term {term!r} in formula {formula!r}")
        if term == response:
            raise ValidationError(f"response {response!r} cannot appear as a term")
        if term in terms:
            raise ValidationError(f"duplicate term {term!r} in formula {formula!r}")
        terms.append(term)
    return response, tuple(terms)


@dataclass(frozen=True)
class DesignMatrix:
    """Encoded regression problem.

    columns[0] is the intercept. reference_levels maps each factor term to
    its dropped reference category; dropped_factors lists terms removed for
    having a single observed level; excluded_ids lists rows removed by
    listwise deletion.
    """

    response: str
    columns: tuple[str, ...]
    x: np.ndarray
    y: np.ndarray
    row_ids: tuple[str, ...]
    reference_levels: Mapping[str, str]
    dropped_factors: tuple[str, ...]
    excluded_ids: tuple[str, ...]


def _as_float(value, field: str, row_id: str) -> float:
    try:
        out = float(value)
    except (TypeError, ValueError) as exc:
        raise ValidationError(
            f"row {row_id!r}: non-numeric value {value!r} for field {field!r}") from exc
    if not math.isfinite(out):
        raise ValidationError(f"row {row_id!r}: non-finite value for field {field!r}")
    return out


def encode_features(rows: Sequence[FeatureRow], formula: str) -> DesignMatrix:
    """Build the design matrix for a formula over per-target feature rows."""
    response, terms = parse_formula(formula)

    def missing(row: FeatureRow, fld: str) -> bool:
        v = row.values.get(fld)
        return v is None or v == ""

    kept: list[FeatureRow] = []
    excluded: list[str] = []
    for row in rows:
        if missing(row, response) or any(missing(row, t) for t in terms):
            excluded.append(row.target_id)
        else:
            kept.append(row)
    if excluded:
        logger.info("listwise deletion dropped %d row(s): %s",
                    len(excluded), ", ".join(excluded))
    if not kept:
        raise ValidationError(f"no complete rows left for formula {formula!r}")

    reference_levels: dict[str, str] = {}
    dropped_factors: list[str] = []
    columns: list[str] = [INTERCEPT]
    column_values: list[list[float]] = [[1.0] * len(kept)]

    for term in terms:
        if term in NUMERIC_FIELDS:
            columns.append(term)
            column_values.append(
                [_as_float(r.values[term], term, r.target_id) for r in kept])
            continue
        levels = sorted({str(r.values[term]) for r in kept})
        if len(levels) < 2:
            logger.warning("factor %r has a single observed level %r; dropped",
                           term, levels[0])
            dropped_factors.append(term)
            continue
        reference_levels[term] = levels[0]
        for level in levels[1:]:
            columns.append(f"{term}={level}")
            column_values.append(
                [1.0 if str(r.values[term]) == level else 0.0 for r in kept])

    x = np.array(column_values, dtype=float).T
    y = np.array([_as_float(r.values[response], response, r.target_id) for r in kept])
    return DesignMatrix(
        response=response, columns=tuple(columns), x=x, y=y,
        row_ids=tuple(r.target_id for r in kept),
        reference_levels=reference_levels,
        dropped_factors=tuple(dropped_factors),
        excluded_ids=tuple(excluded))


@dataclass(frozen=True)
class OlsFit:
    """Ordinary least squares fit with standard inference.

    p-values are None when residual degrees of freedom run out. For a model
    with only the intercept, r_squared is 0 and the F-test is undefined.
    """

    columns: tuple[str, ...]
    coefficients: np.ndarray
    standard_errors: np.ndarray
    t_values: np.ndarray
    p_values: tuple[float | None, ...]
    n: int
    df_model: int
    df_resid: int
    r_squared: float
    adj_r_squared: float
    residual_se: float
    f_statistic: float | None
    f_p_value: float | None
    residuals: np.ndarray
    fitted: np.ndarray


def ols_fit(x: np.ndarray, y: np.ndarray,
            columns: Sequence[str] | None = None) -> OlsFit:
    """Least-squares fit of y on x (x must already carry its intercept
    column if one is wanted), solved via QR decomposition.

    Columns that the QR factor shows to be linearly dependent raise
    RankDeficiencyError naming them.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.ndim != 2 or y.ndim != 1 or x.shape[0] != y.shape[0]:
        raise ValidationError(f"incompatible shapes x{x.shape} y{y.shape}")
    if not (np.isfinite(x).all() and np.isfinite(y).all()):
        raise ValidationError("design matrix and response must be finite")
    n, p = x.shape
    if columns is None:
        columns = tuple(f"x{j}" for j in range(p))
    else:
        columns = tuple(columns)
        if len(columns) != p:
            raise ValidationError(f"{p} columns in x but {len(columns)} names")
    if n < p:
        raise ValidationError(f"need at least {p} rows for {p} columns, got {n}")

    q, r = np.linalg.qr(x)
    diag = np.abs(np.diag(r))
    tol = max(n, p) * np.finfo(float).eps * (diag.max() if p else 0.0)
    bad = [columns[j] for j in range(p) if diag[j] <= tol]
    if bad:
        raise RankDeficiencyError(bad)

    beta = np.linalg.solve(r, q.T @ y)
    fitted = x @ beta
    resid = y - fitted
    rss = float(resid @ resid)
    df_resid = n - p
    has_intercept = bool(columns) and columns[0] == INTERCEPT
    df_model = p - 1 if has_intercept else p

    if df_resid > 0:
        sigma2 = rss / df_resid
        r_inv = np.linalg.solve(r, np.eye(p))
        cov = sigma2 * (r_inv @ r_inv.T)
        se = np.sqrt(np.maximum(np.diag(cov), 0.0))
        t_list = [
            b / s if s > 0 else (math.inf if b > 0 else (-math.inf if b < 0 else 0.0))
            for b, s in zip(beta, se)
        ]
        t_vals = np.array(t_list)
        # student_t_sf already carries both tails of the t distribution
        p_vals: tuple[float | None, ...] = tuple(
            student_t_sf(abs(t), df_resid) for t in t_list)
    else:
        sigma2 = float("nan")
        se = np.full(p, np.nan)
        t_vals = np.full(p, np.nan)
        p_vals = tuple(None for _ in range(p))

    y_bar = float(y.mean())
    tss = float(((y - y_bar) ** 2).sum()) if has_intercept else float(y @ y)
    r2 = 1.0 - rss / tss if tss > 0 else 0.0
    r2 = min(max(r2, 0.0), 1.0)

    if df_model >= 1 and df_resid > 0:
        adj_r2 = 1.0 - (1.0 - r2) * (n - 1) / df_resid
        if r2 < 1.0:
            f_stat = (r2 / df_model) / ((1.0 - r2) / df_resid)
        else:
            f_stat = float("inf")
        f_p = fisher_f_sf(f_stat, df_model, df_resid)
    else:
        adj_r2 = r2 if df_model == 0 else float("nan")
        f_stat = None
        f_p = None

    return OlsFit(
        columns=columns, coefficients=beta, standard_errors=se, t_values=t_vals,
        p_values=p_vals, n=n, df_model=df_model, df_resid=df_resid,
        r_squared=r2, adj_r_squared=adj_r2,
        residual_se=math.sqrt(sigma2) if df_resid > 0 else float("nan"),
        f_statistic=f_stat, f_p_value=f_p, residuals=resid, fitted=fitted)


def fit_design(design: DesignMatrix) -> OlsFit:
    return ols_fit(design.x, design.y, design.columns)


@dataclass(frozen=True)
class UnivariateResult:
    """One row of the single-predictor scan: numeric predictors yield one
    row (level is empty), factors one row per non-reference level sharing
    the model's fit statistics."""

    predictor: str
    level: str
    n: int
    intercept: float
    slope: float
    slope_p_value: float | None
    r_squared: float
    adj_r_squared: float
    model_p_value: float | None
    stars: str


def univariate_scan(rows: Sequence[FeatureRow],
                    predictors: Sequence[str] = DEFAULT_UNIVARIATE_PREDICTORS,
                    response: str = "delta",
                    ) -> tuple[list[UnivariateResult], list[str]]:
    """Fit response ~ predictor separately for each predictor. Predictors
    that cannot be fitted (all values missing, single-level factor, rank
    deficiency) are skipped with a note."""
    results: list[UnivariateResult] = []
    notes: list[str] = []
    for predictor in predictors:
        formula = f"{response} ~ {predictor}"
        try:
            design = encode_features(rows, formula)
            if len(design.columns) < 2:
                raise ValidationError(
                    f"predictor {predictor!r} contributes no column")
            fit = fit_design(design)
        except (ValidationError, RankDeficiencyError) as exc:
            notes.append(f"{predictor}: skipped ({exc})")
            continue
        stars = significance_stars(fit.f_p_value)
        for j, column in enumerate(design.columns[1:], start=1):
            level = column.split("=", 1)[1] if "=" in column else ""
            results.append(UnivariateResult(
                predictor=predictor, level=level, n=fit.n,
                intercept=float(fit.coefficients[0]),
                slope=float(fit.coefficients[j]),
                slope_p_value=fit.p_values[j],
                r_squared=fit.r_squared, adj_r_squared=fit.adj_r_squared,
                model_p_value=fit.f_p_value, stars=stars))
    return results, notes


@dataclass(frozen=True)
class MultivariateResult:
    model: str
    formula: str
    n: int
    r_squared: float
    adj_r_squared: float
    residual_se: float
    f_statistic: float | None
    f_p_value: float | None
    stars: str
    fit: OlsFit
    design: DesignMatrix


def multivariate_suite(rows: Sequence[FeatureRow],
                       specs: Sequence[tuple[str, str]] = DEFAULT_MODEL_SPECS,
                       ) -> tuple[list[MultivariateResult], list[str]]:
    """Fit a list of named model formulas; models that cannot be fitted on
    the available rows are skipped with a note."""
    results: list[MultivariateResult] = []
    notes: list[str] = []
    for name, formula in specs:
        try:
            design = encode_features(rows, formula)
            fit = fit_design(design)
        except (ValidationError, RankDeficiencyError) as exc:
            notes.append(f"{name}: skipped ({exc})")
            continue
        results.append(MultivariateResult(
            model=name, formula=formula, n=fit.n, r_squared=fit.r_squared,
            adj_r_squared=fit.adj_r_squared, residual_se=fit.residual_se,
            f_statistic=fit.f_statistic, f_p_value=fit.f_p_value,
            stars=significance_stars(fit.f_p_value), fit=fit, design=design))
    return results, notes


# ---------------------------------------------------------------------------
# elastic net

def standardize_columns(x: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Center each column and scale it to unit standard deviation.

    Constant columns are centered only (scale recorded as 0); downstream the
    coordinate update leaves their coefficient at zero. Returns
    (standardized x, means, stds).
    """
    x = np.asarray(x, dtype=float)
    means = x.mean(axis=0)
    stds = x.std(axis=0)
    scale = np.where(stds > 0, stds, 1.0)
    return (x - means) / scale, means, stds


def _soft_threshold(value: float, threshold: float) -> float:
    if value > threshold:
        return value - threshold
    if value < -threshold:
        return value + threshold
    return 0.0


def elastic_net_objective(x: np.ndarray, y: np.ndarray, beta: np.ndarray,
                          lam: float, alpha: float) -> float:
    n = x.shape[0]
    resid = y - x @ beta
    loss = float(resid @ resid) / (2 * n)
    penalty = lam * (alpha * float(np.abs(beta).sum())
                     + 0.5 * (1 - alpha) * float(beta @ beta))
    return loss + penalty


@dataclass(frozen=True)
class ElasticNetFit:
    """Elastic-net solution on the given predictor scale. The intercept is
    unpenalized and recovered from the column means."""

    columns: tuple[str, ...]
    coefficients: np.ndarray
    intercept: float
    lam: float
    alpha: float
    n_sweeps: int
    objective: float
    objective_trace: tuple[float, ...]

    def predict(self, x: np.ndarray) -> np.ndarray:
        return self.intercept + np.asarray(x, dtype=float) @ self.coefficients


def elastic_net_fit(x: np.ndarray, y: np.ndarray, lam: float, alpha: float, *,
                    columns: Sequence[str] | None = None,
                    max_sweeps: int = 100_000, tol: float = 1e-7) -> ElasticNetFit:
    """Cyclic coordinate descent on the elastic-net objective.

    x holds predictors only (no intercept column); predictors and response
    are centered internally, so the intercept comes out as
    mean(y) - mean(x) . beta. Each coordinate update is the closed-form
    soft-threshold step; the objective is checked to be non-increasing after
    every sweep, and failure to reach the tolerance within max_sweeps raises
    ConvergenceError carrying the objective trace.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.ndim != 2 or y.ndim != 1 or x.shape[0] != y.shape[0]:
        raise ValidationError(f"incompatible shapes x{x.shape} y{y.shape}")
    if not (np.isfinite(x).all() and np.isfinite(y).all()):
        raise ValidationError("predictors and response must be finite")
    if lam < 0:
        raise ValidationError("lambda must be >= 0")
    if not 0.0 <= alpha <= 1.0:
        raise ValidationError("alpha must lie in [0, 1]")
    n, p = x.shape
    if n < 1:
        raise ValidationError("need at least one row")
    columns = tuple(columns) if columns is not None else tuple(f"x{j}" for j in range(p))

    x_mean = x.mean(axis=0) if p else np.zeros(0)
    y_mean = float(y.mean())
    xc = x - x_mean
    yc = y - y_mean
    z = (xc * xc).sum(axis=0) / n  # per-coordinate curvature

    beta = np.zeros(p)
    resid = yc.copy()
    trace: list[float] = [elastic_net_objective(xc, yc, beta, lam, alpha)]
    thresh = lam * alpha
    ridge = lam * (1.0 - alpha)

    n_sweeps = 0
    for n_sweeps in range(1, max_sweeps + 1):
        max_step = 0.0
        for j in range(p):
            if z[j] == 0.0:
                if beta[j] != 0.0:
                    resid += xc[:, j] * beta[j]
                    beta[j] = 0.0
                continue
            old = beta[j]
            rho = float(xc[:, j] @ resid) / n + z[j] * old
            new = _soft_threshold(rho, thresh) / (z[j] + ridge)
            if new != old:
                resid += xc[:, j] * (old - new)
                beta[j] = new
                max_step = max(max_step, abs(new - old))
        objective = elastic_net_objective(xc, yc, beta, lam, alpha)
        prev = trace[-1]
        trace.append(objective)
        if objective > prev + 1e-12 * max(1.0, abs(prev)):
            raise ConvergenceError(
                f"objective increased from {prev!r} to {objective!r} in sweep {n_sweeps}",
                trace=trace)
        if max_step < tol:
            break
    else:
        raise ConvergenceError(
            f"no convergence after {max_sweeps} sweeps (last step {max_step:.3g})",
            trace=trace)

    intercept = y_mean - float(x_mean @ beta)
    return ElasticNetFit(columns=columns, coefficients=beta, intercept=intercept,
                         lam=lam, alpha=alpha, n_sweeps=n_sweeps,
                         objective=trace[-1], objective_trace=tuple(trace))


def lambda_max(x: np.ndarray, y: np.ndarray, alpha: float,
               alpha_floor: float = 1e-3) -> float:
    """Smallest penalty that zeroes every coefficient at the given alpha
    (the alpha floor keeps the bound finite for the pure-ridge end)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n = x.shape[0]
    xc = x - x.mean(axis=0)
    yc = y - y.mean()
    if x.shape[1] == 0:
        raise ValidationError("need at least one predictor")
    top = float(np.abs(xc.T @ yc).max())
    return top / (n * max(alpha, alpha_floor))


@dataclass(frozen=True)
class CvCandidate:
    index: int
    alpha: float
    lam: float
    mean_error: float


@dataclass(frozen=True)
class CvSearchResult:
    """Random-search outcome: the tried candidates in draw order, the winner
    (lowest mean validation error, earliest draw on ties), and the winning
    model refitted on all rows. Predictors are standardized once up front;
    coefficients are on that standardized scale."""

    candidates: tuple[CvCandidate, ...]
    best: CvCandidate
    fit: ElasticNetFit
    scoring: str
    n_repeats: int
    n_folds: int
    seed: int
    column_means: np.ndarray
    column_stds: np.ndarray
    train_r_squared: float


def _fold_error(x: np.ndarray, y: np.ndarray, train_idx: np.ndarray,
                val_idx: np.ndarray, lam: float, alpha: float, scoring: str) -> float:
    fit = elastic_net_fit(x[train_idx], y[train_idx], lam, alpha)
    pred = fit.predict(x[val_idx])
    err = y[val_idx] - pred
    if scoring == "mae":
        return float(np.abs(err).mean())
    return float((err * err).mean())


def cv_random_search(x: np.ndarray, y: np.ndarray, *,
                     columns: Sequence[str] | None = None,
                     n_candidates: int = 25, n_repeats: int = 5, n_folds: int = 5,
                     seed: int = 0, scoring: str = "mse",
                     standardize: bool = True,
                     workers: int = 1) -> CvSearchResult:
    """Tune (alpha, lambda) by random search under repeated k-fold CV.

    Draw order is fixed by the seed: first the candidate list (alpha uniform
    on [0, 1], lambda log-uniform on [1e-4 * lambda_max(alpha),
    lambda_max(alpha)]), then one row permutation per repeat; each
    permutation is split into n_folds nearly equal folds. Errors are
    averaged over all repeats and folds; candidates are scored in draw order
    and evaluated independently, so several workers change nothing in the
    result.
    """
    if scoring not in ("mse", "mae"):
        raise ValidationError(f"unknown scoring {scoring!r}; expected mse or mae")
    if n_candidates < 1 or n_repeats < 1 or n_folds < 2:
        raise ValidationError("need n_candidates >= 1, n_repeats >= 1, n_folds >= 2")
    if workers < 1:
        raise ValidationError("workers must be >= 1")
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n = x.shape[0]
    if n < n_folds:
        raise ValidationError(f"{n_folds}-fold CV needs at least {n_folds} rows, got {n}")
    columns = tuple(columns) if columns is not None else tuple(
        f"x{j}" for j in range(x.shape[1]))

    if standardize:
        x_std, means, stds = standardize_columns(x)
    else:
        x_std = x
        means = np.zeros(x.shape[1])
        stds = np.ones(x.shape[1])

    rng = np.random.default_rng(seed)
    draws: list[tuple[float, float]] = []
    for _ in range(n_candidates):
        alpha = float(rng.uniform(0.0, 1.0))
        lam_hi = lambda_max(x_std, y, alpha)
        if lam_hi <= 0:
            raise ValidationError("predictors carry no signal; lambda range is empty")
        lam = float(math.exp(rng.uniform(math.log(lam_hi * 1e-4), math.log(lam_hi))))
        draws.append((alpha, lam))
    permutations = [rng.permutation(n) for _ in range(n_repeats)]

    folds: list[tuple[np.ndarray, np.ndarray]] = []
    for perm in permutations:
        parts = np.array_split(perm, n_folds)
        for k in range(n_folds):
            val_idx = parts[k]
            train_idx = np.concatenate([parts[i] for i in range(n_folds) if i != k])
            folds.append((train_idx, val_idx))

    def evaluate(draw: tuple[float, float]) -> float:
        alpha, lam = draw
        errors = [_fold_error(x_std, y, tr, va, lam, alpha, scoring)
                  for tr, va in folds]
        return float(np.mean(errors))

    if workers == 1:
        mean_errors = [evaluate(d) for d in draws]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            mean_errors = list(pool.map(evaluate, draws))

    candidates = tuple(
        CvCandidate(index=i, alpha=a, lam=l, mean_error=e)
        for i, ((a, l), e) in enumerate(zip(draws, mean_errors)))
    best = min(candidates, key=lambda c: (c.mean_error, c.index))
    fit = elastic_net_fit(x_std, y, best.lam, best.alpha, columns=columns)

    resid = y - fit.predict(x_std)
    tss = float(((y - y.mean()) ** 2).sum())
    train_r2 = 1.0 - float(resid @ resid) / tss if tss > 0 else 0.0

    return CvSearchResult(candidates=candidates, best=best, fit=fit,
                          scoring=scoring, n_repeats=n_repeats, n_folds=n_folds,
                          seed=seed, column_means=means, column_stds=stds,
                          train_r_squared=train_r2)


# ---------------------------------------------------------------------------
# feature assembly

METADATA_FIELDS = ("target_id", "age", "gender", "nationality", "birthplace",
                   "party", "frame")


def read_metadata_csv(path: str) -> dict[str, dict[str, float | str | None]]:
    """Load per-target metadata. Empty cells become None; age is numeric."""
    out: dict[str, dict[str, float | str | None]] = {}
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(line for line in fh if not line.startswith("#"))
        if reader.fieldnames is None:
            raise ParseError("empty metadata file", path=path)
        missing = [c for c in METADATA_FIELDS if c not in reader.fieldnames]
        if missing:
            raise ParseError(f"metadata file missing columns: {', '.join(missing)}",
                             path=path)
        for line_no, row in enumerate(reader, start=2):
            target_id = (row["target_id"] or "").strip()
            if not target_id:
                raise ParseError("empty target_id", path=path, line=line_no)
            if target_id in out:
                raise ParseError(f"duplicate target_id {target_id!r}",
                                 path=path, line=line_no)
            fields: dict[str, float | str | None] = {}
            for key in METADATA_FIELDS[1:]:
                raw = (row.get(key) or "").strip()
                if not raw:
                    fields[key] = None
                elif key == "age":
                    try:
                        fields[key] = float(raw)
                    except ValueError as exc:
                        raise ParseError(f"non-numeric age {raw!r}",
                                         path=path, line=line_no) from exc
                else:
                    fields[key] = raw
            out[target_id] = fields
    return out


def assemble_rows(deltas, metadata: Mapping[str, Mapping[str, float | str | None]],
                  targets=None) -> list[FeatureRow]:
    """Join lexicon-based delta records with per-target metadata into feature
    rows. The domain comes from the target list; metadata supplies the
    person-level fields. Targets without metadata get None there and fall to
    listwise deletion when such a field is used."""
    domain_by_id = {t.target_id: t.domain for t in targets} if targets else {}
    rows: list[FeatureRow] = []
    for d in deltas:
        meta = metadata.get(d.target_id, {})
        values: dict[str, float | str | None] = {
            "delta": d.delta,
            "name_valence": d.name_valence,
            "pnc_valence": d.pnc_valence,
            "modifier_valence": d.modifier_valence,
            "domain": domain_by_id.get(d.target_id),
        }
        for key in METADATA_FIELDS[1:]:
            values[key] = meta.get(key)
        rows.append(FeatureRow(target_id=d.target_id, values=values))
    return rows

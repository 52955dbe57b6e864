"""Comparison and stepwise reports: structured text tables plus a
machine-readable JSON document with a versioned schema."""

import json
from dataclasses import dataclass

from .errors import SchemaError
from .regression import StepwiseReport, compare_models, _collect_conditions
from .metrics import ModelKind, predictors_for

REPORT_SCHEMA = "fitts3d.report/1"
STEPWISE_SCHEMA = "fitts3d.stepwise/1"

TABLE_FORMAT = "table"
JSON_FORMAT = "json-like"
FORMATS = (TABLE_FORMAT, JSON_FORMAT)


def format_equation(coefficients: dict, names) -> str:
    """Render fitted coefficients as a line equation with 4 decimals,
    e.g. "MT = 0.4000 + 0.3000*id"."""
    parts = [f"MT = {coefficients['intercept']:.4f}"]
    for name in names:
        b = coefficients[name]
        sign = "-" if b < 0 else "+"
        parts.append(f"{sign} {abs(b):.4f}*{name}")
    return " ".join(parts)


@dataclass(frozen=True)
class ModelRow:
    """One model's line in a comparison report."""

    model: str
    r2: float | None = None
    n: int | None = None
    coefficients: dict | None = None
    equation: str | None = None
    dropped: tuple[str, ...] = ()
    error: str | None = None
    point_names: tuple[str, ...] | None = None
    points: tuple[tuple[float, ...], ...] | None = None


@dataclass(frozen=True)
class ComparisonReport:
    schema: str
    n_trials: int
    aggregate: bool
    rows: tuple[ModelRow, ...]


def build_comparison_report(trials, kinds, aggregate: bool = True,
                            include_points: bool = True) -> ComparisonReport:
    """Fit and rank the requested models; optionally attach the
    per-condition (predictors, mean MT) points behind each fit for
    external plotting."""
    trials = list(trials)
    rows = []
    for cmp_row in compare_models(trials, kinds, aggregate=aggregate):
        if cmp_row.fit is None:
            rows.append(ModelRow(model=cmp_row.kind.value, error=cmp_row.error))
            continue
        fit = cmp_row.fit
        point_names = None
        points = None
        if include_points:
            tasks, y = _collect_conditions(trials, aggregate)
            point_names = fit.predictor_names + ("mt",)
            pts = []
            for task, mt in zip(tasks, y):
                vec = predictors_for(cmp_row.kind, task).as_dict()
                pts.append(tuple(vec[n] for n in fit.predictor_names) + (mt,))
            points = tuple(pts)
        rows.append(ModelRow(
            model=cmp_row.kind.value, r2=fit.r2, n=fit.n,
            coefficients=dict(fit.coefficients),
            equation=format_equation(fit.coefficients, fit.predictor_names),
            dropped=fit.dropped, error=None,
            point_names=point_names, points=points))
    return ComparisonReport(schema=REPORT_SCHEMA, n_trials=len(trials),
                            aggregate=aggregate, rows=tuple(rows))


def _pad(text, width):
    return str(text).ljust(width)


def render_comparison_table(report: ComparisonReport) -> str:
    """Fixed-width text table, one row per model, ranked as fitted."""
    headers = ("model", "r2", "n", "fit")
    body = []
    for row in report.rows:
        if row.error is not None:
            body.append((row.model, "-", "-", row.error))
        else:
            fit = row.equation
            if row.dropped:
                fit += f"  [constant dropped: {', '.join(row.dropped)}]"
            body.append((row.model, f"{row.r2:.4f}", str(row.n), fit))
    widths = [max(len(headers[i]), *(len(r[i]) for r in body)) if body
              else len(headers[i]) for i in range(4)]
    lines = ["  ".join(_pad(h, w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for r in body:
        lines.append("  ".join(_pad(c, w) for c, w in zip(r, widths)).rstrip())
    lines.append("")
    lines.append(f"observations: {report.n_trials} trials, "
                 f"aggregate={'true' if report.aggregate else 'false'}")
    return "\n".join(lines) + "\n"


def comparison_document(report: ComparisonReport) -> dict:
    return {
        "schema": report.schema,
        "n_trials": report.n_trials,
        "aggregate": report.aggregate,
        "models": [
            {
                "model": row.model,
                "r2": row.r2,
                "n": row.n,
                "coefficients": row.coefficients,
                "equation": row.equation,
                "dropped": list(row.dropped),
                "error": row.error,
                "point_names": list(row.point_names) if row.point_names else None,
                "points": [list(p) for p in row.points] if row.points else None,
            }
            for row in report.rows
        ],
    }


def render_comparison(report: ComparisonReport, fmt: str) -> str:
    if fmt == TABLE_FORMAT:
        return render_comparison_table(report)
    if fmt == JSON_FORMAT:
        return json.dumps(comparison_document(report), indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def render_stepwise_table(sw: StepwiseReport) -> str:
    headers = ("step", "action", "variable", "F", "p", "r2")
    body = []
    for i, step in enumerate(sw.steps, start=1):
        body.append((str(i), step.action, step.name,
                     f"{step.f_stat:.4f}", f"{step.p_value:.3g}",
                     f"{step.r2:.4f}"))
    widths = [max(len(headers[i]), *(len(r[i]) for r in body)) if body
              else len(headers[i]) for i in range(6)]
    lines = ["  ".join(_pad(h, w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for r in body:
        lines.append("  ".join(_pad(c, w) for c, w in zip(r, widths)).rstrip())
    lines.append("")
    lines.append("selected: " + (", ".join(sw.selected) if sw.selected else "(none)"))
    if sw.contributions:
        contrib = ", ".join(f"{name} {sw.contributions[name]:.1f}%"
                            for name in sw.selected)
        lines.append(f"variance explained at entry: {contrib}")
    lines.append(f"final r2: {sw.r2:.4f}")
    return "\n".join(lines) + "\n"


def stepwise_document(sw: StepwiseReport) -> dict:
    return {
        "schema": STEPWISE_SCHEMA,
        "steps": [
            {"action": s.action, "variable": s.name, "f_stat": s.f_stat,
             "p_value": s.p_value, "r2": s.r2}
            for s in sw.steps
        ],
        "selected": list(sw.selected),
        "contributions_percent": dict(sw.contributions),
        "r2": sw.r2,
    }


def render_stepwise(sw: StepwiseReport, fmt: str) -> str:
    if fmt == TABLE_FORMAT:
        return render_stepwise_table(sw)
    if fmt == JSON_FORMAT:
        return json.dumps(stepwise_document(sw), indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def render_document(doc: dict, fmt: str) -> str:
    """Re-render a previously saved JSON report document.

    Dispatches on the document's schema tag; raises SchemaError for
    unknown documents.
    """
    if not isinstance(doc, dict):
        raise SchemaError("report document must be a JSON object")
    schema = doc.get("schema")
    if schema == REPORT_SCHEMA:
        rows = []
        for m in doc.get("models", []):
            rows.append(ModelRow(
                model=str(m.get("model")),
                r2=m.get("r2"), n=m.get("n"),
                coefficients=m.get("coefficients"),
                equation=m.get("equation"),
                dropped=tuple(m.get("dropped") or ()),
                error=m.get("error"),
                point_names=tuple(m["point_names"]) if m.get("point_names") else None,
                points=tuple(tuple(p) for p in m["points"]) if m.get("points") else None))
        report = ComparisonReport(schema=schema,
                                  n_trials=int(doc.get("n_trials", 0)),
                                  aggregate=bool(doc.get("aggregate", True)),
                                  rows=tuple(rows))
        if fmt == JSON_FORMAT:
            return json.dumps(comparison_document(report), indent=2) + "\n"
        return render_comparison_table(report)
    if schema == STEPWISE_SCHEMA:
        if fmt == JSON_FORMAT:
            return json.dumps(doc, indent=2) + "\n"
        headers = ("step", "action", "variable", "F", "p", "r2")
        body = []
        for i, s in enumerate(doc.get("steps", []), start=1):
            body.append((str(i), str(s.get("action")), str(s.get("variable")),
                         f"{s.get('f_stat', 0.0):.4f}",
                         f"{s.get('p_value', 1.0):.3g}",
                         f"{s.get('r2', 0.0):.4f}"))
        widths = [max(len(headers[i]), *(len(r[i]) for r in body)) if body
                  else len(headers[i]) for i in range(6)]
        lines = ["  ".join(_pad(h, w) for h, w in zip(headers, widths)).rstrip()]
        lines.append("  ".join("-" * w for w in widths))
        for r in body:
            lines.append("  ".join(_pad(c, w) for c, w in zip(r, widths)).rstrip())
        selected = doc.get("selected") or []
        lines.append("")
        lines.append("selected: " + (", ".join(selected) if selected else "(none)"))
        contrib = doc.get("contributions_percent") or {}
        if contrib:
            lines.append("variance explained at entry: "
                         + ", ".join(f"{k} {v:.1f}%" for k, v in contrib.items()))
        if "r2" in doc:
            lines.append(f"final r2: {doc['r2']:.4f}")
        return "\n".join(lines) + "\n"
    raise SchemaError(f"unknown report schema: {schema!r}")

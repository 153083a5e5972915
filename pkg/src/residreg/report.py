"""Result payloads and their text/JSON rendering.

Every run first builds a plain-dict payload holding full-precision numbers.
The JSON output serializes it as is; the text tables are rendered from the
same payload at four decimals, so the two formats cannot disagree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .collinearity import VifReport
from .fwl import FwlResult
from .linreg import OlsFit, SignificanceLevel
from .residualize import ResidualizedModel

RESIDUAL_NOTE = (
    "{col} is the part of {target} not explained by {preds}; "
    "its coefficient measures that isolated part."
)


def estimates_block(fit: OlsFit) -> dict:
    return {
        name: {
            "estimate": float(fit.coefficients[i]),
            "stderr": float(fit.standard_errors[i]),
            "t": float(fit.t_stats[i]),
            "p": float(fit.p_values[i]),
        }
        for i, name in enumerate(fit.coefficient_names)
    }


def vif_block(report: VifReport) -> dict:
    return {
        e.column: {"r2_aux": e.r2_aux, "vif": e.vif, "above_10": e.above_10, "above_4": e.above_4}
        for e in report.entries
    }


def correlations_block(pairs) -> list:
    return [{"x": a, "y": b, "r": r} for a, b, r in pairs]


def residualized_block(model: ResidualizedModel) -> dict:
    aux = model.auxiliary
    return {
        "target": aux.target_column,
        "column": model.residualized_column,
        "auxiliary": {
            "predictors": list(aux.predictor_columns),
            "alpha": {n: float(a) for n, a in zip(aux.fit.coefficient_names, aux.alpha_hat)},
            "r2": aux.r2_aux,
        },
        "estimates": estimates_block(model.fit),
        "r2": model.fit.r_squared,
        "note": RESIDUAL_NOTE.format(
            col=model.residualized_column,
            target=aux.target_column,
            preds=", ".join(aux.predictor_columns),
        ),
    }


def fwl_block(res: FwlResult) -> dict:
    return {
        "target": res.target_column,
        "controls": list(res.control_columns),
        "gamma_intercept": res.gamma_intercept,
        "gamma": res.gamma_hat,
        "se_gamma": res.gamma_se,
        "dof_gamma": res.gamma_fit.dof,
        "direct": res.direct_coefficient,
        "se_direct": res.direct_se,
        "dof_direct": res.direct_fit.dof,
    }


@dataclass
class Cell:
    estimate: float
    stderr: float
    stars: SignificanceLevel


@dataclass
class ReportTable:
    """Estimates laid out one dataset per column, standard errors beneath."""

    title: str
    column_headers: list[str]
    rows: list[tuple[str, list[Cell | None]]]
    r2_row: list[float]

    @classmethod
    def from_estimates(cls, title, blocks: dict[str, dict], r2: dict[str, float]):
        headers = list(blocks)
        labels = []
        for est in blocks.values():
            for name in est:
                if name not in labels:
                    labels.append(name)
        rows = []
        for name in labels:
            cells = []
            for h in headers:
                e = blocks[h].get(name)
                cells.append(None if e is None else Cell(
                    e["estimate"], e["stderr"], SignificanceLevel.from_p_value(e["p"])
                ))
            rows.append((name, cells))
        return cls(title, headers, rows, [r2[h] for h in headers])

    def render(self) -> str:
        body = [[""] + self.column_headers]
        for label, cells in self.rows:
            top, bottom = [label], [""]
            for c in cells:
                if c is None:
                    top.append("")
                    bottom.append("")
                else:
                    top.append(f"{c.estimate:.4f}{c.stars.stars}")
                    bottom.append(f"({c.stderr:.4f})")
            body += [top, bottom]
        r2 = ["R^2"] + [f"{v:.4f}" for v in self.r2_row]
        widths = [max(len(r[i]) for r in body + [r2]) for i in range(len(body[0]))]

        def line(r):
            return " | ".join(s.ljust(w) for s, w in zip(r, widths)).rstrip()

        rule = "-+-".join("-" * w for w in widths)
        out = [self.title, line(body[0]), rule]
        out += [line(r) for r in body[1:]]
        out += [rule, line(r2), rule,
                "*** p < 0.01, ** p < 0.05, * p < 0.10 (two-sided t test)"]
        return "\n".join(out)


def render_diagnostics(label: str, diag: dict) -> str:
    out = [f"Collinearity diagnostics [{label}]" if label else "Collinearity diagnostics"]
    for c in diag.get("correlations", []):
        out.append(f"  corr({c['x']}, {c['y']}) = {c['r']:.4f}")
    for name, v in diag.get("vif", {}).items():
        flag = "  [VIF > 10]" if v["above_10"] else "  [VIF > 4]" if v["above_4"] else ""
        out.append(f"  VIF({name}) = {v['vif']:.2f}  (aux R^2 = {v['r2_aux']:.4f}){flag}")
    return "\n".join(out)


def render_auxiliary(label: str, block: dict) -> str:
    aux = block["auxiliary"]
    terms = " ".join(
        f"{'+' if a >= 0 else '-'} {abs(a):.4f}*{n}" if n != "intercept" else f"{a:.4f}"
        for n, a in aux["alpha"].items()
    )
    head = f"Auxiliary regression [{label}]" if label else "Auxiliary regression"
    return "\n".join([
        head,
        f"  {block['target']} = {terms} + {block['column']}   (R^2 = {aux['r2']:.4f})",
        f"  {block['note']}",
    ])


def render_fwl(label: str, block: dict) -> str:
    head = f"Frisch-Waugh-Lovell [{label}]" if label else "Frisch-Waugh-Lovell"
    return "\n".join([
        head,
        f"  target: {block['target']}; controls: {', '.join(block['controls']) or '(none)'}",
        f"  gamma intercept = {block['gamma_intercept']:.4g}",
        f"  gamma  = {block['gamma']:.4f}  se = {block['se_gamma']:.4f}  (dof {block['dof_gamma']})",
        f"  direct = {block['direct']:.4f}  se = {block['se_direct']:.4f}  (dof {block['dof_direct']})",
    ])


def render_text(payload: dict) -> str:
    """Text report for a single- or multi-dataset payload."""
    mode = payload["mode"]
    datasets = payload["datasets"] if "datasets" in payload else {"": payload}
    parts = []

    if mode in ("vif", "ns-demo"):
        for label, d in datasets.items():
            parts.append(render_diagnostics(label, d["diagnostics"]))

    if mode in ("fit", "ns-demo"):
        parts.append(ReportTable.from_estimates(
            "OLS estimation",
            {k or "estimate": d["estimates"] for k, d in datasets.items()},
            {k or "estimate": d["r2"] for k, d in datasets.items()},
        ).render())

    if mode in ("residualize", "ns-demo"):
        parts.append(ReportTable.from_estimates(
            "Residualized model",
            {k or "estimate": d["residualized"]["estimates"] for k, d in datasets.items()},
            {k or "estimate": d["residualized"]["r2"] for k, d in datasets.items()},
        ).render())
        for label, d in datasets.items():
            parts.append(render_auxiliary(label, d["residualized"]))

    if mode == "fwl":
        for label, d in datasets.items():
            parts.append(render_fwl(label, d["fwl"]))

    return "\n\n".join(parts)


def render_json(payload: dict) -> str:
    # json emits repr() floats, which round-trip exactly
    return json.dumps(payload, indent=2, allow_nan=True)

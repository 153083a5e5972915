"""Command-line entry point.

    residreg --mode fit --input data.csv
    residreg --mode residualize --input data.csv --target x2
    residreg --mode ns-demo --lambda 0.01 --format json

Input CSVs carry a header row with the response in the first column and
regressors after it. ``--input`` may also name a directory, in which case
every ``*.csv`` inside is run and reported side by side.

For ``ns-demo`` the optional input CSV instead holds maturities (months) in
its first column and one column of yields per dataset.

Exit codes: 0 success, 2 usage error, 3 data or parse error, 4 numerical
error.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import report
from .collinearity import correlation_matrix, vif_report
from .exceptions import (
    DataError,
    DuplicateHeader,
    EmptyData,
    ParseError,
    ResidRegError,
)
from .fwl import fwl_coefficient
from .linreg import RegressionData, fit_ols
from .nelson_siegel import MEDIUM, TREASURY_MATURITIES, ns_design, synthetic_yields
from .residualize import residualize

MODES = ("fit", "residualize", "fwl", "vif", "ns-demo")
DEFAULT_BETA = (8.0, -1.5, 15.0)


class UsageError(ResidRegError):
    exit_code = 2


@dataclass
class RunConfig:
    mode: str
    input_path: Path | None = None
    lam: float = 0.01
    target_column: str | None = None
    output_format: str = "table"
    seed: int | None = None
    beta: tuple[float, float, float] = DEFAULT_BETA
    noise_sd: float = 0.1

    def validate(self):
        if self.mode not in MODES:
            raise UsageError(f"unknown mode {self.mode!r}")
        if self.output_format not in ("table", "json"):
            raise UsageError(f"unknown format {self.output_format!r}")
        if self.mode in ("residualize", "fwl") and not self.target_column:
            raise UsageError(f"--mode {self.mode} requires --target")
        if self.mode != "ns-demo" and self.input_path is None:
            raise UsageError(f"--mode {self.mode} requires --input")
        if not (self.lam > 0 and math.isfinite(self.lam)):
            raise UsageError("--lambda must be positive")
        if self.noise_sd < 0:
            raise UsageError("--noise-sd must be non-negative")
        if self.seed is not None and self.seed < 0:
            raise UsageError("--seed must be non-negative")


def _read_table(path):
    """Header plus float rows of a CSV file, with 1-based error locations."""
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"no such file: {path}")
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows or not any(c.strip() for c in rows[0]):
        raise EmptyData(f"{path}: no header row")
    header = [h.strip() for h in rows[0]]
    if any(not h for h in header):
        raise ParseError(f"{path}: empty column name in header", row=1)
    seen = set()
    for j, h in enumerate(header, start=1):
        if h in seen:
            raise DuplicateHeader(f"{path}: duplicate column {h!r} (col {j})")
        seen.add(h)

    values = []
    for i, raw in enumerate(rows[1:], start=2):
        if not raw or all(not c.strip() for c in raw):
            continue
        if len(raw) != len(header):
            raise ParseError(
                f"{path}: expected {len(header)} cells, found {len(raw)}", row=i
            )
        parsed = []
        for j, cell in enumerate(raw, start=1):
            try:
                v = float(cell.strip())
            except ValueError:
                raise ParseError(f"{path}: cannot parse {cell!r} as a number", row=i, col=j) from None
            if not math.isfinite(v):
                raise ParseError(f"{path}: non-finite value {cell!r}", row=i, col=j)
            parsed.append(v)
        values.append(parsed)
    if not values:
        raise EmptyData(f"{path}: header but no data rows")
    return header, np.array(values)


def ingest_csv(path) -> RegressionData:
    header, values = _read_table(path)
    if len(header) < 1:
        raise EmptyData(f"{path}: no columns")
    cols = {name: values[:, j] for j, name in enumerate(header[1:], start=1)}
    return RegressionData(values[:, 0], cols, include_intercept=True)


def emit_csv(data: RegressionData, path, response_name: str = "y") -> None:
    names = [response_name] + data.column_names
    table = np.column_stack([data.response] + list(data.columns.values()))
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(names)
        for row in table:
            w.writerow([repr(float(v)) for v in row])


def _inputs(path):
    """Yield ``(label, file)`` pairs; label is empty for a single file."""
    path = Path(path)
    if path.is_dir():
        files = sorted(path.glob("*.csv"))
        if not files:
            raise EmptyData(f"{path}: directory holds no .csv files")
        return [(f.stem, f) for f in files]
    return [("", path)]


def _diagnostics(data):
    if len(data.columns) < 2:
        return {"vif": {}, "correlations": []}
    return {
        "vif": report.vif_block(vif_report(data)),
        "correlations": report.correlations_block(correlation_matrix(data)),
    }


def analyze(data: RegressionData, mode: str, target: str | None = None) -> dict:
    """Payload for one dataset under ``mode`` (without the ``mode`` key)."""
    fit = fit_ols(data)
    out = {
        "estimates": report.estimates_block(fit),
        "r2": fit.r_squared,
        "sigma2": fit.sigma2_hat,
        "dof": fit.dof,
        "diagnostics": _diagnostics(data),
    }
    if mode in ("residualize", "ns-demo"):
        out["residualized"] = report.residualized_block(residualize(data, target))
    if mode == "fwl":
        out["fwl"] = report.fwl_block(fwl_coefficient(data, target))
    return out


def _ns_datasets(config):
    if config.input_path is None:
        seed = 0 if config.seed is None else config.seed
        y = synthetic_yields(TREASURY_MATURITIES, config.lam, config.beta, config.noise_sd, seed)
        return [("", ns_design(TREASURY_MATURITIES, config.lam, y))]
    header, values = _read_table(config.input_path)
    if len(header) < 2:
        raise DataError(f"{config.input_path}: need a maturity column and at least one yield column")
    tau = values[:, 0]
    labels = header[1:] if len(header) > 2 else [""]
    return [(lab, ns_design(tau, config.lam, values[:, j]))
            for j, lab in enumerate(labels, start=1)]


def run(config: RunConfig, stream=None) -> dict:
    """Execute ``config``, write the report to ``stream`` and return the payload."""
    config.validate()
    if config.mode == "ns-demo":
        datasets = _ns_datasets(config)
        target = config.target_column or MEDIUM
    else:
        datasets = [(lab, ingest_csv(f)) for lab, f in _inputs(config.input_path)]
        target = config.target_column

    results = {lab: analyze(d, config.mode, target) for lab, d in datasets}
    if list(results) == [""]:
        payload = {"mode": config.mode, **results[""]}
    else:
        payload = {"mode": config.mode, "datasets": results}
    if config.mode == "ns-demo":
        payload["lambda"] = config.lam

    if stream is not None:
        text = report.render_json(payload) if config.output_format == "json" else report.render_text(payload)
        stream.write(text + "\n")
    return payload


def _beta(text):
    try:
        parts = tuple(float(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected three comma-separated reals") from None
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected three comma-separated reals")
    return parts


def build_parser():
    p = argparse.ArgumentParser(
        prog="residreg",
        description="OLS, VIF diagnostics, residualization and FWL regression.",
    )
    p.add_argument("--mode", choices=MODES, required=True)
    p.add_argument("--input", type=Path, help="CSV file or directory of CSV files")
    p.add_argument("--lambda", dest="lam", type=float, default=0.01,
                   help="Nelson-Siegel decay per month (default 0.01)")
    p.add_argument("--target", help="column to residualize or partial out")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--seed", type=int, help="seed for synthetic yields (ns-demo)")
    p.add_argument("--beta", type=_beta, default=DEFAULT_BETA,
                   help="level,short,medium factors for synthetic yields")
    p.add_argument("--noise-sd", type=float, default=0.1,
                   help="noise standard deviation for synthetic yields")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        mode=args.mode,
        input_path=args.input,
        lam=args.lam,
        target_column=args.target,
        output_format=args.format,
        seed=args.seed,
        beta=args.beta,
        noise_sd=args.noise_sd,
    )
    try:
        run(config, sys.stdout)
    except FileNotFoundError as exc:
        print(f"residreg: error: FileNotFound: {exc}", file=sys.stderr)
        return 3
    except ResidRegError as exc:
        print(f"residreg: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())

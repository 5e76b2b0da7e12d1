"""Deterministic JSON and CSV output for every result type.

JSON keeps dataclass field order, writes floats with 15 significant digits,
rationals as "p/q" strings and complex numbers as {"re": .., "im": ..}.
Each object carries a trailing "_type" tag so :func:`loads` can rebuild it.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

import numpy as np

from .errors import ValidationError
from .exponent_pairs import ExponentPair, HullPolyline, LedgerEntry, fmt_fraction
from .mean_square import Lemma1Result, MajorantResult, MeanSquareResult, Window
from .phi_shifts import AxiomReport, GrowthResult, PartitionResult
from .special.perron import ComplexPoint, DecompositionReport
from .universality import ScanResult, ScanWindow

FORMATS = ("json", "csv")
_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")
_RENAME = {(ExponentPair, "lam"): "lambda", (ExponentPair, "eps_limit"): "eps"}


# small record types produced by the CLI ---------------------------------
@dataclass
class PairRow:
    pair: ExponentPair
    sigma: Fraction
    theta: Optional[Fraction]
    log_exp: Fraction
    sigma_bound: Fraction


@dataclass
class OptimizeResult:
    sigma: Fraction
    pair: ExponentPair
    theta: Fraction
    log_exp: Fraction
    closure_size: int
    hull: HullPolyline


@dataclass
class ZetaValue:
    s: ComplexPoint
    value: complex
    kind: str = "zeta"


@dataclass
class StirlingResult:
    x_grid: tuple
    t_grid: tuple
    constant: float


@dataclass
class DensityCurve:
    window: ScanWindow
    points: list


@dataclass
class SuiteResult:
    name: str
    seed: Optional[int]
    max_value: float
    items: list


_TYPES = {cls.__name__: cls for cls in (
    ExponentPair, HullPolyline, LedgerEntry, Window, MeanSquareResult, Lemma1Result,
    MajorantResult, AxiomReport, GrowthResult, PartitionResult, ComplexPoint,
    DecompositionReport, ScanResult, ScanWindow, PairRow, OptimizeResult, ZetaValue,
    StirlingResult, DensityCurve, SuiteResult)}


# encoding ----------------------------------------------------------------
def fmt_float(x: float) -> str:
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    s = "%.15g" % x
    return "0" if s == "-0" else s


def to_plain(obj: Any) -> Any:
    """Python structure with floats, fractions and complex values already
    reduced to their serialized form (floats stay floats)."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, Fraction):
        return fmt_fraction(obj)
    if isinstance(obj, (int, np.integer)) and not isinstance(obj, np.bool_):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": float(obj.real), "im": float(obj.imag)}
    if isinstance(obj, np.ndarray):
        return [to_plain(x) for x in obj.tolist()]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        out = {}
        for f in dataclasses.fields(obj):
            out[_RENAME.get((type(obj), f.name), f.name)] = to_plain(getattr(obj, f.name))
        out["_type"] = type(obj).__name__
        return out
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(x) for x in obj]
    raise ValidationError(f"cannot serialize {type(obj).__name__}")


def _emit(x: Any, out: list):
    if isinstance(x, float):
        s = fmt_float(x)
        out.append(s if s not in ("nan", "inf", "-inf") else json.dumps(s))
    elif isinstance(x, dict):
        out.append("{")
        for i, (k, v) in enumerate(x.items()):
            if i:
                out.append(",")
            out.append(json.dumps(k))
            out.append(":")
            _emit(v, out)
        out.append("}")
    elif isinstance(x, list):
        out.append("[")
        for i, v in enumerate(x):
            if i:
                out.append(",")
            _emit(v, out)
        out.append("]")
    else:
        out.append(json.dumps(x))


def dumps(obj: Any) -> str:
    parts: list[str] = []
    _emit(to_plain(obj), parts)
    return "".join(parts) + "\n"


# decoding ----------------------------------------------------------------
def _decode_value(v: Any, hint: str) -> Any:
    if isinstance(v, dict):
        if "_type" in v:
            return from_plain(v)
        if set(v) == {"re", "im"}:
            return complex(_num(v["re"]), _num(v["im"]))
        return {k: _decode_value(x, "") for k, x in v.items()}
    if isinstance(v, list):
        items = [_decode_value(x, "") for x in v]
        if "ndarray" in hint:
            return np.array(items)
        if hint.startswith("tuple"):
            return tuple(items)
        return items
    if isinstance(v, str):
        if hint != "str" and _RATIONAL.match(v) and any(
                k in hint for k in ("Fraction", "Exponent", "Rational")):
            return Fraction(v)
        if "float" in hint and v in ("nan", "inf", "-inf"):
            return float(v)
        return v
    if isinstance(v, int) and "float" in hint and "int" not in hint:
        return float(v)
    return v


def _num(v):
    return float(v)


def from_plain(d: dict) -> Any:
    name = d.get("_type")
    cls = _TYPES.get(name)
    if cls is None:
        raise ValidationError(f"unknown serialized type {name!r}")
    kwargs = {}
    for f in dataclasses.fields(cls):
        key = _RENAME.get((cls, f.name), f.name)
        if key not in d:
            continue
        hint = f.type if isinstance(f.type, str) else getattr(f.type, "__name__", "")
        kwargs[f.name] = _decode_value(d[key], hint)
    return cls(**kwargs)


def loads(text: str) -> Any:
    data = json.loads(text)
    return _decode_value(data, "")


# CSV ---------------------------------------------------------------------
def _cell(x: Any) -> str:
    if x is None:
        return ""
    if isinstance(x, Fraction):
        return fmt_fraction(x)
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return fmt_float(float(x))
    if isinstance(x, (complex, np.complexfloating)):
        return f"{fmt_float(x.real)}{'+' if x.imag >= 0 else '-'}{fmt_float(abs(x.imag))}j"
    return str(x)


def _table(obj: Any) -> tuple[list[str], list[list[Any]]]:
    if isinstance(obj, ScanResult):
        return ["tau", "sup_distance"], [[t, d] for t, d in zip(obj.taus, obj.distances)]
    if isinstance(obj, PartitionResult):
        rows = [[0, obj.points[0], None]]
        rows += [[k, obj.points[k], obj.steps[k - 1]] for k in range(1, obj.K + 1)]
        return ["k", "T_k", "inv_psi"], rows
    if isinstance(obj, MeanSquareResult):
        return ["t_lo", "t_hi", "partial", "cumulative"], [list(p) for p in obj.partials]
    if isinstance(obj, DensityCurve):
        return ["epsilon", "density"], [list(p) for p in obj.points]
    if isinstance(obj, ExponentPair):
        obj = [obj]
    if isinstance(obj, OptimizeResult):
        p = obj.pair
        return (["kappa", "lambda", "eps", "sigma", "theta", "log_exp", "closure_size"],
                [[p.kappa, p.lam, p.eps_limit, obj.sigma, obj.theta, obj.log_exp,
                  obj.closure_size]])
    if isinstance(obj, HullPolyline):
        obj = list(obj.vertices)
    if isinstance(obj, SuiteResult):
        obj = obj.items
    if isinstance(obj, list) and obj:
        first = obj[0]
        if isinstance(first, PairRow):
            return (["kappa", "lambda", "eps", "theta", "log_exp", "sigma_bound"],
                    [[r.pair.kappa, r.pair.lam, r.pair.eps_limit, r.theta, r.log_exp,
                      r.sigma_bound] for r in obj])
        if isinstance(first, ExponentPair):
            return (["kappa", "lambda", "eps", "derivation"],
                    [[p.kappa, p.lam, p.eps_limit, p.derivation] for p in obj])
        if dataclasses.is_dataclass(first):
            cols = [f.name for f in dataclasses.fields(first)
                    if _is_scalar(getattr(first, f.name))]
            return cols, [[getattr(x, c) for c in cols] for x in obj]
    if dataclasses.is_dataclass(obj):
        rows = [[f.name, getattr(obj, f.name)] for f in dataclasses.fields(obj)
                if _is_scalar(getattr(obj, f.name))]
        return ["field", "value"], rows
    raise ValidationError(f"no CSV form for {type(obj).__name__}")


def _is_scalar(x) -> bool:
    return x is None or isinstance(x, (str, bool, int, float, complex, Fraction,
                                       np.generic))


def to_csv(obj: Any) -> str:
    header, rows = _table(obj)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_cell(x) for x in r])
    return buf.getvalue()


def serialize(obj: Any, fmt: str = "json") -> bytes:
    if fmt == "json":
        return dumps(obj).encode()
    if fmt == "csv":
        return to_csv(obj).encode()
    raise ValidationError(f"unsupported format {fmt!r}; expected one of {FORMATS}")

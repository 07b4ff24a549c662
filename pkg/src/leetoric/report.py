"""Rate/gain arithmetic, golden tables, and verification certificates.

Rates are exact rationals R = k/n rendered half-even at four decimal places,
widened one place at a time until at least three significant digits survive.
The printed gain is the exact decimal product rounded-rate x (t+1) with
trailing zeros trimmed; the exact rational G = R(t+1) is carried alongside.
The gain column is a plain ratio even though such tables are often labeled
in dB; the renderings here reproduce the reference digits as printed.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from decimal import Decimal
from fractions import Fraction
from importlib.metadata import PackageNotFoundError, version as _dist_version
from typing import Optional

from .instances import CERTIFIED
from .interleave import interleaved_params
from .toric import CodeParams, literature_params, new_code_params

try:
    ARTIFACT_VERSION = _dist_version("leetoric")
except PackageNotFoundError:
    ARTIFACT_VERSION = "0.0.0.dev0"

FORMATS = ("markdown", "csv", "json-lines")


@dataclass(frozen=True)
class RateGain:
    """Exact rate and gain of a code record, plus their printed renderings."""

    rate: Fraction
    gain: Fraction
    t: int
    rate_printed: str
    gain_printed: str


@dataclass(frozen=True)
class TableRow:
    table: int
    label: str
    n_code: int
    k: int
    t: int
    rate_printed: str
    gain_printed: str
    rate_exact: Fraction
    gain_exact: Fraction


@dataclass(frozen=True)
class VerificationCertificate:
    """Machine-readable outcome of one verification command.

    The result fields are a pure function of claim, inputs, and seed; only
    generated_at varies between reruns.
    """

    claim: str
    inputs: dict
    passed: bool
    counts: dict
    version: str
    generated_at: str


def _round_half_even(value: Fraction, places: int) -> Decimal:
    scaled = value * 10**places
    quot, rem = divmod(scaled.numerator, scaled.denominator)
    twice = 2 * rem
    if twice > scaled.denominator or (twice == scaled.denominator and quot % 2):
        quot += 1
    return Decimal(quot).scaleb(-places)


def _significant_digits(rendered: str) -> int:
    return len(rendered.replace("-", "").replace(".", "").lstrip("0"))


def render_rate(rate: Fraction, min_significant: int = 3, places: int = 4) -> str:
    """Half-even decimal rendering, widened until enough digits survive."""
    if rate <= 0:
        raise ValueError("rate must be positive")
    while True:
        s = str(_round_half_even(rate, places))
        if _significant_digits(s) >= min_significant or places >= 12:
            return s
        places += 1


def _trim_zeros(rendered: str) -> str:
    if "." in rendered:
        rendered = rendered.rstrip("0").rstrip(".")
    return rendered


def rate_gain(p: CodeParams) -> RateGain:
    """Exact R = k/n and G = R(t+1), with the printed digit conventions."""
    rate = Fraction(p.k, p.n_code)
    gain = rate * (p.t + 1)
    rate_printed = render_rate(rate)
    gain_printed = _trim_zeros(str(Decimal(rate_printed) * (p.t + 1)))
    return RateGain(
        rate=rate, gain=gain, t=p.t, rate_printed=rate_printed,
        gain_printed=gain_printed,
    )


_LITERATURE_FORMS = {3: "3q^3", 4: "6q^4"}
_INTERLEAVED_FORMS = {3: ("3q^3", "3q^2"), 4: ("6q^4", "6q^3")}


def _row(table: int, label: str, p: CodeParams) -> TableRow:
    rg = rate_gain(p)
    return TableRow(
        table=table,
        label=label,
        n_code=p.n_code,
        k=p.k,
        t=p.t,
        rate_printed=rg.rate_printed,
        gain_printed=rg.gain_printed,
        rate_exact=rg.rate,
        gain_exact=rg.gain,
    )


def table_rows() -> tuple[TableRow, ...]:
    """The six golden rows: four comparison rows, then the two interleaved."""
    rows = []
    for q, n in CERTIFIED:
        p = literature_params(q, n)
        rows.append(_row(1, f"[[{_LITERATURE_FORMS[n]},{p.k},t={p.t}]] (q={q})", p))
    for q, n in CERTIFIED:
        p = new_code_params(q, n)
        label = f"[[{p.n_code // q}q={p.n_code},k={p.k},t={p.t}]] (q={q})"
        rows.append(_row(1, label, p))
    for q, n in CERTIFIED:
        p = interleaved_params(q, n)
        nf, kf = _INTERLEAVED_FORMS[n]
        rows.append(_row(2, f"[[{nf},{kf},t_i=q]] (q={q})", p))
    return tuple(rows)


_TABLE_TITLES = {
    1: "Table 1: code rate and coding gain of the toric quantum codes",
    2: "Table 2: code rate and coding gain from the interleaving method",
}

_CSV_FIELDS = (
    "table", "label", "n", "k", "t", "rate", "gain", "rate_exact", "gain_exact",
)


def emit_tables(fmt: str) -> str:
    """Both golden tables in the requested format."""
    rows = table_rows()
    if fmt == "markdown":
        out = []
        for tbl in (1, 2):
            out.append(f"## {_TABLE_TITLES[tbl]}")
            out.append("")
            out.append("| code | rate R | gain G |")
            out.append("| --- | --- | --- |")
            for r in rows:
                if r.table == tbl:
                    out.append(f"| {r.label} | {r.rate_printed} | {r.gain_printed} |")
            out.append("")
        out.append("Gain column: plain ratio R(t+1) as printed; the dB label")
        out.append("customary for coding gain is ambiguous here and not applied.")
        return "\n".join(out) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_CSV_FIELDS)
        for r in rows:
            writer.writerow(
                [r.table, r.label, r.n_code, r.k, r.t, r.rate_printed,
                 r.gain_printed, str(r.rate_exact), str(r.gain_exact)]
            )
        return buf.getvalue()
    if fmt == "json-lines":
        lines = []
        for r in rows:
            rec = {
                "table": r.table, "label": r.label, "n": r.n_code, "k": r.k,
                "t": r.t, "rate": r.rate_printed, "gain": r.gain_printed,
                "rate_exact": str(r.rate_exact), "gain_exact": str(r.gain_exact),
            }
            lines.append(json.dumps(rec))
        return "\n".join(lines) + "\n"
    raise ValueError("unknown format")


def parse_tables(text: str, fmt: str) -> tuple[TableRow, ...]:
    """Inverse of emit_tables for the machine formats (csv, json-lines)."""
    rows = []
    if fmt == "csv":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        if tuple(header) != _CSV_FIELDS:
            raise ValueError("unexpected csv header")
        records = [dict(zip(_CSV_FIELDS, row)) for row in reader]
    elif fmt == "json-lines":
        records = [json.loads(line) for line in text.splitlines() if line.strip()]
    else:
        raise ValueError("unknown format")
    for rec in records:
        rows.append(
            TableRow(
                table=int(rec["table"]),
                label=rec["label"],
                n_code=int(rec["n"]),
                k=int(rec["k"]),
                t=int(rec["t"]),
                rate_printed=rec["rate"],
                gain_printed=rec["gain"],
                rate_exact=Fraction(rec["rate_exact"]),
                gain_exact=Fraction(rec["gain_exact"]),
            )
        )
    return tuple(rows)


def make_certificate(
    claim: str, inputs: dict, passed: bool, counts: Optional[dict] = None
) -> VerificationCertificate:
    return VerificationCertificate(
        claim=claim,
        inputs=inputs,
        passed=bool(passed),
        counts=counts or {},
        version=ARTIFACT_VERSION,
        generated_at=datetime.now(timezone.utc).isoformat(),
    )


def certificate_json(cert: VerificationCertificate) -> str:
    return json.dumps(asdict(cert), sort_keys=False)

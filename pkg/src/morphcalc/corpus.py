"""Identity corpus: a line-oriented file of named equalities to verify mechanically.

Format, one record per line, fields separated by " ; ":

    name ; lhs-expression ; == or != ; rhs-expression ; citation

Lines starting with '#' and blank lines are skipped.  Records may expect the
two sides to be unequal; those guard against identifications the calculus
forbids.  The verifier never aborts on a bad record: evaluation errors are
reported as failures with diagnostics.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass

from .quantity import MorphError, MorphPoly, render
from .lang import Expr, eval_expr, parse
from .catalog import BadParams, poincare_sphere, projective, sphere

P = MorphPoly.halfline()
R = MorphPoly.line()


class FormatError(MorphError):
    def __init__(self, message, line_no):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class DuplicateName(MorphError):
    pass


@dataclass(frozen=True)
class IdentityRecord:
    name: str
    lhs: Expr
    rhs: Expr
    expect: str  # "equal" | "unequal"
    citation: str
    lhs_source: str
    rhs_source: str


@dataclass(frozen=True)
class RecordOutcome:
    name: str
    expect: str
    outcome: str  # "pass" | "fail"
    lhs: str
    rhs: str
    difference: str = None
    error: str = None


@dataclass(frozen=True)
class VerifyReport:
    outcomes: tuple

    @property
    def passed(self) -> int:
        return sum(1 for o in self.outcomes if o.outcome == "pass")

    @property
    def failed(self) -> int:
        return sum(1 for o in self.outcomes if o.outcome == "fail")

    @property
    def exit_status(self) -> int:
        return 0 if self.failed == 0 else 1

    def to_text(self) -> str:
        lines = []
        width = max((len(o.name) for o in self.outcomes), default=0)
        for o in self.outcomes:
            mark = "ok  " if o.outcome == "pass" else "FAIL"
            line = f"{mark} {o.name.ljust(width)}"
            if o.outcome == "fail":
                if o.error is not None:
                    line += f"  error: {o.error}"
                else:
                    line += f"  lhs = {o.lhs}  rhs = {o.rhs}"
                    if o.difference is not None:
                        line += f"  difference = {o.difference}"
            lines.append(line)
        lines.append(f"passed {self.passed}  failed {self.failed}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        records = []
        for o in self.outcomes:
            row = {
                "name": o.name,
                "expect": o.expect,
                "outcome": o.outcome,
                "lhs": o.lhs,
                "rhs": o.rhs,
            }
            if o.difference is not None:
                row["difference"] = o.difference
            if o.error is not None:
                row["error"] = o.error
            records.append(row)
        return {
            "summary": {"pass": self.passed, "fail": self.failed},
            "records": records,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def _as_text(source) -> str:
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, str):
        return source
    if isinstance(source, io.IOBase) or hasattr(source, "read"):
        data = source.read()
        return data.decode("utf-8") if isinstance(data, bytes) else data
    return source.read_text(encoding="utf-8")  # pathlib.Path


def load_corpus(source) -> list:
    """Parse a corpus file into identity records; names must be unique."""
    text = _as_text(source)
    records = []
    seen = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(" ; ")]
        if len(fields) != 5:
            raise FormatError(f"expected 5 ' ; '-separated fields, found {len(fields)}", line_no)
        name, lhs_src, rel, rhs_src, citation = fields
        if rel not in ("==", "!="):
            raise FormatError(f"relation must be '==' or '!=', found {rel!r}", line_no)
        if name in seen:
            raise DuplicateName(f"duplicate record name {name!r} (line {line_no})")
        seen.add(name)
        try:
            lhs = parse(lhs_src)
            rhs = parse(rhs_src)
        except MorphError as exc:
            raise FormatError(str(exc), line_no) from exc
        records.append(
            IdentityRecord(
                name=name,
                lhs=lhs,
                rhs=rhs,
                expect="equal" if rel == "==" else "unequal",
                citation=citation,
                lhs_source=lhs_src,
                rhs_source=rhs_src,
            )
        )
    return records


def verify_record(record: IdentityRecord) -> RecordOutcome:
    try:
        lhs = eval_expr(record.lhs)
        rhs = eval_expr(record.rhs)
    except MorphError as exc:
        return RecordOutcome(
            name=record.name,
            expect=record.expect,
            outcome="fail",
            lhs=record.lhs_source,
            rhs=record.rhs_source,
            error=str(exc),
        )
    equal = lhs == rhs
    ok = equal if record.expect == "equal" else not equal
    diff = None
    if not ok and record.expect == "equal":
        diff = render(lhs - rhs, "r")
    return RecordOutcome(
        name=record.name,
        expect=record.expect,
        outcome="pass" if ok else "fail",
        lhs=render(lhs, "r"),
        rhs=render(rhs, "r"),
        difference=diff,
    )


def verify_corpus(records) -> VerifyReport:
    return VerifyReport(outcomes=tuple(verify_record(r) for r in records))


# -- bivector partition audit ---------------------------------------------


def bivector_audit(n: int):
    """Orbit-by-orbit count of the nonzero bivectors on n generators.

    Returns (partition_sum, whole, gap) where whole = R^(n choose 2) - 1 and
    gap = partition_sum - whole.  The partition adds the normal-form orbits of
    a bivector r1*I1 + r2*I2 (r1 >= r2 >= 0, not both zero); for n = 3 the sum
    closes exactly, for n = 4 and n = 5 it overshoots.
    """
    if n == 3:
        parts = [sphere(2) * P]
    elif n == 4:
        g_or = poincare_sphere(2) * sphere(2)  # oriented planes in 4-space
        parts = [
            2 * g_or * P * P,       # r1 > r2 > 0, dual partner determined up to sign
            g_or * P,               # r1 > r2 = 0
            2 * P * sphere(2),      # r1 = r2 > 0, (anti-)self-dual halves
        ]
    elif n == 5:
        planes4 = projective(1, 2) * sphere(4)  # S4*S3/S1
        parts = [
            P * P * planes4 * sphere(2),   # r1 > r2 > 0
            P * planes4,                   # r1 > r2 = 0
            sphere(4) * P * sphere(2),     # r1 = r2 > 0, half the line choices each
        ]
    else:
        raise BadParams("bivector audit is worked out for n in {3, 4, 5}")
    partition_sum = MorphPoly.zero()
    for part in parts:
        partition_sum = partition_sum + part
    whole = R ** (n * (n - 1) // 2) - 1
    gap = partition_sum - whole
    return partition_sum, whole, gap

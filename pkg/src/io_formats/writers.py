"""CSV and JSON emitters for analysis results."""
import csv
import io
import json
from typing import Any, Iterable, List, Sequence, Tuple

from pydantic import BaseModel

from src.metrics import ClubDegreeReport, LinkMatrix, RichClubCurve, SummaryReport

PHI_HEADER = ["r", "n", "intra_links", "phi"]


def _csv(rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _phi_rows(curve: RichClubCurve) -> List[List[str]]:
    return [[f"{p.r:.6f}", str(p.club_size), str(p.intra_club_links), f"{p.phi:.6f}"]
            for p in sorted(curve.points, key=lambda p: p.r)]


def write_phi_csv(curve: RichClubCurve) -> str:
    return _csv([PHI_HEADER] + _phi_rows(curve))


def write_compare_csv(curves: Sequence[Tuple[str, RichClubCurve]]) -> str:
    """Long format: one block of rows per network, in input order."""
    rows: List[List[str]] = [["network"] + PHI_HEADER]
    for name, curve in curves:
        rows.extend([name] + row for row in _phi_rows(curve))
    return _csv(rows)


def write_matrix_csv(m: LinkMatrix) -> str:
    header = [f"{b:.6f}" for b in m.upper_bounds()]
    return _csv([header] + [[str(int(c)) for c in row] for row in m.mirrored()])


def write_club_degree_csv(report: ClubDegreeReport) -> str:
    rows = [["k", "observed", "reference"]]
    rows += [[str(k), str(o), f"{p:.6f}"] for k, o, p in zip(report.degrees, report.observed, report.reference)]
    return _csv(rows)


def write_json(record: Any) -> str:
    """Pydantic models and plain mappings as indented JSON, keys in declaration order."""
    data = record.model_dump() if isinstance(record, BaseModel) else record
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def write_summary_json(s: SummaryReport) -> str:
    return write_json(s)

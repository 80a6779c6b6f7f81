import io
import json
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import pandas as pd
from sqlalchemy.exc import SQLAlchemyError
from tabulate import tabulate

from utils.arith import factorize
from utils.citations import get_citation
from utils.db_models import StoredReport, StoredSurvivor, initialize_database
from utils.errors import ReportStoreError
from utils.filters import F2Mode, FilterVerdict, VerdictStatus
from utils.pipeline import ENGINE_VERSION, ClassificationReport, DiscrepancyReport, Mode, realized_survivors
from utils.typevec import parse

logger = logging.getLogger(__name__)


class ReportManager:
    """
    Holds the classification reports of a session and handles exporting,
    importing, searching and persisting them.
    """

    csv_columns = [
        'dimension', 'stage', 'mode', 'f2_mode', 'type', 'rank',
        'status', 'filter', 'reason', 'citation',
    ]

    def __init__(self, database_url: Optional[str] = None, persist: bool = False):
        """
        Initialize the manager.

        Args:
            database_url: SQLAlchemy URL; DATABASE_URL or a local SQLite file when omitted
            persist: Connect to the report store and load previously saved reports
        """
        # (dimension, mode, f2_mode) -> report
        self.reports: Dict[Tuple[int, str, str], ClassificationReport] = {}
        self.Session = None

        if persist:
            try:
                _, self.Session = initialize_database(database_url)
                self.load_from_database()
            except (SQLAlchemyError, ReportStoreError) as e:
                logger.warning("Report store unavailable, keeping reports in memory: %s", str(e))
                self.Session = None

    @staticmethod
    def _key(report: ClassificationReport) -> Tuple[int, str, str]:
        return report.dimension, report.mode.value, report.f2_mode.value

    def add(self, report: ClassificationReport) -> None:
        self.reports[self._key(report)] = report

    def add_all(self, reports: Iterable[ClassificationReport]) -> None:
        for report in reports:
            self.add(report)

    def has_data(self) -> bool:
        return bool(self.reports)

    def all_reports(self) -> List[ClassificationReport]:
        return [self.reports[key] for key in sorted(self.reports)]

    def get_report(self, dimension: int, mode: str = "full", f2_mode: str = "legacy") -> Optional[ClassificationReport]:
        return self.reports.get((dimension, Mode(mode).value, F2Mode(f2_mode).value))

    # Structured formats

    def to_json(self, reports: Optional[Sequence[ClassificationReport]] = None, include_timing: bool = False,
                extra: Optional[Dict] = None) -> str:
        """
        Serialize reports with a stable key order; timing only on request.

        Returns:
            str: JSON document
        """
        reports = self.all_reports() if reports is None else reports
        document = {
            'engine_version': ENGINE_VERSION,
            'reports': [report.to_dict(include_timing=include_timing) for report in reports],
        }
        if extra:
            document.update(extra)
        return json.dumps(document, sort_keys=True, indent=2) + "\n"

    def import_from_json(self, text: str) -> int:
        """
        Load reports from a document produced by ``to_json``.

        Returns:
            int: Number of reports imported
        """
        try:
            document = json.loads(text)
            payloads = document['reports']
            reports = [report_from_dict(payload) for payload in payloads]
        except (ValueError, KeyError, TypeError) as e:
            raise ReportStoreError(f"Error importing report JSON: {str(e)}")
        self.add_all(reports)
        return len(reports)

    def export_to_csv(self, reports: Optional[Sequence[ClassificationReport]] = None) -> str:
        """
        One row per (type, first rejecting filter); survivors have no filter.

        Returns:
            str: CSV content as a string
        """
        reports = self.all_reports() if reports is None else reports
        rows = []
        for report in reports:
            base = {
                'dimension': report.dimension,
                'stage': report.stage.value,
                'mode': report.mode.value,
                'f2_mode': report.f2_mode.value,
            }
            for t in report.survivors:
                rows.append({**base, 'type': str(t), 'rank': t.rank(), 'status': 'survivor',
                             'filter': '', 'reason': '', 'citation': ''})
            for t, verdicts in report.rejections:
                first = next(v for v in verdicts if v.status is VerdictStatus.REJECT)
                rows.append({**base, 'type': str(t), 'rank': t.rank(), 'status': 'rejected',
                             'filter': first.filter_id, 'reason': first.reason, 'citation': first.citation})
            for t, verdicts in report.unresolved:
                first = verdicts[0]
                rows.append({**base, 'type': str(t), 'rank': t.rank(), 'status': 'unresolved',
                             'filter': first.filter_id, 'reason': first.reason, 'citation': first.citation})

        buffer = io.StringIO()
        pd.DataFrame(rows, columns=self.csv_columns).to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()

    # Frames for the explorer and the scan summary

    def summary_frame(self, reports: Optional[Sequence[ClassificationReport]] = None) -> pd.DataFrame:
        reports = self.all_reports() if reports is None else reports
        return pd.DataFrame(
            [
                {
                    'dimension': r.dimension,
                    'factorization': str(r.factorization),
                    'raw': r.raw_count,
                    'survivors': len(r.survivors),
                    'non_pointed': len(r.non_pointed_survivors),
                    'unresolved': len(r.unresolved),
                    'fast_path': r.fast_path,
                }
                for r in reports
            ],
            columns=['dimension', 'factorization', 'raw', 'survivors', 'non_pointed', 'unresolved', 'fast_path'],
        )

    def attribution_frame(self, report: ClassificationReport) -> pd.DataFrame:
        """Rejection counts per first rejecting filter."""
        counts: Dict[str, int] = {}
        for _, verdicts in report.rejections:
            counts[verdicts[0].filter_id] = counts.get(verdicts[0].filter_id, 0) + 1
        return pd.DataFrame(sorted(counts.items()), columns=['filter', 'rejected'])

    def non_pointed_frame(self, reports: Optional[Sequence[ClassificationReport]] = None) -> pd.DataFrame:
        reports = self.all_reports() if reports is None else reports
        rows = [
            {'dimension': r.dimension, 'type': str(t), 'rank': t.rank()}
            for r in reports for t in r.non_pointed_survivors
        ]
        return pd.DataFrame(rows, columns=['dimension', 'type', 'rank'])

    # Human tables

    def format_report(self, report: ClassificationReport, include_timing: bool = False,
                      explained: Optional[Dict[str, List[FilterVerdict]]] = None) -> str:
        """
        Render one report as text tables.

        Args:
            report: Report to render
            include_timing: Append the elapsed time
            explained: Optional full verdict lists per rejected type string
        """
        witnesses = {str(t): w for t, w in realized_survivors(report)}
        lines = [
            f"Dimension {report.dimension} = {report.factorization}  "
            f"(filters {report.mode.value}, f2 {report.f2_mode.value})",
            f"raw candidates: {_raw(report)}",
            "",
            "Survivors",
            tabulate(
                [[str(t), t.rank(), "yes" if t.is_pointed() else "no", witnesses.get(str(t), "")]
                 for t in report.survivors],
                headers=["type", "rank", "pointed", "realization"],
            ),
        ]
        if report.rejections:
            lines += ["", "Rejected"]
            rows = []
            for t, verdicts in report.rejections:
                shown = explained.get(str(t), verdicts) if explained else verdicts
                for verdict in shown:
                    if verdict.status is VerdictStatus.REJECT:
                        rows.append([str(t), verdict.filter_id, verdict.reason])
            lines.append(tabulate(rows, headers=["type", "filter", "reason"]))
        if report.unresolved:
            lines += ["", "Unresolved"]
            lines.append(tabulate(
                [[str(t), v.filter_id, v.reason] for t, verdicts in report.unresolved for v in verdicts],
                headers=["type", "filter", "reason"],
            ))
        if include_timing:
            lines += ["", f"elapsed: {report.elapsed:.3f}s"]
        return "\n".join(lines) + "\n"

    def format_scan(self, reports: Sequence[ClassificationReport]) -> str:
        lines = []
        for r in reports:
            survivors = ", ".join(str(t) for t in r.survivors)
            lines.append(f"{r.dimension:>5}  {str(r.factorization):<18} raw={_raw(r):<4} survivors: {survivors}")
        frame = self.non_pointed_frame(reports)
        lines += ["", "Non-pointed survivors"]
        lines.append(tabulate(frame.values.tolist(), headers=list(frame.columns)) if not frame.empty else "(none)")
        return "\n".join(lines) + "\n"

    @staticmethod
    def format_verdicts(verdicts: Sequence[FilterVerdict]) -> str:
        rows = [
            [v.filter_id, v.status.value, v.reason, get_citation(v.citation).label, get_citation(v.citation).quote]
            for v in verdicts
        ]
        return tabulate(rows, headers=["filter", "status", "reason", "source", "citation"]) + "\n"

    @staticmethod
    def format_discrepancy(discrepancy: DiscrepancyReport) -> str:
        if discrepancy.is_clean:
            return f"Reference check ({discrepancy.stage.value}) for {discrepancy.dimension}: no discrepancies\n"
        rows = [["missing from engine", str(t)] for t in discrepancy.missing_from_engine]
        rows += [["extra in engine", str(t)] for t in discrepancy.extra_in_engine]
        header = f"Reference check ({discrepancy.stage.value}) for {discrepancy.dimension}: MISMATCH"
        return header + "\n" + tabulate(rows, headers=["kind", "type"]) + "\n"

    def search(self, query: str) -> List[Dict]:
        """
        Find types whose text form contains ``query`` (whitespace ignored).

        Returns:
            List of {dimension, mode, f2_mode, type, status} dicts
        """
        needle = "".join(query.split())
        results = []
        for report in self.all_reports():
            groups = (
                ('survivor', report.survivors),
                ('rejected', report.rejected_types),
                ('unresolved', [t for t, _ in report.unresolved]),
            )
            for status, types in groups:
                for t in types:
                    if needle and needle in str(t):
                        results.append({
                            'dimension': report.dimension,
                            'mode': report.mode.value,
                            'f2_mode': report.f2_mode.value,
                            'type': str(t),
                            'status': status,
                        })
        return results

    # Persistence

    def save_to_database(self, reports: Optional[Sequence[ClassificationReport]] = None) -> int:
        """
        Store reports, replacing earlier rows for the same key.

        Returns:
            int: Number of reports written
        """
        if self.Session is None:
            raise ReportStoreError("Report store is not connected")
        reports = self.all_reports() if reports is None else reports
        session = self.Session()
        try:
            for report in reports:
                stale = session.query(StoredReport).filter_by(
                    dimension=report.dimension, mode=report.mode.value, f2_mode=report.f2_mode.value,
                ).all()
                for row in stale:
                    session.delete(row)
                row = StoredReport(
                    dimension=report.dimension,
                    mode=report.mode.value,
                    f2_mode=report.f2_mode.value,
                    engine_version=report.engine_version,
                    raw_count=report.raw_count,
                    payload=json.dumps(report.to_dict(), sort_keys=True),
                )
                row.survivors = [StoredSurvivor(type_string=str(t), pointed=t.is_pointed()) for t in report.survivors]
                session.add(row)
            session.commit()
            return len(reports)
        except SQLAlchemyError as e:
            session.rollback()
            raise ReportStoreError(f"Failed to save reports to database: {str(e)}")
        finally:
            session.close()

    def load_from_database(self) -> int:
        if self.Session is None:
            raise ReportStoreError("Report store is not connected")
        session = self.Session()
        try:
            rows = session.query(StoredReport).order_by(StoredReport.dimension).all()
            for row in rows:
                self.add(report_from_dict(json.loads(row.payload)))
            return len(rows)
        except (SQLAlchemyError, ValueError, KeyError) as e:
            raise ReportStoreError(f"Failed to load reports from database: {str(e)}")
        finally:
            session.close()


def _raw(report: ClassificationReport) -> str:
    return "-" if report.raw_count is None else str(report.raw_count)


def _verdicts_from(entries: List[Dict]) -> List[FilterVerdict]:
    return [
        FilterVerdict(v['filter'], VerdictStatus(v['status']), v['reason'], v['citation'])
        for v in entries
    ]


def report_from_dict(payload: Dict) -> ClassificationReport:
    """Rebuild a report from its ``to_dict`` form."""
    dimension = int(payload['dimension'])
    return ClassificationReport(
        dimension=dimension,
        factorization=factorize(dimension),
        mode=Mode(payload['mode']),
        f2_mode=F2Mode(payload['f2_mode']),
        raw_count=None if payload['raw_count'] is None else int(payload['raw_count']),
        survivors=[parse(text) for text in payload['survivors']],
        rejections=[(parse(e['type']), _verdicts_from(e['verdicts'])) for e in payload['rejections']],
        unresolved=[(parse(e['type']), _verdicts_from(e['verdicts'])) for e in payload['unresolved']],
        elapsed=float(payload.get('elapsed', 0.0)),
        engine_version=payload.get('engine_version', ENGINE_VERSION),
        fast_path=bool(payload.get('fast_path', False)),
    )

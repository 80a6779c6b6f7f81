"""
Command-line interface: classify, scan, explain, filters.

Exit codes: 0 ok, 1 usage, 2 invalid input, 3 reference mismatch, 4 other errors.
"""
import argparse
import io
import logging
import sys
from typing import List, Optional

import pandas as pd
from tabulate import tabulate

from utils.citations import get_citation
from utils.config import load_settings
from utils.errors import ClassifierError, InvalidInputError, ReportStoreError
from utils.filters import CATALOG, VerdictStatus
from utils.pipeline import classify, compare_reference, explain, make_context, mode_diff, scan
from utils.report_manager import ReportManager
from utils.typevec import parse

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_MISMATCH = 3
EXIT_ERROR = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument('--filters', choices=['basic', 'full'], help='filter set (default full)')
    common.add_argument('--f2-mode', dest='f2_mode', choices=['legacy', 'strict'], help='dimension-3 filter reading')
    common.add_argument('--format', choices=['table', 'json', 'csv'], help='output format (default table)')
    common.add_argument('--timing', action='store_const', const=True, help='include elapsed times')
    common.add_argument('--config', help='key=value config file (default $MNSD_CONFIG)')
    common.add_argument('--output', help='write output to this file instead of stdout')
    common.add_argument('-v', '--verbose', action='count', default=0, help='more logging on stderr')
    common.add_argument('-q', '--quiet', action='store_true', help='only errors on stderr')

    parser = _Parser(prog='mnsd-classify', description='Classify types of odd-dimensional (MNSD) modular categories')
    commands = parser.add_subparsers(dest='command', parser_class=_Parser)

    classify_cmd = commands.add_parser('classify', parents=[common], help='classify one dimension')
    classify_cmd.add_argument('--dim', type=int, required=True, help='FP dimension')
    classify_cmd.add_argument('--explain', action='store_true', help='list every rejecting filter per type')
    classify_cmd.add_argument('--compare-paper', dest='compare_paper', action='store_true',
                              help='compare survivors with the shipped reference list')

    scan_cmd = commands.add_parser('scan', parents=[common], help='classify every odd dimension below --max')
    scan_cmd.add_argument('--max', type=_positive, help='exclusive bound (default 2025)')
    scan_cmd.add_argument('--workers', type=_positive, help='concurrent classifications')
    scan_cmd.add_argument('--f2-diff', dest='f2_diff', action='store_true',
                          help='report dimensions where legacy and strict f2 disagree')
    scan_cmd.add_argument('--store', action='store_true', help='persist reports to the report store')

    explain_cmd = commands.add_parser('explain', parents=[common], help='run every filter on one type')
    explain_cmd.add_argument('--dim', type=int, required=True, help='FP dimension')
    explain_cmd.add_argument('--type', dest='type_text', required=True, help='type such as "(1,3;3,16;7,6)"')

    commands.add_parser('filters', parents=[common], help='list the filter catalog with citations')
    return parser


def _configure_logging(args, settings):
    level = getattr(logging, settings.log_level)
    if args.quiet:
        level = logging.ERROR
    elif args.verbose:
        level = logging.DEBUG if args.verbose > 1 else logging.INFO
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def _emit(text: str, args):
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def cmd_classify(args, settings) -> int:
    ctx = make_context(settings.f2_mode)
    report = classify(args.dim, settings.filters, ctx)
    manager = ReportManager()
    manager.add(report)

    discrepancy = compare_reference(report) if args.compare_paper else None

    if settings.format == 'json':
        extra = {'discrepancy': discrepancy.to_dict()} if discrepancy else None
        text = manager.to_json([report], include_timing=settings.timing, extra=extra)
    elif settings.format == 'csv':
        text = manager.export_to_csv([report])
    else:
        explained = None
        if args.explain:
            explained = {str(t): explain(args.dim, t, ctx) for t in report.rejected_types}
        text = manager.format_report(report, include_timing=settings.timing, explained=explained)
        if discrepancy:
            text += "\n" + manager.format_discrepancy(discrepancy)
    _emit(text, args)

    if discrepancy is not None and not discrepancy.is_clean:
        logger.error("engine disagrees with the reference list for %d", args.dim)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_scan(args, settings) -> int:
    bound = args.max if args.max is not None else settings.max
    workers = args.workers or settings.workers
    ctx = make_context(settings.f2_mode)
    reports = scan(bound, settings.filters, ctx, workers=workers)
    manager = ReportManager(database_url=settings.database_url, persist=args.store)
    manager.add_all(reports)

    if args.store:
        try:
            manager.save_to_database(reports)
        except ReportStoreError as e:
            logger.warning("%s", str(e))

    diffs = mode_diff(bound, settings.filters, workers=workers) if args.f2_diff else None

    if settings.format == 'json':
        extra = {'max': bound, 'mode': settings.filters, 'f2_mode': settings.f2_mode}
        if diffs is not None:
            extra['f2_diff'] = [
                {'dimension': d.dimension,
                 'legacy_only': [str(t) for t in d.legacy_only],
                 'strict_only': [str(t) for t in d.strict_only]}
                for d in diffs
            ]
        text = manager.to_json(reports, include_timing=settings.timing, extra=extra)
    elif settings.format == 'csv':
        text = manager.export_to_csv(reports)
    else:
        text = manager.format_scan(reports)
        if diffs is not None:
            rows = [[d.dimension, " ".join(map(str, d.legacy_only)), " ".join(map(str, d.strict_only))] for d in diffs]
            text += "\nf2 mode differences\n"
            text += (tabulate(rows, headers=["dimension", "legacy only", "strict only"]) if rows else "(none)") + "\n"
        if settings.timing:
            text += f"\nelapsed: {sum(r.elapsed for r in reports):.3f}s\n"
    _emit(text, args)
    return EXIT_OK


def cmd_explain(args, settings) -> int:
    t = parse(args.type_text)
    ctx = make_context(settings.f2_mode)
    verdicts = explain(args.dim, t, ctx)

    if settings.format == 'json':
        manager = ReportManager()
        text = manager.to_json([], extra={
            'dimension': args.dim,
            'type': str(t),
            'verdicts': [v.to_dict() for v in verdicts],
        })
    elif settings.format == 'csv':
        buffer = io.StringIO()
        pd.DataFrame(
            [{**v.to_dict(), 'quote': get_citation(v.citation).quote} for v in verdicts],
            columns=['filter', 'status', 'reason', 'citation', 'quote'],
        ).to_csv(buffer, index=False, lineterminator="\n")
        text = buffer.getvalue()
    else:
        rejected = any(v.status is VerdictStatus.REJECT for v in verdicts)
        text = f"{t} at dimension {args.dim}: {'rejected' if rejected else 'not rejected'}\n"
        text += ReportManager.format_verdicts(verdicts)
    _emit(text, args)
    return EXIT_OK


def cmd_filters(args, settings) -> int:
    rows = []
    for filter_id, spec in CATALOG.items():
        citation = get_citation(filter_id)
        rows.append([filter_id, spec.alias, spec.stage, spec.summary, citation.label, citation.quote])
    text = tabulate(rows, headers=["id", "alias", "stage", "condition", "label", "quote"]) + "\n"
    _emit(text, args)
    return EXIT_OK


COMMANDS = {
    'classify': cmd_classify,
    'scan': cmd_scan,
    'explain': cmd_explain,
    'filters': cmd_filters,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    try:
        settings = load_settings(args.config, overrides={
            'filters': args.filters,
            'f2_mode': args.f2_mode,
            'format': args.format,
            'timing': args.timing,
        })
        _configure_logging(args, settings)
        return COMMANDS[args.command](args, settings)
    except InvalidInputError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INVALID
    except ClassifierError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

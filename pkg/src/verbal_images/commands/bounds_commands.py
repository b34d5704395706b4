"""
Bounds commands: bounds alt|sl|sl2p|lie|maroti.
"""

import argparse
import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from ..constants import (
    ALT_EXACT_CLASS_MAX_DEGREE, ALT_EXACT_PAIRS_MAX_DEGREE, EXACT_CLASS_NUMBER_MAX_ORDER, EXIT_OK,
    EXIT_VERIFICATION_FAILED,
)
from ..exceptions import FormatError
from ..core.bounds import (
    BoundReport, alt_cover_report, class_number_report, lie_report, sl2p_report, sl_report,
)
from ..core.pair_table import PairMode
from ..core.subgroups import class_number
from ..services.group_service import GroupService
from .group_commands import add_group_argument
from .output import emit

logger = logging.getLogger(__name__)


def _bound_table(report: Dict[str, Any]) -> pd.DataFrame:
    rows = [{'quantity': key, 'exact': report[key], 'approx': report['approx'][key]}
            for key in ('d_lower', 'k_upper', 'p_lower', 'p_upper') if report[key] is not None]
    return pd.DataFrame(rows)


def _emit_bound(args: argparse.Namespace, report: BoundReport) -> int:
    data = report.to_dict()
    summary = [f"family       : {report.family} {report.parameters}",
               f"verdict      : d_lower >= k_upper is {report.verdict}",
               f"float agrees : {report.float_agrees}"]
    if report.in_claimed_regime is not None:
        summary.append(f"in regime    : {report.in_claimed_regime}")
    summary.extend(f"exact        : {k} = {v}" for k, v in report.exact.items())
    summary.extend(f"caveat       : {c}" for c in report.caveats)
    emit(args, data, _bound_table(data), summary)
    return EXIT_OK if report.consistent else EXIT_VERIFICATION_FAILED


def _sl2_class_number(service: GroupService, p: int) -> Optional[int]:
    if p * (p * p - 1) > EXACT_CLASS_NUMBER_MAX_ORDER:
        return None
    return class_number(service.load_group(f"sl:2:{p}"))


def cmd_bounds_alt(args: argparse.Namespace, service: GroupService) -> int:
    n = args.n
    k_alt: Optional[int] = None
    k_cover: Optional[int] = None
    pairs: Optional[Tuple[int, int]] = None
    if not args.no_exact and n >= 5:
        if n <= ALT_EXACT_CLASS_MAX_DEGREE:
            k_alt = class_number(service.load_group(f"alt:{n}"))
        if n == 5:
            # 2.A_5 = SL(2,5)
            k_cover = _sl2_class_number(service, 5)
        if n <= ALT_EXACT_PAIRS_MAX_DEGREE:
            table = service.pairs(service.load_group(f"alt:{n}"), PairMode.PLAIN,
                                  threads=args.threads)
            pairs = (table.l, table.r)
    return _emit_bound(args, alt_cover_report(n, k_alt, k_cover, pairs))


def cmd_bounds_sl(args: argparse.Namespace, service: GroupService) -> int:
    return _emit_bound(args, sl_report(args.n, args.q))


def cmd_bounds_sl2p(args: argparse.Namespace, service: GroupService) -> int:
    report = sl2p_report(args.p)
    k = None if args.no_exact else _sl2_class_number(service, args.p)
    if k is not None:
        report = sl2p_report(args.p, class_number=k)
    return _emit_bound(args, report)


def cmd_bounds_lie(args: argparse.Namespace, service: GroupService) -> int:
    try:
        c = Fraction(args.c)
    except ValueError:
        raise FormatError(f"Constant must be an integer or fraction, got '{args.c}'")
    report = lie_report(args.rank, args.q, c, group_order=args.group_order,
                        out_order=args.out_order)
    return _emit_bound(args, report)


def cmd_bounds_maroti(args: argparse.Namespace, service: GroupService) -> int:
    G = service.load_group(args.group)
    degree = args.degree if args.degree is not None else G.degree
    report = class_number_report(G.name, degree, class_number(G))
    data = report.to_dict()
    emit(args, data, summary=[f"k({G.name}) = {report.class_number} <= 3^(({degree}-1)/2) "
                              f"= {report.bound}: {report.holds}"])
    return EXIT_OK if report.consistent else EXIT_VERIFICATION_FAILED


def register_bounds_commands(subparsers: Any, parents: List[argparse.ArgumentParser]) -> None:
    bounds = subparsers.add_parser('bounds', parents=parents, help="Exact evaluation of the d(S) >= k(S) bounds")
    families = bounds.add_subparsers(dest='family', required=True)

    alt = families.add_parser('alt', parents=parents, help="Covers of alternating groups")
    alt.add_argument('n', type=int)
    alt.add_argument('--no-exact', action='store_true', help="Skip exact desk-scale overrides")
    alt.set_defaults(handler=cmd_bounds_alt)

    sl = families.add_parser('sl', parents=parents, help="SL(n, q)")
    sl.add_argument('n', type=int)
    sl.add_argument('q', type=int)
    sl.set_defaults(handler=cmd_bounds_sl)

    sl2p = families.add_parser('sl2p', parents=parents, help="SL(2, p)")
    sl2p.add_argument('p', type=int)
    sl2p.add_argument('--no-exact', action='store_true')
    sl2p.set_defaults(handler=cmd_bounds_sl2p)

    lie = families.add_parser('lie', parents=parents, help="Groups of Lie type with a supplied constant")
    lie.add_argument('rank', type=int)
    lie.add_argument('q', type=int)
    lie.add_argument('c', type=str, help="Constant, as an integer or fraction like 36 or 7/2")
    lie.add_argument('--group-order', type=int, default=None)
    lie.add_argument('--out-order', type=int, default=None)
    lie.set_defaults(handler=cmd_bounds_lie)

    maroti = families.add_parser('maroti', parents=parents, help="k(G) <= 3^((n-1)/2) for G <= Sym(n)")
    add_group_argument(maroti)
    maroti.add_argument('--degree', type=int, default=None)
    maroti.set_defaults(handler=cmd_bounds_maroti)

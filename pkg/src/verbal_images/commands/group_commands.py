"""
Group commands: image, classes, auts, pairs, gk.
"""

import argparse
import logging
from typing import Any, Dict, List

import pandas as pd

from ..constants import EXIT_OK, EXIT_VERIFICATION_FAILED, SCHEMA_VERSION
from ..core.automorphisms import aut_orbits
from ..core.pair_table import PairMode, guralnick_kantor_check
from ..core.subgroups import center, derived_series, exponent, whole_group
from ..core.verbal_image import DEFAULT_SAMPLES, STRATEGIES, image_report, parity_check
from ..core.words import parse_word
from ..services.group_service import GroupService
from .output import emit, key_values

logger = logging.getLogger(__name__)


def add_group_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--group', required=True,
                        help="sym:n, alt:n, sl:n:q, cyclic:n or a group document path")


def cmd_image(args: argparse.Namespace, service: GroupService) -> int:
    G = service.load_group(args.group)
    w = parse_word(args.word, k=args.rank)
    act = service.automorphisms(G) if args.aut else None
    report = image_report(w, G, args.strategy, act=act, threads=args.threads,
                          budget=args.budget, samples=args.samples, seed=args.seed)
    if args.parity:
        report['parity'] = parity_check(w, G, threads=args.threads, budget=args.budget)
    summary = key_values(report, ['word', 'strategy', 'exact', 'image_size', 'aut_invariant'])
    summary.insert(0, f"group        : {G.name} (order {G.order})")
    emit(args, report, pd.DataFrame(report['classes']), summary)
    return EXIT_OK


def cmd_classes(args: argparse.Namespace, service: GroupService) -> int:
    G = service.load_group(args.group)
    classes = service.classes(G)
    rows = [{'representative': G.literal(c.representative),
             'element_order': G.element_order(c.representative),
             'class_size': c.size} for c in classes]
    report: Dict[str, Any] = {
        'schema': SCHEMA_VERSION,
        'command': 'classes',
        'group': G.describe(),
        'class_number': len(classes),
        'center_order': center(G).order,
        'exponent': exponent(G),
        'derived_series': [H.order for H in derived_series(whole_group(G))],
        'classes': rows,
    }
    summary = key_values(report, ['class_number', 'center_order', 'exponent', 'derived_series'])
    emit(args, report, pd.DataFrame(rows), summary)
    return EXIT_OK


def cmd_auts(args: argparse.Namespace, service: GroupService) -> int:
    G = service.load_group(args.group)
    act = service.automorphisms(G)
    orbits = aut_orbits(act)
    rows = [{'representative': G.literal(int(o[0])),
             'element_order': G.element_order(int(o[0])),
             'orbit_size': int(o.size)} for o in orbits]
    report = {
        'schema': SCHEMA_VERSION,
        'command': 'auts',
        'group': G.describe(),
        'automorphisms': act.to_dict(),
        'aut_orbits': len(orbits),
        'orbits': rows,
    }
    summary = [f"|Aut({G.name})| = {act.order}, inner {act.inner_count}, "
               f"outer {act.outer_count}, {len(orbits)} orbits on elements"]
    emit(args, report, pd.DataFrame(rows), summary)
    return EXIT_OK


def cmd_pairs(args: argparse.Namespace, service: GroupService) -> int:
    G = service.load_group(args.group)
    table = service.pairs(G, PairMode(args.mode), threads=args.threads)
    report = {'schema': SCHEMA_VERSION, 'command': 'pairs', 'group': G.describe(),
              **table.to_dict(G)}
    rows = [{'a': G.literal(a), 'b': G.literal(b), 'orbit_size': int(size)}
            for (a, b), size in zip(map(table.pair, table.representatives), table.orbit_sizes())]
    summary = key_values(report, ['mode', 'l', 'r', 'generation_probability', 'free_action',
                                  'socle_embeds_in_aut'])
    emit(args, report, pd.DataFrame(rows).head(args.limit) if rows else None, summary)
    return EXIT_OK


def cmd_gk(args: argparse.Namespace, service: GroupService) -> int:
    G = service.load_group(args.group)
    table = service.pairs(G, PairMode.PLAIN, threads=args.threads)
    report = {'schema': SCHEMA_VERSION, 'command': 'gk', **guralnick_kantor_check(G, table)}
    emit(args, report, summary=key_values(report, ['group', 'elements_checked', 'holds']))
    return EXIT_OK if report['holds'] else EXIT_VERIFICATION_FAILED


def register_group_commands(subparsers: Any, parents: List[argparse.ArgumentParser]) -> None:
    image = subparsers.add_parser('image', parents=parents, help="Compute the verbal image w(G)")
    add_group_argument(image)
    image.add_argument('--word', required=True, help='Word, e.g. "x^15" or "[x,y]"')
    image.add_argument('--rank', type=int, default=2, help="Number of variables k")
    image.add_argument('--strategy', choices=STRATEGIES, default='naive')
    image.add_argument('--samples', type=int, default=DEFAULT_SAMPLES,
                       help="Tuples evaluated by the sample strategy")
    image.add_argument('--seed', type=int, default=0)
    image.add_argument('--aut', action='store_true', help="Also check Aut(G)-invariance")
    image.add_argument('--parity', action='store_true',
                       help="Exponent-sum parity facts (symmetric groups only)")
    image.set_defaults(handler=cmd_image)

    classes = subparsers.add_parser('classes', parents=parents, help="Conjugacy classes, center, exponent")
    add_group_argument(classes)
    classes.set_defaults(handler=cmd_classes)

    auts = subparsers.add_parser('auts', parents=parents, help="Automorphism group by brute force")
    add_group_argument(auts)
    auts.set_defaults(handler=cmd_auts)

    pairs = subparsers.add_parser('pairs', parents=parents, help="Generating pairs and their Aut-orbits")
    add_group_argument(pairs)
    pairs.add_argument('--mode', choices=[m.value for m in PairMode], default='plain')
    pairs.add_argument('--limit', type=int, default=50, help="Orbit rows shown in the table")
    pairs.set_defaults(handler=cmd_pairs)

    gk = subparsers.add_parser('gk', parents=parents, help="Every nonidentity element lies on a generating pair")
    add_group_argument(gk)
    gk.set_defaults(handler=cmd_gk)

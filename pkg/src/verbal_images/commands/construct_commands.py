"""
Construction commands: classify, realize, star, lemma22, audit, audit-power.
"""

import argparse
import logging
from typing import Any, List

import numpy as np
import pandas as pd

from ..constants import EXIT_OK, EXIT_VERIFICATION_FAILED, SCHEMA_VERSION
from ..core.construct import (
    NOT_REALIZABLE, audit_images, classify_subset, conjugate_power_audit, realize,
    sample_independent_family, star_check,
)
from ..core.groups import FiniteGroup
from ..core.pair_table import PairMode
from ..core.product_check import lemma22_suite
from ..core.subgroups import socle_candidate
from ..core.word_search import SEARCH_STRATEGIES
from ..services.group_service import GroupService
from .group_commands import add_group_argument
from .output import emit, key_values

logger = logging.getLogger(__name__)

REALIZED_STATUSES = ('realized', NOT_REALIZABLE)


def _symmetric(service: GroupService, n: int) -> FiniteGroup:
    return service.load_group(f"sym:{n}")


def cmd_classify(args: argparse.Namespace, service: GroupService) -> int:
    G = _symmetric(service, args.n)
    act = service.automorphisms(G)
    A = service.load_subset(G, args.set)
    result = classify_subset(args.n, A, G, act)
    report = {'schema': SCHEMA_VERSION, 'command': 'classify', 'subset': A.to_dict(G),
              **result.to_dict(G)}
    emit(args, report, summary=key_values(report, [
        'n', 'case', 'subset_size', 'contains_identity', 'aut_invariant', 'inside_alt',
        'contains_two_power', 'failed_condition']))
    return EXIT_OK


def cmd_realize(args: argparse.Namespace, service: GroupService) -> int:
    G = _symmetric(service, args.n)
    act = service.automorphisms(G)
    table = service.pairs(G, PairMode.ALMOST_SIMPLE, threads=args.threads)
    A = service.load_subset(G, args.set)
    max_nulls = args.max_nulls if args.max_nulls is not None else service.setting('default_max_nulls')
    state_cap = args.state_cap if args.state_cap is not None else service.setting('search_state_cap')
    report = realize(args.n, A, G, act, table, args.max_len, args.strategy, seed=args.seed,
                     max_nulls=max_nulls, state_cap=state_cap, threads=args.threads,
                     budget=args.budget)
    emit(args, report, summary=key_values(report, ['n', 'status', 'word', 'image_size',
                                                   'nulls_available', 'message']))
    return EXIT_OK if report['status'] in REALIZED_STATUSES else EXIT_VERIFICATION_FAILED


def cmd_star(args: argparse.Namespace, service: GroupService) -> int:
    S = service.load_group(args.group)
    act = service.automorphisms(S)
    table = service.pairs(S, PairMode.QUASISIMPLE, threads=args.threads)
    report = star_check(S, act, table)
    emit(args, report, summary=key_values(report, [
        'center_order', 'aut_order', 'class_number', 'l', 'r', 'k_worst', 'star_holds']))
    return EXIT_OK if report['star_holds'] else EXIT_VERIFICATION_FAILED


def cmd_lemma22(args: argparse.Namespace, service: GroupService) -> int:
    G = service.load_group(args.group)
    act = service.automorphisms(G)
    S = socle_candidate(G)
    mode = PairMode.PLAIN if S.order == G.order else PairMode.ALMOST_SIMPLE
    table = service.pairs(G, mode, threads=args.threads)
    rng = np.random.default_rng(args.seed)
    families = [sample_independent_family(table, args.copies, rng, G=G)
                for _ in range(args.families)]
    suite = lemma22_suite(G, S, families, act)
    report = {'schema': SCHEMA_VERSION, 'command': 'lemma22', 'group': G.describe(),
              'socle_order': S.order, 'copies': args.copies, 'seed': args.seed, **suite}
    emit(args, report, summary=key_values(report, ['copies', 'families', 'passed', 'passes']))
    return EXIT_OK if suite['passes'] else EXIT_VERIFICATION_FAILED


def cmd_audit(args: argparse.Namespace, service: GroupService) -> int:
    G = _symmetric(service, args.n)
    act = service.automorphisms(G)
    report = audit_images(args.n, G, act, args.count, args.max_len, seed=args.seed,
                          threads=args.threads, budget=args.budget)
    cases = pd.DataFrame([{'case': k, 'words': v} for k, v in report['cases'].items()])
    emit(args, report, cases, key_values(report, ['n', 'count', 'max_len', 'seed', 'passes']))
    return EXIT_OK if report['passes'] else EXIT_VERIFICATION_FAILED


def cmd_audit_power(args: argparse.Namespace, service: GroupService) -> int:
    G = _symmetric(service, args.n)
    report = {'schema': SCHEMA_VERSION, 'command': 'audit-power', **conjugate_power_audit(args.n, G)}
    emit(args, report, pd.DataFrame(report['per_cycle_type']),
         key_values(report, ['n', 'exponent', 'odd_part', 'elements_checked', 'passes']))
    return EXIT_OK if report['passes'] else EXIT_VERIFICATION_FAILED


def register_construct_commands(subparsers: Any, parents: List[argparse.ArgumentParser]) -> None:
    classify = subparsers.add_parser('classify', parents=parents, help="Is a subset of Sym(n) a verbal image?")
    classify.add_argument('--n', type=int, required=True)
    classify.add_argument('--set', required=True,
                          help="Subset document path or inline subset text, e.g. two-power")
    classify.set_defaults(handler=cmd_classify)

    realize_parser = subparsers.add_parser('realize', parents=parents, help="Find a word whose image is the subset")
    realize_parser.add_argument('--n', type=int, required=True)
    realize_parser.add_argument('--set', required=True)
    realize_parser.add_argument('--max-len', type=int, default=10)
    realize_parser.add_argument('--strategy', choices=SEARCH_STRATEGIES, default='bfs')
    realize_parser.add_argument('--seed', type=int, default=0)
    realize_parser.add_argument('--max-nulls', type=int, default=None)
    realize_parser.add_argument('--state-cap', type=int, default=None)
    realize_parser.set_defaults(handler=cmd_realize)

    star = subparsers.add_parser('star', parents=parents, help="Check r >= k for a quasisimple group")
    add_group_argument(star)
    star.set_defaults(handler=cmd_star)

    lemma = subparsers.add_parser('lemma22', parents=parents, help="Subdirect products of independent pairs")
    add_group_argument(lemma)
    lemma.add_argument('--copies', type=int, default=2)
    lemma.add_argument('--families', type=int, default=1)
    lemma.add_argument('--seed', type=int, default=0)
    lemma.set_defaults(handler=cmd_lemma22)

    audit = subparsers.add_parser('audit', parents=parents, help="Classify the images of random words")
    audit.add_argument('--n', type=int, required=True)
    audit.add_argument('--count', type=int, default=100)
    audit.add_argument('--max-len', type=int, default=12)
    audit.add_argument('--seed', type=int, default=0)
    audit.set_defaults(handler=cmd_audit)

    power = subparsers.add_parser('audit-power', parents=parents, help="Exhaustive conjugate power audit")
    power.add_argument('--n', type=int, required=True)
    power.set_defaults(handler=cmd_audit_power)

"""
Group service: resolves group specs and serves cached derived structures.
"""

import logging
import re
from pathlib import Path
from typing import Any, Dict, List, Optional

from ..config import APP_CONFIG, get_setting
from ..constants import ERROR_UNKNOWN_BUILTIN
from ..exceptions import FormatError
from ..core.automorphisms import AutAction, automorphism_group
from ..core.groups import (
    FiniteGroup, alternating_group, cyclic_group, special_linear_group, symmetric_group,
)
from ..core.pair_table import PairMode, PairTable, pair_table
from ..core.subgroups import ConjugacyClass, conjugacy_classes
from ..core.subsets import SubsetResolver, SubsetSpec
from ..core.word_search import TargetAssignment
from ..utils.logging_config import log_execution_time
from .cache_service import cached, get_cache
from .file_service import FileService

logger = logging.getLogger(__name__)

BUILTIN_PATTERN = re.compile(r'^(sym|alt|cyclic):(\d+)$|^sl:(\d+):(\d+)$')


class GroupService:
    """
    Loads groups and computes their classes, automorphism groups and pair
    tables once per group id and cap setting.
    """

    _cacheable = True

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = dict(config) if config is not None else dict(APP_CONFIG)
        self.file_service = FileService()
        get_cache(self.config)
        logger.debug("GroupService initialized")

    def setting(self, key: str) -> Any:
        return get_setting(key, self.config)

    # --- groups ---
    @staticmethod
    def is_builtin(spec: str) -> bool:
        return BUILTIN_PATTERN.match(spec.strip()) is not None

    @log_execution_time
    def load_group(self, spec: str) -> FiniteGroup:
        """
        `sym:n`, `alt:n`, `sl:n:q`, `cyclic:n`, or the path of a group document.
        """
        spec = spec.strip()
        return self._load_group(spec, self.setting('max_group_order'),
                                self.setting('max_table_order'),
                                self.setting('cayley_full_associativity_max'),
                                self.setting('cayley_associativity_samples'))

    @cached("group")
    def _load_group(self, spec: str, max_order: int, max_table_order: int,
                    full_check_max: int, samples: int) -> FiniteGroup:
        match = BUILTIN_PATTERN.match(spec)
        caps = {'max_order': max_order, 'max_table_order': max_table_order}
        if match:
            family, n, sl_n, sl_q = match.groups()
            if family == 'sym':
                return symmetric_group(int(n), **caps)
            if family == 'alt':
                return alternating_group(int(n), **caps)
            if family == 'cyclic':
                if int(n) < 1:
                    raise FormatError(ERROR_UNKNOWN_BUILTIN.format(spec))
                return cyclic_group(int(n), max_order=max_order)
            return special_linear_group(int(sl_n), int(sl_q), **caps)
        if ':' in spec and not Path(spec).exists():
            raise FormatError(ERROR_UNKNOWN_BUILTIN.format(spec))
        text = self.file_service.read_text(spec)
        G = self.file_service.parse_group_document(
            text, default_name=Path(spec).stem, full_check_max=full_check_max,
            samples=samples, **caps)
        logger.info(f"Loaded {G.name} from {spec}: order {G.order}")
        return G

    # --- derived structures ---
    @cached("classes")
    def classes(self, G: FiniteGroup) -> List[ConjugacyClass]:
        return conjugacy_classes(G)

    def automorphisms(self, G: FiniteGroup) -> AutAction:
        return self._automorphisms(G, self.setting('max_aut_order'))

    @cached("aut")
    def _automorphisms(self, G: FiniteGroup, max_order: int) -> AutAction:
        return automorphism_group(G, max_order=max_order)

    def pairs(self, G: FiniteGroup, mode: PairMode = PairMode.PLAIN,
              threads: Optional[int] = None) -> PairTable:
        mode = PairMode(mode)
        threads = threads if threads is not None else self.setting('threads')
        return self._pairs(G, mode.value, self.setting('max_pair_table_order'), threads)

    @cached("pairs")
    def _pairs(self, G: FiniteGroup, mode: str, max_order: int, threads: int) -> PairTable:
        act = self.automorphisms(G)
        return pair_table(G, act, PairMode(mode), max_order=max_order, threads=threads)

    # --- documents ---
    def resolver(self, G: FiniteGroup) -> SubsetResolver:
        return SubsetResolver(G, lambda: self.automorphisms(G).element_labels())

    def load_subset(self, G: FiniteGroup, source: str) -> SubsetSpec:
        """A subset document path, or the subset text itself (e.g. `two-power`)."""
        path = Path(source)
        if path.is_file():
            return self.resolver(G).parse(self.file_service.read_text(path), label=path.stem)
        return self.resolver(G).parse(source, label=source)

    def load_target(self, G: FiniteGroup, source: str, k: int = 2) -> TargetAssignment:
        return TargetAssignment.from_document(G, self.file_service.read_text(source), k=k)


# Global group service instance
_group_service_instance: Optional[GroupService] = None


def get_group_service(config: Optional[Dict[str, Any]] = None) -> GroupService:
    """Get or create the global group service; a config replaces the current one."""
    global _group_service_instance
    if _group_service_instance is None or config is not None:
        _group_service_instance = GroupService(config)
    return _group_service_instance

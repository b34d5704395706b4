"""
File service for reading group, subset and target documents.
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

import numpy as np

from ..constants import ALLOWED_FILE_EXTENSIONS, MAX_FILE_SIZE_MB
from ..exceptions import FormatError
from ..core.groups import (
    FiniteGroup, from_cayley_table, from_matrices, from_permutations, parse_cycles, parse_matrix,
)
from ..core.finite_field import get_field

logger = logging.getLogger(__name__)

GROUP_KINDS = ('perm', 'matrix', 'cayley')
HEADER_KEYS = {'kind', 'degree', 'dim', 'field', 'order', 'name'}
ENUMERATION_CAPS = ('max_order', 'max_table_order')
CAYLEY_CAPS = ('max_order', 'full_check_max', 'samples')


class FileService:
    """Service for file handling operations."""

    @staticmethod
    def get_file_extension(filename: Union[str, Path]) -> str:
        """Get file extension from filename."""
        return Path(filename).suffix.lower()

    @staticmethod
    def validate_file(path: Union[str, Path]) -> Path:
        """
        Check that a document exists, has an accepted extension and fits the size limit.

        Raises:
            FormatError: if any check fails
        """
        path = Path(path)
        if not path.is_file():
            raise FormatError(f"No such file: {path}")
        ext = FileService.get_file_extension(path)
        if ext not in ALLOWED_FILE_EXTENSIONS:
            raise FormatError(f"Unsupported file extension '{ext}'; expected one of "
                              f"{sorted(e for e in ALLOWED_FILE_EXTENSIONS if e)}")
        size_mb = path.stat().st_size / (1024 * 1024)
        if size_mb > MAX_FILE_SIZE_MB:
            raise FormatError(f"File too large: {size_mb:.1f} MB (max: {MAX_FILE_SIZE_MB} MB)")
        return path

    @staticmethod
    def read_text(path: Union[str, Path]) -> str:
        """Read a validated UTF-8 document."""
        path = FileService.validate_file(path)
        try:
            return path.read_text(encoding='utf-8')
        except UnicodeDecodeError as e:
            raise FormatError(f"{path} is not UTF-8 text: {e}")

    @staticmethod
    def split_group_document(text: str) -> Tuple[Dict[str, str], List[str]]:
        """
        Header lines `key: value` first, body lines after; '#' starts a comment.
        """
        header: Dict[str, str] = {}
        body: List[str] = []
        for raw in text.splitlines():
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition(':')
            if not body and sep and key.strip().lower() in HEADER_KEYS:
                header[key.strip().lower()] = value.strip()
            else:
                body.append(line)
        return header, body

    @staticmethod
    def _int_header(header: Dict[str, str], key: str) -> int:
        if key not in header:
            raise FormatError(f"Group document needs a '{key}:' header")
        try:
            return int(header[key])
        except ValueError:
            raise FormatError(f"Header '{key}' must be an integer, got '{header[key]}'")

    @staticmethod
    def parse_group_document(text: str, default_name: str = 'group',
                             **caps: Any) -> FiniteGroup:
        """
        Build a group from a group document.

        Args:
            text: Document contents
            default_name: Name used when the document has no 'name:' header
            **caps: max_order / max_table_order forwarded to the constructors

        Returns:
            The enumerated FiniteGroup
        """
        header, body = FileService.split_group_document(text)
        enum_caps = {k: v for k, v in caps.items() if k in ENUMERATION_CAPS}
        kind = header.get('kind', '').lower()
        name = header.get('name', default_name)
        if kind not in GROUP_KINDS:
            raise FormatError(f"Group document kind must be one of {GROUP_KINDS}, got '{kind}'")

        if kind == 'perm':
            degree = FileService._int_header(header, 'degree')
            gens = [parse_cycles(line, degree) for line in body]
            return from_permutations(name, degree, gens, **enum_caps)

        if kind == 'matrix':
            dim = FileService._int_header(header, 'dim')
            q = FileService._int_header(header, 'field')
            field = get_field(q)
            mats = [parse_matrix(line, dim, field) for line in body]
            return from_matrices(name, dim, q, mats, **enum_caps)

        order = FileService._int_header(header, 'order')
        if len(body) != order:
            raise FormatError(f"Cayley table needs {order} rows, got {len(body)}")
        try:
            table = np.array([[int(x) for x in line.split()] for line in body], dtype=np.int64)
        except ValueError as e:
            raise FormatError(f"Cayley table entries must be integers: {e}")
        if table.shape != (order, order):
            raise FormatError(f"Cayley table must be {order}x{order}")
        cayley_caps = {k: v for k, v in caps.items() if k in CAYLEY_CAPS}
        return from_cayley_table(name, table, **cayley_caps)

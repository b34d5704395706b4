"""
Unit tests for service layer functionality in verbal-images.
Tests the cache service, file service and group service.
"""

from unittest.mock import patch

import pytest

# Import the modules under test
from verbal_images.core.groups import GroupKind, symmetric_group
from verbal_images.core.pair_table import PairMode
from verbal_images.exceptions import CapacityError, FormatError, GroupValidationError
from verbal_images.services.cache_service import CacheService, cached, get_cache
from verbal_images.services.file_service import FileService
from verbal_images.services.group_service import GroupService, get_group_service


class TestCacheService:
    """Test cache service functionality"""

    @pytest.fixture
    def cache_service(self):
        """Create a cache service instance for testing"""
        return CacheService(max_entries=3, ttl_seconds=60)

    def test_cache_set_and_get(self, cache_service):
        """Test basic cache set and get operations"""
        cache_service.set("key", {"order": 120})
        assert cache_service.get("key") == {"order": 120}

    def test_cache_get_nonexistent_key(self, cache_service):
        """Test getting non-existent cache key"""
        assert cache_service.get("nonexistent_key") is None
        assert cache_service.get_stats()['misses'] == 1

    def test_cache_clear(self, cache_service):
        """Test cache clearing functionality"""
        cache_service.set("key1", "value1")
        cache_service.set("key2", "value2")
        cache_service.clear()
        assert cache_service.get("key1") is None
        assert cache_service.get_stats()['entries'] == 0

    def test_cache_expiration(self, cache_service):
        """Test entries expire after the TTL"""
        with patch('verbal_images.services.cache_service.time.time', return_value=1000.0):
            cache_service.set("key", "value")
        with patch('verbal_images.services.cache_service.time.time', return_value=1061.0):
            assert cache_service.get("key") is None

    def test_cache_size_limit(self, cache_service):
        """Test least recently used entries are evicted"""
        for i in range(3):
            cache_service.set(f"key{i}", i)
        cache_service.get("key0")
        cache_service.set("key3", 3)
        assert cache_service.get("key1") is None
        assert cache_service.get("key0") == 0
        assert cache_service.get_stats()['entries'] == 3

    def test_hit_rate(self, cache_service):
        """Test hit statistics"""
        cache_service.set("key", 1)
        cache_service.get("key")
        cache_service.get("other")
        assert cache_service.get_stats()['hit_rate'] == 0.5

    def test_groups_keyed_by_content(self, cache_service):
        """Test equal groups give equal keys regardless of identity"""
        a = cache_service._generate_key("aut", symmetric_group(4))
        b = cache_service._generate_key("aut", symmetric_group(4))
        c = cache_service._generate_key("aut", symmetric_group(3))
        assert a == b
        assert a != c

    def test_cached_decorator(self, fresh_cache):
        """Test a decorated function runs once per argument set"""
        calls = []

        @cached("square")
        def square(n):
            calls.append(n)
            return n * n

        assert square(4) == 16
        assert square(4) == 16
        assert square(5) == 25
        assert calls == [4, 5]

    def test_cached_decorator_logs_hits(self, fresh_cache):
        """Test cache hits report the hit rate"""
        @cached("cube")
        def cube(n):
            return n ** 3

        with patch('verbal_images.services.cache_service.performance_logger') as perf:
            cube(2)
            perf.log_cache_hit.assert_not_called()
            cube(2)
        perf.log_cache_hit.assert_called_once_with("cube", fresh_cache.get_stats()['hit_rate'])

    def test_global_cache(self):
        """Test the global instance is shared"""
        assert get_cache() is get_cache()

    def test_global_cache_settings(self, fresh_cache):
        """Test the configured size and lifetime reach the global instance"""
        cache = get_cache({'max_cache_entries': 2, 'cache_ttl_seconds': 5})
        assert cache is fresh_cache
        assert cache.max_entries == 2
        assert cache.ttl_seconds == 5
        for i in range(4):
            cache.set(f"key{i}", i)
        assert cache.get_stats()['entries'] == 2


class TestFileService:
    """Test group document parsing"""

    @pytest.fixture
    def file_service(self):
        return FileService()

    def test_permutation_document(self, file_service, perm_document):
        """Test a permutation group document"""
        G = file_service.parse_group_document(file_service.read_text(perm_document))
        assert G.name == "s4-doc"
        assert G.order == 24
        assert G.kind is GroupKind.PERMUTATION

    def test_cayley_document(self, file_service, cayley_document):
        """Test a Cayley table document"""
        G = file_service.parse_group_document(file_service.read_text(cayley_document),
                                              default_name="c3")
        assert G.order == 3
        assert G.name == "c3"
        assert G.kind is GroupKind.CAYLEY

    def test_matrix_document(self, file_service):
        """Test SL(2,3) from two transvections"""
        text = "kind: matrix\ndim: 2\nfield: 3\n[[1,1],[0,1]]\n[[1,0],[1,1]]\n"
        assert file_service.parse_group_document(text).order == 24

    def test_split_document(self, file_service):
        """Test headers, comments and body lines"""
        header, body = file_service.split_group_document(
            "# comment\nkind: perm\ndegree: 3\n(1 2)  # swap\n\n(1 2 3)\n")
        assert header == {'kind': 'perm', 'degree': '3'}
        assert body == ['(1 2)', '(1 2 3)']

    @pytest.mark.parametrize("text", [
        "degree: 3\n(1 2)\n",
        "kind: perm\n(1 2)\n",
        "kind: perm\ndegree: three\n(1 2)\n",
        "kind: cayley\norder: 2\n0 1\n",
        "kind: cayley\norder: 2\n0 1\n1 x\n",
        "kind: cayley\norder: 2\n0 1\n1 0 1\n",
    ])
    def test_malformed_documents(self, file_service, text):
        """Test malformed group documents"""
        with pytest.raises(FormatError):
            file_service.parse_group_document(text)

    def test_invalid_group(self, file_service):
        """Test a Cayley table that is not a group"""
        with pytest.raises(GroupValidationError):
            file_service.parse_group_document("kind: cayley\norder: 2\n0 1\n1 1\n")

    def test_caps_forwarded(self, file_service, perm_document):
        """Test enumeration caps reach the constructors"""
        with pytest.raises(CapacityError):
            file_service.parse_group_document(file_service.read_text(perm_document), max_order=10)

    def test_validate_file(self, file_service, tmp_path):
        """Test missing files and unsupported extensions"""
        with pytest.raises(FormatError):
            file_service.validate_file(tmp_path / "missing.grp")
        bad = tmp_path / "group.csv"
        bad.write_text("kind: perm")
        with pytest.raises(FormatError):
            file_service.validate_file(bad)

    def test_file_too_large(self, file_service, perm_document):
        """Test the size limit"""
        with patch('verbal_images.services.file_service.MAX_FILE_SIZE_MB', 0):
            with pytest.raises(FormatError):
                file_service.validate_file(perm_document)

    def test_not_utf8(self, file_service, tmp_path):
        """Test binary documents"""
        path = tmp_path / "binary.grp"
        path.write_bytes(b"\xff\xfe\x00kind")
        with pytest.raises(FormatError):
            file_service.read_text(path)

    def test_file_extension(self, file_service):
        """Test extensions are compared case-insensitively"""
        assert file_service.get_file_extension("groups/S4.GRP") == ".grp"
        assert file_service.get_file_extension("s4") == ""


class TestGroupService:
    """Test group resolution and cached derived structures"""

    @pytest.fixture
    def group_service(self, fresh_cache):
        return GroupService()

    @pytest.mark.parametrize("spec,order", [
        ("sym:4", 24), ("alt:5", 60), ("sl:2:3", 24), ("cyclic:6", 6),
    ])
    def test_builtins(self, group_service, spec, order):
        """Test builtin group specs"""
        assert group_service.load_group(spec).order == order

    def test_builtin_detection(self):
        """Test the builtin pattern"""
        assert GroupService.is_builtin("sym:5")
        assert GroupService.is_builtin("sl:2:5")
        assert not GroupService.is_builtin("groups/s4.grp")

    @pytest.mark.parametrize("spec", ["foo:1", "cyclic:0", "sym:x"])
    def test_unknown_specs(self, group_service, spec):
        """Test unknown builtins and missing files"""
        with pytest.raises(FormatError):
            group_service.load_group(spec)

    def test_group_from_file(self, group_service, perm_document):
        """Test loading a document path"""
        G = group_service.load_group(str(perm_document))
        assert G.name == "s4-doc"

    def test_groups_are_cached(self, group_service):
        """Test repeated loads return the cached group"""
        assert group_service.load_group("sym:4") is group_service.load_group("sym:4")

    def test_config_caps(self, fresh_cache):
        """Test configured caps apply"""
        service = GroupService({'max_group_order': 100})
        with pytest.raises(CapacityError):
            service.load_group("sym:6")

    def test_config_sizes_cache(self, fresh_cache):
        """Test the service applies its cache settings"""
        GroupService({'max_cache_entries': 7, 'cache_ttl_seconds': 30})
        assert get_cache().max_entries == 7
        assert get_cache().ttl_seconds == 30

    def test_automorphisms_cached(self, group_service):
        """Test Aut(G) is computed once per group"""
        G = group_service.load_group("alt:5")
        assert group_service.automorphisms(G) is group_service.automorphisms(G)
        assert group_service.automorphisms(G).order == 120

    def test_pairs(self, group_service):
        """Test pair tables through the service"""
        G = group_service.load_group("alt:5")
        table = group_service.pairs(G, PairMode.PLAIN, threads=1)
        assert table.r == 19

    def test_classes(self, group_service):
        """Test conjugacy classes through the service"""
        assert len(group_service.classes(group_service.load_group("sym:5"))) == 7

    def test_load_subset_inline_and_file(self, group_service, tmp_path):
        """Test subset documents given inline or as a path"""
        G = group_service.load_group("alt:5")
        assert group_service.load_subset(G, "aut-orbit-of: (1 2 3 4 5)").size == 24
        path = tmp_path / "a.set"
        path.write_text("identity\nclass-of: (1 2 3)\n")
        A = group_service.load_subset(G, str(path))
        assert A.size == 21
        assert A.label == "a"

    def test_load_target(self, group_service, tmp_path):
        """Test target documents are read from files"""
        G = group_service.load_group("sym:3")
        path = tmp_path / "t.json"
        path.write_text('[{"tuple": ["(1 2)", "(2 3)"], "target": "(1 2)"}]')
        t = group_service.load_target(G, str(path))
        assert len(t.constraints) == 1

    def test_global_service(self):
        """Test a config replaces the global service"""
        first = get_group_service()
        assert get_group_service() is first
        replaced = get_group_service({'threads': 2})
        assert replaced is not first
        assert replaced.setting('threads') == 2
        assert isinstance(replaced.setting('max_group_order'), int)

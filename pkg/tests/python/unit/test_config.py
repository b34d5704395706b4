"""
Unit tests for configuration management in verbal-images.
Tests configuration loading, validation and setting lookup.
"""

import json
from unittest.mock import mock_open, patch

import pytest

# Import the modules under test
from verbal_images.config import DEFAULT_CONFIG, get_setting, load_config, validate_config
from verbal_images.constants import EVALUATION_BUDGET, MAX_GROUP_ORDER


class TestConfigLoading:
    """Test configuration loading functionality"""

    def test_load_valid_config(self, temp_config_file):
        """Test user values override the defaults"""
        config = load_config(temp_config_file)
        assert config['max_group_order'] == 5000
        assert config['threads'] == 2
        assert config['max_aut_order'] == DEFAULT_CONFIG['max_aut_order']

    def test_load_nonexistent_config(self, tmp_path):
        """Test a missing file gives the defaults"""
        assert load_config(tmp_path / "missing.json") == DEFAULT_CONFIG

    def test_load_invalid_json_config(self, tmp_path):
        """Test malformed JSON gives the defaults"""
        invalid_config = tmp_path / "invalid.json"
        invalid_config.write_text("{invalid json content")
        assert load_config(invalid_config) == DEFAULT_CONFIG

    def test_load_non_object(self, tmp_path):
        """Test a JSON list is not a config"""
        path = tmp_path / "list.json"
        path.write_text("[1, 2, 3]")
        assert load_config(path) == DEFAULT_CONFIG

    def test_load_empty_config(self, tmp_path):
        """Test an empty object keeps every default"""
        empty_config = tmp_path / "empty.json"
        empty_config.write_text("{}")
        assert load_config(empty_config) == DEFAULT_CONFIG

    def test_environment_variable(self, temp_config_file):
        """Test $VERBAL_IMAGES_CONFIG is used when no path is given"""
        with patch.dict('os.environ', {'VERBAL_IMAGES_CONFIG': str(temp_config_file)}):
            assert load_config()['evaluation_budget'] == 10 ** 6

    @patch('builtins.open', new_callable=mock_open, read_data='{"threads": 8}')
    def test_load_config_with_mock(self, mock_file):
        """Test config loading with a mocked file system"""
        config = load_config("mocked_config.json")
        assert config['threads'] == 8
        mock_file.assert_called_once_with("mocked_config.json", 'r', encoding='utf-8')

    def test_returns_copy(self, tmp_path):
        """Test callers cannot mutate the defaults"""
        config = load_config(tmp_path / "missing.json")
        config['threads'] = 99
        assert DEFAULT_CONFIG['threads'] != 99


class TestConfigValidation:
    """Test configuration validation functionality"""

    def test_validate_complete_config(self):
        """Test every default passes validation"""
        assert validate_config(DEFAULT_CONFIG) == DEFAULT_CONFIG

    def test_unknown_keys_dropped(self, capture_logs):
        """Test unknown keys are ignored with a warning"""
        assert validate_config({'default_theme': 'BOOTSTRAP'}) == {}
        assert "unknown config key" in capture_logs.text

    @pytest.mark.parametrize("value", [0, -1, "10", 1.5, True, None])
    def test_invalid_values_dropped(self, value):
        """Test only positive integers survive"""
        assert validate_config({'threads': value}) == {}

    def test_invalid_value_falls_back(self, tmp_path):
        """Test a bad value in a file keeps the default"""
        path = tmp_path / "config.json"
        path.write_text(json.dumps({'evaluation_budget': -5, 'threads': 3}))
        config = load_config(path)
        assert config['evaluation_budget'] == EVALUATION_BUDGET
        assert config['threads'] == 3


class TestSettings:
    """Test setting lookup"""

    def test_get_setting_from_config(self):
        """Test an explicit config wins"""
        assert get_setting('max_group_order', {'max_group_order': 7}) == 7

    def test_get_setting_default(self):
        """Test missing keys fall back to the defaults"""
        assert get_setting('max_group_order', {}) == MAX_GROUP_ORDER

    def test_unknown_setting(self):
        """Test unknown keys are a programming error"""
        with pytest.raises(KeyError):
            get_setting('no_such_setting', {})

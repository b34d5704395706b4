"""
Unit tests for the verbal-images command line.
Tests exit codes, JSON reports and error output.
"""

import json

import pytest

# Import the modules under test
from verbal_images.app import build_parser, run
from verbal_images.constants import (
    EXIT_CAPACITY, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED,
)


@pytest.fixture(autouse=True)
def default_config(monkeypatch, tmp_path, fresh_cache):
    """Run every command with the built-in defaults"""
    monkeypatch.setenv('VERBAL_IMAGES_CONFIG', str(tmp_path / "none.json"))


def run_json(capsys, argv):
    """Run a command with --json and parse its report"""
    code = run(argv + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestParser:
    """Test argument parsing"""

    def test_subcommand_required(self):
        """Test a bare invocation is a usage error"""
        assert run([]) == EXIT_USAGE

    def test_missing_required_option(self):
        """Test image without --group and --word"""
        assert run(["image"]) == EXIT_USAGE

    def test_options_after_subcommand(self):
        """Test common options are accepted on either side"""
        parser = build_parser()
        before = parser.parse_args(["--threads", "2", "classes", "--group", "sym:3"])
        after = parser.parse_args(["classes", "--group", "sym:3", "--threads", "2"])
        assert before.threads == after.threads == 2

    def test_bad_threads(self, capsys):
        """Test non-positive thread counts"""
        assert run(["classes", "--group", "sym:3", "--threads", "0"]) == EXIT_USAGE
        assert "error:" in capsys.readouterr().err


class TestGroupCommands:
    """Test image, classes, auts, pairs and gk"""

    def test_image(self, capsys):
        """Test x^15 over Sym(5) as JSON"""
        code, report = run_json(capsys, ["image", "--group", "sym:5", "--word", "x^15", "--rank", "1"])
        assert code == EXIT_OK
        assert report['image_size'] == 56
        assert report['exact']

    def test_image_table(self, capsys):
        """Test the plain-text report"""
        assert run(["image", "--group", "sym:4", "--word", "[x,y]"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "image_size" in out
        assert "group" in out

    def test_image_over_budget(self, capsys):
        """Test a budget too small for the naive sweep"""
        code = run(["image", "--group", "sym:5", "--word", "[x,y]", "--budget", "10", "--json"])
        assert code == EXIT_CAPACITY
        error = json.loads(capsys.readouterr().err)
        assert error['error'] == "CapacityError"
        assert error['needed'] == 14400

    def test_unknown_group(self, capsys):
        """Test an unknown builtin"""
        assert run(["classes", "--group", "foo:1"]) == EXIT_USAGE
        assert "error:" in capsys.readouterr().err

    def test_classes(self, capsys):
        """Test conjugacy data of Sym(4)"""
        code, report = run_json(capsys, ["classes", "--group", "sym:4"])
        assert code == EXIT_OK
        assert report['class_number'] == 5
        assert report['exponent'] == 12
        assert report['derived_series'][:3] == [24, 12, 4]

    def test_auts(self, capsys):
        """Test Aut(Alt(5))"""
        assert run(["auts", "--group", "alt:5"]) == EXIT_OK
        assert "120" in capsys.readouterr().out

    def test_pairs(self, capsys):
        """Test the generating pairs of Alt(5)"""
        code, report = run_json(capsys, ["pairs", "--group", "alt:5"])
        assert code == EXIT_OK
        assert report['r'] == 19

    def test_gk(self, capsys):
        """Test every nonidentity element of Alt(5) has a partner"""
        code, report = run_json(capsys, ["gk", "--group", "alt:5"])
        assert code == EXIT_OK
        assert report['holds']

    def test_gk_failure(self, capsys):
        """Test Sym(4) fails the partner check"""
        assert run(["gk", "--group", "sym:4"]) == EXIT_VERIFICATION_FAILED


class TestConstructCommands:
    """Test classify, realize, star, lemma22 and the audits"""

    def test_classify(self, capsys):
        """Test the 2-power elements of Sym(5) are the image of x^15"""
        code, report = run_json(capsys, ["classify", "--n", "5", "--set", "two-power"])
        assert code == EXIT_OK
        assert report['case'] == "case-ii"

    def test_classify_even(self, capsys):
        """Test Alt(5) is case i"""
        code, report = run_json(capsys, ["classify", "--n", "5", "--set", "even"])
        assert code == EXIT_OK
        assert report['case'] == "case-i"

    def test_realize_identity(self, capsys):
        """Test the identity subset is realized by the trivial word"""
        code, report = run_json(capsys, ["realize", "--n", "5", "--set", "identity"])
        assert code == EXIT_OK
        assert report['status'] == "realized"

    def test_realize_negative_length(self, capsys):
        """Test a negative search length is a usage error, not a crash"""
        assert run(["realize", "--n", "5", "--set", "identity", "--max-len", "-1"]) == EXIT_USAGE
        assert "error:" in capsys.readouterr().err

    def test_realize_not_realizable(self, capsys):
        """Test a refused subset is a successful answer"""
        code, report = run_json(capsys, ["realize", "--n", "5", "--set", "class-of: (1 2)"])
        assert code == EXIT_OK
        assert report['status'] == "not-realizable"

    @pytest.mark.slow
    def test_star(self, capsys):
        """Test SL(2,5) satisfies r >= k"""
        code, report = run_json(capsys, ["star", "--group", "sl:2:5"])
        assert code == EXIT_OK
        assert report['star_holds']

    def test_lemma22(self, capsys):
        """Test two copies of Sym(5)"""
        code, report = run_json(capsys, ["lemma22", "--group", "sym:5", "--copies", "2"])
        assert code == EXIT_OK
        assert report['passes']
        assert report['socle_order'] == 60

    def test_audit(self, capsys):
        """Test a few short random words over Sym(5)"""
        code, report = run_json(capsys, ["audit", "--n", "5", "--count", "5", "--max-len", "4"])
        assert code == EXIT_OK
        assert report['passes']

    def test_audit_power(self, capsys):
        """Test the conjugate power audit for n = 5"""
        code, report = run_json(capsys, ["audit-power", "--n", "5"])
        assert code == EXIT_OK
        assert report['passes']


class TestBoundsCommands:
    """Test the bounds subcommands"""

    def test_sl2p(self, capsys):
        """Test SL(2,5) with the exact class number"""
        code, report = run_json(capsys, ["bounds", "sl2p", "5"])
        assert code == EXIT_OK
        assert report['verdict']

    def test_sl2p_not_prime(self):
        """Test p must be prime"""
        assert run(["bounds", "sl2p", "4"]) == EXIT_USAGE

    def test_alt_formulas(self, capsys):
        """Test n = 6 without desk-scale overrides"""
        code, report = run_json(capsys, ["bounds", "alt", "6", "--no-exact"])
        assert code == EXIT_OK
        assert report['k_upper'] == "54*sqrt(3)"

    def test_lie(self, capsys):
        """Test a fractional constant"""
        code, report = run_json(capsys, ["bounds", "lie", "2", "5", "7/2"])
        assert code == EXIT_OK
        assert report['caveats']

    def test_maroti(self, capsys):
        """Test k(Sym(5)) against 3^2"""
        code, report = run_json(capsys, ["bounds", "maroti", "--group", "sym:5"])
        assert code == EXIT_OK
        assert report['holds']

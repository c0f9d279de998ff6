import doctest
from pathlib import Path

README = Path(__file__).resolve().parents[1] / "README.md"


def test_readme_snippet_runs():
    result = doctest.testfile(str(README), module_relative=False)
    assert result.failed == 0 and result.attempted > 0

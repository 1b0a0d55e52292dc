import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hgarith.exact import QMatrix  # noqa: E402

# filled by tests/test_acceptance.py: criterion number -> (passed, description)
ACCEPTANCE_RESULTS = {}


def Q(rows):
    return QMatrix(rows)


@pytest.fixture(scope="session")
def sym_pres():
    from reference_values import SYM_ALPHA, SYM_BETA

    from hgarith.cyclo import ParameterPair
    from hgarith.group import presentation_from_parameters

    return presentation_from_parameters(ParameterPair.parse(SYM_ALPHA, SYM_BETA))


@pytest.fixture(scope="session")
def orth_pres():
    from reference_values import ORTH_ALPHA, ORTH_BETA

    from hgarith.cyclo import ParameterPair
    from hgarith.group import presentation_from_parameters

    return presentation_from_parameters(ParameterPair.parse(ORTH_ALPHA, ORTH_BETA))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        passed, text = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {text}")

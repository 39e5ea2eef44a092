import json
import math

import pytest

from exactqfa.core import rotation

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def sabotaged_machine(tmp_path):
    """Writer for a two-state machine rotating by pi/3N instead of pi/2N."""
    def write(n):
        path = tmp_path / f"sabotaged_{n}.json"
        eye = [[1.0, 0.0], [0.0, 1.0]]
        path.write_text(json.dumps({
            "type": "mcqfa", "num_states": 2,
            "unitaries": {"lmark": eye, "a": rotation(math.pi / (3 * n)).tolist(), "rmark": eye},
            "initial_state": 0, "accepting": [0],
        }))
        return path
    return write

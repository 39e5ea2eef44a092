"""JSON machine files.

MCQFA::

    {"type": "mcqfa", "num_states": 2,
     "unitaries": {"lmark": [[...]], "a": [[...]], "rmark": [[...]]},
     "initial_state": 0, "accepting": [0]}

``initial_state`` and ``accepting`` are optional (defaults 0 and [0]).

DFA::

    {"type": "dfa", "tail_len": 0, "cycle_len": 4, "accepting": [0]}
"""
from __future__ import annotations

import json
from pathlib import Path

from .core import SYMBOLS, Mcqfa, UnaryDfa, UnitarityError


class MachineFormatError(ValueError):
    pass


def machine_to_dict(machine: Mcqfa | UnaryDfa) -> dict:
    if isinstance(machine, UnaryDfa):
        return {
            "type": "dfa",
            "tail_len": machine.tail_len,
            "cycle_len": machine.cycle_len,
            "accepting": sorted(machine.accepting),
        }
    return {
        "type": "mcqfa",
        "num_states": machine.num_states,
        "unitaries": {s: machine.unitaries[s].tolist() for s in SYMBOLS},
        "initial_state": machine.initial_state,
        "accepting": sorted(machine.accepting),
    }


def machine_from_dict(data: dict) -> Mcqfa | UnaryDfa:
    """Build a machine; raises MachineFormatError, or UnitarityError for non-orthogonal matrices."""
    if not isinstance(data, dict):
        raise MachineFormatError("machine description must be a JSON object")
    kind = data.get("type")
    try:
        if kind == "dfa":
            return UnaryDfa(int(data["tail_len"]), int(data["cycle_len"]),
                            frozenset(int(q) for q in data.get("accepting", [])))
        if kind == "mcqfa":
            unitaries = data["unitaries"]
            if not isinstance(unitaries, dict):
                raise MachineFormatError("'unitaries' must be an object")
            return Mcqfa(
                num_states=int(data["num_states"]),
                unitaries={s: [[float(x) for x in row] for row in unitaries[s]] for s in SYMBOLS},
                initial_state=int(data.get("initial_state", 0)),
                accepting=frozenset(int(q) for q in data.get("accepting", [0])),
            )
    except UnitarityError:
        raise
    except MachineFormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise MachineFormatError(f"invalid {kind} machine: {exc}") from exc
    raise MachineFormatError(f"unknown machine type {kind!r}")


def dumps(machine: Mcqfa | UnaryDfa) -> str:
    return json.dumps(machine_to_dict(machine), indent=2)


def load_machine(path: str | Path) -> Mcqfa | UnaryDfa:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise MachineFormatError(f"cannot read machine file {path}: {exc}") from exc
    return machine_from_dict(data)


def save_machine(machine: Mcqfa | UnaryDfa, path: str | Path) -> None:
    Path(path).write_text(dumps(machine) + "\n")

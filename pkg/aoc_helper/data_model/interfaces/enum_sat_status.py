from enum import Enum


class SatStatus(Enum):
    """
    Verdict of a single solve call.
    """

    SAT = "SAT"
    UNSAT = "UNSAT"
    UNKNOWN = "UNKNOWN"  # conflict budget exhausted

    def __bool__(self) -> bool:
        return self is SatStatus.SAT

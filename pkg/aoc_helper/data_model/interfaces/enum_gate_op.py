from enum import Enum


class GateOp(Enum):
    """
    Boolean operator of a two-input circuit gate.
    """

    AND = "AND"
    OR = "OR"
    XOR = "XOR"

    @classmethod
    def from_text(cls, text: str) -> "GateOp":
        """
        Convert a gate keyword (case-insensitive) to a GateOp.
        """
        key = text.strip().upper()
        for op in cls:
            if op.value == key:
                return op
        raise ValueError(f"Unknown gate operator: {text}")

    def apply(self, a: int, b: int) -> int:
        """
        Apply the operator bitwise; works on single bits and on packed int lanes.
        """
        if self is GateOp.AND:
            return a & b
        if self is GateOp.OR:
            return a | b
        return a ^ b

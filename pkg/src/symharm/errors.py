class SymHarmError(ValueError):
    """Invalid input to a symharm computation."""


class ScaleFormatError(SymHarmError):
    def __init__(self, reason: str, index: int | None = None):
        self.index = index
        self.reason = reason
        where = f"ratio {index}: " if index is not None else ""
        super().__init__(where + reason)

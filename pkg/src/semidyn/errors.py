class EmptyStringError(IndexError):
    """A deletion was requested on an empty string."""


class UnsupportedOperationError(RuntimeError):
    """The engine cannot perform this border modification."""


class ReplayError(RuntimeError):
    def __init__(self, index: int, op, cause: BaseException):
        super().__init__(f"op #{index} {op!r} failed: {cause}")
        self.index = index
        self.op = op
        self.cause = cause

"""Exception hierarchy shared by every module in the package."""


class GroupError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(GroupError, ValueError):
    """Malformed cycle expression, group file or catalog spec.

    ``token`` names the offending piece of input when one can be isolated;
    ``line`` and ``column`` are 1-based and only set for file input.
    """

    def __init__(self, message, token=None, line=None, column=None):
        self.token = token
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class DegreeMismatchError(GroupError, ValueError):
    pass


class MembershipError(GroupError, ValueError):
    """An element was expected to lie in a group and does not."""


class ResourceLimitError(GroupError):
    """An enumeration cap or evaluation budget was exceeded.

    ``stats`` carries whatever partial statistics the caller had gathered.
    """

    def __init__(self, message, limit=None, stats=None):
        self.limit = limit
        self.stats = dict(stats or {})
        super().__init__(message)


class InvariantError(GroupError, AssertionError):
    """An internal invariant failed. Always indicates a bug."""

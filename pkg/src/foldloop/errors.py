"""Exception hierarchy shared by all foldloop modules."""


class FoldloopError(Exception):
    """Base class for every error raised by this package."""


class BoundsError(FoldloopError, ValueError):
    """A generator index does not fit the declared strand count."""


class WordSyntaxError(FoldloopError, ValueError):
    """Word text contains a token that is not a nonzero integer."""


class PatternMismatch(FoldloopError, ValueError):
    """A braid relation was requested where its pattern does not occur."""


class UnknownComponent(FoldloopError, KeyError):
    pass


class SameComponent(FoldloopError, ValueError):
    pass


class MultiComponentCore(FoldloopError, ValueError):
    """The core of a band must close up into a single loop."""


class EvenLoopCount(FoldloopError, ValueError):
    """No untwisted fold exists with an even number of loops."""


class InvalidFold(FoldloopError, ValueError):
    pass

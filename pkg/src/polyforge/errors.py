"""Exception hierarchy shared by every polyforge module."""


class PolyforgeError(Exception):
    pass


class NotGraded(PolyforgeError):
    """The intersection closure of the facets is not a graded poset."""


class UnknownVertex(PolyforgeError, KeyError):
    pass


class BadRank(PolyforgeError, ValueError):
    pass


class TooLarge(PolyforgeError):
    """Input exceeds the isomorphism size guard; the check should be skipped."""


class BadDimension(PolyforgeError, ValueError):
    pass


class NotAFace(PolyforgeError, ValueError):
    pass


class ImproperFace(PolyforgeError, ValueError):
    pass


class NotSimple(PolyforgeError, ValueError):
    pass


class BadParams(PolyforgeError, ValueError):
    pass


class RankOutOfRange(PolyforgeError, ValueError):
    pass


class UsageError(PolyforgeError):
    pass

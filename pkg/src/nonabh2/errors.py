"""Exception hierarchy shared by all modules."""


class GroupError(ValueError):
    """Base class for invalid group data."""


class NotAssociative(GroupError):
    def __init__(self, triple):
        self.triple = tuple(triple)
        super().__init__("table is not associative at (x, y, z) = %s" % (self.triple,))


class NoIdentity(GroupError):
    def __init__(self):
        super().__init__("table has no two-sided identity element")


class NoInverse(GroupError):
    def __init__(self, element):
        self.element = element
        super().__init__("element %d has no two-sided inverse" % element)


class NotNormal(GroupError):
    def __init__(self, witness=None):
        self.witness = witness
        msg = "subgroup is not normal"
        if witness is not None:
            msg += " (g, n) = %s conjugates outside" % (witness,)
        super().__init__(msg)


class NotHomomorphism(GroupError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__("map is not a homomorphism at %s" % (pair,))


class NotOuterHomomorphism(GroupError):
    def __init__(self, pair):
        self.pair = tuple(pair)
        super().__init__(
            "kappa(s) kappa(t) kappa(st)^-1 is not inner for (s, t) = %s" % (self.pair,))


class InvalidExtension(GroupError):
    pass


class InvalidModule(GroupError):
    pass


class InvalidGSpace(GroupError):
    pass


class NotTransitive(InvalidGSpace):
    pass


class NotCompatible(InvalidGSpace):
    pass


class NotLocallySplit(ValueError):
    def __init__(self, involution):
        self.involution = involution
        super().__init__("involution %d of Q has no lift to an involution of E" % involution)


class NoCharacteristicSubgroup(ValueError):
    pass


class SizeLimitExceeded(RuntimeError):
    """Raised instead of starting a search whose size exceeds the configured cap."""

    def __init__(self, what, size, cap):
        self.what, self.size, self.cap = what, size, cap
        super().__init__("%s: search size %s exceeds cap %s" % (what, size, cap))

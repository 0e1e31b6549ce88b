class SeqConvError(Exception):
    """Base class of every error raised by seqconv."""

    def body(self):
        return str(self)


class RadicandError(SeqConvError, ValueError):
    """
    The radicand of a quadratic extension is the square of a rational.

    :ivar d: the offending radicand.
    """

    def __init__(self, d):
        self.d = d
        super().__init__(self.body())

    def body(self):
        return "radicand %s is a rational square; Q(sqrt(%s)) degenerates to Q" % (
            self.d,
            self.d,
        )


class RadicandMismatchError(SeqConvError, ValueError):
    """Arithmetic between elements of Q(√d1) and Q(√d2) with d1 != d2."""

    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__(self.body())

    def body(self):
        return "cannot combine elements of Q(sqrt(%s)) and Q(sqrt(%s))" % (
            self.left,
            self.right,
        )


class ScalarMismatchError(SeqConvError, TypeError):
    """Two exact scalars of incompatible variants met in one operation."""


class ParameterError(SeqConvError, ValueError):
    """Recurrence parameters p or q are zero."""


class DegenerateDiscriminantError(ParameterError):
    """The discriminant p^2 - 4q vanishes, so the characteristic roots coincide."""

    def __init__(self, p, q):
        self.p = p
        self.q = q
        super().__init__(self.body())

    def body(self):
        return "p^2 - 4q = 0 for p = %s, q = %s" % (self.p, self.q)


class UnknownSequenceError(SeqConvError, KeyError):
    def __init__(self, name, known):
        self.name = name
        self.known = tuple(known)
        super().__init__(self.body())

    def body(self):
        return "unknown sequence %r, expected one of: %s" % (
            self.name,
            ", ".join(self.known),
        )

    def __str__(self):
        return self.body()


class UnknownIdentityError(SeqConvError, KeyError):
    def __init__(self, selector):
        self.selector = selector
        super().__init__(self.body())

    def body(self):
        return "no catalogued identity matches %r" % (self.selector,)

    def __str__(self):
        return self.body()


class WeightDomainError(SeqConvError, ValueError):
    """n lies outside a weight family's domain or k outside [0, n]."""


class WeightContextError(SeqConvError, ValueError):
    """A weight family needs context (r, or Lucas parameters) that is missing."""


class UnsupportedClosedFormError(SeqConvError):
    """The weight family has no closed-form row sum."""


class PreconditionError(SeqConvError, ValueError):
    pass


class RangeSyntaxError(SeqConvError, ValueError):
    def __init__(self, text, why):
        self.text = text
        self.why = why
        super().__init__(self.body())

    def body(self):
        return "bad range %r: %s (expected 'a..b' with a <= b)" % (self.text, self.why)


class InexactDivisionError(SeqConvError, ArithmeticError):
    """Polynomial division left a non-zero remainder."""

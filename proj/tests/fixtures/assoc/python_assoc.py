import types

CONST = "class NotAClass:"


class A:
    """Doc A."""


class B:
    # leading comment, then docstring
    """Doc B."""

    x = 1


class C:
    x = 1
    """Not a docstring (second statement)."""


class D:
    'single-quoted doc.'


class E:
    r'''raw doc.'''


class F(
        A,
        B):
    """Doc F with continued header."""


class G: pass


class H: """Doc H inline."""


def factory():
    class Local:
        """Local class doc."""
    return Local


class Outer:
    """Doc Outer."""

    class Mid:
        """Doc Mid."""

        class Leaf:
            """Doc Leaf."""

    tail = 2


class AfterDedent:
    """Doc AfterDedent."""


if True:
    class Conditional:
        """Doc conditional."""


@types.coroutine
class Decorated:
    """Doc decorated."""


class Members:
    """Doc members."""

    plain = 1
    a, b = 1, 2
    annotated: int = 3
    bare_ann: str
    _hidden = 4

    def method(self):
        s = "class InString: pass"
        return s

    async def amethod(self):
        pass

    def _private(self):
        pass

    class Nested:
        pass

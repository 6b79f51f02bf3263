"""Exception hierarchy shared across the package.

Everything raised on bad mathematical input derives from G2CertError so the
CLI can map it to a single exit code, distinct from usage errors.
"""

from __future__ import annotations


class G2CertError(Exception):
    """A mathematical precondition failed."""


class NotMonicError(G2CertError):
    pass


class NotPalindromicError(G2CertError):
    pass


class NotSeparableError(G2CertError):
    """A polynomial that must be squarefree has a repeated factor."""


class ExcludedPrimeError(G2CertError):
    """Reduction attempted at a prime of bad reduction.

    Carries the prime and the reason tag so reports can show both.
    """

    def __init__(self, p: int, reason: str):
        super().__init__(f"prime {p} is excluded ({reason})")
        self.p = p
        self.reason = reason


class WitnessMismatchError(G2CertError):
    """Independent mod-p witnesses disagree.

    This is never expected on valid input; it indicates a defect in the
    implementation or an excluded prime that slipped through.
    """

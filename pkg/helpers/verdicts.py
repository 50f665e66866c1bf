from dataclasses import dataclass


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verifier: ``ok`` plus the first failure found, if any."""
    ok: bool
    reason: str = ''

    def __bool__(self):
        return self.ok

    def __str__(self):
        return 'ok' if self.ok else 'failed: {}'.format(self.reason)

    @classmethod
    def success(cls):
        return cls(True)

    @classmethod
    def failure(cls, reason, *args):
        return cls(False, reason.format(*args) if args else reason)

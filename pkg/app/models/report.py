# app/models/report.py
from dataclasses import dataclass


@dataclass(frozen=True)
class Counterexample:
    """The first violated condition of a structural check."""
    condition: str
    subject: tuple
    witness: tuple | None = None
    message: str = ''

    def to_dict(self):
        return {
            'condition': self.condition,
            'subject': list(self.subject),
            'witness': list(self.witness) if self.witness is not None else None,
            'message': self.message,
        }

    def __str__(self):
        return self.message or f'{self.condition} fails at {self.subject}'
